#pragma once

#include "waring/decomp.hpp"
#include "waring/quadext.hpp"

namespace waring {

// Bundled exact decompositions, stored verbatim as data tables.

// 6 cubes summing to the 2x2 trace cubic (scale 1).
WaringDecomposition<Rational> load_sm2_6();

// 4 cubes with coefficients (1,1,-2,-2) over Q(i) summing to 6 times the
// symmetric 2x2 trace cubic.
WaringDecomposition<QuadExt> load_sms2_4();

// 30 cubes summing to 32 times the zero-diagonal 6x6 trace cubic.
WaringDecomposition<Rational> load_smz6_30();

// 48 cubes over Q(sqrt 5) summing to 160 times the zero-diagonal 7x7 trace
// cubic. The transcription supplied 47 rows; the 48th is the exact cube
// root of the remaining defect polynomial, which pins it uniquely.
WaringDecomposition<QuadExt> load_smz7_48();

}  // namespace waring
