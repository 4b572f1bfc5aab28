#pragma once

#include <complex>

#include "waring/quadext.hpp"
#include "waring/rational.hpp"

namespace waring {

// Floating mirror of the exact fields. All numeric work runs in complex
// double precision.
using ComplexF = std::complex<double>;

template <class K>
struct scalar_traits {
    static constexpr bool exact = true;
};
template <>
struct scalar_traits<ComplexF> {
    static constexpr bool exact = false;
};

inline bool is_zero(const Rational& x) { return x.is_zero(); }
inline bool is_zero(const QuadExt& x) { return x.is_zero(); }
inline bool is_zero(const ComplexF& x) { return x == ComplexF(0.0); }

inline ComplexF to_complex(const Rational& x) { return {x.to_double(), 0.0}; }
inline ComplexF to_complex(const QuadExt& x) { return x.to_complex(); }
inline ComplexF to_complex(const ComplexF& x) { return x; }

// canonical embedding of the rationals into each scalar field
template <class K>
K from_rational(const Rational& x);
template <>
inline Rational from_rational<Rational>(const Rational& x) { return x; }
template <>
inline QuadExt from_rational<QuadExt>(const Rational& x) { return QuadExt(x); }
template <>
inline ComplexF from_rational<ComplexF>(const Rational& x) { return to_complex(x); }

}  // namespace waring
