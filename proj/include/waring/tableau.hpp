#pragma once

#include <vector>

#include "waring/decomp.hpp"
#include "waring/forms.hpp"
#include "waring/rational.hpp"

namespace waring {

// A column-filled tableau for a degree-m invariant of cubics in `nrows`
// variables: each of the m labels occupies exactly three boxes, and every
// column holds nrows boxes. A column contributes the sign of its index
// tuple (zero on repeats), a label contributes one tensor entry.
class Tableau {
public:
    Tableau(std::vector<std::vector<int>> columns, int nforms);

    int nrows() const { return nrows_; }
    int ncols() const { return static_cast<int>(columns_.size()); }
    int nforms() const { return nforms_; }
    // columns()[c][r] = label in 1..nforms at column c, row r
    const std::vector<std::vector<int>>& columns() const { return columns_; }

private:
    std::vector<std::vector<int>> columns_;
    int nrows_ = 0;
    int nforms_ = 0;
};

// the 6x5 degree-10 filling whose invariant detects that the symmetric
// 3x3 trace cubic is not a sum of nine cubes
Tableau t10();

// true iff every pair of labels shares at least one column; this forces
// any assignment of fewer forms than labels to repeat a form inside some
// column, which kills that column's determinant
bool pair_coverage(const Tableau& t);

struct InvariantValue {
    Rational value;
    bool nonzero = false;
    bool conclusive = true;  // false when the node budget ran out
    long long nodes = 0;
};

// evaluate on f = sum c_i l_i^3: sum over assignments of a form to each
// label of (product of coefficients) x (product over columns of the
// determinant of the assigned forms in row order); branches are cut as
// soon as a column sees the same form twice. At most 64 forms.
InvariantValue eval_on_cubes(const Tableau& t, const std::vector<WaringTerm<Rational>>& forms,
                             long long max_nodes = 1'000'000'000);

// evaluate by direct tensor contraction: sum over index fillings of the
// boxes of (product of column signs) x (product over labels of the tensor
// entry at that label's three boxes), depth-first over labels with
// incremental column pruning, visiting only nonzero entries
InvariantValue eval_contraction(const Tableau& t, const SymTensor3<Rational>& tensor,
                                long long max_nodes = 1'000'000'000);

// check det(g)^(ncols) covariance: eval(f o g) == det(g)^ncols * eval(f);
// throws if g is singular or a budget runs out
bool weight_covariance_check(const Tableau& t, const SymTensor3<Rational>& tensor,
                             const LinearMap<Rational>& g,
                             long long max_nodes = 1'000'000'000);

}  // namespace waring
