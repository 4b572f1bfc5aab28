#pragma once

#include <cstdint>
#include <stdexcept>
#include <vector>

#include "waring/decomp.hpp"
#include "waring/flatten.hpp"
#include "waring/scalars.hpp"

namespace waring {

// Floating-point side of the workbench: weighted sums of cubes over complex
// doubles, Levenberg-Marquardt refinement and search under structural masks,
// and Jacobian-rank probing of the solution set at a refined point.

struct NumericTerm {
    ComplexF coeff{1.0, 0.0};
    std::vector<ComplexF> form;
};

struct NumericDecomposition {
    FamilyId target;
    std::vector<NumericTerm> terms;
    double residual_norm = 0.0;  // recomputed by the loaders and by refine
};

// Per-entry constraints used when a decomposition is squared against a
// structural pattern: free entries are the optimization variables, the rest
// stay at zero or at a pinned value. An empty term list means all free.
enum class EntryKind { Free, Zero, Fixed };

struct MaskEntry {
    EntryKind kind = EntryKind::Free;
    ComplexF value{0.0, 0.0};  // only read when kind == Fixed
};

struct StructureMask {
    std::vector<std::vector<MaskEntry>> terms;
    bool real_only = false;  // free entries restricted to real values
};

struct ResidualReport {
    // coefficients of (sum of weighted cubes - target) in the monomial basis
    // x_i x_j x_k, i <= j <= k, ordered lexicographically
    std::vector<ComplexF> vec;
    double norm = 0.0;
    double relative = 0.0;  // norm divided by the target coefficient norm
};

ResidualReport residual(const NumericDecomposition& d);

struct RefineOptions {
    double target_relative = 1e-12;
    double max_start_relative = 0.2;  // basin heuristic, checked up front
    int max_iterations = 200;
    int patience = 25;  // rejected or non-improving steps tolerated in a row
    // accepted-step residual norms, appended in order when non-null
    std::vector<double>* accepted_trace = nullptr;
};

// Levenberg-Marquardt on the realified free parameters. Throws when the
// start is outside the documented basin heuristic, when damping rejects a
// whole patience window, or when the iteration cap is hit short of target.
NumericDecomposition refine(const NumericDecomposition& d, const StructureMask* mask = nullptr,
                            const RefineOptions& opts = {});

struct SearchOptions {
    int seeds = 32;
    double tol = 1e-10;  // success threshold on the relative residual
    std::uint64_t seed0 = 1;
    int max_iterations = 200;
    int patience = 25;
    int threads = 0;  // worker threads; 0 means up to 8 hardware threads
};

struct SearchResult {
    NumericDecomposition best;
    double best_relative = 0.0;
    bool success = false;
    int seeds_run = 0;
};

// Random-restart LM hunting a k-cube decomposition of a family target under
// an optional mask. Failure is data, not an error.
SearchResult search(const FamilyId& target, int k, const StructureMask* mask = nullptr,
                    const SearchOptions& opts = {});

struct LocalDimReport {
    long jacobian_rank = 0;
    long parameter_count = 0;
    long estimated_local_dimension = 0;  // parameter_count - jacobian_rank
    bool conclusive = true;
    double gap = 0.0;  // singular-value ratio across the rank cut
};

// Rank of the Jacobian of the parameterization (all form entries free, over
// the complex numbers) at a refined point, via singular values with gap
// threshold 1e-6 * sigma_max. A cut sharper than two orders of magnitude is
// required for the report to count as conclusive.
LocalDimReport local_dimension(const NumericDecomposition& d);

// Exact counterpart at a rational point: the Jacobian columns are cleared to
// integers and the rank is certified modulo at least two random word-size
// primes. Agreement between the primes marks the report conclusive.
LocalDimReport exact_jacobian_rank(const WaringDecomposition<Rational>& d, int nprimes = 2,
                                   std::uint64_t seed = 0);

enum class EigenPattern { RankDeficient, Traceless };

// Eigenvalue relations satisfied by the terms of the 10-cube decomposition
// on symmetric 3x3 matrices, checked on every term:
//   RankDeficient: l3 = 0 and (l1 + l2)(l1^2 + l1 l2 + l2^2) - 1 = 0
//   Traceless:     l1 + l2 + l3 = 0 and (l1+l2)(l1+l3)(l2+l3) + 2 = 0
// where l3 is the eigenvalue of smallest modulus in the first pattern.
bool eigenvalue_audit(const NumericDecomposition& d, EigenPattern pattern, double tol = 1e-8);

// Numeric rank of each term reshaped as a matrix in the same layout the
// loaders below use (entries placed literally, traceless representatives
// completing the last diagonal). Threshold 1e-6 * sigma_max per term.
RankAudit numeric_rank_audit(const NumericDecomposition& d);

// Maximum relative deviation between the analytic Jacobian and central
// finite differences at the decomposition's current point.
double jacobian_fd_error(const NumericDecomposition& d, const StructureMask* mask = nullptr,
                         double h = 1e-4);

// Cast an exact verified decomposition to floats; the scale is divided into
// the coefficients so the cast targets the family cubic itself.
template <class K>
NumericDecomposition to_numeric(const WaringDecomposition<K>& d) {
    if (!d.family) throw std::invalid_argument("to_numeric: unnamed target");
    NumericDecomposition out;
    out.target = *d.family;
    ComplexF s = to_complex(d.scale);
    for (const auto& t : d.terms) {
        NumericTerm nt;
        nt.coeff = to_complex(t.coeff) / s;
        nt.form.reserve(t.form.size());
        for (const auto& x : t.form) nt.form.push_back(to_complex(x));
        out.terms.push_back(std::move(nt));
    }
    out.residual_norm = residual(out).norm;
    return out;
}

// Published starting points, transcribed to the precision given: 18 cubes
// against the trace cubic on 3x3 matrices (about 3 significant digits),
// 10 cubes against its symmetric restriction (4 digits), 8 cubes against
// the traceless symmetric restriction (7 digits). Coefficients are all 1;
// the form entries are read off the printed matrices at the family's
// coordinate positions. Each mask records the entries printed exactly as
// 0, 1 or -1, which is how the underlying square systems were built.
NumericDecomposition load_sm3_18();
StructureMask load_sm3_18_mask();
NumericDecomposition load_sms3_10();
StructureMask load_sms3_10_mask();
NumericDecomposition load_sms03_8();

// The structural pattern behind fresh 10-cube searches on the symmetric
// 3x3 family: three bordered rank-deficient shapes, three summands each,
// plus one zero-diagonal summand. No pinned values.
StructureMask ten_cube_pattern_mask();

}  // namespace waring
