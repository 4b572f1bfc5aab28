#pragma once

#include <cstdint>
#include <vector>

#include <gmpxx.h>

#include "waring/forms.hpp"
#include "waring/rational.hpp"

namespace waring {

long binom(int n, int k);

// Koszul flattening of a cubic in N variables: the map
//   Lambda^p V (x) V*  ->  Lambda^{p+1} V (x) V
// sending w_S (x) e*_j to sum_{i,k} T(i,j,k) (e_i ^ w_S) (x) e_k,
// where T is the symmetric tensor of the cubic.
struct FlatteningSpec {
    int nvars = 0;
    int p = 0;

    long source_dim() const { return binom(nvars, p) * nvars; }
    long target_dim() const { return binom(nvars, p + 1) * nvars; }
};

struct SparseIntMatrix {
    long rows = 0;
    long cols = 0;
    struct Triplet {
        long r;
        long c;
        mpz_class v;
    };
    std::vector<Triplet> entries;
};

struct FlatteningReport {
    FlatteningSpec spec;
    long rows = 0;
    long cols = 0;
    long rank = 0;       // max over the primes used; a rigorous lower bound
    long unit_rank = 0;  // rank on a single cube, C(N-1, p)
    long bound = 0;      // ceil(rank / unit_rank)
    bool exact = false;  // all primes agreed
    std::vector<std::uint64_t> primes_used;
};

// p = floor((N-1)/2), which maximizes C(N-1, p) and matches every
// instance the bounds below are calibrated against
int choose_p(int nvars);

SparseIntMatrix build_flattening(const CubicForm<Rational>& f, int p);

// Rank modulo at least two distinct random primes near 2^62. Rank can only
// drop under specialization, so the maximum is a lower bound for the rank
// over Q; agreement between primes marks the report exact.
FlatteningReport certified_rank(const SparseIntMatrix& m, int nprimes = 2,
                                std::uint64_t seed = 0);

FlatteningReport border_rank_lower_bound(const CubicForm<Rational>& f, int p,
                                         int nprimes = 2, std::uint64_t seed = 0);
FlatteningReport border_rank_lower_bound(const CubicForm<Rational>& f);

namespace detail {

bool is_prime_u64(std::uint64_t n);
long rank_mod_prime(const SparseIntMatrix& m, std::uint64_t p);

}  // namespace detail

}  // namespace waring
