#include "waring/flatten.hpp"

#include <bit>
#include <set>
#include <stdexcept>

namespace waring {

long binom(int n, int k) {
    if (k < 0 || k > n) return 0;
    long v = 1;
    for (int i = 0; i < k; ++i) v = v * (n - i) / (i + 1);
    return v;
}

int choose_p(int nvars) {
    if (nvars < 2) throw std::invalid_argument("choose_p: need at least 2 variables");
    return (nvars - 1) / 2;
}

namespace {

std::vector<std::uint32_t> subsets_of_size(int n, int k) {
    std::vector<std::uint32_t> out;
    out.reserve(static_cast<std::size_t>(binom(n, k)));
    for (std::uint32_t m = 0; m < (1u << n); ++m)
        if (std::popcount(m) == k) out.push_back(m);
    return out;
}

}  // namespace

SparseIntMatrix build_flattening(const CubicForm<Rational>& f, int p) {
    const int n = f.nvars();
    if (p < 1 || p > n - 1) throw std::invalid_argument("build_flattening: p out of range");

    // clear denominators of the symmetric tensor entries; scaling the whole
    // matrix does not change its rank
    auto st = as_sym_tensor(f);
    mpz_class lcm = 1;
    for (const auto& [m, v] : st.entries()) mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), v.den().get_mpz_t());

    const auto src = subsets_of_size(n, p);
    const auto dst = subsets_of_size(n, p + 1);
    std::vector<long> src_idx(std::size_t{1} << n, -1), dst_idx(std::size_t{1} << n, -1);
    for (std::size_t s = 0; s < src.size(); ++s) src_idx[src[s]] = static_cast<long>(s);
    for (std::size_t s = 0; s < dst.size(); ++s) dst_idx[dst[s]] = static_cast<long>(s);

    SparseIntMatrix out;
    out.rows = static_cast<long>(dst.size()) * n;
    out.cols = static_cast<long>(src.size()) * n;

    for (const auto& [m, v] : st.entries()) {
        mpz_class entry = mpz_class(v.num() * lcm) / v.den();
        std::set<Mono> perms;
        for (const auto& perm : perms3())
            perms.insert(Mono{m[perm[0]], m[perm[1]], m[perm[2]]});
        for (const auto& [i, j, k] : perms) {
            const std::uint32_t bit = 1u << i;
            for (std::uint32_t mask : src) {
                if (mask & bit) continue;
                const bool neg = std::popcount(mask & (bit - 1)) % 2 != 0;
                out.entries.push_back({dst_idx[mask | bit] * n + k,
                                       src_idx[mask] * n + j,
                                       neg ? mpz_class(-entry) : entry});
            }
        }
    }
    return out;
}

FlatteningReport border_rank_lower_bound(const CubicForm<Rational>& f, int p,
                                         int nprimes, std::uint64_t seed) {
    auto report = certified_rank(build_flattening(f, p), nprimes, seed);
    report.spec = {f.nvars(), p};
    report.unit_rank = binom(f.nvars() - 1, p);
    report.bound = (report.rank + report.unit_rank - 1) / report.unit_rank;
    return report;
}

FlatteningReport border_rank_lower_bound(const CubicForm<Rational>& f) {
    return border_rank_lower_bound(f, choose_p(f.nvars()));
}

}  // namespace waring
