#include <algorithm>
#include <future>
#include <random>
#include <stdexcept>

#include "waring/flatten.hpp"

namespace waring {

namespace {

// Montgomery arithmetic for a fixed odd 64-bit modulus; all values are kept
// in Montgomery form during elimination so no divisions occur in the inner loop
struct Montgomery {
    std::uint64_t mod;
    std::uint64_t ninv;  // -mod^{-1} mod 2^64
    std::uint64_t r2;    // 2^128 mod mod

    explicit Montgomery(std::uint64_t m) : mod(m) {
        std::uint64_t inv = m;
        for (int i = 0; i < 5; ++i) inv *= 2 - m * inv;
        ninv = ~inv + 1;
        const std::uint64_t r = ~std::uint64_t{0} % m + 1;  // 2^64 mod m, nonzero for odd m > 1
        r2 = static_cast<std::uint64_t>(static_cast<unsigned __int128>(r) * r % m);
    }

    std::uint64_t redc(unsigned __int128 t) const {
        std::uint64_t m = static_cast<std::uint64_t>(t) * ninv;
        unsigned __int128 s = t + static_cast<unsigned __int128>(m) * mod;
        std::uint64_t r = static_cast<std::uint64_t>(s >> 64);
        return r >= mod ? r - mod : r;
    }
    std::uint64_t mul(std::uint64_t a, std::uint64_t b) const {
        return redc(static_cast<unsigned __int128>(a) * b);
    }
    std::uint64_t to_mont(std::uint64_t a) const { return mul(a, r2); }
    std::uint64_t from_mont(std::uint64_t a) const { return redc(a); }
    std::uint64_t add(std::uint64_t a, std::uint64_t b) const {
        std::uint64_t s = a + b;
        return s >= mod ? s - mod : s;
    }
    std::uint64_t sub(std::uint64_t a, std::uint64_t b) const {
        return a >= b ? a - b : a + mod - b;
    }
    std::uint64_t pow(std::uint64_t a, std::uint64_t e) const {
        std::uint64_t acc = to_mont(1);
        while (e) {
            if (e & 1) acc = mul(acc, a);
            a = mul(a, a);
            e >>= 1;
        }
        return acc;
    }
    std::uint64_t inv(std::uint64_t a) const { return pow(a, mod - 2); }
};

std::uint64_t random_prime_near_2_62(std::mt19937_64& rng) {
    for (;;) {
        std::uint64_t c = (std::uint64_t{1} << 61) | (rng() & ((std::uint64_t{1} << 61) - 1)) | 1;
        if (detail::is_prime_u64(c)) return c;
    }
}

}  // namespace

namespace detail {

bool is_prime_u64(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t q : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
        if (n % q == 0) return n == q;
    }
    std::uint64_t d = n - 1;
    int s = 0;
    while (d % 2 == 0) d /= 2, ++s;
    Montgomery mont(n);
    const std::uint64_t one = mont.to_mont(1), neg = mont.to_mont(n - 1);
    // deterministic witness set for 64-bit inputs
    for (std::uint64_t a : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
        std::uint64_t x = mont.pow(mont.to_mont(a % n), d);
        if (x == one || x == neg) continue;
        bool composite = true;
        for (int i = 1; i < s; ++i) {
            x = mont.mul(x, x);
            if (x == neg) {
                composite = false;
                break;
            }
        }
        if (composite) return false;
    }
    return true;
}

long rank_mod_prime(const SparseIntMatrix& m, std::uint64_t p) {
    Montgomery mont(p);
    const std::size_t rows = static_cast<std::size_t>(m.rows);
    const std::size_t cols = static_cast<std::size_t>(m.cols);
    std::vector<std::vector<std::uint64_t>> a(rows, std::vector<std::uint64_t>(cols, 0));
    for (const auto& t : m.entries) {
        std::uint64_t rem = mpz_fdiv_ui(t.v.get_mpz_t(), p);
        auto& cell = a[static_cast<std::size_t>(t.r)][static_cast<std::size_t>(t.c)];
        cell = mont.add(cell, mont.to_mont(rem));
    }

    long rank = 0;
    for (std::size_t col = 0; col < cols && rank < m.rows; ++col) {
        std::size_t piv = static_cast<std::size_t>(rank);
        while (piv < rows && a[piv][col] == 0) ++piv;
        if (piv == rows) continue;
        std::swap(a[static_cast<std::size_t>(rank)], a[piv]);
        const auto& prow = a[static_cast<std::size_t>(rank)];
        const std::uint64_t pivinv = mont.inv(prow[col]);
        for (std::size_t r = static_cast<std::size_t>(rank) + 1; r < rows; ++r) {
            if (a[r][col] == 0) continue;
            const std::uint64_t f = mont.mul(a[r][col], pivinv);
            auto& row = a[r];
            for (std::size_t j = col; j < cols; ++j)
                row[j] = mont.sub(row[j], mont.mul(f, prow[j]));
        }
        ++rank;
    }
    return rank;
}

}  // namespace detail

FlatteningReport certified_rank(const SparseIntMatrix& m, int nprimes, std::uint64_t seed) {
    if (m.rows < 0 || m.cols < 0) throw std::invalid_argument("certified_rank: negative dims");
    if (nprimes < 2) nprimes = 2;
    std::mt19937_64 rng(seed ? seed : 0x7b5a1cd3u);
    std::vector<std::uint64_t> primes;
    while (static_cast<int>(primes.size()) < nprimes) {
        std::uint64_t p = random_prime_near_2_62(rng);
        if (std::find(primes.begin(), primes.end(), p) == primes.end()) primes.push_back(p);
    }

    std::vector<std::future<long>> futs;
    futs.reserve(primes.size());
    for (std::uint64_t p : primes)
        futs.push_back(std::async(std::launch::async, detail::rank_mod_prime, std::cref(m), p));

    FlatteningReport report;
    report.rows = m.rows;
    report.cols = m.cols;
    report.primes_used = primes;
    report.exact = true;
    long first = -1;
    for (auto& fu : futs) {
        long r = fu.get();
        if (first < 0) first = r;
        if (r != first) report.exact = false;
        report.rank = std::max(report.rank, r);
    }
    return report;
}

}  // namespace waring
