#pragma once

// Minimal sparse multivariate polynomial ring over Rational, used by the
// tests as an independent oracle. Deliberately implemented differently from
// the library (general degree, multiset keys, matrix-product expansion) so
// agreement is meaningful.

#include <map>
#include <vector>

#include "waring/forms.hpp"
#include "waring/rational.hpp"

namespace oracle {

using waring::Rational;
using Key = std::vector<int>;  // sorted variable indices, one per degree

struct Poly {
    std::map<Key, Rational> t;

    static Poly zero() { return {}; }
    static Poly constant(const Rational& r) {
        Poly p;
        if (!r.is_zero()) p.t[{}] = r;
        return p;
    }
    static Poly var(int i) {
        Poly p;
        p.t[{i}] = Rational(1);
        return p;
    }

    void add_term(Key k, const Rational& c) {
        std::sort(k.begin(), k.end());
        auto it = t.find(k);
        if (it == t.end()) {
            if (!c.is_zero()) t.emplace(std::move(k), c);
        } else {
            it->second += c;
            if (it->second.is_zero()) t.erase(it);
        }
    }

    Poly operator+(const Poly& o) const {
        Poly r = *this;
        for (const auto& [k, c] : o.t) r.add_term(k, c);
        return r;
    }
    Poly operator-(const Poly& o) const {
        Poly r = *this;
        for (const auto& [k, c] : o.t) r.add_term(k, -c);
        return r;
    }
    Poly operator*(const Poly& o) const {
        Poly r;
        for (const auto& [k1, c1] : t)
            for (const auto& [k2, c2] : o.t) {
                Key k = k1;
                k.insert(k.end(), k2.begin(), k2.end());
                r.add_term(std::move(k), c1 * c2);
            }
        return r;
    }
    Poly operator*(const Rational& s) const {
        Poly r;
        for (const auto& [k, c] : t) r.add_term(k, c * s);
        return r;
    }
    bool operator==(const Poly& o) const { return t == o.t; }

    Rational coeff(Key k) const {
        std::sort(k.begin(), k.end());
        auto it = t.find(k);
        return it == t.end() ? Rational(0) : it->second;
    }

    Rational eval(const std::vector<Rational>& pt) const {
        Rational acc(0);
        for (const auto& [k, c] : t) {
            Rational m = c;
            for (int i : k) m *= pt[i];
            acc += m;
        }
        return acc;
    }
};

using Mat = std::vector<std::vector<Poly>>;

inline Mat matmul(const Mat& A, const Mat& B) {
    std::size_t n = A.size(), m = B[0].size(), inner = B.size();
    Mat C(n, std::vector<Poly>(m));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < m; ++j)
            for (std::size_t k = 0; k < inner; ++k) C[i][j] = C[i][j] + A[i][k] * B[k][j];
    return C;
}

inline Poly trace(const Mat& A) {
    Poly r;
    for (std::size_t i = 0; i < A.size(); ++i) r = r + A[i][i];
    return r;
}

// trace(A^3) for the generic n x n matrix with variable a_{ij} at index n*i+j
inline Poly trace_cube_generic(int n) {
    Mat A(n, std::vector<Poly>(n));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) A[i][j] = Poly::var(n * i + j);
    return trace(matmul(matmul(A, A), A));
}

inline Poly trace_cube(const Mat& A) { return trace(matmul(matmul(A, A), A)); }

// degree-3 homogeneous Poly -> library CubicForm
inline waring::CubicForm<Rational> to_cubic(const Poly& p, int nvars) {
    waring::CubicForm<Rational> f(nvars);
    for (const auto& [k, c] : p.t) {
        if (k.size() != 3) throw std::invalid_argument("oracle: not a cubic");
        f.add_term(k[0], k[1], k[2], c);
    }
    return f;
}

}  // namespace oracle
