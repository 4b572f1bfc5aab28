#pragma once

#include <algorithm>
#include <array>
#include <map>
#include <stdexcept>
#include <vector>

#include "waring/scalars.hpp"

namespace waring {

// Exponent triple i <= j <= k of a cubic monomial x_i x_j x_k.
using Mono = std::array<int, 3>;

inline Mono make_mono(int i, int j, int k) {
    Mono m{i, j, k};
    std::sort(m.begin(), m.end());
    return m;
}

// Number of distinct permutations of the triple: 1, 3 or 6.
inline int mono_multiplicity(const Mono& m) {
    if (m[0] == m[2]) return 1;
    if (m[0] == m[1] || m[1] == m[2]) return 3;
    return 6;
}

inline const std::array<std::array<int, 3>, 6>& perms3() {
    static const std::array<std::array<int, 3>, 6> p = {{
        {0, 1, 2}, {0, 2, 1}, {1, 0, 2}, {1, 2, 0}, {2, 0, 1}, {2, 1, 0}}};
    return p;
}

// Sparse cubic polynomial in N variables over the scalar field K.
// Keys are sorted exponent triples; zero coefficients are never stored.
template <class K>
class CubicForm {
public:
    explicit CubicForm(int nvars) : nvars_(nvars) {
        if (nvars < 0) throw std::invalid_argument("CubicForm: negative variable count");
    }

    int nvars() const { return nvars_; }
    const std::map<Mono, K>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t term_count() const { return terms_.size(); }

    void add_term(int i, int j, int k, const K& c) {
        check_index(i);
        check_index(j);
        check_index(k);
        if (waring::is_zero(c)) return;
        Mono m = make_mono(i, j, k);
        auto it = terms_.find(m);
        if (it == terms_.end()) {
            terms_.emplace(m, c);
        } else {
            it->second += c;
            if (waring::is_zero(it->second)) terms_.erase(it);
        }
    }

    K coeff(int i, int j, int k) const {
        auto it = terms_.find(make_mono(i, j, k));
        return it == terms_.end() ? K(0) : it->second;
    }

    K eval(const std::vector<K>& point) const {
        if (static_cast<int>(point.size()) != nvars_)
            throw std::invalid_argument("CubicForm::eval: point length mismatch");
        K acc(0);
        for (const auto& [m, c] : terms_) acc += c * point[m[0]] * point[m[1]] * point[m[2]];
        return acc;
    }

    CubicForm& operator+=(const CubicForm& o) {
        check_shape(o);
        for (const auto& [m, c] : o.terms_) add_term(m[0], m[1], m[2], c);
        return *this;
    }
    CubicForm& operator-=(const CubicForm& o) {
        check_shape(o);
        for (const auto& [m, c] : o.terms_) add_term(m[0], m[1], m[2], K(0) - c);
        return *this;
    }
    CubicForm& operator*=(const K& s) {
        if (waring::is_zero(s)) {
            terms_.clear();
            return *this;
        }
        for (auto it = terms_.begin(); it != terms_.end();) {
            it->second *= s;
            if (waring::is_zero(it->second)) it = terms_.erase(it);
            else ++it;
        }
        return *this;
    }

    friend CubicForm operator+(CubicForm f, const CubicForm& g) { return f += g; }
    friend CubicForm operator-(CubicForm f, const CubicForm& g) { return f -= g; }
    friend CubicForm operator*(const K& s, CubicForm f) { return f *= s; }

    friend bool operator==(const CubicForm& f, const CubicForm& g) {
        return f.nvars_ == g.nvars_ && f.terms_ == g.terms_;
    }
    friend bool operator!=(const CubicForm& f, const CubicForm& g) { return !(f == g); }

private:
    void check_index(int i) const {
        if (i < 0 || i >= nvars_) throw std::out_of_range("CubicForm: variable index");
    }
    void check_shape(const CubicForm& o) const {
        if (o.nvars_ != nvars_) throw std::invalid_argument("CubicForm: variable count mismatch");
    }

    int nvars_;
    std::map<Mono, K> terms_;
};

// Fully symmetric 3-tensor, stored once per sorted index class. The stored
// value is the tensor entry itself, so the matching cubic coefficient is
// entry times the permutation count of the class.
template <class K>
class SymTensor3 {
public:
    explicit SymTensor3(int nvars) : nvars_(nvars) {}

    int nvars() const { return nvars_; }
    const std::map<Mono, K>& entries() const { return entries_; }

    void add_entry(int i, int j, int k, const K& v) {
        if (waring::is_zero(v)) return;
        Mono m = make_mono(i, j, k);
        auto it = entries_.find(m);
        if (it == entries_.end()) {
            entries_.emplace(m, v);
        } else {
            it->second += v;
            if (waring::is_zero(it->second)) entries_.erase(it);
        }
    }

    K entry(int i, int j, int k) const {
        auto it = entries_.find(make_mono(i, j, k));
        return it == entries_.end() ? K(0) : it->second;
    }

    friend bool operator==(const SymTensor3& s, const SymTensor3& t) {
        return s.nvars_ == t.nvars_ && s.entries_ == t.entries_;
    }
    friend bool operator!=(const SymTensor3& s, const SymTensor3& t) { return !(s == t); }

private:
    int nvars_;
    std::map<Mono, K> entries_;
};

// General sparse order-3 tensor with ordered index triples.
template <class K>
class Tensor3 {
public:
    Tensor3(int d0, int d1, int d2) : dims_{d0, d1, d2} {}
    explicit Tensor3(const std::array<int, 3>& dims) : dims_(dims) {}

    const std::array<int, 3>& dims() const { return dims_; }
    const std::map<std::array<int, 3>, K>& entries() const { return entries_; }

    void add_entry(int i, int j, int k, const K& v) {
        if (i < 0 || i >= dims_[0] || j < 0 || j >= dims_[1] || k < 0 || k >= dims_[2])
            throw std::out_of_range("Tensor3: index");
        if (waring::is_zero(v)) return;
        std::array<int, 3> key{i, j, k};
        auto it = entries_.find(key);
        if (it == entries_.end()) {
            entries_.emplace(key, v);
        } else {
            it->second += v;
            if (waring::is_zero(it->second)) entries_.erase(it);
        }
    }

    K entry(int i, int j, int k) const {
        auto it = entries_.find({i, j, k});
        return it == entries_.end() ? K(0) : it->second;
    }

    K contract(const std::vector<K>& u, const std::vector<K>& v, const std::vector<K>& w) const {
        if (static_cast<int>(u.size()) != dims_[0] || static_cast<int>(v.size()) != dims_[1] ||
            static_cast<int>(w.size()) != dims_[2])
            throw std::invalid_argument("Tensor3::contract: vector length mismatch");
        K acc(0);
        for (const auto& [ix, val] : entries_) acc += val * u[ix[0]] * v[ix[1]] * w[ix[2]];
        return acc;
    }

    friend bool operator==(const Tensor3& s, const Tensor3& t) {
        return s.dims_ == t.dims_ && s.entries_ == t.entries_;
    }

private:
    std::array<int, 3> dims_;
    std::map<std::array<int, 3>, K> entries_;
};

// S(t)(i,j,k) = (1/6) sum over position permutations of t. On the sorted
// class this collapses to (sum of t over the distinct permutations) divided
// by the permutation count of the class.
template <class K>
SymTensor3<K> symmetrize(const Tensor3<K>& t) {
    const auto& d = t.dims();
    if (d[0] != d[1] || d[1] != d[2])
        throw std::invalid_argument("symmetrize: tensor dimensions differ");
    std::map<Mono, K> acc;
    for (const auto& [ix, v] : t.entries()) {
        Mono m = make_mono(ix[0], ix[1], ix[2]);
        auto it = acc.find(m);
        if (it == acc.end()) acc.emplace(m, v);
        else it->second += v;
    }
    SymTensor3<K> s(d[0]);
    for (const auto& [m, v] : acc) s.add_entry(m[0], m[1], m[2], v / K(mono_multiplicity(m)));
    return s;
}

template <class K>
Tensor3<K> as_tensor(const SymTensor3<K>& s) {
    Tensor3<K> t(s.nvars(), s.nvars(), s.nvars());
    for (const auto& [m, v] : s.entries()) {
        std::map<std::array<int, 3>, bool> seen;
        for (const auto& p : perms3()) {
            std::array<int, 3> ix{m[p[0]], m[p[1]], m[p[2]]};
            if (seen.emplace(ix, true).second) t.add_entry(ix[0], ix[1], ix[2], v);
        }
    }
    return t;
}

template <class K>
CubicForm<K> as_cubic(const SymTensor3<K>& s) {
    CubicForm<K> f(s.nvars());
    for (const auto& [m, v] : s.entries())
        f.add_term(m[0], m[1], m[2], v * K(mono_multiplicity(m)));
    return f;
}

template <class K>
SymTensor3<K> as_sym_tensor(const CubicForm<K>& f) {
    SymTensor3<K> s(f.nvars());
    for (const auto& [m, c] : f.terms())
        s.add_entry(m[0], m[1], m[2], c / K(mono_multiplicity(m)));
    return s;
}

// Linear map between coordinate spaces: coordinate w of the image equals
// rows[w] dotted with the domain variables. Substituting into a form over
// the codomain pulls it back to a form over the domain.
template <class K>
struct LinearMap {
    int domain_dim = 0;
    int codomain_dim = 0;
    std::vector<std::vector<K>> rows;  // codomain_dim rows of length domain_dim

    static LinearMap zero(int domain, int codomain) {
        LinearMap m;
        m.domain_dim = domain;
        m.codomain_dim = codomain;
        m.rows.assign(codomain, std::vector<K>(domain, K(0)));
        return m;
    }
};

template <class K>
CubicForm<K> substitute(const CubicForm<K>& f, const LinearMap<K>& m) {
    if (f.nvars() != m.codomain_dim)
        throw std::invalid_argument("substitute: form/map shape mismatch");
    // nonzero support of each image row, gathered once
    std::vector<std::vector<std::pair<int, K>>> rows(m.rows.size());
    for (std::size_t w = 0; w < m.rows.size(); ++w)
        for (int j = 0; j < m.domain_dim; ++j)
            if (!waring::is_zero(m.rows[w][j])) rows[w].emplace_back(j, m.rows[w][j]);
    CubicForm<K> out(m.domain_dim);
    for (const auto& [mono, c] : f.terms()) {
        // c·x_i x_j x_k pulls back to c·(image of i)(image of j)(image of k)
        for (const auto& [ja, va] : rows[mono[0]])
            for (const auto& [jb, vb] : rows[mono[1]])
                for (const auto& [jd, vd] : rows[mono[2]])
                    out.add_term(ja, jb, jd, c * va * vb * vd);
    }
    return out;
}

template <class K>
CubicForm<K> convert_cubic(const CubicForm<Rational>& f) {
    CubicForm<K> out(f.nvars());
    for (const auto& [m, c] : f.terms()) out.add_term(m[0], m[1], m[2], from_rational<K>(c));
    return out;
}

template <class K>
LinearMap<K> convert_map(const LinearMap<Rational>& m) {
    LinearMap<K> out;
    out.domain_dim = m.domain_dim;
    out.codomain_dim = m.codomain_dim;
    out.rows.reserve(m.rows.size());
    for (const auto& row : m.rows) {
        std::vector<K> r;
        r.reserve(row.size());
        for (const auto& c : row) r.push_back(from_rational<K>(c));
        out.rows.push_back(std::move(r));
    }
    return out;
}

template <class K>
Tensor3<K> convert_tensor(const Tensor3<Rational>& t) {
    Tensor3<K> out(t.dims());
    for (const auto& [ix, v] : t.entries())
        out.add_entry(ix[0], ix[1], ix[2], from_rational<K>(v));
    return out;
}

// Weighted cube of a linear form, the building block of Waring sums.
template <class K>
CubicForm<K> cube_of_linear(const std::vector<K>& l, const K& weight = K(1)) {
    int n = static_cast<int>(l.size());
    std::vector<int> nz;
    for (int i = 0; i < n; ++i)
        if (!waring::is_zero(l[i])) nz.push_back(i);
    CubicForm<K> f(n);
    for (std::size_t a = 0; a < nz.size(); ++a)
        for (std::size_t b = a; b < nz.size(); ++b)
            for (std::size_t c = b; c < nz.size(); ++c) {
                int i = nz[a], j = nz[b], k = nz[c];
                Mono m{i, j, k};
                f.add_term(i, j, k, weight * K(mono_multiplicity(m)) * l[i] * l[j] * l[k]);
            }
    return f;
}

}  // namespace waring
