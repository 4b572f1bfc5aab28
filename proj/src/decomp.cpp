#include "waring/decomp.hpp"

#include <stdexcept>

namespace waring {

namespace {

// sign vectors with first entry +1, optionally restricted to an even number
// of +1 entries; -v gives the same form as v, so this enumerates each form
// exactly once
std::vector<std::vector<int>> sign_vectors(int n, bool even_plus_count) {
    std::vector<std::vector<int>> out;
    for (long bits = 0; bits < (1L << (n - 1)); ++bits) {
        std::vector<int> v(n, 1);
        for (int i = 0; i < n - 1; ++i)
            if (bits >> i & 1) v[i + 1] = -1;
        if (even_plus_count) {
            int plus = 0;
            for (int x : v) plus += x > 0;
            if (plus % 2 != 0) continue;
        }
        out.push_back(std::move(v));
    }
    return out;
}

// pairing of vv^T - I with a zero-diagonal symmetric matrix: the (i,j) and
// (j,i) entries both contribute, so the pair coordinate carries 2 v_i v_j
WaringTerm<Rational> pairing_form(int n, const std::vector<int>& v) {
    WaringTerm<Rational> t;
    t.coeff = Rational(1);
    t.form.assign(n * (n - 1) / 2, Rational(0));
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) t.form[pair_index(n, i, j)] = Rational(2 * v[i] * v[j]);
    return t;
}

}  // namespace

WaringDecomposition<Rational> build_pn_decomposition(int n) {
    if (n < 3) throw std::invalid_argument("build_pn_decomposition: n must be >= 3");
    Rational scale(1);
    for (int i = 0; i < n + 2; ++i) scale *= Rational(2);
    auto d = make_family_decomposition<Rational>({FamilyKind::ZeroDiagonal, n}, scale);
    for (const auto& v : sign_vectors(n, false)) d.terms.push_back(pairing_form(n, v));
    return d;
}

WaringDecomposition<Rational> build_pn_plus_decomposition(int n) {
    if (n < 4) throw std::invalid_argument("build_pn_plus_decomposition: n must be >= 4");
    auto d = make_family_decomposition<Rational>({FamilyKind::ZeroDiagonal, n}, Rational(1));
    for (const auto& v : sign_vectors(n, true)) d.terms.push_back(pairing_form(n, v));
    // fix the scale by matching the coefficient of the first triangle
    // monomial a_01 a_12 a_02 in the sum of cubes
    CubicForm<Rational> sum(d.target.nvars());
    for (const auto& term : d.terms) sum += cube_of_linear(term.form, term.coeff);
    Rational got = sum.coeff(pair_index(n, 0, 1), pair_index(n, 1, 2), pair_index(n, 0, 2));
    Rational want = d.target.coeff(pair_index(n, 0, 1), pair_index(n, 1, 2), pair_index(n, 0, 2));
    d.scale = got / want;
    return d;
}

WaringDecomposition<Rational> build_modest_upper_bound(int n) {
    if (n < 1) throw std::invalid_argument("build_modest_upper_bound: n must be >= 1");
    auto d = make_family_decomposition<Rational>({FamilyKind::General, n}, Rational(1));
    int nn = n * n;
    auto unit = [&](int i, int j) {
        std::vector<Rational> e(nn, Rational(0));
        e[mat_index(n, i, j)] = Rational(1);
        return e;
    };
    // diagonal cubes a_ii^3
    for (int i = 0; i < n; ++i) d.terms.push_back({Rational(1), unit(i, i)});
    // 3 a_ij a_ji (a_ii + a_jj) per pair, one 4-cube expansion each
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            std::vector<Rational> diag = unit(i, i);
            diag[mat_index(n, j, j)] = Rational(1);
            for (auto& t : product_to_cubes(unit(i, j), unit(j, i), diag, Rational(3)))
                d.terms.push_back(std::move(t));
        }
    // two triangle monomials 3 a_ij a_jk a_ki and 3 a_ik a_kj a_ji per triple
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            for (int k = j + 1; k < n; ++k) {
                for (auto& t : monomial_to_cubes(nn, mat_index(n, i, j), mat_index(n, j, k),
                                                 mat_index(n, k, i), Rational(3)))
                    d.terms.push_back(std::move(t));
                for (auto& t : monomial_to_cubes(nn, mat_index(n, i, k), mat_index(n, k, j),
                                                 mat_index(n, j, i), Rational(3)))
                    d.terms.push_back(std::move(t));
            }
    return d;
}

}  // namespace waring
