#pragma once

#include <map>
#include <optional>
#include <stdexcept>
#include <type_traits>
#include <vector>

#include "waring/families.hpp"
#include "waring/forms.hpp"

namespace waring {

template <class K>
struct WaringTerm {
    K coeff;
    std::vector<K> form;  // dense coefficients of the linear form
};

// A weighted sum of cubes targeting scale * target. The family id is kept
// alongside the materialized form when the target is one of the named
// families, so reductions and audits know the coordinate layout.
template <class K>
struct WaringDecomposition {
    std::optional<FamilyId> family;
    CubicForm<K> target;
    K scale;
    std::vector<WaringTerm<K>> terms;

    WaringDecomposition() : target(0), scale(K(1)) {}
    WaringDecomposition(CubicForm<K> t, K s) : target(std::move(t)), scale(std::move(s)) {}
};

template <class K>
WaringDecomposition<K> make_family_decomposition(const FamilyId& id, const K& scale) {
    WaringDecomposition<K> d(convert_cubic<K>(family_cubic(id)), scale);
    d.family = id;
    return d;
}

template <class K>
struct VerifyResult {
    bool ok;
    CubicForm<K> residual;  // sum of weighted cubes minus scale * target
};

template <class K>
VerifyResult<K> verify_exact(const WaringDecomposition<K>& d) {
    CubicForm<K> acc(d.target.nvars());
    for (const auto& term : d.terms) {
        if (static_cast<int>(term.form.size()) != d.target.nvars())
            throw std::invalid_argument("verify_exact: form/target dimension mismatch");
        acc += cube_of_linear(term.form, term.coeff);
    }
    CubicForm<K> expect = d.target;
    expect *= d.scale;
    acc -= expect;
    return {acc.is_zero(), std::move(acc)};
}

// ---- rank-one tensor decompositions ----

template <class K>
struct TensorTerm {
    std::vector<K> u, v, w;
};

template <class K>
struct TensorDecomposition {
    Tensor3<K> target;
    std::vector<TensorTerm<K>> terms;

    explicit TensorDecomposition(Tensor3<K> t) : target(std::move(t)) {}
};

template <class K>
struct TensorVerifyResult {
    bool ok;
    Tensor3<K> residual;
};

template <class K>
TensorVerifyResult<K> verify_tensor(const TensorDecomposition<K>& d) {
    const auto& dims = d.target.dims();
    Tensor3<K> acc(dims);
    for (const auto& t : d.terms) {
        if (static_cast<int>(t.u.size()) != dims[0] || static_cast<int>(t.v.size()) != dims[1] ||
            static_cast<int>(t.w.size()) != dims[2])
            throw std::invalid_argument("verify_tensor: term dimension mismatch");
        for (int i = 0; i < dims[0]; ++i) {
            if (waring::is_zero(t.u[i])) continue;
            for (int j = 0; j < dims[1]; ++j) {
                if (waring::is_zero(t.v[j])) continue;
                K uv = t.u[i] * t.v[j];
                for (int k = 0; k < dims[2]; ++k) {
                    if (waring::is_zero(t.w[k])) continue;
                    acc.add_entry(i, j, k, uv * t.w[k]);
                }
            }
        }
    }
    for (const auto& [ix, val] : d.target.entries())
        acc.add_entry(ix[0], ix[1], ix[2], K(0) - val);
    return {acc.entries().empty(), std::move(acc)};
}

// ---- the 4-cube product identity ----

// 24 l1 l2 l3 = (l1+l2+l3)^3 - (l1+l2-l3)^3 - (l1-l2+l3)^3 + (l1-l2-l3)^3,
// so c * l1 l2 l3 expands into four cubes with weights +-c/24.
template <class K>
std::vector<WaringTerm<K>> product_to_cubes(const std::vector<K>& l1, const std::vector<K>& l2,
                                            const std::vector<K>& l3, const K& c) {
    if (l1.size() != l2.size() || l2.size() != l3.size())
        throw std::invalid_argument("product_to_cubes: length mismatch");
    if (waring::is_zero(c)) return {};
    std::size_t n = l1.size();
    K w = c / K(24);
    std::vector<WaringTerm<K>> out;
    const int signs[4][3] = {{1, 1, 1}, {1, 1, -1}, {1, -1, 1}, {1, -1, -1}};
    const int weights[4] = {1, -1, -1, 1};
    for (int s = 0; s < 4; ++s) {
        WaringTerm<K> t;
        t.coeff = weights[s] > 0 ? w : K(0) - w;
        t.form.resize(n);
        for (std::size_t i = 0; i < n; ++i) {
            K v = l1[i];
            v += signs[s][1] > 0 ? l2[i] : K(0) - l2[i];
            v += signs[s][2] > 0 ? l3[i] : K(0) - l3[i];
            t.form[i] = v;
        }
        out.push_back(std::move(t));
    }
    return out;
}

template <class K>
std::vector<WaringTerm<K>> monomial_to_cubes(int nvars, int i, int j, int k, const K& c) {
    if (i == j || j == k || i == k)
        throw std::invalid_argument("monomial_to_cubes: indices must be distinct");
    if (i < 0 || j < 0 || k < 0 || i >= nvars || j >= nvars || k >= nvars)
        throw std::out_of_range("monomial_to_cubes: variable index");
    std::vector<K> e1(nvars, K(0)), e2(nvars, K(0)), e3(nvars, K(0));
    e1[i] = K(1);
    e2[j] = K(1);
    e3[k] = K(1);
    return product_to_cubes(e1, e2, e3, c);
}

// ---- constructions (over the rationals) ----

// Sum over sign vectors v (first entry +1) of the cube of the pairing of
// vv^T - I with A: 2^(n-1) terms, scale 2^(n+2) against the zero-diagonal
// trace cubic.
WaringDecomposition<Rational> build_pn_decomposition(int n);

// Same family restricted to sign vectors with an even number of +1 entries:
// 2^(n-2) terms. The scale is set by matching the coefficient of the first
// triangle monomial; whether the identity actually holds is the caller's
// question (verify_exact), since it fails below n = 8.
WaringDecomposition<Rational> build_pn_plus_decomposition(int n);

// Decomposition of trace(A^3) with n + 4 C(n,2) + 8 C(n,3) cubes: diagonal
// cubes, one 4-cube expansion of 3 a_ij a_ji (a_ii + a_jj) per pair, and two
// 4-cube expansions per triangle.
WaringDecomposition<Rational> build_modest_upper_bound(int n);

// ---- symmetrization of tensor decompositions ----

namespace detail {

// v = c * u for some scalar c? (u nonzero)
template <class K>
bool proportional(const std::vector<K>& u, const std::vector<K>& v, K& factor) {
    int pivot = -1;
    for (std::size_t i = 0; i < u.size(); ++i)
        if (!waring::is_zero(u[i])) { pivot = static_cast<int>(i); break; }
    if (pivot < 0) return false;
    K c = v[pivot] / u[pivot];
    for (std::size_t i = 0; i < u.size(); ++i)
        if (!waring::is_zero(v[i] - c * u[i])) return false;
    factor = c;
    return true;
}

}  // namespace detail

// Each rank-one term u (x) v (x) w becomes the 4-cube expansion of the
// product u v w of linear forms; proportional factors collapse to a single
// cube. Equal forms are merged afterwards, so the result has at most
// 4 * terms cubes and targets the symmetrization of the input tensor.
template <class K>
WaringDecomposition<K> symmetrize_tensor_decomposition(const TensorDecomposition<K>& td) {
    auto check = verify_tensor(td);
    if (!check.ok)
        throw std::invalid_argument("symmetrize_tensor_decomposition: input does not verify");
    WaringDecomposition<K> d(as_cubic(symmetrize(td.target)), K(1));
    std::map<std::vector<K>, K> merged;
    auto push = [&](const std::vector<K>& form, const K& coeff) {
        std::vector<K> f = form;
        K c = coeff;
        if constexpr (std::is_same_v<K, Rational>) {
            for (const auto& x : f) {
                if (x.is_zero()) continue;
                if (x.sign() < 0) {
                    for (auto& y : f) y = -y;
                    c = K(0) - c;
                }
                break;
            }
        }
        auto it = merged.find(f);
        if (it == merged.end()) merged.emplace(std::move(f), c);
        else it->second += c;
    };
    for (const auto& t : td.terms) {
        K a, b;
        if (detail::proportional(t.u, t.v, a) && detail::proportional(t.u, t.w, b)) {
            push(t.u, a * b);
        } else {
            for (auto& term : product_to_cubes(t.u, t.v, t.w, K(1)))
                push(term.form, term.coeff);
        }
    }
    for (auto& [form, coeff] : merged) {
        if (waring::is_zero(coeff)) continue;
        bool zero_form = true;
        for (const auto& x : form)
            if (!waring::is_zero(x)) { zero_form = false; break; }
        if (zero_form) continue;
        d.terms.push_back({coeff, form});
    }
    return d;
}

// ---- transport down to the matrix multiplication tensor ----

// Pull each linear form back through the block embedding, split it into its
// A, B and C parts and emit the rank-one term. The trilinear component of
// sum c (a+b+g)^3 is 6 sum c a b g, and trace(X^3) is 3 trace(ABC) for the
// general embedding and 6 trace(ABC) for the symmetric ones, which fixes
// the prefactor 2c/scale resp. c/scale.
template <class K>
TensorDecomposition<K> extract_matmul_decomposition(const WaringDecomposition<K>& d) {
    if (!d.family) throw std::invalid_argument("extract_matmul_decomposition: unnamed target");
    FamilyId id = *d.family;
    if (id.kind == FamilyKind::MatMulTensor || id.n % 3 != 0)
        throw std::invalid_argument(
            "extract_matmul_decomposition: target must be a family on 3n x 3n matrices");
    if (!verify_exact(d).ok)
        throw std::invalid_argument("extract_matmul_decomposition: input does not verify");
    int n = id.n / 3;
    int nn = n * n;

    LinearMap<Rational> embed_q;
    bool general = id.kind == FamilyKind::General;
    if (general) {
        embed_q = embed_blocks(n, EmbedVariant::General);
    } else if (id.kind == FamilyKind::ZeroDiagonal) {
        embed_q = embed_blocks_zerodiag(n);
    } else {
        // symmetric coordinates of the (zero-diagonal) symmetric embedding;
        // in the traceless chart the diagonal rows are zero anyway
        int N = 3 * n;
        LinearMap<Rational> full = embed_blocks(n, EmbedVariant::Symmetric);
        int last = sym_index(N, N - 1, N - 1);
        int nv = family_nvars(id);
        embed_q = LinearMap<Rational>::zero(3 * nn, nv);
        for (int i = 0; i < N; ++i)
            for (int j = i; j < N; ++j) {
                int s = sym_index(N, i, j);
                if (id.kind == FamilyKind::SymmetricTraceless && s == last) continue;
                embed_q.rows[s] = full.rows[mat_index(N, i, j)];
            }
    }
    LinearMap<K> embed = convert_map<K>(embed_q);

    K factor_base = (general ? K(2) : K(1)) / d.scale;
    TensorDecomposition<K> out(convert_tensor<K>(make_matmul_tensor(n)));
    for (const auto& term : d.terms) {
        // pulled-back form over the 3n^2 block variables
        std::vector<K> pb(3 * nn, K(0));
        for (int w = 0; w < embed.codomain_dim; ++w) {
            if (waring::is_zero(term.form[w])) continue;
            for (int j = 0; j < 3 * nn; ++j)
                if (!waring::is_zero(embed.rows[w][j])) pb[j] += term.form[w] * embed.rows[w][j];
        }
        TensorTerm<K> t;
        t.u.assign(pb.begin(), pb.begin() + nn);
        t.v.assign(pb.begin() + nn, pb.begin() + 2 * nn);
        t.w.assign(pb.begin() + 2 * nn, pb.end());
        bool uz = true, vz = true, wz = true;
        for (const auto& x : t.u) uz = uz && waring::is_zero(x);
        for (const auto& x : t.v) vz = vz && waring::is_zero(x);
        for (const auto& x : t.w) wz = wz && waring::is_zero(x);
        if (uz || vz || wz) continue;
        K f = factor_base * term.coeff;
        for (auto& x : t.u) x *= f;
        out.terms.push_back(std::move(t));
    }
    if (!verify_tensor(out).ok)
        throw std::logic_error("extract_matmul_decomposition: transported terms do not verify");
    return out;
}

// ---- rank audit of the linear forms as matrices ----

struct RankAudit {
    std::vector<int> ranks;
    int max_rank = 0;
    std::map<int, int> count_per_rank;
};

namespace detail {

template <class K>
int exact_rank(std::vector<std::vector<K>> m) {
    int rows = static_cast<int>(m.size());
    int cols = rows ? static_cast<int>(m[0].size()) : 0;
    int rank = 0;
    for (int col = 0; col < cols && rank < rows; ++col) {
        int pivot = -1;
        for (int r = rank; r < rows; ++r)
            if (!waring::is_zero(m[r][col])) { pivot = r; break; }
        if (pivot < 0) continue;
        std::swap(m[rank], m[pivot]);
        for (int r = rank + 1; r < rows; ++r) {
            if (waring::is_zero(m[r][col])) continue;
            K f = m[r][col] / m[rank][col];
            for (int c = col; c < cols; ++c) m[r][c] -= f * m[rank][c];
        }
        ++rank;
    }
    return rank;
}

}  // namespace detail

// The matrix of a linear form under the trace pairing trace(L^T A):
// general coordinates read off row-major; symmetric coordinates give the
// diagonal directly and half of each off-diagonal coefficient.
template <class K>
std::vector<std::vector<K>> form_as_matrix(const FamilyId& id, const std::vector<K>& form) {
    int n = id.n;
    std::vector<std::vector<K>> m(n, std::vector<K>(n, K(0)));
    switch (id.kind) {
        case FamilyKind::General:
            for (int i = 0; i < n; ++i)
                for (int j = 0; j < n; ++j) m[i][j] = form[mat_index(n, i, j)];
            break;
        case FamilyKind::Symmetric:
            for (int i = 0; i < n; ++i)
                for (int j = i; j < n; ++j) {
                    K v = form[sym_index(n, i, j)];
                    if (i != j) v = v / K(2);
                    m[i][j] = m[j][i] = v;
                }
            break;
        case FamilyKind::SymmetricTraceless: {
            int last = sym_index(n, n - 1, n - 1);
            for (int i = 0; i < n; ++i)
                for (int j = i; j < n; ++j) {
                    int s = sym_index(n, i, j);
                    if (s == last) continue;  // representative with last diagonal 0
                    K v = form[s];
                    if (i != j) v = v / K(2);
                    m[i][j] = m[j][i] = v;
                }
            break;
        }
        case FamilyKind::ZeroDiagonal:
            for (int i = 0; i < n; ++i)
                for (int j = i + 1; j < n; ++j) {
                    K v = form[pair_index(n, i, j)] / K(2);
                    m[i][j] = m[j][i] = v;
                }
            break;
        default:
            throw std::invalid_argument("form_as_matrix: target is not matrix-shaped");
    }
    return m;
}

template <class K>
RankAudit audit_ranks(const WaringDecomposition<K>& d) {
    if (!d.family) throw std::invalid_argument("audit_ranks: unnamed target");
    RankAudit audit;
    for (const auto& term : d.terms) {
        int r = detail::exact_rank(form_as_matrix(*d.family, term.form));
        audit.ranks.push_back(r);
        audit.max_rank = std::max(audit.max_rank, r);
        ++audit.count_per_rank[r];
    }
    return audit;
}

}  // namespace waring
