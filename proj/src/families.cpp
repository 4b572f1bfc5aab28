#include "waring/families.hpp"

#include <stdexcept>

namespace waring {

int family_nvars(const FamilyId& id) {
    int n = id.n;
    switch (id.kind) {
        case FamilyKind::General: return n * n;
        case FamilyKind::Symmetric: return n * (n + 1) / 2;
        case FamilyKind::SymmetricTraceless: return n * (n + 1) / 2 - 1;
        case FamilyKind::ZeroDiagonal: return n * (n - 1) / 2;
        case FamilyKind::MatMulTensor: return n * n;
    }
    throw std::logic_error("family_nvars: bad kind");
}

std::string family_code(FamilyKind kind) {
    switch (kind) {
        case FamilyKind::General: return "sm";
        case FamilyKind::Symmetric: return "sms";
        case FamilyKind::SymmetricTraceless: return "sms0";
        case FamilyKind::ZeroDiagonal: return "smz";
        case FamilyKind::MatMulTensor: return "mm";
    }
    throw std::logic_error("family_code: bad kind");
}

FamilyKind family_kind_from_code(const std::string& code) {
    if (code == "sm") return FamilyKind::General;
    if (code == "sms") return FamilyKind::Symmetric;
    if (code == "sms0") return FamilyKind::SymmetricTraceless;
    if (code == "smz") return FamilyKind::ZeroDiagonal;
    if (code == "mm") return FamilyKind::MatMulTensor;
    throw std::invalid_argument("unknown family code '" + code + "'");
}

int sym_index(int n, int i, int j) {
    if (i > j) std::swap(i, j);
    return i * n - i * (i - 1) / 2 + (j - i);
}

int pair_index(int n, int i, int j) {
    if (i > j) std::swap(i, j);
    if (i == j) throw std::invalid_argument("pair_index: needs distinct indices");
    return i * n - i * (i + 1) / 2 + (j - i - 1);
}

CubicForm<Rational> make_smn(int n) {
    if (n < 1) throw std::invalid_argument("make_smn: n must be >= 1");
    CubicForm<Rational> f(n * n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            for (int k = 0; k < n; ++k)
                f.add_term(mat_index(n, i, j), mat_index(n, j, k), mat_index(n, k, i),
                           Rational(1));
    return f;
}

CubicForm<Rational> make_smn_s(int n) {
    if (n < 2) throw std::invalid_argument("make_smn_s: n must be >= 2");
    return substitute(make_smn(n), family_inclusion({FamilyKind::Symmetric, n}));
}

CubicForm<Rational> make_smn_s0(int n) {
    if (n < 2) throw std::invalid_argument("make_smn_s0: n must be >= 2");
    return substitute(make_smn(n), family_inclusion({FamilyKind::SymmetricTraceless, n}));
}

CubicForm<Rational> make_smn_z(int n) {
    if (n < 2) throw std::invalid_argument("make_smn_z: n must be >= 2");
    CubicForm<Rational> f(n * (n - 1) / 2);
    // restricting trace(A^3) picks up each triangle a_ij a_jk a_ik six times
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            for (int k = j + 1; k < n; ++k)
                f.add_term(pair_index(n, i, j), pair_index(n, j, k), pair_index(n, i, k),
                           Rational(6));
    return f;
}

Tensor3<Rational> make_matmul_tensor(int n) {
    if (n < 1) throw std::invalid_argument("make_matmul_tensor: n must be >= 1");
    Tensor3<Rational> t(n * n, n * n, n * n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            for (int k = 0; k < n; ++k)
                t.add_entry(mat_index(n, i, j), mat_index(n, j, k), mat_index(n, k, i),
                            Rational(1));
    return t;
}

CubicForm<Rational> family_cubic(const FamilyId& id) {
    switch (id.kind) {
        case FamilyKind::General: return make_smn(id.n);
        case FamilyKind::Symmetric: return make_smn_s(id.n);
        case FamilyKind::SymmetricTraceless: return make_smn_s0(id.n);
        case FamilyKind::ZeroDiagonal: return make_smn_z(id.n);
        case FamilyKind::MatMulTensor:
            throw std::invalid_argument("family_cubic: matmul tensor is not a cubic form");
    }
    throw std::logic_error("family_cubic: bad kind");
}

LinearMap<Rational> family_inclusion(const FamilyId& id) {
    int n = id.n;
    switch (id.kind) {
        case FamilyKind::Symmetric: {
            auto m = LinearMap<Rational>::zero(n * (n + 1) / 2, n * n);
            for (int i = 0; i < n; ++i)
                for (int j = 0; j < n; ++j)
                    m.rows[mat_index(n, i, j)][sym_index(n, i, j)] = Rational(1);
            return m;
        }
        case FamilyKind::SymmetricTraceless: {
            if (n < 2) throw std::invalid_argument("family_inclusion: n must be >= 2");
            int nv = n * (n + 1) / 2 - 1;
            auto m = LinearMap<Rational>::zero(nv, n * n);
            // the eliminated coordinate is the last diagonal entry
            int last = sym_index(n, n - 1, n - 1);
            for (int i = 0; i < n; ++i)
                for (int j = 0; j < n; ++j) {
                    int s = sym_index(n, i, j);
                    if (s != last) {
                        m.rows[mat_index(n, i, j)][s] = Rational(1);
                    } else {
                        for (int k = 0; k + 1 < n; ++k)
                            m.rows[mat_index(n, i, j)][sym_index(n, k, k)] = Rational(-1);
                    }
                }
            return m;
        }
        case FamilyKind::ZeroDiagonal: {
            if (n < 2) throw std::invalid_argument("family_inclusion: n must be >= 2");
            auto m = LinearMap<Rational>::zero(n * (n - 1) / 2, n * n);
            for (int i = 0; i < n; ++i)
                for (int j = 0; j < n; ++j)
                    if (i != j) m.rows[mat_index(n, i, j)][pair_index(n, i, j)] = Rational(1);
            return m;
        }
        default:
            throw std::invalid_argument("family_inclusion: only restricted families embed");
    }
}

LinearMap<Rational> embed_blocks(int n, EmbedVariant variant) {
    if (n < 1) throw std::invalid_argument("embed_blocks: n must be >= 1");
    int N = 3 * n;
    auto m = LinearMap<Rational>::zero(3 * n * n, N * N);
    auto A = [&](int i, int j) { return mat_index(n, i, j); };
    auto B = [&](int i, int j) { return n * n + mat_index(n, i, j); };
    auto C = [&](int i, int j) { return 2 * n * n + mat_index(n, i, j); };
    auto set = [&](int br, int bc, int i, int j, int var) {
        m.rows[mat_index(N, br * n + i, bc * n + j)][var] = Rational(1);
    };
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            if (variant == EmbedVariant::General) {
                set(0, 2, i, j, A(i, j));
                set(1, 0, i, j, C(i, j));
                set(2, 1, i, j, B(i, j));
            } else {
                set(0, 1, i, j, C(j, i));
                set(0, 2, i, j, A(i, j));
                set(1, 0, i, j, C(i, j));
                set(1, 2, i, j, B(j, i));
                set(2, 0, i, j, A(j, i));
                set(2, 1, i, j, B(i, j));
            }
        }
    return m;
}

LinearMap<Rational> embed_blocks_zerodiag(int n) {
    LinearMap<Rational> full = embed_blocks(n, EmbedVariant::Symmetric);
    int N = 3 * n;
    auto m = LinearMap<Rational>::zero(3 * n * n, N * (N - 1) / 2);
    for (int r = 0; r < N; ++r)
        for (int c = r + 1; c < N; ++c)
            m.rows[pair_index(N, r, c)] = full.rows[mat_index(N, r, c)];
    return m;
}

}  // namespace waring
