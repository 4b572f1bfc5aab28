#pragma once

#include <string>

#include "waring/forms.hpp"

namespace waring {

// The target families: cubics on n x n general, symmetric, traceless
// symmetric and zero-diagonal symmetric matrices, plus the matrix
// multiplication tensor itself.
enum class FamilyKind { General, Symmetric, SymmetricTraceless, ZeroDiagonal, MatMulTensor };

struct FamilyId {
    FamilyKind kind = FamilyKind::General;
    int n = 1;

    friend bool operator==(const FamilyId& x, const FamilyId& y) {
        return x.kind == y.kind && x.n == y.n;
    }
};

int family_nvars(const FamilyId& id);
std::string family_code(FamilyKind kind);
FamilyKind family_kind_from_code(const std::string& code);

// Row-major index of matrix entry (i,j) in the n^2 coordinate space.
inline int mat_index(int n, int i, int j) { return n * i + j; }

// Row-wise upper-triangle index (i <= j), diagonal included.
int sym_index(int n, int i, int j);

// Lexicographic strict-pair index (i < j).
int pair_index(int n, int i, int j);

// trace(A^3) on n x n matrices, row-major coordinates.
CubicForm<Rational> make_smn(int n);

// trace(A^3) restricted to symmetric matrices, upper-triangle coordinates.
CubicForm<Rational> make_smn_s(int n);

// ... further restricted to trace zero; the last diagonal entry is
// eliminated as minus the sum of the others.
CubicForm<Rational> make_smn_s0(int n);

// trace(A^3) restricted to zero-diagonal symmetric matrices, strict-pair
// coordinates: 6 * sum over i<j<k of a_ij a_jk a_ik.
CubicForm<Rational> make_smn_z(int n);

// M_(n): entry 1 at ((i,j),(j,k),(k,i)), so contraction with
// (vec A, vec B, vec C) gives trace(ABC).
Tensor3<Rational> make_matmul_tensor(int n);

// Dispatch on the family id (MatMulTensor is not a cubic and is rejected).
CubicForm<Rational> family_cubic(const FamilyId& id);

// Coordinates of the restricted family written inside the full n^2 matrix
// space, i.e. the substitution defining the restriction.
LinearMap<Rational> family_inclusion(const FamilyId& id);

enum class EmbedVariant { General, Symmetric };

// The 3n x 3n block matrix X in A, B, C with trace(X^3) = 3 trace(ABC)
// (general: X = [[0,0,A],[C,0,0],[0,B,0]]) or 6 trace(ABC) (symmetric:
// X = [[0,C^T,A],[C,0,B^T],[A^T,B,0]], which is symmetric with zero
// diagonal). Domain variables: A row-major, then B, then C.
LinearMap<Rational> embed_blocks(int n, EmbedVariant variant);

// The symmetric block embedding expressed in the strict-pair coordinates of
// the zero-diagonal family on 3n x 3n matrices.
LinearMap<Rational> embed_blocks_zerodiag(int n);

}  // namespace waring
