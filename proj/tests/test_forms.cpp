#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "oracle_poly.hpp"
#include "waring/forms.hpp"

using waring::CubicForm;
using waring::LinearMap;
using waring::Mono;
using waring::Rational;
using waring::SymTensor3;
using waring::Tensor3;

namespace {

CubicForm<Rational> random_cubic(int nvars, int nterms, std::mt19937& rng) {
    std::uniform_int_distribution<int> vi(0, nvars - 1);
    std::uniform_int_distribution<long> ci(-9, 9);
    CubicForm<Rational> f(nvars);
    for (int t = 0; t < nterms; ++t) f.add_term(vi(rng), vi(rng), vi(rng), Rational(ci(rng)));
    return f;
}

Tensor3<Rational> random_tensor(int n, int nentries, std::mt19937& rng) {
    std::uniform_int_distribution<int> vi(0, n - 1);
    std::uniform_int_distribution<long> ci(-9, 9);
    Tensor3<Rational> t(n, n, n);
    for (int e = 0; e < nentries; ++e) t.add_entry(vi(rng), vi(rng), vi(rng), Rational(ci(rng)));
    return t;
}

}  // namespace

TEST_CASE("monomial keys and multiplicities") {
    CHECK(waring::make_mono(2, 0, 1) == Mono{0, 1, 2});
    CHECK(waring::mono_multiplicity({0, 1, 2}) == 6);
    CHECK(waring::mono_multiplicity({0, 0, 2}) == 3);
    CHECK(waring::mono_multiplicity({1, 1, 1}) == 1);
}

TEST_CASE("cubic form term bookkeeping") {
    CubicForm<Rational> f(3);
    f.add_term(2, 0, 1, Rational(2));
    CHECK(f.coeff(0, 1, 2) == Rational(2));
    f.add_term(1, 2, 0, Rational(-2));
    CHECK(f.is_zero());
    CHECK_THROWS_AS(f.add_term(0, 0, 3, Rational(1)), std::out_of_range);
}

TEST_CASE("add, scale, equality") {
    CubicForm<Rational> f(2);
    f.add_term(0, 0, 1, Rational(3));
    CubicForm<Rational> g = f + Rational(-1) * f;
    CHECK(g.is_zero());
    CubicForm<Rational> h(3);
    h.add_term(0, 1, 2, Rational(1));
    CubicForm<Rational> h2 = Rational(2) * h;
    CHECK(h2.term_count() == 1);
    CHECK(h2.coeff(0, 1, 2) == Rational(2));
    CHECK_THROWS_AS(f + h, std::invalid_argument);
}

TEST_CASE("eval basics") {
    CubicForm<Rational> f(1);
    f.add_term(0, 0, 0, Rational(1));
    CHECK(f.eval({Rational(2)}) == Rational(8));
    CHECK_THROWS_AS(f.eval({Rational(1), Rational(1)}), std::invalid_argument);
}

TEST_CASE("trace cube of 2x2 via oracle, eval at identity and random points") {
    oracle::Poly p = oracle::trace_cube_generic(2);
    CubicForm<Rational> sm2 = oracle::to_cubic(p, 4);
    // a00^3 + 3 a00 a01 a10 + 3 a01 a10 a11 + a11^3
    CHECK(sm2.term_count() == 4);
    CHECK(sm2.coeff(0, 0, 0) == Rational(1));
    CHECK(sm2.coeff(0, 1, 2) == Rational(3));
    CHECK(sm2.coeff(1, 2, 3) == Rational(3));
    CHECK(sm2.coeff(3, 3, 3) == Rational(1));
    CHECK(sm2.eval({Rational(1), Rational(0), Rational(0), Rational(1)}) == Rational(2));

    std::mt19937 rng(42);
    std::uniform_int_distribution<long> ci(-9, 9);
    for (int trial = 0; trial < 20; ++trial) {
        std::vector<Rational> a;
        for (int i = 0; i < 4; ++i) a.emplace_back(ci(rng), 1 + (trial % 3));
        // cube the matrix numerically in exact arithmetic
        oracle::Mat A(2, std::vector<oracle::Poly>(2));
        for (int i = 0; i < 2; ++i)
            for (int j = 0; j < 2; ++j) A[i][j] = oracle::Poly::constant(a[2 * i + j]);
        Rational tr = oracle::trace_cube(A).coeff({});
        CHECK(sm2.eval(a) == tr);
    }
}

TEST_CASE("symmetrize a single elementary tensor") {
    Tensor3<Rational> t(3, 3, 3);
    t.add_entry(0, 1, 2, Rational(1));
    SymTensor3<Rational> s = waring::symmetrize(t);
    CHECK(s.entry(0, 1, 2) == Rational(1, 6));
    CHECK(s.entry(2, 1, 0) == Rational(1, 6));
    CHECK(s.entries().size() == 1);
}

TEST_CASE("symmetrize fixes symmetric input") {
    std::mt19937 rng(7);
    SymTensor3<Rational> s(4);
    std::uniform_int_distribution<int> vi(0, 3);
    std::uniform_int_distribution<long> ci(-5, 5);
    for (int e = 0; e < 10; ++e) s.add_entry(vi(rng), vi(rng), vi(rng), Rational(ci(rng)));
    CHECK(waring::symmetrize(waring::as_tensor(s)) == s);
}

TEST_CASE("symmetrize is idempotent on random tensors") {
    std::mt19937 rng(11);
    for (int trial = 0; trial < 10; ++trial) {
        Tensor3<Rational> t = random_tensor(4, 12, rng);
        SymTensor3<Rational> s = waring::symmetrize(t);
        CHECK(waring::symmetrize(waring::as_tensor(s)) == s);
    }
}

TEST_CASE("symmetrize rejects unequal dimensions") {
    Tensor3<Rational> t(2, 3, 2);
    CHECK_THROWS_AS(waring::symmetrize(t), std::invalid_argument);
}

TEST_CASE("symmetrized matmul tensor gives the trace cubic, n=2") {
    // M_(2): entry 1 at ((i,j),(j,k),(k,i)) with row-major index 2r+c
    Tensor3<Rational> m2(4, 4, 4);
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j)
            for (int k = 0; k < 2; ++k)
                m2.add_entry(2 * i + j, 2 * j + k, 2 * k + i, Rational(1));
    CubicForm<Rational> lhs = waring::as_cubic(waring::symmetrize(m2));
    CubicForm<Rational> rhs = oracle::to_cubic(oracle::trace_cube_generic(2), 4);
    CHECK(lhs == rhs);
}

TEST_CASE("cubic <-> symmetric tensor round trip") {
    std::mt19937 rng(3);
    for (int trial = 0; trial < 10; ++trial) {
        CubicForm<Rational> f = random_cubic(5, 15, rng);
        CHECK(waring::as_cubic(waring::as_sym_tensor(f)) == f);
    }
}

TEST_CASE("eval of symmetrization matches t(v,v,v)") {
    std::mt19937 rng(13);
    std::uniform_int_distribution<long> ci(-4, 4);
    for (int trial = 0; trial < 10; ++trial) {
        Tensor3<Rational> t = random_tensor(4, 10, rng);
        std::vector<Rational> v;
        for (int i = 0; i < 4; ++i) v.emplace_back(ci(rng), 1 + (trial % 2));
        CubicForm<Rational> f = waring::as_cubic(waring::symmetrize(t));
        CHECK(f.eval(v) == t.contract(v, v, v));
    }
}

TEST_CASE("substitution agrees with the oracle ring") {
    std::mt19937 rng(17);
    std::uniform_int_distribution<long> ci(-3, 3);
    for (int trial = 0; trial < 8; ++trial) {
        int from = 3, to = 4;
        CubicForm<Rational> f = random_cubic(to, 8, rng);
        LinearMap<Rational> map = LinearMap<Rational>::zero(from, to);
        for (int w = 0; w < to; ++w)
            for (int j = 0; j < from; ++j) map.rows[w][j] = Rational(ci(rng));
        CubicForm<Rational> sub = waring::substitute(f, map);

        // oracle: same substitution through the general ring
        std::vector<oracle::Poly> images(to);
        for (int w = 0; w < to; ++w) {
            for (int j = 0; j < from; ++j)
                images[w] = images[w] + oracle::Poly::var(j) * map.rows[w][j];
        }
        oracle::Poly expect;
        for (const auto& [m, c] : f.terms())
            expect = expect + images[m[0]] * images[m[1]] * images[m[2]] * c;
        CHECK(sub == oracle::to_cubic(expect, from));
    }
}

TEST_CASE("cube of a linear form") {
    // (x0 + x1)^3 and a sparse weighted cube
    CubicForm<Rational> c = waring::cube_of_linear<Rational>({Rational(1), Rational(1)});
    CHECK(c.coeff(0, 0, 0) == Rational(1));
    CHECK(c.coeff(0, 0, 1) == Rational(3));
    CHECK(c.coeff(0, 1, 1) == Rational(3));
    CHECK(c.coeff(1, 1, 1) == Rational(1));

    std::mt19937 rng(23);
    std::uniform_int_distribution<long> ci(-4, 4);
    for (int trial = 0; trial < 10; ++trial) {
        std::vector<Rational> l;
        for (int i = 0; i < 5; ++i) l.emplace_back(ci(rng), 1 + (trial % 3));
        oracle::Poly lp;
        for (int i = 0; i < 5; ++i) lp = lp + oracle::Poly::var(i) * l[i];
        oracle::Poly cube = lp * lp * lp;
        CHECK(waring::cube_of_linear(l, Rational(7)) ==
              oracle::to_cubic(cube * Rational(7), 5));
    }
}

TEST_CASE("complex scalar instantiation compiles and evaluates") {
    using waring::ComplexF;
    CubicForm<ComplexF> f(2);
    f.add_term(0, 0, 1, ComplexF(0.0, 3.0));
    ComplexF v = f.eval({ComplexF(1.0, 0.0), ComplexF(0.0, 1.0)});
    CHECK(std::abs(v - ComplexF(-3.0, 0.0)) < 1e-15);
}
