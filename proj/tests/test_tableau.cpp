#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "waring/families.hpp"
#include "waring/tableau.hpp"

using waring::CubicForm;
using waring::LinearMap;
using waring::Rational;
using waring::Tableau;
using waring::WaringTerm;

namespace {

WaringTerm<Rational> wterm(std::vector<long> entries, long coeff = 1) {
    WaringTerm<Rational> t;
    t.coeff = Rational(coeff);
    for (long e : entries) t.form.emplace_back(e);
    return t;
}

std::vector<WaringTerm<Rational>> random_sparse_forms(int k, std::mt19937& rng) {
    std::uniform_int_distribution<int> vi(0, 5);
    std::uniform_int_distribution<long> ci(1, 4);
    std::vector<WaringTerm<Rational>> forms;
    for (int i = 0; i < k; ++i) {
        WaringTerm<Rational> t;
        t.coeff = Rational(ci(rng), ci(rng));
        t.form.assign(6, Rational(0));
        t.form[vi(rng)] += Rational(ci(rng));
        t.form[vi(rng)] -= Rational(ci(rng));
        forms.push_back(std::move(t));
    }
    return forms;
}

// an exact ten-cube expansion of 6abc + 3de^2 + d^3 + f^3 in six variables
std::vector<WaringTerm<Rational>> ten_cube_expansion() {
    std::vector<WaringTerm<Rational>> forms;
    for (const auto& t : waring::monomial_to_cubes<Rational>(6, 0, 1, 2, Rational(6)))
        forms.push_back(t);
    std::vector<Rational> e3(6, Rational(0)), e4(6, Rational(0)), e5(6, Rational(0));
    e3[3] = Rational(1);
    e4[4] = Rational(1);
    e5[5] = Rational(1);
    for (const auto& t : waring::product_to_cubes(e4, e4, e3, Rational(3)))
        forms.push_back(t);
    forms.push_back({Rational(1), e3});
    forms.push_back({Rational(1), e5});
    return forms;
}

CubicForm<Rational> cubic_of(const std::vector<WaringTerm<Rational>>& forms) {
    CubicForm<Rational> f(6);
    for (const auto& t : forms) f += waring::cube_of_linear(t.form, t.coeff);
    return f;
}

}  // namespace

TEST_CASE("the degree-10 filling and its invariants") {
    auto t = waring::t10();
    CHECK(t.ncols() == 5);
    CHECK(t.nrows() == 6);
    CHECK(t.nforms() == 10);
    for (int l = 1; l <= 10; ++l) {
        int count = 0;
        for (const auto& col : t.columns())
            for (int x : col) count += x == l ? 1 : 0;
        CHECK(count == 3);
    }
}

TEST_CASE("malformed fillings are rejected") {
    CHECK_THROWS_AS(Tableau({{1, 1, 1}, {1, 1}}, 2), std::invalid_argument);       // ragged
    CHECK_THROWS_AS(Tableau({{1, 1, 1}, {2, 2, 3}}, 3), std::invalid_argument);    // counts
    CHECK_THROWS_AS(Tableau({{1, 1, 1}, {2, 2, 4}}, 3), std::invalid_argument);    // range
    CHECK_THROWS_AS(Tableau({}, 1), std::invalid_argument);
    CHECK_NOTHROW(Tableau({{1, 1, 1}, {2, 2, 2}}, 2));
}

TEST_CASE("pair coverage") {
    CHECK(waring::pair_coverage(waring::t10()));

    // block tableau with two labels that never meet
    Tableau blocks({{1, 1, 1, 2, 2, 2}, {3, 3, 3, 4, 4, 4}}, 4);
    CHECK_FALSE(waring::pair_coverage(blocks));

    // swap the 10 in column 1 with the 9 in column 3: pair {1,10} is lost
    auto cols = waring::t10().columns();
    std::swap(cols[1][5], cols[3][4]);
    CHECK_FALSE(waring::pair_coverage(Tableau(cols, 10)));
}

TEST_CASE("sums of at most six cubes are killed structurally") {
    std::mt19937 rng(71);
    for (int k = 1; k <= 6; ++k) {
        auto forms = random_sparse_forms(k, rng);
        auto v = waring::eval_on_cubes(waring::t10(), forms);
        CHECK(v.conclusive);
        CHECK(v.value.is_zero());
        CHECK_FALSE(v.nonzero);
    }

    // dense forms vanish just as well, with denser dead branches
    std::uniform_int_distribution<long> ci(-4, 4);
    std::vector<WaringTerm<Rational>> dense;
    for (int i = 0; i < 6; ++i) {
        WaringTerm<Rational> t;
        t.coeff = Rational(2 * ci(rng) + 1);
        t.form.assign(6, Rational(0));
        for (int j = 0; j < 6; ++j) t.form[j] = Rational(ci(rng));
        dense.push_back(std::move(t));
    }
    CHECK(waring::eval_on_cubes(waring::t10(), dense).value.is_zero());
}

TEST_CASE("contraction of a single cube vanishes") {
    std::vector<Rational> l(6, Rational(0));
    l[0] = Rational(2);
    l[3] = Rational(-1);
    l[5] = Rational(3);
    auto tensor = waring::as_sym_tensor(waring::cube_of_linear(l));
    auto v = waring::eval_contraction(waring::t10(), tensor);
    CHECK(v.conclusive);
    CHECK(v.value.is_zero());

    auto w = waring::eval_on_cubes(waring::t10(), {wterm({2, 0, 0, -1, 0, 3})});
    CHECK(w.value.is_zero());
}

TEST_CASE("contraction and cube evaluation agree on small cube sums") {
    std::mt19937 rng(84);
    for (int k = 2; k <= 5; ++k) {
        auto forms = random_sparse_forms(k, rng);
        auto via_cubes = waring::eval_on_cubes(waring::t10(), forms);
        auto via_tensor =
            waring::eval_contraction(waring::t10(), waring::as_sym_tensor(cubic_of(forms)));
        REQUIRE(via_cubes.conclusive);
        REQUIRE(via_tensor.conclusive);
        CHECK(via_cubes.value == via_tensor.value);
        CHECK(via_cubes.value.is_zero());  // ten labels cannot share five forms
    }
}

TEST_CASE("both engines cancel an exact ten-cube expansion of a low-rank cubic") {
    // 6abc + 3de^2 + d^3 + f^3 is a sum of 7 cubes (the binary part has rank
    // two), so the invariant must vanish; with ten distinct input cubes the
    // cube engine only discovers this through exact cancellation across
    // 10! determinant products
    auto forms = ten_cube_expansion();
    REQUIRE(forms.size() == 10);
    auto via_cubes = waring::eval_on_cubes(waring::t10(), forms);
    auto via_tensor =
        waring::eval_contraction(waring::t10(), waring::as_sym_tensor(cubic_of(forms)));
    REQUIRE(via_cubes.conclusive);
    REQUIRE(via_tensor.conclusive);
    CHECK(via_cubes.value == via_tensor.value);
    CHECK(via_cubes.value.is_zero());
}

TEST_CASE("a generic sum of ten cubes is not killed") {
    std::mt19937 rng(40);
    std::uniform_int_distribution<long> ci(-4, 4);
    std::vector<WaringTerm<Rational>> forms;
    for (int i = 0; i < 10; ++i) {
        WaringTerm<Rational> t;
        t.coeff = Rational(2 * ci(rng) + 1);
        t.form.assign(6, Rational(0));
        for (int j = 0; j < 6; ++j) t.form[j] = Rational(ci(rng));
        forms.push_back(std::move(t));
    }
    auto v = waring::eval_on_cubes(waring::t10(), forms);
    REQUIRE(v.conclusive);
    CHECK(v.nonzero);
}

TEST_CASE("cross-check of both engines on the degree-4 ternary analogue") {
    // columns = all 3-subsets of {1..4}: the classical degree-4 invariant of
    // ternary cubics, which vanishes on sums of three cubes and detects four;
    // small enough that both engines run to completion on nonzero values,
    // pinning the shared sign and weighting conventions
    Tableau aron({{1, 2, 3}, {1, 2, 4}, {1, 3, 4}, {2, 3, 4}}, 4);
    CHECK(waring::pair_coverage(aron));

    std::vector<WaringTerm<Rational>> tetra;
    const long F[4][3] = {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}, {1, 1, 1}};
    for (const auto& f : F) {
        WaringTerm<Rational> w;
        w.coeff = Rational(1);
        w.form = {Rational(f[0]), Rational(f[1]), Rational(f[2])};
        tetra.push_back(std::move(w));
    }
    CubicForm<Rational> c(3);
    for (const auto& w : tetra) c += waring::cube_of_linear(w.form, w.coeff);
    auto oc = waring::eval_on_cubes(aron, tetra);
    auto ct = waring::eval_contraction(aron, waring::as_sym_tensor(c));
    CHECK(oc.value == Rational(-24));
    CHECK(ct.value == Rational(-24));

    // and the structural vanishing scales down: three cubes die
    std::vector<WaringTerm<Rational>> three(tetra.begin(), tetra.begin() + 3);
    CubicForm<Rational> c3(3);
    for (const auto& w : three) c3 += waring::cube_of_linear(w.form, w.coeff);
    CHECK(waring::eval_on_cubes(aron, three).value.is_zero());
    CHECK(waring::eval_contraction(aron, waring::as_sym_tensor(c3)).value.is_zero());

    // random agreement trials, usually nonzero
    std::mt19937 rng(11);
    std::uniform_int_distribution<long> ci(-3, 3);
    for (int trial = 0; trial < 5; ++trial) {
        std::vector<WaringTerm<Rational>> forms;
        CubicForm<Rational> sum(3);
        for (int i = 0; i < 4; ++i) {
            WaringTerm<Rational> w;
            w.coeff = Rational(2 * ci(rng) + 1);
            w.form = {Rational(ci(rng)), Rational(ci(rng)), Rational(ci(rng))};
            sum += waring::cube_of_linear(w.form, w.coeff);
            forms.push_back(std::move(w));
        }
        CHECK(waring::eval_on_cubes(aron, forms).value ==
              waring::eval_contraction(aron, waring::as_sym_tensor(sum)).value);
    }
}

TEST_CASE("the symmetric 3x3 trace cubic is not killed: value 302400") {
    auto tensor = waring::as_sym_tensor(waring::make_smn_s(3));
    auto v = waring::eval_contraction(waring::t10(), tensor);
    REQUIRE(v.conclusive);
    CHECK(v.nonzero);
    CHECK(v.value == Rational(302400));
}

TEST_CASE("node budget reports inconclusive instead of running away") {
    auto tensor = waring::as_sym_tensor(waring::make_smn_s(3));
    auto v = waring::eval_contraction(waring::t10(), tensor, 10000);
    CHECK_FALSE(v.conclusive);
    CHECK_FALSE(v.nonzero);
    CHECK(v.nodes > 10000);

    auto w = waring::eval_on_cubes(waring::t10(), ten_cube_expansion(), 100);
    CHECK_FALSE(w.conclusive);
}

TEST_CASE("wrong variable counts are rejected") {
    waring::SymTensor3<Rational> t5(5);
    CHECK_THROWS_AS(waring::eval_contraction(waring::t10(), t5), std::invalid_argument);
    CHECK_THROWS_AS(waring::eval_on_cubes(waring::t10(), {wterm({1, 0, 0})}),
                    std::invalid_argument);
    CHECK_THROWS_AS(waring::eval_on_cubes(waring::t10(), {}), std::invalid_argument);
}

TEST_CASE("covariance under changes of variables") {
    auto tensor = waring::as_sym_tensor(cubic_of(ten_cube_expansion()));

    auto scale = LinearMap<Rational>::zero(6, 6);
    for (int i = 0; i < 6; ++i) scale.rows[i][i] = Rational(2);
    CHECK(waring::weight_covariance_check(waring::t10(), tensor, scale));

    auto perm = LinearMap<Rational>::zero(6, 6);
    const int image[6] = {2, 0, 1, 5, 3, 4};
    for (int i = 0; i < 6; ++i) perm.rows[i][image[i]] = Rational(1);
    CHECK(waring::weight_covariance_check(waring::t10(), tensor, perm));

    auto shear = LinearMap<Rational>::zero(6, 6);
    for (int i = 0; i < 6; ++i) shear.rows[i][i] = Rational(1);
    shear.rows[0][3] = Rational(1);
    CHECK(waring::weight_covariance_check(waring::t10(), tensor, shear));

    auto singular = LinearMap<Rational>::zero(6, 6);
    CHECK_THROWS_AS(waring::weight_covariance_check(waring::t10(), tensor, singular),
                    std::invalid_argument);
}

TEST_CASE("covariance through the cube engine with a random unimodular map") {
    auto forms = ten_cube_expansion();
    LinearMap<Rational> g = LinearMap<Rational>::zero(6, 6);
    const long rows[6][6] = {{1, 1, 0, 0, 0, 0},  {0, 1, 0, 0, 0, 0}, {0, 0, 1, 0, 2, 0},
                             {0, 0, 0, 1, 0, 0},  {0, 0, 0, 0, 1, 0}, {0, -1, 0, 0, 3, 1}};
    for (int i = 0; i < 6; ++i)
        for (int j = 0; j < 6; ++j) g.rows[i][j] = Rational(rows[i][j]);
    // determinant 1: move each form l to l o g, i.e. apply g transposed
    auto moved = forms;
    for (auto& t : moved) {
        std::vector<Rational> nf(6, Rational(0));
        for (int j = 0; j < 6; ++j)
            for (int i = 0; i < 6; ++i) nf[j] += t.form[i] * g.rows[i][j];
        t.form = std::move(nf);
    }
    auto lhs = waring::eval_on_cubes(waring::t10(), moved);
    auto rhs = waring::eval_on_cubes(waring::t10(), forms);
    REQUIRE(lhs.conclusive);
    REQUIRE(rhs.conclusive);
    CHECK(lhs.value == rhs.value);
}
