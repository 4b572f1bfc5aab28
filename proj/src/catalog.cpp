#include "waring/catalog.hpp"

namespace waring {

namespace {
#include "catalog_data.inc"
}  // namespace

WaringDecomposition<Rational> load_sm2_6() {
    auto d = make_family_decomposition<Rational>({FamilyKind::General, 2}, Rational(1));
    // row-major entries of the six 2x2 matrices, first four halved
    const int mats[6][4] = {
        {-1, 1, -1, -1}, {-1, -1, 1, -1}, {1, 1, 1, 1}, {1, -1, -1, 1}, {2, 0, 0, 0}, {0, 0, 0, 2}};
    for (const auto& m : mats) {
        WaringTerm<Rational> t;
        t.coeff = Rational(1);
        for (int e = 0; e < 4; ++e) t.form.push_back(Rational(m[e], 2));
        d.terms.push_back(std::move(t));
    }
    return d;
}

WaringDecomposition<QuadExt> load_sms2_4() {
    auto d = make_family_decomposition<QuadExt>({FamilyKind::Symmetric, 2}, QuadExt(6));
    // symmetric 2x2 coordinates (a00, a01, a11) under the trace pairing,
    // off-diagonal doubled; i enters through the radicand -1
    auto I = [](long k) { return QuadExt(Rational(0), Rational(k), -1); };
    const QuadExt forms[4][3] = {{QuadExt(2), I(1), QuadExt(0)},
                                 {QuadExt(0), I(-1), QuadExt(2)},
                                 {QuadExt(1), I(2), QuadExt(0)},
                                 {QuadExt(0), I(-2), QuadExt(1)}};
    const long coeffs[4] = {1, 1, -2, -2};
    for (int k = 0; k < 4; ++k) {
        WaringTerm<QuadExt> t;
        t.coeff = QuadExt(coeffs[k]);
        t.form.assign(forms[k], forms[k] + 3);
        d.terms.push_back(std::move(t));
    }
    return d;
}

WaringDecomposition<Rational> load_smz6_30() {
    auto d = make_family_decomposition<Rational>({FamilyKind::ZeroDiagonal, 6}, Rational(32));
    for (const auto& row : kSmz6Forms) {
        WaringTerm<Rational> t;
        t.coeff = Rational(1);
        for (int e = 0; e < 15; ++e) t.form.push_back(Rational(row[e]));
        d.terms.push_back(std::move(t));
    }
    return d;
}

WaringDecomposition<QuadExt> load_smz7_48() {
    auto d = make_family_decomposition<QuadExt>({FamilyKind::ZeroDiagonal, 7}, QuadExt(160));
    for (const auto& row : kSmz7Forms) {
        WaringTerm<QuadExt> t;
        t.coeff = QuadExt(1);
        for (int e = 0; e < 21; ++e)
            t.form.emplace_back(Rational(std::string(row[e][0])), Rational(std::string(row[e][1])),
                                5);
        d.terms.push_back(std::move(t));
    }
    return d;
}

}  // namespace waring
