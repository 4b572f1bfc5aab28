#include "waring/json_io.hpp"

#include <cmath>
#include <fstream>
#include <stdexcept>

namespace waring {

namespace {

[[noreturn]] void bad(const std::string& what, const json& j) {
    throw std::invalid_argument("json_io: expected " + what + ", got " + j.dump());
}

Rational parse_rational(const json& j) {
    if (j.is_string()) return Rational(j.get<std::string>());
    if (j.is_number_integer()) return Rational(j.get<long>());
    bad("a rational scalar string", j);
}

// field_d = 0 means the document declared no ambient field.
QuadExt parse_quadext(const json& j, long field_d) {
    if (j.is_string() || j.is_number_integer()) return QuadExt(parse_rational(j));
    if (j.is_object()) {
        Rational a = parse_rational(j.at("a"));
        Rational b = parse_rational(j.at("b"));
        long d = j.at("d").get<long>();
        if (field_d != 0 && d != 0 && d != field_d)
            throw std::invalid_argument("json_io: scalar radicand " + std::to_string(d) +
                                        " disagrees with the document field d=" +
                                        std::to_string(field_d));
        return QuadExt(std::move(a), std::move(b), d);
    }
    bad("a quadratic scalar (string or {a,b,d})", j);
}

ComplexF parse_complex(const json& j) {
    if (!j.is_array() || j.size() != 2 || !j[0].is_number() || !j[1].is_number())
        bad("a complex scalar [re, im]", j);
    return {j[0].get<double>(), j[1].get<double>()};
}

// The common nonzero radicand over all scalars of a decomposition, or 0 if
// every value is rational. Mixed radicands cannot occur in a well-formed
// QuadExt decomposition, but hand-edited data gets a clear message.
long common_radicand(const WaringDecomposition<QuadExt>& d) {
    long found = d.scale.d();
    auto merge = [&](long dd) {
        if (dd == 0) return;
        if (found != 0 && found != dd)
            throw std::invalid_argument("json_io: mixed radicands in one decomposition");
        found = dd;
    };
    for (const auto& [m, c] : d.target.terms()) merge(c.d());
    for (const auto& t : d.terms) {
        merge(t.coeff.d());
        for (const auto& x : t.form) merge(x.d());
    }
    return found;
}

template <class K>
json target_to_json(const WaringDecomposition<K>& d);

template <>
json target_to_json(const WaringDecomposition<Rational>& d) {
    if (d.family) return family_to_json(*d.family);
    return cubic_to_json(d.target);
}

template <>
json target_to_json(const WaringDecomposition<QuadExt>& d) {
    if (d.family) return family_to_json(*d.family);
    json terms = json::array();
    for (const auto& [m, c] : d.target.terms())
        terms.push_back({{"mono", {m[0], m[1], m[2]}}, {"coeff", scalar_to_json(c)}});
    return {{"nvars", d.target.nvars()}, {"terms", std::move(terms)}};
}

template <class K, class Parse>
CubicForm<K> parse_cubic(const json& j, Parse&& parse_scalar) {
    if (!j.is_object() || !j.contains("nvars") || !j.contains("terms"))
        bad("a cubic {nvars, terms}", j);
    CubicForm<K> f(j.at("nvars").get<int>());
    for (const json& t : j.at("terms")) {
        const json& m = t.at("mono");
        if (!m.is_array() || m.size() != 3) bad("a monomial [i,j,k]", m);
        f.add_term(m[0].get<int>(), m[1].get<int>(), m[2].get<int>(), parse_scalar(t.at("coeff")));
    }
    return f;
}

template <class K, class Parse>
WaringDecomposition<K> parse_decomposition(const json& j, Parse&& parse_scalar) {
    if (!j.is_object() || !j.contains("target") || !j.contains("terms"))
        bad("a decomposition {target, scale, terms}", j);
    const json& tj = j.at("target");
    WaringDecomposition<K> d;
    if (tj.contains("family")) {
        d = make_family_decomposition<K>(family_from_json(tj), K(1));
    } else {
        d = WaringDecomposition<K>(parse_cubic<K>(tj, parse_scalar), K(1));
    }
    d.scale = j.contains("scale") ? parse_scalar(j.at("scale")) : K(1);
    int nv = d.target.nvars();
    for (const json& t : j.at("terms")) {
        WaringTerm<K> term;
        term.coeff = t.contains("coeff") ? parse_scalar(t.at("coeff")) : K(1);
        const json& fj = t.at("form");
        if (!fj.is_array() || static_cast<int>(fj.size()) != nv)
            throw std::invalid_argument("json_io: form has " + std::to_string(fj.size()) +
                                        " entries, target has " + std::to_string(nv) +
                                        " variables");
        for (const json& x : fj) term.form.push_back(parse_scalar(x));
        d.terms.push_back(std::move(term));
    }
    return d;
}

std::vector<Rational> parse_vector(const json& j, int len, const char* name) {
    if (!j.is_array() || static_cast<int>(j.size()) != len)
        throw std::invalid_argument(std::string("json_io: tensor factor ") + name + " needs " +
                                    std::to_string(len) + " entries");
    std::vector<Rational> v;
    for (const json& x : j) v.push_back(parse_rational(x));
    return v;
}

}  // namespace

json scalar_to_json(const Rational& x) { return x.str(); }

json scalar_to_json(const QuadExt& x) {
    if (x.is_rational()) return x.a().str();
    return {{"a", x.a().str()}, {"b", x.b().str()}, {"d", x.d()}};
}

json scalar_to_json(const ComplexF& x) { return {x.real(), x.imag()}; }

Rational rational_from_json(const json& j) { return parse_rational(j); }

QuadExt quadext_from_json(const json& j) { return parse_quadext(j, 0); }

ComplexF complex_from_json(const json& j) { return parse_complex(j); }

json family_to_json(const FamilyId& id) {
    return {{"family", family_code(id.kind)}, {"n", id.n}};
}

FamilyId family_from_json(const json& j) {
    if (!j.is_object() || !j.contains("family") || !j.contains("n"))
        bad("a family id {family, n}", j);
    FamilyId id{family_kind_from_code(j.at("family").get<std::string>()), j.at("n").get<int>()};
    if (id.n < 1) throw std::invalid_argument("json_io: family size must be positive");
    return id;
}

json cubic_to_json(const CubicForm<Rational>& f) {
    json terms = json::array();
    for (const auto& [m, c] : f.terms())
        terms.push_back({{"mono", {m[0], m[1], m[2]}}, {"coeff", scalar_to_json(c)}});
    return {{"nvars", f.nvars()}, {"terms", std::move(terms)}};
}

CubicForm<Rational> cubic_from_json(const json& j) {
    return parse_cubic<Rational>(j, parse_rational);
}

json tensor_to_json(const Tensor3<Rational>& t) {
    json entries = json::array();
    for (const auto& [ix, v] : t.entries())
        entries.push_back({{"index", {ix[0], ix[1], ix[2]}}, {"coeff", scalar_to_json(v)}});
    return {{"dims", {t.dims()[0], t.dims()[1], t.dims()[2]}}, {"entries", std::move(entries)}};
}

Tensor3<Rational> tensor_from_json(const json& j) {
    if (!j.is_object() || !j.contains("dims") || !j.contains("entries"))
        bad("a tensor {dims, entries}", j);
    const json& dj = j.at("dims");
    if (!dj.is_array() || dj.size() != 3) bad("tensor dims [d0,d1,d2]", dj);
    Tensor3<Rational> t(dj[0].get<int>(), dj[1].get<int>(), dj[2].get<int>());
    for (const json& e : j.at("entries")) {
        const json& ix = e.at("index");
        if (!ix.is_array() || ix.size() != 3) bad("a tensor index [i,j,k]", ix);
        t.add_entry(ix[0].get<int>(), ix[1].get<int>(), ix[2].get<int>(),
                    parse_rational(e.at("coeff")));
    }
    return t;
}

json decomposition_to_json(const WaringDecomposition<Rational>& d) {
    json terms = json::array();
    for (const auto& t : d.terms) {
        json form = json::array();
        for (const auto& x : t.form) form.push_back(scalar_to_json(x));
        terms.push_back({{"coeff", scalar_to_json(t.coeff)}, {"form", std::move(form)}});
    }
    return {{"target", target_to_json(d)}, {"scale", scalar_to_json(d.scale)},
            {"terms", std::move(terms)}};
}

json decomposition_to_json(const WaringDecomposition<QuadExt>& d) {
    json out = {{"target", target_to_json(d)}, {"scale", scalar_to_json(d.scale)}};
    long dd = common_radicand(d);
    if (dd != 0) out["field"] = {{"d", dd}};
    json terms = json::array();
    for (const auto& t : d.terms) {
        json form = json::array();
        for (const auto& x : t.form) form.push_back(scalar_to_json(x));
        terms.push_back({{"coeff", scalar_to_json(t.coeff)}, {"form", std::move(form)}});
    }
    out["terms"] = std::move(terms);
    return out;
}

json decomposition_to_json(const NumericDecomposition& d) {
    json terms = json::array();
    for (const auto& t : d.terms) {
        json form = json::array();
        for (const auto& x : t.form) form.push_back(scalar_to_json(x));
        terms.push_back({{"coeff", scalar_to_json(t.coeff)}, {"form", std::move(form)}});
    }
    return {{"target", family_to_json(d.target)}, {"terms", std::move(terms)},
            {"residual_norm", d.residual_norm}};
}

WaringDecomposition<Rational> decomposition_rational_from_json(const json& j) {
    return parse_decomposition<Rational>(j, parse_rational);
}

WaringDecomposition<QuadExt> decomposition_quadext_from_json(const json& j) {
    long field_d = 0;
    if (j.is_object() && j.contains("field")) field_d = j.at("field").at("d").get<long>();
    return parse_decomposition<QuadExt>(
        j, [field_d](const json& x) { return parse_quadext(x, field_d); });
}

NumericDecomposition numeric_decomposition_from_json(const json& j) {
    if (!j.is_object() || !j.contains("target") || !j.contains("terms"))
        bad("a numeric decomposition {target, terms}", j);
    if (!j.at("target").contains("family"))
        throw std::invalid_argument(
            "json_io: numeric decompositions need a named family target");
    NumericDecomposition d;
    d.target = family_from_json(j.at("target"));
    int nv = family_nvars(d.target);
    for (const json& t : j.at("terms")) {
        NumericTerm term;
        if (t.contains("coeff")) term.coeff = parse_complex(t.at("coeff"));
        const json& fj = t.at("form");
        if (!fj.is_array() || static_cast<int>(fj.size()) != nv)
            throw std::invalid_argument("json_io: form has " + std::to_string(fj.size()) +
                                        " entries, target has " + std::to_string(nv) +
                                        " variables");
        for (const json& x : fj) term.form.push_back(parse_complex(x));
        d.terms.push_back(std::move(term));
    }
    d.residual_norm = residual(d).norm;
    return d;
}

DecompositionKind classify_decomposition(const json& j) {
    if (!j.is_object() || !j.contains("terms") || !j.at("terms").is_array())
        bad("a decomposition {target, terms}", j);
    if (j.contains("field")) return DecompositionKind::Quadratic;
    for (const json& t : j.at("terms")) {
        if (t.contains("coeff"))
            return t.at("coeff").is_array() ? DecompositionKind::Numeric
                                            : DecompositionKind::Rational;
        const json& f = t.at("form");
        if (!f.empty()) return f[0].is_array() ? DecompositionKind::Numeric
                                               : DecompositionKind::Rational;
    }
    return DecompositionKind::Rational;
}

json tensor_decomposition_to_json(const TensorDecomposition<Rational>& d) {
    const auto& dims = d.target.dims();
    json target;
    int n = static_cast<int>(std::lround(std::sqrt(double(dims[0]))));
    if (n * n == dims[0] && dims[0] == dims[1] && dims[1] == dims[2] &&
        d.target == make_matmul_tensor(n)) {
        target = family_to_json({FamilyKind::MatMulTensor, n});
    } else {
        target = tensor_to_json(d.target);
    }
    json terms = json::array();
    for (const auto& t : d.terms) {
        json u = json::array(), v = json::array(), w = json::array();
        for (const auto& x : t.u) u.push_back(scalar_to_json(x));
        for (const auto& x : t.v) v.push_back(scalar_to_json(x));
        for (const auto& x : t.w) w.push_back(scalar_to_json(x));
        terms.push_back({{"u", std::move(u)}, {"v", std::move(v)}, {"w", std::move(w)}});
    }
    return {{"target", std::move(target)}, {"terms", std::move(terms)}};
}

TensorDecomposition<Rational> tensor_decomposition_from_json(const json& j) {
    if (!j.is_object() || !j.contains("target") || !j.contains("terms"))
        bad("a tensor decomposition {target, terms}", j);
    const json& tj = j.at("target");
    Tensor3<Rational> target(0, 0, 0);
    if (tj.contains("family")) {
        FamilyId id = family_from_json(tj);
        if (id.kind != FamilyKind::MatMulTensor)
            throw std::invalid_argument("json_io: tensor decomposition targets mm families");
        target = make_matmul_tensor(id.n);
    } else {
        target = tensor_from_json(tj);
    }
    const auto dims = target.dims();
    TensorDecomposition<Rational> d(std::move(target));
    for (const json& t : j.at("terms")) {
        TensorTerm<Rational> term;
        term.u = parse_vector(t.at("u"), dims[0], "u");
        term.v = parse_vector(t.at("v"), dims[1], "v");
        term.w = parse_vector(t.at("w"), dims[2], "w");
        d.terms.push_back(std::move(term));
    }
    return d;
}

json flattening_report_to_json(const FlatteningReport& r) {
    return {{"nvars", r.spec.nvars}, {"p", r.spec.p},       {"rows", r.rows},
            {"cols", r.cols},        {"rank", r.rank},      {"unit_rank", r.unit_rank},
            {"bound", r.bound},      {"exact", r.exact},    {"primes", r.primes_used}};
}

json localdim_report_to_json(const LocalDimReport& r) {
    json gap;
    if (std::isfinite(r.gap)) gap = r.gap;
    return {{"jacobian_rank", r.jacobian_rank},
            {"parameter_count", r.parameter_count},
            {"estimated_local_dimension", r.estimated_local_dimension},
            {"conclusive", r.conclusive},
            {"gap", std::move(gap)}};
}

json read_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in.is_open()) throw std::runtime_error("cannot open '" + path + "'");
    try {
        return json::parse(in);
    } catch (const json::parse_error& e) {
        throw std::runtime_error(path + ": " + e.what());
    }
}

void write_json_file(const std::string& path, const json& j) {
    std::ofstream out(path);
    if (!out.is_open()) throw std::runtime_error("cannot open '" + path + "' for writing");
    out << j.dump(2) << '\n';
    if (!out.good()) throw std::runtime_error("failed writing '" + path + "'");
}

}  // namespace waring
