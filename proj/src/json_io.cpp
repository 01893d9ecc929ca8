#include "lflab/json_io.hpp"

#include <set>

namespace lflab {

Json field_to_json(const FieldDesc& f) {
    return Json{{"p", f.p}, {"m", f.m}, {"modulus", f.modulus}};
}

FieldPtr field_from_json(const Json& j) {
    if (j.is_number_integer()) return FieldDesc::prime_field(j.get<i64>());
    if (!j.is_object()) throw ParamError("kappa: expected integer p or {p,m[,modulus]}");
    i64 p = j.at("p").get<i64>();
    int m = j.contains("m") ? j.at("m").get<int>() : 1;
    if (j.contains("modulus"))
        return FieldDesc::make(p, m, j.at("modulus").get<std::vector<i64>>());
    return m == 1 ? FieldDesc::prime_field(p) : FieldDesc::extension(p, m);
}

Json series_to_json(const LaurentSeries& s) {
    Json coeffs = Json::array();
    if (s.known_nonzero()) {
        for (i64 k = s.valuation(); k <= s.top_exponent(); ++k)
            coeffs.push_back(s.coeff(k).c);
    }
    Json j;
    j["v"] = s.known_nonzero() ? Json(s.valuation()) : Json(0);
    j["prec"] = s.is_exact() ? Json(nullptr) : Json(s.prec());
    j["coeffs"] = coeffs;
    return j;
}

LaurentSeries series_from_json(const Json& j, const FieldPtr& f) {
    i64 v = j.at("v").get<i64>();
    i64 prec = LaurentSeries::kExactPrec;
    if (j.contains("prec") && !j.at("prec").is_null()) prec = j.at("prec").get<i64>();
    std::vector<FFElem> coeffs;
    for (const auto& c : j.at("coeffs")) {
        if (c.is_number_integer())
            coeffs.push_back(FFElem::from_int(f, c.get<i64>()));
        else
            coeffs.push_back(FFElem::make(f, c.get<std::vector<i64>>()));
    }
    return LaurentSeries::make(f, v, std::move(coeffs), prec);
}

Json rational_to_json(const Rational& r) { return Json{{"num", r.num()}, {"den", r.den()}}; }

Json params_to_json(const ExtensionParams& P) {
    Json j;
    j["p"] = P.p;
    j["kappa"] = field_to_json(*P.kappa);
    j["e"] = P.e;
    j["f"] = P.f;
    j["t"] = P.t;
    j["b"] = P.b;
    j["gamma"] = series_to_json(P.gamma);
    j["mu"] = series_to_json(P.mu);
    j["beta"] = series_to_json(P.beta);
    return j;
}

ExtensionParams params_from_json(const Json& j) {
    static const std::set<std::string> known = {"p", "kappa", "e", "f", "t", "b",
                                               "gamma", "mu", "beta"};
    for (const auto& [key, val] : j.items()) {
        (void)val;
        if (!known.count(key)) throw ParamError("config: unknown key '" + key + "'");
    }
    for (const auto& key : known)
        if (!j.contains(key)) throw ParamError("config: missing key '" + key + "'");
    i64 p = j.at("p").get<i64>();
    FieldPtr kappa = field_from_json(j.at("kappa"));
    return ExtensionParams::make(p, kappa, j.at("e").get<i64>(), j.at("f").get<i64>(),
                                 j.at("t").get<i64>(), j.at("b").get<i64>(),
                                 series_from_json(j.at("gamma"), kappa),
                                 series_from_json(j.at("mu"), kappa),
                                 series_from_json(j.at("beta"), kappa));
}

Json order_basis_to_json(const OrderBasis& ob) {
    return Json{{"n", ob.n}, {"b", ob.b}, {"b_bar", ob.b_bar}, {"d_vec", ob.d_vec}};
}

Json verdict_to_json(const Verdict& v) {
    return Json{{"n_mod_p", v.n_mod_p},   {"b_bar", v.b_bar},
                {"free", v.free},         {"n_generators", v.n_generators},
                {"embedding_dim", v.embedding_dim}, {"source", v.source}};
}

Json herbrand_to_json(const HerbrandFunction& h) {
    Json verts = Json::array();
    for (const auto& [x, y] : h.vertices)
        verts.push_back(Json{{"x", rational_to_json(x)}, {"y", rational_to_json(y)}});
    return Json{{"vertices", verts}, {"slope", rational_to_json(h.terminal_slope)}};
}

std::uint64_t fnv1a(const std::string& s) {
    std::uint64_t h = 14695981039346656037ull;
    for (unsigned char c : s) {
        h ^= c;
        h *= 1099511628211ull;
    }
    return h;
}

}  // namespace lflab
