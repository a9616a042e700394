#include "fibhess/json_io.hpp"

namespace fibhess {

using nlohmann::json;

json to_json(const GaussianRational& z) {
    return json{{"re", z.re().to_string()}, {"im", z.im().to_string()}};
}

GaussianRational gaussian_from_json(const json& j) {
    if (!j.is_object() || !j.contains("re") || !j.contains("im"))
        throw ParameterError("gaussian JSON must carry \"re\" and \"im\" strings");
    return {BigRational::from_string(j.at("re").get<std::string>()),
            BigRational::from_string(j.at("im").get<std::string>())};
}

json to_json(const LaurentPoly& p) {
    json terms = json::array();
    for (const auto& [e, c] : p.terms()) {
        terms.push_back(json{{"exps", e}, {"re", c.re().to_string()}, {"im", c.im().to_string()}});
    }
    return json{{"k", p.var_count()}, {"terms", std::move(terms)}};
}

LaurentPoly poly_from_json(const json& j) {
    if (!j.is_object() || !j.contains("k") || !j.contains("terms"))
        throw ParameterError("polynomial JSON must carry \"k\" and \"terms\"");
    const int k = j.at("k").get<int>();
    LaurentPoly p(k);
    for (const auto& t : j.at("terms")) {
        const auto exps = t.at("exps").get<MultiIndex>();
        const GaussianRational coeff(BigRational::from_string(t.at("re").get<std::string>()),
                                     BigRational::from_string(t.at("im").get<std::string>()));
        p += LaurentPoly::monomial(k, coeff, exps);
    }
    return p;
}

json matrix_to_json(const FamilySpec& spec) {
    json rows = json::array();
    if (family_is_symbolic(spec.family)) {
        const auto m = build_symbolic(spec);
        for (int r = 1; r <= spec.n; ++r) {
            json row = json::array();
            for (int s = 1; s <= spec.n; ++s) row.push_back(to_json(m.entry(r, s)));
            rows.push_back(std::move(row));
        }
    } else {
        const auto m = build_numeric(spec);
        for (int r = 1; r <= spec.n; ++r) {
            json row = json::array();
            for (int s = 1; s <= spec.n; ++s) row.push_back(to_json(m.entry(r, s)));
            rows.push_back(std::move(row));
        }
    }
    return json{{"family", to_string(spec.family)},
                {"k", spec.k},
                {"n", spec.n},
                {"entries", std::move(rows)}};
}

json eval_to_json(const FamilySpec& spec, const std::string& op, const LaurentPoly& result) {
    return json{{"family", to_string(spec.family)},
                {"op", op},
                {"k", spec.k},
                {"n", spec.n},
                {"result", to_json(result)}};
}

json eval_to_json(const FamilySpec& spec, const std::string& op, const GaussianRational& result) {
    return json{{"family", to_string(spec.family)},
                {"op", op},
                {"k", spec.k},
                {"n", spec.n},
                {"result", to_json(result)}};
}

} // namespace fibhess
