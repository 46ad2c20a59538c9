#pragma once

#include <string>

#include <json.hpp>

#include "bergman/domain.hpp"
#include "bergman/projection.hpp"

namespace bergman {

using Json = nlohmann::json;

inline Json to_json(const DomainSpec& spec) {
    return Json{{"kind", kind_name(spec.kind)}, {"n", spec.n}, {"k", spec.k}};
}

inline DomainSpec spec_from_json(const Json& j) {
    const std::string kind = j.at("kind").get<std::string>();
    const int n = j.value("n", 1);
    const int k = j.value("k", 1);
    for (DomainKind cand : {DomainKind::UnitDisc, DomainKind::PuncturedDisc, DomainKind::Polydisc,
                            DomainKind::Ball, DomainKind::HartogsPolydisc, DomainKind::HartogsBall})
        if (kind == kind_name(cand)) return DomainSpec(cand, n, k);
    throw ContractViolation("unknown domain kind '" + kind + "'");
}

/// Points serialize as arrays of [re, im] pairs.
inline Json to_json(const CPoint& p) {
    Json arr = Json::array();
    for (const Complex& c : p.coords) arr.push_back(Json::array({c.real(), c.imag()}));
    return arr;
}

inline CPoint point_from_json(const Json& j) {
    CPoint p;
    for (const auto& pair : j) {
        if (!pair.is_array() || pair.size() != 2)
            throw ContractViolation("point coordinates must be [re, im] pairs");
        p.coords.emplace_back(pair[0].get<double>(), pair[1].get<double>());
    }
    return p;
}

/// A series serializes as a list of {alpha, beta, coeff: [re, im]} entries in
/// the basis enumeration order.
inline Json to_json(const SeriesFunction& f) {
    Json entries = Json::array();
    for (const auto& [m, c] : f.coeffs) {
        entries.push_back(Json{{"alpha", m.alpha}, {"beta", m.beta}, {"coeff", {c.real(), c.imag()}}});
    }
    return Json{{"spec", to_json(f.spec)}, {"coeffs", entries}};
}

inline SeriesFunction series_from_json(const Json& j) {
    SeriesFunction f(spec_from_json(j.at("spec")));
    for (const auto& e : j.at("coeffs")) {
        MultiIndex m(e.at("alpha").get<long long>(), e.at("beta").get<std::vector<int>>());
        const auto& c = e.at("coeff");
        f.set(m, Complex(c[0].get<double>(), c[1].get<double>()));
    }
    return f;
}

} // namespace bergman
