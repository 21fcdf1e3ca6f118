#pragma once

#include "kgsym/jet/laurent.hpp"
#include "kgsym/jet/reduced_jet.hpp"
#include "kgsym/noether/noether.hpp"
#include "kgsym/opalg/td_operator.hpp"

#include <json.hpp>

namespace kgsym {

using Json = nlohmann::ordered_json;

// Every number is carried as a decimal string; rationals would not survive JSON doubles.

inline Json to_json(const XYPoly& p)
{
    Json terms = Json::array();
    for (const auto& [e, c] : p.terms())
        terms.push_back({{"x", std::to_string(e.x_deg)}, {"y", std::to_string(e.y_deg)}, {"coeff", to_string(c)}});
    return {{"text", p.to_string()}, {"terms", terms}};
}

inline Json to_json(const TDOperator& a)
{
    Json terms = Json::array();
    for (const auto& [d, c] : a.terms())
        terms.push_back({{"dx", std::to_string(d.dx)}, {"dy", std::to_string(d.dy)}, {"coeff", c.to_string()}});
    return {{"kind", "operator"}, {"text", a.to_string()}, {"order", std::to_string(a.order())}, {"terms", terms}};
}

inline Json to_json(const ReducedJetPoly& p)
{
    Json terms = Json::array();
    for (const auto& [m, c] : p.terms()) {
        Json mono = Json::array();
        for (const auto& [v, e] : m)
            mono.push_back({{"field", v.field}, {"index", std::to_string(v.index)}, {"exp", std::to_string(e)}});
        terms.push_back({{"monomial", mono}, {"coeff", c.to_string()}});
    }
    const auto order = jet_order(p);
    return {{"kind", "jet"},
            {"text", p.to_string()},
            {"order", order ? std::to_string(*order) : "-inf"},
            {"terms", terms}};
}

inline Json to_json(const LaurentEval& p) { return {{"kind", "laurent"}, {"text", p.to_string()}}; }

inline Json to_json(const ConservedCurrent& c)
{
    Json j{{"family", to_string(c.family)},
           {"T", to_json(c.t)},
           {"X", to_json(c.x)},
           {"order", std::to_string(c.declared_order)},
           {"divergence_free", c.divergence().is_zero()}};
    if (c.characteristic) {
        j["characteristic"] = to_json(*c.characteristic);
        if (fields_of(*c.characteristic).size() <= 1) j["cl_characteristic"] = is_cl_characteristic(*c.characteristic);
    }
    if (c.characteristic_operator) j["characteristic_operator"] = to_json(*c.characteristic_operator);
    return j;
}

} // namespace kgsym
