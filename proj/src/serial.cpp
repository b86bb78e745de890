#include "simpend/serial.hpp"

#include <string>
#include <utility>
#include <vector>

#include "simpend/errors.hpp"

namespace simpend {

namespace {

using nlohmann::json;

std::pair<int, int> int_pair(const json& j, const char* what) {
    if (!j.is_array() || j.size() != 2)
        throw ValidationError(std::string(what) + " must be a pair of integers");
    return {j.at(0).get<int>(), j.at(1).get<int>()};
}

std::vector<std::pair<int, int>> pair_list(const json& j, const char* what) {
    if (!j.is_array()) throw ValidationError(std::string(what) + " must be an array");
    std::vector<std::pair<int, int>> out;
    out.reserve(j.size());
    for (const json& el : j) out.push_back(int_pair(el, what));
    return out;
}

json pair_array(const std::vector<std::pair<int, int>>& v) {
    json out = json::array();
    for (const auto& [a, b] : v) out.push_back(json::array({a, b}));
    return out;
}

json point_json(const TLPoint& p) {
    return json::array({p.side == TLSide::top ? "t" : "b", p.index});
}

TLPoint point_from_json(const json& j) {
    if (!j.is_array() || j.size() != 2) throw ValidationError("a point must be [side, index]");
    const std::string side = j.at(0).get<std::string>();
    if (side != "t" && side != "b") throw ValidationError("point side must be \"t\" or \"b\"");
    return {side == "t" ? TLSide::top : TLSide::bottom, j.at(1).get<int>()};
}

}  // namespace

json to_json(const OrdMap& f) { return json{{"n", f.n}, {"m", f.m}, {"values", f.values}}; }

json to_json(const OrdEndoN& f) {
    return json{{"prefix", f.prefix}, {"type", json::array({f.type_n, f.type_m})}};
}

json to_json(const Frieze& d) {
    return json{{"cups", pair_array(d.cups)},
                {"caps", pair_array(d.caps)},
                {"type", json::array({d.type_n, d.type_m})}};
}

json to_json(const TLDiagram& d) {
    json pairs = json::array();
    for (const auto& pr : d.pairs)
        pairs.push_back(json::array({point_json(pr.first), point_json(pr.second)}));
    return json{{"n", d.n}, {"pairs", pairs}, {"circles", d.circles}};
}

OrdMap ordmap_from_json(const json& j) {
    return {j.at("n").get<int>(), j.at("m").get<int>(), j.at("values").get<std::vector<int>>()};
}

OrdEndoN endo_from_json(const json& j) {
    const auto type = int_pair(j.at("type"), "type");
    return {j.at("prefix").get<std::vector<int>>(), type.first, type.second};
}

Frieze frieze_from_json(const json& j) {
    return validate(pair_list(j.at("cups"), "cup"), pair_list(j.at("caps"), "cap"),
                    int_pair(j.at("type"), "type"));
}

TLDiagram tl_from_json(const json& j) {
    const json& src = j.at("pairs");
    if (!src.is_array()) throw ValidationError("pairs must be an array");
    std::vector<std::pair<TLPoint, TLPoint>> pairs;
    pairs.reserve(src.size());
    for (const json& el : src) {
        if (!el.is_array() || el.size() != 2) throw ValidationError("a pair must hold two points");
        pairs.emplace_back(point_from_json(el.at(0)), point_from_json(el.at(1)));
    }
    return make_tl_diagram(j.at("n").get<int>(), std::move(pairs), j.at("circles").get<int>());
}

}  // namespace simpend
