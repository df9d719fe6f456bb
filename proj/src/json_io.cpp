#include "sesqui/json_io.hpp"

#include <stdexcept>

namespace sesqui {

namespace {

std::vector<std::pair<int, int>> edges_from_json(const json& j) {
    std::vector<std::pair<int, int>> edges;
    for (const auto& e : j) {
        if (!e.is_array() || e.size() != 2) throw std::invalid_argument("edge must be a pair");
        edges.emplace_back(e[0].get<int>(), e[1].get<int>());
    }
    return edges;
}

json edges_to_json(const std::vector<std::pair<int, int>>& edges) {
    json out = json::array();
    for (const auto& [u, v] : edges) out.push_back({u, v});
    return out;
}

}  // namespace

json to_json(const Graph& g) {
    return json{{"n", g.order()}, {"edges", edges_to_json(g.edges())}};
}

Graph graph_from_json(const json& j) {
    if (!j.is_object() || !j.contains("n") || !j.contains("edges"))
        throw std::invalid_argument("graph JSON needs n and edges");
    return Graph(j.at("n").get<int>(), edges_from_json(j.at("edges")));
}

json to_json(const TripleSystem& t) {
    json blocks = json::array();
    for (const auto& block : t.blocks) blocks.push_back({block[0], block[1], block[2]});
    return json{{"v", t.v}, {"blocks", blocks}};
}

TripleSystem sts_from_json(const json& j) {
    if (!j.is_object() || !j.contains("v") || !j.contains("blocks"))
        throw std::invalid_argument("triple system JSON needs v and blocks");
    TripleSystem t;
    t.v = j.at("v").get<int>();
    for (const auto& b : j.at("blocks")) {
        if (!b.is_array() || b.size() != 3)
            throw std::invalid_argument("block must be a triple");
        t.blocks.push_back({b[0].get<int>(), b[1].get<int>(), b[2].get<int>()});
    }
    return t;
}

json to_json(const IntegralRepresentation& r) {
    json vectors = json::object();
    for (const auto& [v, vec] : r.vectors) vectors[std::to_string(v)] = vec;
    return json{{"s", r.scale}, {"dimension", r.dimension}, {"vectors", vectors}};
}

IntegralRepresentation representation_from_json(const json& j) {
    if (!j.is_object() || !j.contains("s") || !j.contains("dimension") || !j.contains("vectors"))
        throw std::invalid_argument("representation JSON needs s, dimension and vectors");
    IntegralRepresentation r;
    r.scale = j.at("s").get<long long>();
    r.dimension = j.at("dimension").get<int>();
    r.target_norm = j.value("target_norm", 3 * r.scale);
    for (const auto& [key, value] : j.at("vectors").items())
        r.vectors[std::stoi(key)] = value.get<std::vector<long long>>();
    return r;
}

json to_json(const HoffmanGraph& h) {
    return json{{"n_slim", h.slim_count()},
                {"n_fat", h.fat_count()},
                {"edges", edges_to_json(h.underlying().edges())}};
}

HoffmanGraph hoffman_from_json(const json& j) {
    if (!j.is_object() || !j.contains("n_slim") || !j.contains("n_fat") || !j.contains("edges"))
        throw std::invalid_argument("hoffman JSON needs n_slim, n_fat and edges");
    return HoffmanGraph(j.at("n_slim").get<int>(), j.at("n_fat").get<int>(),
                        edges_from_json(j.at("edges")));
}

json to_json(const ReducedRepresentation& r) {
    json vectors = json::object();
    for (const auto& [v, vec] : r.vectors) vectors[std::to_string(v)] = vec;
    return json{{"t", r.norm}, {"dimension", r.dimension}, {"vectors", vectors}};
}

ReducedRepresentation reduced_from_json(const json& j) {
    if (!j.is_object() || !j.contains("t") || !j.contains("dimension") || !j.contains("vectors"))
        throw std::invalid_argument("reduced representation JSON needs t, dimension and vectors");
    ReducedRepresentation r;
    r.norm = j.at("t").get<long long>();
    r.dimension = j.at("dimension").get<int>();
    for (const auto& [key, value] : j.at("vectors").items())
        r.vectors[std::stoi(key)] = value.get<std::vector<long long>>();
    return r;
}

json to_json(const RegularityReport& report) {
    json out;
    out["connected"] = report.connected;
    if (report.regular) out["regular"] = *report.regular;
    if (report.diameter) out["diameter"] = *report.diameter;
    else out["diameter"] = nullptr;
    if (report.sesqui) {
        json s{{"n", report.sesqui->n}, {"k", report.sesqui->k}};
        s["c"] = report.sesqui->c ? json(*report.sesqui->c) : json(nullptr);
        out["sesqui"] = s;
    }
    if (report.srg) {
        json s{{"n", report.srg->n}, {"k", report.srg->k}};
        s["a"] = report.srg->a ? json(*report.srg->a) : json(nullptr);
        s["c"] = report.srg->c ? json(*report.srg->c) : json(nullptr);
        out["srg"] = s;
    }
    if (!report.note.empty()) out["note"] = report.note;
    return out;
}

json to_json(const VerifyReport& report) {
    json out{{"pass", report.pass}};
    if (!report.pass) {
        out["reason"] = report.reason;
        if (report.witness) out["witness"] = {report.witness->first, report.witness->second};
        out["expected"] = report.expected;
        out["actual"] = report.actual;
    }
    return out;
}

json to_json(const StsReport& report) {
    json out{{"pass", report.pass}};
    if (!report.pass) {
        out["reason"] = report.reason;
        if (report.witness_pair) {
            out["witness_pair"] = {report.witness_pair->first, report.witness_pair->second};
            out["coverage"] = report.coverage;
        }
    }
    return out;
}

json to_json(const MateReport& report) {
    json mates = json::array();
    for (const auto& [x, y] : report.mate)
        if (x < y) mates.push_back({x, y});
    return json{{"S", report.S}, {"mates", mates}};
}

json to_json(const SearchOutcome& outcome) {
    json out{{"status", to_string(outcome.status)}, {"node_count", outcome.node_count}};
    if (outcome.representation) out["representation"] = to_json(*outcome.representation);
    return out;
}

json to_json(const SignedGraph& s) {
    return json{{"n", s.n},
                {"plus", edges_to_json(s.plus_edges)},
                {"minus", edges_to_json(s.minus_edges)}};
}

json to_json(const HoffmanVerifyReport& report) {
    json out{{"pass", report.pass}};
    if (!report.pass) {
        out["reason"] = report.reason;
        if (report.witness) out["witness"] = {report.witness->first, report.witness->second};
        out["expected"] = report.expected;
        out["actual"] = report.actual;
    }
    return out;
}

}  // namespace sesqui
