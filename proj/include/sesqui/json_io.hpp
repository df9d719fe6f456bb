#ifndef SESQUI_JSON_IO_HPP
#define SESQUI_JSON_IO_HPP

#include <json.hpp>

#include "sesqui/graph.hpp"
#include "sesqui/hoffman.hpp"
#include "sesqui/representation.hpp"
#include "sesqui/search.hpp"
#include "sesqui/steiner.hpp"

namespace sesqui {

using nlohmann::json;

// Graphs: {"n": int, "edges": [[u,v],...]} with edges sorted, u < v.
json to_json(const Graph& g);
Graph graph_from_json(const json& j);

// Triple systems: {"v": int, "blocks": [[a,b,c],...]}.
json to_json(const TripleSystem& t);
TripleSystem sts_from_json(const json& j);

// Representations: {"s": int, "dimension": int, "vectors": {"0": [...], ...}}.
json to_json(const IntegralRepresentation& r);
IntegralRepresentation representation_from_json(const json& j);

// Hoffman graphs: {"n_slim": int, "n_fat": int, "edges": [[u,v],...]},
// fat vertices indexed after slim ones.
json to_json(const HoffmanGraph& h);
HoffmanGraph hoffman_from_json(const json& j);

// Reduced representations: {"t": int, "dimension": int, "vectors": {...}}.
json to_json(const ReducedRepresentation& r);
ReducedRepresentation reduced_from_json(const json& j);

json to_json(const RegularityReport& report);
json to_json(const VerifyReport& report);
json to_json(const StsReport& report);
json to_json(const MateReport& report);
json to_json(const SearchOutcome& outcome);
json to_json(const SignedGraph& s);
json to_json(const HoffmanVerifyReport& report);

}  // namespace sesqui

#endif
