#ifndef SESQUI_SEARCH_HPP
#define SESQUI_SEARCH_HPP

#include <optional>

#include "sesqui/graph.hpp"
#include "sesqui/representation.hpp"
#include "sesqui/steiner.hpp"

namespace sesqui {

struct SearchOutcome {
    enum class Status { Found, NotRepresentable, Exhausted, BudgetExceeded };
    Status status = Status::Exhausted;
    std::optional<IntegralRepresentation> representation;
    long long node_count = 0;
};

const char* to_string(SearchOutcome::Status status);

/// Depth-first search for a scale-1 norm-3 representation of a connected
/// graph. Vertices are assigned in breadth-first order from the vertex of
/// maximum degree (ties by index); signed permutations of coordinates are
/// pruned by allocating fresh coordinates in increasing order with a forced
/// +1 on first occurrence, so an exhausted search certifies nonexistence.
/// Graphs whose smallest eigenvalue is certified below -3 by an exact
/// integer witness short-circuit to NotRepresentable; borderline values fall
/// through to the search so eigenvalue -3 is never wrongly rejected.
SearchOutcome find_norm3_representation(const Graph& g, long long budget = 10'000'000);

/// Rebuilds the triple system behind a mate-free verified representation of
/// a connected sesqui-regular graph with k-2 >= c >= 9: points are the used
/// coordinates, blocks the supports. The result is checked to be a Steiner
/// system whose block graph matches the input (by isomorphism up to 40
/// vertices, by parameters and spectrum beyond).
TripleSystem sts_from_representation(const Graph& g, const IntegralRepresentation& r);

}  // namespace sesqui

#endif
