#ifndef SESQUI_REFERENCE_HPP
#define SESQUI_REFERENCE_HPP

#include <array>
#include <map>
#include <optional>
#include <vector>

#include "sesqui/graph.hpp"

namespace sesqui::reference {

/// Independent reference implementations used to cross-check the main code
/// paths. Deliberately plain: natural orders, dense vectors, everything
/// recomputed from scratch. Desk-scale inputs only.

struct BruteNorm3Result {
    bool found = false;
    int dimension = 0;
    std::map<int, std::vector<long long>> vectors;
};

/// Exhaustive enumeration of canonical signed 3-supports (fresh coordinates
/// consecutive with forced +1) in natural vertex order 0..n-1.
BruteNorm3Result brute_norm3(const Graph& g);

/// Isomorphism by trying every vertex permutation.
std::optional<std::vector<int>> isomorphism_by_permutations(const Graph& a, const Graph& b);

long long determinant3(const std::array<std::array<long long, 3>, 3>& m);

}  // namespace sesqui::reference

#endif
