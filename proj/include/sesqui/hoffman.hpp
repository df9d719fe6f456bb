#ifndef SESQUI_HOFFMAN_HPP
#define SESQUI_HOFFMAN_HPP

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "sesqui/graph.hpp"

namespace sesqui {

/// Graph with a slim/fat vertex labeling: fat vertices are pairwise
/// non-adjacent and each has at least one slim neighbor. Slim vertices take
/// indices 0..n_slim-1, fat vertices follow. At least one slim vertex is
/// required.
class HoffmanGraph {
public:
    HoffmanGraph(int n_slim, int n_fat, const std::vector<std::pair<int, int>>& edges);

    int slim_count() const { return n_slim_; }
    int fat_count() const { return underlying_.order() - n_slim_; }
    bool is_slim(int v) const { return v < n_slim_; }
    bool is_fat(int v) const { return v >= n_slim_; }
    const Graph& underlying() const { return underlying_; }

    int fat_degree(int x) const;                 // |N^fat(x)|
    int common_fat_count(int x, int y) const;    // |N^fat(x,y)|
    std::vector<int> slim_neighbors(int v) const;
    std::vector<int> fat_neighbors(int v) const;

    /// True when every slim vertex has a fat neighbor.
    bool is_fat_hoffman() const;

private:
    Graph underlying_;
    int n_slim_;
};

HoffmanGraph hoffman_from_parts(int n_slim, int n_fat,
                                const std::vector<std::pair<int, int>>& edges);

/// Embeds a plain graph as the all-slim Hoffman graph.
HoffmanGraph all_slim(const Graph& g);

/// The triangle on three slim vertices with two fat vertices adjacent to all
/// of them: the standard smallest-eigenvalue -4 fixture.
HoffmanGraph hoffman_gallery(const std::string& name);  // name: fig3

Graph slim_graph(const HoffmanGraph& h);

/// Slim-indexed integer matrix: diagonal -|N^fat(x)|, off-diagonal
/// 1-|N^fat(x,y)| on slim edges and -|N^fat(x,y)| otherwise. Its eigenvalues
/// are the Hoffman graph's eigenvalues.
std::vector<std::vector<long long>> special_matrix(const HoffmanGraph& h);

double hoffman_smallest_eigenvalue(const HoffmanGraph& h);

/// Signed graph on the slim vertices: (+)-edges are slim edges with no
/// common fat neighbor, (-)-edges are slim edges with two or more common
/// fat neighbors together with non-adjacent slim pairs sharing a fat
/// neighbor. Its connectivity characterizes indecomposability.
struct SignedGraph {
    int n = 0;
    std::vector<std::pair<int, int>> plus_edges;
    std::vector<std::pair<int, int>> minus_edges;
};

SignedGraph special_graph(const HoffmanGraph& h);

/// Induced Hoffman subgraph generated by a slim subset W: W together with
/// every fat vertex adjacent to some member. Slim vertices keep their
/// relative order and come first in the factor's numbering.
HoffmanGraph generated_subgraph(const HoffmanGraph& h, const std::vector<int>& slim_subset);

struct Decomposition {
    std::vector<HoffmanGraph> factors;
    std::vector<std::vector<int>> slim_sets;  // per factor, in h's numbering
    std::vector<std::vector<int>> fat_sets;
};

/// Splits along connected components of the special graph; the special
/// matrix is block-diagonal under the resulting slim partition. A single
/// factor means the Hoffman graph is indecomposable. Factors are ordered by
/// least slim vertex.
Decomposition decompose(const HoffmanGraph& h);

/// Checks whether the subgraphs induced on the two vertex sets decompose h
/// as a sum: the sets cover h, slim parts partition the slim vertices, fat
/// neighbors stay inside their part, and slim vertices across parts have at
/// most one common fat neighbor, exactly one iff adjacent. Equivalent to
/// block-diagonality of the special matrix. Empty slim parts are rejected
/// (false); vertex sets that fail to induce Hoffman subgraphs throw.
bool verify_sum(const HoffmanGraph& h, const std::vector<int>& part1,
                const std::vector<int>& part2);

/// Subgraph of the slim graph induced on the slim neighbors of a fat vertex.
Graph quasi_clique(const HoffmanGraph& h, int fat_vertex);

bool is_clique(const Graph& g);
bool all_quasi_cliques_are_cliques(const HoffmanGraph& h);

/// Integer vectors on the slim vertices with (psi(x),psi(x)) = t-|N^fat(x)|,
/// (psi(x),psi(y)) = 1-|N^fat(x,y)| on slim edges and -|N^fat(x,y)| off.
struct ReducedRepresentation {
    int dimension = 0;
    std::map<int, std::vector<long long>> vectors;  // slim vertex -> coordinates
    long long norm = 3;
};

struct HoffmanVerifyReport {
    bool pass = false;
    std::string reason;
    std::optional<std::pair<int, int>> witness;
    long long expected = 0;
    long long actual = 0;
};

HoffmanVerifyReport verify_reduced_representation(const HoffmanGraph& h,
                                                  const ReducedRepresentation& psi, long long t);

/// Integer vectors over all vertices with norm t on slim, norm 1 on fat,
/// inner product 1 on edges and 0 otherwise.
struct FullRepresentation {
    int dimension = 0;
    std::map<int, std::vector<long long>> vectors;  // every vertex of h
    long long norm = 3;
};

HoffmanVerifyReport verify_full_representation(const HoffmanGraph& h,
                                               const FullRepresentation& phi, long long t);

/// Extends a verified reduced representation to a full one by appending one
/// fresh unit coordinate per fat vertex; slim vectors pick up the indicator
/// of their fat neighborhood. Throws if psi does not verify.
FullRepresentation reduced_to_full(const HoffmanGraph& h, const ReducedRepresentation& psi,
                                   long long t);

/// Inverse of reduced_to_full for full representations in canonical fat
/// coordinate form, i.e. each fat vector a distinct unit coordinate: drops
/// those coordinates. The general isometry behind the equivalence is not
/// mechanized; anything non-canonical throws.
ReducedRepresentation full_to_reduced(const HoffmanGraph& h, const FullRepresentation& phi,
                                      long long t);

/// The hypotheses under which a fat indecomposable Hoffman graph with
/// smallest eigenvalue at least -3 and a slim vertex with two fat neighbors
/// is known to admit a norm-3 reduced representation. Only the hypotheses
/// are evaluated; no representation is constructed.
struct Norm3Promise {
    bool fat = false;
    bool indecomposable = false;
    bool eigenvalue_at_least_minus_3 = false;
    bool slim_vertex_with_two_fat_neighbors = false;
    bool promised() const {
        return fat && indecomposable && eigenvalue_at_least_minus_3 &&
               slim_vertex_with_two_fat_neighbors;
    }
};

Norm3Promise check_norm3_promise(const HoffmanGraph& h);

}  // namespace sesqui

#endif
