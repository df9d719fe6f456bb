#ifndef SESQUI_GRAPH_HPP
#define SESQUI_GRAPH_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace sesqui {

/// Finite simple undirected graph on vertices 0..n-1, dense adjacency.
/// Immutable after construction; cheap to copy at the sizes we work with.
class Graph {
public:
    Graph() = default;

    /// Builds the symmetric closure of the given edge list. Duplicate edges
    /// collapse; loops and out-of-range endpoints throw.
    Graph(int n, const std::vector<std::pair<int, int>>& edges);

    int order() const { return n_; }
    bool adjacent(int u, int v) const { return adj_[static_cast<size_t>(u) * n_ + v] != 0; }
    int degree(int u) const;
    std::vector<int> neighbors(int u) const;

    /// Edges as sorted (u,v) pairs with u < v.
    std::vector<std::pair<int, int>> edges() const;
    int edge_count() const;

    bool operator==(const Graph& other) const { return n_ == other.n_ && adj_ == other.adj_; }

private:
    void check_vertex(int v) const;

    int n_ = 0;
    std::vector<std::uint8_t> adj_;
};

/// Vertex partition: disjoint nonempty cells covering 0..n-1.
struct Partition {
    std::vector<std::vector<int>> cells;
};

/// Classification results. Absent optionals mean the property fails (or is
/// not decidable, see `note`). A `c` (or `a`) of nullopt inside a present
/// sesqui/srg block means the defining pair set is empty, so the constant is
/// vacuous; this keeps complete graphs classifiable without inventing c = 0.
struct RegularityReport {
    std::optional<int> regular;  // valency when all degrees agree
    bool connected = false;
    std::optional<int> diameter;  // nullopt when disconnected

    struct Sesqui {
        int n;
        int k;
        std::optional<int> c;
    };
    std::optional<Sesqui> sesqui;

    struct Srg {
        int n;
        int k;
        std::optional<int> a;
        std::optional<int> c;
    };
    std::optional<Srg> srg;

    std::string note;  // reason when sesqui/srg are absent
};

Graph graph_from_edges(int n, const std::vector<std::pair<int, int>>& edges);
Graph complement(const Graph& g);

/// Disjoint union of cycles, one block of consecutive indices per cycle.
/// Vertex p of cycle i is `offset_i + p`; p ~ q iff p-q = +-1 (mod length).
Graph disjoint_cycles(const std::vector<int>& lengths);

/// complement(disjoint_cycles(lengths)); (n-3)-regular on n = sum of lengths.
Graph cycle_complement(const std::vector<int>& lengths);

/// m parts of p vertices each; vertex v sits in part v / p.
Graph complete_multipartite(int parts, int part_size);

/// Vertices are d-bit masks, adjacency = Hamming distance 1.
Graph hypercube(int d);

/// Small fixed graphs used as eigenvalue fixtures; names: fig1a, fig1b, fig2.
Graph gallery(const std::string& name);

/// All-pairs hop distances via BFS; Graph::unreachable marks disconnected pairs.
inline constexpr int kUnreachable = -1;
std::vector<std::vector<int>> distances(const Graph& g);

bool is_connected(const Graph& g);
std::vector<std::vector<int>> components(const Graph& g);

/// Diameter of a connected graph; nullopt when disconnected.
std::optional<int> diameter(const Graph& g);

Graph induced_subgraph(const Graph& g, const std::vector<int>& vertices);

int common_neighbor_count(const Graph& g, int u, int v);

RegularityReport classify_regularity(const Graph& g);

/// Backtracking isomorphism search with degree pruning; intended for the
/// modest orders appearing in tests and reconstruction checks.
std::optional<std::vector<int>> find_isomorphism(const Graph& a, const Graph& b);

// --- external formats ---
std::string to_dot(const Graph& g);
std::string to_edge_list(const Graph& g);

/// Parses "u v" lines. If n < 0 the order is inferred as max endpoint + 1.
Graph from_edge_list(const std::string& text, int n = -1);

}  // namespace sesqui

#endif
