#include "sesqui/graph.hpp"

#include <algorithm>
#include <queue>
#include <sstream>
#include <stdexcept>

namespace sesqui {

Graph::Graph(int n, const std::vector<std::pair<int, int>>& edges) : n_(n) {
    if (n < 1) throw std::invalid_argument("graph order must be at least 1");
    adj_.assign(static_cast<size_t>(n) * n, 0);
    for (const auto& [u, v] : edges) {
        if (u < 0 || u >= n || v < 0 || v >= n)
            throw std::invalid_argument("edge endpoint out of range");
        if (u == v) throw std::invalid_argument("loop edge");
        adj_[static_cast<size_t>(u) * n + v] = 1;
        adj_[static_cast<size_t>(v) * n + u] = 1;
    }
}

void Graph::check_vertex(int v) const {
    if (v < 0 || v >= n_) throw std::invalid_argument("vertex out of range");
}

int Graph::degree(int u) const {
    check_vertex(u);
    int d = 0;
    for (int v = 0; v < n_; ++v) d += adj_[static_cast<size_t>(u) * n_ + v];
    return d;
}

std::vector<int> Graph::neighbors(int u) const {
    check_vertex(u);
    std::vector<int> out;
    for (int v = 0; v < n_; ++v)
        if (adjacent(u, v)) out.push_back(v);
    return out;
}

std::vector<std::pair<int, int>> Graph::edges() const {
    std::vector<std::pair<int, int>> out;
    for (int u = 0; u < n_; ++u)
        for (int v = u + 1; v < n_; ++v)
            if (adjacent(u, v)) out.emplace_back(u, v);
    return out;
}

int Graph::edge_count() const {
    int m = 0;
    for (int u = 0; u < n_; ++u)
        for (int v = u + 1; v < n_; ++v) m += adjacent(u, v);
    return m;
}

Graph graph_from_edges(int n, const std::vector<std::pair<int, int>>& edges) {
    return Graph(n, edges);
}

Graph complement(const Graph& g) {
    std::vector<std::pair<int, int>> edges;
    for (int u = 0; u < g.order(); ++u)
        for (int v = u + 1; v < g.order(); ++v)
            if (!g.adjacent(u, v)) edges.emplace_back(u, v);
    return Graph(g.order(), edges);
}

Graph disjoint_cycles(const std::vector<int>& lengths) {
    if (lengths.empty()) throw std::invalid_argument("need at least one cycle length");
    int n = 0;
    for (int len : lengths) {
        if (len < 3) throw std::invalid_argument("cycle length must be at least 3");
        n += len;
    }
    std::vector<std::pair<int, int>> edges;
    int offset = 0;
    for (int len : lengths) {
        for (int p = 0; p < len; ++p) edges.emplace_back(offset + p, offset + (p + 1) % len);
        offset += len;
    }
    return Graph(n, edges);
}

Graph cycle_complement(const std::vector<int>& lengths) {
    return complement(disjoint_cycles(lengths));
}

Graph complete_multipartite(int parts, int part_size) {
    if (parts < 1 || part_size < 1)
        throw std::invalid_argument("parts and part size must be positive");
    int n = parts * part_size;
    std::vector<std::pair<int, int>> edges;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (u / part_size != v / part_size) edges.emplace_back(u, v);
    return Graph(n, edges);
}

Graph hypercube(int d) {
    if (d < 1) throw std::invalid_argument("hypercube dimension must be at least 1");
    int n = 1 << d;
    std::vector<std::pair<int, int>> edges;
    for (int u = 0; u < n; ++u)
        for (int b = 0; b < d; ++b) {
            int v = u ^ (1 << b);
            if (u < v) edges.emplace_back(u, v);
        }
    return Graph(n, edges);
}

Graph gallery(const std::string& name) {
    // fig1a: 4-cycle with a pendant vertex; fig1b: K_{2,3};
    // fig2: the 8-vertex double-fork tree. All have smallest eigenvalue < -2.
    if (name == "fig1a")
        return Graph(5, {{0, 1}, {0, 2}, {1, 3}, {1, 4}, {2, 3}});
    if (name == "fig1b")
        return Graph(5, {{0, 1}, {0, 2}, {1, 3}, {1, 4}, {2, 3}, {2, 4}});
    if (name == "fig2")
        return Graph(8, {{0, 1}, {0, 2}, {0, 3}, {1, 4}, {1, 5}, {2, 6}, {2, 7}});
    throw std::invalid_argument("unknown gallery name: " + name);
}

static std::vector<int> bfs_distances(const Graph& g, int source) {
    std::vector<int> dist(g.order(), kUnreachable);
    std::queue<int> q;
    dist[source] = 0;
    q.push(source);
    while (!q.empty()) {
        int u = q.front();
        q.pop();
        for (int v = 0; v < g.order(); ++v)
            if (g.adjacent(u, v) && dist[v] == kUnreachable) {
                dist[v] = dist[u] + 1;
                q.push(v);
            }
    }
    return dist;
}

std::vector<std::vector<int>> distances(const Graph& g) {
    std::vector<std::vector<int>> d;
    d.reserve(g.order());
    for (int v = 0; v < g.order(); ++v) d.push_back(bfs_distances(g, v));
    return d;
}

bool is_connected(const Graph& g) {
    auto dist = bfs_distances(g, 0);
    return std::none_of(dist.begin(), dist.end(), [](int x) { return x == kUnreachable; });
}

std::vector<std::vector<int>> components(const Graph& g) {
    std::vector<std::vector<int>> comps;
    std::vector<char> seen(g.order(), 0);
    for (int s = 0; s < g.order(); ++s) {
        if (seen[s]) continue;
        auto dist = bfs_distances(g, s);
        std::vector<int> comp;
        for (int v = 0; v < g.order(); ++v)
            if (dist[v] != kUnreachable) {
                comp.push_back(v);
                seen[v] = 1;
            }
        comps.push_back(std::move(comp));
    }
    return comps;
}

std::optional<int> diameter(const Graph& g) {
    int diam = 0;
    for (int v = 0; v < g.order(); ++v) {
        auto dist = bfs_distances(g, v);
        for (int d : dist) {
            if (d == kUnreachable) return std::nullopt;
            diam = std::max(diam, d);
        }
    }
    return diam;
}

Graph induced_subgraph(const Graph& g, const std::vector<int>& vertices) {
    if (vertices.empty()) throw std::invalid_argument("induced subgraph needs vertices");
    std::vector<std::pair<int, int>> edges;
    for (size_t i = 0; i < vertices.size(); ++i)
        for (size_t j = i + 1; j < vertices.size(); ++j)
            if (g.adjacent(vertices[i], vertices[j])) edges.emplace_back(int(i), int(j));
    return Graph(int(vertices.size()), edges);
}

int common_neighbor_count(const Graph& g, int u, int v) {
    int c = 0;
    for (int w = 0; w < g.order(); ++w)
        if (g.adjacent(u, w) && g.adjacent(v, w)) ++c;
    return c;
}

RegularityReport classify_regularity(const Graph& g) {
    RegularityReport report;
    int n = g.order();

    int k = g.degree(0);
    bool regular = true;
    for (int v = 1; v < n; ++v)
        if (g.degree(v) != k) regular = false;
    if (regular) report.regular = k;

    report.connected = is_connected(g);
    if (!report.connected) {
        report.note = "disconnected";
        return report;
    }
    report.diameter = diameter(g);
    if (!regular) {
        report.note = "not regular";
        return report;
    }

    auto dist = distances(g);

    // c over pairs at distance exactly 2; vacuous when no such pair exists.
    std::optional<int> c;
    bool c_constant = true;
    for (int u = 0; u < n && c_constant; ++u)
        for (int v = u + 1; v < n && c_constant; ++v) {
            if (dist[u][v] != 2) continue;
            int common = common_neighbor_count(g, u, v);
            if (!c) c = common;
            else if (*c != common) c_constant = false;
        }
    if (!c_constant) {
        report.note = "common neighbor count varies over distance-2 pairs";
        return report;
    }
    report.sesqui = RegularityReport::Sesqui{n, k, c};

    // a over adjacent pairs; strong regularity additionally needs the
    // non-adjacent count constant over all non-adjacent pairs, which rules
    // out diameter >= 3 unless the graph is complete.
    std::optional<int> a;
    bool a_constant = true;
    for (int u = 0; u < n && a_constant; ++u)
        for (int v = u + 1; v < n && a_constant; ++v) {
            if (!g.adjacent(u, v)) continue;
            int common = common_neighbor_count(g, u, v);
            if (!a) a = common;
            else if (*a != common) a_constant = false;
        }
    if (!a_constant) {
        report.note = "common neighbor count varies over adjacent pairs";
        return report;
    }

    std::optional<int> c_all;
    bool c_all_constant = true;
    for (int u = 0; u < n && c_all_constant; ++u)
        for (int v = u + 1; v < n && c_all_constant; ++v) {
            if (g.adjacent(u, v)) continue;
            int common = common_neighbor_count(g, u, v);
            if (!c_all) c_all = common;
            else if (*c_all != common) c_all_constant = false;
        }
    if (!c_all_constant) {
        report.note = "common neighbor count varies over non-adjacent pairs";
        return report;
    }
    report.srg = RegularityReport::Srg{n, k, a, c_all};
    return report;
}

namespace {

bool extend_isomorphism(const Graph& a, const Graph& b, const std::vector<int>& order,
                        size_t depth, std::vector<int>& map, std::vector<char>& used) {
    if (depth == order.size()) return true;
    int u = order[depth];
    for (int t = 0; t < b.order(); ++t) {
        if (used[t] || a.degree(u) != b.degree(t)) continue;
        bool ok = true;
        for (size_t i = 0; i < depth && ok; ++i) {
            int w = order[i];
            if (a.adjacent(u, w) != b.adjacent(t, map[w])) ok = false;
        }
        if (!ok) continue;
        map[u] = t;
        used[t] = 1;
        if (extend_isomorphism(a, b, order, depth + 1, map, used)) return true;
        used[t] = 0;
        map[u] = -1;
    }
    return false;
}

}  // namespace

std::optional<std::vector<int>> find_isomorphism(const Graph& a, const Graph& b) {
    if (a.order() != b.order() || a.edge_count() != b.edge_count()) return std::nullopt;
    int n = a.order();
    std::vector<int> da(n), db(n);
    for (int v = 0; v < n; ++v) da[v] = a.degree(v), db[v] = b.degree(v);
    auto sa = da, sb = db;
    std::sort(sa.begin(), sa.end());
    std::sort(sb.begin(), sb.end());
    if (sa != sb) return std::nullopt;

    // Map vertices in an order that keeps each new vertex attached to the
    // mapped part when possible, so adjacency constraints bite early.
    std::vector<int> order;
    std::vector<char> placed(n, 0);
    for (int round = 0; round < n; ++round) {
        int best = -1, best_attached = -1, best_deg = -1;
        for (int v = 0; v < n; ++v) {
            if (placed[v]) continue;
            int attached = 0;
            for (int w : order) attached += a.adjacent(v, w);
            if (attached > best_attached ||
                (attached == best_attached && da[v] > best_deg)) {
                best = v;
                best_attached = attached;
                best_deg = da[v];
            }
        }
        order.push_back(best);
        placed[best] = 1;
    }

    std::vector<int> map(n, -1);
    std::vector<char> used(n, 0);
    if (extend_isomorphism(a, b, order, 0, map, used)) return map;
    return std::nullopt;
}

std::string to_dot(const Graph& g) {
    std::ostringstream out;
    out << "graph g {\n";
    for (int v = 0; v < g.order(); ++v) out << "  " << v << ";\n";
    for (const auto& [u, v] : g.edges()) out << "  " << u << " -- " << v << ";\n";
    out << "}\n";
    return out.str();
}

std::string to_edge_list(const Graph& g) {
    std::ostringstream out;
    for (const auto& [u, v] : g.edges()) out << u << ' ' << v << '\n';
    return out.str();
}

Graph from_edge_list(const std::string& text, int n) {
    std::istringstream in(text);
    std::vector<std::pair<int, int>> edges;
    int max_vertex = -1;
    int u, v;
    while (in >> u >> v) {
        edges.emplace_back(u, v);
        max_vertex = std::max({max_vertex, u, v});
    }
    if (n < 0) n = max_vertex + 1;
    if (n < 1) throw std::invalid_argument("edge list is empty and no order given");
    return Graph(n, edges);
}

}  // namespace sesqui
