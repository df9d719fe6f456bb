#include "sesqui/hoffman.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

#include "sesqui/spectra.hpp"

namespace sesqui {

HoffmanGraph::HoffmanGraph(int n_slim, int n_fat, const std::vector<std::pair<int, int>>& edges)
    : underlying_(n_slim + n_fat > 0 ? Graph(n_slim + n_fat, edges) : Graph()), n_slim_(n_slim) {
    if (n_slim < 1) throw std::invalid_argument("a Hoffman graph needs at least one slim vertex");
    if (n_fat < 0) throw std::invalid_argument("negative fat count");
    for (int f = n_slim_; f < underlying_.order(); ++f) {
        bool has_slim_neighbor = false;
        for (int v : underlying_.neighbors(f)) {
            if (is_fat(v)) throw std::invalid_argument("fat vertices must be pairwise non-adjacent");
            has_slim_neighbor = true;
        }
        if (!has_slim_neighbor)
            throw std::invalid_argument("every fat vertex needs a slim neighbor");
    }
}

int HoffmanGraph::fat_degree(int x) const {
    int d = 0;
    for (int f = n_slim_; f < underlying_.order(); ++f) d += underlying_.adjacent(x, f);
    return d;
}

int HoffmanGraph::common_fat_count(int x, int y) const {
    int d = 0;
    for (int f = n_slim_; f < underlying_.order(); ++f)
        d += underlying_.adjacent(x, f) && underlying_.adjacent(y, f);
    return d;
}

std::vector<int> HoffmanGraph::slim_neighbors(int v) const {
    std::vector<int> out;
    for (int u = 0; u < n_slim_; ++u)
        if (underlying_.adjacent(v, u)) out.push_back(u);
    return out;
}

std::vector<int> HoffmanGraph::fat_neighbors(int v) const {
    std::vector<int> out;
    for (int f = n_slim_; f < underlying_.order(); ++f)
        if (underlying_.adjacent(v, f)) out.push_back(f);
    return out;
}

bool HoffmanGraph::is_fat_hoffman() const {
    for (int x = 0; x < n_slim_; ++x)
        if (fat_degree(x) == 0) return false;
    return true;
}

HoffmanGraph hoffman_from_parts(int n_slim, int n_fat,
                                const std::vector<std::pair<int, int>>& edges) {
    return HoffmanGraph(n_slim, n_fat, edges);
}

HoffmanGraph all_slim(const Graph& g) { return HoffmanGraph(g.order(), 0, g.edges()); }

HoffmanGraph hoffman_gallery(const std::string& name) {
    if (name == "fig3")
        return HoffmanGraph(3, 2, {{0, 1}, {0, 2}, {1, 2},
                                   {0, 3}, {1, 3}, {2, 3},
                                   {0, 4}, {1, 4}, {2, 4}});
    throw std::invalid_argument("unknown hoffman gallery name: " + name);
}

Graph slim_graph(const HoffmanGraph& h) {
    std::vector<int> slim(h.slim_count());
    for (int i = 0; i < h.slim_count(); ++i) slim[i] = i;
    return induced_subgraph(h.underlying(), slim);
}

std::vector<std::vector<long long>> special_matrix(const HoffmanGraph& h) {
    int n = h.slim_count();
    std::vector<std::vector<long long>> sp(n, std::vector<long long>(n, 0));
    for (int x = 0; x < n; ++x) {
        sp[x][x] = -h.fat_degree(x);
        for (int y = x + 1; y < n; ++y) {
            long long common = h.common_fat_count(x, y);
            long long value = h.underlying().adjacent(x, y) ? 1 - common : -common;
            sp[x][y] = sp[y][x] = value;
        }
    }
    return sp;
}

double hoffman_smallest_eigenvalue(const HoffmanGraph& h) {
    auto sp = special_matrix(h);
    int n = h.slim_count();
    SymMatrix m(n);
    for (int i = 0; i < n; ++i)
        for (int j = i; j < n; ++j) m.set(i, j, double(sp[i][j]));
    return eigenvalues_sym(m).front();
}

SignedGraph special_graph(const HoffmanGraph& h) {
    SignedGraph s;
    s.n = h.slim_count();
    for (int x = 0; x < s.n; ++x)
        for (int y = x + 1; y < s.n; ++y) {
            int common = h.common_fat_count(x, y);
            if (h.underlying().adjacent(x, y)) {
                if (common == 0) s.plus_edges.emplace_back(x, y);
                else if (common >= 2) s.minus_edges.emplace_back(x, y);
            } else if (common >= 1) {
                s.minus_edges.emplace_back(x, y);
            }
        }
    return s;
}

HoffmanGraph generated_subgraph(const HoffmanGraph& h, const std::vector<int>& slim_subset) {
    if (slim_subset.empty()) throw std::invalid_argument("slim subset must be nonempty");
    std::vector<int> slim = slim_subset;
    std::sort(slim.begin(), slim.end());
    for (int v : slim)
        if (!h.is_slim(v)) throw std::invalid_argument("subset contains a non-slim vertex");

    std::set<int> fats;
    for (int v : slim)
        for (int f : h.fat_neighbors(v)) fats.insert(f);

    std::vector<int> vertices = slim;
    vertices.insert(vertices.end(), fats.begin(), fats.end());
    std::vector<std::pair<int, int>> edges;
    for (size_t i = 0; i < vertices.size(); ++i)
        for (size_t j = i + 1; j < vertices.size(); ++j)
            if (h.underlying().adjacent(vertices[i], vertices[j]))
                edges.emplace_back(int(i), int(j));
    return HoffmanGraph(int(slim.size()), int(fats.size()), edges);
}

Decomposition decompose(const HoffmanGraph& h) {
    auto sg = special_graph(h);
    std::vector<std::pair<int, int>> all_edges = sg.plus_edges;
    all_edges.insert(all_edges.end(), sg.minus_edges.begin(), sg.minus_edges.end());
    Graph skeleton(sg.n, all_edges);

    Decomposition result;
    for (auto& comp : components(skeleton)) {
        std::sort(comp.begin(), comp.end());
        result.slim_sets.push_back(comp);
    }
    std::sort(result.slim_sets.begin(), result.slim_sets.end(),
              [](const auto& a, const auto& b) { return a.front() < b.front(); });
    for (const auto& slim : result.slim_sets) {
        result.factors.push_back(generated_subgraph(h, slim));
        std::set<int> fats;
        for (int v : slim)
            for (int f : h.fat_neighbors(v)) fats.insert(f);
        result.fat_sets.emplace_back(fats.begin(), fats.end());
    }
    return result;
}

bool verify_sum(const HoffmanGraph& h, const std::vector<int>& part1,
                const std::vector<int>& part2) {
    auto validate = [&](const std::vector<int>& part) {
        std::set<int> set(part.begin(), part.end());
        if (set.size() != part.size()) throw std::invalid_argument("duplicate vertex in part");
        for (int v : part)
            if (v < 0 || v >= h.underlying().order())
                throw std::invalid_argument("part vertex out of range");
        // the induced subgraph must itself be a Hoffman graph
        for (int v : part) {
            if (!h.is_fat(v)) continue;
            bool has_slim = false;
            for (int u : part)
                if (h.is_slim(u) && h.underlying().adjacent(u, v)) has_slim = true;
            if (!has_slim)
                throw std::invalid_argument("part does not induce a Hoffman subgraph");
        }
        return set;
    };
    auto set1 = validate(part1);
    auto set2 = validate(part2);

    std::vector<int> slim1, slim2;
    for (int v : part1)
        if (h.is_slim(v)) slim1.push_back(v);
    for (int v : part2)
        if (h.is_slim(v)) slim2.push_back(v);
    if (slim1.empty() || slim2.empty()) return false;  // factors must be nonempty

    // slim parts partition the slim vertices
    std::set<int> slim_union(slim1.begin(), slim1.end());
    for (int v : slim2)
        if (!slim_union.insert(v).second) return false;
    if (int(slim_union.size()) != h.slim_count()) return false;

    // the two parts cover all of h
    std::set<int> cover(set1.begin(), set1.end());
    cover.insert(set2.begin(), set2.end());
    if (int(cover.size()) != h.underlying().order()) return false;

    // fat neighbors of a slim vertex stay inside its part
    auto closed = [&](const std::vector<int>& slim, const std::set<int>& set) {
        for (int v : slim)
            for (int f : h.fat_neighbors(v))
                if (!set.count(f)) return false;
        return true;
    };
    if (!closed(slim1, set1) || !closed(slim2, set2)) return false;

    // cross pairs: at most one common fat neighbor, exactly one iff adjacent
    for (int x : slim1)
        for (int y : slim2) {
            int common = h.common_fat_count(x, y);
            if (common > 1) return false;
            bool adjacent = h.underlying().adjacent(x, y);
            if (adjacent != (common == 1)) return false;
        }
    return true;
}

Graph quasi_clique(const HoffmanGraph& h, int fat_vertex) {
    if (!h.is_fat(fat_vertex) || fat_vertex >= h.underlying().order())
        throw std::invalid_argument("vertex is not fat");
    auto slim = h.slim_neighbors(fat_vertex);
    return induced_subgraph(h.underlying(), slim);
}

bool is_clique(const Graph& g) {
    for (int u = 0; u < g.order(); ++u)
        for (int v = u + 1; v < g.order(); ++v)
            if (!g.adjacent(u, v)) return false;
    return true;
}

bool all_quasi_cliques_are_cliques(const HoffmanGraph& h) {
    for (int f = h.slim_count(); f < h.underlying().order(); ++f)
        if (!is_clique(quasi_clique(h, f))) return false;
    return true;
}

namespace {

const std::vector<long long>& rep_vector(const std::map<int, std::vector<long long>>& vectors,
                                         int v, int dimension) {
    auto it = vectors.find(v);
    if (it == vectors.end()) throw std::invalid_argument("representation misses a vertex");
    if (it->second.size() != static_cast<size_t>(dimension))
        throw std::invalid_argument("vector dimension mismatch");
    return it->second;
}

long long dot(const std::vector<long long>& a, const std::vector<long long>& b) {
    long long sum = 0;
    for (size_t i = 0; i < a.size(); ++i) sum += a[i] * b[i];
    return sum;
}

}  // namespace

HoffmanVerifyReport verify_reduced_representation(const HoffmanGraph& h,
                                                  const ReducedRepresentation& psi, long long t) {
    HoffmanVerifyReport report;
    for (int x = 0; x < h.slim_count(); ++x) rep_vector(psi.vectors, x, psi.dimension);

    for (int x = 0; x < h.slim_count(); ++x)
        for (int y = x; y < h.slim_count(); ++y) {
            long long want;
            if (x == y) want = t - h.fat_degree(x);
            else if (h.underlying().adjacent(x, y)) want = 1 - h.common_fat_count(x, y);
            else want = -h.common_fat_count(x, y);
            long long got = dot(rep_vector(psi.vectors, x, psi.dimension),
                                rep_vector(psi.vectors, y, psi.dimension));
            if (got != want) {
                report.reason = x == y ? "norm violation" : "inner product violation";
                report.witness = {x, y};
                report.expected = want;
                report.actual = got;
                return report;
            }
        }
    report.pass = true;
    return report;
}

HoffmanVerifyReport verify_full_representation(const HoffmanGraph& h,
                                               const FullRepresentation& phi, long long t) {
    HoffmanVerifyReport report;
    int n = h.underlying().order();
    for (int x = 0; x < n; ++x) rep_vector(phi.vectors, x, phi.dimension);

    for (int x = 0; x < n; ++x)
        for (int y = x; y < n; ++y) {
            long long want;
            if (x == y) want = h.is_slim(x) ? t : 1;
            else want = h.underlying().adjacent(x, y) ? 1 : 0;
            long long got = dot(rep_vector(phi.vectors, x, phi.dimension),
                                rep_vector(phi.vectors, y, phi.dimension));
            if (got != want) {
                report.reason = x == y ? "norm violation" : "inner product violation";
                report.witness = {x, y};
                report.expected = want;
                report.actual = got;
                return report;
            }
        }
    report.pass = true;
    return report;
}

FullRepresentation reduced_to_full(const HoffmanGraph& h, const ReducedRepresentation& psi,
                                   long long t) {
    if (!verify_reduced_representation(h, psi, t).pass)
        throw std::invalid_argument("reduced representation does not verify");

    FullRepresentation phi;
    int n_fat = h.fat_count();
    phi.dimension = psi.dimension + n_fat;
    phi.norm = t;
    for (int x = 0; x < h.slim_count(); ++x) {
        std::vector<long long> vec = psi.vectors.at(x);
        vec.resize(phi.dimension, 0);
        for (int f : h.fat_neighbors(x)) vec[psi.dimension + (f - h.slim_count())] = 1;
        phi.vectors[x] = std::move(vec);
    }
    for (int f = h.slim_count(); f < h.underlying().order(); ++f) {
        std::vector<long long> vec(phi.dimension, 0);
        vec[psi.dimension + (f - h.slim_count())] = 1;
        phi.vectors[f] = std::move(vec);
    }
    if (!verify_full_representation(h, phi, t).pass)
        throw std::runtime_error("constructed full representation does not verify");
    return phi;
}

ReducedRepresentation full_to_reduced(const HoffmanGraph& h, const FullRepresentation& phi,
                                      long long t) {
    if (!verify_full_representation(h, phi, t).pass)
        throw std::invalid_argument("full representation does not verify");

    // Each fat vector must be a distinct unit coordinate.
    std::set<int> fat_coords;
    for (int f = h.slim_count(); f < h.underlying().order(); ++f) {
        const auto& vec = rep_vector(phi.vectors, f, phi.dimension);
        int coord = -1;
        for (int i = 0; i < phi.dimension; ++i) {
            if (vec[i] == 0) continue;
            if (vec[i] != 1 || coord != -1)
                throw std::invalid_argument("fat vector is not a unit coordinate");
            coord = i;
        }
        if (coord == -1 || !fat_coords.insert(coord).second)
            throw std::invalid_argument("fat vectors are not distinct unit coordinates");
    }

    ReducedRepresentation psi;
    psi.dimension = phi.dimension - int(fat_coords.size());
    psi.norm = t;
    for (int x = 0; x < h.slim_count(); ++x) {
        const auto& vec = phi.vectors.at(x);
        std::vector<long long> reduced;
        reduced.reserve(psi.dimension);
        for (int i = 0; i < phi.dimension; ++i)
            if (!fat_coords.count(i)) reduced.push_back(vec[i]);
        psi.vectors[x] = std::move(reduced);
    }
    if (!verify_reduced_representation(h, psi, t).pass)
        throw std::runtime_error("dropping fat coordinates did not yield a reduced representation");
    return psi;
}

Norm3Promise check_norm3_promise(const HoffmanGraph& h) {
    Norm3Promise promise;
    promise.fat = h.fat_count() > 0 && h.is_fat_hoffman();
    promise.indecomposable = decompose(h).factors.size() == 1;
    promise.eigenvalue_at_least_minus_3 = hoffman_smallest_eigenvalue(h) >= -3.0 - 1e-8;
    for (int x = 0; x < h.slim_count(); ++x)
        if (h.fat_degree(x) >= 2) promise.slim_vertex_with_two_fat_neighbors = true;
    return promise;
}

}  // namespace sesqui
