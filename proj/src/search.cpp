#include "sesqui/search.hpp"

#include <algorithm>
#include <cmath>
#include <queue>
#include <set>
#include <stdexcept>

#include "sesqui/spectra.hpp"

namespace sesqui {

const char* to_string(SearchOutcome::Status status) {
    switch (status) {
        case SearchOutcome::Status::Found: return "found";
        case SearchOutcome::Status::NotRepresentable: return "not_representable";
        case SearchOutcome::Status::Exhausted: return "exhausted";
        case SearchOutcome::Status::BudgetExceeded: return "budget_exceeded";
    }
    return "unknown";
}

namespace {

// Exact witness that A + 3I is not positive semidefinite: an integer vector
// with negative quadratic form, obtained by rounding a scaled eigenvector.
bool certify_below_minus_three(const Graph& g) {
    auto sys = eigen_sym(adjacency_matrix(g));
    if (sys.values.front() >= -3.0 - 1e-6) return false;
    const auto& ev = sys.vectors.front();
    int n = g.order();
    for (long long scale : {16LL, 256LL, 4096LL, 65536LL}) {
        std::vector<long long> w(n);
        for (int i = 0; i < n; ++i) w[i] = std::llround(scale * ev[i]);
        long long q = 0;
        for (int i = 0; i < n; ++i) {
            q += 3 * w[i] * w[i];
            for (int j = 0; j < n; ++j)
                if (g.adjacent(i, j)) q += w[i] * w[j];
        }
        if (q < 0) return true;
    }
    return false;
}

std::vector<int> bfs_order_from_max_degree(const Graph& g) {
    int start = 0;
    for (int v = 1; v < g.order(); ++v)
        if (g.degree(v) > g.degree(start)) start = v;
    std::vector<int> order;
    std::vector<char> seen(g.order(), 0);
    std::queue<int> q;
    q.push(start);
    seen[start] = 1;
    while (!q.empty()) {
        int u = q.front();
        q.pop();
        order.push_back(u);
        for (int v = 0; v < g.order(); ++v)
            if (g.adjacent(u, v) && !seen[v]) {
                seen[v] = 1;
                q.push(v);
            }
    }
    return order;
}

struct Searcher {
    const Graph& g;
    std::vector<int> order;                      // vertex processed at each depth
    std::vector<std::array<int, 3>> coords;      // per depth: support coordinates
    std::vector<std::array<int, 3>> signs;       // per depth: matching signs
    int used_coords = 0;
    int max_coords;
    long long budget;
    long long nodes = 0;
    bool out_of_budget = false;
    bool found = false;

    explicit Searcher(const Graph& graph, long long node_budget)
        : g(graph),
          order(bfs_order_from_max_degree(graph)),
          max_coords(3 * graph.order()),
          budget(node_budget) {
        coords.resize(graph.order());
        signs.resize(graph.order());
    }

    long long partial_inner(size_t depth, const std::array<int, 3>& c,
                            const std::array<int, 3>& s) const {
        long long sum = 0;
        for (int a = 0; a < 3; ++a)
            for (int b = 0; b < 3; ++b)
                if (coords[depth][a] == c[b]) sum += signs[depth][a] * s[b];
        return sum;
    }

    bool consistent(size_t depth, const std::array<int, 3>& c, const std::array<int, 3>& s) const {
        int u = order[depth];
        for (size_t d = 0; d < depth; ++d) {
            long long want = g.adjacent(u, order[d]) ? 1 : 0;
            if (partial_inner(d, c, s) != want) return false;
        }
        return true;
    }

    // Enumerates signed supports for the vertex at `depth`: any mix of
    // already-used coordinates (either sign) and fresh ones, where fresh
    // coordinates take the next free indices with sign +1.
    bool assign(size_t depth) {
        if (depth == order.size()) {
            found = true;
            return true;
        }
        int reuse_limit = used_coords;
        std::array<int, 3> c{}, s{};

        // how many existing coordinates the support reuses: 3, 2, 1 or 0
        for (int reused = std::min(3, reuse_limit); reused >= 0; --reused) {
            int fresh = 3 - reused;
            if (used_coords + fresh > max_coords) continue;
            std::vector<int> pick(reused);
            // iterate over `reused`-subsets of 0..reuse_limit-1
            for (int i = 0; i < reused; ++i) pick[i] = i;
            bool more = reused >= 0;
            while (more) {
                for (int mask = 0; mask < (1 << reused); ++mask) {
                    for (int i = 0; i < reused; ++i) {
                        c[i] = pick[i];
                        s[i] = (mask >> i) & 1 ? -1 : 1;
                    }
                    for (int i = 0; i < fresh; ++i) {
                        c[reused + i] = used_coords + i;
                        s[reused + i] = 1;
                    }
                    if (++nodes > budget) {
                        out_of_budget = true;
                        return false;
                    }
                    if (!consistent(depth, c, s)) continue;
                    coords[depth] = c;
                    signs[depth] = s;
                    used_coords += fresh;
                    if (assign(depth + 1)) return true;
                    if (out_of_budget) return false;
                    used_coords -= fresh;
                }
                // next subset in lexicographic order
                int i = reused - 1;
                while (i >= 0 && pick[i] == reuse_limit - reused + i) --i;
                if (i < 0) break;
                ++pick[i];
                for (int j = i + 1; j < reused; ++j) pick[j] = pick[j - 1] + 1;
                if (reused == 0) break;
            }
        }
        return false;
    }
};

}  // namespace

SearchOutcome find_norm3_representation(const Graph& g, long long budget) {
    if (budget <= 0) throw std::invalid_argument("budget must be positive");
    if (!is_connected(g)) throw std::invalid_argument("graph must be connected");

    SearchOutcome outcome;
    if (certify_below_minus_three(g)) {
        outcome.status = SearchOutcome::Status::NotRepresentable;
        return outcome;
    }

    Searcher searcher(g, budget);
    searcher.assign(0);
    outcome.node_count = searcher.nodes;
    if (searcher.found) {
        IntegralRepresentation r;
        r.dimension = searcher.used_coords;
        r.scale = 1;
        r.target_norm = 3;
        for (size_t d = 0; d < searcher.order.size(); ++d) {
            std::vector<long long> vec(r.dimension, 0);
            for (int i = 0; i < 3; ++i) vec[searcher.coords[d][i]] = searcher.signs[d][i];
            r.vectors[searcher.order[d]] = std::move(vec);
        }
        if (!verify_integrable(g, r, 1).pass)
            throw std::runtime_error("search produced an unverified representation");
        outcome.status = SearchOutcome::Status::Found;
        outcome.representation = std::move(r);
    } else if (searcher.out_of_budget) {
        outcome.status = SearchOutcome::Status::BudgetExceeded;
    } else {
        outcome.status = SearchOutcome::Status::Exhausted;
    }
    return outcome;
}

TripleSystem sts_from_representation(const Graph& g, const IntegralRepresentation& r) {
    if (!is_connected(g)) throw std::invalid_argument("graph must be connected");
    if (!verify_integrable(g, r, 1).pass)
        throw std::invalid_argument("representation is not verified at scale 1");
    auto mates = detect_mates(r);
    if (!mates.S.empty()) throw std::invalid_argument("S is nonempty: representation contains mates");

    auto classification = classify_regularity(g);
    if (!classification.sesqui || !classification.sesqui->c)
        throw std::invalid_argument("graph is not sesqui-regular");
    int c = *classification.sesqui->c;
    int k = classification.sesqui->k;
    if (c < 9 || c > k - 2)
        throw std::invalid_argument("sesqui parameters must satisfy k-2 >= c >= 9");

    auto profile = support_profile(r);
    std::set<int> coordinates;
    for (const auto& [v, support] : profile.supports) {
        (void)v;
        coordinates.insert(support.begin(), support.end());
    }
    std::map<int, int> renumber;
    int next = 0;
    for (int coord : coordinates) renumber[coord] = next++;

    TripleSystem sys;
    sys.v = next;
    for (const auto& [v, support] : profile.supports) {
        (void)v;
        std::array<int, 3> block = {renumber[support[0]], renumber[support[1]],
                                    renumber[support[2]]};
        std::sort(block.begin(), block.end());
        sys.blocks.push_back(block);
    }
    std::sort(sys.blocks.begin(), sys.blocks.end());

    if (!verify_sts(sys).pass)
        throw std::runtime_error("reconstructed supports do not form a Steiner triple system");

    Graph reconstructed = block_graph(sys);
    if (g.order() <= 40) {
        if (!find_isomorphism(reconstructed, g))
            throw std::runtime_error("reconstructed block graph is not isomorphic to the input");
    } else {
        auto check = classify_regularity(reconstructed);
        bool params_match = check.srg && classification.srg &&
                            check.srg->n == classification.srg->n &&
                            check.srg->k == classification.srg->k &&
                            check.srg->a == classification.srg->a &&
                            check.srg->c == classification.srg->c;
        auto spec_a = eigenvalues_sym(adjacency_matrix(reconstructed));
        auto spec_b = eigenvalues_sym(adjacency_matrix(g));
        bool spectrum_match = spec_a.size() == spec_b.size();
        for (size_t i = 0; spectrum_match && i < spec_a.size(); ++i)
            spectrum_match = std::abs(spec_a[i] - spec_b[i]) < 1e-6;
        if (!params_match || !spectrum_match)
            throw std::runtime_error("reconstructed block graph does not match the input");
    }
    return sys;
}

}  // namespace sesqui
