#include "sesqui/reference.hpp"

#include <algorithm>
#include <numeric>

namespace sesqui::reference {

namespace {

bool brute_extend(const Graph& g, int v, int used,
                  std::vector<std::vector<long long>>& vecs) {
    int n = g.order();
    if (v == n) return true;
    int cap = 3 * n;
    int limit = std::min(used + 3, cap);

    for (int i = 0; i < limit; ++i)
        for (int j = i + 1; j < limit; ++j)
            for (int k = j + 1; k < limit; ++k) {
                // fresh coordinates form a suffix of the sorted triple and
                // must be the next unused indices in order
                std::array<int, 3> support = {i, j, k};
                int fresh = 0;
                bool canonical = true;
                for (int coord : support)
                    if (coord >= used) {
                        if (coord != used + fresh) canonical = false;
                        ++fresh;
                    }
                if (!canonical) continue;

                for (int mask = 0; mask < 8; ++mask) {
                    bool skip = false;
                    for (int b = 0; b < 3; ++b)
                        if (((mask >> b) & 1) && support[b] >= used) skip = true;  // fresh is +1
                    if (skip) continue;

                    std::vector<long long> candidate(cap, 0);
                    for (int b = 0; b < 3; ++b)
                        candidate[support[b]] = ((mask >> b) & 1) ? -1 : 1;

                    bool ok = true;
                    for (int w = 0; w < v && ok; ++w) {
                        long long sum = 0;
                        for (int c = 0; c < cap; ++c) sum += candidate[c] * vecs[w][c];
                        if (sum != (g.adjacent(v, w) ? 1 : 0)) ok = false;
                    }
                    if (!ok) continue;

                    vecs[v] = candidate;
                    if (brute_extend(g, v + 1, used + fresh, vecs)) return true;
                }
            }
    return false;
}

}  // namespace

BruteNorm3Result brute_norm3(const Graph& g) {
    int n = g.order();
    std::vector<std::vector<long long>> vecs(n, std::vector<long long>(3 * n, 0));
    BruteNorm3Result result;
    if (!brute_extend(g, 0, 0, vecs)) return result;

    int dim = 0;
    for (const auto& vec : vecs)
        for (int c = 0; c < 3 * n; ++c)
            if (vec[c] != 0) dim = std::max(dim, c + 1);
    result.found = true;
    result.dimension = dim;
    for (int v = 0; v < n; ++v)
        result.vectors[v] = std::vector<long long>(vecs[v].begin(), vecs[v].begin() + dim);
    return result;
}

std::optional<std::vector<int>> isomorphism_by_permutations(const Graph& a, const Graph& b) {
    if (a.order() != b.order()) return std::nullopt;
    int n = a.order();
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    do {
        bool ok = true;
        for (int u = 0; u < n && ok; ++u)
            for (int v = u + 1; v < n && ok; ++v)
                if (a.adjacent(u, v) != b.adjacent(perm[u], perm[v])) ok = false;
        if (ok) return perm;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return std::nullopt;
}

long long determinant3(const std::array<std::array<long long, 3>, 3>& m) {
    return m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) -
           m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0]) +
           m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]);
}

}  // namespace sesqui::reference
