#include "sesqui/steiner.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace sesqui {

bool sts_admissible(int v) {
    if (v < 1) throw std::invalid_argument("point count must be positive");
    return v % 6 == 1 || v % 6 == 3;
}

namespace {

std::array<int, 3> sorted_block(int a, int b, int c) {
    std::array<int, 3> block = {a, b, c};
    std::sort(block.begin(), block.end());
    return block;
}

// v = 6t+3. Points (x,i) with x in Z_{2t+1}, level i in {0,1,2}, numbered
// i*(2t+1)+x. The quasigroup x*y = (x+y)(t+1) mod 2t+1 is idempotent and
// commutative.
TripleSystem bose(int v) {
    int t = (v - 3) / 6;
    int q = 2 * t + 1;
    auto point = [q](int x, int i) { return i * q + x; };
    auto mul = [q, t](int x, int y) { return int((long long)(x + y) * (t + 1) % q); };

    TripleSystem sys;
    sys.v = v;
    for (int x = 0; x < q; ++x)
        sys.blocks.push_back(sorted_block(point(x, 0), point(x, 1), point(x, 2)));
    for (int x = 0; x < q; ++x)
        for (int y = x + 1; y < q; ++y)
            for (int i = 0; i < 3; ++i)
                sys.blocks.push_back(
                    sorted_block(point(x, i), point(y, i), point(mul(x, y), (i + 1) % 3)));
    return sys;
}

// v = 6t+1. Points (x,i) with x in Z_{2t} numbered i*2t+x, plus an extra
// point v-1. The half-idempotent quasigroup maps x+y to its "half": even
// sums s to s/2, odd sums s to t+(s-1)/2, so x*x = x exactly for x < t.
TripleSystem skolem(int v) {
    if (v == 1) return TripleSystem{1, {}};
    int t = (v - 1) / 6;
    int q = 2 * t;
    int infinity = v - 1;
    auto point = [q](int x, int i) { return i * q + x; };
    auto mul = [q, t](int x, int y) {
        int s = (x + y) % q;
        return s % 2 == 0 ? s / 2 : t + (s - 1) / 2;
    };

    TripleSystem sys;
    sys.v = v;
    for (int x = 0; x < t; ++x)
        sys.blocks.push_back(sorted_block(point(x, 0), point(x, 1), point(x, 2)));
    for (int x = 0; x < t; ++x) {
        sys.blocks.push_back(sorted_block(infinity, point(t + x, 0), point(x, 1)));
        sys.blocks.push_back(sorted_block(infinity, point(t + x, 1), point(x, 2)));
        sys.blocks.push_back(sorted_block(infinity, point(t + x, 2), point(x, 0)));
    }
    for (int x = 0; x < q; ++x)
        for (int y = x + 1; y < q; ++y)
            for (int i = 0; i < 3; ++i)
                sys.blocks.push_back(
                    sorted_block(point(x, i), point(y, i), point(mul(x, y), (i + 1) % 3)));
    return sys;
}

}  // namespace

TripleSystem construct_sts(int v) {
    if (!sts_admissible(v)) throw std::invalid_argument("no triple system exists for this order");
    TripleSystem sys = (v % 6 == 3) ? bose(v) : skolem(v);
    std::sort(sys.blocks.begin(), sys.blocks.end());
    return sys;
}

StsReport verify_sts(const TripleSystem& t) {
    StsReport report;
    if (t.v < 1) {
        report.reason = "point count must be positive";
        return report;
    }
    for (const auto& block : t.blocks) {
        if (block[0] == block[1] || block[1] == block[2] || block[0] == block[2]) {
            report.reason = "block with repeated point";
            return report;
        }
        for (int p : block)
            if (p < 0 || p >= t.v) {
                report.reason = "block point out of range";
                return report;
            }
    }
    std::map<std::pair<int, int>, int> coverage;
    for (const auto& block : t.blocks)
        for (int i = 0; i < 3; ++i)
            for (int j = i + 1; j < 3; ++j) {
                int a = std::min(block[i], block[j]);
                int b = std::max(block[i], block[j]);
                ++coverage[{a, b}];
            }
    for (int a = 0; a < t.v; ++a)
        for (int b = a + 1; b < t.v; ++b) {
            auto it = coverage.find({a, b});
            int count = it == coverage.end() ? 0 : it->second;
            if (count != 1) {
                report.reason = "pair covered " + std::to_string(count) + " times";
                report.witness_pair = {a, b};
                report.coverage = count;
                return report;
            }
        }
    report.pass = true;
    return report;
}

Graph block_graph(const TripleSystem& t) {
    if (!verify_sts(t).pass) throw std::invalid_argument("input is not a Steiner triple system");
    int n = int(t.blocks.size());
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            int shared = 0;
            for (int p : t.blocks[i])
                for (int q : t.blocks[j])
                    if (p == q) ++shared;
            if (shared == 1) edges.emplace_back(i, j);
        }
    return Graph(n, edges);
}

SrgParams sts_srg_params(int v) {
    if (!sts_admissible(v) || v < 7)
        throw std::invalid_argument("parameters need an admissible order of at least 7");
    return SrgParams{v * (v - 1) / 6, 3 * (v - 3) / 2, (v + 3) / 2, 9};
}

IntegralRepresentation canonical_block_representation(const TripleSystem& t) {
    if (!verify_sts(t).pass) throw std::invalid_argument("input is not a Steiner triple system");
    IntegralRepresentation r;
    r.dimension = t.v;
    r.scale = 1;
    r.target_norm = 3;
    for (int i = 0; i < int(t.blocks.size()); ++i) {
        std::vector<long long> vec(t.v, 0);
        for (int p : t.blocks[i]) vec[p] = 1;
        r.vectors[i] = std::move(vec);
    }
    return r;
}

}  // namespace sesqui
