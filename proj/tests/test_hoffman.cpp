#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "sesqui/hoffman.hpp"
#include "sesqui/json_io.hpp"
#include "sesqui/representation.hpp"
#include "sesqui/spectra.hpp"

using namespace sesqui;

TEST_CASE("construction rules") {
    CHECK_NOTHROW(HoffmanGraph(1, 1, {{0, 1}}));
    CHECK_THROWS_AS(HoffmanGraph(1, 2, {{0, 1}, {0, 2}, {1, 2}}), std::invalid_argument);
    CHECK_THROWS_AS(HoffmanGraph(2, 1, {{0, 1}}), std::invalid_argument);  // isolated fat
    CHECK_THROWS_AS(HoffmanGraph(0, 1, {}), std::invalid_argument);
    CHECK_NOTHROW(hoffman_gallery("fig3"));
    CHECK_THROWS_AS(hoffman_gallery("fig4"), std::invalid_argument);
}

TEST_CASE("slim graphs") {
    auto fig3 = hoffman_gallery("fig3");
    auto slim = slim_graph(fig3);
    CHECK(slim.order() == 3);
    CHECK(slim.edge_count() == 3);  // a triangle

    auto c5 = disjoint_cycles({5});
    CHECK(slim_graph(all_slim(c5)) == c5);

    HoffmanGraph tiny(1, 1, {{0, 1}});
    CHECK(slim_graph(tiny).order() == 1);
}

TEST_CASE("special matrices") {
    auto fig3 = special_matrix(hoffman_gallery("fig3"));
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) CHECK(fig3[i][j] == (i == j ? -2 : -1));

    auto tiny = special_matrix(HoffmanGraph(1, 1, {{0, 1}}));
    CHECK(tiny[0][0] == -1);

    auto g = complete_multipartite(4, 3);
    auto sp = special_matrix(all_slim(g));
    for (int i = 0; i < 12; ++i)
        for (int j = 0; j < 12; ++j)
            CHECK(sp[i][j] == (g.adjacent(i, j) ? 1 : 0));
}

TEST_CASE("eigenvalues") {
    CHECK(hoffman_smallest_eigenvalue(hoffman_gallery("fig3")) == doctest::Approx(-4).epsilon(1e-9));
    CHECK(hoffman_smallest_eigenvalue(HoffmanGraph(1, 1, {{0, 1}})) == doctest::Approx(-1));
    CHECK(hoffman_smallest_eigenvalue(all_slim(complete_multipartite(4, 3))) ==
          doctest::Approx(-3).epsilon(1e-9));
}

TEST_CASE("special graphs") {
    auto fig3 = special_graph(hoffman_gallery("fig3"));
    CHECK(fig3.plus_edges.empty());
    CHECK(fig3.minus_edges.size() == 3);

    // adjacent slim pair sharing exactly one fat: no signed edge at all
    HoffmanGraph shared_one(2, 1, {{0, 1}, {0, 2}, {1, 2}});
    auto sg = special_graph(shared_one);
    CHECK(sg.plus_edges.empty());
    CHECK(sg.minus_edges.empty());

    auto c5 = disjoint_cycles({5});
    auto all_slim_sg = special_graph(all_slim(c5));
    CHECK(all_slim_sg.plus_edges == c5.edges());
    CHECK(all_slim_sg.minus_edges.empty());
}

TEST_CASE("decomposition") {
    CHECK(decompose(hoffman_gallery("fig3")).factors.size() == 1);

    HoffmanGraph shared_one(2, 1, {{0, 1}, {0, 2}, {1, 2}});
    auto d = decompose(shared_one);
    CHECK(d.factors.size() == 2);
    for (const auto& factor : d.factors) {
        CHECK(factor.slim_count() == 1);
        CHECK(factor.fat_count() == 1);
    }

    auto connected = all_slim(cycle_complement({4, 4}));
    CHECK(decompose(connected).factors.size() == 1);
}

TEST_CASE("verify_sum") {
    HoffmanGraph shared_one(2, 1, {{0, 1}, {0, 2}, {1, 2}});
    CHECK(verify_sum(shared_one, {0, 2}, {1, 2}));

    auto fig3 = hoffman_gallery("fig3");
    CHECK_FALSE(verify_sum(fig3, {0, 3, 4}, {1, 2, 3, 4}));

    // an empty part is not a decomposition
    CHECK_FALSE(verify_sum(fig3, {0, 1, 2, 3, 4}, {}));

    // a slim vertex separated from its fat neighbor is not a sum
    CHECK_FALSE(verify_sum(shared_one, {0, 2}, {1}));

    // a part whose fat vertex has no slim neighbor inside is not an
    // induced Hoffman subgraph
    CHECK_THROWS_AS(verify_sum(shared_one, {0, 1}, {2}), std::invalid_argument);
}

TEST_CASE("verify_sum is block-diagonality") {
    std::mt19937 rng(17);
    for (int trial = 0; trial < 60; ++trial) {
        int n_slim = 2 + int(rng() % 8);
        int n_fat = int(rng() % 4);
        std::vector<std::pair<int, int>> edges;
        for (int u = 0; u < n_slim; ++u)
            for (int v = u + 1; v < n_slim; ++v)
                if (rng() % 2) edges.emplace_back(u, v);
        for (int f = 0; f < n_fat; ++f) {
            bool hit = false;
            for (int u = 0; u < n_slim; ++u)
                if (rng() % 3 == 0) {
                    edges.emplace_back(u, n_slim + f);
                    hit = true;
                }
            if (!hit) edges.emplace_back(int(rng() % n_slim), n_slim + f);
        }
        HoffmanGraph h(n_slim, n_fat, edges);

        std::vector<int> slim1, slim2;
        for (int v = 0; v < n_slim; ++v) (rng() % 2 ? slim1 : slim2).push_back(v);
        if (slim1.empty() || slim2.empty()) continue;

        auto with_fats = [&](const std::vector<int>& slim) {
            std::vector<int> part = slim;
            for (int v : slim)
                for (int f : h.fat_neighbors(v))
                    if (std::find(part.begin(), part.end(), f) == part.end()) part.push_back(f);
            return part;
        };
        bool sum = verify_sum(h, with_fats(slim1), with_fats(slim2));

        auto sp = special_matrix(h);
        bool diagonal = true;
        for (int x : slim1)
            for (int y : slim2)
                if (sp[x][y] != 0) diagonal = false;
        CHECK(sum == diagonal);
    }
}

TEST_CASE("decomposition reassembles the special matrix") {
    std::mt19937 rng(19);
    for (int trial = 0; trial < 40; ++trial) {
        int n_slim = 1 + int(rng() % 10);
        int n_fat = int(rng() % 5);
        std::vector<std::pair<int, int>> edges;
        for (int u = 0; u < n_slim; ++u)
            for (int v = u + 1; v < n_slim; ++v)
                if (rng() % 3 == 0) edges.emplace_back(u, v);
        for (int f = 0; f < n_fat; ++f) {
            bool hit = false;
            for (int u = 0; u < n_slim; ++u)
                if (rng() % 3 == 0) {
                    edges.emplace_back(u, n_slim + f);
                    hit = true;
                }
            if (!hit) edges.emplace_back(int(rng() % n_slim), n_slim + f);
        }
        HoffmanGraph h(n_slim, n_fat, edges);
        auto sp = special_matrix(h);
        auto d = decompose(h);

        // factor blocks match the original entries; cross entries vanish
        for (size_t a = 0; a < d.slim_sets.size(); ++a) {
            auto block = special_matrix(d.factors[a]);
            for (size_t i = 0; i < d.slim_sets[a].size(); ++i)
                for (size_t j = 0; j < d.slim_sets[a].size(); ++j)
                    CHECK(block[i][j] == sp[d.slim_sets[a][i]][d.slim_sets[a][j]]);
            for (size_t b = a + 1; b < d.slim_sets.size(); ++b)
                for (int x : d.slim_sets[a])
                    for (int y : d.slim_sets[b]) CHECK(sp[x][y] == 0);
        }
    }
}

TEST_CASE("monotonicity under induced subgraphs") {
    std::mt19937 rng(29);
    for (int trial = 0; trial < 30; ++trial) {
        int n_slim = 2 + int(rng() % 19);
        int n_fat = int(rng() % 5);
        std::vector<std::pair<int, int>> edges;
        for (int u = 0; u < n_slim; ++u)
            for (int v = u + 1; v < n_slim; ++v)
                if (rng() % 2) edges.emplace_back(u, v);
        for (int f = 0; f < n_fat; ++f) {
            bool hit = false;
            for (int u = 0; u < n_slim; ++u)
                if (rng() % 3 == 0) {
                    edges.emplace_back(u, n_slim + f);
                    hit = true;
                }
            if (!hit) edges.emplace_back(int(rng() % n_slim), n_slim + f);
        }
        HoffmanGraph h(n_slim, n_fat, edges);
        double lambda = hoffman_smallest_eigenvalue(h);

        std::vector<int> subset;
        for (int v = 0; v < n_slim; ++v)
            if (rng() % 2) subset.push_back(v);
        if (subset.empty()) subset.push_back(0);
        CHECK(hoffman_smallest_eigenvalue(generated_subgraph(h, subset)) >= lambda - 1e-8);
    }
}

TEST_CASE("quasi-cliques") {
    auto fig3 = hoffman_gallery("fig3");
    CHECK(is_clique(quasi_clique(fig3, 3)));
    CHECK(is_clique(quasi_clique(fig3, 4)));
    CHECK(all_quasi_cliques_are_cliques(fig3));

    HoffmanGraph tiny(1, 1, {{0, 1}});
    CHECK(quasi_clique(tiny, 1).order() == 1);

    // fat adjacent to two non-adjacent slim vertices: not a clique
    HoffmanGraph vee(2, 1, {{0, 2}, {1, 2}});
    CHECK_FALSE(is_clique(quasi_clique(vee, 2)));
    CHECK_FALSE(all_quasi_cliques_are_cliques(vee));

    CHECK_THROWS_AS(quasi_clique(fig3, 0), std::invalid_argument);
}

TEST_CASE("reduced representations") {
    auto fig3 = hoffman_gallery("fig3");
    ReducedRepresentation psi;
    psi.dimension = 3;
    psi.norm = 4;
    psi.vectors[0] = {1, -1, 0};
    psi.vectors[1] = {0, 1, -1};
    psi.vectors[2] = {-1, 0, 1};
    CHECK(verify_reduced_representation(fig3, psi, 4).pass);

    // at norm 3 the same vectors fail, in line with the eigenvalue -4
    auto bad = verify_reduced_representation(fig3, psi, 3);
    CHECK_FALSE(bad.pass);
    CHECK(hoffman_smallest_eigenvalue(fig3) < -3.0);

    // all-slim: reduced verification is graph verification
    auto g = cycle_complement({4, 4});
    auto rep = rep_cycle_complement({4, 4});
    ReducedRepresentation slim_psi;
    slim_psi.dimension = rep.dimension;
    slim_psi.vectors = rep.vectors;
    CHECK(verify_reduced_representation(all_slim(g), slim_psi, 3).pass);
}

TEST_CASE("reduced to full") {
    auto fig3 = hoffman_gallery("fig3");
    ReducedRepresentation psi;
    psi.dimension = 3;
    psi.norm = 4;
    psi.vectors[0] = {1, -1, 0};
    psi.vectors[1] = {0, 1, -1};
    psi.vectors[2] = {-1, 0, 1};
    auto full = reduced_to_full(fig3, psi, 4);
    CHECK(full.dimension == 5);
    CHECK(verify_full_representation(fig3, full, 4).pass);

    // round trip through the canonical fat-coordinate form
    auto back = full_to_reduced(fig3, full, 4);
    CHECK(back.dimension == 3);
    CHECK(back.vectors == psi.vectors);

    // all-slim graphs pass through unchanged
    auto g = cycle_complement({4, 4});
    auto rep = rep_cycle_complement({4, 4});
    ReducedRepresentation slim_psi;
    slim_psi.dimension = rep.dimension;
    slim_psi.vectors = rep.vectors;
    auto slim_full = reduced_to_full(all_slim(g), slim_psi, 3);
    CHECK(slim_full.vectors == slim_psi.vectors);

    // 1 slim + 1 fat at norm 3
    HoffmanGraph tiny(1, 1, {{0, 1}});
    ReducedRepresentation tiny_psi;
    tiny_psi.dimension = 2;
    tiny_psi.vectors[0] = {1, 1};
    auto tiny_full = reduced_to_full(tiny, tiny_psi, 3);
    CHECK(tiny_full.vectors.at(0) == std::vector<long long>{1, 1, 1});
    CHECK(tiny_full.vectors.at(1) == std::vector<long long>{0, 0, 1});

    // unverified input throws
    ReducedRepresentation wrong;
    wrong.dimension = 2;
    wrong.vectors[0] = {1, 0};
    CHECK_THROWS_AS(reduced_to_full(tiny, wrong, 3), std::invalid_argument);
}

TEST_CASE("norm-3 promise hypotheses") {
    auto fig3 = check_norm3_promise(hoffman_gallery("fig3"));
    CHECK(fig3.fat);
    CHECK(fig3.indecomposable);
    CHECK_FALSE(fig3.eigenvalue_at_least_minus_3);
    CHECK_FALSE(fig3.promised());

    HoffmanGraph two_fats(1, 2, {{0, 1}, {0, 2}});
    auto promise = check_norm3_promise(two_fats);
    CHECK(promise.fat);
    CHECK(promise.indecomposable);
    CHECK(promise.eigenvalue_at_least_minus_3);
    CHECK(promise.slim_vertex_with_two_fat_neighbors);
    CHECK(promise.promised());

    auto slim_only = check_norm3_promise(all_slim(disjoint_cycles({5})));
    CHECK_FALSE(slim_only.fat);
    CHECK_FALSE(slim_only.promised());
}

TEST_CASE("hoffman json round trip") {
    auto fig3 = hoffman_gallery("fig3");
    auto j = to_json(fig3);
    CHECK(j.at("n_slim") == 3);
    CHECK(j.at("n_fat") == 2);
    auto back = hoffman_from_json(j);
    CHECK(back.underlying() == fig3.underlying());
    CHECK(back.slim_count() == 3);
}
