#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "sesqui/graph.hpp"
#include "sesqui/json_io.hpp"
#include "sesqui/reference.hpp"

using namespace sesqui;

TEST_CASE("graph construction") {
    Graph triangle(3, {{0, 1}, {1, 2}, {2, 0}});
    CHECK(triangle.edge_count() == 3);
    CHECK(triangle.adjacent(0, 2));

    Graph single(1, {});
    CHECK(single.order() == 1);
    CHECK(single.degree(0) == 0);

    Graph duplicated(4, {{0, 1}, {0, 1}});
    CHECK(duplicated.edge_count() == 1);

    CHECK_THROWS_AS(Graph(3, {{0, 3}}), std::invalid_argument);
    CHECK_THROWS_AS(Graph(3, {{1, 1}}), std::invalid_argument);
    CHECK_THROWS_AS(Graph(0, {}), std::invalid_argument);
}

TEST_CASE("complement basics") {
    Graph k3(3, {{0, 1}, {1, 2}, {2, 0}});
    CHECK(complement(k3).edge_count() == 0);

    auto c5 = disjoint_cycles({5});
    CHECK(find_isomorphism(complement(c5), c5).has_value());

    CHECK(complement(disjoint_cycles({3, 3, 3, 3})) == complete_multipartite(4, 3));
}

TEST_CASE("complement is an involution") {
    std::mt19937 rng(7);
    for (int trial = 0; trial < 30; ++trial) {
        int n = 1 + int(rng() % 12);
        std::vector<std::pair<int, int>> edges;
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v)
                if (rng() % 2) edges.emplace_back(u, v);
        Graph g(n, edges);
        CHECK(complement(complement(g)) == g);
    }
}

TEST_CASE("cycle families") {
    auto two_squares = disjoint_cycles({4, 4});
    CHECK(two_squares.order() == 8);
    CHECK(two_squares.edge_count() == 8);
    for (int v = 0; v < 8; ++v) CHECK(two_squares.degree(v) == 2);

    auto mixed = disjoint_cycles({4, 5});
    CHECK(mixed.order() == 9);
    CHECK(components(mixed).size() == 2);

    CHECK_THROWS_AS(disjoint_cycles({2}), std::invalid_argument);

    auto cc = cycle_complement({4, 4});
    for (int v = 0; v < 8; ++v) CHECK(cc.degree(v) == 5);

    CHECK(cycle_complement({3, 3}) == complete_multipartite(2, 3));

    auto c7bar = cycle_complement({7});
    CHECK(c7bar.order() == 7);
    CHECK(is_connected(c7bar));
    for (int v = 0; v < 7; ++v) CHECK(c7bar.degree(v) == 4);
}

TEST_CASE("complete multipartite and cubes") {
    auto k43 = complete_multipartite(4, 3);
    CHECK(k43.order() == 12);
    for (int v = 0; v < 12; ++v) CHECK(k43.degree(v) == 9);

    CHECK(complete_multipartite(5, 1) == Graph(5, {{0, 1}, {0, 2}, {0, 3}, {0, 4},
                                                   {1, 2}, {1, 3}, {1, 4},
                                                   {2, 3}, {2, 4}, {3, 4}}));
    CHECK(complete_multipartite(1, 4).edge_count() == 0);
    CHECK_THROWS_AS(complete_multipartite(0, 3), std::invalid_argument);

    auto cube = hypercube(3);
    CHECK(cube.order() == 8);
    for (int v = 0; v < 8; ++v) CHECK(cube.degree(v) == 3);
    CHECK(diameter(cube) == 3);

    CHECK(hypercube(1).edge_count() == 1);
    CHECK(find_isomorphism(hypercube(2), disjoint_cycles({4})).has_value());
    CHECK_THROWS_AS(hypercube(0), std::invalid_argument);
}

TEST_CASE("gallery fixtures") {
    auto a = gallery("fig1a");
    CHECK(a.order() == 5);
    CHECK(a.edge_count() == 5);

    auto b = gallery("fig1b");
    CHECK(b.order() == 5);
    CHECK(b.edge_count() == 6);
    // K_{2,3}
    Graph k23(5, {{0, 3}, {0, 4}, {1, 3}, {1, 4}, {2, 3}, {2, 4}});
    CHECK(find_isomorphism(b, k23).has_value());

    auto t = gallery("fig2");
    CHECK(t.order() == 8);
    CHECK(t.edge_count() == 7);
    CHECK(is_connected(t));

    CHECK_THROWS_AS(gallery("fig9"), std::invalid_argument);
}

TEST_CASE("distances") {
    auto cube = hypercube(3);
    auto d = distances(cube);
    CHECK(d[0][7] == 3);

    CHECK(diameter(complete_multipartite(4, 3)) == 2);

    auto split = disjoint_cycles({3, 3});
    CHECK(distances(split)[0][4] == kUnreachable);
    CHECK(!diameter(split).has_value());
}

TEST_CASE("distance matrix properties") {
    std::mt19937 rng(11);
    for (int trial = 0; trial < 25; ++trial) {
        int n = 2 + int(rng() % 10);
        std::vector<std::pair<int, int>> edges;
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v)
                if (rng() % 3 == 0) edges.emplace_back(u, v);
        Graph g(n, edges);
        auto d = distances(g);
        for (int u = 0; u < n; ++u)
            for (int v = 0; v < n; ++v) {
                CHECK(d[u][v] == d[v][u]);
                CHECK((d[u][v] == 1) == g.adjacent(u, v));
                for (int w = 0; w < n; ++w) {
                    if (d[u][w] == kUnreachable || d[w][v] == kUnreachable) continue;
                    CHECK(d[u][v] != kUnreachable);
                    CHECK(d[u][v] <= d[u][w] + d[w][v]);
                }
            }
    }
}

TEST_CASE("classification") {
    auto report = classify_regularity(cycle_complement({4, 4}));
    REQUIRE(report.sesqui.has_value());
    CHECK(report.sesqui->n == 8);
    CHECK(report.sesqui->k == 5);
    CHECK(report.sesqui->c == 4);
    CHECK_FALSE(report.srg.has_value());  // adjacent counts vary

    auto cube_report = classify_regularity(hypercube(3));
    REQUIRE(cube_report.sesqui.has_value());
    CHECK(cube_report.sesqui->n == 8);
    CHECK(cube_report.sesqui->k == 3);
    CHECK(cube_report.sesqui->c == 2);
    CHECK_FALSE(cube_report.srg.has_value());  // diameter 3

    auto k4_report = classify_regularity(complete_multipartite(4, 1));
    REQUIRE(k4_report.srg.has_value());
    CHECK(k4_report.srg->a == 2);
    CHECK_FALSE(k4_report.srg->c.has_value());  // no non-adjacent pairs

    auto split = classify_regularity(disjoint_cycles({3, 3}));
    CHECK(split.regular == 2);
    CHECK_FALSE(split.connected);
    CHECK_FALSE(split.sesqui.has_value());
    CHECK(split.note == "disconnected");

    auto star = classify_regularity(Graph(4, {{0, 1}, {0, 2}, {0, 3}}));
    CHECK_FALSE(star.regular.has_value());
    CHECK_FALSE(star.sesqui.has_value());
}

TEST_CASE("multipartite families are sesqui-regular with c = k") {
    for (int m = 2; m <= 8; ++m) {
        auto report = classify_regularity(complete_multipartite(m, 3));
        REQUIRE(report.sesqui.has_value());
        CHECK(report.sesqui->n == 3 * m);
        CHECK(report.sesqui->k == 3 * (m - 1));
        CHECK(report.sesqui->c == 3 * (m - 1));
    }
}

TEST_CASE("cycle complements are sesqui-regular with c = k - 1") {
    std::vector<std::vector<int>> lists = {{4, 4}, {4, 5}, {5, 5}, {4, 4, 4},
                                           {7}, {8}, {4, 4, 4, 4}, {5, 6, 7}};
    for (const auto& lengths : lists) {
        int n = 0;
        for (int len : lengths) n += len;
        REQUIRE(n <= 20);
        auto report = classify_regularity(cycle_complement(lengths));
        REQUIRE(report.sesqui.has_value());
        CHECK(report.sesqui->n == n);
        CHECK(report.sesqui->k == n - 3);
        CHECK(report.sesqui->c == n - 4);
    }
}

TEST_CASE("isomorphism checker against permutation oracle") {
    std::mt19937 rng(23);
    for (int trial = 0; trial < 40; ++trial) {
        int n = 2 + int(rng() % 6);
        std::vector<std::pair<int, int>> edges;
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v)
                if (rng() % 2) edges.emplace_back(u, v);
        Graph a(n, edges);

        std::vector<int> perm(n);
        for (int i = 0; i < n; ++i) perm[i] = i;
        std::shuffle(perm.begin(), perm.end(), rng);
        std::vector<std::pair<int, int>> mapped;
        for (auto [u, v] : edges) mapped.emplace_back(perm[u], perm[v]);
        Graph b(n, mapped);

        CHECK(find_isomorphism(a, b).has_value() ==
              reference::isomorphism_by_permutations(a, b).has_value());
        CHECK(find_isomorphism(a, b).has_value());

        // tweak one potential edge and compare verdicts again
        int u = int(rng() % n), v = int(rng() % n);
        if (u != v) {
            auto tweaked = mapped;
            std::pair<int, int> e{std::min(perm[u], perm[v]), std::max(perm[u], perm[v])};
            auto it = std::find(tweaked.begin(), tweaked.end(), e);
            if (it == tweaked.end()) tweaked.push_back(e);
            else tweaked.erase(it);
            Graph c(n, tweaked);
            CHECK(find_isomorphism(a, c).has_value() ==
                  reference::isomorphism_by_permutations(a, c).has_value());
        }
    }
}

TEST_CASE("formats round trip") {
    auto g = cycle_complement({4, 5});
    auto j = to_json(g);
    CHECK(graph_from_json(j) == g);

    CHECK(from_edge_list(to_edge_list(g)) == g);

    auto dot = to_dot(g);
    CHECK(dot.find("graph g {") == 0);
    CHECK(dot.find("0 -- ") != std::string::npos);

    CHECK_THROWS_AS(graph_from_json(json::parse("{\"edges\": []}")), std::invalid_argument);
}
