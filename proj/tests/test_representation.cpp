#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "sesqui/json_io.hpp"
#include "sesqui/representation.hpp"
#include "sesqui/spectra.hpp"
#include "sesqui/steiner.hpp"

using namespace sesqui;

namespace {

IntegralRepresentation single_vertex_rep() {
    IntegralRepresentation r;
    r.dimension = 3;
    r.vectors[0] = {1, 1, 1};
    return r;
}

IntegralRepresentation mate_pair_rep() {
    IntegralRepresentation r;
    r.dimension = 3;
    r.vectors[0] = {1, 1, 1};
    r.vectors[1] = {1, 1, -1};
    return r;
}

}  // namespace

TEST_CASE("verify_integrable") {
    Graph k1(1, {});
    CHECK(verify_integrable(k1, single_vertex_rep(), 1).pass);

    auto g = cycle_complement({4, 4});
    CHECK(verify_integrable(g, rep_cycle_complement({4, 4}), 1).pass);

    // norm-2 vectors on a 5-cycle fail: the target here is 3
    auto c5 = disjoint_cycles({5});
    IntegralRepresentation norm2;
    norm2.dimension = 5;
    for (int i = 0; i < 5; ++i) {
        std::vector<long long> vec(5, 0);
        vec[i] = 1;
        vec[(i + 1) % 5] = 1;
        norm2.vectors[i] = std::move(vec);
    }
    auto report = verify_integrable(c5, norm2, 1);
    CHECK_FALSE(report.pass);
    CHECK(report.reason == "norm violation");
    CHECK(report.expected == 3);
    CHECK(report.actual == 2);

    // but they are a perfectly good norm-2 representation
    CHECK(verify_integrable(c5, norm2, 1, 2).pass);

    IntegralRepresentation missing;
    missing.dimension = 3;
    CHECK_THROWS_AS(verify_integrable(k1, missing, 1), std::invalid_argument);
}

TEST_CASE("gram matrices") {
    auto sys = construct_sts(9);
    auto g = block_graph(sys);
    auto gram = gram_matrix(canonical_block_representation(sys));
    for (int i = 0; i < g.order(); ++i)
        for (int j = 0; j < g.order(); ++j)
            CHECK(gram[i][j] == (i == j ? 3 : (g.adjacent(i, j) ? 1 : 0)));

    auto single = gram_matrix(single_vertex_rep());
    CHECK(single.size() == 1);
    CHECK(single[0][0] == 3);

    auto mates = gram_matrix(mate_pair_rep());
    CHECK(mates[0][0] == 3);
    CHECK(mates[0][1] == 1);
    CHECK(mates[1][0] == 1);
    CHECK(mates[1][1] == 3);
}

TEST_CASE("support profiles") {
    IntegralRepresentation r;
    r.dimension = 5;
    r.vectors[0] = {0, 1, -1, 0, 1};  // e1 - e2 + e4 in index terms
    auto profile = support_profile(r);
    CHECK(profile.supports.at(0) == std::array<int, 3>{1, 2, 4});
    CHECK(profile.signs.at(0).at(1) == 1);
    CHECK(profile.signs.at(0).at(2) == -1);
    CHECK(profile.signs.at(0).at(4) == 1);

    auto all_plus = support_profile(single_vertex_rep());
    CHECK(all_plus.supports.at(0) == std::array<int, 3>{0, 1, 2});

    // zero padding leaves the support alone
    IntegralRepresentation padded;
    padded.dimension = 9;
    padded.vectors[0] = {0, 1, -1, 0, 1, 0, 0, 0, 0};
    CHECK(support_profile(padded).supports.at(0) == std::array<int, 3>{1, 2, 4});

    IntegralRepresentation bad;
    bad.dimension = 3;
    bad.vectors[0] = {2, 1, 0};
    CHECK_THROWS_AS(support_profile(bad), std::invalid_argument);
}

TEST_CASE("support laws") {
    auto sys = construct_sts(13);
    auto g = block_graph(sys);
    auto rep = canonical_block_representation(sys);
    auto law = check_support_laws(g, rep);
    CHECK(law.pass);
    CHECK(law.adjacent_histogram.size() == 1);
    CHECK(law.adjacent_histogram.count(1) == 1);
    CHECK(law.nonadjacent_histogram.size() == 1);
    CHECK(law.nonadjacent_histogram.count(0) == 1);

    Graph k2(2, {{0, 1}});
    auto mate_law = check_support_laws(k2, mate_pair_rep());
    CHECK(mate_law.pass);
    CHECK(mate_law.adjacent_histogram.at(3) == 1);

    auto cc = cycle_complement({4, 4});
    auto cc_law = check_support_laws(cc, rep_cycle_complement({4, 4}));
    CHECK(cc_law.pass);
    CHECK(cc_law.adjacent_histogram.size() == 1);
    CHECK(cc_law.adjacent_histogram.count(1) == 1);
    CHECK(cc_law.nonadjacent_histogram.size() == 1);
    CHECK(cc_law.nonadjacent_histogram.count(2) == 1);

    // unverified input is rejected
    CHECK_THROWS_AS(check_support_laws(cycle_complement({4, 5}), rep_cycle_complement({4, 4})),
                    std::exception);
}

TEST_CASE("mates") {
    auto mates = detect_mates(mate_pair_rep());
    CHECK(mates.S == std::vector<int>{0, 1});
    CHECK(mates.mate.at(0) == 1);
    CHECK(mates.mate.at(1) == 0);

    CHECK(detect_mates(canonical_block_representation(construct_sts(13))).S.empty());
    CHECK(detect_mates(single_vertex_rep()).S.empty());

    IntegralRepresentation triple;
    triple.dimension = 3;
    triple.vectors[0] = {1, 1, 1};
    triple.vectors[1] = {1, 1, -1};
    triple.vectors[2] = {1, -1, 1};
    CHECK_THROWS_AS(detect_mates(triple), std::invalid_argument);
}

TEST_CASE("mate-free structure") {
    for (int v : {13, 15}) {
        auto sys = construct_sts(v);
        auto g = block_graph(sys);
        auto rep = canonical_block_representation(sys);
        auto report = check_mate_free_structure(g, rep);
        CHECK(report.pass);
        CHECK(report.c == 9);
    }

    // c = 4 < 9 is a precondition failure
    CHECK_THROWS_AS(check_mate_free_structure(cycle_complement({4, 4}),
                                              rep_cycle_complement({4, 4})),
                    std::invalid_argument);
}

TEST_CASE("cycle complement representations") {
    auto rep = rep_cycle_complement({4, 4});
    CHECK(rep.dimension == 9);
    // same-cycle consecutive vertices: inner product 0; all others 1
    CHECK(inner_product(rep.vectors.at(0), rep.vectors.at(1)) == 0);
    CHECK(inner_product(rep.vectors.at(3), rep.vectors.at(0)) == 0);
    CHECK(inner_product(rep.vectors.at(0), rep.vectors.at(2)) == 1);
    CHECK(inner_product(rep.vectors.at(0), rep.vectors.at(4)) == 1);

    CHECK(verify_integrable(cycle_complement({3, 3}), rep_cycle_complement({3, 3}), 1).pass);
    CHECK(verify_integrable(cycle_complement({3, 3, 3, 3}),
                            rep_cycle_complement({3, 3, 3, 3}), 1).pass);
    CHECK(verify_integrable(cycle_complement({4, 5}), rep_cycle_complement({4, 5}), 1).pass);
    CHECK(verify_integrable(cycle_complement({7}), rep_cycle_complement({7}), 1).pass);

    CHECK_THROWS_AS(rep_cycle_complement({2}), std::invalid_argument);
}

TEST_CASE("cube representation") {
    auto cube = hypercube(3);
    auto rep = cube3_representation();
    CHECK(verify_integrable(cube, rep, 1).pass);

    // A + 3I has rank 7: spectrum {6,4,4,4,2,2,2,0}
    auto gram = gram_matrix(rep);
    SymMatrix m(8);
    for (int i = 0; i < 8; ++i)
        for (int j = i; j < 8; ++j) m.set(i, j, double(gram[i][j]));
    auto values = eigenvalues_sym(m);
    int nonzero = 0;
    for (double v : values)
        if (std::abs(v) > 1e-6) ++nonzero;
    CHECK(nonzero == 7);

    // all 8 vectors distinct
    for (int i = 0; i < 8; ++i)
        for (int j = i + 1; j < 8; ++j) CHECK(rep.vectors.at(i) != rep.vectors.at(j));
}

TEST_CASE("scale additivity by self-concatenation") {
    auto g = cycle_complement({4, 4});
    auto rep = rep_cycle_complement({4, 4});
    auto doubled = concatenate(rep, rep);
    CHECK(doubled.scale == 2);
    CHECK(doubled.target_norm == 6);
    CHECK(verify_integrable(g, doubled, 2).pass);

    auto sys = construct_sts(9);
    auto block_rep = canonical_block_representation(sys);
    CHECK(verify_integrable(block_graph(sys), concatenate(block_rep, block_rep), 2).pass);
}

TEST_CASE("verification is exactly the Gram identity") {
    auto gram_is_a_plus_3i = [](const Graph& g, const IntegralRepresentation& r) {
        auto gram = gram_matrix(r);
        for (int i = 0; i < g.order(); ++i)
            for (int j = 0; j < g.order(); ++j)
                if (gram[i][j] != (i == j ? 3 : (g.adjacent(i, j) ? 1 : 0))) return false;
        return true;
    };

    std::vector<std::pair<Graph, IntegralRepresentation>> cases;
    cases.emplace_back(cycle_complement({4, 4}), rep_cycle_complement({4, 4}));
    cases.emplace_back(cycle_complement({3, 3}), rep_cycle_complement({3, 3}));
    cases.emplace_back(hypercube(3), cube3_representation());
    auto sys = construct_sts(13);
    cases.emplace_back(block_graph(sys), canonical_block_representation(sys));
    // mismatched pair: the two-squares representation against the wrong graph
    cases.emplace_back(hypercube(3), rep_cycle_complement({4, 4}));

    for (const auto& [g, r] : cases) {
        if (int(r.vectors.size()) != g.order()) continue;
        CHECK(verify_integrable(g, r, 1).pass == gram_is_a_plus_3i(g, r));
    }
}

TEST_CASE("representation json round trip") {
    auto rep = rep_cycle_complement({4, 4});
    auto j = to_json(rep);
    CHECK(j.contains("s"));
    CHECK(j.contains("dimension"));
    CHECK(j.contains("vectors"));
    auto back = representation_from_json(j);
    CHECK(back.dimension == rep.dimension);
    CHECK(back.scale == rep.scale);
    CHECK(back.target_norm == rep.target_norm);
    CHECK(back.vectors == rep.vectors);
}
