#ifndef SESQUI_STEINER_HPP
#define SESQUI_STEINER_HPP

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "sesqui/graph.hpp"
#include "sesqui/representation.hpp"

namespace sesqui {

/// Points 0..v-1 plus 3-element blocks. The Steiner property (every point
/// pair in exactly one block) is what verify_sts checks; the struct itself
/// does not enforce it.
struct TripleSystem {
    int v = 0;
    std::vector<std::array<int, 3>> blocks;
};

/// True iff v = 1 or 3 (mod 6), the existence condition for an STS(v).
bool sts_admissible(int v);

/// Deterministic construction: Bose for v = 3 (mod 6) via an idempotent
/// commutative quasigroup on Z_{2t+1}, Skolem for v = 1 (mod 6) via a
/// half-idempotent one on Z_{2t}. Blocks come out sorted lexicographically.
TripleSystem construct_sts(int v);

struct StsReport {
    bool pass = false;
    std::string reason;
    std::optional<std::pair<int, int>> witness_pair;
    int coverage = 0;  // how often the witness pair is covered
};

/// Brute-force pair-coverage check; failures land in the report.
StsReport verify_sts(const TripleSystem& t);

/// One vertex per block, adjacent iff the blocks meet in exactly one point.
/// Throws on non-Steiner input.
Graph block_graph(const TripleSystem& t);

struct SrgParams {
    int n;
    int k;
    int a;
    int c;
};

/// (v(v-1)/6, 3(v-3)/2, (v+3)/2, 9): the strong regularity parameters of the
/// block graph. Requires admissible v >= 7. For v = 7 the block graph is
/// complete, so a classifier reports the c entry as vacuous.
SrgParams sts_srg_params(int v);

/// Block {a,b,c} -> e_a + e_b + e_c in dimension v: the canonical scale-1
/// norm-3 representation of the block graph.
IntegralRepresentation canonical_block_representation(const TripleSystem& t);

}  // namespace sesqui

#endif
