#pragma once

#include <optional>

#include "ksgen/graph.hpp"

namespace ksgen {

/// A canonical form together with the labeling that produces it:
/// apply_perm(input, labeling) == canonical_graph.
struct CanonResult {
    Graph canonical_graph;
    Permutation labeling;
};

/// Base canonizer: individualization-refinement with 1-dimensional color
/// refinement. Deterministic, and isomorphism-invariant in the sense that
/// base_canon(apply_perm(g, p)).canonical_graph == base_canon(g).canonical_graph
/// for every permutation p.
///
/// When pinned_prefix >= 1, vertices 1..pinned_prefix form a separate
/// initial color class that canonical labelings must map onto labels
/// 1..pinned_prefix. This is what keeps a fixed base subgraph on the first
/// labels when canonizing partially assigned extensions; invariance then
/// holds for color-preserving isomorphisms. pinned_prefix == 0 gives the
/// plain (uncolored) canonizer.
///
/// Supports order <= 64.
CanonResult base_canon(const Graph& g, int pinned_prefix = 0);

/// Reference canonizer: smallest column-major adjacency string over all n!
/// relabelings. Refuses orders above 8 (factorial cost); intended as an
/// independent oracle for the fast canonizers.
CanonResult oracle_canon(const Graph& g);

/// Recursive canonical labeling: anchors the vertex the base canonizer maps
/// to the largest label, removes it, and recurses. The resulting canonical
/// form is hereditary: every prefix of a canonical graph is canonical.
/// pinned_prefix is forwarded to base_canon while more than pinned_prefix
/// vertices remain (so a fixed base stays on the first labels), after which
/// the remaining base graph is canonized plainly.
CanonResult rcl_canon(const Graph& g, int pinned_prefix = 0);

struct RclCheck {
    bool canonical;
    Permutation witness; // the RCL labeling; maps g onto its canonical form
};

/// True iff rcl_canon(g).canonical_graph == g. The witness is the RCL
/// labeling either way; when non-canonical, apply_perm(g, witness) is the
/// canonical member of g's class.
RclCheck is_rcl_canonical(const Graph& g, int pinned_prefix = 0);

enum class LexStatus { Minimal, NotMinimal, Timeout };

struct LexCheckResult {
    LexStatus status;
    /// Present iff status == NotMinimal; relabeling by the witness yields a
    /// strictly lex-smaller column-major adjacency string.
    std::optional<Permutation> witness;
    long nodes_explored = 0;
};

/// Decides whether g's column-major adjacency string is lexicographically
/// minimal (0 < 1, smaller is canonical) over all relabelings. Implemented
/// as branch-and-bound over partial permutations with prefix pruning.
/// budget_ms == 0 means no time limit.
LexCheckResult lex_check(const Graph& g, long budget_ms = 0);

struct LexCanonizeResult {
    Graph graph;
    bool canonical; // false when the time budget expired mid-descent
};

/// Witness-guided lex canonization: repeatedly relabel along improving
/// witnesses until lex_check reports minimality. Terminates because each
/// step strictly decreases the adjacency string.
LexCanonizeResult lex_canonize(const Graph& g, long budget_ms = 0);

} // namespace ksgen
