#include "ksgen/canon.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <chrono>
#include <cstdint>
#include <numeric>

namespace ksgen {

namespace {

// ---------------------------------------------------------------------------
// Individualization-refinement canonizer. Internals are 0-based and work on
// single-word adjacency rows (order <= 64).
// ---------------------------------------------------------------------------

using Cells = std::vector<std::vector<int>>;

struct IrSearch {
    int n = 0;
    std::array<std::uint64_t, 64> adj{};

    std::vector<int> best_order;           // position -> vertex, 0-based
    std::vector<std::uint8_t> best_bits;   // column-major candidate string
    bool have_best = false;
    std::vector<std::vector<int>> autos;   // automorphism images, 0-based
    std::vector<int> path;                 // individualized vertices on the path

    void run(const Cells& initial);

private:
    void descend(Cells cells);
    bool refine(Cells& cells) const;
    void visit_leaf(const Cells& cells);
    bool same_orbit(int u, int v) const;
};

// One pass of 1-WL refinement: split every cell by the vector of neighbor
// counts against all current cells; fragments replace their cell in place,
// ordered by signature. Returns false if the partition turned out to need
// no further splitting.
bool IrSearch::refine(Cells& cells) const {
    bool changed_any = false;
    bool changed = true;
    std::vector<std::uint64_t> masks;
    while (changed) {
        changed = false;
        masks.assign(cells.size(), 0);
        for (std::size_t c = 0; c < cells.size(); ++c)
            for (int v : cells[c]) masks[c] |= std::uint64_t{1} << v;

        for (std::size_t c = 0; c < cells.size(); ++c) {
            if (cells[c].size() <= 1) continue;
            // signature of v = counts against each cell, in cell order
            std::vector<std::pair<std::vector<int>, int>> keyed;
            keyed.reserve(cells[c].size());
            for (int v : cells[c]) {
                std::vector<int> sig(cells.size());
                for (std::size_t d = 0; d < cells.size(); ++d)
                    sig[d] = std::popcount(adj[v] & masks[d]);
                keyed.emplace_back(std::move(sig), v);
            }
            std::sort(keyed.begin(), keyed.end());
            bool split = false;
            for (std::size_t t = 1; t < keyed.size(); ++t)
                if (keyed[t].first != keyed[0].first) { split = true; break; }
            if (!split) continue;

            Cells fragments;
            for (std::size_t t = 0; t < keyed.size(); ++t) {
                if (t == 0 || keyed[t].first != keyed[t - 1].first)
                    fragments.emplace_back();
                fragments.back().push_back(keyed[t].second);
            }
            cells.erase(cells.begin() + static_cast<long>(c));
            cells.insert(cells.begin() + static_cast<long>(c),
                         fragments.begin(), fragments.end());
            changed = true;
            changed_any = true;
            break; // masks are stale; restart the pass
        }
    }
    return changed_any;
}

bool IrSearch::same_orbit(int u, int v) const {
    // Orbits of the subgroup generated by stored automorphisms that fix the
    // current individualization path pointwise.
    std::array<int, 64> parent{};
    for (int i = 0; i < n; ++i) parent[i] = i;
    auto find = [&](int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    for (const auto& phi : autos) {
        bool fixes_path = true;
        for (int b : path)
            if (phi[b] != b) { fixes_path = false; break; }
        if (!fixes_path) continue;
        for (int x = 0; x < n; ++x) {
            int a = find(x), b = find(phi[x]);
            if (a != b) parent[a] = b;
        }
    }
    return find(u) == find(v);
}

void IrSearch::visit_leaf(const Cells& cells) {
    std::vector<int> order;
    order.reserve(n);
    for (const auto& cell : cells) order.push_back(cell.front());

    std::vector<std::uint8_t> bits;
    bits.reserve(static_cast<std::size_t>(n) * (n - 1) / 2);
    for (int b = 1; b < n; ++b)
        for (int a = 0; a < b; ++a)
            bits.push_back(static_cast<std::uint8_t>((adj[order[a]] >> order[b]) & 1));

    if (!have_best || bits < best_bits) {
        best_bits = std::move(bits);
        best_order = std::move(order);
        have_best = true;
        return;
    }
    if (bits == best_bits) {
        // Equal candidate strings expose an automorphism:
        // phi(v) = best_order[position of v in this leaf].
        std::vector<int> pos(n);
        for (int p = 0; p < n; ++p) pos[order[p]] = p;
        std::vector<int> phi(n);
        for (int v = 0; v < n; ++v) phi[v] = best_order[pos[v]];
        for (int v = 0; v < n; ++v) {
            std::uint64_t image_row = 0;
            std::uint64_t row = adj[v];
            while (row) {
                int u = std::countr_zero(row);
                row &= row - 1;
                image_row |= std::uint64_t{1} << phi[u];
            }
            if (image_row != adj[phi[v]]) return; // not an automorphism; drop it
        }
        autos.push_back(std::move(phi));
    }
}

void IrSearch::descend(Cells cells) {
    refine(cells);

    std::size_t target = cells.size();
    std::size_t target_size = 1;
    for (std::size_t c = 0; c < cells.size(); ++c) {
        if (cells[c].size() > target_size) {
            target_size = cells[c].size();
            target = c;
        }
    }
    if (target == cells.size()) {
        visit_leaf(cells);
        return;
    }

    std::vector<int> tried;
    for (int v : cells[target]) {
        bool pruned = false;
        for (int u : tried)
            if (same_orbit(u, v)) { pruned = true; break; }
        if (pruned) continue;
        tried.push_back(v);

        Cells child = cells;
        std::vector<int> rest;
        for (int u : cells[target])
            if (u != v) rest.push_back(u);
        child[target] = {v};
        child.insert(child.begin() + static_cast<long>(target) + 1, std::move(rest));

        path.push_back(v);
        descend(std::move(child));
        path.pop_back();
    }
}

void IrSearch::run(const Cells& initial) {
    descend(initial);
}

CanonResult result_from_order(const Graph& g, const std::vector<int>& order) {
    // order: 0-based position -> 0-based vertex; labeling sends order[p] to p+1.
    const int n = g.order();
    std::vector<int> image(n);
    for (int p = 0; p < n; ++p) image[order[p]] = p + 1;
    Permutation labeling = Permutation::from_image(std::move(image));
    return CanonResult{apply_perm(g, labeling), labeling};
}

} // namespace

CanonResult base_canon(const Graph& g, int pinned_prefix) {
    const int n = g.order();
    if (n > 64)
        throw ArgumentError("base_canon supports order <= 64");
    if (pinned_prefix < 0 || pinned_prefix > n)
        throw ArgumentError("pinned prefix out of range");

    IrSearch ir;
    ir.n = n;
    for (int v = 1; v <= n; ++v) ir.adj[v - 1] = g.row64(v);

    Cells initial;
    if (pinned_prefix >= 1 && pinned_prefix < n) {
        std::vector<int> basecell(pinned_prefix);
        std::iota(basecell.begin(), basecell.end(), 0);
        std::vector<int> rest(n - pinned_prefix);
        std::iota(rest.begin(), rest.end(), pinned_prefix);
        initial.push_back(std::move(basecell));
        initial.push_back(std::move(rest));
    } else {
        std::vector<int> all(n);
        std::iota(all.begin(), all.end(), 0);
        initial.push_back(std::move(all));
    }

    ir.run(initial);
    return result_from_order(g, ir.best_order);
}

CanonResult oracle_canon(const Graph& g) {
    const int n = g.order();
    if (n > 8)
        throw ArgumentError("oracle_canon refuses orders above 8");

    std::array<std::uint64_t, 8> adj{};
    for (int v = 1; v <= n; ++v) adj[v - 1] = g.row64(v);

    std::vector<int> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::vector<int> best_order;
    std::vector<std::uint8_t> best_bits, bits;
    do {
        bits.clear();
        for (int b = 1; b < n; ++b)
            for (int a = 0; a < b; ++a)
                bits.push_back(static_cast<std::uint8_t>((adj[order[a]] >> order[b]) & 1));
        if (best_order.empty() || bits < best_bits) {
            best_bits = bits;
            best_order = order;
        }
    } while (std::next_permutation(order.begin(), order.end()));

    return result_from_order(g, best_order);
}

CanonResult rcl_canon(const Graph& g, int pinned_prefix) {
    const int n = g.order();
    if (pinned_prefix < 0 || pinned_prefix > n)
        throw ArgumentError("pinned prefix out of range");

    // Iterative peeling: anchor the vertex the base canonizer maps to the
    // current largest label, delete it, repeat on the shrinking graph.
    Graph cur = g;
    std::vector<int> orig(n); // current label (1-based, index-1) -> original label
    std::iota(orig.begin(), orig.end(), 1);
    std::vector<int> gamma(n + 1, 0);

    for (int k = n; k >= 2; --k) {
        const int pin = k > pinned_prefix ? pinned_prefix : 0;
        CanonResult res = base_canon(cur, pin);
        const int v = res.labeling.inverse()(k);
        gamma[orig[v - 1]] = k;
        orig.erase(orig.begin() + (v - 1));
        cur = delete_vertex(cur, v);
    }
    gamma[orig[0]] = 1;

    Permutation labeling = Permutation::from_image(
        std::vector<int>(gamma.begin() + 1, gamma.end()));
    return CanonResult{apply_perm(g, labeling), labeling};
}

RclCheck is_rcl_canonical(const Graph& g, int pinned_prefix) {
    if (g.order() < 2)
        throw ArgumentError("is_rcl_canonical requires order >= 2");
    CanonResult res = rcl_canon(g, pinned_prefix);
    return RclCheck{res.canonical_graph == g, res.labeling};
}

namespace {

struct LexSearch {
    int n = 0;
    std::array<std::uint64_t, 64> adj{};
    std::vector<std::uint8_t> target; // column-major bits of the input
    std::vector<int> placed;          // position -> vertex, 0-based
    std::uint64_t used = 0;
    long nodes = 0;
    std::chrono::steady_clock::time_point deadline{};
    bool timed = false;
    bool timeout = false;
    std::optional<std::vector<int>> witness_order;

    // Returns true when a strictly smaller labeling was found.
    bool descend(int k) {
        ++nodes;
        if (timed && (nodes & 2047) == 0 &&
            std::chrono::steady_clock::now() > deadline) {
            timeout = true;
            return false;
        }
        const int col_base = k * (k - 1) / 2;
        for (int v = 0; v < n; ++v) {
            if ((used >> v) & 1) continue;
            int cmp = 0; // 0 equal so far, -1 smaller, +1 larger
            for (int i = 0; i < k; ++i) {
                const int b = static_cast<int>((adj[placed[i]] >> v) & 1);
                const int s = target[col_base + i];
                if (b != s) { cmp = b < s ? -1 : 1; break; }
            }
            if (cmp > 0) continue; // prefix already larger; prune
            placed[k] = v;
            if (cmp < 0) {
                // Any completion of this prefix is strictly smaller.
                std::vector<int> order(placed.begin(), placed.begin() + k + 1);
                std::uint64_t taken = used | (std::uint64_t{1} << v);
                for (int u = 0; u < n; ++u)
                    if (!((taken >> u) & 1)) order.push_back(u);
                witness_order = std::move(order);
                return true;
            }
            if (k + 1 == n) continue; // equal string: an automorphism, not a witness
            used |= std::uint64_t{1} << v;
            const bool found = descend(k + 1);
            used &= ~(std::uint64_t{1} << v);
            if (found || timeout) return found;
        }
        return false;
    }
};

} // namespace

LexCheckResult lex_check(const Graph& g, long budget_ms) {
    if (g.order() < 2)
        throw ArgumentError("lex_check requires order >= 2");
    if (g.order() > 64)
        throw ArgumentError("lex_check supports order <= 64");

    LexSearch ls;
    ls.n = g.order();
    for (int v = 1; v <= ls.n; ++v) ls.adj[v - 1] = g.row64(v);
    ls.target = g.adjacency_bits();
    ls.placed.assign(ls.n, 0);
    if (budget_ms > 0) {
        ls.timed = true;
        ls.deadline = std::chrono::steady_clock::now() +
                      std::chrono::milliseconds(budget_ms);
    }

    const bool found = ls.descend(0);
    LexCheckResult out;
    out.nodes_explored = ls.nodes;
    if (found) {
        std::vector<int> image(ls.n);
        for (int p = 0; p < ls.n; ++p) image[(*ls.witness_order)[p]] = p + 1;
        out.status = LexStatus::NotMinimal;
        out.witness = Permutation::from_image(std::move(image));
    } else if (ls.timeout) {
        out.status = LexStatus::Timeout;
    } else {
        out.status = LexStatus::Minimal;
    }
    return out;
}

LexCanonizeResult lex_canonize(const Graph& g, long budget_ms) {
    const auto start = std::chrono::steady_clock::now();
    Graph cur = g;
    for (;;) {
        long remaining = 0;
        if (budget_ms > 0) {
            const auto spent = std::chrono::duration_cast<std::chrono::milliseconds>(
                                   std::chrono::steady_clock::now() - start)
                                   .count();
            remaining = budget_ms - spent;
            if (remaining <= 0) return {cur, false};
        }
        LexCheckResult r = lex_check(cur, remaining);
        switch (r.status) {
        case LexStatus::Minimal: return {cur, true};
        case LexStatus::Timeout: return {cur, false};
        case LexStatus::NotMinimal: cur = apply_perm(cur, *r.witness); break;
        }
    }
}

} // namespace ksgen
