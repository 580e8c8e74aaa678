#pragma once

#include <cstdint>
#include <unordered_map>
#include <vector>

#include "chroma2/exact_color.hpp"
#include "chroma2/graph.hpp"

namespace chroma2 {

// Orientation of a graph: head[i] names the head vertex of edges()[i], or -1
// for a bidirected edge (used by the kernel machinery, not by parity counts).
struct Orientation {
    Graph base;
    std::vector<int> head;

    Orientation() = default;
    Orientation(Graph g, std::vector<int> h) : base(std::move(g)), head(std::move(h)) {
        auto es = base.edges();
        if (head.size() != es.size())
            throw Error(ErrorKind::bad_argument, "one direction entry per edge required");
        for (std::size_t i = 0; i < es.size(); ++i)
            if (head[i] != -1 && head[i] != es[i].first && head[i] != es[i].second)
                throw Error(ErrorKind::bad_argument, "head must be an endpoint",
                            {es[i].first, es[i].second, head[i]});
    }

    std::vector<int> out_degrees() const {
        std::vector<int> out(base.vertex_count(), 0);
        auto es = base.edges();
        for (std::size_t i = 0; i < es.size(); ++i) {
            auto [u, v] = es[i];
            if (head[i] == -1) {
                ++out[u];
                ++out[v];
            } else {
                ++out[head[i] == v ? u : v];
            }
        }
        return out;
    }
};

// EE(D) - EO(D): signed count of spanning eulerian sub-digraphs (every vertex
// balanced), sign by parity of the arc count. Gray-code walk over arc subsets
// keeps the balance bookkeeping O(1) per step.
inline int eulerian_parity_diff(const Orientation& d, bool force = false) {
    auto es = d.base.edges();
    int m = static_cast<int>(es.size());
    if (!force && m > 24)
        throw Error(ErrorKind::size_guard, "eulerian_parity_diff limited to 24 edges", {m});

    std::vector<std::pair<int, int>> arcs; // tail -> head
    for (std::size_t i = 0; i < es.size(); ++i) {
        auto [u, v] = es[i];
        if (d.head[i] == -1)
            throw Error(ErrorKind::bad_argument, "bidirected edge has no parity", {u, v});
        arcs.emplace_back(d.head[i] == v ? u : v, d.head[i]);
    }

    std::vector<int> balance(d.base.vertex_count(), 0); // out minus in
    int unbalanced = 0;
    auto toggle = [&](int e, int delta) {
        auto bump = [&](int v, int by) {
            if (balance[v] == 0) ++unbalanced;
            balance[v] += by;
            if (balance[v] == 0) --unbalanced;
        };
        bump(arcs[e].first, delta);
        bump(arcs[e].second, -delta);
    };

    int diff = 1; // empty subset: eulerian, even
    std::uint64_t gray_prev = 0;
    int popcount = 0;
    for (std::uint64_t i = 1; i < (1ull << m); ++i) {
        std::uint64_t gray = i ^ (i >> 1);
        std::uint64_t changed = gray ^ gray_prev;
        int e = __builtin_ctzll(changed);
        bool added = gray >> e & 1;
        toggle(e, added ? 1 : -1);
        popcount += added ? 1 : -1;
        gray_prev = gray;
        if (unbalanced == 0) diff += (popcount & 1) ? -1 : 1;
    }
    return diff;
}

// Smallest k such that some orientation with all out-degrees < k has nonzero
// eulerian parity diff.
inline int alon_tarsi_number(const Graph& h, bool force = false) {
    auto es = h.edges();
    int m = static_cast<int>(es.size());
    if (!force && m > 12)
        throw Error(ErrorKind::size_guard, "alon_tarsi_number limited to 12 edges", {m});

    int best = m + 2; // any acyclic orientation qualifies, so a bound exists
    for (std::uint64_t mask = 0; mask < (1ull << m); ++mask) {
        std::vector<int> head(m);
        std::vector<int> out(h.vertex_count(), 0);
        for (int i = 0; i < m; ++i) {
            auto [u, v] = es[i];
            head[i] = (mask >> i & 1) ? u : v;
            ++out[head[i] == v ? u : v];
        }
        int maxout = 0;
        for (int o : out) maxout = std::max(maxout, o);
        if (maxout + 1 >= best) continue;
        if (eulerian_parity_diff(Orientation(h, head), true) != 0) best = maxout + 1;
    }
    return best;
}

namespace detail {

// All subsets of `pool` (a mask over h's vertices) that are independent in h
// and maximal within the pool.
inline std::vector<std::uint32_t> maximal_independent_in(const Graph& h, std::uint32_t pool,
                                                         const std::vector<std::uint32_t>& adj) {
    std::vector<std::uint32_t> out;
    for (std::uint32_t t = pool;; t = (t - 1) & pool) {
        if (t) {
            bool independent = true;
            for (std::uint32_t rest = t; rest && independent; rest &= rest - 1) {
                int v = __builtin_ctz(rest);
                if (adj[v] & t) independent = false;
            }
            if (independent) {
                std::uint32_t addable = pool & ~t;
                bool maximal = true;
                for (std::uint32_t rest = addable; rest && maximal; rest &= rest - 1) {
                    int v = __builtin_ctz(rest);
                    if (!(adj[v] & t)) maximal = false;
                }
                if (maximal) out.push_back(t);
            }
        }
        if (t == 0) break;
    }
    return out;
}

} // namespace detail

// Paint game (online list coloring). Lister presents a nonempty subset S of
// the uncolored vertices, spending one token of each vertex in S; Painter
// colors an independent subset of S. Lister wins when an uncolored vertex has
// no tokens left. Restricting Painter to maximal independent replies is safe:
// coloring extra vertices only shrinks the uncolored set and never lowers a
// budget, which can only help Painter.
inline bool painter_wins(const Graph& h, const std::vector<int>& budget, bool force = false) {
    int n = h.vertex_count();
    if (!force && n > 8)
        throw Error(ErrorKind::size_guard, "paint game limited to 8 vertices", {n});
    if (static_cast<int>(budget.size()) != n)
        throw Error(ErrorKind::bad_argument, "one budget per vertex required");

    std::vector<std::uint32_t> adj(n, 0);
    for (int v = 0; v < n; ++v)
        for (int u : h.neighbors(v)) adj[v] |= 1u << u;

    std::unordered_map<std::uint64_t, bool> memo;
    // Key: uncolored mask (low byte) then 5 bits of budget per vertex, with
    // budgets capped at the number of uncolored vertices (a vertex can be
    // presented at most once per remaining move, and each move colors
    // something) and zeroed on colored vertices.
    auto key_of = [&](std::uint32_t unc, const std::vector<int>& b) {
        std::uint64_t key = unc;
        int cap = __builtin_popcount(unc);
        for (int v = 0; v < n; ++v) {
            int bv = (unc >> v & 1) ? std::min(b[v], cap) : 0;
            key |= static_cast<std::uint64_t>(bv) << (8 + 5 * v);
        }
        return key;
    };

    auto wins = [&](auto&& self, std::uint32_t unc, std::vector<int>& b) -> bool {
        if (!unc) return true;
        for (std::uint32_t rest = unc; rest; rest &= rest - 1)
            if (b[__builtin_ctz(rest)] <= 0) return false;
        std::uint64_t key = key_of(unc, b);
        if (auto it = memo.find(key); it != memo.end()) return it->second;

        bool painter = true;
        for (std::uint32_t s = unc; s && painter; s = (s - 1) & unc) {
            for (std::uint32_t rest = s; rest; rest &= rest - 1) --b[__builtin_ctz(rest)];
            bool reply_ok = false;
            for (std::uint32_t t : detail::maximal_independent_in(h, s, adj)) {
                bool lost = false;
                for (std::uint32_t rest = (unc & ~t); rest; rest &= rest - 1)
                    if (b[__builtin_ctz(rest)] == 0) {
                        lost = true;
                        break;
                    }
                if (!lost && self(self, unc & ~t, b)) {
                    reply_ok = true;
                    break;
                }
            }
            for (std::uint32_t rest = s; rest; rest &= rest - 1) ++b[__builtin_ctz(rest)];
            if (!reply_ok) painter = false;
        }
        memo[key] = painter;
        return painter;
    };

    std::uint32_t all = n == 0 ? 0 : (1u << n) - 1;
    std::vector<int> b = budget;
    return wins(wins, all, b);
}

inline int paint_number(const Graph& h, bool force = false) {
    int n = h.vertex_count();
    if (!force && n > 8)
        throw Error(ErrorKind::size_guard, "paint_number limited to 8 vertices", {n});
    if (n == 0) return 0;
    for (int k = chromatic_number(h, true).chi;; ++k) {
        std::vector<int> budget(n, k);
        if (painter_wins(h, budget, true)) return k;
    }
}

struct ChainReport {
    int chi = 0;
    int chi_list = 0;
    int paint = 0;
    int at = 0;
    int degeneracy_plus_1 = 0;
    bool holds = false;
};

// Computes the chromatic / choice / paint / Alon-Tarsi numbers plus the
// degeneracy bound and checks they are weakly increasing in that order.
inline ChainReport parameter_chain_check(const Graph& h, bool force = false) {
    ChainReport r;
    r.chi = chromatic_number(h, force).chi;
    r.chi_list = list_chromatic_number(h, force);
    r.paint = paint_number(h, force);
    r.at = alon_tarsi_number(h, force);
    r.degeneracy_plus_1 = degeneracy_order(h).degeneracy + 1;
    r.holds = r.chi <= r.chi_list && r.chi_list <= r.paint && r.paint <= r.at &&
              r.at <= r.degeneracy_plus_1;
    return r;
}

} // namespace chroma2
