#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <random>
#include <set>
#include <vector>

#include "chroma2/degeneracy.hpp"
#include "chroma2/graph.hpp"

namespace chroma2 {

namespace detail {

inline std::vector<std::uint64_t> adjacency_masks(const Graph& h) {
    if (h.vertex_count() > 64)
        throw Error(ErrorKind::size_guard, "bitset solver limited to 64 vertices",
                    {h.vertex_count()});
    std::vector<std::uint64_t> adj(h.vertex_count(), 0);
    for (int v = 0; v < h.vertex_count(); ++v)
        for (int u : h.neighbors(v)) adj[v] |= 1ull << u;
    return adj;
}

} // namespace detail

inline bool is_proper(const Graph& h, const std::vector<int>& coloring) {
    if (static_cast<int>(coloring.size()) != h.vertex_count()) return false;
    for (auto [u, v] : h.edges())
        if (coloring[u] == coloring[v]) return false;
    return true;
}

// Exact maximum clique, branch and bound over candidate masks.
inline std::vector<int> max_clique(const Graph& h, bool force = false) {
    if (!force && h.vertex_count() > 64)
        throw Error(ErrorKind::size_guard, "max_clique limited to 64 vertices",
                    {h.vertex_count()});
    auto adj = detail::adjacency_masks(h);
    int n = h.vertex_count();
    std::uint64_t best = 0;
    int best_size = 0;

    auto expand = [&](auto&& self, std::uint64_t clique, int size, std::uint64_t cand) -> void {
        if (size + __builtin_popcountll(cand) <= best_size) return;
        if (!cand) {
            best = clique;
            best_size = size;
            return;
        }
        while (cand) {
            if (size + __builtin_popcountll(cand) <= best_size) return;
            int v = __builtin_ctzll(cand);
            cand &= cand - 1;
            self(self, clique | (1ull << v), size + 1, cand & adj[v]);
        }
    };
    expand(expand, 0, 0, n == 64 ? ~0ull : (1ull << n) - 1);

    std::vector<int> out;
    for (int v = 0; v < n; ++v)
        if (best >> v & 1) out.push_back(v);
    return out;
}

namespace detail {

// Complete k-colorability search: saturation-guided vertex choice, new color
// classes opened in canonical order.
inline bool k_colorable(const std::vector<std::uint64_t>& adj, int n, int k,
                        std::vector<int>& coloring) {
    std::vector<int> color(n, 0);
    int max_used = 0;

    auto rec = [&](auto&& self, int colored) -> bool {
        if (colored == n) return true;
        int pick = -1, pick_sat = -1;
        for (int v = 0; v < n; ++v) {
            if (color[v]) continue;
            std::uint64_t m = adj[v];
            std::uint64_t seen = 0;
            while (m) {
                int u = __builtin_ctzll(m);
                m &= m - 1;
                if (color[u]) seen |= 1ull << (color[u] - 1);
            }
            int sat = __builtin_popcountll(seen);
            if (sat > pick_sat) {
                pick_sat = sat;
                pick = v;
            }
        }
        std::uint64_t forbidden = 0;
        std::uint64_t m = adj[pick];
        while (m) {
            int u = __builtin_ctzll(m);
            m &= m - 1;
            if (color[u]) forbidden |= 1ull << (color[u] - 1);
        }
        int limit = std::min(k, max_used + 1);
        for (int c = 1; c <= limit; ++c) {
            if (forbidden >> (c - 1) & 1) continue;
            color[pick] = c;
            int prev = max_used;
            max_used = std::max(max_used, c);
            if (self(self, colored + 1)) return true;
            max_used = prev;
            color[pick] = 0;
        }
        return false;
    };
    if (!rec(rec, 0)) return false;
    coloring = color;
    return true;
}

} // namespace detail

struct ChromaticResult {
    int chi = 0;
    std::vector<int> coloring; // 1-based
};

// Exact chromatic number. Lower bound from a greedy clique, upper bound from
// first-fit on a degeneracy order, then complete search per candidate k.
inline ChromaticResult chromatic_number(const Graph& h, bool force = false) {
    int n = h.vertex_count();
    if (!force && n > 64)
        throw Error(ErrorKind::size_guard, "chromatic_number limited to 64 vertices", {n});
    if (n == 0) return {0, {}};
    auto adj = detail::adjacency_masks(h);

    std::vector<int> by_degree(n);
    for (int i = 0; i < n; ++i) by_degree[i] = i;
    std::sort(by_degree.begin(), by_degree.end(),
              [&](int a, int b) { return h.degree(a) != h.degree(b) ? h.degree(a) > h.degree(b) : a < b; });
    std::uint64_t clique = 0;
    int lb = 0;
    for (int v : by_degree)
        if ((adj[v] & clique) == clique) {
            clique |= 1ull << v;
            ++lb;
        }

    DegeneracyOrder d = degeneracy_order(h);
    std::vector<int> greedy = greedy_color_from_order(h, d.order);
    int ub = color_count(greedy);

    if (lb >= ub) return {ub, greedy};
    for (int k = lb; k < ub; ++k) {
        std::vector<int> coloring;
        if (detail::k_colorable(adj, n, k, coloring)) return {k, coloring};
    }
    return {ub, greedy};
}

// Backtracking list coloring; lists may use arbitrary integer colors.
// Returns a coloring drawn from the lists, or nullopt after exhaustive search.
inline std::optional<std::vector<int>> list_color(const Graph& h,
                                                  const std::vector<std::vector<int>>& lists,
                                                  bool force = false) {
    int n = h.vertex_count();
    if (!force && n > 30)
        throw Error(ErrorKind::size_guard, "list_color limited to 30 vertices", {n});
    if (static_cast<int>(lists.size()) != n)
        throw Error(ErrorKind::bad_argument, "list count != vertex count");

    std::vector<int> color(n, 0);
    std::vector<char> done(n, 0);

    auto available = [&](int v, std::vector<int>& out) {
        out.clear();
        for (int c : lists[v]) {
            bool ok = true;
            for (int u : h.neighbors(v))
                if (done[u] && color[u] == c) {
                    ok = false;
                    break;
                }
            if (ok) out.push_back(c);
        }
    };

    std::vector<int> buf;
    auto rec = [&](auto&& self, int colored) -> bool {
        if (colored == n) return true;
        int pick = -1;
        std::size_t best = ~std::size_t{0};
        for (int v = 0; v < n; ++v) {
            if (done[v]) continue;
            available(v, buf);
            if (buf.size() < best) {
                best = buf.size();
                pick = v;
            }
            if (best == 0) return false;
        }
        available(pick, buf);
        std::vector<int> options = buf;
        done[pick] = 1;
        for (int c : options) {
            color[pick] = c;
            if (self(self, colored + 1)) return true;
        }
        done[pick] = 0;
        return false;
    };
    if (!rec(rec, 0)) return std::nullopt;
    return color;
}

// Correspondence assignment: per-vertex capacities and, per edge, a partial
// matching between the endpoint color indices (0-based). A missing edge entry
// means the empty matching.
struct CorrAssignment {
    std::vector<int> capacity;
    std::map<std::pair<int, int>, std::vector<std::pair<int, int>>> matchings;

    void validate(const Graph& h) const {
        if (static_cast<int>(capacity.size()) != h.vertex_count())
            throw Error(ErrorKind::bad_argument, "capacity count != vertex count");
        for (const auto& [e, pairs] : matchings) {
            auto [u, v] = e;
            if (u >= v || !h.has_edge(u, v))
                throw Error(ErrorKind::bad_argument, "matching on a non-edge", {u, v});
            std::set<int> as, bs;
            for (auto [a, b] : pairs) {
                if (a < 0 || a >= capacity[u] || b < 0 || b >= capacity[v])
                    throw Error(ErrorKind::bad_argument, "matched color out of range", {u, v, a, b});
                if (!as.insert(a).second || !bs.insert(b).second)
                    throw Error(ErrorKind::bad_argument, "not a matching", {u, v});
            }
        }
    }

    bool conflicts(int u, int cu, int v, int cv) const {
        int a = u, b = v, ca = cu, cb = cv;
        if (a > b) {
            std::swap(a, b);
            std::swap(ca, cb);
        }
        auto it = matchings.find({a, b});
        if (it == matchings.end()) return false;
        for (auto [x, y] : it->second)
            if (x == ca && y == cb) return true;
        return false;
    }
};

// True iff the index assignment avoids every matched pair and respects
// capacities.
inline bool corr_is_valid(const Graph& h, const CorrAssignment& corr,
                          const std::vector<int>& pick) {
    if (static_cast<int>(pick.size()) != h.vertex_count()) return false;
    for (int v = 0; v < h.vertex_count(); ++v)
        if (pick[v] < 0 || pick[v] >= corr.capacity[v]) return false;
    for (auto [u, v] : h.edges())
        if (corr.conflicts(u, pick[u], v, pick[v])) return false;
    return true;
}

// Backtracking correspondence coloring; exhaustive within the size guard.
inline std::optional<std::vector<int>> corr_color(const Graph& h, const CorrAssignment& corr,
                                                  bool force = false) {
    int n = h.vertex_count();
    if (!force && n > 30)
        throw Error(ErrorKind::size_guard, "corr_color limited to 30 vertices", {n});
    corr.validate(h);

    std::vector<int> pick(n, -1);
    auto count_free = [&](int v) {
        int cnt = 0;
        for (int c = 0; c < corr.capacity[v]; ++c) {
            bool ok = true;
            for (int u : h.neighbors(v))
                if (pick[u] >= 0 && corr.conflicts(v, c, u, pick[u])) {
                    ok = false;
                    break;
                }
            if (ok) ++cnt;
        }
        return cnt;
    };

    auto rec = [&](auto&& self, int colored) -> bool {
        if (colored == n) return true;
        int best = -1, best_free = 1 << 30;
        for (int v = 0; v < n; ++v) {
            if (pick[v] >= 0) continue;
            int f = count_free(v);
            if (f < best_free) {
                best_free = f;
                best = v;
            }
            if (f == 0) return false;
        }
        for (int c = 0; c < corr.capacity[best]; ++c) {
            bool ok = true;
            for (int u : h.neighbors(best))
                if (pick[u] >= 0 && corr.conflicts(best, c, u, pick[u])) {
                    ok = false;
                    break;
                }
            if (!ok) continue;
            pick[best] = c;
            if (self(self, colored + 1)) return true;
            pick[best] = -1;
        }
        return false;
    };
    if (!rec(rec, 0)) return std::nullopt;
    return pick;
}

struct CorrChromatic {
    int value = 0;
    bool exact = false; // false: sampling mode, value is a lower bound only
};

// Least k such that every k-correspondence assignment admits a coloring.
// Exhaustive for n <= 6 and max degree <= 3: worst cases are permutation
// matchings, and color relabeling lets a spanning forest carry the identity,
// so only the remaining edges range over S_k. Larger inputs fall back to
// deterministic sampling and report a lower bound.
inline CorrChromatic corr_chromatic(const Graph& h, int samples = 200,
                                    std::uint64_t seed = 12345) {
    int n = h.vertex_count();
    if (n == 0) return {0, true};
    bool exhaustive = n <= 6 && h.max_degree() <= 3;

    std::vector<std::pair<int, int>> edges = h.edges();
    // Spanning forest via union-find; forest edges keep the identity matching.
    std::vector<int> parent(n);
    for (int i = 0; i < n; ++i) parent[i] = i;
    auto find = [&](int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    std::vector<std::pair<int, int>> free_edges;
    for (auto [u, v] : edges) {
        int a = find(u), b = find(v);
        if (a == b) free_edges.emplace_back(u, v);
        else parent[a] = b;
    }

    auto identity_pairs = [&](int k) {
        std::vector<std::pair<int, int>> ps;
        for (int c = 0; c < k; ++c) ps.emplace_back(c, c);
        return ps;
    };

    int upper = h.max_degree() + 1;
    for (int k = 1; k <= upper; ++k) {
        CorrAssignment corr;
        corr.capacity.assign(n, k);
        for (auto [u, v] : edges) corr.matchings[{u, v}] = identity_pairs(k);

        bool all_colorable = true;
        if (exhaustive) {
            std::vector<int> perm_index(free_edges.size(), 0);
            std::vector<std::vector<int>> perms; // all permutations of 0..k-1
            std::vector<int> p(k);
            for (int i = 0; i < k; ++i) p[i] = i;
            do perms.push_back(p);
            while (std::next_permutation(p.begin(), p.end()));

            auto rec = [&](auto&& self, std::size_t i) -> bool {
                if (i == free_edges.size()) return corr_color(h, corr).has_value();
                for (const auto& perm : perms) {
                    std::vector<std::pair<int, int>> ps;
                    for (int c = 0; c < k; ++c) ps.emplace_back(c, perm[c]);
                    corr.matchings[free_edges[i]] = ps;
                    if (!self(self, i + 1)) return false;
                }
                return true;
            };
            all_colorable = rec(rec, 0);
        } else {
            std::mt19937_64 rng(seed);
            auto shuffle_perm = [&](std::vector<int>& p) {
                for (std::size_t i = p.size(); i > 1; --i)
                    std::swap(p[i - 1], p[rng() % i]);
            };
            for (int s = 0; s < samples && all_colorable; ++s) {
                for (auto [u, v] : edges) {
                    std::vector<int> p(k);
                    for (int i = 0; i < k; ++i) p[i] = i;
                    shuffle_perm(p);
                    std::vector<std::pair<int, int>> ps;
                    for (int c = 0; c < k; ++c) ps.emplace_back(c, p[c]);
                    corr.matchings[{u, v}] = ps;
                }
                if (!corr_color(h, corr, true).has_value()) all_colorable = false;
            }
        }
        if (all_colorable) return {k, exhaustive};
    }
    return {upper, exhaustive};
}

// Least k such that every assignment of k-lists admits a proper coloring.
// Colors are anonymous, so an assignment is determined by how many colors
// realize each vertex subset; the search walks those multiplicity vectors and
// prunes any branch whose partial assignment is already colorable.
inline int list_chromatic_number(const Graph& h, bool force = false) {
    int n = h.vertex_count();
    if (!force && n > 8)
        throw Error(ErrorKind::size_guard, "list_chromatic_number limited to 8 vertices", {n});
    if (n == 0) return 0;

    // Partial lists as per-vertex color vectors; colorability by backtracking.
    auto colorable = [&](const std::vector<std::vector<int>>& lists) {
        return list_color(h, lists, true).has_value();
    };

    // Types sorted by decreasing popcount, singletons last.
    std::vector<int> types;
    for (int t = 1; t < (1 << n); ++t) types.push_back(t);
    std::sort(types.begin(), types.end(), [](int a, int b) {
        int pa = __builtin_popcount(a), pb = __builtin_popcount(b);
        return pa != pb ? pa > pb : a < b;
    });

    auto choosable = [&](int k) {
        std::vector<int> rem(n, k);
        std::vector<std::vector<int>> lists(n);
        int next_color = 0;

        auto rec = [&](auto&& self, std::size_t ti) -> bool {
            // All completions of a colorable partial assignment are colorable.
            if (colorable(lists)) return true;
            if (ti == types.size()) {
                for (int v = 0; v < n; ++v)
                    if (rem[v]) return true; // unfillable leaf, not an assignment
                return false;                // complete and uncolorable
            }
            int t = types[ti];
            int cap = k;
            for (int v = 0; v < n; ++v)
                if (t >> v & 1) cap = std::min(cap, rem[v]);
            bool singleton = __builtin_popcount(t) == 1;
            int low = singleton ? cap : 0; // singletons must exhaust the budget
            for (int m = low; m <= cap; ++m) {
                for (int v = 0; v < n; ++v)
                    if (t >> v & 1) {
                        rem[v] -= m;
                        for (int c = 0; c < m; ++c) lists[v].push_back(next_color + c);
                    }
                next_color += m;
                bool ok = self(self, ti + 1);
                next_color -= m;
                for (int v = 0; v < n; ++v)
                    if (t >> v & 1) {
                        rem[v] += m;
                        lists[v].resize(lists[v].size() - m);
                    }
                if (!ok) return false;
            }
            return true;
        };
        return rec(rec, 0);
    };

    int chi = chromatic_number(h, true).chi;
    for (int k = chi;; ++k)
        if (choosable(k)) return k;
}

} // namespace chroma2
