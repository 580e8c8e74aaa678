#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <vector>

#include "chroma2/exact_color.hpp"
#include "chroma2/graph.hpp"

namespace chroma2 {

// Digraph with explicit arcs; a bidirected edge is stored as two arcs.
class Digraph {
  public:
    Digraph() = default;
    explicit Digraph(int n) : out_(n) {
        if (n < 0) throw Error(ErrorKind::bad_argument, "negative vertex count", {n});
    }

    int vertex_count() const { return static_cast<int>(out_.size()); }
    int arc_count() const { return m_; }

    void add_arc(int u, int v) {
        check(u);
        check(v);
        if (u == v) throw Error(ErrorKind::bad_argument, "loop arc", {u});
        auto& row = out_[u];
        auto it = std::lower_bound(row.begin(), row.end(), v);
        if (it != row.end() && *it == v)
            throw Error(ErrorKind::bad_argument, "duplicate arc", {u, v});
        row.insert(it, v);
        ++m_;
    }

    bool has_arc(int u, int v) const {
        check(u);
        check(v);
        return std::binary_search(out_[u].begin(), out_[u].end(), v);
    }

    const std::vector<int>& out_neighbors(int v) const {
        check(v);
        return out_[v];
    }
    int out_degree(int v) const { return static_cast<int>(out_neighbors(v).size()); }

    std::vector<std::pair<int, int>> arcs() const {
        std::vector<std::pair<int, int>> a;
        for (int u = 0; u < vertex_count(); ++u)
            for (int v : out_[u]) a.emplace_back(u, v);
        return a;
    }

    // Underlying simple graph (arc in either direction becomes an edge).
    Graph underlying() const {
        Graph g(vertex_count());
        for (int u = 0; u < vertex_count(); ++u)
            for (int v : out_[u])
                if (u < v || !has_arc(v, u)) g.add_edge(std::min(u, v), std::max(u, v));
        return g;
    }

  private:
    void check(int v) const {
        if (v < 0 || v >= vertex_count())
            throw Error(ErrorKind::bad_argument, "vertex out of range", {v});
    }
    std::vector<std::vector<int>> out_;
    int m_ = 0;
};

namespace detail {

inline std::vector<std::uint32_t> out_masks(const Digraph& d) {
    std::vector<std::uint32_t> out(d.vertex_count(), 0);
    for (int v = 0; v < d.vertex_count(); ++v)
        for (int u : d.out_neighbors(v)) out[v] |= 1u << u;
    return out;
}

// K is a kernel of the sub-digraph induced on `within` iff membership in K is
// equivalent to having no out-neighbor in K, for every vertex of `within`.
inline bool is_kernel_mask(const std::vector<std::uint32_t>& out, std::uint32_t within,
                           std::uint32_t k) {
    for (std::uint32_t rest = within; rest; rest &= rest - 1) {
        int v = __builtin_ctz(rest);
        bool in_k = k >> v & 1;
        bool hits = (out[v] & within & k) != 0;
        if (in_k == hits) return false;
    }
    return true;
}

// Smallest kernel of the induced sub-digraph, preferring fewer vertices and
// then lower masks; nullopt if none exists.
inline std::optional<std::uint32_t> kernel_mask_in(const std::vector<std::uint32_t>& out,
                                                   std::uint32_t within) {
    if (!within) return 0u;
    std::vector<int> members;
    for (std::uint32_t rest = within; rest; rest &= rest - 1)
        members.push_back(__builtin_ctz(rest));
    int s = static_cast<int>(members.size());
    for (int size = 1; size <= s; ++size) {
        // Gosper's hack over the compressed index space.
        std::uint32_t sub = (1u << size) - 1;
        while (sub < (1u << s)) {
            std::uint32_t k = 0;
            for (std::uint32_t r = sub; r; r &= r - 1) k |= 1u << members[__builtin_ctz(r)];
            if (is_kernel_mask(out, within, k)) return k;
            std::uint32_t c = sub & -sub, r2 = sub + c;
            sub = (((r2 ^ sub) >> 2) / c) | r2;
        }
    }
    return std::nullopt;
}

} // namespace detail

// Smallest kernel (no kernel of fewer vertices, then lexicographically least).
inline std::optional<std::vector<int>> find_kernel(const Digraph& d, bool force = false) {
    int n = d.vertex_count();
    if (!force && n > 20)
        throw Error(ErrorKind::size_guard, "find_kernel limited to 20 vertices", {n});
    auto out = detail::out_masks(d);
    std::uint32_t all = n == 0 ? 0 : (n == 32 ? ~0u : (1u << n) - 1);
    auto k = detail::kernel_mask_in(out, all);
    if (!k) return std::nullopt;
    std::vector<int> res;
    for (int v = 0; v < n; ++v)
        if (*k >> v & 1) res.push_back(v);
    return res;
}

// True iff every induced sub-digraph has a kernel.
inline bool is_kernel_perfect(const Digraph& d, bool force = false) {
    int n = d.vertex_count();
    if (!force && n > 15)
        throw Error(ErrorKind::size_guard, "is_kernel_perfect limited to 15 vertices", {n});
    auto out = detail::out_masks(d);
    std::uint32_t all = n == 0 ? 0 : (1u << n) - 1;
    for (std::uint32_t s = 1; s <= all && all; ++s) {
        bool found = false;
        for (std::uint32_t k = s;; k = (k - 1) & s) {
            if (detail::is_kernel_mask(out, s, k)) {
                found = true;
                break;
            }
            if (k == 0) break;
        }
        if (!found) return false;
    }
    return true;
}

// List coloring of the underlying graph when every list beats the out-degree,
// by repeatedly coloring a kernel of the sub-digraph seeing the smallest
// remaining color. Fails with a witness when a needed kernel is missing or a
// list is too short, both precondition violations.
inline std::vector<int> kernel_coloring(const Digraph& d,
                                        std::vector<std::vector<int>> lists,
                                        bool force = false) {
    int n = d.vertex_count();
    if (!force && n > 20)
        throw Error(ErrorKind::size_guard, "kernel_coloring limited to 20 vertices", {n});
    if (static_cast<int>(lists.size()) != n)
        throw Error(ErrorKind::bad_argument, "one list per vertex required");
    for (auto& l : lists) {
        std::sort(l.begin(), l.end());
        l.erase(std::unique(l.begin(), l.end()), l.end());
    }
    for (int v = 0; v < n; ++v)
        if (static_cast<int>(lists[v].size()) < d.out_degree(v) + 1)
            throw Error(ErrorKind::precondition, "list shorter than out-degree + 1",
                        {v, static_cast<long long>(lists[v].size()), d.out_degree(v)});

    auto out = detail::out_masks(d);
    std::vector<int> color(n, 0);
    std::uint32_t remaining = n == 0 ? 0 : (1u << n) - 1;
    while (remaining) {
        int c = 0;
        bool have = false;
        for (std::uint32_t rest = remaining; rest; rest &= rest - 1) {
            int v = __builtin_ctz(rest);
            if (lists[v].empty())
                throw Error(ErrorKind::precondition, "list exhausted before coloring", {v});
            if (!have || lists[v].front() < c) {
                c = lists[v].front();
                have = true;
            }
        }
        std::uint32_t vc = 0;
        for (std::uint32_t rest = remaining; rest; rest &= rest - 1) {
            int v = __builtin_ctz(rest);
            if (std::binary_search(lists[v].begin(), lists[v].end(), c)) vc |= 1u << v;
        }
        auto k = detail::kernel_mask_in(out, vc);
        if (!k) {
            std::vector<long long> witness;
            for (std::uint32_t rest = vc; rest; rest &= rest - 1)
                witness.push_back(__builtin_ctz(rest));
            throw Error(ErrorKind::precondition, "sub-digraph without a kernel", witness);
        }
        for (std::uint32_t rest = *k; rest; rest &= rest - 1) color[__builtin_ctz(rest)] = c;
        remaining &= ~*k;
        for (std::uint32_t rest = remaining; rest; rest &= rest - 1) {
            auto& l = lists[__builtin_ctz(rest)];
            auto it = std::lower_bound(l.begin(), l.end(), c);
            if (it != l.end() && *it == c) l.erase(it);
        }
    }
    return color;
}

// Two cliques B1, B2 covering the graph, with protected head sets T_i and the
// scaled parameters: crossDegreeCap bounds |N(v) n other clique|, tailSize is
// the length of the protected tails, listSlack the list deficit allowed on
// T-vertices.
struct TwoCliqueInstance {
    Graph h;
    std::vector<int> b1, b2; // sorted, disjoint, covering V(h)
    std::vector<int> t1, t2; // sorted subsets of b1 / b2
    int cross_degree_cap = 11;
    int tail_size = 11;
    int list_slack = 44;

    void validate() const {
        if (cross_degree_cap < 1 || tail_size < 1 || list_slack < 0)
            throw Error(ErrorKind::bad_argument, "parameters must be positive",
                        {cross_degree_cap, tail_size, list_slack});
        if (cross_degree_cap > tail_size)
            throw Error(ErrorKind::bad_argument, "cross degree cap above tail size",
                        {cross_degree_cap, tail_size});
        std::vector<int> side(h.vertex_count(), -1);
        auto mark = [&](const std::vector<int>& b, int tag) {
            for (int v : b) {
                if (v < 0 || v >= h.vertex_count() || side[v] != -1)
                    throw Error(ErrorKind::bad_argument, "cliques must partition the vertices",
                                {v});
                side[v] = tag;
            }
        };
        mark(b1, 0);
        mark(b2, 1);
        for (int v = 0; v < h.vertex_count(); ++v)
            if (side[v] == -1)
                throw Error(ErrorKind::bad_argument, "cliques must partition the vertices", {v});
        auto check_clique = [&](const std::vector<int>& b) {
            for (std::size_t i = 0; i < b.size(); ++i)
                for (std::size_t j = i + 1; j < b.size(); ++j)
                    if (!h.has_edge(b[i], b[j]))
                        throw Error(ErrorKind::bad_argument, "side is not a clique",
                                    {b[i], b[j]});
        };
        check_clique(b1);
        check_clique(b2);
        auto check_subset = [&](const std::vector<int>& t, int tag) {
            for (int v : t)
                if (v < 0 || v >= h.vertex_count() || side[v] != tag)
                    throw Error(ErrorKind::bad_argument, "T-set outside its clique", {v});
        };
        check_subset(t1, 0);
        check_subset(t2, 1);
        for (int v = 0; v < h.vertex_count(); ++v) {
            int cross = 0;
            for (int u : h.neighbors(v))
                if (side[u] != side[v]) ++cross;
            if (cross > cross_degree_cap)
                throw Error(ErrorKind::bad_argument, "cross degree above cap",
                            {v, cross, cross_degree_cap});
        }
    }

    std::vector<char> side_of() const {
        std::vector<char> side(h.vertex_count(), 0);
        for (int v : b2) side[v] = 1;
        return side;
    }
};

// Convenience builder: vertices 0..n1-1 form the first clique, the rest the
// second; cross edges given as (index in B1, index in B2).
inline Graph two_clique_graph(int n1, int n2,
                              const std::vector<std::pair<int, int>>& cross) {
    if (n1 < 1 || n2 < 1)
        throw Error(ErrorKind::bad_argument, "cliques must be nonempty", {n1, n2});
    Graph g(n1 + n2);
    for (int i = 0; i < n1; ++i)
        for (int j = i + 1; j < n1; ++j) g.add_edge(i, j);
    for (int i = 0; i < n2; ++i)
        for (int j = i + 1; j < n2; ++j) g.add_edge(n1 + i, n1 + j);
    for (auto [i, j] : cross) {
        if (i < 0 || i >= n1 || j < 0 || j >= n2)
            throw Error(ErrorKind::bad_argument, "cross edge index out of range", {i, j});
        g.add_edge(i, n1 + j);
    }
    return g;
}

struct TwoCliqueOrientation {
    std::vector<int> order1, order2; // T first, tail last
    std::vector<int> z1, z2;         // the tails, sorted
    Digraph d;
};

// Orders each clique with its T-set first and a tail of tailSize vertices
// last, such that no path alternating between the cliques and of length at
// most 3 joins the two tails; then orients intra-clique edges toward the
// earlier vertex and makes cross edges bidirected except at a tail vertex,
// where the edge points into the tail.
inline TwoCliqueOrientation build_two_clique_orientation(const TwoCliqueInstance& inst) {
    inst.validate();
    const Graph& h = inst.h;
    const int p = inst.cross_degree_cap, t = inst.tail_size, s = inst.list_slack;
    auto side = inst.side_of();

    // Counting preconditions, generalized from the concrete bounds. The tail
    // exclusion covers both construction branches; the last bound keeps
    // out-degrees below the shortened lists of T-vertices.
    long long exclusion = 1ll * t * p * (1ll * (p - 1) * (p - 1) + 1) + t + 1;
    auto require = [&](bool ok, const char* what, std::vector<long long> witness) {
        if (!ok) throw Error(ErrorKind::hypotheses_too_tight, what, std::move(witness));
    };
    long long n1 = static_cast<long long>(inst.b1.size());
    long long n2 = static_cast<long long>(inst.b2.size());
    long long k1 = static_cast<long long>(inst.t1.size());
    long long k2 = static_cast<long long>(inst.t2.size());
    require(n1 >= k1 + exclusion && n2 >= k2 + exclusion, "tail exclusion bound fails",
            {n1, n2, k1, k2, exclusion});
    require(n1 >= k1 + p * k2 + t && n2 >= k2 + p * k1 + t, "fallback tail choice bound fails",
            {n1, n2, k1, k2});
    require(k1 + p + s <= n1 && k2 + p + s <= n2, "T out-degree bound fails",
            {n1, n2, k1, k2, static_cast<long long>(p + s)});

    std::vector<char> in_t(h.vertex_count(), 0);
    for (int v : inst.t1) in_t[v] = 1;
    for (int v : inst.t2) in_t[v] = 1;

    auto cross_neighbors = [&](int v) {
        std::vector<int> out;
        for (int u : h.neighbors(v))
            if (side[u] != side[v]) out.push_back(u);
        return out;
    };
    std::vector<char> near_t2(h.vertex_count(), 0);
    for (int v : inst.t2)
        for (int u : h.neighbors(v)) near_t2[u] = 1;
    std::vector<char> near_t1(h.vertex_count(), 0);
    for (int v : inst.t1)
        for (int u : h.neighbors(v)) near_t1[u] = 1;

    // Tail of B2: preferably all cross neighbors of a B1-vertex away from T2
    // with full cross degree (then its cross edges point only into the tail);
    // otherwise any tailSize vertices of B2 clear of T2 and of N(T1).
    std::vector<int> z2;
    for (int v : inst.b1) {
        if (near_t2[v]) continue;
        auto cn = cross_neighbors(v);
        if (static_cast<int>(cn.size()) >= t) {
            z2.assign(cn.begin(), cn.begin() + t);
            break;
        }
    }
    if (z2.empty()) {
        for (int v : inst.b2) {
            if (in_t[v] || near_t1[v]) continue;
            z2.push_back(v);
            if (static_cast<int>(z2.size()) == t) break;
        }
        require(static_cast<int>(z2.size()) == t, "no room for the second tail",
                {static_cast<long long>(z2.size()), t});
    }
    std::sort(z2.begin(), z2.end());

    // Exact alternating reach of length <= 3 from z2 into B1; the tail of B1
    // avoids it, so no short alternating path can join the tails.
    std::vector<char> blocked(h.vertex_count(), 0);
    std::vector<char> in_z2(h.vertex_count(), 0);
    for (int v : z2) in_z2[v] = 1;
    std::vector<int> r1;
    for (int y : z2)
        for (int x : cross_neighbors(y))
            if (!blocked[x]) {
                blocked[x] = 1;
                r1.push_back(x);
            }
    std::vector<char> seen2(h.vertex_count(), 0);
    std::vector<int> r2;
    for (int x : r1)
        for (int y : cross_neighbors(x))
            if (!in_z2[y] && !seen2[y]) {
                seen2[y] = 1;
                r2.push_back(y);
            }
    for (int y : r2)
        for (int x : cross_neighbors(y)) blocked[x] = 1;

    std::vector<int> z1;
    for (int v : inst.b1) {
        if (in_t[v] || blocked[v]) continue;
        z1.push_back(v);
        if (static_cast<int>(z1.size()) == t) break;
    }
    require(static_cast<int>(z1.size()) == t, "no room for the first tail",
            {static_cast<long long>(z1.size()), t});

    auto make_order = [&](const std::vector<int>& b, const std::vector<int>& head,
                          const std::vector<int>& tail) {
        std::vector<char> used(h.vertex_count(), 0);
        for (int v : head) used[v] = 1;
        for (int v : tail) used[v] = 1;
        std::vector<int> order = head;
        for (int v : b)
            if (!used[v]) order.push_back(v);
        order.insert(order.end(), tail.begin(), tail.end());
        return order;
    };
    TwoCliqueOrientation result;
    result.z1 = z1;
    result.z2 = z2;
    result.order1 = make_order(inst.b1, inst.t1, z1);
    result.order2 = make_order(inst.b2, inst.t2, z2);

    std::vector<int> pos(h.vertex_count(), -1);
    for (std::size_t i = 0; i < result.order1.size(); ++i) pos[result.order1[i]] = static_cast<int>(i);
    for (std::size_t i = 0; i < result.order2.size(); ++i) pos[result.order2[i]] = static_cast<int>(i);
    std::vector<char> in_tail(h.vertex_count(), 0);
    for (int v : z1) in_tail[v] = 1;
    for (int v : z2) in_tail[v] = 1;

    Digraph d(h.vertex_count());
    for (auto [u, v] : h.edges()) {
        if (side[u] == side[v]) {
            if (pos[u] < pos[v]) d.add_arc(v, u);
            else d.add_arc(u, v);
        } else if (in_tail[u] && in_tail[v]) {
            throw Error(ErrorKind::hypotheses_too_tight, "edge joins the two tails", {u, v});
        } else if (in_tail[u]) {
            d.add_arc(v, u);
        } else if (in_tail[v]) {
            d.add_arc(u, v);
        } else {
            d.add_arc(u, v);
            d.add_arc(v, u);
        }
    }
    result.d = std::move(d);
    return result;
}

// Pads every matching so the endpoint of smaller capacity is saturated:
// unmatched colors on that side get paired, in increasing order, with the
// other side's unmatched colors. A coloring valid for the padded assignment
// is valid for the original.
inline CorrAssignment saturate_matchings(const Graph& h, const CorrAssignment& corr) {
    corr.validate(h);
    CorrAssignment full = corr;
    for (auto [u, v] : h.edges()) {
        auto& pairs = full.matchings[{u, v}];
        std::vector<char> used_u(full.capacity[u], 0), used_v(full.capacity[v], 0);
        for (auto [a, b] : pairs) {
            used_u[a] = 1;
            used_v[b] = 1;
        }
        bool u_small = full.capacity[u] <= full.capacity[v];
        int a = 0, b = 0;
        while (true) {
            while (a < full.capacity[u] && used_u[a]) ++a;
            while (b < full.capacity[v] && used_v[b]) ++b;
            if (u_small ? a >= full.capacity[u] : b >= full.capacity[v]) break;
            pairs.emplace_back(a, b);
            used_u[a] = 1;
            used_v[b] = 1;
        }
    }
    return full;
}

// Correspondence coloring of a two-clique instance whose maximum degree may
// exceed the clique size by up to crossDegreeCap. For each vertex of the
// excess set A, coloring a cross neighbor w together with a non-neighbor x
// using colors that forbid the same color on v costs A only one color per
// pair; the rest is a greedy sweep that keeps, as the last B2 vertices, a
// reserve with no colored B1-neighbor.
inline std::vector<int> save_color_coloring(const TwoCliqueInstance& inst,
                                            const CorrAssignment& corr) {
    inst.validate();
    const Graph& h = inst.h;
    corr.validate(h);
    const int p = inst.cross_degree_cap, s = inst.list_slack;
    auto side = inst.side_of();

    auto require = [&](bool ok, const char* what, std::vector<long long> witness) {
        if (!ok) throw Error(ErrorKind::hypotheses_too_tight, what, std::move(witness));
    };
    long long n = static_cast<long long>(inst.b1.size());
    require(static_cast<long long>(inst.b2.size()) == n, "cliques must have equal size",
            {n, static_cast<long long>(inst.b2.size())});
    int delta = h.max_degree();
    int excess = std::max(0, delta + 1 - static_cast<int>(n));
    require(delta - n + 1 <= p, "degree excess above cross degree cap", {delta, n, p});

    std::vector<char> in_t(h.vertex_count(), 0);
    for (int v : inst.t1) in_t[v] = 1;
    for (int v : inst.t2) in_t[v] = 1;
    for (int v = 0; v < h.vertex_count(); ++v) {
        long long need = in_t[v] ? n - s : n;
        require(corr.capacity[v] >= need, "capacity below the scaled floor",
                {v, corr.capacity[v], need});
    }

    long long k1 = static_cast<long long>(inst.t1.size());
    long long k2 = static_cast<long long>(inst.t2.size());
    require(n >= k2 + 1ll * p * p * p + 1ll * p * p + p, "no room for the final reserve",
            {n, k2, p});
    require(n > k1 + 1ll * std::max(0, excess - 1) * (1ll * p * (p - 1) + 1),
            "no room for a scattered excess set", {n, k1, excess, p});
    require(n >= 2ll * (s + 1ll * p * p + p) - 1, "pigeonhole margin fails", {n, s, p});
    require(n >= s + 1ll * p * p + p + std::max(k1, k2), "T coloring margin fails",
            {n, s, p, std::max(k1, k2)});
    require(s >= p, "list slack below cross degree cap", {s, p});

    CorrAssignment sat = saturate_matchings(h, corr);

    std::vector<int> color(h.vertex_count(), -1);
    auto available = [&](int u, int c) {
        if (c < 0 || c >= sat.capacity[u]) return false;
        for (int z : h.neighbors(u))
            if (color[z] >= 0 && sat.conflicts(u, c, z, color[z])) return false;
        return true;
    };
    // Color of u matched with color c of v on edge uv, or -1.
    auto matched_color = [&](int v, int c, int u) {
        int a = v, b = u, swap = 0;
        if (a > b) {
            std::swap(a, b);
            swap = 1;
        }
        auto it = sat.matchings.find({a, b});
        if (it == sat.matchings.end()) return -1;
        for (auto [x, y] : it->second) {
            if (!swap && x == c) return y;
            if (swap && y == c) return x;
        }
        return -1;
    };

    // Excess set A: vertices of B1 outside T1 with pairwise disjoint
    // B2-neighborhoods.
    std::vector<int> a_set;
    std::vector<char> in_a(h.vertex_count(), 0);
    {
        std::vector<char> taken_b2(h.vertex_count(), 0);
        for (int v : inst.b1) {
            if (static_cast<int>(a_set.size()) == excess) break;
            if (in_t[v]) continue;
            bool clear = true;
            for (int u : h.neighbors(v))
                if (side[u] == 1 && taken_b2[u]) {
                    clear = false;
                    break;
                }
            if (!clear) continue;
            a_set.push_back(v);
            in_a[v] = 1;
            for (int u : h.neighbors(v))
                if (side[u] == 1) taken_b2[u] = 1;
        }
        require(static_cast<int>(a_set.size()) == excess, "excess set not found",
                {static_cast<long long>(a_set.size()), excess});
    }

    // Save a color for each v in A, once per cross neighbor: color that
    // neighbor w and some x in B1 outside N(w), A and T1 with colors matched
    // to a common color of v.
    for (int v : a_set) {
        while (true) {
            int w = -1;
            for (int u : h.neighbors(v))
                if (side[u] == 1 && color[u] < 0) {
                    w = u;
                    break;
                }
            if (w == -1) break;
            int x = -1;
            for (int u : inst.b1) {
                if (color[u] >= 0 || in_a[u] || in_t[u] || u == v) continue;
                if (h.has_edge(u, w)) continue;
                x = u;
                break;
            }
            require(x != -1, "no partner for saving a color", {v, w});
            int alpha = -1, beta = -1;
            for (int c = 0; c < sat.capacity[v]; ++c) {
                int ca = matched_color(v, c, w);
                if (ca < 0 || !available(w, ca)) continue;
                int cb = matched_color(v, c, x);
                if (cb < 0 || !available(x, cb)) continue;
                alpha = ca;
                beta = cb;
                break;
            }
            if (alpha < 0)
                throw Error(ErrorKind::pigeonhole_failure,
                            "no common forbidden color found", {v, w, x});
            color[w] = alpha;
            color[x] = beta;
        }
    }

    // Reserve: the last B2 vertices we color must have no colored neighbor in
    // B1 at this point.
    std::vector<int> reserve;
    std::vector<char> in_reserve(h.vertex_count(), 0);
    for (int u : inst.b2) {
        if (static_cast<int>(reserve.size()) == p) break;
        if (in_t[u] || color[u] >= 0) continue;
        bool clear = true;
        for (int z : h.neighbors(u))
            if (side[z] == 0 && color[z] >= 0) {
                clear = false;
                break;
            }
        if (!clear) continue;
        reserve.push_back(u);
        in_reserve[u] = 1;
    }
    require(static_cast<int>(reserve.size()) == p, "final reserve not found",
            {static_cast<long long>(reserve.size()), p});

    std::vector<int> order;
    for (int u : inst.t2) order.push_back(u);
    for (int u : inst.b2)
        if (!in_t[u] && !in_reserve[u]) order.push_back(u);
    for (int u : reserve) order.push_back(u);
    for (int u : inst.t1) order.push_back(u);
    for (int u : inst.b1)
        if (!in_t[u] && !in_a[u]) order.push_back(u);
    for (int u : a_set) order.push_back(u);

    for (int u : order) {
        if (color[u] >= 0) continue;
        int picked = -1;
        for (int c = 0; c < sat.capacity[u]; ++c)
            if (available(u, c)) {
                picked = c;
                break;
            }
        if (picked < 0)
            throw Error(ErrorKind::pigeonhole_failure, "greedy phase ran out of colors", {u});
        color[u] = picked;
    }
    return color;
}

} // namespace chroma2
