#pragma once

#include <istream>
#include <map>
#include <optional>
#include <ostream>
#include <set>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "chroma2/exact_color.hpp"
#include "chroma2/graph.hpp"
#include "chroma2/kernel.hpp"
#include "chroma2/multigraph.hpp"
#include "chroma2/plane.hpp"

namespace chroma2 {

namespace detail {

struct Token {
    std::string text;
    int line = 0, col = 0; // 1-based
};

[[noreturn]] inline void reject(int line, int col, const std::string& what) {
    std::ostringstream os;
    os << "line " << line << ", column " << col << ": " << what;
    throw Error(ErrorKind::format, os.str(), {line, col});
}

// Lines of whitespace-separated tokens; # starts a comment; blank lines and
// comment-only lines vanish.
inline std::vector<std::vector<Token>> tokenize(std::istream& in) {
    std::vector<std::vector<Token>> out;
    std::string raw;
    int lineno = 0;
    while (std::getline(in, raw)) {
        ++lineno;
        auto hash = raw.find('#');
        if (hash != std::string::npos) raw.erase(hash);
        std::vector<Token> toks;
        std::size_t i = 0;
        while (i < raw.size()) {
            if (std::isspace(static_cast<unsigned char>(raw[i]))) {
                ++i;
                continue;
            }
            std::size_t j = i;
            while (j < raw.size() && !std::isspace(static_cast<unsigned char>(raw[j]))) ++j;
            toks.push_back({raw.substr(i, j - i), lineno, static_cast<int>(i) + 1});
            i = j;
        }
        if (!toks.empty()) out.push_back(std::move(toks));
    }
    return out;
}

inline long long token_int(const Token& t) {
    std::size_t pos = 0;
    long long val = 0;
    try {
        val = std::stoll(t.text, &pos);
    } catch (const std::exception&) {
        reject(t.line, t.col, "expected an integer, got '" + t.text + "'");
    }
    if (pos != t.text.size())
        reject(t.line, t.col, "expected an integer, got '" + t.text + "'");
    return val;
}

inline int token_vertex(const Token& t, int n) {
    long long v = token_int(t);
    if (v < 0 || v >= n)
        reject(t.line, t.col, "vertex " + t.text + " out of range [0, " + std::to_string(n) + ")");
    return static_cast<int>(v);
}

} // namespace detail

// First line `n m`, then m lines `u v` with u < v, 0-indexed.
inline Graph parse_edge_list(std::istream& in) {
    auto lines = detail::tokenize(in);
    if (lines.empty()) detail::reject(1, 1, "empty input, expected 'n m' header");
    const auto& hdr = lines[0];
    if (hdr.size() != 2)
        detail::reject(hdr[0].line, hdr[0].col, "header must be 'n m'");
    long long n = detail::token_int(hdr[0]), m = detail::token_int(hdr[1]);
    if (n < 0 || n > 1000000) detail::reject(hdr[0].line, hdr[0].col, "vertex count out of range");
    if (m < 0) detail::reject(hdr[1].line, hdr[1].col, "edge count negative");
    if (static_cast<long long>(lines.size()) - 1 != m)
        detail::reject(hdr[1].line, hdr[1].col,
                       "header promises " + std::to_string(m) + " edges, file has " +
                           std::to_string(lines.size() - 1));
    Graph g(static_cast<int>(n));
    for (std::size_t i = 1; i < lines.size(); ++i) {
        const auto& row = lines[i];
        if (row.size() != 2) detail::reject(row[0].line, row[0].col, "edge line must be 'u v'");
        int u = detail::token_vertex(row[0], static_cast<int>(n));
        int v = detail::token_vertex(row[1], static_cast<int>(n));
        if (u >= v) detail::reject(row[0].line, row[0].col, "edges must satisfy u < v");
        if (g.has_edge(u, v)) detail::reject(row[0].line, row[0].col, "duplicate edge");
        g.add_edge(u, v);
    }
    return g;
}

// Same shape as the edge list, but each line `u v` is the arc u -> v.
inline Digraph parse_digraph(std::istream& in) {
    auto lines = detail::tokenize(in);
    if (lines.empty()) detail::reject(1, 1, "empty input, expected 'n m' header");
    const auto& hdr = lines[0];
    if (hdr.size() != 2)
        detail::reject(hdr[0].line, hdr[0].col, "header must be 'n m'");
    long long n = detail::token_int(hdr[0]), m = detail::token_int(hdr[1]);
    if (n < 0 || n > 1000000) detail::reject(hdr[0].line, hdr[0].col, "vertex count out of range");
    if (static_cast<long long>(lines.size()) - 1 != m)
        detail::reject(hdr[1].line, hdr[1].col,
                       "header promises " + std::to_string(m) + " arcs, file has " +
                           std::to_string(lines.size() - 1));
    Digraph d(static_cast<int>(n));
    for (std::size_t i = 1; i < lines.size(); ++i) {
        const auto& row = lines[i];
        if (row.size() != 2) detail::reject(row[0].line, row[0].col, "arc line must be 'u v'");
        int u = detail::token_vertex(row[0], static_cast<int>(n));
        int v = detail::token_vertex(row[1], static_cast<int>(n));
        if (u == v) detail::reject(row[0].line, row[0].col, "loops not allowed");
        if (d.has_arc(u, v)) detail::reject(row[0].line, row[0].col, "duplicate arc");
        d.add_arc(u, v);
    }
    return d;
}

// Line 1 `n`, then one line per vertex: `v: w1 w2 ... wd` in rotation order.
// Each half-edge must have its partner and the rotation system must satisfy
// the Euler formula on every component.
inline PlaneGraph parse_plane(std::istream& in) {
    auto lines = detail::tokenize(in);
    if (lines.empty()) detail::reject(1, 1, "empty input, expected vertex count");
    if (lines[0].size() != 1)
        detail::reject(lines[0][0].line, lines[0][0].col, "first line must be the vertex count");
    long long n = detail::token_int(lines[0][0]);
    if (n < 0 || n > 1000000)
        detail::reject(lines[0][0].line, lines[0][0].col, "vertex count out of range");
    if (static_cast<long long>(lines.size()) - 1 != n)
        detail::reject(lines[0][0].line, lines[0][0].col,
                       "expected one rotation line per vertex");

    std::vector<std::vector<int>> rot(n);
    std::vector<char> seen(n, 0);
    for (std::size_t i = 1; i < lines.size(); ++i) {
        auto row = lines[i];
        // The colon may hug the vertex id or stand alone.
        std::size_t first = 0;
        detail::Token head = row[0];
        if (!head.text.empty() && head.text.back() == ':') {
            head.text.pop_back();
            first = 1;
        } else if (row.size() >= 2 && row[1].text == ":") {
            first = 2;
        } else {
            detail::reject(head.line, head.col, "rotation line must start 'v:'");
        }
        int v = detail::token_vertex(head, static_cast<int>(n));
        if (seen[v]) detail::reject(head.line, head.col, "vertex listed twice");
        seen[v] = 1;
        std::set<int> dedupe;
        for (std::size_t k = first; k < row.size(); ++k) {
            int w = detail::token_vertex(row[k], static_cast<int>(n));
            if (w == v) detail::reject(row[k].line, row[k].col, "loop not allowed");
            if (!dedupe.insert(w).second)
                detail::reject(row[k].line, row[k].col, "repeated neighbor");
            rot[v].push_back(w);
        }
    }
    for (int v = 0; v < n; ++v)
        for (int w : rot[v]) {
            bool back = false;
            for (int x : rot[w]) back = back || x == v;
            if (!back)
                throw Error(ErrorKind::format,
                            "half-edge " + std::to_string(v) + "->" + std::to_string(w) +
                                " has no partner",
                            {v, w});
        }

    Graph g(static_cast<int>(n));
    for (int v = 0; v < n; ++v)
        for (int w : rot[v])
            if (v < w) g.add_edge(v, w);
    PlaneGraph pg(std::move(g), std::move(rot));
    if (!euler_check(pg))
        throw Error(ErrorKind::invalid_rotation, "rotation system fails the Euler formula");
    return pg;
}

// A graph input that may or may not carry an embedding; edge-list inputs have
// a two-token header, plane inputs a one-token header.
struct GraphInput {
    Graph g;
    std::optional<PlaneGraph> plane;

    const PlaneGraph& require_plane(const char* who) const {
        if (!plane)
            throw Error(ErrorKind::bad_argument,
                        std::string(who) + " needs a plane input with rotations");
        return *plane;
    }
};

inline GraphInput parse_graph_auto(std::istream& in) {
    std::stringstream buf;
    buf << in.rdbuf();
    std::string text = buf.str();
    {
        std::istringstream probe(text);
        auto lines = detail::tokenize(probe);
        if (lines.empty()) detail::reject(1, 1, "empty input");
        if (lines[0].size() == 1) {
            std::istringstream again(text);
            PlaneGraph pg = parse_plane(again);
            return {pg.g, pg};
        }
    }
    std::istringstream again(text);
    return {parse_edge_list(again), std::nullopt};
}

// Header `lists n` or `corr n`. List lines `v : c1 c2 ...` carry a color
// list; in a corr file they instead fix the capacity, and must read 1..k.
// Matching lines `u v : a1-b1 a2-b2 ...` (corr only) pair colors of u with
// colors of v; file colors are 1-based, in-memory colors 0-based.
struct AssignmentFile {
    bool is_corr = false;
    int n = 0;
    std::vector<std::vector<int>> lists; // lists files
    CorrAssignment corr;                 // corr files
};

inline AssignmentFile parse_assignment(std::istream& in) {
    auto lines = detail::tokenize(in);
    if (lines.empty()) detail::reject(1, 1, "empty input, expected 'lists n' or 'corr n'");
    const auto& hdr = lines[0];
    if (hdr.size() != 2 || (hdr[0].text != "lists" && hdr[0].text != "corr"))
        detail::reject(hdr[0].line, hdr[0].col, "header must be 'lists n' or 'corr n'");
    AssignmentFile out;
    out.is_corr = hdr[0].text == "corr";
    long long n = detail::token_int(hdr[1]);
    if (n < 0 || n > 100000) detail::reject(hdr[1].line, hdr[1].col, "vertex count out of range");
    out.n = static_cast<int>(n);
    out.lists.assign(out.n, {});
    out.corr.capacity.assign(out.n, 0);
    std::vector<char> seen(out.n, 0);

    for (std::size_t i = 1; i < lines.size(); ++i) {
        auto row = lines[i];
        // Split at the colon token; it may hug the previous token.
        std::size_t colon = row.size();
        for (std::size_t k = 0; k < row.size(); ++k) {
            if (row[k].text == ":") {
                colon = k;
                break;
            }
            if (row[k].text.size() > 1 && row[k].text.back() == ':') {
                row[k].text.pop_back();
                row.insert(row.begin() + static_cast<long>(k) + 1,
                           {":", row[k].line, row[k].col + static_cast<int>(row[k].text.size())});
                colon = k + 1;
                break;
            }
        }
        if (colon == row.size() || colon == 0 || colon > 2)
            detail::reject(row[0].line, row[0].col, "expected 'v :' or 'u v :' before a colon");

        if (colon == 1) {
            int v = detail::token_vertex(row[0], out.n);
            if (seen[v]) detail::reject(row[0].line, row[0].col, "vertex listed twice");
            seen[v] = 1;
            std::vector<int> colors;
            for (std::size_t k = 2; k < row.size(); ++k)
                colors.push_back(static_cast<int>(detail::token_int(row[k])));
            if (out.is_corr) {
                for (std::size_t k = 0; k < colors.size(); ++k)
                    if (colors[k] != static_cast<int>(k) + 1)
                        detail::reject(row[k + 2].line, row[k + 2].col,
                                       "correspondence colors must read 1..k");
                out.corr.capacity[v] = static_cast<int>(colors.size());
            } else {
                std::set<int> dedupe(colors.begin(), colors.end());
                if (dedupe.size() != colors.size())
                    detail::reject(row[0].line, row[0].col, "repeated color in list");
                out.lists[v] = colors;
            }
            continue;
        }

        if (!out.is_corr)
            detail::reject(row[0].line, row[0].col, "matching line in a lists file");
        int u = detail::token_vertex(row[0], out.n);
        int v = detail::token_vertex(row[1], out.n);
        if (u == v) detail::reject(row[0].line, row[0].col, "matching endpoints equal");
        bool flip = u > v;
        if (flip) std::swap(u, v);
        if (out.corr.matchings.count({u, v}))
            detail::reject(row[0].line, row[0].col, "duplicate matching line for this pair");
        std::vector<std::pair<int, int>> pairs;
        std::set<int> as, bs;
        for (std::size_t k = 3; k < row.size(); ++k) {
            const auto& t = row[k];
            auto dash = t.text.find('-');
            if (dash == std::string::npos || dash == 0 || dash + 1 == t.text.size())
                detail::reject(t.line, t.col, "matching entries look like a-b");
            detail::Token ta{t.text.substr(0, dash), t.line, t.col};
            detail::Token tb{t.text.substr(dash + 1), t.line, t.col + static_cast<int>(dash) + 1};
            long long a = detail::token_int(ta), b = detail::token_int(tb);
            if (flip) std::swap(a, b);
            if (a < 1 || b < 1) detail::reject(t.line, t.col, "colors are 1-based");
            pairs.emplace_back(static_cast<int>(a) - 1, static_cast<int>(b) - 1);
            if (!as.insert(static_cast<int>(a)).second || !bs.insert(static_cast<int>(b)).second)
                detail::reject(t.line, t.col, "not a matching");
        }
        out.corr.matchings[{u, v}] = std::move(pairs);
    }

    for (int v = 0; v < out.n; ++v)
        if (!seen[v])
            throw Error(ErrorKind::format,
                        "vertex " + std::to_string(v) + " has no list line", {v});
    if (out.is_corr) {
        for (const auto& [e, pairs] : out.corr.matchings)
            for (auto [a, b] : pairs)
                if (a >= out.corr.capacity[e.first] || b >= out.corr.capacity[e.second])
                    throw Error(ErrorKind::format,
                                "matching references a color beyond the capacity",
                                {e.first, e.second, a + 1, b + 1});
    }
    return out;
}

inline void write_edge_list(std::ostream& os, const Graph& g) {
    auto edges = g.edges();
    os << g.vertex_count() << ' ' << edges.size() << '\n';
    for (auto [u, v] : edges) os << u << ' ' << v << '\n';
}

inline void write_plane(std::ostream& os, const PlaneGraph& pg) {
    os << pg.g.vertex_count() << '\n';
    for (int v = 0; v < pg.g.vertex_count(); ++v) {
        os << v << ':';
        for (int w : pg.rotation[v]) os << ' ' << w;
        os << '\n';
    }
}

// Output-only dump: live edges with ids and provenance, then rotations as
// id/side pairs. Comments carry the provenance paths.
inline void write_multigraph(std::ostream& os, const MultiGraph& mg) {
    os << "multigraph " << mg.active_count() << ' ' << mg.alive_edge_count() << '\n';
    for (std::size_t e = 0; e < mg.edges.size(); ++e) {
        if (!mg.edges[e].alive) continue;
        os << "edge " << e << ": " << mg.edges[e].u << ' ' << mg.edges[e].v << "  # path:";
        for (int x : mg.edges[e].provenance) os << ' ' << x;
        os << '\n';
    }
    for (int v = 0; v < mg.vertex_space(); ++v) {
        if (!mg.active[v]) continue;
        os << "rotation " << v << ':';
        for (const auto& d : mg.rotation[v]) os << ' ' << d.first << '/' << d.second;
        os << '\n';
    }
}

} // namespace chroma2
