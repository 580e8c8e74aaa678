// Runs the suppression/contraction pipeline on a hand-built fixture: two big
// hubs joined by parallel chains, so the derived multigraph collapses to a
// fat dipole and the region finder reports one cyclic region.
#include <algorithm>
#include <iostream>

#include "chroma2/io.hpp"
#include "chroma2/reduction.hpp"

using namespace chroma2;

int main() {
    // Three chains 0 - x - y - x' - 1 (y of degree 2 away from the hubs) and
    // six chains 0 - a - b - 1, giving both hubs degree 9.
    Graph g(23);
    std::vector<std::vector<int>> rot(23);
    int next = 2;
    std::vector<int> at0, at1;
    for (int chain = 0; chain < 3; ++chain) {
        int x = next++, y = next++, xp = next++;
        g.add_edge(0, x);
        g.add_edge(x, y);
        g.add_edge(y, xp);
        g.add_edge(1, xp);
        rot[x] = {0, y};
        rot[y] = {x, xp};
        rot[xp] = {y, 1};
        at0.push_back(x);
        at1.push_back(xp);
    }
    while (next < 23) {
        int a = next++, b = next++;
        g.add_edge(0, a);
        g.add_edge(a, b);
        g.add_edge(1, b);
        rot[a] = {0, b};
        rot[b] = {a, 1};
        at0.push_back(a);
        at1.push_back(b);
    }
    rot[0] = at0;
    rot[1] = at1;
    std::reverse(rot[1].begin(), rot[1].end());

    PlaneGraph pg(g, rot);
    VertexClass vc = classify_vertices(g, 5);

    MultiGraph gp = build_g_prime(pg, vc);
    std::cout << "--- after suppression and contraction ---\n";
    write_multigraph(std::cout, gp);

    auto types = classify_edge_types(gp, g, vc);
    for (const auto& [e, t] : types) std::cout << "edge " << e << " has type " << t.type << "\n";

    auto regions = find_regions(gp, g, vc);
    std::cout << regions.size() << " regions\n";
    for (const auto& r : regions) {
        std::cout << "  between " << r.b1 << " and " << r.b2 << ", size " << r.size()
                  << (r.cyclic ? " (cyclic)" : "") << ", B1={";
        for (int x : r.b1_set) std::cout << ' ' << x;
        std::cout << " } B2={";
        for (int x : r.b2_set) std::cout << ' ' << x;
        std::cout << " } D={";
        for (int x : r.d_set) std::cout << ' ' << x;
        std::cout << " }\n";
    }
    return 0;
}
