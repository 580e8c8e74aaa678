// Walks the charge ledger of a random C4-free plane graph and prints the
// stage totals, the minimum final charge, and the configuration findings.
#include <cstdlib>
#include <iostream>

#include "chroma2/discharge.hpp"
#include "chroma2/generators.hpp"

using namespace chroma2;

int main(int argc, char** argv) {
    int n = argc > 1 ? std::atoi(argv[1]) : 60;
    std::uint64_t seed = argc > 2 ? std::strtoull(argv[2], nullptr, 10) : 7;

    PlaneGraph pg = random_plane_c4free(n, seed);
    std::cout << "graph: n=" << pg.g.vertex_count() << " m=" << pg.g.edges().size()
              << " delta=" << pg.g.max_degree() << "\n";

    ChargeLedger led = run_discharging(pg);
    for (const auto& st : led.stages)
        std::cout << "after " << st.name << ": total = " << rat_string(st.total()) << "\n";

    auto [el, val] = min_final_charge(led);
    std::cout << "minimum final charge " << rat_string(val) << " at " << el.kind << el.index
              << "\n";

    ConfigurationReport rep = find_reducible_configurations(pg, 10);
    std::cout << rep.findings.size() << " reducible configurations\n";
    for (std::size_t i = 0; i < rep.findings.size() && i < 8; ++i) {
        std::cout << "  " << config_kind_name(rep.findings[i].kind) << ":";
        for (int v : rep.findings[i].witness) std::cout << ' ' << v;
        std::cout << "\n";
    }
    return 0;
}
