// Prints |(J, epsilon, zeta)| for the exceptional types and a reducible one,
// with the Harish-Chandra series of F4 spelled out.

#include <iostream>

#include "weylsheaf/weylsheaf.hpp"

int main() {
    using namespace weylsheaf;
    for (const char* t : {"G2", "F4", "E6", "E7", "E8", "B2+G2"})
        std::cout << t << "  " << count_parameters(parse_cartan_type(t)) << "\n";

    const auto rep = series_report(parse_cartan_type("F4"));
    std::cout << "\nF4 series\n";
    for (const auto& s : rep.series)
        std::cout << "  J=" << node_string(s.J) << " " << s.levi.name() << " zeta=" << s.zeta_string() << " W^{S/J}="
                  << s.relative.name() << " size " << s.count << "\n";
    return rep.total == 37 ? 0 : 1;
}
