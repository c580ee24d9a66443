// Character table of the dihedral group of order 10; values live in Q(zeta_5).

#include <iostream>

#include "weylsheaf/weylsheaf.hpp"

int main() {
    using namespace weylsheaf::group;
    const auto t = character_table(dihedral_group(5));
    std::cout << "|G| = " << t.group_order << ", " << t.size() << " classes\n";
    std::cout << "sizes  ";
    for (auto s : t.class_sizes) std::cout << s << "\t";
    std::cout << "\norders ";
    for (auto o : t.element_orders) std::cout << o << "\t";
    std::cout << "\n";
    for (std::size_t a = 0; a < t.size(); ++a) {
        std::cout << "chi_" << a + 1 << "  ";
        for (const auto& v : t.values[a]) std::cout << v.to_string() << "\t";
        std::cout << "\n";
    }
    const bool ok = t.rows_orthogonal() && t.columns_orthogonal();
    std::cout << "orthogonality " << (ok ? "holds" : "FAILS") << "\n";
    return ok ? 0 : 1;
}
