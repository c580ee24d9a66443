// Relative Weyl group of E7 over the D4 Levi on nodes 2,3,4,5.

#include <iostream>
#include <vector>

#include "weylsheaf/weylsheaf.hpp"

int main() {
    using namespace weylsheaf;
    RootSystem rs(parse_cartan_type("E7"));
    const auto J = SubsetJ::from_indices(std::vector<int>{1, 2, 3, 4});  // 0-based
    const auto g = relative_weyl_group(rs, J);

    std::cout << "levi     " << subdiagram_type(rs, J).name() << "\n";
    std::cout << "relative " << g.identified_type.name() << "\n";
    for (std::size_t k = 0; k < g.complement.size(); ++k) {
        std::cout << "sigma_" << g.complement[k] + 1 << " =";
        for (int s : g.words[k]) std::cout << " s" << s + 1;
        std::cout << "\n";
    }
    std::cout << "coxeter matrix\n";
    for (const auto& row : g.coxeter_matrix) {
        for (auto v : row) std::cout << "  " << v;
        std::cout << "\n";
    }
    return 0;
}
