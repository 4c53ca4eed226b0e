// Expansion of the regular differential at infinity and the Strassmann count on 3Z_3.
#include <iostream>

#include "selorb/padic/chabauty.hpp"

using namespace selorb;

int main()
{
    HyperCurve C{1, {Z(2), Z(2)}};
    auto ex = omega_expansion(C, 0, 14);
    std::cout << "omega =";
    for (size_t j = 0; j < ex.omega.size(); ++j)
        if (ex.omega[j] != 0)
            std::cout << " + (" << ex.omega[j] << ") z^" << j;
    std::cout << " dz\n";
    auto rep = chabauty_bound_at_3(C);
    std::cout << "filter passed: " << rep.applicable << ", zeros on 3Z_3 <= " << rep.bound << "\n";
}
