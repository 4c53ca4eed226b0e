// Orbit decomposition of every separable fibre of V(F_5), genus one.
#include <iostream>

#include "selorb/finite/census.hpp"

using namespace selorb;

int main()
{
    auto sc = space_census(1, 5);
    std::cout << "#V = " << sc.total << ", regular = " << sc.regular << ", |SO| = " << sc.group_order << "\n";
    for (auto &F : sc.fibers) {
        if (!F.separable)
            continue;
        std::cout << "x^3 + " << F.f[0] << "x + " << F.f[1] << ": m=" << F.m << " orbits";
        for (auto s : F.orbit_sizes)
            std::cout << " " << s;
        std::cout << "  stab " << F.stabilizer_order() << "\n";
    }
}
