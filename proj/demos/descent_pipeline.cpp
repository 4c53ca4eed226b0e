// From a pair of integral points to an integral orbit over Z/5^6.
#include <iostream>

#include "selorb/descent/descent.hpp"

using namespace selorb;

int main()
{
    HyperCurve C{1, {Z(0), Z(1)}}; // y^2 = x^3 + 1
    PolyZ f = C.f();
    auto D = mumford_from_points({{Z(2), Z(3)}}, f);
    auto I = ideal_from_divisor(D, f);
    auto a = delta_class(D, f);
    auto g = gram_pair(I, a, f);
    std::cout << "N(I) = " << I.index << ", N(alpha) = " << a.norm << "\n";
    std::cout << "det G = " << det_bareiss(g.G) << ", certificate " << (g.certificate() ? "ok" : "FAILED") << "\n";

    auto o = integral_orbit_zp(C, D, Z(5), 6);
    std::cout << "B mod 5^6:\n";
    for (int i = 0; i < 3; ++i) {
        for (int j = 0; j < 3; ++j)
            std::cout << " " << o.B.B(i, j);
        std::cout << "\n";
    }
    std::cout << "invariants match mod 5^6: " << (o.invariants_ok ? "yes" : "no") << "\n";
}
