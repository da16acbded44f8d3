#pragma once

#include <algorithm>
#include <cmath>

namespace tmf {

// Golden-section maximization of a unimodal f on [a, b]. Endpoints are never
// evaluated, so singular boundary values (-inf) are harmless. Returns the
// best value seen once the bracket is below xtol.
template <class F>
double golden_section_max(F&& f, double a, double b, double xtol) {
    constexpr double invphi = 0.61803398874989484820;
    double c = b - invphi * (b - a);
    double d = a + invphi * (b - a);
    double fc = f(c);
    double fd = f(d);
    double best = std::max(fc, fd);
    while (b - a > xtol) {
        if (fc < fd) {
            a = c;
            c = d;
            fc = fd;
            d = a + invphi * (b - a);
            fd = f(d);
        } else {
            b = d;
            d = c;
            fd = fc;
            c = b - invphi * (b - a);
            fc = f(c);
        }
        best = std::max(best, std::max(fc, fd));
    }
    return best;
}

}  // namespace tmf
