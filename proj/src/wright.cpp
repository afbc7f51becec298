#include "grouppart/wright.hpp"

#include <cmath>
#include <stdexcept>
#include <vector>

#include "grouppart/errors.hpp"
#include "grouppart/lfunctions.hpp"
#include "grouppart/quadrature.hpp"

namespace grouppart {

namespace {

double integrand(double y) {
    // y log y / (e^{2 pi y} - 1); expm1 keeps the small-y regime accurate
    return y * std::log(y) / std::expm1(2.0 * 3.14159265358979323846 * y);
}

} // namespace

WrightConstant wright_c(double tol) {
    if (!(tol > 0)) throw std::invalid_argument("wright_c: tol must be positive");
    const double itol = std::min(tol / 4.0, 1e-12);
    const double cut = 30.0; // e^{-2 pi 30} ~ 1e-82, the tail is immaterial
    // tail allowance: integrand below 2^-54 and beyond the cut
    const double lo = std::ldexp(1.0, -54);
    const double lo_allow = lo * (1.0 - std::log(lo)) / (2.0 * 3.141592653589793);
    const double hi_allow = std::exp(-2.0 * 3.141592653589793 * cut) * (cut + 1.0) * (cut + 1.0);

    const auto ts0 = tanh_sinh(integrand, 0.0, 1.0, itol);
    const auto ts1 = tanh_sinh(integrand, 1.0, cut, itol);
    const double a = ts0.value + ts1.value;

    std::vector<double> pts;
    for (int k = 54; k >= 1; k -= 2) pts.push_back(std::ldexp(1.0, -k));
    for (int k = 1; k <= static_cast<int>(cut); ++k) pts.push_back(static_cast<double>(k));
    const auto cg = composite_gauss(integrand, pts, itol);
    const double b = cg.value + 0.0;

    const double disagreement = std::abs(a - b);
    if (disagreement > 1e-8)
        throw ToleranceError("wright_c: quadrature schemes disagree beyond 1e-8");
    const double bound = disagreement + ts0.error_estimate + ts1.error_estimate +
                         cg.error_estimate + lo_allow + hi_allow;
    if (bound > tol && tol < 1e-8)
        throw ToleranceError("wright_c: requested tolerance not certified");
    return {a, a, b, bound};
}

double wright_estimate(unsigned n, double tol) {
    if (n < 1) throw std::invalid_argument("wright_estimate: n must be >= 1");
    if (!(tol > 0)) throw std::invalid_argument("wright_estimate: tol must be positive");
    const double c = wright_c(tol).value;
    const double z3 = zeta_value(3.0, 1e-14).value.real();
    const double lead = std::pow(std::pow(z3, 7) / 2048.0, 1.0 / 36.0);
    const double dn = static_cast<double>(n);
    return lead * std::pow(dn, -25.0 / 36.0) *
           std::exp(3.0 * std::pow(2.0, -2.0 / 3.0) * std::cbrt(z3) * std::pow(dn, 2.0 / 3.0) +
                    2.0 * c);
}

} // namespace grouppart
