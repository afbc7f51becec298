#pragma once

#include <functional>
#include <vector>

namespace grouppart {

struct QuadResult {
    double value;
    double error_estimate;
};

// Tanh-sinh (double-exponential) rule on (a, b). Handles integrable endpoint
// singularities; the integrand is evaluated strictly inside the interval.
QuadResult tanh_sinh(const std::function<double(double)>& f, double a, double b, double tol);

// Composite 16-point Gauss-Legendre over the given breakpoints; every panel
// is halved repeatedly until the total changes by less than tol.
QuadResult composite_gauss(const std::function<double(double)>& f,
                           const std::vector<double>& breakpoints, double tol);

} // namespace grouppart
