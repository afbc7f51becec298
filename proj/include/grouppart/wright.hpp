#pragma once

namespace grouppart {

// c = \int_0^oo y log(y) / (e^{2 pi y} - 1) dy, evaluated independently by a
// tanh-sinh rule and by a composite Gauss rule; the two must agree to 1e-8.
struct WrightConstant {
    double value;            // the tanh-sinh result
    double tanh_sinh_value;
    double gauss_value;
    double error_bound;      // scheme disagreement plus truncation allowances
};

WrightConstant wright_c(double tol);

// (zeta(3)^7 * 2^-11)^{1/36} * n^{-25/36} * exp(3 * 2^{-2/3} * zeta(3)^{1/3} * n^{2/3} + 2c)
double wright_estimate(unsigned n, double tol);

} // namespace grouppart
