#pragma once

#include <functional>
#include <stdexcept>
#include <string>

namespace hstn::specfun {

/// Tolerances and budget for the adaptive quadrature routines.
struct QuadratureSpec {
    double abs_tol = 1e-10;
    double rel_tol = 1e-8;
    int max_subdivisions = 2000;

    void validate() const;
};

/// Raised when a numerical routine cannot reach the requested tolerance.
/// Carries the best estimate obtained so far.
class AccuracyError : public std::runtime_error {
public:
    AccuracyError(const std::string& what, double best_estimate)
        : std::runtime_error(what), best_(best_estimate) {}
    double best_estimate() const noexcept { return best_; }

private:
    double best_;
};

/// log(Gamma(x)) for x > 0.
double ln_gamma(double x);

/// Regularized lower incomplete gamma P(a, x) = gamma(a, x) / Gamma(a).
double reg_lower_incomplete_gamma(double a, double x);

/// Bessel function of the first kind, orders 1 and 3 only.
double bessel_j(int order, double x);

/// Modified Bessel function of the second kind, nonnegative integer order.
double bessel_k(int order, double x);

/// Beta function B(a, b), a, b > 0.
double beta(double a, double b);

/// Pochhammer symbol (a)_k = a (a+1) ... (a+k-1); 1 for k = 0.
double pochhammer(double a, int k);

using Integrand = std::function<double(double)>;

/// Adaptive Gauss-Kronrod 15(7) quadrature over [a, b].
double integrate_finite(const Integrand& f, double a, double b,
                        const QuadratureSpec& spec = {});

/// Integral over [a, inf) via the substitution x = a + t/(1-t).
double integrate_semi_infinite(const Integrand& f, double a,
                               const QuadratureSpec& spec = {});

}  // namespace hstn::specfun
