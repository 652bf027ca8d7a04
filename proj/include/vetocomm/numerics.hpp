#pragma once

#include <functional>

namespace vetocomm::num {

/// Standard normal pdf.
double normal_pdf(double z);

/// Standard normal cdf via erfc, accurate in both tails.
double normal_cdf(double z);

/// Upper-tail standard normal probability P(Z > z).
double normal_sf(double z);

/// Inverse standard normal cdf (Wichura's AS241, |error| ~ 1e-15).
double normal_quantile(double p);

/// log(1 + e^z) without overflow.
double softplus(double z);

/// Real dilogarithm Li2(x) for x <= 0.
double dilog_neg(double x);

struct RootResult {
    double x = 0.0;
    double fx = 0.0;
    int iterations = 0;
    bool converged = false;
};

/// Finds the root of f on [lo, hi] assuming f(lo) and f(hi) have opposite
/// signs. Safeguarded secant/bisection hybrid; stops when the bracket width
/// is below xtol * max(1, |x|). converged=false when the initial bracket
/// carries no sign change.
RootResult find_root_bracketed(const std::function<double(double)>& f,
                               double lo, double hi,
                               double xtol = 1e-12, int max_iter = 200);

/// Golden-section minimization on [lo, hi]; returns the argmin.
/// Endpoints are included as candidates, so boundary minima are exact.
double golden_min(const std::function<double(double)>& f,
                  double lo, double hi, double xtol = 1e-10);

/// Adaptive Simpson quadrature of f over [a, b].
double adaptive_simpson(const std::function<double(double)>& f,
                        double a, double b, double tol = 1e-10);

/// Nodes/weights of the 32-point Gauss-Legendre rule on [-1, 1]
/// (positive half; the rule is symmetric).
inline constexpr int kGaussLegendreHalf = 16;
extern const double kGaussLegendreNodes[kGaussLegendreHalf];
extern const double kGaussLegendreWeights[kGaussLegendreHalf];

/// 32-point Gauss-Legendre quadrature of f over [a, b].
double gauss_legendre_32(const std::function<double(double)>& f, double a, double b);

} // namespace vetocomm::num
