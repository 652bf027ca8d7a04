#include "vetocomm/numerics.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace vetocomm::num {

namespace {
constexpr double kSqrt2 = 1.4142135623730950488;
constexpr double kInvSqrt2Pi = 0.39894228040143267794;
constexpr double kPi2Over6 = 1.6449340668482264365;
} // namespace

double normal_pdf(double z) { return kInvSqrt2Pi * std::exp(-0.5 * z * z); }

double normal_cdf(double z) { return 0.5 * std::erfc(-z / kSqrt2); }

double normal_sf(double z) { return 0.5 * std::erfc(z / kSqrt2); }

// AS241 (PPND16), Wichura 1988.
double normal_quantile(double p) {
    if (!(p > 0.0 && p < 1.0)) {
        if (p == 0.0) return -std::numeric_limits<double>::infinity();
        if (p == 1.0) return std::numeric_limits<double>::infinity();
        throw std::domain_error("normal_quantile: p outside [0,1]");
    }
    const double q = p - 0.5;
    double r;
    if (std::fabs(q) <= 0.425) {
        r = 0.180625 - q * q;
        return q *
               (((((((2.5090809287301226727e3 * r + 3.3430575583588128105e4) * r +
                     6.7265770927008700853e4) * r + 4.5921953931549871457e4) * r +
                   1.3731693765509461125e4) * r + 1.9715909503065514427e3) * r +
                 1.3314166789178437745e2) * r + 3.3871328727963666080e0) /
               (((((((5.2264952788528545610e3 * r + 2.8729085735721942674e4) * r +
                     3.9307895800092710610e4) * r + 2.1213794301586595867e4) * r +
                   5.3941960214247511077e3) * r + 6.8718700749205790830e2) * r +
                 4.2313330701600911252e1) * r + 1.0);
    }
    r = (q < 0.0) ? p : 1.0 - p;
    r = std::sqrt(-std::log(r));
    double x;
    if (r <= 5.0) {
        r -= 1.6;
        x = (((((((7.74545014278341407640e-4 * r + 2.27238449892691845833e-2) * r +
                  2.41780725177450611770e-1) * r + 1.27045825245236838258e0) * r +
                3.64784832476320460504e0) * r + 5.76949722146069140550e0) * r +
              4.63033784615654529590e0) * r + 1.42343711074968357734e0) /
            (((((((1.05075007164441684324e-9 * r + 5.47593808499534494600e-4) * r +
                  1.51986665636164571966e-2) * r + 1.48103976427480074590e-1) * r +
                6.89767334985100004550e-1) * r + 1.67638483018380384940e0) * r +
              2.05319162663775882187e0) * r + 1.0);
    } else {
        r -= 5.0;
        x = (((((((2.01033439929228813265e-7 * r + 2.71155556874348757815e-5) * r +
                  1.24266094738807843860e-3) * r + 2.65321895265761230930e-2) * r +
                2.96560571828504891230e-1) * r + 1.78482653991729133580e0) * r +
              5.46378491116411436990e0) * r + 6.65790464350110377720e0) /
            (((((((2.04426310338993978564e-15 * r + 1.42151175831644588870e-7) * r +
                  1.84631831751005468180e-5) * r + 7.86869131145613259100e-4) * r +
                1.48753612908506148525e-2) * r + 1.36929880922735805310e-1) * r +
              5.99832206555887937690e-1) * r + 1.0);
    }
    return (q < 0.0) ? -x : x;
}

double softplus(double z) {
    return std::log1p(std::exp(-std::fabs(z))) + std::max(z, 0.0);
}

namespace {
// Li2(u) on [0, 1/2] by power series.
double dilog_series(double u) {
    double term = u, sum = u;
    for (int k = 2; k < 80; ++k) {
        term *= u;
        const double add = term / (static_cast<double>(k) * k);
        sum += add;
        if (std::fabs(add) < 1e-17 * std::fabs(sum)) break;
    }
    return sum;
}
} // namespace

double dilog_neg(double x) {
    if (x > 0.0) throw std::domain_error("dilog_neg: positive argument");
    if (x == 0.0) return 0.0;
    if (x < -1.0) {
        const double l = std::log(-x);
        return -kPi2Over6 - 0.5 * l * l - dilog_neg(1.0 / x);
    }
    // x in [-1, 0): Landen transform onto [0, 1/2].
    const double u = x / (x - 1.0);
    const double l = std::log1p(-x);
    return -dilog_series(u) - 0.5 * l * l;
}

RootResult find_root_bracketed(const std::function<double(double)>& f,
                               double lo, double hi, double xtol, int max_iter) {
    RootResult res;
    double flo = f(lo), fhi = f(hi);
    if (flo == 0.0) return {lo, 0.0, 0, true};
    if (fhi == 0.0) return {hi, 0.0, 0, true};
    if ((flo > 0.0) == (fhi > 0.0)) {
        res.x = (std::fabs(flo) < std::fabs(fhi)) ? lo : hi;
        res.converged = false;
        return res;
    }
    double x = lo, fx = flo;
    for (int it = 0; it < max_iter; ++it) {
        const double width = hi - lo;
        if (width <= xtol * std::max(1.0, std::max(std::fabs(lo), std::fabs(hi)))) break;
        // secant candidate, fall back to bisection when it leaves the bracket
        double cand = lo - flo * (hi - lo) / (fhi - flo);
        const double margin = 0.01 * width;
        if (!(cand > lo + margin && cand < hi - margin)) cand = 0.5 * (lo + hi);
        const double fc = f(cand);
        res.iterations = it + 1;
        if (fc == 0.0) { x = cand; fx = 0.0; lo = hi = cand; break; }
        if ((fc > 0.0) == (flo > 0.0)) {
            lo = cand; flo = fc;
        } else {
            hi = cand; fhi = fc;
        }
        x = (std::fabs(flo) < std::fabs(fhi)) ? lo : hi;
        fx = (std::fabs(flo) < std::fabs(fhi)) ? flo : fhi;
    }
    res.x = x;
    res.fx = fx;
    res.converged = true;
    return res;
}

double golden_min(const std::function<double(double)>& f,
                  double lo, double hi, double xtol) {
    if (!(hi > lo)) return lo;
    constexpr double invphi = 0.6180339887498948482;
    double a = lo, b = hi;
    double x1 = b - invphi * (b - a);
    double x2 = a + invphi * (b - a);
    double f1 = f(x1), f2 = f(x2);
    while (b - a > xtol * std::max(1.0, std::fabs(a) + std::fabs(b))) {
        if (f1 <= f2) {
            b = x2; x2 = x1; f2 = f1;
            x1 = b - invphi * (b - a);
            f1 = f(x1);
        } else {
            a = x1; x1 = x2; f1 = f2;
            x2 = a + invphi * (b - a);
            f2 = f(x2);
        }
    }
    // compare interior best against the original endpoints
    double xbest = (f1 <= f2) ? x1 : x2;
    double fbest = std::min(f1, f2);
    const double flo = f(lo), fhi = f(hi);
    if (flo < fbest) { xbest = lo; fbest = flo; }
    if (fhi < fbest) { xbest = hi; }
    return xbest;
}

namespace {
double simpson_rule(const std::function<double(double)>& f,
                    double a, double fa, double b, double fb, double& fm) {
    const double m = 0.5 * (a + b);
    fm = f(m);
    return (b - a) / 6.0 * (fa + 4.0 * fm + fb);
}

double simpson_rec(const std::function<double(double)>& f,
                   double a, double fa, double b, double fb,
                   double m, double fm, double whole, double tol, int depth) {
    double fml, fmr;
    const double left = simpson_rule(f, a, fa, m, fm, fml);
    const double right = simpson_rule(f, m, fm, b, fb, fmr);
    const double delta = left + right - whole;
    if (depth <= 0 || std::fabs(delta) <= 15.0 * tol) {
        return left + right + delta / 15.0;
    }
    return simpson_rec(f, a, fa, m, fm, 0.5 * (a + m), fml, left, 0.5 * tol, depth - 1) +
           simpson_rec(f, m, fm, b, fb, 0.5 * (m + b), fmr, right, 0.5 * tol, depth - 1);
}
} // namespace

double adaptive_simpson(const std::function<double(double)>& f,
                        double a, double b, double tol) {
    if (!(b > a)) return 0.0;
    const double fa = f(a), fb = f(b);
    double fm;
    const double whole = simpson_rule(f, a, fa, b, fb, fm);
    return simpson_rec(f, a, fa, b, fb, 0.5 * (a + b), fm, whole, tol, 48);
}

const double kGaussLegendreNodes[kGaussLegendreHalf] = {
    0.048307665687738316235, 0.144471961582796493485, 0.239287362252137074545,
    0.331868602282127649780, 0.421351276130635345364, 0.506899908932229390024,
    0.587715757240762329041, 0.663044266930215200975, 0.732182118740289680387,
    0.794483795967942406963, 0.849367613732569970134, 0.896321155766052123965,
    0.934906075937739689171, 0.964762255587506430774, 0.985611511545268335400,
    0.997263861849481563545};

const double kGaussLegendreWeights[kGaussLegendreHalf] = {
    0.096540088514727800567, 0.095638720079274859419, 0.093844399080804565639,
    0.091173878695763884713, 0.087652093004403811143, 0.083311924226946755222,
    0.078193895787070306472, 0.072345794108848506225, 0.065822222776361846838,
    0.058684093478535547145, 0.050998059262376176196, 0.042835898022226680657,
    0.034273862913021433103, 0.025392065309262059456, 0.016274394730905670605,
    0.007018610009470096600};

double gauss_legendre_32(const std::function<double(double)>& f, double a, double b) {
    if (!(b > a)) return 0.0;
    const double c = 0.5 * (a + b), h = 0.5 * (b - a);
    double sum = 0.0;
    for (int i = 0; i < kGaussLegendreHalf; ++i) {
        const double dx = h * kGaussLegendreNodes[i];
        sum += kGaussLegendreWeights[i] * (f(c - dx) + f(c + dx));
    }
    return h * sum;
}

} // namespace vetocomm::num
