#include "lhx/energy.hpp"

#include <cmath>
#include <limits>
#include <numbers>

#include "lhx/error.hpp"
#include "lhx/quadrature.hpp"
#include "series.hpp"

namespace lhx {

namespace {

constexpr double pi = std::numbers::pi;

void check_alpha(double alpha) {
    if (!(alpha > 0.0) || !std::isfinite(alpha)) {
        throw Error(Errc::non_positive_alpha, "alpha must be positive and finite");
    }
}

void check_finite(double v, const char* name) {
    if (!std::isfinite(v)) throw Error(Errc::invalid_argument, std::string(name) + " must be finite");
}

// sup_Y |theta^{(order)}(X;Y)| bounded by the absolute Fourier mass.
double fourier_mass(double X, ThetaOrder order) {
    double total = order == ThetaOrder::value ? 1.0 : 0.0;
    for (int k = 1; k < 100000; ++k) {
        double q = pi * k * k;
        double c = 2.0;
        switch (order) {
            case ThetaOrder::value: break;
            case ThetaOrder::dX: c = 2.0 * q; break;
            case ThetaOrder::dXX: c = 2.0 * q * q; break;
            case ThetaOrder::dY: c = 4.0 * pi * k; break;
            case ThetaOrder::dXY: c = 4.0 * pi * k * q; break;
        }
        double t = c * std::exp(-q * X);
        total += t;
        if (q * X > 2.0 && t < 1e-18 * total) break;
    }
    return total;
}

// sum_n n^p e^{-alpha pi y n^2} theta^{(order)}(y/alpha; n x). With punctured set,
// the n = 0 shell drops the origin image.
double outer_sum(double alpha, UpperHalfPoint z, int p, ThetaOrder order, bool punctured,
                 const SeriesConfig& cfg) {
    double X = z.y / alpha;
    double mass = fourier_mass(X, order);
    auto term = [&](int n) {
        if (n == 0) {
            if (p != 0) return 0.0;
            return punctured ? jacobi_theta_offcenter(X, order, cfg)
                             : jacobi_theta_order({X, 0.0}, order, cfg);
        }
        double nn = n;
        return 2.0 * std::pow(nn, p) * std::exp(-alpha * pi * z.y * nn * nn) *
               jacobi_theta_order({X, nn * z.x}, order, cfg);
    };
    auto bound = [&](int n) {
        double nn = n;
        return 2.0 * std::pow(nn, p) * std::exp(-alpha * pi * z.y * nn * nn) * mass;
    };
    return detail::sum_shells(term, bound, cfg, "lattice theta expansion");
}

// W_b + b/alpha: the lattice sum without the origin.
double w_b_punctured(double alpha, double b, UpperHalfPoint z, const SeriesConfig& cfg) {
    double s0 = outer_sum(alpha, z, 0, ThetaOrder::value, true, cfg);
    double s2 = outer_sum(alpha, z, 2, ThetaOrder::value, false, cfg);
    double sx = outer_sum(alpha, z, 0, ThetaOrder::dX, true, cfg);
    double pref = std::pow(alpha, -2.5) * std::pow(z.y, 1.5) / pi;
    return pref * (0.5 * (1.0 - 2.0 * pi * b) * (alpha / z.y) * s0 + pi * alpha * alpha * s2 + sx);
}

// Half of the longer diagonal of the cell spanned by (1,0)/sqrt(y), (x,y)/sqrt(y).
double cell_radius(UpperHalfPoint z) {
    double d1 = ((1.0 + z.x) * (1.0 + z.x) + z.y * z.y) / z.y;
    double d2 = ((1.0 - z.x) * (1.0 - z.x) + z.y * z.y) / z.y;
    return 0.5 * std::sqrt(std::fmax(d1, d2));
}

// Bound on sum_{|P| > R} exp(-c |P|^2) via the integral over |x| > R - delta of
// exp(-c (|x| - delta)^2), with s0 = R - 2 delta.
double gaussian_tail(double c, double s0, double delta) {
    if (s0 <= 0.0) return std::numeric_limits<double>::infinity();
    return pi / c * std::exp(-c * s0 * s0) + pi * delta * std::sqrt(pi / c) * std::erfc(std::sqrt(c) * s0);
}

// int_1^inf f(x) dx on dyadic panels until the last panels are negligible.
double integrate_to_infinity(const std::function<double(double)>& f, double rel_tol) {
    double total = 0.0;
    int quiet = 0;
    for (double lo = 1.0; lo < 1e4; lo *= 2.0) {
        double part = integrate(f, lo, 2.0 * lo, rel_tol);
        total += part;
        quiet = std::fabs(part) <= rel_tol * std::fabs(total) ? quiet + 1 : 0;
        if (quiet >= 2) return total;
    }
    throw Error(Errc::quadrature_divergence, "Laplace integral did not converge before x = 1e4");
}

double laplace_profile(const LaplaceWeighted& p, double r) {
    auto f = [&](double x) {
        double w = p.weight(x);
        if (w == 0.0) return 0.0;
        if (p.family == LaplaceFamily::f) {
            return (std::exp(-pi * p.alpha * x * r) - p.b * std::exp(-pi * p.a * p.alpha * x * r)) * w;
        }
        return (r * x - p.b / p.alpha) * std::exp(-pi * p.alpha * x * r) * w;
    };
    return integrate_to_infinity(f, 1e-12);
}

double tail_majorant(const PotentialSpec& p, UpperHalfPoint z, double radius) {
    double delta = cell_radius(z);
    double s0 = radius - 2.0 * delta;
    if (s0 <= 0.0) return std::numeric_limits<double>::infinity();
    struct Visitor {
        double s0, delta;
        double operator()(const Gaussian& g) const { return gaussian_tail(pi * g.alpha, s0, delta); }
        double operator()(const GaussianDiff& g) const {
            return (1.0 + std::fabs(g.b)) * gaussian_tail(pi * g.alpha, s0, delta);
        }
        double operator()(const PolyGaussian& g) const {
            // r e^{-pi alpha r} <= 2/(e pi alpha) e^{-pi alpha r / 2}
            double k = 2.0 / (std::numbers::e * pi * g.alpha) + std::fabs(g.b) / g.alpha;
            return k * gaussian_tail(0.5 * pi * g.alpha, s0, delta);
        }
        double operator()(const YukawaDiff& g) const {
            return (1.0 + std::fabs(g.b)) / (s0 * s0) * gaussian_tail(pi * g.alpha, s0, delta);
        }
        double operator()(const LaplaceWeighted& g) const {
            auto f = [&](double x) {
                double w = g.weight(x);
                if (w == 0.0) return 0.0;
                if (g.family == LaplaceFamily::f) {
                    return (1.0 + std::fabs(g.b)) * w * gaussian_tail(pi * g.alpha * x, s0, delta);
                }
                double k = 2.0 / (std::numbers::e * pi * g.alpha) + std::fabs(g.b) / g.alpha;
                return k * w * gaussian_tail(0.5 * pi * g.alpha * x, s0, delta);
            };
            return integrate_to_infinity(f, 1e-6);
        }
    };
    return std::visit(Visitor{s0, delta}, p);
}

struct DirectSum {
    double sum = 0.0;
    double mass = 0.0;
};

DirectSum direct_sum(const PotentialSpec& p, UpperHalfPoint z, double radius) {
    DirectSum s;
    for (const LatticeNorm& v : lattice_norms(z, radius)) {
        if (v.m == 0 && v.n == 0) continue;
        double f = potential_value(p, v.norm2);
        s.sum += f;
        s.mass += std::fabs(f);
    }
    return s;
}

}  // namespace

double LaplaceWeight::operator()(double x) const {
    switch (kind) {
        case Kind::constant: return scale;
        case Kind::exponential: return scale * std::exp(rate * x);
        case Kind::power: return scale * std::pow(x, rate);
    }
    return 0.0;
}

void validate(const PotentialSpec& p) {
    struct Visitor {
        void need_a(double a) const {
            if (!(a > 1.0) || !std::isfinite(a)) throw Error(Errc::invalid_argument, "potential: a must exceed 1");
        }
        void operator()(const Gaussian& g) const { check_alpha(g.alpha); }
        void operator()(const GaussianDiff& g) const {
            check_alpha(g.alpha);
            need_a(g.a);
            check_finite(g.b, "b");
        }
        void operator()(const PolyGaussian& g) const {
            check_alpha(g.alpha);
            check_finite(g.b, "b");
        }
        void operator()(const YukawaDiff& g) const {
            check_alpha(g.alpha);
            need_a(g.a);
            check_finite(g.b, "b");
        }
        void operator()(const LaplaceWeighted& g) const {
            check_alpha(g.alpha);
            need_a(g.a);
            check_finite(g.b, "b");
            check_finite(g.weight.scale, "weight scale");
            check_finite(g.weight.rate, "weight rate");
            for (double x : {1.0, 1.5, 2.0, 3.0, 5.0, 10.0, 30.0, 100.0, 1000.0}) {
                double w = g.weight(x);
                if (!(w >= 0.0)) {
                    throw Error(Errc::invalid_argument, "potential: Laplace weight must be nonnegative");
                }
            }
        }
    };
    std::visit(Visitor{}, p);
}

std::string potential_name(const PotentialSpec& p) {
    static const char* names[] = {"gaussian", "gaussian_diff", "poly_gaussian", "yukawa_diff",
                                  "laplace_weighted"};
    return names[p.index()];
}

double potential_value(const PotentialSpec& p, double r) {
    struct Visitor {
        double r;
        double operator()(const Gaussian& g) const { return std::exp(-pi * g.alpha * r); }
        double operator()(const GaussianDiff& g) const {
            return std::exp(-pi * g.alpha * r) - g.b * std::exp(-pi * g.a * g.alpha * r);
        }
        double operator()(const PolyGaussian& g) const {
            return (r - g.b / g.alpha) * std::exp(-pi * g.alpha * r);
        }
        double operator()(const YukawaDiff& g) const {
            return (std::exp(-pi * g.alpha * r) - g.b * std::exp(-pi * g.a * g.alpha * r)) / r;
        }
        double operator()(const LaplaceWeighted& g) const { return laplace_profile(g, r); }
    };
    return std::visit(Visitor{r}, p);
}

double theta_lattice_punctured(double alpha, UpperHalfPoint z, const SeriesConfig& cfg) {
    check_alpha(alpha);
    validate(z);
    return std::sqrt(z.y / alpha) * outer_sum(alpha, z, 0, ThetaOrder::value, true, cfg);
}

double theta_lattice(double alpha, UpperHalfPoint z, const SeriesConfig& cfg) {
    return 1.0 + theta_lattice_punctured(alpha, z, cfg);
}

double w_b(double alpha, double b, UpperHalfPoint z, const SeriesConfig& cfg) {
    check_alpha(alpha);
    validate(z);
    check_finite(b, "b");
    return w_b_punctured(alpha, b, z, cfg) - b / alpha;
}

double w_b_via_theta_derivative(double alpha, double b, UpperHalfPoint z, const SeriesConfig& cfg) {
    check_alpha(alpha);
    double h = 1e-5 * alpha;
    double d = (theta_lattice(alpha + h, z, cfg) - theta_lattice(alpha - h, z, cfg)) / (2.0 * h);
    return -d / pi - b / alpha * theta_lattice(alpha, z, cfg);
}

double dx_w(double alpha, UpperHalfPoint z, const SeriesConfig& cfg) {
    check_alpha(alpha);
    validate(z);
    double s3y = outer_sum(alpha, z, 3, ThetaOrder::dY, false, cfg);
    double s1xy = outer_sum(alpha, z, 1, ThetaOrder::dXY, false, cfg);
    double pref = std::pow(alpha, -2.5) * std::pow(z.y, 1.5) / pi;
    return pref * (pi * alpha * alpha * s3y + s1xy);
}

double dx_w_double_sum(double alpha, UpperHalfPoint z, const SeriesConfig& cfg) {
    check_alpha(alpha);
    validate(z);
    const double y = z.y;
    auto a_nm = [&](double n, double m) {
        return n * n * n * m *
               (alpha * alpha * std::exp(-pi * y * (alpha * n * n + m * m / alpha)) -
                std::exp(-pi * y * (alpha * m * m + n * n / alpha)));
    };
    auto cell = [&](int n, int m) { return a_nm(n, m) * std::sin(2.0 * pi * m * n * z.x); };
    auto term = [&](int k) {
        if (k == 0) return 0.0;
        double s = cell(k, k);
        for (int j = 1; j < k; ++j) s += cell(k, j) + cell(j, k);
        return s;
    };
    double c = std::fmin(alpha, 1.0 / alpha);
    auto bound = [&](int k) {
        double kk = k;
        return (2.0 * kk - 1.0) * kk * kk * kk * kk * (alpha * alpha + 1.0) * std::exp(-pi * y * c * kk * kk);
    };
    double s = detail::sum_shells(term, bound, cfg, "dx_w double sum");
    return -8.0 * pi * std::pow(alpha, -2.5) * std::pow(y, 1.5) * s;
}

double dy_w(double alpha, UpperHalfPoint z, const SeriesConfig& cfg) {
    check_alpha(alpha);
    validate(z);
    double s2 = outer_sum(alpha, z, 2, ThetaOrder::value, false, cfg);
    double s4 = outer_sum(alpha, z, 4, ThetaOrder::value, false, cfg);
    double sx = outer_sum(alpha, z, 0, ThetaOrder::dX, true, cfg);
    double sxx = outer_sum(alpha, z, 0, ThetaOrder::dXX, true, cfg);
    double y = z.y;
    double inner = 1.5 * std::sqrt(y) * (pi * alpha * alpha * s2 + sx) +
                   std::pow(y, 1.5) * (-pi * pi * alpha * alpha * alpha * s4 + sxx / alpha);
    return std::pow(alpha, -2.5) / pi * inner;
}

double theta_difference(double alpha, double a, double b, UpperHalfPoint z, const SeriesConfig& cfg) {
    check_alpha(alpha);
    if (!(a > 1.0) || !std::isfinite(a)) throw Error(Errc::invalid_argument, "theta_difference: a must exceed 1");
    check_finite(b, "b");
    return (1.0 - b) + theta_lattice_punctured(alpha, z, cfg) - b * theta_lattice_punctured(a * alpha, z, cfg);
}

double lattice_energy(const PotentialSpec& p, UpperHalfPoint z, double cutoff_radius) {
    validate(p);
    validate(z);
    DirectSum s = direct_sum(p, z, cutoff_radius);
    double tail = tail_majorant(p, z, cutoff_radius);
    if (!(tail <= 1e-12 * s.mass)) {
        throw Error(Errc::tail_too_large, "lattice_energy: tail beyond cutoff radius exceeds 1e-12 of the sum");
    }
    return s.sum;
}

double default_cutoff(const PotentialSpec& p, UpperHalfPoint z) {
    validate(p);
    validate(z);
    double mass = 0.0;
    for (double radius = 4.0; radius <= 512.0; radius *= 1.25) {
        if (mass == 0.0) mass = direct_sum(p, z, radius).mass;
        if (mass > 0.0 && tail_majorant(p, z, radius) <= 0.5e-12 * mass) return radius;
    }
    throw Error(Errc::tail_too_large, "lattice_energy: no cutoff radius up to 512 meets the tail bound");
}

double laplace_energy(const LaplaceWeighted& p, UpperHalfPoint z, const SeriesConfig& cfg) {
    validate(PotentialSpec{p});
    validate(z);
    auto inner = [&](double x) {
        double w = p.weight(x);
        if (w == 0.0) return 0.0;
        double ax = p.alpha * x;
        if (p.family == LaplaceFamily::f) {
            return w * (theta_lattice_punctured(ax, z, cfg) - p.b * theta_lattice_punctured(p.a * ax, z, cfg));
        }
        return w * x * w_b_punctured(ax, p.b, z, cfg);
    };
    return integrate_to_infinity(inner, 1e-10);
}

double potential_energy(const PotentialSpec& p, UpperHalfPoint z, const SeriesConfig& cfg) {
    validate(p);
    validate(z);
    struct Visitor {
        UpperHalfPoint z;
        const SeriesConfig& cfg;
        double operator()(const Gaussian& g) const { return theta_lattice_punctured(g.alpha, z, cfg); }
        double operator()(const GaussianDiff& g) const {
            return theta_lattice_punctured(g.alpha, z, cfg) - g.b * theta_lattice_punctured(g.a * g.alpha, z, cfg);
        }
        double operator()(const PolyGaussian& g) const { return w_b_punctured(g.alpha, g.b, z, cfg); }
        double operator()(const YukawaDiff& g) const {
            PotentialSpec p = g;
            return lattice_energy(p, z, default_cutoff(p, z));
        }
        double operator()(const LaplaceWeighted& g) const { return laplace_energy(g, z, cfg); }
    };
    return std::visit(Visitor{z, cfg}, p);
}

}  // namespace lhx
