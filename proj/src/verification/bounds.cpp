#include "bounds.hpp"

#include "lhx/special_functions.hpp"

namespace lhx {

double bound_b(double alpha0, double y) {
    using vdetail::pi;
    return 64.0 * alpha0 * pi * y * std::exp(-3.0 * pi * y * alpha0) /
           (1.0 - 64.0 * std::exp(-5.0 * pi * y * alpha0));
}

}  // namespace lhx

namespace lhx::vdetail {

double conservative_b(double alpha, double y, bool* monotone) {
    double lo = 1.0 / alpha, hi = alpha;
    double b = bound_b(lo, y);
    if (monotone) {
        *monotone = true;
        for (int k = 1; k <= 8; ++k) {
            double a0 = lo + (hi - lo) * k / 8.0;
            if (bound_b(a0, y) > b * (1.0 + 1e-12)) *monotone = false;
        }
    }
    return b;
}

double l_b(double a, double y) {
    double b = conservative_b(a, y);
    return pi * y / a - 1.5 - (pi * y * a - 1.5) * a * a * std::exp(-pi * y * (a - 1.0 / a)) +
           (3.0 * pi * (1.0 - b) - 2.0 * (1.0 + b) * (a * a + 1.0) / a * y) * (a * a - 1.0) * std::exp(-pi * y * a);
}

double l_b_elementary(double x) {
    double b = conservative_b(x, 1.0);
    double first = (pi / x - 1.5 - (pi * x - 1.5) * x * x * std::exp(-pi * (x - 1.0 / x))) / (x * x - 1.0);
    return first + (3.0 * pi * (1.0 - b) - 2.0 * (1.0 + b) * (x * x + 1.0) / x) * std::exp(-pi * x);
}

EpsC eps_c(double a, double y) {
    double r = y / a;
    double s = series(1, [&](int k) { return std::exp(-pi * k * k * r); });
    double ratio = (1.0 + s) / (1.0 - s);
    auto tail = [&](int p) {
        return series(2, [&](int n) { return std::pow(double(n), p) * std::exp(-pi * a * y * (n * n - 1.0)); });
    };
    double k2 = series(1, [&](int k) { return double(k) * k * std::exp(-pi * (k * k - 1.0) * r); });
    double k4 = series(1, [&](int k) { return std::pow(double(k), 4) * std::exp(-pi * (k * k - 1.0) * r); });
    double base = tail(0);
    return {ratio * tail(2), k2 / (1.0 - 4.0 * std::exp(-3.0 * pi * r)) * base, ratio * tail(4),
            k4 / (1.0 - 16.0 * std::exp(-3.0 * pi * r)) * base};
}

double eps_d1(double a, double y) {
    double y4 = y * y * y * y;
    return 4.0 * y4 * std::exp(-pi * a * (4.0 * y - 1.0 / y)) + 16.0 * y4 * std::exp(-4.0 * pi * a * y);
}

double eps_d2(double a, double y) {
    return 16.0 * std::exp(-3.0 * pi * a * y) * (1.0 + std::exp(-3.0 * pi * a / (4.0 * y)));
}

double l_d(double a, double y) {
    double e = std::exp(-pi * a * (y - 0.75 / y));
    double p = y * y - 0.25, s = y + 0.25 / y;
    return 2.0 * pi * a / y - 5.0 * (1.0 + eps_d1(a, y)) + 4.0 * pi * a * p * p * s * e -
           8.0 * (1.0 + eps_d2(a, y)) * y * y * y * s * e;
}

double l_d_case_b(double y) {
    const double a = 1.2;
    double e = std::exp(-1.2 * pi * (y - 0.75 / y));
    double p = y * y - 0.25, s = y + 0.25 / y;
    return 2.4 * pi / y - 5.0 * (1.0 + eps_d1(a, y)) + 4.8 * p * p * s * e -
           8.0 * (1.0 + eps_d2(a, y)) * y * y * y * s * e;
}

double h_fn(double a, double y) {
    double p = y * y - 0.25, s = y + 0.25 / y, y3 = y * y * y;
    return 18.0 * pi * a * p * p * s + 8.0 * pi * a * y3 * s * s - 10.0 * p * p - 20.0 * y3 * s -
           4.0 * pi * pi * a * a * p * p * s * s;
}

double l_a(double a, double y) {
    return 9.0 * pi * a / y - 5.0 - 2.0 * pi * pi * a * a / (y * y) +
           h_fn(a, y) * std::exp(-pi * a * (y - 0.75 / y));
}

double r_c(double a, double y) {
    EpsC e = eps_c(a, y);
    return pi * y / a - 1.5 - (1.0 + e.c3) * y * a * a * a * std::exp(-pi * y * (a - 1.0 / a)) -
           2.0 * (1.0 + e.c4) * pi * y / a * std::exp(-a * pi * y);
}

static double tail_at(int p, double c) {
    return series(2, [&](int n) { return std::pow(double(n), p) * std::exp(-c * (n * n - 1.0)); });
}

double sigma1() {
    double m = mu(0.5);
    return (1.0 + m) / (1.0 - m) * tail_at(4, 1.1 * pi * s3);
}

double sigma2() {
    return (1.0 + nu(0.5)) / (1.0 - mu(0.5)) * tail_at(2, 1.1 * pi * s3);
}

static double tail_b2(int p) {
    const double r3 = std::sqrt(3.0);
    return series(2, [&](int n) {
        return std::pow(double(n), p) * std::exp(-r3 * pi * ((n * n - 1.0) * r3 / 2.0 - 1.0 / (2.0 * r3)));
    });
}

double sigma3() { return tail_b2(4) / pi; }

double sigma4() { return 3.0 / pi * (1.0 + pi / 3.0) * tail_b2(2); }

static double d_generic(double a, double y, int power) {
    auto sp = [&](int p) {
        return series(2, [&](int n) { return std::pow(n / 2.0, p) * std::exp(-pi * a * y * (n * n - 4.0)); });
    };
    auto sq = [&](int p) {
        return series(2, [&](int n) { return std::pow(n / 2.0, p) * std::exp(-pi * a / (4.0 * y) * (n * n - 4.0)); });
    };
    double lead = 1.0 / (std::pow(2.0, power) * std::pow(y, power));
    return sp(power) * sq(0) + lead * sp(0) * sq(power);
}

double d_fn(double a, double y) { return d_generic(a, y, 4); }

double d2_fn(double a, double y) { return d_generic(a, y, 8); }

double c_fn(double a, double x, double y, const SeriesConfig& cfg) {
    double ty = jacobi_theta_partial({y / a, x}, 0, 1, cfg);
    return 2.0 / pi * std::pow(a, -2.5) * std::pow(y, 1.5) * (-ty) * std::exp(-2.0 * pi * y);
}

double f_ratio(double a, double Y) {
    double num = 0, den = 0;
    bool limit = (Y == 0.0 || Y == 0.5);
    for (int n = -30; n <= 30; ++n) {
        double t = n - Y;
        double e = std::exp(-a * pi * t * t);
        if (limit) {
            num += (2.0 * a * pi * t * t * t * t - 3.0 * t * t) * e;
            den += (2.0 * a * pi * t * t - 1.0) * e;
        } else {
            num += t * t * t * e;
            den += t * e;
        }
    }
    return num / den;
}

double lw1_field(double a, double y) {
    auto S = [&](auto w) { return pq_sum(a, 0.5, y, w); };
    return pi * pi * a * a * S([](int, double u, double q) { return u * u * q; }) +
           3.0 / y * S([](int n, double, double) { return double(n) * n; }) -
           2.5 * pi * a * S([](int, double u, double) { return u * u; }) -
           2.0 * pi * a / y * S([](int n, double, double q) { return double(n) * n * q; });
}

double ld1_field(double a, double y) {
    auto S = [&](auto w) { return pq_sum(a, 0.5, y, w); };
    return 4.5 * pi * pi * a * S([](int, double u, double q) { return u * u * q; }) +
           2.0 * pi * pi * a / y * S([](int n, double, double q) { return double(n) * n * q * q; }) -
           2.5 * pi * S([](int, double u, double) { return u * u; }) -
           5.0 * pi / y * S([](int n, double, double q) { return double(n) * n * q; }) -
           pi * pi * pi * a * a * S([](int, double u, double q) { return u * u * q * q; });
}

}  // namespace lhx::vdetail
