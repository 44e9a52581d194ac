#include "lhx/special_functions.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "series.hpp"

namespace lhx {

namespace {

constexpr double pi = std::numbers::pi;

void check_x(double X) {
    if (!(X > 0.0) || !std::isfinite(X)) {
        throw Error(Errc::non_positive_x, "theta: X must be positive and finite");
    }
}

ThetaOrder order_from(int x_order, int y_order) {
    if (x_order == 0 && y_order == 0) return ThetaOrder::value;
    if (x_order == 1 && y_order == 0) return ThetaOrder::dX;
    if (x_order == 0 && y_order == 1) return ThetaOrder::dY;
    if (x_order == 1 && y_order == 1) return ThetaOrder::dXY;
    if (x_order == 2 && y_order == 0) return ThetaOrder::dXX;
    throw Error(Errc::unsupported_order, "theta: derivative order (" + std::to_string(x_order) + "," +
                                             std::to_string(y_order) + ") is not supported");
}

// 2 cos(2 pi k Y) e^{-pi k^2 X} differentiated term by term, in long double:
// for small X the terms are O(1) while the sum can be exponentially small.
double direct_sum(double X, double Y, ThetaOrder order, const SeriesConfig& cfg) {
    using L = long double;
    constexpr L lpi = std::numbers::pi_v<long double>;
    auto coef = [order](L k) -> L {
        L q = lpi * k * k;
        switch (order) {
            case ThetaOrder::value: return 2.0L;
            case ThetaOrder::dX: return -2.0L * q;
            case ThetaOrder::dXX: return 2.0L * q * q;
            case ThetaOrder::dY: return -4.0L * lpi * k;
            case ThetaOrder::dXY: return 4.0L * lpi * k * q;
        }
        return 0.0L;
    };
    bool odd = order == ThetaOrder::dY || order == ThetaOrder::dXY;
    auto term = [&](int k) -> L {
        if (k == 0) return order == ThetaOrder::value ? 1.0L : 0.0L;
        L kk = k;
        L ph = 2.0L * lpi * kk * L(Y);
        L trig = odd ? std::sin(ph) : std::cos(ph);
        return coef(kk) * std::exp(-lpi * kk * kk * L(X)) * trig;
    };
    auto bound = [&](int k) {
        double kk = k;
        return std::fabs(double(coef(kk))) * std::exp(-pi * kk * kk * X);
    };
    return detail::sum_shells(term, bound, cfg, "jacobi_theta");
}

// d^order/dX^.. dY^.. of X^{-1/2} exp(-pi t^2 / X), divided by X^{-1/2} exp(...).
double poisson_factor(double X, double t, ThetaOrder order) {
    double q = pi * t * t / X;
    switch (order) {
        case ThetaOrder::value: return 1.0;
        case ThetaOrder::dX: return (q - 0.5) / X;
        case ThetaOrder::dXX: return ((q - 0.5) * (q - 0.5) + 0.5 - 2.0 * q) / (X * X);
        case ThetaOrder::dY: return 2.0 * pi * t / X;
        case ThetaOrder::dXY: return 2.0 * pi * t / X * (q - 1.5) / X;
    }
    return 0.0;
}

double poisson_factor_bound(double X, double tmax, ThetaOrder order) {
    double q = pi * tmax * tmax / X;
    switch (order) {
        case ThetaOrder::value: return 1.0;
        case ThetaOrder::dX: return (q + 0.5) / X;
        case ThetaOrder::dXX: return ((q + 0.5) * (q + 0.5) + 0.5 + 2.0 * q) / (X * X);
        case ThetaOrder::dY: return 2.0 * pi * tmax / X;
        case ThetaOrder::dXY: return 2.0 * pi * tmax / X * (q + 1.5) / X;
    }
    return 0.0;
}

// X^{-1/2} sum_n exp(-pi (n - Y)^2 / X), shells |n - round(Y)| = k.
double poisson_sum(double X, double Y, ThetaOrder order, const SeriesConfig& cfg, bool skip_center) {
    double yr = Y - std::round(Y);
    double pref = 1.0 / std::sqrt(X);
    auto image = [&](double t) { return std::exp(-pi * t * t / X) * poisson_factor(X, t, order); };
    auto term = [&](int k) {
        if (k == 0) return skip_center ? 0.0 : image(-yr);
        return image(k - yr) + image(-k - yr);
    };
    auto bound = [&](int k) {
        double lo = k - 0.5;
        return 2.0 * std::exp(-pi * lo * lo / X) * poisson_factor_bound(X, k + 0.5, order);
    };
    return pref * detail::sum_shells(term, bound, cfg, "jacobi_theta");
}

double power_tail(double X, int p, const SeriesConfig& cfg) {
    check_x(X);
    auto term = [&](int k) {
        if (k == 0) return 0.0;
        double n = k + 1.0;
        return std::pow(n, p) * std::exp(-pi * (n * n - 1.0) * X);
    };
    return detail::sum_shells(term, term, cfg, p == 2 ? "mu" : "nu");
}

}  // namespace

SeriesConfig::SeriesConfig(double rel_tol, int max_terms, double poisson_switch)
    : rel_tol_(rel_tol), max_terms_(max_terms), poisson_switch_(poisson_switch) {
    if (!(rel_tol > 0.0 && rel_tol < 1e-6)) {
        throw Error(Errc::invalid_argument, "SeriesConfig: rel_tol must lie in (0, 1e-6)");
    }
    if (max_terms < 8) throw Error(Errc::invalid_argument, "SeriesConfig: max_terms must be >= 8");
    if (!(poisson_switch > 0.0) || !std::isfinite(poisson_switch)) {
        throw Error(Errc::invalid_argument, "SeriesConfig: poisson_switch must be positive");
    }
}

double jacobi_theta_order(ThetaArg arg, ThetaOrder order, const SeriesConfig& cfg, ThetaForm form) {
    check_x(arg.X);
    if (!std::isfinite(arg.Y)) throw Error(Errc::invalid_argument, "theta: Y must be finite");
    bool poisson = form == ThetaForm::poisson ||
                   (form == ThetaForm::automatic && arg.X < cfg.poisson_switch());
    if (poisson) return poisson_sum(arg.X, arg.Y, order, cfg, false);
    return direct_sum(arg.X, arg.Y - std::round(arg.Y), order, cfg);
}

double jacobi_theta(ThetaArg arg, const SeriesConfig& cfg, ThetaForm form) {
    return jacobi_theta_order(arg, ThetaOrder::value, cfg, form);
}

double jacobi_theta_partial(ThetaArg arg, int x_order, int y_order, const SeriesConfig& cfg,
                            ThetaForm form) {
    ThetaOrder order = order_from(x_order, y_order);
    if (order == ThetaOrder::value) {
        throw Error(Errc::unsupported_order, "theta: use jacobi_theta for the undifferentiated value");
    }
    return jacobi_theta_order(arg, order, cfg, form);
}

double jacobi_theta_offcenter(double X, ThetaOrder order, const SeriesConfig& cfg) {
    check_x(X);
    double s = 1.0 / std::sqrt(X);
    double center = 0.0;
    switch (order) {
        case ThetaOrder::value: center = s; break;
        case ThetaOrder::dX: center = -0.5 * s / X; break;
        case ThetaOrder::dXX: center = 0.75 * s / (X * X); break;
        default:
            throw Error(Errc::unsupported_order, "theta offcenter: only X-derivatives are defined");
    }
    if (X < cfg.poisson_switch()) return poisson_sum(X, 0.0, order, cfg, true);
    return direct_sum(X, 0.0, order, cfg) - center;
}

double mu(double X, const SeriesConfig& cfg) { return power_tail(X, 2, cfg); }

double nu(double X, const SeriesConfig& cfg) { return power_tail(X, 4, cfg); }

Envelope theta_envelope(double X, const SeriesConfig& cfg) {
    check_x(X);
    bool t1 = X > 0.2;
    bool t2 = X < pi / (pi + 2.0);
    Envelope e{0.0, std::numeric_limits<double>::infinity()};
    if (t1) {
        double m = mu(X, cfg);
        double base = 4.0 * pi * std::exp(-pi * X);
        e.lower = base * (1.0 - m);
        e.upper = base * (1.0 + m);
    }
    if (t2) {
        double lo = pi * std::exp(-pi / (4.0 * X)) * std::pow(X, -1.5);
        double hi = std::pow(X, -1.5);
        e.lower = std::max(e.lower, lo);
        e.upper = std::min(e.upper, hi);
    }
    return e;
}

}  // namespace lhx
