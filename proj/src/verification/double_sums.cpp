#include <algorithm>

#include "bounds.hpp"
#include "lhx/special_functions.hpp"

namespace lhx::vdetail {

namespace {

constexpr auto G = ReportGroup::double_sum;

std::vector<double> y_samples() {
    std::vector<double> ys;
    for (int i = 1; i < 1000; i += 2) {
        double Y = i / 1000.0;
        if (std::fabs(Y - 0.5) < 1e-3) continue;
        ys.push_back(Y);
    }
    return ys;
}

std::vector<double> linspace(double lo, double hi, int n) {
    std::vector<double> v;
    for (int i = 0; i < n; ++i) v.push_back(lo + (hi - lo) * i / (n - 1));
    return v;
}

using QuotientBound = std::function<double(double X, double Y, int k)>;

// max over (X, Y, k) of bound-normalized quotient
LemmaReport quotient_report(const std::string& id, const std::vector<double>& xs, const std::vector<int>& ks,
                            const QuotientBound& ratio, const std::string& grid, const std::string& what,
                            double tol = 0.0) {
    double worst = -INFINITY, wx = 0, wy = 0;
    int wk = 0;
    auto ys = y_samples();
    for (double X : xs)
        for (double Y : ys)
            for (int k : ks) {
                double r = ratio(X, Y, k);
                if (r > worst) worst = r, wx = X, wy = Y, wk = k;
            }
    return make_report(id, G, 1.0, worst, Comparison::le, tol, grid + "; Y = (2i+1)/1000 avoiding 1/2",
                       what + "; maximum at X=" + fmt(wx, 6) + ", Y=" + fmt(wy, 6) + ", k=" + std::to_string(wk));
}

double th(double X, double Y, ThetaOrder o, const SeriesConfig& cfg) { return jacobi_theta_order({X, Y}, o, cfg); }

std::vector<Entry> theta_quotients() {
    std::vector<Entry> out;
    const std::vector<int> ks{2, 3, 4, 5};
    out.push_back({"L23.a", G, [ks](const Context& c) {
                       return quotient_report(
                           "L23.a", linspace(0.2001, 3.0, 60), ks,
                           [&](double X, double Y, int k) {
                               double m = mu(X, c.cfg);
                               return std::fabs(th(X, k * Y, ThetaOrder::dY, c.cfg) / th(X, Y, ThetaOrder::dY, c.cfg)) /
                                      (k * (1.0 + m) / (1.0 - m));
                           },
                           "X in [0.2001, 3] (60), k in 2..5", "|theta_Y(X;kY)/theta_Y(X;Y)| / (k (1+mu)/(1-mu))");
                   }});
    out.push_back({"L23.b", G, [ks](const Context& c) {
                       return quotient_report(
                           "L23.b", linspace(0.02, 0.6, 60), ks,
                           [&](double X, double Y, int k) {
                               return std::fabs(th(X, k * Y, ThetaOrder::dY, c.cfg) / th(X, Y, ThetaOrder::dY, c.cfg)) /
                                      (k / pi * std::exp(pi / (4.0 * X)));
                           },
                           "X in [0.02, 0.6] (60), k in 2..5", "|theta_Y(X;kY)/theta_Y(X;Y)| / (k e^{pi/(4X)}/pi)");
                   }});
    out.push_back({"L24.a", G, [ks](const Context& c) {
                       return quotient_report(
                           "L24.a", linspace(0.3, 3.0, 60), ks,
                           [&](double X, double Y, int k) {
                               double n = nu(X, c.cfg);
                               return std::fabs(th(X, k * Y, ThetaOrder::dXY, c.cfg) /
                                                th(X, Y, ThetaOrder::dXY, c.cfg)) /
                                      (k * (1.0 + n) / (1.0 - n));
                           },
                           "X in [0.3, 3] (60), k in 2..5", "|theta_XY(X;kY)/theta_XY(X;Y)| / (k (1+nu)/(1-nu))");
                   }});
    out.push_back({"L24.b", G, [ks](const Context& c) {
                       return quotient_report(
                           "L24.b", linspace(0.2001, 3.0, 60), ks,
                           [&](double X, double Y, int k) {
                               return std::fabs(th(X, k * Y, ThetaOrder::dXY, c.cfg) /
                                                th(X, Y, ThetaOrder::dY, c.cfg)) /
                                      (k * pi * (1.0 + nu(X, c.cfg)) / (1.0 - mu(X, c.cfg)));
                           },
                           "X in [0.2001, 3] (60), k in 2..5",
                           "|theta_XY(X;kY)/theta_Y(X;Y)| / (k pi (1+nu)/(1-mu))");
                   }});
    out.push_back({"L24.c", G, [](const Context& c) {
                       return quotient_report(
                           "L24.c", linspace(0.2001, 3.0, 60), {1},
                           [&](double X, double Y, int) {
                               return std::fabs(th(X, Y, ThetaOrder::dXY, c.cfg) / th(X, Y, ThetaOrder::dY, c.cfg)) /
                                      (pi * (1.0 + nu(X, c.cfg)) / (1.0 + mu(X, c.cfg)));
                           },
                           "X in [0.2001, 3] (60), k = 1",
                           "|theta_XY/theta_Y| / (pi (1+nu)/(1+mu)); equality as Y -> 0", 1e-12);
                   }});
    out.push_back({"L25.a", G, [](const Context& c) {
                       return quotient_report(
                           "L25.a", linspace(0.02, 0.5, 60), {1},
                           [&](double X, double Y, int) {
                               return std::fabs(th(X, Y, ThetaOrder::dXY, c.cfg) / th(X, Y, ThetaOrder::dY, c.cfg)) /
                                      (1.5 / X * (1.0 + pi / (6.0 * X)));
                           },
                           "X in [0.02, 0.5] (60)", "|theta_XY/theta_Y| / ((3/2) X^{-1} (1 + pi/(6X)))");
                   }});
    out.push_back({"L25.b", G, [ks](const Context& c) {
                       return quotient_report(
                           "L25.b", linspace(0.02, 0.5, 60), ks,
                           [&](double X, double Y, int k) {
                               return std::fabs(th(X, k * Y, ThetaOrder::dXY, c.cfg) /
                                                th(X, Y, ThetaOrder::dY, c.cfg)) /
                                      (1.5 * k / (pi * X) * (1.0 + pi / (6.0 * X)) * std::exp(pi / (4.0 * X)));
                           },
                           "X in [0.02, 0.5] (60), k in 2..5",
                           "|theta_XY(X;kY)/theta_Y(X;Y)| / ((3k/(2pi)) X^{-1} (1 + pi/(6X)) e^{pi/(4X)})");
                   }});
    return out;
}

LemmaReport l26(const Context&) {
    double worst = 0, wa = 0, wy = 0;
    for (double a : linspace(2.0, 60.0, 117)) {
        for (int j = 0; j <= 200; ++j) {
            double Y = 0.5 * j / 200.0;
            double v = std::fabs(f_ratio(a, Y));
            if (v > worst) worst = v, wa = a, wy = Y;
        }
    }
    return make_report("L26", G, 0.25, worst, Comparison::le, 0.0,
                       "a = 1/X in [2, 60] (117) x Y in [0, 1/2] (201, endpoints by their limits)",
                       "sup |f(a,Y)|; maximum at a=" + fmt(wa, 6) + ", Y=" + fmt(wy, 6));
}

// s_n = sin(2 n pi Y)/sin(2 pi Y), g_n = (1/sin(2 pi Y)) d/dY s_n
struct SinQuotients {
    std::vector<double> s, g;
};

SinQuotients sin_quotients(double Y, int nmax) {
    SinQuotients q{std::vector<double>(nmax + 1), std::vector<double>(nmax + 1)};
    double c = std::cos(2.0 * pi * Y);
    q.s[1] = 1.0;
    q.g[1] = 0.0;
    for (int n = 1; n < nmax; ++n) {
        q.s[n + 1] = c * q.s[n] + std::cos(2.0 * n * pi * Y);
        q.g[n + 1] = c * q.g[n] - 2.0 * (n + 1) * pi * q.s[n];
    }
    return q;
}

LemmaReport l27(const Context&) {
    const int nmax = 16;
    double worst = 0, wy = 0;
    int wn = 0;
    for (int i = 1; i < 4000; ++i) {
        double Y = i / 4000.0;
        if (std::fabs(std::sin(2.0 * pi * Y)) < 1e-9) continue;
        auto q = sin_quotients(Y, nmax);
        for (int n = 2; n <= nmax; ++n) {
            double cn = 2.0 * pi / 3.0 * (n - 1.0) * n * (n + 1.0);
            double r = std::fabs(q.g[n]) / cn;
            if (r > worst) worst = r, wy = Y, wn = n;
        }
    }
    return make_report("L27", G, 1.0, worst, Comparison::le, 1e-12,
                       "Y = i/4000 away from the zeros of sin(2 pi Y), n in 2..16",
                       "|g_n| / C(n) via the recursion g_{n+1} = cos(2 pi Y) g_n - 2(n+1) pi s_n; sharp as Y -> 0; "
                       "maximum at Y=" + fmt(wy, 6) + ", n=" + std::to_string(wn));
}

LemmaReport x2(const Context&) {
    const int kmax = 16;
    double worst = 0;
    for (int i = 1; i < 4000; ++i) {
        double Y = i / 4000.0;
        if (std::fabs(std::sin(2.0 * pi * Y)) < 1e-9) continue;
        auto q = sin_quotients(Y, kmax);
        for (int k = 1; k <= kmax; ++k) worst = std::max(worst, std::fabs(q.s[k]) / k);
    }
    return make_report("X2", G, 1.0, worst, Comparison::le, 1e-12, "x = 2 pi i/4000, k in 1..16",
                       "|sin(kx)/sin(x)| / k via the Chebyshev recursion");
}

LemmaReport envelope(const Context& c, bool small_x) {
    std::string id = small_x ? "T2" : "T1";
    auto xs = small_x ? linspace(0.02, pi / (pi + 2.0) - 1e-3, 40) : linspace(0.2001, 3.0, 40);
    double worst = INFINITY, wx = 0, wy = 0;
    for (double X : xs) {
        double lo, hi;
        if (small_x) {
            lo = pi * std::exp(-pi / (4.0 * X)) * std::pow(X, -1.5);
            hi = std::pow(X, -1.5);
        } else {
            double m = mu(X, c.cfg);
            lo = 4.0 * pi * std::exp(-pi * X) * (1.0 - m);
            hi = 4.0 * pi * std::exp(-pi * X) * (1.0 + m);
        }
        for (double Y : y_samples()) {
            double q = -th(X, Y, ThetaOrder::dY, c.cfg) / std::sin(2.0 * pi * Y);
            double v = std::min(q - lo, hi - q) / hi;
            if (v < worst) worst = v, wx = X, wy = Y;
        }
    }
    std::string grid = small_x ? "X in [0.02, pi/(pi+2)) (40)" : "X in [0.2001, 3] (40)";
    return make_report(id, G, 0.0, worst, Comparison::ge, 1e-12, grid + "; Y = (2i+1)/1000 avoiding 1/2",
                       "smallest distance of -theta_Y/sin(2 pi Y) to the envelope, relative to the upper envelope; "
                       "at X=" + fmt(wx, 6) + ", Y=" + fmt(wy, 6));
}

LemmaReport l310_311(const Context&, bool column) {
    std::string id = column ? "L310" : "L311";
    double worst = 0, wa = 0, wx = 0, wy = 0;
    int wm = 0;
    for (int m = 1; m <= 4; ++m) {
        std::vector<double> xs = linspace(0.003, 0.497, 120);
        for (int k = 1; k < 2 * m * m; ++k)
            for (double d : {1e-7, -1e-7}) {
                double x = k / (2.0 * m * m) + d;
                if (x > 0 && x < 0.5) xs.push_back(x);
            }
        for (double a : {1.01, 1.05, 1.1}) {
            for (double x : xs) {
                double lo = std::sqrt(1.0 - x * x);
                for (double y : linspace(lo, 4.0, 12)) {
                    double den = a_nm(m, m, a, y) * std::fabs(std::sin(2.0 * m * m * pi * x)) * bound_b(1.0 / a, y);
                    if (den == 0.0) continue;
                    double s = 0;
                    for (int j = m + 1; j < 14; ++j)
                        s += column ? a_nm(j, m, a, y) * std::sin(2.0 * m * j * pi * x)
                                    : a_nm(m, j, a, y) * std::sin(2.0 * m * j * pi * x);
                    double r = std::fabs(s) / den;
                    if (r > worst) worst = r, wa = a, wx = x, wy = y, wm = m;
                }
            }
        }
    }
    return make_report(id, G, 1.0, worst, Comparison::le, 0.0,
                       "m in 1..4, alpha in {1.01,1.05,1.1}, 120 x in [0.003,0.497] plus x = k/(2m^2) +- 1e-7, "
                       "12 y in [sqrt(1-x^2), 4]; n <= 13",
                       "quotient over B A_{m,m} |sin(2 m^2 pi x)| with B at alpha_0 = 1/alpha; maximum at m=" +
                           std::to_string(wm) + ", alpha=" + fmt(wa, 4) + ", x=" + fmt(wx, 9) + ", y=" + fmt(wy, 6));
}

LemmaReport l47(const Context&) {
    double worst = INFINITY, wa = 0, wy = 0;
    int wn = 0;
    for (double a : linspace(1.0, 7.0, 121)) {
        for (double y : linspace(s3, 8.0, 121)) {
            for (int n = 2; n <= 7; ++n) {
                double nn = double(n) * n, e1 = std::exp(-pi * nn * y / a), e2 = std::exp(-pi * nn * y * a);
                double b = 2.0 * std::pow(y, 1.5) * pi * pi / a * nn * nn * (e1 - std::pow(a, 4) * e2) -
                           3.0 * pi * std::sqrt(y) * nn * (e1 - a * a * e2);
                double scale = std::pow(y, 1.5) * nn * nn * e1;
                if (scale == 0.0) continue;
                double v = b / scale;
                if (v < worst) worst = v, wa = a, wy = y, wn = n;
            }
        }
    }
    return make_report("L47", G, 0.0, worst, Comparison::ge, 1e-12,
                       "alpha in [1,7] (121) x y in [sqrt3/2, 8] (121) x n in 2..7",
                       "B_n / (y^{3/2} n^4 e^{-pi n^2 y/alpha}); zero at alpha = 1; minimum at alpha=" + fmt(wa, 6) +
                           ", y=" + fmt(wy, 6) + ", n=" + std::to_string(wn));
}

LemmaReport l48(const Context&, bool quartic) {
    std::string id = quartic ? "L48.a" : "L48.b";
    double worst = INFINITY, wa = 0, wy = 0;
    for (double a : linspace(1.001, 1.2, 40)) {
        for (double y : linspace(s3, 6.0, 80)) {
            double b = bound_b(1.0 / a, y), s = 0;
            for (int n = 1; n <= 12; ++n)
                for (int m = 1; m <= 12; ++m) {
                    double sign = ((m * n) % 2) ? -1.0 : 1.0;
                    double e_mn = std::exp(-pi * y * (m * m * a + n * n / a));
                    double e_nm = std::exp(-pi * y * (n * n * a + m * m / a));
                    s += quartic ? sign * std::pow(double(n), 4) * (e_mn - std::pow(a, 4) * e_nm)
                                 : sign * double(n) * n * (a * a * e_nm - e_mn);
                }
            double e = std::exp(-pi * y * (a + 1.0 / a));
            double r = quartic ? (1.0 - b) * (std::pow(a, 4) - 1.0) * e : -(1.0 + b) * (a * a - 1.0) * e;
            double v = (s - r) / std::fabs(r);
            if (v < worst) worst = v, wa = a, wy = y;
        }
    }
    return make_report(id, G, 0.0, worst, Comparison::ge, 1e-12,
                       "alpha in [1.001, 1.2] (40) x y in [sqrt3/2, 6] (80); n, m <= 12",
                       "relative gap over the bound with B at alpha_0 = 1/alpha; minimum at alpha=" + fmt(wa, 6) +
                           ", y=" + fmt(wy, 6));
}

struct HalfSums {
    double u2q, n2, u2, n2q, n2q2, u2q2;
};

HalfSums half_sums(double a, double y) {
    HalfSums h{};
    auto acc = [&](double HalfSums::*f, auto w) { h.*f = pq_sum(a, 0.5, y, w); };
    acc(&HalfSums::u2q, [](int, double u, double q) { return u * u * q; });
    acc(&HalfSums::n2, [](int n, double, double) { return double(n) * n; });
    acc(&HalfSums::u2, [](int, double u, double) { return u * u; });
    acc(&HalfSums::n2q, [](int n, double, double q) { return double(n) * n * q; });
    acc(&HalfSums::n2q2, [](int n, double, double q) { return double(n) * n * q * q; });
    acc(&HalfSums::u2q2, [](int, double u, double q) { return u * u * q * q; });
    return h;
}

enum class Kind { l423, l424, l425, l426, l432, l433 };

double kind_gap(Kind k, double a, double y) {
    HalfSums h = half_sums(a, y);
    double E = std::exp(-pi * a * (y + 0.25 / y));
    double p = 1.0 - 0.25 / (y * y), s = y + 0.25 / y;
    switch (k) {
        case Kind::l423: {
            double b = 2.0 / std::pow(y, 5) * std::exp(-pi * a / y) + 4.0 * p * p * s * E;
            return (h.u2q - b) / h.u2q;
        }
        case Kind::l424:
            return (h.n2 - 4.0 * E) / h.n2;
        case Kind::l425: {
            double b = (1.0 + eps_d1(a, y)) * 2.0 / std::pow(y, 4) * std::exp(-pi * a / y) + 4.0 * p * p * E;
            return (b - h.u2) / h.u2;
        }
        case Kind::l426: {
            double b = 4.0 * (1.0 + eps_d2(a, y)) * s * E;
            return (b - h.n2q) / h.n2q;
        }
        case Kind::l432:
            return (h.n2q2 - 4.0 * s * s * E) / h.n2q2;
        case Kind::l433: {
            double b = 2.0 / std::pow(y, 6) * std::exp(-pi * a / y) + 4.0 * p * p * s * s * E +
                       3.0 * 256.0 * std::exp(-4.0 * pi * a * y);
            return (b - h.u2q2) / h.u2q2;
        }
    }
    return NAN;
}

LemmaReport kind_report(const Context& ctx, const std::string& id, Kind k, bool region_a, const std::string& what) {
    Region r = region_a ? Region{1.0, 1.2, [](double) { return s3; }, [](double) { return 1.0; },
                                 "R_a: alpha in [1,1.2], y in [sqrt3/2, 1]"}
                        : Region{1.2, 6.0, [](double) { return s3; }, [](double a) { return 5.0 * a / 6.0; },
                                 "R_d: alpha in [1.2,6], y in [sqrt3/2, 5 alpha/6]"};
    auto s = scan_region(ctx, id, r, [k](double a, double y) { return kind_gap(k, a, y); }, 60);
    auto rep = make_report(id, G, 0.0, s.coarse.value, Comparison::ge, 1e-12, s.grid,
                           what + " at x = 1/2; minimum " + where(s.coarse));
    rep.refined = s.refined.value;
    return rep;
}

}  // namespace

void add_double_sums(std::vector<Entry>& out) {
    for (auto& e : theta_quotients()) out.push_back(std::move(e));
    out.push_back({"L26", G, l26});
    out.push_back({"L27", G, l27});
    out.push_back({"X2", G, x2});
    out.push_back({"T1", G, [](const Context& c) { return envelope(c, false); }});
    out.push_back({"T2", G, [](const Context& c) { return envelope(c, true); }});
    out.push_back({"L310", G, [](const Context& c) { return l310_311(c, true); }});
    out.push_back({"L311", G, [](const Context& c) { return l310_311(c, false); }});
    out.push_back({"L47", G, l47});
    out.push_back({"L48.a", G, [](const Context& c) { return l48(c, true); }});
    out.push_back({"L48.b", G, [](const Context& c) { return l48(c, false); }});
    out.push_back({"L423", G, [](const Context& c) {
                       return kind_report(c, "L423", Kind::l423, false, "relative gap of sum u^2 Q over its lower bound");
                   }});
    out.push_back({"L424", G, [](const Context& c) {
                       return kind_report(c, "L424", Kind::l424, false, "relative gap of sum n^2 over 4 e^{-pi alpha (y + 1/(4y))}");
                   }});
    out.push_back({"L425", G, [](const Context& c) {
                       return kind_report(c, "L425", Kind::l425, false, "relative gap of the bound over sum u^2");
                   }});
    out.push_back({"L426", G, [](const Context& c) {
                       return kind_report(c, "L426", Kind::l426, false, "relative gap of the bound over sum n^2 Q");
                   }});
    out.push_back({"L432", G, [](const Context& c) {
                       return kind_report(c, "L432", Kind::l432, true, "relative gap of sum n^2 Q^2 over its lower bound");
                   }});
    out.push_back({"L433", G, [](const Context& c) {
                       return kind_report(c, "L433", Kind::l433, true, "relative gap of the bound over sum u^2 Q^2");
                   }});
}

}  // namespace lhx::vdetail
