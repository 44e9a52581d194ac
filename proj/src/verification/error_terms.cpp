#include <algorithm>

#include "bounds.hpp"

namespace lhx::vdetail {

namespace {

constexpr auto G = ReportGroup::error_terms;

Region region_c() {
    return {1.2, 6.0, [](double a) { return 5.0 * a / 6.0; }, [](double) { return 8.0; },
            "R_c: alpha in [1.2,6], y in [5 alpha/6, 8]"};
}

Region region_d() {
    return {1.2, 6.0, [](double) { return s3; }, [](double a) { return 5.0 * a / 6.0; },
            "R_d: alpha in [1.2,6], y in [sqrt3/2, 5 alpha/6]"};
}

Region region_da() {
    return {1.0, 6.0, [](double) { return s3; }, [](double a) { return a < 1.2 ? 1.0 : 5.0 * a / 6.0; },
            "R_a union R_d: alpha in [1,6], y in [sqrt3/2, max(1, 5 alpha/6)]"};
}

LemmaReport region_max(const Context& ctx, const std::string& id, double claimed, const Region& r,
                       const std::function<double(double, double)>& f, const std::string& what) {
    auto s = scan_region(ctx, id, r, [&](double a, double y) { return -f(a, y); });
    auto rep = make_report(id, G, claimed, -s.coarse.value, Comparison::le, 0.0, s.grid,
                           what + "; maximum " + where(s.coarse));
    rep.refined = -s.refined.value;
    return rep;
}

LemmaReport fixed(const std::string& id, double claimed, double v, const std::string& grid) {
    return make_report(id, G, claimed, v, Comparison::le, 0.0, grid);
}

LemmaReport b100(const Context& ctx) {
    double worst = 0.0;
    std::string arg;
    for (double a0 : {1.0 / 1.1, 1.0, 1.1}) {
        for (int j = 0; j < 64; ++j) {
            double y = s3 + (8.0 - s3) * j / 63.0;
            double b = bound_b(a0, y);
            for (int m = 1; m <= 4; ++m) {
                double direct = series(1, [&](int k) {
                    double r = double(m + k) / m;
                    return r * r * r * r * (m + k) * (m + k) * a0 * pi * y * std::exp(-a0 * pi * y * (2 * m + k) * k);
                });
                if (direct / b > worst) {
                    worst = direct / b;
                    arg = "alpha_0=" + fmt(a0, 6) + ", y=" + fmt(y, 6) + ", m=" + std::to_string(m);
                }
            }
        }
    }
    (void)ctx;
    return make_report("B100", G, 1.0, worst, Comparison::le, 1e-12,
                       "alpha_0 in {1/1.1, 1, 1.1} x 64 y in [sqrt3/2, 8] x m in 1..4",
                       "ratio of direct sum_k b_k to B; B(y=sqrt3/2, alpha_0=1) = " + fmt(bound_b(1.0, s3)) +
                           "; worst " + arg);
}

LemmaReport c_const(const Context& ctx) {
    double best = INFINITY;
    std::string arg;
    const int nx = 32, ny = 32;
    for (double a : {1.05, 1.1, 1.2, 1.5, 2.0, 3.0, 4.5, 6.0}) {
        for (int i = 0; i < nx; ++i) {
            double x = 0.5 * (i + 0.5) / nx;
            double lo = std::sqrt(1.0 - x * x);
            for (int j = 0; j < ny; ++j) {
                double y = lo + (8.0 - lo) * j / (ny - 1);
                double v = c_fn(a, x, y, ctx.cfg);
                if (v < best) best = v, arg = "alpha=" + fmt(a, 4) + ", x=" + fmt(x, 6) + ", y=" + fmt(y, 6);
            }
        }
    }
    return make_report("C_const", G, 0.0, best, Comparison::ge, 0.0,
                       "alpha in {1.05,...,6} x 32 x in (0,1/2) x 32 y in [sqrt(1-x^2), 8]",
                       "minimum of C(alpha,x,y) at " + arg + "; printed with e^{-2 pi y}");
}

}  // namespace

void add_error_terms(std::vector<Entry>& out) {
    out.push_back({"sigma1", G, [](const Context&) {
                       return fixed("sigma1", 2.169e-3, sigma1(), "alpha = 1.1, y = sqrt3/2, X = 1/2");
                   }});
    out.push_back({"sigma2", G, [](const Context&) {
                       return fixed("sigma2", 6.75e-4, sigma2(), "alpha = 1.1, y = sqrt3/2, X = 1/2");
                   }});
    out.push_back({"sigma3", G, [](const Context&) {
                       return fixed("sigma3", 1.777e-6, sigma3(), "alpha = sqrt3, y = sqrt3/2");
                   }});
    out.push_back({"sigma4", G, [](const Context&) {
                       return fixed("sigma4", 2.727e-5, sigma4(), "alpha = sqrt3, y = sqrt3/2, alpha/y = 2");
                   }});
    out.push_back({"eps_c1", G, [](const Context& c) {
                       return region_max(c, "eps_c1", 5.68e-4, region_c(),
                                         [](double a, double y) { return eps_c(a, y).c1; }, "eps_c1");
                   }});
    out.push_back({"eps_c2", G, [](const Context& c) {
                       return region_max(c, "eps_c2", 1.23e-5, region_c(),
                                         [](double a, double y) { return eps_c(a, y).c2; }, "eps_c2");
                   }});
    out.push_back({"eps_c3", G, [](const Context& c) {
                       return region_max(c, "eps_c3", 2.27e-3, region_c(),
                                         [](double a, double y) { return eps_c(a, y).c3; }, "eps_c3");
                   }});
    out.push_back({"eps_c4", G, [](const Context& c) {
                       return region_max(c, "eps_c4", 1.24e-5, region_c(),
                                         [](double a, double y) { return eps_c(a, y).c4; }, "eps_c4");
                   }});
    out.push_back({"eps_d1", G, [](const Context& c) {
                       return region_max(c, "eps_d1", 3.92e-4, region_d(), eps_d1, "eps_d1");
                   }});
    out.push_back({"eps_d2", G, [](const Context& c) {
                       return region_max(c, "eps_d2", 9.27e-4, region_d(), eps_d2, "eps_d2");
                   }});
    out.push_back({"B100", G, b100});
    out.push_back({"dH4", G, [](const Context& c) {
                       return region_max(c, "dH4", 2.0, region_da(), d_fn, "d(alpha;y)");
                   }});
    out.push_back({"adH4", G, [](const Context& c) {
                       return region_max(c, "adH4", 2.0, region_da(), d2_fn,
                                         "d2(alpha;y) with eighth powers matching the preceding estimate");
                   }});
    out.push_back({"C_const", G, c_const});
}

std::vector<BoundTerm> bound_terms(const SeriesConfig&) {
    const double ac = 1.2, yc = 1.0;
    EpsC e = eps_c(ac, yc);
    return {
        {"sigma1", "P3", sigma1()},
        {"sigma2", "P3", sigma2()},
        {"sigma3", "P5", sigma3()},
        {"sigma4", "P5", sigma4()},
        {"eps_c1", "Lemma413", e.c1},
        {"eps_c2", "Lemma414", e.c2},
        {"eps_c3", "Lemma413", e.c3},
        {"eps_c4", "Lemma414", e.c4},
        {"eps_d1", "Lemma425", eps_d1(1.2, s3)},
        {"eps_d2", "Lemma426", eps_d2(1.2, s3)},
        {"B", "B100", bound_b(1.0, s3)},
        {"d", "dH4", d_fn(1.0, s3)},
        {"d2", "adH4", d2_fn(1.0, s3)},
        {"C_const", "Th32a", c_fn(1.1, 0.25, 1.0, SeriesConfig{})},
    };
}

}  // namespace lhx::vdetail

namespace lhx {

std::vector<BoundTerm> bound_terms(const SeriesConfig& cfg) { return vdetail::bound_terms(cfg); }

}  // namespace lhx
