#include "common.hpp"

#include <algorithm>
#include <cstdio>

#include "lhx/special_functions.hpp"

namespace lhx::vdetail {

LemmaReport make_report(std::string id, ReportGroup group, double claimed, double computed, Comparison cmp,
                        double tol, std::string grid, std::string note) {
    LemmaReport r;
    r.lemma_id = std::move(id);
    r.group = group;
    r.claimed = claimed;
    r.computed = computed;
    r.comparison = cmp;
    r.tolerance = tol;
    r.grid = std::move(grid);
    r.note = std::move(note);
    r.pass = comparison_holds(cmp, computed, claimed, tol);
    return r;
}

std::mt19937_64 report_rng(const Context& ctx, const std::string& id) {
    std::uint64_t h = 1469598103934665603ull;
    for (unsigned char c : id) {
        h ^= c;
        h *= 1099511628211ull;
    }
    return std::mt19937_64(ctx.seed ^ h);
}

std::string fmt(double v, int digits) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.*g", digits, v);
    return buf;
}

static void consider(Extremum& best, double v, double a, double y) {
    if (v < best.value || std::isnan(v)) {
        best = {v, a, y};
    }
}

Extremum grid_min(const Region& r, const Field& f, int n) {
    Extremum best{INFINITY, r.a0, r.ylo(r.a0)};
    for (int i = 0; i < n; ++i) {
        double a = r.a0 + (r.a1 - r.a0) * i / (n - 1);
        double lo = r.ylo(a), hi = r.yhi(a);
        for (int j = 0; j < n; ++j) {
            double y = lo + (hi - lo) * j / (n - 1);
            consider(best, f(a, y), a, y);
            if (std::isnan(best.value)) return best;
        }
    }
    return best;
}

Extremum random_min(const Region& r, const Field& f, int count, std::mt19937_64& rng) {
    std::uniform_real_distribution<double> u(0.0, 1.0);
    Extremum best{INFINITY, r.a0, r.ylo(r.a0)};
    for (int k = 0; k < count; ++k) {
        double a = r.a0 + (r.a1 - r.a0) * u(rng);
        double lo = r.ylo(a), hi = r.yhi(a);
        double y = lo + (hi - lo) * u(rng);
        consider(best, f(a, y), a, y);
        if (std::isnan(best.value)) return best;
    }
    return best;
}

Extremum edge_min(const Region& r, const Field& f, int n, bool a_edge_high, bool y_edge_high) {
    Extremum best{INFINITY, r.a0, r.ylo(r.a0)};
    if (a_edge_high) {
        double a = r.a1;
        for (int j = 0; j < n; ++j) {
            double y = r.ylo(a) + (r.yhi(a) - r.ylo(a)) * j / (n - 1);
            consider(best, f(a, y), a, y);
        }
    }
    if (y_edge_high) {
        for (int i = 0; i < n; ++i) {
            double a = r.a0 + (r.a1 - r.a0) * i / (n - 1);
            consider(best, f(a, r.yhi(a)), a, r.yhi(a));
        }
    }
    return best;
}

RegionScan scan_region(const Context& ctx, const std::string& id, const Region& r, const Field& f, int n) {
    auto rng = report_rng(ctx, id);
    Extremum g = grid_min(r, f, n);
    Extremum rnd = random_min(r, f, ctx.random_points, rng);
    RegionScan s;
    s.coarse = (rnd.value < g.value) ? rnd : g;
    s.refined = grid_min(r, f, 2 * n);
    s.grid = r.label + "; " + std::to_string(n) + "x" + std::to_string(n) + " uniform + " +
             std::to_string(ctx.random_points) + " random (seed " + std::to_string(ctx.seed) + "); refined " +
             std::to_string(2 * n) + "x" + std::to_string(2 * n);
    return s;
}

std::string where(const Extremum& e, const char* a, const char* y) {
    return std::string("at ") + a + "=" + fmt(e.a, 6) + ", " + y + "=" + fmt(e.y, 6);
}

double a_nm(int n, int m, double alpha, double y) {
    double nn = n * n, mm = m * m;
    return double(n) * nn * m *
           (alpha * alpha * std::exp(-pi * y * (alpha * nn + mm / alpha)) -
            std::exp(-pi * y * (alpha * mm + nn / alpha)));
}

double pq_sum_t(double alpha, double x, double y, const std::function<double(int, double, double)>& w) {
    // the cut follows the n = +-1 rows, since weights such as n^2 vanish on n = 0
    double qmin = INFINITY;
    for (int m = -3; m <= 3; ++m) {
        double t = m + x;
        qmin = std::min(qmin, y + t * t / y);
    }
    double qcut = std::max(qmin, 1.0 / y) + 50.0 / (pi * alpha);
    int nmax = int(std::sqrt(qcut / y)) + 1;
    double s = 0.0;
    for (int n = -nmax; n <= nmax; ++n) {
        double rest = qcut - y * n * n;
        if (rest < 0) continue;
        double half = std::sqrt(rest * y);
        int mlo = int(std::floor(-n * x - half)), mhi = int(std::ceil(-n * x + half));
        for (int m = mlo; m <= mhi; ++m) {
            double t = m + n * x;
            double q = y * n * n + t * t / y;
            s += w(n, t, q) * std::exp(-pi * alpha * q);
        }
    }
    return s;
}

double pq_sum(double alpha, double x, double y, const std::function<double(int, double, double)>& w) {
    return pq_sum_t(alpha, x, y, [&](int n, double t, double q) { return w(n, n * n - t * t / (y * y), q); });
}

double dy_w_unnormalized(double alpha, double x, double y, const SeriesConfig& cfg) {
    double X = y / alpha;
    double s_theta2 = 0, s_theta4 = 0, s_x = 0, s_xx = 0;
    for (int n = -40; n <= 40; ++n) {
        double e = std::exp(-alpha * pi * y * n * n);
        if (n != 0 && e < 1e-300) continue;
        ThetaArg arg{X, n * x};
        double th = jacobi_theta(arg, cfg);
        double nn = double(n) * n;
        s_theta2 += nn * e * th;
        s_theta4 += nn * nn * e * th;
        s_x += e * jacobi_theta_order(arg, ThetaOrder::dX, cfg);
        s_xx += e * jacobi_theta_order(arg, ThetaOrder::dXX, cfg);
    }
    return 1.5 * std::sqrt(y) * (pi * alpha * alpha * s_theta2 + s_x) +
           y * std::sqrt(y) * (-pi * pi * alpha * alpha * alpha * s_theta4 + s_xx / alpha);
}

}  // namespace lhx::vdetail
