#include "lhx/minimization.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <numbers>
#include <thread>

#include "lhx/error.hpp"

namespace lhx {

namespace {

const double sqrt3_2 = std::sqrt(3.0) / 2.0;
constexpr double boundary_margin = 1e-12;
constexpr double gamma_y_max = 50.0;
constexpr double golden_tol = 1e-10;
constexpr double simplex_tol = 1e-9;
constexpr double probe_y = 64.0;

double distance_to_hex(UpperHalfPoint z) {
    UpperHalfPoint h = hexagonal_point();
    return std::hypot(z.x - h.x, z.y - h.y);
}

// Energy along Gamma at y = sqrt(3)/2 2^k. Keeps the strictly decreasing tail of
// the sequence, extending k until that tail ends below the hexagonal value.
NoMinimizer gamma_witness(const std::function<double(double)>& on_gamma, int sign, int k_min, int k_max) {
    double hex = on_gamma(sqrt3_2);
    std::vector<double> ys, vals;
    for (int k = 0; k <= k_max; ++k) {
        double y = sqrt3_2 * std::ldexp(1.0, k);
        ys.push_back(y);
        vals.push_back(k == 0 ? hex : on_gamma(y));
        if (k < k_min) continue;
        std::size_t s = vals.size() - 1;
        while (s > 0 && vals[s - 1] > vals[s]) --s;
        if (vals.size() - s >= 3 && vals.back() < hex) {
            return {{ys.begin() + static_cast<long>(s), ys.end()},
                    {vals.begin() + static_cast<long>(s), vals.end()}, sign};
        }
    }
    std::size_t s = vals.size() - 1;
    while (s > 0 && vals[s - 1] > vals[s]) --s;
    return {{ys.begin() + static_cast<long>(s), ys.end()}, {vals.begin() + static_cast<long>(s), vals.end()}, sign};
}

// scale: magnitude of the terms making up the energy, setting the roundoff floor.
Minimizer refine_from_gamma(const std::function<double(UpperHalfPoint)>& energy, double scale) {
    double tie = 1e-13 * scale;
    auto on_gamma = [&](double y) { return energy({0.5, y}); };
    double y0 = golden_section(on_gamma, sqrt3_2, gamma_y_max, golden_tol, tie);
    auto reduced = [&](UpperHalfPoint z) {
        if (!(z.y > 0.0)) return std::numeric_limits<double>::infinity();
        return energy(reduce_to_fundamental(z).point);
    };
    SimplexResult r = nelder_mead(reduced, {0.5, y0}, 0.02, simplex_tol, tie);
    UpperHalfPoint z = reduce_to_fundamental(r.point).point;
    return {z, r.value, distance_to_hex(z)};
}

}  // namespace

double golden_section(const std::function<double(double)>& f, double lo, double hi, double tol, double tie_tol) {
    const double inv_phi = (std::sqrt(5.0) - 1.0) / 2.0;
    double best_x = lo;
    double best_f = f(lo);
    auto consider = [&](double x, double v) {
        if (v < best_f - tie_tol || (v <= best_f + tie_tol && x < best_x)) {
            best_x = x;
            best_f = v;
        }
    };
    consider(hi, f(hi));
    double a = lo, b = hi;
    double c = b - inv_phi * (b - a);
    double d = a + inv_phi * (b - a);
    double fc = f(c), fd = f(d);
    consider(c, fc);
    consider(d, fd);
    while (b - a > tol) {
        if (fc <= fd + tie_tol) {
            b = d;
            d = c;
            fd = fc;
            c = b - inv_phi * (b - a);
            fc = f(c);
            consider(c, fc);
        } else {
            a = c;
            c = d;
            fc = fd;
            d = a + inv_phi * (b - a);
            fd = f(d);
            consider(d, fd);
        }
    }
    return best_x;
}

SimplexResult nelder_mead(const std::function<double(UpperHalfPoint)>& f, UpperHalfPoint start, double step,
                          double diameter_tol, double tie_tol, int max_evaluations) {
    struct Vertex {
        UpperHalfPoint p;
        double v;
    };
    int evals = 0;
    auto eval = [&](UpperHalfPoint p) {
        ++evals;
        return Vertex{p, f(p)};
    };
    std::vector<Vertex> s{eval(start), eval({start.x + step, start.y}), eval({start.x, start.y + step})};
    auto lerp = [](UpperHalfPoint a, UpperHalfPoint b, double t) {
        return UpperHalfPoint{a.x + t * (b.x - a.x), a.y + t * (b.y - a.y)};
    };
    auto diameter = [&] {
        double d = 0.0;
        for (int i = 0; i < 3; ++i)
            for (int j = i + 1; j < 3; ++j) d = std::max(d, std::hypot(s[i].p.x - s[j].p.x, s[i].p.y - s[j].p.y));
        return d;
    };
    auto better = [tie_tol](double a, double b) { return a < b - tie_tol; };
    while (evals < max_evaluations && diameter() > diameter_tol) {
        // insertion sort; a vertex moves ahead only when clearly better
        for (int i = 1; i < 3; ++i)
            for (int j = i; j > 0 && better(s[j].v, s[j - 1].v); --j) std::swap(s[j], s[j - 1]);
        UpperHalfPoint c{(s[0].p.x + s[1].p.x) / 2.0, (s[0].p.y + s[1].p.y) / 2.0};
        Vertex r = eval(lerp(c, s[2].p, -1.0));
        if (better(r.v, s[0].v)) {
            Vertex e = eval(lerp(c, s[2].p, -2.0));
            s[2] = better(e.v, r.v) ? e : r;
        } else if (better(r.v, s[1].v)) {
            s[2] = r;
        } else {
            Vertex k = better(r.v, s[2].v) ? eval(lerp(c, r.p, 0.5)) : eval(lerp(c, s[2].p, 0.5));
            if (better(k.v, std::min(r.v, s[2].v))) {
                s[2] = k;
            } else {
                for (int i = 1; i < 3; ++i) s[i] = eval(lerp(s[0].p, s[i].p, 0.5));
            }
        }
    }
    for (int i = 1; i < 3; ++i)
        for (int j = i; j > 0 && better(s[j].v, s[j - 1].v); --j) std::swap(s[j], s[j - 1]);
    return {s[0].p, s[0].v, evals};
}

MinimizeOutcome minimize_w(double alpha, double b, const SeriesConfig& cfg) {
    if (!(alpha > 0.0) || !std::isfinite(alpha)) throw Error(Errc::non_positive_alpha, "minimize_w: alpha must be positive");
    if (!std::isfinite(b)) throw Error(Errc::invalid_argument, "minimize_w: b must be finite");
    const double bc = 1.0 / (2.0 * std::numbers::pi);
    MinimizeOutcome out;
    out.advisory = alpha < 1.0;
    if (b > bc + boundary_margin) {
        out.result = gamma_witness([&](double y) { return w_b(alpha, b, {0.5, y}, cfg); }, -1, 12, 40);
        return out;
    }
    UpperHalfPoint h = hexagonal_point();
    double scale = std::fabs(w_b(alpha, 0.0, h, cfg)) + std::fabs(b) / alpha * theta_lattice(alpha, h, cfg);
    out.result = refine_from_gamma([&](UpperHalfPoint z) { return w_b(alpha, b, z, cfg); }, scale);
    return out;
}

MinimizeOutcome minimize_theta_difference(double alpha, double a, double b, const SeriesConfig& cfg) {
    if (!(alpha > 0.0) || !std::isfinite(alpha)) {
        throw Error(Errc::non_positive_alpha, "minimize_theta_difference: alpha must be positive");
    }
    if (!(a > 1.0) || !std::isfinite(a)) throw Error(Errc::invalid_argument, "minimize_theta_difference: a must exceed 1");
    if (!std::isfinite(b)) throw Error(Errc::invalid_argument, "minimize_theta_difference: b must be finite");
    MinimizeOutcome out;
    out.advisory = alpha < 1.0;
    if (b > std::sqrt(a) + boundary_margin) {
        out.result = gamma_witness([&](double y) { return theta_difference(alpha, a, b, {0.5, y}, cfg); }, -1, 12, 40);
        return out;
    }
    UpperHalfPoint h = hexagonal_point();
    double scale = theta_lattice(alpha, h, cfg) + std::fabs(b) * theta_lattice(a * alpha, h, cfg);
    out.result = refine_from_gamma([&](UpperHalfPoint z) { return theta_difference(alpha, a, b, z, cfg); }, scale);
    return out;
}

MinimizeOutcome minimize_generic(const PotentialSpec& p, const SeriesConfig& cfg) {
    validate(p);
    auto energy = [&](UpperHalfPoint z) {
        if (const auto* lw = std::get_if<LaplaceWeighted>(&p)) return laplace_energy(*lw, z, cfg);
        return lattice_energy(p, z, default_cutoff(p, z));
    };
    constexpr int n = 40;
    UpperHalfPoint best{0.0, sqrt3_2};
    double best_v = std::numeric_limits<double>::infinity();
    for (int j = 0; j < n; ++j) {
        double y = sqrt3_2 + (8.0 - sqrt3_2) * j / (n - 1);
        for (int i = 0; i < n; ++i) {
            double x = 0.5 * i / (n - 1);
            double v = energy({x, y});
            if (v < best_v) {
                best_v = v;
                best = {x, y};
            }
        }
    }
    MinimizeOutcome out;
    if (energy({0.5, probe_y}) < best_v - 1e-8) {
        out.result = gamma_witness([&](double y) { return energy({0.5, y}); }, -1, 0, 6);
        return out;
    }
    auto reduced = [&](UpperHalfPoint z) {
        if (!(z.y > 0.0)) return std::numeric_limits<double>::infinity();
        return energy(reduce_to_fundamental(z).point);
    };
    SimplexResult r = nelder_mead(reduced, best, 0.5 / (n - 1), simplex_tol, 1e-13 * std::fabs(best_v));
    UpperHalfPoint z = reduce_to_fundamental(r.point).point;
    out.result = Minimizer{z, r.value, distance_to_hex(z)};
    return out;
}

const char* phase_name(Phase p) noexcept {
    switch (p) {
        case Phase::hexagonal: return "Hexagonal";
        case Phase::no_minimizer: return "NoMinimizer";
        case Phase::other: return "Other";
    }
    return "?";
}

PhaseTable phase_scan(const std::vector<double>& alphas, const std::vector<double>& bs, PhaseProblem problem,
                      const SeriesConfig& cfg, unsigned threads) {
    if (alphas.empty() || bs.empty()) throw Error(Errc::invalid_argument, "phase_scan: grids must be nonempty");
    if (problem.kind == PhaseProblem::Kind::theta_difference && !(problem.a > 1.0)) {
        throw Error(Errc::invalid_argument, "phase_scan: a must exceed 1");
    }
    PhaseTable table;
    for (double a : alphas)
        for (double b : bs) table.cells.push_back({a, b, Phase::other});

    std::atomic<std::size_t> next{0};
    std::vector<std::exception_ptr> errors(table.cells.size());
    auto worker = [&] {
        for (std::size_t i = next++; i < table.cells.size(); i = next++) {
            PhaseCell& c = table.cells[i];
            try {
                MinimizeOutcome o = problem.kind == PhaseProblem::Kind::w
                                        ? minimize_w(c.alpha, c.b, cfg)
                                        : minimize_theta_difference(c.alpha, problem.a, c.b, cfg);
                if (!o.is_minimizer()) {
                    c.phase = Phase::no_minimizer;
                } else {
                    c.phase = o.minimizer().distance_to_hex < 1e-5 ? Phase::hexagonal : Phase::other;
                }
            } catch (...) {
                errors[i] = std::current_exception();
            }
        }
    };
    unsigned n = threads ? threads : std::max(1u, std::thread::hardware_concurrency());
    n = static_cast<unsigned>(std::min<std::size_t>(n, table.cells.size()));
    {
        std::vector<std::jthread> pool;
        for (unsigned t = 1; t < n; ++t) pool.emplace_back(worker);
        worker();
    }
    for (auto& e : errors)
        if (e) std::rethrow_exception(e);

    for (double a : alphas) {
        PhaseBoundary pb{a, std::nullopt, std::nullopt};
        for (const PhaseCell& c : table.cells) {
            if (c.alpha != a) continue;
            if (c.phase == Phase::hexagonal && (!pb.last_hexagonal_b || c.b > *pb.last_hexagonal_b)) {
                pb.last_hexagonal_b = c.b;
            }
            if (c.phase == Phase::no_minimizer && (!pb.first_no_minimizer_b || c.b < *pb.first_no_minimizer_b)) {
                pb.first_no_minimizer_b = c.b;
            }
        }
        table.boundaries.push_back(pb);
    }
    return table;
}

}  // namespace lhx
