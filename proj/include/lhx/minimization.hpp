#pragma once

#include <functional>
#include <optional>
#include <variant>
#include <vector>

#include "lhx/energy.hpp"

namespace lhx {

struct Minimizer {
    UpperHalfPoint z_star;
    double value;
    double distance_to_hex;
};

struct NoMinimizer {
    std::vector<double> witness_y;       // increasing, on x = 1/2
    std::vector<double> witness_values;  // strictly decreasing
    int asymptotic_slope_sign;
};

struct MinimizeOutcome {
    std::variant<Minimizer, NoMinimizer> result;
    bool advisory = false;  // parameters outside the theorem hypotheses

    bool is_minimizer() const noexcept { return std::holds_alternative<Minimizer>(result); }
    const Minimizer& minimizer() const { return std::get<Minimizer>(result); }
    const NoMinimizer& no_minimizer() const { return std::get<NoMinimizer>(result); }
};

MinimizeOutcome minimize_w(double alpha, double b, const SeriesConfig& cfg = {});

MinimizeOutcome minimize_theta_difference(double alpha, double a, double b, const SeriesConfig& cfg = {});

MinimizeOutcome minimize_generic(const PotentialSpec& p, const SeriesConfig& cfg = {});

// Golden-section search for a minimum of f on [lo, hi]. Values within tie_tol
// count as equal and resolve toward the left end.
double golden_section(const std::function<double(double)>& f, double lo, double hi, double tol,
                      double tie_tol = 0.0);

struct SimplexResult {
    UpperHalfPoint point;
    double value;
    int evaluations;
};

// Nelder-Mead in the plane, started from a right simplex with legs of length step.
// Moves must improve by more than tie_tol; otherwise the simplex shrinks toward
// the incumbent, so flat objectives return the start point.
SimplexResult nelder_mead(const std::function<double(UpperHalfPoint)>& f, UpperHalfPoint start, double step,
                          double diameter_tol, double tie_tol = 0.0, int max_evaluations = 4000);

enum class Phase { hexagonal, no_minimizer, other };

const char* phase_name(Phase p) noexcept;

struct PhaseProblem {
    enum class Kind { w, theta_difference };
    Kind kind = Kind::w;
    double a = 2.0;
};

struct PhaseCell {
    double alpha;
    double b;
    Phase phase;
};

struct PhaseBoundary {
    double alpha;
    std::optional<double> last_hexagonal_b;
    std::optional<double> first_no_minimizer_b;
};

struct PhaseTable {
    std::vector<PhaseCell> cells;  // alpha-major, in input order
    std::vector<PhaseBoundary> boundaries;
};

// threads = 0 uses the hardware concurrency.
PhaseTable phase_scan(const std::vector<double>& alphas, const std::vector<double>& bs, PhaseProblem problem,
                      const SeriesConfig& cfg = {}, unsigned threads = 0);

}  // namespace lhx
