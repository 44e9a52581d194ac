#pragma once

#include <cmath>
#include <limits>
#include <string>

#include "lhx/error.hpp"
#include "lhx/special_functions.hpp"

namespace lhx::detail {

// Sums term(0) + term(1) + ... where |term(k)| <= bound(k) for k >= 1 and
// bound(k+1)/bound(k) is non-increasing. Stops once the geometric tail bound
// drops below rel_tol times the accumulated absolute mass, then adds two guard
// shells. Terms may be long double to carry extra precision through cancellation.
template <class Term, class Bound>
double sum_shells(Term&& term, Bound&& bound, const SeriesConfig& cfg, const char* what) {
    using R = decltype(term(0));
    R sum = term(0);
    double mass = std::fabs(sum);
    for (int k = 1;; ++k) {
        if (k > cfg.max_terms()) {
            throw Error(Errc::truncation_failure,
                        std::string(what) + ": tail bound not met within max_terms");
        }
        R t = term(k);
        sum += t;
        mass += std::fmax(double(std::fabs(t)), bound(k));
        double b1 = bound(k + 1);
        double tail = 0.0;
        if (b1 > 0.0) {
            double r = bound(k + 2) / b1;
            tail = r < 1.0 ? b1 / (1.0 - r) : std::numeric_limits<double>::infinity();
        }
        if (tail <= cfg.rel_tol() * mass) {
            sum += term(k + 1);
            sum += term(k + 2);
            return double(sum);
        }
    }
}

}  // namespace lhx::detail
