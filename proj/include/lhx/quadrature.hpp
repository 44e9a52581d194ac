#pragma once

#include <functional>

namespace lhx {

// Composite Gauss-Legendre on [lo, hi]; panels double until two successive
// estimates agree to rel_tol. Throws QuadratureDivergence past max_panels.
double integrate(const std::function<double(double)>& f, double lo, double hi, double rel_tol = 1e-10,
                 int max_panels = 4096);

}  // namespace lhx
