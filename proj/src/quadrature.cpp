#include "lhx/quadrature.hpp"

#include <boost/math/quadrature/gauss.hpp>
#include <cmath>

#include "lhx/error.hpp"

namespace lhx {

namespace {

using rule = boost::math::quadrature::gauss<double, 20>;

struct Estimate {
    double value;
    double mass;
};

Estimate composite(const std::function<double(double)>& f, double lo, double hi, int panels) {
    Estimate e{0.0, 0.0};
    double h = (hi - lo) / panels;
    for (int i = 0; i < panels; ++i) {
        double a = lo + i * h;
        double b = (i + 1 == panels) ? hi : a + h;
        double l1 = 0.0;
        e.value += rule::integrate(f, a, b, &l1);
        e.mass += l1;
    }
    return e;
}

}  // namespace

double integrate(const std::function<double(double)>& f, double lo, double hi, double rel_tol,
                 int max_panels) {
    if (!(hi > lo)) return 0.0;
    Estimate prev = composite(f, lo, hi, 1);
    for (int panels = 2; panels <= max_panels; panels *= 2) {
        Estimate cur = composite(f, lo, hi, panels);
        if (std::fabs(cur.value - prev.value) <= rel_tol * cur.mass) return cur.value;
        prev = cur;
    }
    throw Error(Errc::quadrature_divergence, "integrate: panel doubling did not converge");
}

}  // namespace lhx
