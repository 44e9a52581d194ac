#pragma once

#include <functional>
#include <string>
#include <variant>

#include "lhx/lattice_domain.hpp"
#include "lhx/special_functions.hpp"

namespace lhx {

// Every potential is a function of r = |P|^2, summed over L \ {0}.

struct Gaussian {
    double alpha;
};

// exp(-pi alpha r) - b exp(-pi a alpha r)
struct GaussianDiff {
    double alpha;
    double a;
    double b;
};

// (r - b/alpha) exp(-pi alpha r)
struct PolyGaussian {
    double alpha;
    double b;
};

// exp(-pi alpha r)/r - b exp(-pi a alpha r)/r
struct YukawaDiff {
    double alpha;
    double a;
    double b;
};

enum class LaplaceFamily { f, g };

// Nonnegative weight P(x) on [1, inf); kind and parameters kept for serialization.
struct LaplaceWeight {
    enum class Kind { constant, exponential, power };
    Kind kind = Kind::constant;
    double scale = 1.0;
    double rate = 0.0;  // exponent k in e^{kx} or x^k

    double operator()(double x) const;
};

// f: int_1^inf (exp(-pi alpha x r) - b exp(-pi a alpha x r)) P(x) dx
// g: int_1^inf (r x - b/alpha) exp(-pi alpha x r) P(x) dx
struct LaplaceWeighted {
    double alpha;
    double a;
    double b;
    LaplaceWeight weight;
    LaplaceFamily family = LaplaceFamily::f;
};

using PotentialSpec = std::variant<Gaussian, GaussianDiff, PolyGaussian, YukawaDiff, LaplaceWeighted>;

void validate(const PotentialSpec& p);
std::string potential_name(const PotentialSpec& p);

// Pointwise potential value at r = |P|^2 > 0.
double potential_value(const PotentialSpec& p, double r);

double theta_lattice(double alpha, UpperHalfPoint z, const SeriesConfig& cfg = {});

// theta(alpha; z) - 1, evaluated without cancellation against the origin.
double theta_lattice_punctured(double alpha, UpperHalfPoint z, const SeriesConfig& cfg = {});

double w_b(double alpha, double b, UpperHalfPoint z, const SeriesConfig& cfg = {});

double w_b_via_theta_derivative(double alpha, double b, UpperHalfPoint z, const SeriesConfig& cfg = {});

// d/dx W_{1/(2 pi)}(alpha; z)
double dx_w(double alpha, UpperHalfPoint z, const SeriesConfig& cfg = {});

// Same derivative from the double sum over A_{n,m} sin(2 m n pi x).
double dx_w_double_sum(double alpha, UpperHalfPoint z, const SeriesConfig& cfg = {});

// d/dy W_{1/(2 pi)}(alpha; z)
double dy_w(double alpha, UpperHalfPoint z, const SeriesConfig& cfg = {});

// theta(alpha; z) - b theta(a alpha; z), a > 1
double theta_difference(double alpha, double a, double b, UpperHalfPoint z, const SeriesConfig& cfg = {});

// Energy over L \ {0} by direct summation within cutoff_radius.
double lattice_energy(const PotentialSpec& p, UpperHalfPoint z, double cutoff_radius);

// Smallest radius (doubling from 4) meeting the lattice_energy tail check.
double default_cutoff(const PotentialSpec& p, UpperHalfPoint z);

// Energy of a Laplace-weighted potential via Fubini over x.
double laplace_energy(const LaplaceWeighted& p, UpperHalfPoint z, const SeriesConfig& cfg = {});

// Dispatches to the fastest exact route for the family.
double potential_energy(const PotentialSpec& p, UpperHalfPoint z, const SeriesConfig& cfg = {});

}  // namespace lhx
