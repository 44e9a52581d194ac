#pragma once

#include "common.hpp"

namespace lhx::vdetail {

// alpha_0 = 1/alpha maximizes B over (1/alpha, alpha); the flag records a sampled violation.
double conservative_b(double alpha, double y, bool* monotone = nullptr);

double l_b(double alpha, double y);
// (pi/x - 3/2 - (pi x - 3/2) x^2 e^{-pi(x - 1/x)})/(x^2 - 1) + (3 pi (1-B) - 2 (1+B)(x^2+1)/x) e^{-pi x}
double l_b_elementary(double x);

struct EpsC {
    double c1, c2, c3, c4;
};
EpsC eps_c(double alpha, double y);

double eps_d1(double alpha, double y);
double eps_d2(double alpha, double y);

double l_d(double alpha, double y);
// Case y in [sqrt3/2, 1] at alpha = 1.2 as printed, with the coefficient 4.8.
double l_d_case_b(double y);
double h_fn(double alpha, double y);
double l_a(double alpha, double y);
// pi y/alpha - 3/2 - (1+eps_c3) y alpha^3 e^{-pi y (alpha - 1/alpha)} - 2 (1+eps_c4) (pi y/alpha) e^{-alpha pi y}
double r_c(double alpha, double y);

double sigma1();
double sigma2();
double sigma3();
double sigma4();

double d_fn(double alpha, double y);
double d2_fn(double alpha, double y);

// (2/pi) alpha^{-5/2} y^{3/2} (-theta_Y(y/alpha; x)) e^{-2 pi y}
double c_fn(double alpha, double x, double y, const SeriesConfig& cfg);

// f(a, Y) = sum (n-Y)^3 e^{-a pi (n-Y)^2} / sum (n-Y) e^{-a pi (n-Y)^2}, limits at Y = 0, 1/2.
double f_ratio(double a, double Y);

// Identity sums at x = 1/2 for (d_yy + 2/y d_y) W and (d_yya + 2/y d_ya) W.
double lw1_field(double alpha, double y);
double ld1_field(double alpha, double y);

}  // namespace lhx::vdetail
