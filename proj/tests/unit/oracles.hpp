#pragma once

// Brute-force references that share no code with the library.

#include <cmath>
#include <functional>
#include <random>
#include <vector>

#include "lhx/lattice_domain.hpp"

namespace oracle {

inline constexpr double pi = 3.141592653589793238462643383279502884;
inline constexpr double hex_y = 0.8660254037844386;

// theta(X;Y) and its partials from the defining cosine series, |n| <= nmax
inline double theta1d(double X, double Y, int dx = 0, int dy = 0, int nmax = 80) {
    double s = 0;
    for (int n = -nmax; n <= nmax; ++n) {
        double nn = double(n) * n;
        double e = std::exp(-pi * nn * X) * std::pow(-pi * nn, dx);
        double ph = 2 * pi * n * Y;
        double trig;
        switch (dy) {
            case 0: trig = std::cos(ph); break;
            case 1: trig = -2 * pi * n * std::sin(ph); break;
            default: trig = -4 * pi * pi * nn * std::cos(ph); break;
        }
        s += e * trig;
    }
    return s;
}

// sum over (m, n) with |m z + n|^2 / y <= R^2 of f(r), r = |m z + n|^2 / y
inline double lattice_sum(lhx::UpperHalfPoint z, const std::function<double(double)>& f, bool origin,
                          double R = 8.0) {
    double s = 0;
    int mmax = int(std::ceil(R / std::sqrt(z.y))) + 1;
    for (int m = -mmax; m <= mmax; ++m) {
        double c = m * z.x;
        double rest = R * R * z.y - double(m) * m * z.y * z.y;
        if (rest < 0) continue;
        int lo = int(std::floor(-c - std::sqrt(rest))) - 1, hi = int(std::ceil(-c + std::sqrt(rest))) + 1;
        for (int n = lo; n <= hi; ++n) {
            if (m == 0 && n == 0 && !origin) continue;
            double r = ((c + n) * (c + n) + double(m) * m * z.y * z.y) / z.y;
            if (r > R * R) continue;
            s += f(r);
        }
    }
    return s;
}

inline double theta(double alpha, lhx::UpperHalfPoint z, double R = 8.0) {
    return lattice_sum(z, [&](double r) { return std::exp(-pi * alpha * r); }, true, R);
}

inline double w(double alpha, double b, lhx::UpperHalfPoint z, double R = 8.0) {
    return lattice_sum(z, [&](double r) { return (r - b / alpha) * std::exp(-pi * alpha * r); }, true, R);
}

inline double mu(double X, int nmax = 100) {
    double s = 0;
    for (int n = 2; n <= nmax; ++n) s += double(n) * n * std::exp(-pi * (double(n) * n - 1) * X);
    return s;
}

inline double nu(double X, int nmax = 100) {
    double s = 0;
    for (int n = 2; n <= nmax; ++n) s += std::pow(double(n), 4) * std::exp(-pi * (double(n) * n - 1) * X);
    return s;
}

// 5-point central difference
inline double diff(const std::function<double(double)>& f, double t, double h) {
    return (-f(t + 2 * h) + 8 * f(t + h) - 8 * f(t - h) + f(t - 2 * h)) / (12 * h);
}

inline double rel(double a, double b) { return std::fabs(a - b) / std::max(std::fabs(b), 1e-300); }

// seeded uniform points of D_G with y <= ymax
inline std::vector<lhx::UpperHalfPoint> random_dg(unsigned seed, int count, double ymax) {
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> ux(0.0, 0.5), uy(0.0, 1.0);
    std::vector<lhx::UpperHalfPoint> out;
    while (int(out.size()) < count) {
        double x = ux(rng), y = uy(rng) * ymax;
        if (x * x + y * y > 1.0) out.push_back({x, y});
    }
    return out;
}

}  // namespace oracle
