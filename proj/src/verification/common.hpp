#pragma once

#include <cmath>
#include <cstdint>
#include <functional>
#include <numbers>
#include <random>
#include <string>
#include <vector>

#include "lhx/verification.hpp"

namespace lhx::vdetail {

inline constexpr double pi = std::numbers::pi;
inline const double s3 = std::sqrt(3.0) / 2.0;

struct Context {
    std::uint64_t seed;
    int random_points;
    SeriesConfig cfg;
};

using ReportFn = std::function<LemmaReport(const Context&)>;

struct Entry {
    std::string id;
    ReportGroup group;
    ReportFn fn;
};

void add_constants(std::vector<Entry>& out);
void add_error_terms(std::vector<Entry>& out);
void add_regions(std::vector<Entry>& out);
void add_double_sums(std::vector<Entry>& out);
void add_identities(std::vector<Entry>& out);

LemmaReport make_report(std::string id, ReportGroup group, double claimed, double computed, Comparison cmp,
                        double tol, std::string grid, std::string note = {});

std::mt19937_64 report_rng(const Context& ctx, const std::string& id);

std::string fmt(double v, int digits = 10);

// sum_{n >= n0} f(n) until terms fall below 1e-19 of the running magnitude.
template <class F>
double series(int n0, F&& f, int max_n = 400) {
    double s = 0.0;
    int quiet = 0;
    for (int n = n0; n < max_n; ++n) {
        double t = f(n);
        s += t;
        if (std::fabs(t) <= 1e-19 * std::fabs(s) || t == 0.0) {
            if (++quiet >= 3) break;
        } else {
            quiet = 0;
        }
    }
    return s;
}

// Region {(a, y): a in [a0, a1], y in [ylo(a), yhi(a)]}.
struct Region {
    double a0;
    double a1;
    std::function<double(double)> ylo;
    std::function<double(double)> yhi;
    std::string label;
};

struct Extremum {
    double value;
    double a;
    double y;
};

using Field = std::function<double(double, double)>;

// Uniform n x n grid including all edges.
Extremum grid_min(const Region& r, const Field& f, int n);
Extremum random_min(const Region& r, const Field& f, int count, std::mt19937_64& rng);
Extremum edge_min(const Region& r, const Field& f, int n, bool a_edge_high, bool y_edge_high);

struct RegionScan {
    Extremum coarse;   // n x n grid together with random points
    Extremum refined;  // 2n x 2n grid
    std::string grid;
};

RegionScan scan_region(const Context& ctx, const std::string& id, const Region& r, const Field& f, int n = 64);

std::string where(const Extremum& e, const char* a = "alpha", const char* y = "y");

// A_{n,m}(alpha; y)
double a_nm(int n, int m, double alpha, double y);

// sum over (n, m) in Z^2 of w(n, u, Q) exp(-pi alpha Q), Q = y n^2 + (m + n x)^2 / y,
// u = n^2 - (m + n x)^2 / y^2, truncated 50 e-folds past the smallest Q on the n = 1 row and on n = 0.
double pq_sum(double alpha, double x, double y, const std::function<double(int, double, double)>& w);

// same lattice and cut as pq_sum with weight w(n, t, Q), t = m + n x
double pq_sum_t(double alpha, double x, double y, const std::function<double(int, double, double)>& w);

// Bracket of the paper's expression for d/dy W at x, without the 1/pi alpha^{-5/2} factor.
double dy_w_unnormalized(double alpha, double x, double y, const SeriesConfig& cfg);

}  // namespace lhx::vdetail
