#include <doctest.h>

#include <thread>

#include <boost/math/tools/roots.hpp>

#include "lhx/error.hpp"
#include "lhx/special_functions.hpp"
#include "oracles.hpp"

using namespace lhx;
using oracle::pi;

namespace {

double th(double X, double Y, ThetaOrder o = ThetaOrder::value, ThetaForm f = ThetaForm::automatic) {
    return o == ThetaOrder::value ? jacobi_theta({X, Y}, {}, f) : jacobi_theta_order({X, Y}, o, {}, f);
}

bool near_sin_zero(double Y) { return std::fabs(Y - std::round(2 * Y) / 2) < 1e-3; }

}  // namespace

TEST_SUITE("special_functions") {

TEST_CASE("series config invariants") {
    SeriesConfig c;
    CHECK(c.rel_tol() == 1e-14);
    CHECK(c.max_terms() == 256);
    CHECK(c.poisson_switch() == 1.0);
    CHECK_THROWS_AS(SeriesConfig(0.0, 256, 1.0), Error);
    CHECK_THROWS_AS(SeriesConfig(1e-6, 256, 1.0), Error);
    CHECK_THROWS_AS(SeriesConfig(1e-12, 7, 1.0), Error);
    CHECK_THROWS_AS(SeriesConfig(1e-12, 64, 0.0), Error);
    CHECK_NOTHROW(SeriesConfig(1e-10, 8, 0.5));
}

TEST_CASE("theta values") {
    CHECK(th(10, 0) == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(std::fabs(th(10, 0) - (1 + 2 * std::exp(-10 * pi))) < 1e-15);
    CHECK(th(0.5, 0.3) == th(0.5, 1.3));
    double direct = 0;
    for (int n = -10; n <= 10; ++n) direct += std::exp(-pi * n * n);
    CHECK(std::fabs(th(1, 0) - direct) < 1e-15);
    CHECK(th(1, 0) == doctest::Approx(1.0864348112).epsilon(1e-10));
}

TEST_CASE("theta errors") {
    try {
        th(0.0, 0.1);
        FAIL("expected throw");
    } catch (const Error& e) {
        CHECK(e.code() == Errc::non_positive_x);
    }
    CHECK_THROWS_AS(th(-1.0, 0.1), Error);
    try {
        jacobi_theta_partial({1.0, 0.2}, 0, 2);
        FAIL("expected throw");
    } catch (const Error& e) {
        CHECK(e.code() == Errc::unsupported_order);
    }
    CHECK_THROWS_AS(jacobi_theta_partial({1.0, 0.2}, 2, 1), Error);
    CHECK_THROWS_AS(jacobi_theta_partial({1.0, 0.2}, 0, 0), Error);
    CHECK_THROWS_AS(mu(0.0), Error);
    CHECK_THROWS_AS(nu(-2.0), Error);
}

TEST_CASE("truncation failure when max_terms is too small") {
    SeriesConfig tight(1e-14, 8, 1e-3);
    try {
        jacobi_theta({0.01, 0.3}, tight, ThetaForm::direct);
        FAIL("expected throw");
    } catch (const Error& e) {
        CHECK(e.code() == Errc::truncation_failure);
    }
}

TEST_CASE("partials against the defining series") {
    for (double X : {0.05, 0.3, 0.9, 1.0, 1.7, 6.0})
        for (double Y : {0.0, 0.13, 0.25, 0.41, 0.5, 0.77}) {
            CAPTURE(X);
            CAPTURE(Y);
            double scale = 1 + std::fabs(oracle::theta1d(X, Y));
            CHECK(std::fabs(th(X, Y) - oracle::theta1d(X, Y)) < 1e-13 * scale * std::max(1.0, 1 / X));
            CHECK(std::fabs(jacobi_theta_partial({X, Y}, 1, 0) - oracle::theta1d(X, Y, 1, 0)) <
                  1e-11 * std::max(1.0, std::pow(X, -2.5)));
            CHECK(std::fabs(jacobi_theta_partial({X, Y}, 0, 1) - oracle::theta1d(X, Y, 0, 1)) <
                  1e-11 * std::max(1.0, std::pow(X, -1.5)));
            CHECK(std::fabs(jacobi_theta_partial({X, Y}, 1, 1) - oracle::theta1d(X, Y, 1, 1)) <
                  1e-10 * std::max(1.0, std::pow(X, -3.5)));
            CHECK(std::fabs(jacobi_theta_partial({X, Y}, 2, 0) - oracle::theta1d(X, Y, 2, 0)) <
                  1e-10 * std::max(1.0, std::pow(X, -4.5)));
        }
}

TEST_CASE("theta_Y vanishes at Y = 0") {
    for (double X : {0.1, 0.5, 1.0, 3.0}) CHECK(std::fabs(th(X, 0.0, ThetaOrder::dY)) < 1e-14);
}

TEST_CASE("theta_XY against finite differences of theta_Y") {
    double fd = oracle::diff([](double X) { return th(X, 0.25, ThetaOrder::dY); }, 0.5, 1e-4);
    CHECK(oracle::rel(th(0.5, 0.25, ThetaOrder::dXY), fd) < 1e-6);
}

TEST_CASE("derivative consistency with finite differences") {
    for (double X : {0.08, 0.35, 1.0, 2.5})
        for (double Y : {0.1, 0.27, 0.45}) {
            CAPTURE(X);
            CAPTURE(Y);
            double h = 1e-4 * std::max(1.0, X) * std::min(1.0, X);
            auto check = [&](ThetaOrder o, double fd) {
                double v = th(X, Y, o);
                if (std::fabs(v) > 1e-8) CHECK(oracle::rel(v, fd) < 1e-6);
            };
            check(ThetaOrder::dX, oracle::diff([&](double t) { return th(t, Y); }, X, h));
            check(ThetaOrder::dY, oracle::diff([&](double t) { return th(X, t); }, Y, 1e-4));
            check(ThetaOrder::dXY, oracle::diff([&](double t) { return th(t, Y, ThetaOrder::dY); }, X, h));
            check(ThetaOrder::dXX, oracle::diff([&](double t) { return th(t, Y, ThetaOrder::dX); }, X, h));
        }
}

TEST_CASE("periodicity and parity") {
    for (double X : {0.05, 0.4, 1.0, 4.0, 20.0})
        for (double Y : {-2.0, -1.3, -0.2, 0.0, 0.35, 1.1, 1.9}) {
            CAPTURE(X);
            CAPTURE(Y);
            CHECK(th(X, Y + 1) == doctest::Approx(th(X, Y)).epsilon(1e-14));
            CHECK(oracle::rel(th(X, -Y), th(X, Y)) < 1e-14);
        }
}

TEST_CASE("Poisson duality on a 31 x 31 grid") {
    double worst = 0;
    for (int i = 0; i < 31; ++i) {
        double X = 0.05 * std::pow(400.0, i / 30.0);
        for (int j = 0; j < 31; ++j) {
            double Y = j / 30.0;
            double d = jacobi_theta({X, Y}, {}, ThetaForm::direct);
            double p = jacobi_theta({X, Y}, {}, ThetaForm::poisson);
            worst = std::max(worst, oracle::rel(d, p));
        }
    }
    CHECK(worst < 1e-12);
}

TEST_CASE("mu and nu") {
    CHECK(mu(10) < 1e-40);
    CHECK(oracle::rel(mu(0.2), oracle::mu(0.2)) < 1e-13);
    CHECK(oracle::rel(nu(0.2), oracle::nu(0.2)) < 1e-13);
    double m = mu(0.5), n = nu(0.5);
    CHECK((1 + m) / (1 - m) == doctest::Approx(1.074612508).epsilon(1e-8));
    CHECK(std::fabs((1 + n) / (1 - m) - 1.186694067) < 1e-8);
    CHECK(std::fabs((1 + n) / (1 + m) - 1.104299511) < 1e-8);
    for (double X = 0.1; X < 3; X += 0.1) {
        CHECK(mu(X + 0.05) < mu(X));
        CHECK(nu(X + 0.05) < nu(X));
    }
}

TEST_CASE("nu sign change") {
    std::uintmax_t iters = 100;
    auto r = boost::math::tools::toms748_solve([](double X) { return 1 - nu(X); }, 0.25, 0.35,
                                               boost::math::tools::eps_tolerance<double>(50), iters);
    CHECK(std::fabs(0.5 * (r.first + r.second) - 0.2989938127) < 1e-9);
}

TEST_CASE("envelope") {
    auto e1 = theta_envelope(1.0);
    CHECK(oracle::rel(e1.lower, 4 * pi * std::exp(-pi) * (1 - oracle::mu(1.0))) < 1e-14);
    CHECK(oracle::rel(e1.upper, 4 * pi * std::exp(-pi) * (1 + oracle::mu(1.0))) < 1e-14);
    auto e3 = theta_envelope(0.3);
    double t1 = 4 * pi * std::exp(-0.3 * pi) * (1 - oracle::mu(0.3));
    double t2 = pi * std::exp(-pi / (4 * 0.3)) * std::pow(0.3, -1.5);
    CHECK(e3.lower >= t1);
    CHECK(e3.lower >= t2);
    CHECK(e3.upper <= std::pow(0.3, -1.5));
    for (double X : {0.25, 0.5, 1.0, 2.0}) {
        auto e = theta_envelope(X);
        for (int j = 1; j < 100; ++j) {
            double Y = j / 200.0;
            double q = -oracle::theta1d(X, Y, 0, 1) / std::sin(2 * pi * Y);
            CHECK(q >= e.lower * (1 - 1e-12));
            CHECK(q <= e.upper * (1 + 1e-12));
        }
    }
    auto e6 = theta_envelope(0.6);
    double v = th(0.6, 0.2, ThetaOrder::dY), s = std::sin(2 * pi * 0.2);
    CHECK(v >= -e6.upper * s);
    CHECK(v <= -e6.lower * s);
}

TEST_CASE("quotient bounds") {
    for (double X : {0.21, 0.3, 0.5, 1.0, 2.0})
        for (int k = 2; k <= 5; ++k)
            for (int j = 1; j < 500; ++j) {
                double Y = j / 1000.0;
                if (near_sin_zero(Y) || near_sin_zero(k * Y)) continue;
                double qy = th(X, k * Y, ThetaOrder::dY) / th(X, Y, ThetaOrder::dY);
                CHECK(std::fabs(qy) <= k * (1 + mu(X)) / (1 - mu(X)) + 1e-12);
                if (X >= 0.3) {
                    double qxy = th(X, k * Y, ThetaOrder::dXY) / th(X, Y, ThetaOrder::dXY);
                    CHECK(std::fabs(qxy) <= k * (1 + nu(X)) / (1 - nu(X)) + 1e-12);
                }
            }
}

TEST_CASE("small X quotient") {
    for (double X : {0.05, 0.1, 0.2, 0.35, 0.5})
        for (int j = 1; j < 500; ++j) {
            double Y = j / 1000.0;
            if (near_sin_zero(Y)) continue;
            double q = th(X, Y, ThetaOrder::dXY) / th(X, Y, ThetaOrder::dY);
            CHECK(std::fabs(q) <= 1.5 / X * (1 + pi / 6 / X) + 1e-12);
        }
}

TEST_CASE("Lemma 2.6 ratio") {
    for (double a : {2.0, 3.0, 5.0, 10.0}) {
        // both sums vanish at Y = 0 and Y = 1/2, so those endpoints use the limit
        for (int j = 1; j < 100; ++j) {
            double Y = 0.5 * j / 100.0;
            double s3 = 0, s1 = 0;
            for (int n = -30; n <= 30; ++n) {
                double t = n - Y, e = std::exp(-a * pi * t * t);
                s3 += t * t * t * e;
                s1 += t * e;
            }
            CHECK(std::fabs(s3 / s1) <= 0.25 + 1e-12);
        }
        for (double Y : {0.0, 0.5}) {
            double num = 0, den = 0;
            for (int n = -30; n <= 30; ++n) {
                double t = n - Y, e = std::exp(-a * pi * t * t);
                num += (2 * a * pi * t * t * t * t - 3 * t * t) * e;
                den += (2 * a * pi * t * t - 1) * e;
            }
            CHECK(std::fabs(num / den) <= 0.25 + 1e-12);
        }
    }
}

TEST_CASE("sine quotient and Dirichlet kernel derivative") {
    for (int k = 1; k <= 8; ++k)
        for (int j = 1; j < 2000; ++j) {
            double x = pi * j / 2000.0;
            CHECK(std::fabs(std::sin(k * x) / std::sin(x)) <= k + 1e-12);
        }
    for (int n = 2; n <= 6; ++n)
        for (int j = 1; j < 500; ++j) {
            double Y = j / 1000.0;
            if (near_sin_zero(Y)) continue;
            auto ratio = [n](double t) { return std::sin(2 * n * pi * t) / std::sin(2 * pi * t); };
            double d = oracle::diff(ratio, Y, 1e-5) / std::sin(2 * pi * Y);
            CHECK(std::fabs(d) <= 2 * pi / 3 * (n - 1) * n * (n + 1) * (1 + 1e-6));
        }
}

TEST_CASE("concurrent evaluation is deterministic") {
    std::vector<double> a(64), b(64);
    auto fill = [](std::vector<double>& v) {
        for (std::size_t i = 0; i < v.size(); ++i) v[i] = jacobi_theta({0.1 + 0.05 * i, 0.01 * i});
    };
    std::thread t1(fill, std::ref(a)), t2(fill, std::ref(b));
    t1.join();
    t2.join();
    CHECK(a == b);
}

}
