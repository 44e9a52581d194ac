#include <doctest.h>

#include "lhx/error.hpp"
#include "lhx/minimization.hpp"
#include "oracles.hpp"

using namespace lhx;
using oracle::hex_y;
using oracle::pi;

namespace {

constexpr double bc = 1.0 / (2.0 * pi);

void check_hex(const MinimizeOutcome& o, double tol = 1e-5) {
    REQUIRE(o.is_minimizer());
    const auto& m = o.minimizer();
    CHECK(std::hypot(m.z_star.x - 0.5, m.z_star.y - hex_y) < tol);
    CHECK(m.distance_to_hex < tol);
}

void check_witness(const MinimizeOutcome& o, int slope) {
    REQUIRE(!o.is_minimizer());
    const auto& n = o.no_minimizer();
    REQUIRE(n.witness_y.size() == n.witness_values.size());
    REQUIRE(n.witness_y.size() >= 2);
    for (std::size_t i = 1; i < n.witness_y.size(); ++i) {
        CHECK(n.witness_y[i] > n.witness_y[i - 1]);
        CHECK(n.witness_values[i] < n.witness_values[i - 1]);
    }
    CHECK(n.asymptotic_slope_sign == slope);
}

}  // namespace

TEST_SUITE("minimization") {

TEST_CASE("minimize_w examples") {
    auto o = minimize_w(1, 0);
    check_hex(o, 1e-6);
    CHECK(!o.advisory);
    check_hex(minimize_w(2, bc));
    check_witness(minimize_w(1, 0.2), -1);
}

TEST_CASE("minimize_w on the boundary is hexagonal") {
    check_hex(minimize_w(1.5, bc + 5e-13));
}

TEST_CASE("minimize_w value matches the energy at the minimizer") {
    auto o = minimize_w(1.5, 0.05);
    REQUIRE(o.is_minimizer());
    const auto& m = o.minimizer();
    CHECK(std::fabs(m.value - w_b(1.5, 0.05, m.z_star)) < 1e-13);
    CHECK(m.value <= w_b(1.5, 0.05, {0.0, 1.0}));
}

TEST_CASE("minimize_theta_difference examples") {
    check_hex(minimize_theta_difference(1, 2, std::sqrt(2.0)));
    check_witness(minimize_theta_difference(1, 3, 1.8), -1);
    check_hex(minimize_theta_difference(1, 2, 0));
}

TEST_CASE("minimize errors") {
    CHECK_THROWS_AS(minimize_w(0, 0), Error);
    CHECK_THROWS_AS(minimize_w(-1, 0), Error);
    CHECK_THROWS_AS(minimize_theta_difference(1, 1, 0.5), Error);
    CHECK_THROWS_AS(minimize_theta_difference(1, 0.5, 0.5), Error);
}

TEST_CASE("alpha below one is advisory") {
    auto o = minimize_w(0.7, 0.1);
    CHECK(o.advisory);
    CHECK(!minimize_w(1.2, 0.1).advisory);
}

TEST_CASE("minimize_generic examples") {
    check_hex(minimize_generic(GaussianDiff{1, 2, 1}));
    check_hex(minimize_generic(YukawaDiff{1, 4, 0.5}));
    auto g = minimize_generic(Gaussian{1});
    check_hex(g);
    CHECK(std::fabs(g.minimizer().value - (oracle::theta(1, {0.5, hex_y}) - 1)) < 1e-9);
}

TEST_CASE("comparison principle") {
    for (double a : {1.0, 1.5, 3.0}) {
        auto top = minimize_w(a, bc);
        REQUIRE(top.is_minimizer());
        for (double b : {0.1, 0.0, -0.5}) {
            auto lo = minimize_w(a, b);
            REQUIRE(lo.is_minimizer());
            CHECK(std::hypot(lo.minimizer().z_star.x - top.minimizer().z_star.x,
                             lo.minimizer().z_star.y - top.minimizer().z_star.y) < 1e-5);
        }
    }
}

TEST_CASE("witness slope signs follow the leading coefficient") {
    for (double a : {1.0, 2.0, 4.0}) check_witness(minimize_w(a, bc + 0.01), -1);
    for (auto [a, b] : {std::pair{2.0, 1.5}, std::pair{4.0, 2.1}}) check_witness(minimize_theta_difference(1, a, b), -1);
}

TEST_CASE("Gamma optimum equals the 2D optimum") {
    for (double a : {1.05, 1.5, 3.0}) {
        auto o = minimize_w(a, 0.1);
        REQUIRE(o.is_minimizer());
        double gamma = golden_section([&](double y) { return w_b(a, 0.1, {0.5, y}); }, hex_y, 50, 1e-10);
        CHECK(std::fabs(o.minimizer().value - w_b(a, 0.1, {0.5, gamma})) < 1e-7);
    }
}

TEST_CASE("golden section and simplex") {
    double t = golden_section([](double y) { return (y - 1.3) * (y - 1.3); }, 0, 5, 1e-10);
    CHECK(std::fabs(t - 1.3) < 1e-8);
    CHECK(golden_section([](double) { return 1.0; }, 2, 3, 1e-10, 1e-12) < 2 + 1e-6);
    auto s = nelder_mead([](UpperHalfPoint p) { return std::pow(p.x - 0.2, 2) + 2 * std::pow(p.y - 1.1, 2); }, {0, 0.5},
                         0.1, 1e-10);
    CHECK(std::fabs(s.point.x - 0.2) < 1e-5);
    CHECK(std::fabs(s.point.y - 1.1) < 1e-5);
    auto flat = nelder_mead([](UpperHalfPoint) { return 3.0; }, {0.3, 2}, 0.1, 1e-9, 1e-12);
    CHECK(flat.point.x == 0.3);
    CHECK(flat.point.y == 2);
}

TEST_CASE("phase scan for W") {
    auto t = phase_scan({1, 2, 4}, {0.10, 0.15, 0.159, 0.17}, {PhaseProblem::Kind::w, 0}, {}, 2);
    REQUIRE(t.cells.size() == 12);
    REQUIRE(t.boundaries.size() == 3);
    CHECK(t.cells[0].alpha == 1);
    CHECK(t.cells[3].b == 0.17);
    for (const auto& bd : t.boundaries) {
        REQUIRE(bd.last_hexagonal_b);
        REQUIRE(bd.first_no_minimizer_b);
        CHECK(*bd.last_hexagonal_b == 0.159);
        CHECK(*bd.first_no_minimizer_b == 0.17);
    }
}

TEST_CASE("phase scan for the theta difference") {
    auto t = phase_scan({1}, {1.40, 1.4142, 1.45}, {PhaseProblem::Kind::theta_difference, 2}, {}, 1);
    REQUIRE(t.boundaries.size() == 1);
    CHECK(*t.boundaries[0].last_hexagonal_b == 1.4142);
    CHECK(*t.boundaries[0].first_no_minimizer_b == 1.45);
}

TEST_CASE("phase scan below the boundary is all hexagonal") {
    auto t = phase_scan({1, 3}, {0.0, 0.05, 0.1}, {PhaseProblem::Kind::w, 0}, {}, 0);
    for (const auto& c : t.cells) CHECK(c.phase == Phase::hexagonal);
    for (const auto& bd : t.boundaries) CHECK(!bd.first_no_minimizer_b);
    CHECK(std::string(phase_name(Phase::no_minimizer)) == "NoMinimizer");
}

TEST_CASE("phase scan is independent of the thread count") {
    std::vector<double> bs{0.12, 0.16, 0.2};
    auto a = phase_scan({1, 2}, bs, {PhaseProblem::Kind::w, 0}, {}, 1);
    auto b = phase_scan({1, 2}, bs, {PhaseProblem::Kind::w, 0}, {}, 3);
    REQUIRE(a.cells.size() == b.cells.size());
    for (std::size_t i = 0; i < a.cells.size(); ++i) CHECK(a.cells[i].phase == b.cells[i].phase);
}

TEST_CASE("phase scan rejects empty grids") {
    CHECK_THROWS_AS(phase_scan({}, {0.1}, {PhaseProblem::Kind::w, 0}), Error);
    CHECK_THROWS_AS(phase_scan({1}, {}, {PhaseProblem::Kind::w, 0}), Error);
}

}
