#include "lhx/lattice_domain.hpp"

#include <algorithm>
#include <cmath>

#include "lhx/error.hpp"

namespace lhx {

namespace {

constexpr int max_iterations = 100;
constexpr double max_points = 1e8;

}  // namespace

void validate(const UpperHalfPoint& z) {
    if (!std::isfinite(z.x) || !std::isfinite(z.y)) {
        throw Error(Errc::invalid_argument, "point: coordinates must be finite");
    }
    if (!(z.y > 0.0)) throw Error(Errc::invalid_argument, "point: y must be positive");
}

const char* generator_name(Generator g) noexcept {
    switch (g) {
        case Generator::invert: return "Invert";
        case Generator::shift_plus: return "ShiftPlus";
        case Generator::shift_minus: return "ShiftMinus";
        case Generator::reflect: return "Reflect";
    }
    return "?";
}

GroupWord::GroupWord(std::vector<Generator> gens) : gens_(std::move(gens)) {
    if (gens_.size() > max_length) {
        throw Error(Errc::invalid_argument, "group word longer than 100 generators");
    }
}

void GroupWord::push_back(Generator g) {
    if (gens_.size() >= max_length) {
        throw Error(Errc::reduction_divergence, "group word longer than 100 generators");
    }
    gens_.push_back(g);
}

std::string GroupWord::to_string() const {
    std::string s;
    for (Generator g : gens_) {
        if (!s.empty()) s += ' ';
        s += generator_name(g);
    }
    return s;
}

UpperHalfPoint apply_generator(Generator g, UpperHalfPoint z) {
    switch (g) {
        case Generator::invert: {
            double r2 = z.x * z.x + z.y * z.y;
            return {-z.x / r2, z.y / r2};
        }
        case Generator::shift_plus: return {z.x + 1.0, z.y};
        case Generator::shift_minus: return {z.x - 1.0, z.y};
        case Generator::reflect: return {-z.x, z.y};
    }
    return z;
}

UpperHalfPoint apply_word(const GroupWord& w, UpperHalfPoint z) {
    validate(z);
    for (Generator g : w.generators()) z = apply_generator(g, z);
    return z;
}

Reduction reduce_to_fundamental(UpperHalfPoint z) {
    validate(z);
    Reduction r{z, {}};
    auto step = [&r](Generator g) {
        if (r.word.size() >= GroupWord::max_length) {
            throw Error(Errc::reduction_divergence, "reduction word exceeds the generator cap");
        }
        r.word.push_back(g);
        r.point = apply_generator(g, r.point);
    };
    for (int it = 0; it < max_iterations; ++it) {
        bool changed = false;
        while (r.point.x > 0.5) {
            step(Generator::shift_minus);
            changed = true;
        }
        while (r.point.x < -0.5) {
            step(Generator::shift_plus);
            changed = true;
        }
        if (r.point.x * r.point.x + r.point.y * r.point.y < 1.0 - 1e-15) {
            step(Generator::invert);
            changed = true;
        }
        if (r.point.x < 0.0) {
            step(Generator::reflect);
            changed = true;
        }
        if (!changed) return r;
    }
    throw Error(Errc::reduction_divergence, "reduction did not converge in 100 iterations");
}

bool in_fundamental_closure(UpperHalfPoint z, double tol) noexcept {
    return z.y > 0.0 && z.x >= -tol && z.x <= 0.5 + tol && std::hypot(z.x, z.y) >= 1.0 - tol;
}

UpperHalfPoint hexagonal_point() noexcept { return {0.5, std::sqrt(3.0) / 2.0}; }

double lattice_enumeration_size(UpperHalfPoint z, double radius) {
    // |mz+n|^2 / y >= m^2 y, so |m| <= radius / sqrt(y); for fixed m,
    // (mx+n)^2 <= radius^2 y, so at most 2 radius sqrt(y) + 1 values of n.
    double mmax = std::floor(radius / std::sqrt(z.y));
    double per_m = 2.0 * radius * std::sqrt(z.y) + 2.0;
    return (2.0 * mmax + 1.0) * per_m;
}

std::vector<LatticeNorm> lattice_norms(UpperHalfPoint z, double radius) {
    validate(z);
    if (!(radius > 0.0) || !std::isfinite(radius)) {
        throw Error(Errc::invalid_argument, "lattice_norms: radius must be positive");
    }
    if (lattice_enumeration_size(z, radius) > max_points) {
        throw Error(Errc::radius_too_large, "lattice_norms: enumeration exceeds 1e8 points");
    }
    double r2 = radius * radius;
    auto mmax = static_cast<std::int64_t>(std::floor(radius / std::sqrt(z.y)));
    std::vector<LatticeNorm> out;
    for (std::int64_t m = -mmax; m <= mmax; ++m) {
        double md = static_cast<double>(m);
        double rest = r2 * z.y - md * md * z.y * z.y;
        if (rest < 0.0) continue;
        double s = std::sqrt(rest);
        double c = -md * z.x;
        auto lo = static_cast<std::int64_t>(std::floor(c - s)) - 1;
        auto hi = static_cast<std::int64_t>(std::ceil(c + s)) + 1;
        for (std::int64_t n = lo; n <= hi; ++n) {
            double u = md * z.x + static_cast<double>(n);
            double norm2 = (u * u + md * md * z.y * z.y) / z.y;
            if (norm2 <= r2) out.push_back({norm2, m, n});
        }
    }
    std::sort(out.begin(), out.end(), [](const LatticeNorm& a, const LatticeNorm& b) {
        if (a.norm2 != b.norm2) return a.norm2 < b.norm2;
        if (a.m != b.m) return a.m < b.m;
        return a.n < b.n;
    });
    return out;
}

}  // namespace lhx
