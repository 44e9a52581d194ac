#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace lhx {

// z = x + iy in the upper half plane; the lattice is sqrt(1/y) (Z + zZ).
struct UpperHalfPoint {
    double x;
    double y;
};

void validate(const UpperHalfPoint& z);

enum class Generator { invert, shift_plus, shift_minus, reflect };

const char* generator_name(Generator g) noexcept;

class GroupWord {
public:
    static constexpr std::size_t max_length = 100;

    GroupWord() = default;
    explicit GroupWord(std::vector<Generator> gens);

    void push_back(Generator g);
    const std::vector<Generator>& generators() const noexcept { return gens_; }
    std::size_t size() const noexcept { return gens_.size(); }
    bool empty() const noexcept { return gens_.empty(); }
    std::string to_string() const;

private:
    std::vector<Generator> gens_;
};

UpperHalfPoint apply_generator(Generator g, UpperHalfPoint z);

// Generators are applied left to right.
UpperHalfPoint apply_word(const GroupWord& w, UpperHalfPoint z);

struct Reduction {
    UpperHalfPoint point;
    GroupWord word;
};

// Maps z into the closure of D_G = {|z| > 1, 0 < x < 1/2}.
Reduction reduce_to_fundamental(UpperHalfPoint z);

bool in_fundamental_closure(UpperHalfPoint z, double tol = 1e-12) noexcept;

UpperHalfPoint hexagonal_point() noexcept;

struct LatticeNorm {
    double norm2;  // |mz+n|^2 / y
    std::int64_t m;
    std::int64_t n;
};

// All lattice vectors of squared length <= radius^2, origin included, sorted by norm.
std::vector<LatticeNorm> lattice_norms(UpperHalfPoint z, double radius);

// Upper bound on the number of pairs lattice_norms(z, radius) examines.
double lattice_enumeration_size(UpperHalfPoint z, double radius);

}  // namespace lhx
