#pragma once

#include <cstdint>
#include <limits>
#include <string>
#include <string_view>
#include <vector>

#include "lhx/special_functions.hpp"

namespace lhx {

enum class Comparison { le, ge, approx };

// "<=", ">=", "~="
const char* comparison_symbol(Comparison c) noexcept;

enum class ReportGroup { constants, error_terms, region, double_sum, identities };

const char* report_group_name(ReportGroup g) noexcept;

struct LemmaReport {
    std::string lemma_id;
    ReportGroup group = ReportGroup::constants;
    double claimed = 0.0;
    double computed = 0.0;
    Comparison comparison = Comparison::approx;
    double tolerance = 0.0;
    std::string grid;
    std::string note;
    bool pass = false;
    // Extremum on the 2x refined grid, NaN when the report has no grid.
    double refined = std::numeric_limits<double>::quiet_NaN();
};

// le: computed <= claimed + tol; ge: computed >= claimed - tol; approx: |computed - claimed| <= tol.
bool comparison_holds(Comparison c, double computed, double claimed, double tol) noexcept;

struct BoundTerm {
    std::string name;
    std::string formula_id;
    double value;
};

inline constexpr std::uint64_t kDefaultSeed = 20240607;

struct VerifyOptions {
    std::uint64_t seed = kDefaultSeed;
    int random_points = 1000;
    unsigned threads = 0;  // 0: hardware concurrency
    SeriesConfig series{};
};

// Report identifiers in suite order.
const std::vector<std::string>& lemma_ids();
bool has_lemma(std::string_view id);

// Runs the named reports (all when ids is empty) concurrently; output order follows lemma_ids().
// Throws Error(unknown_lemma) for an id that is not registered.
std::vector<LemmaReport> run_verification(const std::vector<std::string>& ids = {},
                                          const VerifyOptions& opts = {});

std::vector<LemmaReport> verify_constants(const VerifyOptions& opts = {});
std::vector<LemmaReport> verify_error_terms(const VerifyOptions& opts = {});
std::vector<LemmaReport> verify_region_inequalities(const VerifyOptions& opts = {});
std::vector<LemmaReport> verify_double_sum_bounds(const VerifyOptions& opts = {});
std::vector<LemmaReport> verify_identities(const VerifyOptions& opts = {});

// Error terms at the parameters where their ceilings are asserted.
std::vector<BoundTerm> bound_terms(const SeriesConfig& cfg = {});

// 2^6 a0 pi y exp(-3 pi y a0) / (1 - 2^6 exp(-5 pi y a0))
double bound_b(double alpha0, double y);

}  // namespace lhx
