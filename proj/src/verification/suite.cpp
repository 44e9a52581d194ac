#include <algorithm>
#include <atomic>
#include <exception>
#include <thread>

#include "common.hpp"
#include "lhx/error.hpp"

namespace lhx {

const char* comparison_symbol(Comparison c) noexcept {
    switch (c) {
        case Comparison::le: return "<=";
        case Comparison::ge: return ">=";
        case Comparison::approx: return "~=";
    }
    return "?";
}

const char* report_group_name(ReportGroup g) noexcept {
    switch (g) {
        case ReportGroup::constants: return "constants";
        case ReportGroup::error_terms: return "error_terms";
        case ReportGroup::region: return "region";
        case ReportGroup::double_sum: return "double_sum";
        case ReportGroup::identities: return "identities";
    }
    return "?";
}

bool comparison_holds(Comparison c, double computed, double claimed, double tol) noexcept {
    if (std::isnan(computed)) return false;
    switch (c) {
        case Comparison::le: return computed <= claimed + tol;
        case Comparison::ge: return computed >= claimed - tol;
        case Comparison::approx: return std::fabs(computed - claimed) <= tol;
    }
    return false;
}

namespace {

const std::vector<vdetail::Entry>& registry() {
    static const std::vector<vdetail::Entry> entries = [] {
        std::vector<vdetail::Entry> e;
        vdetail::add_constants(e);
        vdetail::add_error_terms(e);
        vdetail::add_regions(e);
        vdetail::add_double_sums(e);
        vdetail::add_identities(e);
        return e;
    }();
    return entries;
}

std::vector<LemmaReport> run_entries(const std::vector<const vdetail::Entry*>& todo, const VerifyOptions& opts) {
    vdetail::Context ctx{opts.seed, opts.random_points, opts.series};
    std::vector<LemmaReport> out(todo.size());
    std::vector<std::exception_ptr> errors(todo.size());
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t i = next++; i < todo.size(); i = next++) {
            try {
                out[i] = todo[i]->fn(ctx);
                out[i].group = todo[i]->group;
            } catch (...) {
                errors[i] = std::current_exception();
            }
        }
    };
    unsigned n = opts.threads ? opts.threads : std::max(1u, std::thread::hardware_concurrency());
    n = static_cast<unsigned>(std::min<std::size_t>(n, std::max<std::size_t>(todo.size(), 1)));
    {
        std::vector<std::jthread> pool;
        for (unsigned t = 1; t < n; ++t) pool.emplace_back(worker);
        worker();
    }
    for (auto& e : errors)
        if (e) std::rethrow_exception(e);
    return out;
}

std::vector<LemmaReport> run_group(ReportGroup g, const VerifyOptions& opts) {
    std::vector<const vdetail::Entry*> todo;
    for (const auto& e : registry())
        if (e.group == g) todo.push_back(&e);
    return run_entries(todo, opts);
}

}  // namespace

const std::vector<std::string>& lemma_ids() {
    static const std::vector<std::string> ids = [] {
        std::vector<std::string> v;
        for (const auto& e : registry()) v.push_back(e.id);
        return v;
    }();
    return ids;
}

bool has_lemma(std::string_view id) {
    const auto& ids = lemma_ids();
    return std::find(ids.begin(), ids.end(), id) != ids.end();
}

std::vector<LemmaReport> run_verification(const std::vector<std::string>& ids, const VerifyOptions& opts) {
    for (const auto& id : ids)
        if (!has_lemma(id)) throw Error(Errc::unknown_lemma, "unknown lemma id: " + id);
    std::vector<const vdetail::Entry*> todo;
    for (const auto& e : registry())
        if (ids.empty() || std::find(ids.begin(), ids.end(), e.id) != ids.end()) todo.push_back(&e);
    return run_entries(todo, opts);
}

std::vector<LemmaReport> verify_constants(const VerifyOptions& opts) { return run_group(ReportGroup::constants, opts); }
std::vector<LemmaReport> verify_error_terms(const VerifyOptions& opts) {
    return run_group(ReportGroup::error_terms, opts);
}
std::vector<LemmaReport> verify_region_inequalities(const VerifyOptions& opts) {
    return run_group(ReportGroup::region, opts);
}
std::vector<LemmaReport> verify_double_sum_bounds(const VerifyOptions& opts) {
    return run_group(ReportGroup::double_sum, opts);
}
std::vector<LemmaReport> verify_identities(const VerifyOptions& opts) {
    return run_group(ReportGroup::identities, opts);
}

}  // namespace lhx
