#include "latticehex.h"

#include <cmath>
#include <cstring>
#include <limits>
#include <memory>
#include <new>
#include <string>
#include <vector>

#include <json.hpp>

#include "lhx/energy.hpp"
#include "lhx/error.hpp"
#include "lhx/lattice_domain.hpp"
#include "lhx/minimization.hpp"
#include "lhx/special_functions.hpp"
#include "lhx/verification.hpp"

struct lhx_config {
    lhx::SeriesConfig cfg;
};

struct lhx_potential {
    lhx::PotentialSpec spec;
    std::string name;
};

struct lhx_outcome {
    lhx::MinimizeOutcome outcome;
};

struct lhx_phase_table {
    lhx::PhaseTable table;
};

struct lhx_reports {
    std::vector<lhx::LemmaReport> reports;
};

namespace {

thread_local std::string g_last_error;

lhx_status fail(lhx_status s, const std::string& msg) {
    g_last_error = msg;
    return s;
}

lhx_status from_errc(lhx::Errc c) {
    int v = static_cast<int>(c);
    if (v >= LHX_E_INVALID_ARGUMENT && v <= LHX_E_UNKNOWN_LEMMA) return static_cast<lhx_status>(v);
    return LHX_E_INTERNAL;
}

template <class F>
lhx_status guarded(F&& f) {
    try {
        g_last_error.clear();
        return f();
    } catch (const lhx::Error& e) {
        return fail(from_errc(e.code()), e.what());
    } catch (const nlohmann::json::exception& e) {
        return fail(LHX_E_PARSE, e.what());
    } catch (const std::bad_alloc&) {
        return fail(LHX_E_INTERNAL, "out of memory");
    } catch (const std::exception& e) {
        return fail(LHX_E_INTERNAL, e.what());
    } catch (...) {
        return fail(LHX_E_INTERNAL, "unknown exception");
    }
}

const lhx::SeriesConfig& series(const lhx_config* c) {
    static const lhx::SeriesConfig defaults{};
    return c ? c->cfg : defaults;
}

#define LHX_REQUIRE(p)                                                  \
    do {                                                                \
        if (!(p)) return fail(LHX_E_NULL_POINTER, #p " is NULL");       \
    } while (0)

lhx::UpperHalfPoint point(double x, double y) {
    lhx::UpperHalfPoint z{x, y};
    lhx::validate(z);
    return z;
}

double num(const nlohmann::json& j, const char* key) {
    if (!j.contains(key)) throw lhx::Error(lhx::Errc::invalid_argument, std::string("missing field: ") + key);
    return j.at(key).get<double>();
}

lhx::PotentialSpec parse_potential(const nlohmann::json& j) {
    const std::string family = j.at("family").get<std::string>();
    if (family == "gaussian") return lhx::Gaussian{num(j, "alpha")};
    if (family == "gaussian_diff") return lhx::GaussianDiff{num(j, "alpha"), num(j, "a"), num(j, "b")};
    if (family == "poly_gaussian") return lhx::PolyGaussian{num(j, "alpha"), num(j, "b")};
    if (family == "yukawa_diff") return lhx::YukawaDiff{num(j, "alpha"), num(j, "a"), num(j, "b")};
    if (family == "laplace_weighted") {
        lhx::LaplaceWeighted p{num(j, "alpha"), num(j, "a"), num(j, "b"), {}, lhx::LaplaceFamily::f};
        if (j.contains("weight")) {
            const auto& w = j.at("weight");
            std::string kind = w.value("kind", "constant");
            if (kind == "constant")
                p.weight.kind = lhx::LaplaceWeight::Kind::constant;
            else if (kind == "exponential")
                p.weight.kind = lhx::LaplaceWeight::Kind::exponential;
            else if (kind == "power")
                p.weight.kind = lhx::LaplaceWeight::Kind::power;
            else
                throw lhx::Error(lhx::Errc::invalid_argument, "unknown weight kind: " + kind);
            p.weight.scale = w.value("scale", 1.0);
            p.weight.rate = w.value("rate", 0.0);
        }
        std::string fam = j.value("laplace_family", "f");
        if (fam == "f")
            p.family = lhx::LaplaceFamily::f;
        else if (fam == "g")
            p.family = lhx::LaplaceFamily::g;
        else
            throw lhx::Error(lhx::Errc::invalid_argument, "unknown laplace_family: " + fam);
        return p;
    }
    throw lhx::Error(lhx::Errc::invalid_argument, "unknown potential family: " + family);
}

lhx_status outcome(lhx_outcome** out, lhx::MinimizeOutcome o) {
    *out = new lhx_outcome{std::move(o)};
    return LHX_OK;
}

}  // namespace

extern "C" {

const char* lhx_status_name(lhx_status s) {
    switch (s) {
        case LHX_OK: return "Ok";
        case LHX_E_PARSE: return "ParseError";
        case LHX_E_NULL_POINTER: return "NullPointer";
        case LHX_E_OUT_OF_RANGE: return "OutOfRange";
        case LHX_E_INTERNAL: return "InternalError";
        default: break;
    }
    if (s >= LHX_E_INVALID_ARGUMENT && s <= LHX_E_UNKNOWN_LEMMA) return lhx::errc_name(static_cast<lhx::Errc>(s));
    return "Unknown";
}

const char* lhx_last_error(void) { return g_last_error.c_str(); }

const char* lhx_version(void) { return "0.1.0"; }

lhx_status lhx_config_create(lhx_config** out) {
    LHX_REQUIRE(out);
    return guarded([&] {
        *out = new lhx_config{};
        return LHX_OK;
    });
}

lhx_status lhx_config_create_with(double rel_tol, int max_terms, double poisson_switch, lhx_config** out) {
    LHX_REQUIRE(out);
    return guarded([&] {
        *out = new lhx_config{lhx::SeriesConfig(rel_tol, max_terms, poisson_switch)};
        return LHX_OK;
    });
}

void lhx_config_destroy(lhx_config* cfg) { delete cfg; }

double lhx_config_rel_tol(const lhx_config* cfg) { return series(cfg).rel_tol(); }

lhx_status lhx_theta(const lhx_config* cfg, double alpha, double x, double y, double* out) {
    LHX_REQUIRE(out);
    return guarded([&] {
        *out = lhx::theta_lattice(alpha, point(x, y), series(cfg));
        return LHX_OK;
    });
}

lhx_status lhx_w(const lhx_config* cfg, double alpha, double b, double x, double y, double* out) {
    LHX_REQUIRE(out);
    return guarded([&] {
        *out = lhx::w_b(alpha, b, point(x, y), series(cfg));
        return LHX_OK;
    });
}

lhx_status lhx_dx_w(const lhx_config* cfg, double alpha, double x, double y, double* out) {
    LHX_REQUIRE(out);
    return guarded([&] {
        *out = lhx::dx_w(alpha, point(x, y), series(cfg));
        return LHX_OK;
    });
}

lhx_status lhx_dy_w(const lhx_config* cfg, double alpha, double x, double y, double* out) {
    LHX_REQUIRE(out);
    return guarded([&] {
        *out = lhx::dy_w(alpha, point(x, y), series(cfg));
        return LHX_OK;
    });
}

lhx_status lhx_theta_difference(const lhx_config* cfg, double alpha, double a, double b, double x, double y,
                                double* out) {
    LHX_REQUIRE(out);
    return guarded([&] {
        *out = lhx::theta_difference(alpha, a, b, point(x, y), series(cfg));
        return LHX_OK;
    });
}

lhx_status lhx_jacobi_theta(const lhx_config* cfg, double X, double Y, int order, double* out) {
    LHX_REQUIRE(out);
    if (order < 0 || order > 4) return fail(LHX_E_UNSUPPORTED_ORDER, "order must be in 0..4");
    return guarded([&] {
        *out = lhx::jacobi_theta_order({X, Y}, static_cast<lhx::ThetaOrder>(order), series(cfg));
        return LHX_OK;
    });
}

lhx_status lhx_reduce(double x, double y, double* x_out, double* y_out, char* word, size_t word_cap,
                      size_t* word_len) {
    LHX_REQUIRE(x_out);
    LHX_REQUIRE(y_out);
    return guarded([&] {
        auto r = lhx::reduce_to_fundamental(point(x, y));
        *x_out = r.point.x;
        *y_out = r.point.y;
        std::string w = r.word.to_string();
        if (word_len) *word_len = w.size();
        if (word && word_cap > 0) {
            std::size_t n = std::min(w.size(), word_cap - 1);
            std::memcpy(word, w.data(), n);
            word[n] = '\0';
        }
        return LHX_OK;
    });
}

lhx_status lhx_potential_from_json(const char* json, lhx_potential** out) {
    LHX_REQUIRE(json);
    LHX_REQUIRE(out);
    return guarded([&] {
        auto spec = parse_potential(nlohmann::json::parse(json));
        lhx::validate(spec);
        *out = new lhx_potential{spec, lhx::potential_name(spec)};
        return LHX_OK;
    });
}

void lhx_potential_destroy(lhx_potential* p) { delete p; }

const char* lhx_potential_name(const lhx_potential* p) { return p ? p->name.c_str() : ""; }

lhx_status lhx_energy(const lhx_config* cfg, const lhx_potential* p, double x, double y, double* out) {
    LHX_REQUIRE(p);
    LHX_REQUIRE(out);
    return guarded([&] {
        *out = lhx::potential_energy(p->spec, point(x, y), series(cfg));
        return LHX_OK;
    });
}

lhx_status lhx_energy_direct(const lhx_potential* p, double x, double y, double radius, double* out) {
    LHX_REQUIRE(p);
    LHX_REQUIRE(out);
    return guarded([&] {
        auto z = point(x, y);
        double r = radius > 0 ? radius : lhx::default_cutoff(p->spec, z);
        *out = lhx::lattice_energy(p->spec, z, r);
        return LHX_OK;
    });
}

lhx_status lhx_minimize_w(const lhx_config* cfg, double alpha, double b, lhx_outcome** out) {
    LHX_REQUIRE(out);
    return guarded([&] { return outcome(out, lhx::minimize_w(alpha, b, series(cfg))); });
}

lhx_status lhx_minimize_theta_difference(const lhx_config* cfg, double alpha, double a, double b, lhx_outcome** out) {
    LHX_REQUIRE(out);
    return guarded([&] { return outcome(out, lhx::minimize_theta_difference(alpha, a, b, series(cfg))); });
}

lhx_status lhx_minimize_potential(const lhx_config* cfg, const lhx_potential* p, lhx_outcome** out) {
    LHX_REQUIRE(p);
    LHX_REQUIRE(out);
    return guarded([&] { return outcome(out, lhx::minimize_generic(p->spec, series(cfg))); });
}

void lhx_outcome_destroy(lhx_outcome* o) { delete o; }

int lhx_outcome_is_minimizer(const lhx_outcome* o) { return o && o->outcome.is_minimizer() ? 1 : 0; }

int lhx_outcome_advisory(const lhx_outcome* o) { return o && o->outcome.advisory ? 1 : 0; }

lhx_status lhx_outcome_minimizer(const lhx_outcome* o, double* x, double* y, double* value, double* distance_to_hex) {
    LHX_REQUIRE(o);
    if (!o->outcome.is_minimizer()) return fail(LHX_E_INVALID_ARGUMENT, "outcome has no minimizer");
    const auto& m = o->outcome.minimizer();
    if (x) *x = m.z_star.x;
    if (y) *y = m.z_star.y;
    if (value) *value = m.value;
    if (distance_to_hex) *distance_to_hex = m.distance_to_hex;
    g_last_error.clear();
    return LHX_OK;
}

size_t lhx_outcome_witness_count(const lhx_outcome* o) {
    if (!o || o->outcome.is_minimizer()) return 0;
    return o->outcome.no_minimizer().witness_y.size();
}

lhx_status lhx_outcome_witness(const lhx_outcome* o, size_t i, double* y, double* value) {
    LHX_REQUIRE(o);
    if (i >= lhx_outcome_witness_count(o)) return fail(LHX_E_OUT_OF_RANGE, "witness index out of range");
    const auto& n = o->outcome.no_minimizer();
    if (y) *y = n.witness_y[i];
    if (value) *value = n.witness_values[i];
    g_last_error.clear();
    return LHX_OK;
}

int lhx_outcome_slope_sign(const lhx_outcome* o) {
    if (!o || o->outcome.is_minimizer()) return 0;
    return o->outcome.no_minimizer().asymptotic_slope_sign;
}

lhx_status lhx_phase_scan(const lhx_config* cfg, lhx_problem problem, double a, const double* alphas, size_t n_alphas,
                          const double* bs, size_t n_bs, unsigned threads, lhx_phase_table** out) {
    LHX_REQUIRE(out);
    if (n_alphas && !alphas) return fail(LHX_E_NULL_POINTER, "alphas is NULL");
    if (n_bs && !bs) return fail(LHX_E_NULL_POINTER, "bs is NULL");
    if (problem != LHX_PROBLEM_W && problem != LHX_PROBLEM_THETA_DIFFERENCE)
        return fail(LHX_E_INVALID_ARGUMENT, "unknown problem");
    return guarded([&] {
        lhx::PhaseProblem pp;
        pp.kind = problem == LHX_PROBLEM_W ? lhx::PhaseProblem::Kind::w : lhx::PhaseProblem::Kind::theta_difference;
        pp.a = a;
        auto t = lhx::phase_scan(std::vector<double>(alphas, alphas + n_alphas), std::vector<double>(bs, bs + n_bs),
                                 pp, series(cfg), threads);
        *out = new lhx_phase_table{std::move(t)};
        return LHX_OK;
    });
}

void lhx_phase_table_destroy(lhx_phase_table* t) { delete t; }

const char* lhx_phase_name(lhx_phase p) {
    switch (p) {
        case LHX_PHASE_HEXAGONAL: return lhx::phase_name(lhx::Phase::hexagonal);
        case LHX_PHASE_NO_MINIMIZER: return lhx::phase_name(lhx::Phase::no_minimizer);
        case LHX_PHASE_OTHER: return lhx::phase_name(lhx::Phase::other);
    }
    return "unknown";
}

size_t lhx_phase_cell_count(const lhx_phase_table* t) { return t ? t->table.cells.size() : 0; }

lhx_status lhx_phase_cell(const lhx_phase_table* t, size_t i, double* alpha, double* b, lhx_phase* phase) {
    LHX_REQUIRE(t);
    if (i >= t->table.cells.size()) return fail(LHX_E_OUT_OF_RANGE, "cell index out of range");
    const auto& c = t->table.cells[i];
    if (alpha) *alpha = c.alpha;
    if (b) *b = c.b;
    if (phase) {
        switch (c.phase) {
            case lhx::Phase::hexagonal: *phase = LHX_PHASE_HEXAGONAL; break;
            case lhx::Phase::no_minimizer: *phase = LHX_PHASE_NO_MINIMIZER; break;
            case lhx::Phase::other: *phase = LHX_PHASE_OTHER; break;
        }
    }
    g_last_error.clear();
    return LHX_OK;
}

size_t lhx_phase_boundary_count(const lhx_phase_table* t) { return t ? t->table.boundaries.size() : 0; }

lhx_status lhx_phase_boundary(const lhx_phase_table* t, size_t i, double* alpha, int* has_last_hexagonal,
                              double* last_hexagonal_b, int* has_first_no_minimizer, double* first_no_minimizer_b) {
    LHX_REQUIRE(t);
    if (i >= t->table.boundaries.size()) return fail(LHX_E_OUT_OF_RANGE, "boundary index out of range");
    const auto& r = t->table.boundaries[i];
    const double nan = std::numeric_limits<double>::quiet_NaN();
    if (alpha) *alpha = r.alpha;
    if (has_last_hexagonal) *has_last_hexagonal = r.last_hexagonal_b.has_value();
    if (last_hexagonal_b) *last_hexagonal_b = r.last_hexagonal_b.value_or(nan);
    if (has_first_no_minimizer) *has_first_no_minimizer = r.first_no_minimizer_b.has_value();
    if (first_no_minimizer_b) *first_no_minimizer_b = r.first_no_minimizer_b.value_or(nan);
    g_last_error.clear();
    return LHX_OK;
}

size_t lhx_lemma_count(void) { return lhx::lemma_ids().size(); }

const char* lhx_lemma_id(size_t i) {
    const auto& ids = lhx::lemma_ids();
    return i < ids.size() ? ids[i].c_str() : nullptr;
}

lhx_verify_options lhx_verify_defaults(void) {
    lhx::VerifyOptions o;
    return {o.seed, o.random_points, o.threads};
}

lhx_status lhx_verify(const lhx_config* cfg, const char* const* ids, size_t n_ids, const lhx_verify_options* opts,
                      lhx_reports** out) {
    LHX_REQUIRE(out);
    if (n_ids && !ids) return fail(LHX_E_NULL_POINTER, "ids is NULL");
    return guarded([&] {
        std::vector<std::string> v;
        for (size_t i = 0; i < n_ids; ++i) {
            if (!ids[i]) return fail(LHX_E_NULL_POINTER, "lemma id is NULL");
            v.emplace_back(ids[i]);
        }
        lhx::VerifyOptions o;
        if (opts) {
            o.seed = opts->seed;
            o.random_points = opts->random_points;
            o.threads = opts->threads;
        }
        o.series = series(cfg);
        *out = new lhx_reports{lhx::run_verification(v, o)};
        return LHX_OK;
    });
}

void lhx_reports_destroy(lhx_reports* r) { delete r; }

size_t lhx_reports_count(const lhx_reports* r) { return r ? r->reports.size() : 0; }

lhx_status lhx_reports_get(const lhx_reports* r, size_t i, lhx_report_view* out) {
    LHX_REQUIRE(r);
    LHX_REQUIRE(out);
    if (i >= r->reports.size()) return fail(LHX_E_OUT_OF_RANGE, "report index out of range");
    const auto& rep = r->reports[i];
    out->lemma_id = rep.lemma_id.c_str();
    out->group = lhx::report_group_name(rep.group);
    out->comparison = lhx::comparison_symbol(rep.comparison);
    out->claimed = rep.claimed;
    out->computed = rep.computed;
    out->tolerance = rep.tolerance;
    out->refined = rep.refined;
    out->grid = rep.grid.c_str();
    out->note = rep.note.c_str();
    out->pass = rep.pass ? 1 : 0;
    g_last_error.clear();
    return LHX_OK;
}

}  // extern "C"
