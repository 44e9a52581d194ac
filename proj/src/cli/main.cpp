#include <cmath>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <map>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "latticehex.h"
#include "output.hpp"

namespace {

using lhxcli::Cell;
using lhxcli::Document;
using lhxcli::Format;
using lhxcli::Null;
using lhxcli::Table;

constexpr int kExitOk = 0;
constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;
constexpr int kExitEval = 3;

struct Usage : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Raised when a C API call fails; carries the status for exit-code mapping.
struct ApiError : std::runtime_error {
    lhx_status status;
    ApiError(lhx_status s, const std::string& msg) : std::runtime_error(msg), status(s) {}
};

void check(lhx_status s) {
    if (s != LHX_OK) throw ApiError(s, std::string(lhx_status_name(s)) + ": " + lhx_last_error());
}

int exit_code(lhx_status s) {
    switch (s) {
        case LHX_E_INVALID_ARGUMENT:
        case LHX_E_NON_POSITIVE_X:
        case LHX_E_NON_POSITIVE_ALPHA:
        case LHX_E_UNSUPPORTED_ORDER:
        case LHX_E_UNKNOWN_LEMMA:
        case LHX_E_PARSE:
        case LHX_E_OUT_OF_RANGE:
            return kExitUsage;
        default:
            return kExitEval;
    }
}

struct Globals {
    Format format = Format::csv;
    int precision = 12;
    std::string out;
    std::uint64_t seed = lhx_verify_defaults().seed;
    double tol = 1e-14;
};

template <class T, void (*Destroy)(T*)>
struct Deleter {
    void operator()(T* p) const { Destroy(p); }
};

using ConfigPtr = std::unique_ptr<lhx_config, Deleter<lhx_config, lhx_config_destroy>>;
using PotentialPtr = std::unique_ptr<lhx_potential, Deleter<lhx_potential, lhx_potential_destroy>>;
using OutcomePtr = std::unique_ptr<lhx_outcome, Deleter<lhx_outcome, lhx_outcome_destroy>>;
using PhasePtr = std::unique_ptr<lhx_phase_table, Deleter<lhx_phase_table, lhx_phase_table_destroy>>;
using ReportsPtr = std::unique_ptr<lhx_reports, Deleter<lhx_reports, lhx_reports_destroy>>;

ConfigPtr make_config(const Globals& g) {
    lhx_config* c = nullptr;
    check(lhx_config_create_with(g.tol, 256, 1.0, &c));
    return ConfigPtr(c);
}

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Usage("cannot read " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

PotentialPtr load_potential(const std::string& path) {
    lhx_potential* p = nullptr;
    check(lhx_potential_from_json(read_file(path).c_str(), &p));
    return PotentialPtr(p);
}

void emit(const Globals& g, const Document& doc) {
    if (g.out.empty()) {
        lhxcli::write(std::cout, doc, g.format, g.precision);
        return;
    }
    std::ofstream f(g.out);
    if (!f) throw Usage("cannot write " + g.out);
    lhxcli::write(f, doc, g.format, g.precision);
}

Document outcome_document(const std::string& problem, const lhx_outcome* o) {
    Document d;
    Table main{"outcome", {"problem", "outcome", "x", "y", "value", "distance_to_hex", "advisory", "slope_sign"}, {}};
    Table wit{"witnesses", {"index", "y", "value"}, {}};
    if (lhx_outcome_is_minimizer(o)) {
        double x, y, v, dist;
        check(lhx_outcome_minimizer(o, &x, &y, &v, &dist));
        main.rows.push_back({problem, std::string("Minimizer"), x, y, v, dist, bool(lhx_outcome_advisory(o)), Null{}});
    } else {
        std::size_t n = lhx_outcome_witness_count(o);
        double last = NAN;
        for (std::size_t i = 0; i < n; ++i) {
            double y, v;
            check(lhx_outcome_witness(o, i, &y, &v));
            wit.rows.push_back({static_cast<long long>(i), y, v});
            last = v;
        }
        main.rows.push_back({problem, std::string("NoMinimizer"), Null{}, Null{}, last, Null{},
                             bool(lhx_outcome_advisory(o)), static_cast<long long>(lhx_outcome_slope_sign(o))});
    }
    d.tables.push_back(std::move(main));
    if (!wit.rows.empty()) d.tables.push_back(std::move(wit));
    return d;
}

std::vector<double> parse_range(const std::string& range, double step) {
    auto colon = range.find(':');
    if (colon == std::string::npos) throw Usage("b-range must be LO:HI");
    double lo, hi;
    try {
        std::size_t used = 0;
        lo = std::stod(range.substr(0, colon), &used);
        if (used != colon) throw Usage("malformed b-range");
        std::string rest = range.substr(colon + 1);
        hi = std::stod(rest, &used);
        if (used != rest.size()) throw Usage("malformed b-range");
    } catch (const std::logic_error&) {
        throw Usage("malformed b-range: " + range);
    }
    if (!(step > 0) || !(hi >= lo) || !std::isfinite(lo) || !std::isfinite(hi)) throw Usage("empty or malformed b-range");
    std::vector<double> out;
    long long n = static_cast<long long>(std::floor((hi - lo) / step + 1e-9));
    if (n > 100000) throw Usage("b-range has too many steps");
    for (long long i = 0; i <= n; ++i) out.push_back(lo + step * static_cast<double>(i));
    return out;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Lattice energies, hexagonal minimizers and the numerical checks behind them"};
    app.require_subcommand(1);
    app.fallthrough();

    Globals g;
    const std::map<std::string, Format> formats{{"csv", Format::csv}, {"json", Format::json}};
    app.add_option("--format", g.format, "csv or json")->transform(CLI::CheckedTransformer(formats, CLI::ignore_case));
    app.add_option("--precision", g.precision, "significant digits")->check(CLI::Range(6, 17));
    app.add_option("--out", g.out, "write output to FILE");
    app.add_option("--seed", g.seed, "seed for randomized verification points");
    app.add_option("--tol", g.tol, "series relative tolerance")->check(CLI::Range(1e-300, 1e-6));

    double alpha = 1, x = 0, y = 1, a = 2, b = 0, radius = 0;
    std::string problem, spec_file, b_range = "0.1:0.2";
    std::vector<double> alphas{1.0, 2.0};
    double b_step = 0.01;
    unsigned threads = 0;
    std::vector<std::string> only;

    auto* theta = app.add_subcommand("theta", "theta(alpha; x + iy)");
    theta->add_option("alpha", alpha)->required();
    theta->add_option("x", x)->required();
    theta->add_option("y", y)->required();

    auto* energy = app.add_subcommand("energy", "lattice energy of a potential-spec file at x + iy");
    energy->add_option("spec", spec_file, "potential-spec JSON file")->required();
    energy->add_option("x", x)->required();
    energy->add_option("y", y)->required();
    energy->add_option("--radius", radius, "direct summation within this radius");

    auto* minimize = app.add_subcommand("minimize", "minimize over the fundamental domain");
    minimize->add_option("problem", problem, "w, thetadiff or a potential-spec JSON file")->required();
    minimize->add_option("--alpha", alpha);
    minimize->add_option("--a", a);
    minimize->add_option("--b", b);

    auto* scan = app.add_subcommand("phase-scan", "classify minimizers over an (alpha, b) grid");
    scan->add_option("problem", problem, "w or thetadiff")->required()->check(CLI::IsMember({"w", "thetadiff"}));
    scan->add_option("--alphas", alphas)->delimiter(',');
    scan->add_option("--a", a);
    scan->add_option("--b-range", b_range, "LO:HI");
    scan->add_option("--b-step", b_step);
    scan->add_option("--threads", threads);

    auto* verify = app.add_subcommand("verify", "run the verification suite");
    verify->add_option("--only", only, "lemma ids")->delimiter(',');
    verify->add_option("--threads", threads);

    auto* reduce = app.add_subcommand("reduce", "reduce x + iy into the fundamental domain");
    reduce->add_option("x", x)->required();
    reduce->add_option("y", y)->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? kExitOk : kExitUsage;
    }

    try {
        auto cfg = make_config(g);
        Document doc;
        int rc = kExitOk;

        if (*theta) {
            double v;
            check(lhx_theta(cfg.get(), alpha, x, y, &v));
            doc.tables.push_back({"theta", {"alpha", "x", "y", "theta"}, {{alpha, x, y, v}}});
        } else if (*energy) {
            auto p = load_potential(spec_file);
            double v;
            if (radius > 0)
                check(lhx_energy_direct(p.get(), x, y, radius, &v));
            else
                check(lhx_energy(cfg.get(), p.get(), x, y, &v));
            doc.tables.push_back({"energy",
                                  {"potential", "x", "y", "energy"},
                                  {{std::string(lhx_potential_name(p.get())), x, y, v}}});
        } else if (*minimize) {
            lhx_outcome* o = nullptr;
            if (problem == "w") {
                check(lhx_minimize_w(cfg.get(), alpha, b, &o));
            } else if (problem == "thetadiff") {
                check(lhx_minimize_theta_difference(cfg.get(), alpha, a, b, &o));
            } else {
                auto p = load_potential(problem);
                check(lhx_minimize_potential(cfg.get(), p.get(), &o));
                problem = lhx_potential_name(p.get());
            }
            OutcomePtr hold(o);
            doc = outcome_document(problem, o);
        } else if (*scan) {
            auto bs = parse_range(b_range, b_step);
            if (alphas.empty()) throw Usage("alphas must be nonempty");
            lhx_phase_table* t = nullptr;
            check(lhx_phase_scan(cfg.get(), problem == "w" ? LHX_PROBLEM_W : LHX_PROBLEM_THETA_DIFFERENCE, a,
                                 alphas.data(), alphas.size(), bs.data(), bs.size(), threads, &t));
            PhasePtr hold(t);
            doc.meta.push_back({"problem", problem});
            if (problem == "thetadiff") doc.meta.push_back({"a", a});
            Table cells{"cells", {"alpha", "b", "phase"}, {}};
            for (std::size_t i = 0; i < lhx_phase_cell_count(t); ++i) {
                double ca, cb;
                lhx_phase ph;
                check(lhx_phase_cell(t, i, &ca, &cb, &ph));
                cells.rows.push_back({ca, cb, std::string(lhx_phase_name(ph))});
            }
            Table bounds{"boundaries", {"alpha", "last_hexagonal_b", "first_no_minimizer_b"}, {}};
            for (std::size_t i = 0; i < lhx_phase_boundary_count(t); ++i) {
                double ba, lh, fn;
                int has_lh, has_fn;
                check(lhx_phase_boundary(t, i, &ba, &has_lh, &lh, &has_fn, &fn));
                bounds.rows.push_back({ba, has_lh ? Cell(lh) : Cell(Null{}), has_fn ? Cell(fn) : Cell(Null{})});
            }
            doc.tables.push_back(std::move(cells));
            doc.tables.push_back(std::move(bounds));
        } else if (*verify) {
            std::vector<const char*> ids;
            for (const auto& s : only) ids.push_back(s.c_str());
            lhx_verify_options opts = lhx_verify_defaults();
            opts.seed = g.seed;
            opts.threads = threads;
            lhx_reports* r = nullptr;
            check(lhx_verify(cfg.get(), ids.data(), ids.size(), &opts, &r));
            ReportsPtr hold(r);
            Table t{"reports",
                    {"lemma_id", "group", "claimed", "comparison", "computed", "tolerance", "refined", "pass", "grid",
                     "note"},
                    {}};
            long long failed = 0;
            for (std::size_t i = 0; i < lhx_reports_count(r); ++i) {
                lhx_report_view v;
                check(lhx_reports_get(r, i, &v));
                if (!v.pass) ++failed;
                t.rows.push_back({std::string(v.lemma_id), std::string(v.group), v.claimed, std::string(v.comparison),
                                  v.computed, v.tolerance, std::isnan(v.refined) ? Cell(Null{}) : Cell(v.refined),
                                  bool(v.pass), std::string(v.grid), std::string(v.note)});
            }
            doc.meta.push_back({"seed", static_cast<long long>(g.seed)});
            doc.meta.push_back({"reports", static_cast<long long>(t.rows.size())});
            doc.meta.push_back({"failed", failed});
            doc.tables.push_back(std::move(t));
            if (failed) rc = kExitFail;
        } else if (*reduce) {
            double rx, ry;
            std::size_t len = 0;
            check(lhx_reduce(x, y, &rx, &ry, nullptr, 0, &len));
            std::string word(len + 1, '\0');
            check(lhx_reduce(x, y, &rx, &ry, word.data(), word.size(), &len));
            word.resize(len);
            doc.tables.push_back({"reduce", {"x", "y", "word"}, {{rx, ry, word}}});
        }

        emit(g, doc);
        return rc;
    } catch (const Usage& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const ApiError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return exit_code(e.status);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitEval;
    }
}
