#include <doctest.h>

#include <sys/wait.h>

#include <cmath>
#include <cstdio>
#include <fstream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

namespace {

struct Run {
    int rc;
    std::string out;
};

Run run(const std::string& args) {
    std::string cmd = std::string(LHX_CLI_PATH) + " " + args + " 2>/dev/null";
    FILE* p = popen(cmd.c_str(), "r");
    REQUIRE(p != nullptr);
    std::string out;
    char buf[4096];
    for (std::size_t n; (n = fread(buf, 1, sizeof buf, p)) > 0;) out.append(buf, n);
    int status = pclose(p);
    return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

using Row = std::map<std::string, std::string>;

std::vector<std::string> split_csv(const std::string& line) {
    std::vector<std::string> cells;
    std::string cur;
    bool quoted = false;
    for (std::size_t i = 0; i < line.size(); ++i) {
        char c = line[i];
        if (quoted) {
            if (c == '"' && i + 1 < line.size() && line[i + 1] == '"') {
                cur += '"';
                ++i;
            } else if (c == '"') {
                quoted = false;
            } else {
                cur += c;
            }
        } else if (c == '"') {
            quoted = true;
        } else if (c == ',') {
            cells.push_back(cur);
            cur.clear();
        } else {
            cur += c;
        }
    }
    cells.push_back(cur);
    return cells;
}

// tables in order; each is a list of rows keyed by column
std::vector<std::vector<Row>> parse_csv(const std::string& text) {
    std::vector<std::vector<Row>> tables;
    std::vector<std::string> header;
    std::istringstream in(text);
    for (std::string line; std::getline(in, line);) {
        if (!line.empty() && line[0] == '#') continue;
        if (line.empty()) {
            header.clear();
            continue;
        }
        auto cells = split_csv(line);
        if (header.empty()) {
            header = cells;
            tables.emplace_back();
            continue;
        }
        REQUIRE(cells.size() == header.size());
        Row r;
        for (std::size_t i = 0; i < cells.size(); ++i) r[header[i]] = cells[i];
        tables.back().push_back(r);
    }
    return tables;
}

double num(const std::string& s) { return std::stod(s); }

void check_same_values(const std::string& args) {
    auto csv = run("--format csv " + args);
    auto js = run("--format json " + args);
    REQUIRE(csv.rc == js.rc);
    auto tables = parse_csv(csv.out);
    auto doc = nlohmann::ordered_json::parse(js.out);
    std::size_t t = 0;
    for (auto it = doc.begin(); it != doc.end(); ++it) {
        if (!it->is_array()) continue;
        REQUIRE(t < tables.size());
        const auto& rows = tables[t++];
        REQUIRE(rows.size() == it->size());
        for (std::size_t i = 0; i < rows.size(); ++i)
            for (const auto& [key, cell] : rows[i]) {
                const auto& v = (*it)[i].at(key);
                CAPTURE(key);
                if (v.is_number())
                    CHECK(num(cell) == v.get<double>());
                else if (v.is_null())
                    CHECK(cell.empty());
                else if (v.is_boolean())
                    CHECK(cell == (v.get<bool>() ? "true" : "false"));
                else
                    CHECK(cell == v.get<std::string>());
            }
    }
    CHECK(t == tables.size());
}

double theta_value(const std::string& args) {
    auto r = run("--precision 17 theta " + args);
    REQUIRE(r.rc == 0);
    return num(parse_csv(r.out).at(0).at(0).at("theta"));
}

}  // namespace

TEST_SUITE("cli") {

TEST_CASE("theta") {
    double v = theta_value("1 0 1");
    double ref = 0;
    for (int m = -12; m <= 12; ++m)
        for (int n = -12; n <= 12; ++n) ref += std::exp(-M_PI * (m * m + n * n));
    CHECK(std::fabs(v - ref) < 1e-12);
    CHECK(std::fabs(theta_value("2 0.5 0.8660254037844386") - theta_value("0.5 0.5 0.8660254037844386") / 2) < 1e-12);
    CHECK(std::fabs(theta_value("1 1.2 1.0") - theta_value("1 0.2 1.0")) < 1e-14);
    CHECK(theta_value("1 -0.2 1.0") == theta_value("1 0.2 1.0"));
}

TEST_CASE("theta argument errors") {
    CHECK(run("theta 1 0 0").rc == 2);
    CHECK(run("theta 1 0 -1").rc == 2);
    CHECK(run("theta 0 0 1").rc == 2);
    CHECK(run("theta 1 0").rc == 2);
    CHECK(run("theta one 0 1").rc == 2);
    CHECK(run("--precision 5 theta 1 0 1").rc == 2);
    CHECK(run("--precision 18 theta 1 0 1").rc == 2);
    CHECK(run("--format xml theta 1 0 1").rc == 2);
    CHECK(run("frobnicate").rc == 2);
    CHECK(run("").rc == 2);
    CHECK(run("--help").rc == 0);
}

TEST_CASE("precision flag") {
    auto r = run("--precision 6 theta 1 0 1");
    REQUIRE(r.rc == 0);
    CHECK(parse_csv(r.out)[0][0]["theta"] == "1.18034");
}

TEST_CASE("reduce") {
    auto r = run("reduce 0.25 2.0");
    REQUIRE(r.rc == 0);
    auto row = parse_csv(r.out)[0][0];
    CHECK(num(row["x"]) == 0.25);
    CHECK(num(row["y"]) == 2.0);
    CHECK(row["word"].empty());

    row = parse_csv(run("reduce 5 1").out)[0][0];
    CHECK(std::fabs(num(row["x"])) < 1e-12);
    CHECK(num(row["y"]) == 1);
    CHECK(row["word"] == "ShiftMinus ShiftMinus ShiftMinus ShiftMinus ShiftMinus");

    row = parse_csv(run("reduce -0.3 0.4").out)[0][0];
    CHECK(std::fabs(num(row["x"]) - 0.2) < 1e-10);
    CHECK(std::fabs(num(row["y"]) - 1.6) < 1e-10);

    CHECK(run("reduce 0.2 0").rc == 2);
    CHECK(run("reduce 0.2 -1").rc == 2);
}

TEST_CASE("minimize") {
    auto r = run("minimize w --alpha 1 --b 0");
    REQUIRE(r.rc == 0);
    auto row = parse_csv(r.out)[0][0];
    CHECK(row["outcome"] == "Minimizer");
    CHECK(num(row["distance_to_hex"]) < 1e-6);

    r = run("minimize w --alpha 1 --b 0.2");
    REQUIRE(r.rc == 0);
    auto tables = parse_csv(r.out);
    CHECK(tables[0][0]["outcome"] == "NoMinimizer");
    CHECK(tables[0][0]["slope_sign"] == "-1");
    REQUIRE(tables.size() == 2);
    REQUIRE(tables[1].size() >= 2);
    for (std::size_t i = 1; i < tables[1].size(); ++i)
        CHECK(num(tables[1][i]["value"]) < num(tables[1][i - 1]["value"]));

    r = run("minimize thetadiff --alpha 1 --a 2 --b 1.4142135");
    REQUIRE(r.rc == 0);
    CHECK(parse_csv(r.out)[0][0]["outcome"] == "Minimizer");

    CHECK(run("minimize w --alpha 0 --b 0").rc == 2);
    CHECK(run("minimize thetadiff --alpha 1 --a 1 --b 0.5").rc == 2);
    CHECK(run("minimize nonsense --alpha 1").rc == 2);
    CHECK(run("minimize /nonexistent/spec.json").rc == 2);
}

TEST_CASE("minimize from a potential-spec file") {
    const std::string path = "cli_test_potential.json";
    std::ofstream(path) << R"({"family": "gaussian_diff", "alpha": 1, "a": 2, "b": 1})";
    auto r = run("minimize " + path);
    REQUIRE(r.rc == 0);
    auto row = parse_csv(r.out)[0][0];
    CHECK(row["outcome"] == "Minimizer");
    CHECK(num(row["distance_to_hex"]) < 1e-5);
    std::remove(path.c_str());
}

TEST_CASE("energy") {
    const std::string path = "cli_test_energy.json";
    std::ofstream(path) << R"({"family": "gaussian", "alpha": 1})";
    auto r = run("--precision 17 energy " + path + " 0 1");
    REQUIRE(r.rc == 0);
    CHECK(std::fabs(num(parse_csv(r.out)[0][0]["energy"]) - (theta_value("1 0 1") - 1)) < 1e-12);
    std::ofstream(path) << R"({"family": "coulomb", "alpha": 1})";
    CHECK(run("energy " + path + " 0 1").rc == 2);
    std::ofstream(path) << "{broken";
    CHECK(run("energy " + path + " 0 1").rc == 2);
    CHECK(run("energy /nonexistent.json 0 1").rc == 2);
    std::remove(path.c_str());
}

TEST_CASE("phase scan") {
    auto r = run("phase-scan w --alphas 1,2,4 --b-range 0.10:0.17 --b-step 0.01");
    REQUIRE(r.rc == 0);
    auto tables = parse_csv(r.out);
    REQUIRE(tables.size() == 2);
    CHECK(tables[0].size() == 24);
    REQUIRE(tables[1].size() == 3);
    for (auto& row : tables[1]) {
        CHECK(row["last_hexagonal_b"] == tables[1][0]["last_hexagonal_b"]);
        CHECK(num(row["last_hexagonal_b"]) <= 1 / (2 * M_PI));
        CHECK(num(row["first_no_minimizer_b"]) > 1 / (2 * M_PI));
    }

    r = run("phase-scan w --alphas 1,2 --b-range 0.01:0.14 --b-step 0.01");
    REQUIRE(r.rc == 0);
    auto cells = parse_csv(r.out);
    for (auto& row : cells[0]) CHECK(row["phase"] == "Hexagonal");

    r = run("phase-scan thetadiff --a 4 --alphas 1 --b-range 1.9:2.1 --b-step 0.05");
    REQUIRE(r.rc == 0);
    auto bd = parse_csv(r.out)[1][0];
    CHECK(std::fabs(num(bd["last_hexagonal_b"]) - 2.0) < 1e-9);

    CHECK(run("phase-scan w --alphas 1 --b-range 0.2 --b-step 0.01").rc == 2);
    CHECK(run("phase-scan w --alphas 1 --b-range 0.2:0.1 --b-step 0.01").rc == 2);
    CHECK(run("phase-scan w --alphas 1 --b-range 0.1:0.2 --b-step 0").rc == 2);
    CHECK(run("phase-scan w --alphas , --b-range 0.1:0.2 --b-step 0.01").rc == 2);
}

TEST_CASE("verify") {
    auto r = run("verify --only HHH");
    CHECK(r.rc == 0);
    auto rows = parse_csv(r.out)[0];
    REQUIRE(rows.size() == 1);
    CHECK(rows[0]["lemma_id"] == "HHH");
    CHECK(rows[0]["pass"] == "true");
    CHECK(r.out.find("# seed=") != std::string::npos);

    CHECK(run("verify --only NOPE").rc == 2);
    CHECK(run("verify --only HHH,NOPE").rc == 2);
    CHECK(run("verify --only L44").rc == 1);

    auto s = run("--seed 7 verify --only HHH");
    CHECK(s.out.find("# seed=7") != std::string::npos);
}

TEST_CASE("csv and json carry identical values") {
    check_same_values("theta 1.3 0.2 1.1");
    check_same_values("minimize w --alpha 1 --b 0.2");
    check_same_values("phase-scan w --alphas 1,2 --b-range 0.15:0.17 --b-step 0.01");
    check_same_values("verify --only HHH,Gaa4");
    check_same_values("reduce -0.3 0.4");
}

TEST_CASE("reruns are bit-identical") {
    std::string args = "verify --only HHH,Gaa4,L44";
    CHECK(run(args).out == run(args).out);
    CHECK(run("--format json " + args).out == run("--format json " + args).out);
}

TEST_CASE("out flag writes the same document") {
    const std::string path = "cli_test_out.csv";
    auto direct = run("theta 1 0 1");
    auto r = run("--out " + path + " theta 1 0 1");
    REQUIRE(r.rc == 0);
    CHECK(r.out.empty());
    std::ifstream in(path);
    std::stringstream ss;
    ss << in.rdbuf();
    CHECK(ss.str() == direct.out);
    std::remove(path.c_str());
    CHECK(run("--out /nonexistent/dir/x.csv theta 1 0 1").rc == 2);
}

}
