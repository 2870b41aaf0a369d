#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "pricing/harness.hpp"

using namespace pricing;
namespace fs = std::filesystem;

namespace {

SweepSpec tiny_spec() {
    SweepSpec spec;
    spec.horizons = {64};
    spec.budgets = {1};
    spec.valuations = {0.7};
    spec.algorithms = {AlgorithmId::CommitKnown};
    spec.adversaries = {AdversarySpec{AdversaryKind::CommitStall}};
    spec.trials_per_cell = 1;
    spec.base_seed = 5;
    return spec;
}

std::string slurp(const fs::path& p) {
    std::ifstream in(p, std::ios::binary);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

struct TempDir {
    fs::path path;
    TempDir() : path(fs::temp_directory_path() / fs::path("pricing_harness_test")) {
        fs::remove_all(path);
        fs::create_directories(path);
    }
    ~TempDir() { fs::remove_all(path); }
};

}  // namespace

TEST_CASE("a one-cell sweep writes both CSV files with one data row") {
    TempDir dir;
    auto spec = tiny_spec();
    spec.out_dir = dir.path.string();
    auto outcome = run(spec);
    CHECK(outcome.episodes == 1);
    CHECK(outcome.deterministic_violations == 0);
    REQUIRE(fs::exists(outcome.results_csv));
    REQUIRE(fs::exists(outcome.summary_csv));

    std::string results = slurp(outcome.results_csv);
    CHECK(std::count(results.begin(), results.end(), '\n') == 2);  // header + 1 row
    CHECK(results.rfind("T,C,valuation,algorithm,adversary,trial,seed,delta", 0) == 0);
}

TEST_CASE("reruns are byte-identical") {
    TempDir dir;
    auto spec = tiny_spec();
    spec.trials_per_cell = 3;
    spec.out_dir = (dir.path / "a").string();
    fs::create_directories(spec.out_dir);
    auto first = run(spec);
    std::string a = slurp(first.results_csv);
    std::string sa = slurp(first.summary_csv);

    spec.out_dir = (dir.path / "b").string();
    fs::create_directories(spec.out_dir);
    auto second = run(spec);
    CHECK(a == slurp(second.results_csv));
    CHECK(sa == slurp(second.summary_csv));
}

TEST_CASE("parallel execution yields the same rows as serial") {
    auto spec = tiny_spec();
    spec.horizons = {64, 128};
    spec.budgets = {0, 2};
    spec.trials_per_cell = 2;

    auto serial = run_sweep(spec);
    spec.parallel = true;
    auto parallel = run_sweep(spec);

    std::ostringstream s, p;
    write_results_csv(serial, s);
    write_results_csv(parallel, p);
    CHECK(s.str() == p.str());
}

TEST_CASE("cells with more corruption than rounds are skipped") {
    auto spec = tiny_spec();
    spec.horizons = {64};
    spec.budgets = {0, 128};
    auto rows = run_sweep(spec);
    CHECK(rows.size() == 1);
    CHECK(rows[0].budget == 0);
}

TEST_CASE("curve export") {
    auto spec = tiny_spec();
    spec.budgets = {0, 4};
    spec.trials_per_cell = 2;
    auto rows = run_sweep(spec);

    std::ostringstream out;
    curve_export(rows, 'C', out);
    std::istringstream lines(out.str());
    std::string header;
    std::getline(lines, header);
    CHECK(header == "algorithm,x,mean_regret,max_regret,bound");

    // commit-known bound column is 5D + 19C + 3 with D = 6 for T = 64
    std::string row;
    std::getline(lines, row);
    CHECK(row.find("commit-known,0,") == 0);
    CHECK(row.substr(row.rfind(',') + 1) == "33");
    std::getline(lines, row);
    CHECK(row.find("commit-known,4,") == 0);
    CHECK(row.substr(row.rfind(',') + 1) == "109");

    std::ostringstream empty;
    curve_export({}, 'C', empty);
    CHECK(empty.str() == "algorithm,x,mean_regret,max_regret,bound\n");
}

TEST_CASE("config file parsing") {
    TempDir dir;
    fs::path cfg = dir.path / "sweep.cfg";
    {
        std::ofstream out(cfg);
        out << "# comment line\n"
            << "horizons = 128, 256\n"
            << "budgets = 0,2\n"
            << "valuations = 1/3, 0.5\n"
            << "algorithms = commit-unknown\n"
            << "adversaries = no-corruption, mimic-low:1/3:2\n"
            << "trials = 7\n"
            << "seed = 42\n"
            << "delta = 0.1\n"
            << "parallel = true\n"
            << "verify = false\n";
    }
    auto spec = parse_config_file(cfg);
    CHECK(spec.horizons == std::vector<std::int64_t>{128, 256});
    CHECK(spec.budgets == std::vector<std::int64_t>{0, 2});
    REQUIRE(spec.valuations.size() == 2);
    CHECK(spec.valuations[0] == doctest::Approx(1.0 / 3.0));
    CHECK(spec.algorithms == std::vector<AlgorithmId>{AlgorithmId::CommitUnknown});
    REQUIRE(spec.adversaries.size() == 2);
    CHECK(spec.adversaries[1].kind == AdversaryKind::MimicLowInstance);
    CHECK(spec.adversaries[1].burn == 2);
    CHECK(spec.trials_per_cell == 7);
    CHECK(spec.base_seed == 42);
    CHECK(spec.delta == 0.1);
    CHECK(spec.parallel);
    CHECK_FALSE(spec.verify);

    CHECK_THROWS_AS(apply_config_line(spec, "unknown_key", "1"), std::invalid_argument);
}
