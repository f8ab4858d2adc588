#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "rcq/io.hpp"

using namespace rcq;

namespace {

struct TempFile {
    std::string path;
    explicit TempFile(std::string p) : path(std::move(p)) {}
    ~TempFile() { std::remove(path.c_str()); }
    void write(const std::string& text) const {
        std::ofstream out(path);
        out << text;
    }
};

}  // namespace

TEST_CASE("float formatting pins 15 significant digits") {
    CHECK(format15(18.0) == "18");
    CHECK(format15(14.696938456699067) == "14.6969384566991");
    CHECK(snap15(14.696938456699067) == doctest::Approx(14.696938456699067).epsilon(1e-13));
    CHECK(format15(0.25) == "0.25");
}

TEST_CASE("counts files round-trip") {
    const SampledRun run = evaluate_sampled(1000, 4);
    const TempFile f("io_roundtrip_counts.json");
    write_counts_file(f.path, run.records);
    const std::vector<CountsRecord> back = read_counts_file(f.path);
    REQUIRE(back.size() == run.records.size());
    for (size_t i = 0; i < back.size(); ++i) {
        CHECK(back[i].counts == run.records[i].counts);
        CHECK(back[i].eta == run.records[i].eta);
        CHECK(back[i].shots == run.records[i].shots);
    }
    const WitnessResult again = evaluate_counts(back);
    CHECK(again.F == run.result.F);
    CHECK(again.sigma == run.result.sigma);
}

TEST_CASE("counts file validation diagnostics") {
    const TempFile f("io_validation_counts.json");

    f.write(R"({"bit_order": "cqpa", "records": []})");
    CHECK_THROWS_WITH_AS(read_counts_file(f.path), doctest::Contains("bit_order"),
                         std::invalid_argument);

    f.write(R"({"bit_order": "apqc",
                "records": [{"setting": {"x": 1, "eta": "123", "z": 1},
                             "shots": 5, "counts": {"0000": 4}}]})");
    CHECK_THROWS_WITH_AS(read_counts_file(f.path), doctest::Contains("record #0"),
                         std::invalid_argument);

    f.write(R"({"bit_order": "apqc",
                "records": [{"setting": {"x": 1, "eta": "113", "z": 1},
                             "shots": 1, "counts": {"0000": 1}}]})");
    CHECK_THROWS_WITH_AS(read_counts_file(f.path), doctest::Contains("eta"),
                         std::invalid_argument);

    f.write(R"({"bit_order": "apqc",
                "records": [{"setting": {"x": 1, "eta": "123", "z": 1},
                             "shots": 1, "counts": {"00000": 1}}]})");
    CHECK_THROWS_WITH_AS(read_counts_file(f.path), doctest::Contains("4-bit"),
                         std::invalid_argument);

    f.write("{not json");
    CHECK_THROWS_WITH_AS(read_counts_file(f.path), doctest::Contains("invalid JSON"),
                         std::invalid_argument);
}

TEST_CASE("result documents carry the full term table") {
    const WitnessResult res = evaluate_exact();
    const std::string doc = witness_result_json(res, 14.696938456699067);
    CHECK(doc.find("\"F\"") != std::string::npos);
    CHECK(doc.find("\"terms\"") != std::string::npos);
    CHECK(doc.find("\"signed_value\"") != std::string::npos);

    const TempFile csv("io_terms.csv");
    write_terms_csv(csv.path, res);
    std::ifstream in(csv.path);
    std::string line;
    std::getline(in, line);
    CHECK(line == "eta,z,b,signed_value");
    int rows = 0;
    while (std::getline(in, line))
        if (!line.empty()) ++rows;
    CHECK(rows == 72);
}

TEST_CASE("run configs round-trip and validate") {
    const TempFile f("io_config.json");
    RunConfig cfg;
    cfg.mode = "sample";
    cfg.shots = 12345;
    cfg.seed = 99;
    cfg.noise_2q = 0.01;
    cfg.noise_readout = {0.02, 0.03};
    cfg.native = true;
    write_run_config(f.path, cfg);
    const RunConfig back = read_run_config(f.path);
    CHECK(back.mode == cfg.mode);
    CHECK(back.shots == cfg.shots);
    CHECK(back.seed == cfg.seed);
    CHECK(back.noise_2q == cfg.noise_2q);
    CHECK(back.noise_readout == cfg.noise_readout);
    CHECK(back.native == cfg.native);
    CHECK(back.noise_model().readout_flip[3][1] == 0.03);

    f.write(R"({"mode": "teleport"})");
    CHECK_THROWS_AS(read_run_config(f.path), std::invalid_argument);
}

TEST_CASE("sampled output files are byte-identical under seed repetition") {
    const TempFile f1("io_repeat_1.json"), f2("io_repeat_2.json");
    write_counts_file(f1.path, evaluate_sampled(500, 77).records);
    write_counts_file(f2.path, evaluate_sampled(500, 77).records);
    std::ifstream a(f1.path), b(f2.path);
    std::stringstream sa, sb;
    sa << a.rdbuf();
    sb << b.rdbuf();
    CHECK(sa.str() == sb.str());
    CHECK(!sa.str().empty());
}
