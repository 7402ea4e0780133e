#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <fstream>
#include <initializer_list>
#include <sstream>
#include <string>
#include <vector>

#include "hcent/cli.hpp"
#include "hcent/errors.hpp"
#include "hcent/graph.hpp"

using namespace hcent;

namespace {

struct Result {
    int code;
    std::string out;
    std::string err;
};

Result invoke(std::initializer_list<const char*> args) {
    std::vector<const char*> argv{"hcent"};
    argv.insert(argv.end(), args.begin(), args.end());
    std::ostringstream out, err;
    const int code = cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
    return {code, out.str(), err.str()};
}

bool contains(const std::string& haystack, const std::string& needle) {
    return haystack.find(needle) != std::string::npos;
}

std::string tmp_path(const std::string& name) { return std::string(HCENT_TEST_TMPDIR) + "/" + name; }

}  // namespace

TEST_CASE("entropy command") {
    const Result two = invoke({"entropy", "--graph", "hypercube:1", "--g", "0.5", "--subset", "0"});
    CHECK(two.code == 0);
    CHECK(contains(two.out, "entropy (symplectic oracle): 0.401413546086 bits"));
    CHECK(contains(two.out, "entropy (whitened SVD):      0.401413546086 bits"));
    CHECK(contains(two.out, "# graph: hypercube:1"));

    const Result zero = invoke({"entropy", "--graph", "hypercube:3", "--g", "0", "--subset", "0,1,2,3"});
    CHECK(zero.code == 0);
    CHECK(contains(zero.out, "entropy (symplectic oracle): 0 bits"));

    const Result parity = invoke({"entropy", "--graph", "hypercube:3", "--g", "0.5", "--subset", "0,3,5,6", "--format", "json"});
    CHECK(parity.code == 0);
    const auto j = nlohmann::json::parse(parity.out);
    CHECK(j["entropyOracle"].get<double>() == doctest::Approx(1.27938003320).epsilon(1e-11));
    CHECK(j["config"]["subset"] == nlohmann::json::parse("[0,3,5,6]"));
    CHECK(j["cutEdges"] == 12);

    const Result nats = invoke({"entropy", "--graph", "hypercube:1", "--subset", "1", "--log-base", "e", "--format", "csv"});
    CHECK(nats.code == 0);
    CHECK(contains(nats.out, "gamma,nu,degeneracy,entropy\n0.5,1.15470053838,1,0.278238667708"));
}

TEST_CASE("entropy usage errors") {
    CHECK(invoke({"entropy", "--graph", "hypercube:3"}).code == 2);
    CHECK(invoke({"entropy", "--graph", "hypercube:3", "--subset", "0,1,2,3,4,5,6,7"}).code == 2);
    CHECK(invoke({"entropy", "--graph", "hypercube:3", "--subset", "0,9"}).code == 2);
    CHECK(invoke({"entropy", "--graph", "hypercube:3", "--subset", "0,,1"}).code == 2);
    CHECK(invoke({"entropy", "--graph", "cube:3", "--subset", "0"}).code == 2);
    CHECK(invoke({"entropy", "--graph", "hypercube:3", "--subset", "0", "--format", "xml"}).code == 2);
    CHECK(invoke({"entropy", "--graph", "hypercube:3", "--subset", "0", "--g", "-1"}).code == 1);
    CHECK(invoke({}).code == 2);
    CHECK(invoke({"frobnicate"}).code == 2);
    CHECK(invoke({"--help"}).code == 0);
}

TEST_CASE("census command") {
    const Result h3 = invoke({"census", "--graph", "hypercube:3", "--g", "0.5"});
    CHECK(h3.code == 0);
    CHECK(contains(h3.out, "6 classes / 35 partitions"));
    CHECK(contains(h3.out, "max entropy 1.2793800332: {0,3,5,6}"));
    CHECK(contains(h3.out, "min entropy 0.704508412743: {0,1,2,3} {0,1,4,5} {0,2,4,6}"));

    const Result h4 = invoke({"census", "--graph", "hypercube:4", "--g", "0.5", "--threads", "8"});
    CHECK(h4.code == 0);
    CHECK(contains(h4.out, "55 classes / 6435 partitions"));

    const Result h1 = invoke({"census", "--graph", "hypercube:1", "--g", "0.5"});
    CHECK(h1.code == 0);
    CHECK(contains(h1.out, "1 classes / 1 partitions"));

    CHECK(invoke({"census", "--graph", "hypercube:5"}).code == 2);
    const Result sampled = invoke({"census", "--graph", "hypercube:5", "--sample", "40", "--format", "json"});
    CHECK(sampled.code == 0);
    CHECK(nlohmann::json::parse(sampled.out)["evaluatedPartitions"] == 40);
}

TEST_CASE("census reports to files") {
    const std::string json_path = tmp_path("census_h3.json");
    const Result r = invoke({"census", "--graph", "hypercube:3", "--format", "json", "--output", json_path.c_str()});
    CHECK(r.code == 0);
    CHECK(contains(r.out, "6 classes / 35 partitions"));
    std::ifstream f(json_path);
    const auto j = nlohmann::json::parse(f);
    CHECK(j["totalPartitions"] == 35);
    CHECK(j["classes"].size() == 6);
    CHECK(j["config"]["threads"] == 1);
    CHECK(j["warnings"].empty());

    const Result csv = invoke({"census", "--graph", "hypercube:3", "--format", "csv"});
    CHECK(contains(csv.out, "# tolerance: 1e-09\nclass,entropy,multiplicity,representatives\n"));

    CHECK(invoke({"census", "--graph", "hypercube:3", "--output", "/nonexistent/dir/x.json"}).code == 2);
}

TEST_CASE("census on an edge-list file") {
    const std::string path = tmp_path("cube2.edges");
    {
        std::ofstream f(path);
        f << "# square\n" << to_edge_list(hypercube_graph(2));
    }
    const std::string uri = "file:" + path;
    const Result r = invoke({"census", "--graph", uri.c_str()});
    CHECK(r.code == 0);
    CHECK(contains(r.out, "2 classes / 3 partitions"));
}

TEST_CASE("census output is deterministic across runs and thread counts") {
    const Result a = invoke({"census", "--graph", "hypercube:4", "--format", "json"});
    const Result b = invoke({"census", "--graph", "hypercube:4", "--format", "json"});
    const Result c = invoke({"census", "--graph", "hypercube:4", "--format", "json", "--threads", "3"});
    CHECK(a.out == b.out);
    auto ja = nlohmann::json::parse(a.out);
    auto jc = nlohmann::json::parse(c.out);
    ja.erase("config");
    jc.erase("config");
    CHECK(ja == jc);
}

TEST_CASE("verify command") {
    const Result identity = invoke({"verify", "--scheme", "identity-cut", "--d", "4", "--g", "0.5"});
    CHECK(identity.code == 0);
    CHECK(contains(identity.out, "PASS"));
    CHECK(contains(identity.out, "analytic: "));
    CHECK(contains(identity.out, "oracle:   "));

    CHECK(invoke({"verify", "--scheme", "half-strata", "--d", "4", "--g", "0.5"}).code == 2);
    CHECK(invoke({"verify", "--scheme", "parity", "--d", "3", "--g", "1.0"}).code == 0);
    CHECK(invoke({"verify", "--scheme", "half-strata", "--d", "5", "--g", "0.1"}).code == 0);
    CHECK(invoke({"verify", "--scheme", "spiral", "--d", "3"}).code == 2);
    CHECK(invoke({"verify", "--d", "3"}).code == 2);

    const Result j = invoke({"verify", "--scheme", "parity", "--d", "3", "--format", "json"});
    CHECK(nlohmann::json::parse(j.out)["pass"] == true);
}

TEST_CASE("analytic command") {
    const Result r = invoke({"analytic", "--scheme", "identity-cut", "--d", "3", "--g", "0.5"});
    CHECK(r.code == 0);
    CHECK(contains(r.out, "entropy (identity-cut): 0.704508412743 bits"));
    CHECK(contains(r.out, "0.25  1.03279555899  2"));

    const Result zero = invoke({"analytic", "--scheme", "parity", "--d", "3", "--g", "0"});
    CHECK(zero.code == 0);
    CHECK(contains(zero.out, "entropy (parity): 0 bits"));
    CHECK(invoke({"analytic", "--scheme", "half-strata", "--d", "2"}).code == 2);
}

TEST_CASE("spectrum command") {
    const Result r = invoke({"spectrum", "--d", "3"});
    CHECK(r.code == 0);
    CHECK(contains(r.out, "  4 x 1\n  2 x 2\n"));
    CHECK(contains(r.out, "  3: 1\n  1: 3\n  -1: 3\n  -3: 1\n"));

    const Result j = invoke({"spectrum", "--d", "4", "--format", "json"});
    const auto parsed = nlohmann::json::parse(j.out);
    CHECK(parsed["blocks"].size() == 3);
    CHECK(parsed["spectrum"][2]["multiplicity"] == 6);
    CHECK(invoke({"spectrum", "--d", "0"}).code == 2);
}

TEST_CASE("flag helpers") {
    CHECK(cli::parse_subset("0,3,5,6") == std::vector<int>{0, 3, 5, 6});
    CHECK_THROWS_AS(cli::parse_subset(""), ArgumentError);
    CHECK_THROWS_AS(cli::parse_subset("1,-2"), ArgumentError);
    CHECK(cli::parse_scheme("parity") == AnalyticScheme::parity_cut);
    CHECK(cli::parse_scheme("identity-cut") == AnalyticScheme::identity_cut);
    CHECK(cli::parse_scheme("half-strata") == AnalyticScheme::half_strata);
    CHECK_FALSE(cli::parse_scheme("diagonal").has_value());
}
