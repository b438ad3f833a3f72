#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "cli.hpp"

namespace fs = std::filesystem;
using fishcheck::cli::run;
using nlohmann::json;

namespace {

struct Outcome {
    int code;
    std::string out;
    std::string err;
};

Outcome call(std::vector<std::string> args) {
    args.insert(args.begin(), "fishcheck");
    std::ostringstream out, err;
    const int code = run(args, out, err);
    return {code, out.str(), err.str()};
}

fs::path scratch(const std::string& name) {
    const fs::path dir = fs::temp_directory_path() / "fishcheck_test_cli";
    fs::create_directories(dir);
    return dir / name;
}

json load(const fs::path& p) {
    std::ifstream f(p);
    return json::parse(f);
}

std::vector<std::string> lines_of(const fs::path& p) {
    std::ifstream f(p);
    std::vector<std::string> out;
    for (std::string line; std::getline(f, line);) out.push_back(line);
    return out;
}

}  // namespace

TEST_CASE("usage errors exit 2") {
    CHECK(call({}).code == 2);
    CHECK(call({"nope"}).code == 2);
    CHECK(call({"rho-prime"}).code == 2);
    CHECK(call({"rho-prime", "--m", "x"}).code == 2);
    CHECK(call({"verify", "--bogus"}).code == 2);

    const auto odd = call({"rho-prime", "--m", "17"});
    CHECK(odd.code == 2);
    CHECK(odd.err.find("m must be even") != std::string::npos);
    CHECK(call({"rho-prime", "--m", "4"}).code == 2);
    CHECK(call({"verify", "--suite", "nope"}).code == 2);
    CHECK(call({"verify", "--m-max", "20"}).code == 2);
    CHECK(call({"search", "--m", "17"}).code == 2);
    CHECK(call({"search", "--m", "18", "--margin", "0"}).code == 2);
    CHECK(call({"search", "--m", "18", "--jobs", "0"}).code == 2);
    CHECK(call({"family", "--name", "nope", "--m", "18"}).code == 2);
    CHECK(call({"family", "--name", "t", "--m", "8"}).code == 2);
}

TEST_CASE("help and version exit 0") {
    const auto h = call({"--help"});
    CHECK(h.code == 0);
    CHECK(h.out.find("rho-prime") != std::string::npos);
    CHECK(call({"search", "--help"}).code == 0);
    CHECK(call({"--version"}).code == 0);
}

TEST_CASE("rho-prime") {
    const auto path = scratch("rho.json");
    const auto csv = scratch("rho.csv");
    const auto r = call({"rho-prime", "--m", "18", "--out", path.string(), "--csv", csv.string()});
    CHECK(r.code == 0);
    CHECK(r.out.find("4.593888315670") != std::string::npos);
    const json j = load(path);
    CHECK(j["schema-version"] == 1);
    CHECK(j["command"] == "rho-prime");
    CHECK(j["flags"]["m"] == 18);
    CHECK(j.contains("tool-version"));
    CHECK(j["timing"]["seconds"].get<double>() >= 0.0);
    REQUIRE(j["results"].size() == 1);
    CHECK(std::abs(j["results"][0]["rho-prime"].get<double>() - 4.593888315670) < 1e-9);
    const auto rows = lines_of(csv);
    REQUIRE(rows.size() == 2);
    CHECK(rows[0] == "m,rho-prime,lo,hi");
    CHECK(rows[1].rfind("18,4.593888315670,", 0) == 0);
}

TEST_CASE("family") {
    const auto path = scratch("family.json");
    const auto t = call({"family", "--name", "t", "--m", "18", "--out", path.string()});
    CHECK(t.code == 0);
    CHECK(t.out.find("edges 18") != std::string::npos);
    CHECK(t.out.find("verdict   below") != std::string::npos);
    const json j = load(path);
    CHECK(j["results"][0]["verdict"] == "below");
    CHECK(j["results"][0]["quotient"].size() == 3);

    const auto t16 = call({"family", "--name", "t", "--m", "16"});
    CHECK(t16.code == 0);
    CHECK(t16.out.find("verdict   above") != std::string::npos);

    const auto s = call({"family", "--name", "s-minus", "--m", "30"});
    CHECK(s.code == 0);
    CHECK(s.out.find("edges 30") != std::string::npos);
}

TEST_CASE("verify exit codes follow the results") {
    const auto path = scratch("verify.json");
    const auto csv = scratch("verify.csv");
    const auto ok = call({"verify", "--suite", "charpoly", "--out", path.string(), "--csv", csv.string()});
    CHECK(ok.code == 0);
    CHECK(ok.out.find("5 pass, 0 fail, 0 inconclusive") != std::string::npos);
    const json j = load(path);
    CHECK(j["results"].size() == 5);
    CHECK(j["results"][0]["status"] == "pass");
    CHECK(j["results"][0]["m-range"] == "symbolic");
    CHECK(lines_of(csv).size() == 6);

    CHECK(call({"verify", "--suite", "thresholds", "--m-max", "60"}).code == 0);

    // the appendix suite carries two stated values that exact evaluation contradicts
    const auto app = call({"verify", "--suite", "appendix", "--m-max", "40"});
    CHECK(app.code == 1);
    CHECK(app.out.find("appendix.mixed.R-at-L.m18") != std::string::npos);
    CHECK(app.out.find("appendix.mixed.R-dxx-at-L.numerator-1") != std::string::npos);
}

TEST_CASE("search writes the table, reports and survivor files") {
    const auto path = scratch("search.json");
    const auto csv = scratch("search.csv");
    const fs::path dir = scratch("dump");
    fs::create_directories(dir);
    const auto r = call({"search", "--m", "18,20", "--jobs", "2", "--out", path.string(), "--csv", csv.string(),
                         "--dump-graphs", "--dump-dir", dir.string()});
    CHECK(r.code == 0);
    CHECK(r.out.find("4.314116352656") != std::string::npos);
    CHECK(r.out.find("4.429504228648") != std::string::npos);
    const json j = load(path);
    CHECK(j["command"] == "search");
    CHECK(j["flags"]["m"] == json::array({18, 20}));
    REQUIRE(j["results"].size() == 2);
    const auto rows = lines_of(csv);
    REQUIRE(rows.size() == 3);
    CHECK(rows[1].rfind("18,", 0) == 0);
    const auto g6 = lines_of(dir / "survivors_m18.g6");
    CHECK(static_cast<long>(g6.size()) == j["results"][0]["unique-h43-free"].get<long>());
    CHECK(fs::exists(dir / "survivors_m20.g6"));
}
