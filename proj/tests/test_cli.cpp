#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "harmonia/cli.hpp"
#include "harmonia/coxeter.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

using namespace harmonia;
using nlohmann::json;

namespace {

struct Run {
    int code;
    std::string out, err;
};

Run run(std::vector<std::string> args) {
    args.insert(args.begin(), "harmonia");
    std::vector<const char*> argv;
    for (const auto& a : args) argv.push_back(a.c_str());
    std::ostringstream out, err;
    int code = run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
    return {code, out.str(), err.str()};
}

std::string temp_path(const std::string& name) { return "/tmp/harmonia_test_" + name; }

}  // namespace

TEST_CASE("poincare subcommand") {
    auto r = run({"poincare", "A2", "--m", "1"});
    CHECK(r.code == 0);
    CHECK(json::parse(r.out)["total"] == "1 + 2t^4 + 2t^5 + t^9");
    auto csv = run({"poincare", "B2", "--m", "1,0", "--format", "csv"});
    CHECK(csv.code == 0);
    CHECK(csv.out.rfind("irrep,dim,P_H0,P_Hm\n", 0) == 0);
    // broadcast of a single multiplicity
    CHECK(json::parse(run({"poincare", "B2", "--m", "1"}).out)["m"] == json::array({1, 1}));
}

TEST_CASE("exit codes") {
    CHECK(run({"poincare", "H4", "--m", "1"}).code == kExitUnsupported);
    CHECK(run({"group", "info", "E8"}).code == kExitUnsupported);
    CHECK(run({"poincare", "A2", "--m", "1,2"}).code == kExitUsage);
    CHECK(run({"poincare", "A2", "--m", "x"}).code == kExitUsage);
    CHECK(run({"frobnicate"}).code == kExitUsage);
    CHECK(run({}).code == kExitUsage);
    CHECK(run({"lowest", "--n", "3", "--m", "0"}).code == kExitUsage);
    CHECK(run({"verify", "--in", "/nonexistent.json", "--group", "A1", "--m", "1"}).code == kExitUsage);
}

TEST_CASE("harmonics and verify") {
    auto r = run({"harmonics", "A1", "--m", "1", "--method", "both"});
    REQUIRE(r.code == 0);
    auto docs = json::parse(r.out);
    REQUIRE(docs.size() == 2);
    CHECK(docs[0]["metadata"]["degree"] == 0);
    CHECK(docs[1]["metadata"]["degree"] == 3);
    CHECK(run({"harmonics", "A1", "--m", "1", "--method", "both"}).out == r.out);

    const std::string path = temp_path("i24.json");
    CHECK(run({"harmonics", "B2", "--m", "0,1", "--method", "kz", "--out", path}).code == 0);
    auto ok = run({"verify", "--in", path, "--group", "B2", "--m", "0,1"});
    CHECK(ok.code == 0);
    for (const auto& res : json::parse(ok.out)["results"]) CHECK(res["harmonic"] == true);
    CHECK(run({"verify", "--in", path, "--group", "B2", "--m", "1,0"}).code == kExitFailure);
    CHECK(run({"verify", "--in", path, "--group", "A2", "--m", "1"}).code == kExitUsage);
    std::remove(path.c_str());
}

TEST_CASE("PolyDocument round trip") {
    QPoly p = QPoly::variable(3, 0).pow(2) * Rational(3, 7) - QPoly::variable(3, 2);
    PolyDocument d = make_document(p, default_names(3));
    PolyDocument back = PolyDocument::from_json(json::parse(d.to_json().dump()));
    CHECK(document_poly<Rational>(back) == p);
    CHECK(back.to_json() == d.to_json());

    Poly<Cyclo> q = Poly<Cyclo>::variable(2, 0) * cyclo(10) + Poly<Cyclo>::variable(2, 1) * Cyclo(Rational(1, 2));
    PolyDocument dq = make_document(q, {"z", "w"}, 10);
    PolyDocument bq = PolyDocument::from_json(json::parse(dq.to_json().dump()));
    CHECK(document_poly<Cyclo>(bq) == q);
    CHECK(bq.to_json().dump() == dq.to_json().dump());
    CHECK_THROWS(document_poly<Rational>(bq));
}

TEST_CASE("lowest and plancherel") {
    auto r = run({"lowest", "--n", "2", "--m", "1"});
    REQUIRE(r.code == 0);
    auto docs = json::parse(r.out);
    REQUIRE(docs.size() == 1);
    CHECK(docs[0]["metadata"]["labels"]["leading_coefficient"] == "1/6");
    auto p = run({"plancherel", "--n", "8", "--samples", "50", "--seed", "42"});
    CHECK(p.code == 0);
    CHECK(p.out.rfind("sample_index,partition,statistic\n", 0) == 0);
    CHECK(p.out.find("ks_distance=") != std::string::npos);
    CHECK(run({"plancherel", "--n", "8", "--samples", "50", "--seed", "42"}).out == p.out);
    auto e = run({"plancherel", "--n", "4", "--exact"});
    CHECK(e.out.find("\"[2,2]\",1/6,") != std::string::npos);
}

TEST_CASE("group info") {
    auto j = json::parse(run({"group", "info", "A3"}).out);
    CHECK(j["order"] == 24);
    CHECK(j["reflections"] == 6);
    CHECK(j["degrees"] == json::array({1, 2, 3, 4}));
}
