#include <doctest.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <nlohmann/json.hpp>
#include <sstream>

#include "cli.hpp"
#include "kron/integer.hpp"

namespace {

struct Outcome {
    int code;
    std::string out;
    std::string err;
};

Outcome invoke(std::vector<std::string> args)
{
    std::ostringstream out, err;
    const int code = kron::cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

} // namespace

TEST_CASE("documented examples")
{
    CHECK(invoke({"reduced", "2", "2", "2"}).out == "2\n");
    CHECK(invoke({"reduced", "2", "2", "2", "--method", "littlewood"}).out == "2\n");
    CHECK(invoke({"stab", "2", "2"}).out == "formula=8 empirical=8\n");
    const Outcome empty = invoke({"coeff", "[]", "[]", "[]"});
    CHECK(empty.code == 0);
    CHECK(empty.out == "1\n");
    CHECK(invoke({"coeff", "[4,4]", "4,4", "[4, 4]"}).out == "1\n");
    CHECK(invoke({"product", "2,2", "2,2"}).out == "s_{4} + s_{2,2} + s_{1,1,1,1}\n");
}

TEST_CASE("usage and parse errors exit 2")
{
    CHECK(invoke({}).code == 2);
    CHECK(invoke({"frobnicate"}).code == 2);
    CHECK(invoke({"coeff", "1", "1"}).code == 2);
    CHECK(invoke({"coeff", "1,2", "3", "3"}).code == 2);
    CHECK(invoke({"coeff", "x", "3", "3"}).code == 2);
    CHECK(invoke({"product", "2", "1"}).code == 2);
    CHECK(invoke({"reduced", "1", "1", "1", "--method", "other"}).code == 2);
    CHECK(invoke({"verify", "--suite", "everything"}).code == 2);
    CHECK(invoke({"verify", "--max-weight", "-1"}).code == 2);
    CHECK(invoke({"stab", "2", "2", "--out", "/nonexistent/dir/file"}).code == 2);
    const Outcome help = invoke({"--help"});
    CHECK(help.code == 0);
    CHECK(help.out.find("reduced") != std::string::npos);
}

TEST_CASE("json output agrees with text output")
{
    const auto j = nlohmann::json::parse(invoke({"reduced", "2", "2", "4", "--json"}).out);
    CHECK(j["reduced"] == 1);
    CHECK(j["gamma"] == nlohmann::json::array({4}));
    CHECK(j["method"] == "stable");

    const auto p = nlohmann::json::parse(invoke({"product", "2,1", "2,1", "--json"}).out);
    CHECK(p["product"].size() == 3);
    CHECK(p["product"][0]["partition"] == nlohmann::json::array({3}));
    CHECK(p["product"][0]["coeff"] == 1);

    const auto s = nlohmann::json::parse(invoke({"stab", "2", "2", "--json"}).out);
    CHECK(s["formula"] == 8);
    CHECK(s["empirical"] == 8);

    const auto b = nlohmann::json::parse(invoke({"bounds", "3,2", "2,2,1", "2,2", "--json"}).out);
    for (const char* key : {"triple", "reduced", "stab", "N1", "N2", "NB", "NV"})
        CHECK(b.contains(key));
    CHECK(b["stab"] == 10);
    CHECK(b["NV"] == 11);
    CHECK(invoke({"bounds", "3,2", "2,2,1", "2,2"}).out == "reduced=16 stab=10 N1=11 N2=10 NB=11 NV=11\n");

    const auto sup = nlohmann::json::parse(invoke({"support", "1", "1", "--json"}).out);
    CHECK(sup["support"].size() == 4);
    CHECK(sup["max_weight"] == 2);
    CHECK(invoke({"support", "1", "1"}).out == "[] 1\n[1] 1\n[2] 1\n[1,1] 1\nterms=4 min_weight=0 max_weight=2 max_first_row=2\n");

    const auto c = nlohmann::json::parse(invoke({"coeff", "[]", "[]", "[]", "--json"}).out);
    CHECK(c["coeff"] == 1);
    CHECK(c["lambda"] == nlohmann::json::array());
}

TEST_CASE("--out writes to a file")
{
    const std::string path = "cli_out_test.json";
    const Outcome r = invoke({"stab", "2", "2", "--json", "--out", path});
    CHECK(r.code == 0);
    CHECK(r.out.empty());
    std::ifstream in(path);
    const auto j = nlohmann::json::parse(in);
    CHECK(j["formula"] == 8);
    std::remove(path.c_str());
}

TEST_CASE("KRON_MAX_WEIGHT caps the computation")
{
    const int saved = kron::max_weight();
    setenv("KRON_MAX_WEIGHT", "5", 1);
    const Outcome capped = invoke({"coeff", "3,3", "3,3", "3,3"});
    CHECK(capped.code == 2);
    CHECK(capped.err.find("KRON_MAX_WEIGHT") != std::string::npos);
    CHECK(invoke({"coeff", "3,2", "3,2", "3,2"}).code == 0);
    setenv("KRON_MAX_WEIGHT", "many", 1);
    CHECK(invoke({"coeff", "1", "1", "1"}).code == 2);
    unsetenv("KRON_MAX_WEIGHT");
    kron::set_max_weight(saved);
}

TEST_CASE("verify suites")
{
    const Outcome small = invoke({"verify", "--suite", "all", "--max-weight", "4"});
    CHECK_MESSAGE(small.code == 0, small.out);
    CHECK(small.out.find("FAIL") == std::string::npos);
    const Outcome intro = invoke({"verify", "--suite", "intro", "--json"});
    CHECK(intro.code == 0);
    const auto j = nlohmann::json::parse(intro.out);
    CHECK(j["passed"] == true);
    CHECK(j["checks"].size() == 5);
    for (const auto& check : j["checks"])
        CHECK(check["passed"] == true);
}
