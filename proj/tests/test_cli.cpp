#include "frb/cli.hpp"
#include "frb/report.hpp"

#include <doctest.h>

#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

namespace {

struct Run {
    int code;
    std::string out;
    std::string err;
};

Run run(std::vector<std::string> args)
{
    args.insert(args.begin(), "frbound");
    std::vector<const char*> argv;
    for (const auto& a : args)
        argv.push_back(a.c_str());
    std::ostringstream out, err;
    const int code = frb::run_cli(int(argv.size()), argv.data(), out, err);
    return {code, out.str(), err.str()};
}

std::vector<std::string> values(const std::string& csv)
{
    std::vector<std::string> out;
    std::istringstream in(csv);
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty() || line[0] == '#' || line.rfind("target,", 0) == 0)
            continue;
        std::istringstream fields(line);
        std::string f;
        for (int k = 0; k < 3; ++k)
            std::getline(fields, f, ',');
        out.push_back(f);
    }
    return out;
}

using V = std::vector<std::string>;

} // namespace

TEST_CASE("curve-info")
{
    const auto r = run({"curve-info", "f8"});
    REQUIRE(r.code == 0);
    CHECK(r.out.find("17,Y^6,0,6,12\n") != std::string::npos);
    CHECK(r.out.find("index,monomial,x,y,weight\n") != std::string::npos);
    const auto big = run({"curve-info", "f27"});
    CHECK(big.out.find("\n243,") != std::string::npos);
    const auto g = run({"curve-info", "f8", "--grid"});
    CHECK(g.out.find("21 26 30 32\n") != std::string::npos);
}

TEST_CASE("bad curve sources exit with 2")
{
    const std::string path = "frbound_test_bad.json";
    std::ofstream(path) << "{\"p\": 2, ";
    const auto r = run({"curve-info", path});
    CHECK(r.code == 2);
    CHECK_FALSE(r.err.empty());
    std::remove(path.c_str());
    CHECK(run({"curve-info", "nosuchfile.json"}).code == 2);
}

TEST_CASE("bound")
{
    CHECK(values(run({"bound", "f8", "--l", "17", "--methods", "wb,wwb,owb,adv,fim"}).out) ==
          V{"7", "7", "8", "9", "10"});
    CHECK(values(run({"bound", "f8", "--l", "21", "--methods", "wb,owb,adv,fim"}).out) == V{"8", "10", "12", "13"});
    CHECK(values(run({"bound", "f8", "--l", "17", "--methods", "fim", "--v", "0"}).out) == V{"9"});
    CHECK(run({"bound", "f8", "--l", "0"}).code == 2);
    CHECK(run({"bound", "f8", "--l", "33"}).code == 2);
    CHECK(run({"bound", "f8", "--l", "17", "--methods", "best"}).code == 2);
    CHECK(run({"bound", "f8", "--l", "17", "--v", "-1"}).code == 2);
}

TEST_CASE("code")
{
    const auto r = run({"code", "f8", "--s", "16", "--t", "1,2"});
    REQUIRE(r.code == 0);
    CHECK(r.out.find("# k=16\n") != std::string::npos);
    CHECK(values(r.out) == V{"7", "7", "8", "9", "10", "8", "8", "10", "12", "13"});
    const auto full = run({"code", "f8", "--s", "0"});
    CHECK(full.out.find("# k=32\n") != std::string::npos);
    CHECK(values(full.out) == V{"1", "1", "1", "1", "1"});
    const auto explicit_parity = run({"code", "f8", "--parity", "1..16", "--t", "1", "--methods", "adv"});
    CHECK(values(explicit_parity.out) == V{"9"});
    CHECK(run({"code", "f8", "--s", "3", "--parity", "1"}).code == 2);
    CHECK(run({"code", "f8", "--s", "31", "--t", "2"}).code == 2);
}

TEST_CASE("improved")
{
    const auto adv = run({"improved", "f8", "--delta", "10", "--method", "adv"});
    CHECK(adv.out.find("# k=16\n") != std::string::npos);
    CHECK(values(adv.out) == V{"10", "12", "14", "15", "16", "20"});
    const auto fim = run({"improved", "f8", "--delta", "13", "--method", "fim"});
    CHECK(fim.out.find("# k=12\n") != std::string::npos);
    CHECK(values(fim.out) == V{"13", "15", "16", "21", "22", "24"});
    const auto none = run({"improved", "f8", "--delta", "1"});
    CHECK(none.out.find("# k=32\n# parity=\n") != std::string::npos);
    CHECK(run({"improved", "f8", "--delta", "10", "--method", "wb"}).code == 2);
}

TEST_CASE("output is identical across thread counts and formats round trip")
{
    const auto a = run({"code", "f8", "--s", "12", "--t", "1,2,3", "--threads", "1"});
    const auto b = run({"code", "f8", "--s", "12", "--t", "1,2,3", "--threads", "4"});
    CHECK(a.out == b.out);
    const auto j = run({"--format", "json", "code", "f8", "--s", "12", "--t", "1,2"});
    REQUIRE(j.code == 0);
    CHECK(frb::to_json(frb::report_from_json(j.out)) == j.out);
    CHECK(run({"code", "f8", "--s", "12", "--t", "1,2", "--format", "json"}).out == j.out);
}

TEST_CASE("output file")
{
    const std::string path = "frbound_test_out.csv";
    const auto r = run({"bound", "f8", "--l", "17", "--output", path});
    CHECK(r.code == 0);
    CHECK(r.out.empty());
    std::ifstream in(path);
    std::stringstream ss;
    ss << in.rdbuf();
    CHECK(ss.str() == run({"bound", "f8", "--l", "17"}).out);
    std::remove(path.c_str());
}

TEST_CASE("verify and reproduce")
{
    const auto v = run({"verify", "f8", "--s", "25..31", "--t", "1"});
    CHECK(v.code == 0);
    CHECK(v.out.find("# checks=35 sound=yes") != std::string::npos);
    const auto v2 = run({"verify", "f8", "--s", "28..31", "--t", "2"});
    CHECK(v2.code == 0);
    CHECK(v2.out.find("# skip s=31") != std::string::npos);
    const auto empty = run({"verify", "f8", "--s", "30..29"});
    CHECK(empty.code == 0);
    CHECK(empty.out.find("# checks=0") != std::string::npos);

    const auto t1 = run({"reproduce", "table1"});
    CHECK(t1.code == 0);
    CHECK(t1.out.find("table1: 10/10 checks pass") != std::string::npos);
    CHECK(run({"reproduce", "table9"}).code == 2);
}

TEST_CASE("rho-table and usage errors")
{
    const auto r = run({"rho-table", "f8"});
    CHECK(r.out.find("\n3,12,17\n") != std::string::npos);
    CHECK(r.out.find("\n3,11,18\n") != std::string::npos);
    CHECK(run({"rho-table", "f8", "--generic"}).out == r.out);
    CHECK(run({}).code == 2);
    CHECK(run({"frobnicate"}).code == 2);
    CHECK(run({"--help"}).code == 0);
}

TEST_CASE("sweep")
{
    const auto r = run({"sweep", "f8", "--s", "16", "--t-max", "2"});
    REQUIRE(r.code == 0);
    CHECK(values(r.out) == V{"7", "7", "8", "9", "10", "8", "8", "10", "12", "13"});
}
