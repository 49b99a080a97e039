#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "symstats/cli.hpp"

using namespace symstats;

namespace {

const std::string kDataDir = SYMSTATS_DATA_DIR;

struct CliResult {
    int status = 0;
    std::string out;
    std::string err;
};

CliResult cli(std::vector<std::string> args) {
    std::ostringstream out, err;
    const int status = run_cli(args, out, err);
    return {status, out.str(), err.str()};
}

std::string ex1() { return kDataDir + "/ex1.json"; }
std::string pulse() { return kDataDir + "/pulse.json"; }

} // namespace

TEST_CASE("quantile subcommand prints the bare value") {
    const auto r = cli({"quantile", pulse(), "--var", "pulse", "--unit", "1",
                        "--t", "0.5"});
    CHECK(r.status == 0);
    CHECK(r.out == "102.5\n");
    CHECK(r.err.empty());
}

TEST_CASE("cov subcommand") {
    SUBCASE("comonotone histogram estimator") {
        const auto r = cli({"cov", ex1(), "--x", "Y1", "--y", "Y2",
                            "--estimator", "billard", "--format", "csv"});
        CHECK(r.status == 0);
        CHECK(r.out.find("449.333333333") != std::string::npos);
    }
    SUBCASE("means estimator") {
        const auto r = cli({"cov", ex1(), "--x", "Y1", "--y", "Y2",
                            "--estimator", "means"});
        CHECK(r.status == 0);
        CHECK(r.out.find("441") != std::string::npos);
    }
    SUBCASE("bg estimator reports a zero within sum") {
        const auto r = cli({"cov", ex1(), "--x", "Y1", "--y", "Y2",
                            "--estimator", "bg", "--format", "json-lines"});
        CHECK(r.status == 0);
        CHECK(r.out.find("\"csw\":0") != std::string::npos);
        CHECK(r.out.find("\"covariance\":441") != std::string::npos);
    }
}

TEST_CASE("stats subcommand") {
    const auto all = cli({"stats", ex1()});
    CHECK(all.status == 0);
    CHECK(all.out.find("Y1") != std::string::npos);
    CHECK(all.out.find("Y2") != std::string::npos);
    CHECK(all.out.find("469.333333333") != std::string::npos);

    const auto one = cli({"stats", ex1(), "--var", "Y2", "--format", "csv"});
    CHECK(one.status == 0);
    CHECK(one.out.find("Y2,2,42,469.333333333") != std::string::npos);
    CHECK(one.out.find("Y1") == std::string::npos);
}

TEST_CASE("refine subcommand reproduces the one-sided rebinning") {
    const auto r = cli({"refine", ex1(), "--x", "Y1", "--y", "Y2", "--splits",
                        "1", "--side", "y", "--format", "csv"});
    CHECK(r.status == 0);
    CHECK(r.out.find("445.166666667") != std::string::npos);
}

TEST_CASE("diagnose subcommand") {
    const auto r = cli({"diagnose", ex1(), "--var", "Y1", "--estimator",
                        "billard", "--format", "json-lines"});
    CHECK(r.status == 0);
    CHECK(r.out.find("\"discrepancy\":-40") != std::string::npos);
}

TEST_CASE("byte-identical output for identical invocations") {
    const std::vector<std::string> args = {"stats", ex1(), "--format", "table"};
    CHECK(cli(args).out == cli(args).out);
}

TEST_CASE("usage errors exit with status 1") {
    CHECK(cli({}).status == 1);
    CHECK(cli({"frobnicate", ex1()}).status == 1);
    CHECK(cli({"cov", ex1(), "--x", "Y1", "--y", "Y2", "--estimator",
               "wrong"}).status == 1);
    CHECK(cli({"cov", ex1(), "--x", "Y1"}).status == 1);
    CHECK(cli({"quantile", pulse(), "--var", "pulse", "--unit", "1", "--t",
               "1.5"}).status == 1);
    CHECK(cli({"stats", ex1(), "--format", "yaml"}).status == 1);

    const auto r = cli({"cov", ex1(), "--x", "Y1"});
    CHECK(!r.err.empty());
    CHECK(r.out.empty());
}

TEST_CASE("data errors exit with status 2") {
    CHECK(cli({"stats", kDataDir + "/absent.json"}).status == 2);
    CHECK(cli({"stats", ex1(), "--var", "nope"}).status == 2);
    CHECK(cli({"quantile", pulse(), "--var", "pulse", "--unit", "9", "--t",
               "0.5"}).status == 2);
    CHECK(cli({"refine", ex1(), "--x", "Y1", "--y", "Y2", "--splits",
               "25"}).status == 2);

    SUBCASE("malformed input reports the problem, not a stack trace") {
        const std::string path = "cli_malformed_input.json";
        {
            std::ofstream f(path);
            f << "{\"format\":1,\"variables\":[{\"name\":\"v\",\"kind\":"
                 "\"histogram\",\"cells\":[[[0,1,0.9]]]}]}";
        }
        const auto r = cli({"stats", path});
        std::remove(path.c_str());
        CHECK(r.status == 2);
        CHECK(r.err.find("error:") != std::string::npos);
        CHECK(r.out.empty());
    }
    SUBCASE("broken JSON reports its location") {
        const std::string path = "cli_broken_syntax.json";
        {
            std::ofstream f(path);
            f << "{\"format\": 1,\n  \"variables\": oops\n}";
        }
        const auto r = cli({"stats", path});
        std::remove(path.c_str());
        CHECK(r.status == 2);
        CHECK(r.err.find("line 2") != std::string::npos);
    }
    SUBCASE("covariance across cell kinds is a data error") {
        const std::string path = "cli_mixed_kinds.json";
        {
            std::ofstream f(path);
            f << R"({"format":1,"variables":[
                {"name":"a","kind":"interval","cells":[[0,1],[1,2]]},
                {"name":"b","kind":"histogram",
                 "cells":[[[0,1,1.0]],[[0,1,1.0]]]}]})";
        }
        const auto r = cli({"cov", path, "--x", "a", "--y", "b", "--estimator",
                            "billard"});
        std::remove(path.c_str());
        CHECK(r.status == 2);
        CHECK(r.err.find("kind") != std::string::npos);
    }
}

TEST_CASE("help exits cleanly") {
    CHECK(cli({"--help"}).status == 0);
    CHECK(cli({"--help"}).out.find("stats") != std::string::npos);
}
