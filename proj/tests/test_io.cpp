#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>
#include <sstream>

#include "symstats/io.hpp"
#include "symstats/univariate.hpp"
#include "support/fixtures.hpp"
#include "support/generators.hpp"

using namespace symstats;
using namespace symstats::testing;

namespace {

const std::string kDataDir = SYMSTATS_DATA_DIR;

SymbolicDataset random_dataset(std::mt19937_64& rng, std::size_t n_vars,
                               std::size_t n_units) {
    std::vector<SymbolicVariable> vars;
    for (std::size_t j = 0; j < n_vars; ++j) {
        const std::string name = "V" + std::to_string(j);
        vars.push_back(j % 2 == 0
                           ? random_histogram_variable(rng, name, n_units)
                           : random_interval_variable(rng, name, n_units));
    }
    return SymbolicDataset(std::move(vars));
}

} // namespace

TEST_CASE("bundled two-unit dataset reproduces its statistics") {
    const SymbolicDataset d = load_dataset_file(kDataDir + "/ex1.json");
    REQUIRE(d.variables().size() == 2);
    REQUIRE(d.n_units() == 2);
    const auto& y1 = d.variable("Y1");
    CHECK(symbolic_mean(y1) == 42.0);
    CHECK(symbolic_variance(y1) == doctest::Approx(1408.0 / 3.0).epsilon(1e-9));
}

TEST_CASE("serialize/parse round trip is exact") {
    std::mt19937_64 rng(127);
    for (int trial = 0; trial < 100; ++trial) {
        const SymbolicDataset d = random_dataset(rng, 1 + trial % 4, 1 + trial % 7);
        const std::string text = serialize_dataset(d);
        CHECK(parse_dataset(text) == d);
        CHECK(serialize_dataset(parse_dataset(text)) == text);
    }
}

TEST_CASE("parse rejects malformed documents") {
    SUBCASE("invalid JSON carries a line/column location") {
        try {
            parse_dataset("{\n  \"format\": 1,\n  oops\n}");
            FAIL("expected a parse error");
        } catch (const ParseError& e) {
            CHECK(e.location().find("line 3") != std::string::npos);
        }
    }
    SUBCASE("empty variable list") {
        CHECK_THROWS_AS(parse_dataset(R"({"format":1,"variables":[]})"), ParseError);
    }
    SUBCASE("missing format version") {
        CHECK_THROWS_AS(parse_dataset(R"({"variables":[]})"), ParseError);
    }
    SUBCASE("unsupported format version") {
        CHECK_THROWS_AS(parse_dataset(R"({"format":2,"variables":[]})"), ParseError);
    }
    SUBCASE("unknown cell kind") {
        CHECK_THROWS_AS(parse_dataset(R"({"format":1,"variables":[
            {"name":"v","kind":"boxes","cells":[[0,1]]}]})"),
                        ParseError);
    }
    SUBCASE("interval cell with wrong arity") {
        CHECK_THROWS_AS(parse_dataset(R"({"format":1,"variables":[
            {"name":"v","kind":"interval","cells":[[0,1,2]]}]})"),
                        ParseError);
    }
    SUBCASE("non-numeric bound") {
        CHECK_THROWS_AS(parse_dataset(R"({"format":1,"variables":[
            {"name":"v","kind":"interval","cells":[[0,"x"]]}]})"),
                        ParseError);
    }
    SUBCASE("duplicate variable names") {
        CHECK_THROWS_AS(parse_dataset(R"({"format":1,"variables":[
            {"name":"v","kind":"interval","cells":[[0,1]]},
            {"name":"v","kind":"interval","cells":[[0,1]]}]})"),
                        ParseError);
    }
}

TEST_CASE("parse wraps cell validation errors with their location") {
    SUBCASE("weights summing to 0.9") {
        try {
            parse_dataset(R"({"format":1,"variables":[
                {"name":"Y","kind":"histogram",
                 "cells":[[[0,1,0.5],[1,2,0.5]],
                          [[0,1,0.4],[1,2,0.5]]]}]})");
            FAIL("expected a validation error");
        } catch (const Error& e) {
            CHECK(e.code() == errc::weight_sum);
            CHECK(std::string(e.what()).find("'Y'") != std::string::npos);
            CHECK(std::string(e.what()).find("unit 2") != std::string::npos);
        }
    }
    SUBCASE("reversed interval bounds") {
        try {
            parse_dataset(R"({"format":1,"variables":[
                {"name":"Z","kind":"interval","cells":[[3,1]]}]})");
            FAIL("expected a validation error");
        } catch (const Error& e) {
            CHECK(e.code() == errc::invalid_interval);
            CHECK(std::string(e.what()).find("'Z'") != std::string::npos);
        }
    }
    SUBCASE("variables of different lengths") {
        try {
            parse_dataset(R"({"format":1,"variables":[
                {"name":"a","kind":"interval","cells":[[0,1]]},
                {"name":"b","kind":"interval","cells":[[0,1],[1,2]]}]})");
            FAIL("expected a validation error");
        } catch (const Error& e) {
            CHECK(e.code() == errc::length_mismatch);
        }
    }
}

TEST_CASE("numbers print with 12 significant digits") {
    CHECK(format_number(1408.0 / 3.0) == "469.333333333");
    CHECK(format_number(441.0) == "441");
    CHECK(format_number(102.5) == "102.5");
    CHECK(format_number(2671.0 / 6.0) == "445.166666667");
    CHECK(format_number(-1.0 / 3.0) == "-0.333333333333");
}

TEST_CASE("record writers") {
    Record rec;
    rec.add("name", FieldValue::of(std::string("Y1")));
    rec.add("n", FieldValue::of(static_cast<long long>(2)));
    rec.add("value", FieldValue::of(1408.0 / 3.0));
    rec.add("maybe", FieldValue::none());

    SUBCASE("table pads columns and shows empty as dash") {
        std::ostringstream out;
        write_records(out, {rec}, OutputFormat::table);
        CHECK(out.str() == "name  n  value          maybe\n"
                           "Y1    2  469.333333333  -\n");
    }
    SUBCASE("csv") {
        std::ostringstream out;
        write_records(out, {rec}, OutputFormat::csv);
        CHECK(out.str() == "name,n,value,maybe\nY1,2,469.333333333,\n");
    }
    SUBCASE("csv quotes fields containing separators") {
        Record tricky;
        tricky.add("name", FieldValue::of(std::string("a,b\"c")));
        std::ostringstream out;
        write_records(out, {tricky}, OutputFormat::csv);
        CHECK(out.str() == "name\n\"a,b\"\"c\"\n");
    }
    SUBCASE("json-lines") {
        std::ostringstream out;
        write_records(out, {rec}, OutputFormat::json_lines);
        CHECK(out.str() ==
              "{\"name\":\"Y1\",\"n\":2,\"value\":469.333333333,\"maybe\":null}\n");
    }
    SUBCASE("identical input gives identical bytes") {
        std::ostringstream a, b;
        write_records(a, {rec, rec}, OutputFormat::table);
        write_records(b, {rec, rec}, OutputFormat::table);
        CHECK(a.str() == b.str());
    }
}

TEST_CASE("covariance records flag out-of-range and undefined correlations") {
    CovReport r;
    r.n = 2;
    r.estimator = Estimator::billard;
    r.correlation = 1.25;
    {
        std::ostringstream out;
        write_records(out, {to_record("a", "b", r)}, OutputFormat::csv);
        CHECK(out.str().find("corr-exceeds-1") != std::string::npos);
        CHECK(out.str().find("1.25") != std::string::npos);
    }
    r.correlation.reset();
    {
        std::ostringstream out;
        write_records(out, {to_record("a", "b", r)}, OutputFormat::csv);
        CHECK(out.str().find("corr-undefined") != std::string::npos);
    }
    // a few ulp past 1, as a comonotone self-pair can produce, is not flagged
    r.correlation = 1.0 + 4e-16;
    {
        std::ostringstream out;
        write_records(out, {to_record("a", "b", r)}, OutputFormat::csv);
        CHECK(out.str().find("corr-exceeds-1") == std::string::npos);
    }
}

TEST_CASE("output format names") {
    CHECK(parse_output_format("table") == OutputFormat::table);
    CHECK(parse_output_format("csv") == OutputFormat::csv);
    CHECK(parse_output_format("json-lines") == OutputFormat::json_lines);
    CHECK_THROWS_AS(parse_output_format("xml"), Error);
}

TEST_CASE("missing files raise io errors") {
    try {
        load_dataset_file(kDataDir + "/no_such_file.json");
        FAIL("expected an io error");
    } catch (const Error& e) {
        CHECK(e.code() == errc::io);
    }
}
