// test_table.cpp — Number formatting, CSV/JSONL emission and CSV round trips

#include <doctest.h>

#include <cmath>
#include <limits>
#include <random>
#include <sstream>

#include "dicke/config.hpp"
#include "dicke/errors.hpp"
#include "dicke/table.hpp"
#include <json.hpp>

using namespace dicke;

namespace {

std::string csv(const ResultTable& t) {
    std::ostringstream os;
    emit_csv(t, os);
    return os.str();
}

std::string jsonl(const ResultTable& t) {
    std::ostringstream os;
    emit_jsonl(t, os);
    return os.str();
}

ResultTable sample_table() {
    ResultTable t;
    t.columns = {"x", "label"};
    t.metadata = {{"@artifact", "dicke"}, {"omega", "1"}};
    t.add_row({1.0 / 3.0, std::string("NP")});
    t.add_row({-0.0, std::string("a,b")});
    t.add_row({0.5, std::string("say \"hi\"")});
    t.add_row({std::numeric_limits<double>::quiet_NaN(), std::string("")});
    return t;
}

} // namespace

TEST_SUITE("table") {

TEST_CASE("doubles use 17 significant digits") {
    CHECK(format_double(1.0 / 3.0) == "0.33333333333333331");
    CHECK(format_double(0.1) == "0.10000000000000001");
    CHECK(format_double(1.0) == "1");
    CHECK(format_double(-0.25) == "-0.25");
    CHECK(format_double(1e300) == "1.0000000000000001e+300");
    CHECK(format_double(std::nan("")) == "nan");

    std::mt19937_64 rng(3);
    std::uniform_real_distribution<double> u(-10.0, 10.0);
    for (int i = 0; i < 2000; ++i) {
        const double v = std::ldexp(u(rng), static_cast<int>(u(rng) * 30.0));
        CHECK(std::stod(format_double(v)) == v);
    }
}

TEST_CASE("row width is enforced") {
    ResultTable t;
    t.columns = {"a", "b"};
    CHECK_THROWS_AS(t.add_row({1.0}), std::invalid_argument);
    CHECK_THROWS_AS(t.add_row({1.0, 2.0, 3.0}), std::invalid_argument);
    CHECK_NOTHROW(t.add_row({1.0, std::string("x")}));
}

TEST_CASE("CSV layout") {
    const std::string text = csv(sample_table());
    CHECK(text == "# @artifact=dicke\n"
                  "# omega=1\n"
                  "x,label\n"
                  "0.33333333333333331,NP\n"
                  "-0,\"a,b\"\n"
                  "0.5,\"say \"\"hi\"\"\"\n"
                  "nan,\"\"\n");

    ResultTable empty;
    empty.columns = {"t", "status"};
    CHECK(csv(empty) == "t,status\n");
}

TEST_CASE("CSV round trip is exact") {
    const ResultTable a = sample_table();
    const ResultTable b = parse_csv(csv(a));
    CHECK(b.columns == a.columns);
    CHECK(b.metadata == a.metadata);
    REQUIRE(b.rows.size() == a.rows.size());
    for (std::size_t i = 0; i < a.rows.size(); ++i) {
        for (std::size_t j = 0; j < a.columns.size(); ++j) {
            const Cell& x = a.rows[i][j];
            const Cell& y = b.rows[i][j];
            REQUIRE(x.index() == y.index());
            if (const double* d = std::get_if<double>(&x)) {
                const double e = std::get<double>(y);
                CHECK((std::isnan(*d) ? std::isnan(e) : (e == *d && std::signbit(e) == std::signbit(*d))));
            } else {
                CHECK(std::get<std::string>(x) == std::get<std::string>(y));
            }
        }
    }
    CHECK(csv(b) == csv(a));

    SUBCASE("quoted numbers stay strings") {
        const ResultTable c = parse_csv("v\n\"1.5\"\n2.5\r\n");
        REQUIRE(c.rows.size() == 2);
        CHECK(std::get<std::string>(c.rows[0][0]) == "1.5");
        CHECK(std::get<double>(c.rows[1][0]) == 2.5);
    }
    SUBCASE("unterminated quote is rejected") {
        CHECK_THROWS_AS(parse_csv("v\n\"abc\n"), ParseError);
    }
}

TEST_CASE("JSONL layout") {
    const std::string text = jsonl(sample_table());
    std::istringstream in(text);
    std::string line;
    std::vector<nlohmann::json> lines;
    while (std::getline(in, line)) lines.push_back(nlohmann::json::parse(line));
    REQUIRE(lines.size() == 5);
    CHECK(lines[0]["metadata"]["@artifact"] == "dicke");
    CHECK(lines[0]["metadata"]["omega"] == "1");
    CHECK(lines[0]["columns"] == nlohmann::json::array({"x", "label"}));
    CHECK(lines[1]["x"].get<double>() == 1.0 / 3.0);
    CHECK(lines[2]["label"] == "a,b");
    CHECK(lines[4]["x"] == "nan");
    CHECK(text.find("\"x\":0.33333333333333331") != std::string::npos);
}

TEST_CASE("metadata rebuilds the configuration") {
    RunConfig cfg = parse_config("model = open\nomega = 1\nkappa = 0.5\nlambda_minus = 0.7\nq_axis = linspace(-1, 1, 3)\n"
                                 "omega0_axis = 0\nout = result.csv\nformat = jsonl\n",
                                 Subcommand::eigmap);
    ResultTable t;
    t.metadata = run_metadata(cfg);
    CHECK(t.metadata[0] == std::pair<std::string, std::string>{"@artifact", "dicke"});
    CHECK(t.metadata[1].first == "@version");
    CHECK(t.metadata[2] == std::pair<std::string, std::string>{"@subcommand", "eigmap"});
    for (const auto& [k, v] : t.metadata) {
        CHECK(k != "out");
        CHECK(k != "format");
    }
    const RunConfig back = config_from_metadata(parse_csv(csv(t)));
    CHECK(back.subcommand == Subcommand::eigmap);
    CHECK(back.params == cfg.params);
    CHECK(back.q_axis == cfg.q_axis);
    CHECK(back.model == "open");

    ResultTable anonymous;
    anonymous.metadata = {{"omega", "1"}};
    CHECK_THROWS_AS(config_from_metadata(anonymous), ValidationError);
}

} // TEST_SUITE
