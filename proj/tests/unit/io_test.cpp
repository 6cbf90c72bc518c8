/**
 * @file io_test.cpp
 * @brief Configuration parsing and JSON/DOT export.
 */

#include <algorithm>
#include <sstream>

#include <gtest/gtest.h>

#include "gca/io/config.hpp"
#include "gca/io/export.hpp"

using namespace gca;
using namespace gca::io;

namespace {

std::string field_of(const std::string& text) {
    try {
        (void)parse_config_text(text);
    } catch (const config_error& e) {
        return e.field();
    }
    return "<accepted>";
}

const char* general = R"({"n": 2, "B": [[0, 1], [-1, 0]], "R": [2, 1], "semifield": ["w"],
                         "y0": ["w", "w^-1"], "z": {"1": ["w"]}})";

}  // namespace

TEST(Config, ParsesGeneralAndPrincipal) {
    const auto c = parse_config_text(general);
    EXPECT_EQ(c.n, 2u);
    EXPECT_EQ(c.r, (std::vector<Exponent>{2, 1}));
    EXPECT_EQ(c.z[0], (std::vector<std::string>{"w"}));
    const auto p = make_pattern(c);
    EXPECT_EQ(p.semifield().rank(), 1u);
    EXPECT_FALSE(p.is_principal());

    const auto q = make_pattern(parse_config_text(R"({"n": 2, "B": [[0, 1], [-1, 0]], "principal": true})"));
    EXPECT_TRUE(q.is_principal());
    EXPECT_EQ(q, ClusterPattern::principal(ExchangeMatrix{{0, 1}, {-1, 0}}, {1, 1}));
}

TEST(Config, FieldPathsInErrors) {
    EXPECT_EQ(field_of(R"({"B": [[0]]})"), "n");
    EXPECT_EQ(field_of(R"({"n": 2, "B": [[0, 1], [-1, "a"]]})"), "B[1][1]");
    EXPECT_EQ(field_of(R"({"n": 2, "B": [[0, 1], [1, 0]]})"), "B");
    EXPECT_EQ(field_of(R"({"n": 2, "B": [[0, 1], [-1, 0]], "R": [1, 0]})"), "R[1]");
    EXPECT_EQ(field_of(R"({"n": 2, "B": [[0, 1], [-1, 0]], "y0": ["1", "q"]})"), "y0[1]");
    EXPECT_EQ(field_of(R"({"n": 2, "B": [[0, 1], [-1, 0]], "R": [3, 1], "semifield": ["a", "b"],
                          "z": {"1": ["a", "b"]}})"),
              "z.1[0]");
    EXPECT_EQ(field_of(R"({"n": 2, "B": [[0, 1], [-1, 0]], "R": [2, 1]})"), "z.1");
    EXPECT_EQ(field_of(R"({"n": 2, "B": [[0, 1], [-1, 0]], "z": {"3": []}})"), "z.3");
    EXPECT_EQ(field_of(R"({"n": 2, "B": [[0, 1], [-1, 0]], "principal": true, "z": {}})"), "z");
    EXPECT_EQ(field_of(R"({"n": 2, "B": [[0, 1], [-1, 0]], "semifield": ["w", "w"]})"), "semifield");
    EXPECT_EQ(field_of(R"({"n": 2, "B": [[0, 1], [-1, 0]], "extra": 1})"), "extra");
    EXPECT_EQ(field_of("not json"), "");
    EXPECT_EQ(field_of(general), "<accepted>");
}

TEST(Config, NormalizedEchoRoundTrips) {
    const auto c = parse_config_text(general);
    const auto echoed = parse_config(to_json(c));
    EXPECT_EQ(echoed, c);
    EXPECT_EQ(make_pattern(echoed), make_pattern(c));
    EXPECT_EQ(to_json(c).dump(),
              R"({"B":[[0,1],[-1,0]],"R":[2,1],"n":2,"principal":false,"semifield":["w"],"y0":["w","w^-1"],"z":{"1":["w"]}})");
}

TEST(Config, PairConfig) {
    const auto doc = json::parse(R"({"left": {"n": 1, "B": [[0]]}, "right": {"n": 1, "B": [[1]]}})");
    EXPECT_TRUE(is_pair_document(doc));
    try {
        (void)parse_pair_config(doc);
        FAIL() << "accepted a bad right pattern";
    } catch (const config_error& e) {
        EXPECT_EQ(e.field(), "right.B");
    }
}

TEST(SeedDump, A2PathOne) {
    const auto c = parse_config_text(R"({"n": 2, "B": [[0, 1], [-1, 0]], "principal": true})");
    const auto p = make_pattern(c);
    const auto dump = seed_dump(c, p, parse_path("1", 2));
    EXPECT_EQ(dump["seed"]["x"][0], "x1^-1*x2 + y1*x1^-1");
    EXPECT_EQ(dump["seed"]["y"][0], "y1^-1");
    EXPECT_EQ(dump["D"].dump(), "[[1,0],[0,-1]]");
    EXPECT_EQ(dump["C"].dump(), "[[-1,0],[1,1]]");
    EXPECT_EQ(dump["G"].dump(), "[[-1,1],[0,1]]");
    EXPECT_EQ(dump["F"][0], "1 + y1");
    EXPECT_EQ(make_pattern(parse_config(dump["config"])), p);
    EXPECT_EQ(seed_dump(c, p, parse_path("1,1", 2))["seed"], seed_dump(c, p, {})["seed"]);
}

TEST(Paths, Parse) {
    EXPECT_EQ(parse_path("", 3), Path{});
    EXPECT_EQ(parse_path("1, 3,2", 3), (Path{0, 2, 1}));
    EXPECT_THROW(parse_path("4", 3), config_error);
    EXPECT_THROW(parse_path("0", 3), config_error);
    EXPECT_THROW(parse_path("a", 3), argument_error);
}

TEST(Export, DotAndJson) {
    const auto p = ClusterPattern::principal(ExchangeMatrix{{0, 1}, {-1, 0}}, {1, 1});
    const auto g = explore(p, {});
    std::ostringstream dot;
    write_dot(dot, g);
    const auto text = dot.str();
    EXPECT_EQ(text.rfind("graph exchange {", 0), 0u);
    EXPECT_EQ(std::count(text.begin(), text.end(), '\n'), 1 + 5 + 5 + 1);
    EXPECT_NE(text.find("v0 -- v1 [label=\"1\"]"), std::string::npos);
    const auto j = graph_json(g);
    EXPECT_EQ(j["vertex_count"], 5);
    EXPECT_EQ(j["edge_count"], 5);
    EXPECT_EQ(j["complete"], true);
    EXPECT_EQ(short_hash(""), "811c9dc5");
}

TEST(Export, ReportJson) {
    VerificationReport r;
    r.name = "demo";
    r.checked = 3;
    r.counts["vertices"] = 5;
    EXPECT_EQ(report_json(r).dump(),
              R"({"checked":3,"complete":true,"counts":{"vertices":5},"passed":true,"status":"pass","verifier":"demo","violations":[]})");
    r.violations.push_back("bad");
    EXPECT_EQ(report_json(r)["status"], "fail");
}
