/*
 * Copyright 2026 The gcfloer Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 * http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#include <doctest.h>

#include <json.hpp>

#include "gcfloer/commands.hpp"
#include "gcfloer/config.hpp"
#include "gcfloer/error.hpp"
#include "gcfloer/report.hpp"
#include "support.hpp"

using namespace gcfloer;

namespace {

const Table& table(const Report& r, const std::string& title) {
  for (const auto& t : r.tables)
    if (t.title == title) return t;
  throw std::runtime_error("no table " + title);
}

}  // namespace

TEST_SUITE("config") {
  TEST_CASE("defaults and round trip") {
    const RunConfig c;
    CHECK(c.params.n == 3);
    CHECK(c.params.r == 5);
    CHECK(lift_order(c) == Rational(7, 2));
    const auto back = parse_config(config_to_json(c));
    CHECK(config_to_json(back) == config_to_json(c));
  }

  TEST_CASE("parsing") {
    const auto c = parse_config(R"({"n":4,"r":"17/2","lambda":[12,"1/2",-1],"grid":12,"truncation":"5"})");
    CHECK(c.params.n == 4);
    CHECK(c.params.r == Rational(17, 2));
    CHECK(c.params.lambda2 == Rational(1, 2));
    CHECK(c.grid == 12);
    CHECK(lift_order(c) == 5);
    auto code = [](const char* text) { return gcftest::error_code([&] { parse_config(text); }); };
    CHECK(code("{") == ErrorCode::Parse);
    CHECK(code(R"({"bogus":1})") == ErrorCode::Parse);
    CHECK(code(R"({"r":"1/0"})") == ErrorCode::Parse);
    CHECK(code(R"({"r":0.5})") == ErrorCode::Parse);
    CHECK(code(R"({"grid":1})") == ErrorCode::Parse);
    CHECK(code(R"({"t":0.5})") == ErrorCode::Parse);
    CHECK(code(R"({"lambda":[1,2]})") == ErrorCode::Parse);
    CHECK(code(R"({"format":"xml"})") == ErrorCode::Parse);
    CHECK(gcftest::error_code([] { load_config("/nonexistent/config.json"); }) == ErrorCode::Io);
  }

  TEST_CASE("overrides") {
    RunConfig c;
    set_config_value(c, "grid", "20");
    set_config_value(c, "seed", "7");
    set_config_value(c, "format", "json");
    set_config_value(c, "truncation", "9/2");
    CHECK(c.grid == 20);
    CHECK(c.seed == 7);
    CHECK(c.format == OutputFormat::Json);
    CHECK(lift_order(c) == Rational(9, 2));
    CHECK(gcftest::error_code([&] { set_config_value(c, "colour", "red"); }) == ErrorCode::Parse);
    CHECK(gcftest::error_code([&] { set_config_value(c, "seed", "-1"); }) == ErrorCode::Parse);
  }
}

TEST_SUITE("report") {
  TEST_CASE("csv rendering") {
    Report r;
    Table t{"A, b", {"x", "y"}, {}};
    t.add({"1", "a,\"q\""});
    r.tables.push_back(t);
    Table u{"B", {"z"}, {}};
    u.add({"3"});
    r.tables.push_back(u);
    CHECK(render_csv(r) == "# A, b\r\nx,y\r\n1,\"a,\"\"q\"\"\"\r\n\r\n# B\r\nz\r\n3\r\n");
    CHECK_THROWS_AS(t.add({"only one"}), Error);
  }

  TEST_CASE("json rendering") {
    Report r;
    r.status = 1;
    Table t{"T", {"x", "y"}, {}};
    t.add({"1", "2"});
    r.tables.push_back(t);
    const auto j = nlohmann::json::parse(render_json(r));
    CHECK(j["status"] == 1);
    CHECK(j["tables"][0]["title"] == "T");
    CHECK(j["tables"][0]["rows"][0]["y"] == "2");
    CHECK(render(r, OutputFormat::Json) == render_json(r));
  }
}

TEST_SUITE("commands") {
  TEST_CASE("fixture reports") {
    const RunConfig c;
    CHECK(cmd_validate(c).status == 0);
    const auto newton = cmd_newton(c);
    CHECK(newton.status == 0);
    const auto poly = cmd_polytope(c);
    CHECK(poly.status == 0);
    CHECK_FALSE(poly.tables.empty());
    const auto crit = cmd_crit(c, std::nullopt);
    const auto& odd = table(crit, "Critical points, odd n");
    REQUIRE(odd.rows.size() == 6);
    CHECK(odd.rows[4][4] == "-5ζ^2");
    CHECK(cmd_qh().status == 0);
    CHECK(cmd_clifford(3, "").status == 0);
    const auto degenerate = cmd_clifford(3, "1,0,1");
    CHECK(degenerate.tables.front().rows.front()[1] == "no");
    CHECK(degenerate.tables.front().rows.front()[3] != "1");
  }

  TEST_CASE("violating parameters") {
    RunConfig c;
    c.params.r = 3;
    CHECK(cmd_validate(c).status == 1);
  }

  TEST_CASE("root of unity labels") {
    const Complex w = gcftest::zeta();
    CHECK(root_of_unity_label(3.0) == "3");
    CHECK(root_of_unity_label(-5.0 * w) == "-5ζ");
    CHECK(root_of_unity_label(w * w) == "ζ^2");
  }
}
