// Copyright 2026 The CSG Solver Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


#include <cstdio>
#include <fstream>
#include <sstream>

#include "csg/commands.hpp"
#include "csg/document.hpp"
#include "doctest.h"
#include "support.hpp"

using namespace csg;
using csg::testing::fixture;

namespace {

std::string temp_file(const std::string& name, const std::string& text) {
  std::string path = std::string(CSG_BINARY_DIR) + "/" + name;
  std::ofstream(path) << text;
  return path;
}

std::vector<std::vector<std::string>> csv(const std::string& text) {
  std::vector<std::vector<std::string>> rows;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    std::vector<std::string> cells;
    std::string cell;
    std::istringstream ls(line);
    while (std::getline(ls, cell, ',')) cells.push_back(cell);
    if (!line.empty() && line.back() == ',') cells.emplace_back();
    rows.push_back(cells);
  }
  return rows;
}

}  // namespace

TEST_SUITE("cli") {
  TEST_CASE("parse documents") {
    GameDocument min = parse_game(fixture("minimal.json"));
    CHECK(min.game.num_states() == 1);
    CHECK(min.discount->factors == RationalVector{Rational(1, 2)});

    try {
      parse_game(fixture("bad_row_sum.json"));
      FAIL("expected a validation error");
    } catch (const ValidationError& e) {
      std::string msg = e.what();
      CHECK(msg.find("row sum") != std::string::npos);
      CHECK(msg.find("state s") != std::string::npos);
    }

    GameDocument bm = parse_game(fixture("big_match.json"));
    CHECK(bm.game.num_states() == 3);
    CHECK(bm.game.num_actions1() == 2);
    CHECK(bm.game.num_actions2() == 2);
  }

  TEST_CASE("syntax errors carry line and column") {
    try {
      parse_game_text("{\n  \"states\": [\"s\"],\n  \"actions1\": [\"a\"] \"x\"\n}");
      FAIL("expected a parse error");
    } catch (const ParseError& e) {
      CHECK(std::string(e.what()).find("line 3, column 23") != std::string::npos);
    }
    CHECK_THROWS_AS(parse_game_text("{\"states\": [\"s\"]}"), ValidationError);
  }

  TEST_CASE("round trip") {
    for (const char* name : {"minimal.json", "big_match.json", "parity_even.json", "absorb_one.json",
                             "matching_pennies.json"}) {
      GameDocument a = parse_game(fixture(name));
      std::string text = serialize_game(a);
      GameDocument b = parse_game_text(text);
      CAPTURE(name);
      CHECK(serialize_game(b) == text);
      CHECK(b.game.to_spec().transitions == a.game.to_spec().transitions);
      CHECK(b.game.to_spec().rewards == a.game.to_spec().rewards);
      CHECK(b.game.priorities() == a.game.priorities());
    }
    Game mp = parse_game(fixture("matching_pennies.json")).game;
    ValueCertificate c = parse_certificate(mp, fixture("cert_uniform.json"));
    ValueCertificate d = parse_certificate_text(mp, serialize_certificate(mp, c));
    CHECK(d.j == c.j);
    CHECK(d.sigma.rows == c.sigma.rows);
  }

  TEST_CASE("quantities") {
    CHECK(parse_quantity("2^-7") == pow2(-7));
    CHECK(parse_quantity("3/12") == Rational(1, 4));
    CHECK_THROWS_AS(parse_quantity("2^x"), ValidationError);
    CHECK(parse_ladder("1/4,2^-3") == RationalVector{Rational(1, 4), Rational(1, 8)});
  }

  TEST_CASE("solve discounted") {
    std::ostringstream out, err;
    SolveOptions opt;
    opt.kind = "discounted";
    opt.game_path = fixture("matching_pennies.json");
    opt.state = "s";
    opt.epsilon = "1/128";
    opt.emit_kernel = std::string(CSG_BINARY_DIR) + "/kernel.csv";
    REQUIRE(cmd_solve(opt, out, err) == kExitOk);
    auto rows = csv(out.str());
    REQUIRE(rows.size() == 2);
    CHECK(rows[0] == std::vector<std::string>{"kind", "state", "mode", "value_decimal", "value_exact", "lo", "hi",
                                              "iterations", "epsilon"});
    CHECK(abs(parse_rational(rows[1][4]) - Rational(1, 2)) <= Rational(1, 128));
    CHECK(rows[1][7] == "7");
    CHECK(err.str().find("wall_time_s=") != std::string::npos);
    CHECK(csv(read_file(*opt.emit_kernel)).size() == 5);

    std::ostringstream again;
    cmd_solve(opt, again, err);
    CHECK(again.str() == out.str());
  }

  TEST_CASE("solve parity and limit") {
    std::ostringstream out, err;
    SolveOptions opt;
    opt.kind = "parity";
    opt.game_path = temp_file("single_even.json",
                              R"({"states":["s"],"actions1":["a"],"actions2":["b"],)"
                              R"("transitions":{"s":{"a":{"b":{"s":"1"}}}},"priorities":{"s":0}})");
    opt.state = "s";
    opt.epsilon = "2^-3";
    REQUIRE(cmd_solve(opt, out, err) == kExitOk);
    CHECK(abs(parse_rational(csv(out.str())[1][4]) - 1) <= Rational(1, 8));

    std::ostringstream lo, le;
    SolveOptions lim;
    lim.kind = "limit";
    lim.game_path = fixture("big_match.json");
    lim.state = "play";
    lim.epsilon = "1/32";
    lim.mode = "ladder";
    REQUIRE(cmd_solve(lim, lo, le) == kExitOk);
    CHECK(abs(parse_rational(csv(lo.str())[1][4]) - Rational(1, 2)) <= Rational(1, 32));
  }

  TEST_CASE("exit codes") {
    std::ostringstream out, err;
    SolveOptions bad;
    bad.kind = "discounted";
    bad.game_path = fixture("bad_row_sum.json");
    bad.state = "s";
    bad.epsilon = "1/8";
    CHECK(cmd_solve(bad, out, err) == kExitInvalid);
    bad.game_path = fixture("missing.json");
    CHECK(cmd_solve(bad, out, err) == kExitInvalid);
    bad.game_path = fixture("matching_pennies.json");
    bad.kind = "bogus";
    CHECK(cmd_solve(bad, out, err) == kExitInvalid);

    SolveOptions capped;
    capped.kind = "limit";
    capped.game_path = fixture("big_match.json");
    capped.state = "play";
    capped.epsilon = "1/8";
    capped.cap.n = 2;
    CHECK(cmd_solve(capped, out, err) == kExitCap);
  }

  TEST_CASE("verify") {
    std::ostringstream out, err;
    VerifyOptions opt{fixture("matching_pennies.json"), fixture("cert_uniform.json"), "2^-2"};
    CHECK(cmd_verify(opt, out, err) == kExitOk);
    auto rows = csv(out.str());
    REQUIRE(rows.size() == 4);
    CHECK(rows[1][0] == "lower");
    CHECK(rows[1][1] == "5/16");
    CHECK(rows[1][3] == "7/16");
    CHECK(rows[3][3] == "accept");

    std::ostringstream o2;
    opt.cert_path = fixture("cert_alpha_one.json");
    CHECK(cmd_verify(opt, o2, err) == kExitRejected);
    opt.cert_path = temp_file("broken_cert.json", "{\"state\": \"s\", \"j\": 1}");
    CHECK(cmd_verify(opt, o2, err) == kExitInvalid);
  }

  TEST_CASE("oracle") {
    std::ostringstream out, err;
    OracleOptions opt{fixture("constant.json"), "s", "1/4,1/8,1/16", "1/1000"};
    REQUIRE(cmd_oracle(opt, out, err) == kExitOk);
    auto rows = csv(out.str());
    REQUIRE(rows.size() == 5);
    CHECK(rows[0] == std::vector<std::string>{"lambda", "lo", "hi"});
    for (std::size_t i = 1; i <= 3; ++i) {
      Rational lo = parse_rational(rows[i][1]), hi = parse_rational(rows[i][2]);
      CHECK(lo <= Rational(3, 4));
      CHECK(Rational(3, 4) <= hi);
      CHECK(hi - lo <= Rational(2, 1000));
    }
    CHECK(rows[4][0] == "extrapolated");

    opt.ladder = "1/8,1/4";
    CHECK(cmd_oracle(opt, out, err) == kExitInvalid);
  }
}
