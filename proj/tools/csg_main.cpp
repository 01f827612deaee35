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


#include <iostream>

#include "CLI11.hpp"
#include "csg/commands.hpp"

int main(int argc, char** argv) {
  CLI::App app{"Exact solver for concurrent stochastic games"};
  app.require_subcommand(1);

  csg::SolveOptions solve;
  auto* s = app.add_subcommand("solve", "Approximate a discounted, limit or parity value");
  s->add_option("kind", solve.kind, "discounted | limit | parity")->required();
  s->add_option("--game", solve.game_path, "Game document")->required();
  s->add_option("--state", solve.state, "State name")->required();
  s->add_option("--epsilon", solve.epsilon, "Additive error, p/q or 2^-k")->required();
  s->add_option("--mode", solve.mode, "exact | ladder")->default_val("exact");
  s->add_option("--ladder", solve.ladder, "Decreasing lambda list for ladder mode");
  s->add_option("--emit-kernel", solve.emit_kernel, "Write W-matrix kernel entries as CSV");
  s->add_option("--priority-order", solve.priority_order, "outermost | innermost")->default_val("outermost");
  s->add_option("--max-states", solve.cap.n, "Exact-mode state cap")->default_val(3);
  s->add_option("--max-actions", solve.cap.m, "Exact-mode action cap")->default_val(2);
  s->add_option("--max-discounts", solve.cap.d, "Exact-mode discount-index cap")->default_val(2);

  csg::VerifyOptions verify;
  auto* v = app.add_subcommand("verify", "Check a value certificate");
  v->add_option("--game", verify.game_path, "Game document")->required();
  v->add_option("--cert", verify.cert_path, "Certificate document")->required();
  v->add_option("--epsilon", verify.epsilon, "2^-kappa")->required();

  csg::OracleOptions oracle;
  auto* o = app.add_subcommand("oracle", "Value-iteration intervals over a lambda ladder");
  o->add_option("--game", oracle.game_path, "Game document")->required();
  o->add_option("--state", oracle.state, "State name")->required();
  o->add_option("--ladder", oracle.ladder, "Decreasing lambda list")->required();
  o->add_option("--tol", oracle.tol, "Interval half-width")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : csg::kExitInvalid;
  }

  if (*s) return csg::cmd_solve(solve, std::cout, std::cerr);
  if (*v) return csg::cmd_verify(verify, std::cout, std::cerr);
  return csg::cmd_oracle(oracle, std::cout, std::cerr);
}
