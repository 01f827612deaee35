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


#ifndef CSG_COMMANDS_HPP
#define CSG_COMMANDS_HPP

#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "csg/limit.hpp"

namespace csg {

/// Process exit codes.
enum ExitCode : int {
  kExitOk = 0,
  kExitRejected = 1,
  kExitInvalid = 2,
  kExitCap = 3,
  kExitInternal = 4,
};

struct SolveOptions {
  std::string kind;  // discounted | limit | parity
  std::string game_path;
  std::string state;
  std::string epsilon;
  std::string mode = "exact";  // exact | ladder
  std::optional<std::string> ladder;
  std::optional<std::string> emit_kernel;
  std::string priority_order = "outermost";  // outermost | innermost
  SizeCap cap;
};

struct VerifyOptions {
  std::string game_path;
  std::string cert_path;
  std::string epsilon;
};

struct OracleOptions {
  std::string game_path;
  std::string state;
  std::string ladder;
  std::string tol;
};

/// "p/q", "p", or "2^-k".
Rational parse_quantity(const std::string& text);
/// Comma-separated quantities.
std::vector<Rational> parse_ladder(const std::string& text);

int cmd_solve(const SolveOptions& opt, std::ostream& out, std::ostream& err);
int cmd_verify(const VerifyOptions& opt, std::ostream& out, std::ostream& err);
int cmd_oracle(const OracleOptions& opt, std::ostream& out, std::ostream& err);

}  // namespace csg

#endif  // CSG_COMMANDS_HPP
