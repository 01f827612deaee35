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


#ifndef CSG_DOCUMENT_HPP
#define CSG_DOCUMENT_HPP

#include <optional>
#include <string>

#include "csg/certificates.hpp"
#include "csg/game.hpp"
#include "csg/limit.hpp"

namespace csg {

/// Malformed document text; the message carries "line L, column C".
class ParseError : public ValidationError {
 public:
  using ValidationError::ValidationError;
};

struct GameDocument {
  Game game;
  std::optional<DiscountSpec> discount;   // when factors are given
  std::optional<Assignment> assignment;   // when an assignment is given
};

GameDocument parse_game_text(const std::string& text);
GameDocument parse_game(const std::string& path);

/// Canonical JSON text (rationals as "p/q" strings).
std::string serialize_game(const GameDocument& doc);

ValueCertificate parse_certificate_text(const Game& g, const std::string& text);
ValueCertificate parse_certificate(const Game& g, const std::string& path);
std::string serialize_certificate(const Game& g, const ValueCertificate& cert);

std::string read_file(const std::string& path);

}  // namespace csg

#endif  // CSG_DOCUMENT_HPP
