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


#include "csg/document.hpp"

#include <fstream>
#include <sstream>

#include "json.hpp"

namespace csg {
namespace {

using nlohmann::json;

std::string where(const std::string& text, std::size_t byte) {
  std::size_t line = 1;
  std::size_t col = 1;
  for (std::size_t i = 0; i < byte && i < text.size(); ++i) {
    if (text[i] == '\n') {
      ++line;
      col = 1;
    } else {
      ++col;
    }
  }
  return "line " + std::to_string(line) + ", column " + std::to_string(col);
}

json parse_json(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    // byte is one past the offending character.
    std::size_t byte = e.byte > 0 ? e.byte - 1 : 0;
    throw ParseError("syntax error at " + where(text, byte) + ": " + e.what());
  }
}

const json& field(const json& obj, const char* key, const std::string& path) {
  if (!obj.is_object()) throw ValidationError(path + " must be an object");
  auto it = obj.find(key);
  if (it == obj.end()) throw ValidationError("missing field " + path + "/" + key);
  return *it;
}

Rational rational_of(const json& v, const std::string& path) {
  if (v.is_string()) {
    try {
      return parse_rational(v.get<std::string>());
    } catch (const ValidationError& e) {
      throw ValidationError(path + ": " + e.what());
    }
  }
  if (v.is_number_integer()) return Rational(Integer(v.dump()));
  throw ValidationError(path + ": expected a rational string such as \"1/2\"");
}

std::vector<std::string> names(const json& v, const std::string& path) {
  if (!v.is_array()) throw ValidationError(path + " must be an array of names");
  std::vector<std::string> out;
  for (const auto& x : v) {
    if (!x.is_string()) throw ValidationError(path + " must contain strings");
    out.push_back(x.get<std::string>());
  }
  return out;
}

std::size_t lookup(const std::vector<std::string>& list, const std::string& name, const std::string& path) {
  for (std::size_t i = 0; i < list.size(); ++i) {
    if (list[i] == name) return i;
  }
  throw ValidationError(path + ": unknown name \"" + name + "\"");
}

std::size_t as_index(const json& v, const std::string& path) {
  if (!v.is_number_integer() || v.get<long long>() < 1) throw ValidationError(path + ": expected a positive integer");
  return static_cast<std::size_t>(v.get<long long>());
}

}  // namespace

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ValidationError("cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

GameDocument parse_game_text(const std::string& text) {
  json doc = parse_json(text);
  if (!doc.is_object()) throw ValidationError("game document must be an object");
  GameSpec spec;
  spec.states = names(field(doc, "states", ""), "/states");
  spec.actions1 = names(field(doc, "actions1", ""), "/actions1");
  spec.actions2 = names(field(doc, "actions2", ""), "/actions2");
  const std::size_t n = spec.states.size();

  const json& trans = field(doc, "transitions", "");
  if (!trans.is_object()) throw ValidationError("/transitions must be an object");
  for (const auto& [sname, by_a] : trans.items()) {
    std::string ps = "/transitions/" + sname;
    std::size_t s = lookup(spec.states, sname, ps);
    if (!by_a.is_object()) throw ValidationError(ps + " must be an object");
    for (const auto& [aname, by_b] : by_a.items()) {
      std::string pa = ps + "/" + aname;
      std::size_t a = lookup(spec.actions1, aname, pa);
      if (!by_b.is_object()) throw ValidationError(pa + " must be an object");
      for (const auto& [bname, succ] : by_b.items()) {
        std::string pb = pa + "/" + bname;
        std::size_t b = lookup(spec.actions2, bname, pb);
        if (!succ.is_object()) throw ValidationError(pb + " must map successor states to probabilities");
        RationalVector row(n, Rational(0));
        for (const auto& [tname, p] : succ.items()) row[lookup(spec.states, tname, pb)] = rational_of(p, pb + "/" + tname);
        spec.transitions[{s, a, b}] = std::move(row);
      }
    }
  }

  if (auto it = doc.find("rewards"); it != doc.end()) {
    if (!it->is_object()) throw ValidationError("/rewards must be an object");
    for (const auto& [sname, by_a] : it->items()) {
      std::string ps = "/rewards/" + sname;
      std::size_t s = lookup(spec.states, sname, ps);
      if (!by_a.is_object()) throw ValidationError(ps + " must be an object");
      for (const auto& [aname, by_b] : by_a.items()) {
        std::string pa = ps + "/" + aname;
        std::size_t a = lookup(spec.actions1, aname, pa);
        if (!by_b.is_object()) throw ValidationError(pa + " must be an object");
        for (const auto& [bname, r] : by_b.items()) {
          spec.rewards[{s, a, lookup(spec.actions2, bname, pa + "/" + bname)}] = rational_of(r, pa + "/" + bname);
        }
      }
    }
  }

  if (auto it = doc.find("priorities"); it != doc.end()) {
    if (!it->is_object()) throw ValidationError("/priorities must be an object");
    std::vector<int> pr(n, -1);
    for (const auto& [sname, p] : it->items()) {
      std::string path = "/priorities/" + sname;
      if (!p.is_number_integer()) throw ValidationError(path + ": expected an integer");
      pr[lookup(spec.states, sname, path)] = p.get<int>();
    }
    for (std::size_t s = 0; s < n; ++s) {
      if (pr[s] < 0) throw ValidationError("missing or negative priority for state " + spec.states[s]);
    }
    spec.priorities = pr;
  }

  GameDocument out{validate_game(spec), std::nullopt, std::nullopt};

  if (auto it = doc.find("discounts"); it != doc.end()) {
    const json& d = *it;
    RationalVector factors;
    if (auto f = d.find("factors"); d.is_object() && f != d.end()) {
      if (!f->is_array()) throw ValidationError("/discounts/factors must be an array");
      for (std::size_t i = 0; i < f->size(); ++i) {
        factors.push_back(rational_of((*f)[i], "/discounts/factors/" + std::to_string(i)));
      }
    }
    const json& asg = field(d, "assignment", "/discounts");
    if (!asg.is_object()) throw ValidationError("/discounts/assignment must be an object");
    std::vector<std::size_t> index(n, 0);
    std::vector<bool> seen(n, false);
    std::size_t d_max = 0;
    for (const auto& [sname, v] : asg.items()) {
      std::string path = "/discounts/assignment/" + sname;
      std::size_t s = lookup(spec.states, sname, path);
      std::size_t k = as_index(v, path);
      index[s] = k - 1;
      seen[s] = true;
      d_max = std::max(d_max, k);
    }
    for (std::size_t s = 0; s < n; ++s) {
      if (!seen[s]) throw ValidationError("discount assignment misses state " + spec.states[s]);
    }
    std::size_t d_count = factors.empty() ? d_max : factors.size();
    Assignment chi{d_count, index};
    validate_assignment(out.game, chi);
    out.assignment = chi;
    if (!factors.empty()) {
      DiscountSpec disc{factors, index};
      validate_discount(out.game, disc);
      out.discount = disc;
    }
  }
  return out;
}

GameDocument parse_game(const std::string& path) { return parse_game_text(read_file(path)); }

std::string serialize_game(const GameDocument& doc) {
  const Game& g = doc.game;
  json out;
  out["states"] = g.state_names();
  out["actions1"] = g.action1_names();
  out["actions2"] = g.action2_names();
  json trans = json::object();
  json rewards = json::object();
  for (std::size_t s = 0; s < g.num_states(); ++s) {
    for (std::size_t a = 0; a < g.num_actions1(); ++a) {
      for (std::size_t b = 0; b < g.num_actions2(); ++b) {
        json succ = json::object();
        auto row = g.row(s, a, b);
        for (std::size_t t = 0; t < row.size(); ++t) {
          if (row[t] != 0) succ[g.state_names()[t]] = to_string(row[t]);
        }
        trans[g.state_names()[s]][g.action1_names()[a]][g.action2_names()[b]] = succ;
        if (g.has_rewards()) {
          rewards[g.state_names()[s]][g.action1_names()[a]][g.action2_names()[b]] = to_string(g.reward(s, a, b));
        }
      }
    }
  }
  out["transitions"] = trans;
  if (g.has_rewards()) out["rewards"] = rewards;
  if (g.priorities()) {
    json pr = json::object();
    for (std::size_t s = 0; s < g.num_states(); ++s) pr[g.state_names()[s]] = (*g.priorities())[s];
    out["priorities"] = pr;
  }
  if (doc.assignment || doc.discount) {
    json d = json::object();
    const std::vector<std::size_t>& index = doc.discount ? doc.discount->assignment : doc.assignment->index;
    if (doc.discount) {
      json f = json::array();
      for (const auto& l : doc.discount->factors) f.push_back(to_string(l));
      d["factors"] = f;
    }
    json asg = json::object();
    for (std::size_t s = 0; s < g.num_states(); ++s) asg[g.state_names()[s]] = index[s] + 1;
    d["assignment"] = asg;
    out["discounts"] = d;
  }
  return out.dump(2) + "\n";
}

namespace {

MixedStationary strategy_of(const Game& g, const json& v, Player p, const std::string& path) {
  if (!v.is_object()) throw ValidationError(path + " must be an object");
  MixedStationary st;
  st.player = p;
  st.rows.assign(g.num_states(), {});
  std::vector<bool> seen(g.num_states(), false);
  for (const auto& [sname, row] : v.items()) {
    std::string ps = path + "/" + sname;
    std::size_t s = lookup(g.state_names(), sname, ps);
    if (!row.is_array()) throw ValidationError(ps + " must be an array of probabilities");
    for (std::size_t i = 0; i < row.size(); ++i) st.rows[s].push_back(rational_of(row[i], ps + "/" + std::to_string(i)));
    seen[s] = true;
  }
  for (std::size_t s = 0; s < g.num_states(); ++s) {
    if (!seen[s]) throw ValidationError(path + " misses state " + g.state_names()[s]);
  }
  validate_strategy(g, st);
  return st;
}

}  // namespace

ValueCertificate parse_certificate_text(const Game& g, const std::string& text) {
  json doc = parse_json(text);
  if (!doc.is_object()) throw ValidationError("certificate must be an object");
  ValueCertificate c;
  const json& st = field(doc, "state", "");
  if (!st.is_string()) throw ValidationError("/state must be a state name");
  c.state = lookup(g.state_names(), st.get<std::string>(), "/state");
  c.sigma = strategy_of(g, field(doc, "sigma", ""), Player::kOne, "/sigma");
  c.tau = strategy_of(g, field(doc, "tau", ""), Player::kTwo, "/tau");
  const json& j = field(doc, "j", "");
  if (j.is_number_integer()) {
    c.j = Integer(j.dump());
  } else if (j.is_string()) {
    try {
      c.j = Integer(j.get<std::string>());
    } catch (const std::invalid_argument&) {
      throw ValidationError("/j must be an integer");
    }
  } else {
    throw ValidationError("/j must be an integer");
  }
  const json& k = field(doc, "kappa", "");
  if (!k.is_number_integer() || k.get<long long>() < 0) throw ValidationError("/kappa must be a nonnegative integer");
  c.kappa = k.get<std::uint64_t>();
  validate_certificate(g, c);
  return c;
}

ValueCertificate parse_certificate(const Game& g, const std::string& path) {
  return parse_certificate_text(g, read_file(path));
}

std::string serialize_certificate(const Game& g, const ValueCertificate& cert) {
  auto rows = [&](const MixedStationary& st) {
    json o = json::object();
    for (std::size_t s = 0; s < g.num_states(); ++s) {
      json r = json::array();
      for (const auto& p : st.rows[s]) r.push_back(to_string(p));
      o[g.state_names()[s]] = r;
    }
    return o;
  };
  json out;
  out["state"] = g.state_names()[cert.state];
  out["sigma"] = rows(cert.sigma);
  out["tau"] = rows(cert.tau);
  out["j"] = cert.j.get_str();
  out["kappa"] = cert.kappa;
  return out.dump(2) + "\n";
}

}  // namespace csg
