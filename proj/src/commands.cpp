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


#include "csg/commands.hpp"

#include <chrono>
#include <fstream>
#include <functional>

#include "csg/certificates.hpp"
#include "csg/discounted.hpp"
#include "csg/document.hpp"
#include "csg/kernel.hpp"

namespace csg {
namespace {

int guarded(std::ostream& err, const std::function<int()>& body) {
  try {
    return body();
  } catch (const CapExceeded& e) {
    err << "error: " << e.what() << "\n";
    return kExitCap;
  } catch (const ValidationError& e) {
    err << "error: " << e.what() << "\n";
    return kExitInvalid;
  } catch (const Error& e) {
    err << "internal error: " << e.what() << "\n";
    return kExitInternal;
  }
}

std::string profile_label(const PureProfile& p) {
  std::string s;
  for (std::size_t i = 0; i < p.choice.size(); ++i) s += (i ? "." : "") + std::to_string(p.choice[i]);
  return s;
}

void emit_kernel(const std::string& path, const KernelCache& cache) {
  std::ofstream f(path);
  if (!f) throw ValidationError("cannot write " + path);
  f << "row,col,nabla_s,nabla\n";
  for (std::size_t i = 0; i < cache.rows().size(); ++i) {
    for (std::size_t j = 0; j < cache.cols().size(); ++j) {
      const KernelEntry& e = cache.entry(i, j);
      f << profile_label(cache.rows()[i]) << "," << profile_label(cache.cols()[j]) << "," << to_string(e.nabla_s)
        << "," << to_string(e.nabla) << "\n";
    }
  }
}

void report(std::ostream& out, const SolveOptions& opt, const Rational& value, const Rational& lo, const Rational& hi,
            std::size_t iterations, const Rational& eps) {
  out << "kind,state,mode,value_decimal,value_exact,lo,hi,iterations,epsilon\n";
  out << opt.kind << "," << opt.state << "," << opt.mode << "," << to_decimal(value) << "," << to_string(value) << ","
      << to_string(lo) << "," << to_string(hi) << "," << iterations << "," << to_string(eps) << "\n";
}

int solve_limit_like(const SolveOptions& opt, const Game& g, const Assignment& chi, std::size_t state,
                     const Rational& eps, std::ostream& out) {
  if (opt.mode == "exact") {
    check_exact_cap(g, chi, opt.cap);
    LimitConstants c = limit_constants(g, chi, eps);
    DiscountSpec disc = c.discount(chi);
    KernelCache cache(g, disc, state);
    if (opt.emit_kernel) emit_kernel(*opt.emit_kernel, cache);
    DiscountedResult r = approx_discounted(cache, pow2(-static_cast<std::int64_t>(c.kappa)) / 2);
    report(out, opt, r.value, r.bracket.lo, r.bracket.hi, r.bracket.iterations, eps);
    return kExitOk;
  }
  if (opt.mode == "ladder") {
    std::vector<Rational> ladder = opt.ladder ? parse_ladder(*opt.ladder) : default_ladder();
    LadderResult r = ladder_limit(g, state, chi, ladder, eps);
    std::size_t iters = 0;
    for (const auto& rung : r.rungs) iters += rung.bracket.iterations;
    const Bracket& last = r.rungs.back().bracket;
    report(out, opt, r.estimate, last.lo, last.hi, iters, eps);
    return kExitOk;
  }
  throw ValidationError("unknown mode " + opt.mode + " (expected exact or ladder)");
}

}  // namespace

Rational parse_quantity(const std::string& text) {
  if (text.rfind("2^", 0) == 0) {
    std::string e = text.substr(2);
    try {
      std::size_t used = 0;
      long long k = std::stoll(e, &used);
      if (used != e.size()) throw std::invalid_argument(e);
      return pow2(k);
    } catch (const std::logic_error&) {
      throw ValidationError("malformed power of two: " + text);
    }
  }
  return parse_rational(text);
}

std::vector<Rational> parse_ladder(const std::string& text) {
  std::vector<Rational> out;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t comma = text.find(',', start);
    if (comma == std::string::npos) comma = text.size();
    out.push_back(parse_quantity(text.substr(start, comma - start)));
    start = comma + 1;
  }
  return out;
}

int cmd_solve(const SolveOptions& opt, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    auto t0 = std::chrono::steady_clock::now();
    Rational eps = parse_quantity(opt.epsilon);
    if (sgn(eps) <= 0) throw ValidationError("epsilon must be positive");
    GameDocument doc = parse_game(opt.game_path);
    std::size_t state = doc.game.state_index(opt.state);
    int code = kExitOk;
    if (opt.kind == "discounted") {
      if (!doc.discount) throw ValidationError("discounted objective needs discounts.factors");
      if (!doc.game.has_rewards()) throw ValidationError("discounted objective needs rewards");
      if (opt.mode != "exact") throw ValidationError("discounted objective only supports exact mode");
      KernelCache cache(doc.game, *doc.discount, state);
      if (opt.emit_kernel) emit_kernel(*opt.emit_kernel, cache);
      DiscountedResult r = approx_discounted(cache, eps);
      report(out, opt, r.value, r.bracket.lo, r.bracket.hi, r.bracket.iterations, eps);
    } else if (opt.kind == "limit") {
      if (!doc.assignment) throw ValidationError("limit objective needs discounts.assignment");
      if (!doc.game.has_rewards()) throw ValidationError("limit objective needs rewards");
      code = solve_limit_like(opt, doc.game, *doc.assignment, state, eps, out);
    } else if (opt.kind == "parity") {
      PriorityOrder order;
      if (opt.priority_order == "outermost") {
        order = PriorityOrder::kOutermost;
      } else if (opt.priority_order == "innermost") {
        order = PriorityOrder::kInnermost;
      } else {
        throw ValidationError("unknown priority order " + opt.priority_order);
      }
      ParityReduction red = parity_to_limit(doc.game, order);
      code = solve_limit_like(opt, red.game, red.chi, state, eps, out);
    } else {
      throw ValidationError("unknown objective " + opt.kind + " (expected discounted, limit or parity)");
    }
    std::chrono::duration<double> dt = std::chrono::steady_clock::now() - t0;
    err << "wall_time_s=" << dt.count() << "\n";
    return code;
  });
}

int cmd_verify(const VerifyOptions& opt, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    Rational eps = parse_quantity(opt.epsilon);
    GameDocument doc = parse_game(opt.game_path);
    if (!doc.discount) throw ValidationError("verification needs discounts.factors");
    if (!doc.game.has_rewards()) throw ValidationError("verification needs rewards");
    ValueCertificate cert = parse_certificate(doc.game, opt.cert_path);
    CertificateCheck c = verify_certificate(doc.game, *doc.discount, cert, eps);
    out << "check,lhs,relation,rhs,holds\n";
    out << "lower," << to_string(c.lower_lhs) << ",<=," << to_string(c.lower_rhs) << ","
        << (c.lower_lhs <= c.lower_rhs ? "true" : "false") << "\n";
    out << "upper," << to_string(c.upper_lhs) << ",>=," << to_string(c.upper_rhs) << ","
        << (c.upper_lhs >= c.upper_rhs ? "true" : "false") << "\n";
    out << "verdict," << to_string(c.alpha) << ",," << (c.accepted ? "accept" : "reject") << ","
        << (c.accepted ? "true" : "false") << "\n";
    return c.accepted ? kExitOk : kExitRejected;
  });
}

int cmd_oracle(const OracleOptions& opt, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    Rational tol = parse_quantity(opt.tol);
    if (sgn(tol) <= 0) throw ValidationError("tolerance must be positive");
    std::vector<Rational> ladder = parse_ladder(opt.ladder);
    validate_ladder(ladder);
    GameDocument doc = parse_game(opt.game_path);
    if (!doc.game.has_rewards()) throw ValidationError("oracle needs rewards");
    std::size_t state = doc.game.state_index(opt.state);
    Assignment chi = doc.assignment ? *doc.assignment
                                    : Assignment{1, std::vector<std::size_t>(doc.game.num_states(), 0)};
    out << "lambda,lo,hi\n";
    std::vector<Rational> mids;
    for (const auto& lambda : ladder) {
      DiscountSpec disc;
      disc.assignment = chi.index;
      for (std::size_t i = 1; i <= chi.d; ++i) disc.factors.push_back(pow(lambda, i));
      OracleResult r = value_iteration_oracle(doc.game, disc, tol);
      const Interval& iv = r.intervals[state];
      out << to_string(lambda) << "," << to_string(iv.lo) << "," << to_string(iv.hi) << "\n";
      mids.push_back((iv.lo + iv.hi) / 2);
    }
    const std::size_t k = ladder.size();
    Rational est = extrapolate_to_zero(ladder[k - 2], mids[k - 2], ladder[k - 1], mids[k - 1]);
    est = std::clamp(est, Rational(0), Rational(1));
    out << "extrapolated," << to_string(est) << "," << to_string(est) << "\n";
    return kExitOk;
  });
}

}  // namespace csg
