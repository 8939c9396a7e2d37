// Copyright 2026 The uplab Authors.
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

#include <cstdlib>
#include <functional>
#include <iostream>
#include <map>
#include <memory>

#include <CLI11.hpp>

#include "uplab/asymptotics.hpp"
#include "uplab/cli.hpp"
#include "uplab/errors.hpp"
#include "uplab/mstransform.hpp"
#include "uplab/polyring.hpp"
#include "uplab/ramsey.hpp"

#ifndef UPLAB_VERSION
#define UPLAB_VERSION "0.0.0"
#endif

namespace uplab::cli {

std::optional<int> reference_mu(u64 q, u64 p) {
  if (q != 2) return std::nullopt;
  static const std::map<u64, int> table = {
      {7, 7},   {17, 14}, {23, 19}, {31, 20}, {41, 30}, {43, 28},
      {47, 35}, {71, 47}, {73, 37}, {79, 55}, {89, 45}, {97, 64},
  };
  const auto it = table.find(p);
  if (it == table.end()) return std::nullopt;
  return it->second;
}

namespace {

struct Globals {
  std::string format = "json";
  std::uint64_t budget = std::uint64_t{1} << 28;
  int workers = 1;
  std::uint64_t seed = 1;
  std::string cache;
};

class Context {
 public:
  Context(const Globals& g, std::ostream& err) : g_(g), err_(err) {
    if (auto dir = resolve_cache_dir(g.cache, std::getenv("UPLAB_CACHE_DIR"))) {
      cache_ = std::make_unique<DistanceCache>(*dir / DistanceCache::kFileName, err);
    }
  }

  DistanceOptions distance() const {
    DistanceOptions o;
    o.budget = g_.budget;
    o.workers = g_.workers;
    return o;
  }

  MuOptions mu_options() const {
    MuOptions o;
    o.distance = distance();
    o.known = cache_ ? &cache_->snapshot() : nullptr;
    return o;
  }

  DistanceCache* cache() { return cache_.get(); }

  void store(const MuRecord& m) {
    if (!cache_) return;
    for (const auto& r : m.per_divisor) {
      if (r.source == "computed") cache_->put(m.q, m.n, r.gen, r.dim, r.distance);
    }
  }

  std::uint64_t seed() const { return g_.seed; }

 private:
  const Globals& g_;
  std::ostream& err_;
  std::unique_ptr<DistanceCache> cache_;
};

Report cmd_factor(int n, u64 q) {
  const CodeFamily family(n, q);
  const auto& sf = family.field();
  Report r;
  r.doc["n"] = n;
  r.doc["q"] = q;
  r.doc["m"] = sf.ext->ext_degree();
  r.doc["modulus"] = sf.ext->modulus();
  r.doc["zeta"] = to_json(sf.zeta);
  Json rows = Json::array();
  for (std::size_t i = 0; i < family.factors().size(); ++i) {
    Json f;
    f["coset"] = family.cosets().cosets[i];
    f["degree"] = family.factors()[i].degree();
    f["poly"] = family.factors()[i].to_string();
    f["irreducible"] = is_irreducible(family.factors()[i]);
    rows.push_back(std::move(f));
  }
  r.doc["factors"] = rows;
  r.rows = std::move(rows);
  return r;
}

Report cmd_mu(Context& ctx, int n, u64 q, bool prune) {
  MuOptions opts = ctx.mu_options();
  opts.prune = prune;
  opts.reuse_equivalent = prune;
  const MuRecord m = mu(n, q, opts);
  ctx.store(m);
  Report r;
  r.doc = to_json(m);
  r.rows = r.doc["divisors"];
  r.exit_code = m.exact() ? kOk : kPartial;
  return r;
}

Report cmd_mindist(Context& ctx, int n, u64 q, const std::string& gen) {
  const CodeFamily family(n, q);
  const CyclicCode code = family.code_from_generator(FPoly::parse(family.field().base, gen));
  const std::string key = code.gen.to_string();
  DistanceResult d;
  std::string source = "computed";
  if (const DistanceResult* hit = ctx.cache() ? ctx.cache()->snapshot().find(q, n, key) : nullptr) {
    d = *hit;
    d.work = 0;
    source = "cache";
  } else {
    d = min_distance(code, ctx.distance());
    if (ctx.cache()) ctx.cache()->put(q, n, key, code.dim, d);
  }
  Report r;
  r.doc = to_json(code, d);
  r.doc["bch"] = bch_bound(code.zeros, n);
  r.doc["ht"] = ht_bound(code.zeros, n);
  r.doc["zeros"] = code.zeros;
  r.doc["source"] = source;
  r.exit_code = d.exact() ? kOk : kPartial;
  return r;
}

Report cmd_ms(int n, u64 q, const std::string& digits) {
  const MSTransform t(n, q);
  const Word w = parse_word(digits, q);
  const MSVector v = t.forward(w);
  const NaiveUpCheck c = naive_up_check(t, w);
  Report r;
  r.doc["n"] = n;
  r.doc["q"] = q;
  r.doc["m"] = t.field().ext->ext_degree();
  r.doc["word"] = format_word(w);
  r.doc["w"] = c.w;
  r.doc["w_hat"] = c.w_hat;
  r.doc["product"] = c.product;
  r.doc["holds"] = c.holds;
  r.doc["conjugacy"] = t.conjugacy_holds(v);
  r.doc["values"] = to_json(v);
  r.exit_code = c.holds && t.conjugacy_holds(v) ? kOk : kInternal;
  return r;
}

Report cmd_up_scan(int n, u64 q, const std::string& mode, std::uint64_t trials, std::uint64_t seed) {
  ScanMode m;
  if (mode == "exhaustive") {
    m = ScanMode::exhaustive;
  } else if (mode == "random") {
    m = ScanMode::random;
  } else {
    throw DomainError("mode must be exhaustive or random");
  }
  const NaiveUpScan s = naive_up_scan(n, q, m, trials, seed);
  Report r;
  r.doc = to_json(s);
  if (m == ScanMode::random) r.doc["seed"] = seed;
  r.exit_code = s.violations == 0 ? kOk : kInternal;
  return r;
}

Report cmd_ramsey_bound(int n, u64 q, bool grid) {
  Report r;
  r.doc["n"] = n;
  r.doc["q"] = q;
  const bool prime = is_prime(static_cast<u64>(n));
  r.doc["prime"] = prime;
  // For composite n the m-scan is still defined but is not a lower bound on mu.
  const ApBound ap = prime ? prop_ram_lower(static_cast<u64>(n), q) : ap_scan_bound(n);
  r.doc["valid_lower_bound"] = prime;
  r.doc["ap"] = to_json(ap);
  if (grid) {
    if (!prime) throw DomainError("the grid bound needs a prime modulus");
    r.doc["grid"] = to_json(prop_ram_grid_lower(static_cast<u64>(n), q));
  }
  return r;
}

Report cmd_weak_up(Context& ctx, u64 q, double eps, double lambda, u64 p_max) {
  const auto rows = weak_up_scan(q, eps, lambda, p_max, ctx.mu_options());
  Report r;
  r.doc["q"] = q;
  r.doc["eps"] = eps;
  r.doc["lambda"] = lambda;
  r.doc["p_max"] = p_max;
  Json arr = Json::array();
  bool partial = false;
  for (const auto& row : rows) {
    arr.push_back(to_json(row));
    partial = partial || !row.mu_exact();
  }
  r.doc["rows"] = arr;
  r.rows = std::move(arr);
  r.exit_code = partial ? kPartial : kOk;
  return r;
}

Report cmd_witness(Context& ctx, u64 p, u64 q) {
  const StrongUpWitness w = strong_up_witness(p, q, ctx.distance());
  Report r;
  r.doc = to_json(w);
  r.exit_code = w.decided ? kOk : kPartial;
  return r;
}

Report cmd_table(Context& ctx, u64 q, const std::vector<u64>& primes) {
  Report r;
  Json rows = Json::array();
  bool mismatch = false;
  bool partial = false;
  for (u64 p : primes) {
    if (!is_prime(p)) throw DomainError("table: " + std::to_string(p) + " is not prime");
    const MuRecord m = mu(static_cast<int>(p), q, ctx.mu_options());
    ctx.store(m);
    const auto expected = reference_mu(q, p);
    std::uint64_t work = 0;
    for (const auto& d : m.per_divisor) work += d.distance.work;
    Json row;
    row["p"] = p;
    row["expected"] = expected ? Json(*expected) : Json(nullptr);
    row["mu"] = m.exact() ? Json(m.mu()) : Json(nullptr);
    row["mu_lower"] = m.mu_lower;
    row["mu_upper"] = m.mu_upper;
    row["witness"] = m.witness >= 0 ? Json(m.per_divisor[static_cast<std::size_t>(m.witness)].gen) : Json(nullptr);
    row["work"] = work;
    std::string status;
    if (!expected) {
      status = m.exact() ? "computed" : "partial";
      partial = partial || !m.exact();
    } else if (m.exact()) {
      status = m.mu() == *expected ? "match" : "mismatch";
    } else {
      status = m.mu_lower <= *expected && *expected <= m.mu_upper ? "bracket" : "mismatch";
    }
    mismatch = mismatch || status == "mismatch";
    row["status"] = status;
    rows.push_back(std::move(row));
  }
  r.doc["q"] = q;
  r.doc["rows"] = rows;
  r.doc["all_match"] = !mismatch;
  r.rows = std::move(rows);
  r.exit_code = mismatch ? kInternal : (partial ? kPartial : kOk);
  return r;
}

Report cmd_entropy(double x) {
  Report r;
  r.doc["x"] = x;
  r.doc["H"] = entropy(x);
  return r;
}

Report cmd_plotkin(u64 q, double step) {
  const Rational cap = plotkin_lambda_cap(q);
  Report r;
  r.doc["q"] = q;
  r.doc["cap"] = std::to_string(cap.num) + "/" + std::to_string(cap.den);
  r.doc["cap_value"] = cap.value();
  r.doc["grid_step"] = step;
  r.doc["grid_min"] = plotkin_grid_min(q, step);
  return r;
}

Report cmd_ball(u64 n, double alpha, u64 q) {
  Report r;
  r.doc = to_json(ball_volume_upper(n, alpha, q));
  return r;
}

Report cmd_lambda(double n, double p, double alpha, double R) {
  Report r;
  r.doc["n"] = n;
  r.doc["p"] = p;
  r.doc["alpha"] = alpha;
  r.doc["R"] = R;
  r.doc["log2_lambda"] = lambda_n_bound(n, p, alpha, R);
  return r;
}

Report cmd_falpha(const std::vector<u64>& primes, double alpha, u64 q, double R) {
  Report r;
  Json rows = Json::array();
  for (u64 p : primes) rows.push_back(to_json(f_alpha(p, alpha, q, R)));
  r.doc["rows"] = rows;
  r.rows = std::move(rows);
  return r;
}

Report cmd_construct(Context& ctx, u64 q, u64 p, double R, double alpha) {
  const ConstructionReport c = construction_demo(q, p, R, ctx.seed(), ctx.distance(), alpha);
  Report r;
  r.doc = to_json(c);
  r.exit_code = c.distance.exact() ? kOk : kPartial;
  return r;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Cyclic-code invariants and uncertainty principles over finite fields", "uplab"};
  app.set_version_flag("--version", UPLAB_VERSION);
  app.require_subcommand(1);
  app.fallthrough();

  Globals g;
  app.add_option("--format", g.format, "Output format: json, csv or table")
      ->check(CLI::IsMember({"json", "csv", "table"}));
  app.add_option("--budget", g.budget, "Codeword evaluations allowed per distance computation")
      ->check(CLI::PositiveNumber);
  app.add_option("--workers", g.workers, "Threads for exhaustive enumeration")->check(CLI::Range(1, 256));
  app.add_option("--seed", g.seed, "Seed for randomized choices");
  app.add_option("--cache", g.cache, "Cache directory (overrides UPLAB_CACHE_DIR)");

  std::function<Report(Context&)> action;
  int n = 0;
  u64 q = 2;
  u64 p = 0;
  std::string text;
  bool flag = false;
  std::uint64_t trials = 1000;
  double x = 0, alpha = 0.5, R = 0.5, eps = 0.2, lambda = 0.6, step = 1e-4;
  int m = 0, delta = 0, s = 0;
  std::vector<u64> primes;

  auto add_nq = [&](CLI::App* sub) {
    sub->add_option("--n", n, "Code length")->required()->check(CLI::PositiveNumber);
    sub->add_option("--q", q, "Field size (prime power)")->required();
  };

  auto* factor = app.add_subcommand("factor", "Factor x^n - 1 over F_q via cyclotomic cosets");
  add_nq(factor);
  factor->callback([&] { action = [&](Context&) { return cmd_factor(n, q); }; });

  auto* mu_cmd = app.add_subcommand("mu", "Compute mu(F_q, n) with a witness divisor");
  add_nq(mu_cmd);
  mu_cmd->add_flag("--no-prune", flag, "Compute every distance exactly");
  mu_cmd->callback([&] { action = [&](Context& c) { return cmd_mu(c, n, q, !flag); }; });

  auto* mindist = app.add_subcommand("mindist", "Minimum distance of the cyclic code C(gen)");
  add_nq(mindist);
  mindist->add_option("--gen", text, "Generator coefficients, lowest degree first")->required();
  mindist->callback([&] { action = [&](Context& c) { return cmd_mindist(c, n, q, text); }; });

  auto* ms = app.add_subcommand("ms", "Mattson-Solomon transform of a word");
  add_nq(ms);
  ms->add_option("--word", text, "Word as digits over F_q")->required();
  ms->callback([&] { action = [&](Context&) { return cmd_ms(n, q, text); }; });

  auto* up = app.add_subcommand("up-scan", "Check w(f) w(f_hat) >= n over many words");
  add_nq(up);
  text = "exhaustive";
  up->add_option("--mode", text, "exhaustive or random");
  up->add_option("--trials", trials, "Words drawn in random mode");
  up->callback([&] { action = [&](Context& c) { return cmd_up_scan(n, q, text, trials, c.seed()); }; });

  auto* ramsey = app.add_subcommand("ramsey", "Szemeredi-type extremal functions");
  ramsey->require_subcommand(1);
  auto* ap = ramsey->add_subcommand("ap", "r_m(n)");
  ap->add_option("--m", m)->required();
  ap->add_option("--n", n)->required();
  ap->callback([&] { action = [&](Context&) { return Report{to_json(szemeredi_r(m, n)), {}, kOk}; }; });
  auto* grid = ramsey->add_subcommand("grid", "r_{delta,s}(n)");
  grid->add_option("--delta", delta)->required();
  grid->add_option("--s", s)->required();
  grid->add_option("--n", n)->required();
  grid->callback(
      [&] { action = [&](Context&) { return Report{to_json(szemeredi_grid(delta, s, n)), {}, kOk}; }; });
  auto* bound = ramsey->add_subcommand("bound", "min over m of m + n - r_m(n)");
  add_nq(bound);
  bound->add_flag("--grid", flag, "Also compute the two-dimensional variant");
  bound->callback([&] { action = [&](Context&) { return cmd_ramsey_bound(n, q, flag); }; });

  auto* weak = app.add_subcommand("weak-up", "Scan primes for the (eps, lambda) conditions");
  weak->add_option("--q", q)->required();
  weak->add_option("--eps", eps)->required();
  weak->add_option("--lambda", lambda)->required();
  weak->add_option("--pmax", p)->required();
  weak->callback([&] { action = [&](Context& c) { return cmd_weak_up(c, q, eps, lambda, p); }; });

  auto* witness = app.add_subcommand("witness", "Find a divisor with d + k <= p, or confirm mu = p + 1");
  witness->add_option("--p", p)->required();
  witness->add_option("--q", q)->required();
  witness->callback([&] { action = [&](Context& c) { return cmd_witness(c, p, q); }; });

  auto* table = app.add_subcommand("table", "Recompute mu(F_q, p) and compare with reference values");
  table->add_option("--q", q)->required();
  table->add_option("--primes", primes)->required()->delimiter(',');
  table->callback([&] { action = [&](Context& c) { return cmd_table(c, q, primes); }; });

  auto* asym = app.add_subcommand("asym", "Counting formulas");
  asym->require_subcommand(1);
  auto* ent = asym->add_subcommand("entropy", "Binary entropy H(x)");
  ent->add_option("--x", x)->required();
  ent->callback([&] { action = [&](Context&) { return cmd_entropy(x); }; });
  auto* plot = asym->add_subcommand("plotkin", "Cap on lambda from the asymptotic Plotkin bound");
  plot->add_option("--q", q)->required();
  plot->add_option("--step", step);
  plot->callback([&] { action = [&](Context&) { return cmd_plotkin(q, step); }; });
  auto* ball = asym->add_subcommand("ball", "Hamming ball volume bound");
  ball->add_option("--n", p)->required();
  ball->add_option("--alpha", alpha)->required();
  ball->add_option("--q", q)->required();
  ball->callback([&] { action = [&](Context&) { return cmd_ball(p, alpha, q); }; });
  auto* lam = asym->add_subcommand("lambda", "Exponent of the generator count bound");
  lam->add_option("--n", x)->required();
  lam->add_option("--p", eps)->required();
  lam->add_option("--alpha", alpha)->required();
  lam->add_option("--R", R)->required();
  lam->callback([&] { action = [&](Context&) { return cmd_lambda(x, eps, alpha, R); }; });
  auto* fa = asym->add_subcommand("falpha", "Leading terms of f_{alpha,q,R}(p)");
  fa->add_option("--p", primes)->required()->delimiter(',');
  fa->add_option("--alpha", alpha)->required();
  fa->add_option("--q", q);
  fa->add_option("--R", R);
  fa->callback([&] { action = [&](Context&) { return cmd_falpha(primes, alpha, q, R); }; });
  auto* cons = asym->add_subcommand("construct", "Build C(g_I) for n = q^p - 1");
  cons->add_option("--q", q)->required();
  cons->add_option("--p", p)->required();
  cons->add_option("--R", R);
  alpha = 0.4;
  cons->add_option("--alpha", alpha);
  cons->callback([&] { action = [&](Context& c) { return cmd_construct(c, q, p, R, alpha); }; });

  std::vector<std::string> args;
  for (int i = argc - 1; i > 0; --i) args.emplace_back(argv[i]);
  try {
    app.parse(args);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  try {
    Context ctx(g, err);
    const Report r = action(ctx);
    render(r, *parse_format(g.format), out);
    return r.exit_code;
  } catch (const DomainError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const CapacityError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const InternalError& e) {
    err << "internal error: " << e.what() << '\n';
    return kInternal;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << '\n';
    return kInternal;
  }
}

}  // namespace uplab::cli
