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

#include "uplab/serialize.hpp"

namespace uplab {

namespace {

Json int_or_null(int lower, int upper) { return lower == upper ? Json(lower) : Json(nullptr); }

Json optional_double(const std::optional<double>& v) { return v ? Json(*v) : Json(nullptr); }

}  // namespace

Json distance_json(u64 q, int n, const std::string& gen, int dim, const DistanceResult& d) {
  Json j;
  j["q"] = q;
  j["n"] = n;
  j["gen"] = gen;
  j["dim"] = dim;
  j["d_lower"] = d.lower;
  j["d_upper"] = d.upper;
  j["exact"] = d.exact();
  j["method"] = std::string(to_string(d.method));
  j["work"] = d.work;
  return j;
}

Json to_json(const CyclicCode& code, const DistanceResult& d) {
  return distance_json(code.q.q, code.n, code.gen.to_string(), code.dim, d);
}

Json to_json(const DivisorRecord& r, u64 q, int n) {
  Json j = distance_json(q, n, r.gen, r.dim, r.distance);
  j["pruned"] = r.pruned;
  j["source"] = r.source;
  return j;
}

Json to_json(const MuRecord& m) {
  Json j;
  j["q"] = m.q;
  j["n"] = m.n;
  j["mu"] = int_or_null(m.mu_lower, m.mu_upper);
  j["mu_lower"] = m.mu_lower;
  j["mu_upper"] = m.mu_upper;
  j["exact"] = m.exact();
  std::uint64_t work = 0;
  for (const auto& r : m.per_divisor) work += r.distance.work;
  j["work"] = work;
  j["witness"] = m.witness >= 0 ? to_json(m.per_divisor[static_cast<std::size_t>(m.witness)], m.q, m.n) : Json(nullptr);
  Json divs = Json::array();
  for (const auto& r : m.per_divisor) divs.push_back(to_json(r, m.q, m.n));
  j["divisors"] = std::move(divs);
  return j;
}

Json to_json(const StrongUpWitness& w) {
  Json j;
  j["p"] = w.p;
  j["q"] = w.q;
  j["q_primitive"] = w.q_primitive;
  j["theorem_applies"] = w.theorem_applies;
  j["decided"] = w.decided;
  if (w.witness) {
    Json wj = to_json(*w.witness, w.q, static_cast<int>(w.p));
    wj["d_plus_k"] = w.witness->distance.upper + w.witness->dim;
    j["witness"] = std::move(wj);
  } else {
    j["witness"] = nullptr;
  }
  if (w.mu_record) {
    j["mu"] = int_or_null(w.mu_record->mu_lower, w.mu_record->mu_upper);
    j["mu_lower"] = w.mu_record->mu_lower;
    j["mu_upper"] = w.mu_record->mu_upper;
  }
  return j;
}

Json to_json(const FFElem& x) { return x.coeffs(); }

Json to_json(const MSVector& v) {
  Json vals = Json::array();
  for (const auto& x : v.values) vals.push_back(to_json(x));
  return vals;
}

Json to_json(const NaiveUpScan& s) {
  Json j;
  j["n"] = s.n;
  j["q"] = s.q;
  j["mode"] = s.mode == ScanMode::exhaustive ? "exhaustive" : "random";
  j["words"] = s.words;
  j["min_product"] = s.min_product;
  j["argmin"] = format_word(s.argmin);
  j["equality_cases"] = s.equality_cases;
  j["violations"] = s.violations;
  return j;
}

Json to_json(const RamseyResult& r) {
  Json j;
  j["kind"] = r.params.kind == PatternKind::ap ? "ap" : "grid";
  j["n"] = r.params.n;
  Json params;
  if (r.params.kind == PatternKind::ap) {
    params["m"] = r.params.m;
  } else {
    params["delta"] = r.params.delta;
    params["s"] = r.params.s;
  }
  j["params"] = std::move(params);
  j["value"] = r.value;
  j["witness"] = r.witness;
  j["nodes"] = r.nodes;
  if (r.params.kind == PatternKind::ap) j["wraps"] = r.wraps;
  return j;
}

Json to_json(const ApBound& b) {
  Json j;
  j["kind"] = "ap_bound";
  j["n"] = b.n;
  j["value"] = b.value;
  j["argmin_m"] = b.argmin;
  j["r"] = b.r;
  return j;
}

Json to_json(const GridBound& b) {
  Json j;
  j["kind"] = "grid_bound";
  j["n"] = b.n;
  j["value"] = b.value;
  j["argmin_delta"] = b.argmin_delta;
  j["argmin_s"] = b.argmin_s;
  j["searches"] = b.searches;
  return j;
}

Json to_json(const WeakUPRow& r) {
  Json j;
  j["p"] = r.p;
  j["ord"] = r.ord;
  j["mu"] = int_or_null(r.mu_lower, r.mu_upper);
  j["mu_lower"] = r.mu_lower;
  j["mu_upper"] = r.mu_upper;
  j["cond_order"] = to_string(r.cond_order);
  j["cond_mu"] = to_string(r.cond_mu);
  j["both"] = r.both();
  return j;
}

Json to_json(const BallVolume& b) {
  Json j;
  j["n"] = b.n;
  j["alpha"] = b.alpha;
  j["q"] = b.q;
  j["radius"] = b.radius;
  j["exact"] = b.exact ? Json(b.exact->str()) : Json(nullptr);
  j["log2"] = b.log2_value;
  j["log2_approx"] = b.log2_approx;
  return j;
}

Json to_json(const FAlpha& f) {
  Json j;
  j["p"] = f.p;
  j["alpha"] = f.alpha;
  j["q"] = f.q;
  j["R"] = f.R;
  j["first"] = f.finite ? Json(f.first) : Json(nullptr);
  j["second"] = f.finite ? Json(f.second) : Json(nullptr);
  j["f"] = f.finite ? Json(f.value) : Json(nullptr);
  j["lhs_ln"] = optional_double(f.lhs_ln);
  j["rhs_ln"] = f.rhs_ln;
  j["inequality_holds"] = f.lhs_ln ? Json(*f.lhs_ln <= f.rhs_ln) : Json(nullptr);
  return j;
}

Json to_json(const ConstructionReport& c) {
  Json j;
  j["q"] = c.q;
  j["p"] = c.p;
  j["R"] = c.R;
  j["seed"] = c.seed;
  j["n"] = c.n;
  j["linear_factors"] = c.linear_factors;
  j["s"] = c.s;
  j["s_prime"] = c.s_prime;
  j["chosen"] = c.chosen;
  j["gen"] = c.gen;
  j["dim"] = c.dim;
  j["bch"] = c.bch;
  j["ht"] = c.ht;
  j["distance"] = distance_json(c.q, c.n, c.gen, c.dim, c.distance);
  j["rate"] = c.rate;
  j["lambda_exponent"] = c.lambda_exponent;
  j["ball"] = to_json(c.ball);
  j["binomial"] = c.binomial.str();
  j["stirling"] = c.stirling;
  j["stirling_ratio"] = c.stirling_ratio;
  return j;
}

}  // namespace uplab
