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

#include <algorithm>
#include <array>
#include <bit>
#include <climits>
#include <type_traits>
#include <thread>

#include "uplab/cyclic.hpp"
#include "uplab/errors.hpp"

namespace uplab {

std::string_view to_string(DistanceMethod m) {
  switch (m) {
    case DistanceMethod::exhaustive:
      return "exhaustive";
    case DistanceMethod::bz:
      return "bz";
    case DistanceMethod::bch_only:
      return "bch_only";
  }
  return "unknown";
}

std::optional<DistanceMethod> parse_distance_method(std::string_view s) {
  if (s == "exhaustive") return DistanceMethod::exhaustive;
  if (s == "bz") return DistanceMethod::bz;
  if (s == "bch_only") return DistanceMethod::bch_only;
  return std::nullopt;
}

namespace {

constexpr std::uint64_t kSaturated = UINT64_MAX;

std::uint64_t sat_mul(std::uint64_t a, std::uint64_t b) {
  if (a != 0 && b > kSaturated / a) return kSaturated;
  return a * b;
}

std::uint64_t binomial_sat(int n, int k) {
  if (k < 0 || k > n) return 0;
  k = std::min(k, n - k);
  u128 r = 1;
  for (int i = 1; i <= k; ++i) {
    r = r * static_cast<u128>(n - k + i) / static_cast<u128>(i);
    if (r > kSaturated) return kSaturated;
  }
  return static_cast<std::uint64_t>(r);
}

// Addition and multiplication tables for F_q, q <= 256, indexed by packed value.
class SymbolField {
 public:
  explicit SymbolField(const FieldCtx& f) : q_(static_cast<int>(f.size())) {
    const auto q = static_cast<std::size_t>(q_);
    add_.resize(q * q);
    mul_.resize(q * q);
    neg_.resize(q);
    inv_.resize(q, 0);
    for (std::size_t a = 0; a < q; ++a) {
      neg_[a] = static_cast<std::uint8_t>(f.neg(a));
      if (a) inv_[a] = static_cast<std::uint8_t>(f.inv(a));
      for (std::size_t b = 0; b < q; ++b) {
        add_[a * q + b] = static_cast<std::uint8_t>(f.add(a, b));
        mul_[a * q + b] = static_cast<std::uint8_t>(f.mul(a, b));
      }
    }
  }

  int q() const { return q_; }
  std::uint8_t add(std::uint8_t a, std::uint8_t b) const { return add_[a * q_ + b]; }
  std::uint8_t sub(std::uint8_t a, std::uint8_t b) const { return add_[a * q_ + neg_[b]]; }
  std::uint8_t mul(std::uint8_t a, std::uint8_t b) const { return mul_[a * q_ + b]; }
  std::uint8_t inv(std::uint8_t a) const { return inv_[a]; }

 private:
  int q_;
  std::vector<std::uint8_t> add_, mul_, neg_, inv_;
};

using SymbolRow = std::vector<std::uint8_t>;

std::vector<SymbolRow> generator_rows(const CyclicCode& code) {
  const auto g = code.gen.coeffs();
  std::vector<SymbolRow> rows(static_cast<std::size_t>(code.dim), SymbolRow(static_cast<std::size_t>(code.n), 0));
  for (int i = 0; i < code.dim; ++i) {
    for (std::size_t j = 0; j < g.size(); ++j) rows[i][i + j] = static_cast<std::uint8_t>(g[j]);
  }
  return rows;
}

// Row-reduces a full-rank matrix, taking pivot columns in the given order.
std::vector<int> reduce(std::vector<SymbolRow>& rows, std::span<const int> order, const SymbolField& F) {
  const std::size_t k = rows.size();
  std::vector<int> pivots;
  std::size_t rank = 0;
  for (int col : order) {
    if (rank == k) break;
    std::size_t r = rank;
    while (r < k && rows[r][col] == 0) ++r;
    if (r == k) continue;
    std::swap(rows[r], rows[rank]);
    const std::uint8_t s = F.inv(rows[rank][col]);
    for (auto& x : rows[rank]) x = F.mul(x, s);
    for (std::size_t i = 0; i < k; ++i) {
      if (i == rank || rows[i][col] == 0) continue;
      const std::uint8_t c = rows[i][col];
      for (std::size_t j = 0; j < rows[i].size(); ++j) rows[i][j] = F.sub(rows[i][j], F.mul(c, rows[rank][j]));
    }
    pivots.push_back(col);
    ++rank;
  }
  if (rank != k) throw InternalError("generator matrix is rank deficient");
  return pivots;
}

template <int W>
class BinaryBasis {
 public:
  using Word = std::array<std::uint64_t, W>;
  static constexpr bool kBinary = true;

  explicit BinaryBasis(const std::vector<SymbolRow>& rows) {
    rows_.reserve(rows.size());
    for (const auto& r : rows) {
      Word w{};
      for (std::size_t j = 0; j < r.size(); ++j) {
        if (r[j]) w[j / 64] |= std::uint64_t{1} << (j % 64);
      }
      rows_.push_back(w);
    }
  }

  Word zero() const { return Word{}; }
  void add(Word& acc, int i, std::uint8_t) const {
    for (int k = 0; k < W; ++k) acc[k] ^= rows_[i][k];
  }
  int weight(const Word& w) const {
    int s = 0;
    for (int k = 0; k < W; ++k) s += std::popcount(w[k]);
    return s;
  }

 private:
  std::vector<Word> rows_;
};

class QaryBasis {
 public:
  using Word = std::vector<std::uint8_t>;
  static constexpr bool kBinary = false;

  QaryBasis(const std::vector<SymbolRow>& rows, const SymbolField& F) : F_(&F), q_(F.q()) {
    n_ = rows.empty() ? 0 : static_cast<int>(rows[0].size());
    for (const auto& r : rows) {
      std::vector<int> supp;
      for (int j = 0; j < n_; ++j) {
        if (r[j]) supp.push_back(j);
      }
      support_.push_back(std::move(supp));
      for (int s = 0; s < q_; ++s) {
        SymbolRow scaled(r.size());
        for (std::size_t j = 0; j < r.size(); ++j) scaled[j] = F.mul(static_cast<std::uint8_t>(s), r[j]);
        scaled_.push_back(std::move(scaled));
      }
    }
  }

  Word zero() const { return Word(static_cast<std::size_t>(n_), 0); }
  void add(Word& acc, int i, std::uint8_t s) const {
    const auto& r = scaled_[static_cast<std::size_t>(i) * q_ + s];
    for (int j : support_[i]) acc[j] = F_->add(acc[j], r[j]);
  }
  int weight(const Word& w) const {
    return static_cast<int>(std::count_if(w.begin(), w.end(), [](std::uint8_t c) { return c != 0; }));
  }

 private:
  const SymbolField* F_;
  int q_;
  int n_ = 0;
  std::vector<std::vector<int>> support_;
  std::vector<SymbolRow> scaled_;
};

// F_3 codewords as two bit planes (symbol == 1, symbol == 2), 64 coordinates
// per word.
template <int W>
class TernaryBasis {
 public:
  struct Word {
    std::array<std::uint64_t, W> one{}, two{};
  };
  static constexpr bool kBinary = false;

  explicit TernaryBasis(const std::vector<SymbolRow>& rows) {
    for (const auto& r : rows) {
      Word w1, w2;
      for (std::size_t j = 0; j < r.size(); ++j) {
        const std::uint64_t b = std::uint64_t{1} << (j % 64);
        if (r[j] == 1) {
          w1.one[j / 64] |= b;
          w2.two[j / 64] |= b;
        } else if (r[j] == 2) {
          w1.two[j / 64] |= b;
          w2.one[j / 64] |= b;
        }
      }
      scaled_.push_back(w1);
      scaled_.push_back(w2);
    }
  }

  Word zero() const { return Word{}; }
  void add(Word& acc, int i, std::uint8_t s) const {
    const Word& r = scaled_[static_cast<std::size_t>(i) * 2 + (s - 1)];
    for (int k = 0; k < W; ++k) {
      const std::uint64_t a1 = acc.one[k], a2 = acc.two[k], b1 = r.one[k], b2 = r.two[k];
      const std::uint64_t za = ~(a1 | a2), zb = ~(b1 | b2);
      acc.one[k] = (a1 & zb) | (za & b1) | (a2 & b2);
      acc.two[k] = (a2 & zb) | (za & b2) | (a1 & b1);
    }
  }
  int weight(const Word& w) const {
    int s = 0;
    for (int k = 0; k < W; ++k) s += std::popcount(w.one[k] | w.two[k]);
    return s;
  }

 private:
  std::vector<Word> scaled_;
};

// F_4 codewords as two bit planes of the packed symbol; addition is XOR and
// the three nonzero multiples of each row are precomputed.
template <int W>
class QuaternaryBasis {
 public:
  struct Word {
    std::array<std::uint64_t, W> lo{}, hi{};
  };
  static constexpr bool kBinary = false;

  QuaternaryBasis(const std::vector<SymbolRow>& rows, const SymbolField& F) {
    for (const auto& r : rows) {
      for (int s = 1; s < 4; ++s) {
        Word w;
        for (std::size_t j = 0; j < r.size(); ++j) {
          const std::uint8_t v = F.mul(static_cast<std::uint8_t>(s), r[j]);
          const std::uint64_t b = std::uint64_t{1} << (j % 64);
          if (v & 1) w.lo[j / 64] |= b;
          if (v & 2) w.hi[j / 64] |= b;
        }
        scaled_.push_back(w);
      }
    }
  }

  Word zero() const { return Word{}; }
  void add(Word& acc, int i, std::uint8_t s) const {
    const Word& r = scaled_[static_cast<std::size_t>(i) * 3 + (s - 1)];
    for (int k = 0; k < W; ++k) {
      acc.lo[k] ^= r.lo[k];
      acc.hi[k] ^= r.hi[k];
    }
  }
  int weight(const Word& w) const {
    int s = 0;
    for (int k = 0; k < W; ++k) s += std::popcount(w.lo[k] | w.hi[k]);
    return s;
  }

 private:
  std::vector<Word> scaled_;
};

struct Scan {
  int best = INT_MAX;
  std::uint64_t work = 0;
  bool stopped = false;
};

// Messages gray(t) for t in [begin, end) over a binary basis of k rows.
template <int W>
Scan gray_binary(const BinaryBasis<W>& B, int k, std::uint64_t begin, std::uint64_t end, int stop_upper) {
  Scan s;
  auto acc = B.zero();
  const std::uint64_t g = begin ^ (begin >> 1);
  for (int i = 0; i < k; ++i) {
    if (g >> i & 1) B.add(acc, i, 1);
  }
  if (begin != 0) {
    s.best = B.weight(acc);
    s.work = 1;
  }
  for (std::uint64_t t = begin + 1; t < end; ++t) {
    B.add(acc, std::countr_zero(t), 1);
    const int w = B.weight(acc);
    ++s.work;
    if (w < s.best) {
      s.best = w;
      if (w <= stop_upper) {
        s.stopped = true;
        break;
      }
    }
  }
  return s;
}

// Modular q-ary Gray code: stepping t -> t+1 adds 1 (mod q) to digit j, the
// lowest digit of t that is not q - 1.
template <class Basis>
Scan gray_qary(const Basis& B, const SymbolField& F, int k, std::uint64_t begin, std::uint64_t end,
               int stop_upper) {
  Scan s;
  const int q = F.q();
  std::vector<int> t(static_cast<std::size_t>(k) + 1, 0);
  std::uint64_t v = begin;
  for (int i = 0; i < k; ++i) {
    t[i] = static_cast<int>(v % q);
    v /= q;
  }
  std::vector<int> g(static_cast<std::size_t>(k), 0);
  auto acc = B.zero();
  for (int i = 0; i < k; ++i) {
    g[i] = ((t[i] - t[i + 1]) % q + q) % q;
    if (g[i]) B.add(acc, i, static_cast<std::uint8_t>(g[i]));
  }
  if (begin != 0) {
    s.best = B.weight(acc);
    s.work = 1;
  }
  std::array<std::uint8_t, 256> step{};  // step[v] = (v + 1 mod q) - v in F_q
  for (int v = 0; v < q; ++v) step[v] = F.sub(static_cast<std::uint8_t>((v + 1) % q), static_cast<std::uint8_t>(v));
  for (std::uint64_t idx = begin + 1; idx < end; ++idx) {
    int j = 0;
    while (t[j] == q - 1) t[j++] = 0;
    ++t[j];
    const std::uint8_t delta = step[g[j]];
    g[j] = g[j] + 1 == q ? 0 : g[j] + 1;
    B.add(acc, j, delta);
    const int w = B.weight(acc);
    ++s.work;
    if (w < s.best) {
      s.best = w;
      if (w <= stop_upper) {
        s.stopped = true;
        break;
      }
    }
  }
  return s;
}

template <class ScanFn>
Scan parallel_scan(std::uint64_t total, int workers, ScanFn&& scan) {
  constexpr std::uint64_t kMinPerWorker = 1 << 16;
  std::uint64_t parts = static_cast<std::uint64_t>(std::max(1, workers));
  parts = std::min(parts, std::max<std::uint64_t>(1, total / kMinPerWorker));
  if (parts <= 1) return scan(0, total);
  std::vector<Scan> results(parts);
  std::vector<std::thread> threads;
  for (std::uint64_t i = 0; i < parts; ++i) {
    const std::uint64_t b = total / parts * i;
    const std::uint64_t e = i + 1 == parts ? total : total / parts * (i + 1);
    threads.emplace_back([&, i, b, e] { results[i] = scan(b, e); });
  }
  for (auto& th : threads) th.join();
  Scan merged;
  for (const auto& r : results) {
    merged.best = std::min(merged.best, r.best);
    merged.work += r.work;
    merged.stopped = merged.stopped || r.stopped;
  }
  return merged;
}

// Depth-first enumeration of all messages of weight exactly w whose first
// nonzero coordinate is 1 (scalar multiples share a weight).
template <class Basis>
class WeightEnumerator {
 public:
  WeightEnumerator(const Basis& B, int k, int q) : B_(B), k_(k), q_(q) {}

  void run(int w, int& best, std::uint64_t& work) {
    w_ = w;
    stack_.assign(static_cast<std::size_t>(w) + 1, B_.zero());
    best_ = &best;
    work_ = &work;
    descend(0, 0);
  }

 private:
  void descend(int start, int depth) {
    const int last = k_ - (w_ - depth);
    const int max_scalar = (depth == 0 || Basis::kBinary) ? 1 : q_ - 1;
    for (int i = start; i <= last; ++i) {
      for (int s = 1; s <= max_scalar; ++s) {
        auto& next = stack_[depth + 1];
        next = stack_[depth];
        B_.add(next, i, static_cast<std::uint8_t>(s));
        if (depth + 1 == w_) {
          ++*work_;
          const int wt = B_.weight(next);
          if (wt < *best_) *best_ = wt;
        } else {
          descend(i + 1, depth + 1);
        }
      }
    }
  }

  const Basis& B_;
  int k_, q_, w_ = 0;
  std::vector<typename Basis::Word> stack_;
  int* best_ = nullptr;
  std::uint64_t* work_ = nullptr;
};

struct InfoSets {
  std::vector<std::vector<SymbolRow>> bases;
  std::vector<int> ranks;  // pivots not covered by earlier information sets
};

// Greedy information sets: each reduction prefers columns not yet used.
InfoSets information_sets(const std::vector<SymbolRow>& rows, int n, const SymbolField& F) {
  InfoSets out;
  std::vector<char> used(static_cast<std::size_t>(n), 0);
  for (;;) {
    std::vector<int> order;
    for (int c = 0; c < n; ++c) {
      if (!used[c]) order.push_back(c);
    }
    const std::size_t fresh = order.size();
    if (fresh == 0) break;
    for (int c = 0; c < n; ++c) {
      if (used[c]) order.push_back(c);
    }
    auto basis = rows;
    const auto pivots = reduce(basis, order, F);
    int rank = 0;
    for (int c : pivots) {
      if (!used[c]) {
        used[c] = 1;
        ++rank;
      }
    }
    if (rank == 0) break;
    out.bases.push_back(std::move(basis));
    out.ranks.push_back(rank);
  }
  return out;
}

template <class Basis>
DistanceResult brouwer_zimmermann(const std::vector<Basis>& bases, const std::vector<int>& ranks, int k, int q,
                                  int lower, int upper, const DistanceOptions& opts) {
  DistanceResult res;
  res.method = DistanceMethod::bz;
  std::vector<int> done(bases.size(), 0);
  auto bound = [&] {
    int s = 0;
    for (std::size_t j = 0; j < bases.size(); ++j) s += std::max(0, done[j] + 1 - (k - ranks[j]));
    return s;
  };
  auto finish = [&] {
    res.lower = std::min(lower, upper);
    res.upper = upper;
    return res;
  };
  for (int w = 1; w <= k; ++w) {
    const std::uint64_t cost = sat_mul(binomial_sat(k, w), w == 1 ? 1 : [&] {
      std::uint64_t c = 1;
      for (int i = 1; i < w; ++i) c = sat_mul(c, static_cast<std::uint64_t>(q - 1));
      return c;
    }());
    for (std::size_t j = 0; j < bases.size(); ++j) {
      lower = std::max(lower, bound());
      if (lower >= upper) return finish();
      if (opts.stop_when_lower_reaches > 0 && lower >= opts.stop_when_lower_reaches) return finish();
      if (opts.stop_when_upper_reaches > 0 && upper <= opts.stop_when_upper_reaches) return finish();
      if (cost == kSaturated || res.work + cost > opts.budget) return finish();
      WeightEnumerator<Basis> en(bases[j], k, q);
      en.run(w, upper, res.work);
      done[j] = w;
      // Every message of one information set has been seen.
      if (w == k) lower = upper;
    }
  }
  lower = std::max(lower, bound());
  return finish();
}

template <class Basis, class MakeBasis>
DistanceResult run_bz(const std::vector<SymbolRow>& rows, const CyclicCode& code, const SymbolField& F, int lower,
                      const DistanceOptions& opts, MakeBasis&& make) {
  const auto sets = information_sets(rows, code.n, F);
  std::vector<Basis> bases;
  bases.reserve(sets.bases.size());
  for (const auto& b : sets.bases) bases.push_back(make(b));
  return brouwer_zimmermann(bases, sets.ranks, code.dim, F.q(), lower, code.n - code.dim + 1, opts);
}

template <int W>
DistanceResult binary_distance(const CyclicCode& code, std::vector<SymbolRow> rows, const SymbolField& F,
                               bool exhaustive, std::uint64_t total, int lower, const DistanceOptions& opts) {
  if (!exhaustive) {
    return run_bz<BinaryBasis<W>>(rows, code, F, lower, opts,
                                  [](const std::vector<SymbolRow>& b) { return BinaryBasis<W>(b); });
  }
  std::vector<int> order(static_cast<std::size_t>(code.n));
  for (int c = 0; c < code.n; ++c) order[c] = c;
  reduce(rows, order, F);
  const BinaryBasis<W> B(rows);
  const int k = code.dim;
  const Scan s = parallel_scan(total, opts.workers, [&](std::uint64_t b, std::uint64_t e) {
    return gray_binary(B, k, b, e, opts.stop_when_upper_reaches);
  });
  DistanceResult res;
  res.method = DistanceMethod::exhaustive;
  res.work = s.work;
  res.upper = s.best;
  res.lower = s.stopped ? std::min(lower, s.best) : s.best;
  return res;
}

// Messages whose highest nonzero digit is 1 represent every codeword up to a
// scalar; in modular Gray order they are exactly the ranges [q^j, 2 q^j).
template <class Basis>
Scan projective_scan(const Basis& B, const SymbolField& F, int k, const DistanceOptions& opts) {
  Scan total;
  std::uint64_t start = 1;
  for (int j = 0; j < k; ++j, start *= static_cast<std::uint64_t>(F.q())) {
    const int stop = opts.stop_when_upper_reaches;
    const Scan s = parallel_scan(start, opts.workers, [&](std::uint64_t b, std::uint64_t e) {
      return gray_qary(B, F, k, start + b, start + e, stop);
    });
    total.best = std::min(total.best, s.best);
    total.work += s.work;
    if (s.stopped) {
      total.stopped = true;
      break;
    }
  }
  return total;
}

template <class Basis, class MakeBasis>
DistanceResult qary_distance(const CyclicCode& code, std::vector<SymbolRow> rows, const SymbolField& F,
                             bool exhaustive, int lower, const DistanceOptions& opts, MakeBasis&& make) {
  if (!exhaustive) return run_bz<Basis>(rows, code, F, lower, opts, make);
  std::vector<int> order(static_cast<std::size_t>(code.n));
  for (int c = 0; c < code.n; ++c) order[c] = c;
  reduce(rows, order, F);
  const Basis B = make(rows);
  const Scan s = projective_scan(B, F, code.dim, opts);
  DistanceResult res;
  res.method = DistanceMethod::exhaustive;
  res.work = s.work;
  res.upper = s.best;
  res.lower = s.stopped ? std::min(lower, s.best) : s.best;
  return res;
}

template <template <int> class Basis, class... Extra>
DistanceResult sliced_distance(const CyclicCode& code, std::vector<SymbolRow> rows, const SymbolField& F,
                               bool exhaustive, int lower, const DistanceOptions& opts, const Extra&... extra) {
  auto run = [&]<int W>(std::integral_constant<int, W>) {
    return qary_distance<Basis<W>>(code, std::move(rows), F, exhaustive, lower, opts,
                                   [&](const std::vector<SymbolRow>& b) { return Basis<W>(b, extra...); });
  };
  switch ((code.n + 63) / 64) {
    case 1:
      return run(std::integral_constant<int, 1>{});
    case 2:
      return run(std::integral_constant<int, 2>{});
    case 3:
      return run(std::integral_constant<int, 3>{});
    case 4:
      return run(std::integral_constant<int, 4>{});
    default:
      return qary_distance<QaryBasis>(code, std::move(rows), F, exhaustive, lower, opts,
                                      [&F](const std::vector<SymbolRow>& b) { return QaryBasis(b, F); });
  }
}

}  // namespace

DistanceResult min_distance(const CyclicCode& code, const DistanceOptions& opts) {
  const int n = code.n;
  const int k = code.dim;
  if (k < 1 || k > n) throw DomainError("min_distance: code dimension out of range");
  const u64 q = code.q.q;
  if (q > 256) throw CapacityError("min_distance supports q <= 256");
  const SymbolField F(*code.gen.field());
  const int bch = bch_bound(code.zeros, n);

  std::uint64_t total = 0;
  const bool fits = checked_pow(q, static_cast<u64>(k), total);
  bool exhaustive = false;
  switch (opts.strategy) {
    case DistanceOptions::Strategy::automatic:
      exhaustive = fits && total <= opts.budget;
      break;
    case DistanceOptions::Strategy::exhaustive:
      if (!fits) throw CapacityError("exhaustive enumeration of q^k codewords overflows 64 bits");
      exhaustive = true;
      break;
    case DistanceOptions::Strategy::bz:
      exhaustive = false;
      break;
  }

  auto rows = generator_rows(code);
  DistanceResult res;
  if (q == 2) {
    const int words = (n + 63) / 64;
    switch (words) {
      case 1:
        res = binary_distance<1>(code, std::move(rows), F, exhaustive, total, bch, opts);
        break;
      case 2:
        res = binary_distance<2>(code, std::move(rows), F, exhaustive, total, bch, opts);
        break;
      case 3:
        res = binary_distance<3>(code, std::move(rows), F, exhaustive, total, bch, opts);
        break;
      case 4:
        res = binary_distance<4>(code, std::move(rows), F, exhaustive, total, bch, opts);
        break;
      default:
        throw CapacityError("binary minimum distance supports n <= 256");
    }
  } else if (q == 3) {
    res = sliced_distance<TernaryBasis>(code, std::move(rows), F, exhaustive, bch, opts);
  } else if (q == 4) {
    res = sliced_distance<QuaternaryBasis>(code, std::move(rows), F, exhaustive, bch, opts, F);
  } else {
    res = qary_distance<QaryBasis>(code, std::move(rows), F, exhaustive, bch, opts,
                                   [&F](const std::vector<SymbolRow>& b) { return QaryBasis(b, F); });
  }
  if (!res.exact()) {
    res.lower = std::max(res.lower, std::min(ht_bound(code.zeros, n), res.upper));
  }
  if (res.exact() && res.lower < bch) throw InternalError("minimum distance below the BCH bound");
  return res;
}

void KnownDistances::insert(u64 q, int n, const std::string& gen, const DistanceResult& d) {
  map_.insert_or_assign(std::make_tuple(q, n, gen), d);
}

const DistanceResult* KnownDistances::find(u64 q, int n, const std::string& gen) const {
  auto it = map_.find(std::make_tuple(q, n, gen));
  return it == map_.end() ? nullptr : &it->second;
}

}  // namespace uplab
