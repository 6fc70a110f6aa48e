#include "sl2cb/fusion.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <sstream>

namespace sl2cb {

Integer binomial(long n, long k) {
  if (n < 0 || k < 0 || k > n) return 0;
  Integer out;
  mpz_bin_uiui(out.backend().data(), static_cast<unsigned long>(n),
               static_cast<unsigned long>(k));
  return out;
}

Integer exact_div(const Integer& p, const Integer& q, const std::string& context) {
  if (q == 0 || p % q != 0) {
    throw integrality_error(context + ": " + to_string(p) + " not divisible by " +
                            to_string(q));
  }
  return p / q;
}

Integer require_integral(const Rational& r, const std::string& context) {
  if (denominator(r) != 1) {
    throw integrality_error(context + ": value " + to_string(r) + " is not an integer");
  }
  return numerator(r);
}

std::string to_string(const Rational& r) { return r.str(); }
std::string to_string(const Integer& z) { return z.str(); }

Rational parse_rational(const std::string& text) {
  if (text.empty()) throw std::invalid_argument("empty rational literal");
  try {
    Rational r(text);
    return r;
  } catch (const std::exception&) {
    throw std::invalid_argument("malformed rational literal: " + text);
  }
}

WeightVector WeightVector::canonical(std::vector<int> weights) {
  for (int w : weights) {
    require(w >= 0, "WeightVector: weights >= 0");
  }
  std::sort(weights.begin(), weights.end(), std::greater<int>());
  WeightVector out;
  out.w_ = std::move(weights);
  return out;
}

int WeightVector::sum() const {
  return std::accumulate(w_.begin(), w_.end(), 0);
}

int WeightVector::max() const { return w_.empty() ? 0 : w_.front(); }

WeightVector WeightVector::without_zeros() const {
  WeightVector out;
  for (int w : w_) {
    if (w > 0) out.w_.push_back(w);
  }
  return out;
}

void require_admissible(Level ell, const WeightVector& weights) {
  require(weights.max() <= ell.get(), "WeightVector: weights <= level");
}

std::optional<Integer> RankCache::lookup(int level, const WeightVector& weights) const {
  auto it = memo_.find({level, weights});
  if (it == memo_.end()) return std::nullopt;
  return it->second;
}

void RankCache::store(int level, const WeightVector& weights, const Integer& value) {
  memo_.emplace(std::make_pair(level, weights), value);
}

const Integer& RankCache::table(int level, long j, long t) {
  static const Integer zero = 0;
  if (t < 0 || t > level) return zero;
  auto& rows = tables_[level];
  if (rows.empty()) {
    rows.emplace_back(level + 1, Integer(0));
    rows[0][0] = 1;  // r(0, t) = [t == 0]
  }
  while (static_cast<long>(rows.size()) <= j) {
    const auto& prev = rows.back();
    std::vector<Integer> row(level + 1, Integer(0));
    for (int u = 0; u <= level; ++u) {
      Integer v = (u > 0) ? prev[u - 1] : Integer(0);
      if (u + 1 <= level) v += prev[u + 1];
      row[u] = v;
    }
    rows.push_back(std::move(row));
  }
  return rows[j][t];
}

std::vector<std::pair<std::pair<int, std::vector<int>>, Integer>>
RankCache::export_entries() const {
  std::vector<std::pair<std::pair<int, std::vector<int>>, Integer>> out;
  out.reserve(memo_.size());
  for (const auto& [key, value] : memo_) {
    out.emplace_back(std::make_pair(key.first, key.second.get()), value);
  }
  return out;
}

void RankCache::import_entry(int level, std::vector<int> weights, Integer value) {
  memo_.emplace(std::make_pair(level, WeightVector::canonical(std::move(weights))),
                std::move(value));
}

bool odd_sum_vanishes(const WeightVector& weights) {
  return weights.sum() % 2 != 0;
}

bool triangle_vanishes(const WeightVector& weights) {
  return 2 * weights.max() > weights.sum();
}

Integer fusion_rank_3pt(Level ell, int a, int b, int c) {
  require(a >= 0 && b >= 0 && c >= 0, "fusion_rank_3pt: weights >= 0");
  require(a <= ell.get() && b <= ell.get() && c <= ell.get(),
          "fusion_rank_3pt: weights <= level");
  const int s = a + b + c;
  if (s % 2 != 0) return 0;
  if (s > 2 * ell.get()) return 0;
  if (a + b < c || a + c < b || b + c < a) return 0;
  return 1;
}

Integer fusion_rank_small(Level ell, const WeightVector& weights) {
  require_admissible(ell, weights);
  const WeightVector w = weights.without_zeros();
  require(w.size() <= 3, "fusion_rank_small: at most three nonzero weights");
  const auto& v = w.get();
  switch (v.size()) {
    case 0:
      return 1;  // vacuum
    case 1:
      return 0;  // single nonzero weight has no invariants
    case 2:
      return v[0] == v[1] ? 1 : 0;
    default:
      return fusion_rank_3pt(ell, v[0], v[1], v[2]);
  }
}

Integer rank(Level ell, const WeightVector& weights, RankCache& cache) {
  require_admissible(ell, weights);
  const WeightVector w = weights.without_zeros();
  if (w.size() <= 3) return fusion_rank_small(ell, w);
  if (odd_sum_vanishes(w) || triangle_vanishes(w)) return 0;
  if (auto hit = cache.lookup(ell.get(), w)) return *hit;

  // Factorization: split the two largest weights against the rest, sum over
  // the intermediate weight alpha.  Both factors shrink, and the rest-side
  // factor walks the same (weights..., alpha) key family on every level of the
  // recursion, so the memo fills one peeled pair at a time.
  const auto& v = w.get();
  std::vector<int> rest(v.begin() + 2, v.end());
  Integer total = 0;
  for (int alpha = 0; alpha <= ell.get(); ++alpha) {
    const Integer left = fusion_rank_3pt(ell, v[0], v[1], alpha);
    if (left == 0) continue;
    std::vector<int> right = rest;
    right.push_back(alpha);
    total += left * rank(ell, WeightVector::canonical(std::move(right)), cache);
  }
  cache.store(ell.get(), w, total);
  return total;
}

Integer rank_1t(Level ell, long j, long t, RankCache& cache) {
  require(j >= 0, "rank_1t: j >= 0");
  return cache.table(ell.get(), j, t);
}

Integer rank_infinity(long j, long t) {
  require(j >= 0, "rank_infinity: j >= 0");
  if (t < 0 || t > j) return 0;
  if ((j + t) % 2 != 0) return 0;
  // Ballot number (t+1)/(j+1) * C(j+1, (j-t)/2).
  const Integer c = binomial(j + 1, (j - t) / 2);
  return exact_div(Integer(t + 1) * c, Integer(j + 1), "rank_infinity");
}

Integer rank_closed_form(Level ell, long j, long t) {
  require(j >= 0, "rank_closed_form: j >= 0");
  if (t < 0 || t > ell.get()) return 0;
  if ((j + t) % 2 != 0) return 0;
  const long p = ell.get() + 2;
  const long K = (j + 2 * p - 1) / (2 * p);  // ceil(j / (2p))
  Rational total = 0;
  if (j % 2 == 0) {
    // j = 2x, t = 2y.
    const long x = j / 2;
    const long y = t / 2;
    for (long k = 0; k <= K; ++k) {
      const Rational bk(2 * y + 2 * k * p + 1, x + y + k * p + 1);
      const Rational ck((2 * k + 2) * p - 2 * y - 1, x + (k + 1) * p - y);
      const Integer first = binomial(2 * x, x - y - k * p);
      const Integer second = binomial(2 * x, x - (k + 1) * p + y + 1);
      total += bk * Rational(first) - ck * Rational(second);
    }
  } else {
    // j = 2x+1, t = 2y+1.
    const long x = (j - 1) / 2;
    const long y = (t - 1) / 2;
    for (long k = 0; k <= K; ++k) {
      const Rational bk(2 * y + 2 * k * p + 2, x + y + k * p + 2);
      const Rational ck(2 * (k + 1) * p - 2 * y - 2, x + (k + 1) * p - y);
      const Integer first = binomial(2 * x + 1, x - y - k * p);
      const Integer second = binomial(2 * x + 1, x - (k + 1) * p + y + 2);
      total += bk * Rational(first) - ck * Rational(second);
    }
  }
  const Integer out = require_integral(total, "rank_closed_form");
  if (out < 0) throw integrality_error("rank_closed_form: negative value");
  return out;
}

std::vector<ReflectionTerm> reflection_terms(Level ell, long j, long t) {
  require(j >= 0, "rank_by_reflection: j >= 0");
  std::vector<ReflectionTerm> terms;
  if (t < 0 || t > ell.get()) return terms;
  const long p = ell.get() + 2;
  const long K = (j + 2 * p - 1) / (2 * p);  // ceil(j / (2p))
  // Reflection orbit of t under the walls at spacing 2p: positive images at
  // t + 2pk, negative images at (2k+2)p - t - 2, for k = 0..K.  Images beyond
  // column j contribute zero and are dropped.
  for (long k = 0; k <= K; ++k) {
    const long plus = t + 2 * p * k;
    if (plus <= j) terms.push_back({plus, +1, rank_infinity(j, plus)});
    const long minus = (2 * k + 2) * p - t - 2;
    if (minus <= j) terms.push_back({minus, -1, rank_infinity(j, minus)});
  }
  std::sort(terms.begin(), terms.end(),
            [](const ReflectionTerm& a, const ReflectionTerm& b) { return a.t < b.t; });
  return terms;
}

Integer rank_by_reflection(Level ell, long j, long t) {
  Integer total = 0;
  for (const auto& term : reflection_terms(ell, j, t)) {
    total += term.sign * term.value;
  }
  return total;
}

bool nonvanishing_criterion(Level ell, const WeightVector& weights) {
  require_admissible(ell, weights);
  const auto& v = weights.get();
  const long n = static_cast<long>(v.size());
  const long total = weights.sum();
  if (total % 2 != 0) return false;
  // Ascending prefix sums give the minimal subset sum per cardinality, so the
  // all-subsets inequality reduces to one check per cardinality m with n - m
  // odd: total - (n - m - 1)*ell <= 2 * (sum of the m smallest weights).
  std::vector<long> asc(v.rbegin(), v.rend());
  std::vector<long> prefix(n + 1, 0);
  for (long i = 0; i < n; ++i) prefix[i + 1] = prefix[i] + asc[i];
  for (long m = (n % 2 == 0) ? 1 : 0; m <= n - 1; m += 2) {
    if (total - (n - m - 1) * ell.get() > 2 * prefix[m]) return false;
  }
  return true;
}

}  // namespace sl2cb
