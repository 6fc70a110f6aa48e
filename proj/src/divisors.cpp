#include "sl2cb/divisors.hpp"

#include <algorithm>
#include <map>
#include <ostream>

namespace sl2cb {

bool SymDivisor::is_zero() const {
  for (Eigen::Index i = 0; i < c_.size(); ++i) {
    if (c_[i] != 0) return false;
  }
  return true;
}

SymDivisor& SymDivisor::operator+=(const SymDivisor& other) {
  require(n_ == other.n_, "SymDivisor: same n for addition");
  c_ += other.c_;
  return *this;
}

SymDivisor& SymDivisor::operator*=(const Rational& s) {
  c_ *= s;
  return *this;
}

std::ostream& operator<<(std::ostream& os, const SymDivisor& d) {
  bool first = true;
  for (int j = 2; j <= d.max_index(); ++j) {
    if (!first) os << " + ";
    os << "(" << d.coeff(j) << ")B" << j;
    first = false;
  }
  return os;
}

FCurve FCurve::of(std::array<int, 4> parts) {
  int n = 0;
  for (int p : parts) {
    require(p >= 1, "FCurve: parts >= 1");
    n += p;
  }
  std::sort(parts.begin(), parts.end(), std::greater<int>());
  FCurve f;
  f.n_ = n;
  f.parts_ = parts;
  return f;
}

FCurve FCurve::spine(int n, int i) {
  require(i >= 1 && n - i - 2 >= 1, "FCurve: 1 <= i <= n-3");
  return of({1, 1, i, n - i - 2});
}

std::ostream& operator<<(std::ostream& os, const FCurve& f) {
  const auto& p = f.parts();
  return os << "F_{" << p[0] << "," << p[1] << "," << p[2] << "," << p[3] << "}";
}

std::vector<FCurve> all_fcurves(int n) {
  require(n >= 4, "all_fcurves: n >= 4");
  std::vector<FCurve> out;
  for (int a = n - 3; a >= 1; --a) {
    for (int b = std::min(a, n - a - 2); b >= 1; --b) {
      for (int c = std::min(b, n - a - b - 1); c >= 1; --c) {
        const int d = n - a - b - c;
        if (d < 1 || d > c) continue;
        out.push_back(FCurve::of({a, b, c, d}));
      }
    }
  }
  return out;
}

Integer intersect_BF(int j, const FCurve& f) {
  const int n = f.n();
  require(2 <= j && j <= n / 2, "intersect_BF: 2 <= j <= n/2");
  const auto& p = f.parts();
  const auto fold = [n](int s) { return std::min(s, n - s); };
  Integer v = 0;
  if (fold(p[0] + p[1]) == j) ++v;
  if (fold(p[0] + p[2]) == j) ++v;
  if (fold(p[0] + p[3]) == j) ++v;
  for (int cell : p) {
    if (cell >= 2 && fold(cell) == j) --v;
  }
  return v;
}

RowVectorZ intersection_row(const FCurve& f) {
  const int n = f.n();
  RowVectorZ row(SymDivisor::basis_size(n));
  for (int j = 2; j <= n / 2; ++j) row[j - 2] = intersect_BF(j, f);
  return row;
}

Rational intersect(const SymDivisor& d, const FCurve& f) {
  require(d.n() == f.n(), "intersect: divisor and curve share n");
  Rational out = 0;
  for (int j = 2; j <= d.max_index(); ++j) {
    out += d.coeff(j) * Rational(intersect_BF(j, f));
  }
  return out;
}

SymDivisor psi_class(int n) {
  SymDivisor d(n);
  for (int i = 2; i <= d.max_index(); ++i) {
    d.coeff(i) = Rational(i * (n - i), n - 1);
  }
  return d;
}

SymDivisor canonical_class(int n) {
  SymDivisor d = psi_class(n);
  for (int i = 2; i <= d.max_index(); ++i) {
    d.coeff(i) -= 2;
  }
  return d;
}

namespace {

// Casimir scalar for an sl2 weight.
Rational casimir(int a) { return Rational(a * (a + 2), 2); }

}  // namespace

Integer degree_4pt(Level ell, const std::array<int, 4>& mu) {
  for (int m : mu) {
    require(0 <= m && m <= ell.get(), "degree_4pt: weights in [0, level]");
  }
  const auto r3 = [&](int a, int b, int c) { return fusion_rank_3pt(ell, a, b, c); };
  Integer rank4 = 0;
  for (int alpha = 0; alpha <= ell.get(); ++alpha) {
    rank4 += r3(mu[0], mu[1], alpha) * r3(mu[2], mu[3], alpha);
  }
  Rational total = Rational(rank4) *
                   (casimir(mu[0]) + casimir(mu[1]) + casimir(mu[2]) + casimir(mu[3]));
  for (int alpha = 0; alpha <= ell.get(); ++alpha) {
    const Integer pairings = r3(mu[0], mu[1], alpha) * r3(mu[2], mu[3], alpha) +
                             r3(mu[0], mu[2], alpha) * r3(mu[1], mu[3], alpha) +
                             r3(mu[0], mu[3], alpha) * r3(mu[1], mu[2], alpha);
    total -= casimir(alpha) * Rational(pairings);
  }
  total /= Rational(2 * (ell.get() + 2));
  return require_integral(total, "degree_4pt");
}

Integer intersect_cb_fcurve(Level ell, const FCurve& f, RankCache& cache) {
  if (f.n() % 2 != 0) return 0;  // odd n: the divisor itself is trivial
  const auto& parts = f.parts();
  // Leg ranks vanish for mismatched parity, so mu ranges over one parity class
  // per part; the 4-point degrees are memoized on the sorted weight tuple.
  std::map<std::array<int, 4>, Integer> deg_memo;
  Integer total = 0;
  std::array<int, 4> mu{};
  const int L = ell.get();
  for (mu[0] = 0; mu[0] <= L; ++mu[0]) {
    const Integer r0 = rank_1t(ell, parts[0], mu[0], cache);
    if (r0 == 0) continue;
    for (mu[1] = 0; mu[1] <= L; ++mu[1]) {
      const Integer r1 = rank_1t(ell, parts[1], mu[1], cache);
      if (r1 == 0) continue;
      for (mu[2] = 0; mu[2] <= L; ++mu[2]) {
        const Integer r2 = rank_1t(ell, parts[2], mu[2], cache);
        if (r2 == 0) continue;
        for (mu[3] = 0; mu[3] <= L; ++mu[3]) {
          const Integer r3v = rank_1t(ell, parts[3], mu[3], cache);
          if (r3v == 0) continue;
          std::array<int, 4> key = mu;
          std::sort(key.begin(), key.end());
          auto it = deg_memo.find(key);
          if (it == deg_memo.end()) {
            it = deg_memo.emplace(key, degree_4pt(ell, key)).first;
          }
          if (it->second == 0) continue;
          total += it->second * r0 * r1 * r2 * r3v;
        }
      }
    }
  }
  return total;
}

SymDivisor cb_divisor_class(Level ell, int n, RankCache& cache) {
  require(n >= 4 && n % 2 == 0, "cb_divisor_class: n even >= 4");
  SymDivisor d(n);
  const int g = n / 2 - 1;
  if (ell.get() >= g + 1) return d;  // trivial bundle determinant
  const Rational beta1 = Rational(3, 2) * Rational(rank_1t(ell, n - 1, 1, cache));
  const Rational scale(1, 2 * (ell.get() + 2));
  for (int i = 2; i <= g + 1; ++i) {
    Rational beta_i = 0;
    for (int t = 0; t <= ell.get(); ++t) {
      beta_i += casimir(t) * Rational(rank_1t(ell, i, t, cache) *
                                      rank_1t(ell, n - i, t, cache));
    }
    d.coeff(i) = scale * (Rational(i * (n - i), n - 1) * beta1 - beta_i);
  }
  return d;
}

int class_tag_level(ClassTag tag, int g) {
  switch (tag) {
    case ClassTag::level1:
      return 1;
    case ClassTag::level2:
      return 2;
    case ClassTag::level3:
      return 3;
    case ClassTag::level4:
      return 4;
    case ClassTag::g_minus_2:
      return g - 2;
    case ClassTag::g_minus_1:
      return g - 1;
    case ClassTag::g_top:
      return g;
  }
  return 0;
}

std::optional<ClassTag> parse_class_tag(const std::string& text) {
  if (text == "1") return ClassTag::level1;
  if (text == "2") return ClassTag::level2;
  if (text == "3") return ClassTag::level3;
  if (text == "4") return ClassTag::level4;
  if (text == "g-2") return ClassTag::g_minus_2;
  if (text == "g-1") return ClassTag::g_minus_1;
  if (text == "g") return ClassTag::g_top;
  return std::nullopt;
}

std::string class_tag_name(ClassTag tag) {
  switch (tag) {
    case ClassTag::level1:
      return "1";
    case ClassTag::level2:
      return "2";
    case ClassTag::level3:
      return "3";
    case ClassTag::level4:
      return "4";
    case ClassTag::g_minus_2:
      return "g-2";
    case ClassTag::g_minus_1:
      return "g-1";
    case ClassTag::g_top:
      return "g";
  }
  return "?";
}

Integer fibonacci(long k) {
  require(k >= 0, "fibonacci: k >= 0");
  Integer out;
  mpz_fib_ui(out.backend().data(), static_cast<unsigned long>(k));
  return out;
}

namespace {

Integer pow3(long e) {
  require(e >= 0, "pow3: exponent >= 0");
  Integer out;
  mpz_ui_pow_ui(out.backend().data(), 3, static_cast<unsigned long>(e));
  return out;
}

}  // namespace

SymDivisor closed_form_class(ClassTag tag, int n) {
  require(n >= 4 && n % 2 == 0, "closed_form_class: n even >= 4");
  const int g = n / 2 - 1;
  const int ell = class_tag_level(tag, g);
  require(1 <= ell && ell <= g, "closed_form_class: tag level in [1, g]");
  SymDivisor d(n);
  switch (tag) {
    case ClassTag::level1:
      for (int k = 2; k <= g + 1; ++k) {
        d.coeff(k) = (k % 2 == 0) ? Rational(k * (n - k), 4 * (n - 1))
                                  : Rational((k - 1) * (n - k - 1), 4 * (n - 1));
      }
      break;
    case ClassTag::level2: {
      const Rational lead = 3 * Rational(Integer(1) << (g - 1));
      for (int k = 2; k <= g + 1; ++k) {
        const Rational base =
            (k % 2 == 0) ? Rational(k * (n - k), 8 * (n - 1)) - Rational(1, 6)
                         : Rational((k - 1) * (n - k - 1), 8 * (n - 1));
        d.coeff(k) = lead * base;
      }
      break;
    }
    case ClassTag::level3: {
      const Integer f2g1 = fibonacci(2 * g + 1);
      for (int k = 2; k <= g + 1; ++k) {
        if (k % 2 == 1) {
          const int j = (k - 1) / 2;
          d.coeff(k) =
              Rational(1, 10) *
              (Rational(3, 2) * Rational(k * (n - k), n - 1) * Rational(f2g1) -
               Rational(3, 2) * Rational(fibonacci(2 * j + 1) * fibonacci(2 * (g - j) + 1)) -
               Rational(15, 2) * Rational(fibonacci(2 * j) * fibonacci(2 * (g - j))));
        } else {
          const int j = k / 2;
          d.coeff(k) =
              Rational(1, 10) *
              (Rational(6 * j * (g - j + 1), 2 * g + 1) * Rational(f2g1) -
               4 * Rational(fibonacci(2 * j) * fibonacci(2 * (g - j + 1))));
        }
      }
      break;
    }
    case ClassTag::level4: {
      const Rational stem = Rational(pow3((n - 2) / 2) + 1);
      for (int k = 2; k <= g + 1; ++k) {
        if (k % 2 == 1) {
          d.coeff(k) =
              Rational(1, 16) *
              (Rational(k * (n - k), n - 1) * stem -
               Rational(1, 2) * Rational((pow3((k - 1) / 2) + 1) * (pow3((n - k - 1) / 2) + 1)) -
               Rational(5, 2) * Rational((pow3((k - 1) / 2) - 1) * (pow3((n - k - 1) / 2) - 1)));
        } else {
          d.coeff(k) =
              Rational(1, 12) *
              (Rational(k * (n - k), n - 1) * Rational(3, 4) * stem -
               4 * Rational(pow3((n - 4) / 2)) -
               3 * Rational((pow3((k - 2) / 2) - 1) * (pow3((n - k - 2) / 2) - 1)));
        }
      }
      break;
    }
    case ClassTag::g_minus_2: {
      const Integer nn(n);
      for (int k = 2; k <= g - 1; ++k) {
        d.coeff(k) = Rational(4 * (n - 7) * (n - 2) * (k - 1) * k, 16 * (n - 1));
      }
      d.coeff(g) = Rational(nn * nn * nn * nn - 17 * nn * nn * nn + 90 * nn * nn -
                                152 * nn + 96,
                            Integer(16 * (n - 1)));
      d.coeff(g + 1) = Rational(nn * nn * nn * nn - 15 * nn * nn * nn + 60 * nn * nn -
                                    20 * nn - 32,
                                Integer(16 * (n - 1)));
      break;
    }
    case ClassTag::g_minus_1:
      for (int k = 2; k <= g; ++k) {
        d.coeff(k) = Rational((g - 1) * (k - 1) * k, n - 1);
      }
      d.coeff(g + 1) = Rational((g - 1) * (g * g - g - 1), n - 1);
      break;
    case ClassTag::g_top:
      // The published display carries an extra factor of 4; the normalization
      // here is the one pinned by the intersection numbers D.F_{1,1,g} = 1.
      for (int k = 2; k <= g + 1; ++k) {
        d.coeff(k) = Rational((k - 1) * k, 2 * (n - 1));
      }
      break;
  }
  return d;
}

std::optional<Rational> proportionality_ratio(const SymDivisor& a, const SymDivisor& b) {
  if (a.n() != b.n() || b.is_zero()) return std::nullopt;
  Rational ratio = 0;
  bool have = false;
  for (int j = 2; j <= a.max_index(); ++j) {
    if (b.coeff(j) == 0) {
      if (a.coeff(j) != 0) return std::nullopt;
      continue;
    }
    const Rational r = a.coeff(j) / b.coeff(j);
    if (!have) {
      ratio = r;
      have = true;
    } else if (r != ratio) {
      return std::nullopt;
    }
  }
  return have ? std::optional<Rational>(ratio) : std::optional<Rational>(Rational(0));
}

}  // namespace sl2cb
