#include "sl2cb/pullbacks.hpp"

#include <algorithm>

namespace sl2cb {

GDivisor make_gdivisor(int genus, Rational a, std::vector<Rational> b) {
  require(genus >= 2, "make_gdivisor: genus >= 2");
  require(static_cast<int>(b.size()) == genus / 2 + 1,
          "make_gdivisor: b must have floor(genus/2)+1 entries");
  return GDivisor{genus, std::move(a), std::move(b)};
}

GDivisor lambda_divisor(int genus) {
  require(genus >= 2, "lambda_divisor: genus >= 2");
  return GDivisor{genus, Rational(1), std::vector<Rational>(genus / 2 + 1, Rational(0))};
}

GDivisor operator*(const Rational& s, GDivisor d) {
  d.a *= s;
  for (auto& bi : d.b) bi *= s;
  return d;
}

GDivisor operator+(GDivisor x, const GDivisor& y) {
  require(x.genus == y.genus, "GDivisor: genus mismatch in +");
  require(x.b.size() == y.b.size(), "GDivisor: coefficient size mismatch in +");
  x.a += y.a;
  for (std::size_t i = 0; i < x.b.size(); ++i) x.b[i] += y.b[i];
  return x;
}

SymDivisor h_pullback(const GDivisor& d) {
  const int g = d.genus;
  require(g >= 2, "h_pullback: genus >= 2");
  require(static_cast<int>(d.b.size()) == g / 2 + 1, "h_pullback: malformed divisor");
  const int n = 2 * g + 2;
  SymDivisor out(n);
  const Rational denom(8 * (n - 1));
  for (int k = 2; k <= g + 1; ++k) {
    if (k % 2 == 0) {
      out.coeff(k) = d.a * Rational(Integer(k) * (n - k)) / denom - 2 * d.b[0];
    } else {
      out.coeff(k) =
          d.a * Rational(Integer(k - 1) * (n - k - 1)) / denom - d.b[(k - 1) / 2] / 2;
    }
  }
  return out;
}

SymDivisor flag_pullback(const GDivisor& d) {
  const int n = d.genus;
  require(n >= 4 && n % 2 == 0, "flag_pullback: genus must be even and >= 4");
  require(static_cast<int>(d.b.size()) == n / 2 + 1, "flag_pullback: malformed divisor");
  SymDivisor out(n);
  for (int j = 2; j <= n / 2; ++j) {
    out.coeff(j) = Rational(Integer(j) * (n - j), n - 1) * d.b[1] - d.b[j];
  }
  return out;
}

namespace {

int fold_index(int s, int m) { return std::min(s, m - s); }

// Records the first violation per condition.
struct ConditionAccumulator {
  FDivisorReport report{true, {true, true, true, true, true}, {}};

  void check(int condition, std::array<int, 4> indices, const Rational& value) {
    if (value >= 0) return;
    report.pass = false;
    if (report.condition_pass[condition - 1]) {
      report.condition_pass[condition - 1] = false;
      report.violations.push_back(FConditionWitness{condition, indices, value});
    }
  }
};

}  // namespace

FDivisorReport f_divisor_check(const GDivisor& d) {
  const int m = d.genus;
  require(m >= 4 && m % 2 == 0, "f_divisor_check: genus must be even and >= 4");
  require(static_cast<int>(d.b.size()) == m / 2 + 1, "f_divisor_check: malformed divisor");
  const int half = m / 2;
  const auto& b = d.b;
  ConditionAccumulator acc;

  acc.check(1, {-1, -1, -1, -1}, d.a - 12 * b[0] + b[1]);
  for (int i = 0; i <= half; ++i) acc.check(2, {i, -1, -1, -1}, b[i]);
  for (int i = 1; i <= half; ++i) acc.check(3, {i, -1, -1, -1}, 2 * b[0] - b[i]);
  for (int i = 1; i <= half; ++i) {
    for (int j = i; j <= half; ++j) {
      acc.check(4, {i, j, -1, -1}, b[i] + b[j] - b[fold_index(i + j, m)]);
    }
  }
  for (int i = 1; 4 * i <= m; ++i) {
    for (int j = i; 3 * j <= m - i; ++j) {
      for (int k = j; 2 * k <= m - i - j; ++k) {
        const int l = m - i - j - k;
        const Rational lhs = b[fold_index(i, m)] + b[fold_index(j, m)] +
                             b[fold_index(k, m)] + b[fold_index(l, m)];
        const Rational rhs = b[fold_index(i + j, m)] + b[fold_index(i + k, m)] +
                             b[fold_index(i + l, m)];
        acc.check(5, {i, j, k, l}, lhs - rhs);
      }
    }
  }
  return acc.report;
}

GDivisor trivial_pullback_divisor(const Rational& alpha, const Rational& beta, int g) {
  require(g >= 1, "trivial_pullback_divisor: g >= 1");
  require(2 * beta > Rational(Integer(g + 1) * (g + 1)),
          "trivial_pullback_divisor: requires 2*beta > (g+1)^2");
  require(alpha > 12 * beta - (2 * g + 1),
          "trivial_pullback_divisor: requires alpha > 12*beta - (2g+1)");
  const int m = 2 * (g + 1);
  std::vector<Rational> b(m / 2 + 1);
  b[0] = beta;
  for (int i = 1; i <= m / 2; ++i) b[i] = Rational(Integer(i) * (m - i));
  return GDivisor{m, alpha, std::move(b)};
}

GDivisor trivial_pullback_divisor(int g) {
  require(g >= 1, "trivial_pullback_divisor: g >= 1");
  const Rational beta(Integer(g + 1) * (g + 1) + 1, 2);
  return trivial_pullback_divisor(12 * beta - 2 * g, beta, g);
}

GDivisor base_flag_divisor(ClassTag tag, const Rational& a, const Rational& b, int g) {
  require(g >= 2, "base_flag_divisor: g >= 2");
  const int m = 2 * (g + 1);
  const int n = m;
  std::vector<Rational> bv(m / 2 + 1, Rational(0));
  bv[0] = b;
  switch (tag) {
    case ClassTag::level1:
      for (int i = 1; i <= g + 1; i += 2) bv[i] = 1;
      break;
    case ClassTag::level2:
      for (int i = 1; i <= g + 1; ++i) bv[i] = (i % 2 == 1) ? Rational(1) : Rational(4, 3);
      break;
    case ClassTag::g_minus_1:
      for (int i = 1; i <= g; ++i) bv[i] = Rational(Integer(i) * (n - 2 * i + 1), n - 1);
      bv[g + 1] = Rational(3 * g + 2, n - 1);
      break;
    case ClassTag::g_top:
      for (int i = 1; i <= g + 1; ++i) bv[i] = Rational(Integer(i) * (n - 2 * i + 1), n - 1);
      break;
    default:
      throw precondition_error("base_flag_divisor: tag has no flag construction");
  }
  return GDivisor{m, a, std::move(bv)};
}

Rational flag_scale(ClassTag tag, int g) {
  require(g >= 2, "flag_scale: g >= 2");
  switch (tag) {
    case ClassTag::level1:
      return Rational(1, 4);
    case ClassTag::level2:
      return Rational(3 * (Integer(1) << (g - 1)), 8);
    case ClassTag::g_minus_1:
      return Rational(g - 1);
    case ClassTag::g_top:
      return Rational(1, 2);
    default:
      throw precondition_error("flag_scale: tag has no flag construction");
  }
}

std::pair<Rational, Rational> default_flag_parameters(ClassTag tag, int g) {
  require(g >= 2, "default_flag_parameters: g >= 2");
  const int n = 2 * (g + 1);
  Rational b;
  switch (tag) {
    case ClassTag::level1:
      b = Rational(1, 2);
      break;
    case ClassTag::level2:
      b = Rational(8, 3);
      break;
    case ClassTag::g_minus_1:
    case ClassTag::g_top: {
      const int top = (tag == ClassTag::g_minus_1) ? g : g + 1;
      Rational mx(0);
      for (int i = 1; i <= top; ++i) {
        mx = std::max(mx, Rational(Integer(i) * (n - 2 * i + 1), n - 1));
      }
      b = mx / 2;
      break;
    }
    default:
      throw precondition_error("default_flag_parameters: tag has no flag construction");
  }
  return {12 * b - 1, b};
}

FlagProgramReport verify_flag_program(ClassTag tag, const Rational& a, const Rational& b,
                                      std::optional<Rational> d, int g, RankCache& cache) {
  require(tag == ClassTag::level1 || tag == ClassTag::level2 ||
              tag == ClassTag::g_minus_1 || tag == ClassTag::g_top,
          "verify_flag_program: tag has no flag construction");
  require(g >= 2, "verify_flag_program: g >= 2");
  const Rational b_floor = default_flag_parameters(tag, g).second;
  require(b >= b_floor, "verify_flag_program: requires b >= " + to_string(b_floor));
  require(a >= 12 * b - 1, "verify_flag_program: requires a >= 12b - 1");
  if (d.has_value()) require(*d >= 0, "verify_flag_program: requires d >= 0");
  const int n = 2 * (g + 1);
  const Rational scale = flag_scale(tag, g);
  const GDivisor base = scale * base_flag_divisor(tag, a, b, g);
  const GDivisor aux = trivial_pullback_divisor(g);
  const SymDivisor target = cb_divisor_class(Level(class_tag_level(tag, g)), n, cache);

  std::optional<Rational> found = d;
  FDivisorReport conditions{};
  if (d.has_value()) {
    conditions = f_divisor_check(base + *d * aux);
  } else {
    const Rational cap(10 * (g + 1) * (g + 1));
    bool ok = false;
    for (Rational step(0); step <= cap; step += Rational(1, 2)) {
      conditions = f_divisor_check(base + step * aux);
      if (conditions.pass) {
        found = step;
        ok = true;
        break;
      }
    }
    if (!ok) {
      found.reset();
      conditions = f_divisor_check(base);
    }
  }

  const Rational d_used = found.value_or(Rational(0));
  const bool pullback_matches = flag_pullback(base + d_used * aux) == target;
  const bool auxiliary_trivial = flag_pullback(aux).is_zero();
  const bool all_pass =
      pullback_matches && auxiliary_trivial && found.has_value() && conditions.pass;
  return FlagProgramReport{tag,  g,   a, b, scale, found, pullback_matches,
                           auxiliary_trivial, conditions, all_pass};
}

}  // namespace sl2cb
