#include "sl2cb/claims.hpp"

#include <algorithm>
#include <array>
#include <functional>
#include <random>
#include <sstream>

#include "sl2cb/divisors.hpp"
#include "sl2cb/nefcone.hpp"
#include "sl2cb/pullbacks.hpp"
#include "sl2cb/verlinde.hpp"

namespace sl2cb {
namespace {

constexpr std::size_t kMaxFailureMessages = 8;

class Criterion {
 public:
  Criterion(int number, std::string title) {
    rep_.number = number;
    rep_.title = std::move(title);
  }

  template <typename MakeMessage>
  void check(bool ok, MakeMessage&& message) {
    ++rep_.checks;
    if (ok) return;
    ++rep_.failed;
    rep_.pass = false;
    if (rep_.failures.size() < kMaxFailureMessages) rep_.failures.push_back(message());
  }

  void note(std::string text) { rep_.note = std::move(text); }

  CriterionReport take() { return std::move(rep_); }

 private:
  CriterionReport rep_;
};

std::string show(const Rational& q) { return to_string(q); }
std::string show(const Integer& z) { return to_string(z); }

CriterionReport criterion_matrix16(RankCache& cache) {
  Criterion c(1, "n=16 basis intersection matrix");
  static const long expected[7][7] = {
      {1, 0, 0, 0, 0, 0, 0},  {0, 32, 0, 0, 0, 0, 0}, {1, 0, 55, 0, 0, 0, 0},
      {0, 32, 0, 40, 0, 0, 0}, {1, 0, 63, 0, 19, 0, 0}, {0, 32, 0, 52, 0, 6, 0},
      {1, 0, 64, 0, 25, 0, 1}};
  const MatrixZ m = cb_basis_matrix(16, cache);
  for (int i = 1; i <= 7; ++i) {
    for (int ell = 1; ell <= 7; ++ell) {
      c.check(m(i - 1, ell - 1) == expected[i - 1][ell - 1], [&] {
        std::ostringstream os;
        os << "entry (i=" << i << ", ell=" << ell << "): computed " << m(i - 1, ell - 1)
           << ", expected " << expected[i - 1][ell - 1];
        return os.str();
      });
      if (ell > i) {
        c.check(m(i - 1, ell - 1) == 0, [&] {
          std::ostringstream os;
          os << "entry (i=" << i << ", ell=" << ell << ") above the diagonal is nonzero";
          return os.str();
        });
      }
    }
    c.check(m(i - 1, i - 1) != 0, [&] {
      std::ostringstream os;
      os << "diagonal entry " << i << " vanishes";
      return os.str();
    });
  }
  return c.take();
}

CriterionReport criterion_rank377(RankCache& cache) {
  Criterion c(2, "rank 377 by four algorithms and reflection");
  const Level ell(3);
  const Integer by_recurrence = rank_1t(ell, 15, 3, cache);
  const Integer by_closed_form = rank_closed_form(ell, 15, 3);
  const Integer by_reflection = rank_by_reflection(ell, 15, 3);
  std::vector<int> w(15, 1);
  w.push_back(3);
  const Integer by_verlinde = verlinde_rank_numeric(ell, WeightVector::canonical(w));
  const std::array<std::pair<const char*, const Integer*>, 4> routes = {
      {{"recurrence", &by_recurrence},
       {"closed form", &by_closed_form},
       {"reflection", &by_reflection},
       {"verlinde", &by_verlinde}}};
  for (const auto& [name, value] : routes) {
    c.check(*value == 377, [&, name = name, value = value] {
      std::ostringstream os;
      os << name << " gives " << *value << ", expected 377";
      return os.str();
    });
  }

  // Signed reflection expansion: +2002 -1638 +14 -1 at shifts 3, 5, 13, 15.
  const std::array<std::tuple<long, int, long>, 4> expected_terms = {
      {{3, 1, 2002}, {5, -1, 1638}, {13, 1, 14}, {15, -1, 1}}};
  std::vector<ReflectionTerm> nonzero;
  for (const auto& term : reflection_terms(ell, 15, 3)) {
    if (term.value != 0) nonzero.push_back(term);
  }
  c.check(nonzero.size() == expected_terms.size(), [&] {
    std::ostringstream os;
    os << "reflection expansion has " << nonzero.size() << " nonzero terms, expected 4";
    return os.str();
  });
  for (std::size_t k = 0; k < expected_terms.size() && k < nonzero.size(); ++k) {
    const auto& [t, sign, value] = expected_terms[k];
    c.check(nonzero[k].t == t && nonzero[k].sign == sign && nonzero[k].value == value, [&] {
      std::ostringstream os;
      os << "reflection term " << k << ": got (t=" << nonzero[k].t
         << ", sign=" << nonzero[k].sign << ", value=" << nonzero[k].value << "), expected (t="
         << t << ", sign=" << sign << ", value=" << value << ")";
      return os.str();
    });
  }

  static const long row15[16] = {0, 1430, 0, 2002, 0, 1638, 0, 910,
                                 0, 350,  0, 90,   0, 14,   0, 1};
  for (long t = 0; t <= 15; ++t) {
    const Integer v = rank_infinity(15, t);
    c.check(v == row15[t], [&] {
      std::ostringstream os;
      os << "level-infinity rank at (15, " << t << ") is " << v << ", expected " << row15[t];
      return os.str();
    });
  }
  return c.take();
}

CriterionReport criterion_agreement_grid(RankCache& cache) {
  Criterion c(3, "rank algorithm agreement grid");
  for (int l = 1; l <= 6; ++l) {
    const Level ell(l);
    for (long j = 0; j <= 20; ++j) {
      for (long t = 0; t <= l; ++t) {
        const Integer a = rank_1t(ell, j, t, cache);
        const Integer b = rank_closed_form(ell, j, t);
        const Integer r = rank_by_reflection(ell, j, t);
        c.check(a == b && a == r, [&] {
          std::ostringstream os;
          os << "ell=" << l << " j=" << j << " t=" << t << ": recurrence " << a
             << ", closed form " << b << ", reflection " << r;
          return os.str();
        });
        if ((j + t) % 2 == 0) {
          std::vector<int> w(static_cast<std::size_t>(j), 1);
          w.push_back(static_cast<int>(t));
          const Integer v = verlinde_rank_numeric(ell, WeightVector::canonical(w));
          c.check(v == a, [&] {
            std::ostringstream os;
            os << "ell=" << l << " j=" << j << " t=" << t << ": verlinde " << v
               << " disagrees with " << a;
            return os.str();
          });
        }
      }
    }
  }
  return c.take();
}

CriterionReport criterion_degree_corollaries(RankCache& cache, int max_n) {
  Criterion c(4, "F-curve degree corollaries at levels 1, 2, g-1, g");
  const int hi = std::max(8, std::min(16, max_n));
  for (int n = 8; n <= hi; n += 2) {
    const int g = n / 2 - 1;
    for (const FCurve& f : all_fcurves(n)) {
      bool all_odd = true;
      bool any_even = false;
      for (int part : f.parts()) {
        if (part % 2 == 0) {
          all_odd = false;
          any_even = true;
        }
      }
      const Integer d1 = intersect_cb_fcurve(Level(1), f, cache);
      c.check(d1 == (all_odd ? 1 : 0), [&] {
        std::ostringstream os;
        os << "level 1, n=" << n << ", " << f << ": degree " << d1 << ", expected "
           << (all_odd ? 1 : 0);
        return os.str();
      });
      const Integer expected2 = any_even ? Integer(Integer(1) << (g - 2)) : Integer(0);
      const Integer d2 = intersect_cb_fcurve(Level(2), f, cache);
      c.check(d2 == expected2, [&] {
        std::ostringstream os;
        os << "level 2, n=" << n << ", " << f << ": degree " << d2 << ", expected "
           << expected2;
        return os.str();
      });
    }
    for (int i = 1; i <= g; ++i) {
      const FCurve f = FCurve::spine(n, i);
      const Integer dg1 = intersect_cb_fcurve(Level(g - 1), f, cache);
      const Integer expected_g1 = (i == g - 1) ? Integer(g - 1) : Integer(0);
      c.check(dg1 == expected_g1, [&] {
        std::ostringstream os;
        os << "level g-1=" << g - 1 << ", n=" << n << ", i=" << i << ": degree " << dg1
           << ", expected " << expected_g1;
        return os.str();
      });
      const Integer dg = intersect_cb_fcurve(Level(g), f, cache);
      const Integer expected_g = (i == g) ? Integer(1) : Integer(0);
      c.check(dg == expected_g, [&] {
        std::ostringstream os;
        os << "level g=" << g << ", n=" << n << ", i=" << i << ": degree " << dg
           << ", expected " << expected_g;
        return os.str();
      });
    }
  }
  return c.take();
}

CriterionReport criterion_closed_form_classes(RankCache& cache, int max_n) {
  Criterion c(5, "closed-form divisor classes");
  const int hi = std::max(8, std::min(18, max_n));
  static const ClassTag tags[] = {ClassTag::level1,    ClassTag::level2,
                                  ClassTag::level3,    ClassTag::level4,
                                  ClassTag::g_minus_2, ClassTag::g_minus_1,
                                  ClassTag::g_top};
  for (int n = 6; n <= hi; n += 2) {
    const int g = n / 2 - 1;
    for (ClassTag tag : tags) {
      int level = 0;
      switch (tag) {
        case ClassTag::level1: level = 1; break;
        case ClassTag::level2: level = 2; break;
        case ClassTag::level3: level = 3; break;
        case ClassTag::level4: level = 4; break;
        case ClassTag::g_minus_2: level = g - 2; break;
        case ClassTag::g_minus_1: level = g - 1; break;
        case ClassTag::g_top: level = g; break;
      }
      if (level < 1 || level > g) continue;
      const SymDivisor closed = closed_form_class(tag, n);
      const SymDivisor computed = cb_divisor_class(Level(level), n, cache);
      c.check(closed == computed, [&] {
        std::ostringstream os;
        os << "tag " << class_tag_name(tag) << ", n=" << n << ": closed form " << closed
           << " != computed " << computed;
        return os.str();
      });
    }
  }
  return c.take();
}

CriterionReport criterion_independence(RankCache& cache, int max_n) {
  Criterion c(6, "curve family independence ranks");
  const int hi = std::max(8, std::min(20, max_n));
  for (int n = 6; n <= hi; ++n) {
    const int g = (n - 2) / 2;
    const long r1 = family_rank(CurveFamily::f11, n);
    c.check(r1 == g, [&] {
      std::ostringstream os;
      os << "spine family at n=" << n << ": rank " << r1 << ", expected " << g;
      return os.str();
    });
    const long r2 = family_rank(CurveFamily::f22, n);
    c.check(r2 == g - 1, [&] {
      std::ostringstream os;
      os << "two-two family at n=" << n << ": rank " << r2 << ", expected " << g - 1;
      return os.str();
    });
    if (g % 2 == 0) {
      const int k = g / 2;
      const long r3 = family_rank(CurveFamily::f33_mixed, n);
      c.check(r3 == 2 * k - 1, [&] {
        std::ostringstream os;
        os << "mixed family at n=" << n << ": rank " << r3 << ", expected " << 2 * k - 1;
        return os.str();
      });
    }
  }
  return c.take();
}

CriterionReport criterion_log_canonical(RankCache& cache, int max_n) {
  Criterion c(7, "log-canonical decomposition verdicts");
  const int hi = std::max(8, std::min(20, max_n));
  for (int n = 6; n <= hi; n += 2) {
    const int g = n / 2 - 1;
    const auto verdict = [&](int level, bool expected, const char* name) {
      const LogCanonicalReport rep = log_canonical_report(Level(level), n, cache);
      c.check(rep.feasible == expected, [&] {
        std::ostringstream os;
        os << name << " at n=" << n << ": " << (rep.feasible ? "feasible" : "infeasible")
           << ", expected " << (expected ? "feasible" : "infeasible");
        return os.str();
      });
      return rep;
    };
    verdict(1, n <= 10, "level 1");
    const LogCanonicalReport d2 = verdict(2, true, "level 2");
    const Rational expected_c = Rational(3 * (Integer(1) << (g - 1)), 8);
    c.check(d2.witness_c == expected_c, [&] {
      std::ostringstream os;
      os << "level 2 witness at n=" << n << ": c = " << show(d2.witness_c) << ", expected "
         << show(expected_c);
      return os.str();
    });
    for (int j = 2; j <= n / 2; ++j) {
      const Rational expected_b = (j % 2 == 0) ? Rational(2, 3) : Rational(1);
      c.check(d2.witness_b[j - 2] == expected_b, [&] {
        std::ostringstream os;
        os << "level 2 witness at n=" << n << ": b_" << j << " = "
           << show(d2.witness_b[j - 2]) << ", expected " << show(expected_b);
        return os.str();
      });
    }
    verdict(g - 1, n <= 14, "level g-1");
    verdict(g, n <= 12, "level g");
  }
  return c.take();
}

CriterionReport criterion_double_cover(RankCache& cache, int max_n) {
  Criterion c(8, "double-cover pullback identities");
  const int hi_g = std::max(3, std::min(10, (max_n - 2) / 2));
  std::ostringstream scalars;
  for (int g = 3; g <= hi_g; ++g) {
    const int n = 2 * g + 2;
    const SymDivisor doubled = Rational(2) * h_pullback(lambda_divisor(g));
    c.check(doubled == cb_divisor_class(Level(1), n, cache), [&] {
      std::ostringstream os;
      os << "g=" << g << ": 2 * pullback of lambda differs from the level-1 class";
      return os.str();
    });
    GDivisor hyper = lambda_divisor(g);
    hyper.a = 12;
    hyper.b[0] = 1;
    const auto ratio =
        proportionality_ratio(cb_divisor_class(Level(2), n, cache), h_pullback(hyper));
    c.check(ratio.has_value() && *ratio == Rational(Integer(1) << (g - 3)), [&] {
      std::ostringstream os;
      os << "g=" << g << ": level-2 class vs pullback of 12*lambda - delta_0: ";
      if (ratio.has_value()) {
        os << "scalar " << show(*ratio) << ", expected " << show(Rational(Integer(1) << (g - 3)));
      } else {
        os << "not proportional";
      }
      return os.str();
    });
    if (ratio.has_value()) {
      if (g > 3) scalars << ", ";
      scalars << "g=" << g << ": " << show(*ratio);
    }
  }
  c.note("hyperelliptic scalars " + scalars.str());
  return c.take();
}

CriterionReport criterion_flag_program(RankCache& cache, int max_n) {
  Criterion c(9, "flag pullback program");
  const int hi_g = std::max(3, std::min(7, max_n / 2 - 1));
  for (int g = 3; g <= hi_g; ++g) {
    for (ClassTag tag :
         {ClassTag::level1, ClassTag::level2, ClassTag::g_minus_1, ClassTag::g_top}) {
      const auto [a, b] = default_flag_parameters(tag, g);
      const FlagProgramReport rep = verify_flag_program(tag, a, b, std::nullopt, g, cache);
      c.check(rep.pullback_matches, [&] {
        std::ostringstream os;
        os << "tag " << class_tag_name(tag) << ", g=" << g
           << ": pullback does not match the class";
        return os.str();
      });
      c.check(rep.auxiliary_trivial, [&] {
        std::ostringstream os;
        os << "g=" << g << ": auxiliary divisor has nonzero pullback";
        return os.str();
      });
      c.check(rep.d.has_value() && rep.all_pass, [&] {
        std::ostringstream os;
        os << "tag " << class_tag_name(tag) << ", g=" << g << ": ";
        if (!rep.d.has_value()) {
          os << "no auxiliary multiple passes the F-divisor conditions";
        } else {
          os << "conditions fail at d = " << show(*rep.d);
          for (const auto& v : rep.conditions.violations) {
            os << " [condition " << v.condition << "]";
          }
        }
        return os.str();
      });
    }
  }
  return c.take();
}

CriterionReport criterion_property_suite(RankCache& cache) {
  Criterion c(10, "rank property suite");

  // Nonvanishing test against rank positivity, exhaustively over all weight
  // vectors with n <= 8 entries at levels <= 4.
  for (int l = 1; l <= 4; ++l) {
    const Level ell(l);
    for (int n = 1; n <= 8; ++n) {
      std::vector<int> w(static_cast<std::size_t>(n), 0);
      bool more = true;
      while (more) {
        const WeightVector wv = WeightVector::canonical(w);
        const bool predicted = nonvanishing_criterion(ell, wv);
        const bool actual = rank(ell, wv, cache) > 0;
        c.check(predicted == actual, [&] {
          std::ostringstream os;
          os << "ell=" << l << ", weights (";
          for (std::size_t i = 0; i < w.size(); ++i) os << (i ? "," : "") << w[i];
          os << "): criterion says " << (predicted ? "nonzero" : "zero") << ", rank says "
             << (actual ? "nonzero" : "zero");
          return os.str();
        });
        more = false;
        for (int i = 0; i < n; ++i) {
          if (w[i] < l) {
            ++w[i];
            std::fill(w.begin(), w.begin() + i, 0);
            more = true;
            break;
          }
        }
      }
    }
  }

  // Four-case rank table and degree indicator on weight shape (m1, m2, 1, 1).
  for (int l = 1; l <= 6; ++l) {
    const Level ell(l);
    for (int m1 = 0; m1 <= l; ++m1) {
      for (int m2 = 0; m2 <= l; ++m2) {
        Integer expected_rank(0);
        if (m1 == m2) {
          expected_rank = (m1 == 0 || m1 == l) ? 1 : 2;
        } else if (m2 == m1 + 2 || m2 == m1 - 2) {
          expected_rank = 1;
        }
        const Integer r = rank(ell, WeightVector::canonical({m1, m2, 1, 1}), cache);
        c.check(r == expected_rank, [&] {
          std::ostringstream os;
          os << "rank(ell=" << l << ", (" << m1 << "," << m2 << ",1,1)) = " << r
             << ", expected " << expected_rank;
          return os.str();
        });
        const Integer d = degree_4pt(ell, {m1, m2, 1, 1});
        const Integer expected_deg = (m1 == l && m2 == l) ? 1 : 0;
        c.check(d == expected_deg, [&] {
          std::ostringstream os;
          os << "degree(ell=" << l << ", (" << m1 << "," << m2 << ",1,1)) = " << d
             << ", expected " << expected_deg;
          return os.str();
        });
      }
    }
  }

  // Factorization identity on random splits.
  std::mt19937 gen(20260823);
  std::uniform_int_distribution<int> pick_level(1, 5);
  std::uniform_int_distribution<int> pick_n(4, 10);
  for (int trial = 0; trial < 200; ++trial) {
    const int l = pick_level(gen);
    const Level ell(l);
    const int n = pick_n(gen);
    std::vector<int> w(static_cast<std::size_t>(n));
    std::uniform_int_distribution<int> pick_weight(0, l);
    for (auto& x : w) x = pick_weight(gen);
    std::uniform_int_distribution<int> pick_split(2, n - 2);
    const int s = pick_split(gen);
    std::shuffle(w.begin(), w.end(), gen);
    const std::vector<int> left(w.begin(), w.begin() + s);
    const std::vector<int> right(w.begin() + s, w.end());
    const Integer whole = rank(ell, WeightVector::canonical(w), cache);
    Integer split_sum(0);
    for (int alpha = 0; alpha <= l; ++alpha) {
      std::vector<int> lw = left, rw = right;
      lw.push_back(alpha);
      rw.push_back(alpha);
      split_sum += rank(ell, WeightVector::canonical(lw), cache) *
                   rank(ell, WeightVector::canonical(rw), cache);
    }
    c.check(whole == split_sum, [&] {
      std::ostringstream os;
      os << "factorization trial " << trial << ": whole " << whole << " != split sum "
         << split_sum;
      return os.str();
    });
  }

  // Permutation invariance through canonicalization.
  for (int trial = 0; trial < 200; ++trial) {
    const int l = pick_level(gen);
    const Level ell(l);
    const int n = pick_n(gen);
    std::vector<int> w(static_cast<std::size_t>(n));
    std::uniform_int_distribution<int> pick_weight(0, l);
    for (auto& x : w) x = pick_weight(gen);
    const Integer base = rank(ell, WeightVector::canonical(w), cache);
    std::vector<int> shuffled = w;
    std::shuffle(shuffled.begin(), shuffled.end(), gen);
    const WeightVector a = WeightVector::canonical(w);
    const WeightVector b = WeightVector::canonical(shuffled);
    c.check(a == b && rank(ell, b, cache) == base, [&] {
      std::ostringstream os;
      os << "permutation trial " << trial << ": rank changed under reordering";
      return os.str();
    });
  }

  return c.take();
}

}  // namespace

std::vector<CriterionReport> run_all_criteria(RankCache& cache, int max_n) {
  require(max_n >= 8, "run_all_criteria: max_n >= 8");
  std::vector<std::function<CriterionReport()>> runners = {
      [&] { return criterion_matrix16(cache); },
      [&] { return criterion_rank377(cache); },
      [&] { return criterion_agreement_grid(cache); },
      [&] { return criterion_degree_corollaries(cache, max_n); },
      [&] { return criterion_closed_form_classes(cache, max_n); },
      [&] { return criterion_independence(cache, max_n); },
      [&] { return criterion_log_canonical(cache, max_n); },
      [&] { return criterion_double_cover(cache, max_n); },
      [&] { return criterion_flag_program(cache, max_n); },
      [&] { return criterion_property_suite(cache); }};
  std::vector<CriterionReport> reports;
  reports.reserve(runners.size());
  for (std::size_t i = 0; i < runners.size(); ++i) {
    try {
      reports.push_back(runners[i]());
    } catch (const std::exception& e) {
      CriterionReport rep;
      rep.number = static_cast<int>(i) + 1;
      rep.title = "criterion aborted";
      rep.pass = false;
      rep.failed = 1;
      rep.failures.push_back(std::string("exception: ") + e.what());
      reports.push_back(std::move(rep));
    }
  }
  return reports;
}

}  // namespace sl2cb
