#include "sl2cb/nefcone.hpp"

#include <algorithm>

namespace sl2cb {

std::vector<FCurve> family_curves(CurveFamily family, int n) {
  require(n >= 6, "family_curves: n >= 6");
  const int g = (n - 2) / 2;
  std::vector<FCurve> out;
  switch (family) {
    case CurveFamily::f11:
      for (int i = 1; i <= g; ++i) out.push_back(FCurve::spine(n, i));
      break;
    case CurveFamily::f22:
      for (int i = 1; i <= g - 1; ++i) out.push_back(FCurve::of({2, 2, i, n - i - 4}));
      break;
    case CurveFamily::f33_mixed: {
      const int k = (g + 1) / 2;
      for (int i = 0; i <= k - 2; ++i) {
        out.push_back(FCurve::of({3, 3, 2 * i + 1, n - 2 * i - 7}));
      }
      for (int i = 0; i <= k - 1; ++i) {
        out.push_back(FCurve::spine(n, 2 * i + 1));
      }
      break;
    }
  }
  return out;
}

int family_expected_rank(CurveFamily family, int n) {
  const int g = (n - 2) / 2;
  const int k = (g + 1) / 2;
  switch (family) {
    case CurveFamily::f11:
      return g;
    case CurveFamily::f22:
      return g - 1;
    case CurveFamily::f33_mixed:
      if (g % 2 == 0) return 2 * k - 1;
      // Odd g: the curves satisfy one relation at even n (they all lie in a
      // hyperplane, rank g - 1), and degenerately at n = 9; at n = 8 the
      // family even repeats a curve (F_{3,3,1,1} = F_{1,1,3,3}).
      return (n % 2 == 0 || n == 9) ? 2 * k - 2 : 2 * k - 1;
  }
  return 0;
}

long integer_matrix_rank(MatrixZ m) {
  const long rows = m.rows();
  const long cols = m.cols();
  long r = 0;
  Integer prev = 1;
  for (long c = 0; c < cols && r < rows; ++c) {
    long pivot = -1;
    for (long i = r; i < rows; ++i) {
      if (m(i, c) != 0) {
        pivot = i;
        break;
      }
    }
    if (pivot < 0) continue;
    if (pivot != r) m.row(pivot).swap(m.row(r));
    for (long i = r + 1; i < rows; ++i) {
      for (long j = c + 1; j < cols; ++j) {
        // Fraction-free update: the division by the previous pivot is exact.
        m(i, j) = (m(r, c) * m(i, j) - m(i, c) * m(r, j)) / prev;
      }
      m(i, c) = 0;
    }
    prev = m(r, c);
    ++r;
  }
  return r;
}

long rational_matrix_rank(const MatrixQ& m) {
  MatrixZ z(m.rows(), m.cols());
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    Integer scale = 1;
    for (Eigen::Index j = 0; j < m.cols(); ++j) {
      scale = lcm(scale, Integer(denominator(m(i, j))));
    }
    for (Eigen::Index j = 0; j < m.cols(); ++j) {
      const Rational v = m(i, j) * Rational(scale);
      z(i, j) = Integer(numerator(v));
    }
  }
  return integer_matrix_rank(std::move(z));
}

MatrixZ family_intersection_matrix(const std::vector<FCurve>& curves) {
  require(!curves.empty(), "family_intersection_matrix: nonempty family");
  const int n = curves.front().n();
  MatrixZ m(static_cast<long>(curves.size()), SymDivisor::basis_size(n));
  for (std::size_t i = 0; i < curves.size(); ++i) {
    require(curves[i].n() == n, "family_intersection_matrix: common n");
    m.row(static_cast<long>(i)) = intersection_row(curves[i]);
  }
  return m;
}

long family_rank(CurveFamily family, int n) {
  return integer_matrix_rank(family_intersection_matrix(family_curves(family, n)));
}

MatrixZ cb_basis_matrix(int n, RankCache& cache) {
  require(n >= 6 && n % 2 == 0, "cb_basis_matrix: n even >= 6");
  const int g = n / 2 - 1;
  MatrixZ m(g, g);
  for (int i = 1; i <= g; ++i) {
    for (int ell = 1; ell <= g; ++ell) {
      m(i - 1, ell - 1) = intersect_cb_fcurve(Level(ell), FCurve::spine(n, i), cache);
    }
  }
  return m;
}

NefFaceReport nef_face_report(Level ell, int n, RankCache& cache) {
  SymDivisor divisor = cb_divisor_class(ell, n, cache);
  std::vector<FCurve> curves = all_fcurves(n);
  std::vector<Integer> degrees;
  degrees.reserve(curves.size());
  std::vector<int> vanishing;
  bool nonneg = true;
  for (std::size_t i = 0; i < curves.size(); ++i) {
    Integer deg = intersect_cb_fcurve(ell, curves[i], cache);
    // Independent route through the boundary-basis class must agree.
    require(Rational(deg) == intersect(divisor, curves[i]),
            "nef_face_report: weight-sum and class pairing disagree");
    if (deg < 0) nonneg = false;
    if (deg == 0) vanishing.push_back(static_cast<int>(i));
    degrees.push_back(std::move(deg));
  }
  long span = 0;
  if (!vanishing.empty()) {
    MatrixZ rows(static_cast<long>(vanishing.size()), SymDivisor::basis_size(n));
    for (std::size_t i = 0; i < vanishing.size(); ++i) {
      rows.row(static_cast<long>(i)) = intersection_row(curves[vanishing[i]]);
    }
    span = integer_matrix_rank(std::move(rows));
  }
  const bool extremal = nonneg && span == SymDivisor::basis_size(n) - 1;
  return NefFaceReport{n,      ell.get(),  std::move(divisor), std::move(curves),
                       std::move(degrees), nonneg,             std::move(vanishing),
                       span,   extremal};
}

LogCanonicalReport log_canonical_report(Level ell, int n, RankCache& cache) {
  SymDivisor divisor = cb_divisor_class(ell, n, cache);
  const int top = n / 2;
  const auto kappa = [n](int i) { return Rational(i * (n - i), n - 1) - 2; };

  // Per-index u intervals [lo_i, hi_i]; d_i = 0 squeezes to all-or-nothing.
  std::vector<Rational> lo(top + 1), hi(top + 1);
  std::vector<bool> constrained(top + 1, false);
  for (int i = 2; i <= top; ++i) {
    const Rational d = divisor.coeff(i);
    const Rational k = kappa(i);
    if (d == 0) {
      if (k < -1 || k > 0) {
        return LogCanonicalReport{n,           ell.get(), std::move(divisor),
                                  false,       0,         std::nullopt,
                                  0,           {},        std::make_pair(i, i)};
      }
      continue;
    }
    constrained[i] = true;
    if (d > 0) {
      lo[i] = k / d;
      hi[i] = (k + 1) / d;
    } else {
      lo[i] = (k + 1) / d;
      hi[i] = k / d;
    }
  }

  bool any = false;
  Rational lo_max = 0, hi_min = 0;
  for (int i = 2; i <= top; ++i) {
    if (!constrained[i]) continue;
    if (!any || lo[i] > lo_max) lo_max = lo[i];
    if (!any || hi[i] < hi_min) hi_min = hi[i];
    any = true;
  }

  if (!any) {
    // Unconstrained: the class is c * (K + sum (-kappa_i) B_i) for every c.
    std::vector<Rational> b;
    for (int i = 2; i <= top; ++i) b.push_back(-kappa(i));
    return LogCanonicalReport{n,     ell.get(),    std::move(divisor), true, 0,
                              std::nullopt, 1,     std::move(b),       std::nullopt};
  }

  if (lo_max > hi_min || hi_min <= 0) {
    std::optional<std::pair<int, int>> blocking;
    for (int i = 2; i <= top && !blocking; ++i) {
      if (!constrained[i]) continue;
      for (int j = 2; j <= top; ++j) {
        if (constrained[j] && lo[i] > hi[j]) {
          blocking = std::make_pair(i, j);
          break;
        }
      }
    }
    return LogCanonicalReport{n,     ell.get(), std::move(divisor), false, 0,
                              std::nullopt, 0,  {},                 blocking};
  }

  // Feasible: u in (max(0, lo_max), hi_min]; the witness takes u = hi_min.
  const Rational u = hi_min;
  const Rational c = 1 / u;
  std::vector<Rational> b;
  SymDivisor recon = canonical_class(n);
  for (int i = 2; i <= top; ++i) {
    const Rational bi = divisor.coeff(i) * u - kappa(i);
    require(bi >= 0 && bi <= 1, "log_canonical_report: witness in range");
    recon.coeff(i) += bi;
    b.push_back(bi);
  }
  recon *= c;
  require(recon == divisor, "log_canonical_report: witness reconstructs the class");
  const Rational c_low = c;
  std::optional<Rational> c_high;
  if (lo_max > 0) c_high = 1 / lo_max;
  return LogCanonicalReport{n,      ell.get(), std::move(divisor), true, c_low,
                            c_high, c,         std::move(b),       std::nullopt};
}

}  // namespace sl2cb
