#include "weilbounds/zeta.hpp"

#include <cmath>

#include "weilbounds/invariants.hpp"

namespace weilbounds {

ZetaSeries zeta_series_from_counts(const CountTable& counts, unsigned t_max) {
  ZetaSeries out;
  out.q = counts.q;
  out.coeffs.assign(t_max + 1, mpq_class(0));
  out.coeffs[0] = 1;
  // Z' = L' Z with L = sum N_r T^r / r gives k c_k = sum_{r<=k} N_r c_{k-r}.
  for (unsigned k = 1; k <= t_max; ++k) {
    mpq_class acc = 0;
    for (unsigned r = 1; r <= k; ++r)
      acc += mpq_class(counts.at(r)) * out.coeffs[k - r];
    acc /= k;
    out.coeffs[k] = acc;
  }
  return out;
}

std::vector<mpq_class> series_log(const std::vector<mpq_class>& coeffs) {
  if (coeffs.empty() || coeffs[0] != 1)
    throw InvalidParamsError("series_log needs a unit series with c_0 = 1");
  std::vector<mpq_class> log(coeffs.size(), mpq_class(0));
  // k L_k = k c_k - sum_{j=1}^{k-1} j L_j c_{k-j}
  for (std::size_t k = 1; k < coeffs.size(); ++k) {
    mpq_class acc = mpq_class(static_cast<unsigned long>(k)) * coeffs[k];
    for (std::size_t j = 1; j < k; ++j)
      acc -= mpq_class(static_cast<unsigned long>(j)) * log[j] * coeffs[k - j];
    acc /= static_cast<unsigned long>(k);
    log[k] = acc;
  }
  return log;
}

namespace {

// p_k = -k a_k - sum_{j=1}^{k-1} a_j p_{k-j}, with a_j = 0 beyond deg P.
std::vector<mpz_class> power_sums_from_coeffs(const std::vector<mpz_class>& a,
                                              unsigned r_max) {
  std::vector<mpz_class> p(r_max + 1, 0);
  for (unsigned k = 1; k <= r_max; ++k) {
    mpz_class acc = 0;
    if (k < a.size()) acc = mpz_class(k) * a[k];
    for (unsigned j = 1; j < k && j < a.size(); ++j)
      acc += a[j] * p[k - j];
    p[k] = -acc;
  }
  return p;
}

}  // namespace

mpz_class counts_from_curve_zeta(const CurveZeta& cz, unsigned r) {
  if (r < 1) throw InvalidParamsError("extension degree must be >= 1");
  const auto p = power_sums_from_coeffs(cz.a, r);
  return mpz_pow(cz.q, r) + 1 - p[r];
}

CurveZeta fit_curve_numerator(const CountTable& counts, const mpz_class& q,
                              unsigned g) {
  CurveZeta cz;
  cz.q = q;
  cz.genus = g;
  cz.a.assign(2 * g + 1, 0);
  cz.a[0] = 1;
  if (g == 0) return cz;

  std::vector<mpz_class> p(2 * g + 1, 0);
  for (unsigned r = 1; r <= 2 * g; ++r)
    p[r] = mpz_pow(q, r) + 1 - counts.at(r);

  // k a_k = -(p_k + sum_{j=1}^{k-1} a_j p_{k-j})
  for (unsigned k = 1; k <= 2 * g; ++k) {
    mpz_class acc = p[k];
    for (unsigned j = 1; j < k; ++j) acc += cz.a[j] * p[k - j];
    acc = -acc;
    mpz_class quot, rem;
    mpz_fdiv_qr_ui(quot.get_mpz_t(), rem.get_mpz_t(), acc.get_mpz_t(), k);
    if (rem != 0)
      throw NonIntegralCoefficientsError(
          "a_" + std::to_string(k) +
          " is not an integer; the genus or the counts are inconsistent");
    cz.a[k] = quot;
  }

  // Round trip: the fitted numerator must reproduce the input counts.
  for (unsigned r = 1; r <= 2 * g; ++r) {
    if (counts_from_curve_zeta(cz, r) != counts.at(r))
      throw NonIntegralCoefficientsError(
          "fitted numerator does not reproduce the counts");
  }
  return cz;
}

bool check_functional_equation(const CurveZeta& cz) {
  const unsigned g = cz.genus;
  for (unsigned i = 0; i <= g; ++i) {
    if (cz.a[2 * g - i] != mpz_pow(cz.q, g - i) * cz.a[i]) return false;
  }
  return true;
}

RhDiagnostic check_riemann_hypothesis(const CurveZeta& cz, double tol) {
  if (tol <= 0) throw InvalidParamsError("tolerance must be positive");
  RhDiagnostic out;
  const unsigned g = cz.genus;
  if (g == 0) {
    out.exact_pass = true;
    out.numeric_pass = true;
    return out;
  }
  // exact necessary condition: p_1^2 <= 4 g^2 q
  const mpz_class p1 = -cz.a[1];
  out.exact_pass = p1 * p1 <= 4 * mpz_class(g) * mpz_class(g) * cz.q;

  // Reciprocal roots are the roots of T^{2g} + a_1 T^{2g-1} + .. + a_{2g};
  // Durand-Kerner at double precision.
  const unsigned deg = 2 * g;
  std::vector<double> coef(deg + 1);
  for (unsigned i = 0; i <= deg; ++i) coef[i] = cz.a[i].get_d();
  auto eval = [&](std::complex<double> z) {
    std::complex<double> acc = coef[0];
    for (unsigned i = 1; i <= deg; ++i) acc = acc * z + coef[i];
    return acc;
  };
  const double radius = std::sqrt(cz.q.get_d());
  std::vector<std::complex<double>> roots(deg);
  for (unsigned i = 0; i < deg; ++i) {
    const double angle = 0.37 + 2.0 * M_PI * i / deg;
    roots[i] = std::polar(radius * 1.1, angle);
  }
  for (unsigned iter = 0; iter < 500; ++iter) {
    double moved = 0.0;
    for (unsigned i = 0; i < deg; ++i) {
      std::complex<double> denom = 1.0;
      for (unsigned j = 0; j < deg; ++j)
        if (j != i) denom *= roots[i] - roots[j];
      const std::complex<double> delta = eval(roots[i]) / denom;
      roots[i] -= delta;
      moved = std::max(moved, std::abs(delta));
    }
    if (moved < 1e-14 * radius) break;
  }
  out.roots = roots;
  double worst = 0.0;
  for (const auto& w : roots)
    worst = std::max(worst, std::abs(std::abs(w) - radius) / radius);
  out.worst_rel_dev = worst;
  out.numeric_pass = worst <= tol;
  return out;
}

CountTable cone_counts(const CountTable& curve_counts, const mpz_class& q,
                       unsigned m_max) {
  CountTable out;
  out.q = q;
  for (unsigned m = 1; m <= m_max; ++m)
    out.entries[m] = mpz_pow(q, m) * curve_counts.at(m) + 1;
  return out;
}

bool cone_factorization_check(const CurveZeta& cz_curve,
                              const CountTable& cone_counts, unsigned t_max) {
  const ZetaSeries lhs = zeta_series_from_counts(cone_counts, t_max);
  const mpz_class& q = cz_curve.q;

  // numerator P_1(C, qT): coefficient i is a_i q^i
  std::vector<mpz_class> num(t_max + 1, 0);
  for (unsigned i = 0; i <= t_max && i < cz_curve.a.size(); ++i)
    num[i] = cz_curve.a[i] * mpz_pow(q, i);

  // denominator (1 - q^2 T)(1 - qT)(1 - T)
  const mpz_class q2 = q * q;
  std::vector<mpz_class> den = {1, -(q2 + q + 1), q2 * q + q2 + q, -q2 * q};

  // series division num/den
  std::vector<mpz_class> rhs(t_max + 1, 0);
  for (unsigned k = 0; k <= t_max; ++k) {
    mpz_class acc = num[k];
    for (unsigned j = 1; j <= k && j < den.size(); ++j)
      acc -= den[j] * rhs[k - j];
    rhs[k] = acc;
  }

  for (unsigned k = 0; k <= t_max; ++k)
    if (lhs.coeffs[k] != mpq_class(rhs[k])) return false;
  return true;
}

}  // namespace weilbounds
