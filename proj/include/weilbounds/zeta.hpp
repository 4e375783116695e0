#pragma once

#include <complex>
#include <vector>

#include <gmpxx.h>

#include "weilbounds/counter.hpp"

namespace weilbounds {

/// Truncated coefficients of Z(X,T) = exp(sum_r N_r T^r / r), exact
/// rationals with c_0 = 1.
struct ZetaSeries {
  mpz_class q;
  std::vector<mpq_class> coeffs;
};

ZetaSeries zeta_series_from_counts(const CountTable& counts, unsigned t_max);

/// Formal logarithm of a unit series; coefficient r of log Z equals N_r/r.
std::vector<mpq_class> series_log(const std::vector<mpq_class>& coeffs);

/// Numerator P_1(X,T) = sum a_i T^i of the zeta function of a curve,
/// a_0 = 1, deg <= 2g.
struct CurveZeta {
  mpz_class q;
  unsigned genus = 0;
  std::vector<mpz_class> a;  // size 2g+1
};

/// N_r = q^r + 1 - p_r, with the power sums p_r of the reciprocal roots
/// obtained from the coefficients by Newton's identities (no root
/// extraction).
mpz_class counts_from_curve_zeta(const CurveZeta& cz, unsigned r);

/// Inverts Newton's identities on p_r = q^r + 1 - N_r for r = 1..2g.
/// Throws NonIntegralCoefficientsError when the data is inconsistent with
/// the declared genus.
CurveZeta fit_curve_numerator(const CountTable& counts, const mpz_class& q,
                              unsigned g);

/// a_{2g-i} = q^{g-i} a_i for 0 <= i <= g, checked exactly.
bool check_functional_equation(const CurveZeta& cz);

struct RhDiagnostic {
  bool exact_pass = false;    // p_1^2 <= 4 g^2 q, exact necessary condition
  bool numeric_pass = false;  // all root moduli within tol of sqrt(q)
  double worst_rel_dev = 0.0;
  std::vector<std::complex<double>> roots;  // reciprocal roots omega_j
};

/// Purity check |omega_j| = sqrt(q): an exact necessary condition plus a
/// double-precision root-modulus check (advisory; the functional equation
/// is the authoritative exact test).
RhDiagnostic check_riemann_hypothesis(const CurveZeta& cz, double tol = 1e-6);

/// Counts of the projective cone over a curve: N_m = q^m N^C_m + 1.
CountTable cone_counts(const CountTable& curve_counts, const mpz_class& q,
                       unsigned m_max);

/// Verifies Z(X,T) = P_1(C, qT) / ((1 - q^2 T)(1 - qT)(1 - T)) through
/// degree t_max by exact series comparison.
bool cone_factorization_check(const CurveZeta& cz_curve,
                              const CountTable& cone_counts, unsigned t_max);

}  // namespace weilbounds
