#pragma once

#include <span>
#include <utility>
#include <vector>

#include <gmpxx.h>

#include "weilbounds/errors.hpp"

namespace weilbounds {

/// Degrees (d_1, .., d_r) of a defining system of forms.
struct Multidegree {
  std::vector<unsigned> degrees;

  Multidegree() = default;
  explicit Multidegree(std::vector<unsigned> d) : degrees(std::move(d)) {
    for (unsigned di : degrees)
      if (di < 1) throw InvalidParamsError("degrees must be >= 1");
  }

  unsigned r() const { return static_cast<unsigned>(degrees.size()); }
  unsigned delta() const {  // max degree
    unsigned m = 0;
    for (unsigned di : degrees) m = std::max(m, di);
    return m;
  }
  mpz_class d() const {  // product of degrees
    mpz_class out = 1;
    for (unsigned di : degrees) out *= di;
    return out;
  }
};

/// pi(n, q) = q^n + q^{n-1} + .. + 1, the number of points of P^n(F_q);
/// pi(-1, q) = 0 by convention.
mpz_class pi(long n, const mpz_class& q);

/// All r-tuples of positive integers summing to c, lexicographic order.
/// Cardinality binom(c-1, r-1). Throws EmptyRangeError when c < r.
std::vector<std::vector<unsigned>> compositions(unsigned c, unsigned r);

struct BettiValue {
  mpz_class value;
  unsigned ambient;  // N
  long dim;          // n = N - r
  std::vector<unsigned> multidegree;
};

/// Primitive n-th Betti number b'_n(N, d) of a nonsingular complete
/// intersection in P^N of codimension r = len(d), via the alternating sum
/// over composition sets M(c). An empty multidegree gives P^N itself
/// (value 0).
BettiValue primitive_betti(unsigned N, std::span<const unsigned> degrees);
BettiValue primitive_betti(unsigned N, const Multidegree& md);

/// The two explicit upper bounds on b'_n(N, d):
///   first:  (-1)^{n+1}(n+1) + d*binom(N+1, n)*(delta+1)^n
///   second: binom(N+1, n)*(delta+1)^N
std::pair<mpz_class, mpz_class> betti_bound(unsigned N, const Multidegree& md);

/// Closed forms for the special shapes.
mpz_class closed_form_hypersurface(unsigned N, unsigned d);  // r = 1
mpz_class closed_form_ci_curve(unsigned N, const Multidegree& md);   // r = N-1
mpz_class closed_form_ci_surface(unsigned N, const Multidegree& md); // r = N-2
mpz_class closed_form_two_forms(unsigned N, unsigned d);     // r = 2, equal

/// First t_max+1 coefficients of the Hilbert series
///   prod_i (1 - T^{d_i}) / (1 - T)^{N+1}.
std::vector<mpz_class> hilbert_series_ci(unsigned N, const Multidegree& md,
                                         unsigned t_max);

mpz_class ci_degree(const Multidegree& md);
mpz_class plane_arith_genus(unsigned d);  // (d-1)(d-2)/2
int epsilon(long i);                      // 1 if i even, 0 if odd

/// Exact floor and ceiling bracket of coeff * q^{e/2} for coeff, q >= 0:
/// integral exponents are exact, odd ones bracket the square root.
std::pair<mpz_class, mpz_class> bracket_half_power(const mpz_class& coeff,
                                                   const mpz_class& q,
                                                   long half_exponent_num);

mpz_class mpz_pow(const mpz_class& base, unsigned long e);
mpz_class binomial(unsigned long n, unsigned long k);
mpz_class isqrt_floor(const mpz_class& x);
mpz_class isqrt_ceil(const mpz_class& x);

}  // namespace weilbounds
