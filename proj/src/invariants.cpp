#include "weilbounds/invariants.hpp"

#include <algorithm>

namespace weilbounds {

mpz_class mpz_pow(const mpz_class& base, unsigned long e) {
  mpz_class out;
  mpz_pow_ui(out.get_mpz_t(), base.get_mpz_t(), e);
  return out;
}

mpz_class binomial(unsigned long n, unsigned long k) {
  mpz_class out;
  mpz_bin_uiui(out.get_mpz_t(), n, k);
  return out;
}

mpz_class isqrt_floor(const mpz_class& x) {
  if (sgn(x) < 0) throw InvalidParamsError("isqrt of a negative value");
  mpz_class out;
  mpz_sqrt(out.get_mpz_t(), x.get_mpz_t());
  return out;
}

mpz_class isqrt_ceil(const mpz_class& x) {
  mpz_class f = isqrt_floor(x);
  return f * f == x ? f : f + 1;
}

mpz_class pi(long n, const mpz_class& q) {
  if (n < -1) throw InvalidParamsError("pi needs n >= -1");
  if (q < 2) throw InvalidParamsError("pi needs q >= 2");
  mpz_class out = 0;
  mpz_class power = 1;
  for (long i = 0; i <= n; ++i) {
    out += power;
    power *= q;
  }
  return out;
}

std::vector<std::vector<unsigned>> compositions(unsigned c, unsigned r) {
  if (r < 1) throw InvalidParamsError("compositions need r >= 1");
  if (c < r) throw EmptyRangeError("no compositions of " + std::to_string(c) +
                                   " into " + std::to_string(r) + " parts");
  std::vector<std::vector<unsigned>> out;
  std::vector<unsigned> cur(r, 1);
  // Lexicographic enumeration: recurse on the first part.
  struct Rec {
    std::vector<std::vector<unsigned>>& out;
    std::vector<unsigned>& cur;
    unsigned r;
    void go(unsigned pos, unsigned remaining) {
      if (pos + 1 == r) {
        cur[pos] = remaining;
        out.push_back(cur);
        return;
      }
      const unsigned parts_left = r - pos - 1;
      for (unsigned v = 1; v + parts_left <= remaining; ++v) {
        cur[pos] = v;
        go(pos + 1, remaining - v);
      }
    }
  } rec{out, cur, r};
  rec.go(0, c);
  return out;
}

namespace {

// sum over M(c) of d^nu, enumerating the compositions with a reusable
// buffer. Values stay small on typical grids, so accumulate in 64 bits
// when the worst case fits and fall back to mpz otherwise.
mpz_class composition_power_sum(std::span<const unsigned> degrees,
                                unsigned c) {
  const unsigned r = static_cast<unsigned>(degrees.size());
  if (r == 0) return c == 0 ? 1 : 0;
  if (c < r) return 0;

  unsigned delta = 0;
  for (unsigned d : degrees) delta = std::max(delta, d);
  bool fits_u64 = true;
  {
    // crude bound: |M(c)| * delta^c <= 2^c * delta^c
    long double bound = 1.0L;
    for (unsigned i = 0; i < c; ++i) {
      bound *= 2.0L * std::max(1u, delta);
      if (bound > 9.0e17L) {
        fits_u64 = false;
        break;
      }
    }
  }

  std::vector<unsigned> nu(r, 1);
  if (fits_u64) {
    std::uint64_t total = 0;
    struct Rec {
      std::span<const unsigned> d;
      std::vector<unsigned>& nu;
      unsigned r;
      std::uint64_t& total;
      void go(unsigned pos, unsigned remaining, std::uint64_t prod) {
        if (pos + 1 == r) {
          std::uint64_t term = prod;
          for (unsigned e = 0; e < remaining; ++e) term *= d[pos];
          total += term;
          return;
        }
        const unsigned parts_left = r - pos - 1;
        std::uint64_t p = prod;
        for (unsigned v = 1; v + parts_left <= remaining; ++v) {
          p *= d[pos];
          go(pos + 1, remaining - v, p);
        }
      }
    } rec{degrees, nu, r, total};
    rec.go(0, c, 1);
    return mpz_class(static_cast<unsigned long>(total));
  }

  mpz_class total = 0;
  struct Rec {
    std::span<const unsigned> d;
    unsigned r;
    mpz_class& total;
    void go(unsigned pos, unsigned remaining, const mpz_class& prod) {
      if (pos + 1 == r) {
        mpz_class term = prod * mpz_pow(mpz_class(d[pos]), remaining);
        total += term;
        return;
      }
      const unsigned parts_left = r - pos - 1;
      mpz_class p = prod;
      for (unsigned v = 1; v + parts_left <= remaining; ++v) {
        p *= d[pos];
        go(pos + 1, remaining - v, p);
      }
    }
  } rec{degrees, r, total};
  rec.go(0, c, 1);
  return total;
}

void require_shape(bool ok, const char* what) {
  if (!ok) throw ShapeMismatchError(what);
}

// (x - 1)/x * ((x - 1)^M - (-1)^M) evaluated exactly at x = d; exact since
// (d-1)^M = (-1)^M (mod d).
mpz_class hypersurface_core(unsigned M, unsigned d) {
  const mpz_class dm1 = mpz_class(d) - 1;
  mpz_class t = mpz_pow(dm1, M) - ((M % 2 == 0) ? 1 : -1);
  mpz_class out = dm1 * t;
  mpz_class r;
  mpz_divexact_ui(r.get_mpz_t(), out.get_mpz_t(), d);
  return r;
}

}  // namespace

BettiValue primitive_betti(unsigned N, std::span<const unsigned> degrees) {
  const unsigned r = static_cast<unsigned>(degrees.size());
  if (r > N) throw InvalidParamsError("codimension exceeds ambient dimension");
  const long n = static_cast<long>(N) - r;

  mpz_class sum = 0;
  for (unsigned c = r; c <= N; ++c) {
    mpz_class inner = composition_power_sum(degrees, c);
    mpz_class term = binomial(N + 1, c + 1) * inner;
    if (c % 2 == 1) term = -term;
    sum += term;
  }
  if (N % 2 == 1) sum = -sum;
  mpz_class lead = mpz_class(n + 1);
  if (n % 2 == 0) lead = -lead;  // (-1)^{n+1} (n+1)
  BettiValue out;
  out.value = lead + sum;
  out.ambient = N;
  out.dim = n;
  out.multidegree.assign(degrees.begin(), degrees.end());
  return out;
}

BettiValue primitive_betti(unsigned N, const Multidegree& md) {
  return primitive_betti(N, std::span<const unsigned>(md.degrees));
}

std::pair<mpz_class, mpz_class> betti_bound(unsigned N,
                                            const Multidegree& md) {
  const unsigned r = md.r();
  if (r > N) throw InvalidParamsError("codimension exceeds ambient dimension");
  const long n = static_cast<long>(N) - r;
  const mpz_class d = md.d();
  const unsigned delta = md.delta();
  mpz_class lead = mpz_class(n + 1);
  if (n % 2 == 0) lead = -lead;
  const mpz_class b = binomial(N + 1, static_cast<unsigned long>(n));
  mpz_class first = lead + d * b * mpz_pow(mpz_class(delta + 1),
                                           static_cast<unsigned long>(n));
  mpz_class second = b * mpz_pow(mpz_class(delta + 1), N);
  return {first, second};
}

mpz_class closed_form_hypersurface(unsigned N, unsigned d) {
  require_shape(N >= 1 && d >= 1, "hypersurface closed form needs N >= 1");
  return hypersurface_core(N, d);
}

mpz_class closed_form_ci_curve(unsigned N, const Multidegree& md) {
  require_shape(N >= 2 && md.r() == N - 1,
                "complete-intersection curve needs r = N - 1");
  mpz_class sum = 0;
  for (unsigned di : md.degrees) sum += di;
  return md.d() * (sum - N - 1) + 2;
}

mpz_class closed_form_ci_surface(unsigned N, const Multidegree& md) {
  require_shape(N >= 3 && md.r() == N - 2,
                "complete-intersection surface needs r = N - 2");
  const unsigned r = md.r();
  mpz_class sum = 0, sum_sq = 0;
  for (unsigned di : md.degrees) {
    sum += di;
    sum_sq += mpz_class(di) * di;
  }
  // b_2 = b'_2 + 1
  //     = d*(binom(r+3,2) - (r+3)*sum + sum_{i<=j} d_i d_j) - 2
  mpz_class pairs = (sum * sum + sum_sq) / 2;
  mpz_class bracket = binomial(r + 3, 2) - mpz_class(r + 3) * sum + pairs;
  return md.d() * bracket - 3;
}

mpz_class closed_form_two_forms(unsigned N, unsigned d) {
  require_shape(N >= 2 && d >= 1, "two-forms closed form needs N >= 2");
  const mpz_class dm1 = mpz_class(d) - 1;
  mpz_class out = mpz_class(N - 1) * mpz_pow(dm1, N);
  // + 2*(d-1)/d * ((d-1)^{N-1} + (-1)^N)
  mpz_class t = mpz_pow(dm1, N - 1) + ((N % 2 == 0) ? 1 : -1);
  mpz_class num = 2 * dm1 * t;
  mpz_class frac;
  mpz_divexact_ui(frac.get_mpz_t(), num.get_mpz_t(), d);
  return out + frac;
}

std::vector<mpz_class> hilbert_series_ci(unsigned N, const Multidegree& md,
                                         unsigned t_max) {
  // numerator prod (1 - T^{d_i}), truncated
  std::vector<mpz_class> coeffs(t_max + 1, 0);
  coeffs[0] = 1;
  for (unsigned di : md.degrees) {
    for (long t = static_cast<long>(t_max); t >= 0; --t) {
      if (t >= static_cast<long>(di)) coeffs[t] -= coeffs[t - di];
      // below d_i the factor leaves the coefficient unchanged
    }
  }
  // divide by (1 - T)^{N+1}: N+1 running prefix sums
  for (unsigned i = 0; i <= N; ++i)
    for (unsigned t = 1; t <= t_max; ++t) coeffs[t] += coeffs[t - 1];
  return coeffs;
}

mpz_class ci_degree(const Multidegree& md) { return md.d(); }

mpz_class plane_arith_genus(unsigned d) {
  if (d < 1) throw InvalidParamsError("degree must be >= 1");
  return mpz_class(d - 1) * mpz_class(static_cast<long>(d) - 2) / 2;
}

int epsilon(long i) { return (i % 2 == 0) ? 1 : 0; }

std::pair<mpz_class, mpz_class> bracket_half_power(const mpz_class& coeff,
                                                   const mpz_class& q,
                                                   long half_exponent_num) {
  if (sgn(coeff) < 0 || half_exponent_num < 0)
    throw InvalidParamsError("bracket_half_power needs nonnegative inputs");
  if (half_exponent_num % 2 == 0) {
    mpz_class v =
        coeff * mpz_pow(q, static_cast<unsigned long>(half_exponent_num / 2));
    return {v, v};
  }
  mpz_class m =
      coeff * coeff * mpz_pow(q, static_cast<unsigned long>(half_exponent_num));
  mpz_class f = isqrt_floor(m);
  mpz_class c = f * f == m ? f : f + 1;
  return {f, c};
}

}  // namespace weilbounds
