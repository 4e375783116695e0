#pragma once

#include <string>
#include <vector>

#include <gmpxx.h>

#include "weilbounds/counter.hpp"
#include "weilbounds/invariants.hpp"

namespace weilbounds {

/// Everything the inequality evaluators need, detached from VarietySpec so
/// that q can be substituted by q^r when checking counts over extensions.
struct BoundInputs {
  mpz_class q;
  unsigned N = 0;                   // ambient dimension
  long n = 0;                       // declared dimension
  unsigned m = 0;                   // number of defining forms
  std::vector<unsigned> multidegree;
  unsigned delta = 1;               // max form degree
  mpz_class d;                      // product of form degrees
  long s = -1;                      // declared dim Sing X
  Ambient ambient = Ambient::projective;
  VarietyFlags flags;
  bool katz_eight = false;          // sharper constant toggle
};

BoundInputs bound_inputs(const VarietySpec& v, bool katz_eight = false);

/// 8 * 2^m * (m*delta + 3)^{N+1}: bound on the sum of Betti numbers of a
/// type-(m, N, d) projective scheme.
mpz_class katz_sigma_bound(unsigned m, unsigned delta, unsigned N);

/// 9 * 2^m * (m*delta + 3)^{N+1}: bound on the total degree tau of
/// Z(X,T)/Z(P^n,T); with katz_eight the leading 9 becomes 8.
mpz_class tau_bound(unsigned m, unsigned delta, unsigned N,
                    bool katz_eight = false);

/// 6 * 2^m * (m*delta + 3)^{N+1}: the affine analogue.
mpz_class affine_constant(unsigned m, unsigned delta, unsigned N);

/// A point-count window |N_1 - center| <= radius, with the radius
/// bracketed by exact integers: PASS needs the floor, only a ceiling
/// violation is a FAIL.
struct Window {
  bool applicable = false;
  std::string reason;   // why not applicable / caveats
  mpz_class center;
  mpz_class radius_floor;
  mpz_class radius_ceil;
  bool conditional_rnp = false;  // needs resolution of singularities
  bool surrogate_constant = false;
};

/// |N_1 - pi_n| <= b'_{n-s-1}(N-s-1, d) q^{(n+s+1)/2} + C_s q^{(n+s)/2},
/// with C_{-1} = 0 for nonsingular X and C_s <= tau otherwise; the leading
/// term is dropped when s = n-1.
Window main_theorem_window(const BoundInputs& in);

Window deligne_window(const BoundInputs& in);        // s = -1, nonsingular
Window normal_ci_window(const BoundInputs& in);      // s = n-2, normal
Window isolated_sing_window(const BoundInputs& in);  // s = 0, conditional
Window hypersurface_isolated_window(const BoundInputs& in);
Window curve_weil_window(const BoundInputs& in);     // n = 1, irreducible

Window lang_weil_window(const mpz_class& q, long n, const mpz_class& d,
                        unsigned m, unsigned delta, unsigned N,
                        bool katz_eight = false);
Window affine_lang_weil_window(const mpz_class& q, long n, const mpz_class& d,
                               unsigned m, unsigned delta, unsigned N);

/// q^{N-1} - (d-1)(d-2) q^{N-3/2} - 12 (d+3)^{N+1} q^{N-2}, floor-evaluated;
/// may be negative (vacuous).
mpz_class schmidt_lower_bound(const mpz_class& q, unsigned N,
                              const mpz_class& d);

mpz_class serre_upper(const mpz_class& q, long n, const mpz_class& d);
mpz_class algset_upper(const mpz_class& q, long n, const mpz_class& d);
mpz_class lachaud_upper(const mpz_class& q, unsigned N, long n,
                        const mpz_class& d);

Window small_codim_window(const mpz_class& q, unsigned N, long n, long s,
                          unsigned m, unsigned delta,
                          bool katz_eight = false);

enum class Verdict { pass, pass_marginal, fail, not_applicable };
std::string to_string(Verdict v);

enum class BoundKind { two_sided, upper, lower };

struct BoundRecord {
  std::string name;
  unsigned r = 1;  // which extension the check ran against
  BoundKind kind = BoundKind::two_sided;
  bool applicable = false;
  std::string note;
  mpz_class center;        // two-sided only
  mpz_class bound_floor;   // radius (two-sided) or the bound itself
  mpz_class bound_ceil;
  mpz_class actual;
  Verdict verdict = Verdict::not_applicable;
  bool is_conjecture = false;
};

struct BoundReport {
  std::vector<BoundRecord> records;

  bool has_failure(bool include_conjectures = false) const {
    for (const auto& rec : records)
      if (rec.verdict == Verdict::fail &&
          (include_conjectures || !rec.is_conjecture))
        return true;
    return false;
  }
};

/// Evaluates every applicable inequality against N_r for each r in the
/// table (substituting q^r for q), with exact verdicts.
BoundReport evaluate_all(const VarietySpec& v, const CountTable& counts,
                         bool katz_eight = false);

}  // namespace weilbounds
