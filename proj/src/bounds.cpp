#include "weilbounds/bounds.hpp"

#include <algorithm>

namespace weilbounds {

namespace {

mpz_class katz_style_bound(unsigned lead, unsigned m, unsigned delta,
                           unsigned N) {
  return mpz_class(lead) * mpz_pow(mpz_class(2), m) *
         mpz_pow(mpz_class(std::uint64_t{m} * delta + 3), N + 1);
}

Window not_applicable(std::string reason) {
  Window w;
  w.applicable = false;
  w.reason = std::move(reason);
  return w;
}

void add_bracket(Window& w, const mpz_class& coeff, const mpz_class& q,
                 long half_exponent_num) {
  auto [lo, hi] = bracket_half_power(coeff, q, half_exponent_num);
  w.radius_floor += lo;
  w.radius_ceil += hi;
}

}  // namespace

BoundInputs bound_inputs(const VarietySpec& v, bool katz_eight) {
  BoundInputs in;
  in.q = v.field->q();
  in.N = v.ambient_dim;
  in.n = v.declared_dim;
  in.m = static_cast<unsigned>(v.forms.size());
  in.multidegree = v.multidegree().degrees;
  in.delta = v.delta();
  in.d = v.degree();
  in.s = v.declared_sing_dim;
  in.ambient = v.ambient;
  in.flags = v.flags;
  in.katz_eight = katz_eight;
  return in;
}

mpz_class katz_sigma_bound(unsigned m, unsigned delta, unsigned N) {
  return katz_style_bound(8, m, delta, N);
}

mpz_class tau_bound(unsigned m, unsigned delta, unsigned N, bool katz_eight) {
  return katz_style_bound(katz_eight ? 8 : 9, m, delta, N);
}

mpz_class affine_constant(unsigned m, unsigned delta, unsigned N) {
  return katz_style_bound(6, m, delta, N);
}

Window main_theorem_window(const BoundInputs& in) {
  if (in.ambient != Ambient::projective)
    return not_applicable("projective varieties only");
  if (!in.flags.complete_intersection)
    return not_applicable("requires the complete-intersection flag");
  if (in.s < -1 || in.s > in.n - 1)
    return not_applicable("needs -1 <= s <= n-1");
  if (in.s == -1 && !in.flags.nonsingular)
    return not_applicable("s = -1 needs the nonsingular flag");
  if (in.n < 0) return not_applicable("dimension must be >= 0");

  Window w;
  w.applicable = true;
  w.center = pi(in.n, in.q);
  // leading term b'_{n-s-1}(N-s-1, d) q^{(n+s+1)/2}; absent when s = n-1
  if (in.s < in.n - 1) {
    const unsigned amb = static_cast<unsigned>(in.N - in.s - 1);
    const mpz_class coeff = primitive_betti(amb, in.multidegree).value;
    add_bracket(w, coeff, in.q, in.n + in.s + 1);
  }
  // constant term C_s q^{(n+s)/2}; C_{-1} = 0 for nonsingular X
  if (in.s >= 0) {
    const mpz_class c = tau_bound(in.m, in.delta, in.N, in.katz_eight);
    add_bracket(w, c, in.q, in.n + in.s);
    w.reason = "C_s replaced by its tau upper bound";
  }
  if (in.s == in.n - 3) {
    w.reason += (w.reason.empty() ? "" : "; ");
    w.reason +=
        "s = n-3: leading coefficient b'_2(N-n+2, d) from the general bound; "
        "the codimension-2 shortcut's printed ambient N-n-2 looks "
        "inconsistent and is not used";
  }
  return w;
}

Window deligne_window(const BoundInputs& in) {
  if (!in.flags.nonsingular)
    return not_applicable("requires the nonsingular flag");
  BoundInputs tmp = in;
  tmp.s = -1;
  Window w = main_theorem_window(tmp);
  return w;
}

Window normal_ci_window(const BoundInputs& in) {
  if (!in.flags.normal) return not_applicable("requires the normal flag");
  if (in.n < 1) return not_applicable("needs dimension >= 1");
  BoundInputs tmp = in;
  tmp.s = in.n - 2;
  if (tmp.s == -1 && !in.flags.nonsingular)
    tmp.flags.nonsingular = true;  // normality of a curve forces smoothness
  return main_theorem_window(tmp);
}

Window isolated_sing_window(const BoundInputs& in) {
  if (in.ambient != Ambient::projective)
    return not_applicable("projective varieties only");
  if (!in.flags.complete_intersection)
    return not_applicable("requires the complete-intersection flag");
  if (!in.flags.isolated_singularities)
    return not_applicable("requires the isolated-singularities flag");
  if (in.n < 1) return not_applicable("needs dimension >= 1");
  Window w;
  w.applicable = true;
  w.conditional_rnp = true;
  w.center = pi(in.n, in.q);
  const mpz_class lead =
      primitive_betti(in.N - 1, in.multidegree).value;
  add_bracket(w, lead, in.q, in.n + 1);
  // b_n(N,d) + eps_n = b'_n(N,d) + 2 eps_n
  const mpz_class second = primitive_betti(in.N, in.multidegree).value +
                           2 * epsilon(in.n);
  add_bracket(w, second, in.q, in.n);
  return w;
}

Window hypersurface_isolated_window(const BoundInputs& in) {
  if (in.ambient != Ambient::projective)
    return not_applicable("projective varieties only");
  if (in.m != 1) return not_applicable("hypersurfaces only");
  if (!in.flags.isolated_singularities)
    return not_applicable("requires the isolated-singularities flag");
  if (in.n < 1) return not_applicable("needs dimension >= 1");
  Window w;
  w.applicable = true;
  w.conditional_rnp = true;
  w.center = pi(in.n, in.q);
  const mpz_class coeff =
      mpz_pow(in.d - 1, static_cast<unsigned long>(in.n + 1));
  add_bracket(w, coeff, in.q, in.n + 1);
  return w;
}

Window curve_weil_window(const BoundInputs& in) {
  if (in.ambient != Ambient::projective)
    return not_applicable("projective varieties only");
  if (in.n != 1) return not_applicable("curves only");
  if (!in.flags.irreducible)
    return not_applicable("requires the irreducible flag");
  Window w;
  w.applicable = true;
  w.center = in.q + 1;
  const mpz_class b1 = (in.d - 1) * (in.d - 2);
  add_bracket(w, b1, in.q, 1);
  return w;
}

Window lang_weil_window(const mpz_class& q, long n, const mpz_class& d,
                        unsigned m, unsigned delta, unsigned N,
                        bool katz_eight) {
  if (n < 1) return not_applicable("needs dimension >= 1");
  Window w;
  w.applicable = true;
  w.center = pi(n, q);
  const mpz_class lead = (d - 1) * (d - 2);
  add_bracket(w, lead, q, 2 * n - 1);
  add_bracket(w, tau_bound(m, delta, N, katz_eight), q, 2 * (n - 1));
  return w;
}

Window affine_lang_weil_window(const mpz_class& q, long n, const mpz_class& d,
                               unsigned m, unsigned delta, unsigned N) {
  if (n < 1) return not_applicable("needs dimension >= 1");
  Window w;
  w.applicable = true;
  w.center = mpz_pow(q, static_cast<unsigned long>(n));
  const mpz_class lead = (d - 1) * (d - 2);
  add_bracket(w, lead, q, 2 * n - 1);
  add_bracket(w, affine_constant(m, delta, N), q, 2 * (n - 1));
  return w;
}

mpz_class schmidt_lower_bound(const mpz_class& q, unsigned N,
                              const mpz_class& d) {
  if (N < 2) throw InvalidParamsError("schmidt bound needs N >= 2");
  const mpz_class main = mpz_pow(q, N - 1);
  auto [lo, hi] = bracket_half_power((d - 1) * (d - 2), q, 2 * N - 3);
  const mpz_class tail =
      12 * mpz_pow(d + 3, N + 1) * mpz_pow(q, N - 2);
  return main - hi - tail;
}

mpz_class serre_upper(const mpz_class& q, long n, const mpz_class& d) {
  if (n < 0) throw InvalidParamsError("dimension must be >= 0");
  return d * mpz_pow(q, static_cast<unsigned long>(n)) + pi(n - 1, q);
}

mpz_class algset_upper(const mpz_class& q, long n, const mpz_class& d) {
  return d * pi(n, q);
}

mpz_class lachaud_upper(const mpz_class& q, unsigned N, long n,
                        const mpz_class& d) {
  if (2 * n < static_cast<long>(N))
    throw InvalidParamsError("lachaud bound needs n >= N/2");
  return d * pi(n, q) - (d - 1) * pi(2 * n - static_cast<long>(N), q);
}

Window small_codim_window(const mpz_class& q, unsigned N, long n, long s,
                          unsigned m, unsigned delta, bool katz_eight) {
  const long codim = static_cast<long>(N) - n;
  if (codim > n - s - 1)
    return not_applicable("needs codim X <= n - s - 1");
  Window w;
  w.applicable = true;
  w.surrogate_constant = true;
  w.reason = "C_{N+s} replaced by its tau upper bound";
  w.center = pi(n, q);
  add_bracket(w, tau_bound(m, delta, N, katz_eight), q,
              static_cast<long>(N) + s);
  return w;
}

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::pass: return "PASS";
    case Verdict::pass_marginal: return "PASS_MARGINAL";
    case Verdict::fail: return "FAIL";
    case Verdict::not_applicable: return "N/A";
  }
  return "?";
}

namespace {

BoundRecord record_from_window(std::string name, unsigned r, const Window& w,
                               const mpz_class& actual, bool conjecture) {
  BoundRecord rec;
  rec.name = std::move(name);
  rec.r = r;
  rec.kind = BoundKind::two_sided;
  rec.is_conjecture = conjecture;
  rec.note = w.reason;
  if (w.conditional_rnp) {
    rec.note += (rec.note.empty() ? "" : "; ");
    rec.note += "conditional on resolution of singularities (R_{n,p})";
  }
  if (w.surrogate_constant) {
    rec.note += (rec.note.empty() ? "" : "; ");
    rec.note += "surrogate C";
  }
  if (!w.applicable) {
    rec.applicable = false;
    rec.verdict = Verdict::not_applicable;
    return rec;
  }
  rec.applicable = true;
  rec.center = w.center;
  rec.bound_floor = w.radius_floor;
  rec.bound_ceil = w.radius_ceil;
  rec.actual = actual;
  const mpz_class delta = abs(actual - w.center);
  if (delta <= w.radius_floor)
    rec.verdict = Verdict::pass;
  else if (delta <= w.radius_ceil)
    rec.verdict = Verdict::pass_marginal;
  else
    rec.verdict = Verdict::fail;
  if (rec.verdict == Verdict::fail && !rec.is_conjecture) {
    rec.note += (rec.note.empty() ? "" : "; ");
    rec.note += "violation suggests a declared flag is wrong";
  }
  return rec;
}

BoundRecord record_one_sided(std::string name, unsigned r, BoundKind kind,
                             const mpz_class& bound, const mpz_class& actual,
                             bool conjecture, std::string note = "") {
  BoundRecord rec;
  rec.name = std::move(name);
  rec.r = r;
  rec.kind = kind;
  rec.applicable = true;
  rec.is_conjecture = conjecture;
  rec.note = std::move(note);
  rec.bound_floor = bound;
  rec.bound_ceil = bound;
  rec.actual = actual;
  const bool ok =
      kind == BoundKind::upper ? actual <= bound : actual >= bound;
  rec.verdict = ok ? Verdict::pass : Verdict::fail;
  if (kind == BoundKind::lower && sgn(bound) <= 0) {
    rec.note += (rec.note.empty() ? "" : "; ");
    rec.note += "vacuous (bound <= 0)";
  }
  if (rec.verdict == Verdict::fail && !rec.is_conjecture) {
    rec.note += (rec.note.empty() ? "" : "; ");
    rec.note += "violation suggests a declared flag is wrong";
  }
  return rec;
}

BoundRecord skip_record(std::string name, unsigned r, std::string reason,
                        bool conjecture = false) {
  BoundRecord rec;
  rec.name = std::move(name);
  rec.r = r;
  rec.applicable = false;
  rec.verdict = Verdict::not_applicable;
  rec.note = std::move(reason);
  rec.is_conjecture = conjecture;
  return rec;
}

}  // namespace

BoundReport evaluate_all(const VarietySpec& v, const CountTable& counts,
                         bool katz_eight) {
  if (counts.entries.find(1) == counts.entries.end())
    throw InsufficientCountsError("bound evaluation needs the r = 1 count");
  BoundReport report;
  const BoundInputs base = bound_inputs(v, katz_eight);

  for (const auto& [r, actual] : counts.entries) {
    BoundInputs in = base;
    in.q = mpz_pow(base.q, r);

    if (v.ambient == Ambient::projective) {
      report.records.push_back(record_from_window(
          "deligne", r, deligne_window(in), actual, false));
      report.records.push_back(record_from_window(
          "main_theorem", r, main_theorem_window(in), actual, false));
      report.records.push_back(record_from_window(
          "normal_ci", r, normal_ci_window(in), actual, false));
      report.records.push_back(record_from_window(
          "isolated_sing", r, isolated_sing_window(in), actual, false));
      report.records.push_back(
          record_from_window("hypersurface_isolated", r,
                             hypersurface_isolated_window(in), actual, false));
      report.records.push_back(record_from_window(
          "curve_weil", r, curve_weil_window(in), actual, false));
      if (in.flags.irreducible) {
        report.records.push_back(record_from_window(
            "lang_weil", r,
            lang_weil_window(in.q, in.n, in.d, in.m, in.delta, in.N,
                             katz_eight),
            actual, false));
      } else {
        report.records.push_back(skip_record(
            "lang_weil", r, "requires the irreducible flag"));
      }
      report.records.push_back(record_from_window(
          "small_codim", r,
          small_codim_window(in.q, in.N, in.n, in.s, in.m, in.delta,
                             katz_eight),
          actual, false));

      if (in.m == 1 && in.d <= in.q + 1) {
        report.records.push_back(record_one_sided(
            "serre_upper", r, BoundKind::upper,
            serre_upper(in.q, in.n, in.d), actual, false));
      } else {
        report.records.push_back(skip_record(
            "serre_upper", r,
            in.m == 1 ? "needs d <= q + 1" : "hypersurfaces only"));
      }
      report.records.push_back(record_one_sided(
          "algset_upper", r, BoundKind::upper, algset_upper(in.q, in.n, in.d),
          actual, false,
          "holds for every projective algebraic set of this dimension and "
          "degree"));
      if (in.flags.complete_intersection && 2 * in.n >= in.N &&
          in.d <= in.q + 1) {
        report.records.push_back(record_one_sided(
            "lachaud_upper", r, BoundKind::upper,
            lachaud_upper(in.q, in.N, in.n, in.d), actual, true));
      } else {
        report.records.push_back(
            skip_record("lachaud_upper", r,
                        "needs complete intersection, n >= N/2, d <= q + 1",
                        true));
      }
    } else {
      if (in.flags.irreducible) {
        report.records.push_back(record_from_window(
            "affine_lang_weil", r,
            affine_lang_weil_window(in.q, in.n, in.d, in.m, in.delta, in.N),
            actual, false));
      } else {
        report.records.push_back(skip_record(
            "affine_lang_weil", r, "requires the irreducible flag"));
      }
      if (in.m == 1 && in.flags.irreducible && in.N >= 2 &&
          in.n == static_cast<long>(in.N) - 1) {
        report.records.push_back(record_one_sided(
            "schmidt_lower", r, BoundKind::lower,
            schmidt_lower_bound(in.q, in.N, in.d), actual, false,
            "assumes absolute irreducibility"));
      } else {
        report.records.push_back(
            skip_record("schmidt_lower", r,
                        "needs an absolutely irreducible affine hypersurface "
                        "with N >= 2"));
      }
    }
  }
  return report;
}

}  // namespace weilbounds
