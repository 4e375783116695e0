#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "weilbounds/bounds.hpp"

using namespace weilbounds;

namespace {

VarietySpec projective(std::uint64_t p, unsigned N,
                       std::vector<std::string> forms) {
  VarietySpec v;
  v.field = make_field(p, 1);
  v.ambient = Ambient::projective;
  v.ambient_dim = N;
  for (const auto& s : forms) v.forms.push_back(MPoly::parse(s, N + 1, p));
  v.declared_dim = static_cast<int>(N - forms.size());
  return v;
}

BoundInputs inputs(const mpz_class& q, unsigned N, long n, long s,
                   std::vector<unsigned> md, VarietyFlags flags) {
  BoundInputs in;
  in.q = q;
  in.N = N;
  in.n = n;
  in.m = static_cast<unsigned>(md.size());
  in.multidegree = md;
  in.delta = 1;
  for (unsigned d : md) in.delta = std::max(in.delta, d);
  in.d = 1;
  for (unsigned d : md) in.d *= d;
  in.s = s;
  in.flags = flags;
  return in;
}

const BoundRecord& find_record(const BoundReport& rep, const std::string& name,
                               unsigned r = 1) {
  for (const auto& rec : rep.records)
    if (rec.name == name && rec.r == r) return rec;
  REQUIRE(false);
  throw std::logic_error("unreachable");
}

}  // namespace

TEST_CASE("constant arithmetic") {
  CHECK(katz_sigma_bound(1, 3, 2) == 3456);
  CHECK(katz_sigma_bound(1, 1, 1) == 256);
  CHECK(katz_sigma_bound(2, 2, 3) == 76832);
  CHECK(tau_bound(1, 3, 2) == 3888);
  CHECK(tau_bound(1, 2, 3) == 11250);
  CHECK(tau_bound(3, 1, 2) == 15552);
  CHECK(affine_constant(1, 3, 2) == 2592);
  CHECK(affine_constant(1, 1, 2) == 768);
  CHECK(affine_constant(2, 2, 2) == 8232);
  // the sharper-constant toggle
  CHECK(tau_bound(1, 3, 2, true) == katz_sigma_bound(1, 3, 2));
}

TEST_CASE("constant ordering 6 < 8 < 9 on a grid") {
  for (unsigned m = 1; m <= 4; ++m)
    for (unsigned delta = 1; delta <= 5; ++delta)
      for (unsigned N = 1; N <= 5; ++N) {
        CHECK(affine_constant(m, delta, N) < katz_sigma_bound(m, delta, N));
        CHECK(katz_sigma_bound(m, delta, N) < tau_bound(m, delta, N));
      }
}

TEST_CASE("main theorem window: nonsingular plane cubic over F_5") {
  VarietyFlags flags;
  flags.nonsingular = true;
  flags.irreducible = true;
  flags.complete_intersection = true;
  auto in = inputs(5, 2, 1, -1, {3}, flags);
  Window w = main_theorem_window(in);
  REQUIRE(w.applicable);
  CHECK(w.center == 6);
  CHECK(w.radius_floor == 4);  // isqrt(4*5)
  CHECK(w.radius_ceil == 5);
  // identical to the Deligne window
  Window d = deligne_window(in);
  REQUIRE(d.applicable);
  CHECK(d.center == w.center);
  CHECK(d.radius_floor == w.radius_floor);
  CHECK(d.radius_ceil == w.radius_ceil);
}

TEST_CASE("main theorem window: cone over a plane cubic in P^3, s = 0") {
  VarietyFlags flags;
  flags.irreducible = true;
  flags.complete_intersection = true;
  flags.isolated_singularities = true;
  auto in = inputs(5, 3, 2, 0, {3}, flags);
  Window w = main_theorem_window(in);
  REQUIRE(w.applicable);
  CHECK(w.center == 31);  // pi_2(5)
  // leading term 2*q^{3/2}: floor isqrt(4*125) = 22; constant term
  // tau(1,3,3)*q = 23328*5 exact
  CHECK(tau_bound(1, 3, 3) == 23328);
  CHECK(w.radius_floor == 22 + 23328 * 5);
  CHECK(w.radius_ceil == 23 + 23328 * 5);
}

TEST_CASE("main theorem window: s = n-1 drops the leading term") {
  VarietyFlags flags;
  flags.irreducible = true;
  flags.complete_intersection = true;
  auto in = inputs(5, 2, 1, 0, {3}, flags);  // n = 1, s = 0 = n-1
  Window w = main_theorem_window(in);
  REQUIRE(w.applicable);
  // radius = tau(1,3,2) * q^{1/2} only
  auto [lo, hi] = bracket_half_power(tau_bound(1, 3, 2), 5, 1);
  CHECK(w.radius_floor == lo);
  CHECK(w.radius_ceil == hi);
}

TEST_CASE("window applicability rules") {
  VarietyFlags none;
  auto in = inputs(5, 2, 1, -1, {3}, none);
  CHECK_FALSE(main_theorem_window(in).applicable);  // no CI flag
  in.flags.complete_intersection = true;
  CHECK_FALSE(main_theorem_window(in).applicable);  // s=-1 needs nonsingular
  in.s = 5;
  CHECK_FALSE(main_theorem_window(in).applicable);  // s out of range
  CHECK_FALSE(deligne_window(in).applicable);
  CHECK_FALSE(curve_weil_window(in).applicable);  // not irreducible
  in.flags.irreducible = true;
  CHECK(curve_weil_window(in).applicable);
  in.n = 2;
  CHECK_FALSE(curve_weil_window(in).applicable);  // curves only
}

TEST_CASE("curve weil window") {
  VarietyFlags flags;
  flags.irreducible = true;
  auto in = inputs(5, 2, 1, 0, {3}, flags);
  Window w = curve_weil_window(in);
  REQUIRE(w.applicable);
  CHECK(w.center == 6);
  CHECK(w.radius_floor == 4);
  CHECK(w.radius_ceil == 5);
}

TEST_CASE("isolated-singularity windows") {
  VarietyFlags flags;
  flags.irreducible = true;
  flags.complete_intersection = true;
  flags.isolated_singularities = true;
  auto in = inputs(5, 2, 1, 0, {3}, flags);
  Window h = hypersurface_isolated_window(in);
  REQUIRE(h.applicable);
  CHECK(h.conditional_rnp);
  CHECK(h.radius_floor == 20);  // (d-1)^{n+1} q^{(n+1)/2} = 4*5
  CHECK(h.radius_ceil == 20);

  Window s = isolated_sing_window(in);
  REQUIRE(s.applicable);
  // b'_0(1,(3)) q + (b'_1(2,(3)) + 2 eps_1) sqrt(q) = 2*5 + 2*sqrt(5)
  CHECK(s.radius_floor == 10 + 4);
  CHECK(s.radius_ceil == 10 + 5);
}

TEST_CASE("normal window equals the main theorem at s = n-2") {
  VarietyFlags flags;
  flags.irreducible = true;
  flags.complete_intersection = true;
  flags.normal = true;
  auto in = inputs(7, 3, 2, 0, {2}, flags);
  Window nw = normal_ci_window(in);
  auto in2 = in;
  in2.s = 0;  // n - 2
  Window mw = main_theorem_window(in2);
  REQUIRE(nw.applicable);
  REQUIRE(mw.applicable);
  CHECK(nw.radius_floor == mw.radius_floor);
  CHECK(nw.radius_ceil == mw.radius_ceil);
}

TEST_CASE("lang-weil windows") {
  Window w = lang_weil_window(5, 1, 3, 1, 3, 2);
  REQUIRE(w.applicable);
  CHECK(w.center == 6);
  CHECK(w.radius_floor == 4 + 3888);
  CHECK(w.radius_ceil == 5 + 3888);

  // d = 1 or 2: zero leading term
  Window w2 = lang_weil_window(5, 1, 2, 1, 2, 2);
  CHECK(w2.radius_floor == tau_bound(1, 2, 2));
  CHECK(w2.radius_ceil == w2.radius_floor);

  // cone over a cubic in P^3: 2 q^{3/2} + tau(1,3,3) q
  Window w3 = lang_weil_window(5, 2, 3, 1, 3, 3);
  CHECK(w3.radius_floor == 22 + 23328 * 5);
  CHECK(w3.radius_ceil == 23 + 23328 * 5);

  Window a = affine_lang_weil_window(5, 1, 1, 1, 1, 2);
  REQUIRE(a.applicable);
  CHECK(a.center == 5);
  CHECK(a.radius_floor == affine_constant(1, 1, 2));  // zero leading term

  // d = 2, n = 1 also has a vanishing leading term
  Window a2 = affine_lang_weil_window(5, 1, 2, 1, 2, 2);
  CHECK(a2.radius_floor == affine_constant(1, 2, 2));
  CHECK(a2.radius_ceil == a2.radius_floor);
}

TEST_CASE("schmidt lower bound") {
  // (5, 2, 3): 5 - ceil(2 sqrt 5) - 12*6^3 < 0, vacuous
  CHECK(schmidt_lower_bound(5, 2, 3) == mpz_class(5 - 5 - 2592));
  // d = 1: q^{N-1} - 12*4^{N+1} q^{N-2}
  CHECK(schmidt_lower_bound(5, 3, 1) == mpz_class(25 - 12 * 256 * 5));
  CHECK_THROWS_AS(schmidt_lower_bound(5, 1, 2), InvalidParamsError);
  // N=2, d=3: positive exactly from q0 found by integer search
  long q0 = 0;
  for (long q = 2; q < 10000; ++q) {
    if (schmidt_lower_bound(q, 2, 3) > 0) {
      q0 = q;
      break;
    }
  }
  CHECK(q0 == 2697);
  CHECK(schmidt_lower_bound(q0 - 1, 2, 3) <= 0);
}

TEST_CASE("one-sided bounds") {
  CHECK(serre_upper(5, 1, 3) == 16);
  CHECK(algset_upper(5, 2, 3) == 93);
  CHECK(lachaud_upper(5, 3, 2, 2) == 56);
  CHECK_THROWS_AS(lachaud_upper(5, 3, 1, 2), InvalidParamsError);
}

TEST_CASE("small codimension window") {
  // N=4, n=3, s=-1: codim 1 <= 3, applicable
  Window w = small_codim_window(3, 4, 3, -1, 1, 2);
  CHECK(w.applicable);
  CHECK(w.surrogate_constant);
  // bracket invariant for the (N+s)/2 exponent
  mpz_class c = tau_bound(1, 2, 4);
  mpz_class m = c * c * mpz_pow(mpz_class(3), 3);
  CHECK(w.radius_floor * w.radius_floor <= m);
  CHECK((w.radius_floor + 1) * (w.radius_floor + 1) > m);
  CHECK(w.radius_ceil - w.radius_floor <= 1);

  // N=3, n=1: codim 2 > n-s-1 for every s >= -1
  for (long s = -1; s <= 0; ++s)
    CHECK_FALSE(small_codim_window(3, 3, 1, s, 2, 2).applicable);
}

TEST_CASE("evaluate_all on the plane cubic fixture") {
  auto v = projective(5, 2, {"x1^2*x2 - x0^3 - x0*x2^2 - x2^3"});
  v.flags.irreducible = true;
  v.flags.nonsingular = true;
  v.flags.normal = true;
  v.flags.complete_intersection = true;
  v.declared_sing_dim = -1;
  CountTable counts = count_table(v, 1);
  REQUIRE(counts.at(1) == 9);
  BoundReport rep = evaluate_all(v, counts);

  CHECK(find_record(rep, "curve_weil").verdict == Verdict::pass);
  CHECK(find_record(rep, "serre_upper").verdict == Verdict::pass);
  CHECK(find_record(rep, "algset_upper").verdict == Verdict::pass);
  CHECK(find_record(rep, "deligne").verdict == Verdict::pass);
  CHECK(find_record(rep, "lachaud_upper").is_conjecture);
  CHECK_FALSE(rep.has_failure());
}

TEST_CASE("evaluate_all: P^2 itself passes every centered window") {
  auto v = projective(5, 2, {});
  v.flags.irreducible = true;
  v.flags.nonsingular = true;
  v.flags.normal = true;
  v.flags.complete_intersection = true;
  v.declared_dim = 2;
  CountTable counts = count_table(v, 2);
  BoundReport rep = evaluate_all(v, counts);
  for (const auto& rec : rep.records) {
    if (!rec.applicable) continue;
    CHECK(rec.verdict == Verdict::pass);
    if (rec.kind == BoundKind::two_sided) CHECK(rec.actual == rec.center);
  }
  CHECK_FALSE(rep.has_failure());
}

TEST_CASE("evaluate_all: reducible conic declared irreducible fails") {
  auto v = projective(5, 2, {"x0*x1"});
  v.flags.irreducible = true;  // the lie under test
  v.declared_sing_dim = 0;
  CountTable counts = count_table(v, 1);
  REQUIRE(counts.at(1) == 11);
  BoundReport rep = evaluate_all(v, counts);
  const auto& cw = find_record(rep, "curve_weil");
  CHECK(cw.verdict == Verdict::fail);
  CHECK(cw.note.find("flag") != std::string::npos);
  CHECK(rep.has_failure());
}

TEST_CASE("evaluate_all checks extensions with q^r substituted") {
  auto v = projective(5, 2, {"x1^2*x2 - x0^3 - x0*x2^2 - x2^3"});
  v.flags.irreducible = true;
  v.flags.nonsingular = true;
  v.flags.complete_intersection = true;
  CountTable counts = count_table(v, 2);
  BoundReport rep = evaluate_all(v, counts);
  const auto& cw2 = find_record(rep, "curve_weil", 2);
  REQUIRE(cw2.applicable);
  CHECK(cw2.center == 26);  // q^2 + 1
  CHECK(cw2.actual == 27);
  CHECK(cw2.verdict == Verdict::pass);  // |27-26| = 1 <= floor(2 sqrt 25) = 10
  CHECK_FALSE(rep.has_failure());
}

TEST_CASE("evaluate_all on affine fixtures") {
  // a line in A^2: center q, zero leading term, radius = affine constant
  VarietySpec line;
  line.field = make_field(5, 1);
  line.ambient = Ambient::affine;
  line.ambient_dim = 2;
  line.forms.push_back(MPoly::parse("x0 + 2*x1", 2, 5));
  line.declared_dim = 1;
  line.flags.irreducible = true;
  line.flags.nonsingular = true;
  line.flags.complete_intersection = true;
  CountTable counts = count_table(line, 1);
  REQUIRE(counts.at(1) == 5);
  BoundReport rep = evaluate_all(line, counts);
  const auto& lw = find_record(rep, "affine_lang_weil");
  REQUIRE(lw.applicable);
  CHECK(lw.center == 5);
  CHECK(lw.bound_floor == affine_constant(1, 1, 2));
  CHECK(lw.bound_ceil == lw.bound_floor);
  CHECK(lw.verdict == Verdict::pass);
  const auto& sch = find_record(rep, "schmidt_lower");
  REQUIRE(sch.applicable);
  CHECK(sch.kind == BoundKind::lower);
  CHECK(sch.verdict == Verdict::pass);
  CHECK_FALSE(rep.has_failure());

  // affine nodal cubic over F_5: window holds against the brute count
  VarietySpec nodal = line;
  nodal.forms.clear();
  nodal.forms.push_back(MPoly::parse("x1^2 - x0^3 - x0^2", 2, 5));
  CountTable nc = count_table(nodal, 1);
  REQUIRE(nc.at(1) == 4);
  BoundReport nrep = evaluate_all(nodal, nc);
  CHECK(find_record(nrep, "affine_lang_weil").verdict == Verdict::pass);
  CHECK_FALSE(nrep.has_failure());
}

TEST_CASE("evaluate_all requires the r = 1 count") {
  auto v = projective(5, 2, {});
  CountTable counts;
  counts.q = 5;
  counts.entries[2] = 31;
  CHECK_THROWS_AS(evaluate_all(v, counts), InsufficientCountsError);
}
