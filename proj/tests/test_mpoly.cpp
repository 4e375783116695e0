#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "weilbounds/mpoly.hpp"

using namespace weilbounds;

namespace {

MPoly random_poly(std::mt19937_64& rng, unsigned nvars, std::uint64_t p,
                  unsigned max_terms, unsigned max_exp) {
  std::uniform_int_distribution<unsigned> nterms(1, max_terms);
  std::uniform_int_distribution<std::uint64_t> coeff(0, p - 1);
  std::uniform_int_distribution<std::uint32_t> expo(0, max_exp);
  std::string src;
  const unsigned t = nterms(rng);
  for (unsigned i = 0; i < t; ++i) {
    if (i) src += " + ";
    src += std::to_string(coeff(rng));
    for (unsigned v = 0; v < nvars; ++v) {
      const std::uint32_t e = expo(rng);
      if (e) src += "*x" + std::to_string(v) + "^" + std::to_string(e);
    }
  }
  return MPoly::parse(src, nvars, p);
}

MPoly random_homogeneous(std::mt19937_64& rng, unsigned nvars,
                         std::uint64_t p, unsigned degree,
                         unsigned max_terms) {
  std::uniform_int_distribution<std::uint64_t> coeff(1, p - 1);
  std::uniform_int_distribution<unsigned> cut(0, degree);
  std::uniform_int_distribution<unsigned> nterms(1, max_terms);
  std::string src;
  const unsigned t = nterms(rng);
  for (unsigned i = 0; i < t; ++i) {
    if (i) src += " + ";
    src += std::to_string(coeff(rng));
    // split `degree` across the variables
    unsigned remaining = degree;
    for (unsigned v = 0; v + 1 < nvars; ++v) {
      std::uniform_int_distribution<unsigned> part(0, remaining);
      const unsigned e = part(rng);
      if (e) src += "*x" + std::to_string(v) + "^" + std::to_string(e);
      remaining -= e;
    }
    if (remaining)
      src += "*x" + std::to_string(nvars - 1) + "^" +
             std::to_string(remaining);
  }
  return MPoly::parse(src, nvars, p);
}

}  // namespace

TEST_CASE("parse examples") {
  auto fermat = MPoly::parse("x0^3 + x1^3 + x2^3", 3, 7);
  CHECK(fermat.terms().size() == 3);
  CHECK(fermat.total_degree() == 3);
  CHECK(fermat.is_homogeneous());

  auto reduced = MPoly::parse("5*x0 + x1", 2, 5);
  REQUIRE(reduced.terms().size() == 1);
  CHECK(reduced.terms()[0].monomial.exponents ==
        std::vector<std::uint32_t>{0, 1});

  auto nodal = MPoly::parse("x1^2*x2 - x0^3 - x0^2*x2", 3, 5);
  CHECK(nodal.terms().size() == 3);
  unsigned ones = 0, fours = 0;
  for (const auto& t : nodal.terms()) {
    if (t.coeff == 1) ++ones;
    if (t.coeff == 4) ++fours;
  }
  CHECK(ones == 1);
  CHECK(fours == 2);
}

TEST_CASE("parse errors") {
  CHECK_THROWS_AS(MPoly::parse("x0 + + x1", 2, 5), SyntaxError);
  CHECK_THROWS_AS(MPoly::parse("", 2, 5), SyntaxError);
  CHECK_THROWS_AS(MPoly::parse("x0 * ", 2, 5), SyntaxError);
  CHECK_THROWS_AS(MPoly::parse("x5", 2, 5), UnknownVariableError);
  CHECK_THROWS_AS(MPoly::parse("x0^65", 2, 5), DegreeCapError);
  CHECK_THROWS_AS(MPoly::parse("x0^40*x0^40", 2, 5), DegreeCapError);
  CHECK_THROWS_AS(MPoly::parse("(x0+1)^2", 2, 5), SyntaxError);
  CHECK_THROWS_AS(MPoly::parse("x0 - -x1", 2, 5), SyntaxError);
  // unary minus is fine on the first term only
  CHECK(MPoly::parse("-x0 + x1", 2, 5).terms().size() == 2);
}

TEST_CASE("evaluation examples") {
  auto f7 = make_field(7, 1);
  auto fermat = MPoly::parse("x0^3 + x1^3 + x2^3", 3, 7);
  std::vector<FieldElement> pt = {f7->element(1), f7->element(6),
                                  f7->element(0)};
  CHECK(fermat.evaluate(pt).is_zero());

  auto f4 = make_field(2, 2);
  auto prod = MPoly::parse("x0*x1", 2, 2);
  std::vector<FieldElement> pt4 = {f4->element(2), f4->element(3)};
  CHECK(prod.evaluate(pt4).index() == 1);

  auto f5 = make_field(5, 1);
  auto nodal = MPoly::parse("x1^2*x2 - x0^3 - x0^2*x2", 3, 5);
  std::vector<FieldElement> origin = {f5->element(0), f5->element(0),
                                      f5->element(1)};
  CHECK(nodal.evaluate(origin).is_zero());

  CHECK_THROWS_AS(nodal.evaluate(pt4), ArityMismatchError);
  std::vector<FieldElement> wrong = {f7->element(0), f7->element(0),
                                     f7->element(1)};
  CHECK_THROWS_AS(nodal.evaluate(wrong), FieldMismatchError);
}

TEST_CASE("derivatives") {
  auto cube5 = MPoly::parse("x0^3", 2, 5).derivative(0);
  REQUIRE(cube5.terms().size() == 1);
  CHECK(cube5.terms()[0].coeff == 3);
  CHECK(cube5.terms()[0].monomial.exponents ==
        std::vector<std::uint32_t>{2, 0});

  auto cube3 = MPoly::parse("x0^3", 2, 3).derivative(0);
  CHECK(cube3.is_zero());

  auto mixed = MPoly::parse("x1^2*x2", 3, 5).derivative(2);
  REQUIRE(mixed.terms().size() == 1);
  CHECK(mixed.terms()[0].monomial.exponents ==
        std::vector<std::uint32_t>{0, 2, 0});

  CHECK_THROWS_AS(MPoly::parse("x0", 2, 5).derivative(2),
                  IndexOutOfRangeError);
}

TEST_CASE("degree and homogeneity") {
  CHECK(MPoly::parse("x0^2 + x1", 2, 5).total_degree() == 2);
  CHECK_FALSE(MPoly::parse("x0^2 + x1", 2, 5).is_homogeneous());
  auto one = MPoly::parse("1", 2, 5);
  CHECK(one.total_degree() == 0);
  CHECK(one.is_homogeneous());
  CHECK_THROWS_AS(MPoly::parse("0", 2, 5).total_degree(),
                  ZeroPolynomialError);
}

TEST_CASE("jacobian examples") {
  auto f5 = make_field(5, 1);
  auto nodal = MPoly::parse("x1^2*x2 - x0^3 - x0^2*x2", 3, 5);
  std::vector<MPoly> forms = {nodal};
  std::vector<FieldElement> vertex = {f5->element(0), f5->element(0),
                                      f5->element(1)};
  CHECK(jacobian_at(forms, vertex).rank == 0);

  auto f7 = make_field(7, 1);
  auto fermat = MPoly::parse("x0^3 + x1^3 + x2^3", 3, 7);
  std::vector<MPoly> forms7 = {fermat};
  std::vector<FieldElement> pt = {f7->element(1), f7->element(6),
                                  f7->element(0)};
  CHECK(jacobian_at(forms7, pt).rank == 1);

  std::vector<MPoly> linear = {MPoly::parse("x0", 3, 5),
                               MPoly::parse("x1", 3, 5)};
  std::vector<FieldElement> any = {f5->element(3), f5->element(1),
                                   f5->element(4)};
  CHECK(jacobian_at(linear, any).rank == 2);
}

TEST_CASE("evaluation is a ring homomorphism (property)") {
  std::mt19937_64 rng(991);
  for (auto [p, k] : {std::pair<std::uint64_t, unsigned>{5, 1}, {3, 2},
                      {2, 3}, {7, 1}}) {
    auto f = make_field(p, k);
    std::uniform_int_distribution<std::uint64_t> dist(0, f->q_u64() - 1);
    for (int trial = 0; trial < 25; ++trial) {
      auto a = random_poly(rng, 3, p, 4, 3);
      auto b = random_poly(rng, 3, p, 4, 3);
      std::vector<std::uint32_t> pt = {
          static_cast<std::uint32_t>(dist(rng)),
          static_cast<std::uint32_t>(dist(rng)),
          static_cast<std::uint32_t>(dist(rng))};
      const auto va = a.evaluate_index(*f, pt);
      const auto vb = b.evaluate_index(*f, pt);
      CHECK((a + b).evaluate_index(*f, pt) == f->add(va, vb));
      CHECK((a * b).evaluate_index(*f, pt) == f->mul(va, vb));
    }
  }
}

TEST_CASE("Euler relation for homogeneous polynomials (property)") {
  std::mt19937_64 rng(1723);
  for (std::uint64_t p : {3ull, 5ull, 7ull}) {
    for (int trial = 0; trial < 20; ++trial) {
      const unsigned d = 1 + static_cast<unsigned>(rng() % 5);
      auto f = random_homogeneous(rng, 3, p, d, 4);
      if (f.is_zero()) continue;
      // sum_i x_i * df/dx_i == d * f
      MPoly acc(3, p);
      for (unsigned i = 0; i < 3; ++i) {
        std::string xi = "x" + std::to_string(i);
        acc = acc + MPoly::parse(xi, 3, p) * f.derivative(i);
      }
      MPoly scaled = MPoly::parse(std::to_string(d % p), 3, p) * f;
      CHECK(acc == scaled);
    }
  }
}

TEST_CASE("parse -> print -> parse round trip (property)") {
  std::mt19937_64 rng(5150);
  for (std::uint64_t p : {2ull, 5ull, 11ull}) {
    for (int trial = 0; trial < 40; ++trial) {
      auto f = random_poly(rng, 4, p, 6, 4);
      auto g = MPoly::parse(f.to_string(), 4, p);
      CHECK(f == g);
    }
  }
  // hand cases: zero and pure constant
  CHECK(MPoly::parse("0", 2, 5).to_string() == "0");
  CHECK(MPoly::parse(MPoly::parse("0", 2, 5).to_string(), 2, 5).is_zero());
  CHECK(MPoly::parse("3", 2, 5).to_string() == "3");
}
