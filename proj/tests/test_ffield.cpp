#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <set>

#include "weilbounds/ffield.hpp"

using namespace weilbounds;

namespace {

// Test-only irreducibility oracle: a monic quadratic or cubic over F_p is
// irreducible iff it has no root; used to enumerate small moduli
// independently of the construction path.
bool has_root_mod_p(const std::vector<std::uint32_t>& f, std::uint64_t p) {
  for (std::uint64_t x = 0; x < p; ++x) {
    std::uint64_t acc = 0, xp = 1;
    for (auto c : f) {
      acc = (acc + c * xp) % p;
      xp = (xp * x) % p;
    }
    if (acc == 0) return true;
  }
  return false;
}

}  // namespace

TEST_CASE("prime field construction") {
  auto f5 = make_field(5, 1);
  CHECK(f5->q() == 5);
  CHECK(f5->modulus() == std::vector<std::uint32_t>{0, 1});
  CHECK_THROWS_AS(make_field(6, 1), NotPrimeError);
  CHECK_THROWS_AS(make_field(1, 1), NotPrimeError);
  Caps tight;
  tight.field_cap = 100;
  CHECK_THROWS_AS(make_field(2, 20, tight), SizeCapError);
}

TEST_CASE("F_4 has the unique irreducible quadratic modulus") {
  auto f4 = make_field(2, 2);
  CHECK(f4->modulus() == std::vector<std::uint32_t>{1, 1, 1});
  CHECK(f4->q() == 4);
}

TEST_CASE("F_9 modulus is the lex-min irreducible quadratic (oracle)") {
  // oracle: enumerate all monic quadratics over F_3 in lex order of
  // (c0, c1), filter irreducible by the no-root criterion, take the first
  std::vector<std::uint32_t> expected;
  for (std::uint32_t c0 = 0; c0 < 3 && expected.empty(); ++c0)
    for (std::uint32_t c1 = 0; c1 < 3 && expected.empty(); ++c1)
      if (!has_root_mod_p({c0, c1, 1}, 3)) expected = {c0, c1, 1};
  REQUIRE(!expected.empty());
  auto f9 = make_field(3, 2);
  CHECK(f9->modulus() == expected);
  CHECK(f9->q() == 9);
}

TEST_CASE("make_field is deterministic") {
  for (auto [p, k] : {std::pair<std::uint64_t, unsigned>{2, 4},
                      {3, 3},
                      {5, 2},
                      {7, 2}}) {
    auto a = make_field(p, k);
    auto b = make_field(p, k);
    CHECK(a->modulus() == b->modulus());
  }
}

TEST_CASE("basic arithmetic examples") {
  auto f5 = make_field(5, 1);
  CHECK(f5->inv(2) == 3);
  auto f7 = make_field(7, 1);
  CHECK(f7->pow_u64(3, 6) == 1);
  auto f4 = make_field(2, 2);
  // indices: 0, 1, t = 2, t+1 = 3
  CHECK(f4->mul(2, 3) == 1);
}

TEST_CASE("frobenius") {
  auto f9 = make_field(3, 2);
  unsigned fixed = 0;
  for (std::uint32_t a = 0; a < 9; ++a)
    if (f9->frobenius(a) == a) ++fixed;
  CHECK(fixed == 3);

  auto f4 = make_field(2, 2);
  CHECK(f4->frobenius(2) == 3);  // t -> t + 1

  auto f5 = make_field(5, 1);
  for (std::uint32_t a = 0; a < 5; ++a) CHECK(f5->frobenius(a) == a);

  // the k-fold iterate is the identity
  auto f8 = make_field(2, 3);
  for (std::uint32_t a = 0; a < 8; ++a) {
    std::uint32_t b = a;
    for (unsigned i = 0; i < 3; ++i) b = f8->frobenius(b);
    CHECK(b == a);
  }
}

TEST_CASE("field axioms hold exhaustively for q <= 16") {
  for (auto [p, k] : {std::pair<std::uint64_t, unsigned>{2, 1},
                      {3, 1},
                      {2, 2},
                      {5, 1},
                      {7, 1},
                      {2, 3},
                      {3, 2},
                      {11, 1},
                      {13, 1},
                      {2, 4}}) {
    auto f = make_field(p, k);
    const std::uint32_t q = static_cast<std::uint32_t>(f->q_u64());
    for (std::uint32_t a = 0; a < q; ++a) {
      CHECK(f->add(a, 0) == a);
      CHECK(f->mul(a, 1) == a);
      CHECK(f->add(a, f->neg(a)) == 0);
      if (a != 0) {
        CHECK(f->mul(a, f->inv(a)) == 1);
        CHECK(f->pow_u64(a, q - 1) == 1);
      }
      CHECK(f->pow_u64(a, q) == a);
      for (std::uint32_t b = 0; b < q; ++b) {
        CHECK(f->add(a, b) == f->add(b, a));
        CHECK(f->mul(a, b) == f->mul(b, a));
        for (std::uint32_t c = 0; c < q; ++c) {
          CHECK(f->add(f->add(a, b), c) == f->add(a, f->add(b, c)));
          CHECK(f->mul(f->mul(a, b), c) == f->mul(a, f->mul(b, c)));
          CHECK(f->mul(a, f->add(b, c)) ==
                f->add(f->mul(a, b), f->mul(a, c)));
        }
      }
    }
  }
}

TEST_CASE("field axioms on random samples for larger fields") {
  std::mt19937_64 rng(20240817);
  for (auto [p, k] : {std::pair<std::uint64_t, unsigned>{5, 3},
                      {7, 2},
                      {2, 10},
                      {3, 5},
                      {101, 1}}) {
    auto f = make_field(p, k);
    const std::uint64_t q = f->q_u64();
    std::uniform_int_distribution<std::uint64_t> dist(0, q - 1);
    for (int i = 0; i < 200; ++i) {
      const auto a = static_cast<std::uint32_t>(dist(rng));
      const auto b = static_cast<std::uint32_t>(dist(rng));
      const auto c = static_cast<std::uint32_t>(dist(rng));
      CHECK(f->mul(a, f->add(b, c)) == f->add(f->mul(a, b), f->mul(a, c)));
      CHECK(f->mul(f->mul(a, b), c) == f->mul(a, f->mul(b, c)));
      CHECK(f->pow_u64(a, q) == a);
      if (a != 0) CHECK(f->mul(a, f->inv(a)) == 1);
    }
  }
}

TEST_CASE("pow with arbitrary-precision exponents") {
  auto f7 = make_field(7, 1);
  mpz_class huge("123456789012345678901234567890");
  // 3^huge = 3^(huge mod 6)
  const std::uint64_t em = mpz_fdiv_ui(huge.get_mpz_t(), 6);
  CHECK(f7->pow(3, huge) == f7->pow_u64(3, em));
  CHECK(f7->pow(0, mpz_class(0)) == 1);
  CHECK(f7->pow(0, mpz_class(5)) == 0);
  CHECK_THROWS_AS(f7->inv(0), DivisionByZeroError);
}

TEST_CASE("extend_field") {
  auto f5 = make_field(5, 1);
  auto f25 = extend_field(f5, 2);
  CHECK(f25->q() == 25);
  auto f4 = make_field(2, 2);
  auto f64 = extend_field(f4, 3);
  CHECK(f64->q() == 64);
  CHECK(f64->k() == 6);
  auto same = extend_field(make_field(3, 1), 1);
  CHECK(same->q() == 3);
  // extend_field(f, r).q == f.q^r
  for (unsigned r = 1; r <= 3; ++r) {
    auto fr = extend_field(f5, r);
    mpz_class expect;
    mpz_pow_ui(expect.get_mpz_t(), f5->q().get_mpz_t(), r);
    CHECK(fr->q() == expect);
  }
}

TEST_CASE("enumerate_elements is the canonical order") {
  auto f3 = make_field(3, 1);
  auto e3 = enumerate_elements(f3);
  REQUIRE(e3.size() == 3);
  CHECK(e3[0].rep() == std::vector<std::uint32_t>{0});
  CHECK(e3[2].rep() == std::vector<std::uint32_t>{2});

  auto f4 = make_field(2, 2);
  auto e4 = enumerate_elements(f4);
  REQUIRE(e4.size() == 4);
  CHECK(e4[0].rep() == std::vector<std::uint32_t>{0, 0});
  CHECK(e4[1].rep() == std::vector<std::uint32_t>{1, 0});
  CHECK(e4[2].rep() == std::vector<std::uint32_t>{0, 1});
  CHECK(e4[3].rep() == std::vector<std::uint32_t>{1, 1});

  auto f9 = make_field(3, 2);
  CHECK(enumerate_elements(f9).size() == 9);

  // all distinct
  std::set<std::uint32_t> seen;
  for (const auto& e : enumerate_elements(f9)) seen.insert(e.index());
  CHECK(seen.size() == 9);
}

TEST_CASE("element operators and mismatch detection") {
  auto f5 = make_field(5, 1);
  auto f7 = make_field(7, 1);
  auto a = f5->element(2), b = f5->element(4);
  CHECK((a + b).index() == 1);
  CHECK((a * b).index() == 3);
  CHECK((a - b).index() == 3);
  CHECK((a / b).index() == 3);  // 2 * inv(4) = 2 * 4 = 8 = 3
  auto c = f7->element(2);
  CHECK_THROWS_AS(a + c, FieldMismatchError);
  CHECK(f5->element(3).to_string() == "3");
  auto f4 = make_field(2, 2);
  CHECK(f4->element(3).to_string() == "t+1");
  CHECK(f4->element(0).to_string() == "0");
}
