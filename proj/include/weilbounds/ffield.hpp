#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "weilbounds/errors.hpp"

namespace weilbounds {

/// Resource limits shared by field construction and point enumeration.
/// Exceeding a cap raises SizeCapError; nothing is ever truncated silently.
struct Caps {
  std::uint64_t field_cap = std::uint64_t{1} << 20;  // max field size q
  std::uint64_t point_cap = 1'000'000'000;           // max enumerated points per call
  unsigned degree_cap = 64;                          // max exponent per variable
};

class FieldSpec;
using FieldPtr = std::shared_ptr<const FieldSpec>;

/// An element of F_{p^k}, carried together with its owning field.
/// Elements are plain values; all arithmetic routes through the owner.
class FieldElement {
 public:
  FieldElement() = default;
  FieldElement(FieldPtr field, std::uint32_t index)
      : field_(std::move(field)), idx_(index) {}

  std::uint32_t index() const { return idx_; }
  const FieldSpec& field() const { return *field_; }
  const FieldPtr& field_ptr() const { return field_; }
  bool is_zero() const { return idx_ == 0; }

  /// Coefficient vector in the polynomial basis, constant term first.
  std::vector<std::uint32_t> rep() const;

  std::string to_string() const;

  friend FieldElement operator+(const FieldElement& a, const FieldElement& b);
  friend FieldElement operator-(const FieldElement& a, const FieldElement& b);
  friend FieldElement operator-(const FieldElement& a);
  friend FieldElement operator*(const FieldElement& a, const FieldElement& b);
  friend FieldElement operator/(const FieldElement& a, const FieldElement& b);
  friend bool operator==(const FieldElement& a, const FieldElement& b);
  friend bool operator!=(const FieldElement& a, const FieldElement& b);

 private:
  FieldPtr field_;
  std::uint32_t idx_ = 0;
};

/// Immutable description of F_{p^k} together with precomputed arithmetic
/// tables. Construction happens once in make_field; afterwards the object
/// is read-only and safe to share across threads.
///
/// Elements are addressed by an index in [0, q): the index is the base-p
/// value of the coefficient vector (constant term least significant), so
/// index order is the canonical enumeration order.
class FieldSpec : public std::enable_shared_from_this<FieldSpec> {
 public:
  std::uint64_t p() const { return p_; }
  unsigned k() const { return k_; }
  const mpz_class& q() const { return q_; }
  std::uint64_t q_u64() const { return q_u64_; }

  /// Monic modulus polynomial, constant term first, length k+1.
  /// For k = 1 this is the canonical [0, 1].
  const std::vector<std::uint32_t>& modulus() const { return modulus_; }

  bool same_field(const FieldSpec& other) const {
    return p_ == other.p_ && k_ == other.k_;
  }

  // Index-level arithmetic (hot path; no ownership checks).
  std::uint32_t add(std::uint32_t a, std::uint32_t b) const;
  std::uint32_t sub(std::uint32_t a, std::uint32_t b) const;
  std::uint32_t neg(std::uint32_t a) const;
  std::uint32_t mul(std::uint32_t a, std::uint32_t b) const;
  std::uint32_t inv(std::uint32_t a) const;  // throws DivisionByZeroError
  std::uint32_t pow(std::uint32_t a, const mpz_class& e) const;
  std::uint32_t pow_u64(std::uint32_t a, std::uint64_t e) const;
  std::uint32_t frobenius(std::uint32_t a) const { return pow_u64(a, p_); }

  std::uint32_t zero_index() const { return 0; }
  std::uint32_t one_index() const { return 1; }
  /// Image of an integer under the prime-subfield embedding.
  std::uint32_t from_integer(std::uint64_t c) const {
    return static_cast<std::uint32_t>(c % p_);
  }

  std::vector<std::uint32_t> rep_of(std::uint32_t index) const;
  std::uint32_t index_of_rep(const std::vector<std::uint32_t>& rep) const;

  /// Formats an element: decimal residue for k = 1, polynomial in t else.
  std::string to_string(std::uint32_t index) const;

  FieldElement element(std::uint32_t index) const;
  FieldElement element_from_rep(const std::vector<std::uint32_t>& rep) const;

 private:
  friend FieldPtr make_field(std::uint64_t, unsigned, const Caps&);

  FieldSpec() = default;
  void build_tables();
  std::uint32_t mul_poly(std::uint32_t a, std::uint32_t b) const;

  std::uint64_t p_ = 0;
  unsigned k_ = 0;
  mpz_class q_;
  std::uint64_t q_u64_ = 0;
  std::vector<std::uint32_t> modulus_;

  // Discrete log tables on the multiplicative group (empty when the field
  // is too large for tables; ops then fall back to polynomial arithmetic).
  std::vector<std::uint32_t> log_;  // log_[a] for a in [1, q)
  std::vector<std::uint32_t> exp_;  // exp_[i] = g^i, i in [0, 2(q-1))
  bool has_tables_ = false;
};

/// Deterministic construction of F_{p^k}: the modulus is the monic
/// irreducible polynomial of degree k over F_p whose coefficient sequence
/// (constant term first) is lexicographically smallest.
FieldPtr make_field(std::uint64_t p, unsigned k, const Caps& caps = {});

/// F_{p^{k*r}}, the degree-r extension used for counting over k_r.
FieldPtr extend_field(const FieldPtr& base, unsigned r, const Caps& caps = {});

/// All q elements in canonical order (index ascending).
std::vector<FieldElement> enumerate_elements(const FieldPtr& field);

/// Deterministic primality by trial division.
bool is_prime_u64(std::uint64_t n);

}  // namespace weilbounds
