#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "weilbounds/ffield.hpp"

namespace weilbounds {

/// Exponent vector, one entry per ambient variable x0..x{n-1}.
struct Monomial {
  std::vector<std::uint32_t> exponents;

  unsigned degree() const {
    unsigned d = 0;
    for (auto e : exponents) d += e;
    return d;
  }
  friend bool operator==(const Monomial&, const Monomial&) = default;
};

/// Graded lexicographic order: total degree first, then lexicographic on
/// the exponent sequence. Used for the canonical term order.
bool grlex_less(const Monomial& a, const Monomial& b);

/// Sparse multivariate polynomial with coefficients in the prime subfield
/// F_p, stored as integers in [1, p). Immutable after construction, so it
/// can be evaluated in any extension F_{p^m} without an embedding map.
class MPoly {
 public:
  struct Term {
    Monomial monomial;
    std::uint32_t coeff;  // in [1, p)
  };

  MPoly(unsigned nvars, std::uint64_t p) : nvars_(nvars), p_(p) {}

  /// Parses the grammar
  ///   expr   := term (('+'|'-') term)*
  ///   term   := factor ('*' factor)*
  ///   factor := INT | VAR ('^' INT)?
  ///   VAR    := 'x' INT
  /// with whitespace ignored and unary minus permitted on the first term.
  static MPoly parse(std::string_view src, unsigned nvars, std::uint64_t p,
                     unsigned degree_cap = 64);

  unsigned nvars() const { return nvars_; }
  std::uint64_t characteristic() const { return p_; }
  const std::vector<Term>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  unsigned total_degree() const;  // throws ZeroPolynomialError on zero
  bool is_homogeneous() const;

  MPoly derivative(unsigned var) const;  // formal d/dx_var

  /// Canonical rendering; parse(to_string()) reproduces the term map.
  std::string to_string() const;

  FieldElement evaluate(std::span<const FieldElement> point) const;

  /// Hot-path evaluation on element indices; the caller guarantees the
  /// field has the right characteristic and the point the right arity.
  std::uint32_t evaluate_index(const FieldSpec& field,
                               std::span<const std::uint32_t> point) const;

  friend MPoly operator+(const MPoly& a, const MPoly& b);
  friend MPoly operator*(const MPoly& a, const MPoly& b);
  friend bool operator==(const MPoly& a, const MPoly& b);

 private:
  void insert_term(Monomial m, std::uint64_t coeff);
  void normalize();

  unsigned nvars_;
  std::uint64_t p_;
  std::vector<Term> terms_;  // sorted grlex ascending, no zero coefficients
};

/// The r x nvars matrix (df_j/dx_i)(point) together with its rank over the
/// field, computed by exact Gaussian elimination.
struct JacobianResult {
  std::vector<std::vector<FieldElement>> matrix;  // rows = forms
  unsigned rank = 0;
};

JacobianResult jacobian_at(std::span<const MPoly> forms,
                           std::span<const FieldElement> point);

/// Rank-only variant on raw indices, for the singular-point census.
unsigned jacobian_rank_index(const FieldSpec& field,
                             std::span<const MPoly> partials_by_form,
                             unsigned nvars,
                             std::span<const std::uint32_t> point);

}  // namespace weilbounds
