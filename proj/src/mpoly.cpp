#include "weilbounds/mpoly.hpp"

#include <algorithm>
#include <cctype>

namespace weilbounds {

bool grlex_less(const Monomial& a, const Monomial& b) {
  const unsigned da = a.degree(), db = b.degree();
  if (da != db) return da < db;
  return a.exponents < b.exponents;
}

namespace {

struct Parser {
  std::string_view src;
  std::size_t pos = 0;
  unsigned nvars;
  std::uint64_t p;
  unsigned degree_cap;

  void skip_ws() {
    while (pos < src.size() && std::isspace(static_cast<unsigned char>(src[pos])))
      ++pos;
  }
  bool at_end() {
    skip_ws();
    return pos >= src.size();
  }
  char peek() {
    skip_ws();
    return pos < src.size() ? src[pos] : '\0';
  }

  // Decimal literal reduced mod p (coefficients can be arbitrarily long).
  std::uint64_t parse_int_mod_p() {
    skip_ws();
    if (pos >= src.size() || !std::isdigit(static_cast<unsigned char>(src[pos])))
      throw SyntaxError("expected integer", pos);
    std::uint64_t v = 0;
    while (pos < src.size() && std::isdigit(static_cast<unsigned char>(src[pos]))) {
      v = (v * 10 + static_cast<std::uint64_t>(src[pos] - '0')) % p;
      ++pos;
    }
    return v;
  }

  // Small decimal literal (variable index or exponent), bounded by limit.
  std::uint64_t parse_small_int(std::uint64_t limit, const char* what) {
    skip_ws();
    const std::size_t start = pos;
    if (pos >= src.size() || !std::isdigit(static_cast<unsigned char>(src[pos])))
      throw SyntaxError(std::string("expected ") + what, pos);
    std::uint64_t v = 0;
    while (pos < src.size() && std::isdigit(static_cast<unsigned char>(src[pos]))) {
      v = v * 10 + static_cast<std::uint64_t>(src[pos] - '0');
      if (v > limit) return limit + 1;  // caller reports the right error
      ++pos;
    }
    (void)start;
    return v;
  }

  // factor := INT | VAR ('^' INT)?
  void parse_factor(std::uint64_t& coeff, std::vector<std::uint32_t>& exps) {
    skip_ws();
    if (pos >= src.size()) throw SyntaxError("expected factor", pos);
    const char c = src[pos];
    if (std::isdigit(static_cast<unsigned char>(c))) {
      coeff = (coeff * parse_int_mod_p()) % p;
      return;
    }
    if (c == 'x') {
      const std::size_t var_pos = pos;
      ++pos;  // VAR index must follow immediately
      if (pos >= src.size() || !std::isdigit(static_cast<unsigned char>(src[pos])))
        throw SyntaxError("expected variable index after 'x'", pos);
      std::uint64_t idx = 0;
      while (pos < src.size() &&
             std::isdigit(static_cast<unsigned char>(src[pos]))) {
        idx = std::min<std::uint64_t>(
            idx * 10 + static_cast<std::uint64_t>(src[pos] - '0'),
            std::uint64_t{nvars} + 1);
        ++pos;
      }
      if (idx >= nvars)
        throw UnknownVariableError("variable x" + std::to_string(idx) +
                                   " out of range (nvars = " +
                                   std::to_string(nvars) + ", at offset " +
                                   std::to_string(var_pos) + ")");
      std::uint64_t e = 1;
      if (peek() == '^') {
        ++pos;
        e = parse_small_int(degree_cap, "exponent");
      }
      const std::uint64_t total = exps[idx] + e;
      if (e > degree_cap || total > degree_cap)
        throw DegreeCapError("exponent exceeds degree cap " +
                             std::to_string(degree_cap));
      exps[idx] = static_cast<std::uint32_t>(total);
      return;
    }
    throw SyntaxError("expected factor", pos);
  }

  // term := factor ('*' factor)*
  void parse_term(int sign) {
    std::uint64_t coeff = 1;
    std::vector<std::uint32_t> exps(nvars, 0);
    parse_factor(coeff, exps);
    while (peek() == '*') {
      ++pos;
      parse_factor(coeff, exps);
    }
    if (sign < 0 && coeff != 0) coeff = p - coeff;
    out_terms.push_back({Monomial{std::move(exps)}, coeff});
  }

  struct RawTerm {
    Monomial monomial;
    std::uint64_t coeff;
  };
  std::vector<RawTerm> out_terms;
};

unsigned matrix_rank(const FieldSpec& field,
                     std::vector<std::vector<std::uint32_t>> m) {
  if (m.empty()) return 0;
  const std::size_t rows = m.size(), cols = m[0].size();
  std::size_t pivot_row = 0;
  unsigned rank = 0;
  for (std::size_t col = 0; col < cols && pivot_row < rows; ++col) {
    std::size_t sel = pivot_row;
    while (sel < rows && m[sel][col] == 0) ++sel;
    if (sel == rows) continue;
    std::swap(m[sel], m[pivot_row]);
    const std::uint32_t piv_inv = field.inv(m[pivot_row][col]);
    for (std::size_t r2 = pivot_row + 1; r2 < rows; ++r2) {
      if (m[r2][col] == 0) continue;
      const std::uint32_t factor = field.mul(m[r2][col], piv_inv);
      for (std::size_t c2 = col; c2 < cols; ++c2) {
        m[r2][c2] = field.sub(m[r2][c2], field.mul(factor, m[pivot_row][c2]));
      }
    }
    ++pivot_row;
    ++rank;
  }
  return rank;
}

}  // namespace

MPoly MPoly::parse(std::string_view src, unsigned nvars, std::uint64_t p,
                   unsigned degree_cap) {
  if (!is_prime_u64(p)) throw NotPrimeError(p);
  Parser ps{src, 0, nvars, p, degree_cap, {}};
  MPoly out(nvars, p);
  if (ps.at_end()) throw SyntaxError("empty polynomial", 0);
  int sign = +1;
  if (ps.peek() == '-') {
    ++ps.pos;
    sign = -1;
  }
  ps.parse_term(sign);
  while (!ps.at_end()) {
    const char c = ps.peek();
    if (c == '+')
      sign = +1;
    else if (c == '-')
      sign = -1;
    else
      throw SyntaxError("expected '+' or '-'", ps.pos);
    ++ps.pos;
    ps.parse_term(sign);
  }
  for (auto& t : ps.out_terms) out.insert_term(std::move(t.monomial), t.coeff);
  out.normalize();
  return out;
}

void MPoly::insert_term(Monomial m, std::uint64_t coeff) {
  terms_.push_back(Term{std::move(m), static_cast<std::uint32_t>(coeff % p_)});
}

void MPoly::normalize() {
  std::sort(terms_.begin(), terms_.end(), [](const Term& a, const Term& b) {
    return grlex_less(a.monomial, b.monomial);
  });
  std::vector<Term> merged;
  for (auto& t : terms_) {
    if (!merged.empty() && merged.back().monomial == t.monomial) {
      merged.back().coeff = static_cast<std::uint32_t>(
          (std::uint64_t{merged.back().coeff} + t.coeff) % p_);
    } else {
      merged.push_back(std::move(t));
    }
  }
  terms_.clear();
  for (auto& t : merged)
    if (t.coeff != 0) terms_.push_back(std::move(t));
}

unsigned MPoly::total_degree() const {
  if (terms_.empty()) throw ZeroPolynomialError();
  return terms_.back().monomial.degree();
}

bool MPoly::is_homogeneous() const {
  if (terms_.empty()) return true;
  const unsigned d = terms_.front().monomial.degree();
  for (const auto& t : terms_)
    if (t.monomial.degree() != d) return false;
  return true;
}

MPoly MPoly::derivative(unsigned var) const {
  if (var >= nvars_)
    throw IndexOutOfRangeError("variable index " + std::to_string(var) +
                               " out of range");
  MPoly out(nvars_, p_);
  for (const auto& t : terms_) {
    const std::uint32_t e = t.monomial.exponents[var];
    if (e == 0) continue;
    const std::uint64_t c = (std::uint64_t{t.coeff} * (e % p_)) % p_;
    if (c == 0) continue;
    Monomial m = t.monomial;
    m.exponents[var] = e - 1;
    out.insert_term(std::move(m), c);
  }
  out.normalize();
  return out;
}

std::string MPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    if (!out.empty()) out += " + ";
    std::string part;
    bool has_var = false;
    for (unsigned i = 0; i < nvars_; ++i) {
      const std::uint32_t e = it->monomial.exponents[i];
      if (e == 0) continue;
      if (has_var) part += "*";
      part += "x" + std::to_string(i);
      if (e > 1) part += "^" + std::to_string(e);
      has_var = true;
    }
    if (it->coeff != 1 || !has_var) {
      out += std::to_string(it->coeff);
      if (has_var) out += "*";
    }
    out += part;
  }
  return out;
}

std::uint32_t MPoly::evaluate_index(
    const FieldSpec& field, std::span<const std::uint32_t> point) const {
  std::uint32_t acc = 0;
  for (const auto& t : terms_) {
    std::uint32_t v = t.coeff;  // prime-subfield embedding is the identity
    for (unsigned i = 0; i < nvars_; ++i) {
      const std::uint32_t e = t.monomial.exponents[i];
      if (e == 0) continue;
      v = field.mul(v, field.pow_u64(point[i], e));
      if (v == 0) break;
    }
    acc = field.add(acc, v);
  }
  return acc;
}

FieldElement MPoly::evaluate(std::span<const FieldElement> point) const {
  if (point.size() != nvars_)
    throw ArityMismatchError("point arity " + std::to_string(point.size()) +
                             " does not match nvars " +
                             std::to_string(nvars_));
  if (point.empty())
    throw ArityMismatchError("cannot evaluate with an empty point");
  const FieldSpec& field = point[0].field();
  if (field.p() != p_)
    throw FieldMismatchError("point field characteristic differs from p");
  std::vector<std::uint32_t> idx(point.size());
  for (std::size_t i = 0; i < point.size(); ++i) {
    if (!point[i].field().same_field(field))
      throw FieldMismatchError("point coordinates in different fields");
    idx[i] = point[i].index();
  }
  return point[0].field_ptr()->element(evaluate_index(field, idx));
}

MPoly operator+(const MPoly& a, const MPoly& b) {
  if (a.p_ != b.p_) throw FieldMismatchError("characteristic mismatch");
  if (a.nvars_ != b.nvars_) throw ArityMismatchError("nvars mismatch");
  MPoly out(a.nvars_, a.p_);
  for (const auto& t : a.terms_) out.insert_term(t.monomial, t.coeff);
  for (const auto& t : b.terms_) out.insert_term(t.monomial, t.coeff);
  out.normalize();
  return out;
}

MPoly operator*(const MPoly& a, const MPoly& b) {
  if (a.p_ != b.p_) throw FieldMismatchError("characteristic mismatch");
  if (a.nvars_ != b.nvars_) throw ArityMismatchError("nvars mismatch");
  MPoly out(a.nvars_, a.p_);
  for (const auto& ta : a.terms_) {
    for (const auto& tb : b.terms_) {
      Monomial m = ta.monomial;
      for (unsigned i = 0; i < a.nvars_; ++i)
        m.exponents[i] += tb.monomial.exponents[i];
      out.insert_term(std::move(m),
                      (std::uint64_t{ta.coeff} * tb.coeff) % a.p_);
    }
  }
  out.normalize();
  return out;
}

bool operator==(const MPoly& a, const MPoly& b) {
  if (a.nvars_ != b.nvars_ || a.p_ != b.p_ ||
      a.terms_.size() != b.terms_.size())
    return false;
  for (std::size_t i = 0; i < a.terms_.size(); ++i) {
    if (!(a.terms_[i].monomial == b.terms_[i].monomial) ||
        a.terms_[i].coeff != b.terms_[i].coeff)
      return false;
  }
  return true;
}

JacobianResult jacobian_at(std::span<const MPoly> forms,
                           std::span<const FieldElement> point) {
  JacobianResult out;
  if (forms.empty()) return out;
  const unsigned nvars = forms[0].nvars();
  for (const auto& f : forms) {
    if (f.nvars() != nvars) throw ArityMismatchError("forms nvars mismatch");
    if (f.characteristic() != forms[0].characteristic())
      throw FieldMismatchError("forms characteristic mismatch");
  }
  if (point.size() != nvars)
    throw ArityMismatchError("point arity does not match forms");
  const FieldSpec& field = point[0].field();
  if (field.p() != forms[0].characteristic())
    throw FieldMismatchError("point field characteristic differs from forms");

  std::vector<std::uint32_t> idx(point.size());
  for (std::size_t i = 0; i < point.size(); ++i) idx[i] = point[i].index();

  std::vector<std::vector<std::uint32_t>> m(forms.size());
  out.matrix.resize(forms.size());
  for (std::size_t j = 0; j < forms.size(); ++j) {
    m[j].resize(nvars);
    for (unsigned i = 0; i < nvars; ++i) {
      m[j][i] = forms[j].derivative(i).evaluate_index(field, idx);
      out.matrix[j].push_back(point[0].field_ptr()->element(m[j][i]));
    }
  }
  out.rank = matrix_rank(field, std::move(m));
  return out;
}

unsigned jacobian_rank_index(const FieldSpec& field,
                             std::span<const MPoly> partials_by_form,
                             unsigned nvars,
                             std::span<const std::uint32_t> point) {
  const std::size_t rows = partials_by_form.size() / nvars;
  std::vector<std::vector<std::uint32_t>> m(rows);
  for (std::size_t j = 0; j < rows; ++j) {
    m[j].resize(nvars);
    for (unsigned i = 0; i < nvars; ++i)
      m[j][i] = partials_by_form[j * nvars + i].evaluate_index(field, point);
  }
  return matrix_rank(field, std::move(m));
}

}  // namespace weilbounds
