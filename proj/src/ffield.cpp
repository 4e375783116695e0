#include "weilbounds/ffield.hpp"

#include <algorithm>
#include <cstddef>

namespace weilbounds {

namespace {

// Dense polynomials over F_p, little-endian coefficients, used only while
// constructing a field (modulus search, table bootstrap).
using Poly = std::vector<std::uint32_t>;

void poly_trim(Poly& f) {
  while (!f.empty() && f.back() == 0) f.pop_back();
}

// Remainder of f modulo the monic polynomial g.
Poly poly_mod(Poly f, const Poly& g, std::uint64_t p) {
  poly_trim(f);
  while (f.size() >= g.size()) {
    const std::uint64_t lead = f.back();
    const std::size_t shift = f.size() - g.size();
    if (lead != 0) {
      for (std::size_t i = 0; i < g.size(); ++i) {
        std::uint64_t v = f[shift + i] + p - (lead * g[i]) % p;
        f[shift + i] = static_cast<std::uint32_t>(v % p);
      }
    }
    f.pop_back();
    poly_trim(f);
  }
  return f;
}

Poly poly_mulmod(const Poly& a, const Poly& b, const Poly& mod,
                 std::uint64_t p) {
  if (a.empty() || b.empty()) return {};
  Poly prod(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) {
      prod[i + j] = static_cast<std::uint32_t>(
          (prod[i + j] + std::uint64_t{a[i]} * b[j]) % p);
    }
  }
  return poly_mod(std::move(prod), mod, p);
}

// Divisibility test used by the brute-force irreducibility check.
bool poly_divides(const Poly& g, const Poly& f, std::uint64_t p) {
  return poly_mod(f, g, p).empty();
}

// A monic polynomial of degree k over F_p is irreducible iff no monic
// polynomial of degree 1..k/2 divides it. Field sizes are capped, so the
// sqrt(q) divisor sweep is cheap.
bool is_irreducible(const Poly& f, std::uint64_t p) {
  const std::size_t k = f.size() - 1;
  if (f[0] == 0) return k == 1;  // divisible by t
  for (std::size_t deg = 1; deg <= k / 2; ++deg) {
    std::uint64_t count = 1;
    for (std::size_t i = 0; i < deg; ++i) count *= p;
    Poly g(deg + 1, 0);
    g[deg] = 1;
    for (std::uint64_t m = 0; m < count; ++m) {
      std::uint64_t v = m;
      for (std::size_t i = 0; i < deg; ++i) {
        g[i] = static_cast<std::uint32_t>(v % p);
        v /= p;
      }
      if (poly_divides(g, f, p)) return false;
    }
  }
  return true;
}

// Lexicographically smallest (constant term compared first) monic
// irreducible polynomial of degree k over F_p.
Poly lex_min_irreducible(std::uint64_t p, unsigned k) {
  Poly f(k + 1, 0);
  f[k] = 1;
  // Coefficient tuples (c_0, .., c_{k-1}) in lexicographic order: c_0 is
  // the most significant digit of the enumeration counter.
  std::uint64_t total = 1;
  for (unsigned i = 0; i < k; ++i) total *= p;
  for (std::uint64_t m = 0; m < total; ++m) {
    std::uint64_t v = m;
    for (unsigned i = k; i-- > 0;) {
      f[i] = static_cast<std::uint32_t>(v % p);
      v /= p;
    }
    if (is_irreducible(f, p)) return f;
  }
  throw Error("no irreducible polynomial found");  // unreachable
}

constexpr std::uint64_t kTableLimit = std::uint64_t{1} << 22;
constexpr std::uint64_t kIndexLimit = std::uint64_t{1} << 31;

}  // namespace

bool is_prime_u64(std::uint64_t n) {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  for (std::uint64_t d = 3; d * d <= n; d += 2)
    if (n % d == 0) return false;
  return true;
}

std::vector<std::uint32_t> FieldSpec::rep_of(std::uint32_t index) const {
  std::vector<std::uint32_t> rep(k_, 0);
  std::uint64_t v = index;
  for (unsigned i = 0; i < k_; ++i) {
    rep[i] = static_cast<std::uint32_t>(v % p_);
    v /= p_;
  }
  return rep;
}

std::uint32_t FieldSpec::index_of_rep(
    const std::vector<std::uint32_t>& rep) const {
  if (rep.size() != k_)
    throw InvalidParamsError("rep length does not match extension degree");
  std::uint64_t v = 0;
  for (unsigned i = k_; i-- > 0;) {
    if (rep[i] >= p_) throw InvalidParamsError("rep coefficient not reduced");
    v = v * p_ + rep[i];
  }
  return static_cast<std::uint32_t>(v);
}

std::uint32_t FieldSpec::add(std::uint32_t a, std::uint32_t b) const {
  if (k_ == 1) {
    std::uint64_t s = std::uint64_t{a} + b;
    if (s >= p_) s -= p_;
    return static_cast<std::uint32_t>(s);
  }
  std::uint64_t va = a, vb = b, out = 0, scale = 1;
  for (unsigned i = 0; i < k_; ++i) {
    std::uint64_t d = va % p_ + vb % p_;
    if (d >= p_) d -= p_;
    out += d * scale;
    scale *= p_;
    va /= p_;
    vb /= p_;
  }
  return static_cast<std::uint32_t>(out);
}

std::uint32_t FieldSpec::neg(std::uint32_t a) const {
  if (k_ == 1) return a == 0 ? 0 : static_cast<std::uint32_t>(p_ - a);
  std::uint64_t va = a, out = 0, scale = 1;
  for (unsigned i = 0; i < k_; ++i) {
    std::uint64_t d = va % p_;
    out += (d == 0 ? 0 : p_ - d) * scale;
    scale *= p_;
    va /= p_;
  }
  return static_cast<std::uint32_t>(out);
}

std::uint32_t FieldSpec::sub(std::uint32_t a, std::uint32_t b) const {
  return add(a, neg(b));
}

std::uint32_t FieldSpec::mul_poly(std::uint32_t a, std::uint32_t b) const {
  Poly pa = [&] {
    Poly r;
    std::uint64_t v = a;
    while (v) {
      r.push_back(static_cast<std::uint32_t>(v % p_));
      v /= p_;
    }
    return r;
  }();
  Poly pb;
  {
    std::uint64_t v = b;
    while (v) {
      pb.push_back(static_cast<std::uint32_t>(v % p_));
      v /= p_;
    }
  }
  Poly prod = poly_mulmod(pa, pb, modulus_, p_);
  std::uint64_t out = 0;
  for (std::size_t i = prod.size(); i-- > 0;) out = out * p_ + prod[i];
  return static_cast<std::uint32_t>(out);
}

std::uint32_t FieldSpec::mul(std::uint32_t a, std::uint32_t b) const {
  if (a == 0 || b == 0) return 0;
  if (has_tables_) return exp_[log_[a] + log_[b]];
  if (k_ == 1)
    return static_cast<std::uint32_t>((std::uint64_t{a} * b) % p_);
  return mul_poly(a, b);
}

std::uint32_t FieldSpec::inv(std::uint32_t a) const {
  if (a == 0) throw DivisionByZeroError();
  if (has_tables_) {
    const std::uint64_t n = q_u64_ - 1;
    return exp_[(n - log_[a]) % n];
  }
  return pow_u64(a, q_u64_ - 2);
}

std::uint32_t FieldSpec::pow_u64(std::uint32_t a, std::uint64_t e) const {
  if (e == 0) return 1;
  if (a == 0) return 0;
  if (has_tables_) {
    const std::uint64_t n = q_u64_ - 1;
    const std::uint64_t le = (std::uint64_t{log_[a]} * (e % n)) % n;
    return exp_[le];
  }
  std::uint32_t base = a, acc = 1;
  while (e) {
    if (e & 1) acc = mul(acc, base);
    base = mul(base, base);
    e >>= 1;
  }
  return acc;
}

std::uint32_t FieldSpec::pow(std::uint32_t a, const mpz_class& e) const {
  if (sgn(e) < 0) throw InvalidParamsError("negative exponent");
  if (sgn(e) == 0) return 1;
  if (a == 0) return 0;
  // a^(q-1) = 1, so the exponent only matters modulo q-1.
  const std::uint64_t em = mpz_fdiv_ui(e.get_mpz_t(), q_u64_ - 1);
  if (em == 0) return 1;
  return pow_u64(a, em);
}

void FieldSpec::build_tables() {
  if (q_u64_ > kTableLimit) {
    has_tables_ = false;
    return;
  }
  const std::uint64_t n = q_u64_ - 1;
  // Prime factors of the group order, for the generator test.
  std::vector<std::uint64_t> factors;
  {
    std::uint64_t m = n;
    for (std::uint64_t d = 2; d * d <= m; ++d) {
      if (m % d == 0) {
        factors.push_back(d);
        while (m % d == 0) m /= d;
      }
    }
    if (m > 1) factors.push_back(m);
  }
  auto pow_nt = [&](std::uint32_t a, std::uint64_t e) {
    std::uint32_t base = a, acc = 1;
    while (e) {
      if (e & 1) acc = k_ == 1 ? static_cast<std::uint32_t>(
                                     (std::uint64_t{acc} * base) % p_)
                               : mul_poly(acc, base);
      base = k_ == 1 ? static_cast<std::uint32_t>(
                           (std::uint64_t{base} * base) % p_)
                     : mul_poly(base, base);
      e >>= 1;
    }
    return acc;
  };
  std::uint32_t g = 0;
  for (std::uint32_t cand = 2; cand < q_u64_; ++cand) {
    bool ok = true;
    for (std::uint64_t f : factors) {
      if (pow_nt(cand, n / f) == 1) {
        ok = false;
        break;
      }
    }
    if (ok) {
      g = cand;
      break;
    }
  }
  if (g == 0) g = 1;  // q = 2: trivial group
  log_.assign(q_u64_, 0);
  exp_.assign(2 * n, 1);
  std::uint32_t acc = 1;
  for (std::uint64_t i = 0; i < n; ++i) {
    exp_[i] = acc;
    log_[acc] = static_cast<std::uint32_t>(i);
    acc = k_ == 1
              ? static_cast<std::uint32_t>((std::uint64_t{acc} * g) % p_)
              : mul_poly(acc, g);
  }
  for (std::uint64_t i = n; i < exp_.size(); ++i) exp_[i] = exp_[i - n];
  has_tables_ = true;
}

std::string FieldSpec::to_string(std::uint32_t index) const {
  if (k_ == 1) return std::to_string(index);
  auto rep = rep_of(index);
  std::string out;
  for (unsigned i = k_; i-- > 0;) {
    if (rep[i] == 0) continue;
    if (!out.empty()) out += "+";
    if (i == 0) {
      out += std::to_string(rep[i]);
    } else {
      if (rep[i] != 1) out += std::to_string(rep[i]) + "*";
      out += (i == 1) ? "t" : "t^" + std::to_string(i);
    }
  }
  return out.empty() ? "0" : out;
}

FieldElement FieldSpec::element(std::uint32_t index) const {
  return FieldElement(shared_from_this(), index);
}

FieldElement FieldSpec::element_from_rep(
    const std::vector<std::uint32_t>& rep) const {
  return element(index_of_rep(rep));
}

FieldPtr make_field(std::uint64_t p, unsigned k, const Caps& caps) {
  if (!is_prime_u64(p)) throw NotPrimeError(p);
  if (k < 1) throw InvalidParamsError("extension degree must be >= 1");
  mpz_class q;
  mpz_ui_pow_ui(q.get_mpz_t(), static_cast<unsigned long>(p), k);
  if (q > caps.field_cap)
    throw SizeCapError("field size " + q.get_str() + " exceeds cap " +
                       std::to_string(caps.field_cap));
  if (q > kIndexLimit)
    throw SizeCapError("field size " + q.get_str() +
                       " exceeds supported representation");
  auto spec = std::shared_ptr<FieldSpec>(new FieldSpec());
  spec->p_ = p;
  spec->k_ = k;
  spec->q_ = q;
  spec->q_u64_ = q.get_ui();
  if (k == 1) {
    spec->modulus_ = {0, 1};
  } else {
    spec->modulus_ = lex_min_irreducible(p, k);
  }
  spec->build_tables();
  return spec;
}

FieldPtr extend_field(const FieldPtr& base, unsigned r, const Caps& caps) {
  if (r < 1) throw InvalidParamsError("extension degree must be >= 1");
  if (r == 1) return base;
  return make_field(base->p(), base->k() * r, caps);
}

std::vector<FieldElement> enumerate_elements(const FieldPtr& field) {
  std::vector<FieldElement> out;
  out.reserve(field->q_u64());
  for (std::uint64_t i = 0; i < field->q_u64(); ++i)
    out.push_back(field->element(static_cast<std::uint32_t>(i)));
  return out;
}

std::vector<std::uint32_t> FieldElement::rep() const {
  return field_->rep_of(idx_);
}

std::string FieldElement::to_string() const { return field_->to_string(idx_); }

namespace {
void check_same(const FieldElement& a, const FieldElement& b) {
  if (!a.field().same_field(b.field()))
    throw FieldMismatchError("operands belong to different fields");
}
}  // namespace

FieldElement operator+(const FieldElement& a, const FieldElement& b) {
  check_same(a, b);
  return FieldElement(a.field_, a.field().add(a.idx_, b.idx_));
}

FieldElement operator-(const FieldElement& a, const FieldElement& b) {
  check_same(a, b);
  return FieldElement(a.field_, a.field().sub(a.idx_, b.idx_));
}

FieldElement operator-(const FieldElement& a) {
  return FieldElement(a.field_, a.field().neg(a.idx_));
}

FieldElement operator*(const FieldElement& a, const FieldElement& b) {
  check_same(a, b);
  return FieldElement(a.field_, a.field().mul(a.idx_, b.idx_));
}

FieldElement operator/(const FieldElement& a, const FieldElement& b) {
  check_same(a, b);
  return FieldElement(a.field_, a.field().mul(a.idx_, a.field().inv(b.idx_)));
}

bool operator==(const FieldElement& a, const FieldElement& b) {
  check_same(a, b);
  return a.idx_ == b.idx_;
}

bool operator!=(const FieldElement& a, const FieldElement& b) {
  return !(a == b);
}

}  // namespace weilbounds
