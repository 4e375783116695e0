#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "weilbounds/invariants.hpp"
#include "weilbounds/mpoly.hpp"

namespace weilbounds {

enum class Ambient { projective, affine };

/// User-asserted geometric properties. The library never verifies these;
/// the verdict engine only sanity-checks them against exact counts.
struct VarietyFlags {
  bool irreducible = false;
  bool nonsingular = false;
  bool normal = false;
  bool isolated_singularities = false;
  bool complete_intersection = false;
};

/// Ambient space, defining forms over the prime subfield, and declared
/// geometry. Immutable once built; safe to share across counting tasks.
struct VarietySpec {
  FieldPtr field;                    // base field k = F_q
  Ambient ambient = Ambient::projective;
  unsigned ambient_dim = 0;          // N
  std::vector<MPoly> forms;
  int declared_dim = 0;              // n
  int declared_sing_dim = -1;        // s; -1 means nonsingular
  VarietyFlags flags;
  std::optional<std::string> cone_of;  // path of the base curve, if a cone

  unsigned nvars() const {
    return ambient == Ambient::projective ? ambient_dim + 1 : ambient_dim;
  }
  Multidegree multidegree() const {
    std::vector<unsigned> d;
    for (const auto& f : forms)
      d.push_back(f.is_zero() ? 1u : f.total_degree());
    return Multidegree(d);
  }
  unsigned delta() const {
    unsigned m = 1;
    for (const auto& f : forms)
      if (!f.is_zero()) m = std::max(m, f.total_degree());
    return m;
  }
  mpz_class degree() const { return multidegree().d(); }
};

/// Exact counts N_r = |X(F_{q^r})| for r = 1..r_max.
struct CountTable {
  mpz_class q;                        // base field size
  std::map<unsigned, mpz_class> entries;

  const mpz_class& at(unsigned r) const {
    auto it = entries.find(r);
    if (it == entries.end())
      throw InsufficientCountsError("missing count for r = " +
                                    std::to_string(r));
    return it->second;
  }
  unsigned r_max() const {
    return entries.empty() ? 0 : entries.rbegin()->first;
  }
};

/// Streams the pi_N(q) normalized representatives of P^N(F_q): first
/// nonzero coordinate equal to 1, ordered by position of the leading 1 and
/// then by base-q value of the free coordinates (first free coordinate
/// least significant).
void enumerate_projective(
    unsigned N, const FieldSpec& field, const Caps& caps,
    const std::function<void(std::span<const std::uint32_t>)>& sink);

/// Exact |X(F_{q^r})|. Partitions split the representative stream by
/// residue class of the free-coordinate index inside each leading-1 block;
/// partitions may run concurrently and merge by addition, so the result is
/// identical for every partition count and schedule.
mpz_class count_points(const VarietySpec& v, unsigned r,
                       unsigned partitions = 1, const Caps& caps = {});

/// Single-loop reference implementation used to validate the kernel.
mpz_class count_points_serial(const VarietySpec& v, unsigned r,
                              const Caps& caps = {});

CountTable count_table(const VarietySpec& v, unsigned r_max,
                       unsigned partitions = 1, const Caps& caps = {});

/// All F_{q^r}-points of X where the Jacobian of the defining forms has
/// rank < (number of forms). For a complete intersection these are exactly
/// the singular F_{q^r}-points; the census sees only rational points, so an
/// empty result is one-sided evidence of smoothness, never a proof.
std::vector<std::vector<FieldElement>> singular_census(const VarietySpec& v,
                                                       unsigned r,
                                                       const Caps& caps = {});

std::string format_point(std::span<const FieldElement> point);

}  // namespace weilbounds
