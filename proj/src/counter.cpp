#include "weilbounds/counter.hpp"

#include <algorithm>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace weilbounds {

namespace {

std::uint64_t ipow_u64(std::uint64_t base, unsigned e) {
  std::uint64_t out = 1;
  for (unsigned i = 0; i < e; ++i) out *= base;
  return out;
}

void check_point_budget(const mpz_class& total, const Caps& caps) {
  if (total > caps.point_cap)
    throw SizeCapError("enumeration of " + total.get_str() +
                       " points exceeds cap " +
                       std::to_string(caps.point_cap));
}

mpz_class enumeration_size(const VarietySpec& v, const mpz_class& q_r) {
  return v.ambient == Ambient::projective
             ? pi(static_cast<long>(v.ambient_dim), q_r)
             : mpz_pow(q_r, v.ambient_dim);
}

bool vanishes_at(std::span<const MPoly> forms, const FieldSpec& field,
                 std::span<const std::uint32_t> pt) {
  for (const auto& f : forms)
    if (f.evaluate_index(field, pt) != 0) return false;
  return true;
}

// Points of one residue class of the free-coordinate index, across all
// leading-1 blocks (projective) or of the coordinate index (affine).
std::uint64_t count_residue_class(const VarietySpec& v, const FieldSpec& field,
                                  std::uint64_t residue, std::uint64_t step) {
  const std::uint64_t q = field.q_u64();
  const unsigned nv = v.nvars();
  std::vector<std::uint32_t> pt(nv, 0);
  std::uint64_t count = 0;
  if (v.ambient == Ambient::projective) {
    const unsigned N = v.ambient_dim;
    for (unsigned lead = 0; lead <= N; ++lead) {
      std::fill(pt.begin(), pt.end(), 0);
      pt[lead] = 1;
      const std::uint64_t block = ipow_u64(q, N - lead);
      for (std::uint64_t m = residue; m < block; m += step) {
        std::uint64_t w = m;
        for (unsigned i = lead + 1; i <= N; ++i) {
          pt[i] = static_cast<std::uint32_t>(w % q);
          w /= q;
        }
        if (vanishes_at(v.forms, field, pt)) ++count;
      }
    }
  } else {
    const std::uint64_t block = ipow_u64(q, nv);
    for (std::uint64_t m = residue; m < block; m += step) {
      std::uint64_t w = m;
      for (unsigned i = 0; i < nv; ++i) {
        pt[i] = static_cast<std::uint32_t>(w % q);
        w /= q;
      }
      if (vanishes_at(v.forms, field, pt)) ++count;
    }
  }
  return count;
}

}  // namespace

void enumerate_projective(
    unsigned N, const FieldSpec& field, const Caps& caps,
    const std::function<void(std::span<const std::uint32_t>)>& sink) {
  check_point_budget(pi(static_cast<long>(N), field.q()), caps);
  const std::uint64_t q = field.q_u64();
  std::vector<std::uint32_t> pt(N + 1, 0);
  for (unsigned lead = 0; lead <= N; ++lead) {
    std::fill(pt.begin(), pt.end(), 0);
    pt[lead] = 1;
    const std::uint64_t block = ipow_u64(q, N - lead);
    for (std::uint64_t m = 0; m < block; ++m) {
      std::uint64_t w = m;
      for (unsigned i = lead + 1; i <= N; ++i) {
        pt[i] = static_cast<std::uint32_t>(w % q);
        w /= q;
      }
      sink(pt);
    }
  }
}

mpz_class count_points(const VarietySpec& v, unsigned r, unsigned partitions,
                       const Caps& caps) {
  if (partitions < 1) throw InvalidParamsError("partitions must be >= 1");
  const FieldPtr ext = extend_field(v.field, r, caps);
  check_point_budget(enumeration_size(v, ext->q()), caps);

  const long P = static_cast<long>(partitions);
  std::uint64_t total = 0;
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic) reduction(+ : total)
#endif
  for (long c = 0; c < P; ++c) {
    total += count_residue_class(v, *ext, static_cast<std::uint64_t>(c),
                                 static_cast<std::uint64_t>(P));
  }
  return mpz_class(static_cast<unsigned long>(total));
}

mpz_class count_points_serial(const VarietySpec& v, unsigned r,
                              const Caps& caps) {
  const FieldPtr ext = extend_field(v.field, r, caps);
  check_point_budget(enumeration_size(v, ext->q()), caps);
  std::uint64_t count = 0;
  if (v.ambient == Ambient::projective) {
    enumerate_projective(v.ambient_dim, *ext, caps,
                         [&](std::span<const std::uint32_t> pt) {
                           if (vanishes_at(v.forms, *ext, pt)) ++count;
                         });
  } else {
    count = count_residue_class(v, *ext, 0, 1);
  }
  return mpz_class(static_cast<unsigned long>(count));
}

CountTable count_table(const VarietySpec& v, unsigned r_max,
                       unsigned partitions, const Caps& caps) {
  if (r_max < 1) throw InvalidParamsError("r_max must be >= 1");
  CountTable out;
  out.q = v.field->q();
  for (unsigned r = 1; r <= r_max; ++r)
    out.entries[r] = count_points(v, r, partitions, caps);
  return out;
}

std::vector<std::vector<FieldElement>> singular_census(const VarietySpec& v,
                                                       unsigned r,
                                                       const Caps& caps) {
  if (v.ambient != Ambient::projective)
    throw InvalidParamsError("singular census requires a projective variety");
  const FieldPtr ext = extend_field(v.field, r, caps);
  check_point_budget(enumeration_size(v, ext->q()), caps);

  const unsigned nv = v.nvars();
  std::vector<MPoly> partials;
  partials.reserve(v.forms.size() * nv);
  for (const auto& f : v.forms)
    for (unsigned i = 0; i < nv; ++i) partials.push_back(f.derivative(i));

  const unsigned nforms = static_cast<unsigned>(v.forms.size());
  std::vector<std::vector<FieldElement>> out;
  enumerate_projective(
      v.ambient_dim, *ext, caps, [&](std::span<const std::uint32_t> pt) {
        if (!vanishes_at(v.forms, *ext, pt)) return;
        if (jacobian_rank_index(*ext, partials, nv, pt) < nforms) {
          std::vector<FieldElement> point;
          point.reserve(nv);
          for (auto idx : pt) point.push_back(ext->element(idx));
          out.push_back(std::move(point));
        }
      });
  return out;
}

std::string format_point(std::span<const FieldElement> point) {
  std::string out = "(";
  for (std::size_t i = 0; i < point.size(); ++i) {
    if (i) out += ":";
    out += point[i].to_string();
  }
  out += ")";
  return out;
}

}  // namespace weilbounds
