#pragma once

#include <string>

#include "weilbounds/counter.hpp"

namespace weilbounds {

/// Loads and validates a variety definition file:
///   { "field": {"p": int, "k": int},
///     "ambient": {"type": "projective"|"affine", "dim": int},
///     "forms": ["<polynomial>", ...],
///     "declared": {"dim": int, "sing_dim": int, "irreducible": bool,
///                  "nonsingular": bool, "normal": bool,
///                  "isolated_singularities": bool,
///                  "complete_intersection": bool},
///     "cone_of": "optional/path.json" }
/// Unknown keys are rejected. In the projective case every form must be
/// homogeneous. A relative cone_of path is resolved against the file's
/// directory.
VarietySpec load_variety(const std::string& path, const Caps& caps = {});

}  // namespace weilbounds
