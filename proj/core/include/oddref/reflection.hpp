#pragma once

#include "oddref/lweight.hpp"

#include <vector>

namespace oddref {

/// Highest l-weight after the odd reflection at node i:
///   zeta~_i     = zeta_{i+1}(u) psi_i(u - s_i) / psi_i(u)
///   zeta~_{i+1} = zeta_i(u)     phi_i(u - s_i) / phi_i(u)
/// with the other components unchanged, over the parity swapped at i.
/// Throws SameParity if s_i = s_{i+1}.
LWeight reflect(const LWeight& z, Node i);

/// Left-to-right composition of reflect. A failing step is reported with its index.
LWeight reflect_path(const LWeight& z, const std::vector<Node>& path);

/// Canonical adjacent-swap path from `from` to `target`: repeatedly swap the leftmost
/// adjacent pair whose signs differ and where `from` disagrees with `target`.
std::vector<Node> canonical_path(const ParitySeq& from, const ParitySeq& target);

/// reflect_path along canonical_path. Throws IncompatibleCounts if m or n differ.
LWeight reflect_to(const LWeight& z, const ParitySeq& target);

}  // namespace oddref
