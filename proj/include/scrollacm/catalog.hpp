#pragma once

#include "scrollacm/descriptor.hpp"
#include "scrollacm/pencil.hpp"

#include <vector>

namespace scrollacm {

/// Ulrich summands on a quartic scroll from the Kronecker-Weierstrass form of
/// the extension pencil (rows: copies of O(-F), columns: copies of L).
///   C(u) -> U_{u+1}, (b,a) = (u, u+1)      B(v) -> U_{-v}, (b,a) = (v+1, v)
///   J / Companion -> family member, a = b = n deg
///   zero row -> O(-F), zero column -> L
/// Throws WrongDegree unless dX = 4.
std::vector<BundleDescriptor> classify_quartic_ulrich(const Scroll& s, const MatrixPencil& m);

/// Indecomposable ACM types up to twist on a quartic scroll: the initialized
/// ACM line bundles, plus V, V(-F) and W on S(1,3). Throws WrongDegree unless dX = 4.
std::vector<BundleDescriptor> quartic_acm_catalog(const Scroll& s);

/// Human-readable point of P^1 where a J or companion block degenerates.
std::string block_point(const KWBlock& b);

}  // namespace scrollacm
