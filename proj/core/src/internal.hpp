#pragma once

// Helpers shared between translation units of the core library.

#include "cocycle_forge/algebra.hpp"

namespace cocycle_forge {

/// Wraps a member set already known to be closed (e.g. a product of ideals).
MonomialIdeal assume_ideal(ContextPtr ctx, const ElementSet& members);

}  // namespace cocycle_forge
