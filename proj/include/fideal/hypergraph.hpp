#pragma once

#include <span>
#include <vector>

#include "fideal/vertex_subset.hpp"

namespace fideal {

/// All inclusion-minimal transversals (vertex covers) of the hypergraph
/// with the given edges, in canonical order.
///
/// Edges need not form an antichain. An empty edge list has the single
/// transversal {}; an empty edge makes every set fail, so the result is empty.
///
/// Branches on the uncovered edge with the fewest admissible vertices; a
/// vertex is admissible unless an earlier sibling branch already took it,
/// so every transversal is produced at most once. Branches where a chosen
/// vertex loses its last private edge are cut, so only minimal ones survive.
std::vector<VertexSubset> minimal_transversals(std::span<const VertexSubset> edges);

}  // namespace fideal
