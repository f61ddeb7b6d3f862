#include "fideal/hypergraph.hpp"

#include <algorithm>

namespace fideal {
namespace {

class TransversalSearch {
 public:
  explicit TransversalSearch(std::span<const VertexSubset> edges)
      : edges_(edges) {}

  std::vector<VertexSubset> run() {
    for (VertexSubset e : edges_) {
      if (e.empty()) return {};
    }
    extend(VertexSubset{}, VertexSubset{});
    std::sort(found_.begin(), found_.end(), CanonicalLess{});
    return std::move(found_);
  }

 private:
  void extend(VertexSubset chosen, VertexSubset banned) {
    // Pick the uncovered edge with the fewest admissible vertices.
    bool any_uncovered = false;
    VertexSubset branch_on;
    int best = 65;
    for (VertexSubset e : edges_) {
      if (e.intersects(chosen)) continue;
      any_uncovered = true;
      const VertexSubset admissible = e.without(banned);
      if (admissible.size() < best) {
        best = admissible.size();
        branch_on = admissible;
        if (best == 0) return;
      }
    }
    if (!any_uncovered) {
      found_.push_back(chosen);
      return;
    }
    VertexSubset taken;
    for (int v : branch_on.vertices()) {
      const VertexSubset next = chosen | VertexSubset{v};
      if (every_vertex_has_private_edge(next)) {
        extend(next, banned | taken);
      }
      taken |= VertexSubset{v};
    }
  }

  // A cover is minimal iff each of its vertices is the sole chosen vertex of
  // some edge; adding vertices only destroys private edges.
  bool every_vertex_has_private_edge(VertexSubset chosen) const {
    VertexSubset witnessed;
    for (VertexSubset e : edges_) {
      const VertexSubset hit = e & chosen;
      if (hit.size() == 1) witnessed |= hit;
    }
    return witnessed == chosen;
  }

  std::span<const VertexSubset> edges_;
  std::vector<VertexSubset> found_;
};

}  // namespace

std::vector<VertexSubset> minimal_transversals(std::span<const VertexSubset> edges) {
  return TransversalSearch(edges).run();
}

}  // namespace fideal
