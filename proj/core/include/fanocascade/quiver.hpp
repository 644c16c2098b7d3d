#pragma once

#include <functional>
#include <optional>
#include <vector>

#include "fanocascade/matrix.hpp"
#include "fanocascade/polygon.hpp"

namespace fano {

/// One node of the quiver of a Fano polygon: a zero-Milnor-number cell of an
/// edge cone, tagged with the edge it sits on, its position along the edge,
/// and the edge's primitive inner normal.
struct QuiverNode {
    int edge;
    int slot;
    Vec normal;
    Int edge_height;
};

/// Quiver with arrow multiplicities arrows[i][j] from node i to node j; at
/// most one of arrows[i][j], arrows[j][i] is nonzero.
struct Quiver {
    std::vector<QuiverNode> nodes;
    IntMat arrows;
};

/// Nodes are the cells of decompose_edges in order; the arrow count from i
/// to j is max(det(normal_i, normal_j), 0).
Quiver quiver(const LatticePolygon& p);

/// The quiver with one node removed for each height one edge. A height one
/// edge of length L carries L smooth cells, so a length one edge loses its
/// only node while a longer edge keeps L - 1 of them.
Quiver reduced_quiver(const LatticePolygon& p);

/// Breadth first walk of the mutation graph (deduplicated by normal form,
/// visiting at most search_bound polygons) for a class member whose reduced
/// quiver satisfies the predicate. Returns the first match in walk order.
std::optional<LatticePolygon> find_representative_with_quiver(
    const LatticePolygon& p, const std::function<bool(const Quiver&)>& predicate,
    long search_bound = 500);

}  // namespace fano
