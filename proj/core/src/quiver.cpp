#include "fanocascade/quiver.hpp"

#include <deque>
#include <set>

#include "fanocascade/mutation.hpp"
#include "fanocascade/singularity.hpp"

namespace fano {

namespace {

Quiver build_quiver(const LatticePolygon& p, bool reduced) {
    auto edges = edge_data(p);
    EdgeDecomposition dec = decompose_edges(p);
    Quiver q;
    // The reduction forgets one node per height-one edge: such an edge carries
    // the Gorenstein cone (smooth when its length is one), and all of its
    // cells share a normal, so which cell is dropped does not matter.
    std::set<int> dropped_edge;
    for (const EdgeCone& cone : dec.t_cones) {
        const EdgeData& e = edges[cone.edge];
        if (reduced && e.height == 1 && dropped_edge.insert(cone.edge).second)
            continue;
        q.nodes.push_back(QuiverNode{cone.edge, cone.slot, e.normal, e.height});
    }
    std::size_t n = q.nodes.size();
    q.arrows.assign(n, std::vector<Int>(n, 0));
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            Int d = cross(q.nodes[i].normal, q.nodes[j].normal);
            if (d > 0) q.arrows[i][j] = d;
        }
    }
    return q;
}

}  // namespace

Quiver quiver(const LatticePolygon& p) { return build_quiver(p, false); }

Quiver reduced_quiver(const LatticePolygon& p) { return build_quiver(p, true); }

std::optional<LatticePolygon> find_representative_with_quiver(
    const LatticePolygon& p, const std::function<bool(const Quiver&)>& predicate,
    long search_bound) {
    LatticePolygon start = convex_hull(p.vertices);
    std::set<LatticePolygon> visited{normal_form(start)};
    std::deque<LatticePolygon> frontier{start};
    while (!frontier.empty()) {
        LatticePolygon q = frontier.front();
        frontier.pop_front();
        if (predicate(reduced_quiver(q))) return q;
        for (const MutationMove& m : mutation_moves(q)) {
            LatticePolygon image = mutate(q, m);
            LatticePolygon key = normal_form(image);
            if (visited.count(key)) continue;
            if (static_cast<long>(visited.size()) >= search_bound) continue;
            visited.insert(key);
            frontier.push_back(image);
        }
    }
    return std::nullopt;
}

}  // namespace fano
