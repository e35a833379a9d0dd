#ifndef MMQ_RIBBON_HPP
#define MMQ_RIBBON_HPP

#include <array>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "mmq/delta.hpp"
#include "mmq/multimatroid.hpp"
#include "mmq/poly.hpp"

namespace mmq {

using EdgeSet = std::uint64_t;

// One traversal of one of an edge's two boundary arcs. `agrees` records
// whether the walk follows the arc in the direction induced by the edge
// disc's reference orientation.
struct BoundaryVisit {
    int edge = -1;
    bool agrees = true;
};

struct BoundaryTrace {
    std::vector<std::vector<BoundaryVisit>> walks; // one per traced closed curve
    int isolated_circles = 0;                      // vertices with empty rotation
    int components() const { return static_cast<int>(walks.size()) + isolated_circles; }
};

// A ribbon graph as a signed rotation system: a cyclic order of half-edges
// per vertex plus a twist flag per edge. Boundary components are traced on
// the arc graph documented in trace(); the convention is fixed project-wide
// and validated against the pinned boundary counts in the tests.
class RibbonGraph {
public:
    struct EdgeData {
        std::string label;
        std::array<std::string, 2> halves;
        bool twisted = false;
    };

    RibbonGraph(std::vector<std::vector<std::string>> rotations, std::vector<EdgeData> edges);

    int num_vertices() const { return static_cast<int>(rotations_.size()); }
    int num_edges() const { return static_cast<int>(edges_.size()); }
    const std::vector<std::vector<std::string>>& rotations() const { return rotations_; }
    const std::vector<EdgeData>& edges() const { return edges_; }
    const EdgeData& edge(int e) const { return edges_[e]; }
    int edge_index(const std::string& label) const;
    EdgeSet full_edges() const
    {
        return num_edges() == 64 ? ~EdgeSet{0} : (EdgeSet{1} << num_edges()) - 1;
    }
    EdgeSet set_of_labels(const std::vector<std::string>& labels) const;
    std::vector<std::string> labels_of(EdgeSet s) const;

    // Boundary of the spanning subgraph of the partial Petrial: edges in
    // `petrialed` have their twist toggled, edges in `removed` contribute
    // their vertex attachment arcs instead of their sides.
    BoundaryTrace trace(EdgeSet petrialed, EdgeSet removed) const;
    int boundary_components(EdgeSet petrialed = 0, EdgeSet removed = 0) const
    {
        return trace(petrialed, removed).components();
    }

    int connected_components() const;

    RibbonGraph deleted(EdgeSet a) const;                // G \ A
    RibbonGraph restricted(EdgeSet a) const;             // G|_A
    RibbonGraph partial_petrial(EdgeSet a) const;        // G^τ(A)
    RibbonGraph contracted(int e) const;                 // G / e

    bool is_loop(int e) const;
    bool loop_twisted(int e) const;
    bool is_bridge(int e) const;
    // A loop not interlaced with any cycle through its vertex.
    bool is_trivial_loop(int e) const;

private:
    std::vector<std::vector<std::string>> rotations_;
    std::vector<EdgeData> edges_;
    std::map<std::string, std::pair<int, int>> half_to_edge_;  // label -> (edge, end)
    std::map<std::string, int> half_to_vertex_;

    void reindex();
};

// Edge order: labels, least first. Functions taking one accept any list
// covering the graph's edges.
using EdgeOrder = std::vector<std::string>;
EdgeOrder default_edge_order(const RibbonGraph& g);

// Per-edge transition weights (alpha: contract slot, beta: delete slot,
// gamma: twist-contract slot), keyed by edge label so they survive the
// subgraph transformations of the recursion.
struct RibbonWeights {
    std::map<std::string, std::array<Poly, 3>> w;

    static RibbonWeights symbolic(const RibbonGraph& g);
    static RibbonWeights units(const RibbonGraph& g);
    const Poly& alpha(const std::string& l) const { return w.at(l)[0]; }
    const Poly& beta(const std::string& l) const { return w.at(l)[1]; }
    const Poly& gamma(const std::string& l) const { return w.at(l)[2]; }
};

// Ordered tri-partitions (X,Y,Z) of the edges with b(G^τ(Z) \ Y) = k(G).
std::vector<std::array<EdgeSet, 3>> quasi_tree_states(const RibbonGraph& g);

// State sum over all ordered tri-partitions of the edge set.
Poly topo_transition_direct(const RibbonGraph& g, const RibbonWeights& w);

// The same polynomial by the five-case edge recursion (edgeless, bridge,
// trivial orientable loop, trivial nonorientable loop, generic).
Poly topo_transition_recursive(const RibbonGraph& g, const RibbonWeights& w,
                               const EdgeOrder& ord);
Poly topo_transition_recursive(const RibbonGraph& g, const RibbonWeights& w);

// The 3-matroid Z(G) on one skew class {e., e-, e^} per edge, with bases
// the quasi-tree states.
Multimatroid lift_ribbon(const RibbonGraph& g);

struct EdgeClassification {
    std::vector<int> block;                    // 0 in X, 1 in Y, 2 in Z
    std::vector<bool> orientable;              // w.r.t. the state
    std::vector<bool> active;                  // under the edge order
    std::vector<std::vector<bool>> interlaced; // symmetric, efef visit pattern
};

// Classifies every edge with respect to a quasi-tree state by walking the
// boundary curves of G^τ(Z) \ Y.
EdgeClassification classify_edges(const RibbonGraph& g, EdgeSet x, EdgeSet y, EdgeSet z,
                                  const EdgeOrder& ord);

// Quasi-tree expansion of the topological transition polynomial.
Poly ribbon_activities_expansion(const RibbonGraph& g, const RibbonWeights& w,
                                 const EdgeOrder& ord);

// Delta-matroid of G: feasible sets are the spanning quasi-tree edge sets.
DeltaMatroid ribbon_delta(const RibbonGraph& g);

} // namespace mmq

#endif
