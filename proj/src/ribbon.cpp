#include "mmq/ribbon.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

namespace mmq {

RibbonGraph::RibbonGraph(std::vector<std::vector<std::string>> rotations,
                         std::vector<EdgeData> edges)
    : rotations_(std::move(rotations)), edges_(std::move(edges))
{
    if (edges_.size() > 64)
        throw std::invalid_argument("ribbon graph with more than 64 edges");
    reindex();
}

void RibbonGraph::reindex()
{
    half_to_edge_.clear();
    half_to_vertex_.clear();
    std::map<std::string, int> label_seen;
    for (int e = 0; e < num_edges(); ++e) {
        if (!label_seen.emplace(edges_[e].label, e).second)
            throw std::invalid_argument("duplicate edge label '" + edges_[e].label + "'");
        if (edges_[e].halves[0] == edges_[e].halves[1])
            throw std::invalid_argument("edge '" + edges_[e].label + "' repeats a half-edge");
        for (int end = 0; end < 2; ++end)
            if (!half_to_edge_.emplace(edges_[e].halves[end], std::make_pair(e, end)).second)
                throw std::invalid_argument("half-edge '" + edges_[e].halves[end] +
                                            "' used twice");
    }
    for (int v = 0; v < num_vertices(); ++v)
        for (const auto& h : rotations_[v]) {
            if (!half_to_edge_.count(h))
                throw std::invalid_argument("half-edge '" + h + "' belongs to no edge");
            if (!half_to_vertex_.emplace(h, v).second)
                throw std::invalid_argument("half-edge '" + h + "' appears twice in rotations");
        }
    if (half_to_vertex_.size() != half_to_edge_.size())
        throw std::invalid_argument("some half-edge is missing from the rotations");
}

int RibbonGraph::edge_index(const std::string& label) const
{
    for (int e = 0; e < num_edges(); ++e)
        if (edges_[e].label == label)
            return e;
    throw std::invalid_argument("unknown edge '" + label + "'");
}

EdgeSet RibbonGraph::set_of_labels(const std::vector<std::string>& labels) const
{
    EdgeSet s = 0;
    for (const auto& l : labels)
        s |= EdgeSet{1} << edge_index(l);
    return s;
}

std::vector<std::string> RibbonGraph::labels_of(EdgeSet s) const
{
    std::vector<std::string> out;
    while (s) {
        out.push_back(edges_[__builtin_ctzll(s)].label);
        s &= s - 1;
    }
    return out;
}

// Boundary tracing works on an arc graph whose nodes are the two endpoints
// of each half-edge attachment: walking clockwise around a vertex one meets
// endpoint A(h) then B(h) of each attachment h. Every node lies on exactly
// two arcs, so the arcs split into closed curves:
//   corner arcs   B(h) -> A(next h)            (vertex boundary between bands)
//   side arcs     B(h) -> A(h'), B(h') -> A(h)  (untwisted band)
//                 B(h) -> B(h'), A(h') -> A(h)  (twisted band)
//   attachment    A(h) -> B(h), A(h') -> B(h')  (removed untwisted edge)
//   arcs          A(h) -> B(h), B(h') -> A(h')  (removed twisted edge)
// The stored (from, to) direction of a side or attachment arc is the one
// induced by orienting the edge disc from its first half to its second.
BoundaryTrace RibbonGraph::trace(EdgeSet petrialed, EdgeSet removed) const
{
    struct Arc {
        int from, to;
        int edge; // -1 for corner arcs
    };
    std::vector<Arc> arcs;

    // Dense half ids in map order.
    std::map<std::string, int> hid;
    for (const auto& [h, ev] : half_to_edge_)
        hid.emplace(h, static_cast<int>(hid.size()));
    auto A = [&](const std::string& h) { return 2 * hid.at(h); };
    auto B = [&](const std::string& h) { return 2 * hid.at(h) + 1; };

    BoundaryTrace out;
    for (int v = 0; v < num_vertices(); ++v) {
        const auto& rot = rotations_[v];
        if (rot.empty()) {
            ++out.isolated_circles;
            continue;
        }
        int deg = static_cast<int>(rot.size());
        for (int i = 0; i < deg; ++i)
            arcs.push_back({B(rot[i]), A(rot[(i + 1) % deg]), -1});
    }
    for (int e = 0; e < num_edges(); ++e) {
        const auto& h1 = edges_[e].halves[0];
        const auto& h2 = edges_[e].halves[1];
        bool twist = edges_[e].twisted ^ ((petrialed >> e) & 1);
        if ((removed >> e) & 1) {
            arcs.push_back({A(h1), B(h1), e});
            if (twist)
                arcs.push_back({B(h2), A(h2), e});
            else
                arcs.push_back({A(h2), B(h2), e});
        } else if (twist) {
            arcs.push_back({B(h1), B(h2), e});
            arcs.push_back({A(h2), A(h1), e});
        } else {
            arcs.push_back({B(h1), A(h2), e});
            arcs.push_back({B(h2), A(h1), e});
        }
    }

    // Node -> its two incident arcs.
    std::vector<std::array<int, 2>> at(2 * hid.size(), {-1, -1});
    for (int i = 0; i < static_cast<int>(arcs.size()); ++i)
        for (int node : {arcs[i].from, arcs[i].to}) {
            if (at[node][0] < 0)
                at[node][0] = i;
            else if (at[node][1] < 0)
                at[node][1] = i;
            else
                throw std::logic_error("arc graph node of degree > 2");
        }
    for (const auto& pair : at)
        if (pair[0] < 0 || pair[1] < 0)
            throw std::logic_error("arc graph node of degree < 2");

    std::vector<bool> used(arcs.size(), false);
    for (int start = 0; start < static_cast<int>(arcs.size()); ++start) {
        if (used[start])
            continue;
        std::vector<BoundaryVisit> walk;
        int arc = start;
        bool forward = true;
        do {
            used[arc] = true;
            if (arcs[arc].edge >= 0)
                walk.push_back({arcs[arc].edge, forward});
            int node = forward ? arcs[arc].to : arcs[arc].from;
            int next = at[node][0] == arc ? at[node][1] : at[node][0];
            forward = arcs[next].from == node;
            arc = next;
        } while (arc != start);
        out.walks.push_back(std::move(walk));
    }
    return out;
}

int RibbonGraph::connected_components() const
{
    std::vector<int> parent(num_vertices());
    for (int v = 0; v < num_vertices(); ++v)
        parent[v] = v;
    std::function<int(int)> find = [&](int v) {
        while (parent[v] != v)
            v = parent[v] = parent[parent[v]];
        return v;
    };
    for (const auto& e : edges_)
        parent[find(half_to_vertex_.at(e.halves[0]))] = find(half_to_vertex_.at(e.halves[1]));
    int k = 0;
    for (int v = 0; v < num_vertices(); ++v)
        if (find(v) == v)
            ++k;
    return k;
}

RibbonGraph RibbonGraph::deleted(EdgeSet a) const
{
    std::vector<std::vector<std::string>> rot = rotations_;
    std::vector<EdgeData> keep;
    for (int e = 0; e < num_edges(); ++e) {
        if ((a >> e) & 1) {
            for (auto& r : rot)
                r.erase(std::remove_if(r.begin(), r.end(),
                                       [&](const std::string& h) {
                                           return h == edges_[e].halves[0] ||
                                                  h == edges_[e].halves[1];
                                       }),
                        r.end());
        } else {
            keep.push_back(edges_[e]);
        }
    }
    return RibbonGraph(std::move(rot), std::move(keep));
}

RibbonGraph RibbonGraph::restricted(EdgeSet a) const
{
    return deleted(full_edges() & ~a);
}

RibbonGraph RibbonGraph::partial_petrial(EdgeSet a) const
{
    std::vector<EdgeData> edges = edges_;
    for (int e = 0; e < num_edges(); ++e)
        if ((a >> e) & 1)
            edges[e].twisted = !edges[e].twisted;
    return RibbonGraph(rotations_, std::move(edges));
}

bool RibbonGraph::is_loop(int e) const
{
    return half_to_vertex_.at(edges_[e].halves[0]) == half_to_vertex_.at(edges_[e].halves[1]);
}

bool RibbonGraph::loop_twisted(int e) const
{
    return edges_[e].twisted;
}

bool RibbonGraph::is_bridge(int e) const
{
    if (is_loop(e))
        return false;
    return deleted(EdgeSet{1} << e).connected_components() > connected_components();
}

namespace {

// Rotate the list so that `first` is at the front, then drop it.
std::vector<std::string> rest_after(const std::vector<std::string>& rot, const std::string& first)
{
    auto it = std::find(rot.begin(), rot.end(), first);
    std::vector<std::string> out(it + 1, rot.end());
    out.insert(out.end(), rot.begin(), it);
    return out;
}

} // namespace

RibbonGraph RibbonGraph::contracted(int e) const
{
    const EdgeData& ed = edges_[e];
    std::vector<std::vector<std::string>> rot = rotations_;
    std::vector<EdgeData> edges = edges_;

    auto toggle_if_leaving = [&](const std::string& half, int vertex) {
        auto [f, end] = half_to_edge_.at(half);
        if (half_to_vertex_.at(edges_[f].halves[1 - end]) != vertex)
            edges[f].twisted = !edges[f].twisted;
    };

    if (!is_loop(e)) {
        int u = half_to_vertex_.at(ed.halves[0]);
        int v = half_to_vertex_.at(ed.halves[1]);
        if (ed.twisted) {
            // Flip the far vertex to absorb the twist.
            std::reverse(rot[v].begin(), rot[v].end());
            for (const auto& h : rot[v])
                toggle_if_leaving(h, v);
        }
        std::vector<std::string> merged = rest_after(rot[u], ed.halves[0]);
        std::vector<std::string> tail = rest_after(rot[v], ed.halves[1]);
        merged.insert(merged.end(), tail.begin(), tail.end());
        std::vector<std::vector<std::string>> new_rot;
        for (int w = 0; w < num_vertices(); ++w)
            if (w != u && w != v)
                new_rot.push_back(rot[w]);
        new_rot.push_back(std::move(merged));
        edges.erase(edges.begin() + e);
        return RibbonGraph(std::move(new_rot), std::move(edges));
    }

    int u = half_to_vertex_.at(ed.halves[0]);
    std::vector<std::string> whole = rest_after(rot[u], ed.halves[0]);
    auto split = std::find(whole.begin(), whole.end(), ed.halves[1]);
    std::vector<std::string> seg1(whole.begin(), split);
    std::vector<std::string> seg2(split + 1, whole.end());

    std::vector<std::vector<std::string>> new_rot;
    for (int w = 0; w < num_vertices(); ++w)
        if (w != u)
            new_rot.push_back(rot[w]);
    if (!ed.twisted) {
        // Orientable loop: the vertex splits in two.
        new_rot.push_back(std::move(seg1));
        new_rot.push_back(std::move(seg2));
    } else {
        // Nonorientable loop: reverse one segment; every band with exactly
        // one end on that segment picks up a half-twist.
        auto in_seg2 = [&](const std::string& h) {
            return std::find(seg2.begin(), seg2.end(), h) != seg2.end();
        };
        for (const auto& h : seg2) {
            auto [f, end] = half_to_edge_.at(h);
            if (!in_seg2(edges_[f].halves[1 - end]))
                edges[f].twisted = !edges[f].twisted;
        }
        std::reverse(seg2.begin(), seg2.end());
        seg1.insert(seg1.end(), seg2.begin(), seg2.end());
        new_rot.push_back(std::move(seg1));
    }
    edges.erase(edges.begin() + e);
    return RibbonGraph(std::move(new_rot), std::move(edges));
}

bool RibbonGraph::is_trivial_loop(int e) const
{
    if (!is_loop(e))
        return false;
    int v = half_to_vertex_.at(edges_[e].halves[0]);

    std::vector<std::string> whole = rest_after(rotations_[v], edges_[e].halves[0]);
    auto split = std::find(whole.begin(), whole.end(), edges_[e].halves[1]);
    std::vector<std::string> seg1(whole.begin(), split);
    std::vector<std::string> seg2(split + 1, whole.end());

    auto side_of = [&](const std::string& h) {
        if (std::find(seg1.begin(), seg1.end(), h) != seg1.end())
            return 1;
        if (std::find(seg2.begin(), seg2.end(), h) != seg2.end())
            return 2;
        return 0;
    };

    // A loop interlaced with e is itself a witnessing cycle.
    for (int f = 0; f < num_edges(); ++f) {
        if (f == e || !is_loop(f))
            continue;
        int s1 = side_of(edges_[f].halves[0]);
        int s2 = side_of(edges_[f].halves[1]);
        if (s1 != 0 && s2 != 0 && s1 != s2)
            return false;
    }

    // Vertex connectivity of G - v for the two-edge witnesses.
    std::vector<int> parent(num_vertices());
    for (int w = 0; w < num_vertices(); ++w)
        parent[w] = w;
    std::function<int(int)> find = [&](int w) {
        while (parent[w] != w)
            w = parent[w] = parent[parent[w]];
        return w;
    };
    for (const auto& f : edges_) {
        int a = half_to_vertex_.at(f.halves[0]);
        int b = half_to_vertex_.at(f.halves[1]);
        if (a != v && b != v)
            parent[find(a)] = find(b);
    }

    for (const auto& f1 : edges_)
        for (int end1 = 0; end1 < 2; ++end1) {
            if (side_of(f1.halves[end1]) != 1)
                continue;
            int w1 = half_to_vertex_.at(f1.halves[1 - end1]);
            if (w1 == v)
                continue; // loops handled above
            for (const auto& f2 : edges_)
                for (int end2 = 0; end2 < 2; ++end2) {
                    if (f2.label == f1.label || side_of(f2.halves[end2]) != 2)
                        continue;
                    int w2 = half_to_vertex_.at(f2.halves[1 - end2]);
                    if (w2 == v)
                        continue;
                    if (find(w1) == find(w2))
                        return false;
                }
        }
    return true;
}

EdgeOrder default_edge_order(const RibbonGraph& g)
{
    EdgeOrder ord;
    for (const auto& e : g.edges())
        ord.push_back(e.label);
    return ord;
}

RibbonWeights RibbonWeights::symbolic(const RibbonGraph& g)
{
    RibbonWeights out;
    for (const auto& e : g.edges())
        out.w[e.label] = {Poly::var(VarId::weight(e.label + ".")),
                          Poly::var(VarId::weight(e.label + "-")),
                          Poly::var(VarId::weight(e.label + "^"))};
    return out;
}

RibbonWeights RibbonWeights::units(const RibbonGraph& g)
{
    RibbonWeights out;
    for (const auto& e : g.edges())
        out.w[e.label] = {Poly(1), Poly(1), Poly(1)};
    return out;
}

std::vector<std::array<EdgeSet, 3>> quasi_tree_states(const RibbonGraph& g)
{
    int k = g.connected_components();
    int m = g.num_edges();
    std::vector<std::array<EdgeSet, 3>> out;
    std::vector<int> block(m, 0);
    while (true) {
        EdgeSet x = 0, y = 0, z = 0;
        for (int e = 0; e < m; ++e)
            (block[e] == 0 ? x : block[e] == 1 ? y : z) |= EdgeSet{1} << e;
        if (g.boundary_components(z, y) == k)
            out.push_back({x, y, z});
        int i = 0;
        while (i < m && block[i] == 2)
            block[i++] = 0;
        if (i == m)
            break;
        ++block[i];
    }
    return out;
}

Poly topo_transition_direct(const RibbonGraph& g, const RibbonWeights& w)
{
    int m = g.num_edges();
    Poly out;
    std::vector<int> block(m, 0);
    while (true) {
        EdgeSet y = 0, z = 0;
        Poly term(1);
        for (int e = 0; e < m; ++e) {
            const auto& lbl = g.edge(e).label;
            if (block[e] == 0) {
                term *= w.alpha(lbl);
            } else if (block[e] == 1) {
                y |= EdgeSet{1} << e;
                term *= w.beta(lbl);
            } else {
                z |= EdgeSet{1} << e;
                term *= w.gamma(lbl);
            }
        }
        out += term * Poly::t().pow(g.boundary_components(z, y));
        int i = 0;
        while (i < m && block[i] == 2)
            block[i++] = 0;
        if (i == m)
            break;
        ++block[i];
    }
    return out;
}

Poly topo_transition_recursive(const RibbonGraph& g, const RibbonWeights& w,
                               const EdgeOrder& ord)
{
    if (g.num_edges() == 0)
        return Poly::t().pow(g.num_vertices());

    // The greatest present edge according to ord.
    std::map<std::string, int> rank;
    for (int i = 0; i < static_cast<int>(ord.size()); ++i)
        rank[ord[i]] = i;
    int e = 0;
    for (int f = 1; f < g.num_edges(); ++f)
        if (rank.at(g.edge(f).label) > rank.at(g.edge(e).label))
            e = f;

    const std::string lbl = g.edge(e).label;
    EdgeSet eb = EdgeSet{1} << e;
    const Poly& a = w.alpha(lbl);
    const Poly& b = w.beta(lbl);
    const Poly& c = w.gamma(lbl);

    if (g.is_bridge(e))
        return (a + Poly::t() * b + c) * topo_transition_recursive(g.contracted(e), w, ord);
    if (g.is_trivial_loop(e)) {
        // For either kind of trivial loop, deletion keeps both Z and the
        // vertex count, so the three branch values collapse onto Q(G \ e)
        // up to the t factors absorbed below. (Contracting the petrial of a
        // trivial twisted loop splits a vertex off and would contribute an
        // extra t; deletion avoids that.)
        if (!g.loop_twisted(e))
            return (Poly::t() * a + b + c) * topo_transition_recursive(g.deleted(eb), w, ord);
        return (a + b + Poly::t() * c) * topo_transition_recursive(g.deleted(eb), w, ord);
    }
    return a * topo_transition_recursive(g.contracted(e), w, ord) +
           b * topo_transition_recursive(g.deleted(eb), w, ord) +
           c * topo_transition_recursive(g.partial_petrial(eb).contracted(e), w, ord);
}

Poly topo_transition_recursive(const RibbonGraph& g, const RibbonWeights& w)
{
    return topo_transition_recursive(g, w, default_edge_order(g));
}

Multimatroid lift_ribbon(const RibbonGraph& g)
{
    std::vector<std::vector<std::string>> classes;
    for (const auto& e : g.edges())
        classes.push_back({e.label + ".", e.label + "-", e.label + "^"});
    Carrier carrier(std::move(classes));
    std::vector<ElementSet> bases;
    for (const auto& [x, y, z] : quasi_tree_states(g)) {
        ElementSet t = 0;
        for (int e = 0; e < g.num_edges(); ++e) {
            int slot = (x >> e) & 1 ? 0 : (y >> e) & 1 ? 1 : 2;
            t |= carrier.bit(Element{e, slot});
        }
        bases.push_back(t);
    }
    return Multimatroid(std::move(carrier), std::move(bases));
}

EdgeClassification classify_edges(const RibbonGraph& g, EdgeSet x, EdgeSet y, EdgeSet z,
                                  const EdgeOrder& ord)
{
    int m = g.num_edges();
    if ((x | y | z) != g.full_edges() || (x & y) || (x & z) || (y & z))
        throw std::invalid_argument("classify_edges: not an ordered tri-partition");
    if (g.boundary_components(z, y) != g.connected_components())
        throw std::invalid_argument("classify_edges: not a quasi-tree state");

    BoundaryTrace trace = g.trace(z, y);

    EdgeClassification out;
    out.block.assign(m, 0);
    out.orientable.assign(m, true);
    out.active.assign(m, true);
    out.interlaced.assign(m, std::vector<bool>(m, false));
    for (int e = 0; e < m; ++e)
        out.block[e] = (x >> e) & 1 ? 0 : (y >> e) & 1 ? 1 : 2;

    std::vector<int> first_pos(m, -1);
    std::vector<std::array<bool, 2>> agrees(m);
    for (const auto& walk : trace.walks) {
        std::vector<std::pair<int, int>> span(m, {-1, -1});
        for (int p = 0; p < static_cast<int>(walk.size()); ++p) {
            int e = walk[p].edge;
            if (span[e].first < 0) {
                span[e] = {p, -1};
                agrees[e][0] = walk[p].agrees;
            } else {
                span[e].second = p;
                agrees[e][1] = walk[p].agrees;
            }
        }
        for (int e = 0; e < m; ++e) {
            if (span[e].first < 0)
                continue;
            out.orientable[e] = agrees[e][0] == agrees[e][1];
            for (int f = 0; f < m; ++f) {
                if (f == e || span[f].first < 0)
                    continue;
                bool in1 = span[f].first > span[e].first && span[f].first < span[e].second;
                bool in2 = span[f].second > span[e].first && span[f].second < span[e].second;
                out.interlaced[e][f] = in1 != in2;
            }
        }
    }

    std::map<std::string, int> rank;
    for (int i = 0; i < static_cast<int>(ord.size()); ++i)
        rank[ord[i]] = i;
    for (int e = 0; e < m; ++e)
        for (int f = 0; f < m; ++f)
            if (out.interlaced[e][f] && rank.at(g.edge(f).label) < rank.at(g.edge(e).label))
                out.active[e] = false;
    return out;
}

Poly ribbon_activities_expansion(const RibbonGraph& g, const RibbonWeights& w,
                                 const EdgeOrder& ord)
{
    Poly out;
    Poly t = Poly::t();
    Rational half(1, 2);
    for (const auto& [x, y, z] : quasi_tree_states(g)) {
        EdgeClassification cls = classify_edges(g, x, y, z, ord);
        Poly term(1);
        for (int e = 0; e < g.num_edges(); ++e) {
            const std::string& lbl = g.edge(e).label;
            const Poly& a = w.alpha(lbl);
            const Poly& b = w.beta(lbl);
            const Poly& c = w.gamma(lbl);
            if (!cls.active[e]) {
                term *= cls.block[e] == 0 ? a : cls.block[e] == 1 ? b : c;
            } else if (cls.orientable[e]) {
                switch (cls.block[e]) {
                case 0: term *= t * b * half + a; break;
                case 1: term *= t * a * half + b; break;
                default: term *= t * b * half + c; break;
                }
            } else {
                switch (cls.block[e]) {
                case 0: term *= t * c * half + a; break;
                case 1: term *= t * c * half + b; break;
                default: term *= t * a * half + c; break;
                }
            }
        }
        out += term;
    }
    return out * Poly::t().pow(g.connected_components());
}

DeltaMatroid ribbon_delta(const RibbonGraph& g)
{
    int k = g.connected_components();
    std::vector<std::string> names;
    for (const auto& e : g.edges())
        names.push_back(e.label);
    std::vector<Subset> feasible;
    EdgeSet full = g.full_edges();
    for (EdgeSet a = 0;; ++a) {
        if (g.boundary_components(0, full & ~a) == k)
            feasible.push_back(a);
        if (a == full)
            break;
    }
    return DeltaMatroid(std::move(names), std::move(feasible));
}

} // namespace mmq
