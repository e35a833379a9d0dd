#ifndef MMQ_TESTERS_HPP
#define MMQ_TESTERS_HPP

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "mmq/delta.hpp"
#include "mmq/expansions.hpp"
#include "mmq/matroid.hpp"
#include "mmq/multimatroid.hpp"
#include "mmq/ribbon.hpp"

namespace mmq::testers {

using Rng = std::mt19937_64;

inline int pick(Rng& rng, int lo, int hi) // inclusive
{
    return std::uniform_int_distribution<int>(lo, hi)(rng);
}

inline Rational random_rational(Rng& rng)
{
    int num = pick(rng, -6, 6);
    int den = pick(rng, 1, 4);
    if (num == 0)
        num = 1; // keep weights nonzero so no transversal terms vanish
    return Rational(num, den);
}

// ---------------------------------------------------------------------------
// Frozen sample objects (ground truth from the worked examples).

// Carrier {d,e,f} | {g,h} | {i,j}; 8 bases; Q = 4t + 8.
inline Multimatroid sample322()
{
    return make_multimatroid({{"d", "e", "f"}, {"g", "h"}, {"i", "j"}},
                             {{"d", "g", "j"},
                              {"d", "h", "i"},
                              {"d", "h", "j"},
                              {"e", "g", "i"},
                              {"e", "g", "j"},
                              {"e", "h", "j"},
                              {"f", "g", "i"},
                              {"f", "h", "i"}});
}

// The 3x3x3 sample 3-matroid with 16 bases; Q = t^2 + 10t + 16.
inline Multimatroid sample333()
{
    return make_multimatroid(
        {{"a.", "a-", "a^"}, {"b.", "b-", "b^"}, {"c.", "c-", "c^"}},
        {{"a.", "b-", "c-"}, {"a^", "b.", "c-"}, {"a.", "b^", "c."}, {"a^", "b^", "c."},
         {"a-", "b.", "c-"}, {"a^", "b.", "c."}, {"a.", "b.", "c^"}, {"a^", "b^", "c^"},
         {"a.", "b.", "c."}, {"a.", "b^", "c-"}, {"a.", "b-", "c^"}, {"a^", "b-", "c^"},
         {"a^", "b-", "c-"}, {"a-", "b^", "c-"}, {"a-", "b.", "c^"}, {"a-", "b^", "c^"}});
}

// 2-matroid on {a,b,c} with three bases; projects to the delta-matroid
// with feasible sets {a,b,c}, {a}, {b}.
inline Multimatroid sample_twomatroid()
{
    return make_multimatroid({{"a.", "a-"}, {"b.", "b-"}, {"c.", "c-"}},
                             {{"a.", "b.", "c."}, {"a.", "b-", "c-"}, {"a-", "b.", "c-"}});
}

inline DeltaMatroid sample_delta()
{
    std::vector<std::string> e{"a", "b", "c"};
    return DeltaMatroid(e, {0b111, 0b001, 0b010});
}

inline Matroid u12()
{
    return Matroid({"a", "b"}, {0b01, 0b10});
}

inline Matroid triangle()
{
    return Matroid({"e1", "e2", "e3"}, {0b011, 0b101, 0b110});
}

// Two vertices joined by edges a and b, plus an untwisted loop c around
// one end of each; one boundary component, and Z(G) is sample333 under
// the slot identification.
inline RibbonGraph sample_ribbon()
{
    return RibbonGraph({{"a2", "c1", "b2", "c2"}, {"a1", "b1"}},
                       {{"a", {"a1", "a2"}, false},
                        {"b", {"b1", "b2"}, false},
                        {"c", {"c1", "c2"}, false}});
}

// ---------------------------------------------------------------------------
// Random generators. Every generator produces structures that are valid by
// construction, so the validating constructors double as checks.

inline RibbonGraph random_ribbon(Rng& rng, int max_edges = 5)
{
    int nv = pick(rng, 1, 3);
    int ne = pick(rng, 0, max_edges);
    std::vector<std::vector<std::string>> rot(nv);
    std::vector<RibbonGraph::EdgeData> edges;
    for (int e = 0; e < ne; ++e) {
        std::string l = std::string(1, static_cast<char>('a' + e));
        std::string h1 = l + "1", h2 = l + "2";
        edges.push_back({l, {h1, h2}, pick(rng, 0, 1) == 1});
        for (const auto& h : {h1, h2}) {
            auto& r = rot[pick(rng, 0, nv - 1)];
            r.insert(r.begin() + pick(rng, 0, static_cast<int>(r.size())), h);
        }
    }
    return RibbonGraph(std::move(rot), std::move(edges));
}

// Cycle matroid of a random multigraph (loops and parallels allowed):
// bases are the maximal spanning forests.
inline Matroid random_graphic_matroid(Rng& rng, int max_elements = 6)
{
    int nv = pick(rng, 2, 4);
    int ne = pick(rng, 1, max_elements);
    std::vector<std::pair<int, int>> ends;
    std::vector<std::string> labels;
    for (int e = 0; e < ne; ++e) {
        labels.push_back(std::string(1, static_cast<char>('a' + e)));
        ends.emplace_back(pick(rng, 0, nv - 1), pick(rng, 0, nv - 1));
    }
    auto forest_size = [&](Subset s) {
        std::vector<int> parent(nv);
        for (int v = 0; v < nv; ++v)
            parent[v] = v;
        std::function<int(int)> find = [&](int v) {
            while (parent[v] != v)
                v = parent[v] = parent[parent[v]];
            return v;
        };
        int size = 0;
        for (int e = 0; e < ne; ++e)
            if ((s >> e) & 1) {
                int a = find(ends[e].first), b = find(ends[e].second);
                if (a == b)
                    return -1; // contains a cycle
                parent[a] = b;
                ++size;
            }
        return size;
    };
    int best = 0;
    for (Subset s = 0; s < (Subset{1} << ne); ++s)
        best = std::max(best, forest_size(s));
    std::vector<Subset> bases;
    for (Subset s = 0; s < (Subset{1} << ne); ++s)
        if (forest_size(s) == best && popcount(s) == best)
            bases.push_back(s);
    return Matroid(std::move(labels), std::move(bases));
}

inline Matroid random_matroid(Rng& rng, int max_elements = 6)
{
    if (pick(rng, 0, 3) == 0) {
        int n = pick(rng, 1, max_elements);
        int k = pick(rng, 0, n);
        std::vector<std::string> labels;
        for (int e = 0; e < n; ++e)
            labels.push_back(std::string(1, static_cast<char>('a' + e)));
        std::vector<Subset> bases;
        for (Subset s = 0; s < (Subset{1} << n); ++s)
            if (popcount(s) == k)
                bases.push_back(s);
        return Matroid(std::move(labels), std::move(bases)); // uniform
    }
    return random_graphic_matroid(rng, max_elements);
}

inline DeltaMatroid random_delta(Rng& rng, int max_elements = 6)
{
    DeltaMatroid d = [&] {
        if (pick(rng, 0, 1) == 0)
            return ribbon_delta(random_ribbon(rng, std::min(max_elements, 5)));
        Matroid m = random_matroid(rng, max_elements);
        return DeltaMatroid(m.elements(), m.bases());
    }();
    // A random twist spreads the feasible sizes around.
    Subset a = 0;
    for (int e = 0; e < d.size(); ++e)
        a |= static_cast<Subset>(pick(rng, 0, 1)) << e;
    return d.twist(a);
}

// Direct sum: skew classes concatenate, bases are unions.
inline Multimatroid direct_sum(const std::vector<Multimatroid>& blocks)
{
    std::vector<std::vector<std::string>> classes;
    for (std::size_t i = 0; i < blocks.size(); ++i)
        for (int c = 0; c < blocks[i].carrier().num_classes(); ++c) {
            std::vector<std::string> labels;
            for (const auto& l : blocks[i].carrier().class_labels(c))
                labels.push_back("g" + std::to_string(i) + ":" + l);
            classes.push_back(std::move(labels));
        }
    Carrier carrier(classes);
    std::vector<ElementSet> bases{0};
    int offset = 0;
    for (const auto& block : blocks) {
        const Carrier& bc = block.carrier();
        std::vector<ElementSet> next;
        for (ElementSet prefix : bases)
            for (ElementSet b : block.bases()) {
                ElementSet lifted = 0;
                for (Element e : bc.elements_of(b))
                    lifted |= carrier.bit(Element{offset + e.cls, e.slot});
                next.push_back(prefix | lifted);
            }
        bases = std::move(next);
        offset += bc.num_classes();
    }
    return Multimatroid(std::move(carrier), std::move(bases));
}

// Adds a fresh element x to a class, with rank growing by one on every
// extension: the new bases are the old ones plus their x-variants.
inline Multimatroid free_extension(const Multimatroid& z, int cls, const std::string& label)
{
    const Carrier& c = z.carrier();
    std::vector<std::vector<std::string>> classes;
    for (int i = 0; i < c.num_classes(); ++i) {
        classes.push_back(c.class_labels(i));
        if (i == cls)
            classes.back().push_back(label);
    }
    Carrier bigger(classes);
    auto translate = [&](ElementSet s) {
        ElementSet out = 0;
        for (Element e : c.elements_of(s))
            out |= bigger.bit(e);
        return out;
    };
    std::vector<ElementSet> bases;
    Element x{cls, c.class_size(cls)};
    for (ElementSet b : z.bases()) {
        bases.push_back(translate(b));
        bases.push_back((translate(b) & ~bigger.class_mask(cls)) | bigger.bit(x));
    }
    return Multimatroid(std::move(bigger), std::move(bases));
}

// Removes one element from a class of size >= 3; bases become the maximal
// basis differences.
inline Multimatroid delete_element(const Multimatroid& z, Element u)
{
    const Carrier& c = z.carrier();
    std::vector<std::vector<std::string>> classes;
    for (int i = 0; i < c.num_classes(); ++i) {
        classes.push_back(c.class_labels(i));
        if (i == u.cls)
            classes.back().erase(classes.back().begin() + u.slot);
    }
    Carrier smaller(classes);
    auto translate = [&](ElementSet s) {
        ElementSet out = 0;
        for (Element e : c.elements_of(s)) {
            if (e.cls == u.cls && e.slot == u.slot)
                continue;
            int slot = (e.cls == u.cls && e.slot > u.slot) ? e.slot - 1 : e.slot;
            out |= smaller.bit(Element{e.cls, slot});
        }
        return out;
    };
    std::set<ElementSet> diffs;
    for (ElementSet b : z.bases())
        diffs.insert(translate(b & ~c.bit(u)));
    std::vector<ElementSet> maximal;
    for (ElementSet d : diffs) {
        bool contained = false;
        for (ElementSet d2 : diffs)
            if (d != d2 && (d & d2) == d)
                contained = true;
        if (!contained)
            maximal.push_back(d);
    }
    return Multimatroid(std::move(smaller), std::move(maximal));
}

// Non-degenerate multimatroid with mixed class sizes 2..4: a direct sum of
// lifted blocks reshaped by free extensions and element deletions.
inline Multimatroid random_multimatroid(Rng& rng, int max_classes = 5)
{
    std::vector<Multimatroid> blocks;
    int classes = 0;
    while (classes == 0 || (classes < max_classes && pick(rng, 0, 1) == 0)) {
        Multimatroid block = pick(rng, 0, 1) == 0
                                 ? lift_ribbon(random_ribbon(rng, std::min(3, max_classes - classes)))
                                 : lift_delta(random_delta(rng, std::min(3, max_classes - classes)));
        if (block.carrier().num_classes() == 0)
            continue;
        classes += block.carrier().num_classes();
        blocks.push_back(std::move(block));
        if (classes >= max_classes)
            break;
    }
    Multimatroid z = direct_sum(blocks);
    for (int round = 0; round < 3; ++round) {
        const Carrier& c = z.carrier();
        int cls = pick(rng, 0, c.num_classes() - 1);
        int action = pick(rng, 0, 2);
        if (action == 0 && c.class_size(cls) < 4) {
            z = free_extension(z, cls, "n" + std::to_string(round) + "c" + std::to_string(cls));
        } else if (action == 1 && c.class_size(cls) > 2) {
            z = delete_element(z, Element{cls, pick(rng, 0, c.class_size(cls) - 1)});
        }
    }
    return z;
}

inline SkewClassOrdering random_class_order(Rng& rng, int n)
{
    std::vector<int> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::shuffle(order.begin(), order.end(), rng);
    return SkewClassOrdering::of(order);
}

inline ElementOrder random_element_order(Rng& rng, int n)
{
    std::vector<int> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::shuffle(order.begin(), order.end(), rng);
    return ElementOrder::of(order);
}

inline Weights random_weights(Rng& rng, const Carrier& c)
{
    Weights w;
    for (int i = 0; i < c.universe_size(); ++i)
        w.w.push_back(Poly(random_rational(rng)));
    return w;
}

// ---------------------------------------------------------------------------
// Independent oracles used by the tests.

// Maximal independent subtransversals of the elementary-minor rank
// r'(S) = r(S ∪ {u}) - r({u}), by exhaustive enumeration.
inline std::vector<std::vector<std::string>> minor_bases_bruteforce(const Multimatroid& z,
                                                                    Element u)
{
    const Carrier& c = z.carrier();
    ElementSet ub = c.bit(u);
    int ru = z.rank(ub);
    std::vector<ElementSet> subs;
    for (ElementSet s : c.all_subtransversals())
        if (!(s & c.class_mask(u.cls)))
            subs.push_back(s);
    auto minor_rank = [&](ElementSet s) { return z.rank(s | ub) - ru; };
    std::vector<ElementSet> independents;
    for (ElementSet s : subs)
        if (minor_rank(s) == popcount(s))
            independents.push_back(s);
    std::vector<std::vector<std::string>> out;
    for (ElementSet s : independents) {
        bool maximal = true;
        for (ElementSet t : independents)
            if (s != t && (s & t) == s)
                maximal = false;
        if (maximal)
            out.push_back(c.labels_of(s));
    }
    std::sort(out.begin(), out.end());
    return out;
}

// The greedy construction of cocompatible transversals: walk the classes
// from the greatest down; a rank-preserving element is forced, otherwise
// branch over the free choices. Returns the reachable transversal set.
inline std::set<ElementSet> greedy_cocompatible(const Multimatroid& z,
                                                const SkewClassOrdering& ord)
{
    const Carrier& c = z.carrier();
    std::set<ElementSet> out;
    std::function<void(int, ElementSet)> step = [&](int idx, ElementSet t) {
        if (idx < 0) {
            out.insert(t);
            return;
        }
        int cls = ord.order[idx];
        int forced = -1;
        for (int s = 0; s < c.class_size(cls); ++s)
            if (z.rank(t | c.bit(Element{cls, s})) == z.rank(t)) {
                forced = s;
                break;
            }
        if (forced >= 0) {
            step(idx - 1, t | c.bit(Element{cls, forced}));
        } else {
            for (int s = 0; s < c.class_size(cls); ++s)
                step(idx - 1, t | c.bit(Element{cls, s}));
        }
    };
    step(c.num_classes() - 1, 0);
    return out;
}

} // namespace mmq::testers

#endif
