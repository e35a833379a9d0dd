#include "mmq/verify.hpp"

#include <algorithm>
#include <map>

#include "mmq/expansions.hpp"

namespace mmq {

namespace {

std::string set_text(const Carrier& c, ElementSet s)
{
    std::string out = "{";
    bool first = true;
    for (const auto& l : c.labels_of(s)) {
        if (!first)
            out += ",";
        first = false;
        out += l;
    }
    return out + "}";
}

template <typename Labels>
std::string subset_text(const Labels& labels, Subset s)
{
    std::string out = "{";
    bool first = true;
    for (int e = 0; e < 64; ++e)
        if ((s >> e) & 1) {
            if (!first)
                out += ",";
            first = false;
            out += labels[e];
        }
    return out + "}";
}

} // namespace

bool all_pass(const std::vector<Check>& checks)
{
    return std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.pass; });
}

std::vector<Check> verify_multimatroid(const Multimatroid& z, const SkewClassOrdering& ord)
{
    std::vector<Check> out;
    const Carrier& c = z.carrier();

    {
        Check check{"axioms"};
        AxiomReport report = z.check_axioms();
        for (const auto& v : report.violations)
            check.fail("(" + v.axiom + ") " + v.detail);
        bool valid = check.pass;
        out.push_back(std::move(check));
        if (!valid)
            return out; // the theorem suites presuppose a multimatroid
    }

    bool nondeg = c.is_nondegenerate();
    Weights w = Weights::symbolic(c);
    Poly direct = transition_direct(z, w);

    {
        Check check{"pipeline-agreement"};
        if (transition_recursive(z, w, ord) != direct)
            check.fail("recursive pipeline disagrees with the direct sum");
        if (nondeg) {
            if (activities_expansion(z, w, ord) != direct)
                check.fail("activities expansion disagrees with the direct sum");
            if (cocompatible_expansion(z, w, ord) != direct)
                check.fail("cocompatible expansion disagrees with the direct sum");
            std::map<VarId, Rational> units;
            for (const Poly& wp : w.w)
                units[wp.variables().front()] = 1;
            if (class_expansion(z, ord) != direct.specialized(units))
                check.fail("class expansion disagrees with the unweighted polynomial");
        }
        out.push_back(std::move(check));
    }

    if (!nondeg)
        return out; // the activity machinery requires non-degeneracy

    {
        Check check{"interval-cover"};
        for (const IntervalHZ& h : interval_family(z, ord)) {
            std::size_t expected = std::size_t{1}
                                   << basis_activities(z, h.basis, ord).active.size();
            if (h.members.size() != expected)
                check.fail("interval of " + set_text(c, h.basis) + " has " +
                           std::to_string(h.members.size()) + " members");
        }
        CoverReport cover = cover_multiplicity_check(z, ord);
        for (const auto& e : cover.mismatches)
            check.fail("transversal " + set_text(c, e.transversal) + " covered " +
                       std::to_string(e.observed) + " times, expected " +
                       std::to_string(e.expected));
        out.push_back(std::move(check));
    }

    {
        Check check{"basis-classes"};
        std::size_t total = 0;
        for (const BasisClass& g : basis_classes(z, ord)) {
            total += g.members.size();
            std::size_t expected = 1;
            for (int cls : g.active)
                expected *= c.class_size(cls) - 1;
            if (g.members.size() != expected)
                check.fail("class of " + set_text(c, g.representative) + " has " +
                           std::to_string(g.members.size()) + " members, expected " +
                           std::to_string(expected));
        }
        if (total != z.bases().size())
            check.fail("classes do not partition the bases");
        int q = 0;
        if (c.is_uniform(q) && q >= 2 && c.num_classes() > 0) {
            Poly sum;
            Poly tp1 = Poly::t() + Poly(1);
            std::vector<Int> a = class_coefficients(z, ord);
            for (std::size_t i = 0; i < a.size(); ++i)
                sum += Poly(Rational(a[i])) * tp1.pow(static_cast<int>(i));
            std::map<VarId, Rational> units;
            for (const Poly& wp : w.w)
                units[wp.variables().front()] = 1;
            if (sum != direct.specialized(units))
                check.fail("coefficient expansion over (t+1)^i disagrees with Q");
        }
        out.push_back(std::move(check));
    }

    {
        Check check{"cocompatible"};
        std::size_t member_total = 0;
        for (const CocompatibleCell& cell : cocompatible_partition(z, ord)) {
            member_total += cell.members.size();
            if (!is_cocompatible(z, cell.closure, ord))
                check.fail("closure " + set_text(c, cell.closure) + " is not cocompatible");
            if (!std::binary_search(cell.members.begin(), cell.members.end(), cell.closure))
                check.fail("closure " + set_text(c, cell.closure) + " is outside its cell");
        }
        std::size_t transversal_count = 1;
        for (int cls = 0; cls < c.num_classes(); ++cls)
            transversal_count *= c.class_size(cls);
        if (member_total != transversal_count)
            check.fail("cocompatible cells do not partition the transversals");
        for (ElementSet t : c.all_transversals()) {
            ElementSet closure = cocompatible_closure(z, t, ord);
            if (cocompatible_closure(z, closure, ord) != closure)
                check.fail("closure is not idempotent at " + set_text(c, t));
            int differing = 0;
            for (int cls = 0; cls < c.num_classes(); ++cls)
                if ((t & c.class_mask(cls)) != (closure & c.class_mask(cls)))
                    ++differing;
            int active = static_cast<int>(transversal_activities(z, closure, ord).active.size());
            if (z.nullity(t) != active - differing)
                check.fail("nullity formula fails at " + set_text(c, t));
        }
        out.push_back(std::move(check));
    }

    {
        Check check{"counting-identity"};
        int q = 0;
        if (c.is_uniform(q) && q >= 2) {
            Rational lhs = 0;
            for (ElementSet t : c.all_transversals()) {
                Rational term = 1;
                for (int i = 0; i < z.nullity(t); ++i)
                    term *= q - 1;
                lhs += term;
            }
            Rational rhs = 0;
            for (ElementSet b : z.bases()) {
                Rational term = 1;
                for (std::size_t i = 0; i < basis_activities(z, b, ord).active.size(); ++i)
                    term *= 2;
                rhs += term;
            }
            if (lhs != rhs)
                check.fail("sum of (q-1)^n(T) differs from sum of 2^|act(B)|");
        }
        out.push_back(std::move(check));
    }

    return out;
}

std::vector<Check> verify_matroid(const Matroid& m, const ElementOrder& ord)
{
    std::vector<Check> out;
    const auto& labels = m.elements();

    Poly rank_def = tutte_rank_def(m);
    {
        Check check{"tutte-threeway"};
        if (tutte_activities(m, ord) != rank_def)
            check.fail("activities expansion disagrees with the rank definition");
        if (kochol_expansion(m, ord) != rank_def)
            check.fail("compatible-sets expansion disagrees with the rank definition");
        out.push_back(std::move(check));
    }

    {
        Check check{"interval-partition"};
        std::vector<BooleanInterval> intervals = crapo_intervals(m, ord);
        Subset full = m.full_set();
        for (Subset s = 0;; ++s) {
            int hits = 0;
            for (const auto& iv : intervals)
                hits += iv.contains(s);
            if (hits != 1)
                check.fail("subset " + subset_text(labels, s) + " covered " +
                           std::to_string(hits) + " times");
            if (s == full)
                break;
        }
        out.push_back(std::move(check));
    }

    {
        Check check{"compatible-count"};
        if (kochol_sets(m, ord).size() != m.bases().size())
            check.fail("compatible family size differs from the basis count");
        out.push_back(std::move(check));
    }

    {
        Check check{"transition-identity"};
        auto [lhs, rhs] = tutte_transition_identity(m);
        if (lhs != rhs)
            check.fail("square-cleared Tutte/transition identity fails");
        out.push_back(std::move(check));
    }

    {
        Check check{"lift"};
        Multimatroid z = lift_matroid(m);
        AxiomReport report = z.check_axioms();
        for (const auto& v : report.violations)
            check.fail("(" + v.axiom + ") " + v.detail);
        // Circuits of Z(M) are dotted circuits and barred cocircuits.
        std::vector<ElementSet> expected;
        const Carrier& c = z.carrier();
        for (Subset circ : m.circuits()) {
            ElementSet s = 0;
            for (int e = 0; e < m.size(); ++e)
                if ((circ >> e) & 1)
                    s |= c.bit(Element{e, 0});
            expected.push_back(s);
        }
        for (Subset circ : m.cocircuits()) {
            ElementSet s = 0;
            for (int e = 0; e < m.size(); ++e)
                if ((circ >> e) & 1)
                    s |= c.bit(Element{e, 1});
            expected.push_back(s);
        }
        std::sort(expected.begin(), expected.end());
        if (z.circuits() != expected)
            check.fail("lift circuits are not the circuits plus cocircuits");
        out.push_back(std::move(check));
    }

    {
        Check check{"kochol-cocompatible"};
        Multimatroid z = lift_matroid(m);
        const Carrier& c = z.carrier();
        SkewClassOrdering zord = SkewClassOrdering::of(ord.order);
        std::vector<Subset> kochol = kochol_sets(m, ord);
        for (Subset a = 0;; ++a) {
            ElementSet t = 0;
            for (int e = 0; e < m.size(); ++e)
                t |= c.bit(Element{e, (a >> e) & 1 ? 0 : 1});
            bool in_family = std::find(kochol.begin(), kochol.end(), a) != kochol.end();
            if (in_family != is_cocompatible(z, t, zord))
                check.fail("correspondence fails at " + subset_text(labels, a));
            if (a == m.full_set())
                break;
        }
        out.push_back(std::move(check));
    }

    return out;
}

std::vector<Check> verify_delta(const DeltaMatroid& d, const ElementOrder& ord)
{
    std::vector<Check> out;
    const auto& labels = d.elements();

    Poly transition = delta_transition(d);
    {
        Check check{"morse-agreement"};
        if (morse_expansion(d, ord) != transition)
            check.fail("activities expansion disagrees with the subset sum");
        out.push_back(std::move(check));
    }

    {
        Check check{"interval-partition"};
        std::vector<BooleanInterval> intervals = delta_intervals(d, ord);
        Subset full = d.full_set();
        for (Subset s = 0;; ++s) {
            int hits = 0;
            for (const auto& iv : intervals)
                hits += iv.contains(s);
            if (hits != 1)
                check.fail("subset " + subset_text(labels, s) + " covered " +
                           std::to_string(hits) + " times");
            if (s == full)
                break;
        }
        out.push_back(std::move(check));
    }

    Multimatroid z = lift_delta(d);
    {
        Check check{"distance-nullity"};
        const Carrier& c = z.carrier();
        for (Subset a = 0;; ++a) {
            ElementSet t = 0;
            for (int e = 0; e < d.size(); ++e)
                t |= c.bit(Element{e, (a >> e) & 1 ? 0 : 1});
            if (d.distance(a) != z.nullity(t))
                check.fail("d(X) != nullity at X=" + subset_text(labels, a));
            if (a == d.full_set())
                break;
        }
        out.push_back(std::move(check));
    }

    {
        Check check{"lift-roundtrip"};
        ElementSet dots = 0;
        for (int e = 0; e < d.size(); ++e)
            dots |= z.carrier().bit(Element{e, 0});
        DeltaMatroid back = project(z, dots, d.elements());
        if (!(back == d))
            check.fail("projecting the lift does not return the delta-matroid");
        AxiomReport report = z.check_axioms();
        for (const auto& v : report.violations)
            check.fail("(" + v.axiom + ") " + v.detail);
        out.push_back(std::move(check));
    }

    {
        Check check{"activity-correspondence"};
        SkewClassOrdering zord = SkewClassOrdering::of(ord.order);
        const Carrier& c = z.carrier();
        for (Subset f : d.feasible()) {
            ElementSet t = 0;
            for (int e = 0; e < d.size(); ++e)
                t |= c.bit(Element{e, (f >> e) & 1 ? 0 : 1});
            DeltaActivities act = delta_activities(d, f, ord);
            ActivityReport zact = basis_activities(z, t, zord);
            Subset active = act.internal | act.external;
            Subset zactive = 0;
            for (int cls : zact.active)
                zactive |= Subset{1} << cls;
            if (active != zactive)
                check.fail("activity sets differ at F=" + subset_text(labels, f));
        }
        out.push_back(std::move(check));
    }

    return out;
}

std::vector<Check> verify_ribbon(const RibbonGraph& g, const EdgeOrder& ord)
{
    std::vector<Check> out;
    int k = g.connected_components();
    Multimatroid z = lift_ribbon(g);
    SkewClassOrdering zord = SkewClassOrdering::identity(g.num_edges());
    {
        // Align the multimatroid class order with the edge order.
        std::vector<int> classes;
        std::map<std::string, int> index;
        for (int e = 0; e < g.num_edges(); ++e)
            index[g.edge(e).label] = e;
        for (const auto& l : ord)
            if (index.count(l))
                classes.push_back(index[l]);
        zord = SkewClassOrdering::of(classes);
    }

    RibbonWeights w = RibbonWeights::symbolic(g);
    {
        Check check{"pipeline-agreement"};
        Poly direct = topo_transition_direct(g, w);
        if (topo_transition_recursive(g, w, ord) != direct)
            check.fail("recursion disagrees with the state sum");
        if (ribbon_activities_expansion(g, w, ord) != direct)
            check.fail("quasi-tree expansion disagrees with the state sum");
        Poly lifted = transition_direct(z, Weights::symbolic(z.carrier())) *
                      Poly::t().pow(k);
        if (lifted != direct)
            check.fail("t^k * Q(Z(G)) disagrees with the state sum");
        out.push_back(std::move(check));
    }

    {
        Check check{"lift"};
        AxiomReport report = z.check_axioms();
        for (const auto& v : report.violations)
            check.fail("(" + v.axiom + ") " + v.detail);
        if (g.num_edges() > 0 && !z.is_tight())
            check.fail("lift is not tight");
        out.push_back(std::move(check));
    }

    {
        Check check{"singular-classes"};
        for (int e = 0; e < g.num_edges(); ++e) {
            bool bridge = g.is_bridge(e);
            bool tl = g.is_trivial_loop(e);
            int singular_slot = -1;
            for (int slot = 0; slot < 3; ++slot)
                if (z.is_singular(Element{e, slot}))
                    singular_slot = slot;
            int expected = bridge ? 1 : (tl ? (g.loop_twisted(e) ? 2 : 0) : -1);
            if (singular_slot != expected)
                check.fail("edge " + g.edge(e).label + " pins slot " +
                           std::to_string(singular_slot) + ", expected " +
                           std::to_string(expected));
        }
        out.push_back(std::move(check));
    }

    {
        Check check{"moves"};
        for (int e = 0; e < g.num_edges(); ++e) {
            if (g.contracted(e).boundary_components() != g.boundary_components())
                check.fail("contraction changes b at edge " + g.edge(e).label);
            EdgeSet eb = EdgeSet{1} << e;
            RibbonGraph gg = g.partial_petrial(eb).partial_petrial(eb);
            bool same = gg.rotations() == g.rotations();
            for (int f = 0; f < g.num_edges() && same; ++f)
                same = gg.edge(f).twisted == g.edge(f).twisted &&
                       gg.edge(f).label == g.edge(f).label;
            if (!same)
                check.fail("partial Petrial is not an involution at " + g.edge(e).label);
            if (!g.is_bridge(e) && g.deleted(eb).connected_components() != k)
                check.fail("deleting the non-bridge " + g.edge(e).label + " changes k");
        }
        out.push_back(std::move(check));
    }

    {
        Check check{"interlace-circuits"};
        const Carrier& c = z.carrier();
        for (const auto& [xs, ys, zs] : quasi_tree_states(g)) {
            EdgeClassification cls = classify_edges(g, xs, ys, zs, ord);
            ElementSet basis = 0;
            for (int e = 0; e < g.num_edges(); ++e)
                basis |= c.bit(Element{e, cls.block[e]});
            for (int e = 0; e < g.num_edges(); ++e) {
                auto fc = z.fundamental_circuit(basis, e);
                for (int f = 0; f < g.num_edges(); ++f) {
                    if (f == e)
                        continue;
                    bool meets = fc && (fc->first & c.class_mask(f));
                    if (meets != static_cast<bool>(cls.interlaced[e][f]))
                        check.fail("interlacement mismatch at edges " + g.edge(e).label +
                                   "," + g.edge(f).label);
                }
                // Orientability pins which of the two block moves leaves
                // the quasi-tree family.
                EdgeSet eb = EdgeSet{1} << e;
                bool leaves;
                if (cls.block[e] == 0)
                    leaves = g.boundary_components(zs, ys | eb) != k;
                else if (cls.block[e] == 1)
                    leaves = g.boundary_components(zs, ys & ~eb) != k;
                else
                    leaves = g.boundary_components(zs & ~eb, ys | eb) != k;
                if (leaves != static_cast<bool>(cls.orientable[e]))
                    check.fail("orientability mismatch at " + g.edge(e).label);
            }
        }
        out.push_back(std::move(check));
    }

    {
        Check check{"delta"};
        DeltaMatroid d = ribbon_delta(g); // constructor re-checks the exchange axiom
        for (Subset a = 0;; ++a) {
            bool state = g.boundary_components(0, g.full_edges() & ~a) == k;
            if (state != d.is_feasible(a))
                check.fail("feasibility mismatch");
            if (a == g.full_edges())
                break;
        }
        out.push_back(std::move(check));
    }

    return out;
}

} // namespace mmq
