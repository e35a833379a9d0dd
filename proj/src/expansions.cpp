#include "mmq/expansions.hpp"

#include <algorithm>
#include <stdexcept>

namespace mmq {

namespace {

void require_nondegenerate(const Multimatroid& z, const char* op)
{
    if (!z.carrier().is_nondegenerate())
        throw std::invalid_argument(std::string(op) +
                                    ": requires a non-degenerate multimatroid");
}

// Weights for a carrier with one class removed.
Weights drop_class(const Carrier& before, const Carrier& after, const Weights& w, int cls)
{
    Weights out;
    out.w.reserve(after.universe_size());
    for (int c = 0; c < before.num_classes(); ++c) {
        if (c == cls)
            continue;
        for (int s = 0; s < before.class_size(c); ++s)
            out.w.push_back(w.of(before, Element{c, s}));
    }
    return out;
}

} // namespace

Weights Weights::symbolic(const Carrier& c)
{
    Weights out;
    for (int i = 0; i < c.universe_size(); ++i)
        out.w.push_back(Poly::var(VarId::weight(c.label(c.at_index(i)))));
    return out;
}

Weights Weights::units(const Carrier& c)
{
    Weights out;
    out.w.assign(c.universe_size(), Poly(1));
    return out;
}

Weights Weights::constants(const Carrier& c, const std::map<std::string, Rational>& by_label)
{
    Weights out;
    for (int i = 0; i < c.universe_size(); ++i) {
        auto it = by_label.find(c.label(c.at_index(i)));
        if (it == by_label.end())
            throw std::invalid_argument("no weight for element '" + c.label(c.at_index(i)) + "'");
        out.w.push_back(Poly(it->second));
    }
    return out;
}

Element min_element(const Carrier& c, ElementSet s, const SkewClassOrdering& ord)
{
    Element best{-1, -1};
    int best_pos = -1;
    for (Element e : c.elements_of(s)) {
        if (best_pos < 0 || ord.pos[e.cls] < best_pos) {
            best = e;
            best_pos = ord.pos[e.cls];
        }
    }
    if (best_pos < 0)
        throw std::logic_error("min of empty subtransversal");
    return best;
}

Poly transition_direct(const Multimatroid& z, const Weights& w)
{
    const Carrier& c = z.carrier();
    Poly out;
    for (ElementSet t : c.all_transversals()) {
        Poly term = Poly::t().pow(z.nullity(t));
        for (Element e : c.elements_of(t))
            term *= w.of(c, e);
        out += term;
    }
    return out;
}

Poly transition_recursive(const Multimatroid& z, const Weights& w, const SkewClassOrdering& ord)
{
    const Carrier& c = z.carrier();
    if (c.num_classes() == 0)
        return Poly(1);

    int cls = ord.order.back();
    SkewClassOrdering reduced_ord = ord.without_class(cls);

    // Look for the (unique, if any) singular element in the class.
    int singular_slot = -1;
    for (int s = 0; s < c.class_size(cls); ++s)
        if (z.is_singular(Element{cls, s})) {
            singular_slot = s;
            break;
        }

    if (singular_slot >= 0) {
        Poly factor = Poly::t() * w.of(c, Element{cls, singular_slot});
        for (int s = 0; s < c.class_size(cls); ++s)
            if (s != singular_slot)
                factor += w.of(c, Element{cls, s});
        Multimatroid rest = z.restriction(cls);
        return factor * transition_recursive(rest, drop_class(c, rest.carrier(), w, cls),
                                             reduced_ord);
    }

    Poly out;
    for (int s = 0; s < c.class_size(cls); ++s) {
        Element u{cls, s};
        Multimatroid m = z.minor(u);
        out += w.of(c, u) *
               transition_recursive(m, drop_class(c, m.carrier(), w, cls), reduced_ord);
    }
    return out;
}

Poly transition_recursive(const Multimatroid& z, const Weights& w)
{
    return transition_recursive(z, w, SkewClassOrdering::identity(z.carrier().num_classes()));
}

ActivityReport basis_activities(const Multimatroid& z, ElementSet basis,
                                const SkewClassOrdering& ord)
{
    require_nondegenerate(z, "basis_activities");
    if (!z.is_basis(basis))
        throw std::invalid_argument("basis_activities: not a basis");
    const Carrier& c = z.carrier();

    ActivityReport report;
    report.subject = basis;
    for (int cls = 0; cls < c.num_classes(); ++cls) {
        auto fc = z.fundamental_circuit(basis, cls);
        bool active = false;
        if (fc) {
            report.underline[cls] = fc->second;
            active = min_element(c, fc->first, ord).cls == cls;
        }
        (active ? report.active : report.inactive).push_back(cls);
    }
    return report;
}

Poly activities_expansion(const Multimatroid& z, const Weights& w, const SkewClassOrdering& ord)
{
    require_nondegenerate(z, "activities_expansion");
    const Carrier& c = z.carrier();
    Poly out;
    for (ElementSet b : z.bases()) {
        ActivityReport act = basis_activities(z, b, ord);
        Poly term(1);
        for (int cls : act.inactive)
            term *= w.of(c, c.element_in_class(b, cls));
        for (int cls : act.active) {
            Poly factor = Poly::t() * w.of(c, act.underline.at(cls)) *
                          Rational(1, c.class_size(cls) - 1);
            factor += w.of(c, c.element_in_class(b, cls));
            term *= factor;
        }
        out += term;
    }
    return out;
}

IntervalHZ interval(const Multimatroid& z, ElementSet basis, const SkewClassOrdering& ord)
{
    const Carrier& c = z.carrier();
    ActivityReport act = basis_activities(z, basis, ord);

    IntervalHZ out;
    out.basis = basis;
    for (int cls : act.active) {
        out.inside_active |= basis & c.class_mask(cls);
        out.outside_active |= c.bit(act.underline.at(cls));
    }
    out.members.push_back(basis & ~out.inside_active);
    for (int cls : act.active) {
        ElementSet in = basis & c.class_mask(cls);
        ElementSet outb = c.bit(act.underline.at(cls));
        std::vector<ElementSet> next;
        next.reserve(out.members.size() * 2);
        for (ElementSet m : out.members) {
            next.push_back(m | in);
            next.push_back(m | outb);
        }
        out.members = std::move(next);
    }
    std::sort(out.members.begin(), out.members.end());
    return out;
}

std::vector<IntervalHZ> interval_family(const Multimatroid& z, const SkewClassOrdering& ord)
{
    std::vector<IntervalHZ> out;
    for (ElementSet b : z.bases())
        out.push_back(interval(z, b, ord));
    return out;
}

namespace {

MinCircuitClasses min_circuit_classes_impl(const Carrier& c,
                                           const std::vector<ElementSet>& circuits,
                                           ElementSet s, const SkewClassOrdering& ord)
{
    if (!c.is_subtransversal(s))
        throw std::invalid_argument("min_circuit_classes: not a subtransversal");
    MinCircuitClasses out;
    for (ElementSet circuit : circuits) {
        if ((circuit & s) != circuit)
            continue;
        out.mce |= c.bit(min_element(c, circuit, ord));
    }
    out.mcs = c.classes_met(out.mce);
    return out;
}

} // namespace

MinCircuitClasses min_circuit_classes(const Multimatroid& z, ElementSet s,
                                      const SkewClassOrdering& ord)
{
    return min_circuit_classes_impl(z.carrier(), z.circuits(), s, ord);
}

CoverReport cover_multiplicity_check(const Multimatroid& z, const SkewClassOrdering& ord)
{
    require_nondegenerate(z, "cover_multiplicity_check");
    const Carrier& c = z.carrier();
    const std::vector<ElementSet>& circuits = z.circuits();

    std::map<ElementSet, long long> counts;
    for (const IntervalHZ& h : interval_family(z, ord))
        for (ElementSet t : h.members)
            ++counts[t];

    CoverReport report;
    for (ElementSet t : c.all_transversals()) {
        CoverEntry entry;
        entry.transversal = t;
        entry.observed = counts.count(t) ? counts[t] : 0;
        entry.expected = 1;
        for (int cls : min_circuit_classes_impl(c, circuits, t, ord).mcs)
            entry.expected *= c.class_size(cls) - 1;
        report.entries.push_back(entry);
        if (entry.observed != entry.expected)
            report.mismatches.push_back(entry);
    }
    return report;
}

namespace {

// Lexicographic comparison of transversals along the class ordering by slot.
bool ord_lex_less(const Carrier& c, const SkewClassOrdering& ord, ElementSet a, ElementSet b)
{
    for (int cls : ord.order) {
        int sa = c.element_in_class(a, cls).slot;
        int sb = c.element_in_class(b, cls).slot;
        if (sa != sb)
            return sa < sb;
    }
    return false;
}

} // namespace

std::vector<BasisClass> basis_classes(const Multimatroid& z, const SkewClassOrdering& ord)
{
    require_nondegenerate(z, "basis_classes");
    const Carrier& c = z.carrier();

    // Key: the active classes plus the basis restricted to inactive classes.
    std::map<std::pair<std::uint64_t, ElementSet>, BasisClass> groups;
    for (ElementSet b : z.bases()) {
        ActivityReport act = basis_activities(z, b, ord);
        std::uint64_t active_mask = 0;
        ElementSet inactive_part = b;
        for (int cls : act.active) {
            active_mask |= std::uint64_t{1} << cls;
            inactive_part &= ~c.class_mask(cls);
        }
        BasisClass& g = groups[{active_mask, inactive_part}];
        if (g.members.empty()) {
            g.active = act.active;
            g.underline = act.underline;
        }
        g.members.push_back(b);
    }

    std::vector<BasisClass> out;
    for (auto& [key, g] : groups) {
        std::sort(g.members.begin(), g.members.end());
        g.representative = g.members.front();
        for (ElementSet m : g.members)
            if (ord_lex_less(c, ord, m, g.representative))
                g.representative = m;
        // Keep only underlines on active classes; members share them.
        std::map<int, Element> trimmed;
        for (int cls : g.active)
            trimmed[cls] = g.underline.at(cls);
        g.underline = std::move(trimmed);
        out.push_back(std::move(g));
    }
    std::sort(out.begin(), out.end(), [](const BasisClass& a, const BasisClass& b) {
        return a.representative < b.representative;
    });
    return out;
}

Poly class_expansion(const Multimatroid& z, const SkewClassOrdering& ord)
{
    const Carrier& c = z.carrier();
    Poly out;
    for (const BasisClass& g : basis_classes(z, ord)) {
        Poly term(1);
        for (int cls : g.active)
            term *= Poly::t() + Poly(c.class_size(cls) - 1);
        out += term;
    }
    return out;
}

std::vector<Int> class_coefficients(const Multimatroid& z, const SkewClassOrdering& ord)
{
    const Carrier& c = z.carrier();
    int q = 0;
    if (!c.is_uniform(q) || q < 2)
        throw std::invalid_argument("class_coefficients: requires a q-matroid with q >= 2");

    // rep(B) for every basis.
    std::map<ElementSet, ElementSet> rep;
    for (const BasisClass& g : basis_classes(z, ord))
        for (ElementSet m : g.members)
            rep[m] = g.representative;

    std::vector<Int> a(c.num_classes() + 1, 0);
    for (ElementSet b : z.bases()) {
        ActivityReport act = basis_activities(z, b, ord);
        int i = popcount(b & rep[b]) - static_cast<int>(act.inactive.size());
        if (i < 0 || i > c.num_classes())
            throw std::logic_error("class_coefficients: index out of range");
        a[i] += 1;
    }
    return a;
}

namespace {

ActivityReport transversal_activities_impl(const Carrier& c,
                                           const std::vector<ElementSet>& circuits,
                                           ElementSet t, const SkewClassOrdering& ord)
{
    if (!c.is_transversal(t))
        throw std::invalid_argument("transversal_activities: not a transversal");

    ActivityReport report;
    report.subject = t;
    std::vector<bool> active(c.num_classes(), false);
    for (ElementSet circuit : circuits) {
        Element m = min_element(c, circuit, ord);
        ElementSet tail = circuit & ~c.class_mask(m.cls);
        if ((tail & t) == tail) {
            active[m.cls] = true;
            report.underline[m.cls] = m; // common across circuits by uniqueness of minima
        }
    }
    for (int cls = 0; cls < c.num_classes(); ++cls)
        (active[cls] ? report.active : report.inactive).push_back(cls);
    return report;
}

bool is_cocompatible_impl(const Carrier& c, const std::vector<ElementSet>& circuits,
                          ElementSet t, const SkewClassOrdering& ord)
{
    if (!c.is_transversal(t))
        throw std::invalid_argument("is_cocompatible: not a transversal");
    for (ElementSet circuit : circuits) {
        ElementSet m = c.bit(min_element(c, circuit, ord));
        if ((circuit & ~t) == m)
            return false;
    }
    return true;
}

ElementSet closure_impl(const Carrier& c, const std::vector<ElementSet>& circuits,
                        ElementSet t, const SkewClassOrdering& ord)
{
    ActivityReport act = transversal_activities_impl(c, circuits, t, ord);
    ElementSet out = t;
    for (int cls : act.active) {
        out &= ~c.class_mask(cls);
        out |= c.bit(act.underline.at(cls));
    }
    return out;
}

} // namespace

ActivityReport transversal_activities(const Multimatroid& z, ElementSet t,
                                      const SkewClassOrdering& ord)
{
    return transversal_activities_impl(z.carrier(), z.circuits(), t, ord);
}

bool is_cocompatible(const Multimatroid& z, ElementSet t, const SkewClassOrdering& ord)
{
    return is_cocompatible_impl(z.carrier(), z.circuits(), t, ord);
}

ElementSet cocompatible_closure(const Multimatroid& z, ElementSet t,
                                const SkewClassOrdering& ord)
{
    return closure_impl(z.carrier(), z.circuits(), t, ord);
}

Poly cocompatible_expansion(const Multimatroid& z, const Weights& w,
                            const SkewClassOrdering& ord)
{
    require_nondegenerate(z, "cocompatible_expansion");
    const Carrier& c = z.carrier();
    const std::vector<ElementSet>& circuits = z.circuits();
    Poly out;
    for (ElementSet t : c.all_transversals()) {
        if (!is_cocompatible_impl(c, circuits, t, ord))
            continue;
        ActivityReport act = transversal_activities_impl(c, circuits, t, ord);
        Poly term(1);
        for (int cls : act.inactive)
            term *= w.of(c, c.element_in_class(t, cls));
        for (int cls : act.active) {
            Element slot = c.element_in_class(t, cls);
            Poly factor = Poly::t() * w.of(c, slot);
            for (int s = 0; s < c.class_size(cls); ++s)
                if (s != slot.slot)
                    factor += w.of(c, Element{cls, s});
            term *= factor;
        }
        out += term;
    }
    return out;
}

std::vector<CocompatibleCell> cocompatible_partition(const Multimatroid& z,
                                                     const SkewClassOrdering& ord)
{
    require_nondegenerate(z, "cocompatible_partition");
    const Carrier& c = z.carrier();
    const std::vector<ElementSet>& circuits = z.circuits();
    std::map<ElementSet, CocompatibleCell> cells;
    for (ElementSet t : c.all_transversals()) {
        ElementSet closure = closure_impl(c, circuits, t, ord);
        CocompatibleCell& cell = cells[closure];
        cell.closure = closure;
        cell.members.push_back(t);
    }
    std::vector<CocompatibleCell> out;
    for (auto& [key, cell] : cells) {
        std::sort(cell.members.begin(), cell.members.end());
        out.push_back(std::move(cell));
    }
    return out;
}

} // namespace mmq
