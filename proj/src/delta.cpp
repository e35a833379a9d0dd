#include "mmq/delta.hpp"

#include <algorithm>
#include <stdexcept>

namespace mmq {

std::optional<std::string> DeltaMatroid::exchange_violation(
    const std::vector<std::string>& elements, const std::vector<Subset>& feasible)
{
    if (feasible.empty())
        return "no feasible sets";
    auto is_in = [&](Subset s) {
        return std::find(feasible.begin(), feasible.end(), s) != feasible.end();
    };
    for (Subset x : feasible)
        for (Subset y : feasible) {
            Subset diff = x ^ y;
            Subset us = diff;
            while (us) {
                Subset u = us & (~us + 1);
                us &= us - 1;
                bool ok = false;
                Subset vs = diff;
                while (vs && !ok) {
                    Subset v = vs & (~vs + 1);
                    vs &= vs - 1;
                    if (is_in(x ^ (u | v)))
                        ok = true;
                }
                if (!ok) {
                    std::string lbl = elements[__builtin_ctzll(u)];
                    return "symmetric exchange fails for u='" + lbl + "'";
                }
            }
        }
    return std::nullopt;
}

DeltaMatroid::DeltaMatroid(std::vector<std::string> elements, std::vector<Subset> feasible)
    : elements_(std::move(elements)), feasible_(std::move(feasible))
{
    if (elements_.size() > 64)
        throw std::invalid_argument("delta-matroid ground set larger than 64 elements");
    std::sort(feasible_.begin(), feasible_.end());
    feasible_.erase(std::unique(feasible_.begin(), feasible_.end()), feasible_.end());
    for (Subset f : feasible_)
        if (f & ~full_set())
            throw std::invalid_argument("feasible set uses unknown elements");
    if (auto why = exchange_violation(elements_, feasible_))
        throw std::invalid_argument("not a delta-matroid: " + *why);
}

bool DeltaMatroid::is_feasible(Subset s) const
{
    return std::binary_search(feasible_.begin(), feasible_.end(), s);
}

int DeltaMatroid::distance(Subset x) const
{
    int best = size() + 1;
    for (Subset f : feasible_)
        best = std::min(best, popcount(f ^ x));
    return best;
}

DeltaMatroid DeltaMatroid::twist(Subset a) const
{
    std::vector<Subset> twisted;
    twisted.reserve(feasible_.size());
    for (Subset f : feasible_)
        twisted.push_back(f ^ a);
    return DeltaMatroid(elements_, std::move(twisted));
}

bool DeltaMatroid::is_matroid() const
{
    for (Subset f : feasible_)
        if (popcount(f) != popcount(feasible_.front()))
            return false;
    return true;
}

Matroid DeltaMatroid::as_matroid() const
{
    if (!is_matroid())
        throw std::invalid_argument("feasible sets are not equicardinal");
    return Matroid(elements_, feasible_);
}

Subset DeltaMatroid::set_of_labels(const std::vector<std::string>& labels) const
{
    Subset s = 0;
    for (const auto& l : labels) {
        auto it = std::find(elements_.begin(), elements_.end(), l);
        if (it == elements_.end())
            throw std::invalid_argument("unknown element '" + l + "'");
        s |= Subset{1} << (it - elements_.begin());
    }
    return s;
}

std::vector<std::string> DeltaMatroid::labels_of(Subset s) const
{
    std::vector<std::string> out;
    while (s) {
        out.push_back(elements_[__builtin_ctzll(s)]);
        s &= s - 1;
    }
    return out;
}

Multimatroid lift_delta(const DeltaMatroid& d)
{
    std::vector<std::vector<std::string>> classes;
    for (const auto& l : d.elements())
        classes.push_back({l + ".", l + "-"});
    Carrier carrier(std::move(classes));
    std::vector<ElementSet> bases;
    for (Subset f : d.feasible()) {
        ElementSet t = 0;
        for (int e = 0; e < d.size(); ++e)
            t |= carrier.bit(Element{e, (f >> e) & 1 ? 0 : 1});
        bases.push_back(t);
    }
    return Multimatroid(std::move(carrier), std::move(bases));
}

DeltaMatroid project(const Multimatroid& z, ElementSet t, std::vector<std::string> names)
{
    const Carrier& c = z.carrier();
    for (int cls = 0; cls < c.num_classes(); ++cls)
        if (c.class_size(cls) != 2)
            throw std::invalid_argument("project: not a 2-matroid");
    if (!c.is_transversal(t))
        throw std::invalid_argument("project: reference is not a transversal");
    if (static_cast<int>(names.size()) != c.num_classes())
        throw std::invalid_argument("project: one name per skew class required");

    std::vector<Subset> feasible;
    for (ElementSet b : z.bases()) {
        if (!c.is_transversal(b))
            throw std::invalid_argument("project: 2-matroid has a non-transversal basis");
        Subset f = 0;
        for (int cls = 0; cls < c.num_classes(); ++cls)
            if ((b & c.class_mask(cls)) == (t & c.class_mask(cls)))
                f |= Subset{1} << cls;
        feasible.push_back(f);
    }
    return DeltaMatroid(std::move(names), std::move(feasible));
}

DeltaMatroid project(const Multimatroid& z, ElementSet t)
{
    const Carrier& c = z.carrier();
    std::vector<std::string> names;
    for (int cls = 0; cls < c.num_classes(); ++cls)
        names.push_back(c.label(c.element_in_class(t, cls)));
    return project(z, t, std::move(names));
}

Poly delta_transition(const DeltaMatroid& d)
{
    Poly w = Poly::var(VarId::named("w"));
    Poly x = Poly::var(VarId::named("x"));
    Poly out;
    Subset full = d.full_set();
    for (Subset a = 0;; ++a) {
        out += w.pow(d.size() - popcount(a)) * x.pow(popcount(a)) *
               Poly::t().pow(d.distance(a));
        if (a == full)
            break;
    }
    return out;
}

DeltaActivities delta_activities(const DeltaMatroid& d, Subset f, const ElementOrder& ord)
{
    if (!d.is_feasible(f))
        throw std::invalid_argument("delta_activities: set is not feasible");
    DeltaActivities act;
    for (int e = 0; e < d.size(); ++e) {
        Subset eb = Subset{1} << e;
        if (d.is_feasible(f ^ eb))
            continue; // not F-orientable
        bool active = true;
        for (int g = 0; g < d.size() && active; ++g) {
            Subset gb = Subset{1} << g;
            if (g == e || !ord.precedes(g, e))
                continue;
            if (d.is_feasible(f ^ eb ^ gb))
                active = false; // e is F-interlaced with the smaller g
        }
        if (!active)
            continue;
        (f & eb ? act.internal : act.external) |= eb;
    }
    return act;
}

Poly morse_expansion(const DeltaMatroid& d, const ElementOrder& ord)
{
    Poly w = Poly::var(VarId::named("w"));
    Poly x = Poly::var(VarId::named("x"));
    Poly t = Poly::t();
    Poly out;
    for (Subset f : d.feasible()) {
        DeltaActivities act = delta_activities(d, f, ord);
        int ni = popcount(act.internal);
        int ne = popcount(act.external);
        out += w.pow(d.size() - popcount(f) - ne) * x.pow(popcount(f) - ni) *
               (x + w * t).pow(ni) * (w + x * t).pow(ne);
    }
    return out;
}

std::vector<BooleanInterval> delta_intervals(const DeltaMatroid& d, const ElementOrder& ord)
{
    std::vector<BooleanInterval> out;
    for (Subset f : d.feasible()) {
        DeltaActivities act = delta_activities(d, f, ord);
        out.push_back({f, f & ~act.internal, f | act.external});
    }
    return out;
}

} // namespace mmq
