#include "mmq/matroid.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace mmq {

ElementOrder ElementOrder::identity(int n)
{
    ElementOrder o;
    o.order.resize(n);
    std::iota(o.order.begin(), o.order.end(), 0);
    o.pos = o.order;
    return o;
}

ElementOrder ElementOrder::of(std::vector<int> order_least_first)
{
    ElementOrder o;
    o.order = std::move(order_least_first);
    o.pos.assign(o.order.size(), -1);
    for (int i = 0; i < static_cast<int>(o.order.size()); ++i)
        o.pos[o.order[i]] = i;
    return o;
}

int ElementOrder::min_of(Subset s) const
{
    int best = -1;
    while (s) {
        int e = __builtin_ctzll(s);
        if (best < 0 || pos[e] < pos[best])
            best = e;
        s &= s - 1;
    }
    if (best < 0)
        throw std::logic_error("min of empty set");
    return best;
}

Matroid::Matroid(std::vector<std::string> elements, std::vector<Subset> bases)
    : elements_(std::move(elements)), bases_(std::move(bases))
{
    if (elements_.size() > 64)
        throw std::invalid_argument("matroid ground set larger than 64 elements");
    if (bases_.empty())
        throw std::invalid_argument("matroid needs at least one basis");
    std::sort(bases_.begin(), bases_.end());
    bases_.erase(std::unique(bases_.begin(), bases_.end()), bases_.end());
    for (Subset b : bases_) {
        if (b & ~full_set())
            throw std::invalid_argument("basis uses unknown elements");
        if (popcount(b) != popcount(bases_.front()))
            throw std::invalid_argument("bases are not equicardinal");
    }
    for (Subset a : bases_)
        for (Subset b : bases_) {
            Subset only_a = a & ~b;
            while (only_a) {
                Subset x = only_a & (~only_a + 1);
                only_a &= only_a - 1;
                bool exchanged = false;
                Subset only_b = b & ~a;
                while (only_b && !exchanged) {
                    Subset y = only_b & (~only_b + 1);
                    only_b &= only_b - 1;
                    if (is_basis((a & ~x) | y))
                        exchanged = true;
                }
                if (!exchanged)
                    throw std::invalid_argument("basis exchange fails");
            }
        }
}

bool Matroid::is_basis(Subset s) const
{
    return std::binary_search(bases_.begin(), bases_.end(), s);
}

int Matroid::rank(Subset a) const
{
    int r = 0;
    for (Subset b : bases_)
        r = std::max(r, popcount(a & b));
    return r;
}

Matroid Matroid::dual() const
{
    std::vector<Subset> co;
    co.reserve(bases_.size());
    for (Subset b : bases_)
        co.push_back(full_set() & ~b);
    return Matroid(elements_, std::move(co));
}

std::vector<Subset> Matroid::circuits() const
{
    std::vector<Subset> out;
    for (Subset s = 1; s <= full_set(); ++s) {
        if (rank(s) == popcount(s))
            continue;
        bool minimal = true;
        Subset rest = s;
        while (rest && minimal) {
            Subset x = rest & (~rest + 1);
            rest &= rest - 1;
            Subset t = s & ~x;
            if (rank(t) < popcount(t))
                minimal = false;
        }
        if (minimal)
            out.push_back(s);
    }
    return out;
}

std::vector<Subset> Matroid::cocircuits() const
{
    return dual().circuits();
}

Subset Matroid::fund_circuit(Subset basis, int e) const
{
    if (!is_basis(basis))
        throw std::invalid_argument("fund_circuit: not a basis");
    Subset eb = Subset{1} << e;
    if (basis & eb)
        throw std::invalid_argument("fund_circuit: element lies in the basis");
    Subset s = basis | eb;
    Subset circuit = eb;
    Subset rest = basis;
    while (rest) {
        Subset f = rest & (~rest + 1);
        rest &= rest - 1;
        // f lies in the unique circuit iff dropping f leaves no circuit.
        Subset t = s & ~f;
        if (rank(t) == popcount(t))
            circuit |= f;
    }
    return circuit;
}

Subset Matroid::fund_cocircuit(Subset basis, int e) const
{
    if (!is_basis(basis))
        throw std::invalid_argument("fund_cocircuit: not a basis");
    Subset eb = Subset{1} << e;
    if (!(basis & eb))
        throw std::invalid_argument("fund_cocircuit: element is outside the basis");
    return dual().fund_circuit(full_set() & ~basis, e);
}

Subset Matroid::set_of_labels(const std::vector<std::string>& labels) const
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

std::vector<std::string> Matroid::labels_of(Subset s) const
{
    std::vector<std::string> out;
    while (s) {
        int e = __builtin_ctzll(s);
        out.push_back(elements_[e]);
        s &= s - 1;
    }
    return out;
}

Poly tutte_rank_def(const Matroid& m)
{
    Poly x = Poly::var(VarId::named("x"));
    Poly y = Poly::var(VarId::named("y"));
    Poly xm1 = x - Poly(1);
    Poly ym1 = y - Poly(1);
    int re = m.full_rank();
    Poly out;
    Subset full = m.full_set();
    for (Subset a = 0;; ++a) {
        int ra = m.rank(a);
        out += xm1.pow(re - ra) * ym1.pow(popcount(a) - ra);
        if (a == full)
            break;
    }
    return out;
}

MatroidActivities matroid_activities(const Matroid& m, Subset basis, const ElementOrder& ord)
{
    if (!m.is_basis(basis))
        throw std::invalid_argument("matroid_activities: not a basis");
    MatroidActivities act;
    for (int e = 0; e < m.size(); ++e) {
        Subset eb = Subset{1} << e;
        if (basis & eb) {
            if (ord.min_of(m.fund_cocircuit(basis, e)) == e)
                act.internal |= eb;
        } else {
            if (ord.min_of(m.fund_circuit(basis, e)) == e)
                act.external |= eb;
        }
    }
    return act;
}

Poly tutte_activities(const Matroid& m, const ElementOrder& ord)
{
    Poly x = Poly::var(VarId::named("x"));
    Poly y = Poly::var(VarId::named("y"));
    Poly out;
    for (Subset b : m.bases()) {
        MatroidActivities act = matroid_activities(m, b, ord);
        out += x.pow(popcount(act.internal)) * y.pow(popcount(act.external));
    }
    return out;
}

std::vector<BooleanInterval> crapo_intervals(const Matroid& m, const ElementOrder& ord)
{
    std::vector<BooleanInterval> out;
    for (Subset b : m.bases()) {
        MatroidActivities act = matroid_activities(m, b, ord);
        out.push_back({b, b & ~act.internal, b | act.external});
    }
    return out;
}

Multimatroid lift_matroid(const Matroid& m)
{
    std::vector<std::vector<std::string>> classes;
    for (const auto& l : m.elements())
        classes.push_back({l + ".", l + "-"});
    Carrier carrier(std::move(classes));
    std::vector<ElementSet> bases;
    for (Subset b : m.bases()) {
        ElementSet t = 0;
        for (int e = 0; e < m.size(); ++e)
            t |= carrier.bit(Element{e, (b >> e) & 1 ? 0 : 1});
        bases.push_back(t);
    }
    return Multimatroid(std::move(carrier), std::move(bases));
}

std::pair<Poly, Poly> tutte_transition_identity(const Matroid& m)
{
    Poly s = Poly::var(VarId::named("s"));
    Poly u = Poly::var(VarId::named("u"));
    int re = m.full_rank();

    Poly lhs = tutte_rank_def(m);
    lhs = lhs.substituted(VarId::named("x"), s * s + Poly(1));
    lhs = lhs.substituted(VarId::named("y"), u * u + Poly(1));
    lhs = lhs * s.pow(m.size() - re) * u.pow(re);

    Multimatroid z = lift_matroid(m);
    const Carrier& c = z.carrier();
    Poly rhs;
    for (ElementSet t : c.all_transversals()) {
        Poly term = (s * u).pow(z.nullity(t));
        for (Element e : c.elements_of(t))
            term *= (e.slot == 0 ? u : s);
        rhs += term;
    }
    return {lhs, rhs};
}

namespace {

bool compatible_with(const std::vector<Subset>& circuits, Subset a, const ElementOrder& ord)
{
    for (Subset c : circuits)
        if ((a & c) == (Subset{1} << ord.min_of(c)))
            return false;
    return true;
}

} // namespace

bool is_compatible(const Matroid& m, Subset a, const ElementOrder& ord)
{
    return compatible_with(m.circuits(), a, ord);
}

std::vector<Subset> kochol_sets(const Matroid& m, const ElementOrder& ord)
{
    const std::vector<Subset> circuits = m.circuits();
    const std::vector<Subset> cocircuits = m.cocircuits();
    std::vector<Subset> out;
    Subset full = m.full_set();
    for (Subset a = 0;; ++a) {
        if (compatible_with(cocircuits, a, ord) && compatible_with(circuits, full & ~a, ord))
            out.push_back(a);
        if (a == full)
            break;
    }
    return out;
}

Poly kochol_expansion(const Matroid& m, const ElementOrder& ord)
{
    Poly x = Poly::var(VarId::named("x"));
    Poly y = Poly::var(VarId::named("y"));
    int re = m.full_rank();
    Poly out;
    for (Subset a : kochol_sets(m, ord)) {
        int ra = m.rank(a);
        out += x.pow(re - ra) * y.pow(popcount(a) - ra);
    }
    return out;
}

} // namespace mmq
