#include "mmq/multimatroid.hpp"

#include <algorithm>
#include <functional>
#include <sstream>
#include <stdexcept>

namespace mmq {

namespace {

std::string set_str(const Carrier& c, ElementSet s)
{
    std::ostringstream os;
    os << "{";
    bool first = true;
    for (const auto& l : c.labels_of(s)) {
        if (!first)
            os << ",";
        first = false;
        os << l;
    }
    os << "}";
    return os.str();
}

} // namespace

Multimatroid::Multimatroid(Carrier carrier, std::vector<ElementSet> bases)
    : carrier_(std::move(carrier)), bases_(std::move(bases))
{
    if (bases_.empty())
        throw std::invalid_argument("multimatroid needs at least one basis");
    std::sort(bases_.begin(), bases_.end());
    bases_.erase(std::unique(bases_.begin(), bases_.end()), bases_.end());
    for (ElementSet b : bases_)
        if (!carrier_.is_subtransversal(b))
            throw std::invalid_argument("basis " + set_str(carrier_, b) +
                                        " is not a subtransversal");
    // Bases must be maximal independent sets of the derived rank, which for
    // an explicit list is exactly the antichain condition. Only pairs of
    // different cardinality can violate it.
    bool mixed_sizes = false;
    for (ElementSet b : bases_)
        if (popcount(b) != popcount(bases_.front()))
            mixed_sizes = true;
    if (mixed_sizes)
        for (ElementSet b : bases_)
            for (ElementSet b2 : bases_)
                if (b != b2 && (b & b2) == b)
                    throw std::invalid_argument("basis " + set_str(carrier_, b) +
                                                " is contained in " + set_str(carrier_, b2));
}

bool Multimatroid::is_basis(ElementSet s) const
{
    return std::binary_search(bases_.begin(), bases_.end(), s);
}

int Multimatroid::rank(ElementSet s) const
{
    if (!carrier_.is_subtransversal(s))
        throw std::invalid_argument("rank: " + set_str(carrier_, s) +
                                    " is not a subtransversal");
    int r = 0;
    for (ElementSet b : bases_)
        r = std::max(r, popcount(b & s));
    return r;
}

const std::vector<ElementSet>& Multimatroid::circuits() const
{
    std::call_once(circuits_cache_->flag, [&] {
        // Depth-first over subtransversals in class order, carrying the
        // bases that still contain the current set: non-empty means
        // independent. A dependent set closes its branch, since every
        // proper extension would contain it and could not be minimal.
        std::vector<ElementSet> out;
        auto contained_in_some_basis = [&](ElementSet s) {
            for (ElementSet b : bases_)
                if ((b & s) == s)
                    return true;
            return false;
        };
        std::function<void(int, ElementSet, const std::vector<ElementSet>&)> walk =
            [&](int cls, ElementSet s, const std::vector<ElementSet>& candidates) {
                if (cls == carrier_.num_classes())
                    return;
                walk(cls + 1, s, candidates);
                for (int slot = 0; slot < carrier_.class_size(cls); ++slot) {
                    ElementSet x = carrier_.bit(Element{cls, slot});
                    std::vector<ElementSet> kept;
                    for (ElementSet b : candidates)
                        if (b & x)
                            kept.push_back(b);
                    if (!kept.empty()) {
                        walk(cls + 1, s | x, kept);
                        continue;
                    }
                    ElementSet candidate = s | x;
                    bool minimal = true;
                    ElementSet rest = s;
                    while (rest && minimal) {
                        ElementSet f = rest & (~rest + 1);
                        if (!contained_in_some_basis(candidate & ~f))
                            minimal = false;
                        rest &= rest - 1;
                    }
                    if (minimal)
                        out.push_back(candidate);
                }
            };
        walk(0, 0, bases_);
        std::sort(out.begin(), out.end());
        circuits_cache_->value = std::move(out);
    });
    return circuits_cache_->value;
}

std::optional<std::pair<ElementSet, Element>> Multimatroid::fundamental_circuit(
    ElementSet basis, int cls) const
{
    if (!is_basis(basis))
        throw std::invalid_argument("fundamental_circuit: not a basis");
    ElementSet core = basis & ~carrier_.class_mask(cls);
    for (int slot = 0; slot < carrier_.class_size(cls); ++slot) {
        Element u{cls, slot};
        ElementSet ub = carrier_.bit(u);
        if (basis & ub)
            continue;
        ElementSet s = core | ub;
        if (!is_dependent(s))
            continue;
        // Unique circuit through u inside s: drop every removable element.
        ElementSet circuit = ub;
        ElementSet rest = core;
        while (rest) {
            ElementSet f = rest & (~rest + 1);
            if (!is_dependent(s & ~f))
                circuit |= f;
            rest &= rest - 1;
        }
        return std::make_pair(circuit, u);
    }
    return std::nullopt;
}

Multimatroid Multimatroid::restriction(int cls) const
{
    std::vector<std::vector<std::string>> classes;
    for (int c = 0; c < carrier_.num_classes(); ++c)
        if (c != cls)
            classes.push_back(carrier_.class_labels(c));
    Carrier reduced(std::move(classes));

    // Independent sets avoiding ω are exactly subsets of {B - ω}; the bases
    // of Z \ ω are the maximal ones among those differences.
    std::vector<ElementSet> diffs;
    for (ElementSet b : bases_) {
        ElementSet d = b & ~carrier_.class_mask(cls);
        ElementSet translated = 0;
        for (Element e : carrier_.elements_of(d))
            translated |= reduced.bit(Element{e.cls > cls ? e.cls - 1 : e.cls, e.slot});
        diffs.push_back(translated);
    }
    std::sort(diffs.begin(), diffs.end());
    diffs.erase(std::unique(diffs.begin(), diffs.end()), diffs.end());
    std::vector<ElementSet> maximal;
    for (ElementSet d : diffs) {
        bool contained = false;
        for (ElementSet d2 : diffs)
            if (d != d2 && (d & d2) == d) {
                contained = true;
                break;
            }
        if (!contained)
            maximal.push_back(d);
    }
    return Multimatroid(std::move(reduced), std::move(maximal));
}

Multimatroid Multimatroid::minor(Element u) const
{
    if (is_singular(u))
        return restriction(u.cls);

    std::vector<std::vector<std::string>> classes;
    for (int c = 0; c < carrier_.num_classes(); ++c)
        if (c != u.cls)
            classes.push_back(carrier_.class_labels(c));
    Carrier reduced(std::move(classes));

    // For non-singular u, B is a basis of Z|u iff B ∪ {u} is a basis of Z.
    std::vector<ElementSet> minor_bases;
    ElementSet ub = carrier_.bit(u);
    for (ElementSet b : bases_) {
        if (!(b & ub))
            continue;
        ElementSet translated = 0;
        for (Element e : carrier_.elements_of(b & ~ub))
            translated |= reduced.bit(Element{e.cls > u.cls ? e.cls - 1 : e.cls, e.slot});
        minor_bases.push_back(translated);
    }
    return Multimatroid(std::move(reduced), std::move(minor_bases));
}

std::vector<Element> Multimatroid::singular_elements() const
{
    std::vector<Element> out;
    for (int c = 0; c < carrier_.num_classes(); ++c)
        for (int s = 0; s < carrier_.class_size(c); ++s)
            if (is_singular(Element{c, s}))
                out.push_back(Element{c, s});
    return out;
}

std::vector<int> Multimatroid::singular_classes() const
{
    std::vector<int> out;
    for (Element e : singular_elements())
        if (out.empty() || out.back() != e.cls)
            out.push_back(e.cls);
    return out;
}

bool Multimatroid::is_tight() const
{
    if (!carrier_.is_nondegenerate())
        return false;
    for (ElementSet b : bases_)
        for (int c = 0; c < carrier_.num_classes(); ++c)
            if (!fundamental_circuit(b, c))
                return false;
    return true;
}

AxiomReport Multimatroid::check_axioms() const
{
    AxiomReport report;
    const Carrier& carrier = carrier_;

    // Quantifying unit increase and local submodularity over subtransversal
    // triples (A, x, y) covers every transversal's power set: any such
    // triple extends to a transversal and vice versa. Ranks are cached per
    // subtransversal mask.
    const std::vector<ElementSet> subs = carrier.all_subtransversals();
    std::vector<int> cache;
    bool use_cache = carrier.universe_size() <= 24;
    if (use_cache) {
        cache.assign(std::size_t{1} << carrier.universe_size(), -1);
        for (ElementSet s : subs) {
            int r = 0;
            for (ElementSet b : bases_)
                r = std::max(r, popcount(b & s));
            cache[s] = r;
        }
    }
    auto cached_rank = [&](ElementSet s) { return use_cache ? cache[s] : rank(s); };

    if (cached_rank(0) != 0)
        report.violations.push_back({"R1", "rank of the empty set is nonzero"});

    for (ElementSet a : subs) {
        int ra = cached_rank(a);
        std::vector<int> free_classes;
        for (int c = 0; c < carrier.num_classes(); ++c)
            if (!(a & carrier.class_mask(c)))
                free_classes.push_back(c);

        for (int c : free_classes)
            for (int i = 0; i < carrier.class_size(c); ++i) {
                Element x{c, i};
                int rax = cached_rank(a | carrier.bit(x));
                if (rax < ra || rax > ra + 1)
                    report.violations.push_back({"R1", "unit increase fails at " +
                                                           set_str(carrier, a) + " with " +
                                                           carrier.label(x)});
                // (R2) against the rest of x's own class.
                for (int j = i + 1; j < carrier.class_size(c); ++j) {
                    Element y{c, j};
                    if (rax + cached_rank(a | carrier.bit(y)) - 2 * ra < 1)
                        report.violations.push_back(
                            {"R2", "fails at S=" + set_str(carrier, a) + " with pair {" +
                                       carrier.label(x) + "," + carrier.label(y) + "}"});
                }
            }

        // Submodularity for additions from two distinct classes.
        for (std::size_t ci = 0; ci < free_classes.size(); ++ci)
            for (std::size_t cj = ci + 1; cj < free_classes.size(); ++cj)
                for (int i = 0; i < carrier.class_size(free_classes[ci]); ++i)
                    for (int j = 0; j < carrier.class_size(free_classes[cj]); ++j) {
                        Element x{free_classes[ci], i};
                        Element y{free_classes[cj], j};
                        ElementSet xb = carrier.bit(x), yb = carrier.bit(y);
                        if (cached_rank(a | xb) + cached_rank(a | yb) <
                            cached_rank(a | xb | yb) + ra)
                            report.violations.push_back(
                                {"R1", "submodularity fails at " + set_str(carrier, a) +
                                           " with {" + carrier.label(x) + "," +
                                           carrier.label(y) + "}"});
                    }
    }
    return report;
}

Multimatroid make_multimatroid(std::vector<std::vector<std::string>> skew_classes,
                               const std::vector<std::vector<std::string>>& basis_labels)
{
    Carrier carrier(std::move(skew_classes));
    std::vector<ElementSet> bases;
    for (const auto& b : basis_labels)
        bases.push_back(carrier.set_of_labels(b));
    return Multimatroid(std::move(carrier), std::move(bases));
}

} // namespace mmq
