#ifndef MMQ_EXPANSIONS_HPP
#define MMQ_EXPANSIONS_HPP

#include <map>
#include <vector>

#include "mmq/multimatroid.hpp"
#include "mmq/poly.hpp"

namespace mmq {

// Per-element weights. Each entry is a polynomial so that symbolic weights
// (the default, one variable per element), rational constants, and mixtures
// all flow through the same pipelines.
struct Weights {
    std::vector<Poly> w; // by global element index

    const Poly& of(const Carrier& c, Element e) const { return w[c.index(e)]; }

    static Weights symbolic(const Carrier& c);
    static Weights units(const Carrier& c);
    static Weights constants(const Carrier& c, const std::map<std::string, Rational>& by_label);
};

// Least element of a non-empty subtransversal under the class ordering.
Element min_element(const Carrier& c, ElementSet s, const SkewClassOrdering& ord);

// Q(Z; x, t) as the plain sum over transversals of t^nullity times weights.
Poly transition_direct(const Multimatroid& z, const Weights& w);

// Same polynomial by eliminating one skew class per step (the greatest
// according to ord), splitting on whether the class is singular.
Poly transition_recursive(const Multimatroid& z, const Weights& w, const SkewClassOrdering& ord);
Poly transition_recursive(const Multimatroid& z, const Weights& w);

struct ActivityReport {
    ElementSet subject = 0;              // the basis or transversal examined
    std::vector<int> active;             // class indices, ascending
    std::vector<int> inactive;           // class indices, ascending
    std::map<int, Element> underline;    // class -> witness element in that class

    bool is_active(int cls) const
    {
        for (int c : active)
            if (c == cls)
                return true;
        return false;
    }
};

// Activity of every skew class with respect to a basis: ω is active when
// the fundamental circuit C(B,ω) exists and attains its minimum inside ω.
// underline carries C(B,ω)-B for every class whose fundamental circuit
// exists. Requires a non-degenerate multimatroid.
ActivityReport basis_activities(const Multimatroid& z, ElementSet basis,
                                const SkewClassOrdering& ord);

// The activities expansion of Q(Z; x, t) over bases.
Poly activities_expansion(const Multimatroid& z, const Weights& w, const SkewClassOrdering& ord);

struct IntervalHZ {
    ElementSet basis = 0;
    ElementSet inside_active = 0;  // {B_ω : ω active}
    ElementSet outside_active = 0; // {underline B_ω : ω active}
    std::vector<ElementSet> members; // 2^{|active|} transversals, sorted
};

IntervalHZ interval(const Multimatroid& z, ElementSet basis, const SkewClassOrdering& ord);
std::vector<IntervalHZ> interval_family(const Multimatroid& z, const SkewClassOrdering& ord);

struct MinCircuitClasses {
    ElementSet mce = 0;       // minima of circuits inside S
    std::vector<int> mcs;     // their classes, ascending
};

MinCircuitClasses min_circuit_classes(const Multimatroid& z, ElementSet s,
                                      const SkewClassOrdering& ord);

struct CoverEntry {
    ElementSet transversal = 0;
    long long observed = 0;
    long long expected = 0;
};

struct CoverReport {
    std::vector<CoverEntry> entries;    // one per transversal
    std::vector<CoverEntry> mismatches; // empty for a valid multimatroid
    bool ok() const { return mismatches.empty(); }
};

// Membership multiplicity of every transversal across the interval family,
// compared against the product of (|ω|-1) over the min-circuit classes.
CoverReport cover_multiplicity_check(const Multimatroid& z, const SkewClassOrdering& ord);

struct BasisClass {
    ElementSet representative = 0;   // lexicographically least member under ord
    std::vector<ElementSet> members; // sorted
    std::vector<int> active;         // shared active classes
    std::map<int, Element> underline;
};

// Partition of the bases: two bases are equivalent when they share the
// active-class set and agree on every inactive class.
std::vector<BasisClass> basis_classes(const Multimatroid& z, const SkewClassOrdering& ord);

// Unweighted Q(Z;t) as a sum of prod (t + |ω| - 1) over class representatives.
Poly class_expansion(const Multimatroid& z, const SkewClassOrdering& ord);

// Coefficients a_i of Q(Z;t) = sum a_i (t+1)^i for a q-matroid, computed
// from |B ∩ rep(B)| counts.
std::vector<Int> class_coefficients(const Multimatroid& z, const SkewClassOrdering& ord);

// Activity of skew classes with respect to an arbitrary transversal: ω is
// active when some circuit C has min(C) in ω and C - ω inside T. Agrees
// with basis_activities on bases.
ActivityReport transversal_activities(const Multimatroid& z, ElementSet t,
                                      const SkewClassOrdering& ord);

// No circuit C satisfies C - T = {min(C)}.
bool is_cocompatible(const Multimatroid& z, ElementSet t, const SkewClassOrdering& ord);

// Rewrites every active slot of T to its underline element; the result is
// cocompatible and the map is idempotent.
ElementSet cocompatible_closure(const Multimatroid& z, ElementSet t,
                                const SkewClassOrdering& ord);

// Q(Z; x, t) as a sum over cocompatible transversals. Requires a
// non-degenerate multimatroid.
Poly cocompatible_expansion(const Multimatroid& z, const Weights& w,
                            const SkewClassOrdering& ord);

struct CocompatibleCell {
    ElementSet closure = 0;
    std::vector<ElementSet> members; // sorted; transversals with this closure
};

std::vector<CocompatibleCell> cocompatible_partition(const Multimatroid& z,
                                                     const SkewClassOrdering& ord);

} // namespace mmq

#endif
