#ifndef MMQ_MULTIMATROID_HPP
#define MMQ_MULTIMATROID_HPP

#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "mmq/carrier.hpp"

namespace mmq {

struct AxiomViolation {
    std::string axiom; // "R1" or "R2"
    std::string detail;
};

struct AxiomReport {
    std::vector<AxiomViolation> violations;
    bool ok() const { return violations.empty(); }
};

// A multimatroid given by an explicit basis list. The rank of a
// subtransversal S is max over bases B of |B ∩ S|; everything else
// (nullity, circuits, minors, restrictions, axiom checks) derives from it.
class Multimatroid {
public:
    Multimatroid(Carrier carrier, std::vector<ElementSet> bases);

    const Carrier& carrier() const { return carrier_; }
    const std::vector<ElementSet>& bases() const { return bases_; }
    bool is_basis(ElementSet s) const;

    int rank(ElementSet s) const;
    int nullity(ElementSet s) const { return popcount(s) - rank(s); }
    bool is_independent(ElementSet s) const { return rank(s) == popcount(s); }
    bool is_dependent(ElementSet s) const { return !is_independent(s); }

    // Minimal dependent subtransversals (full enumeration; desk scale).
    // Computed once per object and shared by copies.
    const std::vector<ElementSet>& circuits() const;

    // The unique circuit inside B ∪ ω if it exists, together with its one
    // element outside B (which lies in ω).
    std::optional<std::pair<ElementSet, Element>> fundamental_circuit(ElementSet basis,
                                                                      int cls) const;

    // Elementary minor Z|u. Bases are materialized from the basis list:
    // non-singular u keeps {B - u : u ∈ B}; singular u reduces to Z \ ω.
    Multimatroid minor(Element u) const;
    // Restriction Z \ ω.
    Multimatroid restriction(int cls) const;

    bool is_singular(Element e) const { return rank(carrier_.bit(e)) == 0; }
    std::vector<Element> singular_elements() const;
    std::vector<int> singular_classes() const;

    // Non-degenerate and every basis ∪ skew class contains a circuit.
    bool is_tight() const;

    // (R1) on every transversal (zero rank of ∅, unit increase, local
    // submodularity) and (R2) on every subtransversal and disjoint skew
    // pair; collects witnesses instead of failing fast.
    AxiomReport check_axioms() const;

    friend bool operator==(const Multimatroid& a, const Multimatroid& b)
    {
        return a.carrier_ == b.carrier_ && a.bases_ == b.bases_;
    }

private:
    struct CircuitCache {
        std::once_flag flag;
        std::vector<ElementSet> value;
    };

    Carrier carrier_;
    std::vector<ElementSet> bases_; // sorted, duplicate-free
    std::shared_ptr<CircuitCache> circuits_cache_ = std::make_shared<CircuitCache>();
};

// Convenience constructor from labelled data.
Multimatroid make_multimatroid(std::vector<std::vector<std::string>> skew_classes,
                               const std::vector<std::vector<std::string>>& basis_labels);

} // namespace mmq

#endif
