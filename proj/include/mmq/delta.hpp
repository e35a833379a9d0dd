#ifndef MMQ_DELTA_HPP
#define MMQ_DELTA_HPP

#include <optional>
#include <string>
#include <vector>

#include "mmq/matroid.hpp"
#include "mmq/multimatroid.hpp"
#include "mmq/poly.hpp"

namespace mmq {

// A delta-matroid given by its explicit feasible sets; the constructor
// verifies the symmetric exchange axiom by full quantification.
class DeltaMatroid {
public:
    DeltaMatroid(std::vector<std::string> elements, std::vector<Subset> feasible);

    // Diagnostic form of the axiom check: a witness string on failure.
    static std::optional<std::string> exchange_violation(const std::vector<std::string>& elements,
                                                         const std::vector<Subset>& feasible);

    int size() const { return static_cast<int>(elements_.size()); }
    const std::vector<std::string>& elements() const { return elements_; }
    const std::vector<Subset>& feasible() const { return feasible_; }
    bool is_feasible(Subset s) const;
    Subset full_set() const
    {
        return size() == 64 ? ~Subset{0} : (Subset{1} << size()) - 1;
    }

    // d(X): least |F △ X| over feasible sets F.
    int distance(Subset x) const;

    // The twist D △ A; feasible sets become {F △ A}.
    DeltaMatroid twist(Subset a) const;

    bool is_matroid() const;
    Matroid as_matroid() const;

    Subset set_of_labels(const std::vector<std::string>& labels) const;
    std::vector<std::string> labels_of(Subset s) const;

    friend bool operator==(const DeltaMatroid& a, const DeltaMatroid& b)
    {
        return a.elements_ == b.elements_ && a.feasible_ == b.feasible_;
    }

private:
    std::vector<std::string> elements_;
    std::vector<Subset> feasible_;
};

// The 2-matroid Z(D): one skew class {e., e-} per element, bases
// {dots on F, bars off F} for feasible F.
Multimatroid lift_delta(const DeltaMatroid& d);

// D(Z,T) from a 2-matroid and a reference transversal; feasible sets are the
// agreement patterns of the bases with T. Element names default to the
// labels of T's elements.
DeltaMatroid project(const Multimatroid& z, ElementSet t);
DeltaMatroid project(const Multimatroid& z, ElementSet t, std::vector<std::string> names);

// Q(D; w, x, t) = sum over subsets A of w^|E-A| x^|A| t^d(A).
Poly delta_transition(const DeltaMatroid& d);

struct DeltaActivities {
    Subset internal = 0; // active elements inside F
    Subset external = 0; // active elements outside F
};

// Activity via orientability and interlacement: e is F-orientable when
// F △ {e} is infeasible, F-interlaced with f when additionally F △ {e,f}
// is feasible, and active when no smaller element interlaces it.
DeltaActivities delta_activities(const DeltaMatroid& d, Subset f, const ElementOrder& ord);

// Q(D; w, x, t) over feasible sets with activity factors.
Poly morse_expansion(const DeltaMatroid& d, const ElementOrder& ord);

// Boolean intervals [F - int(F), F ∪ ext(F)]; they partition 2^E.
std::vector<BooleanInterval> delta_intervals(const DeltaMatroid& d, const ElementOrder& ord);

} // namespace mmq

#endif
