#ifndef MMQ_MATROID_HPP
#define MMQ_MATROID_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "mmq/multimatroid.hpp"
#include "mmq/poly.hpp"

namespace mmq {

using Subset = std::uint64_t; // bitmask over a matroid's element list

// A total order on matroid / delta-matroid elements, least first.
struct ElementOrder {
    std::vector<int> order;
    std::vector<int> pos;

    static ElementOrder identity(int n);
    static ElementOrder of(std::vector<int> order_least_first);
    bool precedes(int a, int b) const { return pos[a] < pos[b]; }
    int min_of(Subset s) const;
};

// A matroid given by its explicit basis list; the constructor verifies
// non-emptiness, equicardinality and the basis exchange axiom.
class Matroid {
public:
    Matroid(std::vector<std::string> elements, std::vector<Subset> bases);

    int size() const { return static_cast<int>(elements_.size()); }
    const std::vector<std::string>& elements() const { return elements_; }
    const std::vector<Subset>& bases() const { return bases_; }
    bool is_basis(Subset s) const;
    Subset full_set() const
    {
        return size() == 64 ? ~Subset{0} : (Subset{1} << size()) - 1;
    }

    int rank(Subset a) const;
    int full_rank() const { return rank(full_set()); }

    Matroid dual() const;
    std::vector<Subset> circuits() const;
    std::vector<Subset> cocircuits() const;

    // C(B,e) for e outside the basis B; always exists.
    Subset fund_circuit(Subset basis, int e) const;
    // C*(B,e) for e inside the basis B; always exists.
    Subset fund_cocircuit(Subset basis, int e) const;

    Subset set_of_labels(const std::vector<std::string>& labels) const;
    std::vector<std::string> labels_of(Subset s) const;

private:
    std::vector<std::string> elements_;
    std::vector<Subset> bases_;
};

// T(M;x,y) from the rank function, in named variables x and y.
Poly tutte_rank_def(const Matroid& m);

struct MatroidActivities {
    Subset internal = 0;
    Subset external = 0;
};

MatroidActivities matroid_activities(const Matroid& m, Subset basis, const ElementOrder& ord);
Poly tutte_activities(const Matroid& m, const ElementOrder& ord);

struct BooleanInterval {
    Subset base = 0; // the basis / feasible set the interval belongs to
    Subset lo = 0;
    Subset hi = 0;
    bool contains(Subset s) const { return (lo & ~s) == 0 && (s & ~hi) == 0; }
    std::uint64_t member_count() const { return std::uint64_t{1} << popcount(hi & ~lo); }
};

std::vector<BooleanInterval> crapo_intervals(const Matroid& m, const ElementOrder& ord);

// The 2-matroid Z(M): one skew class {e., e-} per element, basis
// transversals picking dots on B and bars off B.
Multimatroid lift_matroid(const Matroid& m);

// Both sides of the Tutte / transition-polynomial identity with the square
// roots cleared through x = s^2, y = u^2, t = s*u:
//   lhs = s^(|E|-r(E)) * u^r(E) * T(M; s^2+1, u^2+1)
//   rhs = Q(Z(M); x, t) with x_{e.} = u, x_{e-} = s, t = s*u.
std::pair<Poly, Poly> tutte_transition_identity(const Matroid& m);

// A has no circuit C of M with A ∩ C = {min C}.
bool is_compatible(const Matroid& m, Subset a, const ElementOrder& ord);
// Subsets A with A compatible in M* and E-A compatible in M.
std::vector<Subset> kochol_sets(const Matroid& m, const ElementOrder& ord);
// T(M;x,y) as a sum of x^(r(E)-r(A)) y^(|A|-r(A)) over the Kochol family.
Poly kochol_expansion(const Matroid& m, const ElementOrder& ord);

} // namespace mmq

#endif
