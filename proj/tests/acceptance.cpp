// Acceptance suite: one pass/fail line per criterion, all values exact.
#include <cstdio>
#include <functional>
#include <map>
#include <set>
#include <string>

#include "mmq/expansions.hpp"
#include "mmq/verify.hpp"
#include "testers.hpp"

using namespace mmq;
using namespace mmq::testers;

namespace {

int failures = 0;
std::vector<std::string> notes;

void criterion(int number, const std::string& title, const std::function<bool()>& body)
{
    notes.clear();
    bool ok = false;
    std::string error;
    try {
        ok = body();
    } catch (const std::exception& e) {
        error = e.what();
    }
    if (!ok)
        ++failures;
    std::printf("%s criterion %d: %s\n", ok ? "PASS" : "FAIL", number, title.c_str());
    if (!ok) {
        for (const auto& n : notes)
            std::printf("      %s\n", n.c_str());
        if (!error.empty())
            std::printf("      exception: %s\n", error.c_str());
    }
}

bool expect(bool cond, const std::string& note)
{
    if (!cond)
        notes.push_back(note);
    return cond;
}

Poly q333() { return Poly::t().pow(2) + Poly(10) * Poly::t() + Poly(16); }

} // namespace

int main()
{
    criterion(1, "golden polynomials and circuit sets of the worked examples", [] {
        bool ok = true;
        Multimatroid z33 = sample333();
        SkewClassOrdering o33 = SkewClassOrdering::identity(3);
        Weights u33 = Weights::units(z33.carrier());
        ok &= expect(transition_direct(z33, u33) == q333(), "direct 3x3x3");
        ok &= expect(transition_recursive(z33, u33, o33) == q333(), "recursive 3x3x3");
        ok &= expect(activities_expansion(z33, u33, o33) == q333(), "activities 3x3x3");
        ok &= expect(cocompatible_expansion(z33, u33, o33) == q333(), "cocompatible 3x3x3");

        Multimatroid z322 = sample322();
        SkewClassOrdering o322 = SkewClassOrdering::identity(3);
        Weights u322 = Weights::units(z322.carrier());
        Poly q322 = Poly(4) * Poly::t() + Poly(8);
        ok &= expect(transition_direct(z322, u322) == q322, "direct 3x2x2");
        ok &= expect(transition_recursive(z322, u322, o322) == q322, "recursive 3x2x2");
        ok &= expect(activities_expansion(z322, u322, o322) == q322, "activities 3x2x2");
        ok &= expect(cocompatible_expansion(z322, u322, o322) == q322, "cocompatible 3x2x2");

        auto labels = [](const Multimatroid& z) {
            std::set<std::vector<std::string>> out;
            for (ElementSet s : z.circuits())
                out.insert(z.carrier().labels_of(s));
            return out;
        };
        ok &= expect(labels(z322) == std::set<std::vector<std::string>>{
                         {"d", "g", "i"}, {"e", "h", "i"}, {"f", "j"}},
                     "3x2x2 circuits");
        ok &= expect(labels(z33) == std::set<std::vector<std::string>>{{"a-", "b-"},
                                                                       {"a-", "c."},
                                                                       {"b-", "c."},
                                                                       {"a.", "b.", "c-"},
                                                                       {"a^", "b^", "c-"},
                                                                       {"a^", "b.", "c^"},
                                                                       {"a.", "b^", "c^"}},
                     "3x3x3 circuits");
        return ok;
    });

    criterion(2, "activities ledger and its expansion", [] {
        bool ok = true;
        Multimatroid z = sample333();
        const Carrier& c = z.carrier();
        SkewClassOrdering ord = SkewClassOrdering::identity(3);
        std::set<std::vector<std::string>> two;
        int one = 0, other = 0;
        for (ElementSet b : z.bases()) {
            auto act = basis_activities(z, b, ord).active;
            if (act == std::vector<int>{0, 1})
                two.insert(c.labels_of(b));
            else if (act == std::vector<int>{0})
                ++one;
            else
                ++other;
        }
        ok &= expect(two == std::set<std::vector<std::string>>{{"a.", "b.", "c."},
                                                               {"a.", "b^", "c."},
                                                               {"a^", "b.", "c."},
                                                               {"a^", "b^", "c."}},
                     "the four 2-active bases");
        ok &= expect(one == 12 && other == 0, "twelve 1-active bases");
        Poly half = Poly::t() * Rational(1, 2) + Poly(1);
        ok &= expect(activities_expansion(z, Weights::units(c), ord) ==
                         Poly(4) * half.pow(2) + Poly(12) * half,
                     "4(t/2+1)^2 + 12(t/2+1)");
        return ok;
    });

    criterion(3, "Boolean interval cover multiplicities", [] {
        bool ok = true;
        Multimatroid z = sample333();
        const Carrier& c = z.carrier();
        SkewClassOrdering ord = SkewClassOrdering::identity(3);
        std::map<ElementSet, int> count;
        for (const IntervalHZ& h : interval_family(z, ord))
            for (ElementSet t : h.members)
                ++count[t];
        ElementSet deep = c.set_of_labels({"a-", "b-", "c."});
        ok &= expect(count[deep] == 4, "deep transversal in four intervals");
        for (ElementSet t : c.all_transversals())
            if (!z.is_basis(t) && t != deep)
                ok &= expect(count[t] == 2, "nullity-one transversal in two intervals");

        Rng rng(2024);
        int instances = 0;
        while (instances < 100) {
            Multimatroid r = random_multimatroid(rng, 5);
            if (r.carrier().num_classes() < 1)
                continue;
            ++instances;
            SkewClassOrdering o = random_class_order(rng, r.carrier().num_classes());
            if (!cover_multiplicity_check(r, o).ok()) {
                ok = expect(false, "cover mismatch on a random multimatroid");
                break;
            }
        }
        return ok;
    });

    criterion(4, "basis equivalence classes and coefficients", [] {
        bool ok = true;
        Multimatroid z = sample333();
        SkewClassOrdering ord = SkewClassOrdering::identity(3);
        std::multiset<std::size_t> sizes;
        for (const BasisClass& g : basis_classes(z, ord))
            sizes.insert(g.members.size());
        ok &= expect(sizes == std::multiset<std::size_t>{2, 2, 2, 2, 2, 2, 4},
                     "one class of four, six of two");
        ok &= expect(class_coefficients(z, ord) == std::vector<Int>{7, 8, 1, 0},
                     "(a0,a1,a2,a3) = (7,8,1,0)");

        Rng rng(2025);
        for (int round = 0; round < 60 && ok; ++round) {
            Multimatroid r = random_multimatroid(rng, 5);
            SkewClassOrdering o = random_class_order(rng, r.carrier().num_classes());
            for (const BasisClass& g : basis_classes(r, o)) {
                std::size_t expected = 1;
                for (int cls : g.active)
                    expected *= r.carrier().class_size(cls) - 1;
                ok &= expect(g.members.size() == expected, "class size formula");
            }
        }
        return ok;
    });

    criterion(5, "cocompatible transversals", [] {
        bool ok = true;
        Multimatroid z = sample333();
        const Carrier& c = z.carrier();
        SkewClassOrdering ord = SkewClassOrdering::identity(3);
        std::multiset<int> nullities;
        Poly sum;
        for (ElementSet t : c.all_transversals())
            if (is_cocompatible(z, t, ord)) {
                nullities.insert(z.nullity(t));
                sum += (Poly::t() + Poly(2)).pow(z.nullity(t));
            }
        ok &= expect(nullities == std::multiset<int>{2, 1, 1, 1, 1, 1, 1},
                     "seven cocompatible transversals with nullities 2,1,...,1");
        ok &= expect(sum == q333(), "sum of (t+2)^n equals Q");

        Rng rng(2026);
        for (int round = 0; round < 60 && ok; ++round) {
            Multimatroid r = random_multimatroid(rng, 5);
            const Carrier& rc = r.carrier();
            SkewClassOrdering o = random_class_order(rng, rc.num_classes());
            for (ElementSet t : rc.all_transversals()) {
                ElementSet closure = cocompatible_closure(r, t, o);
                ok &= expect(is_cocompatible(r, closure, o), "closure cocompatible");
                ok &= expect(cocompatible_closure(r, closure, o) == closure,
                             "closure idempotent");
                int differing = 0;
                for (int cls = 0; cls < rc.num_classes(); ++cls)
                    if ((t & rc.class_mask(cls)) != (closure & rc.class_mask(cls)))
                        ++differing;
                int act = static_cast<int>(
                    transversal_activities(r, closure, o).active.size());
                ok &= expect(r.nullity(t) == act - differing, "nullity formula");
                if (!ok)
                    break;
            }
        }
        return ok;
    });

    criterion(6, "matroid bridge: Tutte three ways and Crapo partition", [] {
        bool ok = true;
        std::vector<Matroid> fixed{u12(), triangle()};
        Rng rng(2027);
        std::vector<Matroid> pool = fixed;
        for (int i = 0; i < 50; ++i)
            pool.push_back(random_matroid(rng, 6));
        for (const Matroid& m : pool) {
            Poly reference = tutte_rank_def(m);
            for (int o = 0; o < 3 && ok; ++o) {
                ElementOrder ord = random_element_order(rng, m.size());
                ok &= expect(tutte_activities(m, ord) == reference, "activities route");
                ok &= expect(kochol_expansion(m, ord) == reference, "compatible route");
                ok &= expect(kochol_sets(m, ord).size() == m.bases().size(),
                             "compatible family size");
                auto ivs = crapo_intervals(m, ord);
                for (Subset s = 0; ok; ++s) {
                    int hits = 0;
                    for (const auto& iv : ivs)
                        hits += iv.contains(s);
                    ok &= expect(hits == 1, "interval partition");
                    if (s == m.full_set())
                        break;
                }
            }
            auto [lhs, rhs] = tutte_transition_identity(m);
            ok &= expect(lhs == rhs, "square-cleared transition identity");
            if (!ok)
                break;
        }
        return ok;
    });

    criterion(7, "delta-matroid suite", [] {
        bool ok = true;
        DeltaMatroid d = sample_delta();
        ElementOrder ord = ElementOrder::identity(3);
        Poly w = Poly::var(VarId::named("w")), x = Poly::var(VarId::named("x"));
        Poly expect_poly = x.pow(3) + Poly(3) * w * x.pow(2) * Poly::t() +
                           w.pow(2) * x * Poly::t().pow(2) + Poly(2) * w.pow(2) * x +
                           w.pow(3) * Poly::t();
        ok &= expect(delta_transition(d) == expect_poly, "sample transition polynomial");
        ok &= expect(morse_expansion(d, ord) == expect_poly, "sample activities expansion");

        auto members = [&](const BooleanInterval& iv) {
            std::set<Subset> out;
            for (Subset s = 0; s <= d.full_set(); ++s)
                if (iv.contains(s))
                    out.insert(s);
            return out;
        };
        std::map<Subset, std::set<Subset>> intervals;
        for (const auto& iv : delta_intervals(d, ord))
            intervals[iv.base] = members(iv);
        ok &= expect(intervals[0b111] == std::set<Subset>{0b111, 0b110, 0b101, 0b100},
                     "interval of {a,b,c}");
        ok &= expect(intervals[0b001] == std::set<Subset>{0b001, 0b000}, "interval of {a}");
        ok &= expect(intervals[0b010] == std::set<Subset>{0b011, 0b010}, "interval of {b}");

        Rng rng(2028);
        for (int round = 0; round < 50 && ok; ++round) {
            DeltaMatroid r = random_delta(rng, 6);
            ElementOrder o = random_element_order(rng, r.size());
            ok &= expect(morse_expansion(r, o) == delta_transition(r),
                         "activities expansion equals the subset sum");
            Multimatroid z = lift_delta(r);
            for (Subset a = 0; ok; ++a) {
                ElementSet t = 0;
                for (int e = 0; e < r.size(); ++e)
                    t |= z.carrier().bit(Element{e, (a >> e) & 1 ? 0 : 1});
                ok &= expect(r.distance(a) == z.nullity(t), "d(X) equals lift nullity");
                if (a == r.full_set())
                    break;
            }
        }
        return ok;
    });

    criterion(8, "ribbon suite", [] {
        bool ok = true;
        RibbonGraph g = sample_ribbon();
        ok &= expect(g.boundary_components() == 1, "figure graph is a quasi-tree");

        auto slots = [](const Multimatroid& m) {
            std::set<std::vector<int>> out;
            for (ElementSet b : m.bases()) {
                std::vector<int> row(m.carrier().num_classes());
                for (Element e : m.carrier().elements_of(b))
                    row[e.cls] = e.slot;
                out.insert(row);
            }
            return out;
        };
        ok &= expect(slots(lift_ribbon(g)) == slots(sample333()),
                     "Z(G) equals the 3x3x3 sample under the slot identification");

        Poly expect_poly = Poly::t() * q333();
        ok &= expect(topo_transition_direct(g, RibbonWeights::units(g)) == expect_poly,
                     "unit-weight polynomial t^3 + 10t^2 + 16t");

        // The worked state's summand.
        EdgeSet A = g.set_of_labels({"a"}), BC = g.set_of_labels({"b", "c"});
        EdgeClassification cls = classify_edges(g, BC, 0, A, default_edge_order(g));
        int a = g.edge_index("a"), b = g.edge_index("b"), c = g.edge_index("c");
        ok &= expect(cls.active[a] && cls.orientable[a] && cls.block[a] == 2,
                     "edge a active-orientable in Z");
        ok &= expect(cls.active[b] && cls.orientable[b] && cls.block[b] == 0,
                     "edge b active-orientable in X");
        ok &= expect(!cls.active[c] && !cls.orientable[c] && cls.block[c] == 0,
                     "edge c inactive-nonorientable in X");
        auto wv = [](const std::string& l) { return Poly::var(VarId::weight(l)); };
        Poly summand = wv("c.") * (Poly::t() * wv("a-") * Rational(1, 2) + wv("a^")) *
                       (Poly::t() * wv("b-") * Rational(1, 2) + wv("b."));
        RibbonWeights sym = RibbonWeights::symbolic(g);
        Poly term(1);
        for (int e = 0; e < g.num_edges(); ++e) {
            const std::string& l = g.edge(e).label;
            if (!cls.active[e])
                term *= cls.block[e] == 0 ? sym.alpha(l)
                                          : cls.block[e] == 1 ? sym.beta(l) : sym.gamma(l);
            else if (cls.orientable[e])
                term *= cls.block[e] == 0
                            ? Poly::t() * sym.beta(l) * Rational(1, 2) + sym.alpha(l)
                            : cls.block[e] == 1
                                  ? Poly::t() * sym.alpha(l) * Rational(1, 2) + sym.beta(l)
                                  : Poly::t() * sym.beta(l) * Rational(1, 2) + sym.gamma(l);
            else
                term *= cls.block[e] == 0
                            ? Poly::t() * sym.gamma(l) * Rational(1, 2) + sym.alpha(l)
                            : cls.block[e] == 1
                                  ? Poly::t() * sym.gamma(l) * Rational(1, 2) + sym.beta(l)
                                  : Poly::t() * sym.alpha(l) * Rational(1, 2) + sym.gamma(l);
        }
        ok &= expect(term == summand, "summand alpha_c (t beta_a/2 + gamma_a)(t beta_b/2 + alpha_b)");

        Rng rng(2029);
        for (int round = 0; round < 50 && ok; ++round) {
            RibbonGraph r = random_ribbon(rng, 5);
            RibbonWeights w;
            Weights zw;
            for (int e = 0; e < r.num_edges(); ++e) {
                std::array<Poly, 3> s{Poly(random_rational(rng)), Poly(random_rational(rng)),
                                      Poly(random_rational(rng))};
                w.w[r.edge(e).label] = s;
                for (int i = 0; i < 3; ++i)
                    zw.w.push_back(s[i]);
            }
            Multimatroid z = lift_ribbon(r);
            Poly direct = topo_transition_direct(r, w);
            EdgeOrder ord = default_edge_order(r);
            ok &= expect(topo_transition_recursive(r, w, ord) == direct, "recursive route");
            ok &= expect(ribbon_activities_expansion(r, w, ord) == direct,
                         "quasi-tree route");
            ok &= expect(transition_direct(z, zw) *
                                 Poly::t().pow(r.connected_components()) ==
                             direct,
                         "t^k Q(Z(G)) route");
            ok &= expect(z.check_axioms().ok(), "lift satisfies the axioms");
            if (r.num_edges() > 0)
                ok &= expect(z.is_tight(), "lift is tight");
            for (int e = 0; e < r.num_edges() && ok; ++e) {
                ok &= expect(r.contracted(e).boundary_components() ==
                                 r.boundary_components(),
                             "contraction preserves b");
                int slot = -1;
                for (int s = 0; s < 3; ++s)
                    if (z.is_singular(Element{e, s}))
                        slot = s;
                int want = r.is_bridge(e) ? 1
                           : r.is_trivial_loop(e) ? (r.loop_twisted(e) ? 2 : 0)
                                                  : -1;
                ok &= expect(slot == want, "singular slot characterization");
            }
        }
        return ok;
    });

    criterion(9, "axiom checking accepts the lifts and rejects a violator", [] {
        bool ok = true;
        Rng rng(2030);
        for (int round = 0; round < 15 && ok; ++round) {
            ok &= expect(lift_matroid(random_matroid(rng, 5)).check_axioms().ok(),
                         "matroid lift");
            ok &= expect(lift_delta(random_delta(rng, 4)).check_axioms().ok(), "delta lift");
            ok &= expect(lift_ribbon(random_ribbon(rng, 4)).check_axioms().ok(),
                         "ribbon lift");
        }
        AxiomReport bad = make_multimatroid({{"x", "y"}}, {{}}).check_axioms();
        ok &= expect(!bad.ok(), "violator rejected");
        ok &= expect(!bad.violations.empty() && bad.violations.front().axiom == "R2" &&
                         bad.violations.front().detail.find("{x,y}") != std::string::npos,
                     "concrete witness names the skew pair");
        return ok;
    });

    if (failures == 0)
        std::printf("all acceptance criteria passed\n");
    else
        std::printf("%d criteria failed\n", failures);
    return failures == 0 ? 0 : 1;
}
