#ifndef MMQ_POLY_HPP
#define MMQ_POLY_HPP

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "mmq/rational.hpp"

namespace mmq {

// Variable universe: the nullity variable t, one weight variable per
// ground-set element, and free-form named variables (x, y, w, s, u, ...).
enum class VarKind : std::uint8_t { T = 0, Weight = 1, Named = 2 };

struct VarId {
    VarKind kind = VarKind::T;
    std::string label; // empty for T

    static VarId t() { return {VarKind::T, ""}; }
    static VarId weight(std::string l) { return {VarKind::Weight, std::move(l)}; }
    static VarId named(std::string l) { return {VarKind::Named, std::move(l)}; }

    friend bool operator==(const VarId& a, const VarId& b)
    {
        return a.kind == b.kind && a.label == b.label;
    }
    friend bool operator<(const VarId& a, const VarId& b)
    {
        if (a.kind != b.kind)
            return a.kind < b.kind;
        return a.label < b.label;
    }

    std::string str() const
    {
        switch (kind) {
        case VarKind::T: return "t";
        case VarKind::Weight: return "x_" + label;
        default: return label;
        }
    }
};

// Exponent map with no zero entries, kept sorted by VarId.
class Monomial {
public:
    Monomial() = default;

    static Monomial var(const VarId& v, int exp = 1)
    {
        Monomial m;
        if (exp != 0)
            m.vars_.emplace_back(v, exp);
        return m;
    }

    const std::vector<std::pair<VarId, int>>& factors() const { return vars_; }
    bool is_one() const { return vars_.empty(); }
    int degree() const
    {
        int d = 0;
        for (const auto& [v, e] : vars_)
            d += e;
        return d;
    }
    int exponent(const VarId& v) const
    {
        for (const auto& [w, e] : vars_)
            if (w == v)
                return e;
        return 0;
    }

    Monomial operator*(const Monomial& rhs) const;

    friend bool operator==(const Monomial& a, const Monomial& b) { return a.vars_ == b.vars_; }

    // Canonical display order: walk variables in VarId order; the monomial
    // with the higher exponent at the first difference renders first.
    static bool display_before(const Monomial& a, const Monomial& b);

    std::string str() const;

private:
    std::vector<std::pair<VarId, int>> vars_;
};

struct MonomialDisplayOrder {
    bool operator()(const Monomial& a, const Monomial& b) const
    {
        return Monomial::display_before(a, b);
    }
};

// Sparse multivariate polynomial with exact rational coefficients.
// The term map is kept in canonical display order, so iteration order,
// text() and operator== all agree; no zero coefficient is ever stored.
class Poly {
public:
    using TermMap = std::map<Monomial, Rational, MonomialDisplayOrder>;

    Poly() = default;
    Poly(int c) : Poly(Rational(c)) {}
    Poly(const Rational& c)
    {
        if (c != 0)
            terms_[Monomial()] = c;
    }

    static Poly var(const VarId& v, int exp = 1) { return term(Monomial::var(v, exp), 1); }
    static Poly t() { return var(VarId::t()); }
    static Poly term(const Monomial& m, const Rational& c)
    {
        Poly p;
        if (c != 0)
            p.terms_[m] = c;
        return p;
    }

    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const
    {
        return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.is_one());
    }
    Rational constant_value() const;

    Poly& operator+=(const Poly& rhs);
    Poly& operator-=(const Poly& rhs);
    Poly& operator*=(const Poly& rhs) { *this = *this * rhs; return *this; }
    Poly& operator*=(const Rational& c);

    friend Poly operator+(Poly a, const Poly& b) { a += b; return a; }
    friend Poly operator-(Poly a, const Poly& b) { a -= b; return a; }
    friend Poly operator*(const Poly& a, const Poly& b);
    friend Poly operator*(Poly a, const Rational& c) { a *= c; return a; }
    friend Poly operator*(const Rational& c, Poly a) { a *= c; return a; }
    friend bool operator==(const Poly& a, const Poly& b) { return a.terms_ == b.terms_; }
    friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

    Poly pow(int n) const;

    std::vector<VarId> variables() const;

    // Substitution homomorphisms.
    Poly substituted(const VarId& v, const Poly& replacement) const;
    Poly specialized(const std::map<VarId, Rational>& partial) const;
    Rational evaluated(const std::map<VarId, Rational>& full) const; // throws on a missing variable

    std::string text() const; // canonical rendering, e.g. "t^2 + 10*t + 16"

private:
    TermMap terms_;
};

} // namespace mmq

#endif
