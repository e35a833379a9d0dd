#include "mmq/poly.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace mmq {

Monomial Monomial::operator*(const Monomial& rhs) const
{
    Monomial out;
    out.vars_.reserve(vars_.size() + rhs.vars_.size());
    std::size_t i = 0, j = 0;
    while (i < vars_.size() && j < rhs.vars_.size()) {
        if (vars_[i].first == rhs.vars_[j].first) {
            int e = vars_[i].second + rhs.vars_[j].second;
            if (e != 0)
                out.vars_.emplace_back(vars_[i].first, e);
            ++i, ++j;
        } else if (vars_[i].first < rhs.vars_[j].first) {
            out.vars_.push_back(vars_[i++]);
        } else {
            out.vars_.push_back(rhs.vars_[j++]);
        }
    }
    for (; i < vars_.size(); ++i)
        out.vars_.push_back(vars_[i]);
    for (; j < rhs.vars_.size(); ++j)
        out.vars_.push_back(rhs.vars_[j]);
    return out;
}

bool Monomial::display_before(const Monomial& a, const Monomial& b)
{
    std::size_t i = 0, j = 0;
    while (i < a.vars_.size() && j < b.vars_.size()) {
        if (a.vars_[i].first == b.vars_[j].first) {
            if (a.vars_[i].second != b.vars_[j].second)
                return a.vars_[i].second > b.vars_[j].second;
            ++i, ++j;
        } else if (a.vars_[i].first < b.vars_[j].first) {
            return true; // a has a positive power of an earlier variable
        } else {
            return false;
        }
    }
    return i < a.vars_.size();
}

std::string Monomial::str() const
{
    if (vars_.empty())
        return "1";
    std::ostringstream os;
    bool first = true;
    for (const auto& [v, e] : vars_) {
        if (!first)
            os << "*";
        first = false;
        os << v.str();
        if (e != 1)
            os << "^" << e;
    }
    return os.str();
}

Rational Poly::constant_value() const
{
    if (terms_.empty())
        return 0;
    if (!is_constant())
        throw std::logic_error("constant_value on non-constant polynomial");
    return terms_.begin()->second;
}

Poly& Poly::operator+=(const Poly& rhs)
{
    for (const auto& [m, c] : rhs.terms_) {
        auto it = terms_.find(m);
        if (it == terms_.end()) {
            terms_.emplace(m, c);
        } else {
            it->second += c;
            if (it->second == 0)
                terms_.erase(it);
        }
    }
    return *this;
}

Poly& Poly::operator-=(const Poly& rhs)
{
    for (const auto& [m, c] : rhs.terms_) {
        auto it = terms_.find(m);
        if (it == terms_.end()) {
            terms_.emplace(m, -c);
        } else {
            it->second -= c;
            if (it->second == 0)
                terms_.erase(it);
        }
    }
    return *this;
}

Poly& Poly::operator*=(const Rational& c)
{
    if (c == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& [m, coeff] : terms_)
        coeff *= c;
    return *this;
}

Poly operator*(const Poly& a, const Poly& b)
{
    Poly out;
    for (const auto& [ma, ca] : a.terms_)
        for (const auto& [mb, cb] : b.terms_) {
            Monomial m = ma * mb;
            auto it = out.terms_.find(m);
            if (it == out.terms_.end()) {
                out.terms_.emplace(std::move(m), ca * cb);
            } else {
                it->second += ca * cb;
                if (it->second == 0)
                    out.terms_.erase(it);
            }
        }
    return out;
}

Poly Poly::pow(int n) const
{
    if (n < 0)
        throw std::invalid_argument("negative power");
    Poly out(1);
    Poly base = *this;
    while (n > 0) {
        if (n & 1)
            out *= base;
        base = base * base;
        n >>= 1;
    }
    return out;
}

std::vector<VarId> Poly::variables() const
{
    std::vector<VarId> out;
    for (const auto& [m, c] : terms_)
        for (const auto& [v, e] : m.factors())
            if (std::find(out.begin(), out.end(), v) == out.end())
                out.push_back(v);
    std::sort(out.begin(), out.end());
    return out;
}

Poly Poly::substituted(const VarId& v, const Poly& replacement) const
{
    Poly out;
    for (const auto& [m, c] : terms_) {
        Monomial rest;
        int e = 0;
        for (const auto& [w, k] : m.factors()) {
            if (w == v)
                e = k;
            else
                rest = rest * Monomial::var(w, k);
        }
        Poly piece = Poly::term(rest, c);
        if (e != 0)
            piece = piece * replacement.pow(e);
        out += piece;
    }
    return out;
}

Poly Poly::specialized(const std::map<VarId, Rational>& partial) const
{
    Poly out;
    for (const auto& [m, c] : terms_) {
        Rational coeff = c;
        Monomial rest;
        for (const auto& [v, e] : m.factors()) {
            auto it = partial.find(v);
            if (it == partial.end()) {
                rest = rest * Monomial::var(v, e);
            } else {
                Rational p = it->second;
                for (int k = 0; k < e; ++k)
                    coeff *= p;
            }
        }
        out += Poly::term(rest, coeff);
    }
    return out;
}

Rational Poly::evaluated(const std::map<VarId, Rational>& full) const
{
    Rational out = 0;
    for (const auto& [m, c] : terms_) {
        Rational v = c;
        for (const auto& [var, e] : m.factors()) {
            auto it = full.find(var);
            if (it == full.end())
                throw std::invalid_argument("evaluate: no value for variable " + var.str());
            for (int k = 0; k < e; ++k)
                v *= it->second;
        }
        out += v;
    }
    return out;
}

std::string Poly::text() const
{
    if (terms_.empty())
        return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [m, c] : terms_) {
        Rational a = c;
        if (first) {
            if (a < 0) {
                os << "-";
                a = -a;
            }
        } else {
            os << (a < 0 ? " - " : " + ");
            if (a < 0)
                a = -a;
        }
        first = false;
        if (m.is_one()) {
            os << rat_to_string(a);
        } else if (a == 1) {
            os << m.str();
        } else {
            os << rat_to_string(a) << "*" << m.str();
        }
    }
    return os.str();
}

} // namespace mmq
