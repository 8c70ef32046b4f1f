#pragma once

#include "pseudoalg/rat.hpp"

#include <map>
#include <string>
#include <vector>

namespace pseudoalg {

/// Polynomial in k[s] stored in the divided-power basis s^(n) = s^n/n!.
/// No zero coefficients are kept; the zero polynomial has an empty map.
class HPoly {
  public:
    using Terms = std::map<int, Rat>;

    HPoly() = default;

    static HPoly basis(int n, Rat c = Rat(1)) {
        HPoly p;
        p.set(n, std::move(c));
        return p;
    }
    static HPoly constant(Rat c) { return basis(0, std::move(c)); }
    static HPoly one() { return basis(0); }
    static HPoly s() { return basis(1); }

    const Terms& terms() const { return t_; }
    bool is_zero() const { return t_.empty(); }

    /// Max stored index; -1 for the zero polynomial.
    int degree() const { return t_.empty() ? -1 : t_.rbegin()->first; }

    Rat coeff(int n) const {
        auto it = t_.find(n);
        return it == t_.end() ? Rat(0) : it->second;
    }

    void set(int n, Rat c) {
        if (c.is_zero())
            t_.erase(n);
        else
            t_[n] = std::move(c);
    }

    void add_to(int n, const Rat& c) {
        if (c.is_zero())
            return;
        auto [it, fresh] = t_.try_emplace(n, c);
        if (!fresh) {
            it->second += c;
            if (it->second.is_zero())
                t_.erase(it);
        }
    }

    HPoly& operator+=(const HPoly& o) {
        for (const auto& [n, c] : o.t_)
            add_to(n, c);
        return *this;
    }
    HPoly& operator-=(const HPoly& o) {
        for (const auto& [n, c] : o.t_)
            add_to(n, -c);
        return *this;
    }
    friend HPoly operator+(HPoly a, const HPoly& b) { return a += b; }
    friend HPoly operator-(HPoly a, const HPoly& b) { return a -= b; }
    HPoly operator-() const {
        HPoly r;
        for (const auto& [n, c] : t_)
            r.t_.emplace(n, -c);
        return r;
    }

    HPoly scaled(const Rat& c) const {
        HPoly r;
        if (c.is_zero())
            return r;
        for (const auto& [n, v] : t_)
            r.t_.emplace(n, v * c);
        return r;
    }

    friend bool operator==(const HPoly& a, const HPoly& b) { return a.t_ == b.t_; }
    friend bool operator!=(const HPoly& a, const HPoly& b) { return !(a == b); }
    friend bool operator<(const HPoly& a, const HPoly& b) {
        return lex_less(a, b);
    }

    std::string str() const;

  private:
    static bool lex_less(const HPoly& a, const HPoly& b) {
        auto ia = a.t_.begin(), ib = b.t_.begin();
        for (; ia != a.t_.end() && ib != b.t_.end(); ++ia, ++ib) {
            if (ia->first != ib->first)
                return ia->first < ib->first;
            if (ia->second != ib->second)
                return ia->second < ib->second;
        }
        return ib != b.t_.end();
    }

    Terms t_;
};

/// s^(i) * s^(j) = C(i+j, i) s^(i+j), extended bilinearly.
inline HPoly hp_mul(const HPoly& a, const HPoly& b) {
    HPoly r;
    for (const auto& [i, ci] : a.terms())
        for (const auto& [j, cj] : b.terms())
            r.add_to(i + j, ci * cj * Rat(binomial(i + j, i)));
    return r;
}

inline HPoly operator*(const HPoly& a, const HPoly& b) { return hp_mul(a, b); }

/// Coefficient of s^(0).
inline Rat hp_counit(const HPoly& a) { return a.coeff(0); }

/// S(s^(n)) = (-1)^n s^(n).
inline HPoly hp_antipode(const HPoly& a) {
    HPoly r;
    for (const auto& [n, c] : a.terms())
        r.set(n, n % 2 == 0 ? c : -c);
    return r;
}

inline std::string HPoly::str() const {
    if (t_.empty())
        return "0";
    std::string out;
    bool first = true;
    for (const auto& [n, c] : t_) {
        std::string mono = n == 0 ? "1" : (n == 1 ? "s" : "s(" + std::to_string(n) + ")");
        Rat a = c.abs();
        std::string piece = (a.is_one() && n != 0) ? mono
                                                   : (n == 0 ? a.str() : a.str() + " " + mono);
        if (first) {
            out = c.sign() < 0 ? "-" + piece : piece;
            first = false;
        } else {
            out += (c.sign() < 0 ? " - " : " + ") + piece;
        }
    }
    return out;
}

/// Monomial-basis coefficient vector: p = sum coeffs[n] * s^n.
inline std::vector<Rat> hp_to_monomial(const HPoly& p) {
    std::vector<Rat> c(static_cast<size_t>(p.degree() + 1));
    Rat fact(1);
    for (int n = 0; n <= p.degree(); ++n) {
        if (n > 0)
            fact *= Rat(n);
        Rat v = p.coeff(n);
        if (!v.is_zero())
            c[static_cast<size_t>(n)] = v / fact;
    }
    return c;
}

inline HPoly hp_from_monomial(const std::vector<Rat>& c) {
    HPoly p;
    Rat fact(1);
    for (size_t n = 0; n < c.size(); ++n) {
        if (n > 0)
            fact *= Rat(static_cast<long long>(n));
        p.add_to(static_cast<int>(n), c[n] * fact);
    }
    return p;
}

} // namespace pseudoalg
