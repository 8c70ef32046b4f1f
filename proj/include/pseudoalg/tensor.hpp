#pragma once

#include "pseudoalg/hpoly.hpp"

#include <array>
#include <map>
#include <string>
#include <utility>
#include <vector>

namespace pseudoalg {

/// Element of H (x) H as a sparse map (a, b) -> coefficient of s^(a) (x) s^(b).
class Tensor2 {
  public:
    using Key = std::pair<int, int>;
    using Terms = std::map<Key, Rat>;

    Tensor2() = default;

    static Tensor2 basis(int a, int b, Rat c = Rat(1)) {
        Tensor2 t;
        t.add_to(a, b, c);
        return t;
    }
    static Tensor2 unit() { return basis(0, 0); }

    const Terms& terms() const { return t_; }
    bool is_zero() const { return t_.empty(); }

    Rat coeff(int a, int b) const {
        auto it = t_.find({a, b});
        return it == t_.end() ? Rat(0) : it->second;
    }

    int max_left() const {
        int m = -1;
        for (const auto& [k, c] : t_)
            m = std::max(m, k.first);
        return m;
    }
    int max_right() const {
        int m = -1;
        for (const auto& [k, c] : t_)
            m = std::max(m, k.second);
        return m;
    }

    void add_to(int a, int b, const Rat& c) {
        if (c.is_zero())
            return;
        Key k{a, b};
        auto [it, fresh] = t_.try_emplace(k, c);
        if (!fresh) {
            it->second += c;
            if (it->second.is_zero())
                t_.erase(it);
        }
    }

    Tensor2& operator+=(const Tensor2& o) {
        for (const auto& [k, c] : o.t_)
            add_to(k.first, k.second, c);
        return *this;
    }
    Tensor2& operator-=(const Tensor2& o) {
        for (const auto& [k, c] : o.t_)
            add_to(k.first, k.second, -c);
        return *this;
    }
    friend Tensor2 operator+(Tensor2 a, const Tensor2& b) { return a += b; }
    friend Tensor2 operator-(Tensor2 a, const Tensor2& b) { return a -= b; }
    Tensor2 operator-() const {
        Tensor2 r;
        for (const auto& [k, c] : t_)
            r.t_.emplace(k, -c);
        return r;
    }
    Tensor2 scaled(const Rat& c) const {
        Tensor2 r;
        if (c.is_zero())
            return r;
        for (const auto& [k, v] : t_)
            r.t_.emplace(k, v * c);
        return r;
    }

    friend bool operator==(const Tensor2& a, const Tensor2& b) { return a.t_ == b.t_; }
    friend bool operator!=(const Tensor2& a, const Tensor2& b) { return !(a == b); }

    std::string str() const;

  private:
    Terms t_;
};

/// Element of H (x) H (x) H.
class Tensor3 {
  public:
    using Key = std::array<int, 3>;
    using Terms = std::map<Key, Rat>;

    Tensor3() = default;

    static Tensor3 basis(int a, int b, int c, Rat v = Rat(1)) {
        Tensor3 t;
        t.add_to(a, b, c, v);
        return t;
    }

    const Terms& terms() const { return t_; }
    bool is_zero() const { return t_.empty(); }

    void add_to(int a, int b, int c, const Rat& v) {
        if (v.is_zero())
            return;
        Key k{a, b, c};
        auto [it, fresh] = t_.try_emplace(k, v);
        if (!fresh) {
            it->second += v;
            if (it->second.is_zero())
                t_.erase(it);
        }
    }

    Tensor3& operator+=(const Tensor3& o) {
        for (const auto& [k, c] : o.t_)
            add_to(k[0], k[1], k[2], c);
        return *this;
    }
    Tensor3& operator-=(const Tensor3& o) {
        for (const auto& [k, c] : o.t_)
            add_to(k[0], k[1], k[2], -c);
        return *this;
    }
    friend Tensor3 operator+(Tensor3 a, const Tensor3& b) { return a += b; }
    friend Tensor3 operator-(Tensor3 a, const Tensor3& b) { return a -= b; }
    Tensor3 operator-() const {
        Tensor3 r;
        for (const auto& [k, c] : t_)
            r.t_.emplace(k, -c);
        return r;
    }
    Tensor3 scaled(const Rat& c) const {
        Tensor3 r;
        if (c.is_zero())
            return r;
        for (const auto& [k, v] : t_)
            r.t_.emplace(k, v * c);
        return r;
    }

    friend bool operator==(const Tensor3& a, const Tensor3& b) { return a.t_ == b.t_; }
    friend bool operator!=(const Tensor3& a, const Tensor3& b) { return !(a == b); }

    std::string str() const;

  private:
    Terms t_;
};

/// Delta(s^(n)) = sum_{i=0}^{n} s^(i) (x) s^(n-i), extended linearly.
inline Tensor2 hp_coproduct(const HPoly& p) {
    Tensor2 t;
    for (const auto& [n, c] : p.terms())
        for (int i = 0; i <= n; ++i)
            t.add_to(i, n - i, c);
    return t;
}

/// (a, b) -> (b, a).
inline Tensor2 t2_swap(const Tensor2& x) {
    Tensor2 r;
    for (const auto& [k, c] : x.terms())
        r.add_to(k.second, k.first, c);
    return r;
}

/// (a, b, c) -> (b, a, c).
inline Tensor3 t3_swap12(const Tensor3& x) {
    Tensor3 r;
    for (const auto& [k, c] : x.terms())
        r.add_to(k[1], k[0], k[2], c);
    return r;
}

/// Slotwise product (f (x) g)(f' (x) g') = ff' (x) gg'.
inline Tensor2 t2_mul(const Tensor2& x, const Tensor2& y) {
    Tensor2 r;
    for (const auto& [k, c] : x.terms())
        for (const auto& [l, d] : y.terms())
            r.add_to(k.first + l.first, k.second + l.second,
                     c * d * Rat(binomial(k.first + l.first, k.first)) *
                         Rat(binomial(k.second + l.second, k.second)));
    return r;
}

inline Tensor3 t3_mul(const Tensor3& x, const Tensor3& y) {
    Tensor3 r;
    for (const auto& [k, c] : x.terms())
        for (const auto& [l, d] : y.terms())
            r.add_to(k[0] + l[0], k[1] + l[1], k[2] + l[2],
                     c * d * Rat(binomial(k[0] + l[0], k[0])) *
                         Rat(binomial(k[1] + l[1], k[1])) *
                         Rat(binomial(k[2] + l[2], k[2])));
    return r;
}

/// f (x) g for f, g in H.
inline Tensor2 t2_outer(const HPoly& f, const HPoly& g) {
    Tensor2 r;
    for (const auto& [a, c] : f.terms())
        for (const auto& [b, d] : g.terms())
            r.add_to(a, b, c * d);
    return r;
}

/// x * Delta(h).
inline Tensor2 right_delta_action(const Tensor2& x, const HPoly& h) {
    return t2_mul(x, hp_coproduct(h));
}

/// (gamma Delta (x) 1) delta: gamma lands in slots 1-2, acting on the first leg
/// of delta through the coproduct.  On basis terms gamma = s^(a) (x) s^(b),
/// delta = s^(c) (x) s^(d):
///   sum_{t=0}^{c} C(a+t,t) C(b+c-t,b) s^(a+t) (x) s^(b+c-t) (x) s^(d).
inline Tensor3 comp_left(const Tensor2& gamma, const Tensor2& delta) {
    Tensor3 r;
    for (const auto& [g, cg] : gamma.terms()) {
        const int a = g.first, b = g.second;
        for (const auto& [d, cd] : delta.terms()) {
            const int c = d.first, e = d.second;
            const Rat f = cg * cd;
            for (int t = 0; t <= c; ++t)
                r.add_to(a + t, b + c - t, e,
                         f * Rat(binomial(a + t, t)) * Rat(binomial(b + c - t, b)));
        }
    }
    return r;
}

/// (1 (x) gamma Delta) delta: gamma lands in slots 2-3, acting on the second
/// leg of delta.  On basis terms gamma = s^(a) (x) s^(b), delta = s^(c) (x) s^(d):
///   sum_{t=0}^{d} C(a+t,t) C(b+d-t,b) s^(c) (x) s^(a+t) (x) s^(b+d-t).
inline Tensor3 comp_right(const Tensor2& gamma, const Tensor2& delta) {
    Tensor3 r;
    for (const auto& [g, cg] : gamma.terms()) {
        const int a = g.first, b = g.second;
        for (const auto& [d, cd] : delta.terms()) {
            const int c = d.first, e = d.second;
            const Rat f = cg * cd;
            for (int t = 0; t <= e; ++t)
                r.add_to(c, a + t, b + e - t,
                         f * Rat(binomial(a + t, t)) * Rat(binomial(b + e - t, b)));
        }
    }
    return r;
}

/// Applies the counit to one slot (1-based) and merges the remaining two.
inline Tensor2 partial_counit(const Tensor3& x, int slot) {
    Tensor2 r;
    for (const auto& [k, c] : x.terms()) {
        switch (slot) {
        case 1:
            if (k[0] == 0)
                r.add_to(k[1], k[2], c);
            break;
        case 2:
            if (k[1] == 0)
                r.add_to(k[0], k[2], c);
            break;
        case 3:
            if (k[2] == 0)
                r.add_to(k[0], k[1], c);
            break;
        default:
            throw std::out_of_range("partial_counit: slot must be 1, 2 or 3");
        }
    }
    return r;
}

/// Canonical form of x (x)_H e over the free module: a sum of terms
/// (s^(d) (x) 1) (x)_H (action_d . e) with strictly increasing degrees d and
/// nonzero actions.
struct CanonicalPair {
    std::vector<std::pair<int, HPoly>> terms;

    bool is_zero() const { return terms.empty(); }
    HPoly action(int degree) const {
        for (const auto& [d, h] : terms)
            if (d == degree)
                return h;
        return HPoly();
    }
};

/// Rewrites s^(a) (x) s^(b) as
///   sum_{t=0}^{b} (-1)^t C(a+t,t) (s^(a+t) (x) 1) (x)_H s^(b-t)
/// via f (x) g = sum (f S(g_(1)) (x) 1) Delta(g_(2)).
inline CanonicalPair normal_form(const Tensor2& x) {
    std::map<int, HPoly> acc;
    for (const auto& [k, c] : x.terms()) {
        const int a = k.first, b = k.second;
        for (int t = 0; t <= b; ++t) {
            Rat coef = c * Rat(binomial(a + t, t));
            if (t % 2 != 0)
                coef = -coef;
            acc[a + t].add_to(b - t, coef);
        }
    }
    CanonicalPair cp;
    for (auto& [d, h] : acc)
        if (!h.is_zero())
            cp.terms.emplace_back(d, std::move(h));
    return cp;
}

/// Inverse of normal_form: sum (s^(d) (x) 1) * Delta(h_d).
inline Tensor2 reconstruct(const CanonicalPair& cp) {
    Tensor2 r;
    for (const auto& [d, h] : cp.terms)
        r += t2_mul(Tensor2::basis(d, 0), hp_coproduct(h));
    return r;
}

namespace detail {
inline void append_term(std::string& out, bool& first, const Rat& c, const std::string& mono) {
    Rat a = c.abs();
    std::string piece = a.is_one() ? mono : a.str() + " " + mono;
    if (first) {
        out += (c.sign() < 0 ? "-" : "") + piece;
        first = false;
    } else {
        out += (c.sign() < 0 ? " - " : " + ") + piece;
    }
}
inline std::string mono_str(int n) {
    return n == 0 ? "1" : (n == 1 ? "s" : "s(" + std::to_string(n) + ")");
}
} // namespace detail

inline std::string Tensor2::str() const {
    if (t_.empty())
        return "0";
    std::string out;
    bool first = true;
    for (const auto& [k, c] : t_)
        detail::append_term(out, first, c,
                            detail::mono_str(k.first) + "|" + detail::mono_str(k.second));
    return out;
}

inline std::string Tensor3::str() const {
    if (t_.empty())
        return "0";
    std::string out;
    bool first = true;
    for (const auto& [k, c] : t_)
        detail::append_term(out, first, c,
                            detail::mono_str(k[0]) + "|" + detail::mono_str(k[1]) + "|" +
                                detail::mono_str(k[2]));
    return out;
}

} // namespace pseudoalg
