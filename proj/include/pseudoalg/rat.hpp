#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace pseudoalg {

using BigInt = boost::multiprecision::cpp_int;

/// Exact rational number.  Always stored in lowest terms with a positive
/// denominator; every operation is exact.
class Rat {
  public:
    Rat() : num_(0), den_(1) {}
    Rat(long long n) : num_(n), den_(1) {}
    Rat(BigInt n) : num_(std::move(n)), den_(1) {}
    Rat(BigInt n, BigInt d) : num_(std::move(n)), den_(std::move(d)) { normalize(); }
    Rat(long long n, long long d) : num_(n), den_(d) { normalize(); }

    const BigInt& num() const { return num_; }
    const BigInt& den() const { return den_; }

    bool is_zero() const { return num_ == 0; }
    bool is_one() const { return num_ == 1 && den_ == 1; }
    bool is_integer() const { return den_ == 1; }
    int sign() const { return num_ == 0 ? 0 : (num_ > 0 ? 1 : -1); }

    Rat operator-() const { return Rat(raw_tag{}, -num_, den_); }

    Rat& operator+=(const Rat& o) {
        num_ = num_ * o.den_ + o.num_ * den_;
        den_ *= o.den_;
        normalize();
        return *this;
    }
    Rat& operator-=(const Rat& o) {
        num_ = num_ * o.den_ - o.num_ * den_;
        den_ *= o.den_;
        normalize();
        return *this;
    }
    Rat& operator*=(const Rat& o) {
        num_ *= o.num_;
        den_ *= o.den_;
        normalize();
        return *this;
    }
    Rat& operator/=(const Rat& o) {
        if (o.num_ == 0)
            throw std::domain_error("Rat: division by zero");
        num_ *= o.den_;
        den_ *= o.num_;
        normalize();
        return *this;
    }

    friend Rat operator+(Rat a, const Rat& b) { return a += b; }
    friend Rat operator-(Rat a, const Rat& b) { return a -= b; }
    friend Rat operator*(Rat a, const Rat& b) { return a *= b; }
    friend Rat operator/(Rat a, const Rat& b) { return a /= b; }

    friend bool operator==(const Rat& a, const Rat& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend bool operator!=(const Rat& a, const Rat& b) { return !(a == b); }
    friend bool operator<(const Rat& a, const Rat& b) {
        return a.num_ * b.den_ < b.num_ * a.den_;
    }
    friend bool operator>(const Rat& a, const Rat& b) { return b < a; }
    friend bool operator<=(const Rat& a, const Rat& b) { return !(b < a); }
    friend bool operator>=(const Rat& a, const Rat& b) { return !(a < b); }

    Rat inverse() const {
        if (num_ == 0)
            throw std::domain_error("Rat: inverse of zero");
        return num_ > 0 ? Rat(raw_tag{}, den_, num_) : Rat(raw_tag{}, -den_, -num_);
    }

    Rat abs() const { return num_ < 0 ? -*this : *this; }

    /// "p" or "p/q", lowest terms.
    std::string str() const {
        std::string s = num_.str();
        if (den_ != 1)
            s += "/" + den_.str();
        return s;
    }

    /// Accepts "p", "-p", "p/q" with q > 0 after normalization.
    static std::optional<Rat> parse(std::string_view text) {
        auto valid = [](std::string_view s) {
            if (!s.empty() && (s.front() == '-' || s.front() == '+'))
                s.remove_prefix(1);
            if (s.empty())
                return false;
            for (char c : s)
                if (c < '0' || c > '9')
                    return false;
            return true;
        };
        auto slash = text.find('/');
        try {
            if (slash == std::string_view::npos) {
                if (!valid(text))
                    return std::nullopt;
                BigInt n{std::string(text)};
                return Rat(std::move(n));
            }
            auto ns = text.substr(0, slash), ds = text.substr(slash + 1);
            if (!valid(ns) || !valid(ds))
                return std::nullopt;
            BigInt n{std::string(ns)};
            BigInt d{std::string(ds)};
            if (d == 0)
                return std::nullopt;
            return Rat(std::move(n), std::move(d));
        } catch (const std::exception&) {
            return std::nullopt;
        }
    }

  private:
    struct raw_tag {};
    Rat(raw_tag, BigInt n, BigInt d) : num_(std::move(n)), den_(std::move(d)) {}

    void normalize() {
        if (den_ == 0)
            throw std::domain_error("Rat: zero denominator");
        if (den_ < 0) {
            num_ = -num_;
            den_ = -den_;
        }
        BigInt g = boost::multiprecision::gcd(num_ < 0 ? BigInt(-num_) : num_, den_);
        if (g > 1) {
            num_ /= g;
            den_ /= g;
        }
        if (num_ == 0)
            den_ = 1;
    }

    BigInt num_;
    BigInt den_;
};

/// C(n, k) for n >= 0; exact.
inline BigInt binomial(int n, int k) {
    if (k < 0 || k > n)
        return 0;
    if (k > n - k)
        k = n - k;
    BigInt r = 1;
    for (int i = 1; i <= k; ++i) {
        r *= n - k + i;
        r /= i;
    }
    return r;
}

/// Falling-factorial binomial p(p-1)...(p-a+1)/a!, valid for any integer p
/// (in particular negative p).
inline Rat falling_binomial(long long p, int a) {
    if (a < 0)
        return Rat(0);
    BigInt r = 1;
    for (int i = 0; i < a; ++i)
        r *= BigInt(p - i);
    BigInt fact = 1;
    for (int i = 2; i <= a; ++i)
        fact *= i;
    return Rat(std::move(r), std::move(fact));
}

} // namespace pseudoalg
