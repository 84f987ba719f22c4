#pragma once

#include <cstdint>
#include <string>

#include <gmpxx.h>

#include "pbw/error.hpp"

namespace pbw {

/// Exact rational scalar, arbitrary precision.
class Rational {
  public:
    Rational() : q_(0) {}
    Rational(long n) : q_(static_cast<long>(n)) {}
    Rational(long num, long den) : q_(num, den) {
        if (den == 0)
            throw Error("rational with zero denominator");
        q_.canonicalize();
    }
    /// Accepts "12", "-3", "3/4".
    explicit Rational(const std::string& s) {
        try {
            q_ = mpq_class(s);
        } catch (const std::invalid_argument&) {
            throw Error("bad rational literal: " + s);
        }
        q_.canonicalize();
    }

    bool is_zero() const { return q_ == 0; }
    bool is_one() const { return q_ == 1; }

    Rational operator-() const { return Rational(-q_); }
    Rational& operator+=(const Rational& o) { q_ += o.q_; return *this; }
    Rational& operator-=(const Rational& o) { q_ -= o.q_; return *this; }
    Rational& operator*=(const Rational& o) { q_ *= o.q_; return *this; }
    Rational& operator/=(const Rational& o) {
        if (o.is_zero())
            throw Error("division by zero");
        q_ /= o.q_;
        return *this;
    }
    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
    friend bool operator==(const Rational& a, const Rational& b) { return a.q_ == b.q_; }
    friend bool operator!=(const Rational& a, const Rational& b) { return a.q_ != b.q_; }

    Rational inverse() const {
        if (is_zero())
            throw Error("inverse of zero");
        return Rational(1) / *this;
    }
    bool is_negative() const { return q_ < 0; }
    Rational abs() const { return is_negative() ? -*this : *this; }

    std::string str() const { return q_.get_str(); }

  private:
    explicit Rational(mpq_class q) : q_(std::move(q)) {}
    mpq_class q_;
};

/// Prime-field scalar GF(p). Each element carries its modulus; the
/// default-constructed zero is field-agnostic and absorbs into any field on
/// first combination, so sparse code can use `Fp{}` freely.
class Fp {
  public:
    Fp() = default;
    Fp(long long n, uint64_t p) : p_(p) {
        check_modulus(p);
        long long r = n % static_cast<long long>(p);
        if (r < 0)
            r += static_cast<long long>(p);
        v_ = static_cast<uint64_t>(r);
    }

    uint64_t value() const { return v_; }
    uint64_t modulus() const { return p_; }
    bool is_zero() const { return v_ == 0; }
    bool is_one() const { return v_ == 1; }

    Fp operator-() const {
        if (v_ == 0)
            return *this;
        return make(p_ - v_, p_);
    }
    Fp& operator+=(const Fp& o) { return *this = *this + o; }
    Fp& operator-=(const Fp& o) { return *this = *this - o; }
    Fp& operator*=(const Fp& o) { return *this = *this * o; }
    Fp& operator/=(const Fp& o) { return *this = *this / o; }

    friend Fp operator+(const Fp& a, const Fp& b) {
        if (a.is_zero()) return b;
        if (b.is_zero()) return a;
        uint64_t p = common_modulus(a, b);
        uint64_t s = a.v_ + b.v_;
        if (s >= p) s -= p;
        return make(s, p);
    }
    friend Fp operator-(const Fp& a, const Fp& b) { return a + (-b); }
    friend Fp operator*(const Fp& a, const Fp& b) {
        if (a.is_zero() || b.is_zero()) return Fp{};
        uint64_t p = common_modulus(a, b);
        return make((a.v_ * b.v_) % p, p);
    }
    friend Fp operator/(const Fp& a, const Fp& b) { return a * b.inverse(); }
    friend bool operator==(const Fp& a, const Fp& b) {
        if (a.is_zero() || b.is_zero()) return a.v_ == b.v_;
        return common_modulus(a, b) && a.v_ == b.v_;
    }
    friend bool operator!=(const Fp& a, const Fp& b) { return !(a == b); }

    Fp inverse() const {
        if (is_zero())
            throw Error("inverse of zero");
        // extended Euclid
        int64_t t = 0, nt = 1;
        int64_t r = static_cast<int64_t>(p_), nr = static_cast<int64_t>(v_);
        while (nr != 0) {
            int64_t q = r / nr;
            t -= q * nt; std::swap(t, nt);
            r -= q * nr; std::swap(r, nr);
        }
        internal_check(r == 1, "modulus not prime in Fp::inverse");
        if (t < 0)
            t += static_cast<int64_t>(p_);
        return make(static_cast<uint64_t>(t), p_);
    }
    bool is_negative() const { return false; }
    Fp abs() const { return *this; }

    std::string str() const { return std::to_string(v_); }

    static void check_modulus(uint64_t p) {
        if (p < 2 || p >= (uint64_t(1) << 31))
            throw Error("prime modulus must satisfy 2 <= p < 2^31");
        for (uint64_t d = 2; d * d <= p; ++d)
            if (p % d == 0)
                throw Error("modulus " + std::to_string(p) + " is not prime");
    }

  private:
    static Fp make(uint64_t v, uint64_t p) {
        Fp x;
        x.v_ = v;
        x.p_ = v == 0 ? 0 : p;
        return x;
    }
    static uint64_t common_modulus(const Fp& a, const Fp& b) {
        internal_check(a.p_ == b.p_, "mixed prime-field moduli");
        return a.p_;
    }
    uint64_t v_ = 0;
    uint64_t p_ = 0; // 0 while the element is the field-agnostic zero
};

/// Literal factories for the two supported fields. Generic code that has to
/// mint constants takes one of these as context.
struct RationalField {
    using Scalar = Rational;
    Rational operator()(long long n) const { return Rational(static_cast<long>(n)); }
    Rational from_literal(const std::string& s) const { return Rational(s); }
    std::string name() const { return "Q"; }
};

struct PrimeField {
    uint64_t p;
    using Scalar = Fp;
    explicit PrimeField(uint64_t p_) : p(p_) { Fp::check_modulus(p); }
    Fp operator()(long long n) const { return Fp(n, p); }
    Fp from_literal(const std::string& s) const {
        auto slash = s.find('/');
        if (slash == std::string::npos)
            return from_digits(s);
        return from_digits(s.substr(0, slash)) / from_digits(s.substr(slash + 1));
    }
    std::string name() const { return "GF(" + std::to_string(p) + ")"; }

  private:
    // digit-wise reduction, so literals of any length are accepted
    Fp from_digits(const std::string& s) const {
        std::string t = s;
        bool neg = false;
        if (!t.empty() && (t[0] == '-' || t[0] == '+')) {
            neg = t[0] == '-';
            t = t.substr(1);
        }
        if (t.empty() || t.find_first_not_of("0123456789") != std::string::npos)
            throw Error("bad integer literal: " + s);
        Fp acc(0, p), ten(10, p);
        for (char c : t)
            acc = acc * ten + Fp(c - '0', p);
        return neg ? -acc : acc;
    }
};

} // namespace pbw
