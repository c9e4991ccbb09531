#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <utility>

#include <gmp.h>

#include "lgpot/error.hpp"

namespace lgpot {

/// Arbitrary-precision rational number with value semantics.
///
/// A thin RAII wrapper around GMP's mpq_t. Values are always kept in
/// canonical form: gcd(num, den) = 1 and den > 0, so equality is plain
/// structural comparison.
class Rational {
public:
    Rational() { mpq_init(q_); }

    Rational(long n) {
        mpq_init(q_);
        mpq_set_si(q_, n, 1);
    }

    Rational(long num, long den) {
        if (den == 0) throw DomainError("rational with zero denominator");
        mpq_init(q_);
        mpz_set_si(mpq_numref(q_), num);
        mpz_set_si(mpq_denref(q_), den);
        mpq_canonicalize(q_);
    }

    /// Parses "p" or "p/q" in base 10. Whitespace is not accepted.
    static Rational from_string(const std::string& s) {
        if (!looks_like_rational(s))
            throw DomainError("malformed rational literal: '" + s + "'");
        Rational r;
        if (mpq_set_str(r.q_, s.c_str(), 10) != 0)
            throw DomainError("malformed rational literal: '" + s + "'");
        if (mpz_sgn(mpq_denref(r.q_)) == 0)
            throw DomainError("rational literal with zero denominator: '" + s + "'");
        mpq_canonicalize(r.q_);
        return r;
    }

    Rational(const Rational& o) {
        mpq_init(q_);
        mpq_set(q_, o.q_);
    }

    Rational(Rational&& o) noexcept {
        mpq_init(q_);
        mpq_swap(q_, o.q_);
    }

    Rational& operator=(const Rational& o) {
        if (this != &o) mpq_set(q_, o.q_);
        return *this;
    }

    Rational& operator=(Rational&& o) noexcept {
        mpq_swap(q_, o.q_);
        return *this;
    }

    ~Rational() { mpq_clear(q_); }

    bool is_zero() const { return mpq_sgn(q_) == 0; }
    bool is_one() const { return mpq_cmp_si(q_, 1, 1) == 0; }
    int sign() const { return mpq_sgn(q_); }

    /// True when the value is an integer (denominator 1).
    bool is_integer() const { return mpz_cmp_ui(mpq_denref(q_), 1) == 0; }

    friend Rational operator+(const Rational& a, const Rational& b) {
        Rational r;
        mpq_add(r.q_, a.q_, b.q_);
        return r;
    }

    friend Rational operator-(const Rational& a, const Rational& b) {
        Rational r;
        mpq_sub(r.q_, a.q_, b.q_);
        return r;
    }

    friend Rational operator*(const Rational& a, const Rational& b) {
        Rational r;
        mpq_mul(r.q_, a.q_, b.q_);
        return r;
    }

    friend Rational operator/(const Rational& a, const Rational& b) {
        if (b.is_zero()) throw DomainError("division by zero rational");
        Rational r;
        mpq_div(r.q_, a.q_, b.q_);
        return r;
    }

    Rational operator-() const {
        Rational r;
        mpq_neg(r.q_, q_);
        return r;
    }

    Rational inverse() const {
        if (is_zero()) throw DomainError("inverse of zero rational");
        Rational r;
        mpq_inv(r.q_, q_);
        return r;
    }

    Rational abs() const {
        Rational r;
        mpq_abs(r.q_, q_);
        return r;
    }

    Rational pow(std::int64_t k) const {
        Rational base = k < 0 ? inverse() : *this;
        // Magnitude via unsigned negation; |INT64_MIN| is representable.
        std::uint64_t e = k < 0 ? -static_cast<std::uint64_t>(k)
                                : static_cast<std::uint64_t>(k);
        Rational acc(1);
        while (e != 0) {
            if (e & 1u) acc = acc * base;
            base = base * base;
            e >>= 1u;
        }
        return acc;
    }

    friend bool operator==(const Rational& a, const Rational& b) {
        return mpq_equal(a.q_, b.q_) != 0;
    }

    friend bool operator!=(const Rational& a, const Rational& b) { return !(a == b); }

    friend bool operator<(const Rational& a, const Rational& b) {
        return mpq_cmp(a.q_, b.q_) < 0;
    }

    double to_double() const { return mpq_get_d(q_); }

    /// Canonical form: "p" when the denominator is 1, else "p/q".
    std::string to_string() const {
        char* raw = mpq_get_str(nullptr, 10, q_);
        std::string s(raw);
        void (*freefunc)(void*, std::size_t);
        mp_get_memory_functions(nullptr, nullptr, &freefunc);
        freefunc(raw, s.size() + 1);
        return s;
    }

    std::size_t hash() const {
        std::size_t h = mpz_get_ui(mpq_numref(q_));
        std::size_t d = mpz_get_ui(mpq_denref(q_));
        h ^= d + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
        if (sign() < 0) h = ~h;
        return h;
    }

private:
    // Strict shape check ("-"? digits ("/" digits)?); GMP itself ignores
    // embedded whitespace, which is too lax for canonical I/O.
    static bool looks_like_rational(const std::string& s) {
        std::size_t pos = 0;
        if (pos < s.size() && s[pos] == '-') ++pos;
        std::size_t digits = 0;
        while (pos < s.size() && s[pos] >= '0' && s[pos] <= '9') ++pos, ++digits;
        if (digits == 0) return false;
        if (pos == s.size()) return true;
        if (s[pos] != '/') return false;
        ++pos;
        digits = 0;
        while (pos < s.size() && s[pos] >= '0' && s[pos] <= '9') ++pos, ++digits;
        return digits != 0 && pos == s.size();
    }

    mpq_t q_;
};

/// Gaussian rational a + b*i with exact rational components.
class GaussianRational {
public:
    GaussianRational() = default;
    GaussianRational(Rational re, Rational im) : re_(std::move(re)), im_(std::move(im)) {}

    static GaussianRational i() { return {Rational(0), Rational(1)}; }

    const Rational& re() const { return re_; }
    const Rational& im() const { return im_; }

    bool is_zero() const { return re_.is_zero() && im_.is_zero(); }
    bool is_real() const { return im_.is_zero(); }

    friend GaussianRational operator+(const GaussianRational& a, const GaussianRational& b) {
        return {a.re_ + b.re_, a.im_ + b.im_};
    }

    friend GaussianRational operator-(const GaussianRational& a, const GaussianRational& b) {
        return {a.re_ - b.re_, a.im_ - b.im_};
    }

    friend GaussianRational operator*(const GaussianRational& a, const GaussianRational& b) {
        return {a.re_ * b.re_ - a.im_ * b.im_, a.re_ * b.im_ + a.im_ * b.re_};
    }

    GaussianRational operator-() const { return {-re_, -im_}; }

    GaussianRational inverse() const {
        if (is_zero()) throw DomainError("inverse of zero Gaussian rational");
        Rational n = re_ * re_ + im_ * im_;
        return {re_ / n, -im_ / n};
    }

    friend GaussianRational operator/(const GaussianRational& a, const GaussianRational& b) {
        return a * b.inverse();
    }

    GaussianRational pow(std::int64_t k) const {
        GaussianRational base = k < 0 ? inverse() : *this;
        std::uint64_t e = k < 0 ? -static_cast<std::uint64_t>(k)
                                : static_cast<std::uint64_t>(k);
        GaussianRational acc(Rational(1), Rational(0));
        while (e != 0) {
            if (e & 1u) acc = acc * base;
            base = base * base;
            e >>= 1u;
        }
        return acc;
    }

    friend bool operator==(const GaussianRational& a, const GaussianRational& b) {
        return a.re_ == b.re_ && a.im_ == b.im_;
    }

    friend bool operator!=(const GaussianRational& a, const GaussianRational& b) {
        return !(a == b);
    }

    /// Canonical form "a+b*i" / "a-b*i"; both components always present.
    std::string to_string() const {
        std::string s = re_.to_string();
        s += im_.sign() < 0 ? "-" : "+";
        s += im_.abs().to_string();
        s += "*i";
        return s;
    }

    std::size_t hash() const {
        std::size_t h = re_.hash();
        h ^= im_.hash() + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
        return h;
    }

private:
    Rational re_, im_;
};

} // namespace lgpot
