#pragma once

#include <complex>
#include <cstdint>
#include <string>
#include <variant>

#include "lgpot/error.hpp"
#include "lgpot/rational.hpp"

namespace lgpot {

/// Coefficient towers. Rational and Gaussian are exact and interoperate
/// (rationals promote to Gaussian rationals); Approx is double-precision
/// complex, meant for evaluation only, and never mixes silently with the
/// exact towers.
enum class Tower { Rational, Gaussian, Approx };

/// An exact or approximate scalar.
///
/// Canonical form: a Gaussian rational with zero imaginary part is stored
/// as a plain rational, so every value has exactly one representation and
/// equality in the exact towers is structural.
class Scalar {
public:
    Scalar() : v_(Rational(0)) {}
    Scalar(long n) : v_(Rational(n)) {}
    Scalar(Rational r) : v_(std::move(r)) {}
    Scalar(GaussianRational g) {
        if (g.is_real())
            v_ = g.re();
        else
            v_ = std::move(g);
    }
    explicit Scalar(std::complex<double> z) : v_(z) {}

    static Scalar i() { return Scalar(GaussianRational::i()); }

    Tower tower() const {
        switch (v_.index()) {
            case 0: return Tower::Rational;
            case 1: return Tower::Gaussian;
            default: return Tower::Approx;
        }
    }

    bool is_exact() const { return tower() != Tower::Approx; }

    bool is_zero() const {
        if (const auto* r = std::get_if<Rational>(&v_)) return r->is_zero();
        if (const auto* g = std::get_if<GaussianRational>(&v_)) return g->is_zero();
        return std::get<std::complex<double>>(v_) == 0.0;
    }

    bool is_one() const {
        if (const auto* r = std::get_if<Rational>(&v_)) return r->is_one();
        if (std::holds_alternative<GaussianRational>(v_)) return false;
        return std::get<std::complex<double>>(v_) == 1.0;
    }

    /// The rational value; throws unless the tower is Rational.
    const Rational& rational() const {
        if (const auto* r = std::get_if<Rational>(&v_)) return *r;
        throw DomainError("scalar is not a plain rational");
    }

    /// Widens a rational to its Gaussian form; throws on Approx.
    GaussianRational gaussian() const {
        if (const auto* r = std::get_if<Rational>(&v_))
            return GaussianRational(*r, Rational(0));
        if (const auto* g = std::get_if<GaussianRational>(&v_)) return *g;
        throw DomainError("approximate scalar has no exact Gaussian form");
    }

    /// Conversion to double-precision complex; this is the explicit gate
    /// into the approximate tower.
    std::complex<double> to_complex() const {
        if (const auto* r = std::get_if<Rational>(&v_)) return {r->to_double(), 0.0};
        if (const auto* g = std::get_if<GaussianRational>(&v_))
            return {g->re().to_double(), g->im().to_double()};
        return std::get<std::complex<double>>(v_);
    }

    friend Scalar operator+(const Scalar& a, const Scalar& b) {
        return combine(a, b, [](const auto& x, const auto& y) { return x + y; });
    }

    friend Scalar operator-(const Scalar& a, const Scalar& b) {
        return combine(a, b, [](const auto& x, const auto& y) { return x - y; });
    }

    friend Scalar operator*(const Scalar& a, const Scalar& b) {
        return combine(a, b, [](const auto& x, const auto& y) { return x * y; });
    }

    friend Scalar operator/(const Scalar& a, const Scalar& b) {
        return a * b.inverse();
    }

    Scalar operator-() const {
        if (const auto* r = std::get_if<Rational>(&v_)) return Scalar(-*r);
        if (const auto* g = std::get_if<GaussianRational>(&v_)) return Scalar(-*g);
        return Scalar(-std::get<std::complex<double>>(v_));
    }

    Scalar inverse() const {
        if (const auto* r = std::get_if<Rational>(&v_)) return Scalar(r->inverse());
        if (const auto* g = std::get_if<GaussianRational>(&v_)) return Scalar(g->inverse());
        auto z = std::get<std::complex<double>>(v_);
        if (z == 0.0) throw DomainError("inverse of zero scalar");
        return Scalar(1.0 / z);
    }

    /// Integer power; negative exponents invert first (error on zero).
    Scalar pow(std::int64_t k) const {
        if (const auto* r = std::get_if<Rational>(&v_)) return Scalar(r->pow(k));
        if (const auto* g = std::get_if<GaussianRational>(&v_)) return Scalar(g->pow(k));
        auto z = std::get<std::complex<double>>(v_);
        if (z == 0.0 && k < 0) throw DomainError("negative power of zero scalar");
        return Scalar(std::pow(z, static_cast<double>(k)));
    }

    /// Exact in the exact towers; values from different exactness classes
    /// are never equal.
    friend bool operator==(const Scalar& a, const Scalar& b) {
        if (a.is_exact() != b.is_exact()) return false;
        if (!a.is_exact())
            return std::get<std::complex<double>>(a.v_) ==
                   std::get<std::complex<double>>(b.v_);
        if (a.v_.index() != b.v_.index()) return false;
        if (const auto* r = std::get_if<Rational>(&a.v_))
            return *r == std::get<Rational>(b.v_);
        return std::get<GaussianRational>(a.v_) == std::get<GaussianRational>(b.v_);
    }

    friend bool operator!=(const Scalar& a, const Scalar& b) { return !(a == b); }

    /// "p/q" for rationals, "a/b+c/d*i" for Gaussian rationals,
    /// "(re,im)" for approximate values.
    std::string to_string() const {
        if (const auto* r = std::get_if<Rational>(&v_)) return r->to_string();
        if (const auto* g = std::get_if<GaussianRational>(&v_)) return g->to_string();
        auto z = std::get<std::complex<double>>(v_);
        return "(" + std::to_string(z.real()) + "," + std::to_string(z.imag()) + ")";
    }

    /// Parses the canonical exact forms emitted by to_string:
    /// "p", "p/q", "a+b*i", "a-b*i" (components themselves "p" or "p/q").
    static Scalar from_string(const std::string& s) {
        if (s.empty()) throw DomainError("empty scalar literal");
        // Split at the sign separating re from im, skipping the leading sign.
        std::size_t split = std::string::npos;
        for (std::size_t pos = 1; pos < s.size(); ++pos) {
            if (s[pos] == '+' || s[pos] == '-') {
                split = pos;
                break;
            }
        }
        if (s.size() >= 2 && s.compare(s.size() - 2, 2, "*i") == 0) {
            std::string imag = s.substr(0, s.size() - 2);
            std::string real = "0";
            if (split != std::string::npos) {
                real = s.substr(0, split);
                imag = s[split] == '-' ? "-" + s.substr(split + 1, s.size() - split - 3)
                                       : s.substr(split + 1, s.size() - split - 3);
            }
            return Scalar(GaussianRational(Rational::from_string(real),
                                           Rational::from_string(imag)));
        }
        return Scalar(Rational::from_string(s));
    }

    std::size_t hash() const {
        if (const auto* r = std::get_if<Rational>(&v_)) return r->hash();
        if (const auto* g = std::get_if<GaussianRational>(&v_)) return g->hash();
        auto z = std::get<std::complex<double>>(v_);
        return std::hash<double>{}(z.real()) ^ (std::hash<double>{}(z.imag()) << 1);
    }

private:
    template <typename Op>
    static Scalar combine(const Scalar& a, const Scalar& b, Op op) {
        if (a.is_exact() != b.is_exact())
            throw DomainError("scalar tower mismatch: exact vs approximate");
        if (!a.is_exact())
            return Scalar(op(std::get<std::complex<double>>(a.v_),
                             std::get<std::complex<double>>(b.v_)));
        if (a.v_.index() == 0 && b.v_.index() == 0)
            return Scalar(op(std::get<Rational>(a.v_), std::get<Rational>(b.v_)));
        return Scalar(op(a.gaussian(), b.gaussian()));
    }

    std::variant<Rational, GaussianRational, std::complex<double>> v_;
};

} // namespace lgpot
