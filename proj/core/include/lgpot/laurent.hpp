#pragma once

#include <complex>
#include <cstdint>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "lgpot/error.hpp"
#include "lgpot/scalar.hpp"

namespace lgpot {

/// Exponent vector in Z^m. Entries are machine words; arithmetic that
/// would leave the representable range raises OverflowError instead of
/// wrapping. Comparisons are lexicographic.
using ExpVec = std::vector<std::int64_t>;

struct ExpVecHash {
    std::size_t operator()(const ExpVec& e) const noexcept {
        std::size_t h = 0x8f3a91c27b64d1e5ull;
        for (std::int64_t x : e)
            h ^= static_cast<std::size_t>(x) + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
        return h;
    }
};

/// a + b, per component, overflow-checked.
ExpVec exp_add(const ExpVec& a, const ExpVec& b);

/// <a, d>, overflow-checked.
std::int64_t exp_dot(const ExpVec& a, const ExpVec& d);

class UnimodularMatrix;
class TwistData;

/// Sparse multivariate Laurent polynomial over an ordered variable list,
/// with exact (or, for evaluation pipelines, approximate) coefficients.
///
/// Canonical form invariants, maintained by every operation:
///   - no stored coefficient is zero;
///   - every exponent vector has length vars().size();
///   - exact and approximate coefficients never mix in one polynomial.
/// Equality is therefore term-map equality.
class LaurentPoly {
public:
    using TermMap = std::unordered_map<ExpVec, Scalar, ExpVecHash>;

    /// The zero polynomial over the given variables.
    explicit LaurentPoly(std::vector<std::string> vars);

    static LaurentPoly constant(std::vector<std::string> vars, Scalar c);
    static LaurentPoly one(std::vector<std::string> vars) {
        return constant(std::move(vars), Scalar(1));
    }
    static LaurentPoly monomial(std::vector<std::string> vars, ExpVec exp, Scalar c);
    /// The i-th variable as a polynomial.
    static LaurentPoly variable(std::vector<std::string> vars, std::size_t i);

    const std::vector<std::string>& vars() const { return vars_; }
    const TermMap& terms() const { return terms_; }
    std::size_t num_terms() const { return terms_.size(); }
    bool is_zero() const { return terms_.empty(); }

    /// True when every coefficient is exact (vacuously true for 0).
    bool is_exact() const { return exact_; }

    /// Coefficient of the given exponent vector, 0 if absent.
    Scalar coeff(const ExpVec& e) const;

    /// Terms sorted lexicographically by exponent vector (ascending):
    /// the canonical order for serialization.
    std::vector<std::pair<ExpVec, Scalar>> sorted_terms() const;

    friend LaurentPoly operator+(const LaurentPoly& f, const LaurentPoly& g);
    friend LaurentPoly operator-(const LaurentPoly& f, const LaurentPoly& g);
    friend LaurentPoly operator*(const LaurentPoly& f, const LaurentPoly& g);
    LaurentPoly operator-() const;

    LaurentPoly scalar_mul(const Scalar& c) const;

    /// f^k for k >= 0 by binary exponentiation; agrees exactly with
    /// iterated multiplication.
    LaurentPoly pow(std::uint32_t k) const;

    /// Exact evaluation at a local system: sum of coeff(l) * prod rho_i^{l_i}.
    Scalar eval(const TwistData& rho) const;

    /// Double-precision evaluation; the explicit approximate mode.
    std::complex<double> eval_approx(const std::vector<std::complex<double>>& rho) const;

    /// GL(m,Z) substitution x_i -> prod_j x_j^{a_ij}; exponent vectors map
    /// by l -> A^T l. A ring automorphism preserving the term count.
    LaurentPoly change_basis(const UnimodularMatrix& a) const;

    /// Coefficient of the zero exponent vector.
    Scalar constant_term() const;

    /// True iff the support is contained in {0}.
    bool is_constant() const;

    /// (min, max) of <l, d> over the support; rejects the zero polynomial.
    std::pair<std::int64_t, std::int64_t> degree_along(const ExpVec& d) const;

    /// True when the polynomial is a unit of the Laurent ring: exactly one
    /// term, with (necessarily) nonzero coefficient.
    bool is_unit() const { return terms_.size() == 1; }

    /// Inverse of a unit; throws for non-units.
    LaurentPoly unit_inverse() const;

    friend bool operator==(const LaurentPoly& f, const LaurentPoly& g) {
        return f.vars_ == g.vars_ && f.terms_ == g.terms_;
    }
    friend bool operator!=(const LaurentPoly& f, const LaurentPoly& g) {
        return !(f == g);
    }

    /// Merges c * x^e into the term map, dropping the term if the sum
    /// cancels. The only mutating operation; construction-time use only.
    void add_term(const ExpVec& e, const Scalar& c);

private:
    void require_same_shape(const LaurentPoly& other) const;

    std::vector<std::string> vars_;
    TermMap terms_;
    bool exact_ = true;
};

/// m-by-m integer matrix with determinant +1 or -1, the basis-change
/// action on H_1. Determinant is verified exactly at construction.
class UnimodularMatrix {
public:
    explicit UnimodularMatrix(std::vector<std::vector<std::int64_t>> rows);

    static UnimodularMatrix identity(std::size_t m);

    std::size_t dim() const { return m_; }
    std::int64_t at(std::size_t i, std::size_t j) const { return a_[i * m_ + j]; }

    /// A^T l, overflow-checked: the action on exponent vectors.
    ExpVec apply_transpose(const ExpVec& l) const;

    /// Matrix product; compose(A, B) is the matrix realizing
    /// change_basis(change_basis(f, A), B) == change_basis(f, compose(A, B)).
    friend UnimodularMatrix compose(const UnimodularMatrix& a, const UnimodularMatrix& b);

    /// Induced action on local systems: rho'_i = prod_j rho_j^{a_ij}.
    TwistData induced_twist(const TwistData& rho) const;

    friend bool operator==(const UnimodularMatrix& a, const UnimodularMatrix& b) {
        return a.m_ == b.m_ && a.a_ == b.a_;
    }

private:
    UnimodularMatrix() = default;

    std::size_t m_ = 0;
    std::vector<std::int64_t> a_;
};

/// A C*-local system on the m-torus: the vector of monodromies
/// (lambda_1, ..., lambda_m). Entries are exact and nonzero.
class TwistData {
public:
    explicit TwistData(std::vector<Scalar> lambda);

    std::size_t size() const { return lambda_.size(); }
    const Scalar& at(std::size_t i) const { return lambda_[i]; }
    const std::vector<Scalar>& entries() const { return lambda_; }

    /// All monodromies equal to 1 (the untwisted local system).
    bool is_trivial() const;

    /// Entrywise ratio rho_1 * rho_2^{-1}, the twist pairing two local
    /// systems on the same torus.
    TwistData ratio(const TwistData& other) const;

    friend bool operator==(const TwistData& a, const TwistData& b) {
        return a.lambda_ == b.lambda_;
    }

private:
    std::vector<Scalar> lambda_;
};

} // namespace lgpot
