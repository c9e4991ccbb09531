#include "lgpot/laurent.hpp"

#include <algorithm>
#include <limits>
#include <memory>

#include <gmp.h>

namespace lgpot {

namespace {

std::int64_t checked_add(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_add_overflow(a, b, &r)) throw OverflowError("exponent overflow in add");
    return r;
}

std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_mul_overflow(a, b, &r)) throw OverflowError("exponent overflow in mul");
    return r;
}

void require_vars(const std::vector<std::string>& vars) {
    if (vars.empty()) throw DomainError("variable list must be nonempty");
    for (std::size_t i = 0; i < vars.size(); ++i)
        for (std::size_t j = i + 1; j < vars.size(); ++j)
            if (vars[i] == vars[j])
                throw DomainError("duplicate variable name '" + vars[i] + "'");
}

} // namespace

ExpVec exp_add(const ExpVec& a, const ExpVec& b) {
    if (a.size() != b.size()) throw DomainError("exponent vector length mismatch");
    ExpVec r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = checked_add(a[i], b[i]);
    return r;
}

std::int64_t exp_dot(const ExpVec& a, const ExpVec& d) {
    if (a.size() != d.size()) throw DomainError("exponent vector length mismatch");
    std::int64_t acc = 0;
    for (std::size_t i = 0; i < a.size(); ++i)
        acc = checked_add(acc, checked_mul(a[i], d[i]));
    return acc;
}

LaurentPoly::LaurentPoly(std::vector<std::string> vars) : vars_(std::move(vars)) {
    require_vars(vars_);
}

LaurentPoly LaurentPoly::constant(std::vector<std::string> vars, Scalar c) {
    LaurentPoly f(std::move(vars));
    f.add_term(ExpVec(f.vars_.size(), 0), c);
    return f;
}

LaurentPoly LaurentPoly::monomial(std::vector<std::string> vars, ExpVec exp, Scalar c) {
    LaurentPoly f(std::move(vars));
    if (exp.size() != f.vars_.size())
        throw DomainError("exponent vector length does not match variable count");
    f.add_term(exp, c);
    return f;
}

LaurentPoly LaurentPoly::variable(std::vector<std::string> vars, std::size_t i) {
    LaurentPoly f(std::move(vars));
    if (i >= f.vars_.size()) throw DomainError("variable index out of range");
    ExpVec e(f.vars_.size(), 0);
    e[i] = 1;
    f.add_term(e, Scalar(1));
    return f;
}

Scalar LaurentPoly::coeff(const ExpVec& e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? Scalar(0) : it->second;
}

std::vector<std::pair<ExpVec, Scalar>> LaurentPoly::sorted_terms() const {
    std::vector<std::pair<ExpVec, Scalar>> out(terms_.begin(), terms_.end());
    std::sort(out.begin(), out.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    return out;
}

void LaurentPoly::add_term(const ExpVec& e, const Scalar& c) {
    if (e.size() != vars_.size())
        throw DomainError("exponent vector length does not match variable count");
    if (c.is_zero()) return;
    if (!terms_.empty() && c.is_exact() != exact_)
        throw DomainError("scalar tower mismatch: exact and approximate "
                          "coefficients in one polynomial");
    if (terms_.empty()) exact_ = c.is_exact();
    auto it = terms_.find(e);
    if (it == terms_.end()) {
        terms_.emplace(e, c);
        return;
    }
    Scalar sum = it->second + c;
    if (sum.is_zero())
        terms_.erase(it);
    else
        it->second = sum;
    if (terms_.empty()) exact_ = true;
}

void LaurentPoly::require_same_shape(const LaurentPoly& other) const {
    if (vars_ != other.vars_)
        throw DomainError("variable list mismatch");
    if (!is_zero() && !other.is_zero() && exact_ != other.exact_)
        throw DomainError("scalar tower mismatch: exact vs approximate operands");
}

LaurentPoly operator+(const LaurentPoly& f, const LaurentPoly& g) {
    f.require_same_shape(g);
    LaurentPoly r = f;
    for (const auto& [e, c] : g.terms_) r.add_term(e, c);
    return r;
}

LaurentPoly operator-(const LaurentPoly& f, const LaurentPoly& g) {
    f.require_same_shape(g);
    LaurentPoly r = f;
    for (const auto& [e, c] : g.terms_) r.add_term(e, -c);
    return r;
}

LaurentPoly LaurentPoly::operator-() const {
    LaurentPoly r(vars_);
    for (const auto& [e, c] : terms_) r.add_term(e, -c);
    return r;
}

LaurentPoly operator*(const LaurentPoly& f, const LaurentPoly& g) {
    f.require_same_shape(g);
    LaurentPoly r(f.vars_);
    for (const auto& [ef, cf] : f.terms_)
        for (const auto& [eg, cg] : g.terms_)
            r.add_term(exp_add(ef, eg), cf * cg);
    return r;
}

LaurentPoly LaurentPoly::scalar_mul(const Scalar& c) const {
    LaurentPoly r(vars_);
    for (const auto& [e, coeff] : terms_) r.add_term(e, coeff * c);
    return r;
}

LaurentPoly LaurentPoly::pow(std::uint32_t k) const {
    LaurentPoly acc = one(vars_);
    LaurentPoly base = *this;
    while (k != 0) {
        if (k & 1u) acc = acc * base;
        k >>= 1u;
        if (k != 0) base = base * base;
    }
    return acc;
}

Scalar LaurentPoly::eval(const TwistData& rho) const {
    if (rho.size() != vars_.size())
        throw DomainError("local system length does not match variable count");
    Scalar acc(0);
    for (const auto& [e, c] : terms_) {
        Scalar term = c;
        for (std::size_t i = 0; i < e.size(); ++i)
            if (e[i] != 0) term = term * rho.at(i).pow(e[i]);
        acc = acc + term;
    }
    return acc;
}

std::complex<double> LaurentPoly::eval_approx(
    const std::vector<std::complex<double>>& rho) const {
    if (rho.size() != vars_.size())
        throw DomainError("local system length does not match variable count");
    for (const auto& z : rho)
        if (z == 0.0) throw DomainError("zero entry in local system");
    std::complex<double> acc = 0.0;
    for (const auto& [e, c] : terms_) {
        std::complex<double> term = c.to_complex();
        for (std::size_t i = 0; i < e.size(); ++i)
            if (e[i] != 0) term *= std::pow(rho[i], static_cast<double>(e[i]));
        acc += term;
    }
    return acc;
}

LaurentPoly LaurentPoly::change_basis(const UnimodularMatrix& a) const {
    if (a.dim() != vars_.size())
        throw DomainError("matrix dimension does not match variable count");
    LaurentPoly r(vars_);
    for (const auto& [e, c] : terms_) r.add_term(a.apply_transpose(e), c);
    return r;
}

Scalar LaurentPoly::constant_term() const {
    return coeff(ExpVec(vars_.size(), 0));
}

bool LaurentPoly::is_constant() const {
    for (const auto& [e, c] : terms_)
        for (std::int64_t x : e)
            if (x != 0) return false;
    return true;
}

std::pair<std::int64_t, std::int64_t> LaurentPoly::degree_along(const ExpVec& d) const {
    if (is_zero()) throw DomainError("degree_along of the zero polynomial");
    if (d.size() != vars_.size())
        throw DomainError("direction length does not match variable count");
    bool first = true;
    std::int64_t lo = 0, hi = 0;
    for (const auto& [e, c] : terms_) {
        std::int64_t v = exp_dot(e, d);
        if (first) {
            lo = hi = v;
            first = false;
        } else {
            lo = std::min(lo, v);
            hi = std::max(hi, v);
        }
    }
    return {lo, hi};
}

LaurentPoly LaurentPoly::unit_inverse() const {
    if (!is_unit()) throw DomainError("inverse of a non-unit Laurent polynomial");
    const auto& [e, c] = *terms_.begin();
    ExpVec inv(e.size());
    for (std::size_t i = 0; i < e.size(); ++i) {
        if (e[i] == std::numeric_limits<std::int64_t>::min())
            throw OverflowError("exponent overflow in unit inverse");
        inv[i] = -e[i];
    }
    return monomial(vars_, inv, c.inverse());
}

// ---------------------------------------------------------------------------

namespace {

// Exact determinant by fraction-free (Bareiss) elimination over GMP integers.
int unimodular_det_sign(const std::vector<std::int64_t>& a, std::size_t m) {
    std::unique_ptr<mpz_t[]> w(new mpz_t[m * m]);
    for (std::size_t i = 0; i < m * m; ++i) mpz_init_set_si(w[i], a[i]);
    auto at = [&](std::size_t i, std::size_t j) -> mpz_t& { return w[i * m + j]; };

    int sign = 1;
    mpz_t prev, t;
    mpz_init_set_ui(prev, 1);
    mpz_init(t);
    bool singular = false;
    for (std::size_t k = 0; k + 1 < m && !singular; ++k) {
        if (mpz_sgn(at(k, k)) == 0) {
            std::size_t p = k + 1;
            while (p < m && mpz_sgn(at(p, k)) == 0) ++p;
            if (p == m) {
                singular = true;
                break;
            }
            for (std::size_t j = 0; j < m; ++j) mpz_swap(at(k, j), at(p, j));
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < m; ++i) {
            for (std::size_t j = k + 1; j < m; ++j) {
                mpz_mul(t, at(i, j), at(k, k));
                mpz_submul(t, at(i, k), at(k, j));
                mpz_divexact(at(i, j), t, prev);
            }
            mpz_set_ui(at(i, k), 0);
        }
        mpz_set(prev, at(k, k));
    }

    int result = 0; // 0 = not unimodular
    if (!singular) {
        mpz_t& det = at(m - 1, m - 1);
        if (mpz_cmp_si(det, 1) == 0)
            result = sign;
        else if (mpz_cmp_si(det, -1) == 0)
            result = -sign;
    }
    mpz_clear(prev);
    mpz_clear(t);
    for (std::size_t i = 0; i < m * m; ++i) mpz_clear(w[i]);
    return result;
}

} // namespace

UnimodularMatrix::UnimodularMatrix(std::vector<std::vector<std::int64_t>> rows) {
    m_ = rows.size();
    if (m_ == 0) throw DomainError("empty matrix");
    a_.reserve(m_ * m_);
    for (const auto& row : rows) {
        if (row.size() != m_) throw DomainError("matrix is not square");
        a_.insert(a_.end(), row.begin(), row.end());
    }
    if (unimodular_det_sign(a_, m_) == 0)
        throw DomainError("matrix is not unimodular (determinant is not +1 or -1)");
}

UnimodularMatrix UnimodularMatrix::identity(std::size_t m) {
    if (m == 0) throw DomainError("empty matrix");
    UnimodularMatrix r;
    r.m_ = m;
    r.a_.assign(m * m, 0);
    for (std::size_t i = 0; i < m; ++i) r.a_[i * m + i] = 1;
    return r;
}

ExpVec UnimodularMatrix::apply_transpose(const ExpVec& l) const {
    if (l.size() != m_) throw DomainError("exponent vector length mismatch");
    ExpVec r(m_, 0);
    for (std::size_t j = 0; j < m_; ++j) {
        std::int64_t acc = 0;
        for (std::size_t i = 0; i < m_; ++i)
            acc = checked_add(acc, checked_mul(at(i, j), l[i]));
        r[j] = acc;
    }
    return r;
}

UnimodularMatrix compose(const UnimodularMatrix& a, const UnimodularMatrix& b) {
    if (a.m_ != b.m_) throw DomainError("matrix dimension mismatch");
    UnimodularMatrix r;
    r.m_ = a.m_;
    r.a_.assign(a.m_ * a.m_, 0);
    for (std::size_t i = 0; i < a.m_; ++i)
        for (std::size_t j = 0; j < a.m_; ++j) {
            std::int64_t acc = 0;
            for (std::size_t k = 0; k < a.m_; ++k)
                acc = checked_add(acc, checked_mul(a.at(i, k), b.at(k, j)));
            r.a_[i * r.m_ + j] = acc;
        }
    return r;
}

TwistData UnimodularMatrix::induced_twist(const TwistData& rho) const {
    if (rho.size() != m_) throw DomainError("local system length mismatch");
    std::vector<Scalar> out;
    out.reserve(m_);
    for (std::size_t i = 0; i < m_; ++i) {
        Scalar v(1);
        for (std::size_t j = 0; j < m_; ++j)
            if (at(i, j) != 0) v = v * rho.at(j).pow(at(i, j));
        out.push_back(v);
    }
    return TwistData(std::move(out));
}

TwistData::TwistData(std::vector<Scalar> lambda) : lambda_(std::move(lambda)) {
    if (lambda_.empty()) throw DomainError("empty local system");
    for (const auto& l : lambda_) {
        if (!l.is_exact())
            throw DomainError("local system monodromies must be exact scalars");
        if (l.is_zero()) throw DomainError("zero entry in local system");
    }
}

bool TwistData::is_trivial() const {
    for (const auto& l : lambda_)
        if (!l.is_one()) return false;
    return true;
}

TwistData TwistData::ratio(const TwistData& other) const {
    if (size() != other.size()) throw DomainError("local system length mismatch");
    std::vector<Scalar> out;
    out.reserve(size());
    for (std::size_t i = 0; i < size(); ++i)
        out.push_back(lambda_[i] / other.lambda_[i]);
    return TwistData(std::move(out));
}

} // namespace lgpot
