#include "lgpot/algebra.hpp"

#include <algorithm>
#include <limits>

namespace lgpot {

bool is_polynomial(const LaurentPoly& f) {
    for (const auto& [e, c] : f.terms())
        for (std::int64_t x : e)
            if (x < 0) return false;
    return true;
}

namespace {

std::pair<ExpVec, Scalar> leading_term(const LaurentPoly& f) {
    auto it = f.terms().begin();
    std::pair<ExpVec, Scalar> best = *it;
    for (++it; it != f.terms().end(); ++it)
        if (best.first < it->first) best = *it;
    return best;
}

bool divides_componentwise(const ExpVec& small, const ExpVec& big) {
    for (std::size_t i = 0; i < small.size(); ++i)
        if (big[i] < small[i]) return false;
    return true;
}

} // namespace

std::optional<LaurentPoly> poly_divide_exact(const LaurentPoly& f, const LaurentPoly& s) {
    if (f.vars() != s.vars()) throw DomainError("variable list mismatch");
    if (s.is_zero()) throw DomainError("division by the zero polynomial");
    if (!is_polynomial(f) || !is_polynomial(s))
        throw DomainError("polynomial division requires nonnegative exponents");

    const auto [se, sc] = leading_term(s);
    LaurentPoly quotient(f.vars());
    LaurentPoly rem = f;
    while (!rem.is_zero()) {
        const auto [re, rc] = leading_term(rem);
        if (!divides_componentwise(se, re)) return std::nullopt;
        ExpVec qe(re.size());
        for (std::size_t i = 0; i < re.size(); ++i) qe[i] = re[i] - se[i];
        Scalar qc = rc / sc;
        quotient.add_term(qe, qc);
        rem = rem - s * LaurentPoly::monomial(f.vars(), qe, qc);
    }
    return quotient;
}

LocalizedAlgebra::LocalizedAlgebra(std::vector<std::string> gens, LaurentPoly inverted,
                                   std::vector<Rational> grading)
    : gens_(std::move(gens)), inverted_(std::move(inverted)),
      grading_(std::move(grading)) {
    if (gens_.empty()) throw DomainError("algebra needs at least one generator");
    for (std::size_t i = 0; i < gens_.size(); ++i)
        for (std::size_t j = i + 1; j < gens_.size(); ++j)
            if (gens_[i] == gens_[j])
                throw DomainError("duplicate generator name '" + gens_[i] + "'");
    if (inverted_.vars() != gens_)
        throw DomainError("localized element must be a polynomial in the generators");
    if (inverted_.is_zero()) throw DomainError("cannot localize at zero");
    if (!is_polynomial(inverted_))
        throw DomainError("localized element must have nonnegative exponents");
    if (!inverted_.is_exact())
        throw DomainError("localized element must have exact coefficients");
    if (!grading_.empty() && grading_.size() != gens_.size())
        throw DomainError("grading list must match the generator count");
}

bool LocalizedAlgebra::trivial_localization() const {
    return inverted_ == LaurentPoly::one(gens_);
}

AlgebraElement make_element(const LocalizedAlgebra& alg, LaurentPoly numerator,
                            std::uint32_t denom_power) {
    if (numerator.vars() != alg.gens())
        throw DomainError("element numerator must live over the generators");
    if (!is_polynomial(numerator))
        throw DomainError("element numerator must have nonnegative exponents");
    while (denom_power > 0) {
        auto q = poly_divide_exact(numerator, alg.inverted());
        if (!q) break;
        numerator = std::move(*q);
        --denom_power;
    }
    return AlgebraElement{std::move(numerator), denom_power};
}

AlgebraElement element_add(const LocalizedAlgebra& alg, const AlgebraElement& a,
                           const AlgebraElement& b) {
    // Bring to the larger denominator: x/s^j + y/s^k = (x s^{k-j} + y)/s^k.
    const AlgebraElement& lo = a.denom_power <= b.denom_power ? a : b;
    const AlgebraElement& hi = a.denom_power <= b.denom_power ? b : a;
    LaurentPoly lifted =
        lo.numerator * alg.inverted().pow(hi.denom_power - lo.denom_power);
    return make_element(alg, lifted + hi.numerator, hi.denom_power);
}

AlgebraElement element_mul(const LocalizedAlgebra& alg, const AlgebraElement& a,
                           const AlgebraElement& b) {
    std::uint64_t dp = std::uint64_t(a.denom_power) + b.denom_power;
    if (dp > std::numeric_limits<std::uint32_t>::max())
        throw OverflowError("denominator power overflow");
    return make_element(alg, a.numerator * b.numerator,
                        static_cast<std::uint32_t>(dp));
}

AlgebraElement power_in_algebra(const LocalizedAlgebra& alg, const AlgebraElement& e,
                                std::uint32_t k) {
    std::uint64_t dp = std::uint64_t(e.denom_power) * k;
    if (dp > std::numeric_limits<std::uint32_t>::max())
        throw OverflowError("denominator power overflow");
    return make_element(alg, e.numerator.pow(k), static_cast<std::uint32_t>(dp));
}

namespace {

LaurentPoly substitute_images(const LaurentPoly& numerator, const AlgebraHom& h) {
    LaurentPoly out(h.target_vars);
    for (const auto& [e, c] : numerator.terms()) {
        LaurentPoly term = LaurentPoly::constant(h.target_vars, c);
        for (std::size_t i = 0; i < e.size(); ++i) {
            if (e[i] == 0) continue;
            if (e[i] > std::numeric_limits<std::uint32_t>::max())
                throw OverflowError("generator exponent too large");
            term = term * h.images[i].pow(static_cast<std::uint32_t>(e[i]));
        }
        out = out + term;
    }
    return out;
}

void require_hom_shape(const LocalizedAlgebra& alg, const AlgebraHom& h) {
    if (h.images.size() != alg.gens().size())
        throw DomainError("one image per generator required");
    for (const auto& img : h.images)
        if (img.vars() != h.target_vars)
            throw DomainError("inconsistent variable lists among hom images");
}

} // namespace

bool hom_check(const LocalizedAlgebra& alg, const AlgebraHom& h) {
    require_hom_shape(alg, h);
    return substitute_images(alg.inverted(), h).is_unit();
}

LaurentPoly apply_hom(const LocalizedAlgebra& alg, const AlgebraHom& h,
                      const AlgebraElement& e) {
    if (!hom_check(alg, h))
        throw DomainError("hom_check failed: image of the localized element "
                          "is not a unit");
    LaurentPoly image = substitute_images(e.numerator, h);
    if (e.denom_power == 0) return image;
    LaurentPoly unit = substitute_images(alg.inverted(), h);
    return image * unit.unit_inverse().pow(e.denom_power);
}

bool closed_open_bs_check(const LocalizedAlgebra& alg, const AlgebraHom& h,
                          const AlgebraElement& bs, std::uint32_t d,
                          const LaurentPoly& w) {
    if (d == 0) throw DomainError("divisor degree d must be positive");
    return apply_hom(alg, h, bs) == w.scalar_mul(Scalar(static_cast<long>(d)));
}

} // namespace lgpot
