#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "lgpot/laurent.hpp"
#include "lgpot/rational.hpp"

namespace lgpot {

/// Exact division in the polynomial ring (nonnegative exponents):
/// returns f / s when s divides f exactly, nothing otherwise.
/// Leading terms are taken in lexicographic order.
std::optional<LaurentPoly> poly_divide_exact(const LaurentPoly& f, const LaurentPoly& s);

/// True when every exponent in the support is nonnegative, i.e. the value
/// lies in the polynomial subring of the Laurent ring.
bool is_polynomial(const LaurentPoly& f);

/// A free commutative polynomial algebra C[g_1, ..., g_r] localized at a
/// single element s. Relations beyond the localization are not supported
/// and are rejected at construction. The optional grading is metadata
/// only; no graded condition is enforced.
class LocalizedAlgebra {
public:
    LocalizedAlgebra(std::vector<std::string> gens, LaurentPoly inverted,
                     std::vector<Rational> grading = {});

    const std::vector<std::string>& gens() const { return gens_; }
    const LaurentPoly& inverted() const { return inverted_; }
    const std::vector<Rational>& grading() const { return grading_; }

    /// True when nothing is localized (s = 1).
    bool trivial_localization() const;

private:
    std::vector<std::string> gens_;
    LaurentPoly inverted_;
    std::vector<Rational> grading_;
};

/// An element numerator / s^denom_power, in canonical form: every factor
/// of s detectable by exact polynomial division has been stripped from
/// the numerator, so equality is componentwise.
struct AlgebraElement {
    LaurentPoly numerator;
    std::uint32_t denom_power;

    friend bool operator==(const AlgebraElement& a, const AlgebraElement& b) {
        return a.denom_power == b.denom_power && a.numerator == b.numerator;
    }
};

/// Canonicalizing constructor for elements of the given algebra.
AlgebraElement make_element(const LocalizedAlgebra& alg, LaurentPoly numerator,
                            std::uint32_t denom_power);

AlgebraElement element_add(const LocalizedAlgebra& alg, const AlgebraElement& a,
                           const AlgebraElement& b);
AlgebraElement element_mul(const LocalizedAlgebra& alg, const AlgebraElement& a,
                           const AlgebraElement& b);

/// e^k in canonical form.
AlgebraElement power_in_algebra(const LocalizedAlgebra& alg, const AlgebraElement& e,
                                std::uint32_t k);

/// A homomorphism from a localized algebra to a Laurent ring, given by
/// one image per generator. Run hom_check before applying.
struct AlgebraHom {
    std::vector<std::string> target_vars;
    std::vector<LaurentPoly> images;
};

/// True iff the image of the localized element s is a unit of the Laurent
/// ring (a single term with nonzero coefficient), which is the only
/// condition a hom out of a free localized algebra must satisfy.
bool hom_check(const LocalizedAlgebra& alg, const AlgebraHom& h);

/// Substitutes generator images into the numerator and divides by
/// image(s)^denom_power (exact division by a unit). Requires hom_check.
LaurentPoly apply_hom(const LocalizedAlgebra& alg, const AlgebraHom& h,
                      const AlgebraElement& e);

/// The closed-open diagram check: apply_hom(bs) == d * W, exactly.
bool closed_open_bs_check(const LocalizedAlgebra& alg, const AlgebraHom& h,
                          const AlgebraElement& bs, std::uint32_t d,
                          const LaurentPoly& w);

} // namespace lgpot
