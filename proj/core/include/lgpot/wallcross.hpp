#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "lgpot/laurent.hpp"

namespace lgpot {

/// Exact fraction of Laurent polynomials. Denominators are never factored
/// or reduced; equality is by cross-multiplication.
struct RationalFunction {
    LaurentPoly num;
    LaurentPoly den;

    RationalFunction(LaurentPoly n, LaurentPoly d);
    static RationalFunction from_poly(LaurentPoly p);
};

bool rf_equals(const RationalFunction& a, const RationalFunction& b);

RationalFunction rf_add(const RationalFunction& a, const RationalFunction& b);
RationalFunction rf_mul(const RationalFunction& a, const RationalFunction& b);
RationalFunction rf_neg(const RationalFunction& a);

/// One coordinate of a mutation-shaped substitution:
///   x_i -> (coeff * y^mono_exp) * (1 + binom_coeff * y^binom_exp)^power
/// over the target variables. Without a binomial part the power must be 0
/// and the image is the bare monomial.
struct SubstEntry {
    Scalar mono_coeff;
    ExpVec mono_exp;
    std::optional<std::pair<Scalar, ExpVec>> binomial; // coeff, exponent
    std::int64_t power = 0;
};

/// A coordinate-wise monomial-times-binomial-power map between Laurent
/// charts, the shape arising in cluster-type mutations. General rational
/// substitutions are rejected.
class SubstitutionMap {
public:
    SubstitutionMap(std::vector<std::string> source_vars,
                    std::vector<std::string> target_vars,
                    std::vector<SubstEntry> entries);

    static SubstitutionMap identity(std::vector<std::string> vars);

    const std::vector<std::string>& source_vars() const { return source_vars_; }
    const std::vector<std::string>& target_vars() const { return target_vars_; }
    const std::vector<SubstEntry>& entries() const { return entries_; }

    /// The image of the i-th source variable as a rational function.
    RationalFunction image(std::size_t i) const;

    /// Pointwise action on local systems: evaluates every coordinate image
    /// at rho. Throws when a binomial base vanishes at rho or an image
    /// evaluates to zero.
    TwistData eval_at(const TwistData& rho) const;

private:
    std::vector<std::string> source_vars_;
    std::vector<std::string> target_vars_;
    std::vector<SubstEntry> entries_;
};

/// W composed with the substitution, as an exact rational function over
/// the target variables. Denominators collect the negative binomial
/// powers; the result is canonical up to cross-multiplication.
RationalFunction substitute(const LaurentPoly& f, const SubstitutionMap& phi);

/// The wall-crossing identity: substitute(w1, phi) == w0 as rational
/// functions, with phi mapping w1's chart into w0's.
bool wall_crossing_check(const LaurentPoly& w0, const LaurentPoly& w1,
                         const SubstitutionMap& phi);

} // namespace lgpot
