#include "lgpot/wallcross.hpp"

#include <limits>

namespace lgpot {

RationalFunction::RationalFunction(LaurentPoly n, LaurentPoly d)
    : num(std::move(n)), den(std::move(d)) {
    if (num.vars() != den.vars()) throw DomainError("variable list mismatch");
    if (den.is_zero()) throw DomainError("rational function with zero denominator");
}

RationalFunction RationalFunction::from_poly(LaurentPoly p) {
    LaurentPoly one = LaurentPoly::one(p.vars());
    return RationalFunction(std::move(p), std::move(one));
}

bool rf_equals(const RationalFunction& a, const RationalFunction& b) {
    if (a.num.vars() != b.num.vars()) throw DomainError("variable list mismatch");
    return a.num * b.den == b.num * a.den;
}

RationalFunction rf_add(const RationalFunction& a, const RationalFunction& b) {
    return RationalFunction(a.num * b.den + b.num * a.den, a.den * b.den);
}

RationalFunction rf_mul(const RationalFunction& a, const RationalFunction& b) {
    return RationalFunction(a.num * b.num, a.den * b.den);
}

RationalFunction rf_neg(const RationalFunction& a) {
    return RationalFunction(-a.num, a.den);
}

SubstitutionMap::SubstitutionMap(std::vector<std::string> source_vars,
                                 std::vector<std::string> target_vars,
                                 std::vector<SubstEntry> entries)
    : source_vars_(std::move(source_vars)), target_vars_(std::move(target_vars)),
      entries_(std::move(entries)) {
    if (source_vars_.empty() || target_vars_.empty())
        throw DomainError("substitution map needs nonempty variable lists");
    if (entries_.size() != source_vars_.size())
        throw DomainError("one substitution entry per source variable required");
    for (const auto& e : entries_) {
        if (e.mono_exp.size() != target_vars_.size())
            throw DomainError("monomial exponent arity mismatch");
        if (!e.mono_coeff.is_exact() || e.mono_coeff.is_zero())
            throw DomainError("monomial coefficient must be exact and nonzero");
        if (e.binomial) {
            if (e.binomial->second.size() != target_vars_.size())
                throw DomainError("binomial exponent arity mismatch");
            if (!e.binomial->first.is_exact() || e.binomial->first.is_zero())
                throw DomainError("binomial coefficient must be exact and nonzero");
        } else if (e.power != 0) {
            throw DomainError("nonzero power requires a binomial base");
        }
    }
}

SubstitutionMap SubstitutionMap::identity(std::vector<std::string> vars) {
    std::vector<SubstEntry> entries;
    entries.reserve(vars.size());
    for (std::size_t i = 0; i < vars.size(); ++i) {
        ExpVec e(vars.size(), 0);
        e[i] = 1;
        entries.push_back(SubstEntry{Scalar(1), e, std::nullopt, 0});
    }
    return SubstitutionMap(vars, vars, std::move(entries));
}

namespace {

LaurentPoly binomial_base(const std::vector<std::string>& vars, const SubstEntry& e) {
    LaurentPoly b = LaurentPoly::one(vars);
    b.add_term(e.binomial->second, e.binomial->first);
    return b;
}

std::int64_t checked_mul64(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_mul_overflow(a, b, &r))
        throw OverflowError("exponent overflow in substitution");
    return r;
}

std::uint32_t to_u32(std::int64_t v) {
    if (v < 0 || v > std::numeric_limits<std::uint32_t>::max())
        throw OverflowError("binomial power too large");
    return static_cast<std::uint32_t>(v);
}

} // namespace

RationalFunction SubstitutionMap::image(std::size_t i) const {
    if (i >= entries_.size()) throw DomainError("variable index out of range");
    const SubstEntry& e = entries_[i];
    LaurentPoly mono = LaurentPoly::monomial(target_vars_, e.mono_exp, e.mono_coeff);
    if (!e.binomial || e.power == 0) return RationalFunction::from_poly(mono);
    LaurentPoly base = binomial_base(target_vars_, e);
    if (e.power > 0)
        return RationalFunction::from_poly(mono * base.pow(to_u32(e.power)));
    return RationalFunction(mono, base.pow(to_u32(-e.power)));
}

TwistData SubstitutionMap::eval_at(const TwistData& rho) const {
    if (rho.size() != target_vars_.size())
        throw DomainError("local system length does not match target chart");
    std::vector<Scalar> out;
    out.reserve(entries_.size());
    for (const auto& e : entries_) {
        Scalar v = e.mono_coeff;
        for (std::size_t j = 0; j < e.mono_exp.size(); ++j)
            if (e.mono_exp[j] != 0) v = v * rho.at(j).pow(e.mono_exp[j]);
        if (e.binomial && e.power != 0) {
            Scalar base(1);
            Scalar mono = e.binomial->first;
            for (std::size_t j = 0; j < e.binomial->second.size(); ++j)
                if (e.binomial->second[j] != 0)
                    mono = mono * rho.at(j).pow(e.binomial->second[j]);
            base = base + mono;
            if (base.is_zero())
                throw DomainError("binomial base vanishes at the given local system");
            v = v * base.pow(e.power);
        }
        if (v.is_zero())
            throw DomainError("substitution image vanishes at the given local system");
        out.push_back(v);
    }
    return TwistData(std::move(out));
}

RationalFunction substitute(const LaurentPoly& f, const SubstitutionMap& phi) {
    if (f.vars() != phi.source_vars())
        throw DomainError("polynomial variables do not match the substitution source");

    const auto& tvars = phi.target_vars();
    const auto& entries = phi.entries();
    const std::size_t m = entries.size();

    // Per term, the binomial exponent needed for variable i is power_i * l_i.
    // Negative totals go to a common denominator prod_i b_i^{N_i} with
    // N_i = max over terms of the deficit, so the sum needs no rational
    // function addition.
    auto term_binom_exp = [&](const ExpVec& l, std::size_t i) {
        return checked_mul64(entries[i].power, l[i]);
    };

    std::vector<std::int64_t> deficit(m, 0);
    for (const auto& [l, c] : f.terms())
        for (std::size_t i = 0; i < m; ++i) {
            std::int64_t k = term_binom_exp(l, i);
            if (k < 0) deficit[i] = std::max(deficit[i], -k);
        }

    LaurentPoly den = LaurentPoly::one(tvars);
    for (std::size_t i = 0; i < m; ++i)
        if (deficit[i] > 0)
            den = den * binomial_base(tvars, entries[i]).pow(to_u32(deficit[i]));

    LaurentPoly num(tvars);
    for (const auto& [l, c] : f.terms()) {
        Scalar coeff = c;
        ExpVec exp(tvars.size(), 0);
        for (std::size_t i = 0; i < m; ++i) {
            if (l[i] == 0) continue;
            coeff = coeff * entries[i].mono_coeff.pow(l[i]);
            for (std::size_t j = 0; j < exp.size(); ++j) {
                std::int64_t add = checked_mul64(entries[i].mono_exp[j], l[i]);
                if (__builtin_add_overflow(exp[j], add, &exp[j]))
                    throw OverflowError("exponent overflow in substitution");
            }
        }
        LaurentPoly term = LaurentPoly::monomial(tvars, exp, coeff);
        for (std::size_t i = 0; i < m; ++i) {
            std::int64_t k = term_binom_exp(l, i);
            // Lift by N_i - deficit(term) so all terms share the denominator.
            std::int64_t lift = deficit[i] + k;
            if (lift > 0)
                term = term * binomial_base(tvars, entries[i]).pow(to_u32(lift));
        }
        num = num + term;
    }
    return RationalFunction(std::move(num), std::move(den));
}

bool wall_crossing_check(const LaurentPoly& w0, const LaurentPoly& w1,
                         const SubstitutionMap& phi) {
    if (w0.vars() != phi.target_vars())
        throw DomainError("w0 must live in the substitution's target chart");
    return rf_equals(substitute(w1, phi), RationalFunction::from_poly(w0));
}

} // namespace lgpot
