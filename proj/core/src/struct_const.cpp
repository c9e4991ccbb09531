#include "lgpot/struct_const.hpp"

#include <algorithm>
#include <map>

#include "lgpot/linalg.hpp"

namespace lgpot {

PotentialFamily::PotentialFamily(LaurentPoly w, std::vector<LaurentPoly> h,
                                 std::string label)
    : W(std::move(w)), higher(std::move(h)), divisor_label(std::move(label)) {
    if (higher.empty()) throw DomainError("potential family needs at least W_0");
    for (const auto& p : higher) {
        if (p.vars() != W.vars())
            throw DomainError("family entries must share the variable list");
        if (!p.is_exact())
            throw DomainError("family entries must have exact coefficients");
    }
    if (!W.is_exact()) throw DomainError("potential must have exact coefficients");
    if (higher[0] != LaurentPoly::one(W.vars()))
        throw DomainError("W_0 must be the constant 1");
    if (higher.size() >= 2 && higher[1] != W)
        throw DomainError("higher[1] must equal W");
}

StructureConstants::StructureConstants(std::uint32_t k_, std::vector<Scalar> c_)
    : k(k_), c(std::move(c_)) {
    if (k == 0) throw DomainError("structure constants need k >= 1");
    if (c.size() != k) throw DomainError("structure constant list must have length k");
    for (const auto& v : c)
        if (!v.is_exact()) throw DomainError("structure constants must be exact");
}

namespace {

// Rows of the solve are indexed by the union of the supports, in ascending
// lexicographic order; this fixes the pivoting deterministically.
std::vector<ExpVec> support_union(const std::vector<const LaurentPoly*>& polys) {
    std::map<ExpVec, bool> seen;
    for (const auto* p : polys)
        for (const auto& [e, c] : p->terms()) seen.emplace(e, true);
    std::vector<ExpVec> out;
    out.reserve(seen.size());
    for (const auto& [e, b] : seen) out.push_back(e);
    return out;
}

} // namespace

StructureConstants extract_structure_constants(const PotentialFamily& fam,
                                               std::uint32_t k) {
    if (k == 0) throw DomainError("extraction needs k >= 1");
    if (fam.higher.size() <= k)
        throw DomainError("family index out of range: needs entries 0.." +
                          std::to_string(k));

    LaurentPoly rhs = fam.W.pow(k) - fam.higher[k];

    std::vector<const LaurentPoly*> basis;
    basis.reserve(k + 1);
    for (std::uint32_t i = 0; i < k; ++i) basis.push_back(&fam.higher[i]);
    basis.push_back(&rhs);
    std::vector<ExpVec> rows = support_union(basis);

    ScalarMatrix a(rows.size(), k);
    std::vector<Scalar> b(rows.size(), Scalar(0));
    for (std::size_t r = 0; r < rows.size(); ++r) {
        for (std::uint32_t i = 0; i < k; ++i) a.set(r, i, fam.higher[i].coeff(rows[r]));
        b[r] = rhs.coeff(rows[r]);
    }

    return StructureConstants(k, solve_exact(a, b));
}

LaurentPoly synthesize_higher_potential(const PotentialFamily& prefix,
                                        std::uint32_t k,
                                        const StructureConstants& c) {
    if (c.k != k || c.c.size() != k)
        throw DomainError("structure constant length does not match k");
    if (prefix.higher.size() < k)
        throw DomainError("family prefix needs entries 0.." + std::to_string(k - 1));
    LaurentPoly out = prefix.W.pow(k);
    for (std::uint32_t i = 0; i < k; ++i)
        out = out - prefix.higher[i].scalar_mul(c.c[i]);
    return out;
}

bool verify_power_identity(const PotentialFamily& fam, std::uint32_t k,
                           const StructureConstants& c) {
    if (c.k != k || c.c.size() != k)
        throw DomainError("structure constant length does not match k");
    if (fam.higher.size() <= k)
        throw DomainError("family index out of range: needs entries 0.." +
                          std::to_string(k));
    LaurentPoly residual = fam.W.pow(k) - fam.higher[k];
    for (std::uint32_t i = 0; i < k; ++i)
        residual = residual - fam.higher[i].scalar_mul(c.c[i]);
    return residual.is_zero();
}

} // namespace lgpot
