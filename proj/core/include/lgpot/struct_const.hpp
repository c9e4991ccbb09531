#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "lgpot/laurent.hpp"
#include "lgpot/scalar.hpp"

namespace lgpot {

/// A potential together with its higher disk potentials
/// [W_0, W_1, ..., W_K], where W_0 = 1 by convention and W_1 = W.
///
/// Families are tagged with a free-text divisor label; potentials from
/// different divisors should never be mixed in one family.
struct PotentialFamily {
    LaurentPoly W;
    std::vector<LaurentPoly> higher;
    std::string divisor_label;

    PotentialFamily(LaurentPoly w, std::vector<LaurentPoly> h, std::string label = "");
};

/// The coefficients (c_{0,k}, ..., c_{k-1,k}) expressing the k-th product
/// power of the degree-zero generator in the geometric basis.
struct StructureConstants {
    std::uint32_t k;
    std::vector<Scalar> c;

    StructureConstants(std::uint32_t k_, std::vector<Scalar> c_);
};

/// Solves W^k = higher[k] + sum_i c_i * higher[i] for the unique exact c,
/// as a linear system over the union of supports. Throws SolveError when
/// the system is inconsistent or underdetermined (reporting the solution
/// space dimension), DomainError when the family lacks entries 0..k.
StructureConstants extract_structure_constants(const PotentialFamily& fam,
                                               std::uint32_t k);

/// W^k - sum_i c_i * higher[i], the higher potential the constants imply.
/// Uses entries 0..k-1 of the family; round-trips with extraction.
LaurentPoly synthesize_higher_potential(const PotentialFamily& prefix,
                                        std::uint32_t k,
                                        const StructureConstants& c);

/// True iff W^k - higher[k] - sum_i c_i * higher[i] vanishes identically.
bool verify_power_identity(const PotentialFamily& fam, std::uint32_t k,
                           const StructureConstants& c);

} // namespace lgpot
