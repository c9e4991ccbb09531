#pragma once

#include <cstddef>
#include <vector>

#include "lgpot/laurent.hpp"
#include "lgpot/linalg.hpp"

namespace lgpot {

/// Ranks (b_0, ..., b_n) of a twisted complex. The alternating sum always
/// vanishes for n >= 1.
using BettiVector = std::vector<std::size_t>;

/// The Koszul complex of the n-torus twisted by a local system: the
/// exterior algebra on generators p_1..p_n with differential wedging by
/// xi = sum_i (lambda_i - 1) p_i.
///
/// Basis convention: wedge monomials p_S for S a subset of {1..n}, ordered
/// by (|S|, lexicographic on sorted element lists); the sign of p_i /\ p_S
/// is (-1)^(number of elements of S less than i).
///
/// d_{k+1} o d_k = 0 is verified exactly at construction.
class KoszulComplex {
public:
    KoszulComplex(std::size_t n, TwistData twist);

    std::size_t n() const { return n_; }
    const TwistData& twist() const { return twist_; }

    /// Matrix of d_k : Lambda^k -> Lambda^{k+1}, with C(n,k+1) rows and
    /// C(n,k) columns, for 0 <= k < n.
    const ScalarMatrix& differential(std::size_t k) const;

    /// b_k = C(n,k) - rank(d_k) - rank(d_{k-1}), computed exactly.
    BettiVector betti_numbers() const;

    /// All Betti numbers vanish; equivalent to the twist being nontrivial.
    bool is_acyclic() const;

private:
    std::size_t n_;
    TwistData twist_;
    std::vector<ScalarMatrix> d_;
};

/// The k-subsets of {0..n-1} as bitmasks, ordered lexicographically by
/// their sorted element lists. Exposed for tests of the basis convention.
std::vector<std::uint32_t> wedge_basis(std::size_t n, std::size_t k);

std::size_t binomial(std::size_t n, std::size_t k);

} // namespace lgpot
