#include "lgpot/koszul.hpp"

#include <bit>

namespace lgpot {

std::size_t binomial(std::size_t n, std::size_t k) {
    if (k > n) return 0;
    if (k > n - k) k = n - k;
    std::size_t r = 1;
    for (std::size_t i = 0; i < k; ++i) r = r * (n - i) / (i + 1);
    return r;
}

std::vector<std::uint32_t> wedge_basis(std::size_t n, std::size_t k) {
    std::vector<std::uint32_t> out;
    if (k > n) return out;
    out.reserve(binomial(n, k));
    // Lexicographic successor on sorted element lists.
    std::vector<std::size_t> idx(k);
    for (std::size_t i = 0; i < k; ++i) idx[i] = i;
    while (true) {
        std::uint32_t mask = 0;
        for (std::size_t i : idx) mask |= (1u << i);
        out.push_back(mask);
        if (k == 0) break;
        std::size_t i = k;
        while (i > 0 && idx[i - 1] == n - k + (i - 1)) --i;
        if (i == 0) break;
        ++idx[i - 1];
        for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
    }
    return out;
}

namespace {

int wedge_sign(std::uint32_t set, std::size_t i) {
    std::uint32_t below = set & ((1u << i) - 1u);
    return (std::popcount(below) % 2 == 0) ? 1 : -1;
}

} // namespace

KoszulComplex::KoszulComplex(std::size_t n, TwistData twist)
    : n_(n), twist_(std::move(twist)) {
    if (n == 0 || n > 31) throw DomainError("torus dimension out of range");
    if (twist_.size() != n)
        throw DomainError("twist length does not match torus dimension");

    std::vector<Scalar> xi;
    xi.reserve(n);
    for (std::size_t i = 0; i < n; ++i) xi.push_back(twist_.at(i) - Scalar(1));

    d_.reserve(n);
    for (std::size_t k = 0; k < n; ++k) {
        auto cols = wedge_basis(n, k);
        auto rows = wedge_basis(n, k + 1);
        ScalarMatrix d(rows.size(), cols.size());
        for (std::size_t c = 0; c < cols.size(); ++c) {
            std::uint32_t s = cols[c];
            for (std::size_t i = 0; i < n; ++i) {
                if (s & (1u << i)) continue;
                if (xi[i].is_zero()) continue;
                std::uint32_t t = s | (1u << i);
                std::size_t r = 0;
                while (rows[r] != t) ++r;
                Scalar v = xi[i];
                if (wedge_sign(s, i) < 0) v = -v;
                d.set(r, c, v);
            }
        }
        d_.push_back(std::move(d));
    }

    for (std::size_t k = 0; k + 1 < n; ++k)
        if (!matmul(d_[k + 1], d_[k]).is_zero())
            throw Error("Koszul differential does not square to zero");
}

const ScalarMatrix& KoszulComplex::differential(std::size_t k) const {
    if (k >= d_.size()) throw DomainError("differential index out of range");
    return d_[k];
}

BettiVector KoszulComplex::betti_numbers() const {
    std::vector<std::size_t> rank(n_, 0);
    for (std::size_t k = 0; k < n_; ++k) rank[k] = exact_rank(d_[k]);

    BettiVector b(n_ + 1, 0);
    for (std::size_t k = 0; k <= n_; ++k) {
        std::size_t dim = binomial(n_, k);
        std::size_t out = k < n_ ? rank[k] : 0;
        std::size_t in = k > 0 ? rank[k - 1] : 0;
        b[k] = dim - out - in;
    }
    return b;
}

bool KoszulComplex::is_acyclic() const {
    for (std::size_t v : betti_numbers())
        if (v != 0) return false;
    return true;
}

} // namespace lgpot
