#include "kervaire/quadform.hpp"

#include <bit>
#include <cstdint>
#include <string>

namespace kervaire {

DegenerateFormError::DegenerateFormError(BitVector radical)
    : std::domain_error("bilinear form is degenerate; radical contains " + radical.to_string()),
      radical_(std::move(radical))
{
}

QuadraticSpace::QuadraticSpace(BitMatrix gram, BitVector basis_values)
    : gram_(std::move(gram)), values_(std::move(basis_values))
{
    if (gram_.rows() != gram_.cols())
        throw DimensionMismatch("Gram matrix must be square");
    if (values_.size() != gram_.rows())
        throw DimensionMismatch("need one q value per basis vector");
    if (!gram_.is_symmetric())
        throw std::invalid_argument("Gram matrix is not symmetric");
    if (!gram_.has_zero_diagonal())
        throw std::invalid_argument("Gram matrix has a nonzero diagonal entry; a quadratic refinement needs an "
                                    "alternating form");
}

bool QuadraticSpace::pairing(const BitVector& x, const BitVector& y) const { return x.dot(gram_ * y); }

bool QuadraticSpace::q(const BitVector& x) const
{
    // q(sum x_k e_k) = sum x_k q(e_k) + sum_{k<l} x_k x_l B(e_k, e_l)
    bool value = x.dot(values_);
    for (std::size_t k = 0; k < x.size(); ++k) {
        if (!x.get(k))
            continue;
        for (std::size_t l = k + 1; l < x.size(); ++l)
            if (x.get(l) && gram_.get(k, l))
                value = !value;
    }
    return value;
}

std::vector<HyperbolicPair> symplectic_basis(const BitMatrix& gram)
{
    if (gram.rows() != gram.cols())
        throw DimensionMismatch("Gram matrix must be square");
    if (!gram.is_symmetric() || !gram.has_zero_diagonal())
        throw std::invalid_argument("symplectic basis needs a symmetric Gram matrix with zero diagonal");
    const std::size_t n = gram.rows();
    if (n % 2 != 0)
        throw std::invalid_argument("alternating form on an odd-dimensional space (dim " + std::to_string(n) +
                                    ") is degenerate");

    auto pair = [&gram](const BitVector& x, const BitVector& y) { return x.dot(gram * y); };

    std::vector<BitVector> remaining;
    for (std::size_t i = 0; i < n; ++i)
        remaining.push_back(BitVector::unit(n, i));

    std::vector<HyperbolicPair> pairs;
    while (!remaining.empty()) {
        const BitVector a = remaining.front();
        std::size_t partner = 0;
        for (std::size_t j = 1; j < remaining.size(); ++j) {
            if (pair(a, remaining[j])) {
                partner = j;
                break;
            }
        }
        if (partner == 0)
            throw DegenerateFormError(a);
        const BitVector b = remaining[partner];
        remaining.erase(remaining.begin() + static_cast<std::ptrdiff_t>(partner));
        remaining.erase(remaining.begin());

        for (auto& v : remaining) {
            const bool with_b = pair(v, b);
            const bool with_a = pair(v, a);
            if (with_b)
                v += a;
            if (with_a)
                v += b;
        }
        pairs.push_back({a, b});
    }
    return pairs;
}

QuadraticSpace extend_quadratic(const std::vector<bool>& values_on_basis, const BitMatrix& gram,
                                const std::vector<BitVector>& basis)
{
    const std::size_t n = gram.rows();
    if (basis.size() != n || values_on_basis.size() != n)
        throw std::invalid_argument("expected " + std::to_string(n) + " basis vectors and values, got " +
                                    std::to_string(basis.size()) + " and " + std::to_string(values_on_basis.size()));
    const BitMatrix change = n == 0 ? BitMatrix(0, 0) : BitMatrix::from_columns(basis, n);
    const auto to_basis = inverse(change);
    if (!to_basis)
        throw std::invalid_argument("supplied vectors are linearly dependent, not a basis");

    auto pair = [&gram](const BitVector& x, const BitVector& y) { return x.dot(gram * y); };

    BitVector standard_values(n);
    for (std::size_t k = 0; k < n; ++k) {
        // Coordinates of e_k in the supplied basis.
        const BitVector c = *to_basis * BitVector::unit(n, k);
        bool value = false;
        for (std::size_t i = 0; i < n; ++i) {
            if (!c.get(i))
                continue;
            value ^= values_on_basis[i];
            for (std::size_t j = i + 1; j < n; ++j)
                if (c.get(j))
                    value ^= pair(basis[i], basis[j]);
        }
        standard_values.set(k, value);
    }
    return QuadraticSpace(gram, standard_values);
}

bool arf(const QuadraticSpace& space)
{
    bool total = false;
    for (const auto& [a, b] : symplectic_basis(space.gram()))
        total ^= space.q(a) && space.q(b);
    return total;
}

unsigned long long count_zeros(const QuadraticSpace& space)
{
    const std::size_t n = space.dim();
    if (n > 24)
        throw std::invalid_argument("counting oracle limited to dimension 24, got " + std::to_string(n));
    std::vector<std::uint32_t> columns(n, 0);
    std::vector<bool> basis_q(n);
    for (std::size_t k = 0; k < n; ++k) {
        for (std::size_t i = 0; i < n; ++i)
            if (space.gram().get(i, k))
                columns[k] |= std::uint32_t{1} << i;
        basis_q[k] = space.basis_values().get(k);
    }

    // Gray code walk: q(x + e_k) = q(x) + q(e_k) + B(x, e_k).
    std::uint32_t x = 0;
    bool value = false;
    unsigned long long zeros = 1;
    const std::uint64_t total = std::uint64_t{1} << n;
    for (std::uint64_t step = 1; step < total; ++step) {
        const auto k = static_cast<std::size_t>(std::countr_zero(step));
        value ^= basis_q[k] ^ static_cast<bool>(std::popcount(x & columns[k]) & 1);
        x ^= std::uint32_t{1} << k;
        if (!value)
            ++zeros;
    }
    return zeros;
}

bool arf_count_oracle(const QuadraticSpace& space)
{
    const std::size_t n = space.dim();
    const unsigned long long zeros = count_zeros(space);
    if (n % 2 != 0)
        throw InconsistentRefinementError("odd dimension " + std::to_string(n) + ": no nondegenerate refinement");
    if (n == 0)
        return false;
    const unsigned long long half = 1ULL << (n - 1);
    const unsigned long long excess = 1ULL << (n / 2 - 1);
    if (zeros == half + excess)
        return false;
    if (zeros == half - excess)
        return true;
    throw InconsistentRefinementError("q has " + std::to_string(zeros) + " zeros out of 2^" + std::to_string(n) +
                                      ", matching neither Arf value (form degenerate or q not a refinement)");
}

}  // namespace kervaire
