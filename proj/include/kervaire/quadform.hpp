#ifndef KERVAIRE_QUADFORM_HPP_
#define KERVAIRE_QUADFORM_HPP_

#include "kervaire/f2.hpp"

#include <stdexcept>
#include <vector>

namespace kervaire {

/// Raised when a bilinear form has a nonzero radical; carries one radical vector.
class DegenerateFormError : public std::domain_error {
public:
    explicit DegenerateFormError(BitVector radical);
    const BitVector& radical_vector() const { return radical_; }

private:
    BitVector radical_;
};

/// Raised by the counting oracle when the zero count fits neither Arf value.
class InconsistentRefinementError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

struct HyperbolicPair {
    BitVector a;
    BitVector b;
};

/// F2 vector space with an alternating form B (its Gram matrix in standard coordinates) and a
/// quadratic refinement q, q(x + y) = q(x) + q(y) + B(x, y). q is stored by its values on the
/// standard basis, which determine it.
class QuadraticSpace {
public:
    QuadraticSpace(BitMatrix gram, BitVector basis_values);

    std::size_t dim() const { return gram_.rows(); }
    const BitMatrix& gram() const { return gram_; }
    const BitVector& basis_values() const { return values_; }

    bool pairing(const BitVector& x, const BitVector& y) const;
    bool q(const BitVector& x) const;

private:
    BitMatrix gram_;
    BitVector values_;
};

/// Hamiltonian basis of a nondegenerate alternating form. Pairs are built greedily: the first
/// remaining vector is matched with the lowest-index remaining vector it pairs with, and the
/// rest is projected onto the orthogonal complement of the pair.
std::vector<HyperbolicPair> symplectic_basis(const BitMatrix& gram);

/// The refinement taking `values_on_basis[i]` on `basis[i]`. Throws std::invalid_argument when
/// `basis` is not a basis of F2^dim.
QuadraticSpace extend_quadratic(const std::vector<bool>& values_on_basis, const BitMatrix& gram,
                                const std::vector<BitVector>& basis);

/// Sum of q(a_i) q(b_i) over a Hamiltonian basis.
bool arf(const QuadraticSpace& space);

/// Arf invariant by the majority count of q^{-1}(0), enumerating all 2^dim vectors (dim <= 24).
bool arf_count_oracle(const QuadraticSpace& space);

/// Number of zeros of q, by Gray-code enumeration.
unsigned long long count_zeros(const QuadraticSpace& space);

}  // namespace kervaire

#endif  // KERVAIRE_QUADFORM_HPP_
