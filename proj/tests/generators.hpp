#ifndef KERVAIRE_TESTS_GENERATORS_HPP_
#define KERVAIRE_TESTS_GENERATORS_HPP_

#include "kervaire/f2.hpp"
#include "kervaire/quadform.hpp"

#include <random>

namespace testgen {

using kervaire::BitMatrix;
using kervaire::BitVector;

inline BitVector random_vector(std::mt19937_64& rng, std::size_t n)
{
    std::bernoulli_distribution bit(0.5);
    BitVector v(n);
    for (std::size_t i = 0; i < n; ++i)
        v.set(i, bit(rng));
    return v;
}

inline BitMatrix random_invertible(std::mt19937_64& rng, std::size_t n)
{
    for (;;) {
        BitMatrix m(n, n);
        for (std::size_t r = 0; r < n; ++r)
            m.row(r) = random_vector(rng, n);
        if (kervaire::rank(m) == n)
            return m;
    }
}

// Standard hyperbolic Gram matrix: e_{2i} paired with e_{2i+1}.
inline BitMatrix hyperbolic_gram(std::size_t genus)
{
    BitMatrix g(2 * genus, 2 * genus);
    for (std::size_t i = 0; i < genus; ++i) {
        g.set(2 * i, 2 * i + 1, true);
        g.set(2 * i + 1, 2 * i, true);
    }
    return g;
}

// Nondegenerate alternating form in random coordinates: P^T H P.
inline BitMatrix random_symplectic_gram(std::mt19937_64& rng, std::size_t genus)
{
    const BitMatrix p = random_invertible(rng, 2 * genus);
    return p.transpose() * hyperbolic_gram(genus) * p;
}

inline kervaire::QuadraticSpace random_space(std::mt19937_64& rng, std::size_t genus)
{
    return kervaire::QuadraticSpace(random_symplectic_gram(rng, genus), random_vector(rng, 2 * genus));
}

// The same form written in the coordinates x = P y.
inline kervaire::QuadraticSpace transport(const kervaire::QuadraticSpace& s, const BitMatrix& p)
{
    const std::size_t n = s.dim();
    BitVector values(n);
    for (std::size_t k = 0; k < n; ++k)
        values.set(k, s.q(p * BitVector::unit(n, k)));
    return kervaire::QuadraticSpace(p.transpose() * s.gram() * p, values);
}

}  // namespace testgen

#endif  // KERVAIRE_TESTS_GENERATORS_HPP_
