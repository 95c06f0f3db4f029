#ifndef KERVAIRE_GROUPHOM_HPP_
#define KERVAIRE_GROUPHOM_HPP_

#include "kervaire/f2.hpp"
#include "kervaire/group.hpp"

#include <optional>
#include <stdexcept>
#include <vector>

namespace kervaire {

// Chains on the presentation complex with coefficients in M (dim n), g generators:
//   C2 = M  --d2-->  C1 = M^g  --d1-->  C0 = M.
// The complex uses the contragredient action, so slot x of d1 is rho(x)^{-1} + 1 and slot x
// of d2 is the sum of rho(w)^{-1} over the terms w of the Fox derivative of the relator.
// Cochains use rho directly: a 1-cochain is a crossed homomorphism u(xy) = u(x) + rho(x) u(y).
// For orthogonal actions and an invariant pairing B the Kronecker pairing
// <u, c> = sum_x B(u(x), c_x) descends to (co)homology.

struct FoxComplex {
    std::size_t module_dim = 0;
    std::size_t generators = 0;
    BitMatrix d1;  // n x gn
    BitMatrix d2;  // gn x n
};

FoxComplex fox_complex(const Representation& rho);

struct LocalHomology {
    FoxComplex complex;
    Subquotient h0;
    Subquotient h1;
    Subquotient h2;
    std::size_t kernel_d1 = 0;
    std::size_t rank_d1 = 0;
    std::size_t rank_d2 = 0;

    std::size_t dim(int degree) const;
};

LocalHomology local_homology(const Representation& rho);

/// Crossed homomorphism given by its values on generators.
class Cocycle {
public:
    Cocycle(std::vector<BitVector> values);
    /// Reads generator blocks out of a vector in M^g.
    static Cocycle from_flat(const BitVector& flat, std::size_t generators);
    static Cocycle zero(std::size_t generators, std::size_t module_dim);

    const std::vector<BitVector>& values() const { return values_; }
    const BitVector& value(std::size_t g) const { return values_.at(g); }
    std::size_t module_dim() const { return values_.front().size(); }
    BitVector flat() const;

    /// u(w) by the crossed homomorphism rule; u(x^-1) = rho(x)^{-1} u(x).
    BitVector evaluate(const GroupWord& w, const Representation& rho) const;

    bool operator==(const Cocycle&) const = default;

private:
    std::vector<BitVector> values_;
};

struct CochainComplex {
    BitMatrix delta1;  // gn x n, blocks rho(x) + 1
    BitMatrix delta2;  // n x gn, blocks rho(d relator / dx)
};

CochainComplex cochain_complex(const Representation& rho);

/// Principal crossed homomorphism x -> (rho(x) + 1) m.
Cocycle principal_cocycle(const Representation& rho, const BitVector& m);
bool is_cocycle(const Representation& rho, const Cocycle& u);

/// Basis of crossed homomorphisms modulo principal ones.
std::vector<Cocycle> h1_cocycle_basis(const Representation& rho);

/// Throws std::invalid_argument unless rho(g)^T B rho(g) = B for every generator.
void require_invariant_pairing(const Representation& rho, const BitMatrix& pairing);

/// (u cup v) on the relator 2-cell: sum over letters of B(u(s_i), rho(s_i) v(x_i)), where s_i is
/// the source prefix of the i-th edge (p_{i-1} for x_i, p_i for x_i^{-1}).
bool cup_eval(const Representation& rho, const Cocycle& u, const Cocycle& v, const BitMatrix& pairing);

/// Cap product of the relator 2-chain with v, a 1-cycle in C1 satisfying
/// <u, pd_cap(v)> = (u cup v)[relator].
BitVector pd_cap(const Representation& rho, const Cocycle& v);

bool kronecker(const Cocycle& u, const BitVector& chain, const BitMatrix& pairing);

/// Raised when a fiber class is not fixed by the monodromy of a loop.
class NonInvariantClassError : public std::invalid_argument {
public:
    NonInvariantClassError(const std::string& what, BitVector moved)
        : std::invalid_argument(what), moved_(std::move(moved))
    {
    }
    const BitVector& moved() const { return moved_; }

private:
    BitVector moved_;
};

struct LoopCycle {
    BitVector chain;                  // element of C1 = M^g
    std::optional<BitVector> class_coordinates;  // in the basis of h1 of the supplied homology
    bool is_boundary = false;
};

/// Lift of the loop w carrying the fiber class omega. Requires rho(w) omega = omega.
LoopCycle loop_cycle(const Representation& rho, const GroupWord& w, const BitVector& omega,
                     const LocalHomology& homology);
LoopCycle loop_cycle(const Representation& rho, const GroupWord& w, const BitVector& omega);

/// A cocycle u with pd_cap(u) homologous to z, or nullopt when z is not a cycle.
std::optional<Cocycle> pd_inverse(const Representation& rho, const BitVector& z);

/// Intersection number of two 1-cycles through Poincare duality.
bool intersection_number(const Representation& rho, const BitVector& z1, const BitVector& z2,
                         const BitMatrix& pairing);

/// Determinant character of a signed-permutation representation, as a trivial-coefficient cocycle.
Cocycle w1_character(const SignedPermRepresentation& rho);

enum class PinSignature { plus, minus };

/// Relator evaluated in the Clifford group: lifts of generator images as products of reflection
/// vectors. Returns 1 when the relator lifts to -1.
bool pin_lift_w2(const SignedPermRepresentation& rho, PinSignature signature);

}  // namespace kervaire

#endif  // KERVAIRE_GROUPHOM_HPP_
