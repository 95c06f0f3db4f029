#ifndef KERVAIRE_MFLDCOH_HPP_
#define KERVAIRE_MFLDCOH_HPP_

#include "kervaire/f2.hpp"

#include <set>
#include <string>
#include <string_view>
#include <vector>

namespace kervaire {

using Exponents = std::vector<unsigned>;

/// Element of a truncated polynomial ring: a set of exponent vectors.
class RingElement {
public:
    RingElement() = default;

    void toggle(const Exponents& e);
    RingElement& operator+=(const RingElement& other);
    friend RingElement operator+(RingElement lhs, const RingElement& rhs)
    {
        lhs += rhs;
        return lhs;
    }

    const std::set<Exponents>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    bool operator==(const RingElement&) const = default;

private:
    std::set<Exponents> terms_;
};

/// F2[t_1, ..., t_k] / (t_i^{n_i + 1}), every t_i in degree 1. This is H^*(RP^{n_1} x ... x RP^{n_k}).
class TruncatedRing {
public:
    explicit TruncatedRing(std::vector<unsigned> max_exponents);
    /// k copies of H^*(RP^n).
    static TruncatedRing projective_power(unsigned n, std::size_t copies);

    std::size_t variables() const { return max_.size(); }
    const std::vector<unsigned>& max_exponents() const { return max_; }
    unsigned top_degree() const;

    /// Monomials of the given degree, t_1 exponent descending then lexicographic.
    std::vector<Exponents> basis(unsigned degree) const;
    std::size_t dimension(unsigned degree) const { return basis(degree).size(); }
    std::vector<std::size_t> betti() const;

    RingElement one() const;
    RingElement generator(std::size_t i) const;
    /// The monomial, or zero when an exponent exceeds its truncation.
    RingElement monomial(const Exponents& e) const;

    RingElement multiply(const RingElement& a, const RingElement& b) const;
    RingElement power(const RingElement& a, unsigned k) const;

    /// Common degree of all terms; throws std::invalid_argument for inhomogeneous or zero input.
    unsigned degree(const RingElement& a) const;
    bool is_homogeneous(const RingElement& a) const;

    BitVector coordinates(const RingElement& a, unsigned degree) const;
    RingElement from_coordinates(const BitVector& v, unsigned degree) const;

    /// Sums of monomials such as "t1 + t2", "t1^7*t2", "1", "0".
    RingElement parse(std::string_view text) const;
    std::string format(const RingElement& a) const;

private:
    std::vector<unsigned> max_;
};

/// Matrix of x -> c x from degree d to degree d + deg(c); rows index the target basis.
BitMatrix cup_multiplication_matrix(const TruncatedRing& ring, const RingElement& c, unsigned d);

/// Gysin sequence of a double cover with characteristic class pi, given the base cohomology
/// dimensions dims[k] and the maps maps[k] = (. pi): degree k -> k + 1:
/// dim H^k(cover) = dim ker(maps[k]) + dim coker(maps[k-1]).
std::vector<std::size_t> gysin_betti(const std::vector<std::size_t>& dims, const std::vector<BitMatrix>& maps);

/// Betti numbers of the double cover of the space with cohomology ring R and class pi (degree 1).
std::vector<std::size_t> double_cover_betti(const TruncatedRing& ring, const RingElement& pi);

struct QuotientPower {
    unsigned degree = 0;
    RingElement normal_form;  // reduced modulo pi R in the given degree
    bool is_zero = true;
};

/// u^k in R / (pi R), reduced to a canonical representative.
QuotientPower pullback_power_evaluate(const TruncatedRing& ring, const RingElement& pi, const RingElement& u,
                                      unsigned k);

/// Action of a self-map on the mod 2 homology of a fiber, one square matrix per degree.
class MonodromyData {
public:
    explicit MonodromyData(std::vector<BitMatrix> action);
    static MonodromyData trivial(const std::vector<std::size_t>& betti);
    /// Factor swap on X x X, given the mod 2 Betti numbers of X.
    static MonodromyData swap_on_square(const std::vector<std::size_t>& factor_betti);

    std::size_t top_degree() const { return action_.size() - 1; }
    const std::vector<BitMatrix>& action() const { return action_; }
    std::vector<std::size_t> fiber_betti() const;

private:
    std::vector<BitMatrix> action_;
};

/// dim H_n(T) = dim coker(theta_n + 1) + dim ker(theta_{n-1} + 1) for the mapping torus T.
std::vector<std::size_t> wang_betti(const MonodromyData& m);

/// Double cover of the mapping torus of a variable permutation sigma on Spec of R, with class pi
/// restricting to pi on the fiber (pi must be sigma-invariant). Additive model: the Gysin sequence
/// applied to the associated graded H^*(fiber)^sigma + H^*(fiber)_sigma[1] of the Wang filtration.
std::vector<std::size_t> mapping_torus_cover_betti(const TruncatedRing& ring, const RingElement& pi,
                                                   const std::vector<std::size_t>& sigma);

bool is_palindromic(const std::vector<std::size_t>& v);

struct ReductionRow {
    std::string quantity;
    int value = 0;
    std::string provenance;  // "computed", "derived", "geometric input"
};

struct ReductionReport {
    std::vector<ReductionRow> rows;
    int correction_term = 0;  // <p_N^14 kappa_N; [N]> = <p_L^14; [L]>
    int lemma1_input = 1;     // <p_N^15; [N]>
    int theta = 1;            // <p_N^14 (p_N + kappa_N); [N]>
    bool equivalent = false;  // the two characteristic-number equations agree
};

/// <p_N^14 (p_N + kappa_N); [N]> = <p_N^15; [N]> + <p_L^14; [L]>, the last term evaluated in
/// H^*(RP^7 x RP^7) / (t1 + t2). The first term is taken as the input `lemma1_input`.
ReductionReport char_number_reduction_report(int lemma1_input = 1);

}  // namespace kervaire

#endif  // KERVAIRE_MFLDCOH_HPP_
