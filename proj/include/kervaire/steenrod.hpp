#ifndef KERVAIRE_STEENROD_HPP_
#define KERVAIRE_STEENROD_HPP_

#include <compare>
#include <cstdint>
#include <functional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

namespace kervaire {

/// Binomial coefficient mod 2 (Lucas: odd iff the bits of k are a subset of those of n).
constexpr bool binom_mod2(std::int64_t n, std::int64_t k)
{
    if (k < 0 || n < 0 || k > n)
        return false;
    return (k & ~n) == 0;
}

/// Sq^{i_1} ... Sq^{i_k}, leftmost applied last. Exponents are >= 1; the empty monomial is the unit.
class SteenrodMonomial {
public:
    SteenrodMonomial() = default;
    SteenrodMonomial(std::initializer_list<unsigned> exponents);
    explicit SteenrodMonomial(std::vector<unsigned> exponents);

    const std::vector<unsigned>& exponents() const { return exponents_; }
    unsigned degree() const;
    bool admissible() const;
    std::string to_string() const;

    auto operator<=>(const SteenrodMonomial&) const = default;

private:
    std::vector<unsigned> exponents_;
};

/// F2 linear combination of monomials. Adding a monomial already present cancels it.
class SteenrodSum {
public:
    SteenrodSum() = default;
    SteenrodSum(std::initializer_list<SteenrodMonomial> monomials);

    /// Parses "Sq16 Sq16 + Sq31 Sq1"; "0" is the empty sum, "1" the unit.
    static SteenrodSum parse(std::string_view text);

    void toggle(const SteenrodMonomial& m);
    SteenrodSum& operator+=(const SteenrodSum& other);

    bool is_zero() const { return terms_.empty(); }
    std::size_t size() const { return terms_.size(); }
    bool contains(const SteenrodMonomial& m) const { return terms_.count(m) != 0; }
    bool admissible() const;

    /// Terms in descending lexicographic order of exponent lists.
    const std::set<SteenrodMonomial, std::greater<>>& terms() const { return terms_; }
    std::string to_string() const;

    bool operator==(const SteenrodSum&) const = default;

private:
    std::set<SteenrodMonomial, std::greater<>> terms_;
};

/// Admissible normal form, rewriting the leftmost inadmissible adjacent pair with the Adem relation.
SteenrodSum adem_rewrite(const SteenrodSum& s);

/// Sq^{2^j} Sq^{2^j} + sum_{i=start}^{j-1} Sq^{2^{j+1}-2^i} Sq^{2^i}.
SteenrodSum kervaire_relation_lhs(int j, int start_index);

/// Admissible form of kervaire_relation_lhs; the empty sum means the relation holds. Requires 1 <= j <= 6.
SteenrodSum check_kervaire_relation(int j, int start_index);

/// Element of F2[t_1, ..., t_k], all generators in degree 1, stored as a set of exponent vectors.
class PolyElement {
public:
    explicit PolyElement(std::size_t variables) : variables_(variables) {}

    static PolyElement monomial(std::vector<unsigned> exponents);
    /// t_i^power.
    static PolyElement generator_power(std::size_t variables, std::size_t i, unsigned power);

    std::size_t variables() const { return variables_; }
    const std::set<std::vector<unsigned>>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    void toggle(const std::vector<unsigned>& exponents);
    PolyElement& operator+=(const PolyElement& other);
    std::string to_string() const;

    bool operator==(const PolyElement&) const = default;

private:
    std::size_t variables_;
    std::set<std::vector<unsigned>> terms_;
};

/// Sq^i on a polynomial: Cartan formula on products, Sq^i(t^n) = binom(n, i) t^{n+i}.
PolyElement sq_on_polynomial(unsigned i, const PolyElement& p);
PolyElement sq_on_polynomial(const SteenrodMonomial& m, const PolyElement& p);
PolyElement sq_on_polynomial(const SteenrodSum& s, const PolyElement& p);

/// Admissible monomials of the given degree, in descending lexicographic order.
std::vector<SteenrodMonomial> admissible_basis(unsigned degree);

}  // namespace kervaire

#endif  // KERVAIRE_STEENROD_HPP_
