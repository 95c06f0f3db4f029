#include "doctest.h"
#include "kervaire/f2.hpp"
#include "kervaire/steenrod.hpp"

#include <chrono>
#include <map>
#include <random>

using namespace kervaire;

namespace {

// Coefficients of (1 + t)^n mod 2 by repeated multiplication, without any binomial shortcut.
std::vector<bool> one_plus_t_power(unsigned n)
{
    std::vector<bool> c{true};
    for (unsigned k = 0; k < n; ++k) {
        std::vector<bool> next(c.size() + 1, false);
        for (std::size_t i = 0; i < c.size(); ++i) {
            next[i] = next[i] ^ c[i];
            next[i + 1] = next[i + 1] ^ c[i];
        }
        c = std::move(next);
    }
    return c;
}

// Sq^i via the total square: Sq(t^n) = t^n (1 + t)^n, multiplicative, take the degree-i part.
PolyElement total_square_oracle(unsigned i, const PolyElement& p)
{
    PolyElement out(p.variables());
    for (const auto& t : p.terms()) {
        // Distribute i over the variables with weights from (1+t)^{n_v}.
        std::vector<std::vector<bool>> factors;
        for (unsigned n : t)
            factors.push_back(one_plus_t_power(n));
        std::vector<unsigned> shift(t.size(), 0);
        auto rec = [&](auto&& self, std::size_t v, unsigned left) -> void {
            if (v == t.size()) {
                if (left == 0) {
                    std::vector<unsigned> e(t.size());
                    for (std::size_t k = 0; k < t.size(); ++k)
                        e[k] = t[k] + shift[k];
                    out.toggle(e);
                }
                return;
            }
            for (unsigned s = 0; s <= left && s < factors[v].size(); ++s) {
                if (!factors[v][s])
                    continue;
                shift[v] = s;
                self(self, v + 1, left - s);
            }
            shift[v] = 0;
        };
        rec(rec, 0, i);
    }
    return out;
}

PolyElement random_poly(std::mt19937_64& rng, std::size_t vars, unsigned max_degree, int terms)
{
    PolyElement p(vars);
    std::uniform_int_distribution<unsigned> deg(1, max_degree);
    std::uniform_int_distribution<std::size_t> var(0, vars - 1);
    for (int k = 0; k < terms; ++k) {
        std::vector<unsigned> e(vars, 0);
        const unsigned d = deg(rng);
        for (unsigned s = 0; s < d; ++s)
            ++e[var(rng)];
        p.toggle(e);
    }
    return p;
}

SteenrodMonomial random_monomial(std::mt19937_64& rng, unsigned max_degree)
{
    std::uniform_int_distribution<unsigned> total(1, max_degree);
    unsigned left = total(rng);
    std::vector<unsigned> e;
    while (left > 0) {
        std::uniform_int_distribution<unsigned> part(1, std::min(left, 12U));
        e.push_back(part(rng));
        left -= e.back();
    }
    return SteenrodMonomial(e);
}

}  // namespace

TEST_CASE("Lucas rule matches Pascal's triangle")
{
    std::vector<std::vector<bool>> pascal(80);
    for (std::size_t n = 0; n < pascal.size(); ++n) {
        pascal[n].assign(n + 1, true);
        for (std::size_t k = 1; k < n; ++k)
            pascal[n][k] = pascal[n - 1][k - 1] ^ pascal[n - 1][k];
    }
    for (int n = 0; n < 80; ++n)
        for (int k = -2; k < 84; ++k)
            CHECK(binom_mod2(n, k) == (k >= 0 && k <= n && pascal[n][k]));
}

TEST_CASE("parse and print")
{
    const SteenrodSum s = SteenrodSum::parse("Sq16 Sq16 + Sq31 Sq1");
    CHECK(s.size() == 2);
    CHECK(s.to_string() == "Sq31 Sq1 + Sq16 Sq16");
    CHECK(SteenrodSum::parse("Sq2 + Sq2").is_zero());
    CHECK(SteenrodSum::parse("0").is_zero());
    CHECK(SteenrodSum::parse("Sq0 Sq3").to_string() == "Sq3");
    CHECK_THROWS_AS(SteenrodSum::parse("Sq"), std::invalid_argument);
    CHECK_THROWS_AS(SteenrodSum::parse("Sq2 +"), std::invalid_argument);
    CHECK_THROWS_AS(SteenrodSum::parse("Sqx"), std::invalid_argument);
}

TEST_CASE("Adem rewriting examples")
{
    CHECK(adem_rewrite(SteenrodSum::parse("Sq1 Sq1")).is_zero());
    CHECK(adem_rewrite(SteenrodSum::parse("Sq2 Sq2")) == SteenrodSum::parse("Sq3 Sq1"));
    CHECK(adem_rewrite(SteenrodSum::parse("Sq16 Sq16")) ==
          SteenrodSum::parse("Sq31 Sq1 + Sq30 Sq2 + Sq28 Sq4 + Sq24 Sq8"));
    CHECK(adem_rewrite(SteenrodSum::parse("Sq4 Sq4")) == SteenrodSum::parse("Sq7 Sq1 + Sq6 Sq2"));
    CHECK(adem_rewrite(SteenrodSum::parse("Sq1 Sq2")) == SteenrodSum::parse("Sq3"));
}

TEST_CASE("Kervaire relation")
{
    for (int j = 1; j <= 6; ++j)
        CHECK_MESSAGE(check_kervaire_relation(j, 0).is_zero(), "j = " << j);
    CHECK(check_kervaire_relation(4, 1) == SteenrodSum::parse("Sq31 Sq1"));
    CHECK(check_kervaire_relation(1, 1) == SteenrodSum::parse("Sq3 Sq1"));
    CHECK_THROWS_AS(check_kervaire_relation(0, 0), std::invalid_argument);
    CHECK_THROWS_AS(check_kervaire_relation(7, 0), std::invalid_argument);
    CHECK_THROWS_AS(check_kervaire_relation(2, 2), std::invalid_argument);
}

TEST_CASE("action on polynomials")
{
    const PolyElement t = PolyElement::generator_power(1, 0, 1);
    CHECK(sq_on_polynomial(1, t) == PolyElement::generator_power(1, 0, 2));
    CHECK(sq_on_polynomial(2, PolyElement::generator_power(1, 0, 3)) == PolyElement::generator_power(1, 0, 5));
    CHECK(sq_on_polynomial(16, PolyElement::generator_power(1, 0, 15)).is_zero());
    CHECK(sq_on_polynomial(0, t) == t);

    std::mt19937_64 rng(5);
    std::uniform_int_distribution<unsigned> sq(0, 14);
    for (int trial = 0; trial < 200; ++trial) {
        const PolyElement p = random_poly(rng, 4, 12, 4);
        const unsigned i = sq(rng);
        CHECK(sq_on_polynomial(i, p) == total_square_oracle(i, p));
    }
}

TEST_CASE("rewriting is idempotent, degree preserving, and faithful")
{
    std::mt19937_64 rng(17);
    for (int trial = 0; trial < 150; ++trial) {
        const SteenrodMonomial m = random_monomial(rng, 24);
        const SteenrodSum s{m};
        const SteenrodSum r = adem_rewrite(s);
        CHECK(r.admissible());
        CHECK(adem_rewrite(r) == r);
        for (const auto& term : r.terms())
            CHECK(term.degree() == m.degree());
        const PolyElement p = random_poly(rng, 6, 8, 3);
        CHECK(sq_on_polynomial(s, p) == sq_on_polynomial(r, p));
    }
}

TEST_CASE("admissible basis acts faithfully on t1...td")
{
    // Linear independence of the images is equivalent to every nonzero admissible sum acting nontrivially.
    for (unsigned d = 1; d <= 12; ++d) {
        const auto basis = admissible_basis(d);
        for (const auto& m : basis)
            CHECK(m.admissible());
        const PolyElement x = PolyElement::monomial(std::vector<unsigned>(d, 1));
        std::map<std::vector<unsigned>, std::size_t> index;
        std::vector<PolyElement> images;
        for (const auto& m : basis) {
            images.push_back(sq_on_polynomial(m, x));
            for (const auto& t : images.back().terms())
                index.emplace(t, index.size());
        }
        BitMatrix columns(index.size(), basis.size());
        for (std::size_t c = 0; c < images.size(); ++c)
            for (const auto& t : images[c].terms())
                columns.set(index.at(t), c, true);
        CHECK_MESSAGE(rank(columns) == basis.size(), "degree " << d);

        if (d <= 7) {
            for (unsigned long long mask = 1; mask < (1ULL << basis.size()); ++mask) {
                SteenrodSum s;
                for (std::size_t k = 0; k < basis.size(); ++k)
                    if ((mask >> k) & 1)
                        s.toggle(basis[k]);
                CHECK_FALSE(sq_on_polynomial(s, x).is_zero());
            }
        }
    }
}

TEST_CASE("admissible basis sizes")
{
    // Counts of admissible sequences by degree.
    const std::size_t expected[] = {1, 1, 1, 2, 2, 2, 3, 4, 4, 5, 6, 6, 7};
    for (unsigned d = 0; d <= 12; ++d)
        CHECK(admissible_basis(d).size() == expected[d]);
}
