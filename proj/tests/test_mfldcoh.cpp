#include "doctest.h"
#include "kervaire/mfldcoh.hpp"

#include <random>

using namespace kervaire;

namespace {

using Betti = std::vector<std::size_t>;

Betti sphere(std::size_t n)
{
    Betti b(n + 1, 0);
    b[0] = 1;
    b[n] += 1;
    return b;
}

Betti convolve(const Betti& x, const Betti& y)
{
    Betti out(x.size() + y.size() - 1, 0);
    for (std::size_t i = 0; i < x.size(); ++i)
        for (std::size_t j = 0; j < y.size(); ++j)
            out[i + j] += x[i] * y[j];
    return out;
}

long alternating(const Betti& b)
{
    long s = 0;
    for (std::size_t k = 0; k < b.size(); ++k)
        s += (k % 2 ? -1 : 1) * static_cast<long>(b[k]);
    return s;
}

}  // namespace

TEST_CASE("ring arithmetic")
{
    const TruncatedRing r = TruncatedRing::projective_power(7, 2);
    CHECK(r.top_degree() == 14);
    CHECK(r.dimension(0) == 1);
    CHECK(r.dimension(7) == 8);
    CHECK(r.dimension(14) == 1);
    const RingElement pi = r.parse("t1 + t2");
    CHECK(r.format(r.power(pi, 2)) == "t1^2 + t2^2");
    CHECK(r.power(r.generator(0), 8).is_zero());
    CHECK(r.format(r.parse("t1^3*t2 + t2*t1^3")) == "0");
    CHECK(r.parse("t1^8").is_zero());
    CHECK_THROWS_AS(r.parse("t3"), std::invalid_argument);
    CHECK_THROWS_AS(r.parse("x1"), std::invalid_argument);
    CHECK_THROWS_AS(r.degree(r.parse("1 + t1")), std::invalid_argument);
}

TEST_CASE("cup multiplication matrices")
{
    const TruncatedRing p7 = TruncatedRing::projective_power(7, 1);
    const RingElement t = p7.generator(0);
    CHECK(cup_multiplication_matrix(p7, t, 7).rows() == 0);
    CHECK(cup_multiplication_matrix(p7, t, 3) == BitMatrix::identity(1));

    const TruncatedRing r = TruncatedRing::projective_power(7, 2);
    const BitMatrix m = cup_multiplication_matrix(r, r.parse("t1 + t2"), 0);
    CHECK(m.rows() == 2);
    CHECK(m.cols() == 1);
    CHECK(rank(m) == 1);
    CHECK_THROWS_AS(cup_multiplication_matrix(r, r.parse("t1 + t1*t2"), 0), std::invalid_argument);
}

TEST_CASE("double covers")
{
    const TruncatedRing p7 = TruncatedRing::projective_power(7, 1);
    CHECK(double_cover_betti(p7, p7.generator(0)) == sphere(7));

    const TruncatedRing r = TruncatedRing::projective_power(7, 2);
    Betti doubled = r.betti();
    for (auto& b : doubled)
        b *= 2;
    CHECK(double_cover_betti(r, RingElement{}) == doubled);

    const Betti l = double_cover_betti(r, r.parse("t1 + t2"));
    REQUIRE(l.size() == 15);
    CHECK(l[0] == 1);
    CHECK(l[14] == 1);
    CHECK(l == Betti{1, 1, 1, 1, 1, 1, 1, 2, 1, 1, 1, 1, 1, 1, 1});
    CHECK(is_palindromic(l));

    // S^7 x_{Z/2} S^7 is an S^7-bundle over RP^7 with zero mod 2 Euler class.
    CHECK(l == convolve(p7.betti(), sphere(7)));
}

TEST_CASE("Gysin bookkeeping on random rings")
{
    std::mt19937_64 rng(8);
    std::uniform_int_distribution<unsigned> n(1, 6);
    std::uniform_int_distribution<std::size_t> k(1, 3);
    std::bernoulli_distribution coin(0.5);
    for (int trial = 0; trial < 40; ++trial) {
        const std::size_t vars = k(rng);
        std::vector<unsigned> max(vars);
        for (auto& m : max)
            m = n(rng);
        const TruncatedRing r(max);
        RingElement pi;
        for (std::size_t i = 0; i < vars; ++i)
            if (coin(rng))
                pi += r.generator(i);
        const Betti cover = double_cover_betti(r, pi);
        std::size_t total_rank = 0;
        std::size_t total_dim = 0;
        for (unsigned d = 0; d <= r.top_degree(); ++d) {
            total_dim += r.dimension(d);
            if (!pi.is_zero())
                total_rank += rank(cup_multiplication_matrix(r, pi, d));
        }
        std::size_t cover_total = 0;
        for (auto b : cover)
            cover_total += b;
        CHECK(cover_total == 2 * total_dim - 2 * total_rank);
        // Euler characteristic doubles under a double cover.
        CHECK(alternating(cover) == 2 * alternating(r.betti()));
        CHECK(is_palindromic(cover));
    }
}

TEST_CASE("quotient ring evaluation")
{
    const TruncatedRing r = TruncatedRing::projective_power(7, 2);
    const RingElement pi = r.parse("t1 + t2");
    const RingElement t1 = r.generator(0);
    CHECK(pullback_power_evaluate(r, pi, t1, 14).is_zero);
    const QuotientPower seven = pullback_power_evaluate(r, pi, t1, 7);
    CHECK_FALSE(seven.is_zero);
    CHECK(seven.degree == 7);
    // The normal form is a nonzero single-monomial representative of t^7.
    CHECK(seven.normal_form.terms().size() == 1);
    CHECK(pullback_power_evaluate(r, pi, t1, 8).is_zero);
    // t1 and t2 agree in the quotient.
    for (unsigned k = 0; k <= 7; ++k)
        CHECK(pullback_power_evaluate(r, pi, t1, k).normal_form ==
              pullback_power_evaluate(r, pi, r.generator(1), k).normal_form);
}

TEST_CASE("Wang sequence")
{
    CHECK(wang_betti(MonodromyData::trivial(sphere(7))) == convolve(sphere(7), sphere(1)));

    const Betti s7 = sphere(7);
    const Betti m15 = wang_betti(MonodromyData::swap_on_square(s7));
    REQUIRE(m15.size() == 16);
    CHECK(m15[15] == 1);
    CHECK(m15[7] == 1);
    CHECK(m15[8] == 1);
    CHECK(m15 == Betti{1, 1, 0, 0, 0, 0, 0, 1, 1, 0, 0, 0, 0, 0, 1, 1});
    CHECK(is_palindromic(m15));

    const Betti rp7(8, 1);
    const Betti k15 = wang_betti(MonodromyData::swap_on_square(rp7));
    CHECK(k15[1] == 2);
    CHECK(is_palindromic(k15));

    // Trivial monodromy is the Kunneth formula with a circle.
    for (const Betti& fiber : {rp7, convolve(rp7, rp7), convolve(s7, sphere(3))})
        CHECK(wang_betti(MonodromyData::trivial(fiber)) == convolve(fiber, sphere(1)));

    CHECK_THROWS_AS(MonodromyData({BitMatrix(2, 2)}), std::invalid_argument);
}

TEST_CASE("cover of the mapping torus")
{
    const TruncatedRing r = TruncatedRing::projective_power(7, 2);
    const RingElement pi = r.parse("t1 + t2");
    const Betti n15 = mapping_torus_cover_betti(r, pi, {1, 0});
    CHECK(n15 == Betti{1, 2, 2, 2, 2, 2, 2, 3, 3, 2, 2, 2, 2, 2, 2, 1});
    CHECK(is_palindromic(n15));
    // Cross-check: the swap acts trivially on H_*(L; F2), so N is additively L x S^1.
    CHECK(n15 == wang_betti(MonodromyData::trivial(double_cover_betti(r, pi))));

    // Identity permutation reduces to the double cover of (fiber x S^1).
    CHECK(mapping_torus_cover_betti(r, pi, {0, 1}) == convolve(double_cover_betti(r, pi), sphere(1)));

    CHECK_THROWS_AS(mapping_torus_cover_betti(r, r.generator(0), {1, 0}), std::invalid_argument);
    CHECK_THROWS_AS(mapping_torus_cover_betti(TruncatedRing({7, 6}), pi, {1, 0}), std::invalid_argument);
}

TEST_CASE("characteristic number reduction")
{
    const ReductionReport with = char_number_reduction_report(1);
    CHECK(with.correction_term == 0);
    CHECK(with.equivalent);
    CHECK(with.theta == 1);
    bool flagged = false;
    for (const auto& row : with.rows)
        flagged = flagged || row.provenance == "geometric input";
    CHECK(flagged);
    CHECK(char_number_reduction_report(0).theta == 0);
    CHECK_THROWS_AS(char_number_reduction_report(2), std::invalid_argument);
}
