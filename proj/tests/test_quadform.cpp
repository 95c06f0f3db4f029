#include "doctest.h"
#include "generators.hpp"
#include "kervaire/quadform.hpp"

#include <array>
#include <string>

using namespace kervaire;

namespace {

// Independent Arf oracle: q(x) by brute-force expansion over all subset pairs, then majority vote.
int brute_arf(const BitMatrix& gram, const BitVector& values)
{
    const std::size_t n = gram.rows();
    std::size_t zeros = 0;
    for (unsigned long long x = 0; x < (1ULL << n); ++x) {
        int q = 0;
        for (std::size_t i = 0; i < n; ++i) {
            if (!((x >> i) & 1))
                continue;
            q ^= values.get(i);
            for (std::size_t j = i + 1; j < n; ++j)
                if ((x >> j) & 1)
                    q ^= gram.get(i, j);
        }
        zeros += q == 0;
    }
    if (2 * zeros > (1ULL << n))
        return 0;
    if (2 * zeros < (1ULL << n))
        return 1;
    return -1;
}

void check_pairing_table(const BitMatrix& gram, const std::vector<HyperbolicPair>& pairs)
{
    auto b = [&gram](const BitVector& x, const BitVector& y) { return x.dot(gram * y); };
    for (std::size_t i = 0; i < pairs.size(); ++i) {
        for (std::size_t j = 0; j < pairs.size(); ++j) {
            CHECK(b(pairs[i].a, pairs[j].b) == (i == j));
            CHECK_FALSE(b(pairs[i].a, pairs[j].a));
            CHECK_FALSE(b(pairs[i].b, pairs[j].b));
        }
    }
}

// Pairs of {A,B,C,D} in the order AB, AC, AD, BC, BD, CD; entry 1 iff the pairs are disjoint.
BitMatrix complementary_pairs_gram()
{
    const std::array<std::string, 6> names = {"AB", "AC", "AD", "BC", "BD", "CD"};
    BitMatrix g(6, 6);
    for (std::size_t i = 0; i < 6; ++i)
        for (std::size_t j = 0; j < 6; ++j)
            g.set(i, j, names[i].find_first_of(names[j]) == std::string::npos);
    return g;
}

}  // namespace

TEST_CASE("symplectic basis examples")
{
    const BitMatrix h = BitMatrix::parse({"01", "10"});
    const auto pairs = symplectic_basis(h);
    REQUIRE(pairs.size() == 1);
    CHECK(pairs[0].a == BitVector::unit(2, 0));
    CHECK(pairs[0].b == BitVector::unit(2, 1));

    const BitMatrix cp = complementary_pairs_gram();
    const auto cp_pairs = symplectic_basis(cp);
    REQUIRE(cp_pairs.size() == 3);
    check_pairing_table(cp, cp_pairs);
    // Lowest-index tie-breaking: AB meets CD, AC meets BD, AD meets BC.
    CHECK(cp_pairs[0].a.to_string() == "100000");
    CHECK(cp_pairs[0].b.to_string() == "000001");
    CHECK(cp_pairs[1].a.to_string() == "010000");
    CHECK(cp_pairs[1].b.to_string() == "000010");
    CHECK(cp_pairs[2].a.to_string() == "001000");
    CHECK(cp_pairs[2].b.to_string() == "000100");
}

TEST_CASE("symplectic basis errors")
{
    try {
        symplectic_basis(BitMatrix(2, 2));
        FAIL("zero form accepted");
    } catch (const DegenerateFormError& e) {
        CHECK(e.radical_vector() == BitVector::unit(2, 0));
    }
    CHECK_THROWS_AS(symplectic_basis(BitMatrix(3, 3)), std::invalid_argument);
    CHECK_THROWS_AS(symplectic_basis(BitMatrix::parse({"11", "10"})), std::invalid_argument);
    CHECK_THROWS_AS(symplectic_basis(BitMatrix::parse({"01", "00"})), std::invalid_argument);

    // Radical vector reported is genuinely in the radical.
    const BitMatrix g = BitMatrix::parse({"0110", "1010", "1100", "0000"});
    try {
        symplectic_basis(g);
        FAIL("degenerate form accepted");
    } catch (const DegenerateFormError& e) {
        CHECK_FALSE(e.radical_vector().is_zero());
        CHECK((g * e.radical_vector()).is_zero());
    }
}

TEST_CASE("extend_quadratic examples")
{
    const BitMatrix h = BitMatrix::parse({"01", "10"});
    const std::vector<BitVector> std_basis = {BitVector::unit(2, 0), BitVector::unit(2, 1)};
    const BitVector both = BitVector::from_string("11");

    CHECK(extend_quadratic({false, false}, h, std_basis).q(both));
    CHECK(extend_quadratic({true, true}, h, std_basis).q(both));

    const QuadraticSpace zero = extend_quadratic({false, false}, BitMatrix(2, 2), std_basis);
    for (const char* s : {"00", "01", "10", "11"})
        CHECK_FALSE(zero.q(BitVector::from_string(s)));

    // Non-standard basis: values are honoured on the supplied vectors.
    const std::vector<BitVector> skew = {BitVector::from_string("11"), BitVector::from_string("01")};
    const QuadraticSpace s = extend_quadratic({true, false}, h, skew);
    CHECK(s.q(skew[0]));
    CHECK_FALSE(s.q(skew[1]));

    CHECK_THROWS_AS(extend_quadratic({false, false}, h, {both, both}), std::invalid_argument);
    CHECK_THROWS_AS(extend_quadratic({false}, h, {both}), std::invalid_argument);
}

TEST_CASE("arf examples")
{
    const BitMatrix h = BitMatrix::parse({"01", "10"});
    CHECK(arf(QuadraticSpace(h, BitVector::from_string("11"))));
    CHECK_FALSE(arf(QuadraticSpace(h, BitVector::from_string("00"))));
    CHECK_FALSE(arf(QuadraticSpace(testgen::hyperbolic_gram(4), BitVector(8))));
    CHECK_THROWS_AS(arf(QuadraticSpace(BitMatrix(2, 2), BitVector(2))), DegenerateFormError);

    // Four hyperbolic pairs with values (0,1),(0,0),(0,0),(1,1): only the last pair contributes.
    CHECK(arf(QuadraticSpace(testgen::hyperbolic_gram(4), BitVector::from_string("01000011"))));
    CHECK(arf(QuadraticSpace(testgen::hyperbolic_gram(4), BitVector::from_string("00000011"))));
}

TEST_CASE("counting oracle examples")
{
    const BitMatrix h = BitMatrix::parse({"01", "10"});
    const QuadraticSpace nontrivial(h, BitVector::from_string("11"));
    CHECK(count_zeros(nontrivial) == 1);
    CHECK(arf_count_oracle(nontrivial));
    const QuadraticSpace trivial(h, BitVector::from_string("00"));
    CHECK(count_zeros(trivial) == 3);
    CHECK_FALSE(arf_count_oracle(trivial));
    const QuadraticSpace g2(testgen::hyperbolic_gram(2), BitVector(4));
    CHECK(count_zeros(g2) == 10);
    CHECK_FALSE(arf_count_oracle(g2));

    CHECK_THROWS_AS(arf_count_oracle(QuadraticSpace(BitMatrix(2, 2), BitVector(2))), InconsistentRefinementError);
    CHECK_THROWS_AS(arf_count_oracle(QuadraticSpace(BitMatrix(3, 3), BitVector(3))), InconsistentRefinementError);
}

TEST_CASE("refinement rule holds by enumeration")
{
    std::mt19937_64 rng(99);
    for (std::size_t genus = 1; genus <= 4; ++genus) {
        const QuadraticSpace s = testgen::random_space(rng, genus);
        const std::size_t n = s.dim();
        for (unsigned long long x = 0; x < (1ULL << n); ++x) {
            for (unsigned long long y = 0; y < (1ULL << n); y += 7) {
                BitVector vx(n), vy(n);
                for (std::size_t i = 0; i < n; ++i) {
                    vx.set(i, (x >> i) & 1);
                    vy.set(i, (y >> i) & 1);
                }
                CHECK(s.q(vx + vy) == (s.q(vx) ^ s.q(vy) ^ s.pairing(vx, vy)));
            }
        }
    }
}

TEST_CASE("arf agrees with both oracles on every space of dim 2 and 4")
{
    for (std::size_t n : {2, 4}) {
        const std::size_t slots = n * (n - 1) / 2;
        for (unsigned long long mask = 0; mask < (1ULL << slots); ++mask) {
            BitMatrix g(n, n);
            std::size_t bit = 0;
            for (std::size_t i = 0; i < n; ++i)
                for (std::size_t j = i + 1; j < n; ++j, ++bit)
                    if ((mask >> bit) & 1) {
                        g.set(i, j, true);
                        g.set(j, i, true);
                    }
            const bool nondegenerate = rank(g) == n;
            for (unsigned long long v = 0; v < (1ULL << n); ++v) {
                BitVector values(n);
                for (std::size_t i = 0; i < n; ++i)
                    values.set(i, (v >> i) & 1);
                const QuadraticSpace s(g, values);
                if (nondegenerate) {
                    const int expected = brute_arf(g, values);
                    CHECK(static_cast<int>(arf(s)) == expected);
                    CHECK(static_cast<int>(arf_count_oracle(s)) == expected);
                } else {
                    CHECK_THROWS_AS(arf(s), DegenerateFormError);
                    CHECK_THROWS_AS(arf_count_oracle(s), InconsistentRefinementError);
                }
            }
        }
    }
}

TEST_CASE("random spaces: pairing table, oracle, change of basis")
{
    std::mt19937_64 rng(2024);
    std::uniform_int_distribution<std::size_t> genus_dist(1, 8);
    for (int trial = 0; trial < 120; ++trial) {
        const std::size_t genus = genus_dist(rng);
        const QuadraticSpace s = testgen::random_space(rng, genus);
        const auto pairs = symplectic_basis(s.gram());
        CHECK(pairs.size() == genus);
        check_pairing_table(s.gram(), pairs);

        const bool value = arf(s);
        CHECK(arf_count_oracle(s) == value);
        const QuadraticSpace moved = testgen::transport(s, testgen::random_invertible(rng, s.dim()));
        CHECK(arf(moved) == value);
    }
}

TEST_CASE("QuadraticSpace rejects malformed input")
{
    CHECK_THROWS_AS(QuadraticSpace(BitMatrix::parse({"11", "10"}), BitVector(2)), std::invalid_argument);
    CHECK_THROWS_AS(QuadraticSpace(BitMatrix::parse({"10", "01"}), BitVector(2)), std::invalid_argument);
    CHECK_THROWS_AS(QuadraticSpace(BitMatrix(2, 2), BitVector(3)), DimensionMismatch);
}
