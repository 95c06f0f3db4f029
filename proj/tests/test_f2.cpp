#include "doctest.h"
#include "kervaire/f2.hpp"

#include <random>
#include <set>

using namespace kervaire;

namespace {

// 1 + P for the coordinate permutation (1 4)(3 6) on six coordinates (1-based).
BitMatrix one_plus_involution()
{
    BitMatrix m = BitMatrix::identity(6);
    const std::size_t image[6] = {3, 1, 5, 0, 4, 2};
    for (std::size_t c = 0; c < 6; ++c)
        m.row(image[c]).flip(c);
    return m;
}

BitVector vec_from_index(std::size_t n, unsigned long long bits)
{
    BitVector v(n);
    for (std::size_t i = 0; i < n; ++i)
        if ((bits >> i) & 1U)
            v.set(i);
    return v;
}

BitMatrix random_matrix(std::mt19937_64& rng, std::size_t rows, std::size_t cols, double density = 0.5)
{
    std::bernoulli_distribution bit(density);
    BitMatrix m(rows, cols);
    for (std::size_t r = 0; r < rows; ++r)
        for (std::size_t c = 0; c < cols; ++c)
            m.set(r, c, bit(rng));
    return m;
}

BitVector random_vector(std::mt19937_64& rng, std::size_t n)
{
    std::bernoulli_distribution bit(0.5);
    BitVector v(n);
    for (std::size_t i = 0; i < n; ++i)
        v.set(i, bit(rng));
    return v;
}

}  // namespace

TEST_CASE("BitVector basics")
{
    BitVector v = BitVector::from_string("0110");
    CHECK(v.size() == 4);
    CHECK(v.get(1));
    CHECK_FALSE(v.get(0));
    CHECK_THROWS_AS(v.get(4), std::out_of_range);
    CHECK((v + BitVector::from_string("0101")).to_string() == "0011");
    CHECK_THROWS_AS(v + BitVector(5), DimensionMismatch);
    CHECK(v.dot(BitVector::from_string("0100")));
    CHECK_FALSE(v.dot(BitVector::from_string("0110")));

    BitVector wide(130);
    wide.set(129);
    wide.set(64);
    CHECK(wide.popcount() == 2);
    CHECK(wide.lowest_set() == 64);
    CHECK(wide.slice(64, 66).to_string().front() == '1');
}

TEST_CASE("rank examples")
{
    CHECK(rank(BitMatrix(3, 3)) == 0);
    CHECK(rank(BitMatrix::identity(6)) == 6);

    // Oracle: the column space has 2^rank elements.
    const BitMatrix m = one_plus_involution();
    std::set<std::string> image;
    for (unsigned long long x = 0; x < 64; ++x)
        image.insert((m * vec_from_index(6, x)).to_string());
    CHECK(image.size() == 4);
    CHECK(rank(m) == 2);
}

TEST_CASE("kernel examples")
{
    CHECK(kernel_basis(BitMatrix::identity(4)).empty());
    CHECK(kernel_basis(BitMatrix(2, 3)).size() == 3);

    const BitMatrix m = one_plus_involution();
    const auto basis = kernel_basis(m);
    REQUIRE(basis.size() == 4);
    for (const auto& v : basis)
        CHECK((m * v).is_zero());

    // Span of the returned basis equals the span of e2, e5, e1+e4, e3+e6, checked by enumeration.
    auto span = [](const std::vector<BitVector>& gens) {
        std::set<std::string> out;
        for (unsigned mask = 0; mask < (1U << gens.size()); ++mask) {
            BitVector s(6);
            for (std::size_t i = 0; i < gens.size(); ++i)
                if ((mask >> i) & 1U)
                    s += gens[i];
            out.insert(s.to_string());
        }
        return out;
    };
    const std::vector<BitVector> expected = {BitVector::from_string("010000"), BitVector::from_string("000010"),
                                             BitVector::from_string("100100"), BitVector::from_string("001001")};
    CHECK(span(basis) == span(expected));

    std::set<std::string> brute;
    for (unsigned long long x = 0; x < 64; ++x)
        if ((m * vec_from_index(6, x)).is_zero())
            brute.insert(vec_from_index(6, x).to_string());
    CHECK(span(basis) == brute);
}

TEST_CASE("solve examples")
{
    const BitVector b = BitVector::from_string("10110");
    CHECK(solve(BitMatrix::identity(5), b) == b);
    CHECK_FALSE(solve(BitMatrix(5, 5), b).has_value());
    CHECK_THROWS_AS(solve(BitMatrix(4, 5), b), DimensionMismatch);

    const BitMatrix m = one_plus_involution();
    const BitVector target = BitVector::from_string("100100");
    const auto x = solve(m, target);
    REQUIRE(x.has_value());
    CHECK(m * *x == target);

    // Brute force agrees on solvability for every right-hand side.
    std::set<std::string> reachable;
    for (unsigned long long v = 0; v < 64; ++v)
        reachable.insert((m * vec_from_index(6, v)).to_string());
    for (unsigned long long v = 0; v < 64; ++v) {
        const BitVector rhs = vec_from_index(6, v);
        CHECK(solve(m, rhs).has_value() == (reachable.count(rhs.to_string()) == 1));
    }
}

TEST_CASE("random matrix properties")
{
    std::mt19937_64 rng(12345);
    std::uniform_int_distribution<std::size_t> dim(1, 90);
    for (int trial = 0; trial < 200; ++trial) {
        const std::size_t rows = dim(rng), cols = dim(rng);
        const BitMatrix m = random_matrix(rng, rows, cols, trial % 3 == 0 ? 0.1 : 0.5);
        const std::size_t r = rank(m);
        CHECK(r <= std::min(rows, cols));
        CHECK(r + kernel_basis(m).size() == cols);
        CHECK(rank(m.transpose()) == r);

        const BitVector x = random_vector(rng, cols);
        const BitVector b = m * x;
        const auto sol = solve(m, b);
        REQUIRE(sol.has_value());
        CHECK(m * *sol == b);
    }
}

TEST_CASE("inverse and matrix algebra")
{
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 50; ++trial) {
        const BitMatrix m = random_matrix(rng, 12, 12);
        const auto inv = inverse(m);
        CHECK(inv.has_value() == (rank(m) == 12));
        if (inv)
            CHECK(m * *inv == BitMatrix::identity(12));
    }
    const BitMatrix a = BitMatrix::parse({"110", "011"});
    const BitMatrix b = BitMatrix::parse({"10", "01", "11"});
    CHECK((a * b).to_string() == "11\n10");
    CHECK_THROWS_AS(a * a, DimensionMismatch);
}

TEST_CASE("subquotient coordinates")
{
    // Z = span(e0, e1, e2), B = span(e0 + e1) inside F2^4.
    const std::vector<BitVector> cycles = {BitVector::from_string("1000"), BitVector::from_string("0100"),
                                           BitVector::from_string("0010")};
    const std::vector<BitVector> boundaries = {BitVector::from_string("1100")};
    const Subquotient h(4, cycles, boundaries);
    CHECK(h.dim() == 2);
    CHECK(h.is_zero_class(BitVector::from_string("1100")));
    CHECK_FALSE(h.is_zero_class(BitVector::from_string("0100")));
    CHECK(h.coordinates(BitVector::from_string("1000")) == h.coordinates(BitVector::from_string("0100")));
    CHECK_FALSE(h.contains(BitVector::from_string("0001")));
}
