#include "kervaire/grouphom.hpp"

#include <boost/multiprecision/cpp_int.hpp>

#include <bit>
#include <cstdint>
#include <map>

namespace kervaire {

namespace {

using Integer = boost::multiprecision::cpp_int;
// Blade e_{i1} ... e_{ik} (i1 < ... < ik) keyed by its index bitmask.
using Multivector = std::map<std::uint32_t, Integer>;

int blade_sign(std::uint32_t a, std::uint32_t b, int square)
{
    // Transpositions needed to sort e_A e_B, then e_i e_i = square for shared indices.
    int swaps = 0;
    for (std::uint32_t s = a >> 1; s != 0; s >>= 1)
        swaps += std::popcount(s & b);
    int sign = swaps % 2 ? -1 : 1;
    if (square < 0 && std::popcount(a & b) % 2)
        sign = -sign;
    return sign;
}

Multivector multiply(const Multivector& x, const Multivector& y, int square)
{
    Multivector out;
    for (const auto& [a, ca] : x)
        for (const auto& [b, cb] : y) {
            Integer& slot = out[a ^ b];
            if (blade_sign(a, b, square) > 0)
                slot += ca * cb;
            else
                slot -= ca * cb;
        }
    std::erase_if(out, [](const auto& kv) { return kv.second == 0; });
    return out;
}

struct Lift {
    Multivector element;
    Integer normalizer;  // product of squared lengths of the reflection vectors
    std::size_t factors = 0;
};

std::vector<std::vector<int>> multiply(const std::vector<std::vector<int>>& a, const std::vector<std::vector<int>>& b)
{
    const std::size_t n = a.size();
    std::vector<std::vector<int>> c(n, std::vector<int>(n, 0));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t k = 0; k < n; ++k)
            if (a[i][k] != 0)
                for (std::size_t j = 0; j < n; ++j)
                    c[i][j] += a[i][k] * b[k][j];
    return c;
}

// g = R_{v1} ... R_{vk}, each v an axis vector or a difference/sum of two axis vectors.
Lift lift_signed_permutation(const SignedPermutation& g, int square)
{
    const std::size_t n = g.size();
    if (n > 31)
        throw std::invalid_argument("Clifford lift supports at most 31 coordinates");
    auto current = g.matrix();
    Lift lift{Multivector{{0U, Integer(1)}}, Integer(1), 0};
    for (std::size_t i = 0; i < n; ++i) {
        std::vector<int> w(n);
        for (std::size_t r = 0; r < n; ++r)
            w[r] = current[r][i];
        std::vector<int> v(n, 0);
        if (w[i] == 1)
            continue;
        if (w[i] == -1) {
            v[i] = 1;
        } else {
            v = w;
            for (auto& c : v)
                c = -c;
            v[i] += 1;
        }
        int norm = 0;
        for (int c : v)
            norm += c * c;
        std::vector<std::vector<int>> reflection(n, std::vector<int>(n, 0));
        for (std::size_t r = 0; r < n; ++r)
            for (std::size_t c = 0; c < n; ++c) {
                const int twice = 2 * v[r] * v[c];
                if (twice % norm != 0)
                    throw std::logic_error("reflection is not integral");
                reflection[r][c] = (r == c ? 1 : 0) - twice / norm;
            }
        current = multiply(reflection, current);

        Multivector vec;
        for (std::size_t k = 0; k < n; ++k)
            if (v[k] != 0)
                vec[std::uint32_t{1} << k] = v[k];
        lift.element = multiply(lift.element, vec, square);
        lift.normalizer *= norm;
        ++lift.factors;
    }
    if (current != SignedPermutation::identity(n).matrix())
        throw std::logic_error("reflection factorization did not terminate at the identity");
    return lift;
}

// Inverse up to the positive scalar 1/normalizer: square^k times the reversal.
Multivector inverse_numerator(const Lift& lift, int square)
{
    Multivector out;
    const bool flip_all = square < 0 && lift.factors % 2 == 1;
    for (const auto& [blade, c] : lift.element) {
        const int grade = std::popcount(blade);
        bool negate = (grade * (grade - 1) / 2) % 2 == 1;
        if (flip_all)
            negate = !negate;
        out[blade] = negate ? Integer(-c) : c;
    }
    return out;
}

}  // namespace

bool pin_lift_w2(const SignedPermRepresentation& rho, PinSignature signature)
{
    const Presentation& p = rho.presentation();
    const GroupWord& r = p.relator();
    for (std::size_t x = 0; x < p.generator_count(); ++x)
        if (r.occurrences(x) % 2 != 0)
            throw std::invalid_argument("generator " + p.generators()[x] +
                                        " occurs an odd number of times in the relator; the lift sign is not defined");
    const int square = signature == PinSignature::plus ? 1 : -1;

    std::vector<Lift> lifts;
    for (std::size_t x = 0; x < p.generator_count(); ++x)
        lifts.push_back(lift_signed_permutation(rho.image(x), square));

    Multivector product{{0U, Integer(1)}};
    Integer normalizer = 1;
    for (const auto& l : r.letters()) {
        const Lift& lift = lifts[l.generator];
        product = multiply(product, l.exponent > 0 ? lift.element : inverse_numerator(lift, square), square);
        normalizer *= lift.normalizer;
    }
    // The relator acts trivially, so the lift is a scalar s with s^2 = normalizer.
    if (product.size() != 1 || product.begin()->first != 0U)
        throw std::logic_error("relator lift is not a scalar");
    const Integer& s = product.begin()->second;
    if (s * s != normalizer)
        throw std::logic_error("relator lift is not +-1 after normalization");
    return s < 0;
}

}  // namespace kervaire
