#ifndef KERVAIRE_CAYLEY_HPP_
#define KERVAIRE_CAYLEY_HPP_

#include <boost/multiprecision/cpp_int.hpp>

#include <array>
#include <cstdint>
#include <string>
#include <vector>

namespace kervaire {

using Rational = boost::multiprecision::cpp_rational;

/// Oriented lines of the Fano plane: e_i e_j = e_k for each listed (i, j, k) and its cyclic shifts.
const std::array<std::array<int, 3>, 7>& fano_triples();

struct BasisProduct {
    int sign;   // +1 or -1
    int index;  // 0 is the real unit
};

/// e_i e_j for 0 <= i, j <= 7.
BasisProduct basis_product(int i, int j);

template <class T>
class Octonion {
public:
    Octonion() { coords_.fill(T(0)); }
    explicit Octonion(const std::array<T, 8>& coords) : coords_(coords) {}

    static Octonion unit(int i)
    {
        Octonion o;
        o.coords_.at(static_cast<std::size_t>(i)) = T(1);
        return o;
    }
    static Octonion real(const T& x)
    {
        Octonion o;
        o.coords_[0] = x;
        return o;
    }

    const T& operator[](std::size_t i) const { return coords_.at(i); }
    T& operator[](std::size_t i) { return coords_.at(i); }
    const std::array<T, 8>& coords() const { return coords_; }

    Octonion operator+(const Octonion& o) const
    {
        Octonion r;
        for (std::size_t i = 0; i < 8; ++i)
            r.coords_[i] = coords_[i] + o.coords_[i];
        return r;
    }
    Octonion operator-(const Octonion& o) const
    {
        Octonion r;
        for (std::size_t i = 0; i < 8; ++i)
            r.coords_[i] = coords_[i] - o.coords_[i];
        return r;
    }
    Octonion operator-() const { return Octonion() - *this; }
    Octonion operator*(const T& s) const
    {
        Octonion r;
        for (std::size_t i = 0; i < 8; ++i)
            r.coords_[i] = coords_[i] * s;
        return r;
    }
    Octonion operator*(const Octonion& o) const
    {
        Octonion r;
        for (int i = 0; i < 8; ++i) {
            if (coords_[i] == T(0))
                continue;
            for (int j = 0; j < 8; ++j) {
                const BasisProduct p = basis_product(i, j);
                const T term = coords_[i] * o.coords_[j];
                if (p.sign > 0)
                    r.coords_[p.index] += term;
                else
                    r.coords_[p.index] -= term;
            }
        }
        return r;
    }

    Octonion conjugate() const
    {
        Octonion r = -*this;
        r.coords_[0] = coords_[0];
        return r;
    }
    T dot(const Octonion& o) const
    {
        T s(0);
        for (std::size_t i = 0; i < 8; ++i)
            s += coords_[i] * o.coords_[i];
        return s;
    }
    T norm2() const { return dot(*this); }
    bool is_imaginary() const { return coords_[0] == T(0); }

    bool operator==(const Octonion&) const = default;

private:
    std::array<T, 8> coords_;
};

/// Matrix of x -> a x on all eight coordinates, row-major.
template <class T>
std::array<std::array<T, 8>, 8> left_multiplication_matrix(const Octonion<T>& a)
{
    std::array<std::array<T, 8>, 8> m{};
    for (int c = 0; c < 8; ++c) {
        const Octonion<T> col = a * Octonion<T>::unit(c);
        for (int r = 0; r < 8; ++r)
            m[r][c] = col[r];
    }
    return m;
}

using Matrix7 = std::array<std::array<double, 7>, 7>;

/// (cos(t pi), sin(t pi)) with exact values at multiples of 1/2.
std::pair<double, double> cos_sin_pi(double t);

/// F(t, axis) on the imaginary octonions (coordinates e_1..e_7): identity on the axis, left
/// multiplication by cos(t pi) + axis sin(t pi) on its orthogonal complement.
Matrix7 neutrality_operator(double t, const Octonion<double>& axis);

/// Same map with exact arithmetic, for t a multiple of 1/2 given as half_turns = 2t.
std::array<std::array<Rational, 7>, 7> neutrality_operator_exact(int half_turns, const Octonion<Rational>& axis);

struct NeutralityReport {
    std::size_t grid_size = 0;
    std::size_t samples = 0;
    std::uint64_t seed = 0;
    double tolerance = 1e-12;
    double max_norm_deviation = 0;         // | |F e2| - 1 |
    double max_axis_inner_product = 0;     // |<F e2, e1>|
    double max_orthogonality_defect = 0;   // max |F^T F - I|
    double max_axis_defect = 0;            // max |F e1 - e1|
    double max_start_defect = 0;           // max |F(0) - Id|
    double max_end_defect = 0;             // max |F(1) e2 + e2|, Stiefel pair (e1, -e2)
    bool exact_endpoints = false;          // t = 0, 1 also checked in exact arithmetic on the rational test pair
    std::string mode;
    bool pass = false;
};

/// Random orthonormal pairs (e1, e2) of imaginary octonions from the seeded generator, F on the
/// grid t = k / (grid_size - 1).
NeutralityReport verify_neutrality(std::size_t grid_size, std::size_t samples, std::uint64_t seed);

struct NormReport {
    std::size_t samples = 0;
    std::size_t multiplicative = 0;   // |xy|^2 = |x|^2 |y|^2
    std::size_t sign_equivariant = 0; // (-x) y = -(x y)
    std::size_t conjugation = 0;      // conj(xy) = conj(y) conj(x)
    bool pass = false;
};

/// Exact checks on random rational octonions.
NormReport verify_norm_multiplicativity(std::size_t samples, std::uint64_t seed);

}  // namespace kervaire

#endif  // KERVAIRE_CAYLEY_HPP_
