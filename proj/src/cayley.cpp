#include "kervaire/cayley.hpp"

#include <cmath>
#include <numbers>
#include <random>
#include <stdexcept>

namespace kervaire {

namespace {

struct Table {
    std::array<std::array<BasisProduct, 8>, 8> entries{};

    Table()
    {
        for (int i = 0; i < 8; ++i) {
            entries[0][i] = {1, i};
            entries[i][0] = {1, i};
        }
        for (int i = 1; i < 8; ++i)
            entries[i][i] = {-1, 0};
        for (const auto& t : fano_triples()) {
            for (int shift = 0; shift < 3; ++shift) {
                const int a = t[shift], b = t[(shift + 1) % 3], c = t[(shift + 2) % 3];
                entries[a][b] = {1, c};
                entries[b][a] = {-1, c};
            }
        }
    }
};

const Table& table()
{
    static const Table t;
    return t;
}

std::array<double, 8> imaginary(const std::array<double, 7>& v)
{
    std::array<double, 8> c{};
    for (std::size_t i = 0; i < 7; ++i)
        c[i + 1] = v[i];
    return c;
}

std::array<double, 7> mat_vec(const Matrix7& m, const std::array<double, 7>& v)
{
    std::array<double, 7> out{};
    for (std::size_t r = 0; r < 7; ++r)
        for (std::size_t c = 0; c < 7; ++c)
            out[r] += m[r][c] * v[c];
    return out;
}

}  // namespace

const std::array<std::array<int, 3>, 7>& fano_triples()
{
    static const std::array<std::array<int, 3>, 7> triples{
        {{1, 2, 3}, {1, 4, 5}, {1, 7, 6}, {2, 4, 6}, {2, 5, 7}, {3, 4, 7}, {3, 6, 5}}};
    return triples;
}

BasisProduct basis_product(int i, int j)
{
    if (i < 0 || i > 7 || j < 0 || j > 7)
        throw std::out_of_range("octonion basis index out of range");
    return table().entries[i][j];
}

std::pair<double, double> cos_sin_pi(double t)
{
    const double doubled = 2.0 * t;
    if (doubled == std::round(doubled)) {
        switch (((static_cast<long long>(std::round(doubled)) % 4) + 4) % 4) {
        case 0:
            return {1.0, 0.0};
        case 1:
            return {0.0, 1.0};
        case 2:
            return {-1.0, 0.0};
        default:
            return {0.0, -1.0};
        }
    }
    return {std::cos(t * std::numbers::pi), std::sin(t * std::numbers::pi)};
}

Matrix7 neutrality_operator(double t, const Octonion<double>& axis)
{
    if (!axis.is_imaginary())
        throw std::invalid_argument("axis must be an imaginary octonion");
    if (std::abs(axis.norm2() - 1.0) > 1e-12)
        throw std::invalid_argument("axis must be a unit vector (squared norm " + std::to_string(axis.norm2()) + ")");
    const auto [c, s] = cos_sin_pi(t);
    const Octonion<double> u = Octonion<double>::real(c) + axis * s;
    Matrix7 m{};
    for (int j = 1; j < 8; ++j) {
        const Octonion<double> v = Octonion<double>::unit(j);
        const Octonion<double> along = axis * v.dot(axis);
        const Octonion<double> image = along + u * (v - along);
        for (int r = 1; r < 8; ++r)
            m[r - 1][j - 1] = image[static_cast<std::size_t>(r)];
    }
    return m;
}

std::array<std::array<Rational, 7>, 7> neutrality_operator_exact(int half_turns, const Octonion<Rational>& axis)
{
    if (!axis.is_imaginary() || axis.norm2() != 1)
        throw std::invalid_argument("axis must be an imaginary unit octonion");
    static const int cos_table[4] = {1, 0, -1, 0};
    static const int sin_table[4] = {0, 1, 0, -1};
    const int q = ((half_turns % 4) + 4) % 4;
    const Octonion<Rational> u = Octonion<Rational>::real(Rational(cos_table[q])) + axis * Rational(sin_table[q]);
    std::array<std::array<Rational, 7>, 7> m{};
    for (int j = 1; j < 8; ++j) {
        const Octonion<Rational> v = Octonion<Rational>::unit(j);
        const Octonion<Rational> along = axis * v.dot(axis);
        const Octonion<Rational> image = along + u * (v - along);
        for (int r = 1; r < 8; ++r)
            m[r - 1][j - 1] = image[static_cast<std::size_t>(r)];
    }
    return m;
}

NeutralityReport verify_neutrality(std::size_t grid_size, std::size_t samples, std::uint64_t seed)
{
    if (grid_size < 2)
        throw std::invalid_argument("grid needs at least the two endpoints");
    NeutralityReport report;
    report.grid_size = grid_size;
    report.samples = samples;
    report.seed = seed;
    report.mode = "float64 on the grid (cos(t pi) is irrational off multiples of 1/2); exact rationals at t = 0, 1/2, 1";

    std::mt19937_64 rng(seed);
    std::normal_distribution<double> gauss(0.0, 1.0);
    auto normalize = [](std::array<double, 7>& v) {
        double n = 0;
        for (double x : v)
            n += x * x;
        n = std::sqrt(n);
        for (double& x : v)
            x /= n;
    };
    for (std::size_t s = 0; s < samples; ++s) {
        std::array<double, 7> e1{}, e2{};
        for (auto& x : e1)
            x = gauss(rng);
        for (auto& x : e2)
            x = gauss(rng);
        normalize(e1);
        double proj = 0;
        for (std::size_t i = 0; i < 7; ++i)
            proj += e1[i] * e2[i];
        for (std::size_t i = 0; i < 7; ++i)
            e2[i] -= proj * e1[i];
        normalize(e2);
        const Octonion<double> axis(imaginary(e1));

        for (std::size_t k = 0; k < grid_size; ++k) {
            const double t = static_cast<double>(k) / static_cast<double>(grid_size - 1);
            const Matrix7 f = neutrality_operator(t, axis);
            const auto y = mat_vec(f, e2);
            double norm = 0, inner = 0;
            for (std::size_t i = 0; i < 7; ++i) {
                norm += y[i] * y[i];
                inner += y[i] * e1[i];
            }
            report.max_norm_deviation = std::max(report.max_norm_deviation, std::abs(std::sqrt(norm) - 1.0));
            report.max_axis_inner_product = std::max(report.max_axis_inner_product, std::abs(inner));
            for (std::size_t r = 0; r < 7; ++r)
                for (std::size_t c = 0; c < 7; ++c) {
                    double ftf = 0;
                    for (std::size_t i = 0; i < 7; ++i)
                        ftf += f[i][r] * f[i][c];
                    report.max_orthogonality_defect =
                        std::max(report.max_orthogonality_defect, std::abs(ftf - (r == c ? 1.0 : 0.0)));
                }
            const auto fixed = mat_vec(f, e1);
            for (std::size_t i = 0; i < 7; ++i)
                report.max_axis_defect = std::max(report.max_axis_defect, std::abs(fixed[i] - e1[i]));
            if (k == 0)
                for (std::size_t r = 0; r < 7; ++r)
                    for (std::size_t c = 0; c < 7; ++c)
                        report.max_start_defect =
                            std::max(report.max_start_defect, std::abs(f[r][c] - (r == c ? 1.0 : 0.0)));
            if (k + 1 == grid_size)
                for (std::size_t i = 0; i < 7; ++i)
                    report.max_end_defect = std::max(report.max_end_defect, std::abs(y[i] + e2[i]));
        }
    }

    // Exact endpoint check on a rational orthonormal pair.
    Octonion<Rational> axis;
    axis[1] = Rational(3, 5);
    axis[2] = Rational(4, 5);
    Octonion<Rational> second;
    second[3] = Rational(1);
    auto apply_exact = [](const std::array<std::array<Rational, 7>, 7>& m, const Octonion<Rational>& v) {
        Octonion<Rational> out;
        for (std::size_t r = 0; r < 7; ++r)
            for (std::size_t c = 0; c < 7; ++c)
                out[r + 1] += m[r][c] * v[c + 1];
        return out;
    };
    const auto f0 = neutrality_operator_exact(0, axis);
    const auto f_half = neutrality_operator_exact(1, axis);
    const auto f1 = neutrality_operator_exact(2, axis);
    bool exact = true;
    for (std::size_t r = 0; r < 7; ++r)
        for (std::size_t c = 0; c < 7; ++c)
            exact = exact && f0[r][c] == Rational(r == c ? 1 : 0);
    exact = exact && apply_exact(f1, second) == -second && apply_exact(f1, axis) == axis;
    const Octonion<Rational> quarter = apply_exact(f_half, second);
    exact = exact && quarter == axis * second && quarter.dot(axis) == 0 && quarter.norm2() == 1;
    report.exact_endpoints = exact;

    const double tol = report.tolerance;
    report.pass = report.max_norm_deviation <= tol && report.max_axis_inner_product <= tol &&
                  report.max_orthogonality_defect <= tol && report.max_axis_defect <= tol &&
                  report.max_start_defect <= tol && report.max_end_defect <= tol && report.exact_endpoints;
    return report;
}

NormReport verify_norm_multiplicativity(std::size_t samples, std::uint64_t seed)
{
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> num(-20, 20), den(1, 12);
    auto random_octonion = [&]() {
        Octonion<Rational> x;
        for (std::size_t i = 0; i < 8; ++i)
            x[i] = Rational(num(rng), den(rng));
        return x;
    };
    NormReport report;
    report.samples = samples;
    for (std::size_t s = 0; s < samples; ++s) {
        const Octonion<Rational> x = random_octonion(), y = random_octonion();
        const Octonion<Rational> xy = x * y;
        report.multiplicative += xy.norm2() == x.norm2() * y.norm2();
        report.sign_equivariant += (-x) * y == -xy;
        report.conjugation += xy.conjugate() == y.conjugate() * x.conjugate();
    }
    report.pass = report.multiplicative == samples && report.sign_equivariant == samples &&
                  report.conjugation == samples;
    return report;
}

}  // namespace kervaire
