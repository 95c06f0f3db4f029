#ifndef KERVAIRE_F2_HPP_
#define KERVAIRE_F2_HPP_

#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace kervaire {

class DimensionMismatch : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// A vector over the two-element field, bit-packed into 64-bit words.
class BitVector {
public:
    BitVector() = default;
    explicit BitVector(std::size_t length);

    /// Parses a string of '0'/'1' characters, first character is coordinate 0.
    static BitVector from_string(std::string_view bits);
    static BitVector unit(std::size_t length, std::size_t index);

    std::size_t size() const { return size_; }

    bool get(std::size_t i) const;
    void set(std::size_t i, bool value = true);
    void flip(std::size_t i);

    BitVector& operator+=(const BitVector& other);
    friend BitVector operator+(BitVector lhs, const BitVector& rhs)
    {
        lhs += rhs;
        return lhs;
    }

    /// Parity of the coordinatewise product.
    bool dot(const BitVector& other) const;
    bool is_zero() const;
    std::size_t popcount() const;
    /// Index of the lowest set coordinate, or size() when zero.
    std::size_t lowest_set() const;

    /// Concatenation; coordinates of `tail` follow those of `*this`.
    BitVector concat(const BitVector& tail) const;
    BitVector slice(std::size_t offset, std::size_t length) const;

    std::string to_string() const;

    bool operator==(const BitVector&) const = default;
    /// Lexicographic in coordinate order; shorter vectors first.
    std::strong_ordering operator<=>(const BitVector& other) const;

    const std::vector<std::uint64_t>& words() const { return words_; }

private:
    void check_index(std::size_t i) const;

    std::size_t size_ = 0;
    std::vector<std::uint64_t> words_;
};

/// Dense matrix over F2 stored as bit-packed rows.
class BitMatrix {
public:
    BitMatrix() = default;
    BitMatrix(std::size_t rows, std::size_t cols);

    static BitMatrix identity(std::size_t n);
    static BitMatrix from_rows(const std::vector<BitVector>& rows, std::size_t cols);
    static BitMatrix from_columns(const std::vector<BitVector>& columns, std::size_t rows);
    /// Rows given as '0'/'1' strings, all of equal length.
    static BitMatrix parse(std::initializer_list<std::string_view> rows);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    bool get(std::size_t r, std::size_t c) const;
    void set(std::size_t r, std::size_t c, bool value = true);

    const BitVector& row(std::size_t r) const;
    BitVector& row(std::size_t r);
    BitVector column(std::size_t c) const;

    BitMatrix transpose() const;
    BitMatrix operator*(const BitMatrix& rhs) const;
    BitVector operator*(const BitVector& v) const;
    BitMatrix& operator+=(const BitMatrix& rhs);
    friend BitMatrix operator+(BitMatrix lhs, const BitMatrix& rhs)
    {
        lhs += rhs;
        return lhs;
    }

    /// Block concatenation.
    BitMatrix hstack(const BitMatrix& right) const;
    BitMatrix vstack(const BitMatrix& below) const;
    /// Copy `block` into this matrix with its top-left corner at (r0, c0).
    void place(std::size_t r0, std::size_t c0, const BitMatrix& block);

    bool is_zero() const;
    bool is_symmetric() const;
    bool has_zero_diagonal() const;

    std::string to_string() const;

    bool operator==(const BitMatrix&) const = default;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<BitVector> data_;
};

/// Reduced row echelon form together with its pivot columns.
struct RowEchelon {
    BitMatrix reduced;
    std::vector<std::size_t> pivots;
};

RowEchelon row_reduce(const BitMatrix& m);

std::size_t rank(const BitMatrix& m);

/// Basis of {v : m v = 0}, one vector per free column in increasing column order.
std::vector<BitVector> kernel_basis(const BitMatrix& m);

/// Some x with m x = b, or nullopt when b is outside the column space.
std::optional<BitVector> solve(const BitMatrix& m, const BitVector& b);

std::optional<BitMatrix> inverse(const BitMatrix& m);

/// Greedy basis of span(vectors), keeping the first independent ones in input order.
std::vector<BitVector> independent_subset(const std::vector<BitVector>& vectors);

/// Chosen basis of a quotient Z/B for subspaces B ⊆ Z of F2^n.
///
/// Representatives are drawn greedily from the supplied spanning set of Z in order,
/// skipping anything already in B + (earlier representatives).
class Subquotient {
public:
    Subquotient(std::size_t ambient, const std::vector<BitVector>& cycles,
                const std::vector<BitVector>& boundaries);

    std::size_t ambient() const { return ambient_; }
    std::size_t dim() const { return representatives_.size(); }
    const std::vector<BitVector>& representatives() const { return representatives_; }
    const std::vector<BitVector>& boundary_basis() const { return boundaries_; }

    /// Coordinates of the class of z, or nullopt when z is not in Z.
    std::optional<BitVector> coordinates(const BitVector& z) const;
    bool is_zero_class(const BitVector& z) const;
    bool contains(const BitVector& z) const { return coordinates(z).has_value(); }

private:
    std::size_t ambient_;
    std::vector<BitVector> boundaries_;
    std::vector<BitVector> representatives_;
    BitMatrix combined_;  // columns: representatives then boundary basis
};

/// Matrix of the map induced on subquotients by `map` (source -> target).
BitMatrix induced_map(const BitMatrix& map, const Subquotient& source, const Subquotient& target);

}  // namespace kervaire

#endif  // KERVAIRE_F2_HPP_
