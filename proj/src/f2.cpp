#include "kervaire/f2.hpp"

#include <bit>
#include <sstream>
#include <utility>

namespace kervaire {

namespace {
constexpr std::size_t kWordBits = 64;

std::size_t word_count(std::size_t bits) { return (bits + kWordBits - 1) / kWordBits; }
}  // namespace

// ---------------------------------------------------------------- BitVector

BitVector::BitVector(std::size_t length) : size_(length), words_(word_count(length), 0) {}

BitVector BitVector::from_string(std::string_view bits)
{
    BitVector v(bits.size());
    for (std::size_t i = 0; i < bits.size(); ++i) {
        if (bits[i] == '1')
            v.set(i);
        else if (bits[i] != '0')
            throw std::invalid_argument("bit string may contain only '0' and '1'");
    }
    return v;
}

BitVector BitVector::unit(std::size_t length, std::size_t index)
{
    BitVector v(length);
    v.set(index);
    return v;
}

void BitVector::check_index(std::size_t i) const
{
    if (i >= size_)
        throw std::out_of_range("BitVector index " + std::to_string(i) + " out of range for length " +
                                std::to_string(size_));
}

bool BitVector::get(std::size_t i) const
{
    check_index(i);
    return (words_[i / kWordBits] >> (i % kWordBits)) & 1U;
}

void BitVector::set(std::size_t i, bool value)
{
    check_index(i);
    const std::uint64_t mask = std::uint64_t{1} << (i % kWordBits);
    if (value)
        words_[i / kWordBits] |= mask;
    else
        words_[i / kWordBits] &= ~mask;
}

void BitVector::flip(std::size_t i)
{
    check_index(i);
    words_[i / kWordBits] ^= std::uint64_t{1} << (i % kWordBits);
}

BitVector& BitVector::operator+=(const BitVector& other)
{
    if (other.size_ != size_)
        throw DimensionMismatch("cannot add vectors of length " + std::to_string(size_) + " and " +
                                std::to_string(other.size_));
    for (std::size_t w = 0; w < words_.size(); ++w)
        words_[w] ^= other.words_[w];
    return *this;
}

bool BitVector::dot(const BitVector& other) const
{
    if (other.size_ != size_)
        throw DimensionMismatch("dot product of vectors of length " + std::to_string(size_) + " and " +
                                std::to_string(other.size_));
    std::uint64_t acc = 0;
    for (std::size_t w = 0; w < words_.size(); ++w)
        acc ^= words_[w] & other.words_[w];
    return std::popcount(acc) & 1;
}

bool BitVector::is_zero() const
{
    for (auto w : words_)
        if (w)
            return false;
    return true;
}

std::size_t BitVector::popcount() const
{
    std::size_t n = 0;
    for (auto w : words_)
        n += static_cast<std::size_t>(std::popcount(w));
    return n;
}

std::size_t BitVector::lowest_set() const
{
    for (std::size_t w = 0; w < words_.size(); ++w)
        if (words_[w])
            return w * kWordBits + static_cast<std::size_t>(std::countr_zero(words_[w]));
    return size_;
}

BitVector BitVector::concat(const BitVector& tail) const
{
    BitVector out(size_ + tail.size_);
    for (std::size_t i = 0; i < size_; ++i)
        if (get(i))
            out.set(i);
    for (std::size_t i = 0; i < tail.size_; ++i)
        if (tail.get(i))
            out.set(size_ + i);
    return out;
}

BitVector BitVector::slice(std::size_t offset, std::size_t length) const
{
    if (offset + length > size_)
        throw std::out_of_range("BitVector slice exceeds length");
    BitVector out(length);
    for (std::size_t i = 0; i < length; ++i)
        if (get(offset + i))
            out.set(i);
    return out;
}

std::string BitVector::to_string() const
{
    std::string s(size_, '0');
    for (std::size_t i = 0; i < size_; ++i)
        if (get(i))
            s[i] = '1';
    return s;
}

std::strong_ordering BitVector::operator<=>(const BitVector& other) const
{
    if (size_ != other.size_)
        return size_ <=> other.size_;
    // Lexicographic with coordinate 0 most significant: compare bit-reversed words.
    for (std::size_t w = 0; w < words_.size(); ++w) {
        if (words_[w] == other.words_[w])
            continue;
        const std::uint64_t diff = words_[w] ^ other.words_[w];
        const auto lowest = static_cast<unsigned>(std::countr_zero(diff));
        return ((other.words_[w] >> lowest) & 1U) ? std::strong_ordering::less : std::strong_ordering::greater;
    }
    return std::strong_ordering::equal;
}

// ---------------------------------------------------------------- BitMatrix

BitMatrix::BitMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows, BitVector(cols)) {}

BitMatrix BitMatrix::identity(std::size_t n)
{
    BitMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i)
        m.set(i, i);
    return m;
}

BitMatrix BitMatrix::from_rows(const std::vector<BitVector>& rows, std::size_t cols)
{
    BitMatrix m(rows.size(), cols);
    for (std::size_t r = 0; r < rows.size(); ++r) {
        if (rows[r].size() != cols)
            throw DimensionMismatch("row " + std::to_string(r) + " has length " + std::to_string(rows[r].size()) +
                                    ", expected " + std::to_string(cols));
        m.data_[r] = rows[r];
    }
    return m;
}

BitMatrix BitMatrix::from_columns(const std::vector<BitVector>& columns, std::size_t rows)
{
    return from_rows(columns, rows).transpose();
}

BitMatrix BitMatrix::parse(std::initializer_list<std::string_view> rows)
{
    std::vector<BitVector> parsed;
    for (auto r : rows)
        parsed.push_back(BitVector::from_string(r));
    const std::size_t cols = parsed.empty() ? 0 : parsed.front().size();
    return from_rows(parsed, cols);
}

bool BitMatrix::get(std::size_t r, std::size_t c) const { return row(r).get(c); }

void BitMatrix::set(std::size_t r, std::size_t c, bool value) { row(r).set(c, value); }

const BitVector& BitMatrix::row(std::size_t r) const
{
    if (r >= rows_)
        throw std::out_of_range("BitMatrix row " + std::to_string(r) + " out of range");
    return data_[r];
}

BitVector& BitMatrix::row(std::size_t r)
{
    if (r >= rows_)
        throw std::out_of_range("BitMatrix row " + std::to_string(r) + " out of range");
    return data_[r];
}

BitVector BitMatrix::column(std::size_t c) const
{
    BitVector v(rows_);
    for (std::size_t r = 0; r < rows_; ++r)
        if (data_[r].get(c))
            v.set(r);
    return v;
}

BitMatrix BitMatrix::transpose() const
{
    BitMatrix t(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < cols_; ++c)
            if (data_[r].get(c))
                t.data_[c].set(r);
    return t;
}

BitMatrix BitMatrix::operator*(const BitMatrix& rhs) const
{
    if (cols_ != rhs.rows_)
        throw DimensionMismatch("cannot multiply " + std::to_string(rows_) + "x" + std::to_string(cols_) + " by " +
                                std::to_string(rhs.rows_) + "x" + std::to_string(rhs.cols_));
    BitMatrix out(rows_, rhs.cols_);
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t k = 0; k < cols_; ++k)
            if (data_[r].get(k))
                out.data_[r] += rhs.data_[k];
    return out;
}

BitVector BitMatrix::operator*(const BitVector& v) const
{
    if (v.size() != cols_)
        throw DimensionMismatch("cannot apply " + std::to_string(rows_) + "x" + std::to_string(cols_) +
                                " matrix to a vector of length " + std::to_string(v.size()));
    BitVector out(rows_);
    for (std::size_t r = 0; r < rows_; ++r)
        if (data_[r].dot(v))
            out.set(r);
    return out;
}

BitMatrix& BitMatrix::operator+=(const BitMatrix& rhs)
{
    if (rows_ != rhs.rows_ || cols_ != rhs.cols_)
        throw DimensionMismatch("cannot add matrices of different shapes");
    for (std::size_t r = 0; r < rows_; ++r)
        data_[r] += rhs.data_[r];
    return *this;
}

BitMatrix BitMatrix::hstack(const BitMatrix& right) const
{
    if (rows_ != right.rows_)
        throw DimensionMismatch("hstack of matrices with different row counts");
    BitMatrix out(rows_, cols_ + right.cols_);
    for (std::size_t r = 0; r < rows_; ++r)
        out.data_[r] = data_[r].concat(right.data_[r]);
    return out;
}

BitMatrix BitMatrix::vstack(const BitMatrix& below) const
{
    if (cols_ != below.cols_)
        throw DimensionMismatch("vstack of matrices with different column counts");
    BitMatrix out(rows_ + below.rows_, cols_);
    for (std::size_t r = 0; r < rows_; ++r)
        out.data_[r] = data_[r];
    for (std::size_t r = 0; r < below.rows_; ++r)
        out.data_[rows_ + r] = below.data_[r];
    return out;
}

void BitMatrix::place(std::size_t r0, std::size_t c0, const BitMatrix& block)
{
    if (r0 + block.rows_ > rows_ || c0 + block.cols_ > cols_)
        throw DimensionMismatch("block does not fit");
    for (std::size_t r = 0; r < block.rows_; ++r)
        for (std::size_t c = 0; c < block.cols_; ++c)
            data_[r0 + r].set(c0 + c, block.get(r, c));
}

bool BitMatrix::is_zero() const
{
    for (const auto& r : data_)
        if (!r.is_zero())
            return false;
    return true;
}

bool BitMatrix::is_symmetric() const { return rows_ == cols_ && *this == transpose(); }

bool BitMatrix::has_zero_diagonal() const
{
    for (std::size_t i = 0; i < std::min(rows_, cols_); ++i)
        if (get(i, i))
            return false;
    return true;
}

std::string BitMatrix::to_string() const
{
    std::ostringstream out;
    for (std::size_t r = 0; r < rows_; ++r) {
        out << data_[r].to_string();
        if (r + 1 < rows_)
            out << '\n';
    }
    return out.str();
}

// ---------------------------------------------------------------- elimination

RowEchelon row_reduce(const BitMatrix& m)
{
    RowEchelon e{m, {}};
    BitMatrix& a = e.reduced;
    std::size_t next = 0;
    for (std::size_t c = 0; c < a.cols() && next < a.rows(); ++c) {
        std::size_t p = next;
        while (p < a.rows() && !a.get(p, c))
            ++p;
        if (p == a.rows())
            continue;
        std::swap(a.row(p), a.row(next));
        for (std::size_t r = 0; r < a.rows(); ++r)
            if (r != next && a.get(r, c))
                a.row(r) += a.row(next);
        e.pivots.push_back(c);
        ++next;
    }
    return e;
}

std::size_t rank(const BitMatrix& m) { return row_reduce(m).pivots.size(); }

std::vector<BitVector> kernel_basis(const BitMatrix& m)
{
    const RowEchelon e = row_reduce(m);
    std::vector<bool> is_pivot(m.cols(), false);
    for (auto p : e.pivots)
        is_pivot[p] = true;

    std::vector<BitVector> basis;
    for (std::size_t free = 0; free < m.cols(); ++free) {
        if (is_pivot[free])
            continue;
        BitVector v = BitVector::unit(m.cols(), free);
        for (std::size_t i = 0; i < e.pivots.size(); ++i)
            if (e.reduced.get(i, free))
                v.set(e.pivots[i]);
        basis.push_back(std::move(v));
    }
    return basis;
}

std::optional<BitVector> solve(const BitMatrix& m, const BitVector& b)
{
    if (b.size() != m.rows())
        throw DimensionMismatch("right-hand side has length " + std::to_string(b.size()) + ", matrix has " +
                                std::to_string(m.rows()) + " rows");
    // Eliminate on [m | b]; b is the last column.
    BitMatrix augmented(m.rows(), m.cols() + 1);
    augmented.place(0, 0, m);
    for (std::size_t r = 0; r < m.rows(); ++r)
        augmented.set(r, m.cols(), b.get(r));
    const RowEchelon e = row_reduce(augmented);
    if (!e.pivots.empty() && e.pivots.back() == m.cols())
        return std::nullopt;

    BitVector x(m.cols());
    for (std::size_t i = 0; i < e.pivots.size(); ++i)
        if (e.reduced.get(i, m.cols()))
            x.set(e.pivots[i]);
    return x;
}

std::optional<BitMatrix> inverse(const BitMatrix& m)
{
    if (m.rows() != m.cols())
        return std::nullopt;
    const std::size_t n = m.rows();
    const RowEchelon e = row_reduce(m.hstack(BitMatrix::identity(n)));
    if (e.pivots.size() < n || (n > 0 && e.pivots[n - 1] != n - 1))
        return std::nullopt;
    BitMatrix inv(n, n);
    for (std::size_t r = 0; r < n; ++r)
        for (std::size_t c = 0; c < n; ++c)
            inv.set(r, c, e.reduced.get(r, n + c));
    return inv;
}

std::vector<BitVector> independent_subset(const std::vector<BitVector>& vectors)
{
    std::vector<BitVector> out;
    if (vectors.empty())
        return out;
    const BitMatrix m = BitMatrix::from_columns(vectors, vectors.front().size());
    for (auto p : row_reduce(m).pivots)
        out.push_back(vectors[p]);
    return out;
}

// ---------------------------------------------------------------- Subquotient

Subquotient::Subquotient(std::size_t ambient, const std::vector<BitVector>& cycles,
                         const std::vector<BitVector>& boundaries)
    : ambient_(ambient)
{
    boundaries_ = independent_subset(boundaries);
    std::vector<BitVector> all = boundaries_;
    const std::size_t nb = all.size();
    all.insert(all.end(), cycles.begin(), cycles.end());
    for (const auto& v : all)
        if (v.size() != ambient)
            throw DimensionMismatch("subquotient generator has wrong length");
    const auto chosen = independent_subset(all);
    representatives_.assign(chosen.begin() + static_cast<std::ptrdiff_t>(nb), chosen.end());

    std::vector<BitVector> columns = representatives_;
    columns.insert(columns.end(), boundaries_.begin(), boundaries_.end());
    combined_ = columns.empty() ? BitMatrix(ambient, 0) : BitMatrix::from_columns(columns, ambient);
}

std::optional<BitVector> Subquotient::coordinates(const BitVector& z) const
{
    if (z.size() != ambient_)
        throw DimensionMismatch("class vector has wrong length");
    const auto x = solve(combined_, z);
    if (!x)
        return std::nullopt;
    return x->slice(0, representatives_.size());
}

bool Subquotient::is_zero_class(const BitVector& z) const
{
    const auto c = coordinates(z);
    return c && c->is_zero();
}

BitMatrix induced_map(const BitMatrix& map, const Subquotient& source, const Subquotient& target)
{
    BitMatrix out(target.dim(), source.dim());
    for (std::size_t j = 0; j < source.dim(); ++j) {
        const auto image = target.coordinates(map * source.representatives()[j]);
        if (!image)
            throw std::logic_error("map does not carry cycles to cycles");
        for (std::size_t i = 0; i < target.dim(); ++i)
            out.set(i, j, image->get(i));
    }
    return out;
}

}  // namespace kervaire
