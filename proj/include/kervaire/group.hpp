#ifndef KERVAIRE_GROUP_HPP_
#define KERVAIRE_GROUP_HPP_

#include "kervaire/f2.hpp"

#include <compare>
#include <set>
#include <string>
#include <string_view>
#include <vector>

namespace kervaire {

struct Letter {
    std::size_t generator;
    int exponent;  // +1 or -1

    auto operator<=>(const Letter&) const = default;
};

/// Word in the free group on indexed generators. Not reduced unless asked.
class GroupWord {
public:
    GroupWord() = default;
    explicit GroupWord(std::vector<Letter> letters);

    const std::vector<Letter>& letters() const { return letters_; }
    std::size_t length() const { return letters_.size(); }
    bool empty() const { return letters_.empty(); }

    /// First k letters.
    GroupWord prefix(std::size_t k) const;
    GroupWord inverse() const;
    GroupWord freely_reduced() const;
    /// Number of occurrences of generator g, either sign.
    std::size_t occurrences(std::size_t g) const;

    GroupWord& operator*=(const GroupWord& rhs);
    friend GroupWord operator*(GroupWord lhs, const GroupWord& rhs)
    {
        lhs *= rhs;
        return lhs;
    }

    auto operator<=>(const GroupWord&) const = default;

private:
    std::vector<Letter> letters_;
};

/// One-relator presentation with named generators.
class Presentation {
public:
    Presentation(std::vector<std::string> generators, GroupWord relator);
    /// Relator given in word syntax, e.g. "a a b1 b2 b1^-1 b2^-1".
    Presentation(std::vector<std::string> generators, std::string_view relator);

    /// <a, b1, b2 | a a b1 b2 b1^-1 b2^-1>: the connected sum of a projective plane and a torus.
    static Presentation default_surface();

    const std::vector<std::string>& generators() const { return generators_; }
    std::size_t generator_count() const { return generators_.size(); }
    const GroupWord& relator() const { return relator_; }
    std::size_t index_of(std::string_view name) const;

    /// Tokens separated by spaces or '*': name, name^-1, name^k for integer k.
    GroupWord parse_word(std::string_view text) const;
    std::string format(const GroupWord& w) const;

    /// 1 - (generators) + 1 for the presentation complex of a closed surface.
    int euler_characteristic() const { return 2 - static_cast<int>(generators_.size()); }

private:
    std::vector<std::string> generators_;
    GroupWord relator_;
};

/// Formal F2 sum of freely reduced words.
class GroupRingElement {
public:
    GroupRingElement() = default;

    void toggle(const GroupWord& w);
    GroupRingElement& operator+=(const GroupRingElement& other);

    const std::set<GroupWord>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::string format(const Presentation& p) const;

    bool operator==(const GroupRingElement&) const = default;

private:
    std::set<GroupWord> terms_;
};

/// Fox derivative mod 2: d(uv) = du + u dv, dx/dx = 1, d(x^-1)/dx = x^-1.
GroupRingElement fox_derivative(const GroupWord& w, std::size_t generator);

/// Linear representation over F2 of the group of a presentation. Each generator image must be
/// invertible and the relator must evaluate to the identity.
class Representation {
public:
    Representation(Presentation presentation, std::vector<BitMatrix> images);
    static Representation trivial(Presentation presentation, std::size_t dim);

    const Presentation& presentation() const { return presentation_; }
    std::size_t dim() const { return dim_; }
    const BitMatrix& image(std::size_t g) const { return images_.at(g); }
    const BitMatrix& inverse_image(std::size_t g) const { return inverses_.at(g); }

    BitMatrix evaluate(const GroupWord& w) const;
    /// Sum of rho(w) over the terms.
    BitMatrix evaluate(const GroupRingElement& e) const;
    /// Sum of rho(w)^{-1} over the terms.
    BitMatrix evaluate_inverse(const GroupRingElement& e) const;

private:
    Presentation presentation_;
    std::size_t dim_;
    std::vector<BitMatrix> images_;
    std::vector<BitMatrix> inverses_;
};

/// Signed permutation of coordinates: g e_i = sign(i) e_{image(i)}.
class SignedPermutation {
public:
    SignedPermutation(std::vector<std::size_t> image, std::vector<int> signs);
    static SignedPermutation identity(std::size_t n);
    /// Unsigned permutation from 1-based cycle notation, e.g. "(1 2)(3 4)".
    static SignedPermutation from_cycles(std::size_t n, std::string_view cycles);
    /// Integer matrix with one entry +-1 in each row and column; throws std::invalid_argument otherwise.
    static SignedPermutation from_matrix(const std::vector<std::vector<int>>& m);

    std::size_t size() const { return image_.size(); }
    std::size_t image(std::size_t i) const { return image_.at(i); }
    int sign(std::size_t i) const { return signs_.at(i); }

    /// (g * h) e_i = g (h e_i).
    SignedPermutation operator*(const SignedPermutation& h) const;
    SignedPermutation inverse() const;
    int determinant() const;
    std::vector<std::vector<int>> matrix() const;
    /// Reduction mod 2: the underlying permutation matrix.
    BitMatrix mod2() const;

    bool operator==(const SignedPermutation&) const = default;
    auto operator<=>(const SignedPermutation&) const = default;

private:
    std::vector<std::size_t> image_;
    std::vector<int> signs_;
};

/// Representation into signed permutation matrices (a finite subgroup of O(n)).
class SignedPermRepresentation {
public:
    SignedPermRepresentation(Presentation presentation, std::vector<SignedPermutation> images);

    const Presentation& presentation() const { return presentation_; }
    std::size_t dim() const { return images_.front().size(); }
    const SignedPermutation& image(std::size_t g) const { return images_.at(g); }
    SignedPermutation evaluate(const GroupWord& w) const;
    Representation mod2() const;

private:
    Presentation presentation_;
    std::vector<SignedPermutation> images_;
};

}  // namespace kervaire

#endif  // KERVAIRE_GROUP_HPP_
