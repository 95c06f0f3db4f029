#include "kervaire/group.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <stdexcept>

namespace kervaire {

GroupWord::GroupWord(std::vector<Letter> letters) : letters_(std::move(letters))
{
    for (const auto& l : letters_)
        if (l.exponent != 1 && l.exponent != -1)
            throw std::invalid_argument("letter exponents must be +1 or -1");
}

GroupWord GroupWord::prefix(std::size_t k) const
{
    if (k > letters_.size())
        throw std::out_of_range("prefix longer than word");
    return GroupWord(std::vector<Letter>(letters_.begin(), letters_.begin() + static_cast<std::ptrdiff_t>(k)));
}

GroupWord GroupWord::inverse() const
{
    std::vector<Letter> out;
    out.reserve(letters_.size());
    for (auto it = letters_.rbegin(); it != letters_.rend(); ++it)
        out.push_back({it->generator, -it->exponent});
    return GroupWord(std::move(out));
}

GroupWord GroupWord::freely_reduced() const
{
    std::vector<Letter> out;
    for (const auto& l : letters_) {
        if (!out.empty() && out.back().generator == l.generator && out.back().exponent == -l.exponent)
            out.pop_back();
        else
            out.push_back(l);
    }
    return GroupWord(std::move(out));
}

std::size_t GroupWord::occurrences(std::size_t g) const
{
    return static_cast<std::size_t>(
        std::count_if(letters_.begin(), letters_.end(), [g](const Letter& l) { return l.generator == g; }));
}

GroupWord& GroupWord::operator*=(const GroupWord& rhs)
{
    letters_.insert(letters_.end(), rhs.letters_.begin(), rhs.letters_.end());
    return *this;
}

Presentation::Presentation(std::vector<std::string> generators, GroupWord relator)
    : generators_(std::move(generators)), relator_(std::move(relator))
{
    if (generators_.empty())
        throw std::invalid_argument("presentation needs at least one generator");
    std::vector<std::string> sorted = generators_;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
        throw std::invalid_argument("duplicate generator name");
    for (const auto& name : generators_)
        if (name.empty() || name.find_first_of(" *^()") != std::string::npos)
            throw std::invalid_argument("invalid generator name '" + name + "'");
    for (const auto& l : relator_.letters())
        if (l.generator >= generators_.size())
            throw std::invalid_argument("relator uses a generator outside the alphabet");
}

Presentation::Presentation(std::vector<std::string> generators, std::string_view relator)
    : Presentation(generators, GroupWord{})
{
    relator_ = parse_word(relator);
}

Presentation Presentation::default_surface()
{
    return Presentation({"a", "b1", "b2"}, "a a b1 b2 b1^-1 b2^-1");
}

std::size_t Presentation::index_of(std::string_view name) const
{
    for (std::size_t i = 0; i < generators_.size(); ++i)
        if (generators_[i] == name)
            return i;
    throw std::invalid_argument("unknown generator '" + std::string(name) + "'");
}

GroupWord Presentation::parse_word(std::string_view text) const
{
    std::vector<Letter> letters;
    std::string token;
    auto flush = [&]() {
        if (token.empty())
            return;
        const std::size_t caret = token.find('^');
        const std::string name = token.substr(0, caret);
        long power = 1;
        if (caret != std::string::npos) {
            const std::string exp = token.substr(caret + 1);
            std::size_t used = 0;
            try {
                power = std::stol(exp, &used);
            } catch (const std::exception&) {
                used = 0;
            }
            if (used == 0 || used != exp.size())
                throw std::invalid_argument("bad exponent in word token '" + token + "'");
        }
        const std::size_t g = index_of(name);
        const int sign = power < 0 ? -1 : 1;
        for (long k = 0; k < std::labs(power); ++k)
            letters.push_back({g, sign});
        token.clear();
    };
    for (char ch : text) {
        if (std::isspace(static_cast<unsigned char>(ch)) || ch == '*')
            flush();
        else
            token += ch;
    }
    flush();
    return GroupWord(std::move(letters));
}

std::string Presentation::format(const GroupWord& w) const
{
    if (w.empty())
        return "1";
    std::string out;
    for (const auto& l : w.letters()) {
        if (!out.empty())
            out += ' ';
        out += generators_.at(l.generator);
        if (l.exponent < 0)
            out += "^-1";
    }
    return out;
}

void GroupRingElement::toggle(const GroupWord& w)
{
    const GroupWord r = w.freely_reduced();
    auto [it, inserted] = terms_.insert(r);
    if (!inserted)
        terms_.erase(it);
}

GroupRingElement& GroupRingElement::operator+=(const GroupRingElement& other)
{
    for (const auto& w : other.terms_)
        toggle(w);
    return *this;
}

std::string GroupRingElement::format(const Presentation& p) const
{
    if (terms_.empty())
        return "0";
    std::string out;
    for (const auto& w : terms_) {
        if (!out.empty())
            out += " + ";
        out += p.format(w);
    }
    return out;
}

GroupRingElement fox_derivative(const GroupWord& w, std::size_t generator)
{
    // Positive letter at position i contributes p_{i-1}; an inverse letter contributes p_{i-1} x^-1 = p_i.
    GroupRingElement out;
    const auto& letters = w.letters();
    for (std::size_t i = 0; i < letters.size(); ++i) {
        if (letters[i].generator != generator)
            continue;
        out.toggle(w.prefix(letters[i].exponent > 0 ? i : i + 1));
    }
    return out;
}

Representation::Representation(Presentation presentation, std::vector<BitMatrix> images)
    : presentation_(std::move(presentation)), images_(std::move(images))
{
    if (images_.size() != presentation_.generator_count())
        throw DimensionMismatch("need one image per generator: got " + std::to_string(images_.size()) + " for " +
                                std::to_string(presentation_.generator_count()));
    dim_ = images_.front().rows();
    for (std::size_t g = 0; g < images_.size(); ++g) {
        if (images_[g].rows() != dim_ || images_[g].cols() != dim_)
            throw DimensionMismatch("image of " + presentation_.generators()[g] + " is not " + std::to_string(dim_) +
                                    "x" + std::to_string(dim_));
        auto inv = inverse(images_[g]);
        if (!inv)
            throw std::invalid_argument("image of generator " + presentation_.generators()[g] + " is singular");
        inverses_.push_back(std::move(*inv));
    }
    const BitMatrix residue = evaluate(presentation_.relator());
    if (residue != BitMatrix::identity(dim_)) {
        std::string rows = residue.to_string();
        std::replace(rows.begin(), rows.end(), '\n', '/');
        throw std::invalid_argument("relator " + presentation_.format(presentation_.relator()) +
                                    " does not act as the identity; residue rows " + rows);
    }
}

Representation Representation::trivial(Presentation presentation, std::size_t dim)
{
    std::vector<BitMatrix> images(presentation.generator_count(), BitMatrix::identity(dim));
    return Representation(std::move(presentation), std::move(images));
}

BitMatrix Representation::evaluate(const GroupWord& w) const
{
    BitMatrix m = BitMatrix::identity(dim_);
    for (const auto& l : w.letters())
        m = m * (l.exponent > 0 ? images_.at(l.generator) : inverses_.at(l.generator));
    return m;
}

BitMatrix Representation::evaluate(const GroupRingElement& e) const
{
    BitMatrix m(dim_, dim_);
    for (const auto& w : e.terms())
        m += evaluate(w);
    return m;
}

BitMatrix Representation::evaluate_inverse(const GroupRingElement& e) const
{
    BitMatrix m(dim_, dim_);
    for (const auto& w : e.terms())
        m += evaluate(w.inverse());
    return m;
}

SignedPermutation::SignedPermutation(std::vector<std::size_t> image, std::vector<int> signs)
    : image_(std::move(image)), signs_(std::move(signs))
{
    if (image_.size() != signs_.size())
        throw DimensionMismatch("signed permutation: image and sign lists differ in length");
    std::vector<bool> hit(image_.size(), false);
    for (std::size_t i = 0; i < image_.size(); ++i) {
        if (image_[i] >= image_.size() || hit[image_[i]])
            throw std::invalid_argument("signed permutation: images are not a permutation");
        hit[image_[i]] = true;
        if (signs_[i] != 1 && signs_[i] != -1)
            throw std::invalid_argument("signed permutation: signs must be +1 or -1");
    }
}

SignedPermutation SignedPermutation::identity(std::size_t n)
{
    std::vector<std::size_t> image(n);
    std::iota(image.begin(), image.end(), std::size_t{0});
    return SignedPermutation(std::move(image), std::vector<int>(n, 1));
}

SignedPermutation SignedPermutation::from_cycles(std::size_t n, std::string_view cycles)
{
    std::vector<std::size_t> image(n);
    std::iota(image.begin(), image.end(), std::size_t{0});
    std::vector<bool> used(n, false);
    std::size_t pos = 0;
    auto fail = [&](const std::string& why) {
        throw std::invalid_argument("bad cycle notation '" + std::string(cycles) + "': " + why);
    };
    while (pos < cycles.size()) {
        if (std::isspace(static_cast<unsigned char>(cycles[pos]))) {
            ++pos;
            continue;
        }
        if (cycles[pos] != '(')
            fail("expected '('");
        const std::size_t close = cycles.find(')', pos);
        if (close == std::string_view::npos)
            fail("unclosed cycle");
        std::vector<std::size_t> cycle;
        std::string number;
        for (std::size_t k = pos + 1; k <= close; ++k) {
            const char ch = cycles[k];
            if (std::isdigit(static_cast<unsigned char>(ch))) {
                number += ch;
            } else if (ch == ' ' || ch == ',' || ch == ')') {
                if (!number.empty()) {
                    const std::size_t v = std::stoul(number);
                    if (v < 1 || v > n)
                        fail("point " + number + " outside 1.." + std::to_string(n));
                    if (used[v - 1])
                        fail("point " + number + " repeated");
                    used[v - 1] = true;
                    cycle.push_back(v - 1);
                    number.clear();
                }
            } else {
                fail(std::string("unexpected character '") + ch + "'");
            }
        }
        for (std::size_t k = 0; k < cycle.size(); ++k)
            image[cycle[k]] = cycle[(k + 1) % cycle.size()];
        pos = close + 1;
    }
    return SignedPermutation(std::move(image), std::vector<int>(n, 1));
}

SignedPermutation SignedPermutation::from_matrix(const std::vector<std::vector<int>>& m)
{
    const std::size_t n = m.size();
    std::vector<std::size_t> image(n, n);
    std::vector<int> signs(n, 0);
    for (std::size_t r = 0; r < n; ++r) {
        if (m[r].size() != n)
            throw DimensionMismatch("matrix is not square");
        for (std::size_t c = 0; c < n; ++c) {
            const int x = m[r][c];
            if (x == 0)
                continue;
            if ((x != 1 && x != -1) || image[c] != n)
                throw std::invalid_argument("matrix is not a signed permutation (not orthogonal with entries 0, +-1)");
            image[c] = r;
            signs[c] = x;
        }
    }
    for (std::size_t c = 0; c < n; ++c)
        if (image[c] == n)
            throw std::invalid_argument("matrix is not a signed permutation (zero column)");
    return SignedPermutation(std::move(image), std::move(signs));
}

SignedPermutation SignedPermutation::operator*(const SignedPermutation& h) const
{
    if (h.size() != size())
        throw DimensionMismatch("composing signed permutations of different sizes");
    std::vector<std::size_t> image(size());
    std::vector<int> signs(size());
    for (std::size_t i = 0; i < size(); ++i) {
        image[i] = image_[h.image_[i]];
        signs[i] = signs_[h.image_[i]] * h.signs_[i];
    }
    return SignedPermutation(std::move(image), std::move(signs));
}

SignedPermutation SignedPermutation::inverse() const
{
    std::vector<std::size_t> image(size());
    std::vector<int> signs(size());
    for (std::size_t i = 0; i < size(); ++i) {
        image[image_[i]] = i;
        signs[image_[i]] = signs_[i];
    }
    return SignedPermutation(std::move(image), std::move(signs));
}

int SignedPermutation::determinant() const
{
    int det = 1;
    for (int s : signs_)
        det *= s;
    std::vector<bool> seen(size(), false);
    for (std::size_t i = 0; i < size(); ++i) {
        if (seen[i])
            continue;
        std::size_t length = 0;
        for (std::size_t j = i; !seen[j]; j = image_[j]) {
            seen[j] = true;
            ++length;
        }
        if (length % 2 == 0)
            det = -det;
    }
    return det;
}

std::vector<std::vector<int>> SignedPermutation::matrix() const
{
    std::vector<std::vector<int>> m(size(), std::vector<int>(size(), 0));
    for (std::size_t i = 0; i < size(); ++i)
        m[image_[i]][i] = signs_[i];
    return m;
}

BitMatrix SignedPermutation::mod2() const
{
    BitMatrix m(size(), size());
    for (std::size_t i = 0; i < size(); ++i)
        m.set(image_[i], i, true);
    return m;
}

SignedPermRepresentation::SignedPermRepresentation(Presentation presentation, std::vector<SignedPermutation> images)
    : presentation_(std::move(presentation)), images_(std::move(images))
{
    if (images_.size() != presentation_.generator_count())
        throw DimensionMismatch("need one image per generator");
    for (const auto& g : images_)
        if (g.size() != images_.front().size())
            throw DimensionMismatch("generator images have different sizes");
    const SignedPermutation residue = evaluate(presentation_.relator());
    if (residue != SignedPermutation::identity(dim())) {
        std::string images;
        for (std::size_t i = 0; i < dim(); ++i)
            images += (i ? " " : "") + std::string(residue.sign(i) < 0 ? "-" : "") + std::to_string(residue.image(i) + 1);
        throw std::invalid_argument("relator " + presentation_.format(presentation_.relator()) +
                                    " does not act as the identity; residue sends 1.." + std::to_string(dim()) +
                                    " to " + images);
    }
}

SignedPermutation SignedPermRepresentation::evaluate(const GroupWord& w) const
{
    SignedPermutation m = SignedPermutation::identity(dim());
    for (const auto& l : w.letters())
        m = m * (l.exponent > 0 ? images_.at(l.generator) : images_.at(l.generator).inverse());
    return m;
}

Representation SignedPermRepresentation::mod2() const
{
    std::vector<BitMatrix> images;
    for (const auto& g : images_)
        images.push_back(g.mod2());
    return Representation(presentation_, std::move(images));
}

}  // namespace kervaire
