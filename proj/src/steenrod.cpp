#include "kervaire/steenrod.hpp"

#include <map>
#include <sstream>
#include <stdexcept>

namespace kervaire {

namespace {

std::vector<unsigned> drop_zeros(std::vector<unsigned> exponents)
{
    std::erase(exponents, 0U);
    return exponents;
}

void enumerate_admissible(unsigned remaining, unsigned cap, std::vector<unsigned>& prefix,
                          std::vector<SteenrodMonomial>& out)
{
    if (remaining == 0) {
        out.emplace_back(prefix);
        return;
    }
    for (unsigned i = std::min(remaining, cap); i >= 1; --i) {
        prefix.push_back(i);
        enumerate_admissible(remaining - i, i / 2, prefix, out);
        prefix.pop_back();
    }
}

// Leftmost index j with exponents[j] < 2 * exponents[j + 1], or size() if admissible.
std::size_t first_inadmissible(const std::vector<unsigned>& e)
{
    for (std::size_t j = 0; j + 1 < e.size(); ++j)
        if (e[j] < 2 * e[j + 1])
            return j;
    return e.size();
}

void sq_monomial_into(unsigned i, const std::vector<unsigned>& exps, std::size_t var, std::vector<unsigned>& current,
                      PolyElement& out)
{
    if (var == exps.size()) {
        if (i == 0)
            out.toggle(current);
        return;
    }
    const unsigned n = exps[var];
    // Sq^k(t^n) is nonzero exactly for k a bit-subset of n.
    unsigned k = n;
    for (;;) {
        if (k <= i) {
            current[var] = n + k;
            sq_monomial_into(i - k, exps, var + 1, current, out);
        }
        if (k == 0)
            break;
        k = (k - 1) & n;
    }
    current[var] = n;
}

}  // namespace

SteenrodMonomial::SteenrodMonomial(std::initializer_list<unsigned> exponents)
    : SteenrodMonomial(std::vector<unsigned>(exponents))
{
}

SteenrodMonomial::SteenrodMonomial(std::vector<unsigned> exponents) : exponents_(drop_zeros(std::move(exponents))) {}

unsigned SteenrodMonomial::degree() const
{
    unsigned d = 0;
    for (unsigned e : exponents_)
        d += e;
    return d;
}

bool SteenrodMonomial::admissible() const { return first_inadmissible(exponents_) == exponents_.size(); }

std::string SteenrodMonomial::to_string() const
{
    if (exponents_.empty())
        return "1";
    std::string out;
    for (unsigned e : exponents_) {
        if (!out.empty())
            out += ' ';
        out += "Sq" + std::to_string(e);
    }
    return out;
}

SteenrodSum::SteenrodSum(std::initializer_list<SteenrodMonomial> monomials)
{
    for (const auto& m : monomials)
        toggle(m);
}

SteenrodSum SteenrodSum::parse(std::string_view text)
{
    SteenrodSum sum;
    std::string body(text);
    std::size_t start = 0;
    bool any_term = false;
    while (start <= body.size()) {
        const std::size_t plus = body.find('+', start);
        const std::string term = body.substr(start, plus == std::string::npos ? std::string::npos : plus - start);
        std::istringstream words(term);
        std::string word;
        std::vector<unsigned> exps;
        bool saw_word = false;
        bool zero = false;
        while (words >> word) {
            saw_word = true;
            if (word == "1")
                continue;
            if (word == "0") {
                zero = true;
                continue;
            }
            if (word.size() < 3 || word.compare(0, 2, "Sq") != 0 ||
                word.find_first_not_of("0123456789", 2) != std::string::npos)
                throw std::invalid_argument("cannot parse Steenrod term '" + word + "' in '" + body + "'");
            exps.push_back(static_cast<unsigned>(std::stoul(word.substr(2))));
        }
        if (!saw_word)
            throw std::invalid_argument("empty term in Steenrod expression '" + body + "'");
        any_term = true;
        if (!zero)
            sum.toggle(SteenrodMonomial(exps));
        if (plus == std::string::npos)
            break;
        start = plus + 1;
    }
    if (!any_term)
        throw std::invalid_argument("empty Steenrod expression");
    return sum;
}

void SteenrodSum::toggle(const SteenrodMonomial& m)
{
    auto [it, inserted] = terms_.insert(m);
    if (!inserted)
        terms_.erase(it);
}

SteenrodSum& SteenrodSum::operator+=(const SteenrodSum& other)
{
    for (const auto& m : other.terms_)
        toggle(m);
    return *this;
}

bool SteenrodSum::admissible() const
{
    for (const auto& m : terms_)
        if (!m.admissible())
            return false;
    return true;
}

std::string SteenrodSum::to_string() const
{
    if (terms_.empty())
        return "0";
    std::string out;
    for (const auto& m : terms_) {
        if (!out.empty())
            out += " + ";
        out += m.to_string();
    }
    return out;
}

SteenrodSum adem_rewrite(const SteenrodSum& s)
{
    SteenrodSum result;
    SteenrodSum pending = s;
    while (!pending.is_zero()) {
        SteenrodSum next;
        for (const auto& m : pending.terms()) {
            const auto& e = m.exponents();
            const std::size_t j = first_inadmissible(e);
            if (j == e.size()) {
                result.toggle(m);
                continue;
            }
            // Sq^a Sq^b = sum_c binom(b-c-1, a-2c) Sq^{a+b-c} Sq^c for a < 2b.
            const unsigned a = e[j], b = e[j + 1];
            for (unsigned c = 0; c <= a / 2; ++c) {
                if (!binom_mod2(static_cast<std::int64_t>(b) - c - 1, static_cast<std::int64_t>(a) - 2 * c))
                    continue;
                std::vector<unsigned> replaced(e.begin(), e.begin() + static_cast<std::ptrdiff_t>(j));
                replaced.push_back(a + b - c);
                replaced.push_back(c);
                replaced.insert(replaced.end(), e.begin() + static_cast<std::ptrdiff_t>(j) + 2, e.end());
                next.toggle(SteenrodMonomial(std::move(replaced)));
            }
        }
        pending = std::move(next);
    }
    return result;
}

SteenrodSum kervaire_relation_lhs(int j, int start_index)
{
    if (j < 1 || j > 6)
        throw std::invalid_argument("relation index j must be in 1..6, got " + std::to_string(j));
    if (start_index != 0 && start_index != 1)
        throw std::invalid_argument("start index must be 0 or 1, got " + std::to_string(start_index));
    const unsigned p = 1U << j;
    SteenrodSum lhs{SteenrodMonomial{p, p}};
    for (int i = start_index; i <= j - 1; ++i)
        lhs.toggle(SteenrodMonomial{2 * p - (1U << i), 1U << i});
    return lhs;
}

SteenrodSum check_kervaire_relation(int j, int start_index) { return adem_rewrite(kervaire_relation_lhs(j, start_index)); }

PolyElement PolyElement::monomial(std::vector<unsigned> exponents)
{
    PolyElement p(exponents.size());
    p.terms_.insert(std::move(exponents));
    return p;
}

PolyElement PolyElement::generator_power(std::size_t variables, std::size_t i, unsigned power)
{
    if (i >= variables)
        throw std::out_of_range("generator index out of range");
    std::vector<unsigned> e(variables, 0);
    e[i] = power;
    return monomial(std::move(e));
}

void PolyElement::toggle(const std::vector<unsigned>& exponents)
{
    if (exponents.size() != variables_)
        throw std::invalid_argument("exponent vector has " + std::to_string(exponents.size()) + " entries, expected " +
                                    std::to_string(variables_));
    auto [it, inserted] = terms_.insert(exponents);
    if (!inserted)
        terms_.erase(it);
}

PolyElement& PolyElement::operator+=(const PolyElement& other)
{
    for (const auto& t : other.terms_)
        toggle(t);
    return *this;
}

std::string PolyElement::to_string() const
{
    if (terms_.empty())
        return "0";
    std::string out;
    for (const auto& t : terms_) {
        if (!out.empty())
            out += " + ";
        std::string mono;
        for (std::size_t v = 0; v < t.size(); ++v) {
            if (t[v] == 0)
                continue;
            if (!mono.empty())
                mono += '*';
            mono += "t" + std::to_string(v + 1);
            if (t[v] > 1)
                mono += "^" + std::to_string(t[v]);
        }
        out += mono.empty() ? "1" : mono;
    }
    return out;
}

PolyElement sq_on_polynomial(unsigned i, const PolyElement& p)
{
    PolyElement out(p.variables());
    for (const auto& t : p.terms()) {
        std::vector<unsigned> current = t;
        sq_monomial_into(i, t, 0, current, out);
    }
    return out;
}

PolyElement sq_on_polynomial(const SteenrodMonomial& m, const PolyElement& p)
{
    PolyElement out = p;
    const auto& e = m.exponents();
    for (auto it = e.rbegin(); it != e.rend() && !out.is_zero(); ++it)
        out = sq_on_polynomial(*it, out);
    return out;
}

PolyElement sq_on_polynomial(const SteenrodSum& s, const PolyElement& p)
{
    PolyElement out(p.variables());
    for (const auto& m : s.terms())
        out += sq_on_polynomial(m, p);
    return out;
}

std::vector<SteenrodMonomial> admissible_basis(unsigned degree)
{
    std::vector<SteenrodMonomial> out;
    std::vector<unsigned> prefix;
    enumerate_admissible(degree, degree, prefix, out);
    return out;
}

}  // namespace kervaire
