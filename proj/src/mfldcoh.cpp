#include "kervaire/mfldcoh.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace kervaire {

namespace {

void enumerate_monomials(const std::vector<unsigned>& max, std::size_t var, unsigned left, Exponents& current,
                         std::vector<Exponents>& out)
{
    if (var == max.size()) {
        if (left == 0)
            out.push_back(current);
        return;
    }
    for (unsigned e = std::min(left, max[var]) + 1; e-- > 0;) {
        current[var] = e;
        enumerate_monomials(max, var + 1, left - e, current, out);
    }
    current[var] = 0;
}

unsigned total(const Exponents& e) { return std::accumulate(e.begin(), e.end(), 0U); }

std::size_t dim_ker(const BitMatrix& m) { return m.cols() - rank(m); }
std::size_t dim_coker(const BitMatrix& m) { return m.rows() - rank(m); }

}  // namespace

void RingElement::toggle(const Exponents& e)
{
    auto [it, inserted] = terms_.insert(e);
    if (!inserted)
        terms_.erase(it);
}

RingElement& RingElement::operator+=(const RingElement& other)
{
    for (const auto& t : other.terms_)
        toggle(t);
    return *this;
}

TruncatedRing::TruncatedRing(std::vector<unsigned> max_exponents) : max_(std::move(max_exponents))
{
    if (max_.empty())
        throw std::invalid_argument("truncated ring needs at least one variable");
}

TruncatedRing TruncatedRing::projective_power(unsigned n, std::size_t copies)
{
    return TruncatedRing(std::vector<unsigned>(copies, n));
}

unsigned TruncatedRing::top_degree() const { return std::accumulate(max_.begin(), max_.end(), 0U); }

std::vector<Exponents> TruncatedRing::basis(unsigned degree) const
{
    std::vector<Exponents> out;
    Exponents current(max_.size(), 0);
    enumerate_monomials(max_, 0, degree, current, out);
    return out;
}

std::vector<std::size_t> TruncatedRing::betti() const
{
    std::vector<std::size_t> out;
    for (unsigned d = 0; d <= top_degree(); ++d)
        out.push_back(dimension(d));
    return out;
}

RingElement TruncatedRing::one() const { return monomial(Exponents(max_.size(), 0)); }

RingElement TruncatedRing::generator(std::size_t i) const
{
    if (i >= max_.size())
        throw std::out_of_range("generator index out of range");
    Exponents e(max_.size(), 0);
    e[i] = 1;
    return monomial(e);
}

RingElement TruncatedRing::monomial(const Exponents& e) const
{
    if (e.size() != max_.size())
        throw DimensionMismatch("exponent vector length does not match the ring");
    RingElement out;
    for (std::size_t i = 0; i < e.size(); ++i)
        if (e[i] > max_[i])
            return out;
    out.toggle(e);
    return out;
}

RingElement TruncatedRing::multiply(const RingElement& a, const RingElement& b) const
{
    RingElement out;
    for (const auto& x : a.terms())
        for (const auto& y : b.terms()) {
            Exponents e(max_.size());
            bool vanishes = false;
            for (std::size_t i = 0; i < e.size(); ++i) {
                e[i] = x[i] + y[i];
                vanishes = vanishes || e[i] > max_[i];
            }
            if (!vanishes)
                out.toggle(e);
        }
    return out;
}

RingElement TruncatedRing::power(const RingElement& a, unsigned k) const
{
    RingElement result = one();
    RingElement base = a;
    while (k > 0) {
        if (k & 1U)
            result = multiply(result, base);
        k >>= 1U;
        if (k > 0)
            base = multiply(base, base);
    }
    return result;
}

bool TruncatedRing::is_homogeneous(const RingElement& a) const
{
    if (a.is_zero())
        return true;
    const unsigned d = total(*a.terms().begin());
    return std::all_of(a.terms().begin(), a.terms().end(), [d](const Exponents& e) { return total(e) == d; });
}

unsigned TruncatedRing::degree(const RingElement& a) const
{
    if (a.is_zero())
        throw std::invalid_argument("the zero element has no degree");
    if (!is_homogeneous(a))
        throw std::invalid_argument("element " + format(a) + " is not homogeneous");
    return total(*a.terms().begin());
}

BitVector TruncatedRing::coordinates(const RingElement& a, unsigned degree) const
{
    const auto b = basis(degree);
    BitVector v(b.size());
    for (const auto& t : a.terms()) {
        const auto it = std::find(b.begin(), b.end(), t);
        if (it == b.end())
            throw std::invalid_argument("term of " + format(a) + " is not in degree " + std::to_string(degree));
        v.set(static_cast<std::size_t>(it - b.begin()));
    }
    return v;
}

RingElement TruncatedRing::from_coordinates(const BitVector& v, unsigned degree) const
{
    const auto b = basis(degree);
    if (v.size() != b.size())
        throw DimensionMismatch("coordinate vector does not match the degree " + std::to_string(degree) + " basis");
    RingElement out;
    for (std::size_t i = 0; i < b.size(); ++i)
        if (v.get(i))
            out.toggle(b[i]);
    return out;
}

RingElement TruncatedRing::parse(std::string_view text) const
{
    RingElement out;
    std::string body(text);
    std::stringstream terms(body);
    std::string term;
    bool any = false;
    while (std::getline(terms, term, '+')) {
        std::string compact;
        for (char ch : term)
            if (!std::isspace(static_cast<unsigned char>(ch)))
                compact += ch;
        if (compact.empty())
            throw std::invalid_argument("empty term in ring element '" + body + "'");
        any = true;
        if (compact == "0")
            continue;
        Exponents e(max_.size(), 0);
        if (compact != "1") {
            std::stringstream factors(compact);
            std::string factor;
            while (std::getline(factors, factor, '*')) {
                if (factor.size() < 2 || factor[0] != 't')
                    throw std::invalid_argument("bad factor '" + factor + "' in '" + body + "'");
                const std::size_t caret = factor.find('^');
                const std::string index = factor.substr(1, caret == std::string::npos ? std::string::npos : caret - 1);
                if (index.empty() || index.find_first_not_of("0123456789") != std::string::npos)
                    throw std::invalid_argument("bad variable in factor '" + factor + "'");
                const std::size_t var = std::stoul(index);
                if (var < 1 || var > max_.size())
                    throw std::invalid_argument("variable t" + index + " outside t1..t" + std::to_string(max_.size()));
                unsigned power = 1;
                if (caret != std::string::npos) {
                    const std::string p = factor.substr(caret + 1);
                    if (p.empty() || p.find_first_not_of("0123456789") != std::string::npos)
                        throw std::invalid_argument("bad exponent in factor '" + factor + "'");
                    power = static_cast<unsigned>(std::stoul(p));
                }
                e[var - 1] += power;
            }
        }
        out += monomial(e);
    }
    if (!any)
        throw std::invalid_argument("empty ring element");
    return out;
}

std::string TruncatedRing::format(const RingElement& a) const
{
    if (a.is_zero())
        return "0";
    std::string out;
    // Higher degree first, then the basis order within a degree.
    std::vector<Exponents> terms(a.terms().begin(), a.terms().end());
    std::sort(terms.begin(), terms.end(), [](const Exponents& x, const Exponents& y) {
        return total(x) != total(y) ? total(x) > total(y) : x > y;
    });
    for (const auto& t : terms) {
        if (!out.empty())
            out += " + ";
        std::string mono;
        for (std::size_t i = 0; i < t.size(); ++i) {
            if (t[i] == 0)
                continue;
            if (!mono.empty())
                mono += '*';
            mono += "t" + std::to_string(i + 1);
            if (t[i] > 1)
                mono += "^" + std::to_string(t[i]);
        }
        out += mono.empty() ? "1" : mono;
    }
    return out;
}

BitMatrix cup_multiplication_matrix(const TruncatedRing& ring, const RingElement& c, unsigned d)
{
    if (!ring.is_homogeneous(c))
        throw std::invalid_argument("multiplier " + ring.format(c) + " is not homogeneous");
    const auto source = ring.basis(d);
    if (c.is_zero())
        return BitMatrix(0, source.size());
    const unsigned target_degree = d + ring.degree(c);
    const auto target = ring.basis(target_degree);
    BitMatrix m(target.size(), source.size());
    for (std::size_t col = 0; col < source.size(); ++col)
        m.place(0, col, BitMatrix::from_columns({ring.coordinates(ring.multiply(c, ring.monomial(source[col])),
                                                                  target_degree)},
                                                 target.size()));
    return m;
}

std::vector<std::size_t> gysin_betti(const std::vector<std::size_t>& dims, const std::vector<BitMatrix>& maps)
{
    if (maps.size() != dims.size())
        throw DimensionMismatch("need one multiplication map per degree");
    std::vector<std::size_t> out(dims.size());
    for (std::size_t k = 0; k < dims.size(); ++k) {
        if (maps[k].cols() != dims[k])
            throw DimensionMismatch("map out of degree " + std::to_string(k) + " has the wrong source size");
        out[k] = dim_ker(maps[k]) + (k > 0 ? dim_coker(maps[k - 1]) : dims[0]);
        if (k > 0 && maps[k - 1].rows() != dims[k])
            throw DimensionMismatch("map into degree " + std::to_string(k) + " has the wrong target size");
    }
    return out;
}

std::vector<std::size_t> double_cover_betti(const TruncatedRing& ring, const RingElement& pi)
{
    if (!pi.is_zero() && ring.degree(pi) != 1)
        throw std::invalid_argument("characteristic class must have degree 1");
    const unsigned top = ring.top_degree();
    std::vector<std::size_t> dims;
    std::vector<BitMatrix> maps;
    for (unsigned k = 0; k <= top; ++k) {
        dims.push_back(ring.dimension(k));
        BitMatrix m = pi.is_zero() ? BitMatrix(ring.dimension(k + 1), ring.dimension(k))
                                   : cup_multiplication_matrix(ring, pi, k);
        maps.push_back(std::move(m));
    }
    return gysin_betti(dims, maps);
}

QuotientPower pullback_power_evaluate(const TruncatedRing& ring, const RingElement& pi, const RingElement& u,
                                      unsigned k)
{
    if (pi.is_zero() || ring.degree(pi) != 1)
        throw std::invalid_argument("pi must be a nonzero degree-1 class");
    if (u.is_zero())
        return QuotientPower{0, RingElement{}, true};
    const unsigned degree = ring.degree(u) * k;
    QuotientPower out{degree, RingElement{}, true};
    if (degree > ring.top_degree())
        return out;
    BitVector v = ring.coordinates(ring.power(u, k), degree);
    if (degree > 0) {
        // Reduce against the reduced echelon basis of pi * R in this degree.
        const BitMatrix image = cup_multiplication_matrix(ring, pi, degree - 1);
        const RowEchelon e = row_reduce(image.transpose());
        for (std::size_t r = 0; r < e.pivots.size(); ++r)
            if (v.get(e.pivots[r]))
                v += e.reduced.row(r);
    }
    out.normal_form = ring.from_coordinates(v, degree);
    out.is_zero = v.is_zero();
    return out;
}

MonodromyData::MonodromyData(std::vector<BitMatrix> action) : action_(std::move(action))
{
    if (action_.empty())
        throw std::invalid_argument("monodromy data needs at least degree 0");
    for (std::size_t n = 0; n < action_.size(); ++n) {
        if (action_[n].rows() != action_[n].cols())
            throw DimensionMismatch("monodromy in degree " + std::to_string(n) + " is not square");
        if (!inverse(action_[n]))
            throw std::invalid_argument("monodromy in degree " + std::to_string(n) + " is not invertible");
    }
}

MonodromyData MonodromyData::trivial(const std::vector<std::size_t>& betti)
{
    std::vector<BitMatrix> action;
    for (std::size_t b : betti)
        action.push_back(BitMatrix::identity(b));
    return MonodromyData(std::move(action));
}

MonodromyData MonodromyData::swap_on_square(const std::vector<std::size_t>& factor_betti)
{
    struct Cell {
        std::size_t degree, index;
    };
    const std::size_t top = factor_betti.empty() ? 0 : 2 * (factor_betti.size() - 1);
    std::vector<BitMatrix> action;
    for (std::size_t n = 0; n <= top; ++n) {
        std::vector<std::pair<Cell, Cell>> basis;
        for (std::size_t i = 0; i < factor_betti.size(); ++i) {
            if (n < i || n - i >= factor_betti.size())
                continue;
            const std::size_t j = n - i;
            for (std::size_t a = 0; a < factor_betti[i]; ++a)
                for (std::size_t b = 0; b < factor_betti[j]; ++b)
                    basis.push_back({{i, a}, {j, b}});
        }
        BitMatrix m(basis.size(), basis.size());
        for (std::size_t c = 0; c < basis.size(); ++c) {
            const auto& [x, y] = basis[c];
            for (std::size_t r = 0; r < basis.size(); ++r)
                if (basis[r].first.degree == y.degree && basis[r].first.index == y.index &&
                    basis[r].second.degree == x.degree && basis[r].second.index == x.index)
                    m.set(r, c, true);
        }
        action.push_back(std::move(m));
    }
    return MonodromyData(std::move(action));
}

std::vector<std::size_t> MonodromyData::fiber_betti() const
{
    std::vector<std::size_t> out;
    for (const auto& m : action_)
        out.push_back(m.rows());
    return out;
}

std::vector<std::size_t> wang_betti(const MonodromyData& m)
{
    const auto& action = m.action();
    std::vector<std::size_t> out(action.size() + 1, 0);
    for (std::size_t n = 0; n <= action.size(); ++n) {
        if (n < action.size())
            out[n] += dim_coker(action[n] + BitMatrix::identity(action[n].rows()));
        if (n > 0)
            out[n] += dim_ker(action[n - 1] + BitMatrix::identity(action[n - 1].rows()));
    }
    return out;
}

std::vector<std::size_t> mapping_torus_cover_betti(const TruncatedRing& ring, const RingElement& pi,
                                                   const std::vector<std::size_t>& sigma)
{
    const std::size_t k = ring.variables();
    if (sigma.size() != k)
        throw DimensionMismatch("variable permutation has the wrong length");
    std::vector<bool> hit(k, false);
    for (std::size_t i = 0; i < k; ++i) {
        if (sigma[i] >= k || hit[sigma[i]])
            throw std::invalid_argument("sigma is not a permutation of the variables");
        hit[sigma[i]] = true;
        if (ring.max_exponents()[sigma[i]] != ring.max_exponents()[i])
            throw std::invalid_argument("sigma does not preserve the truncation");
    }
    auto act = [&](const Exponents& e) {
        Exponents out(k);
        for (std::size_t i = 0; i < k; ++i)
            out[sigma[i]] = e[i];
        return out;
    };
    RingElement moved_pi;
    for (const auto& t : pi.terms())
        moved_pi.toggle(act(t));
    if (moved_pi != pi)
        throw std::invalid_argument("pi is not invariant under sigma");
    if (pi.is_zero() || ring.degree(pi) != 1)
        throw std::invalid_argument("pi must be a nonzero degree-1 class");

    const unsigned top = ring.top_degree();
    // Orbits of monomials per degree, ordered by their first member in the basis order.
    std::vector<std::vector<std::vector<Exponents>>> orbits(top + 2);
    std::vector<std::map<Exponents, std::size_t>> orbit_of(top + 2);
    for (unsigned d = 0; d <= top; ++d) {
        for (const auto& m : ring.basis(d)) {
            if (orbit_of[d].count(m))
                continue;
            std::vector<Exponents> orbit;
            for (Exponents x = m; orbit.empty() || x != m; x = act(x)) {
                orbit.push_back(x);
                orbit_of[d][x] = orbits[d].size();
            }
            orbits[d].push_back(std::move(orbit));
        }
    }
    auto count = [&](long d) -> std::size_t { return d < 0 || d > static_cast<long>(top) ? 0 : orbits[d].size(); };

    // pi on invariants (orbit sums) and on coinvariants (orbit classes), degree d -> d + 1.
    auto on_invariants = [&](unsigned d) {
        BitMatrix m(count(d + 1), count(d));
        for (std::size_t c = 0; c < orbits[d].size(); ++c) {
            RingElement sum;
            for (const auto& x : orbits[d][c])
                sum += ring.monomial(x);
            const RingElement image = ring.multiply(pi, sum);
            for (std::size_t r = 0; r < count(d + 1); ++r)
                m.set(r, c, image.terms().count(orbits[d + 1][r].front()) != 0);
        }
        return m;
    };
    auto on_coinvariants = [&](unsigned d) {
        BitMatrix m(count(d + 1), count(d));
        for (std::size_t c = 0; c < orbits[d].size(); ++c) {
            const RingElement image = ring.multiply(pi, ring.monomial(orbits[d][c].front()));
            for (const auto& t : image.terms())
                m.row(orbit_of[d + 1].at(t)).flip(c);
        }
        return m;
    };

    // A_d = Inv_d + Coinv_{d-1}, for d = 0 .. top + 1.
    std::vector<std::size_t> dims;
    std::vector<BitMatrix> maps;
    for (long d = 0; d <= static_cast<long>(top) + 1; ++d) {
        const std::size_t inv_d = count(d), co_d = count(d - 1);
        const std::size_t inv_next = count(d + 1), co_next = count(d);
        BitMatrix m(inv_next + co_next, inv_d + co_d);
        if (inv_d > 0 && inv_next > 0)
            m.place(0, 0, on_invariants(static_cast<unsigned>(d)));
        if (co_d > 0 && co_next > 0)
            m.place(inv_next, inv_d, on_coinvariants(static_cast<unsigned>(d - 1)));
        dims.push_back(inv_d + co_d);
        maps.push_back(std::move(m));
    }
    return gysin_betti(dims, maps);
}

bool is_palindromic(const std::vector<std::size_t>& v) { return std::equal(v.begin(), v.end(), v.rbegin()); }

ReductionReport char_number_reduction_report(int lemma1_input)
{
    if (lemma1_input != 0 && lemma1_input != 1)
        throw std::invalid_argument("the Lemma 1 input must be 0 or 1");
    const TruncatedRing ring = TruncatedRing::projective_power(7, 2);
    const RingElement pi = ring.parse("t1 + t2");
    const QuotientPower p14 = pullback_power_evaluate(ring, pi, ring.generator(0), 14);
    if (!p14.is_zero)
        throw std::logic_error("p_L^14 is nonzero in the quotient; its evaluation is not determined here");

    ReductionReport report;
    report.correction_term = 0;
    report.lemma1_input = lemma1_input;
    report.theta = lemma1_input ^ report.correction_term;
    report.equivalent = report.correction_term == 0;
    report.rows = {
        {"<p_L^14;[L]> (t1^14 in H^*(RP^7 x RP^7)/(t1+t2))", report.correction_term, "computed"},
        {"<p_N^14 kappa_N;[N]> = <p_L^14;[L]> (kappa_N dual to the fiber L)", report.correction_term, "derived"},
        {"<p_N^15;[N]> (degree of the self-intersection map)", lemma1_input, "geometric input"},
        {"<p_N^14 (p_N + kappa_N);[N]> = <p_N^15;[N]> + <p_N^14 kappa_N;[N]>", report.theta, "derived"},
        {"theta (self-intersection count mod 2)", report.theta, "derived"},
    };
    return report;
}

}  // namespace kervaire
