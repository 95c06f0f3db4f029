#include "kervaire/grouphom.hpp"

namespace kervaire {

namespace {

// Prefix at which the i-th edge of w starts: p_{i-1} for a positive letter, p_i for an inverse one.
GroupWord source_prefix(const GroupWord& w, std::size_t i)
{
    return w.prefix(w.letters()[i].exponent > 0 ? i : i + 1);
}

BitVector block(const BitVector& flat, std::size_t index, std::size_t n) { return flat.slice(index * n, n); }

std::vector<BitVector> columns(const BitMatrix& m)
{
    std::vector<BitVector> out;
    for (std::size_t c = 0; c < m.cols(); ++c)
        out.push_back(m.column(c));
    return out;
}

}  // namespace

FoxComplex fox_complex(const Representation& rho)
{
    const Presentation& p = rho.presentation();
    const std::size_t n = rho.dim(), g = p.generator_count();
    FoxComplex c{n, g, BitMatrix(n, g * n), BitMatrix(g * n, n)};
    const BitMatrix id = BitMatrix::identity(n);
    for (std::size_t x = 0; x < g; ++x) {
        c.d1.place(0, x * n, rho.inverse_image(x) + id);
        c.d2.place(x * n, 0, rho.evaluate_inverse(fox_derivative(p.relator(), x)));
    }
    return c;
}

std::size_t LocalHomology::dim(int degree) const
{
    switch (degree) {
    case 0:
        return h0.dim();
    case 1:
        return h1.dim();
    case 2:
        return h2.dim();
    default:
        return 0;
    }
}

LocalHomology local_homology(const Representation& rho)
{
    FoxComplex c = fox_complex(rho);
    if (!(c.d1 * c.d2).is_zero())
        throw std::logic_error("Fox complex is not a chain complex (d1 d2 != 0)");
    const std::size_t n = c.module_dim;
    std::vector<BitVector> all;
    for (std::size_t i = 0; i < n; ++i)
        all.push_back(BitVector::unit(n, i));
    const auto z1 = kernel_basis(c.d1);
    const auto z2 = kernel_basis(c.d2);
    Subquotient h0(n, all, columns(c.d1));
    Subquotient h1(c.generators * n, z1, columns(c.d2));
    Subquotient h2(n, z2, {});
    const std::size_t r1 = rank(c.d1), r2 = rank(c.d2);
    return LocalHomology{std::move(c), std::move(h0), std::move(h1), std::move(h2), z1.size(), r1, r2};
}

Cocycle::Cocycle(std::vector<BitVector> values) : values_(std::move(values))
{
    if (values_.empty())
        throw std::invalid_argument("cocycle needs at least one generator value");
    for (const auto& v : values_)
        if (v.size() != values_.front().size())
            throw DimensionMismatch("cocycle values have different lengths");
}

Cocycle Cocycle::from_flat(const BitVector& flat, std::size_t generators)
{
    if (generators == 0 || flat.size() % generators != 0)
        throw DimensionMismatch("flat cochain length is not a multiple of the generator count");
    const std::size_t n = flat.size() / generators;
    std::vector<BitVector> values;
    for (std::size_t x = 0; x < generators; ++x)
        values.push_back(block(flat, x, n));
    return Cocycle(std::move(values));
}

Cocycle Cocycle::zero(std::size_t generators, std::size_t module_dim)
{
    return Cocycle(std::vector<BitVector>(generators, BitVector(module_dim)));
}

BitVector Cocycle::flat() const
{
    BitVector out(0);
    for (const auto& v : values_)
        out = out.concat(v);
    return out;
}

BitVector Cocycle::evaluate(const GroupWord& w, const Representation& rho) const
{
    if (rho.dim() != module_dim() || rho.presentation().generator_count() != values_.size())
        throw DimensionMismatch("cocycle does not match the representation");
    BitVector value(module_dim());
    BitMatrix transport = BitMatrix::identity(module_dim());
    for (const auto& l : w.letters()) {
        if (l.exponent > 0) {
            value += transport * values_.at(l.generator);
            transport = transport * rho.image(l.generator);
        } else {
            transport = transport * rho.inverse_image(l.generator);
            value += transport * values_.at(l.generator);
        }
    }
    return value;
}

CochainComplex cochain_complex(const Representation& rho)
{
    const Presentation& p = rho.presentation();
    const std::size_t n = rho.dim(), g = p.generator_count();
    CochainComplex c{BitMatrix(g * n, n), BitMatrix(n, g * n)};
    const BitMatrix id = BitMatrix::identity(n);
    for (std::size_t x = 0; x < g; ++x) {
        c.delta1.place(x * n, 0, rho.image(x) + id);
        c.delta2.place(0, x * n, rho.evaluate(fox_derivative(p.relator(), x)));
    }
    return c;
}

Cocycle principal_cocycle(const Representation& rho, const BitVector& m)
{
    return Cocycle::from_flat(cochain_complex(rho).delta1 * m, rho.presentation().generator_count());
}

bool is_cocycle(const Representation& rho, const Cocycle& u)
{
    return u.evaluate(rho.presentation().relator(), rho).is_zero();
}

std::vector<Cocycle> h1_cocycle_basis(const Representation& rho)
{
    const CochainComplex c = cochain_complex(rho);
    const std::size_t g = rho.presentation().generator_count();
    const Subquotient h(g * rho.dim(), kernel_basis(c.delta2), columns(c.delta1));
    std::vector<Cocycle> out;
    for (const auto& z : h.representatives())
        out.push_back(Cocycle::from_flat(z, g));
    return out;
}

void require_invariant_pairing(const Representation& rho, const BitMatrix& pairing)
{
    if (pairing.rows() != rho.dim() || pairing.cols() != rho.dim())
        throw DimensionMismatch("pairing size does not match the coefficient module");
    for (std::size_t x = 0; x < rho.presentation().generator_count(); ++x) {
        const BitMatrix& r = rho.image(x);
        if (r.transpose() * pairing * r != pairing)
            throw std::invalid_argument("pairing is not invariant under generator " +
                                        rho.presentation().generators()[x]);
    }
}

bool cup_eval(const Representation& rho, const Cocycle& u, const Cocycle& v, const BitMatrix& pairing)
{
    require_invariant_pairing(rho, pairing);
    const GroupWord& r = rho.presentation().relator();
    bool total = false;
    for (std::size_t i = 0; i < r.length(); ++i) {
        const GroupWord s = source_prefix(r, i);
        const BitVector vi = rho.evaluate(s) * v.value(r.letters()[i].generator);
        total ^= u.evaluate(s, rho).dot(pairing * vi);
    }
    return total;
}

BitVector pd_cap(const Representation& rho, const Cocycle& v)
{
    const GroupWord& r = rho.presentation().relator();
    const std::size_t n = rho.dim(), g = rho.presentation().generator_count();
    std::vector<BitVector> transported;
    for (std::size_t i = 0; i < r.length(); ++i)
        transported.push_back(rho.evaluate(source_prefix(r, i)) * v.value(r.letters()[i].generator));

    // Slot x_j receives rho(s_j)^{-1} W_j, W_j the sum of transported values after edge j
    // (edge j included when it is traversed backwards).
    BitVector chain(g * n);
    BitVector after(n);
    for (std::size_t j = r.length(); j-- > 0;) {
        BitVector w = after;
        if (r.letters()[j].exponent < 0)
            w += transported[j];
        const BitVector contribution = rho.evaluate(source_prefix(r, j).inverse()) * w;
        const std::size_t x = r.letters()[j].generator;
        for (std::size_t k = 0; k < n; ++k)
            if (contribution.get(k))
                chain.flip(x * n + k);
        after += transported[j];
    }
    return chain;
}

bool kronecker(const Cocycle& u, const BitVector& chain, const BitMatrix& pairing)
{
    const std::size_t n = u.module_dim();
    if (chain.size() != u.values().size() * n)
        throw DimensionMismatch("chain and cochain sizes differ");
    bool total = false;
    for (std::size_t x = 0; x < u.values().size(); ++x)
        total ^= u.value(x).dot(pairing * block(chain, x, n));
    return total;
}

LoopCycle loop_cycle(const Representation& rho, const GroupWord& w, const BitVector& omega,
                     const LocalHomology& homology)
{
    const std::size_t n = rho.dim(), g = rho.presentation().generator_count();
    if (omega.size() != n)
        throw DimensionMismatch("fiber class has the wrong length");
    const BitVector moved = rho.evaluate(w) * omega;
    if (moved != omega)
        throw NonInvariantClassError("fiber class " + omega.to_string() + " is moved to " + moved.to_string() +
                                         " by the loop " + rho.presentation().format(w),
                                     moved);
    BitVector chain(g * n);
    for (std::size_t i = 0; i < w.length(); ++i) {
        const BitVector value = rho.evaluate(source_prefix(w, i).inverse()) * omega;
        const std::size_t x = w.letters()[i].generator;
        for (std::size_t k = 0; k < n; ++k)
            if (value.get(k))
                chain.flip(x * n + k);
    }
    if (!(homology.complex.d1 * chain).is_zero())
        throw std::logic_error("loop chain is not a cycle");
    LoopCycle out{chain, homology.h1.coordinates(chain), false};
    out.is_boundary = homology.h1.is_zero_class(chain);
    return out;
}

LoopCycle loop_cycle(const Representation& rho, const GroupWord& w, const BitVector& omega)
{
    return loop_cycle(rho, w, omega, local_homology(rho));
}

std::optional<Cocycle> pd_inverse(const Representation& rho, const BitVector& z)
{
    const FoxComplex c = fox_complex(rho);
    if (z.size() != c.d1.cols())
        throw DimensionMismatch("1-chain has the wrong length");
    if (!(c.d1 * z).is_zero())
        return std::nullopt;
    const auto basis = h1_cocycle_basis(rho);
    const std::size_t g = c.generators;
    if (basis.empty())
        return Cocycle::zero(g, c.module_dim);
    std::vector<BitVector> caps;
    for (const auto& u : basis)
        caps.push_back(pd_cap(rho, u));
    const BitMatrix system = BitMatrix::from_columns(caps, z.size()).hstack(c.d2);
    const auto x = solve(system, z);
    if (!x)
        throw std::logic_error("cap product with the fundamental class is not onto H1");
    BitVector flat(g * c.module_dim);
    for (std::size_t k = 0; k < basis.size(); ++k)
        if (x->get(k))
            flat += basis[k].flat();
    return Cocycle::from_flat(flat, g);
}

bool intersection_number(const Representation& rho, const BitVector& z1, const BitVector& z2,
                         const BitMatrix& pairing)
{
    const auto u = pd_inverse(rho, z1);
    if (!u)
        throw std::invalid_argument("first argument is not a cycle");
    if (!(fox_complex(rho).d1 * z2).is_zero())
        throw std::invalid_argument("second argument is not a cycle");
    return kronecker(*u, z2, pairing);
}

Cocycle w1_character(const SignedPermRepresentation& rho)
{
    std::vector<BitVector> values;
    for (std::size_t x = 0; x < rho.presentation().generator_count(); ++x) {
        BitVector v(1);
        v.set(0, rho.image(x).determinant() < 0);
        values.push_back(v);
    }
    return Cocycle(std::move(values));
}

}  // namespace kervaire
