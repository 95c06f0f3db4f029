#include "kervaire/jones.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <set>
#include <sstream>
#include <stdexcept>

namespace kervaire {

namespace {

constexpr std::array<std::array<std::size_t, 2>, 6> kPairs{{{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}}};

std::vector<unsigned> subsets_of_size(std::size_t k)
{
    std::vector<unsigned> out;
    for (unsigned mask = 0; mask < 16; ++mask)
        if (static_cast<std::size_t>(std::popcount(mask)) == k)
            out.push_back(mask);
    // lexicographic on the sorted letters: compare reversed bit strings
    std::sort(out.begin(), out.end(), [](unsigned x, unsigned y) {
        for (unsigned bit = 0; bit < 4; ++bit) {
            const bool bx = (x >> bit) & 1U, by = (y >> bit) & 1U;
            if (bx != by)
                return bx;
        }
        return false;
    });
    return out;
}

std::vector<std::size_t> sphere(std::size_t n)
{
    std::vector<std::size_t> b(n + 1, 0);
    b.front() = 1;
    b.back() = 1;
    return b;
}

ComparisonRow row(std::string quantity, long computed, std::optional<long> reference, std::string source, bool hard)
{
    ComparisonRow r{std::move(quantity), computed, reference, std::move(source), "info", hard};
    if (reference)
        r.status = computed == *reference ? "pass" : "mismatch";
    return r;
}

bool hard_rows_pass(const std::vector<ComparisonRow>& rows)
{
    return std::all_of(rows.begin(), rows.end(), [](const ComparisonRow& r) { return !r.hard || r.status == "pass"; });
}

struct EvaluatedCycle {
    bool valid = false;
    std::string error;
    LoopCycle cycle;
};

EvaluatedCycle evaluate_cycle(const JonesData& data, const LocalHomology& h, const NamedCycle& c)
{
    EvaluatedCycle out;
    try {
        const GroupWord w = data.presentation.parse_word(c.loop);
        out.cycle = loop_cycle(data.omega, w, PairModule::parse(c.fiber), h);
        out.valid = true;
    } catch (const NonInvariantClassError& e) {
        out.error = std::string("not a cycle: ") + e.what() + " (" + PairModule::format(e.moved()) + ")";
    }
    return out;
}


// Forced value of q on `name` from the valued classes in `basis` (independent), or nullopt when
// its class is outside their span.
template <typename Meet>
std::optional<std::pair<int, std::string>> forced_value(const std::vector<std::string>& basis,
                                                        const std::map<std::string, EvaluatedCycle>& evaluated,
                                                        const std::map<std::string, int>& values,
                                                        const std::string& name, Meet meet)
{
    const BitVector x = *evaluated.at(name).cycle.class_coordinates;
    std::optional<BitVector> combo;
    if (x.is_zero())
        combo = BitVector(basis.size());
    else if (!basis.empty()) {
        std::vector<BitVector> coords;
        for (const auto& b : basis)
            coords.push_back(*evaluated.at(b).cycle.class_coordinates);
        combo = solve(BitMatrix::from_columns(coords, x.size()), x);
    }
    if (!combo)
        return std::nullopt;
    std::vector<std::string> terms;
    for (std::size_t k = 0; k < combo->size(); ++k)
        if (combo->get(k))
            terms.push_back(basis[k]);
    int forced = 0;
    std::string expr;
    for (std::size_t k = 0; k < terms.size(); ++k) {
        forced ^= values.at(terms[k]);
        for (std::size_t l = k + 1; l < terms.size(); ++l)
            forced ^= meet(terms[k], terms[l]) ? 1 : 0;
        expr += (expr.empty() ? "" : " + ") + terms[k];
    }
    return std::make_pair(forced, expr.empty() ? std::string("0") : expr);
}

// Throws when a valued class in the covered span contradicts the refinement rule; other
// contradictions among valued classes are recorded as conflicts.
template <typename Meet>
void check_refinement(const QTable& table, const std::map<std::string, EvaluatedCycle>& evaluated,
                      const std::vector<std::string>& covered, Meet meet, ArfJonesReport& r)
{
    for (const auto& c : table.cycles) {
        const auto it = table.values.find(c.name);
        if (it == table.values.end() || !evaluated.at(c.name).valid)
            continue;
        if (std::find(covered.begin(), covered.end(), c.name) != covered.end())
            continue;
        if (const auto f = forced_value(covered, evaluated, table.values, c.name, meet); f && f->first != it->second)
            throw std::invalid_argument("q table is not a refinement on the covered subspace: " + c.name +
                                        " is homologous to " + f->second + ", forcing q = " +
                                        std::to_string(f->first) + ", but the table gives " +
                                        std::to_string(it->second));
    }

    std::vector<std::string> independent;
    for (const auto& c : table.cycles) {
        const auto it = table.values.find(c.name);
        if (it == table.values.end() || !evaluated.at(c.name).valid)
            continue;
        const auto f = forced_value(independent, evaluated, table.values, c.name, meet);
        if (!f) {
            independent.push_back(c.name);
            continue;
        }
        if (f->first != it->second)
            r.refinement_conflicts.push_back(c.name + " is homologous to " + f->second + ", forcing q = " +
                                             std::to_string(f->first) + ", but the table gives " +
                                             std::to_string(it->second));
    }
}

}  // namespace

const std::vector<std::string>& PairModule::names()
{
    static const std::vector<std::string> n = {"AB", "AC", "AD", "BC", "BD", "CD"};
    return n;
}

std::size_t PairModule::index(char x, char y)
{
    if (x < 'A' || x > 'D' || y < 'A' || y > 'D' || x == y)
        throw std::invalid_argument(std::string("bad pair '") + x + y + "'");
    std::size_t i = static_cast<std::size_t>(x - 'A'), j = static_cast<std::size_t>(y - 'A');
    if (i > j)
        std::swap(i, j);
    for (std::size_t k = 0; k < kPairs.size(); ++k)
        if (kPairs[k][0] == i && kPairs[k][1] == j)
            return k;
    throw std::logic_error("unreachable pair index");
}

BitVector PairModule::parse(const std::string& text)
{
    BitVector v(6);
    std::string token;
    auto flush = [&]() {
        if (token.empty())
            return;
        if (token == "0") {
            token.clear();
            return;
        }
        if (token.size() != 2)
            throw std::invalid_argument("bad fiber class token '" + token + "'");
        v.flip(index(token[0], token[1]));
        token.clear();
    };
    for (char ch : text) {
        if (ch == '+' || std::isspace(static_cast<unsigned char>(ch)))
            flush();
        else
            token += static_cast<char>(std::toupper(static_cast<unsigned char>(ch)));
    }
    flush();
    return v;
}

std::string PairModule::format(const BitVector& v)
{
    std::string out;
    for (std::size_t k = 0; k < v.size(); ++k) {
        if (!v.get(k))
            continue;
        if (!out.empty())
            out += " + ";
        out += names().at(k);
    }
    return out.empty() ? "0" : out;
}

BitMatrix PairModule::action(const SignedPermutation& g) { return subset_action(g, 2); }

BitMatrix PairModule::pairing()
{
    BitMatrix b(6, 6);
    for (std::size_t i = 0; i < 6; ++i)
        for (std::size_t j = 0; j < 6; ++j) {
            const auto& p = kPairs[i];
            const auto& q = kPairs[j];
            b.set(i, j, p[0] != q[0] && p[0] != q[1] && p[1] != q[0] && p[1] != q[1]);
        }
    return b;
}

BitMatrix subset_action(const SignedPermutation& g, std::size_t k)
{
    if (g.size() != 4)
        throw std::invalid_argument("subset action needs a permutation of four letters");
    if (k > 4)
        throw std::invalid_argument("subset size above 4");
    const auto subsets = subsets_of_size(k);
    BitMatrix m(subsets.size(), subsets.size());
    for (std::size_t c = 0; c < subsets.size(); ++c) {
        unsigned image = 0;
        for (std::size_t bit = 0; bit < 4; ++bit)
            if ((subsets[c] >> bit) & 1U)
                image |= 1U << g.image(bit);
        const auto r = std::find(subsets.begin(), subsets.end(), image) - subsets.begin();
        m.set(static_cast<std::size_t>(r), c, true);
    }
    return m;
}

std::size_t generated_group_order(const SignedPermRepresentation& rho)
{
    const std::size_t g = rho.presentation().generator_count();
    std::set<SignedPermutation> seen{SignedPermutation::identity(rho.dim())};
    std::vector<SignedPermutation> frontier(seen.begin(), seen.end());
    while (!frontier.empty()) {
        std::vector<SignedPermutation> next;
        for (const auto& x : frontier)
            for (std::size_t i = 0; i < g; ++i) {
                const SignedPermutation y = rho.image(i) * x;
                if (seen.insert(y).second)
                    next.push_back(y);
            }
        frontier = std::move(next);
    }
    return seen.size();
}

JonesData make_jones_data(SignedPermRepresentation mu, const FixedPairs& fixed,
                          std::optional<std::size_t> group_order)
{
    if (mu.dim() != 4)
        throw std::invalid_argument("monodromy must permute the four letters A, B, C, D");
    for (std::size_t g = 0; g < mu.presentation().generator_count(); ++g)
        for (std::size_t i = 0; i < 4; ++i)
            if (mu.image(g).sign(i) != 1)
                throw std::invalid_argument("monodromy of " + mu.presentation().generators()[g] +
                                            " is not a plain permutation");
    const Presentation p = mu.presentation();
    std::vector<BitMatrix> images;
    for (std::size_t i = 0; i < p.generator_count(); ++i)
        images.push_back(PairModule::action(mu.image(i)));
    Representation omega(p, images);
    const BitMatrix pairing = PairModule::pairing();
    require_invariant_pairing(omega, pairing);

    for (const auto& [name, pairs] : fixed) {
        const std::size_t g = p.index_of(name);
        for (const auto& pair : pairs) {
            const BitVector v = PairModule::parse(pair);
            if (omega.image(g) * v != v)
                throw std::invalid_argument("monodromy of " + name + " does not fix " + pair + " (sends it to " +
                                            PairModule::format(omega.image(g) * v) + ")");
        }
    }
    if (group_order) {
        const std::size_t order = generated_group_order(mu);
        if (order != *group_order)
            throw std::invalid_argument("monodromy group has order " + std::to_string(order) + ", expected " +
                                        std::to_string(*group_order));
    }
    return {p, std::move(mu), std::move(omega), pairing};
}

JonesData build_jones_data()
{
    const Presentation p = Presentation::default_surface();
    SignedPermRepresentation mu(p, {SignedPermutation::from_cycles(4, "(1 3)"),
                                    SignedPermutation::from_cycles(4, "(1 2)(3 4)"),
                                    SignedPermutation::from_cycles(4, "(2 3)(4 1)")});
    return make_jones_data(std::move(mu), {{"a", {"AC", "BD"}}, {"b1", {"AB", "CD"}}, {"b2", {"BC", "AD"}}}, 8);
}

namespace {

std::vector<LocalHomology> fiber_degree_homology(const JonesData& data)
{
    std::vector<LocalHomology> out;
    for (std::size_t k = 0; k <= 4; ++k) {
        std::vector<BitMatrix> images;
        for (std::size_t i = 0; i < 3; ++i)
            images.push_back(subset_action(data.mu.image(i), k));
        out.push_back(local_homology(Representation(data.presentation, images)));
    }
    return out;
}

}  // namespace

std::vector<std::size_t> full_betti_vector(const JonesData& data)
{
    std::vector<std::size_t> b(31, 0);
    const auto h = fiber_degree_homology(data);
    for (std::size_t k = 0; k <= 4; ++k)
        for (int p = 0; p <= 2; ++p)
            b[static_cast<std::size_t>(p) + 7 * k] += h[k].dim(p);
    return b;
}

H15Report h15_consistency_report(const JonesData& data)
{
    H15Report r;
    const auto h = fiber_degree_homology(data);
    r.betti = full_betti_vector(data);
    for (std::size_t n = 0; n < r.betti.size(); ++n)
        r.signed_sum += (n % 2 == 0 ? 1 : -1) * static_cast<long>(r.betti[n]);
    for (const auto& hk : h)
        r.base_graded_sum += static_cast<long>(hk.dim(0)) - static_cast<long>(hk.dim(1)) + static_cast<long>(hk.dim(2));

    const LocalHomology& pairs = h[2];
    const long chi_base = data.presentation.euler_characteristic();
    r.rows.push_back(row("dim ker d1 on C_1(P^2; Omega)", static_cast<long>(pairs.kernel_d1), 12, "paper", false));
    r.rows.push_back(row("rank d2 on C_2(P^2; Omega)", static_cast<long>(pairs.rank_d2), 4, "paper", false));
    r.rows.push_back(row("b_15 = dim H_1(P^2; Omega)", static_cast<long>(r.betti[15]), 8, "paper", false));
    r.rows.push_back(row("dim H_0(P^2; Omega)", static_cast<long>(pairs.dim(0)), std::nullopt, "", false));
    r.rows.push_back(row("dim H_2(P^2; Omega)", static_cast<long>(pairs.dim(2)), std::nullopt, "", false));
    r.rows.push_back(row("h_0 - h_1 + h_2 for Omega", static_cast<long>(pairs.dim(0)) - static_cast<long>(pairs.dim(1)) +
                                                          static_cast<long>(pairs.dim(2)),
                         chi_base * 6, "identity", true));
    // chi(S^7) = 0, so the total space has Euler characteristic 0.
    r.rows.push_back(row("sum (-1)^n b_n", r.signed_sum, 0, "identity", true));
    r.rows.push_back(row("sum over fiber degrees of chi(P^2; C_{7k})", r.base_graded_sum, chi_base * 16, "identity", true));
    r.rows.push_back(row("b_n = b_{30-n}", is_palindromic(r.betti) ? 1 : 0, 1, "identity", true));
    r.hard_checks_pass = hard_rows_pass(r.rows);
    return r;
}

IntersectionGram intersection_gram(const JonesData& data)
{
    IntersectionGram out;
    out.basis = h1_cocycle_basis(data.omega);
    const std::size_t n = out.basis.size();
    out.gram = BitMatrix(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            out.gram.set(i, j, cup_eval(data.omega, out.basis[i], out.basis[j], data.pairing));
    if (!out.gram.is_symmetric() || !out.gram.has_zero_diagonal())
        throw std::logic_error("cup product form on H^1 is not alternating");
    out.symplectic = symplectic_basis(out.gram);
    return out;
}

std::vector<NamedCycle> default_catalog()
{
    return {
        {"[A x C x a]", "a", "AC"},
        {"[B x D x a]", "a", "BD"},
        {"[A x B x b1]", "b1", "AB"},
        {"[C x D x b1]", "b1", "CD"},
        {"[B x C x b2]", "b2", "BC"},
        {"[A x D x b2]", "b2", "AD"},
        {"[C x D x b2]'", "a b2 a^-1", "CD"},
        {"[A x B x b2]'", "a b2 a^-1", "AB"},
        {"[C x D x b1]'", "a b1 a^-1", "CD"},
        {"[A x C x b1]'", "a b1 a^-1", "AC"},
        {"[A x D x b1]'", "a b1 a^-1", "AD"},
    };
}

CycleCatalog paper_cycles(const JonesData& data)
{
    CycleCatalog cat;
    const LocalHomology h = local_homology(data.omega);
    std::vector<BitVector> coords;
    for (const auto& c : default_catalog()) {
        const EvaluatedCycle e = evaluate_cycle(data, h, c);
        CatalogEntry entry{c, e.valid, e.error, e.cycle.chain, e.cycle.is_boundary};
        if (e.valid) {
            cat.valid_indices.push_back(cat.entries.size());
            coords.push_back(*e.cycle.class_coordinates);
        }
        cat.entries.push_back(std::move(entry));
    }
    const std::size_t m = cat.valid_indices.size();
    cat.table = BitMatrix(m, m);
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < m; ++j)
            cat.table.set(i, j,
                          intersection_number(data.omega, cat.entries[cat.valid_indices[i]].chain,
                                              cat.entries[cat.valid_indices[j]].chain, data.pairing));
    cat.span_rank = coords.empty() ? 0 : rank(BitMatrix::from_columns(coords, h.h1.dim()));

    auto lookup = [&cat](const std::string& name) -> const CatalogEntry& {
        for (const auto& e : cat.entries)
            if (e.cycle.name == name)
                return e;
        throw std::logic_error("no catalog entry " + name);
    };
    const std::vector<std::tuple<std::string, std::string, int>> claims = {
        {"[A x C x a]", "[B x D x a]", 1},
        {"[A x B x b1]", "[C x D x b2]'", 1},
        {"[A x B x b2]'", "[C x D x b1]'", 1},
        {"[A x B x b2]'", "[C x D x b1]", 1},
        {"[A x C x b1]'", "[B x C x b2]", 1},
        {"[A x D x b1]'", "[B x C x b2]", 1},
        {"[A x D x b1]'", "[C x D x b2]'", 0},
    };
    for (const auto& [x, y, expected] : claims) {
        const CatalogEntry& ex = lookup(x);
        const CatalogEntry& ey = lookup(y);
        ClaimedIntersection c{x, y, expected, std::nullopt, "undefined"};
        if (ex.valid && ey.valid) {
            c.computed = intersection_number(data.omega, ex.chain, ey.chain, data.pairing) ? 1 : 0;
            c.status = *c.computed == expected ? "pass" : "mismatch";
        }
        cat.claims.push_back(c);
    }
    return cat;
}

QTable default_q_table()
{
    QTable t;
    t.cycles = {
        {"[A x C x a]", "a", "AC"},
        {"[B x D x a]", "a", "BD"},
        {"[A x B x b1]", "b1", "AB"},
        {"[C x D x b2]'", "a b2 a^-1", "CD"},
        {"[A x B x b2]'", "a b2 a^-1", "AB"},
        {"[C x D x b1]'", "a b1 a^-1", "CD"},
        // extension of A x D along a b1 a^-1
        {"[A x C x b1]'", "a b1 a^-1", "AD"},
        {"[B x C x b2]", "b2", "BC"},
    };
    t.pairs = {
        {"[A x C x a]", "[B x D x a]"},
        {"[A x B x b1]", "[C x D x b2]'"},
        {"[A x B x b2]'", "[C x D x b1]'"},
        {"[A x C x b1]'", "[B x C x b2]"},
    };
    t.values = {
        {"[A x C x a]", 0},
        {"[A x B x b1]", 0},
        {"[C x D x b2]'", 0},
        {"[A x B x b2]'", 0},
        {"[C x D x b1]'", 0},
        {"[A x C x b1]'", 1},
        {"[B x C x b2]", 1},
    };
    return t;
}

ArfJonesReport arf_jones(const JonesData& data, const QTable& table)
{
    std::map<std::string, const NamedCycle*> by_name;
    for (const auto& c : table.cycles)
        if (!by_name.emplace(c.name, &c).second)
            throw std::invalid_argument("cycle '" + c.name + "' listed twice");
    for (const auto& [name, value] : table.values) {
        if (!by_name.count(name))
            throw std::invalid_argument("q value given for unknown cycle '" + name + "'");
        if (value != 0 && value != 1)
            throw std::invalid_argument("q value of '" + name + "' is not 0 or 1");
    }
    std::set<std::string> used;
    for (const auto& [x, y] : table.pairs) {
        for (const auto& n : {x, y}) {
            if (!by_name.count(n))
                throw std::invalid_argument("pair refers to unknown cycle '" + n + "'");
            if (!used.insert(n).second)
                throw std::invalid_argument("cycle '" + n + "' occurs in two pairs");
        }
    }

    ArfJonesReport r;
    const LocalHomology h = local_homology(data.omega);
    r.total_dim = h.h1.dim();
    r.claimed_pairs = table.pairs.size();

    auto value_of = [&table](const std::string& n) -> std::optional<int> {
        const auto it = table.values.find(n);
        if (it == table.values.end())
            return std::nullopt;
        return it->second;
    };

    // Pairs taken as hyperbolic, as listed.
    {
        std::vector<bool> values;
        r.completion_independent = true;
        for (const auto& [x, y] : table.pairs) {
            const auto qx = value_of(x), qy = value_of(y);
            if (qx && qy) {
                values.push_back(*qx == 1);
                values.push_back(*qy == 1);
                ++r.covered_pairs_claimed;
            } else if (!((qx && *qx == 0) || (qy && *qy == 0))) {
                r.completion_independent = false;
            }
        }
        if (r.covered_pairs_claimed > 0) {
            const std::size_t n = values.size();
            BitMatrix gram(n, n);
            BitVector q(n);
            for (std::size_t k = 0; k < n; k += 2) {
                gram.set(k, k + 1, true);
                gram.set(k + 1, k, true);
            }
            for (std::size_t k = 0; k < n; ++k)
                q.set(k, values[k]);
            r.arf_as_claimed = arf(QuadraticSpace(gram, q)) ? 1 : 0;
        }
    }

    // Actual classes in H_1.
    std::map<std::string, EvaluatedCycle> evaluated;
    for (const auto& c : table.cycles) {
        evaluated.emplace(c.name, evaluate_cycle(data, h, c));
        if (!evaluated.at(c.name).valid)
            r.notes.push_back(c.name + ": " + evaluated.at(c.name).error);
    }
    auto meet = [&](const std::string& x, const std::string& y) {
        return intersection_number(data.omega, evaluated.at(x).cycle.chain, evaluated.at(y).cycle.chain, data.pairing);
    };

    // Claimed pairs that are hyperbolic and orthogonal to the pairs kept before them.
    std::vector<std::pair<std::string, std::string>> kept;
    for (const auto& [x, y] : table.pairs) {
        if (!evaluated.at(x).valid || !evaluated.at(y).valid) {
            r.notes.push_back("pair (" + x + ", " + y + ") is undefined");
            continue;
        }
        if (!meet(x, y)) {
            r.notes.push_back("pair (" + x + ", " + y + ") has intersection 0, not hyperbolic");
            continue;
        }
        bool orthogonal = true;
        for (const auto& [u, v] : kept)
            orthogonal = orthogonal && !meet(x, u) && !meet(x, v) && !meet(y, u) && !meet(y, v);
        if (!orthogonal) {
            r.notes.push_back("pair (" + x + ", " + y + ") is not orthogonal to the earlier pairs");
            continue;
        }
        kept.emplace_back(x, y);
    }
    r.hyperbolic_pairs_computed = kept.size();
    std::vector<std::string> covered;
    int total = 0;
    for (const auto& [x, y] : kept) {
        const auto qx = value_of(x), qy = value_of(y);
        if (!qx || !qy) {
            r.notes.push_back("pair (" + x + ", " + y + ") is hyperbolic but not fully covered by the table");
            continue;
        }
        ++r.covered_pairs_computed;
        covered.push_back(x);
        covered.push_back(y);
        total ^= *qx & *qy;
    }
    check_refinement(table, evaluated, covered, meet, r);
    if (r.covered_pairs_computed > 0)
        r.arf_computed = total;
    if (2 * r.covered_pairs_computed < r.total_dim)
        r.notes.push_back("covered subspace has dimension " + std::to_string(2 * r.covered_pairs_computed) +
                          " inside H_1 of dimension " + std::to_string(r.total_dim));
    return r;
}

FlatBundleReport flat_bundle_report(const SignedPermRepresentation& rho, std::optional<int> reference_w2)
{
    FlatBundleReport r;
    r.generators = rho.presentation().generators();
    r.reference_w2 = reference_w2;
    const Cocycle w1 = w1_character(rho);
    for (const auto& v : w1.values())
        r.w1.push_back(v.get(0) ? 1 : 0);
    const Representation trivial = Representation::trivial(rho.presentation(), 1);
    r.w1_squared = cup_eval(trivial, w1, w1, BitMatrix::identity(1)) ? 1 : 0;
    r.w2_plus = pin_lift_w2(rho, PinSignature::plus) ? 1 : 0;
    r.w2_minus = pin_lift_w2(rho, PinSignature::minus) ? 1 : 0;
    for (std::size_t g = 0; g < r.w1.size(); ++g)
        r.rows.push_back(row("w1(" + r.generators[g] + ")", r.w1[g], std::nullopt, "", false));
    r.rows.push_back(row("<w1^2, [base]>", r.w1_squared, std::nullopt, "", false));
    r.rows.push_back(row("w2 from the Pin+ lift", r.w2_plus, reference_w2, reference_w2 ? "paper" : "", false));
    r.rows.push_back(row("w2 from the Pin- lift", r.w2_minus, std::nullopt, "", false));
    r.rows.push_back(row("Pin+ minus Pin- equals w1^2", (r.w2_plus ^ r.w2_minus) == r.w1_squared ? 1 : 0, 1,
                         "identity", true));
    r.hard_checks_pass = hard_rows_pass(r.rows);
    return r;
}

Section5Report section5_report(int lemma1_input)
{
    Section5Report s;
    const TruncatedRing p7 = TruncatedRing::projective_power(7, 1);
    const TruncatedRing r = TruncatedRing::projective_power(7, 2);
    const RingElement pi = r.parse("t1 + t2");

    s.m15 = wang_betti(MonodromyData::swap_on_square(sphere(7)));
    s.k15 = wang_betti(MonodromyData::swap_on_square(p7.betti()));
    s.l14 = double_cover_betti(r, pi);
    s.n15 = mapping_torus_cover_betti(r, pi, {1, 0});
    s.n15_cross_check = wang_betti(MonodromyData::trivial(s.l14));
    s.p_l14_zero = pullback_power_evaluate(r, pi, r.generator(0), 14).is_zero;
    s.p_l7_nonzero = !pullback_power_evaluate(r, pi, r.generator(0), 7).is_zero;
    s.reduction = char_number_reduction_report(lemma1_input);

    auto total = [](const std::vector<std::size_t>& v) {
        long t = 0;
        for (auto x : v)
            t += static_cast<long>(x);
        return t;
    };
    s.rows.push_back(row("dim H_1(M^15)", static_cast<long>(s.m15.at(1)), std::nullopt, "", false));
    s.rows.push_back(row("dim H_15(M^15)", static_cast<long>(s.m15.at(15)), std::nullopt, "", false));
    s.rows.push_back(row("dim H_1(K^15)", static_cast<long>(s.k15.at(1)), std::nullopt, "", false));
    s.rows.push_back(row("dim H_7(L^14)", static_cast<long>(s.l14.at(7)), std::nullopt, "", false));
    s.rows.push_back(row("total Betti number of N^15", total(s.n15), std::nullopt, "", false));
    s.rows.push_back(row("N^15 additive model agrees with Wang over L", s.n15 == s.n15_cross_check ? 1 : 0, 1,
                         "identity", true));
    s.rows.push_back(row("Betti numbers of N^15 palindromic", is_palindromic(s.n15) ? 1 : 0, 1, "identity", true));
    s.rows.push_back(row("Betti numbers of L^14 palindromic", is_palindromic(s.l14) ? 1 : 0, 1, "identity", true));
    s.rows.push_back(row("<p_L^14, [L]>", s.p_l14_zero ? 0 : 1, 0, "paper", true));
    s.rows.push_back(row("p_L^7 nonzero", s.p_l7_nonzero ? 1 : 0, std::nullopt, "", false));
    s.rows.push_back(row("theta", s.reduction.theta, 1, "paper", true));
    s.rows.push_back(row("two characteristic-number equations agree", s.reduction.equivalent ? 1 : 0, 1, "identity",
                         true));
    s.hard_checks_pass = hard_rows_pass(s.rows);
    return s;
}

}  // namespace kervaire
