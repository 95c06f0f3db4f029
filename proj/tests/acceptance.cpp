// One line per acceptance criterion; exit status is nonzero if any criterion fails.
#include "kervaire/cayley.hpp"
#include "kervaire/cli.hpp"
#include "kervaire/document.hpp"
#include "kervaire/jones.hpp"
#include "kervaire/quadform.hpp"
#include "kervaire/steenrod.hpp"

#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <sstream>
#include <string>

using namespace kervaire;

namespace {

using Clock = std::chrono::steady_clock;

struct Outcome {
    bool pass = true;
    std::string detail;

    void require(bool ok, const std::string& what)
    {
        if (!ok) {
            pass = false;
            detail += (detail.empty() ? "" : "; ") + what;
        }
    }
};

double seconds_since(Clock::time_point start)
{
    return std::chrono::duration<double>(Clock::now() - start).count();
}

Outcome criterion_adem()
{
    Outcome o;
    const auto start = Clock::now();
    for (int j = 1; j <= 4; ++j) {
        const SteenrodSum r = check_kervaire_relation(j, 0);
        o.require(r.is_zero(), "j=" + std::to_string(j) + " remainder " + r.to_string());
    }
    const SteenrodSum r = check_kervaire_relation(4, 1);
    o.require(r == SteenrodSum{SteenrodMonomial{31, 1}}, "(4,1) remainder " + r.to_string());
    const double t = seconds_since(start);
    o.require(t < 1.0, "took " + std::to_string(t) + " s");
    if (o.pass)
        o.detail = "j=1..4 empty, (4,1) -> Sq31 Sq1, " + std::to_string(t) + " s";
    return o;
}

Outcome criterion_faithfulness()
{
    Outcome o;
    std::mt19937_64 rng(40);
    std::uniform_int_distribution<unsigned> total(1, 40);
    std::uniform_int_distribution<unsigned> degree(1, 20);
    std::uniform_int_distribution<std::size_t> var(0, 5);
    std::uniform_int_distribution<int> terms(1, 3);
    std::size_t inadmissible = 0;
    for (int trial = 0; trial < 500; ++trial) {
        unsigned left = total(rng);
        std::vector<unsigned> e;
        while (left > 0) {
            std::uniform_int_distribution<unsigned> part(1, std::min(left, 16U));
            e.push_back(part(rng));
            left -= e.back();
        }
        const SteenrodMonomial m(e);
        inadmissible += !m.admissible();
        PolyElement p(6);
        const int n = terms(rng);
        for (int k = 0; k < n; ++k) {
            std::vector<unsigned> x(6, 0);
            const unsigned d = degree(rng);
            for (unsigned s = 0; s < d; ++s)
                ++x[var(rng)];
            p.toggle(x);
        }
        const PolyElement direct = sq_on_polynomial(m, p);
        const PolyElement rewritten = sq_on_polynomial(adem_rewrite(SteenrodSum{m}), p);
        o.require(direct == rewritten, "differs for " + m.to_string());
    }
    if (o.pass)
        o.detail = "500 monomials (" + std::to_string(inadmissible) + " inadmissible), exact equality";
    return o;
}

BitMatrix standard_gram(std::size_t n)
{
    BitMatrix g(n, n);
    for (std::size_t k = 0; k + 1 < n; k += 2) {
        g.set(k, k + 1, true);
        g.set(k + 1, k, true);
    }
    return g;
}

Outcome criterion_arf()
{
    Outcome o;
    std::size_t exhaustive = 0;
    for (std::size_t n = 2; n <= 6; n += 2) {
        std::vector<std::pair<std::size_t, std::size_t>> slots;
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = i + 1; j < n; ++j)
                slots.emplace_back(i, j);
        for (unsigned long long mask = 0; mask < (1ULL << slots.size()); ++mask) {
            BitMatrix g(n, n);
            for (std::size_t k = 0; k < slots.size(); ++k)
                if ((mask >> k) & 1ULL) {
                    g.set(slots[k].first, slots[k].second, true);
                    g.set(slots[k].second, slots[k].first, true);
                }
            if (rank(g) != n)
                continue;
            for (unsigned long long q = 0; q < (1ULL << n); ++q) {
                BitVector values(n);
                for (std::size_t k = 0; k < n; ++k)
                    values.set(k, (q >> k) & 1ULL);
                const QuadraticSpace s(g, values);
                o.require(arf(s) == arf_count_oracle(s), "dim " + std::to_string(n) + " form " + std::to_string(mask));
                ++exhaustive;
            }
        }
    }

    // Random spaces: the standard form in a random basis.
    std::mt19937_64 rng(16);
    std::bernoulli_distribution bit(0.5);
    std::uniform_int_distribution<std::size_t> genus(1, 8);
    for (int trial = 0; trial < 200; ++trial) {
        const std::size_t n = 2 * genus(rng);
        BitMatrix p;
        do {
            p = BitMatrix(n, n);
            for (std::size_t r = 0; r < n; ++r)
                for (std::size_t c = 0; c < n; ++c)
                    p.set(r, c, bit(rng));
        } while (rank(p) != n);
        BitVector values(n);
        for (std::size_t k = 0; k < n; ++k)
            values.set(k, bit(rng));
        const QuadraticSpace s(p.transpose() * standard_gram(n) * p, values);
        o.require(arf(s) == arf_count_oracle(s), "random trial " + std::to_string(trial));
    }
    if (o.pass)
        o.detail = std::to_string(exhaustive) + " exhaustive spaces (dim 2, 4, 6) and 200 random up to dim 16";
    return o;
}

Outcome criterion_jones_homology()
{
    Outcome o;
    const auto start = Clock::now();
    const JonesData data = build_jones_data();
    const auto b = full_betti_vector(data);
    o.require(b.size() == 31 && b[0] == 1 && b[30] == 1, "b_0 or b_30 is not 1");
    o.require(b[1] == 3, "b_1 = " + std::to_string(b[1]));
    o.require(is_palindromic(b), "not palindromic");
    long signed_sum = 0;
    for (std::size_t k = 0; k < b.size(); ++k)
        signed_sum += (k % 2 == 0 ? 1 : -1) * static_cast<long>(b[k]);
    o.require(signed_sum == -16, "sum (-1)^k b_k = " + std::to_string(signed_sum) + ", expected -16");

    const H15Report r = h15_consistency_report(data);
    o.require(r.hard_checks_pass, "an identity row failed");
    for (const long paper : {12L, 4L, 8L}) {
        bool found = false;
        for (const auto& row : r.rows)
            if (row.source == "paper" && row.reference == paper && (row.status == "pass" || row.status == "mismatch"))
                found = true;
        o.require(found, "no comparison row against " + std::to_string(paper));
    }
    const double t = seconds_since(start);
    o.require(t < 10.0, "took " + std::to_string(t) + " s");
    std::string rows;
    for (const auto& row : r.rows)
        if (row.source == "paper")
            rows += " " + std::to_string(row.computed) + "/" + std::to_string(*row.reference) + " " + row.status + ";";
    o.detail += (o.detail.empty() ? "" : " | ") + std::string("published rows:") + rows +
                " base-graded sum " + std::to_string(r.base_graded_sum) + ", " + std::to_string(t) + " s";
    return o;
}

Outcome criterion_intersection_form()
{
    Outcome o;
    const JonesData data = build_jones_data();
    const std::size_t b15 = full_betti_vector(data)[15];
    try {
        const IntersectionGram g = intersection_gram(data);
        o.require(g.gram.is_symmetric(), "not symmetric");
        o.require(g.gram.has_zero_diagonal(), "not alternating");
        o.require(rank(g.gram) == b15, "rank " + std::to_string(rank(g.gram)) + " vs b_15 " + std::to_string(b15));
        o.require(2 * g.symplectic.size() == b15, "symplectic basis has " + std::to_string(g.symplectic.size()) + " pairs");
    } catch (const std::exception& e) {
        o.require(false, e.what());
    }
    const QTable table = parse_q_table_document(read_document(std::string(KERVAIRE_DATA_DIR) + "/q_table.yaml"),
                                                "q_table.yaml");
    const ArfJonesReport a = arf_jones(data, table);
    o.require(a.arf_as_claimed == 1, "restricted Arf is not 1");
    if (o.pass)
        o.detail = "rank " + std::to_string(b15) + ", " + std::to_string(b15 / 2) +
                   " hyperbolic pairs, restricted Arf 1 on " + std::to_string(a.covered_pairs_claimed) +
                   " fully valued pairs";
    return o;
}

Outcome criterion_section5()
{
    Outcome o;
    const Section5Report s = section5_report(1);
    o.require(s.p_l14_zero, "<p_L^14, [L]> is not 0");
    o.require(s.m15.size() == 16 && s.m15[15] == 1, "dim H_15(M^15) is not 1");
    for (const auto* v : {&s.m15, &s.k15, &s.l14, &s.n15, &s.n15_cross_check})
        o.require(is_palindromic(*v), "a Wang or Gysin output is not palindromic");
    bool flagged = false;
    for (const auto& row : s.reduction.rows)
        flagged = flagged || row.provenance == "geometric input";
    o.require(flagged && !s.reduction.rows.empty(), "reduction report lacks the geometric input flag");
    o.require(s.hard_checks_pass, "a section 5 identity failed");
    if (o.pass)
        o.detail = "<p_L^14,[L]> = 0, H_15(M^15) = 1, theta = " + std::to_string(s.reduction.theta);
    return o;
}

Outcome criterion_flat_bundle()
{
    Outcome o;
    const JonesData data = build_jones_data();
    const FlatBundleReport f = flat_bundle_report(data.mu, 1);
    o.require(f.w1 == std::vector<int>{1, 0, 0}, "w1 is not (1,0,0)");
    o.require(f.w1_squared == 1, "w1^2 is not 1");
    o.require((f.w2_plus ^ f.w2_minus) == f.w1_squared, "Pin lifts do not differ by w1^2");
    bool compared = false;
    for (const auto& row : f.rows)
        compared = compared || (row.source == "paper" && row.reference == 1);
    o.require(compared, "no row against the published w2");
    if (o.pass)
        o.detail = "w1 = (1,0,0), w1^2 = 1, w2(Pin+) = " + std::to_string(f.w2_plus) +
                   ", w2(Pin-) = " + std::to_string(f.w2_minus);
    return o;
}

Outcome criterion_octonion()
{
    Outcome o;
    const NeutralityReport n = verify_neutrality(11, 100, 20260101);
    o.require(n.tolerance <= 1e-12, "tolerance looser than 1e-12");
    o.require(n.max_norm_deviation <= 1e-12, "unit norm");
    o.require(n.max_axis_inner_product <= 1e-12, "orthogonality to the axis");
    o.require(n.max_orthogonality_defect <= 1e-12, "orthogonal operator");
    o.require(n.max_start_defect <= 1e-12, "F(0) = Id");
    o.require(n.max_end_defect <= 1e-12, "F(1) = I");
    o.require(n.exact_endpoints, "exact endpoints");
    o.require(n.pass, "neutrality report failed");
    const NormReport m = verify_norm_multiplicativity(1000, 20260101);
    o.require(m.samples == 1000 && m.multiplicative == 1000 && m.pass, "norm multiplicativity");
    if (o.pass) {
        char buf[160];
        std::snprintf(buf, sizeof buf, "worst defect %.2e over 100 pairs x 11 points; 1000/1000 exact",
                      std::max({n.max_norm_deviation, n.max_axis_inner_product, n.max_orthogonality_defect,
                                n.max_start_defect, n.max_end_defect}));
        o.detail = buf;
    }
    return o;
}

Outcome criterion_determinism()
{
    Outcome o;
    std::ostringstream a, b, err;
    const int ca = run({"report", "--format", "machine", "--seed", "20260101"}, a, err);
    const int cb = run({"report", "--format", "machine", "--seed", "20260101"}, b, err);
    o.require(ca == cb, "exit codes differ");
    o.require(!a.str().empty() && a.str() == b.str(), "outputs differ");
    if (o.pass)
        o.detail = std::to_string(a.str().size()) + " identical bytes";
    return o;
}

}  // namespace

int main()
{
    const std::vector<std::pair<const char*, std::function<Outcome()>>> criteria = {
        {"Adem relation", criterion_adem},
        {"Adem faithfulness", criterion_faithfulness},
        {"Arf oracles", criterion_arf},
        {"Jones homology", criterion_jones_homology},
        {"Intersection form", criterion_intersection_form},
        {"Section 5 suite", criterion_section5},
        {"Flat-bundle classes", criterion_flat_bundle},
        {"Octonion neutrality", criterion_octonion},
        {"Determinism", criterion_determinism},
    };
    int failures = 0;
    for (std::size_t k = 0; k < criteria.size(); ++k) {
        Outcome o;
        try {
            o = criteria[k].second();
        } catch (const std::exception& e) {
            o.pass = false;
            o.detail = std::string("exception: ") + e.what();
        }
        failures += !o.pass;
        std::printf("%s criterion %zu (%s): %s\n", o.pass ? "PASS" : "FAIL", k + 1, criteria[k].first,
                    o.detail.c_str());
        std::fflush(stdout);
    }
    std::printf("%d of %zu criteria failed\n", failures, criteria.size());
    return failures == 0 ? 0 : 1;
}
