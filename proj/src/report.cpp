#include "kervaire/report.hpp"

#include "kervaire/cayley.hpp"
#include "kervaire/steenrod.hpp"

#include "json.hpp"

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <future>
#include <map>
#include <random>
#include <sstream>

namespace kervaire {

namespace {

const char* const kQuoteKer12 =
    "This gives the dimension of the $\\Z/2$--vector space: $\\dim H_{15}(\\tilde M^{30} \\setminus p^{-1}(U(pt))) = 12$.";
const char* const kQuoteImage4 =
    "It is not hard to prove that  the image of this homomorphism is $4$-dimensional.";
const char* const kQuoteB15 = "Therefore, we get $\\dim(H_{15}(\\tilde M^{30}))=8$.";
const char* const kQuoteNondegenerate =
    "The form $q$ is quadratic and not degenerated, because this form is associated with the intersection of "
    "$2k+1$-cycles on $\\tilde M^{4k+2}$.";
const char* const kQuoteArf = "It is proved that the framed manifold  $(\\tilde M^{30}, \\Xi)$ is of the $Arf$-invariant 1.";
const char* const kQuoteAdem = "Sq^{2^j}Sq^{2^j} + \\sum_{i=1}^{j-1} Sq^{2^{j+1}-2^i} Sq^{2^i} = 0, \\quad j=4.";
const char* const kQuoteW1 = "$w_1(\\hat \\mu) \\in H^1(P^2)$ is dual to  $a$";
const char* const kQuoteW2 = "$w_2(\\hat \\mu) \\in H^2(P^2)$ represents the fundamental class on $P^2$.";
const char* const kQuotePL = "$\\langle p_N^{14} \\kappa_N;[N] \\rangle = \\langle p_L^{14};[L] \\rangle = 0$.";
const char* const kQuoteTheta =
    "It is proved that a small regular alteration of the mapping  $\\hat \\varphi \\circ p$  self-intersects by an odd "
    "number of points.";
const char* const kQuoteNeutral = "The manifold $V_{k,2}$ is neutral for $k=7$.";

std::string str(long v) { return std::to_string(v); }

std::string str(const std::vector<std::size_t>& v)
{
    std::string out = "(";
    for (std::size_t i = 0; i < v.size(); ++i)
        out += (i ? "," : "") + std::to_string(v[i]);
    return out + ")";
}

std::string sci(double x)
{
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.3e", x);
    return buf;
}

Check hard(std::string name, std::string computed, std::string expected, bool ok, std::string provenance)
{
    return {std::move(name), "hard", std::move(computed), std::move(expected), ok ? "pass" : "fail",
            std::move(provenance)};
}

Check paper(std::string name, std::string computed, std::string expected, std::string provenance)
{
    const bool ok = computed == expected;
    return {std::move(name), "paper-comparison", std::move(computed), std::move(expected), ok ? "pass" : "mismatch",
            std::move(provenance)};
}

// Comparison rows: hard identities become hard checks, rows with a published reference become
// comparisons, the rest become values.
void add_rows(ReportSection& s, const std::vector<ComparisonRow>& rows,
              const std::map<std::string, std::string>& quotes, const std::string& oracle)
{
    for (const auto& r : rows) {
        if (r.hard) {
            const std::string expected = r.reference ? str(*r.reference) : "n/a";
            const auto q = quotes.find(r.quantity);
            s.checks.push_back(hard(r.quantity, str(r.computed), expected, r.status == "pass",
                                    q != quotes.end() ? q->second : oracle));
        } else if (r.reference) {
            const auto q = quotes.find(r.quantity);
            s.checks.push_back(paper(r.quantity, str(r.computed), str(*r.reference),
                                     q != quotes.end() ? q->second : std::string("paper")));
        } else {
            s.values.push_back({r.quantity, str(r.computed)});
        }
    }
}

}  // namespace

std::size_t VerificationReport::hard_checks() const
{
    std::size_t n = 0;
    for (const auto& s : sections)
        for (const auto& c : s.checks)
            n += c.category == "hard";
    return n;
}

std::size_t VerificationReport::hard_failures() const
{
    std::size_t n = 0;
    for (const auto& s : sections)
        for (const auto& c : s.checks)
            n += c.category == "hard" && c.status != "pass";
    return n;
}

std::size_t VerificationReport::paper_comparisons() const
{
    std::size_t n = 0;
    for (const auto& s : sections)
        for (const auto& c : s.checks)
            n += c.category == "paper-comparison";
    return n;
}

std::size_t VerificationReport::mismatches() const
{
    std::size_t n = 0;
    for (const auto& s : sections)
        for (const auto& c : s.checks)
            n += c.status == "mismatch";
    return n;
}

std::string render_machine(const VerificationReport& report)
{
    using json = nlohmann::ordered_json;
    json root;
    root["format"] = "kervaire-check-report";
    root["version"] = kReportFormatVersion;
    root["command"] = report.command;
    root["seed"] = report.seed ? json(*report.seed) : json(nullptr);
    json sections = json::array();
    for (const auto& s : report.sections) {
        json js;
        js["name"] = s.name;
        json checks = json::array();
        for (const auto& c : s.checks)
            checks.push_back({{"name", c.name},
                              {"category", c.category},
                              {"computed", c.computed},
                              {"expected", c.expected},
                              {"status", c.status},
                              {"provenance", c.provenance}});
        js["checks"] = checks;
        json values = json::array();
        for (const auto& v : s.values)
            values.push_back({{"name", v.name}, {"value", v.value}});
        js["values"] = values;
        js["notes"] = s.notes;
        sections.push_back(js);
    }
    root["sections"] = sections;
    root["summary"] = {{"hard_checks", report.hard_checks()},
                       {"hard_failures", report.hard_failures()},
                       {"paper_comparisons", report.paper_comparisons()},
                       {"mismatches", report.mismatches()}};
    if (!report.timings_ms.empty()) {
        json t = json::object();
        for (const auto& [name, ms] : report.timings_ms)
            t[name] = ms;
        root["timings_ms"] = t;
    }
    return root.dump(2) + "\n";
}

std::string render_human(const VerificationReport& report)
{
    std::ostringstream out;
    out << "kervaire-check " << report.command;
    if (report.seed)
        out << " (seed " << *report.seed << ")";
    out << "\n";
    for (const auto& s : report.sections) {
        out << "\n== " << s.name << " ==\n";
        for (const auto& c : s.checks) {
            out << "  " << (c.category == "hard" ? "hard " : "paper") << "  " << c.status;
            out << std::string(c.status.size() < 8 ? 8 - c.status.size() : 1, ' ');
            out << c.name << ": " << c.computed;
            if (c.expected != "n/a")
                out << " (expected " << c.expected << ")";
            out << "\n";
            if (c.category != "hard" || c.status != "pass")
                out << "                   source: " << c.provenance << "\n";
        }
        for (const auto& v : s.values)
            out << "  value  " << v.name << " = " << v.value << "\n";
        for (const auto& n : s.notes)
            out << "  note   " << n << "\n";
    }
    out << "\nhard checks: " << report.hard_checks() - report.hard_failures() << "/" << report.hard_checks()
        << " pass; paper comparisons: " << report.paper_comparisons() - report.mismatches() << "/"
        << report.paper_comparisons() << " agree\n";
    for (const auto& [name, ms] : report.timings_ms)
        out << "time   " << name << ": " << ms << " ms\n";
    return out.str();
}

ReportSection adem_section(int j, int start_index)
{
    ReportSection s{"adem j=" + std::to_string(j) + " start=" + std::to_string(start_index), {}, {}, {}};
    const SteenrodSum lhs = kervaire_relation_lhs(j, start_index);
    const SteenrodSum rem = check_kervaire_relation(j, start_index);
    s.values.push_back({"left-hand side", lhs.to_string()});
    s.values.push_back({"admissible remainder", rem.to_string()});
    s.notes.push_back(rem.is_zero() ? "relation holds (empty remainder)"
                                    : "relation fails: remainder " + rem.to_string());
    const std::string name = "Sq^{2^j}Sq^{2^j} + sum_{i=" + std::to_string(start_index) + "}^{j-1} ... = 0 for j=" +
                             std::to_string(j);
    if (start_index == 0)
        s.checks.push_back(hard(name, rem.to_string(), "0", rem.is_zero(), "Adem rewriting to admissible form"));
    else
        s.checks.push_back(paper(name, rem.to_string(), "0", kQuoteAdem));
    return s;
}

ReportSection adem_sweep_section()
{
    ReportSection s{"adem", {}, {}, {}};
    for (int j = 1; j <= 6; ++j) {
        const SteenrodSum rem = check_kervaire_relation(j, 0);
        s.checks.push_back(hard("relation with i from 0, j=" + std::to_string(j), rem.to_string(), "0", rem.is_zero(),
                                "Adem rewriting to admissible form"));
    }
    const SteenrodSum rem = check_kervaire_relation(4, 1);
    s.checks.push_back(paper("relation with i from 1, j=4", rem.to_string(), "0", kQuoteAdem));
    s.notes.push_back("with the sum starting at i=1 the term Sq^31 Sq^1 is missing; starting at i=0 it holds");
    return s;
}

ReportSection arf_oracle_section(std::uint64_t seed)
{
    ReportSection s{"arf-oracle", {}, {}, {}};
    std::mt19937_64 rng(seed);
    std::bernoulli_distribution bit(0.5);
    std::uniform_int_distribution<std::size_t> genus(1, 6);
    std::size_t agree = 0;
    const std::size_t trials = 64;
    for (std::size_t t = 0; t < trials; ++t) {
        const std::size_t n = 2 * genus(rng);
        // Random nondegenerate alternating form: standard form in a random basis.
        BitMatrix change;
        do {
            change = BitMatrix(n, n);
            for (std::size_t r = 0; r < n; ++r)
                for (std::size_t c = 0; c < n; ++c)
                    change.set(r, c, bit(rng));
        } while (rank(change) != n);
        BitMatrix standard(n, n);
        for (std::size_t k = 0; k < n; k += 2) {
            standard.set(k, k + 1, true);
            standard.set(k + 1, k, true);
        }
        const BitMatrix gram = change.transpose() * standard * change;
        BitVector q(n);
        for (std::size_t k = 0; k < n; ++k)
            q.set(k, bit(rng));
        const QuadraticSpace space(gram, q);
        agree += arf(space) == arf_count_oracle(space);
    }
    s.checks.push_back(hard("Arf by symplectic basis equals majority count", str(static_cast<long>(agree)),
                            str(static_cast<long>(trials)), agree == trials, "counting oracle on random spaces"));
    return s;
}

ReportSection jones_betti_section(const JonesData& data)
{
    ReportSection s{"jones-betti", {}, {}, {}};
    s.notes.push_back("model: the fiber (S^7)^4 has homology in degrees 7k only and the base is 2-dimensional, so "
                      "H_{p+7k} of the total space is H_p(P^2; C_{7k}) with C_{7k} spanned by k-fold products; "
                      "H_15 = H_1(P^2; Omega) with Omega spanned by the six products X x Y");
    const H15Report r = h15_consistency_report(data);
    s.values.push_back({"Betti numbers b_0..b_30", str(r.betti)});
    const std::map<std::string, std::string> quotes = {
        {"dim ker d1 on C_1(P^2; Omega)", kQuoteKer12},
        {"rank d2 on C_2(P^2; Omega)", kQuoteImage4},
        {"b_15 = dim H_1(P^2; Omega)", kQuoteB15},
    };
    add_rows(s, r.rows, quotes, "Euler characteristic and Poincare duality identities");
    s.checks.push_back(hard("b_0 and b_30", str(static_cast<long>(r.betti.front())) + ", " + str(static_cast<long>(r.betti.back())), "1, 1", r.betti.front() == 1 && r.betti.back() == 1,
                            "connected closed manifold"));
    s.checks.push_back(hard("b_1 = 3", str(static_cast<long>(r.betti[1])), "3", r.betti[1] == 3,
                            "H_1 of the base with trivial coefficients"));
    return s;
}

ReportSection jones_gram_section(const JonesData& data)
{
    ReportSection s{"jones-gram", {}, {}, {}};
    std::optional<IntersectionGram> g;
    std::string error;
    try {
        g = intersection_gram(data);
    } catch (const std::exception& e) {
        error = e.what();
    }
    const std::size_t b15 = local_homology(data.omega).h1.dim();
    if (!g) {
        s.checks.push_back(hard("intersection form nondegenerate", error, "rank " + std::to_string(b15), false,
                                kQuoteNondegenerate));
        return s;
    }
    std::string rows = g->gram.to_string();
    std::replace(rows.begin(), rows.end(), '\n', ' ');
    s.values.push_back({"Gram matrix on H^1 basis", rows});
    s.checks.push_back(hard("Gram symmetric with zero diagonal", "yes", "yes",
                            g->gram.is_symmetric() && g->gram.has_zero_diagonal(), "cup product is alternating"));
    s.checks.push_back(hard("rank of the intersection form", str(static_cast<long>(rank(g->gram))),
                            str(static_cast<long>(b15)), rank(g->gram) == b15, kQuoteNondegenerate));
    s.checks.push_back(hard("hyperbolic pairs in symplectic basis", str(static_cast<long>(g->symplectic.size())),
                            str(static_cast<long>(b15 / 2)), 2 * g->symplectic.size() == b15,
                            "symplectic basis extraction"));
    return s;
}

ReportSection jones_catalog_section(const JonesData& data)
{
    ReportSection s{"jones-cycles", {}, {}, {}};
    const CycleCatalog cat = paper_cycles(data);
    for (const auto& e : cat.entries) {
        std::string v = e.cycle.loop + " over " + e.cycle.fiber + ": ";
        v += e.valid ? (e.is_boundary ? "boundary" : "cycle, nonzero class") : e.error;
        s.values.push_back({e.cycle.name, v});
    }
    s.values.push_back({"rank of the span of the valid classes", str(static_cast<long>(cat.span_rank))});
    std::string rows = cat.table.to_string();
    std::replace(rows.begin(), rows.end(), '\n', ' ');
    s.values.push_back({"intersection table of the valid classes", rows});
    bool cycles_ok = true;
    const BitMatrix d1 = fox_complex(data.omega).d1;
    for (const auto& e : cat.entries)
        cycles_ok = cycles_ok && (!e.valid || (d1 * e.chain).is_zero());
    s.checks.push_back(hard("catalog chains lie in ker d1", cycles_ok ? "yes" : "no", "yes", cycles_ok,
                            "boundary map of the local coefficient complex"));
    s.checks.push_back(hard("catalog intersection table alternating", "yes", "yes",
                            cat.table.is_symmetric() && cat.table.has_zero_diagonal(), "cup product is alternating"));
    for (const auto& c : cat.claims) {
        const std::string computed = c.computed ? str(*c.computed) : "undefined";
        const std::string quote = c.expected == 0
                                      ? "the coefficient of intersection of the cycles "
                                        "$[A \\times D \\times b_1]'$, $[C \\times D \\times b_2]'$ is trivial"
                                      : "determines a Hamiltonian pair";
        s.checks.push_back(paper(c.first + " . " + c.second, computed, str(c.expected), quote));
    }
    return s;
}

ReportSection jones_arf_section(const JonesData& data, const QTable& table)
{
    ReportSection s{"jones-arf", {}, {}, {}};
    const ArfJonesReport r = arf_jones(data, table);
    s.values.push_back({"dim H_15", str(static_cast<long>(r.total_dim))});
    s.values.push_back({"pairs in the table", str(static_cast<long>(r.claimed_pairs))});
    s.values.push_back({"pairs with both q values", str(static_cast<long>(r.covered_pairs_claimed))});
    s.values.push_back({"partly valued pairs cannot change the value", r.completion_independent ? "yes" : "no"});
    s.values.push_back({"claimed pairs hyperbolic in the computed form",
                        str(static_cast<long>(r.hyperbolic_pairs_computed))});
    s.values.push_back({"of those, with both q values", str(static_cast<long>(r.covered_pairs_computed))});
    s.values.push_back({"restricted Arf in the computed form",
                        r.arf_computed ? str(*r.arf_computed) : "undefined (covered subspace is 0)"});
    s.checks.push_back(paper("restricted Arf on the listed pairs",
                             r.arf_as_claimed ? str(*r.arf_as_claimed) : "undefined", "1", kQuoteArf));
    for (const auto& n : r.notes)
        s.notes.push_back(n);
    for (const auto& c : r.refinement_conflicts)
        s.notes.push_back("refinement conflict outside the covered subspace: " + c);
    return s;
}

ReportSection flat_bundle_section(const SignedPermRepresentation& rho, std::optional<int> reference_w2)
{
    ReportSection s{"sw-flat", {}, {}, {}};
    const FlatBundleReport f = flat_bundle_report(rho, reference_w2);
    std::string w1;
    for (std::size_t g = 0; g < f.w1.size(); ++g)
        w1 += (g ? "," : "") + std::to_string(f.w1[g]);
    w1 = "(" + w1 + ")";
    const bool default_surface = rho.presentation().generators() == Presentation::default_surface().generators();
    if (reference_w2 && default_surface)
        s.checks.push_back(paper("w1 on (a, b1, b2)", w1, "(1,0,0)", kQuoteW1));
    else
        s.values.push_back({"w1 on generators", w1});
    s.values.push_back({"<w1^2, [base]>", str(f.w1_squared)});
    s.values.push_back({"w2 from the Pin- lift", str(f.w2_minus)});
    if (reference_w2)
        s.checks.push_back(paper("w2 from the Pin+ lift", str(f.w2_plus), str(*reference_w2), kQuoteW2));
    else
        s.values.push_back({"w2 from the Pin+ lift", str(f.w2_plus)});
    s.checks.push_back(hard("Pin+ and Pin- lifts differ by w1^2", str(f.w2_plus ^ f.w2_minus), str(f.w1_squared),
                            (f.w2_plus ^ f.w2_minus) == f.w1_squared, "Clifford algebra relator evaluation"));
    return s;
}

ReportSection section5_section(int lemma1_input)
{
    ReportSection s{"section5", {}, {}, {}};
    const Section5Report r = section5_report(lemma1_input);
    s.values.push_back({"Betti numbers of M^15", str(r.m15)});
    s.values.push_back({"Betti numbers of K^15", str(r.k15)});
    s.values.push_back({"Betti numbers of L^14", str(r.l14)});
    s.values.push_back({"Betti numbers of N^15", str(r.n15)});
    s.checks.push_back(hard("dim H_15(M^15)", str(static_cast<long>(r.m15.at(15))), "1", r.m15.at(15) == 1,
                            "Wang sequence rank computation"));
    s.checks.push_back(hard("Wang output for M^15 palindromic", is_palindromic(r.m15) ? "yes" : "no", "yes",
                            is_palindromic(r.m15), "Poincare duality"));
    s.checks.push_back(hard("Wang output for K^15 palindromic", is_palindromic(r.k15) ? "yes" : "no", "yes",
                            is_palindromic(r.k15), "Poincare duality"));
    add_rows(s, r.rows, {{"<p_L^14, [L]>", kQuotePL}, {"theta", kQuoteTheta}},
             "Gysin and Wang sequences, Poincare duality");
    for (const auto& row : r.reduction.rows)
        s.values.push_back({"reduction: " + row.quantity + " [" + row.provenance + "]", str(row.value)});
    s.notes.push_back("<p_N^15, [N]> = " + std::to_string(r.reduction.lemma1_input) +
                      " is a geometric input, not computed here");
    return s;
}

ReportSection octonion_section(std::size_t grid, std::size_t samples, std::uint64_t seed)
{
    ReportSection s{"octonion", {}, {}, {}};
    const NeutralityReport n = verify_neutrality(grid, samples, seed);
    const std::string tol = sci(n.tolerance);
    auto within = [&](const char* name, double x) {
        s.checks.push_back(hard(name, sci(x), "<= " + tol, x <= n.tolerance, kQuoteNeutral));
    };
    s.values.push_back({"grid points", str(static_cast<long>(n.grid_size))});
    s.values.push_back({"random orthonormal pairs", str(static_cast<long>(n.samples))});
    within("max | |F e2| - 1 |", n.max_norm_deviation);
    within("max |<F e2, e1>|", n.max_axis_inner_product);
    within("max |F^T F - I|", n.max_orthogonality_defect);
    within("max |F e1 - e1|", n.max_axis_defect);
    within("max |F(0) - I|", n.max_start_defect);
    within("max |F(1) e2 + e2|", n.max_end_defect);
    s.checks.push_back(hard("exact endpoints on a rational pair", n.exact_endpoints ? "yes" : "no", "yes",
                            n.exact_endpoints, kQuoteNeutral));
    const NormReport norm = verify_norm_multiplicativity(1000, seed);
    s.checks.push_back(hard("|xy|^2 = |x|^2 |y|^2 on rational samples", str(static_cast<long>(norm.multiplicative)),
                            str(static_cast<long>(norm.samples)), norm.multiplicative == norm.samples,
                            "exact rational arithmetic"));
    return s;
}

ReportSection gysin_section(const GysinDocument& doc)
{
    ReportSection s{"gysin", {}, {}, {}};
    s.values.push_back({"class", doc.pi_text});
    if (doc.mapping_torus_swap) {
        const auto b = mapping_torus_cover_betti(doc.ring, doc.pi, *doc.mapping_torus_swap);
        s.values.push_back({"Betti numbers of the cover of the mapping torus", str(b)});
        s.checks.push_back(hard("Betti numbers palindromic", is_palindromic(b) ? "yes" : "no", "yes",
                                is_palindromic(b), "Poincare duality"));
    } else {
        const auto b = double_cover_betti(doc.ring, doc.pi);
        s.values.push_back({"Betti numbers of the double cover", str(b)});
        s.checks.push_back(hard("Betti numbers palindromic", is_palindromic(b) ? "yes" : "no", "yes",
                                is_palindromic(b), "Poincare duality"));
    }
    for (const auto& p : doc.powers) {
        const QuotientPower q = pullback_power_evaluate(doc.ring, doc.pi, p.element, p.exponent);
        s.values.push_back({"(" + p.text + ")^" + std::to_string(p.exponent) + " mod class",
                            q.is_zero ? "0" : doc.ring.format(q.normal_form)});
    }
    return s;
}

ReportSection wang_section(const WangDocument& doc)
{
    ReportSection s{"wang", {}, {}, {}};
    const auto b = wang_betti(doc.monodromy);
    s.values.push_back({"monodromy", doc.model});
    s.values.push_back({"fiber Betti numbers", str(doc.monodromy.fiber_betti())});
    s.values.push_back({"Betti numbers of the mapping torus", str(b)});
    long euler = 0;
    for (std::size_t n = 0; n < b.size(); ++n)
        euler += (n % 2 == 0 ? 1 : -1) * static_cast<long>(b[n]);
    s.checks.push_back(hard("Euler characteristic of the mapping torus", str(euler), "0", euler == 0,
                            "chi(T) = chi(S^1) chi(F)"));
    if (is_palindromic(doc.monodromy.fiber_betti()))
        s.checks.push_back(hard("Betti numbers palindromic", is_palindromic(b) ? "yes" : "no", "yes",
                                is_palindromic(b), "Poincare duality"));
    return s;
}

ReportSection arf_section(const QuadraticSpace& space)
{
    ReportSection s{"arf", {}, {}, {}};
    s.values.push_back({"dimension", str(static_cast<long>(space.dim()))});
    std::optional<bool> value;
    try {
        value = arf(space);
    } catch (const DegenerateFormError& e) {
        s.checks.push_back(hard("form nondegenerate", "radical contains " + e.radical_vector().to_string(), "yes",
                                false, "symplectic basis extraction"));
        return s;
    } catch (const std::invalid_argument& e) {
        s.checks.push_back(hard("form nondegenerate", e.what(), "yes", false, "symplectic basis extraction"));
        return s;
    }
    s.values.push_back({"Arf invariant", str(*value ? 1 : 0)});
    if (space.dim() <= 24) {
        s.values.push_back({"zeros of q", std::to_string(count_zeros(space))});
        const bool oracle = arf_count_oracle(space);
        s.checks.push_back(hard("symplectic basis value equals majority count", str(oracle ? 1 : 0),
                                str(*value ? 1 : 0), oracle == *value, "counting oracle"));
    }
    return s;
}

VerificationReport full_report(std::uint64_t seed, bool timings)
{
    VerificationReport report;
    report.command = "report";
    report.seed = seed;
    const JonesData data = build_jones_data();
    const QTable table = default_q_table();

    std::vector<std::pair<std::string, std::function<ReportSection()>>> jobs = {
        {"adem", [] { return adem_sweep_section(); }},
        {"arf-oracle", [seed] { return arf_oracle_section(seed); }},
        {"jones-betti", [&data] { return jones_betti_section(data); }},
        {"jones-gram", [&data] { return jones_gram_section(data); }},
        {"jones-cycles", [&data] { return jones_catalog_section(data); }},
        {"jones-arf", [&data, &table] { return jones_arf_section(data, table); }},
        {"sw-flat", [&data] { return flat_bundle_section(data.mu, 1); }},
        {"section5", [] { return section5_section(1); }},
        {"octonion", [seed] { return octonion_section(11, 100, seed); }},
    };
    using Clock = std::chrono::steady_clock;
    std::vector<std::future<std::pair<ReportSection, double>>> running;
    for (auto& [name, job] : jobs)
        running.push_back(std::async(std::launch::async, [job = job] {
            const auto start = Clock::now();
            ReportSection s = job();
            return std::make_pair(std::move(s),
                                  std::chrono::duration<double, std::milli>(Clock::now() - start).count());
        }));
    for (std::size_t k = 0; k < jobs.size(); ++k) {
        auto [section, ms] = running[k].get();
        report.sections.push_back(std::move(section));
        if (timings)
            report.timings_ms.emplace_back(jobs[k].first, ms);
    }
    return report;
}

}  // namespace kervaire
