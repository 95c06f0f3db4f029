#include "kervaire/cli.hpp"

#include "kervaire/document.hpp"
#include "kervaire/report.hpp"

#include "CLI11.hpp"

#include <algorithm>
#include <iostream>
#include <optional>

namespace kervaire {

namespace {

struct Options {
    std::string format = "human";
    std::uint64_t seed = kDefaultSeed;
    bool timings = false;
    int j = 4;
    int start_index = 0;
    int lemma1 = 1;
    std::string file;
    std::string q_table;
    std::string jones;
    std::size_t grid = 11;
    std::size_t samples = 100;
};

JonesData jones_data(const Options& o)
{
    if (o.jones.empty())
        return build_jones_data();
    return parse_jones_document(read_document(o.jones), o.jones);
}

VerificationReport single(std::string command, ReportSection section, std::optional<std::uint64_t> seed = {})
{
    VerificationReport r;
    r.command = std::move(command);
    r.seed = seed;
    r.sections.push_back(std::move(section));
    return r;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Finite verification suite: Steenrod relations, Arf invariants, local coefficient homology of "
                 "the Jones manifold, Gysin and Wang sequences, octonion neutrality."};
    app.name("kervaire-check");
    app.require_subcommand(1);
    app.fallthrough();
    Options o;
    app.add_option("--format", o.format, "Output format")->check(CLI::IsMember({"human", "machine"}));

    auto* report = app.add_subcommand("report", "Run every check");
    report->add_option("--seed", o.seed, "Seed for the sampled checks");
    report->add_flag("--timings", o.timings, "Include wall-clock timings (output is then not reproducible)");

    auto* adem = app.add_subcommand("adem", "Adem rewriting of the Sq^{2^j} Sq^{2^j} relation");
    adem->add_option("--j", o.j, "j in 1..6")->required()->check(CLI::Range(1, 6));
    adem->add_option("--start-index", o.start_index, "First index of the sum")->check(CLI::IsMember({0, 1}));

    auto* betti = app.add_subcommand("jones-betti", "Homology of the Jones manifold and H_15 comparison");
    auto* gram = app.add_subcommand("jones-gram", "Intersection form on H_15 and the named cycles");
    auto* jarf = app.add_subcommand("jones-arf", "Restricted Arf invariant from a q table");
    jarf->add_option("--q-table", o.q_table, "q-table document")->check(CLI::ExistingFile);
    for (auto* sub : {betti, gram, jarf})
        sub->add_option("--jones", o.jones, "Jones data document")->check(CLI::ExistingFile);

    auto* s5 = app.add_subcommand("section5", "Wang, Gysin and characteristic-number chain");
    s5->add_option("--lemma1", o.lemma1, "Value of <p_N^15, [N]>")->check(CLI::IsMember({0, 1}));

    auto* gysin = app.add_subcommand("gysin", "Double cover Betti numbers from a gysin document");
    gysin->add_option("file", o.file, "Document")->required()->check(CLI::ExistingFile);
    auto* wang = app.add_subcommand("wang", "Mapping torus Betti numbers from a wang document");
    wang->add_option("file", o.file, "Document")->required()->check(CLI::ExistingFile);
    auto* sw = app.add_subcommand("sw-flat", "w1 and w2 of a flat bundle");
    sw->add_option("file", o.file, "Representation document (default: the Jones monodromy)")
        ->check(CLI::ExistingFile);
    auto* oct = app.add_subcommand("octonion", "Neutrality homotopy and norm checks");
    oct->add_option("--grid", o.grid, "Grid points on [0, 1]")->check(CLI::Range(2, 100000));
    oct->add_option("--samples", o.samples, "Random orthonormal pairs");
    oct->add_option("--seed", o.seed, "Seed");
    auto* arfc = app.add_subcommand("arf", "Arf invariant of a quadratic form document");
    arfc->add_option("file", o.file, "Document")->required()->check(CLI::ExistingFile);

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? 0 : 2;
    }

    VerificationReport result;
    try {
        if (report->parsed()) {
            result = full_report(o.seed, o.timings);
        } else if (adem->parsed()) {
            result = single("adem", adem_section(o.j, o.start_index));
        } else if (betti->parsed()) {
            result = single("jones-betti", jones_betti_section(jones_data(o)));
        } else if (gram->parsed()) {
            const JonesData d = jones_data(o);
            result = single("jones-gram", jones_gram_section(d));
            result.sections.push_back(jones_catalog_section(d));
        } else if (jarf->parsed()) {
            const QTable t = o.q_table.empty() ? default_q_table()
                                               : parse_q_table_document(read_document(o.q_table), o.q_table);
            result = single("jones-arf", jones_arf_section(jones_data(o), t));
        } else if (s5->parsed()) {
            result = single("section5", section5_section(o.lemma1));
        } else if (gysin->parsed()) {
            result = single("gysin", gysin_section(parse_gysin_document(read_document(o.file), o.file)));
        } else if (wang->parsed()) {
            result = single("wang", wang_section(parse_wang_document(read_document(o.file), o.file)));
        } else if (sw->parsed()) {
            if (o.file.empty()) {
                result = single("sw-flat", flat_bundle_section(build_jones_data().mu, 1));
            } else {
                const RepresentationDocument doc = parse_representation_document(read_document(o.file), o.file);
                result = single("sw-flat", flat_bundle_section(doc.rep, doc.reference_w2));
            }
        } else if (oct->parsed()) {
            result = single("octonion", octonion_section(o.grid, o.samples, o.seed), o.seed);
        } else if (arfc->parsed()) {
            result = single("arf", arf_section(parse_arf_document(read_document(o.file), o.file)));
        }
    } catch (const SchemaError& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }

    out << (o.format == "machine" ? render_machine(result) : render_human(result));
    return result.hard_failures() == 0 ? 0 : 1;
}

int run(int argc, char** argv)
{
    std::vector<std::string> args(argv + 1, argv + argc);
    return run(args, std::cout, std::cerr);
}

}  // namespace kervaire
