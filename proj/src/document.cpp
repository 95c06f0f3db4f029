#include "kervaire/document.hpp"

#include <yaml-cpp/yaml.h>

#include <algorithm>
#include <fstream>
#include <set>
#include <sstream>

namespace kervaire {

SchemaError::SchemaError(std::string source, int line, std::string field, const std::string& message)
    : std::runtime_error(source + (line > 0 ? ":" + std::to_string(line) : std::string()) +
                         (field.empty() ? std::string() : ": field '" + field + "'") + ": " + message),
      source_(std::move(source)), line_(line), field_(std::move(field))
{
}

namespace {

class Reader {
public:
    explicit Reader(std::string source) : source_(std::move(source)) {}

    YAML::Node load(const std::string& text) const
    {
        try {
            YAML::Node root = YAML::Load(text);
            if (!root.IsMap())
                fail(root, "", "document must be a mapping");
            return root;
        } catch (const YAML::ParserException& e) {
            throw SchemaError(source_, e.mark.line + 1, "", "malformed YAML: " + e.msg);
        }
    }

    [[noreturn]] void fail(const YAML::Node& node, const std::string& field, const std::string& message) const
    {
        const int line = node.IsDefined() && node.Mark().line >= 0 ? node.Mark().line + 1 : 0;
        throw SchemaError(source_, line, field, message);
    }

    void header(const YAML::Node& root, const std::string& kind) const
    {
        const YAML::Node k = require(root, "kind", "kind");
        if (text(k, "kind") != kind)
            fail(k, "kind", "expected '" + kind + "', got '" + text(k, "kind") + "'");
        if (root["version"] && integer(root["version"], "version") != 1)
            fail(root["version"], "version", "only version 1 is supported");
    }

    void keys(const YAML::Node& node, const std::string& field, std::initializer_list<const char*> allowed) const
    {
        if (!node.IsMap())
            fail(node, field, "expected a mapping");
        const std::set<std::string> ok(allowed.begin(), allowed.end());
        for (const auto& kv : node) {
            const std::string key = kv.first.as<std::string>();
            if (!ok.count(key))
                fail(kv.first, join(field, key), "unknown key");
        }
    }

    YAML::Node require(const YAML::Node& node, const char* key, const std::string& field) const
    {
        const YAML::Node child = node[key];
        if (!child)
            fail(node, field, "missing required key");
        return child;
    }

    std::string text(const YAML::Node& node, const std::string& field) const
    {
        if (!node.IsScalar())
            fail(node, field, "expected a scalar");
        return node.Scalar();
    }

    long integer(const YAML::Node& node, const std::string& field) const
    {
        const std::string s = text(node, field);
        std::size_t used = 0;
        long v = 0;
        try {
            v = std::stol(s, &used);
        } catch (const std::exception&) {
            used = 0;
        }
        if (used == 0 || used != s.size())
            fail(node, field, "expected an integer, got '" + s + "'");
        return v;
    }

    std::size_t count(const YAML::Node& node, const std::string& field) const
    {
        const long v = integer(node, field);
        if (v < 0)
            fail(node, field, "expected a nonnegative integer");
        return static_cast<std::size_t>(v);
    }

    const YAML::Node& sequence(const YAML::Node& node, const std::string& field) const
    {
        if (!node.IsSequence())
            fail(node, field, "expected a list");
        return node;
    }

    std::vector<std::size_t> counts(const YAML::Node& node, const std::string& field) const
    {
        std::vector<std::size_t> out;
        std::size_t i = 0;
        for (const auto& item : sequence(node, field))
            out.push_back(count(item, field + "[" + std::to_string(i++) + "]"));
        return out;
    }

    BitVector bits(const YAML::Node& node, const std::string& field) const
    {
        try {
            return BitVector::from_string(text(node, field));
        } catch (const std::invalid_argument& e) {
            fail(node, field, e.what());
        }
    }

    BitMatrix matrix(const YAML::Node& node, const std::string& field) const
    {
        std::vector<BitVector> rows;
        std::size_t i = 0;
        for (const auto& r : sequence(node, field)) {
            rows.push_back(bits(r, field + "[" + std::to_string(i) + "]"));
            if (rows.back().size() != rows.front().size())
                fail(r, field + "[" + std::to_string(i) + "]", "rows have different lengths");
            ++i;
        }
        BitMatrix m(rows.size(), rows.empty() ? 0 : rows.front().size());
        for (std::size_t r = 0; r < rows.size(); ++r)
            for (std::size_t c = 0; c < rows[r].size(); ++c)
                m.set(r, c, rows[r].get(c));
        return m;
    }

    static std::string join(const std::string& field, const std::string& key)
    {
        return field.empty() ? key : field + "." + key;
    }

    const std::string& source() const { return source_; }

private:
    std::string source_;
};

Presentation read_presentation(const Reader& in, const YAML::Node& node)
{
    if (!node)
        return Presentation::default_surface();
    in.keys(node, "presentation", {"generators", "relator"});
    std::vector<std::string> gens;
    const YAML::Node g = in.require(node, "generators", "presentation.generators");
    for (const auto& item : in.sequence(g, "presentation.generators"))
        gens.push_back(in.text(item, "presentation.generators"));
    const YAML::Node r = in.require(node, "relator", "presentation.relator");
    try {
        return Presentation(gens, in.text(r, "presentation.relator"));
    } catch (const std::invalid_argument& e) {
        in.fail(r, "presentation.relator", e.what());
    }
}

SignedPermutation read_image(const Reader& in, const YAML::Node& node, std::size_t dim, const std::string& field)
{
    try {
        if (node.IsScalar())
            return SignedPermutation::from_cycles(dim, node.Scalar());
        std::vector<std::vector<int>> m;
        for (const auto& row : in.sequence(node, field)) {
            std::vector<int> r;
            for (const auto& x : in.sequence(row, field))
                r.push_back(static_cast<int>(in.integer(x, field)));
            m.push_back(r);
        }
        if (m.size() != dim)
            in.fail(node, field, "expected a " + std::to_string(dim) + "x" + std::to_string(dim) + " matrix");
        return SignedPermutation::from_matrix(m);
    } catch (const std::invalid_argument& e) {
        in.fail(node, field, e.what());
    }
}

// `dim` and `images` under `node`; relator checked here.
SignedPermRepresentation read_representation(const Reader& in, const YAML::Node& node, const Presentation& p,
                                             const std::string& prefix)
{
    const std::string dim_field = Reader::join(prefix, "dim");
    const std::string images_field = Reader::join(prefix, "images");
    const std::size_t dim = in.count(in.require(node, "dim", dim_field), dim_field);
    if (dim == 0)
        in.fail(node["dim"], dim_field, "dimension must be positive");
    const YAML::Node images = in.require(node, "images", images_field);
    if (!images.IsMap())
        in.fail(images, images_field, "expected a mapping from generator to image");
    std::vector<std::optional<SignedPermutation>> found(p.generator_count());
    for (const auto& kv : images) {
        const std::string name = kv.first.as<std::string>();
        std::size_t g = 0;
        try {
            g = p.index_of(name);
        } catch (const std::invalid_argument&) {
            in.fail(kv.first, images_field + "." + name, "not a generator of the presentation");
        }
        found[g] = read_image(in, kv.second, dim, images_field + "." + name);
    }
    std::vector<SignedPermutation> list;
    for (std::size_t g = 0; g < found.size(); ++g) {
        if (!found[g])
            in.fail(images, images_field + "." + p.generators()[g], "missing image");
        list.push_back(*found[g]);
    }
    try {
        return SignedPermRepresentation(p, list);
    } catch (const std::invalid_argument& e) {
        in.fail(images, images_field, e.what());
    }
}

}  // namespace

std::string read_document(const std::filesystem::path& path)
{
    std::ifstream f(path);
    if (!f)
        throw SchemaError(path.string(), 0, "", "cannot open file");
    std::ostringstream s;
    s << f.rdbuf();
    return s.str();
}

std::string document_kind(const std::string& text, const std::string& source)
{
    const Reader in(source);
    const YAML::Node root = in.load(text);
    return in.text(in.require(root, "kind", "kind"), "kind");
}

JonesData parse_jones_document(const std::string& text, const std::string& source)
{
    const Reader in(source);
    const YAML::Node root = in.load(text);
    in.header(root, "jones");
    in.keys(root, "", {"kind", "version", "presentation", "representation", "fixed_pairs", "group_order"});
    const Presentation p = read_presentation(in, root["presentation"]);
    const YAML::Node rep = in.require(root, "representation", "representation");
    in.keys(rep, "representation", {"dim", "images"});
    SignedPermRepresentation mu = read_representation(in, rep, p, "representation");

    FixedPairs fixed;
    if (const YAML::Node f = root["fixed_pairs"]) {
        if (!f.IsMap())
            in.fail(f, "fixed_pairs", "expected a mapping from generator to pairs");
        for (const auto& kv : f) {
            const std::string name = kv.first.as<std::string>();
            std::vector<std::string> pairs;
            for (const auto& item : in.sequence(kv.second, "fixed_pairs." + name))
                pairs.push_back(in.text(item, "fixed_pairs." + name));
            fixed.emplace_back(name, pairs);
        }
    }
    std::optional<std::size_t> order;
    if (root["group_order"])
        order = in.count(root["group_order"], "group_order");
    try {
        return make_jones_data(std::move(mu), fixed, order);
    } catch (const std::invalid_argument& e) {
        in.fail(root["fixed_pairs"] ? root["fixed_pairs"] : rep, "fixed_pairs", e.what());
    }
}

RepresentationDocument parse_representation_document(const std::string& text, const std::string& source)
{
    const Reader in(source);
    const YAML::Node root = in.load(text);
    in.header(root, "representation");
    in.keys(root, "", {"kind", "version", "presentation", "dim", "images", "reference_w2"});
    const Presentation p = read_presentation(in, root["presentation"]);
    RepresentationDocument doc{read_representation(in, root, p, ""), std::nullopt};
    if (const YAML::Node w = root["reference_w2"]) {
        const long v = in.integer(w, "reference_w2");
        if (v != 0 && v != 1)
            in.fail(w, "reference_w2", "expected 0 or 1");
        doc.reference_w2 = static_cast<int>(v);
    }
    return doc;
}

QTable parse_q_table_document(const std::string& text, const std::string& source)
{
    const Reader in(source);
    const YAML::Node root = in.load(text);
    in.header(root, "q-table");
    in.keys(root, "", {"kind", "version", "cycles", "pairs", "values"});
    const Presentation surface = Presentation::default_surface();
    QTable t;
    std::set<std::string> names;
    std::size_t i = 0;
    for (const auto& c : in.sequence(in.require(root, "cycles", "cycles"), "cycles")) {
        const std::string field = "cycles[" + std::to_string(i++) + "]";
        in.keys(c, field, {"name", "loop", "fiber"});
        NamedCycle nc{in.text(in.require(c, "name", field + ".name"), field + ".name"),
                      in.text(in.require(c, "loop", field + ".loop"), field + ".loop"),
                      in.text(in.require(c, "fiber", field + ".fiber"), field + ".fiber")};
        try {
            (void)surface.parse_word(nc.loop);
        } catch (const std::invalid_argument& e) {
            in.fail(c["loop"], field + ".loop", e.what());
        }
        try {
            (void)PairModule::parse(nc.fiber);
        } catch (const std::invalid_argument& e) {
            in.fail(c["fiber"], field + ".fiber", e.what());
        }
        if (!names.insert(nc.name).second)
            in.fail(c["name"], field + ".name", "duplicate cycle name '" + nc.name + "'");
        t.cycles.push_back(nc);
    }
    i = 0;
    if (const YAML::Node pairs = root["pairs"]) {
        for (const auto& pr : in.sequence(pairs, "pairs")) {
            const std::string field = "pairs[" + std::to_string(i++) + "]";
            if (!pr.IsSequence() || pr.size() != 2)
                in.fail(pr, field, "expected a list of two cycle names");
            const std::string x = in.text(pr[0], field), y = in.text(pr[1], field);
            for (const auto& n : {x, y})
                if (!names.count(n))
                    in.fail(pr, field, "unknown cycle '" + n + "'");
            t.pairs.emplace_back(x, y);
        }
    }
    if (const YAML::Node values = root["values"]) {
        if (!values.IsMap())
            in.fail(values, "values", "expected a mapping from cycle name to 0 or 1");
        for (const auto& kv : values) {
            const std::string name = kv.first.as<std::string>();
            const std::string field = "values." + name;
            if (!names.count(name))
                in.fail(kv.first, field, "unknown cycle");
            const long v = in.integer(kv.second, field);
            if (v != 0 && v != 1)
                in.fail(kv.second, field, "q value must be 0 or 1, got " + std::to_string(v));
            t.values[name] = static_cast<int>(v);
        }
    }
    return t;
}

GysinDocument parse_gysin_document(const std::string& text, const std::string& source)
{
    const Reader in(source);
    const YAML::Node root = in.load(text);
    in.header(root, "gysin");
    in.keys(root, "", {"kind", "version", "truncations", "class", "mapping_torus_swap", "powers"});
    const YAML::Node tr = in.require(root, "truncations", "truncations");
    std::vector<unsigned> maxima;
    for (auto v : in.counts(tr, "truncations"))
        maxima.push_back(static_cast<unsigned>(v));
    std::optional<TruncatedRing> ring;
    try {
        ring.emplace(maxima);
    } catch (const std::invalid_argument& e) {
        in.fail(tr, "truncations", e.what());
    }
    auto element = [&](const YAML::Node& node, const std::string& field) {
        try {
            return ring->parse(in.text(node, field));
        } catch (const std::invalid_argument& e) {
            in.fail(node, field, e.what());
        }
    };
    const YAML::Node cls = in.require(root, "class", "class");
    GysinDocument doc{*ring, element(cls, "class"), cls.Scalar(), std::nullopt, {}};
    if (!doc.pi.is_zero() && (!ring->is_homogeneous(doc.pi) || ring->degree(doc.pi) != 1))
        in.fail(cls, "class", "characteristic class must be homogeneous of degree 1");
    if (const YAML::Node s = root["mapping_torus_swap"]) {
        doc.mapping_torus_swap = in.counts(s, "mapping_torus_swap");
        std::vector<std::size_t> sorted = *doc.mapping_torus_swap;
        std::sort(sorted.begin(), sorted.end());
        for (std::size_t k = 0; k < sorted.size(); ++k)
            if (sorted[k] != k || sorted.size() != maxima.size())
                in.fail(s, "mapping_torus_swap", "expected a permutation of 0.." + std::to_string(maxima.size() - 1));
    }
    std::size_t i = 0;
    if (const YAML::Node powers = root["powers"]) {
        for (const auto& p : in.sequence(powers, "powers")) {
            const std::string field = "powers[" + std::to_string(i++) + "]";
            in.keys(p, field, {"element", "exponent"});
            const YAML::Node e = in.require(p, "element", field + ".element");
            doc.powers.push_back({element(e, field + ".element"),
                                  static_cast<unsigned>(in.count(in.require(p, "exponent", field + ".exponent"),
                                                                 field + ".exponent")),
                                  e.Scalar()});
        }
    }
    return doc;
}

WangDocument parse_wang_document(const std::string& text, const std::string& source)
{
    const Reader in(source);
    const YAML::Node root = in.load(text);
    in.header(root, "wang");
    in.keys(root, "", {"kind", "version", "swap_on_square", "trivial", "matrices"});
    int given = 0;
    for (const char* k : {"swap_on_square", "trivial", "matrices"})
        given += root[k] ? 1 : 0;
    if (given != 1)
        in.fail(root, "", "give exactly one of swap_on_square, trivial, matrices");
    try {
        if (const YAML::Node s = root["swap_on_square"])
            return {MonodromyData::swap_on_square(in.counts(s, "swap_on_square")), "swap_on_square"};
        if (const YAML::Node t = root["trivial"])
            return {MonodromyData::trivial(in.counts(t, "trivial")), "trivial"};
        std::vector<BitMatrix> action;
        std::size_t i = 0;
        for (const auto& m : in.sequence(root["matrices"], "matrices")) {
            action.push_back(in.matrix(m, "matrices[" + std::to_string(i) + "]"));
            ++i;
        }
        return {MonodromyData(action), "matrices"};
    } catch (const std::invalid_argument& e) {
        in.fail(root, "", e.what());
    }
}

QuadraticSpace parse_arf_document(const std::string& text, const std::string& source)
{
    const Reader in(source);
    const YAML::Node root = in.load(text);
    in.header(root, "arf");
    in.keys(root, "", {"kind", "version", "gram", "q"});
    const YAML::Node g = in.require(root, "gram", "gram");
    const BitMatrix gram = in.matrix(g, "gram");
    const YAML::Node q = in.require(root, "q", "q");
    const BitVector values = in.bits(q, "q");
    try {
        return QuadraticSpace(gram, values);
    } catch (const std::invalid_argument& e) {
        in.fail(g, "gram", e.what());
    }
}

}  // namespace kervaire
