#ifndef KERVAIRE_DOCUMENT_HPP_
#define KERVAIRE_DOCUMENT_HPP_

#include "kervaire/jones.hpp"
#include "kervaire/mfldcoh.hpp"
#include "kervaire/quadform.hpp"

#include <filesystem>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace kervaire {

// YAML input documents. Every document has a top-level `kind` and an optional `version: 1`;
// unknown keys are rejected. Line numbers are 1-based, 0 when unknown.

class SchemaError : public std::runtime_error {
public:
    SchemaError(std::string source, int line, std::string field, const std::string& message);
    const std::string& source() const { return source_; }
    int line() const { return line_; }
    const std::string& field() const { return field_; }

private:
    std::string source_;
    int line_;
    std::string field_;
};

struct RepresentationDocument {
    SignedPermRepresentation rep;
    std::optional<int> reference_w2;
};

struct GysinDocument {
    struct Power {
        RingElement element;
        unsigned exponent = 0;
        std::string text;
    };
    TruncatedRing ring;
    RingElement pi;
    std::string pi_text;
    std::optional<std::vector<std::size_t>> mapping_torus_swap;
    std::vector<Power> powers;
};

struct WangDocument {
    MonodromyData monodromy;
    std::string model;  // "swap_on_square", "trivial", "matrices"
};

/// Reads a file into text; throws SchemaError when it cannot be opened.
std::string read_document(const std::filesystem::path& path);

/// The `kind` field of a document.
std::string document_kind(const std::string& text, const std::string& source = "<input>");

JonesData parse_jones_document(const std::string& text, const std::string& source = "<input>");
RepresentationDocument parse_representation_document(const std::string& text, const std::string& source = "<input>");
QTable parse_q_table_document(const std::string& text, const std::string& source = "<input>");
GysinDocument parse_gysin_document(const std::string& text, const std::string& source = "<input>");
WangDocument parse_wang_document(const std::string& text, const std::string& source = "<input>");
QuadraticSpace parse_arf_document(const std::string& text, const std::string& source = "<input>");

}  // namespace kervaire

#endif  // KERVAIRE_DOCUMENT_HPP_
