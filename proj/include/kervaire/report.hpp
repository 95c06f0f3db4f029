#ifndef KERVAIRE_REPORT_HPP_
#define KERVAIRE_REPORT_HPP_

#include "kervaire/document.hpp"
#include "kervaire/jones.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace kervaire {

inline constexpr int kReportFormatVersion = 1;
inline constexpr std::uint64_t kDefaultSeed = 20260101;

/// A hard check fails the run; a paper comparison only records agreement.
struct Check {
    std::string name;
    std::string category;  // "hard" or "paper-comparison"
    std::string computed;
    std::string expected;  // "n/a" when there is nothing to compare with
    std::string status;    // "pass", "fail", "mismatch"
    std::string provenance;
};

struct ReportValue {
    std::string name;
    std::string value;
};

struct ReportSection {
    std::string name;
    std::vector<Check> checks;
    std::vector<ReportValue> values;
    std::vector<std::string> notes;
};

struct VerificationReport {
    std::string command;
    std::optional<std::uint64_t> seed;
    std::vector<ReportSection> sections;
    std::vector<std::pair<std::string, double>> timings_ms;  // empty unless requested

    std::size_t hard_checks() const;
    std::size_t hard_failures() const;
    std::size_t paper_comparisons() const;
    std::size_t mismatches() const;
};

std::string render_machine(const VerificationReport& report);
std::string render_human(const VerificationReport& report);

ReportSection adem_section(int j, int start_index);
ReportSection adem_sweep_section();
ReportSection arf_oracle_section(std::uint64_t seed);
ReportSection jones_betti_section(const JonesData& data);
ReportSection jones_gram_section(const JonesData& data);
ReportSection jones_catalog_section(const JonesData& data);
ReportSection jones_arf_section(const JonesData& data, const QTable& table);
ReportSection flat_bundle_section(const SignedPermRepresentation& rho, std::optional<int> reference_w2);
ReportSection section5_section(int lemma1_input = 1);
ReportSection octonion_section(std::size_t grid, std::size_t samples, std::uint64_t seed);
ReportSection gysin_section(const GysinDocument& doc);
ReportSection wang_section(const WangDocument& doc);
ReportSection arf_section(const QuadraticSpace& space);

/// Every section; independent sections run concurrently and are merged in a fixed order.
VerificationReport full_report(std::uint64_t seed, bool timings);

}  // namespace kervaire

#endif  // KERVAIRE_REPORT_HPP_
