#ifndef KERVAIRE_JONES_HPP_
#define KERVAIRE_JONES_HPP_

#include "kervaire/grouphom.hpp"
#include "kervaire/mfldcoh.hpp"
#include "kervaire/quadform.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace kervaire {

/// The six 14-cycles X x Y of (S^7)^4, indexed AB, AC, AD, BC, BD, CD.
struct PairModule {
    static const std::vector<std::string>& names();
    static std::size_t index(char x, char y);
    /// Sum of pair names, e.g. "AC" or "AB + AD".
    static BitVector parse(const std::string& text);
    static std::string format(const BitVector& v);
    /// Induced action of a permutation of {A, B, C, D}.
    static BitMatrix action(const SignedPermutation& g);
    /// <{i,j},{k,l}> = 1 iff the pairs are disjoint.
    static BitMatrix pairing();
};

/// Permutation action on k-element subsets of {A, B, C, D}, subsets in lexicographic order.
BitMatrix subset_action(const SignedPermutation& g, std::size_t k);

struct JonesData {
    Presentation presentation;
    SignedPermRepresentation mu;  // a -> (1 3), b1 -> (1 2)(3 4), b2 -> (2 3)(4 1) on A, B, C, D
    Representation omega;         // induced action on pairs
    BitMatrix pairing;
};

/// Monodromy facts: for each generator name, pairs its image must fix.
using FixedPairs = std::vector<std::pair<std::string, std::vector<std::string>>>;

/// Validates mu (four letters), the fixed pairs and the group order; throws std::invalid_argument
/// naming the first failure.
JonesData make_jones_data(SignedPermRepresentation mu, const FixedPairs& fixed,
                          std::optional<std::size_t> group_order);

/// Default data: the surface presentation, mu, and the fixed pairs AC, BD (a), AB, CD (b1), BC, AD (b2).
JonesData build_jones_data();

/// Order of the permutation group generated by the images.
std::size_t generated_group_order(const SignedPermRepresentation& rho);

/// H_n of the total space for n = 0..30: sum over fiber degrees 7k of H_{n-7k}(pi; subsets of size k).
std::vector<std::size_t> full_betti_vector(const JonesData& data);

struct ComparisonRow {
    std::string quantity;
    long computed = 0;
    std::optional<long> reference;
    std::string source;  // "paper", "identity"
    std::string status;  // "pass", "mismatch", "info"
    bool hard = false;   // failures of hard rows are errors
};

struct H15Report {
    std::vector<std::size_t> betti;
    std::vector<ComparisonRow> rows;
    long signed_sum = 0;        // sum (-1)^n b_n
    long base_graded_sum = 0;   // sum_k sum_p (-1)^p h_p(pi; C_{7k})
    bool hard_checks_pass = false;
};

H15Report h15_consistency_report(const JonesData& data);

struct IntersectionGram {
    std::vector<Cocycle> basis;
    BitMatrix gram;
    std::vector<HyperbolicPair> symplectic;
};

/// Cup-product form on H^1(pi; Omega); throws DegenerateFormError when degenerate.
IntersectionGram intersection_gram(const JonesData& data);

struct NamedCycle {
    std::string name;
    std::string loop;   // word in a, b1, b2
    std::string fiber;  // pair sum, e.g. "AC"
};

struct CatalogEntry {
    NamedCycle cycle;
    bool valid = false;
    std::string error;
    BitVector chain;
    bool is_boundary = false;
};

struct ClaimedIntersection {
    std::string first;
    std::string second;
    int expected = 0;
    std::optional<int> computed;  // nullopt when a cycle is not defined
    std::string status;           // "pass", "mismatch", "undefined"
};

struct CycleCatalog {
    std::vector<CatalogEntry> entries;
    BitMatrix table;  // intersections among valid entries, in entry order
    std::vector<std::size_t> valid_indices;
    std::size_t span_rank = 0;  // dimension of the span of the valid classes in H_1
    std::vector<ClaimedIntersection> claims;
};

std::vector<NamedCycle> default_catalog();
CycleCatalog paper_cycles(const JonesData& data);

struct QTable {
    std::vector<NamedCycle> cycles;
    std::vector<std::pair<std::string, std::string>> pairs;
    std::map<std::string, int> values;
};

QTable default_q_table();

struct ArfJonesReport {
    std::size_t total_dim = 0;                // b_15
    std::size_t claimed_pairs = 0;
    std::size_t covered_pairs_claimed = 0;    // pairs with both q values given
    std::optional<int> arf_as_claimed;        // pairs taken as hyperbolic, as listed
    bool completion_independent = false;      // partly covered pairs cannot change the value
    std::size_t hyperbolic_pairs_computed = 0;  // claimed pairs that are hyperbolic and mutually orthogonal
    std::size_t covered_pairs_computed = 0;
    std::optional<int> arf_computed;          // on the covered computed-hyperbolic pairs
    std::vector<std::string> refinement_conflicts;  // outside the covered subspace
    std::vector<std::string> notes;
};

/// Restricted Arf invariant from a q table. Throws std::invalid_argument when a valued class in
/// the covered subspace contradicts the refinement rule; contradictions elsewhere are listed in
/// refinement_conflicts.
ArfJonesReport arf_jones(const JonesData& data, const QTable& table);

struct FlatBundleReport {
    std::vector<std::string> generators;
    std::vector<int> w1;  // one value per generator
    int w1_squared = 0;
    int w2_plus = 0;
    int w2_minus = 0;
    std::optional<int> reference_w2;
    std::vector<ComparisonRow> rows;
    bool hard_checks_pass = false;
};

/// reference_w2 is compared with the Pin+ lift when given.
FlatBundleReport flat_bundle_report(const SignedPermRepresentation& rho, std::optional<int> reference_w2 = 1);

struct Section5Report {
    std::vector<std::size_t> m15;     // Wang, S^7 x S^7 with swap
    std::vector<std::size_t> k15;     // Wang, RP^7 x RP^7 with swap
    std::vector<std::size_t> l14;     // Gysin, pi = t1 + t2
    std::vector<std::size_t> n15;     // Gysin on the mapping torus, additive model
    std::vector<std::size_t> n15_cross_check;  // Wang over L with trivial monodromy
    bool p_l14_zero = false;
    bool p_l7_nonzero = false;
    ReductionReport reduction;
    std::vector<ComparisonRow> rows;
    bool hard_checks_pass = false;
};

Section5Report section5_report(int lemma1_input = 1);

}  // namespace kervaire

#endif  // KERVAIRE_JONES_HPP_
