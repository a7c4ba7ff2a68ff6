#pragma once

// The six-dimensional catalog, the type bound, exclusion replays and the
// eight-dimensional counterexample.

#include "nilgc/cohomology.hpp"
#include "nilgc/gcs.hpp"
#include "nilgc/transforms.hpp"

#include <json.hpp>

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace nilgc {

/// Column types in table order: complex, type 2, type 1, symplectic.
inline constexpr std::array<int, 4> kColumnTypes{3, 2, 1, 0};

struct CatalogEntry {
    int row = 0;  // 1-based position in the table
    std::string tuple_text;
    int b1 = 0;
    int b2 = 0;
    std::array<std::optional<std::string>, 4> witness;  // indexed like kColumnTypes

    const std::optional<std::string>& witness_for(int type) const;
    NilAlgebra algebra() const;
};

/// The embedded 34 rows.
const std::vector<CatalogEntry>& catalog();

nlohmann::json catalog_to_json(const std::vector<CatalogEntry>& entries);
std::vector<CatalogEntry> catalog_from_json(const nlohmann::json& j);

/// Largest type not ruled out by the filtration jump argument.
int max_type_bound(const NilAlgebra& g);

/// Malcev staircase and d^2 = 0 on generators.
bool malcev_valid(const NilAlgebra& g);

struct CellReport {
    int type = 0;
    std::optional<std::string> text;
    bool passed = true;  // vacuously true for dashes
    std::optional<GcsReport> report;
    std::vector<std::string> failures;
};

struct RowReport {
    int row = 0;
    std::string tuple_text;
    bool algebra_valid = false;
    std::optional<BettiVector> betti;
    bool betti_match = false;
    int bound = -1;
    std::array<CellReport, 4> cells;
    std::optional<bool> symplectic_decision;  // when requested
    bool symplectic_agrees = true;
    std::vector<std::string> failures;

    bool passed() const { return failures.empty(); }
    nlohmann::json to_json() const;
};

struct VerifyOptions {
    bool run_symplectic = true;
    SymplecticOptions symplectic;
};

RowReport verify_entry(const CatalogEntry& e, const VerifyOptions& options = {});

struct TableCounts {
    int complex = 0;
    int symplectic = 0;
    int both = 0;
    int complex_only = 0;
    int symplectic_only = 0;
    int neither = 0;
    friend bool operator==(const TableCounts&, const TableCounts&) = default;
};

TableCounts count_witnesses(const std::vector<CatalogEntry>& entries);

struct TableReport {
    std::vector<RowReport> rows;
    TableCounts counts;
    bool counts_match = false;
    bool every_row_has_witness = false;
    std::vector<std::string> failures;

    int rows_passed() const;
    bool passed() const { return failures.empty(); }
    nlohmann::json to_json() const;
    std::string to_text() const;
};

inline constexpr TableCounts kExpectedCounts{18, 26, 15, 3, 11, 5};

TableReport verify_table(const std::vector<CatalogEntry>& entries, const VerifyOptions& options = {});

// ---------------------------------------------------------------------------
// Exclusion replays.

enum class CaseId { LEM41, LEM42, LEM43, THM45, THM38 };

std::string to_string(CaseId id);
std::optional<CaseId> case_from_string(std::string_view s);

struct ExclusionCase {
    CaseId id = CaseId::THM38;
    std::vector<int> rows;  // catalog rows covered
    int excluded_type = 2;
    std::string ansatz_family;
    int samples = 20;
    std::uint64_t seed = 0;
};

/// The five cases, rows computed from their hypotheses on the catalog.
std::vector<ExclusionCase> exclusion_cases(int samples = 20, std::uint64_t seed = 0);

struct SampleRecord {
    int row = 0;
    int index = 0;
    std::vector<std::string> thetas;
    bool omega_closed = false;      // d Omega = 0, else no closed rho exists
    std::size_t solution_dim = 0;   // complex dimension of {C : dC ^ Omega = 0}
    bool degenerate = true;         // nondegeneracy polynomial identically zero (or no solution)
    bool forced_observed = false;
    std::string observation;
    std::optional<bool> holomorphic_ideal;  // LEM43: C in I(theta1, theta2) itself
};

enum class ReplayOutcome { EXCLUDED_AT_SAMPLES, COUNTEREXAMPLE };

struct ReplayResult {
    ExclusionCase c;
    ReplayOutcome outcome = ReplayOutcome::EXCLUDED_AT_SAMPLES;
    bool by_bound = false;
    std::vector<SampleRecord> records;

    bool forced_all() const;
    std::string label() const { return by_bound ? "BOUND" : "EVIDENCE"; }
    nlohmann::json to_json() const;
    std::string to_text() const;
};

ReplayResult replay_exclusion(const ExclusionCase& c);

/// One sample of a replay with the thetas given; `index` selects the family variant.
SampleRecord replay_sample(CaseId id, const NilAlgebra& g, const std::vector<Form>& thetas, int index = 0);

struct DashCoverage {
    struct Dash {
        int row;
        int type;
        std::vector<CaseId> cases;
    };
    std::vector<Dash> dashes;  // all type-1 and type-2 dashes
    bool exact() const;        // each dash covered by exactly one case
};

DashCoverage dash_coverage(const std::vector<CatalogEntry>& entries, const std::vector<ExclusionCase>& cases);

// ---------------------------------------------------------------------------
// Eight-dimensional counterexample.

inline constexpr const char* kEightDimAlgebra = "(0,0,12,13,14,15,16,36-45-27)";

/// Restriction of the structure to the subalgebra dual to the listed generators,
/// dropping every term that involves another generator.
NilAlgebra leaf_algebra(const NilAlgebra& g, const std::vector<int>& keep);
/// e'_i = e_{perm[i-1]}.
NilAlgebra permute_basis(const NilAlgebra& g, const std::vector<int>& perm);

struct EightDimReport {
    bool valid = false;
    int nil_index = 0;
    int bound = 0;
    int b2 = 0;
    bool h2_matches = false;
    int quadruple_products = 0;
    int quadruple_exact = 0;
    bool symplectic_no = false;
    bool theta_forced_e12 = false;
    std::string leaf_tuple;
    bool leaf_isomorphic = false;
    bool leaf_symplectic_no = false;
    bool reference_leaf_symplectic_no = false;
    std::vector<std::string> failures;

    bool passed() const { return failures.empty(); }
    nlohmann::json to_json() const;
    std::string to_text() const;
};

EightDimReport verify_8d();

// ---------------------------------------------------------------------------
// Iwasawa connection between the two complex components.

struct IwasawaStep {
    std::string label;
    Form form;
    Form expected;
    std::optional<GaussianRational> factor;  // form = factor * expected
    bool gcs = false;
};

struct IwasawaPath {
    std::string name;
    Form start;
    Polyvector beta;
    bool beta_poisson = false;  // [beta, beta] = 0
    Form b_field;
    std::vector<IwasawaStep> steps;
};

struct IwasawaReport {
    IwasawaPath a;
    IwasawaPath b;
    bool endpoints_equal = false;  // projectively
    std::vector<std::string> failures;

    bool passed() const { return failures.empty(); }
    nlohmann::json to_json() const;
    std::string to_text() const;
};

IwasawaReport iwasawa_demo();

}  // namespace nilgc
