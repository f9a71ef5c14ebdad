#pragma once

#include "hkg/catalog.hpp"
#include "hkg/numeric.hpp"
#include "hkg/polydiff.hpp"
#include "hkg/ramification.hpp"

#include <nlohmann/json_fwd.hpp>

#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace hkg {

struct AnalyzeOptions {
    std::vector<Int> poly_powers = {1, 2};
    bool verify = false;
    bool warn_only = false;
    std::optional<Int> maximal_q;
};

struct TelescopicSummary {
    std::vector<Int> ordered_generators;
    std::vector<Int> gcd_tower;
    bool is_telescopic = false;
};

struct SemigroupSummary {
    std::vector<Int> generators;
    std::vector<Int> minimal_generators;
    Int frobenius;
    Int conductor;
    Int gap_count;
    std::vector<Int> gaps;
    bool symmetric = false;
    TelescopicSummary telescopic;
};

struct TowerSummary {
    std::int64_t level = 0;
    std::vector<Int> generators;
    Int group_order_above;
    bool is_rational = false;
    Int frobenius;
    Int conductor;
};

struct JumpsSummary {
    std::vector<Int> lower;
    std::vector<Rat> upper;
    std::vector<Int> orders;
};

struct PolyBlock {
    Int m;
    Int degree_bound;
    Int dimension;
    Int expected_dimension;
    std::vector<Int> pole_numbers;
    CanonicalDegreeReport canonical_degree;
    IndecomposabilityReport indecomposability;
};

/// Everything the analysis derives from one datum; serializable, and every
/// numeric field reproducible by re-running the operation on the input echo.
struct InvariantReport {
    RamificationData input;
    ValidationReport validation;
    std::optional<SemigroupSummary> semigroup;
    std::vector<TowerSummary> tower;
    std::optional<Int> genus;
    std::optional<Int> different_delta;
    std::optional<Int> conductor_brauer;
    std::vector<FiltrationSegment> filtration;
    std::optional<JumpsSummary> jumps;
    std::optional<HasseArfReport> hasse_arf;
    std::optional<StructuralCaseReport> structural;
    std::optional<PossibleJumpReport> possible_jumps;
    std::optional<Int> p_rank;
    std::optional<Int> deformation_dimension;
    std::vector<PolyBlock> polydifferentials;
    std::optional<BigActionReport> big_action;
    std::optional<MaximalCompatReport> maximal_compat;
    bool oracle_verified = false;
};

/// Full analysis; on validation failure the report carries only the echo and
/// the failure list. With verify set, every semigroup-derived number is
/// re-derived through the oracle and a mismatch throws VerificationMismatch.
InvariantReport run_analyze(const RamificationData& rd, const AnalyzeOptions& options = {});

/// Family constructor dispatch: artin-schreier (p, m), as-tower (p, m),
/// hermitian (q), gk-shape (q, m1, mr).
RamificationData catalog_data(const std::string& family, const std::map<std::string, Int>& params);

/// Herbrand conversion entry point shared by the CLI.
JumpSequence run_jumps(const std::string& direction, const Int& p,
                       const std::vector<Int>& exponents, const std::vector<Rat>& values);

/// Parses {"p": ..., "exponents": [...], "jumps": [...]}; integers may be
/// JSON numbers or decimal strings. Rejects unknown keys and non-prime p.
RamificationData parse_input_document(const std::string& text);

nlohmann::json report_to_json(const InvariantReport& report);
InvariantReport report_from_json(const nlohmann::json& j);

void render_table(const InvariantReport& report, std::ostream& os);

}  // namespace hkg
