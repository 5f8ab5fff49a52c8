#pragma once

#include "seshadri/engine.hpp"

#include <json.hpp>

#include <string>
#include <string_view>
#include <vector>

namespace seshadri {

/**
 * Parses `d;m1,m2,...,mt`. Entries are integers or reduced fractions p/q
 * with q > 0; surrounding whitespace is ignored and "d;" is the degree-d
 * class on zero points. Errors carry the offending position (0 = degree).
 */
RatClass parse_divisor(std::string_view text);

/// Throws PreconditionError when some coefficient is not an integer.
IntClass to_integer_class(const RatClass& D);

nlohmann::json to_json(const QuadScalar& x);
QuadScalar quad_from_json(const nlohmann::json& j);

nlohmann::json to_json(const SeshadriResult& r, std::string_view kind, const IntClass* line_bundle);
nlohmann::json to_json(const AmpleVerdict& v);
nlohmann::json to_json(const NefVerdict& v);
nlohmann::json to_json(const IrrationalityCertificate& c);
nlohmann::json to_json(const DegreeChoice& c);
nlohmann::json to_json(const DegreeCertificate& r);
nlohmann::json to_json(const CaseRow& r);
nlohmann::json to_json(const NagataReport& r);
nlohmann::json to_json(const std::vector<SweepRow>& rows, std::size_t s);
nlohmann::json to_json(const Reduction& r, const IntClass& input);
nlohmann::json to_json(const BoundaryReport& r);
nlohmann::json to_json(const SummaryTables& t);
nlohmann::json enumeration_report(const ExceptionalClassSet& set, const ExceptionalClassSet* oracle);

/**
 * Re-checks a single-point Seshadri report from its embedded data only:
 * for certified-maximal, value² = L² and the embedded ladder coefficients
 * are nonnegative and recombine to π*L - value·E (or, for a complete-list
 * witness, π*L - value·E is rechecked against the regenerated finite list
 * of (-1)-classes); for submaximal-witness,
 * the witness is a (-1)-class through the point whose ratio equals the
 * value and lies below √(L²).
 */
bool verify_seshadri_json(const nlohmann::json& report);

/// Re-checks a degree-choice certificate row (standardness, gap, irrationality).
bool verify_degree_certificate_json(const nlohmann::json& row);

/// Aligned plain-text and CSV rendering of one table.
struct Table {
    std::string title;
    std::vector<std::string> headers;
    std::vector<std::vector<std::string>> rows;

    std::string text() const;
    std::string csv() const;
};

Table case_table(const std::vector<CaseRow>& rows);
Table degree_table(const std::vector<std::pair<DegreeChoice, DegreeCertificate>>& rows);
Table boundary_table(const BoundaryReport& r);
Table sweep_table(const std::vector<SweepRow>& rows, std::size_t s);
Table class_table(const ExceptionalClassSet& set);
Table seshadri_table(const SeshadriResult& r, const IntClass* line_bundle);
Table nagata_table(const NagataReport& r);
Table degree_choice_table(const DegreeChoice& c);
Table reduction_table(const Reduction& r, const IntClass& input);

}  // namespace seshadri
