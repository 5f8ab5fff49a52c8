#pragma once

#include "seshadri/class_cache.hpp"
#include "seshadri/divisor.hpp"
#include "seshadri/exceptional.hpp"

#include <optional>
#include <string>
#include <variant>
#include <vector>

namespace seshadri {

inline constexpr int default_max_degree = 8;

/// Whether √k is rational. Irrational ⟹ r² < k < (r+1)² for r = ⌊√k⌋.
struct IrrationalityCertificate {
    Integer radicand;
    Integer root;  ///< ⌊√k⌋
    bool irrational = false;

    bool verify() const;
};

IrrationalityCertificate is_perfect_square(const Integer& k);

// ---------------------------------------------------------------------------
// Nefness and ampleness under the hypothesis that every negative curve is a
// (-1)-curve.

enum class NefKind { certified_nef, nef_up_to_bound, not_nef };
std::string to_string(NefKind k);

struct NefVerdict {
    NefKind kind = NefKind::not_nef;
    std::optional<StandardDecomposition<QuadScalar>> decomposition;
    std::optional<IntClass> witness;
    std::string reason;
};

/**
 * Standard F is certified: the ladder elements meet every (-1)-class
 * nonnegatively, so any nonnegative combination does too. Otherwise F is
 * checked against the enumerated classes only.
 */
NefVerdict conditional_nef(const QuadClass& F, const ExceptionalClassSet& classes);

enum class AmpleKind { certified_ample, ample_up_to_bound, not_ample };
std::string to_string(AmpleKind k);

struct AmpleVerdict {
    AmpleKind kind = AmpleKind::not_ample;
    std::optional<IntClass> witness;
    std::string evidence;
    bool conditional = true;
};

/// `classes` must be the enumeration on L's points.
AmpleVerdict ample_conditional(const IntClass& L, const ExceptionalClassSet& classes);

// ---------------------------------------------------------------------------
// Seshadri constants.

enum class SeshadriStatus { certified_maximal, submaximal_witness, bound_only };
std::string to_string(SeshadriStatus s);

struct DegreeBound {
    int max_degree = 0;
};

/// The tested divisor is nonnegative on every (-1)-class of a provably complete list.
struct CompleteListCheck {
    std::size_t points = 0;
    int max_degree = 0;
};

struct SeshadriResult {
    QuadScalar value;
    SeshadriStatus status = SeshadriStatus::bound_only;
    /// Decomposition of `tested` when certified by standard form, the complete
    /// class list it was checked against (at most eight points on Y), the
    /// achieving class for witness results, or the searched bound.
    std::variant<StandardDecomposition<QuadScalar>, IntClass, DegreeBound, CompleteListCheck> witness;
    bool conditional = true;

    QuadScalar cap;                      ///< √(L²), or 1/√s for the multi-point constant
    QuadClass tested;                    ///< the divisor whose standardness was tested
    std::optional<Rational> best_ratio;  ///< smallest ratio over enumerated classes
    int max_degree = 0;
    std::optional<AmpleVerdict> ampleness;
};

/**
 * ε(X, L, x) at a very general point x of the s-point blow-up X, with
 * L given on s points. Works on the (s+1)-point lattice with F_1 = E.
 * When π*L - √(L²)·E is not standard but the class list on s + 1 ≤ 8
 * points is complete, nonnegativity on that list certifies the cap.
 * Throws PreconditionError for dmax < 1 or when L is shown not ample.
 */
SeshadriResult seshadri_single(const IntClass& L, ClassCatalog& catalog, int dmax = default_max_degree);

/// ε(P², O(1), s very general points).
SeshadriResult seshadri_multi(const ExceptionalClassSet& classes);
SeshadriResult seshadri_multi(std::size_t s, ClassCatalog& catalog, int dmax = default_max_degree);

// ---------------------------------------------------------------------------
// The number theory and case tables.

struct DegreeChoice {
    std::size_t points = 0;
    Integer degree;
    IrrationalityCertificate certificate;
    bool in_window = false;  ///< 4d - 3 ≤ s ≤ 6d - 10
    /// Smallest d in that window (s ≥ 17) and whether (d-3)²+1 ≤ d²-s ≤ (d-2)²-1 holds for it.
    std::optional<Integer> window_degree;
    bool window_identity = false;
};

/// Smallest d with 4d - 3 ≤ s < d² and d² - s not a square. Needs s ≥ 13, s ∉ {15, 16}.
DegreeChoice choose_degree(std::size_t s);

struct DegreeCertificate {
    std::size_t points = 0;
    Integer degree;
    QuadScalar epsilon;  ///< √(d² - s)
    QuadClass divisor;   ///< dH - √(d²-s)·F_1 - F_2 - ... - F_{s+1}
    bool standard = false;
    bool degree_gap = false;     ///< d > √(d²-s) + 2
    bool cap_at_least_one = false;
    StandardDecomposition<QuadScalar> decomposition;
    NefVerdict nef;
    IrrationalityCertificate irrationality;

    bool verified() const;
};

/// Requires 4d - 3 ≤ s < d².
DegreeCertificate degree_certificate(std::size_t s, const Integer& d, ClassCatalog& catalog,
                                     int dmax = default_max_degree);

/// Case-table line bundle: (3n+1)H - nΣE for s = 9, (4n+1)H - nΣE for s = 16, and 10H - 3ΣE,
/// 7H - 2ΣE, 11H - 3ΣE, 13H - 3ΣE for s = 10, 11, 12, 15.
IntClass case_line_bundle(std::size_t s, std::optional<long> n);

struct CaseRow {
    std::size_t points = 0;
    std::optional<long> n;
    IntClass line_bundle;
    Integer self_intersection;
    AmpleVerdict ampleness;
    SeshadriResult epsilon;
    IrrationalityCertificate irrationality;

    bool verified() const;
};

CaseRow case_row(std::size_t s, std::optional<long> n, ClassCatalog& catalog, int dmax = default_max_degree);

struct NagataReport {
    std::size_t points = 0;
    int max_degree = 0;
    std::size_t classes_checked = 0;
    Integer orbit_classes_checked;
    bool anticanonical_all_one = true;  ///< C·(3H - ΣE) = 1 for all C
    bool slack_all_at_least_one = true; ///< C·(√s·H - ΣE) ≥ 1 for all C
    Integer min_anticanonical;
    QuadScalar min_slack;
    std::optional<IntClass> min_slack_class;
    QuadScalar conditional_multi_point;  ///< 1/√s

    bool verified() const { return anticanonical_all_one && slack_all_at_least_one; }
};

/// Needs s ≥ 9.
NagataReport nagata_check(std::size_t s, ClassCatalog& catalog, int dmax = default_max_degree);

struct SweepRow {
    long n = 0;
    std::optional<Integer> degree;
    std::optional<Integer> self_intersection;
    std::optional<QuadScalar> epsilon;
};

/**
 * For each n, the first d (scanning `scan_width` degrees up from the first
 * with L² > 0) such that L = dH - nΣE passes ample_conditional and has a
 * certified, irrational ε. Needs s ≥ 9.
 */
std::vector<SweepRow> sweep_Ldn(std::size_t s, long n_from, long n_to, ClassCatalog& catalog,
                                int dmax = default_max_degree, long scan_width = 64);

// ---------------------------------------------------------------------------
// Rational-versus-irrational boundary.

struct BoundaryRow {
    std::size_t points = 0;
    IntClass line_bundle;
    SeshadriResult epsilon;
    int max_degree_used = 0;
    bool rational = false;
};

struct IrrationalExample {
    std::size_t points = 0;
    std::string source;  ///< "case-table" or "degree-choice"
    IntClass line_bundle;
    SeshadriResult epsilon;
    bool certified_irrational = false;
};

struct BoundaryReport {
    std::vector<BoundaryRow> few_points;
    std::vector<IrrationalExample> examples;

    bool verified() const;
};

struct BoundaryOptions {
    std::size_t few_points_max = 8;
    long grid_degree = 12;
    std::size_t examples_max = 30;
    int max_degree = default_max_degree;
    /// s ≤ 8 results still bound-only with an irrational cap are retried with a larger bound.
    int escalation_limit = 20;
};

BoundaryReport rationality_boundary(ClassCatalog& catalog, const BoundaryOptions& options = {});

struct SummaryTables {
    std::vector<CaseRow> case_table;
    std::vector<std::pair<DegreeChoice, DegreeCertificate>> degree_table;
    BoundaryReport boundary;

    bool verified() const;
};

SummaryTables summary_tables(ClassCatalog& catalog, int dmax = default_max_degree);

}  // namespace seshadri
