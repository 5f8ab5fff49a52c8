#pragma once

#include "seshadri/divisor.hpp"

#include <cstddef>
#include <string>
#include <vector>

namespace seshadri {

enum class Provenance { orbit_bfs, diophantine_oracle };

std::string to_string(Provenance p);
Provenance provenance_from_string(const std::string& s);

inline constexpr int exceptional_format_version = 1;

/**
 * All (-1)-classes of degree ≤ max_degree on a t-point blow-up, one
 * representative per permutation orbit. Representatives carry their
 * multiplicities sorted descending (so F_i is stored as (0; 0,...,0,-1))
 * and are kept in lexicographic (degree, multiplicities) order.
 */
class ExceptionalClassSet {
public:
    ExceptionalClassSet() = default;
    ExceptionalClassSet(std::size_t points, int max_degree, Provenance provenance, std::vector<IntClass> classes);

    std::size_t points() const { return points_; }
    int max_degree() const { return max_degree_; }
    Provenance provenance() const { return provenance_; }
    int version() const { return exceptional_format_version; }
    const std::vector<IntClass>& classes() const { return classes_; }

    /// Number of representatives.
    std::size_t size() const { return classes_.size(); }
    /// Number of classes counted with all distinct relabellings of the points.
    Integer full_count() const;
    bool contains(const IntClass& D) const;
    /// Members of degree ≤ max_degree.
    ExceptionalClassSet restricted(int max_degree) const;

    auto begin() const { return classes_.begin(); }
    auto end() const { return classes_.end(); }

    /// Same points, bound and members; provenance is ignored.
    friend bool operator==(const ExceptionalClassSet& a, const ExceptionalClassSet& b) {
        return a.points_ == b.points_ && a.max_degree_ == b.max_degree_ && a.classes_ == b.classes_;
    }

private:
    std::size_t points_ = 0;
    int max_degree_ = 0;
    Provenance provenance_ = Provenance::orbit_bfs;
    std::vector<IntClass> classes_;
};

/// Number of distinct relabellings of a multiplicity vector.
Integer permutation_count(const IntClass& D);

struct EnumerationLimits {
    std::size_t max_classes = 5'000'000;
    std::size_t max_reduction_iterations = default_reduction_cap;
    unsigned threads = 1;  ///< 0 selects the hardware concurrency
};

/// C² = -1 and K·C = -1.
bool exceptional_numerics(const IntClass& D);

/**
 * Breadth-first closure of the coordinate classes under Cremona moves and
 * permutations, pruned to 0 ≤ degree ≤ dmax.
 *
 * Complete: for an orbit class of degree ≥ 1 the move at the three largest
 * multiplicities strictly lowers the degree, so every orbit class of degree
 * ≤ dmax has a degree-increasing path from some F_i inside the bound.
 * Fewer than three points are handled by padding to three.
 */
ExceptionalClassSet enumerate_exceptionals(SurfaceContext ctx, int dmax, const EnumerationLimits& limits = {});

/**
 * Independent route: solve Σm = 3d - 1, Σm² = d² + 1 over nonincreasing
 * nonnegative vectors for 1 ≤ d ≤ dmax, keep the solutions that reduce to
 * a coordinate class, and add the coordinate class itself.
 */
ExceptionalClassSet diophantine_oracle(SurfaceContext ctx, int dmax, const EnumerationLimits& limits = {});

enum class OrbitVerdict { member, non_member, inconclusive };

/// Whether D reduces to a coordinate class. Requires exceptional_numerics(D).
OrbitVerdict orbit_membership(const IntClass& D, std::size_t max_iterations = default_reduction_cap);

/// Degree beyond which no new (-1)-classes appear, for t ≤ 8; -1 when the orbit is infinite.
int complete_degree(std::size_t points);
/// True when `dmax` provably captures every (-1)-class on t points.
bool enumeration_complete(std::size_t points, int dmax);

/**
 * min over relabellings σ of F·σ(C), for C a sorted representative.
 * By the rearrangement inequality the minimum pairs the largest entries
 * of F with the largest entries of C.
 */
template <class Scalar>
struct OrbitPairing {
    Scalar value;
    IntClass realization;  ///< the relabelled C attaining the minimum
};

template <class Scalar>
OrbitPairing<Scalar> min_orbit_pairing(const DivisorClass<Scalar>& F, const IntClass& representative) {
    F.require_same_context(cast<Scalar>(representative));
    const auto order = descending_order(F.multiplicities());
    std::vector<Integer> m(F.points());
    for (std::size_t j = 0; j < order.size(); ++j) m[order[j]] = representative.multiplicity(j);
    IntClass real(representative.degree(), std::move(m));
    Scalar v = intersect(F, cast<Scalar>(real));
    return {std::move(v), std::move(real)};
}

}  // namespace seshadri
