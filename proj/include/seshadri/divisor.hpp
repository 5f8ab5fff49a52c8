#pragma once

#include "seshadri/errors.hpp"
#include "seshadri/quad_scalar.hpp"

#include <algorithm>
#include <cstddef>
#include <numeric>
#include <string>
#include <vector>

namespace seshadri {

/**
 * Blow-up of the plane at t very general points.
 *
 * Basis (H, F_1, ..., F_t) with H² = 1, F_i² = -1 and all mixed products
 * zero. On the single-point blow-up Y of an s-point surface X we put the
 * extra point first: F_1 = E and F_{i+1} = E_i.
 */
struct SurfaceContext {
    std::size_t points = 0;

    /// "H" for index 0, "F<i>" for the i-th exceptional coordinate (1-based).
    std::string basis_label(std::size_t index) const {
        return index == 0 ? std::string("H") : "F" + std::to_string(index);
    }
    friend bool operator==(const SurfaceContext&, const SurfaceContext&) = default;
};

namespace detail {
inline Integer radicand_of(const Integer&) { return 0; }
inline Integer radicand_of(const Rational&) { return 0; }
inline Integer radicand_of(const QuadScalar& x) { return x.radicand(); }
}  // namespace detail

/// The class d·H - Σ m_i·F_i. Multiplicities are indexed from 0.
template <class Scalar>
class DivisorClass {
public:
    using scalar_type = Scalar;

    DivisorClass() = default;
    DivisorClass(Scalar degree, std::vector<Scalar> multiplicities)
        : degree_(std::move(degree)), mult_(std::move(multiplicities)) {
        if constexpr (std::is_same_v<Scalar, QuadScalar>) (void)radicand();
    }

    static DivisorClass hyperplane(std::size_t points) {
        return DivisorClass(Scalar(1), std::vector<Scalar>(points, Scalar(0)));
    }
    /// F_{index+1} as a class: degree 0, multiplicity -1 at `index`.
    static DivisorClass exceptional(std::size_t points, std::size_t index) {
        if (index >= points) throw PreconditionError("exceptional coordinate out of range");
        std::vector<Scalar> m(points, Scalar(0));
        m[index] = Scalar(-1);
        return DivisorClass(Scalar(0), std::move(m));
    }
    /// d·H - m·(F_1 + ... + F_t).
    static DivisorClass uniform(std::size_t points, Scalar degree, Scalar mult) {
        return DivisorClass(std::move(degree), std::vector<Scalar>(points, mult));
    }

    SurfaceContext context() const { return {mult_.size()}; }
    std::size_t points() const { return mult_.size(); }
    const Scalar& degree() const { return degree_; }
    const std::vector<Scalar>& multiplicities() const { return mult_; }
    const Scalar& multiplicity(std::size_t i) const { return mult_.at(i); }

    /// The single radicand shared by all coefficients, 0 when the class is rational.
    Integer radicand() const {
        Integer n = detail::radicand_of(degree_);
        for (const auto& m : mult_) {
            Integer k = detail::radicand_of(m);
            if (k == 0) continue;
            if (n != 0 && n != k) throw RadicandMismatch("divisor class mixes radicands");
            n = k;
        }
        return n;
    }

    DivisorClass& operator+=(const DivisorClass& rhs) {
        require_same_context(rhs);
        degree_ += rhs.degree_;
        for (std::size_t i = 0; i < mult_.size(); ++i) mult_[i] += rhs.mult_[i];
        return *this;
    }
    DivisorClass& operator-=(const DivisorClass& rhs) {
        require_same_context(rhs);
        degree_ -= rhs.degree_;
        for (std::size_t i = 0; i < mult_.size(); ++i) mult_[i] -= rhs.mult_[i];
        return *this;
    }
    DivisorClass& operator*=(const Scalar& c) {
        degree_ *= c;
        for (auto& m : mult_) m *= c;
        return *this;
    }
    friend DivisorClass operator+(DivisorClass a, const DivisorClass& b) { return a += b; }
    friend DivisorClass operator-(DivisorClass a, const DivisorClass& b) { return a -= b; }
    friend DivisorClass operator*(const Scalar& c, DivisorClass a) { return a *= c; }
    friend DivisorClass operator*(DivisorClass a, const Scalar& c) { return a *= c; }

    friend bool operator==(const DivisorClass& x, const DivisorClass& y) {
        return x.degree_ == y.degree_ && x.mult_ == y.mult_;
    }
    /// Lexicographic on (degree, multiplicity vector).
    friend bool operator<(const DivisorClass& x, const DivisorClass& y) {
        if (x.degree_ != y.degree_) return x.degree_ < y.degree_;
        return std::lexicographical_compare(x.mult_.begin(), x.mult_.end(), y.mult_.begin(), y.mult_.end());
    }

    void require_same_context(const DivisorClass& other) const {
        if (points() != other.points())
            throw ContextMismatch("classes on " + std::to_string(points()) + " and " +
                                  std::to_string(other.points()) + " points");
    }

private:
    Scalar degree_{0};
    std::vector<Scalar> mult_;
};

using IntClass = DivisorClass<Integer>;
using RatClass = DivisorClass<Rational>;
using QuadClass = DivisorClass<QuadScalar>;

template <class To, class From>
DivisorClass<To> cast(const DivisorClass<From>& D) {
    std::vector<To> m;
    m.reserve(D.points());
    for (const auto& x : D.multiplicities()) m.emplace_back(To(x));
    return DivisorClass<To>(To(D.degree()), std::move(m));
}

/// A·B = d_A·d_B - Σ m_{A,i}·m_{B,i}.
template <class Scalar>
Scalar intersect(const DivisorClass<Scalar>& A, const DivisorClass<Scalar>& B) {
    A.require_same_context(B);
    Scalar acc = A.degree() * B.degree();
    for (std::size_t i = 0; i < A.points(); ++i) acc -= A.multiplicity(i) * B.multiplicity(i);
    return acc;
}

template <class Scalar>
Scalar self_intersection(const DivisorClass<Scalar>& A) {
    return intersect(A, A);
}

/// K = -3H + F_1 + ... + F_t.
template <class Scalar = Integer>
DivisorClass<Scalar> canonical_class(SurfaceContext ctx) {
    return DivisorClass<Scalar>::uniform(ctx.points, Scalar(-3), Scalar(-1));
}

/// Indices of the multiplicities in descending order; ties keep the lower index first.
template <class Scalar>
std::vector<std::size_t> descending_order(const std::vector<Scalar>& values) {
    std::vector<std::size_t> order(values.size());
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t i, std::size_t j) { return values[j] < values[i]; });
    return order;
}

/// Same class with multiplicities sorted descending.
template <class Scalar>
DivisorClass<Scalar> sorted_descending(const DivisorClass<Scalar>& D) {
    std::vector<Scalar> m = D.multiplicities();
    std::stable_sort(m.begin(), m.end(), [](const Scalar& a, const Scalar& b) { return b < a; });
    return DivisorClass<Scalar>(D.degree(), std::move(m));
}

/**
 * Standard form up to relabelling of the points: after sorting the
 * multiplicities μ_0 ≥ μ_1 ≥ ..., every μ_i ≥ 0 and d ≥ μ_0 + μ_1 + μ_2
 * (absent entries count as zero).
 */
template <class Scalar>
bool is_standard(const DivisorClass<Scalar>& D) {
    const auto sorted = sorted_descending(D);
    const auto& mu = sorted.multiplicities();
    if (!mu.empty() && mu.back() < Scalar(0)) return false;
    Scalar top(0);
    for (std::size_t i = 0; i < std::min<std::size_t>(3, mu.size()); ++i) top += mu[i];
    return !(D.degree() < top);
}

/**
 * Element H_k of the ladder on t points, relative to a point ordering:
 * H_0 = H, H_1 = H - F_(0), H_2 = 2H - F_(0) - F_(1), and
 * H_k = 3H - F_(0) - ... - F_(k-1) for k ≥ 3, where F_(j) = F_{order[j]}.
 */
template <class Scalar = Integer>
DivisorClass<Scalar> ladder_element(std::size_t points, std::size_t k, const std::vector<std::size_t>& order) {
    if (k > points) throw PreconditionError("ladder index exceeds number of points");
    const int deg = k < 3 ? static_cast<int>(k == 0 ? 1 : k) : 3;
    std::vector<Scalar> m(points, Scalar(0));
    for (std::size_t j = 0; j < k; ++j) m[order.at(j)] = Scalar(1);
    return DivisorClass<Scalar>(Scalar(deg), std::move(m));
}

/// Coefficients of D on the ladder H_0, ..., H_t, plus the sorting order used.
template <class Scalar>
struct StandardDecomposition {
    std::vector<Scalar> coefficients;
    std::vector<std::size_t> order;

    bool nonnegative() const {
        return std::all_of(coefficients.begin(), coefficients.end(),
                           [](const Scalar& c) { return !(c < Scalar(0)); });
    }

    DivisorClass<Scalar> recombine() const {
        const std::size_t t = order.size();
        DivisorClass<Scalar> sum(Scalar(0), std::vector<Scalar>(t, Scalar(0)));
        for (std::size_t k = 0; k < coefficients.size(); ++k)
            sum += coefficients[k] * ladder_element<Scalar>(t, k, order);
        return sum;
    }
};

template <class Scalar>
StandardDecomposition<Scalar> standard_decomposition(const DivisorClass<Scalar>& D) {
    const std::size_t t = D.points();
    StandardDecomposition<Scalar> out;
    out.order = descending_order(D.multiplicities());
    std::vector<Scalar> mu;
    mu.reserve(t);
    for (auto i : out.order) mu.push_back(D.multiplicity(i));

    out.coefficients.assign(t + 1, Scalar(0));
    Scalar top(0);
    for (std::size_t i = 0; i < std::min<std::size_t>(3, t); ++i) top += mu[i];
    out.coefficients[0] = D.degree() - top;
    for (std::size_t j = 0; j + 1 < t; ++j) out.coefficients[j + 1] = mu[j] - mu[j + 1];
    if (t > 0) out.coefficients[t] = mu[t - 1];
    return out;
}

/// Quadratic transformation based at the points i, j, k (0-based, distinct).
template <class Scalar>
DivisorClass<Scalar> cremona(const DivisorClass<Scalar>& D, std::size_t i, std::size_t j, std::size_t k) {
    const std::size_t t = D.points();
    if (t < 3) throw PreconditionError("cremona needs at least three points");
    if (i >= t || j >= t || k >= t) throw PreconditionError("cremona index out of range");
    if (i == j || j == k || i == k) throw PreconditionError("cremona indices must be distinct");
    const Scalar& d = D.degree();
    const Scalar& a = D.multiplicity(i);
    const Scalar& b = D.multiplicity(j);
    const Scalar& c = D.multiplicity(k);
    std::vector<Scalar> m = D.multiplicities();
    m[i] = d - b - c;
    m[j] = d - a - c;
    m[k] = d - a - b;
    Scalar deg = Scalar(2) * d - a - b - c;
    return DivisorClass<Scalar>(std::move(deg), std::move(m));
}

struct CremonaMove {
    std::size_t i, j, k;
    friend bool operator==(const CremonaMove&, const CremonaMove&) = default;
};

enum class ReductionStop {
    standard,               ///< terminal class is in standard form
    negative_multiplicity,  ///< d ≥ top three, but some multiplicity is negative
    negative_degree,        ///< a move produced d < 0
    no_moves,               ///< fewer than three points, class not standard
    inconclusive,           ///< iteration cap hit
};

std::string to_string(ReductionStop stop);

struct Reduction {
    IntClass terminal;
    std::vector<CremonaMove> trace;
    ReductionStop stop = ReductionStop::standard;
};

inline constexpr std::size_t default_reduction_cap = 1'000'000;

/**
 * Degree-lowering Cremona reduction. While d < μ_0 + μ_1 + μ_2, apply the
 * transformation at the three largest multiplicities (lowest index first
 * on ties). Each move lowers the degree, so the loop is finite; the cap
 * only guards against pathological inputs.
 */
Reduction reduce_to_standard(const IntClass& D, std::size_t max_iterations = default_reduction_cap);

/// Replays a trace on the original class.
IntClass replay(const IntClass& D, const std::vector<CremonaMove>& trace);

/// Degree 0, one multiplicity -1, all others 0.
bool is_coordinate_class(const IntClass& D);

/// Class of D on more points, padding with zero multiplicities.
IntClass pad_points(const IntClass& D, std::size_t points);

struct IntClassHash {
    std::size_t operator()(const IntClass& D) const noexcept;
};

std::string to_string(const IntClass& D);
std::string to_string(const RatClass& D);
std::string to_string(const QuadClass& D);

}  // namespace seshadri
