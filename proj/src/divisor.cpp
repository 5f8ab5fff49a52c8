#include "seshadri/divisor.hpp"

#include <functional>

namespace seshadri {

std::string to_string(ReductionStop stop) {
    switch (stop) {
        case ReductionStop::standard: return "standard";
        case ReductionStop::negative_multiplicity: return "negative-multiplicity";
        case ReductionStop::negative_degree: return "negative-degree";
        case ReductionStop::no_moves: return "no-moves";
        case ReductionStop::inconclusive: return "inconclusive";
    }
    return "unknown";
}

namespace {

// Indices of the three largest multiplicities, ties broken by lowest index.
CremonaMove top_three(const IntClass& D) {
    const auto order = descending_order(D.multiplicities());
    return {order[0], order[1], order[2]};
}

}  // namespace

Reduction reduce_to_standard(const IntClass& D, std::size_t max_iterations) {
    Reduction out{D, {}, ReductionStop::standard};
    IntClass& cur = out.terminal;
    for (;;) {
        const auto sorted = sorted_descending(cur);
        const auto& mu = sorted.multiplicities();
        Integer top = 0;
        for (std::size_t i = 0; i < std::min<std::size_t>(3, mu.size()); ++i) top += mu[i];
        if (cur.degree() >= top) {
            out.stop = (!mu.empty() && mu.back() < 0) ? ReductionStop::negative_multiplicity
                                                       : ReductionStop::standard;
            return out;
        }
        if (cur.points() < 3) {
            out.stop = ReductionStop::no_moves;
            return out;
        }
        if (out.trace.size() >= max_iterations) {
            out.stop = ReductionStop::inconclusive;
            return out;
        }
        const CremonaMove mv = top_three(cur);
        cur = cremona(cur, mv.i, mv.j, mv.k);
        out.trace.push_back(mv);
        if (cur.degree() < 0) {
            out.stop = ReductionStop::negative_degree;
            return out;
        }
    }
}

IntClass replay(const IntClass& D, const std::vector<CremonaMove>& trace) {
    IntClass cur = D;
    for (const auto& mv : trace) cur = cremona(cur, mv.i, mv.j, mv.k);
    return cur;
}

bool is_coordinate_class(const IntClass& D) {
    if (D.degree() != 0) return false;
    std::size_t minus_one = 0;
    for (const auto& m : D.multiplicities()) {
        if (m == -1)
            ++minus_one;
        else if (m != 0)
            return false;
    }
    return minus_one == 1;
}

IntClass pad_points(const IntClass& D, std::size_t points) {
    if (points < D.points()) throw PreconditionError("pad_points cannot drop coordinates");
    std::vector<Integer> m = D.multiplicities();
    m.resize(points, Integer(0));
    return IntClass(D.degree(), std::move(m));
}

std::size_t IntClassHash::operator()(const IntClass& D) const noexcept {
    auto mix = [](std::size_t h, const Integer& x) {
        const mpz_srcptr z = x.get_mpz_t();
        std::size_t v = static_cast<std::size_t>(mpz_getlimbn(z, 0)) ^ (static_cast<std::size_t>(mpz_sgn(z) + 1) << 1);
        return h ^ (v + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2));
    };
    std::size_t h = mix(D.points(), D.degree());
    for (const auto& m : D.multiplicities()) h = mix(h, m);
    return h;
}

namespace {

template <class Scalar, class Fmt>
std::string format_class(const DivisorClass<Scalar>& D, Fmt fmt) {
    std::string out = fmt(D.degree()) + ";";
    for (std::size_t i = 0; i < D.points(); ++i) {
        if (i) out += ",";
        out += fmt(D.multiplicity(i));
    }
    return out;
}

}  // namespace

std::string to_string(const IntClass& D) {
    return format_class(D, [](const Integer& x) { return x.get_str(); });
}
std::string to_string(const RatClass& D) {
    return format_class(D, [](const Rational& x) { return to_string(x); });
}
std::string to_string(const QuadClass& D) {
    return format_class(D, [](const QuadScalar& x) { return x.to_string(); });
}

}  // namespace seshadri
