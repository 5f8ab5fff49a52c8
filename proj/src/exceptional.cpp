#include "seshadri/exceptional.hpp"

#include <algorithm>
#include <thread>
#include <unordered_set>

namespace seshadri {

std::string to_string(Provenance p) {
    return p == Provenance::orbit_bfs ? "orbit-bfs" : "diophantine-oracle";
}

Provenance provenance_from_string(const std::string& s) {
    if (s == "orbit-bfs") return Provenance::orbit_bfs;
    if (s == "diophantine-oracle") return Provenance::diophantine_oracle;
    throw std::invalid_argument("unknown provenance: " + s);
}

ExceptionalClassSet::ExceptionalClassSet(std::size_t points, int max_degree, Provenance provenance,
                                         std::vector<IntClass> classes)
    : points_(points), max_degree_(max_degree), provenance_(provenance), classes_(std::move(classes)) {
    for (auto& c : classes_) {
        if (c.points() != points_) throw ContextMismatch("class set member on the wrong number of points");
        c = sorted_descending(c);
    }
    std::sort(classes_.begin(), classes_.end());
    classes_.erase(std::unique(classes_.begin(), classes_.end()), classes_.end());
}

Integer permutation_count(const IntClass& D) {
    const auto sorted = sorted_descending(D);
    const auto& m = sorted.multiplicities();
    Integer count;
    mpz_fac_ui(count.get_mpz_t(), m.size());
    for (std::size_t i = 0; i < m.size();) {
        std::size_t j = i;
        while (j < m.size() && m[j] == m[i]) ++j;
        Integer f;
        mpz_fac_ui(f.get_mpz_t(), j - i);
        count /= f;
        i = j;
    }
    return count;
}

Integer ExceptionalClassSet::full_count() const {
    Integer total = 0;
    for (const auto& c : classes_) total += permutation_count(c);
    return total;
}

bool ExceptionalClassSet::contains(const IntClass& D) const {
    if (D.points() != points_) return false;
    return std::binary_search(classes_.begin(), classes_.end(), sorted_descending(D));
}

ExceptionalClassSet ExceptionalClassSet::restricted(int max_degree) const {
    std::vector<IntClass> kept;
    for (const auto& c : classes_)
        if (c.degree() <= max_degree) kept.push_back(c);
    return ExceptionalClassSet(points_, std::min(max_degree, max_degree_), provenance_, std::move(kept));
}

bool exceptional_numerics(const IntClass& D) {
    return self_intersection(D) == -1 && intersect(canonical_class(D.context()), D) == -1;
}

namespace {

// Sorted class on `points` >= 3 coordinates; F-type start of the orbit.
IntClass coordinate_representative(std::size_t points) {
    std::vector<Integer> m(points, Integer(0));
    if (points) m.back() = -1;
    return IntClass(Integer(0), std::move(m));
}

// Cremona neighbours of a sorted representative, one per multiset of
// multiplicity values, canonicalised and pruned to 0 ≤ degree ≤ dmax.
std::vector<IntClass> successors(const IntClass& rep, int dmax) {
    const auto& m = rep.multiplicities();
    std::vector<std::pair<std::size_t, std::size_t>> runs;  // [begin, end)
    for (std::size_t i = 0; i < m.size();) {
        std::size_t j = i;
        while (j < m.size() && m[j] == m[i]) ++j;
        runs.emplace_back(i, j);
        i = j;
    }
    std::vector<IntClass> out;
    const std::size_t r = runs.size();
    for (std::size_t a = 0; a < r; ++a)
        for (std::size_t b = a; b < r; ++b)
            for (std::size_t c = b; c < r; ++c) {
                std::size_t idx[3] = {runs[a].first, runs[b].first, runs[c].first};
                if (b == a) idx[1] += 1;
                if (c == b) idx[2] = idx[1] + 1;
                if (idx[1] >= runs[b].second || idx[2] >= runs[c].second) continue;
                IntClass next = cremona(rep, idx[0], idx[1], idx[2]);
                if (next.degree() < 0 || next.degree() > dmax) continue;
                out.push_back(sorted_descending(next));
            }
    return out;
}

// Drops (padded - t) zero coordinates; false if the class needs more than t points.
bool restrict_points(const IntClass& rep, std::size_t t, IntClass& out) {
    const std::size_t extra = rep.points() - t;
    std::vector<Integer> m;
    std::size_t dropped = 0;
    for (const auto& x : rep.multiplicities()) {
        if (x == 0 && dropped < extra) {
            ++dropped;
            continue;
        }
        m.push_back(x);
    }
    if (dropped < extra) return false;
    out = IntClass(rep.degree(), std::move(m));
    return true;
}

unsigned resolve_threads(unsigned requested) {
    if (requested == 0) requested = std::max(1u, std::thread::hardware_concurrency());
    return requested;
}

}  // namespace

ExceptionalClassSet enumerate_exceptionals(SurfaceContext ctx, int dmax, const EnumerationLimits& limits) {
    if (dmax < 0) throw PreconditionError("degree bound must be nonnegative");
    const std::size_t t = ctx.points;
    if (t == 0) return ExceptionalClassSet(0, dmax, Provenance::orbit_bfs, {});
    const std::size_t padded = std::max<std::size_t>(t, 3);
    const unsigned threads = resolve_threads(limits.threads);

    std::unordered_set<IntClass, IntClassHash> seen;
    std::vector<IntClass> frontier{coordinate_representative(padded)};
    seen.insert(frontier.front());

    while (!frontier.empty()) {
        std::vector<std::vector<IntClass>> produced(frontier.size());
        const std::size_t workers = std::min<std::size_t>(threads, frontier.size());
        if (workers <= 1) {
            for (std::size_t i = 0; i < frontier.size(); ++i) produced[i] = successors(frontier[i], dmax);
        } else {
            std::vector<std::jthread> pool;
            for (std::size_t w = 0; w < workers; ++w)
                pool.emplace_back([&, w] {
                    for (std::size_t i = w; i < frontier.size(); i += workers)
                        produced[i] = successors(frontier[i], dmax);
                });
        }
        std::vector<IntClass> next;
        for (auto& batch : produced)
            for (auto& c : batch)
                if (seen.insert(c).second) {
                    if (seen.size() > limits.max_classes)
                        throw ResourceCapExceeded("exceptional enumeration exceeded " +
                                                  std::to_string(limits.max_classes) + " classes");
                    next.push_back(std::move(c));
                }
        frontier = std::move(next);
    }

    std::vector<IntClass> classes;
    classes.reserve(seen.size());
    for (const auto& c : seen) {
        IntClass r;
        if (restrict_points(c, t, r)) classes.push_back(std::move(r));
    }
    return ExceptionalClassSet(t, dmax, Provenance::orbit_bfs, std::move(classes));
}

namespace {

struct DiophantineSearch {
    std::size_t t;
    long d;
    std::vector<long> current;
    std::vector<std::vector<long>> solutions;

    void run(std::size_t pos, long hi, long sum_left, long sq_left) {
        const long slots = static_cast<long>(t - pos);
        if (slots == 0) {
            if (sum_left == 0 && sq_left == 0) solutions.push_back(current);
            return;
        }
        if (sum_left < 0 || sq_left < 0) return;
        if (sum_left > slots * hi || sq_left > hi * sum_left) return;
        if (slots * sq_left < sum_left * sum_left) return;
        for (long v = std::min(hi, sum_left); v >= 0; --v) {
            current[pos] = v;
            run(pos + 1, v, sum_left - v, sq_left - v * v);
        }
    }
};

}  // namespace

ExceptionalClassSet diophantine_oracle(SurfaceContext ctx, int dmax, const EnumerationLimits& limits) {
    if (dmax < 0) throw PreconditionError("degree bound must be nonnegative");
    const std::size_t t = ctx.points;
    std::vector<IntClass> classes;
    if (t == 0) return ExceptionalClassSet(0, dmax, Provenance::diophantine_oracle, {});
    classes.push_back(coordinate_representative(t));

    for (long d = 1; d <= dmax; ++d) {
        DiophantineSearch search{t, d, std::vector<long>(t, 0), {}};
        search.run(0, d, 3 * d - 1, d * d + 1);
        for (const auto& sol : search.solutions) {
            std::vector<Integer> m(sol.begin(), sol.end());
            IntClass c(Integer(d), std::move(m));
            switch (orbit_membership(c, limits.max_reduction_iterations)) {
                case OrbitVerdict::member: classes.push_back(std::move(c)); break;
                case OrbitVerdict::non_member: break;
                case OrbitVerdict::inconclusive:
                    throw ResourceCapExceeded("orbit membership inconclusive for " + to_string(c));
            }
            if (classes.size() > limits.max_classes)
                throw ResourceCapExceeded("oracle exceeded " + std::to_string(limits.max_classes) + " classes");
        }
    }
    return ExceptionalClassSet(t, dmax, Provenance::diophantine_oracle, std::move(classes));
}

OrbitVerdict orbit_membership(const IntClass& D, std::size_t max_iterations) {
    if (!exceptional_numerics(D)) throw PreconditionError("orbit membership needs C^2 = K.C = -1");
    const IntClass padded = D.points() < 3 ? pad_points(D, 3) : D;
    const Reduction r = reduce_to_standard(padded, max_iterations);
    if (r.stop == ReductionStop::inconclusive) return OrbitVerdict::inconclusive;
    return is_coordinate_class(r.terminal) ? OrbitVerdict::member : OrbitVerdict::non_member;
}

int complete_degree(std::size_t points) {
    static constexpr int table[] = {0, 0, 1, 1, 1, 2, 2, 3, 6};
    return points < 9 ? table[points] : -1;
}

bool enumeration_complete(std::size_t points, int dmax) {
    const int c = complete_degree(points);
    return c >= 0 && dmax >= c;
}

}  // namespace seshadri
