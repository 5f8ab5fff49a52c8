// One line per acceptance criterion; exit status is nonzero if any fails.

#include "properties.hpp"
#include "random_classes.hpp"
#include "seshadri/report.hpp"

#include <chrono>
#include <cstdio>
#include <functional>
#include <sstream>
#include <string>

using namespace seshadri;
using oracle::Cls;
using oracle::to_cls;

namespace {

struct Outcome {
    bool pass = true;
    std::string detail;
};

struct Note {
    Outcome& out;
    void fail(const std::string& why) {
        if (out.pass) out.detail = why;
        out.pass = false;
    }
};

// 1. exact case table values
Outcome check_case_table() {
    Outcome out;
    Note note{out};
    ClassCatalog catalog;
    const auto start = std::chrono::steady_clock::now();
    struct Expect {
        std::size_t s;
        std::optional<long> n;
        long square;
    };
    std::vector<Expect> rows{{10, {}, 10}, {11, {}, 5}, {12, {}, 13}, {15, {}, 34}};
    for (long n = 7; n <= 12; ++n) rows.push_back({9, n, 6 * n + 1});
    for (long n = 9; n <= 12; ++n) rows.push_back({16, n, 8 * n + 1});
    for (const auto& [s, n, square] : rows) {
        const CaseRow row = case_row(s, n, catalog, 8);
        const std::string tag = "s=" + std::to_string(s) + (n ? " n=" + std::to_string(*n) : "");
        // L^2 by hand from the line bundle's shape
        const Cls L = to_cls(row.line_bundle);
        if (oracle::dot(L, L) != square) note.fail(tag + ": L^2");
        if (row.epsilon.value != QuadScalar::sqrt(square)) note.fail(tag + ": value " + row.epsilon.value.to_string());
        if (row.epsilon.status != SeshadriStatus::certified_maximal) note.fail(tag + ": " + to_string(row.epsilon.status));
        if (!verify_seshadri_json(to_json(row.epsilon, "seshadri-single", &row.line_bundle)))
            note.fail(tag + ": certificate does not re-verify");
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (secs >= 60) note.fail("took " + std::to_string(secs) + " s");
    if (out.pass) out.detail = std::to_string(rows.size()) + " rows certified exactly in " + std::to_string(secs) + " s";
    return out;
}

// 2. degree choice and certificates for 13 <= s <= 200
Outcome check_degree_sweep() {
    Outcome out;
    Note note{out};
    ClassCatalog catalog;
    std::size_t in_window = 0, rows = 0;
    for (long s = 13; s <= 200; ++s) {
        if (s == 15 || s == 16) continue;
        ++rows;
        const std::string tag = "s=" + std::to_string(s);
        const DegreeChoice c = choose_degree(s);
        const DegreeCertificate r = degree_certificate(s, c.degree, catalog, 8);
        const long d = c.degree.get_si(), k = d * d - s;
        // standard iff d >= sqrt(k) + 2, i.e. (d-2)^2 >= k with d >= 2
        const bool standard = d >= 2 && (d - 2) * (d - 2) >= k && k >= 1;
        if (!r.verified() || r.standard != standard || !standard) note.fail(tag + ": standardness");
        if (oracle::is_square(k) || !r.irrationality.irrational || !c.certificate.verify())
            note.fail(tag + ": irrationality");
        if (!verify_degree_certificate_json(to_json(r))) note.fail(tag + ": certificate does not re-verify");
        if (s >= 17) {
            for (long w = 1; w <= s; ++w) {
                if (!(4 * w - 3 <= s && s <= 6 * w - 10)) continue;
                const long kw = w * w - s;
                if (!((w - 3) * (w - 3) + 1 <= kw && kw <= (w - 2) * (w - 2) - 1)) note.fail(tag + ": window identity");
            }
            const bool window = 4 * d - 3 <= s && s <= 6 * d - 10;
            in_window += window;
            if (c.in_window != window || !c.window_identity) note.fail(tag + ": window report");
        }
    }
    if (out.pass)
        out.detail = std::to_string(rows) + " point counts certified; " + std::to_string(in_window) +
                     " chosen degrees inside the window";
    return out;
}

// 3. orbit enumeration equals the Diophantine oracle
Outcome check_oracle_equivalence() {
    Outcome out;
    Note note{out};
    std::size_t pairs = 0;
    for (std::size_t t = 0; t <= 9; ++t)
        for (int dmax = 0; dmax <= 8; ++dmax) {
            ++pairs;
            if (!(enumerate_exceptionals({t}, dmax) == diophantine_oracle({t}, dmax)))
                note.fail("t=" + std::to_string(t) + " dmax=" + std::to_string(dmax));
        }
    if (out.pass) out.detail = std::to_string(pairs) + " (t, dmax) pairs identical";
    return out;
}

// 4. stabilisation for t <= 8, growth for t = 10
Outcome check_regime_split() {
    Outcome out;
    Note note{out};
    for (std::size_t t = 1; t <= 8; ++t)
        if (enumerate_exceptionals({t}, 10).classes() != enumerate_exceptionals({t}, 20).classes())
            note.fail("t=" + std::to_string(t) + " not stable");
    const auto low = enumerate_exceptionals({10}, 3), high = enumerate_exceptionals({10}, 6);
    if (!(low == diophantine_oracle({10}, 3)) || !(high == diophantine_oracle({10}, 6)))
        note.fail("t=10 disagrees with the oracle");
    if (!(high.full_count() > low.full_count())) note.fail("t=10 count did not grow");
    if (out.pass)
        out.detail = "t<=8 stable from degree 10 to 20; t=10 count " + low.full_count().get_str() + " -> " +
                     high.full_count().get_str();
    return out;
}

// 5. standard classes pair nonnegatively; ladder bounds
Outcome check_standard_nonnegative() {
    Outcome out;
    Note note{out};
    ClassCatalog catalog;
    oracle::Rng rng(20260505);
    if (auto bad = oracle::standard_pairing_failures(rng, 1000, 50, catalog, 8)) note.fail(std::to_string(bad) + " negative pairings");
    for (std::size_t t = 3; t <= 10; ++t)
        if (auto bad = oracle::ladder_failures(t, catalog, 8)) note.fail("ladder t=" + std::to_string(t) + ": " + std::to_string(bad));
    if (out.pass) out.detail = "1000 standard classes, ladder H_0..H_t on t=3..10, degree <= 8";
    return out;
}

// 6. randomised algebraic properties
Outcome check_property_suites() {
    Outcome out;
    Note note{out};
    oracle::Rng rng(7);
    if (auto bad = oracle::decomposition_failures(rng, 10000)) note.fail("decomposition: " + std::to_string(bad));
    if (auto bad = oracle::cremona_failures(rng, 10000)) note.fail("cremona: " + std::to_string(bad));
    if (auto bad = oracle::bilinearity_failures(rng, 10000)) note.fail("bilinearity: " + std::to_string(bad));
    const auto order = oracle::quad_order_check(rng, 100000);
    if (order.failures) note.fail("order: " + std::to_string(order.failures));
    if (out.pass)
        out.detail = "1e4 decompositions, 1e4 cremona triples, 1e5 order comparisons (" +
                     std::to_string(order.skipped_equal) + " exact ties skipped)";
    return out;
}

// Ample uniform L on s <= 8 points: L^2 > 0 and positive on every (-1)-curve (plus the ruling for s = 1).
bool ample_by_hand(const IntClass& L, const ExceptionalClassSet& complete) {
    const Cls l = to_cls(L);
    if (l.d <= 0 || oracle::dot(l, l) <= 0) return false;
    if (l.m.size() == 1 && l.d <= l.m[0]) return false;
    for (const auto& C : complete)
        if (oracle::min_pairing(l, to_cls(C)) <= 0) return false;
    return true;
}

// 7. rational below nine points, irrational examples from nine on
Outcome check_boundary() {
    Outcome out;
    Note note{out};
    ClassCatalog catalog;
    const BoundaryReport r = rationality_boundary(catalog, {});
    std::size_t expected = 0;
    for (std::size_t s = 0; s <= 8; ++s)
        for (long d = 1; d <= 12; ++d)
            for (long m = s == 0 ? 0 : 1; m <= (s == 0 ? 0 : d); ++m)
                expected += ample_by_hand(IntClass::uniform(s, Integer(d), Integer(m)), catalog.get(s, 8));
    if (r.few_points.size() != expected)
        note.fail("grid has " + std::to_string(r.few_points.size()) + " rows, expected " + std::to_string(expected));
    std::size_t escalated = 0;
    for (const auto& row : r.few_points) {
        const std::string tag = "s=" + std::to_string(row.points) + " L=" + to_string(row.line_bundle);
        if (!row.rational || !row.epsilon.value.is_rational()) note.fail(tag + ": irrational");
        if (row.epsilon.status == SeshadriStatus::bound_only) note.fail(tag + ": bound only");
        if (!verify_seshadri_json(to_json(row.epsilon, "seshadri-single", &row.line_bundle)))
            note.fail(tag + ": certificate does not re-verify");
        escalated += row.max_degree_used > 8;
    }
    std::size_t examples = 0;
    for (std::size_t s = 9; s <= 30; ++s) {
        bool found = false;
        for (const auto& ex : r.examples)
            if (ex.points == s && ex.certified_irrational && !ex.epsilon.value.is_rational() &&
                verify_seshadri_json(to_json(ex.epsilon, "seshadri-single", &ex.line_bundle)))
                found = true;
        examples += found;
        if (!found) note.fail("no irrational example for s=" + std::to_string(s));
    }
    if (out.pass)
        out.detail = std::to_string(r.few_points.size()) + " ample grid bundles rational (" + std::to_string(escalated) +
                     " needed degree > 8); irrational certificates for " + std::to_string(examples) + " point counts";
    return out;
}

std::string nagata_json(unsigned threads) {
    EnumerationLimits limits;
    limits.threads = threads;
    ClassCatalog catalog(limits);
    nlohmann::json all = nlohmann::json::array();
    for (std::size_t s = 9; s <= 20; ++s) all.push_back(to_json(nagata_check(s, catalog, 8)));
    return all.dump(2);
}

// 8. Nagata pairings and deterministic reports
Outcome check_nagata() {
    Outcome out;
    Note note{out};
    ClassCatalog catalog;
    std::size_t reps = 0;
    for (long s = 9; s <= 20; ++s) {
        const NagataReport r = nagata_check(s, catalog, 8);
        if (!r.verified()) note.fail("s=" + std::to_string(s) + " not verified");
        for (const auto& C : catalog.get(s, 8)) {
            ++reps;
            const Cls c = to_cls(C);
            long total = 0;
            for (long x : c.m) total += x;
            if (3 * c.d - total != 1) note.fail("s=" + std::to_string(s) + ": C.(3H - sum E) != 1");
            // d*sqrt(s) - total >= 1  <=>  d^2 s >= (total + 1)^2
            if (c.d * c.d * s < (total + 1) * (total + 1)) note.fail("s=" + std::to_string(s) + ": slack below 1");
        }
    }
    const std::string a = nagata_json(1), b = nagata_json(1), c = nagata_json(4), d = nagata_json(0);
    if (a != b) note.fail("reports differ between runs");
    if (a != c || a != d) note.fail("reports differ between thread counts");
    if (out.pass) out.detail = std::to_string(reps) + " representatives checked; reports byte-identical for 1, 4 and all threads";
    return out;
}

}  // namespace

int main() {
    const std::vector<std::pair<const char*, std::function<Outcome()>>> criteria{
        {"case-table values exact and certified", check_case_table},
        {"degree choice and certificates for 13 <= s <= 200", check_degree_sweep},
        {"orbit enumeration equals Diophantine oracle (t <= 9, dmax <= 8)", check_oracle_equivalence},
        {"finite orbit for t <= 8, growing orbit for t = 10", check_regime_split},
        {"standard classes meet (-1)-classes nonnegatively", check_standard_nonnegative},
        {"algebraic property suites", check_property_suites},
        {"rational below nine points, irrational from nine to thirty", check_boundary},
        {"Nagata pairings and deterministic reports", check_nagata},
    };
    int failed = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        const auto start = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = criteria[i].second();
        } catch (const std::exception& e) {
            o = {false, std::string("exception: ") + e.what()};
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        std::printf("%s  [%zu] %s: %s (%.2f s)\n", o.pass ? "PASS" : "FAIL", i + 1, criteria[i].first,
                    o.detail.c_str(), secs);
        std::fflush(stdout);
        failed += !o.pass;
    }
    return failed == 0 ? 0 : 1;
}
