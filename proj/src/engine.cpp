#include "seshadri/engine.hpp"

#include <algorithm>
#include <set>

namespace seshadri {

std::string to_string(NefKind k) {
    switch (k) {
        case NefKind::certified_nef: return "certified-nef";
        case NefKind::nef_up_to_bound: return "nef-up-to-bound";
        case NefKind::not_nef: return "not-nef";
    }
    return "unknown";
}

std::string to_string(AmpleKind k) {
    switch (k) {
        case AmpleKind::certified_ample: return "certified-ample";
        case AmpleKind::ample_up_to_bound: return "ample-up-to-bound";
        case AmpleKind::not_ample: return "not-ample";
    }
    return "unknown";
}

std::string to_string(SeshadriStatus s) {
    switch (s) {
        case SeshadriStatus::certified_maximal: return "certified-maximal";
        case SeshadriStatus::submaximal_witness: return "submaximal-witness";
        case SeshadriStatus::bound_only: return "bound-only";
    }
    return "unknown";
}

bool IrrationalityCertificate::verify() const {
    if (radicand < 0 || root < 0) return false;
    if (!irrational) return root * root == radicand;
    return root * root < radicand && radicand < (root + 1) * (root + 1);
}

IrrationalityCertificate is_perfect_square(const Integer& k) {
    if (k < 0) throw PreconditionError("radicand must be nonnegative");
    IrrationalityCertificate c{k, isqrt(k), false};
    c.irrational = c.root * c.root != k;
    return c;
}

namespace {

template <class Scalar>
std::optional<OrbitPairing<Scalar>> most_negative_pairing(const DivisorClass<Scalar>& F,
                                                          const ExceptionalClassSet& classes) {
    std::optional<OrbitPairing<Scalar>> worst;
    for (const auto& rep : classes) {
        auto p = min_orbit_pairing(F, rep);
        if (!worst || p.value < worst->value) worst = std::move(p);
    }
    return worst;
}

Rational ratio_of(const Integer& num, const Integer& den) {
    Rational q(num, den);
    q.canonicalize();
    return q;
}

bool is_uniform(const IntClass& L) {
    const auto& m = L.multiplicities();
    return !m.empty() && std::all_of(m.begin(), m.end(), [&](const Integer& x) { return x == m.front(); });
}

}  // namespace

NefVerdict conditional_nef(const QuadClass& F, const ExceptionalClassSet& classes) {
    if (F.points() != classes.points())
        throw ContextMismatch("divisor on " + std::to_string(F.points()) + " points, classes on " +
                              std::to_string(classes.points()));
    NefVerdict v;
    const auto worst = most_negative_pairing(F, classes);
    const bool violated = worst && worst->value < QuadScalar(0);

    if (self_intersection(F) < QuadScalar(0)) {
        v.kind = NefKind::not_nef;
        if (violated) v.witness = worst->realization;
        v.reason = "negative self-intersection";
        return v;
    }
    if (is_standard(F)) {
        v.kind = NefKind::certified_nef;
        v.decomposition = standard_decomposition(F);
        v.reason = "standard form: nonnegative combination of the ladder";
        return v;
    }
    if (violated) {
        v.kind = NefKind::not_nef;
        v.witness = worst->realization;
        v.reason = "negative on an exceptional class";
        return v;
    }
    v.kind = NefKind::nef_up_to_bound;
    v.reason = "nonnegative on all exceptional classes of degree <= " + std::to_string(classes.max_degree());
    return v;
}

SeshadriResult seshadri_multi(const ExceptionalClassSet& classes) {
    const std::size_t s = classes.points();
    if (s == 0) throw PreconditionError("multi-point Seshadri constant needs s >= 1");
    const bool complete = enumeration_complete(s, classes.max_degree());

    SeshadriResult r;
    r.max_degree = classes.max_degree();
    r.cap = QuadScalar(1) / QuadScalar::sqrt(Integer(static_cast<unsigned long>(s)));
    r.tested = QuadClass::uniform(s, QuadScalar(1), r.cap);

    std::optional<IntClass> best;
    for (const auto& c : classes) {
        if (c.degree() < 1) continue;
        Integer total = 0;
        for (const auto& m : c.multiplicities()) total += m;
        const Rational ratio = ratio_of(c.degree(), total);
        if (!r.best_ratio || ratio < *r.best_ratio) {
            r.best_ratio = ratio;
            best = c;
        }
    }

    if (r.best_ratio && QuadScalar(*r.best_ratio) < r.cap) {
        r.value = *r.best_ratio;
        r.status = SeshadriStatus::submaximal_witness;
        r.witness = *best;
        r.conditional = !complete;
    } else if (is_standard(r.tested)) {
        r.value = r.cap;
        r.status = SeshadriStatus::certified_maximal;
        r.witness = standard_decomposition(r.tested);
        r.conditional = s >= 10;
    } else if (r.best_ratio && QuadScalar(*r.best_ratio) == r.cap && complete) {
        r.value = r.cap;
        r.status = SeshadriStatus::certified_maximal;
        r.witness = *best;
        r.conditional = false;
    } else {
        r.value = r.cap;
        r.status = SeshadriStatus::bound_only;
        r.witness = DegreeBound{classes.max_degree()};
        r.conditional = true;
    }
    return r;
}

SeshadriResult seshadri_multi(std::size_t s, ClassCatalog& catalog, int dmax) {
    if (s == 0) throw PreconditionError("multi-point Seshadri constant needs s >= 1");
    return seshadri_multi(catalog.get(s, dmax));
}

AmpleVerdict ample_conditional(const IntClass& L, const ExceptionalClassSet& classes) {
    if (L.points() != classes.points())
        throw ContextMismatch("line bundle on " + std::to_string(L.points()) + " points, classes on " +
                              std::to_string(classes.points()));
    const std::size_t s = L.points();
    AmpleVerdict v;
    if (self_intersection(L) <= 0) {
        v.kind = AmpleKind::not_ample;
        v.evidence = "L^2 <= 0";
        v.conditional = false;
        return v;
    }
    if (L.degree() <= 0) {
        v.kind = AmpleKind::not_ample;
        v.evidence = "L.H <= 0";
        v.conditional = false;
        return v;
    }
    if (auto worst = most_negative_pairing(L, classes); worst && worst->value <= 0) {
        v.kind = AmpleKind::not_ample;
        v.witness = worst->realization;
        v.evidence = "L.C <= 0 on an exceptional class";
        v.conditional = false;
        return v;
    }

    v.kind = AmpleKind::certified_ample;
    v.conditional = false;
    if (s == 0) {
        v.evidence = "positive multiple of the hyperplane class";
        return v;
    }
    if (s == 1) {
        if (L.degree() > L.multiplicity(0)) {
            v.evidence = "positive on E1 and on the ruling H - E1";
            return v;
        }
        v.kind = AmpleKind::not_ample;
        v.witness = IntClass(Integer(1), {Integer(1)});
        v.evidence = "L.(H - E1) <= 0";
        return v;
    }
    if (s <= 8 && enumeration_complete(s, classes.max_degree())) {
        v.evidence = "positive on every (-1)-curve of a del Pezzo surface";
        return v;
    }
    if (is_uniform(L)) {
        const SeshadriResult multi = seshadri_multi(classes);
        const bool exact = multi.status == SeshadriStatus::certified_maximal ||
                           (multi.status == SeshadriStatus::submaximal_witness && !multi.conditional);
        const Rational ratio = ratio_of(L.multiplicity(0), L.degree());
        if (exact && QuadScalar(ratio) < multi.value) {
            v.evidence = "m/d = " + to_string(ratio) + " < eps(P2,O(1)," + std::to_string(s) +
                         ") = " + multi.value.to_string();
            v.conditional = multi.conditional;
            return v;
        }
    }
    v.kind = AmpleKind::ample_up_to_bound;
    v.evidence = "L^2 > 0 and positive on all exceptional classes of degree <= " +
                 std::to_string(classes.max_degree());
    v.conditional = true;
    return v;
}

SeshadriResult seshadri_single(const IntClass& L, ClassCatalog& catalog, int dmax) {
    if (dmax < 1) throw PreconditionError("degree bound must be at least 1");
    const std::size_t s = L.points();
    AmpleVerdict amp = ample_conditional(L, catalog.get(s, dmax));
    if (amp.kind == AmpleKind::not_ample) throw PreconditionError("line bundle is not ample: " + amp.evidence);

    const ExceptionalClassSet& onY = catalog.get(s + 1, dmax);
    const Integer square = self_intersection(L);
    const auto l_order = descending_order(L.multiplicities());

    SeshadriResult r;
    r.max_degree = dmax;
    r.cap = QuadScalar::sqrt(square);

    // Minimise (π*L·C)/(C·E) over relabellings placing a multiplicity v ≥ 1 on E.
    std::optional<IntClass> best;
    for (const auto& c : onY) {
        const auto& m = c.multiplicities();
        for (std::size_t pick = 0; pick < m.size(); ++pick) {
            if (m[pick] < 1 || (pick > 0 && m[pick] == m[pick - 1])) continue;
            std::vector<Integer> real(s + 1);
            real[0] = m[pick];
            Integer paired = 0;
            for (std::size_t j = 0, k = 0; j < m.size(); ++j) {
                if (j == pick) continue;
                real[1 + l_order[k]] = m[j];
                paired += m[j] * L.multiplicity(l_order[k]);
                ++k;
            }
            const Rational ratio = ratio_of(c.degree() * L.degree() - paired, m[pick]);
            if (!r.best_ratio || ratio < *r.best_ratio) {
                r.best_ratio = ratio;
                best = IntClass(c.degree(), std::move(real));
            }
        }
    }

    std::vector<QuadScalar> tm{r.cap};
    for (const auto& x : L.multiplicities()) tm.emplace_back(x);
    r.tested = QuadClass(QuadScalar(L.degree()), std::move(tm));

    if (r.best_ratio && QuadScalar(*r.best_ratio) < r.cap) {
        r.value = *r.best_ratio;
        r.status = SeshadriStatus::submaximal_witness;
        r.witness = *best;
        r.conditional = !enumeration_complete(s + 1, dmax) || amp.conditional;
    } else if (is_standard(r.tested)) {
        r.value = r.cap;
        r.status = SeshadriStatus::certified_maximal;
        r.witness = standard_decomposition(r.tested);
        r.conditional = s + 1 >= 10 || amp.conditional;
    } else if (s + 1 >= 2 && enumeration_complete(s + 1, dmax) &&
               !(most_negative_pairing(r.tested, onY)->value < QuadScalar(0))) {
        // del Pezzo Y: the cone of curves is spanned by the listed (-1)-curves
        r.value = r.cap;
        r.status = SeshadriStatus::certified_maximal;
        r.witness = CompleteListCheck{s + 1, dmax};
        r.conditional = amp.conditional;
    } else {
        r.value = r.cap;
        r.status = SeshadriStatus::bound_only;
        r.witness = DegreeBound{dmax};
        r.conditional = true;
    }
    r.ampleness = std::move(amp);
    return r;
}

DegreeChoice choose_degree(std::size_t s) {
    if (s < 13 || s == 15 || s == 16)
        throw PreconditionError("degree choice needs s >= 13 and s not in {15, 16}");
    const Integer S(static_cast<unsigned long>(s));
    DegreeChoice out;
    out.points = s;
    bool found = false;
    for (Integer d = isqrt(S) + 1; 4 * d - 3 <= S; ++d) {
        if (d * d <= S) continue;
        auto cert = is_perfect_square(d * d - S);
        if (cert.irrational) {
            out.degree = d;
            out.certificate = std::move(cert);
            found = true;
            break;
        }
    }
    if (!found) throw std::logic_error("no admissible degree for s = " + std::to_string(s));

    out.in_window = 4 * out.degree - 3 <= S && S <= 6 * out.degree - 10;
    auto identity_holds = [&](const Integer& d) {
        const Integer k = d * d - S;
        const Integer lo = (d - 3) * (d - 3) + 1;
        const Integer hi = (d - 2) * (d - 2) - 1;
        return lo == d * d - (6 * d - 10) && hi == d * d - (4 * d - 3) && lo <= k && k <= hi;
    };
    if (s >= 17) {
        Integer w = (S + 10 + 5) / 6;  // ceil((s + 10) / 6)
        if (4 * w - 3 <= S) {
            out.window_degree = w;
            out.window_identity = identity_holds(w) && (!out.in_window || identity_holds(out.degree));
        }
    }
    return out;
}

bool DegreeCertificate::verified() const {
    return standard && degree_gap && cap_at_least_one && nef.kind == NefKind::certified_nef &&
           decomposition.nonnegative() && decomposition.recombine() == divisor;
}

DegreeCertificate degree_certificate(std::size_t s, const Integer& d, ClassCatalog& catalog, int dmax) {
    const Integer S(static_cast<unsigned long>(s));
    if (!(4 * d - 3 <= S && S < d * d)) throw PreconditionError("needs 4d - 3 <= s < d^2");
    DegreeCertificate r;
    r.points = s;
    r.degree = d;
    r.epsilon = QuadScalar::sqrt(d * d - S);
    std::vector<QuadScalar> m(s + 1, QuadScalar(1));
    m[0] = r.epsilon;
    r.divisor = QuadClass(QuadScalar(d), std::move(m));
    r.standard = is_standard(r.divisor);
    r.degree_gap = QuadScalar(d) > r.epsilon + QuadScalar(2);
    r.cap_at_least_one = r.epsilon >= QuadScalar(1);
    r.decomposition = standard_decomposition(r.divisor);
    r.nef = conditional_nef(r.divisor, catalog.get(s + 1, dmax));
    r.irrationality = is_perfect_square(d * d - S);
    return r;
}

IntClass case_line_bundle(std::size_t s, std::optional<long> n) {
    auto need_n = [&] {
        if (!n || *n < 1) throw PreconditionError("case s = " + std::to_string(s) + " needs n >= 1");
        return Integer(*n);
    };
    switch (s) {
        case 9: {
            const Integer k = need_n();
            return IntClass::uniform(9, 3 * k + 1, k);
        }
        case 10: return IntClass::uniform(10, 10, 3);
        case 11: return IntClass::uniform(11, 7, 2);
        case 12: return IntClass::uniform(12, 11, 3);
        case 15: return IntClass::uniform(15, 13, 3);
        case 16: {
            const Integer k = need_n();
            return IntClass::uniform(16, 4 * k + 1, k);
        }
        default: throw PreconditionError("no case-table entry for s = " + std::to_string(s));
    }
}

bool CaseRow::verified() const {
    return ampleness.kind != AmpleKind::not_ample && epsilon.status == SeshadriStatus::certified_maximal &&
           epsilon.value * epsilon.value == QuadScalar(self_intersection);
}

CaseRow case_row(std::size_t s, std::optional<long> n, ClassCatalog& catalog, int dmax) {
    CaseRow row;
    row.points = s;
    row.line_bundle = case_line_bundle(s, n);
    if (s == 9 || s == 16) row.n = n;
    row.self_intersection = self_intersection(row.line_bundle);
    row.ampleness = ample_conditional(row.line_bundle, catalog.get(s, dmax));
    row.irrationality = is_perfect_square(row.self_intersection);
    if (row.ampleness.kind != AmpleKind::not_ample) row.epsilon = seshadri_single(row.line_bundle, catalog, dmax);
    return row;
}

NagataReport nagata_check(std::size_t s, ClassCatalog& catalog, int dmax) {
    if (s < 9) throw PreconditionError("Nagata check needs s >= 9");
    const ExceptionalClassSet& classes = catalog.get(s, dmax);
    const QuadScalar root = QuadScalar::sqrt(Integer(static_cast<unsigned long>(s)));
    NagataReport r;
    r.points = s;
    r.max_degree = dmax;
    r.conditional_multi_point = QuadScalar(1) / root;
    r.orbit_classes_checked = classes.full_count();
    bool first = true;
    for (const auto& c : classes) {
        Integer total = 0;
        for (const auto& m : c.multiplicities()) total += m;
        const Integer anti = 3 * c.degree() - total;
        const QuadScalar slack = QuadScalar(c.degree()) * root - QuadScalar(total);
        r.anticanonical_all_one = r.anticanonical_all_one && anti == 1;
        r.slack_all_at_least_one = r.slack_all_at_least_one && slack >= QuadScalar(1);
        if (first || anti < r.min_anticanonical) r.min_anticanonical = anti;
        if (first || slack < r.min_slack) {
            r.min_slack = slack;
            r.min_slack_class = c;
        }
        first = false;
        ++r.classes_checked;
    }
    return r;
}

std::vector<SweepRow> sweep_Ldn(std::size_t s, long n_from, long n_to, ClassCatalog& catalog, int dmax,
                                long scan_width) {
    if (s < 9) throw PreconditionError("sweep needs s >= 9");
    if (n_from < 1 || n_to < n_from) throw PreconditionError("sweep needs 1 <= n_from <= n_to");
    const ExceptionalClassSet& classes = catalog.get(s, dmax);
    const Integer S(static_cast<unsigned long>(s));
    std::vector<SweepRow> rows;
    for (long n = n_from; n <= n_to; ++n) {
        SweepRow row;
        row.n = n;
        const Integer N(n);
        const Integer start = isqrt(N * N * S) + 1;
        for (Integer d = start; d < start + scan_width; ++d) {
            const IntClass L = IntClass::uniform(s, d, N);
            if (ample_conditional(L, classes).kind == AmpleKind::not_ample) continue;
            const SeshadriResult eps = seshadri_single(L, catalog, dmax);
            if (eps.status == SeshadriStatus::certified_maximal && !eps.value.is_rational()) {
                row.degree = d;
                row.self_intersection = self_intersection(L);
                row.epsilon = eps.value;
                break;
            }
        }
        rows.push_back(std::move(row));
    }
    return rows;
}

bool BoundaryReport::verified() const {
    return std::all_of(few_points.begin(), few_points.end(), [](const auto& r) { return r.rational; }) &&
           std::all_of(examples.begin(), examples.end(), [](const auto& e) { return e.certified_irrational; });
}

BoundaryReport rationality_boundary(ClassCatalog& catalog, const BoundaryOptions& options) {
    BoundaryReport report;
    for (std::size_t s = 0; s <= options.few_points_max; ++s) {
        for (long d = 1; d <= options.grid_degree; ++d) {
            const long n_max = s == 0 ? 0 : d;
            for (long n = s == 0 ? 0 : 1; n <= n_max; ++n) {
                const IntClass L = IntClass::uniform(s, Integer(d), Integer(n));
                if (s == 0 && n != 0) continue;
                if (ample_conditional(L, catalog.get(s, options.max_degree)).kind == AmpleKind::not_ample)
                    continue;
                BoundaryRow row;
                row.points = s;
                row.line_bundle = L;
                int dmax = options.max_degree;
                row.epsilon = seshadri_single(L, catalog, dmax);
                while (row.epsilon.status == SeshadriStatus::bound_only && !row.epsilon.value.is_rational() &&
                       dmax + 2 <= options.escalation_limit) {
                    dmax += 2;
                    row.epsilon = seshadri_single(L, catalog, dmax);
                }
                row.max_degree_used = dmax;
                row.rational = row.epsilon.value.is_rational();
                report.few_points.push_back(std::move(row));
            }
        }
    }

    static const std::set<std::size_t> case_table{9, 10, 11, 12, 15, 16};
    for (std::size_t s = 9; s <= options.examples_max; ++s) {
        IrrationalExample ex;
        ex.points = s;
        if (case_table.count(s)) {
            ex.source = "case-table";
            std::optional<long> n;
            if (s == 9) n = 7;
            if (s == 16) n = 9;
            ex.line_bundle = case_line_bundle(s, n);
        } else {
            ex.source = "degree-choice";
            ex.line_bundle = IntClass::uniform(s, choose_degree(s).degree, Integer(1));
        }
        ex.epsilon = seshadri_single(ex.line_bundle, catalog, options.max_degree);
        ex.certified_irrational =
            ex.epsilon.status == SeshadriStatus::certified_maximal && !ex.epsilon.value.is_rational();
        report.examples.push_back(std::move(ex));
    }
    return report;
}

bool SummaryTables::verified() const {
    for (const auto& row : case_table)
        if (!row.verified() || !row.irrationality.verify()) return false;
    for (const auto& [choice, cert] : degree_table) {
        if (!choice.certificate.irrational || !choice.certificate.verify()) return false;
        if (choice.points >= 17 && !choice.window_identity) return false;
        if (!cert.verified() || !cert.irrationality.irrational) return false;
    }
    return boundary.verified();
}

SummaryTables summary_tables(ClassCatalog& catalog, int dmax) {
    SummaryTables t;
    for (auto [s, n] : std::vector<std::pair<std::size_t, std::optional<long>>>{
             {9, 7}, {10, {}}, {11, {}}, {12, {}}, {15, {}}, {16, 9}})
        t.case_table.push_back(case_row(s, n, catalog, dmax));
    for (std::size_t s = 13; s <= 30; ++s) {
        if (s == 15 || s == 16) continue;
        DegreeChoice choice = choose_degree(s);
        DegreeCertificate cert = degree_certificate(s, choice.degree, catalog, dmax);
        t.degree_table.emplace_back(std::move(choice), std::move(cert));
    }
    BoundaryOptions opts;
    opts.max_degree = dmax;
    t.boundary = rationality_boundary(catalog, opts);
    return t;
}

}  // namespace seshadri
