#include "seshadri/report.hpp"

#include <algorithm>
#include <cctype>
#include <regex>
#include <sstream>

namespace seshadri {

using nlohmann::json;

namespace {

std::string_view trim(std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
}

Rational parse_entry(std::string_view raw, std::size_t position) {
    static const std::regex grammar(R"([+-]?[0-9]+(/[0-9]+)?)");
    const std::string entry(trim(raw));
    auto fail = [&](const std::string& why) -> ParseError {
        const std::string where = position == 0 ? "degree" : "position " + std::to_string(position);
        return ParseError(why + " '" + entry + "' at " + where, position);
    };
    if (!std::regex_match(entry, grammar)) throw fail("malformed entry");
    const auto slash = entry.find('/');
    if (slash == std::string::npos) return Rational(Integer(entry.starts_with('+') ? entry.substr(1) : entry));
    const Integer num(entry.substr(0, slash).starts_with('+') ? entry.substr(1, slash - 1) : entry.substr(0, slash));
    const Integer den(entry.substr(slash + 1));
    if (den == 0) throw fail("zero denominator in");
    Integer g;
    mpz_gcd(g.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
    if (g != 1) throw fail("fraction not in lowest terms");
    return Rational(num, den);
}

json class_json(const IntClass& c) { return to_string(c); }

json decomposition_json(const StandardDecomposition<QuadScalar>& d) {
    json coeffs = json::array();
    for (const auto& c : d.coefficients) coeffs.push_back(to_json(c));
    return json{{"type", "standard-decomposition"}, {"coefficients", coeffs}, {"order", d.order}};
}

// Degree, sum of the three largest multiplicities, smallest multiplicity.
json standard_form_check(const QuadClass& F) {
    const auto sorted = sorted_descending(F);
    const auto& mu = sorted.multiplicities();
    QuadScalar top(0);
    for (std::size_t i = 0; i < std::min<std::size_t>(3, mu.size()); ++i) top += mu[i];
    json j{{"degree", to_json(F.degree())}, {"top_three_sum", to_json(top)},
           {"holds", is_standard(F)}, {"inequality", F.degree().to_string() + " >= " + top.to_string()}};
    j["min_multiplicity"] = mu.empty() ? json(nullptr) : to_json(mu.back());
    return j;
}

std::string approx_text(const QuadScalar& x) {
    std::ostringstream os;
    os.precision(10);
    os << x.approx();
    return os.str();
}

std::string yes_no(bool b) { return b ? "yes" : "no"; }

}  // namespace

RatClass parse_divisor(std::string_view text) {
    const std::string_view body = trim(text);
    const auto semi = body.find(';');
    if (semi == std::string_view::npos) throw ParseError("missing ';' after the degree", 0);
    const Rational degree = parse_entry(body.substr(0, semi), 0);
    const std::string_view rest = trim(body.substr(semi + 1));
    std::vector<Rational> mult;
    if (!rest.empty()) {
        std::size_t start = 0;
        for (;;) {
            const auto comma = rest.find(',', start);
            const auto piece = rest.substr(start, comma == std::string_view::npos ? rest.npos : comma - start);
            mult.push_back(parse_entry(piece, mult.size() + 1));
            if (comma == std::string_view::npos) break;
            start = comma + 1;
        }
    }
    return RatClass(degree, std::move(mult));
}

IntClass to_integer_class(const RatClass& D) {
    auto as_int = [](const Rational& x) {
        if (x.get_den() != 1) throw PreconditionError("coefficient " + to_string(x) + " is not an integer");
        return Integer(x.get_num());
    };
    std::vector<Integer> m;
    for (const auto& x : D.multiplicities()) m.push_back(as_int(x));
    return IntClass(as_int(D.degree()), std::move(m));
}

json to_json(const QuadScalar& x) {
    return json{{"a", to_string(x.rational_part())}, {"b", to_string(x.irrational_part())},
                {"n", x.radicand().get_str()}};
}

QuadScalar quad_from_json(const json& j) {
    return QuadScalar(parse_rational(j.at("a").get<std::string>()), parse_rational(j.at("b").get<std::string>()),
                      Integer(j.at("n").get<std::string>()));
}

json to_json(const AmpleVerdict& v) {
    json j{{"verdict", to_string(v.kind)}, {"evidence", v.evidence}, {"conditional", v.conditional}};
    j["witness"] = v.witness ? class_json(*v.witness) : json(nullptr);
    return j;
}

json to_json(const NefVerdict& v) {
    json j{{"verdict", to_string(v.kind)}, {"reason", v.reason}};
    j["witness"] = v.witness ? class_json(*v.witness) : json(nullptr);
    j["decomposition"] = v.decomposition ? decomposition_json(*v.decomposition) : json(nullptr);
    return j;
}

json to_json(const IrrationalityCertificate& c) {
    return json{{"radicand", c.radicand.get_str()},
                {"floor_sqrt", c.root.get_str()},
                {"verdict", c.irrational ? "irrational" : "rational"},
                {"bracket", c.irrational ? c.root.get_str() + "^2 < " + c.radicand.get_str() + " < " +
                                               Integer(c.root + 1).get_str() + "^2"
                                         : c.root.get_str() + "^2 = " + c.radicand.get_str()}};
}

json to_json(const SeshadriResult& r, std::string_view kind, const IntClass* line_bundle) {
    json j;
    j["kind"] = kind;
    if (line_bundle) {
        j["points"] = line_bundle->points();
        j["line_bundle"] = class_json(*line_bundle);
        j["self_intersection"] = self_intersection(*line_bundle).get_str();
    } else {
        j["points"] = r.tested.points();
    }
    j["value"] = to_json(r.value);
    j["value_text"] = r.value.to_string();
    j["value_approx"] = approx_text(r.value);
    j["status"] = to_string(r.status);
    j["conditional"] = r.conditional;
    j["cap"] = to_json(r.cap);
    j["best_ratio"] = r.best_ratio ? json(to_string(*r.best_ratio)) : json(nullptr);
    j["max_degree"] = r.max_degree;
    j["tested_divisor"] = to_string(r.tested);
    j["standard_form_check"] = standard_form_check(r.tested);
    if (const auto* d = std::get_if<StandardDecomposition<QuadScalar>>(&r.witness))
        j["witness"] = decomposition_json(*d);
    else if (const auto* c = std::get_if<IntClass>(&r.witness))
        j["witness"] = json{{"type", "class"}, {"class", class_json(*c)}};
    else if (const auto* l = std::get_if<CompleteListCheck>(&r.witness))
        j["witness"] = json{{"type", "complete-list"}, {"points", l->points}, {"max_degree", l->max_degree}};
    else
        j["witness"] = json{{"type", "degree-bound"}, {"max_degree", std::get<DegreeBound>(r.witness).max_degree}};
    j["ampleness"] = r.ampleness ? to_json(*r.ampleness) : json(nullptr);
    return j;
}

json to_json(const DegreeChoice& c) {
    json j{{"points", c.points},
           {"degree", c.degree.get_str()},
           {"certificate", to_json(c.certificate)},
           {"in_window", c.in_window}};
    j["window_degree"] = c.window_degree ? json(c.window_degree->get_str()) : json(nullptr);
    j["window_identity"] = c.window_degree ? json(c.window_identity) : json(nullptr);
    return j;
}

json to_json(const DegreeCertificate& r) {
    json coeffs = json::array();
    for (const auto& c : r.decomposition.coefficients) coeffs.push_back(to_json(c));
    return json{{"points", r.points},
                {"degree", r.degree.get_str()},
                {"epsilon", to_json(r.epsilon)},
                {"epsilon_text", r.epsilon.to_string()},
                {"divisor", to_string(r.divisor)},
                {"standard", r.standard},
                {"degree_gap", r.degree_gap},
                {"cap_at_least_one", r.cap_at_least_one},
                {"decomposition", decomposition_json(r.decomposition)},
                {"nef", to_json(r.nef)},
                {"irrationality", to_json(r.irrationality)},
                {"verified", r.verified()}};
}

json to_json(const CaseRow& r) {
    json j{{"points", r.points},
           {"line_bundle", class_json(r.line_bundle)},
           {"self_intersection", r.self_intersection.get_str()},
           {"ampleness", to_json(r.ampleness)},
           {"epsilon", to_json(r.epsilon, "seshadri-single", &r.line_bundle)},
           {"irrationality", to_json(r.irrationality)},
           {"verified", r.verified()}};
    j["n"] = r.n ? json(*r.n) : json(nullptr);
    return j;
}

json to_json(const NagataReport& r) {
    json j{{"points", r.points},
           {"max_degree", r.max_degree},
           {"representatives_checked", r.classes_checked},
           {"orbit_classes_checked", r.orbit_classes_checked.get_str()},
           {"anticanonical_all_one", r.anticanonical_all_one},
           {"slack_all_at_least_one", r.slack_all_at_least_one},
           {"min_anticanonical_pairing", r.min_anticanonical.get_str()},
           {"min_slack", to_json(r.min_slack)},
           {"min_slack_text", r.min_slack.to_string()},
           {"conditional_multi_point_constant", to_json(r.conditional_multi_point)},
           {"conclusion", "eps(P2,O(1)," + std::to_string(r.points) + ") = " +
                              r.conditional_multi_point.to_string() + " given only (-1)-curves are negative"},
           {"verified", r.verified()}};
    j["min_slack_class"] = r.min_slack_class ? class_json(*r.min_slack_class) : json(nullptr);
    return j;
}

json to_json(const std::vector<SweepRow>& rows, std::size_t s) {
    json out = json::array();
    for (const auto& r : rows) {
        json j{{"n", r.n}, {"found", r.degree.has_value()}};
        j["degree"] = r.degree ? json(r.degree->get_str()) : json(nullptr);
        j["self_intersection"] = r.self_intersection ? json(r.self_intersection->get_str()) : json(nullptr);
        j["epsilon"] = r.epsilon ? to_json(*r.epsilon) : json(nullptr);
        j["epsilon_text"] = r.epsilon ? json(r.epsilon->to_string()) : json(nullptr);
        out.push_back(std::move(j));
    }
    return json{{"points", s}, {"rows", std::move(out)}};
}

json to_json(const Reduction& r, const IntClass& input) {
    json trace = json::array();
    for (const auto& mv : r.trace) trace.push_back(json::array({mv.i + 1, mv.j + 1, mv.k + 1}));
    return json{{"input", class_json(input)},
                {"terminal", class_json(r.terminal)},
                {"stop", to_string(r.stop)},
                {"moves", r.trace.size()},
                {"trace", std::move(trace)},
                {"coordinate_terminal", is_coordinate_class(r.terminal)}};
}

json to_json(const BoundaryReport& r) {
    json few = json::array();
    for (const auto& row : r.few_points)
        few.push_back(json{{"points", row.points},
                           {"line_bundle", class_json(row.line_bundle)},
                           {"value", to_json(row.epsilon.value)},
                           {"value_text", row.epsilon.value.to_string()},
                           {"status", to_string(row.epsilon.status)},
                           {"max_degree_used", row.max_degree_used},
                           {"rational", row.rational}});
    json ex = json::array();
    for (const auto& e : r.examples)
        ex.push_back(json{{"points", e.points},
                          {"source", e.source},
                          {"epsilon", to_json(e.epsilon, "seshadri-single", &e.line_bundle)},
                          {"certified_irrational", e.certified_irrational}});
    return json{{"few_points", std::move(few)}, {"irrational_examples", std::move(ex)}, {"verified", r.verified()}};
}

json to_json(const SummaryTables& t) {
    json cases = json::array();
    for (const auto& r : t.case_table) cases.push_back(to_json(r));
    json degrees = json::array();
    for (const auto& [c, cert] : t.degree_table) degrees.push_back(json{{"choice", to_json(c)}, {"certificate", to_json(cert)}});
    return json{{"case_table", std::move(cases)},
                {"degree_table", std::move(degrees)},
                {"boundary", to_json(t.boundary)},
                {"verified", t.verified()}};
}

json enumeration_report(const ExceptionalClassSet& set, const ExceptionalClassSet* oracle) {
    json j = to_json(set);
    j["representatives"] = set.size();
    j["full_count"] = set.full_count().get_str();
    if (oracle) {
        j["oracle_representatives"] = oracle->size();
        j["oracle_match"] = (*oracle == set);
    } else {
        j["oracle_match"] = nullptr;
    }
    return j;
}

bool verify_seshadri_json(const json& report) {
    try {
        const IntClass L = to_integer_class(parse_divisor(report.at("line_bundle").get<std::string>()));
        const QuadScalar value = quad_from_json(report.at("value"));
        const std::string status = report.at("status").get<std::string>();
        const Integer square = self_intersection(L);
        const QuadScalar cap = QuadScalar::sqrt(square);
        std::vector<QuadScalar> tm{value};
        for (const auto& x : L.multiplicities()) tm.emplace_back(x);
        const QuadClass tested(QuadScalar(L.degree()), std::move(tm));
        const json& w = report.at("witness");

        if (status == "certified-maximal") {
            if (!(value * value == QuadScalar(square))) return false;
            if (w.at("type") == "complete-list") {
                const auto points = w.at("points").get<std::size_t>();
                const int dmax = w.at("max_degree").get<int>();
                if (points != tested.points() || points < 2 || !enumeration_complete(points, dmax)) return false;
                for (const auto& c : enumerate_exceptionals({points}, dmax))
                    if (min_orbit_pairing(tested, c).value < QuadScalar(0)) return false;
                return true;
            }
            StandardDecomposition<QuadScalar> dec;
            for (const auto& c : w.at("coefficients")) dec.coefficients.push_back(quad_from_json(c));
            dec.order = w.at("order").get<std::vector<std::size_t>>();
            if (dec.order.size() != tested.points() || dec.coefficients.size() != tested.points() + 1) return false;
            std::vector<std::size_t> check = dec.order;
            std::sort(check.begin(), check.end());
            for (std::size_t i = 0; i < check.size(); ++i)
                if (check[i] != i) return false;
            return dec.nonnegative() && dec.recombine() == tested;
        }
        if (status == "submaximal-witness") {
            const IntClass C = to_integer_class(parse_divisor(w.at("class").get<std::string>()));
            if (C.points() != L.points() + 1 || !exceptional_numerics(C) || C.multiplicity(0) < 1) return false;
            if (orbit_membership(C) != OrbitVerdict::member) return false;
            Integer pairing = C.degree() * L.degree();
            for (std::size_t i = 0; i < L.points(); ++i) pairing -= C.multiplicity(i + 1) * L.multiplicity(i);
            Rational ratio(pairing, C.multiplicity(0));
            ratio.canonicalize();
            return value == QuadScalar(ratio) && value < cap;
        }
        if (status == "bound-only") return value == cap;
        return false;
    } catch (const std::exception&) {
        return false;
    }
}

bool verify_degree_certificate_json(const json& row) {
    try {
        const auto s = row.at("points").get<std::size_t>();
        const Integer d(row.at("degree").get<std::string>());
        const QuadScalar eps = quad_from_json(row.at("epsilon"));
        const Integer k = d * d - Integer(static_cast<unsigned long>(s));
        if (!(eps * eps == QuadScalar(k))) return false;
        std::vector<QuadScalar> m(s + 1, QuadScalar(1));
        m[0] = eps;
        const QuadClass F(QuadScalar(d), std::move(m));
        const json& w = row.at("decomposition");
        StandardDecomposition<QuadScalar> dec;
        for (const auto& c : w.at("coefficients")) dec.coefficients.push_back(quad_from_json(c));
        dec.order = w.at("order").get<std::vector<std::size_t>>();
        if (dec.order.size() != F.points()) return false;
        const bool irr_claim = row.at("irrationality").at("verdict").get<std::string>() == "irrational";
        return dec.nonnegative() && dec.recombine() == F && QuadScalar(d) > eps + QuadScalar(2) &&
               irr_claim == is_perfect_square(k).irrational;
    } catch (const std::exception&) {
        return false;
    }
}

// ---------------------------------------------------------------------------

std::string Table::text() const {
    std::vector<std::size_t> width(headers.size(), 0);
    for (std::size_t c = 0; c < headers.size(); ++c) width[c] = headers[c].size();
    for (const auto& row : rows)
        for (std::size_t c = 0; c < row.size() && c < width.size(); ++c) width[c] = std::max(width[c], row[c].size());
    std::ostringstream os;
    if (!title.empty()) os << title << '\n';
    auto line = [&](const std::vector<std::string>& cells) {
        for (std::size_t c = 0; c < width.size(); ++c) {
            const std::string cell = c < cells.size() ? cells[c] : "";
            os << cell << std::string(width[c] - cell.size(), ' ');
            if (c + 1 < width.size()) os << "  ";
        }
        os << '\n';
    };
    line(headers);
    std::vector<std::string> rule;
    for (auto w : width) rule.emplace_back(w, '-');
    line(rule);
    for (const auto& row : rows) line(row);
    return os.str();
}

std::string Table::csv() const {
    auto quote = [](const std::string& cell) {
        if (cell.find_first_of(",\"\n") == std::string::npos) return cell;
        std::string q = "\"";
        for (char ch : cell) q += ch == '"' ? std::string("\"\"") : std::string(1, ch);
        return q + "\"";
    };
    std::ostringstream os;
    auto line = [&](const std::vector<std::string>& cells) {
        for (std::size_t c = 0; c < cells.size(); ++c) os << (c ? "," : "") << quote(cells[c]);
        os << '\n';
    };
    line(headers);
    for (const auto& row : rows) line(row);
    return os.str();
}

Table case_table(const std::vector<CaseRow>& rows) {
    Table t{"Irrational Seshadri constants, case table", {"s", "n", "L", "L^2", "ample", "epsilon", "approx", "status", "irrational", "verified"}, {}};
    for (const auto& r : rows)
        t.rows.push_back({std::to_string(r.points), r.n ? std::to_string(*r.n) : "-", to_string(r.line_bundle),
                          r.self_intersection.get_str(), to_string(r.ampleness.kind), r.epsilon.value.to_string(),
                          approx_text(r.epsilon.value), to_string(r.epsilon.status), yes_no(r.irrationality.irrational),
                          yes_no(r.verified())});
    return t;
}

Table degree_table(const std::vector<std::pair<DegreeChoice, DegreeCertificate>>& rows) {
    Table t{"Degree choice certificates (L = dH - E1 - ... - Es)",
            {"s", "d", "d^2-s", "epsilon", "standard", "d>eps+2", "eps>=1", "nef", "irrational", "in window", "window identity", "verified"},
            {}};
    for (const auto& [c, r] : rows)
        t.rows.push_back({std::to_string(c.points), c.degree.get_str(), c.certificate.radicand.get_str(),
                          r.epsilon.to_string(), yes_no(r.standard), yes_no(r.degree_gap), yes_no(r.cap_at_least_one),
                          to_string(r.nef.kind), yes_no(r.irrationality.irrational),
                          c.window_degree ? "d=" + c.window_degree->get_str() : "-",
                          c.window_degree ? yes_no(c.window_identity) : "-", yes_no(r.verified())});
    return t;
}

Table boundary_table(const BoundaryReport& r) {
    Table t{"Rational versus irrational boundary", {"s", "uniform ample L checked", "all rational", "example L", "epsilon", "certified irrational"}, {}};
    std::size_t max_s = 0;
    for (const auto& row : r.few_points) max_s = std::max(max_s, row.points);
    for (std::size_t s = 0; s <= max_s && !r.few_points.empty(); ++s) {
        std::size_t count = 0;
        bool all = true;
        for (const auto& row : r.few_points)
            if (row.points == s) {
                ++count;
                all = all && row.rational;
            }
        t.rows.push_back({std::to_string(s), std::to_string(count), yes_no(all), "-", "-", "-"});
    }
    for (const auto& e : r.examples)
        t.rows.push_back({std::to_string(e.points), "-", "-", to_string(e.line_bundle), e.epsilon.value.to_string(),
                          yes_no(e.certified_irrational)});
    return t;
}

Table sweep_table(const std::vector<SweepRow>& rows, std::size_t s) {
    Table t{"L = dH - n(E1 + ... + E" + std::to_string(s) + ")", {"n", "d", "L^2", "epsilon", "approx"}, {}};
    for (const auto& r : rows)
        t.rows.push_back({std::to_string(r.n), r.degree ? r.degree->get_str() : "none",
                          r.self_intersection ? r.self_intersection->get_str() : "-",
                          r.epsilon ? r.epsilon->to_string() : "-", r.epsilon ? approx_text(*r.epsilon) : "-"});
    return t;
}

Table class_table(const ExceptionalClassSet& set) {
    Table t{"Exceptional classes on " + std::to_string(set.points()) + " points, degree <= " +
                std::to_string(set.max_degree()),
            {"degree", "multiplicities", "relabellings"},
            {}};
    for (const auto& c : set) {
        std::string m;
        for (std::size_t i = 0; i < c.points(); ++i) m += (i ? "," : "") + c.multiplicity(i).get_str();
        t.rows.push_back({c.degree().get_str(), m, permutation_count(c).get_str()});
    }
    return t;
}

Table seshadri_table(const SeshadriResult& r, const IntClass* line_bundle) {
    Table t{"Seshadri constant", {"field", "value"}, {}};
    if (line_bundle) t.rows.push_back({"L", to_string(*line_bundle)});
    t.rows.push_back({"epsilon", r.value.to_string()});
    t.rows.push_back({"approx", approx_text(r.value)});
    t.rows.push_back({"status", to_string(r.status)});
    t.rows.push_back({"conditional", yes_no(r.conditional)});
    t.rows.push_back({"cap", r.cap.to_string()});
    t.rows.push_back({"best ratio", r.best_ratio ? to_string(*r.best_ratio) : "-"});
    t.rows.push_back({"max degree", std::to_string(r.max_degree)});
    if (const auto* c = std::get_if<IntClass>(&r.witness)) t.rows.push_back({"witness class", to_string(*c)});
    if (std::holds_alternative<StandardDecomposition<QuadScalar>>(r.witness))
        t.rows.push_back({"witness", "standard form of " + to_string(r.tested)});
    if (const auto* l = std::get_if<CompleteListCheck>(&r.witness))
        t.rows.push_back({"witness", to_string(r.tested) + " nonnegative on all (-1)-classes of " +
                                         std::to_string(l->points) + " points"});
    if (r.ampleness) t.rows.push_back({"ampleness", to_string(r.ampleness->kind) + " (" + r.ampleness->evidence + ")"});
    return t;
}

Table nagata_table(const NagataReport& r) {
    Table t{"Nagata check on " + std::to_string(r.points) + " points", {"field", "value"}, {}};
    t.rows = {{"max degree", std::to_string(r.max_degree)},
              {"representatives", std::to_string(r.classes_checked)},
              {"orbit classes", r.orbit_classes_checked.get_str()},
              {"C.(3H - sum E) = 1 for all", yes_no(r.anticanonical_all_one)},
              {"C.(sqrt(s)H - sum E) >= 1 for all", yes_no(r.slack_all_at_least_one)},
              {"min C.(3H - sum E)", r.min_anticanonical.get_str()},
              {"min C.(sqrt(s)H - sum E)", r.min_slack.to_string()},
              {"eps(P2,O(1),s)", r.conditional_multi_point.to_string() + " (conditional)"}};
    return t;
}

Table degree_choice_table(const DegreeChoice& c) {
    Table t{"Degree choice for s = " + std::to_string(c.points), {"field", "value"}, {}};
    t.rows = {{"d", c.degree.get_str()},
              {"d^2 - s", c.certificate.radicand.get_str()},
              {"sqrt(d^2 - s)", c.certificate.irrational ? "irrational" : "rational"},
              {"bracket", to_json(c.certificate)["bracket"].get<std::string>()},
              {"d in 4d-3 <= s <= 6d-10", yes_no(c.in_window)},
              {"window degree", c.window_degree ? c.window_degree->get_str() : "-"},
              {"window identity", c.window_degree ? yes_no(c.window_identity) : "-"}};
    return t;
}

Table reduction_table(const Reduction& r, const IntClass& input) {
    Table t{"Cremona reduction of " + to_string(input), {"step", "move", "class"}, {}};
    IntClass cur = input;
    t.rows.push_back({"0", "-", to_string(cur)});
    for (std::size_t i = 0; i < r.trace.size(); ++i) {
        const auto& mv = r.trace[i];
        cur = cremona(cur, mv.i, mv.j, mv.k);
        t.rows.push_back({std::to_string(i + 1),
                          "(" + std::to_string(mv.i + 1) + "," + std::to_string(mv.j + 1) + "," + std::to_string(mv.k + 1) + ")",
                          to_string(cur)});
    }
    t.rows.push_back({"stop", to_string(r.stop), ""});
    return t;
}

}  // namespace seshadri
