// Command-line front end: enumeration, reduction, Seshadri constants and the case tables.

#include "seshadri/report.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <cstdlib>
#include <ctime>
#include <fstream>
#include <iostream>
#include <set>

namespace {

using namespace seshadri;
using nlohmann::json;

enum ExitCode : int { ok = 0, usage = 1, verification_failed = 2, resource_cap = 3 };

struct Options {
    std::size_t points = 0;
    bool points_given = false;
    int max_degree = default_max_degree;
    std::string divisor;
    long n = 0, n_from = 0, n_to = 0;
    std::string cache;
    std::string format = "text";
    std::string out;
    bool no_timestamp = false;
    bool oracle = false;
    std::size_t max_classes = EnumerationLimits{}.max_classes;
    std::size_t max_iterations = default_reduction_cap;
    unsigned threads = 1;
};

struct Output {
    json report;
    std::vector<Table> tables;
    bool verified = true;
};

std::string timestamp() {
    const std::time_t now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
    char buf[32];
    std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", std::gmtime(&now));
    return buf;
}

std::optional<std::filesystem::path> cache_dir(const Options& o) {
    if (!o.cache.empty()) return std::filesystem::path(o.cache);
    if (const char* env = std::getenv("SESHADRI_CACHE_DIR"); env && *env) return std::filesystem::path(env);
    return std::nullopt;
}

void emit(const Options& o, const std::string& command, const Output& out, bool partial, const std::string& error) {
    std::string body;
    if (o.format == "json" || partial) {
        json doc{{"command", command}, {"partial", partial}, {"report", out.report}};
        if (!error.empty()) doc["error"] = error;
        if (!o.no_timestamp) doc["generated_at"] = timestamp();
        body = doc.dump(2) + "\n";
    } else {
        for (std::size_t i = 0; i < out.tables.size(); ++i) {
            if (i) body += "\n";
            body += o.format == "csv" ? out.tables[i].csv() : out.tables[i].text();
        }
    }
    if (o.out.empty()) {
        std::cout << body;
    } else {
        std::ofstream f(o.out, std::ios::trunc);
        f << body;
    }
}

Output run_enumerate(const Options& o, ClassCatalog& catalog) {
    const ExceptionalClassSet& set = catalog.get(o.points, o.max_degree);
    Output out;
    std::optional<ExceptionalClassSet> oracle;
    if (o.oracle || o.max_degree <= 10) oracle = diophantine_oracle({o.points}, o.max_degree, catalog.limits());
    out.report = enumeration_report(set, oracle ? &*oracle : nullptr);
    out.verified = !oracle || *oracle == set;
    Table t = class_table(set);
    t.title += " | representatives " + std::to_string(set.size()) + ", classes " + set.full_count().get_str() +
               (oracle ? std::string(", oracle ") + (out.verified ? "agrees" : "DISAGREES") : "");
    out.tables.push_back(std::move(t));
    return out;
}

Output run_reduce(const Options& o) {
    const IntClass D = to_integer_class(parse_divisor(o.divisor));
    const Reduction r = reduce_to_standard(D, o.max_iterations);
    if (r.stop == ReductionStop::inconclusive) throw ResourceCapExceeded("reduction hit the iteration cap");
    Output out;
    out.report = to_json(r, D);
    out.tables.push_back(reduction_table(r, D));
    return out;
}

IntClass default_line_bundle(const Options& o) {
    static const std::set<std::size_t> table{9, 10, 11, 12, 15, 16};
    if (o.n > 0 || table.count(o.points))
        return case_line_bundle(o.points, o.n > 0 ? std::optional<long>(o.n) : std::nullopt);
    if (o.points >= 13) return IntClass::uniform(o.points, choose_degree(o.points).degree, Integer(1));
    throw CLI::ValidationError("--class", "no default line bundle for this point count; pass --class");
}

Output run_seshadri(const Options& o, ClassCatalog& catalog) {
    IntClass L;
    if (!o.divisor.empty()) {
        L = to_integer_class(parse_divisor(o.divisor));
        if (o.points_given && L.points() != o.points)
            throw CLI::ValidationError("--class", "class has " + std::to_string(L.points()) + " multiplicities, --points is " +
                                                      std::to_string(o.points));
    } else {
        if (!o.points_given) throw CLI::ValidationError("seshadri", "needs --class or --points");
        L = default_line_bundle(o);
    }
    const SeshadriResult r = seshadri_single(L, catalog, o.max_degree);
    Output out;
    out.report = to_json(r, "seshadri-single", &L);
    out.verified = verify_seshadri_json(out.report);
    out.tables.push_back(seshadri_table(r, &L));
    return out;
}

Output run_multi(const Options& o, ClassCatalog& catalog) {
    const SeshadriResult r = seshadri_multi(o.points, catalog, o.max_degree);
    Output out;
    out.report = to_json(r, "seshadri-multi", nullptr);
    out.tables.push_back(seshadri_table(r, nullptr));
    return out;
}

Output run_choose(const Options& o) {
    const DegreeChoice c = choose_degree(o.points);
    Output out;
    out.report = to_json(c);
    out.verified = c.certificate.verify() && c.certificate.irrational && (o.points < 17 || c.window_identity);
    out.tables.push_back(degree_choice_table(c));
    return out;
}

Output run_tables(const Options& o, ClassCatalog& catalog) {
    const SummaryTables t = summary_tables(catalog, o.max_degree);
    Output out;
    out.report = to_json(t);
    out.verified = t.verified();
    for (const auto& row : out.report["case_table"]) out.verified = out.verified && verify_seshadri_json(row["epsilon"]);
    for (const auto& row : out.report["degree_table"])
        out.verified = out.verified && verify_degree_certificate_json(row["certificate"]);
    out.tables.push_back(case_table(t.case_table));
    out.tables.push_back(degree_table(t.degree_table));
    out.tables.push_back(boundary_table(t.boundary));
    return out;
}

Output run_nagata(const Options& o, ClassCatalog& catalog) {
    const NagataReport r = nagata_check(o.points, catalog, o.max_degree);
    Output out;
    out.report = to_json(r);
    out.verified = r.verified();
    out.tables.push_back(nagata_table(r));
    return out;
}

Output run_sweep(const Options& o, ClassCatalog& catalog) {
    const long from = o.n_from > 0 ? o.n_from : o.n;
    const long to = o.n_to > 0 ? o.n_to : from;
    if (from < 1) throw CLI::ValidationError("sweep", "needs --n or --n-from/--n-to");
    const auto rows = sweep_Ldn(o.points, from, to, catalog, o.max_degree);
    Output out;
    out.report = to_json(rows, o.points);
    out.tables.push_back(sweep_table(rows, o.points));
    return out;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact intersection theory and Seshadri constants on blow-ups of the plane"};
    app.require_subcommand(1);
    app.fallthrough();
    Options o;

    app.add_option("--max-degree", o.max_degree, "Degree bound for exceptional classes")->check(CLI::NonNegativeNumber);
    app.add_option("--cache", o.cache, "Cache directory (default: $SESHADRI_CACHE_DIR, else none)");
    app.add_option("--format", o.format, "Output format")->check(CLI::IsMember({"json", "csv", "text"}));
    app.add_option("--out", o.out, "Write the report to a file");
    app.add_flag("--no-timestamp", o.no_timestamp, "Omit the generated_at field");
    app.add_option("--max-classes", o.max_classes, "Class-count cap for enumeration")->check(CLI::PositiveNumber);
    app.add_option("--max-iterations", o.max_iterations, "Cremona reduction cap")->check(CLI::PositiveNumber);
    app.add_option("--threads", o.threads, "Enumeration threads (0 = all cores)");

    auto points_opt = [&](CLI::App* sub, bool required) {
        auto* opt = sub->add_option("--points", o.points, "Number of blown-up points");
        if (required) opt->required();
        return opt;
    };
    auto* enumerate = app.add_subcommand("enumerate", "List (-1)-classes up to the degree bound");
    points_opt(enumerate, true);
    enumerate->add_flag("--oracle", o.oracle, "Cross-check with the Diophantine oracle at any bound");

    auto* reduce = app.add_subcommand("reduce", "Cremona-reduce a class");
    reduce->add_option("--class", o.divisor, "Divisor d;m1,...,mt")->required();

    auto* single = app.add_subcommand("seshadri", "Single-point Seshadri constant at a very general point");
    points_opt(single, false);
    single->add_option("--class", o.divisor, "Line bundle d;m1,...,ms");
    single->add_option("--n", o.n, "Parameter n for the s = 9 and s = 16 cases");

    auto* multi = app.add_subcommand("multi-seshadri", "eps(P2, O(1), s very general points)");
    points_opt(multi, true)->check(CLI::PositiveNumber);

    auto* choose = app.add_subcommand("choose-d", "Degree with 4d-3 <= s < d^2 and d^2-s not a square");
    points_opt(choose, true);

    auto* tables = app.add_subcommand("paper-tables", "Case table, degree-choice table and boundary summary");

    auto* nagata = app.add_subcommand("nagata", "Check C.(3H - sum E) = 1 and C.(sqrt(s)H - sum E) >= 1");
    points_opt(nagata, true);

    auto* sweep = app.add_subcommand("sweep", "Search d for L = dH - n(sum E) with irrational certified epsilon");
    points_opt(sweep, true);
    sweep->add_option("--n", o.n, "Single n");
    sweep->add_option("--n-from", o.n_from, "First n");
    sweep->add_option("--n-to", o.n_to, "Last n");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? ok : usage;
    }
    o.points_given = single->count("--points") > 0;

    const std::string command = app.get_subcommands().front()->get_name();
    EnumerationLimits limits;
    limits.max_classes = o.max_classes;
    limits.max_reduction_iterations = o.max_iterations;
    limits.threads = o.threads;

    Output out;
    try {
        ClassCatalog catalog(limits, cache_dir(o));
        if (command == "enumerate") out = run_enumerate(o, catalog);
        else if (command == "reduce") out = run_reduce(o);
        else if (command == "seshadri") out = run_seshadri(o, catalog);
        else if (command == "multi-seshadri") out = run_multi(o, catalog);
        else if (command == "choose-d") out = run_choose(o);
        else if (command == "paper-tables") out = run_tables(o, catalog);
        else if (command == "nagata") out = run_nagata(o, catalog);
        else if (command == "sweep") out = run_sweep(o, catalog);
        (void)tables;
    } catch (const ResourceCapExceeded& e) {
        emit(o, command, out, true, e.what());
        std::cerr << "resource cap: " << e.what() << '\n';
        return resource_cap;
    } catch (const CLI::Error& e) {
        std::cerr << e.what() << "\n\n" << app.get_subcommand(command)->help();
        return usage;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n\n" << app.get_subcommand(command)->help();
        return usage;
    }

    emit(o, command, out, false, "");
    if (!out.verified) {
        std::cerr << "verification failed\n";
        return verification_failed;
    }
    return ok;
}
