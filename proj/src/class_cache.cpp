#include "seshadri/class_cache.hpp"

#include <fstream>
#include <regex>
#include <system_error>
#include <unistd.h>

namespace seshadri {

using nlohmann::json;

namespace {

json integer_json(const Integer& x) {
    if (x.fits_slong_p()) return x.get_si();
    return x.get_str();
}

std::optional<Integer> integer_from_json(const json& j) {
    if (j.is_number_integer()) return Integer(j.get<long>());
    if (j.is_string()) {
        Integer z;
        if (z.set_str(j.get<std::string>(), 10) == 0) return z;
    }
    return std::nullopt;
}

}  // namespace

json to_json(const ExceptionalClassSet& set) {
    json classes = json::array();
    for (const auto& c : set) {
        json m = json::array();
        for (const auto& x : c.multiplicities()) m.push_back(integer_json(x));
        classes.push_back(json::array({integer_json(c.degree()), std::move(m)}));
    }
    return json{{"version", set.version()},
                {"points", set.points()},
                {"max_degree", set.max_degree()},
                {"provenance", to_string(set.provenance())},
                {"classes", std::move(classes)}};
}

std::optional<ExceptionalClassSet> exceptional_set_from_json(const json& doc) {
    try {
        if (!doc.is_object() || doc.value("version", -1) != exceptional_format_version) return std::nullopt;
        if (!doc.contains("points") || !doc["points"].is_number_unsigned()) return std::nullopt;
        if (!doc.contains("max_degree") || !doc["max_degree"].is_number_integer()) return std::nullopt;
        if (!doc.contains("classes") || !doc["classes"].is_array()) return std::nullopt;
        const auto points = doc["points"].get<std::size_t>();
        const int dmax = doc["max_degree"].get<int>();
        const Provenance prov = provenance_from_string(doc.value("provenance", std::string()));

        std::vector<IntClass> classes;
        for (const auto& entry : doc["classes"]) {
            if (!entry.is_array() || entry.size() != 2 || !entry[1].is_array()) return std::nullopt;
            auto d = integer_from_json(entry[0]);
            if (!d || entry[1].size() != points) return std::nullopt;
            std::vector<Integer> m;
            for (const auto& x : entry[1]) {
                auto v = integer_from_json(x);
                if (!v) return std::nullopt;
                m.push_back(*v);
            }
            IntClass c(*d, std::move(m));
            if (c.degree() < 0 || c.degree() > dmax || !exceptional_numerics(c)) return std::nullopt;
            if (!(sorted_descending(c) == c)) return std::nullopt;
            if (!classes.empty() && !(classes.back() < c)) return std::nullopt;
            classes.push_back(std::move(c));
        }
        return ExceptionalClassSet(points, dmax, prov, std::move(classes));
    } catch (const std::exception&) {
        return std::nullopt;
    }
}

std::filesystem::path cache_file_name(std::size_t points, int max_degree) {
    return "exceptional_t" + std::to_string(points) + "_d" + std::to_string(max_degree) + "_v" +
           std::to_string(exceptional_format_version) + ".json";
}

void write_cache_atomic(const std::filesystem::path& file, const ExceptionalClassSet& set) {
    std::filesystem::create_directories(file.parent_path().empty() ? "." : file.parent_path());
    auto tmp = file;
    tmp += ".tmp." + std::to_string(::getpid());
    {
        std::ofstream out(tmp, std::ios::trunc);
        if (!out) throw std::runtime_error("cannot write cache file " + tmp.string());
        out << to_json(set).dump() << '\n';
        if (!out) throw std::runtime_error("short write on cache file " + tmp.string());
    }
    std::filesystem::rename(tmp, file);
}

std::optional<ExceptionalClassSet> read_cache(const std::filesystem::path& file) {
    std::ifstream in(file);
    if (!in) return std::nullopt;
    json doc = json::parse(in, nullptr, /*allow_exceptions=*/false);
    if (doc.is_discarded()) return std::nullopt;
    return exceptional_set_from_json(doc);
}

ClassCatalog::ClassCatalog(EnumerationLimits limits, std::optional<std::filesystem::path> cache_dir)
    : limits_(limits), dir_(std::move(cache_dir)) {}

std::optional<ExceptionalClassSet> ClassCatalog::load_from_disk(std::size_t points, int dmax) {
    if (!dir_ || !std::filesystem::is_directory(*dir_)) return std::nullopt;
    const std::regex pattern("exceptional_t(\\d+)_d(\\d+)_v(\\d+)\\.json");
    std::optional<std::pair<int, std::filesystem::path>> best;
    for (const auto& entry : std::filesystem::directory_iterator(*dir_)) {
        std::smatch m;
        const std::string name = entry.path().filename().string();
        if (!std::regex_match(name, m, pattern)) continue;
        if (std::stoul(m[1]) != points || std::stoi(m[3]) != exceptional_format_version) continue;
        const int d = std::stoi(m[2]);
        if (d < dmax) continue;
        if (!best || d < best->first) best = std::pair{d, entry.path()};
    }
    if (!best) return std::nullopt;
    auto set = read_cache(best->second);
    if (!set || set->points() != points || set->max_degree() != best->first) {
        ++rebuilt_;
        std::error_code ec;
        std::filesystem::remove(best->second, ec);
        return std::nullopt;
    }
    return set->restricted(dmax);
}

const ExceptionalClassSet& ClassCatalog::get(std::size_t points, int dmax) {
    std::lock_guard lock(mutex_);
    const auto key = std::pair{points, dmax};
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;

    auto set = load_from_disk(points, dmax);
    if (!set) {
        set = enumerate_exceptionals({points}, dmax, limits_);
        if (dir_) write_cache_atomic(*dir_ / cache_file_name(points, dmax), *set);
    }
    return memo_.emplace(key, std::move(*set)).first->second;
}

}  // namespace seshadri
