#pragma once

#include "seshadri/exceptional.hpp"

#include <json.hpp>

#include <filesystem>
#include <map>
#include <mutex>
#include <optional>
#include <utility>

namespace seshadri {

/// {version, points, max_degree, provenance, classes: [[d, [m...]], ...]}.
nlohmann::json to_json(const ExceptionalClassSet& set);

/**
 * Parses and validates a cache document: version and shape, every member
 * a (-1)-class within the degree bound, canonical order, no duplicates.
 * Returns nullopt on any defect.
 */
std::optional<ExceptionalClassSet> exceptional_set_from_json(const nlohmann::json& doc);

std::filesystem::path cache_file_name(std::size_t points, int max_degree);

/// Temp file in the same directory, then rename over the target.
void write_cache_atomic(const std::filesystem::path& file, const ExceptionalClassSet& set);
std::optional<ExceptionalClassSet> read_cache(const std::filesystem::path& file);

/**
 * Memoised access to enumerations keyed by (points, dmax). With a cache
 * directory, a file for the same points and a larger bound is filtered
 * down; missing or corrupt files are recomputed and rewritten.
 */
class ClassCatalog {
public:
    explicit ClassCatalog(EnumerationLimits limits = {}, std::optional<std::filesystem::path> cache_dir = {});

    const ExceptionalClassSet& get(std::size_t points, int dmax);
    const EnumerationLimits& limits() const { return limits_; }

    /// Files that failed validation and were rebuilt since construction.
    std::size_t rebuilt_files() const { return rebuilt_; }

private:
    std::optional<ExceptionalClassSet> load_from_disk(std::size_t points, int dmax);

    EnumerationLimits limits_;
    std::optional<std::filesystem::path> dir_;
    std::mutex mutex_;
    std::map<std::pair<std::size_t, int>, ExceptionalClassSet> memo_;
    std::size_t rebuilt_ = 0;
};

}  // namespace seshadri
