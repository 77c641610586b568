#ifndef CARLITZ_CACHE_HPP
#define CARLITZ_CACHE_HPP

#include <filesystem>
#include <optional>
#include <string>

#include <json.hpp>

#include "carlitz/fq.hpp"

namespace carlitz {

/// Canonical cache key for one (field, modulus, oracle-flag) computation.
/// Includes p, n, the defining polynomial, the canonical modulus text and
/// the schema version, so any change invalidates.
std::string cache_key(const FieldCtx& F, const std::string& modulus_text, bool with_oracle);

/// File path inside `dir` for a key (FNV-1a hash, stable across runs).
std::filesystem::path cache_path(const std::filesystem::path& dir, const std::string& key);

/// Default cache directory: $CARLITZ_CACHE_DIR, or empty (no caching).
std::filesystem::path default_cache_dir();

std::optional<nlohmann::json> cache_load(const std::filesystem::path& file);
/// Atomic store: write to a temporary file, then rename into place.
void cache_store(const std::filesystem::path& file, const nlohmann::json& j);

} // namespace carlitz

#endif
