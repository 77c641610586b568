#include "carlitz/cache.hpp"

#include <cstdlib>
#include <fstream>

#include "carlitz/serialize.hpp"

namespace carlitz {

std::string cache_key(const FieldCtx& F, const std::string& modulus_text, bool with_oracle) {
    std::string key = "schema=" + std::to_string(kSchemaVersion);
    key += "|p=" + std::to_string(F.p());
    key += "|n=" + std::to_string(F.n());
    key += "|def=";
    for (long long c : F.defining_poly()) key += std::to_string(c) + ",";
    key += "|m=" + modulus_text;
    key += "|oracle=" + std::to_string(with_oracle ? 1 : 0);
    return key;
}

std::filesystem::path cache_path(const std::filesystem::path& dir, const std::string& key) {
    // FNV-1a, 64 bit: deterministic across runs and platforms
    std::uint64_t h = 1469598103934665603ULL;
    for (unsigned char c : key) {
        h ^= c;
        h *= 1099511628211ULL;
    }
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
    return dir / (std::string(buf) + ".json");
}

std::filesystem::path default_cache_dir() {
    const char* env = std::getenv("CARLITZ_CACHE_DIR");
    return env ? std::filesystem::path(env) : std::filesystem::path();
}

std::optional<nlohmann::json> cache_load(const std::filesystem::path& file) {
    std::ifstream in(file);
    if (!in) return std::nullopt;
    nlohmann::json j;
    try {
        in >> j;
    } catch (const nlohmann::json::exception&) {
        return std::nullopt; // unreadable cache entries are treated as misses
    }
    return j;
}

void cache_store(const std::filesystem::path& file, const nlohmann::json& j) {
    std::filesystem::create_directories(file.parent_path());
    std::filesystem::path tmp = file;
    tmp += ".tmp";
    {
        std::ofstream out(tmp, std::ios::trunc);
        if (!out) throw UserError("cannot write cache file: " + tmp.string());
        out << json_dump(j);
    }
    std::filesystem::rename(tmp, file);
}

} // namespace carlitz
