#ifndef CARLITZ_SERIALIZE_HPP
#define CARLITZ_SERIALIZE_HPP

#include <string>

#include <json.hpp>

#include "carlitz/zeta.hpp"

namespace carlitz {

inline constexpr int kSchemaVersion = 1;

/// JSON form of a report.  Polynomials are integer-coefficient arrays,
/// lowest degree first; integers that do not fit in 64 bits are emitted as
/// decimal strings (the deserializer accepts both forms).
nlohmann::json report_to_json(const FieldCtx& F, const ZetaReport& r);
ZetaReport report_from_json(const nlohmann::json& j);
/// Rebuilds the field a serialized report was computed over.
FieldCtx field_from_json(const nlohmann::json& j);

std::string report_to_text(const FieldCtx& F, const ZetaReport& r);

/// Deterministic dump used everywhere (sorted keys, fixed indentation), so
/// cache hits are byte-identical with cold runs.
std::string json_dump(const nlohmann::json& j);

} // namespace carlitz

#endif
