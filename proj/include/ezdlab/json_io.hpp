#pragma once

#include "ezdlab/lab.hpp"

#include <json.hpp>

#include <string>

namespace ezdlab {

using Json = nlohmann::ordered_json;

inline constexpr int kSchemaVersion = 1;

Json to_json(const HilbertFn& h);
Json to_json(const EzdReport& r);
Json to_json(const GenericVerdict& v);
Json to_json(const WlpReport& w);
Json to_json(const SocleReport& s);
Json to_json(const YoshinoConditions& y);
Json to_json(const ClosedFormExample& ex);
Json to_json(const PairProbeReport& p);
Json to_json(const ScanConfig& cfg);

/// Instances are included only with `full`; timing only with `include_timing`
/// (it is the one field that differs between identical runs).
Json to_json(const ScanReport& report, bool full, bool include_timing = false);

/// One row per examined instance plus a header row.
std::string scan_csv(const ScanReport& report);

/// Wraps a payload as {"schema_version": 1, "command": ..., ...payload}.
Json envelope(const std::string& command, const Json& payload);

}  // namespace ezdlab
