#pragma once

#include <string>

#include "json.hpp"
#include "segre/corpus.hpp"
#include "segre/invariants.hpp"
#include "segre/maps.hpp"

namespace segre {

using Json = nlohmann::ordered_json;

Json toJson(const Verdict& v);
Json toJson(const RankResult& r);
Json toJson(const ClassificationReport& r);
Json toJson(const NondegResult& r);
Json toJson(const AuditReport& r);
Json toJson(const CorpusRun& r);

/// Human-readable rendering carrying exactly the same content as the JSON
/// tree: one `path: value` line per leaf, in document order.
std::string renderText(const Json& j);

}  // namespace segre
