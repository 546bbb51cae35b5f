#include "cli/run_report.hpp"

#include "cli/errors.hpp"

#include <cmath>

namespace qdiv::cli {

Json json_value(double x) {
  if (std::isinf(x) && x > 0) return "inf";
  if (!std::isfinite(x)) return nullptr;
  return x;
}

Json json_value(ExtendedReal x) { return json_value(x.to_double()); }

bool RunReport::add_assertion(const std::string& name, double measured,
                              const std::string& relation, double threshold) {
  bool ok = false;
  if (relation == "<=") {
    ok = std::isfinite(measured) && measured <= threshold;
  } else if (relation == ">") {
    ok = measured > threshold;
  } else {
    throw UsageError("assertion relation must be '<=' or '>'");
  }
  Json entry = Json::object();
  entry["assertion"] = name;
  entry["measured"] = json_value(measured);
  entry["relation"] = relation;
  entry["threshold"] = json_value(threshold);
  entry["passed"] = ok;
  deviations_.push_back(std::move(entry));
  passed_ = passed_ && ok;
  return ok;
}

Json RunReport::to_json(double wall_time) const {
  Json doc = Json::object();
  doc["command"] = command_;
  doc["parameters"] = parameters_;
  doc["results"] = results_;
  doc["deviations"] = deviations_;
  doc["witnesses"] = witnesses_;
  doc["passed"] = passed_;
  doc["wall_time"] = wall_time;
  return doc;
}

std::string RunReport::serialize(double wall_time) const { return to_json(wall_time).dump(2) + "\n"; }

Json parse_report(const std::string& text) {
  Json doc;
  try {
    doc = Json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw InputError(std::string("malformed report: ") + e.what());
  }
  for (const char* key :
       {"command", "parameters", "results", "deviations", "witnesses", "passed", "wall_time"}) {
    if (!doc.contains(key)) throw InputError(std::string("report lacks key '") + key + "'");
  }
  return doc;
}

}  // namespace qdiv::cli
