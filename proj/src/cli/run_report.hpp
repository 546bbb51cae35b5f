#pragma once

#include "qdiv/extended_real.hpp"

#include <json.hpp>

#include <string>

namespace qdiv::cli {

using Json = nlohmann::ordered_json;

// +inf as the string "inf", finite values as JSON numbers.
Json json_value(double x);
Json json_value(ExtendedReal x);

// Machine-readable record of one command. Serialized with a fixed key order:
// command, parameters, results, deviations, witnesses, passed, wall_time.
class RunReport {
 public:
  explicit RunReport(std::string command) : command_(std::move(command)) {}

  Json& parameters() { return parameters_; }
  Json& results() { return results_; }

  // Records "measured <relation> threshold" (relation "<=" or ">") and returns
  // whether it holds. A non-finite measurement passes only "> threshold".
  bool add_assertion(const std::string& name, double measured, const std::string& relation,
                     double threshold);
  void add_witness(Json witness) { witnesses_.push_back(std::move(witness)); }

  bool passed() const noexcept { return passed_; }
  const Json& deviations() const noexcept { return deviations_; }

  Json to_json(double wall_time) const;
  std::string serialize(double wall_time) const;

 private:
  std::string command_;
  Json parameters_ = Json::object();
  Json results_ = Json::object();
  Json deviations_ = Json::array();
  Json witnesses_ = Json::array();
  bool passed_ = true;
};

// Throws InputError when the text is not a report.
Json parse_report(const std::string& text);

}  // namespace qdiv::cli
