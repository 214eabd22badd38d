#pragma once

#include <nlohmann/json_fwd.hpp>
#include <string>
#include <vector>

#include "ihull/bounds.hpp"
#include "ihull/model.hpp"

namespace ihull {

/// Instance file format: JSON with fields name, m, n, A (m rows of n
/// integers), b (m integers), optional c, optional var_upper_bounds.
/// Integers wider than 64 bits are written as decimal strings and accepted
/// either way; floating-point numbers are rejected rather than truncated.
Instance instance_from_json(const nlohmann::json& j);
nlohmann::json instance_to_json(const Instance& inst);
Instance read_instance_file(const std::string& path);
void write_instance_file(const Instance& inst, const std::string& path);

/// A machine-readable report: tagged fields with provenance, plus an
/// aligned text rendering. Reports round-trip through from_json.
struct ReportField {
  std::string tag;
  std::string value;
  std::string provenance;  // exact | rounded-up | rounded-down | monte-carlo
  bool applicable = true;
  std::string note;
};

struct Report {
  std::string command;
  std::string instance_name;
  std::vector<ReportField> fields;
  std::string extra_json;  // command-specific payload, serialized JSON or ""

  void add(const std::string& tag, const std::string& value,
           const std::string& prov, bool applicable = true,
           const std::string& note = "");
  void add_bound(const BoundEntry& e);
};

nlohmann::json report_to_json(const Report& r);
Report report_from_json(const nlohmann::json& j);
std::string report_to_text(const Report& r);
void write_report(const Report& r, const std::string& path);

/// Decimal string -> BigInt; rejects anything but an optional sign and
/// digits.
BigInt parse_bigint(const std::string& s);

}  // namespace ihull
