#include "ihull/io.hpp"

#include <fstream>
#include <iomanip>
#include <nlohmann/json.hpp>
#include <sstream>

namespace ihull {

using nlohmann::json;

BigInt parse_bigint(const std::string& s) {
  if (s.empty()) throw ParseError("empty integer literal");
  size_t start = (s[0] == '-' || s[0] == '+') ? 1 : 0;
  if (start == s.size()) throw ParseError("sign without digits: '" + s + "'");
  for (size_t i = start; i < s.size(); ++i)
    if (!isdigit(static_cast<unsigned char>(s[i])))
      throw ParseError("not a decimal integer: '" + s + "'");
  return BigInt(s);
}

namespace {

BigInt json_to_bigint(const json& v, const std::string& where) {
  if (v.is_number_integer()) return BigInt(v.get<int64_t>());
  if (v.is_number_unsigned()) return BigInt(v.get<uint64_t>());
  if (v.is_string()) return parse_bigint(v.get<std::string>());
  if (v.is_number_float())
    throw ParseError(where +
                     ": integer too large for a JSON number or not integral; "
                     "quote it as a string");
  throw ParseError(where + ": expected an integer or decimal string");
}

json bigint_to_json(const BigInt& v) {
  static const BigInt lo = BigInt(std::numeric_limits<int64_t>::min());
  static const BigInt hi = BigInt(std::numeric_limits<int64_t>::max());
  if (v >= lo && v <= hi) return static_cast<int64_t>(v);
  return v.str();
}

IntVec json_to_vec(const json& v, int expect, const std::string& where) {
  if (!v.is_array())
    throw ParseError(where + ": expected an array of integers");
  if (expect >= 0 && static_cast<int>(v.size()) != expect)
    throw ParseError(where + ": expected " + std::to_string(expect) +
                     " entries, found " + std::to_string(v.size()));
  IntVec out;
  out.reserve(v.size());
  for (size_t i = 0; i < v.size(); ++i)
    out.push_back(json_to_bigint(v[i], where + "[" + std::to_string(i) + "]"));
  return out;
}

json vec_to_json(const IntVec& v) {
  json arr = json::array();
  for (const auto& x : v) arr.push_back(bigint_to_json(x));
  return arr;
}

}  // namespace

Instance instance_from_json(const json& j) {
  if (!j.is_object()) throw ParseError("instance: top level must be an object");
  Instance inst;
  inst.name = j.value("name", std::string("unnamed"));
  if (!j.contains("m") || !j.contains("n"))
    throw ParseError("instance: missing 'm' or 'n'");
  int m = j.at("m").get<int>();
  int n = j.at("n").get<int>();
  if (m < 1 || n < 1) throw ParseError("instance: m and n must be >= 1");
  if (!j.contains("A")) throw ParseError("instance: missing 'A'");
  const json& A = j.at("A");
  if (!A.is_array() || static_cast<int>(A.size()) != m)
    throw ParseError("instance: 'A' must have exactly " + std::to_string(m) +
                     " rows, found " +
                     std::to_string(A.is_array() ? A.size() : 0));
  std::vector<IntVec> rows;
  for (int i = 0; i < m; ++i)
    rows.push_back(json_to_vec(A[i], n, "A row " + std::to_string(i)));
  inst.A = IntMatrix::from_rows(rows);
  if (!j.contains("b")) throw ParseError("instance: missing 'b'");
  inst.b = json_to_vec(j.at("b"), m, "b");
  if (j.contains("c") && !j.at("c").is_null())
    inst.c = json_to_vec(j.at("c"), n, "c");
  if (j.contains("var_upper_bounds") && !j.at("var_upper_bounds").is_null())
    inst.var_upper_bounds = json_to_vec(j.at("var_upper_bounds"), n, "var_upper_bounds");
  try {
    inst.validate();
  } catch (const Error& e) {
    throw ParseError(std::string("instance: ") + e.what());
  }
  return inst;
}

json instance_to_json(const Instance& inst) {
  json j;
  j["name"] = inst.name;
  j["m"] = inst.m();
  j["n"] = inst.n();
  json A = json::array();
  for (int i = 0; i < inst.m(); ++i) {
    auto r = inst.A.row(i);
    A.push_back(vec_to_json(IntVec(r.begin(), r.end())));
  }
  j["A"] = A;
  j["b"] = vec_to_json(inst.b);
  if (inst.c) j["c"] = vec_to_json(*inst.c);
  if (inst.var_upper_bounds)
    j["var_upper_bounds"] = vec_to_json(*inst.var_upper_bounds);
  return j;
}

Instance read_instance_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open instance file: " + path);
  json j;
  try {
    j = json::parse(in);
  } catch (const json::parse_error& e) {
    throw ParseError(path + ": " + e.what());
  }
  return instance_from_json(j);
}

void write_instance_file(const Instance& inst, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw Error("cannot write instance file: " + path);
  out << instance_to_json(inst).dump(2) << "\n";
}

void Report::add(const std::string& tag, const std::string& value,
                 const std::string& prov, bool applicable,
                 const std::string& note) {
  fields.push_back({tag, value, prov, applicable, note});
}

void Report::add_bound(const BoundEntry& e) {
  if (!e.applicable) {
    fields.push_back({e.tag, "", provenance_name(e.prov), false, e.note});
    return;
  }
  std::string v = e.prov == Provenance::Exact ? e.exact : e.value.str(30);
  fields.push_back({e.tag, v, provenance_name(e.prov), true, e.note});
}

json report_to_json(const Report& r) {
  json j;
  j["command"] = r.command;
  j["instance"] = r.instance_name;
  json fields = json::array();
  for (const auto& f : r.fields) {
    json e;
    e["tag"] = f.tag;
    e["value"] = f.value;
    e["provenance"] = f.provenance;
    e["applicable"] = f.applicable;
    if (!f.note.empty()) e["note"] = f.note;
    fields.push_back(e);
  }
  j["fields"] = fields;
  if (!r.extra_json.empty()) j["extra"] = json::parse(r.extra_json);
  return j;
}

Report report_from_json(const json& j) {
  Report r;
  r.command = j.value("command", "");
  r.instance_name = j.value("instance", "");
  for (const auto& e : j.value("fields", json::array())) {
    ReportField f;
    f.tag = e.value("tag", "");
    f.value = e.value("value", "");
    f.provenance = e.value("provenance", "");
    f.applicable = e.value("applicable", true);
    f.note = e.value("note", "");
    r.fields.push_back(f);
  }
  if (j.contains("extra")) r.extra_json = j.at("extra").dump();
  return r;
}

std::string report_to_text(const Report& r) {
  std::ostringstream os;
  os << "# " << r.command;
  if (!r.instance_name.empty()) os << " : " << r.instance_name;
  os << "\n";
  size_t tag_w = 4, val_w = 5;
  for (const auto& f : r.fields) {
    tag_w = std::max(tag_w, f.tag.size());
    val_w = std::max(val_w, f.applicable ? f.value.size() : 1);
  }
  for (const auto& f : r.fields) {
    os << std::left << std::setw(static_cast<int>(tag_w) + 2) << f.tag;
    if (f.applicable) {
      os << std::setw(static_cast<int>(val_w) + 2) << f.value << "["
         << f.provenance << "]";
      if (!f.note.empty()) os << "  " << f.note;
    } else {
      os << std::setw(static_cast<int>(val_w) + 2) << "-"
         << "[n/a] " << f.note;
    }
    os << "\n";
  }
  return os.str();
}

void write_report(const Report& r, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw Error("cannot write report file: " + path);
  out << report_to_json(r).dump(2) << "\n";
}

}  // namespace ihull
