#include "dcm/serialize.hpp"

#include <cmath>
#include <fstream>
#include <limits>
#include <ostream>
#include <sstream>

#include "dcm/csv.hpp"

namespace dcm {

namespace {

nlohmann::ordered_json measure_value(double v) {
  if (std::isfinite(v)) return v;
  return format_double(v);
}

double value_from_json(const nlohmann::ordered_json& j) {
  if (j.is_string()) {
    const std::string s = j.get<std::string>();
    if (s == "inf") return std::numeric_limits<double>::infinity();
    if (s == "-inf") return -std::numeric_limits<double>::infinity();
    if (s == "nan") return std::numeric_limits<double>::quiet_NaN();
    throw error("unexpected measure string '" + s + "'");
  }
  return j.get<double>();
}

std::string csv_name(const std::string& s) {
  std::string out = s;
  for (char& c : out)
    if (c == ',' || c == '"' || c == '\n' || c == '\r') c = '_';
  return out;
}

}  // namespace

nlohmann::ordered_json profile_to_json(
    const ComplexityProfile& p, const std::map<std::string, std::vector<std::string>>* encodings) {
  nlohmann::ordered_json j;
  j["name"] = p.name;
  j["n"] = p.n;
  j["d"] = p.d;
  j["seed"] = p.seed;
  if (!p.group.empty()) j["group"] = p.group;
  j["solver"] = p.solver;
  j["rng"] = p.rng;
  nlohmann::ordered_json m;
  for (std::size_t i = 0; i < kMeasureNames.size(); ++i)
    m[kMeasureNames[i]] = measure_value(p.values[i]);
  j["measures"] = std::move(m);
  j["flags"] = p.flags;
  if (encodings && !encodings->empty()) {
    nlohmann::ordered_json e;
    for (const auto& [column, mapping] : *encodings) e[column] = mapping;
    j["encodings"] = std::move(e);
  }
  return j;
}

ComplexityProfile profile_from_json(const nlohmann::ordered_json& j) {
  ComplexityProfile p;
  p.name = j.at("name").get<std::string>();
  p.n = j.at("n").get<std::size_t>();
  p.d = j.at("d").get<std::size_t>();
  p.seed = j.value("seed", std::uint64_t{0});
  p.group = j.value("group", std::string{});
  p.solver = j.value("solver", std::string{});
  p.rng = j.value("rng", std::string{});
  const auto& m = j.at("measures");
  for (std::size_t i = 0; i < kMeasureNames.size(); ++i)
    p.values[i] = value_from_json(m.at(kMeasureNames[i]));
  if (j.contains("flags")) p.flags = j.at("flags").get<std::vector<std::string>>();
  return p;
}

void write_profiles_csv(const ProfileTable& table, std::ostream& out) {
  out << kProfileCsvHeader << "\n";
  for (const auto& p : table.rows) {
    out << csv_name(p.name) << "," << p.n << "," << p.d;
    for (std::size_t i = 0; i < kMeasureNames.size(); ++i) out << "," << format_double(p.values[i]);
    out << ",";
    for (std::size_t i = 0; i < p.flags.size(); ++i) out << (i ? ";" : "") << p.flags[i];
    out << "\n";
  }
}

void write_profiles_jsonl(const ProfileTable& table, std::ostream& out) {
  for (const auto& p : table.rows) out << profile_to_json(p).dump() << "\n";
}

ProfileTable read_profiles(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw io_error("cannot open '" + path + "'");
  std::string first_line;
  if (!std::getline(in, first_line)) throw io_error(path + ": empty file");

  ProfileTable table;
  std::string trimmed = first_line;
  while (!trimmed.empty() && (trimmed.back() == '\r' || trimmed.back() == ' ')) trimmed.pop_back();
  const bool jsonl = !trimmed.empty() && trimmed.front() == '{';

  if (jsonl) {
    std::string line = first_line;
    std::size_t line_no = 1;
    do {
      if (!line.empty() && line.front() == '{') {
        try {
          table.rows.push_back(profile_from_json(nlohmann::ordered_json::parse(line)));
        } catch (const std::exception& e) {
          throw io_error(path + ": line " + std::to_string(line_no) + ": " + e.what());
        }
      }
      ++line_no;
    } while (std::getline(in, line));
    return table;
  }

  if (trimmed != kProfileCsvHeader)
    throw io_error(path + ": expected profile header '" + std::string(kProfileCsvHeader) + "'");
  std::string line;
  std::size_t line_no = 1;
  while (std::getline(in, line)) {
    ++line_no;
    while (!line.empty() && (line.back() == '\r' || line.back() == ' ')) line.pop_back();
    if (line.empty()) continue;
    std::vector<std::string> fields;
    std::stringstream ss(line);
    std::string field;
    while (std::getline(ss, field, ',')) fields.push_back(field);
    if (!line.empty() && line.back() == ',') fields.push_back("");
    if (fields.size() != 16)
      throw io_error(path + ": line " + std::to_string(line_no) + ": expected 16 fields, got " +
                     std::to_string(fields.size()));
    ComplexityProfile p;
    p.name = fields[0];
    const auto n = parse_double(fields[1]);
    const auto d = parse_double(fields[2]);
    if (!n || !d)
      throw io_error(path + ": line " + std::to_string(line_no) + ": bad n/d fields");
    p.n = static_cast<std::size_t>(*n);
    p.d = static_cast<std::size_t>(*d);
    for (std::size_t i = 0; i < 12; ++i) {
      const auto v = parse_double(fields[3 + i]);
      if (!v)
        throw io_error(path + ": line " + std::to_string(line_no) + ": bad value '" +
                       fields[3 + i] + "' for " + kMeasureNames[i]);
      p.values[i] = *v;
    }
    if (!fields[15].empty()) {
      std::stringstream fs(fields[15]);
      std::string flag;
      while (std::getline(fs, flag, ';')) p.flags.push_back(flag);
    }
    table.rows.push_back(std::move(p));
  }
  return table;
}

}  // namespace dcm
