#include "dcm/csv.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <set>
#include <sstream>

namespace dcm {

std::string format_double(double v) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof(buf), v, std::chars_format::general, 17);
  return std::string(buf, res.ptr);
}

std::optional<double> parse_double(const std::string& text) {
  if (text.empty()) return std::nullopt;
  const char* begin = text.data();
  const char* end = begin + text.size();
  double value = 0.0;
  const auto res = std::from_chars(begin, end, value);
  if (res.ec != std::errc() || res.ptr != end) return std::nullopt;
  return value;
}

namespace {

std::string trim(const std::string& s) {
  std::size_t a = 0;
  std::size_t b = s.size();
  while (a < b && (s[a] == ' ' || s[a] == '\t' || s[a] == '\r')) ++a;
  while (b > a && (s[b - 1] == ' ' || s[b - 1] == '\t' || s[b - 1] == '\r')) --b;
  return s.substr(a, b - a);
}

std::vector<std::string> split_line(const std::string& line) {
  std::vector<std::string> fields;
  std::string field;
  std::stringstream ss(line);
  while (std::getline(ss, field, ',')) fields.push_back(trim(field));
  if (!line.empty() && line.back() == ',') fields.push_back("");
  return fields;
}

std::string sanitize(const std::string& s) {
  std::string out = s;
  for (char& c : out)
    if (c == ',' || c == '"' || c == '\n' || c == '\r') c = '_';
  return out;
}

}  // namespace

RawTable parse_csv(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw io_error("cannot open '" + path + "'");
  RawTable table;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (trim(line).empty()) continue;
    auto fields = split_line(line);
    if (table.columns.empty()) {
      table.columns = std::move(fields);
    } else {
      if (fields.size() != table.columns.size())
        throw io_error(path + ": line " + std::to_string(line_no) + ": expected " +
                       std::to_string(table.columns.size()) + " fields, got " +
                       std::to_string(fields.size()));
      table.cells.push_back(std::move(fields));
    }
  }
  if (table.columns.empty()) throw io_error(path + ": empty file");
  if (table.cells.empty()) throw io_error(path + ": no data rows");
  return table;
}

std::vector<int> encode_categoricals(const std::vector<std::string>& values,
                                     std::vector<std::string>& mapping) {
  if (values.empty()) throw error("cannot encode an empty column");
  mapping.clear();
  std::vector<int> codes;
  codes.reserve(values.size());
  for (const auto& v : values) {
    const auto it = std::find(mapping.begin(), mapping.end(), v);
    if (it == mapping.end()) {
      codes.push_back(static_cast<int>(mapping.size()));
      mapping.push_back(v);
    } else {
      codes.push_back(static_cast<int>(it - mapping.begin()));
    }
  }
  return codes;
}

LoadedTable load_table(const std::string& path, const std::string& label_column, bool encode) {
  const RawTable raw = parse_csv(path);

  std::size_t label_idx = raw.columns.size();
  for (std::size_t c = 0; c < raw.columns.size(); ++c)
    if (raw.columns[c] == label_column) {
      label_idx = c;
      break;
    }
  if (label_idx == raw.columns.size()) {
    if (const auto as_index = parse_double(label_column);
        as_index && *as_index >= 0 && *as_index < static_cast<double>(raw.columns.size()) &&
        *as_index == std::floor(*as_index)) {
      label_idx = static_cast<std::size_t>(*as_index);
    } else {
      std::string available;
      for (const auto& c : raw.columns) available += (available.empty() ? "" : ", ") + c;
      throw io_error(path + ": label column '" + label_column +
                     "' not found; available: " + available);
    }
  }

  LoadedTable out;
  const std::size_t n = raw.cells.size();
  const std::size_t d = raw.columns.size() - 1;
  if (d == 0) throw io_error(path + ": no feature columns besides the label");
  out.rows.assign(n, std::vector<double>(d));
  out.labels.reserve(n);
  for (std::size_t r = 0; r < n; ++r) out.labels.push_back(raw.cells[r][label_idx]);

  std::size_t f = 0;
  for (std::size_t c = 0; c < raw.columns.size(); ++c) {
    if (c == label_idx) continue;
    out.feature_names.push_back(raw.columns[c]);
    bool numeric = true;
    std::size_t first_bad = 0;
    for (std::size_t r = 0; r < n; ++r) {
      if (!parse_double(raw.cells[r][c])) {
        numeric = false;
        first_bad = r;
        break;
      }
    }
    if (numeric) {
      for (std::size_t r = 0; r < n; ++r) out.rows[r][f] = *parse_double(raw.cells[r][c]);
    } else if (encode) {
      std::vector<std::string> column(n);
      for (std::size_t r = 0; r < n; ++r) column[r] = raw.cells[r][c];
      std::vector<std::string> mapping;
      const auto codes = encode_categoricals(column, mapping);
      for (std::size_t r = 0; r < n; ++r) out.rows[r][f] = static_cast<double>(codes[r]);
      out.encodings[raw.columns[c]] = std::move(mapping);
    } else {
      throw io_error(path + ": line " + std::to_string(first_bad + 2) + ": non-numeric cell '" +
                     raw.cells[first_bad][c] + "' in column '" + raw.columns[c] +
                     "' (enable --encode to code categorical features)");
    }
    ++f;
  }
  return out;
}

Dataset make_pair_dataset(const LoadedTable& table, const std::string& a, const std::string& b,
                          const std::string& name) {
  std::vector<std::vector<double>> rows;
  std::vector<std::string> labels;
  for (std::size_t r = 0; r < table.rows.size(); ++r) {
    if (table.labels[r] == a || table.labels[r] == b) {
      rows.push_back(table.rows[r]);
      labels.push_back(table.labels[r]);
    }
  }
  try {
    return validate_dataset(rows, labels, name);
  } catch (const error& e) {
    throw io_error(name + ": " + e.what());
  }
}

std::vector<Dataset> all_pairs(const LoadedTable& table, const std::string& base_name) {
  const std::set<std::string> distinct(table.labels.begin(), table.labels.end());
  if (distinct.size() < 2)
    throw io_error(base_name + ": need at least 2 distinct labels, found " +
                   std::to_string(distinct.size()));
  const std::vector<std::string> labels(distinct.begin(), distinct.end());
  std::vector<Dataset> out;
  for (std::size_t i = 0; i < labels.size(); ++i)
    for (std::size_t j = i + 1; j < labels.size(); ++j)
      out.push_back(make_pair_dataset(table, labels[i], labels[j],
                                      base_name + ":" + sanitize(labels[i]) + "_vs_" +
                                          sanitize(labels[j])));
  return out;
}

Dataset zscore_dataset(const Dataset& ds) {
  const std::size_t n = ds.size();
  const std::size_t d = ds.dim();
  std::vector<double> mean(d, 0.0), sd(d, 0.0);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t f = 0; f < d; ++f) mean[f] += ds.point(i)[f];
  for (std::size_t f = 0; f < d; ++f) mean[f] /= static_cast<double>(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t f = 0; f < d; ++f) {
      const double dev = ds.point(i)[f] - mean[f];
      sd[f] += dev * dev;
    }
  for (std::size_t f = 0; f < d; ++f) sd[f] = std::sqrt(sd[f] / static_cast<double>(n));

  std::vector<double> data(ds.raw());
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t f = 0; f < d; ++f)
      if (sd[f] > 0.0) data[i * d + f] = (data[i * d + f] - mean[f]) / sd[f];
  std::vector<std::uint8_t> cls(n);
  for (std::size_t i = 0; i < n; ++i) cls[i] = ds.class_index(i);
  return Dataset::from_parts(ds.name(), d, std::move(data), std::move(cls), ds.class_labels());
}

void write_dataset_csv(const Dataset& ds, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw io_error("cannot write '" + path + "'");
  for (std::size_t f = 0; f < ds.dim(); ++f) out << "f" << (f + 1) << ",";
  out << "label\n";
  for (std::size_t i = 0; i < ds.size(); ++i) {
    const auto p = ds.point(i);
    for (std::size_t f = 0; f < ds.dim(); ++f) out << format_double(p[f]) << ",";
    out << sanitize(ds.label(i)) << "\n";
  }
  if (!out) throw io_error("write failed on '" + path + "'");
}

}  // namespace dcm
