#ifndef DCM_CSV_HPP
#define DCM_CSV_HPP

#include <map>
#include <optional>

#include "dcm/dataset.hpp"

namespace dcm {

/// File/parse problems carry this subtype so the CLI can map them to the
/// I/O exit code.
class io_error : public error {
public:
  using error::error;
};

/// Locale-independent shortest-exact / 17-significant-digit formatting;
/// non-finite values become "inf", "-inf", "nan".
std::string format_double(double v);

/// Parses "inf"/"nan" spellings as well as ordinary numbers.
std::optional<double> parse_double(const std::string& text);

struct RawTable {
  std::vector<std::string> columns;
  std::vector<std::vector<std::string>> cells;  // [row][column]
};

/// Comma-separated with a header row; fields are trimmed, quoting is not
/// supported. Errors carry 1-based line numbers.
RawTable parse_csv(const std::string& path);

/// Integer codes by order of first appearance; mapping[code] is the original
/// text.
std::vector<int> encode_categoricals(const std::vector<std::string>& values,
                                     std::vector<std::string>& mapping);

/// Feature matrix + label strings extracted from a CSV. Non-numeric feature
/// columns are either encoded (when asked) or rejected with the offending
/// line. encodings maps column name -> list of category names in code order.
struct LoadedTable {
  std::vector<std::string> feature_names;
  std::vector<std::vector<double>> rows;
  std::vector<std::string> labels;
  std::map<std::string, std::vector<std::string>> encodings;
};

/// label_column may be a header name or a 0-based column index.
LoadedTable load_table(const std::string& path, const std::string& label_column, bool encode);

/// Validated two-class dataset restricted to the rows labeled a or b.
Dataset make_pair_dataset(const LoadedTable& table, const std::string& a, const std::string& b,
                          const std::string& name);

/// One dataset per unordered label pair, in lexicographic pair order.
std::vector<Dataset> all_pairs(const LoadedTable& table, const std::string& base_name);

/// Per-feature z-scoring over the whole dataset; constant features pass
/// through unchanged.
Dataset zscore_dataset(const Dataset& ds);

void write_dataset_csv(const Dataset& ds, const std::string& path);

}  // namespace dcm

#endif
