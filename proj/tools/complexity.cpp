#include <cmath>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"

#include "dcm/batch.hpp"
#include "dcm/csv.hpp"
#include "dcm/linprog.hpp"
#include "dcm/profile.hpp"
#include "dcm/rng.hpp"
#include "dcm/serialize.hpp"
#include "dcm/synth.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitPartialFailure = 1;
constexpr int kExitUsage = 2;
constexpr int kExitIo = 3;

std::ofstream open_output(const std::string& path) {
  std::ofstream out(path);
  if (!out) throw dcm::io_error("cannot write '" + path + "'");
  return out;
}

void emit(const std::string& text, const std::string& output_path) {
  if (output_path.empty()) {
    std::cout << text;
  } else {
    auto out = open_output(output_path);
    out << text;
  }
}

dcm::Dataset load_problem(const dcm::LoadedTable& table, const std::string& path,
                          const std::string& classes, bool zscore) {
  dcm::Dataset ds = [&] {
    if (classes.empty()) {
      try {
        return dcm::validate_dataset(table.rows, table.labels, std::filesystem::path(path).stem().string());
      } catch (const dcm::error& e) {
        throw dcm::io_error(path + ": " + e.what());
      }
    }
    const auto comma = classes.find(',');
    if (comma == std::string::npos)
      throw dcm::error("--classes expects two comma-separated labels");
    return dcm::make_pair_dataset(table, classes.substr(0, comma), classes.substr(comma + 1),
                                  std::filesystem::path(path).stem().string());
  }();
  return zscore ? dcm::zscore_dataset(ds) : ds;
}

std::string correlation_csv(const dcm::CorrelationResult& corr) {
  std::ostringstream out;
  out << "measure";
  for (const char* m : dcm::kMeasureNames) out << "," << m;
  out << "\n";
  for (std::size_t a = 0; a < 12; ++a) {
    out << dcm::kMeasureNames[a];
    for (std::size_t b = 0; b < 12; ++b) out << "," << dcm::format_double(corr.r[a][b]);
    out << "\n";
  }
  return out.str();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Geometrical complexity measures for two-class classification datasets"};
  app.require_subcommand(1);

  // measure
  auto* measure = app.add_subcommand("measure", "Compute the 12-measure profile of one dataset");
  std::string m_csv, m_label, m_classes, m_output;
  std::uint64_t m_seed = 0;
  bool m_encode = false, m_zscore = false;
  measure->add_option("csv", m_csv, "Input CSV with a header row")->required();
  measure->add_option("--label", m_label, "Label column name or index")->required();
  measure->add_option("--classes", m_classes, "Restrict to two classes: a,b");
  measure->add_option("--seed", m_seed, "Seed for the L3/N4 test sets");
  measure->add_flag("--encode", m_encode, "Code categorical feature columns as integers");
  measure->add_flag("--zscore", m_zscore, "Z-score features before measuring");
  measure->add_option("-o,--output", m_output, "Write JSON here instead of stdout");

  // pairs
  auto* pairs = app.add_subcommand("pairs", "Profiles of every pairwise problem of a multiclass CSV");
  std::string p_csv, p_label, p_output;
  std::uint64_t p_seed = 0;
  bool p_encode = false, p_zscore = false;
  pairs->add_option("csv", p_csv)->required();
  pairs->add_option("--label", p_label, "Label column name or index")->required();
  pairs->add_option("--seed", p_seed, "Base seed; pair k uses a derived seed");
  pairs->add_flag("--encode", p_encode, "Code categorical feature columns as integers");
  pairs->add_flag("--zscore", p_zscore, "Z-score features before measuring");
  pairs->add_option("-o,--output", p_output, "Write the profile CSV here instead of stdout");

  // generate
  auto* generate = app.add_subcommand("generate", "Emit a synthetic validation problem as CSV");
  std::string g_kind, g_output;
  std::size_t g_dim = 2, g_n = 100, g_cells = 4;
  std::uint64_t g_seed = 0;
  double g_margin = 0.1, g_rin = 0.2, g_rout = 0.5, g_gap = 0.05;
  generate->add_option("kind", g_kind, "random-labeling | linear-margin | checkerboard | rings")
      ->required();
  generate->add_option("--dim", g_dim, "Feature dimensions");
  generate->add_option("--n", g_n, "Points per class");
  generate->add_option("--seed", g_seed, "Generator seed");
  generate->add_option("--margin", g_margin, "linear-margin: width of the empty band");
  generate->add_option("--cells", g_cells, "checkerboard: cells per side");
  generate->add_option("--r-inner", g_rin, "rings: inner ring base radius");
  generate->add_option("--r-outer", g_rout, "rings: outer ring outer radius");
  generate->add_option("--gap", g_gap, "rings: radial gap between rings");
  generate->add_option("-o,--output", g_output, "Output CSV path")->required();

  // batch
  auto* batch = app.add_subcommand("batch", "Run every problem in a JSON manifest");
  std::string b_manifest, b_output;
  std::size_t b_jobs = 1;
  batch->add_option("manifest", b_manifest, "Manifest JSON path")->required();
  batch->add_option("-o,--output", b_output, "Output directory (overrides manifest)");
  batch->add_option("--jobs", b_jobs, "Concurrent entries (COMPLEXITY_JOBS caps this)");

  // correlate
  auto* correlate = app.add_subcommand("correlate", "Pearson matrix of a profile table");
  std::string c_profiles, c_output;
  correlate->add_option("profiles", c_profiles, "profiles.csv or profiles.jsonl")->required();
  correlate->add_option("-o,--output", c_output, "Write the matrix CSV here instead of stdout");

  // pca
  auto* pca_cmd = app.add_subcommand("pca", "Principal components of a profile table");
  std::string q_profiles, q_output;
  pca_cmd->add_option("profiles", q_profiles, "profiles.csv or profiles.jsonl")->required();
  pca_cmd->add_option("-o,--output", q_output, "Write JSON here instead of stdout");

  // plot-data
  auto* plot = app.add_subcommand("plot-data", "Two measures per line for bivariate plots");
  std::string d_profiles, d_x, d_y, d_output;
  plot->add_option("profiles", d_profiles, "profiles.csv or profiles.jsonl")->required();
  plot->add_option("--x", d_x, "Measure for column 1")->required();
  plot->add_option("--y", d_y, "Measure for column 2")->required();
  plot->add_option("-o,--output", d_output, "Write here instead of stdout");

  // separable
  auto* separable = app.add_subcommand("separable", "Linear separability from L1 (yes/no)");
  std::string s_csv, s_label, s_classes;
  bool s_encode = false;
  separable->add_option("csv", s_csv)->required();
  separable->add_option("--label", s_label, "Label column name or index")->required();
  separable->add_option("--classes", s_classes, "Restrict to two classes: a,b");
  separable->add_flag("--encode", s_encode, "Code categorical feature columns as integers");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (*measure) {
      const dcm::LoadedTable table = dcm::load_table(m_csv, m_label, m_encode);
      dcm::Dataset ds = load_problem(table, m_csv, m_classes, m_zscore);
      const dcm::ComplexityProfile profile = dcm::compute_profile(ds, m_seed);
      emit(dcm::profile_to_json(profile, &table.encodings).dump(2) + "\n", m_output);
    } else if (*pairs) {
      const dcm::LoadedTable table = dcm::load_table(p_csv, p_label, p_encode);
      const auto base = std::filesystem::path(p_csv).stem().string();
      dcm::ProfileTable out;
      std::size_t k = 0;
      for (dcm::Dataset& ds : dcm::all_pairs(table, base)) {
        const dcm::Dataset problem = p_zscore ? dcm::zscore_dataset(ds) : std::move(ds);
        out.rows.push_back(dcm::compute_profile(problem, dcm::mix_seed(p_seed, k++)));
      }
      std::ostringstream text;
      dcm::write_profiles_csv(out, text);
      emit(text.str(), p_output);
    } else if (*generate) {
      dcm::GeneratorSpec spec;
      spec.kind = dcm::parse_gen_kind(g_kind);
      spec.dim = g_dim;
      spec.n_per_class = g_n;
      spec.seed = g_seed;
      spec.margin = g_margin;
      spec.cells = g_cells;
      spec.r_inner = g_rin;
      spec.r_outer = g_rout;
      spec.gap = g_gap;
      dcm::write_dataset_csv(dcm::generate(spec), g_output);
    } else if (*batch) {
      const dcm::Manifest manifest = dcm::parse_manifest(b_manifest);
      const std::string out_dir = !b_output.empty() ? b_output : manifest.output;
      if (out_dir.empty())
        throw dcm::error("no output directory: pass -o or set \"output\" in the manifest");
      const dcm::BatchResult result = dcm::run_batch(manifest, b_jobs);
      dcm::write_batch_outputs(result, out_dir);
      std::cout << result.table.rows.size() << " profile(s), " << result.failures.size()
                << " failure(s) -> " << out_dir << "\n";
      for (const auto& f : result.failures)
        std::cerr << "failed: " << f.name << ": " << f.message << "\n";
      if (!result.failures.empty()) return kExitPartialFailure;
    } else if (*correlate) {
      const dcm::ProfileTable table = dcm::read_profiles(c_profiles);
      const dcm::CorrelationResult corr = dcm::correlation_matrix(table);
      for (std::size_t a = 0; a < 12; ++a)
        for (std::size_t b = a + 1; b < 12; ++b)
          if (corr.excluded[a][b] > 0)
            std::cerr << "corr(" << dcm::kMeasureNames[a] << "," << dcm::kMeasureNames[b]
                      << "): " << corr.excluded[a][b] << " row(s) excluded pairwise\n";
      emit(correlation_csv(corr), c_output);
    } else if (*pca_cmd) {
      const dcm::ProfileTable table = dcm::read_profiles(q_profiles);
      const dcm::PCAResult res = dcm::pca(table);
      for (const auto& w : res.warnings) std::cerr << "pca: " << w << "\n";
      nlohmann::ordered_json j;
      j["form"] = "correlation";  // columns standardized before eigendecomposition
      j["columns"] = res.columns;
      j["excluded_columns"] = res.excluded_columns;
      j["excluded_rows"] = res.excluded_rows;
      j["means"] = res.means;
      j["sds"] = res.sds;
      j["explained_variance_fractions"] = res.fractions;
      j["loadings"] = res.loadings;
      emit(j.dump(2) + "\n", q_output);
    } else if (*plot) {
      const dcm::ProfileTable table = dcm::read_profiles(d_profiles);
      const std::size_t xi = dcm::measure_index(d_x);
      const std::size_t yi = dcm::measure_index(d_y);
      std::ostringstream out;
      std::size_t skipped = 0;
      for (const auto& row : table.rows) {
        const double x = row.values[xi];
        const double y = row.values[yi];
        if (!std::isfinite(x) || !std::isfinite(y)) {
          ++skipped;
          continue;
        }
        out << dcm::format_double(x) << " " << dcm::format_double(y);
        if (!row.group.empty()) out << " " << row.group;
        out << "\n";
      }
      if (skipped) std::cerr << "plot-data: skipped " << skipped << " non-finite row(s)\n";
      emit(out.str(), d_output);
    } else if (*separable) {
      const dcm::LoadedTable table = dcm::load_table(s_csv, s_label, s_encode);
      dcm::Dataset ds = load_problem(table, s_csv, s_classes, false);
      std::cout << (dcm::l1_error_distance(ds) <= 1e-9 ? "yes" : "no") << "\n";
    }
  } catch (const dcm::io_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitIo;
  } catch (const dcm::error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitIo;
  }
  return kExitOk;
}
