#include "dcm/batch.hpp"

#include <atomic>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <set>
#include <thread>

#include "json.hpp"

#include "dcm/csv.hpp"
#include "dcm/rng.hpp"
#include "dcm/serialize.hpp"

namespace dcm {

namespace {

std::string path_stem(const std::string& path) {
  return std::filesystem::path(path).stem().string();
}

}  // namespace

Manifest parse_manifest(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw io_error("cannot open manifest '" + path + "'");
  nlohmann::json j;
  try {
    in >> j;
  } catch (const std::exception& e) {
    throw io_error(std::string("manifest parse error: ") + e.what());
  }

  Manifest m;
  m.global_seed = j.value("global_seed", std::uint64_t{0});
  m.output = j.value("output", std::string{});
  if (!j.contains("problems") || !j["problems"].is_array() || j["problems"].empty())
    throw error("manifest needs a non-empty 'problems' array");

  std::set<std::string> paths;
  for (const auto& pj : j["problems"]) {
    ManifestEntry e;
    if (!pj.contains("path")) throw error("manifest entry missing 'path'");
    e.path = pj["path"].get<std::string>();
    if (!paths.insert(e.path).second) throw error("manifest paths must be distinct: " + e.path);
    if (!pj.contains("label")) throw error("manifest entry for '" + e.path + "' missing 'label'");
    e.label_column = pj["label"].get<std::string>();
    e.name = pj.value("name", path_stem(e.path));
    if (pj.contains("classes")) {
      const auto& c = pj["classes"];
      if (c.is_string() && c.get<std::string>() == "all-pairs") {
        e.all_pairs = true;
      } else if (c.is_array() && c.size() == 2) {
        e.classes = {c[0].get<std::string>(), c[1].get<std::string>()};
      } else {
        throw error("manifest entry '" + e.name + "': classes must be [a, b] or \"all-pairs\"");
      }
    }
    if (pj.contains("seed")) e.seed = pj["seed"].get<std::uint64_t>();
    e.group = pj.value("group", std::string{});
    e.encode = pj.value("encode", false);
    e.zscore = pj.value("zscore", false);
    m.entries.push_back(std::move(e));
  }
  return m;
}

BatchResult run_batch(const Manifest& manifest, std::size_t jobs) {
  if (const char* env = std::getenv("COMPLEXITY_JOBS")) {
    const auto cap = std::strtoull(env, nullptr, 10);
    if (cap > 0) jobs = std::min<std::size_t>(jobs, cap);
  }
  jobs = std::max<std::size_t>(1, std::min(jobs, manifest.entries.size()));

  struct Slot {
    std::vector<ComplexityProfile> profiles;
    std::vector<BatchFailure> failures;
  };
  std::vector<Slot> slots(manifest.entries.size());

  auto work_entry = [&](std::size_t idx) {
    const ManifestEntry& e = manifest.entries[idx];
    Slot& slot = slots[idx];
    const std::uint64_t entry_seed = e.seed ? *e.seed : mix_seed(manifest.global_seed, idx);
    try {
      const LoadedTable table = load_table(e.path, e.label_column, e.encode);
      std::vector<Dataset> problems;
      if (e.all_pairs) {
        problems = all_pairs(table, e.name);
      } else if (e.classes) {
        problems.push_back(make_pair_dataset(table, e.classes->first, e.classes->second, e.name));
      } else {
        try {
          problems.push_back(validate_dataset(table.rows, table.labels, e.name));
        } catch (const error& err) {
          throw io_error(e.name + ": " + err.what());
        }
      }
      for (std::size_t k = 0; k < problems.size(); ++k) {
        Dataset ds = e.zscore ? zscore_dataset(problems[k]) : std::move(problems[k]);
        const std::uint64_t seed = problems.size() == 1 ? entry_seed : mix_seed(entry_seed, k);
        ComplexityProfile p = compute_profile(ds, seed);
        p.group = e.group;
        slot.profiles.push_back(std::move(p));
      }
    } catch (const std::exception& ex) {
      slot.failures.push_back({e.name, ex.what()});
    }
  };

  if (jobs == 1) {
    for (std::size_t i = 0; i < manifest.entries.size(); ++i) work_entry(i);
  } else {
    std::atomic<std::size_t> next{0};
    std::vector<std::thread> pool;
    pool.reserve(jobs);
    for (std::size_t t = 0; t < jobs; ++t)
      pool.emplace_back([&] {
        while (true) {
          const std::size_t i = next.fetch_add(1);
          if (i >= manifest.entries.size()) return;
          work_entry(i);
        }
      });
    for (auto& th : pool) th.join();
  }

  BatchResult out;
  for (auto& slot : slots) {
    for (auto& p : slot.profiles) out.table.rows.push_back(std::move(p));
    for (auto& f : slot.failures) out.failures.push_back(std::move(f));
  }
  return out;
}

void write_batch_outputs(const BatchResult& result, const std::string& dir) {
  std::error_code ec;
  std::filesystem::create_directories(dir, ec);
  if (ec) throw io_error("cannot create output directory '" + dir + "': " + ec.message());

  const auto open = [&](const char* file) {
    std::ofstream out(std::filesystem::path(dir) / file);
    if (!out) throw io_error(std::string("cannot write '") + file + "' under '" + dir + "'");
    return out;
  };
  {
    auto out = open("profiles.csv");
    write_profiles_csv(result.table, out);
  }
  {
    auto out = open("profiles.jsonl");
    write_profiles_jsonl(result.table, out);
  }
  {
    auto out = open("failures.jsonl");
    for (const auto& f : result.failures) {
      nlohmann::ordered_json j;
      j["name"] = f.name;
      j["error"] = f.message;
      out << j.dump() << "\n";
    }
  }
}

}  // namespace dcm
