#include "eschenburg/search.hpp"

#include <atomic>
#include <cstdio>
#include <exception>
#include <filesystem>
#include <map>
#include <mutex>
#include <thread>

#include "eschenburg/report_io.hpp"
#include "json.hpp"

namespace eschenburg {

using json = nlohmann::ordered_json;
namespace fs = std::filesystem;

namespace {

struct ManifestEntry {
  int index = 0;
  i64 rlo = 0;
  i64 rhi = 0;
  std::string file;
  i64 rows = 0;
  std::uint32_t crc = 0;
};

std::string shard_file_name(int index) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "shard-%04d.csv", index);
  return buf;
}

std::string shard_label(int index, i64 lo, i64 hi) {
  return "shard " + std::to_string(index) + " (r in (" + std::to_string(lo) + ", " + std::to_string(hi) + "])";
}

std::map<int, ManifestEntry> load_manifest(const fs::path& path, const RunConfig& cfg) {
  std::map<int, ManifestEntry> out;
  if (!fs::exists(path)) return out;
  json j;
  try {
    j = json::parse(read_file(path.string()));
    if (j.at("rmax").get<i64>() != cfg.rmax || j.at("shards").get<int>() != cfg.shards) return out;
    for (const auto& e : j.at("entries")) {
      ManifestEntry m;
      m.index = e.at("index").get<int>();
      m.rlo = e.at("rlo").get<i64>();
      m.rhi = e.at("rhi").get<i64>();
      m.file = e.at("file").get<std::string>();
      m.rows = e.at("rows").get<i64>();
      m.crc = e.at("crc32").get<std::uint32_t>();
      out[m.index] = m;
    }
  } catch (const json::exception&) {
    out.clear();  // an unreadable manifest means a fresh run
  }
  return out;
}

void save_manifest(const fs::path& path, const RunConfig& cfg, const std::map<int, ManifestEntry>& entries) {
  json j;
  j["rmax"] = cfg.rmax;
  j["shards"] = cfg.shards;
  json list = json::array();
  for (const auto& [idx, m] : entries) {
    json e;
    e["index"] = m.index;
    e["rlo"] = m.rlo;
    e["rhi"] = m.rhi;
    e["file"] = m.file;
    e["rows"] = m.rows;
    e["crc32"] = m.crc;
    list.push_back(e);
  }
  j["entries"] = list;
  write_file(path.string(), j.dump(1) + "\n");
}

std::vector<InvariantRecord> enumerate_shard(i64 lo, i64 hi) {
  std::vector<InvariantRecord> records;
  enumerate_parameter_vectors(
      hi,
      [&](const ParameterVector& pv, i64 r) {
        InvariantRecord rec = make_record(pv);
        if (rec.basic.r != r) throw std::logic_error("closed form r disagrees with sigma2 for " + pv.str());
        records.push_back(std::move(rec));
      },
      lo + 1);
  return records;
}

}  // namespace

std::pair<i64, i64> shard_range(i64 rmax, int shards, int index) {
  const i128 lo = static_cast<i128>(rmax) * index / shards;
  const i128 hi = static_cast<i128>(rmax) * (index + 1) / shards;
  return {static_cast<i64>(lo), static_cast<i64>(hi)};
}

ClassificationReport run_search(const RunConfig& cfg, RunLog* log) {
  if (cfg.rmax < 1) throw InvalidInput("rmax must be at least 1");
  if (cfg.shards < 1) throw InvalidInput("shards must be at least 1");

  const bool to_disk = !cfg.outdir.empty();
  const bool write_csv = to_disk && (cfg.emit_csv || cfg.resume);
  const fs::path dir = cfg.outdir;
  const fs::path manifest_path = dir / "manifest.json";
  if (to_disk) {
    std::error_code ec;
    fs::create_directories(dir, ec);
    if (ec) throw IoError("cannot create output directory " + cfg.outdir + ": " + ec.message());
  }

  std::map<int, ManifestEntry> manifest;
  if (to_disk && cfg.resume) manifest = load_manifest(manifest_path, cfg);
  std::mutex manifest_mutex;

  std::vector<ClassificationReport> parts(static_cast<std::size_t>(cfg.shards));
  std::vector<std::exception_ptr> errors(static_cast<std::size_t>(cfg.shards));
  std::atomic<int> next{0};
  std::atomic<int> computed{0}, resumed{0};

  auto work = [&](int index) {
    const auto [lo, hi] = shard_range(cfg.rmax, cfg.shards, index);
    const std::string label = shard_label(index, lo, hi);
    const fs::path csv_path = dir / shard_file_name(index);
    std::vector<InvariantRecord> records;
    bool loaded = false;
    if (cfg.resume) {
      std::lock_guard<std::mutex> lock(manifest_mutex);
      auto it = manifest.find(index);
      if (it != manifest.end() && it->second.rlo == lo && it->second.rhi == hi && fs::exists(csv_path)) {
        const std::string bytes = read_file(csv_path.string());
        if (crc32_of(bytes) == it->second.crc) {
          try {
            records = parse_shard_csv(bytes);
            loaded = static_cast<i64>(records.size()) == it->second.rows;
          } catch (const InvalidInput&) {
            loaded = false;
          }
        }
      }
    }
    if (!loaded) records = enumerate_shard(lo, hi);
    ClassificationReport part = classify(records, cfg.rmax);
    if (write_csv && !loaded) {
      const std::string bytes = shard_csv(records);
      try {
        write_file(csv_path.string(), bytes);
      } catch (const IoError& e) {
        throw IoError(label + ": " + e.what());
      }
      std::lock_guard<std::mutex> lock(manifest_mutex);
      manifest[index] = ManifestEntry{index, lo, hi, shard_file_name(index), static_cast<i64>(records.size()), crc32_of(bytes)};
      try {
        save_manifest(manifest_path, cfg, manifest);
      } catch (const IoError& e) {
        throw IoError(label + ": " + e.what());
      }
    }
    (loaded ? resumed : computed)++;
    parts[static_cast<std::size_t>(index)] = std::move(part);
  };

  int threads = cfg.threads > 0 ? cfg.threads : static_cast<int>(std::thread::hardware_concurrency());
  threads = std::max(1, std::min(threads, cfg.shards));
  auto worker = [&] {
    for (int i = next++; i < cfg.shards; i = next++) {
      try {
        work(i);
      } catch (...) {
        errors[static_cast<std::size_t>(i)] = std::current_exception();
      }
    }
  };
  if (threads == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (int t = 0; t < threads; ++t) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
  }
  for (const auto& e : errors)
    if (e) std::rethrow_exception(e);

  ClassificationReport total;
  total.rmax = cfg.rmax;
  for (const auto& part : parts) merge_into(total, part);

  if (to_disk && cfg.emit_json) write_file((dir / "report.json").string(), report_json(total, cfg.level));
  if (log) {
    log->shards_computed = computed;
    log->shards_resumed = resumed;
  }
  return total;
}

}  // namespace eschenburg
