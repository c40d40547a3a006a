#include "eschenburg/report_io.hpp"

#include <boost/crc.hpp>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "json.hpp"

namespace eschenburg {

using json = nlohmann::ordered_json;

namespace {

constexpr const char* kCsvHeader = "k1,k2,k3,l1,l2,l3,r,s,sigma,p1,s22_num,s22_den,s2_num,s2_den,cond_c";

std::vector<std::string> split_csv(const std::string& line) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : line) {
    if (c == ',') {
      out.push_back(cur);
      cur.clear();
    } else {
      cur.push_back(c);
    }
  }
  out.push_back(cur);
  return out;
}

i64 to_int(const std::string& s) {
  try {
    std::size_t used = 0;
    long long v = std::stoll(s, &used);
    if (used != s.size()) throw InvalidInput("bad integer field: " + s);
    return v;
  } catch (const std::logic_error&) {
    throw InvalidInput("bad integer field: '" + s + "'");
  }
}

std::string rational_text(const RationalModZ& q) { return std::to_string(q.num) + "/" + std::to_string(q.den); }

json rational_or_null(const std::optional<RationalModZ>& q) { return q ? json(rational_text(*q)) : json(nullptr); }

json vector_json(const ParameterVector& pv) {
  json a = json::array();
  for (i64 x : pv.flat()) a.push_back(x);
  return a;
}

ParameterVector vector_from(const json& a) {
  if (!a.is_array() || a.size() != 6) throw InvalidInput("member must be six integers");
  return make_vector(a[0].get<i64>(), a[1].get<i64>(), a[2].get<i64>(), a[3].get<i64>(), a[4].get<i64>(),
                     a[5].get<i64>());
}

json family_json(const Family& f) {
  json j;
  j["level"] = level_name(f.level);
  json key;
  key["r"] = f.key.r;
  key["s"] = f.key.s;
  key["sigma"] = f.key.sigma;
  key["s22"] = rational_or_null(f.key.s22);
  key["s2"] = rational_or_null(f.key.s2);
  key["p1"] = f.key.p1 ? json(*f.key.p1) : json(nullptr);
  j["key"] = key;
  json members = json::array();
  for (const auto& m : f.members) members.push_back(vector_json(m));
  j["members"] = members;
  j["undecided"] = f.undecided;
  return j;
}

Family family_from(const json& j) {
  Family f;
  f.level = parse_level(j.at("level").get<std::string>());
  const json& key = j.at("key");
  f.key.r = key.at("r").get<i64>();
  f.key.s = key.at("s").get<i64>();
  f.key.sigma = key.at("sigma").get<i64>();
  if (!key.at("s22").is_null()) f.key.s22 = parse_rational_mod_z(key.at("s22").get<std::string>());
  if (!key.at("s2").is_null()) f.key.s2 = parse_rational_mod_z(key.at("s2").get<std::string>());
  if (!key.at("p1").is_null()) f.key.p1 = key.at("p1").get<i64>();
  for (const auto& m : j.at("members")) f.members.push_back(vector_from(m));
  f.undecided = j.at("undecided").get<bool>();
  return f;
}

json count_json(const ClassCount& c) {
  json j;
  j["min"] = c.min;
  j["max"] = c.max;
  return j;
}

ClassCount count_from(const json& j) { return ClassCount{j.at("min").get<i64>(), j.at("max").get<i64>()}; }

}  // namespace

std::string shard_csv(const std::vector<InvariantRecord>& records) {
  std::ostringstream os;
  os << kCsvHeader << '\n';
  for (const auto& rec : records) {
    for (i64 x : rec.pv.flat()) os << x << ',';
    os << rec.basic.r << ',' << rec.basic.s.value << ',' << rec.basic.sigma.value << ',' << rec.basic.p1.nonnegative() << ',';
    if (!rec.ks_computed) {
      os << ",,,,";
    } else if (!rec.ks.condition_c) {
      os << ",,,,0";
    } else {
      os << rec.ks.s22->num << ',' << rec.ks.s22->den << ',' << rec.ks.s2->num << ',' << rec.ks.s2->den << ",1";
    }
    os << '\n';
  }
  return os.str();
}

std::vector<InvariantRecord> parse_shard_csv(const std::string& text) {
  std::istringstream is(text);
  std::string line;
  if (!std::getline(is, line) || line != kCsvHeader) throw InvalidInput("shard CSV: missing or wrong header");
  std::vector<InvariantRecord> out;
  while (std::getline(is, line)) {
    if (line.empty()) continue;
    const auto f = split_csv(line);
    if (f.size() != 15) throw InvalidInput("shard CSV: expected 15 fields, got " + std::to_string(f.size()));
    InvariantRecord rec;
    rec.pv = make_vector(to_int(f[0]), to_int(f[1]), to_int(f[2]), to_int(f[3]), to_int(f[4]), to_int(f[5]));
    rec.basic.r = to_int(f[6]);
    rec.basic.s = symmetric_rep(to_int(f[7]), rec.basic.r);
    rec.basic.sigma = symmetric_rep(to_int(f[8]), 3);
    rec.basic.p1 = symmetric_rep(to_int(f[9]), rec.basic.r);
    if (!f[14].empty()) {
      rec.ks_computed = true;
      rec.ks.condition_c = f[14] == "1";
      if (rec.ks.condition_c) {
        rec.ks.s22 = reduce_mod_z(to_int(f[10]), to_int(f[11]));
        rec.ks.s2 = reduce_mod_z(to_int(f[12]), to_int(f[13]));
      }
    }
    out.push_back(rec);
  }
  return out;
}

std::string report_json(const ClassificationReport& report, Level max_level) {
  json j;
  j["rmax"] = report.rmax;
  j["vectors"] = report.vectors;
  j["ks_evaluations"] = report.ks_evaluations;
  json counts;
  counts["coarse"] = count_json(report.counts.coarse);
  counts["homotopy"] = count_json(report.counts.homotopy);
  counts["tangential"] = count_json(report.counts.tangential);
  counts["homeomorphism"] = count_json(report.counts.homeomorphism);
  j["counts"] = counts;
  json pairs;
  for (PairKind kind : {PairKind::HomotopyNotTangential, PairKind::TangentialNotHomeo, PairKind::Homeomorphic}) {
    json list = json::array();
    for (const auto& [a, b] : extract_pairs(report, kind)) list.push_back(json::array({vector_json(a), vector_json(b)}));
    pairs[pair_kind_name(kind)] = list;
  }
  j["pairs"] = pairs;
  json undecided = json::array();
  for (const auto& f : report.undecided) undecided.push_back(family_json(f));
  j["undecided"] = undecided;
  json families = json::array();
  for (Level level : {Level::Coarse, Level::Homotopy, Level::Tangential, Level::Homeomorphism}) {
    if (static_cast<int>(level) > static_cast<int>(max_level)) break;
    for (const auto& f : report.families(level)) families.push_back(family_json(f));
  }
  j["families"] = families;
  return j.dump(1) + "\n";
}

ClassificationReport parse_report_json(const std::string& text) {
  ClassificationReport rep;
  try {
    const json j = json::parse(text);
    rep.rmax = j.at("rmax").get<i64>();
    rep.vectors = j.at("vectors").get<i64>();
    rep.ks_evaluations = j.at("ks_evaluations").get<i64>();
    const json& c = j.at("counts");
    rep.counts.coarse = count_from(c.at("coarse"));
    rep.counts.homotopy = count_from(c.at("homotopy"));
    rep.counts.tangential = count_from(c.at("tangential"));
    rep.counts.homeomorphism = count_from(c.at("homeomorphism"));
    const json& pairs = j.at("pairs");
    auto read_pairs = [&](PairKind kind, std::vector<VectorPair>& dst) {
      for (const auto& p : pairs.at(pair_kind_name(kind))) dst.emplace_back(vector_from(p.at(0)), vector_from(p.at(1)));
    };
    read_pairs(PairKind::HomotopyNotTangential, rep.homotopy_not_tangential);
    read_pairs(PairKind::TangentialNotHomeo, rep.tangential_not_homeo);
    read_pairs(PairKind::Homeomorphic, rep.homeomorphic);
    for (const auto& f : j.at("undecided")) rep.undecided.push_back(family_from(f));
    for (const auto& f : j.at("families")) {
      Family fam = family_from(f);
      rep.families(fam.level).push_back(std::move(fam));
    }
  } catch (const json::exception& e) {
    throw InvalidInput(std::string("malformed report: ") + e.what());
  }
  return rep;
}

std::string pair_line(const VectorPair& pair) {
  return "r=" + std::to_string(basic_invariants(pair.first).r) + "  " + pair.first.str() + "  |  " + pair.second.str();
}

std::uint32_t crc32_of(const std::string& bytes) {
  boost::crc_32_type crc;
  crc.process_bytes(bytes.data(), bytes.size());
  return crc.checksum();
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open " + path);
  std::ostringstream os;
  os << in.rdbuf();
  if (in.bad()) throw IoError("read failed: " + path);
  return os.str();
}

void write_file(const std::string& path, const std::string& bytes) {
  const std::string tmp = path + ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw IoError("cannot write " + tmp);
    out.write(bytes.data(), static_cast<std::streamsize>(bytes.size()));
    if (!out) throw IoError("write failed: " + tmp);
  }
  std::error_code ec;
  std::filesystem::rename(tmp, path, ec);
  if (ec) throw IoError("cannot rename " + tmp + " to " + path + ": " + ec.message());
}

}  // namespace eschenburg
