#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "eschenburg/classifier.hpp"

namespace eschenburg {

/// Header and one row per record:
/// k1,k2,k3,l1,l2,l3,r,s,sigma,p1,s22_num,s22_den,s2_num,s2_den,cond_c
/// The last five fields are empty when Kreck-Stolz data was not evaluated.
std::string shard_csv(const std::vector<InvariantRecord>& records);
std::vector<InvariantRecord> parse_shard_csv(const std::string& text);

/// Families of every level up to and including `max_level` are listed.
std::string report_json(const ClassificationReport& report, Level max_level = Level::Homeomorphism);
ClassificationReport parse_report_json(const std::string& text);

std::string pair_line(const VectorPair& pair);

std::uint32_t crc32_of(const std::string& bytes);

std::string read_file(const std::string& path);
/// Writes via a temporary file and rename so readers never see a partial file.
void write_file(const std::string& path, const std::string& bytes);

}  // namespace eschenburg
