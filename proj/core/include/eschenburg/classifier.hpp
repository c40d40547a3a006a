#pragma once

#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "eschenburg/kreck_stolz.hpp"
#include "eschenburg/space.hpp"

namespace eschenburg {

/// Everything known about one enumerated space. The Kreck-Stolz part is only
/// evaluated for spaces that share (r, s, sigma) with another space.
struct InvariantRecord {
  ParameterVector pv;
  BasicInvariants basic;
  bool ks_computed = false;
  KreckStolzResult ks;

  friend bool operator==(const InvariantRecord&, const InvariantRecord&) = default;
};

InvariantRecord make_record(const ParameterVector& pv);

/// Free normal-form vectors with rmin <= r <= rmax, in loop order
/// (l2, l1, k2, k1 ascending).
void enumerate_parameter_vectors(i64 rmax, const std::function<void(const ParameterVector&, i64 r)>& emit,
                                 i64 rmin = 1);
std::vector<ParameterVector> enumerate_parameter_vectors(i64 rmax, i64 rmin = 1);

/// Independent check of the enumerator: scans the whole box 0 <= l2, l1, k2, k1 <= rmax
/// and filters with the plain predicates.
std::vector<ParameterVector> brute_force_vectors(i64 rmax);

enum class Level { Coarse, Homotopy, Tangential, Homeomorphism };

const char* level_name(Level level);
Level parse_level(const std::string& name);

struct FamilyKey {
  i64 r = 0;
  i64 s = 0;
  i64 sigma = 0;
  std::optional<RationalModZ> s22;
  std::optional<RationalModZ> s2;
  std::optional<i64> p1;

  friend bool operator==(const FamilyKey&, const FamilyKey&) = default;
};

struct Family {
  Level level = Level::Coarse;
  FamilyKey key;
  std::vector<ParameterVector> members;
  bool undecided = false;

  friend bool operator==(const Family&, const Family&) = default;
};

enum class PairKind { HomotopyNotTangential, TangentialNotHomeo, Homeomorphic };

const char* pair_kind_name(PairKind kind);
PairKind parse_pair_kind(const std::string& name);

using VectorPair = std::pair<ParameterVector, ParameterVector>;

/// Number of classes; min < max only when condition (C) failures leave
/// membership open.
struct ClassCount {
  i64 min = 0;
  i64 max = 0;

  friend bool operator==(const ClassCount&, const ClassCount&) = default;
  ClassCount& operator+=(const ClassCount& o) {
    min += o.min;
    max += o.max;
    return *this;
  }
};

struct LevelCounts {
  ClassCount coarse, homotopy, tangential, homeomorphism;

  friend bool operator==(const LevelCounts&, const LevelCounts&) = default;
};

struct ClassificationReport {
  i64 rmax = 0;
  i64 vectors = 0;
  i64 ks_evaluations = 0;
  LevelCounts counts;
  std::vector<Family> coarse, homotopy, tangential, homeomorphism;
  std::vector<Family> undecided;
  std::vector<VectorPair> homotopy_not_tangential, tangential_not_homeo, homeomorphic;

  friend bool operator==(const ClassificationReport&, const ClassificationReport&) = default;

  const std::vector<Family>& families(Level level) const;
  std::vector<Family>& families(Level level);
};

/// Maximal families (>= 2 members) sharing r and (s, sigma) up to a common sign.
std::vector<Family> group_coarse(const std::vector<InvariantRecord>& records);

/// Splits coarse families by s22 under the same sign; members failing
/// condition (C) are left out and mark the coarse family undecided.
/// `lookup` maps a member to its record with Kreck-Stolz data filled in.
using RecordLookup = std::function<const InvariantRecord&(const ParameterVector&)>;

std::vector<Family> refine_homotopy(const std::vector<Family>& coarse, const RecordLookup& lookup);
std::vector<Family> refine_tangential(const std::vector<Family>& homotopy, const RecordLookup& lookup);
std::vector<Family> refine_homeomorphism(const std::vector<Family>& tangential, const RecordLookup& lookup);

/// Runs the whole pipeline on the records of one r-range. Kreck-Stolz data is
/// computed in place for every record that falls into a coarse family.
/// Throws std::logic_error when a structural assertion fails (r even,
/// s not a unit, s22 != 2 r s2).
ClassificationReport classify(std::vector<InvariantRecord>& records, i64 rmax);

/// Concatenates reports of consecutive disjoint r-ranges.
void merge_into(ClassificationReport& total, const ClassificationReport& part);

const std::vector<VectorPair>& extract_pairs(const ClassificationReport& report, PairKind kind);

LevelCounts statistics(const ClassificationReport& report);

}  // namespace eschenburg
