#include "eschenburg/classifier.hpp"

#include <algorithm>
#include <map>
#include <tuple>

namespace eschenburg {

namespace {

template <class T>
std::strong_ordering cmp_opt(const std::optional<T>& a, const std::optional<T>& b) {
  if (a.has_value() != b.has_value()) return a.has_value() ? std::strong_ordering::greater : std::strong_ordering::less;
  if (!a) return std::strong_ordering::equal;
  return *a <=> *b;
}

std::strong_ordering compare_keys(const FamilyKey& a, const FamilyKey& b) {
  if (auto c = a.r <=> b.r; c != 0) return c;
  if (auto c = a.s <=> b.s; c != 0) return c;
  if (auto c = a.sigma <=> b.sigma; c != 0) return c;
  if (auto c = cmp_opt(a.s22, b.s22); c != 0) return c;
  if (auto c = cmp_opt(a.p1, b.p1); c != 0) return c;
  return cmp_opt(a.s2, b.s2);
}

bool family_less(const Family& a, const Family& b) {
  if (auto c = compare_keys(a.key, b.key); c != 0) return c < 0;
  return a.members < b.members;
}

void sort_families(std::vector<Family>& fams) {
  for (auto& f : fams) std::sort(f.members.begin(), f.members.end());
  std::sort(fams.begin(), fams.end(), family_less);
}

// Sign that moves a member's oriented invariants onto the family key.
int orientation_sign(const InvariantRecord& rec, const FamilyKey& key) {
  return rec.basic.s.value == key.s ? 1 : -1;
}

RationalModZ signed_value(int eps, const RationalModZ& x) { return eps > 0 ? x : -x; }

// Groups `members` of a family by `value` and emits the subgroups of size >= 2.
template <class V, class KeyFn, class SetKey>
void split(const Family& parent, Level level, const RecordLookup& lookup, KeyFn value, SetKey set_key,
           std::vector<Family>& out) {
  std::map<V, std::vector<ParameterVector>> groups;
  for (const auto& m : parent.members) {
    const InvariantRecord& rec = lookup(m);
    std::optional<V> v = value(rec);
    if (v) groups[*v].push_back(m);
  }
  for (auto& [v, members] : groups) {
    if (members.size() < 2) continue;
    Family f;
    f.level = level;
    f.key = parent.key;
    set_key(f.key, v);
    f.members = std::move(members);
    out.push_back(std::move(f));
  }
}

}  // namespace

const char* level_name(Level level) {
  switch (level) {
    case Level::Coarse:
      return "coarse";
    case Level::Homotopy:
      return "homotopy";
    case Level::Tangential:
      return "tangential";
    case Level::Homeomorphism:
      return "homeomorphism";
  }
  return "?";
}

Level parse_level(const std::string& name) {
  for (Level l : {Level::Coarse, Level::Homotopy, Level::Tangential, Level::Homeomorphism})
    if (name == level_name(l)) return l;
  throw InvalidInput("unknown level: " + name);
}

const char* pair_kind_name(PairKind kind) {
  switch (kind) {
    case PairKind::HomotopyNotTangential:
      return "HomotopyNotTangential";
    case PairKind::TangentialNotHomeo:
      return "TangentialNotHomeo";
    case PairKind::Homeomorphic:
      return "Homeomorphic";
  }
  return "?";
}

PairKind parse_pair_kind(const std::string& name) {
  for (PairKind k : {PairKind::HomotopyNotTangential, PairKind::TangentialNotHomeo, PairKind::Homeomorphic})
    if (name == pair_kind_name(k)) return k;
  throw InvalidInput("unknown pair kind: " + name);
}

const std::vector<Family>& ClassificationReport::families(Level level) const {
  switch (level) {
    case Level::Coarse:
      return coarse;
    case Level::Homotopy:
      return homotopy;
    case Level::Tangential:
      return tangential;
    case Level::Homeomorphism:
      return homeomorphism;
  }
  return coarse;
}

std::vector<Family>& ClassificationReport::families(Level level) {
  return const_cast<std::vector<Family>&>(std::as_const(*this).families(level));
}

InvariantRecord make_record(const ParameterVector& pv) {
  InvariantRecord rec;
  rec.pv = pv;
  rec.basic = basic_invariants(pv);
  return rec;
}

std::vector<Family> group_coarse(const std::vector<InvariantRecord>& records) {
  std::map<std::tuple<i64, i64, i64>, std::vector<ParameterVector>> groups;
  for (const auto& rec : records) {
    OrientedTuple t;
    t.r = rec.basic.r;
    t.s = rec.basic.s;
    t.sigma = rec.basic.sigma;
    const OrientedTuple c = canonical_sign_form(t);
    groups[{c.r, c.s.value, c.sigma.value}].push_back(rec.pv);
  }
  std::vector<Family> out;
  for (auto& [key, members] : groups) {
    if (members.size() < 2) continue;
    Family f;
    f.level = Level::Coarse;
    f.key.r = std::get<0>(key);
    f.key.s = std::get<1>(key);
    f.key.sigma = std::get<2>(key);
    f.members = std::move(members);
    out.push_back(std::move(f));
  }
  sort_families(out);
  return out;
}

std::vector<Family> refine_homotopy(const std::vector<Family>& coarse, const RecordLookup& lookup) {
  std::vector<Family> out;
  for (const auto& fam : coarse) {
    split<RationalModZ>(
        fam, Level::Homotopy, lookup,
        [&](const InvariantRecord& rec) -> std::optional<RationalModZ> {
          if (!rec.ks.condition_c) return std::nullopt;
          return signed_value(orientation_sign(rec, fam.key), *rec.ks.s22);
        },
        [](FamilyKey& k, const RationalModZ& v) { k.s22 = v; }, out);
  }
  sort_families(out);
  return out;
}

std::vector<Family> refine_tangential(const std::vector<Family>& homotopy, const RecordLookup& lookup) {
  std::vector<Family> out;
  for (const auto& fam : homotopy) {
    split<i64>(
        fam, Level::Tangential, lookup,
        [](const InvariantRecord& rec) -> std::optional<i64> { return rec.basic.p1.nonnegative(); },
        [](FamilyKey& k, const i64& v) { k.p1 = v; }, out);
  }
  sort_families(out);
  return out;
}

std::vector<Family> refine_homeomorphism(const std::vector<Family>& tangential, const RecordLookup& lookup) {
  std::vector<Family> out;
  for (const auto& fam : tangential) {
    split<RationalModZ>(
        fam, Level::Homeomorphism, lookup,
        [&](const InvariantRecord& rec) -> std::optional<RationalModZ> {
          if (!rec.ks.condition_c) return std::nullopt;
          return signed_value(orientation_sign(rec, fam.key), *rec.ks.s2);
        },
        [](FamilyKey& k, const RationalModZ& v) { k.s2 = v; }, out);
  }
  sort_families(out);
  return out;
}

namespace {

std::vector<VectorPair> pairs_where(const std::vector<Family>& fams, const RecordLookup& lookup,
                                    const std::function<bool(const InvariantRecord&, const InvariantRecord&, const FamilyKey&)>& separated) {
  std::vector<VectorPair> out;
  for (const auto& fam : fams)
    for (std::size_t i = 0; i < fam.members.size(); ++i)
      for (std::size_t j = i + 1; j < fam.members.size(); ++j) {
        const auto& a = lookup(fam.members[i]);
        const auto& b = lookup(fam.members[j]);
        if (separated(a, b, fam.key)) out.emplace_back(fam.members[i], fam.members[j]);
      }
  return out;
}

// Classes inside one coarse group at each level. Members failing (C) may
// join any class of their p1-subgroup or stand alone, which yields [min, max].
LevelCounts count_group(const Family& fam, const RecordLookup& lookup) {
  LevelCounts c;
  c.coarse = {1, 1};
  std::map<RationalModZ, int> homotopy_keys;
  std::map<i64, std::map<RationalModZ, int>> tangential_keys;
  std::map<i64, std::map<std::pair<RationalModZ, RationalModZ>, int>> homeo_keys;
  std::map<i64, i64> fails_by_p1;
  i64 fails = 0;
  for (const auto& m : fam.members) {
    const InvariantRecord& rec = lookup(m);
    const i64 p1 = rec.basic.p1.value;
    if (!rec.ks.condition_c) {
      ++fails;
      ++fails_by_p1[p1];
      tangential_keys[p1];
      homeo_keys[p1];
      continue;
    }
    const int eps = orientation_sign(rec, fam.key);
    const RationalModZ s22 = signed_value(eps, *rec.ks.s22);
    const RationalModZ s2 = signed_value(eps, *rec.ks.s2);
    homotopy_keys[s22] = 1;
    tangential_keys[p1][s22] = 1;
    homeo_keys[p1][{s22, s2}] = 1;
  }
  auto interval = [](i64 decided, i64 open) {
    ClassCount cc;
    cc.min = decided > 0 ? decided : (open > 0 ? 1 : 0);
    cc.max = decided + open;
    return cc;
  };
  c.homotopy = interval(static_cast<i64>(homotopy_keys.size()), fails);
  for (const auto& [p1, keys] : tangential_keys) {
    const i64 open = fails_by_p1.count(p1) ? fails_by_p1[p1] : 0;
    c.tangential += interval(static_cast<i64>(keys.size()), open);
  }
  for (const auto& [p1, keys] : homeo_keys) {
    const i64 open = fails_by_p1.count(p1) ? fails_by_p1[p1] : 0;
    c.homeomorphism += interval(static_cast<i64>(keys.size()), open);
  }
  return c;
}

void check_structure(const InvariantRecord& rec) {
  const i64 r = rec.basic.r;
  if (r % 2 == 0) throw std::logic_error("even r for " + rec.pv.str());
  if (gcd(rec.basic.s.value, r) != 1) throw std::logic_error("s is not a unit mod r for " + rec.pv.str());
  if (rec.ks_computed && rec.ks.condition_c) {
    const RationalModZ& s2 = *rec.ks.s2;
    if (*rec.ks.s22 != reduce_mod_z(checked::mul(checked::mul(2, r), s2.num), s2.den))
      throw std::logic_error("s22 != 2 r s2 for " + rec.pv.str());
  }
}

}  // namespace

ClassificationReport classify(std::vector<InvariantRecord>& records, i64 rmax) {
  ClassificationReport rep;
  rep.rmax = rmax;
  rep.vectors = static_cast<i64>(records.size());

  std::sort(records.begin(), records.end(), [](const InvariantRecord& a, const InvariantRecord& b) {
    return std::tie(a.basic.r, a.pv) < std::tie(b.basic.r, b.pv);
  });

  std::map<ParameterVector, InvariantRecord*> index;
  for (auto& rec : records) index.emplace(rec.pv, &rec);
  const RecordLookup lookup = [&](const ParameterVector& pv) -> const InvariantRecord& {
    auto it = index.find(pv);
    if (it == index.end()) throw std::logic_error("family member without record: " + pv.str());
    return *it->second;
  };

  rep.coarse = group_coarse(records);

  for (const auto& fam : rep.coarse)
    for (const auto& m : fam.members) {
      InvariantRecord& rec = *index.at(m);
      if (!rec.ks_computed) {
        rec.ks = kreck_stolz(rec.pv);
        rec.ks_computed = true;
      }
      ++rep.ks_evaluations;
    }
  for (const auto& rec : records) check_structure(rec);

  i64 in_families = 0;
  for (auto& fam : rep.coarse) {
    for (const auto& m : fam.members)
      if (!lookup(m).ks.condition_c) fam.undecided = true;
    if (fam.undecided) rep.undecided.push_back(fam);
    rep.counts.coarse += ClassCount{1, 1};
    const LevelCounts c = count_group(fam, lookup);
    rep.counts.homotopy += c.homotopy;
    rep.counts.tangential += c.tangential;
    rep.counts.homeomorphism += c.homeomorphism;
    in_families += static_cast<i64>(fam.members.size());
  }
  const i64 singletons = rep.vectors - in_families;
  for (ClassCount* cc : {&rep.counts.coarse, &rep.counts.homotopy, &rep.counts.tangential, &rep.counts.homeomorphism})
    *cc += ClassCount{singletons, singletons};

  rep.homotopy = refine_homotopy(rep.coarse, lookup);
  rep.tangential = refine_tangential(rep.homotopy, lookup);
  rep.homeomorphism = refine_homeomorphism(rep.tangential, lookup);

  rep.homotopy_not_tangential =
      pairs_where(rep.homotopy, lookup, [](const InvariantRecord& a, const InvariantRecord& b, const FamilyKey&) {
        return a.basic.p1 != b.basic.p1;
      });
  rep.tangential_not_homeo =
      pairs_where(rep.tangential, lookup, [](const InvariantRecord& a, const InvariantRecord& b, const FamilyKey& key) {
        return signed_value(orientation_sign(a, key), *a.ks.s2) != signed_value(orientation_sign(b, key), *b.ks.s2);
      });
  rep.homeomorphic = pairs_where(rep.homeomorphism, lookup,
                                 [](const InvariantRecord&, const InvariantRecord&, const FamilyKey&) { return true; });
  return rep;
}

void merge_into(ClassificationReport& total, const ClassificationReport& part) {
  total.vectors += part.vectors;
  total.ks_evaluations += part.ks_evaluations;
  total.counts.coarse += part.counts.coarse;
  total.counts.homotopy += part.counts.homotopy;
  total.counts.tangential += part.counts.tangential;
  total.counts.homeomorphism += part.counts.homeomorphism;
  auto append = [](auto& dst, const auto& src) { dst.insert(dst.end(), src.begin(), src.end()); };
  append(total.coarse, part.coarse);
  append(total.homotopy, part.homotopy);
  append(total.tangential, part.tangential);
  append(total.homeomorphism, part.homeomorphism);
  append(total.undecided, part.undecided);
  append(total.homotopy_not_tangential, part.homotopy_not_tangential);
  append(total.tangential_not_homeo, part.tangential_not_homeo);
  append(total.homeomorphic, part.homeomorphic);
}

const std::vector<VectorPair>& extract_pairs(const ClassificationReport& report, PairKind kind) {
  switch (kind) {
    case PairKind::HomotopyNotTangential:
      return report.homotopy_not_tangential;
    case PairKind::TangentialNotHomeo:
      return report.tangential_not_homeo;
    case PairKind::Homeomorphic:
      return report.homeomorphic;
  }
  return report.homeomorphic;
}

LevelCounts statistics(const ClassificationReport& report) { return report.counts; }

}  // namespace eschenburg
