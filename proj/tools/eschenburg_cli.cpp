// Command-line front end: invariants of single spaces, sharded searches,
// pair lists, class counts and the line-bundle decomposition.

#include <algorithm>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "eschenburg/bundle.hpp"
#include "eschenburg/classifier.hpp"
#include "eschenburg/kreck_stolz.hpp"
#include "eschenburg/report_io.hpp"
#include "eschenburg/search.hpp"

using namespace eschenburg;

namespace {

enum Exit { kOk = 0, kInternal = 1, kInvalid = 2, kHypothesis = 3, kIo = 4 };

std::string join(const std::vector<std::string>& parts) {
  std::string out;
  for (const auto& p : parts) out += p + " ";
  return out;
}

int cmd_invariants(const std::vector<std::string>& args) {
  const ParameterVector pv = parse_vector(join(args));
  if (elementary_symmetric(pv.k, 1) != elementary_symmetric(pv.l, 1))
    throw InvalidInput("sigma1(k) != sigma1(l); not an Eschenburg parameter vector");
  if (!is_free_action(pv)) throw NotFree("action not free / degenerate for " + pv.str());
  const BasicInvariants inv = basic_invariants(pv);
  const KreckStolzResult ks = kreck_stolz(pv);
  std::cout << "r=" << inv.r << " s=" << inv.s.value << " sigma=" << inv.sigma.value << " p1=" << inv.p1.nonnegative();
  if (ks.condition_c)
    std::cout << " s22=" << ks.s22->str() << " s2=" << ks.s2->str() << '\n';
  else
    std::cout << " condC=fail\n";
  return kOk;
}

struct SearchArgs {
  i64 rmax = 0;
  int shards = 1;
  int threads = 0;
  std::string out;
  bool resume = false;
  std::vector<std::string> emit;
  std::string kind;
  std::string level = "homeomorphism";
  i64 brute_check = 0;
  std::string report;
};

RunConfig config_from(const SearchArgs& a) {
  RunConfig cfg;
  cfg.rmax = a.rmax;
  cfg.shards = a.shards;
  cfg.threads = a.threads;
  cfg.outdir = a.out;
  cfg.resume = a.resume;
  cfg.level = parse_level(a.level);
  for (const auto& e : a.emit) {
    if (e == "csv")
      cfg.emit_csv = true;
    else if (e == "json")
      cfg.emit_json = true;
    else
      throw InvalidInput("--emit accepts csv and json, got " + e);
  }
  if ((cfg.emit_csv || cfg.emit_json || cfg.resume) && cfg.outdir.empty())
    throw InvalidInput("--emit and --resume need --out");
  return cfg;
}

void print_count(const char* name, const ClassCount& c) {
  std::cout << name << ": ";
  if (c.min == c.max)
    std::cout << c.min << '\n';
  else
    std::cout << c.min << " -- " << c.max << '\n';
}

void print_stats(const ClassificationReport& rep) {
  std::cout << "rmax: " << rep.rmax << '\n' << "vectors: " << rep.vectors << '\n';
  print_count("coarse classes", rep.counts.coarse);
  print_count("homotopy classes", rep.counts.homotopy);
  print_count("tangential classes", rep.counts.tangential);
  print_count("homeomorphism classes", rep.counts.homeomorphism);
  std::cout << "undecided families: " << rep.undecided.size() << '\n';
  std::cout << "HomotopyNotTangential pairs: " << rep.homotopy_not_tangential.size() << '\n';
  std::cout << "TangentialNotHomeo pairs: " << rep.tangential_not_homeo.size() << '\n';
  std::cout << "Homeomorphic pairs: " << rep.homeomorphic.size() << '\n';
}

void print_pairs(const ClassificationReport& rep, const std::string& kind) {
  for (const auto& p : extract_pairs(rep, parse_pair_kind(kind))) std::cout << pair_line(p) << '\n';
}

int brute_check(i64 rmax) {
  if (rmax < 1 || rmax > 100) throw InvalidInput("--brute-check accepts 1..100");
  const auto brute = brute_force_vectors(rmax);
  for (i64 R = 1; R <= rmax; ++R) {
    auto fast = enumerate_parameter_vectors(R);
    std::sort(fast.begin(), fast.end());
    std::vector<ParameterVector> expected;
    for (const auto& pv : brute)
      if (basic_invariants(pv).r <= R) expected.push_back(pv);
    if (fast != expected) {
      std::cout << "brute-check: MISMATCH at R=" << R << " (fast " << fast.size() << ", brute " << expected.size()
                << ")\n";
      return kInternal;
    }
  }
  std::cout << "brute-check: enumerator matches brute force for every R <= " << rmax << " (" << brute.size()
            << " vectors at R=" << rmax << ")\n";
  return kOk;
}

ClassificationReport obtain_report(const SearchArgs& a) {
  if (!a.report.empty()) return parse_report_json(read_file(a.report));
  if (a.rmax < 1) throw InvalidInput("give --rmax or --report");
  return run_search(config_from(a));
}

int cmd_search(const SearchArgs& a) {
  if (a.brute_check > 0) {
    int rc = brute_check(a.brute_check);
    if (rc != kOk || a.rmax < 1) return rc;
  }
  if (a.rmax < 1) throw InvalidInput("--rmax must be at least 1");
  RunLog log;
  const ClassificationReport rep = run_search(config_from(a), &log);
  if (!a.kind.empty()) {
    print_pairs(rep, a.kind);
  } else {
    print_stats(rep);
    if (a.resume) std::cout << "shards resumed: " << log.shards_resumed << ", computed: " << log.shards_computed << '\n';
  }
  return kOk;
}

struct DecomposeArgs {
  i64 s = 1;
  int w1 = 0;
  int w2 = 0;
  std::optional<i64> p1;
  std::optional<i64> q1;
  std::optional<i64> twist;
  i64 dim = 7;
  std::optional<i64> rank;
};

std::string degrees_text(const LineBundleSum& sum) {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < sum.degrees.size(); ++i) os << (i ? "," : "") << sum.degrees[i];
  os << ')';
  return os.str();
}

std::string classes_text(const BundleClassData& d) {
  std::ostringstream os;
  os << "rank=" << d.rank << " w1=" << d.w1 << " w2=" << d.w2;
  if (d.p1) os << " p1=" << d.p1->value;
  if (d.q1) {
    os << " q1=" << d.q1->value;
    if (d.q1_twist != 0) os << " (of F - rL_" << d.q1_twist << ")";
  }
  return os.str();
}

int cmd_decompose(const DecomposeArgs& a) {
  if (a.s < 1) throw InvalidInput("--s must be at least 1");
  const BaseSpace space = cyclic_base(a.dim, a.s);
  const i64 threshold = rank_threshold(space);

  BundleClassData f;
  f.w1 = a.w1;
  f.w2 = a.w2;
  if (a.p1) f.p1 = symmetric_rep(*a.p1, a.s);
  if (a.q1) {
    f.q1 = symmetric_rep(*a.q1, a.s);
    f.q1_twist = a.twist ? *a.twist : a.w2;
  }
  if (!f.p1 && !f.q1) {
    if (a.s % 2 == 0) {
      f.q1 = symmetric_rep(0, a.s);
      f.q1_twist = a.twist ? *a.twist : a.w2;
    } else {
      f.p1 = symmetric_rep(0, a.s);
    }
  }
  const LineBundleSum sum = decompose_to_line_bundles(f, space);
  const BundleClassData back = char_classes_of_line_sum(sum, space, f.q1 ? f.q1_twist : 0);
  const bool same = stably_equivalent(f, back, space);
  std::cout << "sigma4: " << sigma4(a.s) << '\n';
  std::cout << "degrees: " << degrees_text(sum) << '\n';
  std::cout << "classes: " << classes_text(back) << '\n';
  std::cout << "stably equivalent to input: " << (same ? "yes" : "no") << '\n';
  std::cout << "rank threshold: " << threshold << '\n';
  if (a.rank) std::cout << "rank " << *a.rank << ": " << (*a.rank >= threshold ? "pass" : "fail") << '\n';
  return same ? kOk : kInternal;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Eschenburg space invariants, classification search and bundle calculus"};
  app.require_subcommand(1);

  std::vector<std::string> inv_args;
  auto* inv = app.add_subcommand("invariants", "Invariants of one space: k1 k2 k3 l1 l2 l3");
  inv->add_option("params", inv_args, "six integers")->required()->expected(1, 6)->allow_extra_args();

  SearchArgs sa;
  auto add_run_options = [&](CLI::App* cmd) {
    cmd->add_option("--rmax", sa.rmax, "largest r to enumerate");
    cmd->add_option("--shards", sa.shards, "number of r-range shards")->check(CLI::PositiveNumber);
    cmd->add_option("--threads", sa.threads, "worker threads (default: hardware)");
    cmd->add_option("--out", sa.out, "output directory for shard CSVs, manifest and report");
    cmd->add_flag("--resume", sa.resume, "reuse shard CSVs whose checksum matches the manifest");
    cmd->add_option("--emit", sa.emit, "outputs to write: csv,json")->delimiter(',');
    cmd->add_option("--level", sa.level, "deepest family level in report.json");
  };
  auto* search = app.add_subcommand("search", "Enumerate and classify all normal-form spaces with r <= rmax");
  add_run_options(search);
  search->add_option("--kind", sa.kind, "print pairs: HomotopyNotTangential, TangentialNotHomeo, Homeomorphic");
  search->add_option("--brute-check", sa.brute_check, "compare the enumerator with brute force for R <= N (N <= 100)");

  auto* pairs = app.add_subcommand("pairs", "List pairs of one kind, from a report or a fresh search");
  add_run_options(pairs);
  pairs->add_option("--kind", sa.kind, "HomotopyNotTangential, TangentialNotHomeo or Homeomorphic")->required();
  pairs->add_option("--report", sa.report, "read an existing report.json instead of searching");

  auto* stats = app.add_subcommand("stats", "Class counts per level");
  add_run_options(stats);
  stats->add_option("--report", sa.report, "read an existing report.json instead of searching");

  DecomposeArgs da;
  auto* dec = app.add_subcommand("decompose", "Split bundle data into complex line bundles");
  dec->add_option("--s", da.s, "order of H^4 (1 = trivial)")->required();
  dec->add_option("--w1", da.w1, "first Stiefel-Whitney class");
  dec->add_option("--w2", da.w2, "second Stiefel-Whitney class");
  dec->add_option("--p1", da.p1, "first Pontryagin class mod s");
  dec->add_option("--q1", da.q1, "Spin class q1 (of F - rL_b for non-Spin data)");
  dec->add_option("--twist", da.twist, "degree b of the subtracted line bundle (default w2)");
  dec->add_option("--dim", da.dim, "dimension of the base");
  dec->add_option("--rank", da.rank, "rank to test against the threshold");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kInvalid;
  }

  try {
    if (*inv) {
      std::vector<std::string> all = inv_args;
      for (const auto& extra : inv->remaining()) all.push_back(extra);
      return cmd_invariants(all);
    }
    if (*search) return cmd_search(sa);
    if (*pairs) {
      print_pairs(obtain_report(sa), sa.kind);
      return kOk;
    }
    if (*stats) {
      print_stats(obtain_report(sa));
      return kOk;
    }
    if (*dec) return cmd_decompose(da);
  } catch (const IoError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kIo;
  } catch (const HypothesesViolated& e) {
    std::cerr << "error: hypotheses violated: " << e.what() << '\n';
    return kHypothesis;
  } catch (const InvalidInput& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kInvalid;
  } catch (const Overflow& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kInvalid;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << '\n';
    return kInternal;
  }
  return kOk;
}
