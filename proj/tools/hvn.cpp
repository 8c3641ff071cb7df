// Command-line surface: construction, classification, isomorphism
// decisions, duality roundtrips, and the verification suites. One command
// per invocation; identical inputs produce byte-identical output.
//
// Exit codes: 0 success/pass, 1 negative verdict (iso NOT isomorphic,
// gassmann none, verify failures), 2 usage or input error, 3 internal.

#include <cstdlib>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "hvn/character.hpp"
#include "hvn/corpus.hpp"
#include "hvn/duality.hpp"
#include "hvn/dynsys.hpp"
#include "hvn/errors.hpp"
#include "hvn/io.hpp"
#include "hvn/measure.hpp"
#include "hvn/verify.hpp"

namespace {

using namespace hvn;

struct GroupChoice {
  std::string source;  // --group value (path or inline id)
  int cyclic = 0;
  int symmetric = 0;
  int dihedral = 0;

  LoadedGroup resolve() const {
    int given = (!source.empty()) + (cyclic > 0) + (symmetric > 0) + (dihedral > 0);
    if (given != 1) {
      fail(ErrorKind::Usage, "give exactly one of --group, --cyclic, --symmetric, --dihedral");
    }
    if (cyclic > 0) return group_from_inline("cyclic:" + std::to_string(cyclic));
    if (symmetric > 0) return group_from_inline("symmetric:" + std::to_string(symmetric));
    if (dihedral > 0) return group_from_inline("dihedral:" + std::to_string(dihedral));
    return load_group(source, std::filesystem::current_path());
  }
};

void add_group_flags(CLI::App* cmd, GroupChoice& gc) {
  cmd->add_option("--group", gc.source, "group file (.cayley/.perm) or inline id");
  cmd->add_option("--cyclic", gc.cyclic, "cyclic group of order n");
  cmd->add_option("--symmetric", gc.symmetric, "symmetric group on n letters");
  cmd->add_option("--dihedral", gc.dihedral, "dihedral group of order 2n");
}

// HVN_ORDER_CAP bounds the order of any group a command will accept.
void enforce_order_cap(const GroupPtr& g) {
  const char* cap = std::getenv("HVN_ORDER_CAP");
  if (!cap) return;
  long long limit = std::atoll(cap);
  if (limit > 0 && g->order > limit) {
    fail(ErrorKind::CapExceeded, "group order " + std::to_string(g->order) +
                                     " exceeds HVN_ORDER_CAP=" + std::to_string(limit));
  }
}

LoadedAction load_system_checked(const std::string& path) {
  LoadedAction la = load_action_file(path);
  enforce_order_cap(la.group.group);
  return la;
}

// Two independently loaded systems compare by pointer identity inside the
// library; rebind the second onto the first group when the tables match.
void unify_groups(LoadedAction& a, LoadedAction& b) {
  const GroupPtr& ga = a.group.group;
  const GroupPtr& gb = b.group.group;
  if (ga == gb) return;
  if (ga->table != gb->table) {
    fail(ErrorKind::GroupMismatch, "systems reference different groups ('" + a.group.id + "' vs '" +
                                       b.group.id + "')");
  }
  b.system = make_system(ga, b.system.points, b.system.action);
}

std::string spectrum_line(const PointSpectrum& ps) {
  std::string out;
  for (int i : ps.support()) {
    if (!out.empty()) out += ", ";
    out += "chi" + std::to_string(i) + " deg " + std::to_string(ps.table->degrees[i]) + " mult " +
           std::to_string(ps.mult[i]);
  }
  return out.empty() ? "(empty)" : out;
}

int cmd_chartable(const GroupChoice& gc, bool json) {
  LoadedGroup lg = gc.resolve();
  enforce_order_cap(lg.group);
  TablePtr t = character_table(lg.group);
  if (json) {
    ordered_json j = chartable_json(*t);
    j["group"] = lg.id.empty() ? "(inline)" : lg.id;
    std::cout << j.dump(2) << "\n";
    return 0;
  }
  std::cout << "group " << lg.id << ": order " << lg.group->order << ", " << t->classes.size()
            << " classes, root order " << t->root_order << "\n";
  std::cout << "degrees:";
  for (int d : t->degrees) std::cout << " " << d;
  std::cout << "\nclass sizes:";
  for (const auto& c : t->classes) std::cout << " " << c.size();
  std::cout << "\nclass reps:";
  for (int r : t->class_rep) std::cout << " " << lg.group->labels[r];
  std::cout << "\n";
  for (std::size_t i = 0; i < t->rows.size(); ++i) {
    std::cout << "chi" << i << " (deg " << t->degrees[i] << "):";
    for (const Cyclotomic& v : t->rows[i].values) std::cout << " " << v.str();
    std::cout << "\n";
  }
  std::cout << "table hash " << hash_hex(table_hash(*t)) << "\n";
  return 0;
}

int cmd_classify(const std::string& system_path, bool json) {
  LoadedAction la = load_system_checked(system_path);
  const TopSystem& s = la.system;
  TablePtr t = character_table(s.group);
  PointSpectrum ps = point_spectrum(t, s);
  NormalityReport nr = is_normal(t, s);
  std::size_t orbit_count = orbits(s).size();

  std::optional<TopSystem> canonical;
  if (nr.normal) {
    GrouplikeSubset sigma{t, ps.support()};
    canonical = realize_spectrum(sigma);
  }

  if (json) {
    ordered_json j;
    j["group"] = la.group.id;
    j["points"] = s.points;
    j["orbits"] = orbit_count;
    j["minimal"] = nr.minimal;
    j["spectrum"] = spectrum_json(ps);
    j["normal"] = nr.normal;
    if (!nr.normal) j["diagnosis"] = nr.diagnosis;
    if (canonical) {
      ordered_json c;
      c["points"] = canonical->points;
      c["support"] = ps.support();
      j["canonical_model"] = std::move(c);
    }
    std::cout << j.dump(2) << "\n";
    return 0;
  }

  std::cout << "group " << la.group.id << ", " << s.points << " points, " << orbit_count
            << (orbit_count == 1 ? " orbit\n" : " orbits\n");
  std::cout << (nr.minimal ? "minimal\n" : "not minimal\n");
  std::cout << "spectrum: " << spectrum_line(ps) << "\n";
  if (nr.normal) {
    std::cout << "normal\n";
    std::cout << "canonical model: rotation on the quotient by the action kernel ("
              << canonical->points << " points), same spectrum support\n";
  } else {
    std::cout << "NOT normal (" << nr.diagnosis << ")\n";
  }
  return 0;
}

int cmd_iso(const std::vector<std::string>& system_paths, bool oracle, bool json) {
  if (system_paths.size() != 2) fail(ErrorKind::Usage, "iso needs exactly two --system files");
  LoadedAction a = load_system_checked(system_paths[0]);
  LoadedAction b = load_system_checked(system_paths[1]);
  unify_groups(a, b);
  TablePtr t = character_table(a.system.group);

  std::optional<IsoDecision> decision;
  std::string decision_error;
  try {
    decision = normal_iso_decision(t, a.system, b.system);
  } catch (const Error& e) {
    if (e.kind() != ErrorKind::NotNormal || !oracle) throw;
    decision_error = e.what();  // fall through to the oracle on non-normal input
  }

  std::optional<Perm> witness;
  bool gassmann_case = false;
  bool verdict = false;
  if (decision) {
    verdict = decision->isomorphic;
    witness = decision->certificate;
    if (oracle) {
      std::optional<Perm> brute = brute_force_iso(a.system, b.system);
      require_internal(brute.has_value() == verdict, "oracle disagrees with the spectrum decision");
      if (!witness) witness = brute;
    }
  } else {
    witness = brute_force_iso(a.system, b.system);
    verdict = witness.has_value();
  }
  if (!verdict) {
    PointSpectrum sa = point_spectrum(t, a.system);
    PointSpectrum sb = point_spectrum(t, b.system);
    gassmann_case = sa.mult == sb.mult;
  }

  if (json) {
    ordered_json j;
    j["group"] = a.group.id;
    j["isomorphic"] = verdict;
    if (witness) j["certificate"] = *witness;
    if (!decision) j["decision_path"] = "exhaustive (not normal)";
    if (gassmann_case) j["spectra_equal"] = true;
    std::cout << j.dump(2) << "\n";
  } else {
    if (!decision_error.empty()) std::cout << "spectrum decision unavailable: " << decision_error << "\n";
    std::cout << (verdict ? "ISOMORPHIC" : "NOT isomorphic") << "\n";
    if (witness) {
      std::cout << "certificate:";
      for (int y : *witness) std::cout << " " << y;
      std::cout << "\n";
    }
    if (gassmann_case) {
      std::cout << "warning: spectra EQUAL yet systems NOT isomorphic (Gassmann phenomenon; "
                   "spectrum does not separate non-normal systems)\n";
    }
  }
  return verdict ? 0 : 1;
}

int cmd_verify(const std::string& suite, int max_order, unsigned seed, bool json) {
  std::vector<SuiteReport> reports;
  if (suite == "duality" || suite == "all") {
    reports.push_back(run_duality_suite(max_order));
    reports.push_back(run_abelian_suite(max_order));
  }
  if (suite == "envrot" || suite == "all") {
    reports.push_back(run_envrot_suite(max_order, 24, seed));
  }
  if (suite == "hvn" || suite == "all") {
    reports.push_back(run_hvn_suite(max_order, 16, seed));
    reports.push_back(run_realization_suite(max_order));
    reports.push_back(run_multbound_suite(max_order));
  }
  if (suite == "meastop" || suite == "all") {
    reports.push_back(run_meastop_suite(max_order, 12));
  }
  if (suite == "all") {
    reports.push_back(run_chartable_suite(max_order, max_order >= 168));
    if (max_order >= 168) reports.push_back(run_gassmann_suite());
  }
  if (reports.empty()) {
    fail(ErrorKind::Usage, "unknown suite '" + suite + "' (duality|envrot|meastop|hvn|all)");
  }

  bool all_ok = true;
  if (json) {
    ordered_json out = ordered_json::array();
    for (const SuiteReport& rep : reports) {
      all_ok = all_ok && rep.ok();
      ordered_json jr;
      jr["suite"] = rep.suite;
      jr["passed"] = rep.passed();
      jr["failed"] = rep.failed();
      ordered_json checks = ordered_json::array();
      for (const CheckResult& c : rep.checks) {
        ordered_json jc;
        jc["name"] = c.name;
        jc["pass"] = c.pass;
        jc["detail"] = c.detail;
        checks.push_back(std::move(jc));
      }
      jr["checks"] = std::move(checks);
      out.push_back(std::move(jr));
    }
    std::cout << out.dump(2) << "\n";
  } else {
    for (const SuiteReport& rep : reports) {
      all_ok = all_ok && rep.ok();
      for (const CheckResult& c : rep.checks) {
        std::cout << (c.pass ? "[PASS] " : "[FAIL] ") << c.name;
        if (!c.detail.empty()) std::cout << " (" << c.detail << ")";
        std::cout << "\n";
      }
      std::cout << "suite " << rep.suite << ": " << rep.passed() << " passed, " << rep.failed()
                << " failed\n";
    }
    std::cout << (all_ok ? "ALL SUITES PASSED" : "FAILURES PRESENT") << "\n";
  }
  return all_ok ? 0 : 1;
}

int cmd_gassmann(const GroupChoice& gc, bool json) {
  LoadedGroup lg = gc.resolve();
  enforce_order_cap(lg.group);
  std::optional<GassmannPair> pair = gassmann_search(lg.group);
  if (json) {
    ordered_json j;
    j["group"] = lg.id;
    j["found"] = pair.has_value();
    if (pair) {
      TablePtr t = character_table(lg.group);
      j["points"] = pair->a.points;
      j["subgroup_u"] = pair->u.members;
      j["subgroup_v"] = pair->v.members;
      j["spectrum"] = spectrum_json(point_spectrum(t, pair->a));
    }
    std::cout << j.dump(2) << "\n";
    return pair ? 0 : 1;
  }
  if (!pair) {
    std::cout << "none\n";
    return 1;
  }
  TablePtr t = character_table(lg.group);
  PointSpectrum ps = point_spectrum(t, pair->a);
  std::cout << "found: two non-conjugate subgroups of order " << pair->u.members.size()
            << " with identical coset-action spectra on " << pair->a.points << " points\n";
  std::cout << "shared spectrum: " << spectrum_line(ps) << "\n";
  std::cout << "exhaustive search confirms the actions are NOT isomorphic\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"finite dynamical classification toolkit"};
  app.require_subcommand(1);

  GroupChoice table_gc;
  bool table_json = false;
  CLI::App* c_table = app.add_subcommand("chartable", "print the character table of a group");
  add_group_flags(c_table, table_gc);
  c_table->add_flag("--json", table_json, "machine-readable output");

  std::vector<std::string> classify_systems;
  bool classify_json = false;
  CLI::App* c_classify = app.add_subcommand("classify", "spectrum and normality of a system");
  c_classify->add_option("--system", classify_systems, "action file")->required();
  c_classify->add_flag("--json", classify_json, "machine-readable output");

  std::vector<std::string> iso_systems;
  bool iso_oracle = false;
  bool iso_json = false;
  CLI::App* c_iso = app.add_subcommand("iso", "decide isomorphism of two systems");
  c_iso->add_option("--system", iso_systems, "action file (give twice)");
  c_iso->add_flag("--oracle", iso_oracle, "cross-check with exhaustive search");
  c_iso->add_flag("--json", iso_json, "machine-readable output");

  std::string verify_suite = "all";
  int verify_max_order = 24;
  unsigned verify_seed = 0;
  bool verify_json = false;
  CLI::App* c_verify = app.add_subcommand("verify", "run a verification suite over the corpus");
  c_verify->add_option("--suite", verify_suite, "duality|envrot|meastop|hvn|all");
  c_verify->add_option("--max-order", verify_max_order, "largest corpus group order");
  c_verify->add_option("--seed", verify_seed, "seed for relabeled copies");
  c_verify->add_flag("--json", verify_json, "machine-readable output");

  GroupChoice gas_gc;
  bool gas_json = false;
  CLI::App* c_gas = app.add_subcommand("gassmann", "search for equal-spectrum non-isomorphic actions");
  add_group_flags(c_gas, gas_gc);
  c_gas->add_flag("--json", gas_json, "machine-readable output");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (const char* cap = std::getenv("HVN_ORDER_CAP"); cap && std::atoll(cap) > 0) {
      verify_max_order = std::min<long long>(verify_max_order, std::atoll(cap));
    }
    if (c_table->parsed()) return cmd_chartable(table_gc, table_json);
    if (c_classify->parsed()) {
      if (classify_systems.size() != 1) fail(ErrorKind::Usage, "classify needs one --system file");
      return cmd_classify(classify_systems[0], classify_json);
    }
    if (c_iso->parsed()) return cmd_iso(iso_systems, iso_oracle, iso_json);
    if (c_verify->parsed()) return cmd_verify(verify_suite, verify_max_order, verify_seed, verify_json);
    if (c_gas->parsed()) return cmd_gassmann(gas_gc, gas_json);
    fail(ErrorKind::Usage, "no subcommand given");
  } catch (const Error& e) {
    std::cerr << "error [" << error_kind_name(e.kind()) << "]: " << e.what() << "\n";
    if (e.kind() == ErrorKind::Internal) return 3;
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 3;
  }
}
