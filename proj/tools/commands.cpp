#include "commands.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <regex>
#include <sstream>

#include "captower/catalog.hpp"
#include "captower/fieldlab.hpp"
#include "captower/genealogy.hpp"
#include "captower/verify.hpp"

namespace cap::cli {

namespace {

struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string format_tau(const std::array<ATI, 4>& t) {
  if (t[0] == t[1] && t[1] == t[2]) return "[" + format_ati(t[0]) + "^3;" + format_ati(t[3]) + "]";
  return "[" + format_ati(t[0]) + "," + format_ati(t[1]) + "," + format_ati(t[2]) + ";" + format_ati(t[3]) + "]";
}

// "[(9,9)^3;(9,9,3)]" or "[(9,9),(9,9),(9,9);(9,9,3)]"
std::array<ATI, 4> parse_tau(const std::string& s) {
  static const std::regex part(R"(\(([0-9,]+)\)(\^3)?)");
  std::vector<ATI> v;
  for (auto it = std::sregex_iterator(s.begin(), s.end(), part); it != std::sregex_iterator(); ++it) {
    ATI a = parse_ati("(" + (*it)[1].str() + ")");
    v.push_back(a);
    if ((*it)[2].matched) {
      v.push_back(a);
      v.push_back(a);
    }
  }
  if (v.size() != 4) throw InputError("tau must have four components: '" + s + "'");
  return {v[0], v[1], v[2], v[3]};
}

int parse_max_log(const std::string& s) {
  if (s.rfind("3^", 0) == 0) return std::stoi(s.substr(2));
  long long n = std::stoll(s);
  int l = 0;
  while (n > 1 && n % 3 == 0) {
    n /= 3;
    ++l;
  }
  if (n != 1) throw InputError("--max-order must be a power of 3: '" + s + "'");
  return l;
}

CapitulationClass parse_class(const std::string& s) {
  std::string t = s;
  std::transform(t.begin(), t.end(), t.begin(), ::tolower);
  if (t == "distinguished") return CapitulationClass::Distinguished;
  if (t == "hv1" || t == "harmonicvariant1") return CapitulationClass::HarmonicVariant1;
  if (t == "hv2" || t == "harmonicvariant2") return CapitulationClass::HarmonicVariant2;
  if (t == "total") return CapitulationClass::Total;
  try {
    return class_of_code(s);
  } catch (const std::invalid_argument& e) {
    throw InputError(e.what());
  }
}

std::string resolve_data_path(const std::string& p) {
  if (p.empty()) return data_dir() + "/table1.csv";
  if (std::filesystem::exists(p)) return p;
  std::string alt = data_dir() + "/" + p;
  if (std::filesystem::exists(alt)) return alt;
  throw InputError("cannot open " + p);
}

const PaperIdMap* default_ids() {
  static std::optional<PaperIdMap> ids;
  static bool tried = false;
  if (!tried) {
    tried = true;
    std::string path = data_dir() + "/paper_ids.txt";
    if (std::filesystem::exists(path)) ids = PaperIdMap::load(path);
  }
  return ids ? &*ids : nullptr;
}

struct Config {
  std::string group;
  std::string catalog;
  std::string max_order;
  int step = 0;
  long long budget = 20'000'000;
  std::string emit = "text";
  std::string out;
  std::string data;
  bool strict = false;
  std::string kappa;
  std::string tau2;
  int criterion = 0;
};

class Output {
 public:
  Output(const std::string& path, std::ostream& fallback) : os_(&fallback) {
    if (!path.empty()) {
      file_.open(path);
      if (!file_) throw InputError("cannot write " + path);
      os_ = &file_;
    }
  }
  std::ostream& operator()() { return *os_; }

 private:
  std::ofstream file_;
  std::ostream* os_;
};

PcPresentation load_group(const Config& c) {
  if (c.group.empty()) throw InputError("--group is required");
  Catalog cat = c.catalog.empty() ? Catalog::load_default() : Catalog::load(c.catalog);
  try {
    return resolve_group(c.group, cat);
  } catch (const std::out_of_range& e) {
    throw InputError(e.what());
  }
}

int cmd_ap(const Config& c, std::ostream& out) {
  const PcPresentation P = load_group(c);
  Output o(c.out, out);
  ArtinPattern ap = artin_pattern(P);
  if (ap.empty) {
    if (c.emit == "csv") o() << "group,kappa,tau,kappa2,tau2,class\n" << c.group << ",,,,,Other\n";
    else o() << "group " << c.group << "\npattern empty (G/G' is not of type (9,3))\n";
    return kOk;
  }
  ArtinPattern canon = canonicalize_kappa(ap);
  std::string k2 = "(" + ap.kappa2[0] + "," + ap.kappa2[1] + "," + ap.kappa2[2] + ";" + ap.kappa2[3] + ")";
  if (c.emit == "csv") {
    o() << "group,kappa,tau,kappa2,tau2,class\n"
        << c.group << "," << canon.kappa_string() << ",\"" << format_tau(canon.tau) << "\",\"" << k2 << "\",\""
        << format_tau(ap.tau2) << "\"," << to_string(classify_capitulation(ap)) << "\n";
    return kOk;
  }
  o() << "group  " << c.group << "\n"
      << "kappa  " << canon.kappa_string() << " (computed " << ap.kappa_string() << ")\n"
      << "tau    " << format_tau(canon.tau) << "\n"
      << "kappa2 " << k2 << "\n"
      << "tau2   " << format_tau(ap.tau2) << "\n"
      << "class  " << to_string(classify_capitulation(ap)) << "\n";
  return kOk;
}

int cmd_cover(const Config& c, std::ostream& out) {
  const PcPresentation P = load_group(c);
  Output o(c.out, out);
  if (P.n == 0) {
    o() << "trivial group: multiplicator rank 0, nucleus rank 0\n";
    return kOk;
  }
  PcPresentation W = standardize(P);
  CoverData C = p_cover(W, kMaxGens);
  o() << "order            3^" << W.log_order() << "\n"
      << "p-class          " << C.pclass << "\n"
      << "generator rank   " << rank_of_frattini_quotient(W) << "\n"
      << "multiplicator    " << C.multiplicator_rank << "\n"
      << "nucleus          " << C.nucleus_rank << "\n"
      << "relation rank    " << relation_rank(W) << "\n"
      << "cover order      3^" << C.cover.log_order() << "\n";
  return kOk;
}

void node_line(std::ostream& os, const TreeNode& n, const std::string& indent) {
  os << indent << n.coord << "  3^" << n.fp.log_order << "  " << (n.pattern.empty ? "-" : n.pattern.kappa_string())
     << "  " << (n.pattern.empty ? "-" : format_tau(n.pattern.tau)) << "  d2=" << n.fp.relation_rank << "  "
     << to_string(n.action) << (n.s3xc2 ? "xC2" : "") << "  " << (n.metabelian ? "metabelian" : "non-metabelian")
     << "  " << n.fp.hash();
  if (!n.paper_id.empty()) os << "  " << n.paper_id;
  if (n.pruned) os << "  (pruned)";
  os << "\n";
}

void csv_header(std::ostream& os) { os << "coord,parent,step,log_order,kappa,tau,d2,action,metabelian,hash,paper_id\n"; }

void csv_line(std::ostream& os, const Tree& t, const TreeNode& n) {
  os << n.coord << "," << (n.parent < 0 ? "" : t.nodes[n.parent].coord) << "," << n.step << "," << n.fp.log_order << ","
     << (n.pattern.empty ? "" : n.pattern.kappa_string()) << ",\"" << (n.pattern.empty ? "" : format_tau(n.pattern.tau))
     << "\"," << n.fp.relation_rank << "," << to_string(n.action) << (n.s3xc2 ? "xC2" : "") << ","
     << (n.metabelian ? 1 : 0) << "," << n.fp.hash() << "," << n.paper_id << "\n";
}

TreeOptions tree_options(const Config& c, int default_max_log) {
  TreeOptions to;
  to.max_log = c.max_order.empty() ? default_max_log : parse_max_log(c.max_order);
  if (c.step > 0) to.max_step = c.step;
  to.budget = c.budget;
  to.strict_frattini = c.strict;
  to.ids = default_ids();
  return to;
}

int cmd_descend(const Config& c, std::ostream& out) {
  const PcPresentation P = load_group(c);
  if (P.n == 0) throw InputError("the trivial group has no descendants in this setting");
  TreeOptions to = tree_options(c, 99);
  to.max_depth = 1;
  to.same_abelianization = false;
  if (c.step > 0) to.max_step = c.step;
  Tree t = build_tree(P, to);
  Output o(c.out, out);
  if (c.emit == "csv") {
    csv_header(o());
    for (const auto& n : t.nodes)
      if (n.parent >= 0 && (c.step == 0 || n.step == c.step)) csv_line(o(), t, n);
    return kOk;
  }
  std::map<int, int> per_step;
  for (const auto& n : t.nodes)
    if (n.parent >= 0 && (c.step == 0 || n.step == c.step)) {
      ++per_step[n.step];
      node_line(o(), n, "");
    }
  for (auto [s, k] : per_step) o() << "step " << s << ": " << k << " descendants\n";
  return kOk;
}

int cmd_tree(const Config& c, std::ostream& out) {
  const PcPresentation P = load_group(c);
  TreeOptions to = tree_options(c, P.n == 0 ? 0 : std::min(10, P.log_order() + 3));
  Tree t;
  if (P.n == 0) {
    // the trivial group is a tree of one vertex
    TreeNode n;
    n.coord = "R";
    n.fp = fingerprint(P);
    n.pattern.empty = true;
    n.metabelian = true;
    t.nodes.push_back(n);
  } else {
    t = build_tree(P, to);
  }
  Output o(c.out, out);
  if (c.emit == "dot") {
    o() << emit_dot(t, c.group);
  } else if (c.emit == "csv") {
    csv_header(o());
    for (const auto& n : t.nodes) csv_line(o(), t, n);
  } else {
    std::function<void(int, int)> walk = [&](int v, int depth) {
      node_line(o(), t.nodes[v], std::string(2 * depth, ' '));
      for (int ch : t.nodes[v].children) walk(ch, depth + 1);
    };
    walk(0, 0);
    int lo = t.nodes[0].fp.log_order;
    auto counts = t.count_per_log(lo, to.max_log);
    o() << "vertices per order:";
    for (size_t i = 0; i < counts.size(); ++i) o() << " 3^" << lo + int(i) << ":" << counts[i];
    o() << "\nmainline:";
    for (int v : t.mainline()) o() << " " << t.nodes[v].coord;
    o() << "\n";
  }
  return kOk;
}

int cmd_aut(const Config& c, std::ostream& out) {
  const PcPresentation P = load_group(c);
  Output o(c.out, out);
  if (P.n == 0) {
    o() << "|Aut| = 1\naction Trivial\n";
    return kOk;
  }
  PcPresentation W = standardize(P);
  AutGroup A = automorphism_group(W);
  ActionReport r = s3_action_check(W, A, c.strict);
  long double ord = A.order();
  long long three = 1;
  for (int i = 0; i < A.log3_order(); ++i) three *= 3;
  o() << "|Aut| = " << std::llround(double(ord)) << " = 3^" << A.log3_order() << " * " << std::llround(double(ord / three))
      << "\n"
      << "image in GL(2,3) of order " << r.image_order << "\n"
      << "action " << to_string(r.action) << (r.s3xc2 ? " (S3 x C2)" : "") << "\n"
      << "witnesses " << (r.exact_witnesses ? "exact" : r.sigma ? "on G/Phi only" : "none") << "\n";
  return kOk;
}

int cmd_identify(const Config& c, std::ostream& out) {
  if (c.kappa.empty()) throw InputError("--kappa is required (4444, 1234, 1234*, 0004 or a class name)");
  CapitulationClass cls = parse_class(c.kappa);
  IdentifyOptions opt;
  if (!c.tau2.empty()) opt.tau2 = parse_tau(c.tau2);
  if (!c.max_order.empty()) opt.max_log = parse_max_log(c.max_order);
  opt.strict_frattini = c.strict;
  opt.catalog_path = c.catalog;
  opt.ids = default_ids();
  IdentifyResult r;
  try {
    r = identify_tower_group(cls, opt);
  } catch (const std::invalid_argument& e) {
    throw InputError(e.what());
  }
  Output o(c.out, out);
  o() << "class " << to_string(cls) << "  " << class_pattern(cls).kappa_string() << " "
      << format_tau(class_pattern(cls).tau) << "\n";
  for (const auto& k : r.candidates)
    o() << "  " << (k.paper_id.empty() ? "?" : k.paper_id) << "  " << k.root << " " << k.coord << "  d2=" << k.fp.relation_rank
        << "  tau2=" << format_tau(k.pattern.tau2) << "  " << k.fp.hash() << "\n";
  o() << "verdict " << r.verdict << "\n";
  for (const auto& n : r.notes) o() << "note: " << n << "\n";
  return kOk;
}

int cmd_survey(const Config& c, std::ostream& out) {
  std::vector<FieldRecord> recs;
  try {
    recs = load_survey(resolve_data_path(c.data));
  } catch (const std::runtime_error& e) {
    throw InputError(e.what());
  }
  Output o(c.out, out);
  const bool csv = c.emit == "csv";
  if (csv) o() << "index,p,kappa,class,candidates,verdict\n";
  for (auto& r : recs) {
    r = tower_candidates(r);
    std::string cands;
    for (const auto& k : r.candidates) cands += (cands.empty() ? "" : " ") + k;
    if (csv)
      o() << r.index << "," << r.p << "," << r.kappa_code << "," << to_string(r.cls) << ",\"" << cands << "\"," << r.verdict
          << "\n";
    else
      o() << r.p << " " << r.kappa_code << " " << to_string(r.cls) << " " << cands << " " << r.verdict << "\n";
  }
  if (csv) return kOk;
  SurveyStats st = survey_statistics(recs);
  auto cnt = [&](CapitulationClass k) { return st.counts.count(k) ? st.counts.at(k) : 0; };
  char buf[160];
  o() << "\nsummary (" << st.total << " fields)\n";
  for (auto k : {CapitulationClass::Distinguished, CapitulationClass::HarmonicVariant1,
                 CapitulationClass::HarmonicVariant2, CapitulationClass::Total}) {
    std::snprintf(buf, sizeof buf, "  %-17s %3d  %5.2f%%\n", to_string(k).c_str(), cnt(k), st.percent(k));
    o() << buf;
  }
  o() << "  distribution " << cnt(CapitulationClass::Distinguished) << "/" << cnt(CapitulationClass::HarmonicVariant1)
      << "/" << cnt(CapitulationClass::HarmonicVariant2) << "/" << cnt(CapitulationClass::Total) << "\n";
  std::snprintf(buf, sizeof buf, "  two-stage tower %d/%d = %.2f%% (abstract: at least 94%%)\n", st.two_stage, st.total,
                st.two_stage_percent());
  o() << buf;
  o() << "  candidate sets pending second-layer field data\n";
  return kOk;
}

int cmd_verify(const Config& c, std::ostream& out) {
  BatteryOptions bo;
  bo.catalog_path = c.catalog;
  if (!c.data.empty()) bo.survey_path = resolve_data_path(c.data);
  bo.strict_frattini = c.strict;
  std::vector<Check> checks = c.criterion ? run_criterion(c.criterion, bo) : run_battery(bo);
  Output o(c.out, out);
  int failed = 0;
  for (const auto& k : checks) {
    failed += !k.pass;
    o() << (k.pass ? "PASS" : "FAIL") << " [" << k.criterion << "] " << k.name;
    if (!k.detail.empty()) o() << ": " << k.detail;
    o() << "\n";
  }
  o() << checks.size() - failed << " of " << checks.size() << " checks passed\n";
  return failed ? kVerifyFailed : kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Artin patterns, descendant trees and class field tower candidates for 3-groups"};
  app.name("captower");
  app.require_subcommand(1);
  Config c;
  auto add_common = [&](CLI::App* s) {
    s->add_option("--catalog", c.catalog, "catalog file (default <data>/catalog.txt)");
    s->add_option("--out", c.out, "write output to this file");
    s->add_flag("--strict-frattini-action", c.strict, "test S3 on all of Aut(G/Phi(G))");
  };
  auto add_group = [&](CLI::App* s) { s->add_option("--group", c.group, "catalog name or inline presentation"); };
  auto add_emit = [&](CLI::App* s, std::vector<std::string> allowed) {
    s->add_option("--emit", c.emit, "output format")->check(CLI::IsMember(allowed));
  };

  auto* ap = app.add_subcommand("ap", "Artin pattern of a group");
  add_group(ap), add_common(ap), add_emit(ap, {"text", "csv"});
  auto* cover = app.add_subcommand("cover", "p-covering group data");
  add_group(cover), add_common(cover);
  auto* descend = app.add_subcommand("descend", "immediate descendants");
  add_group(descend), add_common(descend), add_emit(descend, {"text", "csv"});
  descend->add_option("--step", c.step, "step size (default all)")->check(CLI::PositiveNumber);
  descend->add_option("--budget", c.budget, "allowable subspaces per expansion")->check(CLI::PositiveNumber);
  auto* tree = app.add_subcommand("tree", "descendant tree");
  add_group(tree), add_common(tree), add_emit(tree, {"text", "dot", "csv"});
  tree->add_option("--max-order", c.max_order, "largest order, e.g. 59049 or 3^10");
  tree->add_option("--step", c.step, "largest step size")->check(CLI::PositiveNumber);
  tree->add_option("--budget", c.budget, "allowable subspaces per expansion")->check(CLI::PositiveNumber);
  auto* aut = app.add_subcommand("aut", "automorphism group and action on G/Phi(G)");
  add_group(aut), add_common(aut);
  auto* identify = app.add_subcommand("identify", "tower group candidates for a capitulation class");
  add_common(identify);
  identify->add_option("--kappa", c.kappa, "4444, 1234, 1234*, 0004 or a class name");
  identify->add_option("--tau2", c.tau2, "second-layer targets, e.g. [(9,9)^3;(9,9,3)]");
  identify->add_option("--max-order", c.max_order, "largest order searched");
  auto* survey = app.add_subcommand("survey", "statistics and candidates for the field survey");
  add_common(survey), add_emit(survey, {"text", "csv"});
  survey->add_option("--data", c.data, "survey CSV (default <data>/table1.csv)");
  auto* verify = app.add_subcommand("verify", "run the reproduction battery");
  add_common(verify);
  verify->add_option("--data", c.data, "survey CSV");
  verify->add_option("--criterion", c.criterion, "run one criterion (1-7)")->check(CLI::Range(1, 7));

  std::vector<std::string> rev(args.rbegin(), args.rend());
  try {
    app.parse(rev);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << e.what() << "\n";
    return kInputError;
  }

  try {
    if (ap->parsed()) return cmd_ap(c, out);
    if (cover->parsed()) return cmd_cover(c, out);
    if (descend->parsed()) return cmd_descend(c, out);
    if (tree->parsed()) return cmd_tree(c, out);
    if (aut->parsed()) return cmd_aut(c, out);
    if (identify->parsed()) return cmd_identify(c, out);
    if (survey->parsed()) return cmd_survey(c, out);
    if (verify->parsed()) return cmd_verify(c, out);
  } catch (const BudgetExceeded& e) {
    err << "budget exhausted: " << e.what() << "\n";
    return kBudget;
  } catch (const InputError& e) {
    err << "error: " << e.what() << "\n";
    return kInputError;
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << "\n";
    return kInputError;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kInputError;
  }
  return kInputError;
}

}  // namespace cap::cli
