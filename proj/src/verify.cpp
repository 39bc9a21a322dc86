#include "captower/verify.hpp"

#include <algorithm>
#include <chrono>
#include <filesystem>
#include <functional>
#include <map>
#include <random>
#include <set>
#include <sstream>

#include "captower/catalog.hpp"
#include "captower/fieldlab.hpp"
#include "captower/genealogy.hpp"

namespace cap {

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

std::string join(const std::vector<int>& v) {
  std::string s;
  for (int x : v) s += (s.empty() ? "" : ",") + std::to_string(x);
  return s;
}

int log_size(const PcPresentation& P) {
  int l = 0;
  for (int r : P.rel_order)
    for (int q = r; q > 1; q /= P.p) ++l;
  return l;
}

ArtinPattern with_kappa(std::array<int, 4> k) {
  ArtinPattern ap;
  ap.kappa = k;
  return ap;
}

std::array<ATI, 4> tau_of(ATI a, ATI b) { return {a, a, a, b}; }

std::string format_tau(const std::array<ATI, 4>& t) {
  return "[" + format_ati(t[0]) + "," + format_ati(t[1]) + "," + format_ati(t[2]) + ";" + format_ati(t[3]) + "]";
}

bool tau2_is(const ArtinPattern& ap, const std::array<ATI, 4>& want) {
  std::array<ATI, 3> a{ap.tau2[0], ap.tau2[1], ap.tau2[2]}, b{want[0], want[1], want[2]};
  std::sort(a.begin(), a.end());
  std::sort(b.begin(), b.end());
  return a == b && ap.tau2[3] == want[3];
}

struct Context {
  const BatteryOptions& opt;
  Catalog cat;
  PaperIdMap ids;
  std::vector<Check>* out = nullptr;
  int criterion = 0;

  explicit Context(const BatteryOptions& o) : opt(o) {
    cat = o.catalog_path.empty() ? Catalog::load_default() : Catalog::load(o.catalog_path);
    if (std::filesystem::exists(data_dir() + "/paper_ids.txt")) ids = PaperIdMap::load(data_dir() + "/paper_ids.txt");
  }

  void check(const std::string& name, bool pass, const std::string& detail = "") {
    out->push_back({criterion, name, pass, detail});
  }
};

// Trees are shared between criteria 3-5 and the antitony suite.
std::map<std::string, Tree>& tree_cache() {
  static std::map<std::string, Tree> cache;
  return cache;
}

const Tree& cached_tree(const std::string& key, const std::function<Tree()>& build) {
  auto& c = tree_cache();
  auto it = c.find(key);
  if (it == c.end()) it = c.emplace(key, build()).first;
  return it->second;
}

TreeOptions tree_options(Context& cx, int max_log) {
  TreeOptions to;
  to.max_log = max_log;
  to.ids = &cx.ids;
  to.strict_frattini = cx.opt.strict_frattini;
  return to;
}

PcPresentation hv2_parent(const PcPresentation& G) {
  PcPresentation W = standardize(G);
  return truncate_to_weight(W, pclass_of(W) - 1);
}

const Tree& figure_tree(Context& cx, const std::string& name) {
  return cached_tree(name, [&] { return build_tree(cx.cat.get(name), tree_options(cx, 10)); });
}

const Tree& hv2_parent_tree(Context& cx, const std::string& name) {
  return cached_tree("parent of " + name, [&] {
    TreeOptions to = tree_options(cx, 7);
    return build_tree(hv2_parent(cx.cat.get(name)), to);
  });
}

const Tree& children_tree(Context& cx, const std::string& name, bool same_ab) {
  return cached_tree("children of " + name, [&] {
    TreeOptions to = tree_options(cx, 99);
    to.max_depth = 1;
    to.same_abelianization = same_ab;
    return build_tree(cx.cat.get(name), to);
  });
}

const Tree& distinguished_tree(Context& cx) {
  return cached_tree("C3xC3", [&] {
    TreeOptions to = tree_options(cx, 6);
    to.abelianization_bound = ATI{9, 3};
    return build_tree(cx.cat.get("C3xC3"), to);
  });
}

// ---- figure of the descendant tree of <729,17> (and <729,20>) ----
//
// S metabelian with S3 action, m other metabelian, N non-metabelian with S3
// action, n other non-metabelian. A leading 2 marks a step-2 edge; children
// follow in parentheses.
const char* kHarmonicFigure = "S(S(S(m(n)m(n)m(n))m)S(n S(m S(n)S(n)N)m 2N(n N N)2n)m)";

struct FigNode {
  bool metabelian = false;
  bool s3 = false;
  int step = 1;
  std::vector<FigNode> kids;
};

FigNode parse_figure(const char*& s) {
  while (*s == ' ') ++s;
  FigNode f;
  if (*s == '2') {
    f.step = 2;
    ++s;
  }
  f.metabelian = *s == 'S' || *s == 'm';
  f.s3 = *s == 'S' || *s == 'N';
  ++s;
  while (*s == ' ') ++s;
  if (*s == '(') {
    ++s;
    while (*s != ')') {
      f.kids.push_back(parse_figure(s));
      while (*s == ' ') ++s;
    }
    ++s;
  }
  return f;
}

void figure_levels(const FigNode& f, int log, std::map<int, int>& all, std::map<int, int>& meta) {
  ++all[log];
  if (f.metabelian) ++meta[log];
  for (const auto& k : f.kids) figure_levels(k, log + k.step, all, meta);
}

// Marker- and step-preserving injective embedding of the figure below node v.
bool embeds(const FigNode& f, const Tree& t, int v) {
  const TreeNode& n = t.nodes[v];
  if (n.metabelian != f.metabelian || (n.action == ActionClass::S3) != f.s3) return false;
  const auto& kids = n.children;
  std::vector<bool> used(kids.size(), false);
  std::function<bool(size_t)> match = [&](size_t i) {
    if (i == f.kids.size()) return true;
    for (size_t j = 0; j < kids.size(); ++j) {
      if (used[j] || t.nodes[kids[j]].step != f.kids[i].step || !embeds(f.kids[i], t, kids[j])) continue;
      used[j] = true;
      if (match(i + 1)) return true;
      used[j] = false;
    }
    return false;
  };
  return match(0);
}

// ---- criteria ----

void criterion1(Context& cx) {
  const std::vector<std::pair<std::string, int>> groups = {
      {"81_4", 4}, {"729_17", 6}, {"729_20", 6}, {"2187_180", 7}, {"2187_190", 7}, {"729_9", 6}};
  for (const auto& [name, log] : groups) {
    const PcPresentation& P = cx.cat.get(name);
    ConsistencyReport r = check_consistency(P);
    cx.check(name + " consistent", r.ok, r.failure);
    cx.check(name + " has order 3^" + std::to_string(log), log_size(P) == log, "3^" + std::to_string(log_size(P)));
  }
}

void criterion2(Context& cx) {
  const auto t0 = Clock::now();
  const PcPresentation& G = cx.cat.get("81_4");
  ArtinPattern ap = canonicalize_kappa(artin_pattern(G));
  cx.check("81_4 kappa (444;4)", ap.kappa == std::array<int, 4>{4, 4, 4, 4}, ap.kappa_string());
  cx.check("81_4 tau [(9,3)^3;(9,3)]", ap.tau == tau_of({9, 3}, {9, 3}), ap.serialize());
  cx.check("81_4 tau2 [(9)^3;(3,3)]", tau2_is(ap, tau_of({9}, {3, 3})), format_tau(ap.tau2));
  const Fingerprint fp = fingerprint(G);
  cx.check("81_4 relation rank 3", fp.relation_rank == 3, std::to_string(fp.relation_rank));
  ActionReport ar = s3_action_check(G, cx.opt.strict_frattini);
  cx.check("81_4 action S3", ar.action == ActionClass::S3 && ar.exact_witnesses, to_string(ar.action));

  // the order-3^5 child with the same pattern
  std::vector<PcPresentation> same;
  for (auto& D : immediate_descendants(G, 1)) {
    if (abelian_quotient_invariants(D, trivial_subgroup()) != ATI{9, 3}) continue;
    ArtinPattern c = canonicalize_kappa(artin_pattern(D));
    if (c.kappa == ap.kappa && c.tau == ap.tau) same.push_back(D);
  }
  cx.check("81_4 has one order-3^5 child with the same (kappa,tau)", same.size() == 1,
           std::to_string(same.size()) + " such children");
  if (same.size() == 1) {
    const Fingerprint f2 = fingerprint(same[0]);
    cx.check("that child has relation rank 2", f2.relation_rank == 2, std::to_string(f2.relation_rank));
    ActionReport a2 = s3_action_check(same[0], cx.opt.strict_frattini);
    cx.check("that child has action C2 only", a2.action == ActionClass::C2, to_string(a2.action));
  }
  const double s = seconds_since(t0);
  cx.check("criterion 2 under 30 s", s < 30.0, std::to_string(s) + " s");
}

void criterion3(Context& cx) {
  const auto t0 = Clock::now();
  const char* fig_text = kHarmonicFigure;
  const FigNode fig = parse_figure(fig_text);
  std::map<int, int> fig_all, fig_meta;
  figure_levels(fig, 6, fig_all, fig_meta);
  const ArtinPattern want = class_pattern(CapitulationClass::HarmonicVariant1);

  for (const char* name : {"729_17", "729_20"}) {
    const std::string nm = name;
    ArtinPattern ap = canonicalize_kappa(artin_pattern(cx.cat.get(nm)));
    cx.check(nm + " kappa (123;4)", ap.kappa == want.kappa, ap.kappa_string());
    cx.check(nm + " tau [(27,3)^3;(9,3,3)]", ap.tau == tau_of({27, 3}, {9, 3, 3}), ap.serialize());

    const Tree& t = figure_tree(cx, nm);
    std::vector<int> all = t.count_per_log(6, 10), meta(5, 0), want_all, want_meta;
    for (const auto& n : t.nodes)
      if (n.metabelian) ++meta[n.fp.log_order - 6];
    for (int l = 6; l <= 10; ++l) {
      want_all.push_back(fig_all[l]);
      want_meta.push_back(fig_meta[l]);
    }
    cx.check(nm + " tree embeds the figure", embeds(fig, t, 0));
    // the figure draws every metabelian vertex but only some non-metabelian
    // ones; with equal metabelian counts the vertices outside the embedding
    // are non-metabelian
    cx.check(nm + " metabelian vertices per level match the figure", meta == want_meta,
             "metabelian " + join(meta) + " (figure " + join(want_meta) + "); all vertices " + join(all) +
                 " (figure " + join(want_all) + ")");

    std::vector<int> ml = t.mainline();
    bool ml_meta = std::all_of(ml.begin(), ml.end(), [&](int v) { return t.nodes[v].metabelian; });
    cx.check(nm + " mainline of 4 metabelian vertices", ml.size() == 4 && ml_meta, std::to_string(ml.size()) + " vertices");

    int s3 = 0, c2 = 0, kids = 0;
    for (int c : t.nodes[0].children) {
      if (t.nodes[c].fp.log_order != 7) continue;
      ++kids;
      s3 += t.nodes[c].action == ActionClass::S3;
      c2 += t.nodes[c].action == ActionClass::C2;
    }
    cx.check(nm + " order-3^7 children: two with S3, one with C2 only", kids == 3 && s3 == 2 && c2 == 1,
             std::to_string(kids) + " children, " + std::to_string(s3) + " S3, " + std::to_string(c2) + " C2");
  }
  const double s = seconds_since(t0);
  cx.check("criterion 3 under 5 min", s < 300.0, std::to_string(s) + " s");
}

void criterion4(Context& cx) {
  const ArtinPattern want = class_pattern(CapitulationClass::HarmonicVariant2);
  std::vector<std::array<int, 4>> want_classes;
  for (auto k : {std::array<int, 4>{1, 2, 3, 4}, {1, 2, 3, 0}, {1, 2, 3, 2}})
    want_classes.push_back(canonicalize_kappa(with_kappa(k)).kappa);
  std::sort(want_classes.begin(), want_classes.end());

  for (const char* name : {"2187_180", "2187_190"}) {
    const std::string nm = name;
    ArtinPattern ap = canonicalize_kappa(artin_pattern(cx.cat.get(nm)));
    cx.check(nm + " kappa (123;4)", ap.kappa == want.kappa, ap.kappa_string());
    cx.check(nm + " tau [(27,3)^3;(9,9,3)]", ap.tau == tau_of({27, 3}, {9, 9, 3}), ap.serialize());

    const Tree& pt = hv2_parent_tree(cx, nm);
    std::vector<std::array<int, 4>> got;
    std::string got_s;
    for (int c : pt.nodes[0].children) {
      got.push_back(canonicalize_kappa(pt.nodes[c].pattern).kappa);
      got_s += " " + pt.nodes[c].pattern.kappa_string();
    }
    std::sort(got.begin(), got.end());
    cx.check(nm + " parent has 3 children with kappa classes (123;4),(123;0),(123;2)", got == want_classes,
             std::to_string(pt.nodes[0].children.size()) + " children:" + got_s);

    const Tree& ct = children_tree(cx, nm, true);
    int s3 = 0;
    for (int c : ct.nodes[0].children) s3 += ct.nodes[c].action == ActionClass::S3;
    const int kids = int(ct.nodes[0].children.size());
    cx.check(nm + " has 4 children, 3 with S3", kids == 4 && s3 == 3,
             std::to_string(kids) + " children, " + std::to_string(s3) + " S3");
  }
}

void criterion5(Context& cx) {
  const auto t0 = Clock::now();
  const Tree& t = children_tree(cx, "729_9", false);
  std::map<int, int> count, s3;
  for (int c : t.nodes[0].children) {
    ++count[t.nodes[c].step];
    if (t.nodes[c].action == ActionClass::S3) ++s3[t.nodes[c].step];
  }
  cx.check("729_9 has 15/61/37 children of step 1/2/3", count[1] == 15 && count[2] == 61 && count[3] == 37,
           std::to_string(count[1]) + "/" + std::to_string(count[2]) + "/" + std::to_string(count[3]));

  const ATI thr = {9, 9, 3}, thr4 = {3, 3, 3, 3};
  int below = 0;
  for (int c : t.nodes[0].children) {
    const TreeNode& n = t.nodes[c];
    if (n.step != 3) continue;
    bool ok = !n.pattern.empty;
    for (int i = 0; i < 4 && ok; ++i) ok = ati_dominates(n.pattern.tau[i], i < 3 ? thr : thr4);
    below += !ok;
  }
  cx.check("every step-3 child has tau >= [(9,9,3)^3;(3,3,3,3)]", below == 0, std::to_string(below) + " below");
  cx.check("exactly 2 step-1 children with S3", s3[1] == 2, std::to_string(s3[1]));
  cx.check("exactly 5 step-2 children with S3", s3[2] == 5, std::to_string(s3[2]));

  // items of the tower-length statement, located by their second-layer tau
  std::vector<const TreeNode*> cands = {&t.nodes[0]};
  for (int c : t.nodes[0].children)
    if (t.nodes[c].action == ActionClass::S3 && t.nodes[c].metabelian) cands.push_back(&t.nodes[c]);
  const std::vector<std::array<ATI, 4>> item1 = {
      tau_of({3, 3, 3}, {3, 3, 3, 3}), tau_of({9, 3, 3}, {3, 3, 3, 3, 3}),
      tau_of({3, 3, 3, 3}, {9, 3, 3, 3, 3}), tau_of({9, 3, 3}, {9, 3, 3, 3, 3})};
  const std::vector<std::array<ATI, 4>> item2 = {tau_of({3, 3, 3, 3}, {3, 3, 3, 3, 3}),
                                                 tau_of({3, 3, 3, 3}, {3, 3, 3, 3, 3, 3})};
  auto item_check = [&](const std::vector<std::array<ATI, 4>>& item, int lo, int hi, const std::string& label) {
    bool ok = true;
    std::string d;
    for (const auto& tau2 : item) {
      int found = 0;
      for (const TreeNode* n : cands) {
        if (n->pattern.empty || !tau2_is(n->pattern, tau2)) continue;
        ++found;
        d += " " + n->coord + ":" + std::to_string(n->fp.relation_rank);
        if (n->fp.relation_rank < lo || n->fp.relation_rank > hi) ok = false;
      }
      if (!found) {
        ok = false;
        d += " missing";
      }
    }
    cx.check(label + " relation ranks in " + std::to_string(lo) + ".." + std::to_string(hi), ok, d);
  };
  item_check(item1, 4, 5, "item (1)");
  item_check(item2, 6, 7, "item (2)");
  const double s = seconds_since(t0);
  cx.check("criterion 5 under 10 min", s < 600.0, std::to_string(s) + " s");
}

void criterion6(Context& cx) {
  const std::string path = cx.opt.survey_path.empty() ? data_dir() + "/table1.csv" : cx.opt.survey_path;
  auto recs = load_survey(path);
  SurveyStats st = survey_statistics(recs);
  auto cnt = [&](CapitulationClass c) { return st.counts.count(c) ? st.counts.at(c) : 0; };
  std::ostringstream d;
  d << cnt(CapitulationClass::Distinguished) << "/" << cnt(CapitulationClass::HarmonicVariant1) << "/"
    << cnt(CapitulationClass::HarmonicVariant2) << "/" << cnt(CapitulationClass::Total) << " of " << st.total;
  cx.check("distribution 61/14/14/6 of 95",
           st.total == 95 && cnt(CapitulationClass::Distinguished) == 61 && cnt(CapitulationClass::HarmonicVariant1) == 14 &&
               cnt(CapitulationClass::HarmonicVariant2) == 14 && cnt(CapitulationClass::Total) == 6,
           d.str());
  char buf[64];
  std::snprintf(buf, sizeof buf, "%d/%d = %.2f%% (stated: at least 94%%)", st.two_stage, st.total, st.two_stage_percent());
  cx.check("two-stage proportion 89/95", st.two_stage == 89 && st.total == 95, buf);
  auto row = [&](int idx, long long p, const std::string& code) {
    bool ok = idx <= int(recs.size()) && recs[idx - 1].index == idx && recs[idx - 1].p == p && recs[idx - 1].kappa_code == code;
    cx.check("row " + std::to_string(idx) + " = (" + std::to_string(p) + "," + code + ")", ok);
  };
  row(1, 199, "4444");
  row(5, 1297, "1234*");
  row(51, 10459, "0004");
}

void criterion7(Context& cx) {
  std::mt19937_64 rng(cx.opt.seed);

  // transfers do not depend on the transversal
  int tested = 0, bad = 0;
  for (const auto& e : cx.cat.entries) {
    const PcPresentation& P = e.pres;
    if (P.n == 0) continue;
    std::vector<Subgroup> subs;
    if (abelian_quotient_invariants(P, trivial_subgroup()) == ATI{9, 3}) {
      Generators xy = canonical_generators(P);
      Lattice L = standard_subgroup_lattice(P, xy.x, xy.y);
      subs.assign(L.h3.begin(), L.h3.end());
      subs.insert(subs.end(), L.h9.begin(), L.h9.end());
    } else {
      subs = {derived_subgroup(P), frattini_subgroup(P)};
    }
    for (const auto& H : subs) {
      Transfer base = artin_transfer(P, H);
      for (int k = 0; k < 10; ++k) {
        Transfer tr = artin_transfer(P, H, random_transversal(H, P, rng));
        ++tested;
        for (int g = 0; g < P.n; ++g)
          if (!(tr.apply(gen_elem(g), P) == base.apply(gen_elem(g), P))) {
            ++bad;
            break;
          }
      }
    }
  }
  cx.check("transfers independent of the transversal", bad == 0,
           std::to_string(tested) + " transversals, " + std::to_string(bad) + " disagree");

  // transfer to G' is trivial on metabelian groups
  int meta = 0;
  std::string pit_bad;
  for (const auto& e : cx.cat.entries) {
    const PcPresentation& P = e.pres;
    if (P.n == 0 || lower_central_series(P).derived_length > 2) continue;
    ++meta;
    Transfer tr = artin_transfer(P, derived_subgroup(P));
    for (int g = 0; g < P.n; ++g)
      if (!tr.apply(gen_elem(g), P).is_identity()) {
        pit_bad += " " + e.name;
        break;
      }
  }
  cx.check("transfer to G' trivial on metabelian groups", pit_bad.empty(), std::to_string(meta) + " groups" + pit_bad);

  // first-layer kernels are never trivial
  std::string h94_bad;
  int h94 = 0;
  for (const auto& e : cx.cat.entries) {
    const PcPresentation& P = e.pres;
    if (P.n == 0 || abelian_quotient_invariants(P, trivial_subgroup()) != ATI{9, 3}) continue;
    ++h94;
    Generators xy = canonical_generators(P);
    Lattice L = standard_subgroup_lattice(P, xy.x, xy.y);
    for (const auto& H : L.h3)
      if (transfer_kernel(P, H).log_order() <= L.derived.log_order()) h94_bad += " " + e.name;
  }
  cx.check("first-layer transfer kernels have order >= 3", h94_bad.empty(), std::to_string(h94) + " groups" + h94_bad);

  // antitony along every computed edge
  distinguished_tree(cx);
  for (const char* n : {"729_17", "729_20"}) figure_tree(cx, n);
  for (const char* n : {"2187_180", "2187_190"}) {
    hv2_parent_tree(cx, n);
    children_tree(cx, n, true);
  }
  children_tree(cx, "729_9", false);
  int edges = 0;
  std::string anti_bad;
  for (const auto& [key, t] : tree_cache())
    for (const auto& n : t.nodes) {
      if (n.parent < 0) continue;
      ++edges;
      if (!antitony_holds(t.nodes[n.parent].pattern, n.pattern)) anti_bad += " " + key + ":" + n.coord;
    }
  cx.check("antitony on every tree edge", anti_bad.empty(), std::to_string(edges) + " edges" + anti_bad);

  // Smith normal form: divisibility and |det| = product of the divisors
  std::uniform_int_distribution<int> ent(-12, 12);
  int snf_bad = 0;
  for (int trial = 0; trial < 300; ++trial) {
    const int n = 2 + trial % 4;
    std::vector<std::vector<long long>> m(n, std::vector<long long>(n));
    for (auto& r : m)
      for (auto& x : r) x = ent(rng);
    // Bareiss determinant
    auto a = m;
    long long prev = 1, sign = 1;
    bool zero = false;
    for (int k = 0; k < n - 1 && !zero; ++k) {
      if (a[k][k] == 0) {
        int r = k + 1;
        while (r < n && a[r][k] == 0) ++r;
        if (r == n) {
          zero = true;
          break;
        }
        std::swap(a[k], a[r]);
        sign = -sign;
      }
      for (int i = k + 1; i < n; ++i)
        for (int j = k + 1; j < n; ++j) a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;
      prev = a[k][k];
    }
    const long long det = zero ? 0 : sign * a[n - 1][n - 1];
    auto d = smith_normal_form(m);
    long long prod = 1;
    bool ok = true;
    for (size_t i = 0; i < d.size(); ++i) {
      prod *= d[i];
      if (i + 1 < d.size() && d[i] != 0 && d[i + 1] % d[i] != 0) ok = false;
      if (i + 1 < d.size() && d[i] == 0 && d[i + 1] != 0) ok = false;
    }
    if (int(d.size()) != n || prod != (det < 0 ? -det : det)) ok = false;
    snf_bad += !ok;
  }
  cx.check("Smith normal form divisibility chains", snf_bad == 0, std::to_string(snf_bad) + " of 300 matrices fail");

  // cubic residues against enumerated cubes
  int primes = 0, cr_bad = 0;
  for (long long p = 7; p < 1000; p += 6) {
    if (!is_prime(p)) continue;
    ++primes;
    std::vector<bool> cube(p, false);
    for (long long x = 1; x < p; ++x) cube[x * x % p * x % p] = true;
    for (long long a = 1; a < p; ++a) cr_bad += is_cubic_residue(a, p) != cube[a];
  }
  cx.check("cubic residues agree with enumerated cubes for p < 1000", cr_bad == 0,
           std::to_string(primes) + " primes, " + std::to_string(cr_bad) + " disagreements");
}

}  // namespace

std::vector<Check> run_criterion(int criterion, const BatteryOptions& opt) {
  static const std::map<int, void (*)(Context&)> table = {{1, criterion1}, {2, criterion2}, {3, criterion3},
                                                          {4, criterion4}, {5, criterion5}, {6, criterion6},
                                                          {7, criterion7}};
  auto it = table.find(criterion);
  if (it == table.end()) throw std::invalid_argument("no criterion " + std::to_string(criterion));
  std::vector<Check> out;
  Context cx(opt);
  cx.out = &out;
  cx.criterion = criterion;
  try {
    it->second(cx);
  } catch (const std::exception& e) {
    cx.check("criterion ran to completion", false, e.what());
  }
  return out;
}

std::vector<Check> run_battery(const BatteryOptions& opt) {
  std::vector<Check> out;
  for (int k = 1; k <= 7; ++k) {
    auto c = run_criterion(k, opt);
    out.insert(out.end(), c.begin(), c.end());
  }
  return out;
}

}  // namespace cap
