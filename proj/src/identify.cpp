#include <algorithm>
#include <filesystem>

#include "captower/catalog.hpp"
#include "captower/genealogy.hpp"

namespace cap {

namespace {

struct Root {
  std::string name;
  PcPresentation group;
};

std::vector<Root> roots_for(CapitulationClass cls, const Catalog& cat) {
  switch (cls) {
    case CapitulationClass::Distinguished:
      return {{"C3xC3", cat.get("C3xC3")}};
    case CapitulationClass::HarmonicVariant1:
      return {{"729_17", cat.get("729_17")}, {"729_20", cat.get("729_20")}};
    case CapitulationClass::HarmonicVariant2: {
      // the periodic roots are the class-3 quotients of the catalog groups
      std::vector<Root> out;
      for (const char* n : {"2187_180", "2187_190"}) {
        PcPresentation W = standardize(cat.get(n));
        out.push_back({std::string("parent of ") + n, truncate_to_weight(W, pclass_of(W) - 1)});
      }
      return out;
    }
    case CapitulationClass::Total:
      return {{"729_9", cat.get("729_9")}};
    case CapitulationClass::Other:
      break;
  }
  throw std::invalid_argument("no tower search for this capitulation class");
}

int default_max_log(CapitulationClass cls) { return cls == CapitulationClass::Distinguished ? 6 : 8; }

bool tau2_matches(const ArtinPattern& ap, const std::array<ATI, 4>& want) {
  std::array<ATI, 3> a{ap.tau2[0], ap.tau2[1], ap.tau2[2]}, b{want[0], want[1], want[2]};
  std::sort(a.begin(), a.end());
  std::sort(b.begin(), b.end());
  return a == b && ap.tau2[3] == want[3];
}

}  // namespace

ArtinPattern class_pattern(CapitulationClass cls) {
  ArtinPattern ap;
  switch (cls) {
    case CapitulationClass::Distinguished:
      ap.kappa = {4, 4, 4, 4};
      ap.tau = {ATI{9, 3}, ATI{9, 3}, ATI{9, 3}, ATI{9, 3}};
      break;
    case CapitulationClass::HarmonicVariant1:
    case CapitulationClass::HarmonicVariant2:
      ap.kappa = {1, 2, 3, 4};
      ap.tau = {ATI{27, 3}, ATI{27, 3}, ATI{27, 3},
                cls == CapitulationClass::HarmonicVariant1 ? ATI{9, 3, 3} : ATI{9, 9, 3}};
      break;
    case CapitulationClass::Total:
      ap.kappa = {0, 0, 0, 4};
      ap.tau = {ATI{9, 3, 3}, ATI{9, 3, 3}, ATI{9, 3, 3}, ATI{3, 3, 3, 3}};
      break;
    case CapitulationClass::Other:
      ap.empty = true;
  }
  return canonicalize_kappa(ap);
}

IdentifyResult identify_tower_group(CapitulationClass cls, const IdentifyOptions& opt) {
  IdentifyResult res;
  res.cls = cls;
  const Catalog cat = opt.catalog_path.empty() ? Catalog::load_default() : Catalog::load(opt.catalog_path);
  PaperIdMap default_ids;
  const PaperIdMap* ids = opt.ids;
  if (!ids && std::filesystem::exists(data_dir() + "/paper_ids.txt")) {
    default_ids = PaperIdMap::load(data_dir() + "/paper_ids.txt");
    ids = &default_ids;
  }
  const ArtinPattern want = class_pattern(cls);
  const bool total = cls == CapitulationClass::Total;

  for (const auto& root : roots_for(cls, cat)) {
    TreeOptions to;
    to.max_log = opt.max_log.value_or(default_max_log(cls));
    to.target = want;
    to.ids = ids;
    to.strict_frattini = opt.strict_frattini;
    to.max_depth = opt.max_depth.value_or(total ? 1 : -1);
    if (cls == CapitulationClass::Distinguished) to.abelianization_bound = ATI{9, 3};
    Tree t = build_tree(root.group, to);
    for (const auto& n : t.nodes) {
      if (n.pattern.empty || !n.metabelian) continue;
      ArtinPattern c = canonicalize_kappa(n.pattern);
      if (c.kappa != want.kappa || c.tau != want.tau) continue;
      if (opt.tau2 && !tau2_matches(n.pattern, *opt.tau2)) continue;
      // for total capitulation d2 decides the verdict instead of filtering
      if (!total && (n.fp.relation_rank < opt.d2_min || n.fp.relation_rank > opt.d2_max)) continue;
      if (opt.require_s3 && n.action != ActionClass::S3) continue;
      res.candidates.push_back({root.name, n.coord, n.paper_id, n.fp, n.pattern, n.action, n.group});
    }
  }
  if (res.candidates.empty()) throw std::runtime_error("no tower group candidate survives the filters");

  if (!total) {
    res.verdict = "l3 = 2";
    return res;
  }
  std::vector<std::string> deep;
  for (const auto& c : res.candidates)
    if (c.fp.relation_rank > opt.d2_max) {
      std::string id = c.paper_id.empty() ? c.root + " " + c.coord : c.paper_id;
      if (std::find(deep.begin(), deep.end(), id) == deep.end()) deep.push_back(id);
    }
  if (deep.empty()) {
    res.verdict = "l3 >= 2";
  } else if (std::all_of(res.candidates.begin(), res.candidates.end(),
                         [&](const Candidate& c) { return c.fp.relation_rank > opt.d2_max; })) {
    res.verdict = "l3 >= 3";
  } else {
    std::string list;
    for (const auto& d : deep) list += (list.empty() ? "" : ", ") + d;
    res.verdict = "l3 >= 2 (l3 >= 3 if G2 is one of " + list + ")";
  }
  res.notes.push_back("relation rank above " + std::to_string(opt.d2_max) + " rules out a two-stage tower");
  return res;
}

}  // namespace cap
