#include <algorithm>
#include <deque>
#include <fstream>
#include <sstream>

#include "internal.hpp"

namespace cap {

namespace {

ArtinPattern tree_pattern(const PcPresentation& W, const Fingerprint& fp) {
  if (fp.abelianization != ATI{9, 3}) {
    ArtinPattern ap;
    ap.empty = true;
    return ap;
  }
  // the weight-1 generators are shared along tree edges, which keeps the
  // subgroup labels compatible between parent and child
  try {
    return artin_pattern(W, {gen_elem(0), gen_elem(1)});
  } catch (const std::invalid_argument&) {
    return artin_pattern(W);
  }
}

}  // namespace

std::vector<int> Tree::count_per_log(int min_log, int max_log) const {
  std::vector<int> out(std::max(0, max_log - min_log + 1), 0);
  for (const auto& n : nodes) {
    int l = n.fp.log_order;
    if (l >= min_log && l <= max_log) ++out[l - min_log];
  }
  return out;
}

std::vector<int> Tree::mainline() const {
  std::vector<int> out;
  if (nodes.empty()) return out;
  int cur = 0;
  out.push_back(cur);
  for (;;) {
    int next = -1, found = 0;
    for (int c : nodes[cur].children)
      if (nodes[c].metabelian && nodes[c].s3xc2) {
        next = c;
        ++found;
      }
    if (found != 1) break;
    cur = next;
    out.push_back(cur);
  }
  return out;
}

Tree build_tree(const PcPresentation& root, const TreeOptions& opt) {
  Tree t;
  PcPresentation W = root.weighted() ? root : standardize(root);
  struct Pending {
    int node;
    AutGroup aut;
    int depth = 0;
  };
  std::deque<Pending> queue;

  auto add_node = [&](PcPresentation G, AutGroup A, int parent, int step, int sibling) {
    TreeNode n;
    n.id = int(t.nodes.size());
    n.parent = parent;
    n.step = step;
    n.coord = parent < 0 ? "R" : t.nodes[parent].coord + "-#" + std::to_string(step) + ";" + std::to_string(sibling);
    CoverData C = p_cover(G, kMaxGens);
    n.fp = fingerprint(G, &C);
    n.pattern = tree_pattern(G, n.fp);
    n.metabelian = n.fp.derived_length <= 2;
    if (opt.compute_action) {
      ActionReport r = s3_action_check(G, A, opt.strict_frattini);
      n.action = r.action;
      n.s3xc2 = r.s3xc2;
    }
    if (opt.ids) n.paper_id = opt.ids->lookup(n.fp, n.action);
    if (opt.target && !n.pattern.empty && !may_reach(n.pattern, *opt.target)) n.pruned = true;
    n.group = std::move(G);
    if (parent >= 0) t.nodes[parent].children.push_back(n.id);
    t.nodes.push_back(std::move(n));
    return t.nodes.back().id;
  };

  AutGroup A = automorphism_group(W);
  int r = add_node(W, A, -1, 0, 0);
  queue.push_back({r, std::move(A), 0});
  const ATI root_ab = t.nodes[r].fp.abelianization;

  while (!queue.empty()) {
    Pending cur = std::move(queue.front());
    queue.pop_front();
    if (t.nodes[cur.node].pruned) continue;
    if (opt.max_depth >= 0 && cur.depth >= opt.max_depth) continue;
    const PcPresentation G = t.nodes[cur.node].group;
    const int room = opt.max_log - G.log_order();
    if (room < 1) continue;
    CoverData C = p_cover(G, kMaxGens);
    const int smax = std::min({C.nucleus_rank, opt.max_step, room});
    for (int s = 1; s <= smax; ++s) {
      auto Ds = immediate_descendants(G, cur.aut, C, s, {.with_aut = true, .max_points = opt.budget});
      int sibling = 0;
      for (auto& D : Ds) {
        ++sibling;
        const ATI ab = abelian_invariants(whole_group(D.group), derived_subgroup(D.group), D.group);
        if (opt.abelianization_bound ? !ati_le(ab, *opt.abelianization_bound)
                                     : opt.same_abelianization && ab != root_ab)
          continue;
        if (opt.metabelian_only && lower_central_series(D.group).derived_length > 2) continue;
        int id = add_node(std::move(D.group), D.aut, cur.node, s, sibling);
        queue.push_back({id, std::move(D.aut), cur.depth + 1});
      }
    }
  }
  return t;
}

std::string emit_dot(const Tree& t, const std::string& name) {
  std::ostringstream os;
  os << "digraph \"" << name << "\" {\n"
     << "  label=\"ellipse: metabelian, box: non-metabelian; filled: action by S3; "
        "S3xC2, C3, C2, trivial: image of Aut(G) on G/Phi(G); dashed: pruned\";\n"
     << "  labelloc=b;\n  node [fontsize=10];\n";
  for (const auto& n : t.nodes) {
    os << "  n" << n.id << " [shape=" << (n.metabelian ? "ellipse" : "box");
    std::string style;
    if (n.action == ActionClass::S3) style = "filled";
    if (n.pruned) style += style.empty() ? "dashed" : ",dashed";
    if (!style.empty()) os << ", style=\"" << style << "\"" << (n.action == ActionClass::S3 ? ", fillcolor=gray80" : "");
    os << ", label=\"" << n.coord;
    if (!n.paper_id.empty()) os << "\\n" << n.paper_id;
    os << "\\n3^" << n.fp.log_order << " " << (n.pattern.empty ? "-" : n.pattern.kappa_string()) << " "
       << n.fp.hash() << "\\n" << to_string(n.action) << (n.s3xc2 ? "xC2" : "")
       << (n.metabelian ? " metabelian" : " non-metabelian") << "\"];\n";
  }
  for (const auto& n : t.nodes)
    if (n.parent >= 0) os << "  n" << n.parent << " -> n" << n.id << " [label=\"" << n.step << "\"];\n";
  os << "}\n";
  return os.str();
}

bool antitony_holds(const ArtinPattern& parent, const ArtinPattern& child) {
  if (parent.empty || child.empty) return true;
  for (int i = 0; i < 4; ++i) {
    if (!ati_le(parent.tau[i], child.tau[i])) return false;
    if (parent.kernel_mask[i] && child.kernel_mask[i] && (child.kernel_mask[i] & ~parent.kernel_mask[i])) return false;
  }
  return true;
}

bool may_reach(const ArtinPattern& current, const ArtinPattern& target) {
  if (current.empty || target.empty) return true;
  // kernel digit c can shrink to t: 0 is the (3,3) subgroup containing all order-3 ones
  auto contains = [](int c, int t) { return c < 0 || t < 0 || c == t || (c == 0 && t != 0); };
  std::array<int, 3> pos{0, 1, 2};
  do {
    std::array<int, 3> dig{1, 2, 3};
    do {
      auto relabel = [&](int k) { return (k >= 1 && k <= 3) ? dig[k - 1] : k; };
      bool ok = true;
      for (int i = 0; i < 4 && ok; ++i) {
        int j = i < 3 ? pos[i] : 3;
        ok = ati_le(current.tau[i], target.tau[j]) && contains(relabel(current.kappa[i]), target.kappa[j]);
      }
      if (ok) return true;
    } while (std::next_permutation(dig.begin(), dig.end()));
  } while (std::next_permutation(pos.begin(), pos.end()));
  return false;
}

PaperIdMap PaperIdMap::load(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  PaperIdMap m;
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#') continue;
    std::istringstream ls(line);
    std::string order, id, hash, action;
    if (!(ls >> order >> id >> hash)) throw ParseError("bad id map line '" + line + "'");
    Entry e{"<" + order + "," + id + ">", std::nullopt};
    if (ls >> action) {
      for (auto a : {ActionClass::S3, ActionClass::C3, ActionClass::C2, ActionClass::Trivial})
        if (to_string(a) == action) e.action = a;
      if (!e.action) throw ParseError("bad action in id map line '" + line + "'");
    }
    m.by_hash.emplace(hash, e);
  }
  return m;
}

std::string PaperIdMap::lookup(const Fingerprint& fp, std::optional<ActionClass> action) const {
  auto [lo, hi] = by_hash.equal_range(fp.hash());
  std::string all, agreeing;
  for (auto it = lo; it != hi; ++it) {
    all += (all.empty() ? "" : "/") + it->second.id;
    if (!action || !it->second.action || *it->second.action == *action)
      agreeing += (agreeing.empty() ? "" : "/") + it->second.id;
  }
  return agreeing.empty() ? all : agreeing;
}

}  // namespace cap
