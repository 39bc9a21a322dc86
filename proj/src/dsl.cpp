// Catalog DSL: parsing with composite-power refinement, and printing.
#include <algorithm>
#include <cctype>
#include <sstream>

#include "captower/pcgroup.hpp"

namespace cap {

namespace {

std::string trim(std::string_view s) {
  size_t a = 0, b = s.size();
  while (a < b && std::isspace(static_cast<unsigned char>(s[a]))) ++a;
  while (b > a && std::isspace(static_cast<unsigned char>(s[b - 1]))) --b;
  return std::string(s.substr(a, b - a));
}

std::vector<std::string> split_top(std::string_view s, char sep) {
  std::vector<std::string> out;
  int depth = 0;
  std::string cur;
  for (char c : s) {
    if (c == '[' || c == '(') ++depth;
    if (c == ']' || c == ')') --depth;
    if (c == sep && depth == 0) {
      out.push_back(trim(cur));
      cur.clear();
    } else {
      cur += c;
    }
  }
  if (!trim(cur).empty() || !out.empty()) out.push_back(trim(cur));
  return out;
}

bool is_name(const std::string& s) {
  if (s.empty() || !(std::isalpha(static_cast<unsigned char>(s[0])) || s[0] == '_')) return false;
  for (char c : s)
    if (!(std::isalnum(static_cast<unsigned char>(c)) || c == '_')) return false;
  return true;
}

long long parse_int(const std::string& s, const std::string& ctx) {
  std::string t = s;
  if (t.size() >= 2 && t.front() == '(' && t.back() == ')') t = t.substr(1, t.size() - 2);
  if (t.empty()) throw ParseError("missing exponent in '" + ctx + "'");
  size_t pos = 0;
  if (t[0] == '-' || t[0] == '+') pos = 1;
  if (pos == t.size()) throw ParseError("bad exponent in '" + ctx + "'");
  for (size_t k = pos; k < t.size(); ++k)
    if (!std::isdigit(static_cast<unsigned char>(t[k]))) throw ParseError("bad exponent in '" + ctx + "'");
  return std::stoll(t);
}

int index_of(const std::vector<std::string>& names, const std::string& s) {
  auto it = std::find(names.begin(), names.end(), s);
  return it == names.end() ? -1 : int(it - names.begin());
}

Word invert_word(const Word& w) {
  Word r(w.rbegin(), w.rend());
  for (auto& [g, e] : r) e = -e;
  return r;
}

struct Statement {
  std::string key;
  std::string rest;
  int line;
};

std::vector<Statement> statements(std::string_view text) {
  std::vector<Statement> out;
  std::istringstream in{std::string(text)};
  std::string line;
  int ln = 0;
  while (std::getline(in, line)) {
    ++ln;
    if (auto h = line.find('#'); h != std::string::npos) line.resize(h);
    for (const auto& part : split_top(line, ';')) {
      std::string s = trim(part);
      if (s.empty()) continue;
      size_t sp = 0;
      while (sp < s.size() && !std::isspace(static_cast<unsigned char>(s[sp]))) ++sp;
      out.push_back({s.substr(0, sp), trim(s.substr(sp)), ln});
    }
  }
  return out;
}

struct RawGroup {
  std::string name;
  std::vector<std::string> gens;
  std::vector<int> order;                       // declared relative orders
  std::vector<Word> power;                      // RHS per declared gen
  std::vector<std::vector<Word>> comm;          // [j][i], j > i
  std::vector<std::vector<bool>> comm_given;
  bool have_gens = false;
};

void add_statement(RawGroup& g, const Statement& st) {
  auto fail = [&](const std::string& msg) {
    throw ParseError("line " + std::to_string(st.line) + ": " + msg);
  };
  if (st.key == "gens") {
    if (g.have_gens) fail("duplicate gens statement");
    g.have_gens = true;
    if (!st.rest.empty())
      for (const auto& s : split_top(st.rest, ',')) {
        if (!is_name(s)) fail("bad generator name '" + s + "'");
        if (index_of(g.gens, s) >= 0) fail("duplicate generator '" + s + "'");
        g.gens.push_back(s);
      }
    int n = int(g.gens.size());
    if (n > kMaxGens) fail("too many generators");
    g.order.assign(n, 3);
    g.power.assign(n, {});
    g.comm.assign(n, std::vector<Word>(n));
    g.comm_given.assign(n, std::vector<bool>(n, false));
    return;
  }
  if (!g.have_gens) fail("relations before gens");
  if (st.key == "pow") {
    for (const auto& item : split_top(st.rest, ',')) {
      auto eq = item.find('=');
      if (eq == std::string::npos) fail("expected '=' in '" + item + "'");
      std::string lhs = trim(item.substr(0, eq));
      auto caret = lhs.find('^');
      if (caret == std::string::npos) fail("expected gen^exp in '" + lhs + "'");
      int gi = index_of(g.gens, trim(lhs.substr(0, caret)));
      if (gi < 0) fail("unknown generator in '" + lhs + "'");
      long long e = parse_int(trim(lhs.substr(caret + 1)), lhs);
      long long x = e;
      int steps = 0;
      while (x > 1 && x % 3 == 0) {
        x /= 3;
        ++steps;
      }
      if (x != 1 || steps == 0) fail("refinement failure: exponent " + std::to_string(e) + " is not a power of 3");
      if (e > 243) fail("exponent too large");
      g.order[gi] = int(e);
      g.power[gi] = parse_word(item.substr(eq + 1), g.gens);
    }
    return;
  }
  if (st.key == "comm") {
    for (const auto& item : split_top(st.rest, ',')) {
      auto eq = item.find('=');
      if (eq == std::string::npos) fail("expected '=' in '" + item + "'");
      std::string lhs = trim(item.substr(0, eq));
      if (lhs.size() < 5 || lhs.front() != '[' || lhs.back() != ']') fail("expected [g,h] in '" + lhs + "'");
      auto parts = split_top(lhs.substr(1, lhs.size() - 2), ',');
      if (parts.size() != 2) fail("expected [g,h] in '" + lhs + "'");
      int a = index_of(g.gens, parts[0]), b = index_of(g.gens, parts[1]);
      if (a < 0 || b < 0) fail("unknown generator in '" + lhs + "'");
      if (a == b) fail("commutator of a generator with itself");
      Word w = parse_word(item.substr(eq + 1), g.gens);
      if (a < b) {
        std::swap(a, b);
        w = invert_word(w);
      }
      g.comm[a][b] = w;
      g.comm_given[a][b] = true;
    }
    return;
  }
  fail("unknown keyword '" + st.key + "'");
}

PcPresentation build(const RawGroup& raw) {
  const int n = int(raw.gens.size());
  PcPresentation G(n);
  for (int i = 0; i < n; ++i) {
    G.gens[i].label = raw.gens[i];
    G.rel_order[i] = raw.order[i];
  }
  auto check_later = [&](const Word& w, int j, const std::string& what) {
    for (auto [g, e] : w)
      if (g <= j) throw ParseError(what + " must involve only generators after " + raw.gens[j]);
  };
  // Relations of later generators are final before earlier ones are collected.
  for (int j = n - 1; j >= 0; --j) {
    G.finalize();
    check_later(raw.power[j], j, "power relation of " + raw.gens[j]);
    G.power[j] = collect(raw.power[j], G);
    for (int i = 0; i < j; ++i) {
      check_later(raw.comm[j][i], j, "commutator [" + raw.gens[j] + "," + raw.gens[i] + "]");
      G.comm[j][i] = collect(raw.comm[j][i], G);
    }
  }
  G.finalize();

  // Composite-power refinement: g of order 3^e becomes g, g^3, ..., g^(3^(e-1)).
  std::vector<int> first(n), chain(n);
  int m = 0;
  for (int i = 0; i < n; ++i) {
    first[i] = m;
    int e = 0;
    for (int x = G.rel_order[i]; x > 1; x /= 3) ++e;
    chain[i] = e;
    m += e;
  }
  if (m > kMaxGens) throw ParseError("refined presentation has too many generators");
  auto refine = [&](const Elem& a) {
    Elem r;
    for (int i = 0; i < n; ++i) {
      int x = a[i];
      for (int k = 0; k < chain[i]; ++k) {
        r[first[i] + k] = uint8_t(x % 3);
        x /= 3;
      }
    }
    return r;
  };
  std::vector<std::pair<int, int>> origin(m);  // refined index -> (declared gen, 3-exponent)
  for (int i = 0; i < n; ++i)
    for (int k = 0; k < chain[i]; ++k) origin[first[i] + k] = {i, k};

  PcPresentation R(m);
  std::vector<std::string> used(raw.gens);
  for (int r = 0; r < m; ++r) {
    auto [g, k] = origin[r];
    if (k == 0) {
      R.gens[r].label = raw.gens[g];
      continue;
    }
    int pk = 1;
    for (int t = 0; t < k; ++t) pk *= 3;
    std::string lab = raw.gens[g] + std::to_string(pk);
    while (std::find(used.begin(), used.end(), lab) != used.end()) lab = "_" + lab;
    used.push_back(lab);
    R.gens[r].label = lab;
    R.gens[r].aux_of = first[g];
  }
  std::vector<Elem> el(m);
  for (int r = 0; r < m; ++r) {
    auto [g, k] = origin[r];
    int pk = 1;
    for (int t = 0; t < k; ++t) pk *= 3;
    el[r] = gen_elem(g, pk);
  }
  for (int r = 0; r < m; ++r) {
    auto [g, k] = origin[r];
    if (k + 1 < chain[g])
      R.power[r] = gen_elem(r + 1);
    else
      R.power[r] = refine(G.power[g]);
    for (int s = 0; s < r; ++s) {
      if (origin[s].first == g) continue;  // powers of one generator commute
      R.comm[r][s] = refine(commutator(el[r], el[s], G));
    }
  }
  R.finalize();
  return R;
}

std::string render_word(const Elem& a, const PcPresentation& P) {
  std::ostringstream os;
  bool first = true;
  int i = 0;
  while (i < P.n) {
    int base = P.gens[i].aux_of >= 0 ? P.gens[i].aux_of : i;
    long long total = 0, scale = 1;
    int k = i;
    // consecutive chain members of one declared generator
    while (k < P.n && (k == base || P.gens[k].aux_of == base)) {
      total += a[k] * scale;
      scale *= P.rel_order[k];
      ++k;
    }
    if (k == i) k = i + 1;
    if (total) {
      if (!first) os << '*';
      first = false;
      os << P.gens[base].label;
      if (total != 1) os << '^' << total;
    }
    i = k;
  }
  if (first) os << '1';
  return os.str();
}

}  // namespace

Word parse_word(std::string_view text, const std::vector<std::string>& names) {
  std::string s = trim(text);
  if (s.empty()) throw ParseError("empty word");
  if (s == "1") return {};
  Word w;
  for (const auto& f : split_top(s, '*')) {
    auto caret = f.find('^');
    std::string nm = trim(f.substr(0, caret));
    int g = index_of(names, nm);
    if (g < 0) throw ParseError("unknown generator '" + nm + "'");
    long long e = caret == std::string::npos ? 1 : parse_int(trim(f.substr(caret + 1)), f);
    if (e > 100000 || e < -100000) throw ParseError("exponent too large in '" + f + "'");
    if (e) w.emplace_back(g, int(e));
  }
  return w;
}

PcPresentation parse_presentation(std::string_view text) {
  RawGroup raw;
  bool ended = false;
  for (const auto& st : statements(text)) {
    if (ended) throw ParseError("line " + std::to_string(st.line) + ": text after end");
    if (st.key == "group") {
      if (raw.have_gens) throw ParseError("line " + std::to_string(st.line) + ": group after gens");
      raw.name = st.rest;
      continue;
    }
    if (st.key == "end") {
      ended = true;
      continue;
    }
    add_statement(raw, st);
  }
  if (!raw.have_gens) throw ParseError("missing gens statement");
  return build(raw);
}

std::vector<CatalogEntry> parse_catalog(std::string_view text) {
  std::vector<CatalogEntry> out;
  std::optional<RawGroup> cur;
  for (const auto& st : statements(text)) {
    if (st.key == "group") {
      if (cur) throw ParseError("line " + std::to_string(st.line) + ": missing end");
      cur.emplace();
      cur->name = st.rest;
      if (cur->name.empty()) throw ParseError("line " + std::to_string(st.line) + ": group needs a name");
      continue;
    }
    if (!cur) throw ParseError("line " + std::to_string(st.line) + ": statement outside group block");
    if (st.key == "end") {
      if (!cur->have_gens) throw ParseError("group " + cur->name + ": missing gens");
      try {
        out.push_back({cur->name, build(*cur)});
      } catch (const std::invalid_argument& e) {
        throw ParseError("group " + cur->name + ": " + e.what());
      }
      cur.reset();
      continue;
    }
    add_statement(*cur, st);
  }
  if (cur) throw ParseError("group " + cur->name + ": missing end");
  return out;
}

std::string print_presentation(const PcPresentation& P, const std::string& name) {
  std::ostringstream os;
  if (!name.empty()) os << "group " << name << '\n';
  std::vector<int> declared;
  for (int i = 0; i < P.n; ++i)
    if (P.gens[i].aux_of < 0) declared.push_back(i);
  os << "gens ";
  for (size_t k = 0; k < declared.size(); ++k) os << (k ? "," : "") << P.gens[declared[k]].label;
  os << '\n';
  for (int i : declared) {
    int last = i;
    long long ord = P.rel_order[i];
    while (last + 1 < P.n && P.gens[last + 1].aux_of == i) {
      ++last;
      ord *= P.rel_order[last];
    }
    const Elem& w = P.power[last];
    if (last == i && w.is_identity()) continue;
    os << "pow " << P.gens[i].label << '^' << ord << " = " << render_word(w, P) << '\n';
  }
  for (size_t a = 0; a < declared.size(); ++a)
    for (size_t b = 0; b < a; ++b) {
      const Elem& c = P.comm[declared[a]][declared[b]];
      if (c.is_identity()) continue;
      os << "comm [" << P.gens[declared[a]].label << ',' << P.gens[declared[b]].label
         << "] = " << render_word(c, P) << '\n';
    }
  if (!name.empty()) os << "end\n";
  return os.str();
}

}  // namespace cap
