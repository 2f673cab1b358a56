#include "silt/explorer.hpp"

#include <deque>
#include <map>
#include <set>
#include <sstream>

#include "silt/errors.hpp"

namespace silt {

namespace {

class NodeIndex {
 public:
  int find(const ProjComplex& x, const std::string& fp, const std::vector<SiltingRecord>& nodes) const {
    auto it = by_fp_.find(fp);
    if (it == by_fp_.end()) return -1;
    for (int k : it->second)
      if (iso_complexes(nodes[k].complex, x)) return k;
    return -1;
  }
  void add(const std::string& fp, int k) { by_fp_[fp].push_back(k); }

 private:
  std::map<std::string, std::vector<int>> by_fp_;
};

SiltingQuiverGraph bfs(const SiltingRecord& top, const std::optional<ProjComplex>& bottom, int depth, int cap) {
  require(top.at_least(Status::Silting), ErrorKind::NotSilting, "exploration needs a silting top");
  if (bottom) require(compare_order(top.complex, *bottom), ErrorKind::OrderViolated, "top must be >= bottom");
  SiltingQuiverGraph g;
  g.alg = top.complex.alg;
  g.top = top.complex;
  g.bottom = bottom;
  NodeIndex index;
  g.nodes.push_back(top);
  index.add(top.fingerprint, 0);
  std::deque<std::pair<int, int>> queue{{0, 0}};
  bool truncated = false;
  while (!queue.empty()) {
    auto [k, dist] = queue.front();
    queue.pop_front();
    if (depth >= 0 && dist >= depth) {
      truncated = true;
      continue;
    }
    const int ns = static_cast<int>(g.nodes[k].summands.size());
    for (int s = 0; s < ns; ++s) {
      SiltingRecord u = mutate(g.nodes[k], s, Direction::Left);
      if (bottom && !compare_order(u.complex, *bottom)) continue;
      int j = index.find(u.complex, u.fingerprint, g.nodes);
      if (j < 0) {
        if (static_cast<int>(g.nodes.size()) >= cap) {
          truncated = true;
          continue;
        }
        j = static_cast<int>(g.nodes.size());
        g.nodes.push_back(std::move(u));
        index.add(g.nodes[j].fingerprint, j);
        queue.emplace_back(j, dist + 1);
      }
      g.edges.push_back({k, j, s});
    }
  }
  g.complete = !truncated;
  return g;
}

std::string escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    if (c == '\n') {
      out += "\\n";
      continue;
    }
    out += c;
  }
  return out;
}

// the rendered complex ends with a newline; DOT labels drop it
std::string label_of(const ProjComplex& x) {
  std::string p = pretty(x);
  while (!p.empty() && p.back() == '\n') p.pop_back();
  return p;
}

}  // namespace

int SiltingQuiverGraph::find(const ProjComplex& x) const {
  for (int k = 0; k < static_cast<int>(nodes.size()); ++k)
    if (iso_complexes(nodes[k].complex, x)) return k;
  return -1;
}

SiltingQuiverGraph enumerate_interval(const SiltingRecord& top, const ProjComplex& bottom, int cap) {
  return bfs(top, bottom, -1, cap);
}

SiltingQuiverGraph explore_left(const SiltingRecord& top, int depth, int cap) {
  return bfs(top, std::nullopt, depth, cap);
}

std::vector<SiltingRecord> two_term_silting(AlgebraPtr a, int cap) {
  SiltingQuiverGraph g = enumerate_interval(regular_record(a), regular_complex(a, -1), cap);
  require(g.complete, ErrorKind::CapExceeded, "two-term enumeration exceeded " + std::to_string(cap) + " nodes");
  return g.nodes;
}

std::vector<SiltingRecord> two_term_by_presentations(AlgebraPtr a, int cap) {
  std::vector<ProjComplex> cand;
  for (const auto& m : list_indecomposables(a, cap)) {
    ProjComplex p = presentation_complex(m);
    if (hom_dim(p, p, 1) == 0) cand.push_back(p);
  }
  for (int v = 0; v < a->num_vertices(); ++v) cand.push_back(stalk(a, {v}, -1));
  const int m = static_cast<int>(cand.size());
  std::vector<std::vector<bool>> ok(m, std::vector<bool>(m, true));
  for (int i = 0; i < m; ++i)
    for (int j = i + 1; j < m; ++j) ok[i][j] = ok[j][i] = hom_dim(cand[i], cand[j], 1) == 0 && hom_dim(cand[j], cand[i], 1) == 0;
  const int n = a->num_vertices();
  std::vector<SiltingRecord> out;
  std::vector<int> chosen;
  auto extend = [&](auto&& self, int from) -> void {
    if (static_cast<int>(chosen.size()) == n) {
      std::vector<ProjComplex> parts;
      for (int i : chosen) parts.push_back(cand[i]);
      SiltingRecord r = classify(direct_sum(parts));
      require(r.at_least(Status::Silting), ErrorKind::Internal, "compatible two-term family is not silting");
      out.push_back(r);
      return;
    }
    for (int i = from; i < m; ++i) {
      bool fits = true;
      for (int c : chosen) fits = fits && ok[c][i];
      if (!fits) continue;
      chosen.push_back(i);
      self(self, i + 1);
      chosen.pop_back();
    }
  };
  extend(extend, 0);
  return out;
}

std::vector<std::pair<int, int>> covering_pairs(const SiltingQuiverGraph& g) {
  const int n = static_cast<int>(g.nodes.size());
  std::vector<std::vector<bool>> ge(n, std::vector<bool>(n, false));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) ge[i][j] = i == j || compare_order(g.nodes[i].complex, g.nodes[j].complex);
  std::vector<std::pair<int, int>> out;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      if (i == j || !ge[i][j]) continue;
      bool cover = true;
      for (int k = 0; k < n && cover; ++k)
        if (k != i && k != j && ge[i][k] && ge[k][j]) cover = false;
      if (cover) out.emplace_back(i, j);
    }
  return out;
}

bool edges_are_covering(const SiltingQuiverGraph& g) {
  std::set<std::pair<int, int>> e;
  for (const auto& x : g.edges) e.emplace(x.from, x.to);
  auto c = covering_pairs(g);
  return e == std::set<std::pair<int, int>>(c.begin(), c.end());
}

bool edges_descend(const SiltingQuiverGraph& g) {
  for (const auto& e : g.edges) {
    if (e.from == e.to) return false;
    if (!compare_order(g.nodes[e.from].complex, g.nodes[e.to].complex)) return false;
  }
  return true;
}

bool left_connected(const SiltingQuiverGraph& g) {
  const int n = static_cast<int>(g.nodes.size());
  std::vector<bool> seen(n, false);
  std::deque<int> q{0};
  seen[0] = true;
  while (!q.empty()) {
    int k = q.front();
    q.pop_front();
    for (const auto& e : g.edges)
      if (e.from == k && !seen[e.to]) {
        seen[e.to] = true;
        q.push_back(e.to);
      }
  }
  for (int k = 0; k < n; ++k) {
    if (!seen[k]) return false;
    const SiltingRecord& r = g.nodes[k];
    SiltingRecord back = replay(r.root.alg ? r.root : r.complex, r.steps);
    if (complex_key(back.complex) != complex_key(r.complex)) return false;
  }
  return true;
}

std::vector<std::pair<int, int>> shift_classes(const SiltingQuiverGraph& g) {
  const int n = static_cast<int>(g.nodes.size());
  std::vector<std::pair<int, int>> out(n);
  for (int j = 0; j < n; ++j) {
    out[j] = {j, 0};
    const ProjComplex& y = g.nodes[j].complex;
    for (int i = 0; i < j && out[j].first == j; ++i) {
      const ProjComplex& x = g.nodes[i].complex;
      if (x.is_zero() || y.is_zero()) continue;
      const int s = x.lo - y.lo;  // y = x[s] moves the window down by s
      if (s != 0 && x.hi() - x.lo == y.hi() - y.lo && out[i].first == i && iso_complexes(shift(x, s), y))
        out[j] = {i, s};
    }
  }
  return out;
}

std::string export_dot(const SiltingQuiverGraph& g, bool shift_identify) {
  std::ostringstream os;
  const int n = static_cast<int>(g.nodes.size());
  std::vector<std::pair<int, int>> cls(n);
  for (int k = 0; k < n; ++k) cls[k] = {k, 0};
  if (shift_identify) cls = shift_classes(g);
  os << "digraph silting {\n";
  for (int k = 0; k < n; ++k)
    if (cls[k].first == k) os << "  s" << k << " [label=\"" << escape(label_of(g.nodes[k].complex)) << "\"];\n";
  for (const auto& e : g.edges) {
    const int from = cls[e.from].first, to = cls[e.to].first;
    const int s = cls[e.to].second - cls[e.from].second;
    os << "  s" << from << " -> s" << to << " [label=\"μ+ @ " << e.summand;
    if (s != 0) os << " [" << s << "]\", style=dashed];\n";
    else os << "\"];\n";
  }
  os << "}\n";
  return os.str();
}

io::json export_json(const SiltingQuiverGraph& g, bool shift_identify) {
  const int n = static_cast<int>(g.nodes.size());
  std::vector<std::pair<int, int>> cls(n);
  for (int k = 0; k < n; ++k) cls[k] = {k, 0};
  if (shift_identify) cls = shift_classes(g);
  io::json nodes = io::json::array(), edges = io::json::array();
  for (int k = 0; k < n; ++k) {
    if (cls[k].first != k) continue;
    const SiltingRecord& r = g.nodes[k];
    nodes.push_back({{"id", "s" + std::to_string(k)},
                     {"complex", io::complex_to_json(r.complex)},
                     {"status", to_string(r.status)},
                     {"provenance", io::steps_to_json(r.steps)}});
  }
  for (const auto& e : g.edges)
    edges.push_back({{"from", "s" + std::to_string(cls[e.from].first)},
                     {"to", "s" + std::to_string(cls[e.to].first)},
                     {"summand", e.summand},
                     {"shift", cls[e.to].second - cls[e.from].second}});
  io::json out = {{"nodes", nodes}, {"edges", edges}, {"complete", g.complete}};
  out["root"] = io::complex_to_json(g.nodes.empty() || !g.nodes[0].root.alg ? g.top : g.nodes[0].root);
  if (g.bottom) out["bottom"] = io::complex_to_json(*g.bottom);
  return out;
}

SiltingQuiverGraph graph_from_json(AlgebraPtr a, const io::json& j) {
  try {
    SiltingQuiverGraph g;
    g.alg = a;
    g.complete = j.at("complete").get<bool>();
    ProjComplex root = io::complex_from_json(a, j.at("root"));
    if (j.contains("bottom")) g.bottom = io::complex_from_json(a, j.at("bottom"));
    std::map<std::string, int> ids;
    for (const auto& nj : j.at("nodes")) {
      SiltingRecord r = replay(root, io::steps_from_json(nj.at("provenance")));
      require(complex_key(r.complex) == complex_key(io::complex_from_json(a, nj.at("complex"))), ErrorKind::Parse,
              "node provenance does not reproduce its complex");
      require(to_string(r.status) == nj.at("status").get<std::string>(), ErrorKind::Parse,
              "node provenance does not reproduce its status");
      ids[nj.at("id").get<std::string>()] = static_cast<int>(g.nodes.size());
      g.nodes.push_back(std::move(r));
    }
    require(!g.nodes.empty(), ErrorKind::Parse, "graph has no nodes");
    g.top = g.nodes[0].complex;
    for (const auto& ej : j.at("edges")) {
      require(ej.at("shift").get<int>() == 0, ErrorKind::Parse, "shift-identified graphs do not parse back");
      g.edges.push_back({ids.at(ej.at("from").get<std::string>()), ids.at(ej.at("to").get<std::string>()),
                         ej.at("summand").get<int>()});
    }
    return g;
  } catch (const io::json::exception& e) {
    fail(ErrorKind::Parse, std::string("malformed graph document: ") + e.what());
  } catch (const std::out_of_range&) {
    fail(ErrorKind::Parse, "edge refers to an unknown node");
  }
}

bool same_graph(const SiltingQuiverGraph& x, const SiltingQuiverGraph& y) {
  if (x.complete != y.complete || x.nodes.size() != y.nodes.size() || x.edges != y.edges) return false;
  for (std::size_t k = 0; k < x.nodes.size(); ++k) {
    const auto& a = x.nodes[k];
    const auto& b = y.nodes[k];
    if (complex_key(a.complex) != complex_key(b.complex) || a.status != b.status || a.steps.size() != b.steps.size())
      return false;
    for (std::size_t s = 0; s < a.steps.size(); ++s)
      if (a.steps[s].summand != b.steps[s].summand || a.steps[s].direction != b.steps[s].direction ||
          a.steps[s].parent != b.steps[s].parent)
        return false;
  }
  return true;
}

}  // namespace silt
