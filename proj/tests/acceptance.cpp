// Acceptance report: one PASS/FAIL line per criterion.
// Exit status is 0 when every failing criterion is listed in kKnownGaps.

#include <algorithm>
#include <chrono>
#include <functional>
#include <iostream>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "silt/errors.hpp"
#include "silt/explorer.hpp"
#include "silt/fixtures.hpp"
#include "silt/torsion.hpp"

using namespace silt;

namespace {

// Exact comparisons everywhere; the only numeric tolerances are these caps and pinned counts.
constexpr int kSerreRange = 4;
constexpr int kKroneckerDepth = 6;
constexpr int kLengthBound = 4;
constexpr double kRuntimeBudgetSeconds = 300.0;
const std::set<int> kKnownGaps = {2};

struct Check {
  bool ok = true;
  std::string detail;
  void expect(bool cond, const std::string& what) {
    if (!cond && ok) detail = what;
    ok = ok && cond;
  }
};

Element word(const AlgebraPtr& a, const std::vector<std::string>& names) {
  return a->path_element(parse_path(a->quiver(), names));
}

AMatrix single(const Element& e) {
  AMatrix m(1, 1);
  m.at(0, 0) = e;
  return m;
}

AlgebraPtr named(const std::string& n) {
  if (n == "A3") return build_algebra(fixtures::a3());
  if (n == "N3") return build_algebra(fixtures::n3());
  if (n == "K2") return build_algebra(fixtures::k2());
  if (n == "SN22") return build_algebra(fixtures::sn22());
  return build_algebra(fixtures::kronecker());
}

ProjComplex n3_tilting(const AlgebraPtr& a) {
  return direct_sum({make_complex(a, 0, {{1}, {1}, {0}}, {single(word(a, {"x2", "x3", "x1"})), single(word(a, {"x1"}))}),
                     stalk(a, {1}, 0), two_term(a, {1}, {2}, single(word(a, {"x3", "x1"})), 0)});
}

ProjComplex n3_t1(const AlgebraPtr& a) {
  return direct_sum({two_term(a, {1}, {0}, single(word(a, {"x1"})), 0), stalk(a, {1}, 0),
                     two_term(a, {1}, {2}, single(word(a, {"x3", "x1"})), 0)});
}

int find_summand(const SiltingRecord& r, const ProjComplex& x) {
  for (int k = 0; k < static_cast<int>(r.summands.size()); ++k)
    if (iso_complexes(r.summands[k], x)) return k;
  return -1;
}

bool same_modules(std::vector<Representation> got, const std::vector<Representation>& want) {
  if (got.size() != want.size()) return false;
  for (const auto& w : want) {
    auto it = std::find_if(got.begin(), got.end(), [&](const Representation& g) { return is_isomorphic(g, w); });
    if (it == got.end()) return false;
    got.erase(it);
  }
  return true;
}

Check criterion1() {
  Check c;
  auto a = named("N3");
  ProjComplex t = n3_tilting(a);
  SiltingRecord rt = classify(t);
  c.expect(rt.status == Status::Tilting, "T is not classified as tilting");
  Representation p3 = projective(a, 2);
  Sub rad1 = radical(p3);
  Sub rad2 = radical(rad1.rep);
  std::vector<Matrix> amb;
  for (int v = 0; v < a->num_vertices(); ++v) amb.push_back(rad1.basis[v] * rad2.basis[v]);
  Representation m31 = quotient(p3, amb).rep;
  c.expect(loewy_string(m31) == "(3/1)", "oracle (3/1) has the wrong Loewy series");
  TorsionClass cls = perp_class(cohomology(t, 0));
  c.expect(same_modules(cls.indecomposables, {simple(a, 0), simple(a, 2), m31}), "perp H^0(T) differs");
  c.expect(same_modules(cls.ext_projectives, {simple(a, 0), m31}), "Ext-projectives differ");
  ProjComplex t1 = n3_t1(a);
  c.expect(iso_complexes(torsion_silting(cls).complex, t1), "T_C is not T_1");
  int longest = 0;
  for (int k = 0; k < static_cast<int>(rt.summands.size()); ++k)
    if (complex_length(rt.summands[k]) > complex_length(rt.summands[longest])) longest = k;
  c.expect(complex_length(rt.summands[longest]) == 3, "no summand of length 3");
  c.expect(iso_complexes(mutate(rt, longest, Direction::Left).complex, t1), "left mutation at the long summand is not T_1");
  SiltingRecord r1 = classify(t1);
  int k3 = find_summand(r1, two_term(a, {1}, {2}, single(word(a, {"x3", "x1"})), 0));
  SiltingRecord step = mutate(r1, k3, Direction::Left);
  int k1 = find_summand(step, two_term(a, {1}, {0}, single(word(a, {"x1"})), 0));
  c.expect(k3 >= 0 && k1 >= 0, "summands of T_1 not found");
  if (k3 >= 0 && k1 >= 0) c.expect(iso_complexes(mutate(step, k1, Direction::Left).complex, regular_complex(a)), "double mutation of T_1 is not A");
  if (c.ok) c.detail = "T tilting, perp class {S_1, S_3, (3/1)}, Ext-projectives {S_1, (3/1)}, T_C = T_1 = mu+(T), A = mu+mu+(T_1)";
  return c;
}

Check criterion2() {
  Check c;
  auto a = named("A3");
  ProjComplex p3 = stalk(a, {2}, 0);
  ProjComplex s1 = two_term(a, {1}, {0}, single(word(a, {"a"})), -1);
  ProjComplex m12 = two_term(a, {2}, {0}, single(word(a, {"a", "b"})), -1);
  ProjComplex m123 = stalk(a, {0}, 0);
  ProjComplex m23 = stalk(a, {1}, 0);
  ProjComplex m2 = two_term(a, {2}, {1}, single(word(a, {"b"})), -1);
  int completions = 0;
  std::vector<std::string> tilting;
  for (int n = -2; n <= 2; ++n) {
    ProjComplex t = direct_sum({p3, shift(s1, n)});
    c.expect(classify(t).status == Status::Presilting, "P_3 + S_1[" + std::to_string(n) + "] is not presilting");
    for (int l = std::min(n, 0) - 2; l <= std::max(n, 0) + 2; ++l) {
      ProjComplex m;
      if (n >= 0) m = l < 0 ? m12 : (l <= n ? m123 : m23);
      else m = l <= n ? m12 : (l < 0 ? m2 : m23);
      SiltingRecord r = classify(direct_sum({t, shift(m, l)}));
      ++completions;
      c.expect(r.at_least(Status::Silting), "completion (n, l) = (" + std::to_string(n) + ", " + std::to_string(l) + ") is not silting");
      if (r.status == Status::Tilting) tilting.push_back("(" + std::to_string(n) + "," + std::to_string(l) + ")");
    }
  }
  std::string list;
  for (const auto& s : tilting) list += (list.empty() ? "" : " ") + s;
  if (!c.ok) return c;
  c.expect(tilting.empty(), "presilting and all " + std::to_string(completions) +
                                " completions silting hold, but the negative-vanishing test finds tilting completions at (n,l) = " +
                                list + "; P_3 + S_1 (n = 0) is a classical tilting module summand, so the 'never tilting' claim cannot hold");
  if (c.ok) c.detail = "all " + std::to_string(completions) + " completions silting, none tilting";
  return c;
}

Check criterion3() {
  Check c;
  const std::vector<std::pair<std::string, int>> counts = {{"A3", 14}, {"N3", 20}, {"K2", 6}, {"SN22", 6}};
  std::string detail;
  for (const auto& [name, count] : counts) {
    auto a = named(name);
    SiltingQuiverGraph g = enumerate_interval(regular_record(a), regular_complex(a, -1));
    c.expect(g.complete, name + ": enumeration incomplete");
    c.expect(static_cast<int>(g.nodes.size()) == count, name + ": " + std::to_string(g.nodes.size()) + " nodes, expected " + std::to_string(count));
    c.expect(two_term_by_presentations(a).size() == g.nodes.size(), name + ": presentation search disagrees");
    c.expect(left_connected(g), name + ": not left-connected by provenance");
    c.expect(edges_are_covering(g), name + ": edges differ from covering pairs");
    detail += name + " " + std::to_string(g.nodes.size()) + " ";
  }
  if (c.ok) c.detail = "complete, connected, edges = covering pairs; counts " + detail;
  return c;
}

Check criterion4() {
  Check c;
  const std::vector<std::pair<std::string, int>> counts = {{"N3", 150}, {"K2", 19}};
  std::string detail;
  for (const auto& [name, count] : counts) {
    auto a = named(name);
    ProjComplex reg = regular_complex(a);
    SiltingQuiverGraph g = enumerate_interval(regular_record(a), regular_complex(a, -2));
    c.expect(g.complete, name + ": [A, A[2]] incomplete");
    c.expect(static_cast<int>(g.nodes.size()) == count, name + ": " + std::to_string(g.nodes.size()) + " nodes");
    c.expect(left_connected(g), name + ": [A, A[2]] not connected");
    for (const auto& p : g.nodes) {
      SiltingRecord q = shifted(p, -2);
      try {
        Reduction r = two_term_reduce(q);
        const ProjComplex& t = r.result.complex;
        c.expect(r.result.at_least(Status::Silting), name + ": reduction not silting");
        c.expect(compare_order(shift(reg, -1), t) && compare_order(t, reg), name + ": reduction not two-term");
        c.expect(compare_order(shift(t, -r.length + 1), q.complex) && compare_order(q.complex, t),
                 name + ": T[-l+1] >= P >= T fails");
        c.expect(r.length >= 1 && r.length <= 3, name + ": length out of range");
      } catch (const Error& e) {
        c.expect(false, name + ": " + e.what());
      }
    }
    detail += name + " " + std::to_string(g.nodes.size()) + " ";
  }
  if (c.ok) c.detail = "complete and connected, every node reduced with four order checks; counts " + detail;
  return c;
}

Check criterion5() {
  Check c;
  int subsets = 0;
  for (const std::string name : {"N3", "K2", "SN22"}) {
    auto a = named(name);
    const int n = a->num_vertices();
    for (int mask = 0; mask < (1 << n); ++mask) {
      std::vector<int> e;
      for (int v = 0; v < n; ++v)
        if (mask & (1 << v)) e.push_back(v);
      ++subsets;
      SiltingRecord o = okuyama_rickard(a, e);
      TorsionClass cls = perp_class(okuyama_rickard_cogenerator(a, e));
      SiltingRecord t = torsion_silting(cls);
      const std::string tag = name + " mask " + std::to_string(mask);
      c.expect(iso_complexes(o.complex, t.complex), tag + ": Okuyama-Rickard differs from T_C");
      c.expect(o.at_least(Status::Silting), tag + ": not silting");
      c.expect((o.status == Status::Tilting) == nu_stable(cls), tag + ": tilting does not match nu-stability");
      if (mask == 0) c.expect(iso_complexes(o.complex, regular_complex(a)), tag + ": e = 0 is not A");
      if (mask == (1 << n) - 1) c.expect(iso_complexes(o.complex, regular_complex(a, 1)), tag + ": e = 1 is not A[-1]");
    }
  }
  if (c.ok) c.detail = std::to_string(subsets) + " idempotents: OR = T_C, silting, tilting iff nu-stable, degenerate cases A and A[-1]";
  return c;
}

Check criterion6() {
  Check c;
  int checked = 0;
  for (const std::string name : {"SN22", "N3"}) {
    auto a = named(name);
    int tilting = 0;
    bool only_shifts = true;
    for (const auto& t : two_term_silting(a)) {
      ++checked;
      ProjComplex nt = nu_complex(t.complex);
      bool stable = iso_complexes(nt, t.complex);
      c.expect((t.status == Status::Tilting) == stable, name + ": tilting differs from nu-stability");
      if (t.status == Status::Tilting) {
        ++tilting;
        c.expect(compare_order(t.complex, nt), name + ": T >= nu T fails");
        c.expect(build_algebra(end_algebra(t))->nakayama().self_injective, name + ": End(T) not self-injective");
        only_shifts = only_shifts && (iso_complexes(t.complex, regular_complex(a)) || iso_complexes(t.complex, regular_complex(a, -1)));
      }
      try {
        int order = nu_orbit_order(t, 2);
        c.expect(order >= 1 && order <= 2, name + ": nu orbit too long");
      } catch (const Error&) {
        c.expect(false, name + ": nu orbit longer than 2");
      }
    }
    if (name == "SN22") c.expect(tilting == 2 && only_shifts, "SN22: tilting members are not exactly A and A[1]");
  }
  if (c.ok) c.detail = std::to_string(checked) + " two-term objects: tilting iff nu-stable, T >= nu T, orbit <= 2, End(T) self-injective; SN22 tilting = {A, A[1]}";
  return c;
}

Check criterion7() {
  Check c;
  int cases = 0;
  for (const std::string name : {"N3", "K2"}) {
    auto a = named(name);
    SiltingRecord reg = regular_record(a);
    std::set<std::string> seen;
    for (const auto& t : two_term_silting(a)) {
      const int n = static_cast<int>(t.summands.size());
      for (int mask = 0; mask < (1 << n); ++mask) {
        std::vector<ProjComplex> parts;
        for (int k = 0; k < n; ++k)
          if (mask & (1 << k)) parts.push_back(shift(t.summands[k], -1));
        ProjComplex u = parts.empty() ? zero_complex(a) : direct_sum(parts);
        if (!seen.insert(complex_key(u)).second) continue;
        ++cases;
        SiltingRecord w = bongartz_complete(reg, u);
        c.expect(w.at_least(Status::Silting), name + ": completion not silting");
        c.expect(u.is_zero() || in_add(u, w.summands), name + ": completion does not contain U");
      }
    }
  }
  if (c.ok) c.detail = std::to_string(cases) + " distinct U completed to silting objects containing U";
  return c;
}

Check criterion8() {
  Check c;
  auto a = named("Kronecker");
  SiltingQuiverGraph g = explore_left(regular_record(a), kKroneckerDepth);
  auto x = [&](const Representation& m) { return presentation_complex(m); };
  ProjComplex x1 = x(tau_inverse(projective(a, 1)));
  ProjComplex x2 = x(tau_inverse(projective(a, 0)));
  ProjComplex x3 = x(tau_inverse(tau_inverse(projective(a, 1))));
  std::vector<ProjComplex> chain = {regular_complex(a), direct_sum({stalk(a, {0}), x1}), direct_sum({x2, x1}), direct_sum({x2, x3})};
  for (std::size_t k = 0; k < chain.size(); ++k) {
    int i = g.find(chain[k]);
    c.expect(i >= 0, "prefix element " + std::to_string(k) + " not reached");
    if (k > 0 && i >= 0) {
      int p = g.find(chain[k - 1]);
      bool edge = std::any_of(g.edges.begin(), g.edges.end(), [&](const GraphEdge& e) { return e.from == p && e.to == i; });
      c.expect(edge && compare_order(chain[k - 1], chain[k]), "prefix step " + std::to_string(k) + " is not a left mutation");
    }
  }
  AMatrix ab(1, 2);
  ab.at(0, 0) = a->arrow_element(0);
  ab.at(0, 1) = a->arrow_element(1);
  ProjComplex target = direct_sum({two_term(a, {1, 1}, {0}, ab, -1), stalk(a, {1}, -1)});
  c.expect(classify(target).at_least(Status::Silting), "S_1 + P_2[1] is not silting");
  c.expect(g.find(target) < 0, "S_1 + P_2[1] reached by left mutation from A");
  bool capped = false;
  try {
    connect_descend(regular_record(a), target, kKroneckerDepth);
  } catch (const Error& e) {
    capped = e.kind() == ErrorKind::CapExceeded;
  }
  c.expect(capped, "connect_descend did not report CapExceeded");
  SiltingRecord reg = regular_record(a);
  SiltingRecord right = mutate(reg, find_summand(reg, stalk(a, {0})), Direction::Right);
  MutationPath p = connect_descend(right, target, kKroneckerDepth);
  c.expect(p.reached, "right mutation at P_1 is not left-connected to S_1 + P_2[1]");
  if (c.ok)
    c.detail = std::to_string(g.nodes.size()) + " nodes to depth " + std::to_string(kKroneckerDepth) +
               ", prefix reproduced, target unreached, CapExceeded, reached in " + std::to_string(p.steps.size()) +
               " steps after mu-(P_1)";
  return c;
}

Check criterion9() {
  Check c;
  int serre = 0, order = 0, rounds = 0, lengths = 0;
  for (const std::string name : {"A3", "N3", "K2", "SN22", "Kronecker"}) {
    auto a = named(name);
    const int n = a->num_vertices();
    std::vector<SiltingRecord> silt;
    if (name == "Kronecker") silt = explore_left(regular_record(a), 3).nodes;
    else silt = enumerate_interval(regular_record(a), regular_complex(a, -2)).nodes;
    std::vector<ProjComplex> probes;
    for (int v = 0; v < n; ++v) {
      probes.push_back(stalk(a, {v}));
      probes.push_back(presentation_complex(simple(a, v)));
    }
    for (std::size_t k = 0; k < silt.size() && k < 6; ++k) probes.push_back(silt[k].complex);
    for (const auto& p : probes)
      for (const auto& x : probes) {
        ModuleComplex np = nu_module_complex(p);
        for (int i = -kSerreRange; i <= kSerreRange; ++i) {
          ++serre;
          c.expect(hom_dim(p, x, i) == hom_dim_to_modules(x, np, -i), name + ": Serre duality dimension mismatch");
        }
      }
    const std::size_t m = std::min<std::size_t>(silt.size(), 24);
    for (std::size_t i = 0; i < m; ++i) {
      c.expect(static_cast<int>(silt[i].summands.size()) == n, name + ": summand count differs from |A|");
      c.expect(compare_order(silt[i].complex, silt[i].complex), name + ": order not reflexive");
      for (std::size_t j = 0; j < m; ++j) {
        bool ij = compare_order(silt[i].complex, silt[j].complex);
        bool ji = compare_order(silt[j].complex, silt[i].complex);
        ++order;
        if (ij && ji) c.expect(iso_complexes(silt[i].complex, silt[j].complex), name + ": antisymmetry fails");
        if (!ij) continue;
        for (std::size_t k = 0; k < m; ++k)
          if (compare_order(silt[j].complex, silt[k].complex))
            c.expect(compare_order(silt[i].complex, silt[k].complex), name + ": transitivity fails");
      }
    }
    for (std::size_t i = 0; i < std::min<std::size_t>(silt.size(), 8); ++i)
      for (int k = 0; k < n; ++k) {
        ++rounds;
        SiltingRecord l = mutate(silt[i], k, Direction::Left);
        c.expect(iso_complexes(mutate(l, l.new_summand, Direction::Right).complex, silt[i].complex), name + ": left then right is not the identity");
        SiltingRecord r = mutate(silt[i], k, Direction::Right);
        c.expect(iso_complexes(mutate(r, r.new_summand, Direction::Left).complex, silt[i].complex), name + ": right then left is not the identity");
      }
    std::vector<ProjComplex> shaped = probes;
    shaped.push_back(direct_sum({regular_complex(a), regular_complex(a, -3)}));
    if (!silt.empty()) shaped.push_back(direct_sum({silt.back().complex, shift(silt.back().complex, 1)}));
    for (const auto& x0 : shaped) {
      ProjComplex x = minimize(x0);
      const int len = complex_length(x);
      if (x.is_zero() || len > kLengthBound) continue;
      ++lengths;
      for (int s = -x.hi() - 2; s <= -x.lo + 2; ++s) {
        // window [lo, hi] <=> A[-hi] >= X >= A[-lo]
        c.expect(compare_order(regular_complex(a, s), x) == (s >= x.hi()), name + ": upper length bound mismatch");
        c.expect(compare_order(x, regular_complex(a, s)) == (s <= x.lo), name + ": lower length bound mismatch");
      }
    }
  }
  if (c.ok)
    c.detail = std::to_string(serre) + " Serre equalities, " + std::to_string(order) + " order pairs, " +
               std::to_string(rounds) + " mutation round trips, " + std::to_string(lengths) + " length checks";
  return c;
}

}  // namespace

int main() {
  const auto start = std::chrono::steady_clock::now();
  const std::vector<std::function<Check()>> criteria = {criterion1, criterion2, criterion3, criterion4, criterion5,
                                                        criterion6, criterion7, criterion8, criterion9};
  std::vector<int> failed;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const int id = static_cast<int>(i) + 1;
    Check c;
    try {
      c = criteria[i]();
    } catch (const std::exception& e) {
      c.ok = false;
      c.detail = std::string("exception: ") + e.what();
    }
    if (id == 9) {
      double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
      c.expect(secs < kRuntimeBudgetSeconds, "runtime budget exceeded");
    }
    std::cout << (c.ok ? "PASS" : "FAIL") << " criterion " << id << ": " << c.detail << std::endl;
    if (!c.ok) failed.push_back(id);
  }
  bool unexplained = false;
  for (int id : failed)
    if (!kKnownGaps.count(id)) unexplained = true;
  std::cout << "summary: " << criteria.size() - failed.size() << "/" << criteria.size() << " pass";
  if (!failed.empty()) {
    std::cout << "; failing:";
    for (int id : failed) std::cout << " " << id << (kKnownGaps.count(id) ? " (documented gap)" : "");
  }
  std::cout << std::endl;
  return unexplained ? 1 : 0;
}
