#include "silt/algebra.hpp"

#include <algorithm>
#include <deque>
#include <set>
#include <sstream>
#include <tuple>

#include "silt/errors.hpp"

namespace silt {

using Key = std::pair<int, std::vector<int>>;
using Poly_ = std::map<Key, Scalar>;

Quiver::Quiver(std::vector<std::string> vertices, std::vector<Arrow> arrows)
    : vertices_(std::move(vertices)), arrows_(std::move(arrows)) {
  std::set<std::string> seen;
  for (const auto& v : vertices_)
    require(seen.insert(v).second, ErrorKind::InvalidArgument, "duplicate vertex label '" + v + "'");
  std::set<std::string> names;
  for (const auto& a : arrows_) {
    require(names.insert(a.name).second, ErrorKind::InvalidArgument, "duplicate arrow name '" + a.name + "'");
    require(a.source >= 0 && a.source < num_vertices() && a.target >= 0 && a.target < num_vertices(),
            ErrorKind::InvalidArgument, "arrow '" + a.name + "' uses an undeclared vertex");
  }
}

Quiver Quiver::make(std::vector<std::string> vertices,
                    const std::vector<std::tuple<std::string, std::string, std::string>>& arrows) {
  Quiver tmp(vertices, {});
  std::vector<Arrow> as;
  for (const auto& [name, s, t] : arrows) as.push_back({name, tmp.vertex_index(s), tmp.vertex_index(t)});
  return Quiver(std::move(vertices), std::move(as));
}

int Quiver::vertex_index(const std::string& label) const {
  auto it = std::find(vertices_.begin(), vertices_.end(), label);
  require(it != vertices_.end(), ErrorKind::InvalidArgument, "unknown vertex '" + label + "'");
  return static_cast<int>(it - vertices_.begin());
}

int Quiver::arrow_index(const std::string& name) const {
  for (int k = 0; k < num_arrows(); ++k)
    if (arrows_[k].name == name) return k;
  fail(ErrorKind::InvalidArgument, "unknown arrow '" + name + "'");
}

Quiver Quiver::opposite() const {
  std::vector<Arrow> rev;
  for (const auto& a : arrows_) rev.push_back({a.name, a.target, a.source});
  return Quiver(vertices_, rev);
}

bool deglex_less(const Path& a, const Path& b) {
  if (a.word.size() != b.word.size()) return a.word.size() < b.word.size();
  if (a.word != b.word) return a.word < b.word;
  return a.source < b.source;
}

namespace {

bool key_less(const Key& a, const Key& b) {
  if (a.second.size() != b.second.size()) return a.second.size() < b.second.size();
  if (a.second != b.second) return a.second < b.second;
  return a.first < b.first;
}

Key key_of(const Path& p) { return {p.source, p.word}; }

/// Largest term under deglex.
std::optional<Key> leading(const Poly_& x) {
  std::optional<Key> best;
  for (const auto& [k, c] : x)
    if (!c.is_zero() && (!best || key_less(*best, k))) best = k;
  return best;
}

void add_term(Poly_& x, const Key& k, const Scalar& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = x.try_emplace(k, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) x.erase(it);
  }
}

std::vector<int> concat(const std::vector<int>& a, const std::vector<int>& b) {
  std::vector<int> r = a;
  r.insert(r.end(), b.begin(), b.end());
  return r;
}

}  // namespace

Path parse_path(const Quiver& q, const std::vector<std::string>& arrow_names) {
  require(!arrow_names.empty(), ErrorKind::InvalidArgument, "empty path needs an explicit vertex");
  Path p;
  for (const auto& n : arrow_names) p.word.push_back(q.arrow_index(n));
  p.source = q.arrow(p.word.front()).source;
  p.target = q.arrow(p.word.back()).target;
  for (std::size_t i = 0; i + 1 < p.word.size(); ++i)
    require(q.arrow(p.word[i]).target == q.arrow(p.word[i + 1]).source, ErrorKind::MalformedRelation,
            "arrows do not compose left to right in this word");
  return p;
}

Scalar Element::coeff(int b) const {
  for (const auto& [i, c] : terms)
    if (i == b) return c;
  return Scalar();
}

Element operator+(const Element& a, const Element& b) {
  Element r;
  std::size_t i = 0, j = 0;
  while (i < a.terms.size() || j < b.terms.size()) {
    if (j == b.terms.size() || (i < a.terms.size() && a.terms[i].first < b.terms[j].first)) {
      r.terms.push_back(a.terms[i++]);
    } else if (i == a.terms.size() || b.terms[j].first < a.terms[i].first) {
      r.terms.push_back(b.terms[j++]);
    } else {
      Scalar s = a.terms[i].second + b.terms[j].second;
      if (!s.is_zero()) r.terms.emplace_back(a.terms[i].first, s);
      ++i;
      ++j;
    }
  }
  return r;
}

Element operator*(const Scalar& s, const Element& a) {
  Element r;
  if (s.is_zero()) return r;
  for (const auto& [i, c] : a.terms) r.terms.emplace_back(i, s * c);
  return r;
}

Element operator-(const Element& a, const Element& b) { return a + (Scalar(-1) * b); }

Poly_ Algebra::reduce_map(Poly_ x) const {
  bool changed = true;
  while (changed) {
    changed = false;
    // reduce the largest reducible term first so the loop terminates fast
    std::vector<Key> keys;
    for (const auto& [k, c] : x) keys.push_back(k);
    std::sort(keys.begin(), keys.end(), [](const Key& a, const Key& b) { return key_less(b, a); });
    for (const auto& k : keys) {
      const auto& w = k.second;
      for (const auto& rule : rules_) {
        const auto& lw = rule.lead.word;
        if (lw.size() > w.size()) continue;
        auto it = std::search(w.begin(), w.end(), lw.begin(), lw.end());
        if (it == w.end()) continue;
        std::size_t pos = static_cast<std::size_t>(it - w.begin());
        std::vector<int> u(w.begin(), w.begin() + pos), v(w.begin() + pos + lw.size(), w.end());
        Scalar c = x.at(k);
        x.erase(k);
        for (const auto& t : rule.tail) {
          std::vector<int> nw = concat(concat(u, t.path.word), v);
          int src = u.empty() ? t.path.source : k.first;
          add_term(x, {src, nw}, c * t.coeff);
        }
        changed = true;
        break;
      }
      if (changed) break;
    }
  }
  return x;
}

Element Algebra::normal_form(const Poly_& x) const {
  Poly_ r = reduce_map(x);
  Element e;
  for (const auto& [k, c] : r) {
    auto it = index_.find(k);
    require(it != index_.end(), ErrorKind::Internal, "normal word outside basis");
    e.terms.emplace_back(it->second, c);
  }
  std::sort(e.terms.begin(), e.terms.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  return e;
}

AlgebraPtr build_algebra(const AlgebraPresentation& pres, int path_cap) {
  const Quiver& q = pres.quiver;
  int max_rel = 0;
  for (const auto& rel : pres.relations) {
    require(!rel.empty(), ErrorKind::MalformedRelation, "empty relation");
    const Path& p0 = rel.front().path;
    for (const auto& t : rel) {
      require(t.path.length() >= 2, ErrorKind::MalformedRelation, "relation term of length < 2");
      require(t.path.source == p0.source && t.path.target == p0.target, ErrorKind::MalformedRelation,
              "relation mixes non-parallel paths");
      for (std::size_t i = 0; i + 1 < t.path.word.size(); ++i)
        require(q.arrow(t.path.word[i]).target == q.arrow(t.path.word[i + 1]).source,
                ErrorKind::MalformedRelation, "relation word does not compose");
      max_rel = std::max<int>(max_rel, static_cast<int>(t.path.length()));
    }
  }
  require(path_cap >= max_rel, ErrorKind::InvalidArgument, "path cap below longest relation");

  std::shared_ptr<Algebra> alg(new Algebra());
  alg->pres_ = pres;
  alg->path_cap_ = path_cap;

  auto to_rule = [&](const Poly_& g) -> std::optional<Algebra::Rule> {
    auto lead = leading(g);
    if (!lead) return std::nullopt;
    require(lead->second.size() >= 2, ErrorKind::MalformedRelation, "relations force an arrow into the ideal");
    Scalar inv = g.at(*lead).inverse();
    Algebra::Rule r;
    r.lead.source = lead->first;
    r.lead.word = lead->second;
    r.lead.target = q.arrow(lead->second.back()).target;
    for (const auto& [k, c] : g) {
      if (k == *lead) continue;
      Path p{k.first, k.second.empty() ? k.first : q.arrow(k.second.back()).target, k.second};
      r.tail.push_back({-(c * inv), p});
    }
    return r;
  };

  // Buchberger completion on overlaps, truncated at the cap.
  for (const auto& rel : pres.relations) {
    Poly_ g;
    for (const auto& t : rel) add_term(g, key_of(t.path), t.coeff);
    Poly_ red = alg->reduce_map(g);
    if (auto r = to_rule(red)) alg->rules_.push_back(*r);
  }
  std::deque<std::pair<std::size_t, std::size_t>> pairs;
  for (std::size_t i = 0; i < alg->rules_.size(); ++i)
    for (std::size_t j = 0; j < alg->rules_.size(); ++j) pairs.emplace_back(i, j);
  while (!pairs.empty()) {
    auto [i, j] = pairs.front();
    pairs.pop_front();
    const Algebra::Rule r1 = alg->rules_[i];
    const Algebra::Rule r2 = alg->rules_[j];
    const auto& a = r1.lead.word;
    const auto& b = r2.lead.word;
    for (std::size_t k = 1; k < std::min(a.size(), b.size()) + (i == j ? 0 : 0); ++k) {
      if (!std::equal(a.end() - k, a.end(), b.begin())) continue;
      if (a.size() + b.size() - k > static_cast<std::size_t>(path_cap)) continue;
      std::vector<int> u(a.begin(), a.end() - k), v(b.begin() + k, b.end());
      Poly_ s;
      for (const auto& t : r2.tail)
        add_term(s, {r1.lead.source, concat(u, t.path.word)}, t.coeff);
      for (const auto& t : r1.tail)
        add_term(s, {t.path.source, concat(t.path.word, v)}, -t.coeff);
      Poly_ red = alg->reduce_map(s);
      if (auto r = to_rule(red)) {
        alg->rules_.push_back(*r);
        std::size_t n = alg->rules_.size() - 1;
        for (std::size_t m = 0; m <= n; ++m) {
          pairs.emplace_back(n, m);
          if (m != n) pairs.emplace_back(m, n);
        }
      }
    }
    // inclusions: b strictly inside a makes rule i redundant for reduction but
    // its tail information is already captured by reducing new S-polynomials
  }

  // Normal words level by level.
  const int nv = q.num_vertices();
  auto reducible_suffix = [&](const std::vector<int>& w) {
    for (const auto& r : alg->rules_) {
      const auto& lw = r.lead.word;
      if (lw.size() <= w.size() && std::equal(lw.begin(), lw.end(), w.end() - lw.size())) return true;
    }
    return false;
  };
  std::vector<Path> level;
  for (int v = 0; v < nv; ++v) level.push_back({v, v, {}});
  std::vector<Path> basis;
  int len = 0;
  while (!level.empty()) {
    require(len < path_cap, ErrorKind::PossiblyInfinite,
            "normal paths survive at length " + std::to_string(path_cap));
    basis.insert(basis.end(), level.begin(), level.end());
    std::vector<Path> next;
    for (const auto& p : level)
      for (int k = 0; k < q.num_arrows(); ++k) {
        if (q.arrow(k).source != p.target) continue;
        Path np{p.source, q.arrow(k).target, concat(p.word, {k})};
        if (!reducible_suffix(np.word)) next.push_back(np);
      }
    for (auto& p : next) (void)p;
    level = std::move(next);
    ++len;
  }
  std::sort(basis.begin(), basis.end(), deglex_less);
  alg->basis_ = basis;
  alg->max_length_ = 0;
  alg->blocks_.assign(nv * nv, {});
  alg->pos_in_block_.assign(basis.size(), 0);
  alg->idem_.assign(nv, -1);
  alg->arrow_basis_.assign(q.num_arrows(), -1);
  for (int b = 0; b < static_cast<int>(basis.size()); ++b) {
    const Path& p = basis[b];
    alg->index_[key_of(p)] = b;
    auto& blk = alg->blocks_[p.source * nv + p.target];
    alg->pos_in_block_[b] = static_cast<int>(blk.size());
    blk.push_back(b);
    alg->max_length_ = std::max<int>(alg->max_length_, static_cast<int>(p.length()));
    if (p.word.empty()) alg->idem_[p.source] = b;
    if (p.word.size() == 1) alg->arrow_basis_[p.word[0]] = b;
  }
  for (int k = 0; k < q.num_arrows(); ++k)
    require(alg->arrow_basis_[k] >= 0, ErrorKind::MalformedRelation, "an arrow lies in the relation ideal");

  const int d = alg->dim();
  alg->table_.assign(static_cast<std::size_t>(d) * d, Element{});
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j) {
      const Path& x = basis[i];
      const Path& y = basis[j];
      if (x.target != y.source) continue;
      Poly_ m;
      m[{x.source, concat(x.word, y.word)}] = 1;
      alg->table_[i * d + j] = alg->normal_form(m);
    }
  return alg;
}

Element Algebra::idempotent(int v) const {
  Element e;
  e.terms.emplace_back(idem_.at(v), Scalar::in_field(1, field()));
  return e;
}

Element Algebra::arrow_element(int arrow) const { return basis_element(arrow_basis_.at(arrow)); }

Element Algebra::basis_element(int b) const {
  Element e;
  e.terms.emplace_back(b, Scalar::in_field(1, field()));
  return e;
}

Element Algebra::path_element(const Path& p) const {
  Poly_ m;
  m[key_of(p)] = Scalar::in_field(1, field());
  return normal_form(m);
}

Element Algebra::one() const {
  Element e;
  for (int v = 0; v < num_vertices(); ++v) e.terms.emplace_back(idem_[v], Scalar::in_field(1, field()));
  std::sort(e.terms.begin(), e.terms.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  return e;
}

Element Algebra::multiply(const Element& x, const Element& y) const {
  if (x.is_zero() || y.is_zero()) return {};
  std::map<int, Scalar> acc;
  const int d = dim();
  for (const auto& [i, a] : x.terms)
    for (const auto& [j, b] : y.terms) {
      const Element& p = table_[i * d + j];
      if (p.is_zero()) continue;
      Scalar ab = a * b;
      for (const auto& [k, c] : p.terms) acc[k] += ab * c;
    }
  Element r;
  for (auto& [k, c] : acc)
    if (!c.is_zero()) r.terms.emplace_back(k, c);
  return r;
}

Vec Algebra::dense(const Element& x) const {
  Vec v(dim(), Scalar::in_field(0, field()));
  for (const auto& [i, c] : x.terms) v[i] = c;
  return v;
}

Element Algebra::sparse(const Vec& v) const {
  Element e;
  for (int i = 0; i < static_cast<int>(v.size()); ++i)
    if (!v[i].is_zero()) e.terms.emplace_back(i, v[i]);
  return e;
}

std::string Algebra::path_string(const Path& p) const {
  if (p.word.empty()) return "e" + quiver().vertex(p.source);
  std::string s;
  for (int k : p.word) s += quiver().arrow(k).name;
  return s;
}

std::string Algebra::element_string(const Element& x) const {
  if (x.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [b, c] : x.terms) {
    std::string cs = c.str();
    bool neg = !cs.empty() && cs[0] == '-';
    if (!first) os << (neg ? " - " : " + ");
    else if (neg) os << "-";
    std::string mag = neg ? cs.substr(1) : cs;
    if (mag != "1") os << mag << "*";
    os << path_string(basis_[b]);
    first = false;
  }
  return os.str();
}

bool Algebra::check_confluence() const {
  const int d = dim();
  // associativity of the structure constants
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j)
      for (int k = 0; k < d; ++k) {
        Element l = multiply(basis_product(i, j), basis_element(k));
        Element r = multiply(basis_element(i), basis_product(j, k));
        if (!(l == r)) return false;
      }
  // the relations vanish
  for (const auto& rel : pres_.relations) {
    Poly_ g;
    for (const auto& t : rel) add_term(g, key_of(t.path), t.coeff);
    if (!normal_form(g).is_zero()) return false;
  }
  return true;
}

const NakayamaData& Algebra::nakayama() const {
  std::call_once(nak_once_, [this] { nak_ = std::make_unique<NakayamaData>(compute_nakayama_data(*this)); });
  return *nak_;
}

std::shared_ptr<const Algebra> Algebra::opposite() const {
  std::call_once(op_once_, [this] {
    AlgebraPresentation p;
    p.quiver = quiver().opposite();
    p.field = field();
    for (const auto& rel : pres_.relations) {
      Relation r;
      for (const auto& t : rel) {
        Path rp{t.path.target, t.path.source, std::vector<int>(t.path.word.rbegin(), t.path.word.rend())};
        r.push_back({t.coeff, rp});
      }
      p.relations.push_back(r);
    }
    op_ = build_algebra(p, path_cap_);
  });
  return op_;
}

}  // namespace silt
