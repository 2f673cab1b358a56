#pragma once

#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "silt/matrix.hpp"

namespace silt {

struct Arrow {
  std::string name;
  int source = 0;
  int target = 0;
};

/// Finite quiver with ordered vertices and arrows.
class Quiver {
 public:
  Quiver() = default;
  Quiver(std::vector<std::string> vertices, std::vector<Arrow> arrows);

  /// Convenience: arrows given as (name, source label, target label).
  static Quiver make(std::vector<std::string> vertices,
                     const std::vector<std::tuple<std::string, std::string, std::string>>& arrows);

  int num_vertices() const { return static_cast<int>(vertices_.size()); }
  int num_arrows() const { return static_cast<int>(arrows_.size()); }
  const std::vector<std::string>& vertices() const { return vertices_; }
  const std::vector<Arrow>& arrows() const { return arrows_; }
  const Arrow& arrow(int k) const { return arrows_.at(k); }
  const std::string& vertex(int v) const { return vertices_.at(v); }
  int vertex_index(const std::string& label) const;
  int arrow_index(const std::string& name) const;
  /// Quiver with every arrow reversed (same names).
  Quiver opposite() const;

 private:
  std::vector<std::string> vertices_;
  std::vector<Arrow> arrows_;
};

/// A path: a vertex plus a (possibly empty) left-to-right arrow word.
/// For an empty word source == target is the trivial path e_v.
struct Path {
  int source = 0;
  int target = 0;
  std::vector<int> word;

  std::size_t length() const { return word.size(); }
  friend bool operator==(const Path&, const Path&) = default;
};

/// Degree-lex order: length first, then arrow indices, then vertex.
bool deglex_less(const Path& a, const Path& b);

struct PathTerm {
  Scalar coeff;
  Path path;
};
using Relation = std::vector<PathTerm>;

struct AlgebraPresentation {
  Quiver quiver;
  std::vector<Relation> relations;
  Field field;
};

/// Element of A in basis coordinates, sparse and sorted by basis index.
struct Element {
  std::vector<std::pair<int, Scalar>> terms;

  bool is_zero() const { return terms.empty(); }
  Scalar coeff(int b) const;
  friend bool operator==(const Element&, const Element&) = default;
};

Element operator+(const Element& a, const Element& b);
Element operator-(const Element& a, const Element& b);
Element operator*(const Scalar& s, const Element& a);

/// Structure recovered by the Nakayama analysis of A.
struct NakayamaData {
  bool self_injective = false;
  /// symmetric: true/false, or nullopt when no nondegenerate symmetric form
  /// was found but the weakly-symmetric necessary condition holds.
  std::optional<bool> symmetric;
  /// rho[i] = j with nu(P_i) = P_j; empty unless self-injective.
  std::vector<int> permutation;
  /// Symmetric associative form (coordinates on the basis) when found.
  Vec symmetric_form;
  /// transport[i][b]: for self-injective A, the matrix of the isomorphism
  /// P_{rho(i)} -> D(A e_i) at each vertex; used to move maps through nu.
  std::vector<std::vector<Matrix>> transport;
};

/// Finite-dimensional basic algebra kQ/I with a normal-word basis.
///
/// Convention: paths compose left to right, a path p from i to j satisfies
/// p = e_i p e_j, and Hom(e_i A, e_j A) is identified with e_j A e_i acting by
/// left multiplication.
class Algebra : public std::enable_shared_from_this<Algebra> {
 public:
  const AlgebraPresentation& presentation() const { return pres_; }
  const Quiver& quiver() const { return pres_.quiver; }
  const Field& field() const { return pres_.field; }
  int num_vertices() const { return quiver().num_vertices(); }
  int dim() const { return static_cast<int>(basis_.size()); }

  const std::vector<Path>& basis() const { return basis_; }
  const Path& basis_path(int b) const { return basis_.at(b); }
  /// Basis indices of e_a A e_b, i.e. paths from a to b, in basis order.
  const std::vector<int>& block(int a, int b) const { return blocks_[a * num_vertices() + b]; }
  /// Position of basis element b inside its block.
  int position_in_block(int b) const { return pos_in_block_.at(b); }
  int idempotent_index(int v) const { return idem_.at(v); }
  int arrow_basis_index(int arrow) const { return arrow_basis_.at(arrow); }
  int loewy_bound() const { return max_length_ + 1; }

  Element idempotent(int v) const;
  Element arrow_element(int arrow) const;
  Element basis_element(int b) const;
  /// Element denoted by a word starting at vertex `source` (normal form).
  Element path_element(const Path& p) const;
  Element multiply(const Element& x, const Element& y) const;
  const Element& basis_product(int i, int j) const { return table_[i * dim() + j]; }
  Element one() const;

  /// Coordinates of an element as a dense vector of length dim().
  Vec dense(const Element& x) const;
  Element sparse(const Vec& v) const;

  std::string path_string(const Path& p) const;
  std::string element_string(const Element& x) const;

  /// Cached Nakayama analysis (computed on first use).
  const NakayamaData& nakayama() const;
  /// Opposite algebra kQ^op/I^op; built on first use.
  std::shared_ptr<const Algebra> opposite() const;

  /// Rewriting confluence: every word reduces to a unique normal form.
  bool check_confluence() const;

 private:
  friend std::shared_ptr<const Algebra> build_algebra(const AlgebraPresentation&, int);
  Algebra() = default;

  struct Rule {
    Path lead;
    std::vector<PathTerm> tail;  // lead = sum tail
  };

  std::map<std::pair<int, std::vector<int>>, Scalar> reduce_map(std::map<std::pair<int, std::vector<int>>, Scalar> x) const;
  Element normal_form(const std::map<std::pair<int, std::vector<int>>, Scalar>& x) const;

  AlgebraPresentation pres_;
  int path_cap_ = 30;
  std::vector<Rule> rules_;
  std::vector<Path> basis_;
  std::map<std::pair<int, std::vector<int>>, int> index_;
  std::vector<std::vector<int>> blocks_;
  std::vector<int> pos_in_block_;
  std::vector<int> idem_;
  std::vector<int> arrow_basis_;
  std::vector<Element> table_;
  int max_length_ = 0;

  mutable std::once_flag nak_once_;
  mutable std::unique_ptr<NakayamaData> nak_;
  mutable std::once_flag op_once_;
  mutable std::shared_ptr<const Algebra> op_;
};

using AlgebraPtr = std::shared_ptr<const Algebra>;

/// Builds kQ/I from a presentation with degree-lex rewriting capped at `path_cap`.
/// Throws PossiblyInfinite when normal words survive at the cap and
/// MalformedRelation for non-parallel or too-short relation terms.
AlgebraPtr build_algebra(const AlgebraPresentation& pres, int path_cap = 30);

/// Parses a word of arrow names like "x1x2x3" or "a b" against a quiver.
Path parse_path(const Quiver& q, const std::vector<std::string>& arrow_names);

NakayamaData compute_nakayama_data(const Algebra& a);

}  // namespace silt
