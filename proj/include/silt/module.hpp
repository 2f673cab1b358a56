#pragma once

#include <string>
#include <utility>
#include <vector>

#include "silt/amatrix.hpp"

namespace silt {

/// Right A-module as a quiver representation. Column-vector convention: the
/// matrix of an arrow j -> k has shape dims[k] x dims[j] and sends m to m.alpha.
struct Representation {
  AlgebraPtr alg;
  std::vector<int> dims;
  std::vector<Matrix> arrows;

  int total() const;
  int offset(int v) const;
  bool is_zero() const { return total() == 0; }
};

/// Module homomorphism as one matrix per vertex (target dim x source dim).
struct ModuleMap {
  std::vector<Matrix> comps;
};

Representation zero_module(AlgebraPtr a);
Representation projective(AlgebraPtr a, int v);
Representation injective(AlgebraPtr a, int v);
Representation simple(AlgebraPtr a, int v);
Representation projective_sum(AlgebraPtr a, const std::vector<int>& verts);
Representation injective_sum(AlgebraPtr a, const std::vector<int>& verts);
Representation regular(AlgebraPtr a);
Representation dual_regular(AlgebraPtr a);

/// Matrix of x acting M_from -> M_to (only the paths from `from` to `to` contribute).
Matrix act(const Representation& m, const Element& x, int from, int to);
Matrix path_action(const Representation& m, const Path& p);
/// Every relation acts as zero and every shape matches.
bool satisfies_relations(const Representation& m);

ModuleMap identity_map(const Representation& m);
ModuleMap zero_map(const Representation& m, const Representation& n);
ModuleMap compose(const ModuleMap& g, const ModuleMap& f);
ModuleMap add(const ModuleMap& f, const ModuleMap& g);
ModuleMap scale(const Scalar& s, const ModuleMap& f);
bool is_module_map(const Representation& m, const Representation& n, const ModuleMap& f);
bool is_zero(const ModuleMap& f);
/// Block-diagonal matrix of f on the total spaces.
Matrix total_matrix(const Representation& m, const Representation& n, const ModuleMap& f);

std::vector<ModuleMap> hom_modules(const Representation& m, const Representation& n);
int hom_dim(const Representation& m, const Representation& n);

struct DirectSum {
  Representation rep;
  std::vector<ModuleMap> incl, proj;
};
DirectSum direct_sum(const std::vector<Representation>& parts);

/// A submodule together with its inclusion.
struct Sub {
  Representation rep;
  ModuleMap incl;
  std::vector<Matrix> basis;  // column bases per vertex in the ambient module
};
/// A quotient together with its projection.
struct Quot {
  Representation rep;
  ModuleMap proj;
};

/// Submodule on invariant independent column bases (one matrix per vertex).
Sub submodule(const Representation& m, std::vector<Matrix> basis);
/// outer / inner for nested submodules given by column bases.
Representation subquotient(const Representation& m, const std::vector<Matrix>& outer,
                           const std::vector<Matrix>& inner);
/// Left inverse of a matrix with independent columns.
Matrix left_inverse(const Matrix& b);
/// Independent columns spanning the column space.
Matrix column_basis(const Matrix& m);

/// Submodule spanned by the given per-vertex columns (closed under arrows first).
Sub generated_submodule(const Representation& m, const std::vector<std::vector<Vec>>& gens);
Sub kernel(const Representation& m, const Representation& n, const ModuleMap& f);
Sub image(const Representation& m, const Representation& n, const ModuleMap& f);
Quot quotient(const Representation& m, const std::vector<Matrix>& sub_basis);
Quot cokernel(const Representation& m, const Representation& n, const ModuleMap& f);
Sub radical(const Representation& m);
Sub socle(const Representation& m);
std::vector<int> top_dims(const Representation& m);
std::vector<int> socle_dims(const Representation& m);

/// Map from a sum of projectives given by module elements: the generator of
/// the l-th summand P_{verts[l]} goes to gens[l] in m at that vertex.
ModuleMap yoneda_map(const Representation& m, const std::vector<int>& verts, const std::vector<Vec>& gens);
/// Module map between sums of projectives induced by an A-matrix.
ModuleMap proj_map(AlgebraPtr a, const std::vector<int>& src, const std::vector<int>& tgt, const AMatrix& d);
/// Nakayama functor on an A-matrix: a map between the matching sums of injectives.
ModuleMap nu_proj_map(AlgebraPtr a, const std::vector<int>& src, const std::vector<int>& tgt, const AMatrix& d);

struct ProjectiveCover {
  std::vector<int> verts;
  std::vector<Vec> gens;
  ModuleMap map;  // projective_sum(verts) -> m
};
ProjectiveCover projective_cover(const Representation& m);

/// Minimal presentation p1 -> p0 -> M -> 0; d has rows p0 and columns p1.
struct Presentation {
  std::vector<int> p1, p0;
  AMatrix d;
};
Presentation projective_presentation(const Representation& m);

/// Minimal projective resolution terms and differentials up to `steps` maps.
struct Resolution {
  std::vector<std::vector<int>> terms;  // terms[0] = P0, terms[1] = P1, ...
  std::vector<AMatrix> maps;            // maps[k]: terms[k+1] -> terms[k]
};
Resolution projective_resolution(const Representation& m, int steps);

/// Decomposition into indecomposables with multiplicities, canonically ordered.
std::vector<std::pair<Representation, int>> decompose(const Representation& m);
bool is_indecomposable(const Representation& m);
bool is_isomorphic(const Representation& m, const Representation& n);
bool is_projective(const Representation& m);
bool is_injective(const Representation& m);

/// Duality D into modules over `target` (the opposite algebra by default).
Representation dual(const Representation& m, AlgebraPtr target = nullptr);
Representation nu_module(const Representation& m);
Representation nu_inverse_module(const Representation& m);
Representation tau(const Representation& m);
Representation tau_inverse(const Representation& m);
int ext1_dim(const Representation& m, const Representation& n);
/// Middle term of the almost split sequence ending in an indecomposable
/// nonprojective module.
Representation ar_middle(const Representation& n);

/// Canonical order key: dimension vector, then Loewy layers.
bool module_less(const Representation& a, const Representation& b);
/// Complete list of indecomposables (canonically ordered) or CapExceeded.
std::vector<Representation> list_indecomposables(AlgebraPtr a, int cap = 200);

/// Loewy layers top to socle, e.g. "(3/1)"; layers with several simples join labels with spaces.
std::string loewy_string(const Representation& m);

}  // namespace silt
