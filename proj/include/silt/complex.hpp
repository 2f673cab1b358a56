#pragma once

#include <optional>
#include <string>
#include <vector>

#include "silt/module.hpp"

namespace silt {

/// Bounded complex of finitely generated projectives, cohomologically graded.
/// terms[k] lists the vertices of the summands e_v A in degree lo + k and
/// diffs[k] maps degree lo + k to lo + k + 1 (rows index the target).
struct ProjComplex {
  AlgebraPtr alg;
  int lo = 0;
  std::vector<std::vector<int>> terms;
  std::vector<AMatrix> diffs;

  bool is_zero() const { return terms.empty(); }
  int hi() const { return lo + static_cast<int>(terms.size()) - 1; }
  /// Vertices in degree d (empty outside the window).
  const std::vector<int>& term(int d) const;
  /// Differential leaving degree d (a correctly shaped zero matrix outside the window).
  AMatrix diff(int d) const;
  int num_summands() const;
};

/// Degree-0 chain map; comps[k] maps source degree lo + k.
struct ChainMap {
  int lo = 0;
  std::vector<AMatrix> comps;
};

ProjComplex zero_complex(AlgebraPtr a);
ProjComplex stalk(AlgebraPtr a, const std::vector<int>& verts, int degree = 0);
ProjComplex regular_complex(AlgebraPtr a, int degree = 0);
/// Two-term complex p1 -> p0 with p1 in degree `lo`.
ProjComplex two_term(AlgebraPtr a, const std::vector<int>& p1, const std::vector<int>& p0, const AMatrix& d,
                     int lo);
/// Minimal presentation of a module with P0 in degree 0 (so H^0 recovers it).
ProjComplex presentation_complex(const Representation& m);
/// Builds a complex from degree-indexed data and drops empty end terms.
ProjComplex make_complex(AlgebraPtr a, int lo, std::vector<std::vector<int>> terms, std::vector<AMatrix> diffs);

bool is_complex(const ProjComplex& x);
ProjComplex shift(const ProjComplex& x, int n);
ProjComplex direct_sum(const std::vector<ProjComplex>& parts);
ProjComplex minimize(const ProjComplex& x);
ProjComplex cone(const ProjComplex& x, const ProjComplex& y, const ChainMap& f);

ChainMap identity_chain(const ProjComplex& x);
ChainMap compose(const Algebra& a, const ChainMap& g, const ChainMap& f);
/// g o f for f: X -> Y and g: Y -> Z, with components over the window of X.
ChainMap compose(const ProjComplex& x, const ProjComplex& y, const ProjComplex& z, const ChainMap& g,
                 const ChainMap& f);
ChainMap add(const ChainMap& f, const ChainMap& g);
ChainMap scale(const Scalar& s, const ChainMap& f);
/// Shifts a map X -> Y to X[n] -> Y[n].
ChainMap shift(const ChainMap& f, int n);
bool is_chain_map(const ProjComplex& x, const ProjComplex& y, const ChainMap& f);
/// Component of f in degree d (zero matrix when absent).
AMatrix component(const ProjComplex& x, const ProjComplex& y, const ChainMap& f, int d);
/// Embedding and projection for summand k of a direct sum.
ChainMap sum_inclusion(const std::vector<ProjComplex>& parts, std::size_t k);
ChainMap sum_projection(const std::vector<ProjComplex>& parts, std::size_t k);

/// Coordinates for degree-0 maps X -> Y: one scalar per basis path of every entry.
class MapLayout {
 public:
  MapLayout(const ProjComplex& x, const ProjComplex& y, int degree_offset = 0);
  int size() const { return size_; }
  Vec flatten(const ChainMap& f) const;
  ChainMap unflatten(const Vec& v) const;

 private:
  friend class HomSpace;
  const Algebra* alg_;
  int lo_ = 0, hi_ = -1, off_deg_ = 0;
  std::vector<std::vector<int>> src_, tgt_;
  std::vector<std::vector<int>> base_;  // base_[k][r * cols + c]
  int size_ = 0;
};

/// Hom_K(X, Y[i]): chain maps modulo null-homotopic ones.
class HomSpace {
 public:
  HomSpace(const ProjComplex& x, const ProjComplex& y, int i, bool want_basis = true);

  int dim() const { return dim_; }
  const ProjComplex& source() const { return x_; }
  /// Target complex Y[i].
  const ProjComplex& target() const { return y_; }
  const std::vector<ChainMap>& basis() const { return basis_; }
  /// Coordinates of a chain map X -> Y[i] modulo homotopy.
  Vec coords(const ChainMap& f) const;
  ChainMap combine(const Vec& c) const;
  bool is_null_homotopic(const ChainMap& f) const;
  /// Strict chain maps (before quotienting by homotopy).
  const std::vector<ChainMap>& cycles() const { return cycles_; }

 private:
  ProjComplex x_, y_;
  MapLayout layout_;
  int dim_ = 0;
  std::vector<ChainMap> basis_, cycles_;
  Matrix coord_rows_;
  std::vector<Vec> basis_vecs_;
};

/// dim Hom_K(X, Y[i]), cached.
int hom_dim(const ProjComplex& x, const ProjComplex& y, int i);
/// Strict chain maps X -> Y (no homotopy quotient).
std::vector<ChainMap> chain_maps(const ProjComplex& x, const ProjComplex& y);

/// Scalar matrix of the top of a chain endomorphism of a minimal complex
/// (block diagonal over degrees); multiplicative.
Matrix top_matrix(const ProjComplex& x, const ChainMap& f);

/// Summands of the minimized complex, each indecomposable, canonically ordered.
std::vector<ProjComplex> decompose_complex(const ProjComplex& x);
bool is_indecomposable(const ProjComplex& x);
bool iso_indecomposables(const ProjComplex& x, const ProjComplex& y);
bool iso_complexes(const ProjComplex& x, const ProjComplex& y);
/// Distinct indecomposable summands (one per isomorphism class).
std::vector<ProjComplex> basic_summands(const ProjComplex& x);
ProjComplex basic_part(const ProjComplex& x);

/// X >= Y: Hom(X, Y[i]) = 0 for every i > 0.
bool compare_order(const ProjComplex& x, const ProjComplex& y);
/// Length: number of degrees between the outermost nonzero terms of the minimal form.
int complex_length(const ProjComplex& x);

/// Canonical text of the exact data (used for cache keys and ordering).
std::string complex_key(const ProjComplex& x);
/// Isomorphism-invariant fingerprint.
std::string fingerprint(const ProjComplex& x);
/// Canonical order: window, vertex multisets, fingerprint.
bool complex_less(const ProjComplex& x, const ProjComplex& y);
/// Column layout with "(kth)" headers and one row per summand.
std::string pretty(const ProjComplex& x);

/// Complex of modules with module maps (used for injective complexes).
struct ModuleComplex {
  AlgebraPtr alg;
  int lo = 0;
  std::vector<Representation> terms;
  std::vector<ModuleMap> diffs;
  int hi() const { return lo + static_cast<int>(terms.size()) - 1; }
};
ModuleComplex module_complex(const ProjComplex& x);
/// nu X as a complex of injective modules (any algebra).
ModuleComplex nu_module_complex(const ProjComplex& x);
Representation cohomology(const ModuleComplex& x, int i);
Representation cohomology(const ProjComplex& x, int i);
/// dim Hom_K(X, Z[i]) for X a complex of projectives and Z any complex of modules.
int hom_dim_to_modules(const ProjComplex& x, const ModuleComplex& z, int i);

/// nu X as a complex of projectives (self-injective algebras only).
ProjComplex nu_complex(const ProjComplex& x);
ProjComplex nu_inverse_complex(const ProjComplex& x);

}  // namespace silt
