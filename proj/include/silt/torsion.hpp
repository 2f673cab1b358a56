#pragma once

#include <vector>

#include "silt/silting.hpp"

namespace silt {

/// The torsion class C = perp(M) = {X : Hom(X, M) = 0} on a representation-finite algebra.
struct TorsionClass {
  AlgebraPtr alg;
  Representation cogenerator;
  std::vector<Representation> all;              // every indecomposable A-module
  std::vector<Representation> indecomposables;  // those in C
  std::vector<Representation> ext_projectives;
  std::vector<Representation> ext_injectives;
  std::vector<Element> annihilator;  // basis of ann C
  bool covariantly_finite = false;

  bool contains(const Representation& x) const;
  /// Y lies in C-perp: Hom(C, Y) = 0.
  bool in_perp(const Representation& y) const;
};

TorsionClass perp_class(const Representation& m, int cap = 200);

/// Largest submodule of x lying in C.
Sub torsion_part(const TorsionClass& c, const Representation& x);

/// Ext-projectives, Ext-injectives, annihilator and covariant finiteness (filled in place).
void class_data(TorsionClass& c);

/// Indecomposable injectives I_v lying in C-perp (as vertices v).
std::vector<int> perp_injective_vertices(const TorsionClass& c);
/// nu X lies in C for every indecomposable X in C.
bool nu_stable(const TorsionClass& c);

/// T_C: presentations of the Ext-projectives in degrees 0, 1 plus nu^{-1} of the injectives in C-perp.
SiltingRecord torsion_silting(const TorsionClass& c);

/// (P(eA(1-e)A) -> eA) in degrees 0, 1 plus (1-e)A in degree 0; e given by vertices.
SiltingRecord okuyama_rickard(AlgebraPtr a, const std::vector<int>& e);
/// The module nu((1-e)A), i.e. the sum of injectives I_v for v outside e.
Representation okuyama_rickard_cogenerator(AlgebraPtr a, const std::vector<int>& e);

struct Reduction {
  SiltingRecord result;
  int length = 0;  // minimal l with A[-l] >= P >= A
  TorsionClass torsion;
  bool tilting_expected = false;  // A self-injective and add P = add nu P
};
/// Two-term silting T with A[-1] >= T >= A and T[-l+1] >= P >= T.
Reduction two_term_reduce(const SiltingRecord& p);

}  // namespace silt
