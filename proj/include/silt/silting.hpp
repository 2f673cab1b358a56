#pragma once

#include <string>
#include <vector>

#include "silt/complex.hpp"

namespace silt {

enum class Status { NotPresilting, Presilting, Silting, Tilting };
enum class Direction { Left, Right };
enum class Certificate { None, Generation, Mutation };

const char* to_string(Status s);
const char* to_string(Direction d);
const char* to_string(Certificate c);

struct MutationStep {
  int summand = 0;
  Direction direction = Direction::Left;
  std::string parent;  // fingerprint of the record that was mutated
};

/// A basic object together with what is known about it.
struct SiltingRecord {
  ProjComplex complex;
  Status status = Status::NotPresilting;
  /// Presilting with the right summand count but no generation witness within the cap.
  bool generation_undecided = false;
  Certificate certificate = Certificate::None;
  /// Indecomposable summands in canonical order; complex is their direct sum.
  std::vector<ProjComplex> summands;
  /// Provenance: replaying `steps` from `root` reproduces the record.
  ProjComplex root;
  std::vector<MutationStep> steps;
  /// Index of the summand created by the last mutation (-1 otherwise).
  int new_summand = -1;
  std::string fingerprint;

  bool at_least(Status s) const { return static_cast<int>(status) >= static_cast<int>(s); }
};

struct ClassifyOptions {
  int tower_cap = 48;
  /// Throw GenerationUndecided instead of reporting presilting.
  bool strict = false;
};

bool is_presilting(const ProjComplex& x);
/// Hom(X, X[i]) = 0 for every i != 0.
bool is_pretilting(const ProjComplex& x);
/// K_0 classes of the summands (one row per summand, signed vertex counts).
std::vector<std::vector<long long>> k0_classes(const std::vector<ProjComplex>& summands);
/// |det| == 1 for a square K_0 matrix.
bool k0_unimodular(const std::vector<ProjComplex>& summands);

SiltingRecord classify(const ProjComplex& x, const ClassifyOptions& opt = {});
/// The stalk A[n] as a tilting record.
SiltingRecord regular_record(AlgebraPtr a, int n = 0);
/// Record for a basic silting complex known by construction (summands are recomputed).
SiltingRecord shifted(const SiltingRecord& t, int n);

/// Every indecomposable summand of u is isomorphic to one of `summands`.
bool in_add(const ProjComplex& u, const std::vector<ProjComplex>& summands);

/// Minimal left (X -> M') or right (M' -> X) add M-approximation.
struct Approximation {
  ProjComplex object;             // M'
  ChainMap map;                   // X -> M' (left) or M' -> X (right)
  std::vector<int> multiplicity;  // per basic summand of M
  std::vector<ProjComplex> basis;  // basic summands of M
};
Approximation minimal_approximation(const ProjComplex& x, const ProjComplex& m, Direction side);
Approximation minimal_approximation(const ProjComplex& x, const std::vector<ProjComplex>& summands,
                                    Direction side);

SiltingRecord mutate(const SiltingRecord& t, int k, Direction d);
/// Re-derives a record from its provenance, checking every parent fingerprint.
SiltingRecord replay(const ProjComplex& root, const std::vector<MutationStep>& steps);

/// Step i of the tower: triangle U_{i+1} -> T_i -> U_i -> U_{i+1}[1].
struct TowerStep {
  ProjComplex u;
  ProjComplex t;
  ChainMap f;
  std::vector<int> multiplicity;  // of the summands of the silting record in T_i
};
struct Tower {
  std::vector<TowerStep> steps;  // steps.size() == length + 1
  int length() const { return static_cast<int>(steps.size()) - 1; }
};
Tower resolution_tower(const SiltingRecord& t, const ProjComplex& u, int cap = 64);

SiltingRecord make_closer(const SiltingRecord& t, const ProjComplex& u);
SiltingRecord bongartz_complete(const SiltingRecord& t, const ProjComplex& u);

/// Result of a descent: the left-mutation chain from T and whether it ended at U itself.
struct MutationPath {
  std::string start, end;
  std::vector<MutationStep> steps;
  std::vector<SiltingRecord> records;  // records.front() == T, records.back() final
  /// true: U is silting and equals the last record; false: the last record completes U.
  bool reached = false;
};
MutationPath connect_descend(const SiltingRecord& t, const ProjComplex& u, int cap = 32);

int nu_orbit_order(const SiltingRecord& t, int cap = 16);
bool is_tilting_via_nu(const SiltingRecord& t);

/// Presentation of End(T): vertices are the summands, arrows span J / J^2.
/// An arrow i -> j is a radical map T_j -> T_i, products compose right to left.
AlgebraPresentation end_algebra(const SiltingRecord& t);

}  // namespace silt
