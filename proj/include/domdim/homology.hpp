#pragma once

// Minimal resolutions, Ext, dominant dimension, the Nakayama functor,
// endomorphism algebras and add(M)-approximations.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "domdim/module.hpp"

namespace domdim {

/// A dimension-like invariant computed up to a cutoff.
struct Bounded {
  enum class Kind { exact, at_least, infinite };
  Kind kind = Kind::exact;
  Index value = 0;

  static Bounded exact(Index v) { return {Kind::exact, v}; }
  static Bounded at_least(Index v) { return {Kind::at_least, v}; }
  static Bounded infinite() { return {Kind::infinite, 0}; }
  bool finite() const { return kind == Kind::exact; }
  friend bool operator==(const Bounded& a, const Bounded& b) { return a.kind == b.kind && a.value == b.value; }
  friend bool operator!=(const Bounded& a, const Bounded& b) { return !(a == b); }
};

/// "3", "at-least-6", "infinity-certified".
std::string to_string(const Bounded& b);
/// min with marker arithmetic: exact beats anything larger, markers combine to markers.
Bounded min(const Bounded& a, const Bounded& b);

struct Resolution {
  enum class Kind { projective, injective };
  Kind kind = Kind::projective;
  ModuleRep module;
  std::vector<ModuleRep> terms;
  std::vector<std::vector<int>> term_types;  // vertices of the indecomposable summands
  /// projective: d_0 : P_0 -> M, d_i : P_i -> P_{i-1};
  /// injective:  d_0 : M -> I^0, d_i : I^{i-1} -> I^i.
  std::vector<Morphism> differentials;
  std::vector<ModuleRep> syzygies;  // Omega^i(M) (or cosyzygies), index 0 = M
  bool terminated = false;          // the last syzygy computed is zero
};

/// Terms 0..depth (fewer when the resolution stops).
Resolution minimal_resolution(const ModuleRep& m, Resolution::Kind kind, int depth);

struct ExtTable {
  std::vector<Index> dims;  // Ext^0 .. Ext^cutoff
};

/// Ext^i_A(m, n) for 0 <= i <= cutoff from the minimal projective resolution of m.
ExtTable ext_dims(const ModuleRep& m, const ModuleRep& n, int cutoff);
/// Same, reusing a resolution of depth >= cutoff + 1.
ExtTable ext_dims(const Resolution& res, const ModuleRep& n, int cutoff);

Bounded pd_bounded(const ModuleRep& m, int cutoff);
Bounded id_bounded(const ModuleRep& m, int cutoff);

struct DomDimEvidence {
  Bounded value;
  int cutoff = 0;
  std::vector<std::vector<int>> terms;  // vertices of the injective summands of I^0, I^1, ...
  std::vector<bool> projective;         // whether I^i is projective
};

/// Infinity is certified only when the regular module is injective.
DomDimEvidence dominant_dimension(const Algebra& a, int cutoff);
bool is_self_injective(const Algebra& a);

struct NakayamaResult {
  ModuleRep value;       // D(A) (x)_A m
  ModuleRep dual_route;  // D Hom_A(m, A)
  IsoVerdict agreement;
};
/// Throws InternalError when the two routes disagree.
NakayamaResult nakayama(const ModuleRep& m, std::uint64_t seed = 0);

struct SelfOrthogonality {
  bool holds = true;
  std::optional<int> first_failure;
  ExtTable table;
};
SelfOrthogonality self_orthogonal(const ModuleRep& m, int cutoff);

bool gen_cogen(const ModuleRep& m);

/// End_A(M) with maps written on the right: the product a * b is "a, then b",
/// i.e. the composite b o a. M is then a right module over it and Hom_A(M, X)
/// a left module.
struct EndomorphismAlgebra {
  Algebra algebra;
  DirectSum decomposition;
  std::vector<Matrix> basis;  // endomorphisms of M, one per algebra basis element
  ModuleRep right_module;     // M over opposite(algebra)
};
/// Throws UnsupportedError naming the offending summand pair when End is not basic elementary.
EndomorphismAlgebra endomorphism_algebra(const DirectSum& m, std::string name = {});
/// Hom_A(M, X) as a left End(M)-module.
ModuleRep hom_module(const EndomorphismAlgebra& e, const ModuleRep& x);

struct Approximation {
  Morphism map;                 // source in add(M), target x
  std::vector<Index> multiplicities;  // per summand of the decomposition (one entry when undecomposed)
  bool surjective_on_hom = false;     // Hom(M, source) -> Hom(M, x) onto
};
/// Minimal right add(M)-approximation of x. With a decomposition into pairwise
/// non-isomorphic summands with local endomorphism rings the result is minimal
/// among all add(M)-approximations; without one, M is treated as a single block.
Approximation min_add_approximation(const ModuleRep& m, const ModuleRep& x,
                                    const std::optional<DirectSum>& decomposition = std::nullopt);

}  // namespace domdim
