#pragma once

// Finite-dimensional left modules given by one action matrix per algebra basis
// element, and the linear algebra of their morphisms.

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "domdim/algebra.hpp"

namespace domdim {

class ModuleRep {
 public:
  /// Validates the action against the structure constants and the unit.
  static ModuleRep make(const Algebra& over, std::vector<Matrix> action, std::string name = {});
  /// No validation; for modules produced by the engine itself.
  static ModuleRep trusted(const Algebra& over, std::vector<Matrix> action, std::string name = {});

  const Algebra& algebra() const;
  Index dim() const;
  const std::string& name() const;
  ModuleRep renamed(std::string name) const;

  const Matrix& action(Index basis) const;
  Matrix action(const Vector& x) const;
  const std::vector<Matrix>& actions() const;

  /// Basis of the vertex space e_i M (columns).
  const Matrix& vertex_basis(int i) const;
  /// [e_1 M basis | ... | e_k M basis], invertible.
  const Matrix& adapted() const;
  const Matrix& adapted_inverse() const;
  Index vertex_offset(int i) const;
  std::vector<Index> dim_vector() const;

 private:
  struct Data;
  explicit ModuleRep(std::shared_ptr<const Data> d) : d_(std::move(d)) {}
  std::shared_ptr<const Data> d_;
};

/// Failing identity, if any: structure constants or unit.
std::optional<std::string> check_module_axioms(const Algebra& a, const std::vector<Matrix>& action);

struct Morphism {
  ModuleRep source;
  ModuleRep target;
  Matrix map;  // dim(target) x dim(source)
};

bool is_intertwining(const Morphism& f);
Morphism identity(const ModuleRep& m);
Morphism compose(const Morphism& g, const Morphism& f);  // g after f

/// Basis of Hom_A(m, n), deterministic order.
std::vector<Morphism> hom_space(const ModuleRep& m, const ModuleRep& n);
Index hom_dim(const ModuleRep& m, const ModuleRep& n);

/// Submodule spanned by the columns of `basis` (which must be A-stable).
struct Submodule {
  ModuleRep module;
  Morphism inclusion;
};
Submodule submodule(const ModuleRep& m, const Matrix& basis, std::string name = {});

struct Quotient {
  ModuleRep module;
  Morphism projection;
};
Quotient quotient(const ModuleRep& m, const Matrix& sub_basis, std::string name = {});

Submodule kernel(const Morphism& f);
Submodule image(const Morphism& f);
Quotient cokernel(const Morphism& f);

ModuleRep zero_module(const Algebra& a);

struct DirectSum {
  ModuleRep module;
  std::vector<ModuleRep> summands;
  std::vector<Matrix> inclusions;
  std::vector<Matrix> projections;
};
DirectSum direct_sum(const Algebra& a, const std::vector<ModuleRep>& parts, std::string name = {});

/// Module over opposite(algebra) with transposed action; `op` may be supplied to
/// keep a shared opposite algebra.
ModuleRep dualize(const ModuleRep& m);
ModuleRep dualize(const ModuleRep& m, const Algebra& op);
Morphism dualize(const Morphism& f, const ModuleRep& dual_source, const ModuleRep& dual_target);

/// Restriction of scalars along an extension B -> A.
ModuleRep restrict_to(const ModuleRep& m, const Extension& ext);

std::string vertex_name(const Algebra& a, int i);

ModuleRep regular_module(const Algebra& a);
/// D(A) with left action (a.f)(u) = f(u a).
ModuleRep dual_regular_module(const Algebra& a);
ModuleRep projective(const Algebra& a, int i);
ModuleRep injective(const Algebra& a, int i);
ModuleRep simple(const Algebra& a, int i);
/// Elements spanning A e_i (projective) and e_i A (injective) as used for P(i), I(i).
Matrix projective_basis(const Algebra& a, int i);
Matrix injective_basis(const Algebra& a, int i);

struct StandardModules {
  std::vector<ModuleRep> simples, projectives, injectives;
  ModuleRep regular;
  ModuleRep dual_regular;
};
StandardModules standard_modules(const Algebra& a);

Submodule rad_module(const ModuleRep& m);
Quotient top(const ModuleRep& m);
Submodule soc(const ModuleRep& m);
/// Multiplicity of S(i) in top(m) / soc(m), per vertex.
std::vector<Index> top_multiplicities(const ModuleRep& m);
std::vector<Index> soc_multiplicities(const ModuleRep& m);

struct Cover {
  Morphism map;            // projective -> m (surjective) or m -> injective (injective)
  std::vector<int> terms;  // vertex of each indecomposable summand, in order
};
Cover projective_cover(const ModuleRep& m);
Cover injective_envelope(const ModuleRep& m);
ModuleRep projective_sum(const Algebra& a, const std::vector<int>& vertices);
ModuleRep injective_sum(const Algebra& a, const std::vector<int>& vertices);

/// Whether End(p) is local, via the trace form of p (needs field > dim p).
bool has_local_endomorphisms(const ModuleRep& p);
/// Whether p (with local endomorphism ring) is isomorphic to a direct summand of m.
/// Throws InputError when End(p) is not local.
bool summand_test(const ModuleRep& p, const ModuleRep& m);

struct IsoVerdict {
  bool isomorphic = false;
  bool certain = false;           // negative verdicts decided by hom dimensions are certain
  int trials = 0;
  double false_negative_bound = 0;
  std::optional<Matrix> witness;
};
constexpr int kIsoTrials = 24;
IsoVerdict is_isomorphic(const ModuleRep& m, const ModuleRep& n, std::uint64_t seed = 0, int trials = kIsoTrials);

/// x (x)_A y for x a right A-module (a module over opposite(A)) and y a left A-module.
/// When `outer` is given (a module over some B on the same space as x, commuting with
/// the right A-action) the result is a B-module; otherwise it is a k-module.
struct TensorProduct {
  ModuleRep module;
  Matrix project;  // from kron(x, y) coordinates onto the result; empty unless requested
};
TensorProduct tensor_over(const ModuleRep& x, const ModuleRep& y, const std::optional<ModuleRep>& outer = std::nullopt,
                          bool want_projection = false);

}  // namespace domdim
