#pragma once

// Hypothesis predicates of a subalgebra extension B in A.

#include <cstdint>

#include "domdim/module.hpp"

namespace domdim {

struct ExtensionPredicates {
  bool projective_over_sub = false;  // _B A projective
  IsoVerdict bimodule_iso;           // A against Hom_B(A, B) over A (x) B^op
  bool frobenius = false;
  bool separable = false;
  bool split = false;
};

/// A as a left module over A (x) B^op: (a (x) b) u = a u b.
ModuleRep bimodule_of(const Extension& ext, const Algebra& env);
/// Hom_B(_B A, _B B) as a left module over A (x) B^op: ((a (x) b) f)(x) = f(x a) b.
ModuleRep dual_bimodule_of(const Extension& ext, const Algebra& env);

ExtensionPredicates extension_predicates(const Extension& ext, std::uint64_t seed = 0);

}  // namespace domdim
