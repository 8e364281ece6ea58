#pragma once

// Checks of homological statements on concrete algebras. Every statement
// quantified over all n >= 1 is checked for 1 <= n <= cutoff, and the report
// says so. Verdicts compare dimensions only, never randomized isomorphisms.

#include <string>
#include <utility>
#include <vector>

#include "domdim/extension.hpp"
#include "domdim/homology.hpp"

namespace domdim {

enum class Verdict { pass, fail, inconclusive, skipped };
std::string to_string(Verdict v);

struct CheckReport {
  std::string check_id;
  std::vector<std::string> inputs;  // content hashes
  Verdict verdict = Verdict::pass;
  std::vector<std::pair<std::string, std::string>> witness;  // ordered key = value lines
  int cutoff = 0;

  void add(std::string key, std::string value) { witness.emplace_back(std::move(key), std::move(value)); }
  /// Value for key, or empty.
  std::string get(const std::string& key) const;
};

/// "1,0,0" style rendering of a dimension list.
std::string join(const std::vector<Index>& v);

struct BarBudget {
  Index max_cochain_dim = 4096;
};

/// Ext^i(m, n), 0 <= i <= cutoff, from the normalized bar resolution relative to the
/// vertex subalgebra E = k^n: terms A (x)_E rad^{(x)_E i} (x)_E m. Independent of the
/// minimal resolutions; throws UnsupportedError when a cochain space exceeds the budget.
ExtTable bar_ext_oracle(const ModuleRep& m, const ModuleRep& n, int cutoff, const BarBudget& budget = {});

/// bar_ext_oracle against ext_dims over every pair of `modules`, degrees 0..cutoff.
CheckReport bar_oracle_sweep(const Algebra& a, const std::vector<ModuleRep>& modules, int cutoff,
                             const BarBudget& budget = {});

/// Dominant dimension of End(M) against the first degree with Ext^i(M, M) != 0.
/// Throws InputError unless M is a generator-cogenerator.
CheckReport muller_check(const DirectSum& m, int cutoff);

/// Ext_A^n(D A, A) against Ext^n(nu M, M) for A = End(M), 0 <= n <= cutoff, and the
/// statement-level biconditional at the cutoff.
CheckReport wg_lemma_check(const DirectSum& m, int cutoff);

/// Ext_B^n(B + DB, B + DB), Ext_B^n(DB, B) and Ext_{B^e}^n(B, B (x) B), 1 <= n <= cutoff.
CheckReport remark32_check(const Algebra& b, int cutoff, const BarBudget& budget = {});

/// Convolution of Ext^*(D(-), -) over a tensor product and the min rule for dominant dimension.
CheckReport kunneth_check(const Algebra& a, const Algebra& b, int cutoff, const BarBudget& budget = {});

/// Dominant dimension infinite and Ext^n(D A, A) = 0 for n >= 1. The "outcome" witness
/// is holds-certified, holds-at-cutoff or fails.
CheckReport diamond(const Algebra& a, int cutoff);

/// Flags algebras with the diamond property that are not self-injective as tension
/// specimens (inconclusive); never as counterexamples.
CheckReport nc_evidence_scan(const Algebra& a, int cutoff);

/// Finite shadows of the thick-subcategory lemma on a supplied list of modules.
CheckReport thick_shadow_check(const Algebra& a, const std::vector<ModuleRep>& modules, int cutoff);

/// dm(A^op) = dm(A).
CheckReport opposite_domdim_check(const Algebra& a, int cutoff);

}  // namespace domdim
