#pragma once

#include <random>

#include "domdim/algebra.hpp"
#include "domdim/module.hpp"

namespace fx {

using namespace domdim;

inline PrimeField field() { return PrimeField(); }

// k[x]/(x^n)
inline Algebra truncated(int n, const PrimeField& f = field()) {
  QuiverPresentation q;
  q.vertices = {"1"};
  q.arrows = {{"x", "1", "1"}};
  q.relations = {{PathTerm{1, std::vector<std::string>(static_cast<std::size_t>(n), "x")}}};
  q.nilpotency_bound = n - 1;
  return build_from_quiver(q, f, "k" + std::to_string(n));
}

// linear quiver 1 -> 2 -> ... -> n, no relations
inline Algebra linear(int n, const PrimeField& f = field()) {
  QuiverPresentation q;
  const char* names = "abcdefgh";
  for (int v = 1; v <= n; ++v) q.vertices.push_back(std::to_string(v));
  for (int v = 1; v < n; ++v) q.arrows.push_back({std::string(1, names[v - 1]), std::to_string(v), std::to_string(v + 1)});
  q.nilpotency_bound = n - 1;
  return build_from_quiver(q, f, "a" + std::to_string(n));
}

// alpha: 1 -> 2, beta: 2 -> 1, beta then alpha = 0
inline Algebra aus(const PrimeField& f = field()) {
  QuiverPresentation q;
  q.vertices = {"1", "2"};
  q.arrows = {{"alpha", "1", "2"}, {"beta", "2", "1"}};
  q.relations = {{PathTerm{1, {"beta", "alpha"}}}};
  q.nilpotency_bound = 2;
  return build_from_quiver(q, f, "aus");
}

inline Algebra k(const PrimeField& f = field()) { return ground_algebra(f); }

inline std::vector<Algebra> corpus_algebras() {
  std::vector<Algebra> out{k(), truncated(2), truncated(3), truncated(4), linear(2), linear(3), aus()};
  out.push_back(tensor_product(truncated(2), truncated(2)));
  out.push_back(tensor_product(linear(2), truncated(2)));
  return out;
}

// Span of A v inside m.
inline Matrix cyclic_span(const ModuleRep& m, const Vector& v) {
  Matrix span(m.dim(), m.algebra().dim());
  for (Index b = 0; b < m.algebra().dim(); ++b) span.col(b) = m.action(b) * v;
  return m.algebra().field().reduce(span);
}

// Standard modules plus seeded cyclic submodules of P(i) + P(j) and their quotients.
inline std::vector<ModuleRep> zoo(const Algebra& a, Index max_dim, std::uint64_t seed = 1) {
  const StandardModules sm = standard_modules(a);
  std::vector<ModuleRep> out;
  auto keep = [&](const ModuleRep& m) {
    if (m.dim() > 0 && m.dim() <= max_dim) out.push_back(m);
  };
  for (const auto& m : sm.simples) keep(m);
  for (const auto& m : sm.projectives) keep(m);
  for (const auto& m : sm.injectives) keep(m);
  keep(sm.regular);
  keep(sm.dual_regular);
  std::mt19937_64 rng(seed);
  const auto p = static_cast<std::uint64_t>(a.field().modulus());
  const auto k = static_cast<std::uint64_t>(a.vertex_count());
  for (int trial = 0; trial < 6; ++trial) {
    const auto i = rng() % k, j = rng() % k;
    const ModuleRep pp = direct_sum(a, {sm.projectives[i], sm.projectives[j]}).module;
    Vector v = Vector::Zero(pp.dim());
    for (Index c = 0; c < pp.dim(); ++c)
      if (rng() % 3 == 0) v(c) = static_cast<Scalar>(rng() % p);
    const Submodule sub = submodule(pp, cyclic_span(pp, v));
    keep(sub.module.renamed("sub" + std::to_string(trial)));
    keep(cokernel(sub.inclusion).module.renamed("quo" + std::to_string(trial)));
  }
  return out;
}

}  // namespace fx
