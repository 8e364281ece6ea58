#include "domdim/extension.hpp"

namespace domdim {

namespace {

std::size_t sz(Index i) { return static_cast<std::size_t>(i); }

Matrix vec_of(const Matrix& m) { return Eigen::Map<const Matrix>(m.data(), m.size(), 1); }

Matrix hcat(const PrimeField& f, const std::vector<Matrix>& parts, Index rows) {
  Index cols = 0;
  for (const auto& p : parts) cols += p.cols();
  Matrix out(rows, cols);
  Index off = 0;
  for (const auto& p : parts) {
    out.middleCols(off, p.cols()) = p;
    off += p.cols();
  }
  return f.reduce(out);
}

Matrix vcat(const PrimeField& f, const std::vector<Matrix>& parts, Index cols) {
  Index rows = 0;
  for (const auto& p : parts) rows += p.rows();
  Matrix out(rows, cols);
  Index off = 0;
  for (const auto& p : parts) {
    out.middleRows(off, p.rows()) = p;
    off += p.rows();
  }
  return f.reduce(out);
}

Algebra bimodule_algebra(const Extension& ext) { return tensor_product(ext.amb, opposite(ext.sub)); }

// Exists e in A (x)_B A with a e = e a for all a and mu(e) = 1.
bool separable(const Extension& ext) {
  const Algebra& a = ext.amb;
  const PrimeField& f = a.field();
  const Index n = a.dim(), nn = n * n;
  const Matrix id = Matrix::Identity(n, n);
  std::vector<Matrix> rel;
  for (Index b = 0; b < ext.sub.dim(); ++b) {
    const Vector eb = ext.embed.col(b);
    rel.push_back(kronecker(f, a.right_mult(eb), id) - kronecker(f, id, a.left_mult(eb)));
  }
  const QuotientMap q = quotient_map(f, hcat(f, rel, nn), nn);
  std::vector<Matrix> eqs;
  for (Index x = 0; x < n; ++x)
    eqs.push_back(multiply(f, q.project, Matrix(f.reduce(kronecker(f, a.left_mult(x), id) - kronecker(f, id, a.right_mult(x))))));
  Matrix mu(n, nn);
  for (Index i = 0; i < n; ++i)
    for (Index j = 0; j < n; ++j) mu.col(i * n + j) = a.left_mult(i).col(j);
  eqs.push_back(mu);
  const Matrix sys = vcat(f, eqs, nn);
  Matrix rhs = Matrix::Zero(sys.rows(), 1);
  rhs.bottomRows(n) = a.unit();
  return solve(f, sys, rhs).has_value();
}

// Exists a B-bimodule map rho : A -> B with rho o embed = id.
bool split(const Extension& ext) {
  const Algebra &a = ext.amb, &b = ext.sub;
  const PrimeField& f = a.field();
  const Index n = a.dim(), m = b.dim();
  const Matrix ia = Matrix::Identity(n, n), ib = Matrix::Identity(m, m);
  std::vector<Matrix> eqs;
  for (Index x = 0; x < m; ++x) {
    const Vector ex = ext.embed.col(x);
    eqs.push_back(kronecker(f, Matrix(a.left_mult(ex).transpose()), ib) - kronecker(f, ia, b.left_mult(x)));
    eqs.push_back(kronecker(f, Matrix(a.right_mult(ex).transpose()), ib) - kronecker(f, ia, b.right_mult(x)));
  }
  eqs.push_back(kronecker(f, Matrix(ext.embed.transpose()), ib));
  const Matrix sys = vcat(f, eqs, n * m);
  Matrix rhs = Matrix::Zero(sys.rows(), 1);
  rhs.bottomRows(m * m) = vec_of(ib);
  return solve(f, sys, rhs).has_value();
}

}  // namespace

ModuleRep bimodule_of(const Extension& ext, const Algebra& env) {
  const Algebra& a = ext.amb;
  const PrimeField& f = a.field();
  const Index m = ext.sub.dim();
  std::vector<Matrix> act;
  for (Index i = 0; i < a.dim(); ++i)
    for (Index j = 0; j < m; ++j) act.push_back(multiply(f, a.left_mult(i), a.right_mult(Vector(ext.embed.col(j)))));
  return ModuleRep::trusted(env, std::move(act), "A");
}

ModuleRep dual_bimodule_of(const Extension& ext, const Algebra& env) {
  const Algebra &a = ext.amb, &b = ext.sub;
  const PrimeField& f = a.field();
  const auto hs = hom_space(restrict_to(regular_module(a), ext), regular_module(b));
  const Index h = static_cast<Index>(hs.size());
  Matrix stacked(b.dim() * a.dim(), h);
  for (Index k = 0; k < h; ++k) stacked.col(k) = vec_of(hs[sz(k)].map);
  const Matrix li = h ? left_inverse(f, stacked) : Matrix(0, stacked.rows());
  std::vector<Matrix> act;
  for (Index i = 0; i < a.dim(); ++i)
    for (Index j = 0; j < b.dim(); ++j) {
      Matrix rho(h, h);
      for (Index k = 0; k < h; ++k)
        rho.col(k) = multiply(f, li, vec_of(multiply(f, b.right_mult(j), multiply(f, hs[sz(k)].map, a.right_mult(i)))));
      act.push_back(std::move(rho));
    }
  return ModuleRep::trusted(env, std::move(act), "Hom_B(A,B)");
}

ExtensionPredicates extension_predicates(const Extension& ext, std::uint64_t seed) {
  check_extension(ext);
  ExtensionPredicates out;
  const ModuleRep over_b = restrict_to(regular_module(ext.amb), ext);
  out.projective_over_sub = projective_cover(over_b).map.source.dim() == over_b.dim();
  const Algebra env = bimodule_algebra(ext);
  out.bimodule_iso = is_isomorphic(bimodule_of(ext, env), dual_bimodule_of(ext, env), seed);
  out.frobenius = out.projective_over_sub && out.bimodule_iso.isomorphic;
  out.separable = separable(ext);
  out.split = split(ext);
  return out;
}

}  // namespace domdim
