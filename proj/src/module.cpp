#include "domdim/module.hpp"

#include <cmath>
#include <random>
#include <utility>

namespace domdim {

struct ModuleRep::Data {
  Algebra algebra;
  std::string name;
  std::vector<Matrix> action;
  std::vector<Matrix> vertex_basis;
  std::vector<Index> offsets;
  Matrix adapted;
  Matrix adapted_inverse;
};

namespace {

Matrix combine(const PrimeField& f, const std::vector<Matrix>& mats, const Vector& x, Index rows, Index cols) {
  Matrix out = Matrix::Zero(rows, cols);
  for (std::size_t k = 0; k < mats.size(); ++k)
    if (x(static_cast<Index>(k)) != 0) out += x(static_cast<Index>(k)) * mats[k];
  return f.reduce(out);
}

std::size_t sz(Index i) { return static_cast<std::size_t>(i); }

}  // namespace

std::optional<std::string> check_module_axioms(const Algebra& a, const std::vector<Matrix>& action) {
  const PrimeField& f = a.field();
  const Index n = a.dim();
  if (static_cast<Index>(action.size()) != n) return std::string("action count differs from algebra dimension");
  const Index m = n ? action[0].rows() : 0;
  for (const auto& x : action)
    if (x.rows() != m || x.cols() != m) return std::string("action matrices have inconsistent shapes");
  Matrix stacked(m * m, n);
  for (Index c = 0; c < n; ++c) stacked.col(c) = Eigen::Map<const Vector>(action[sz(c)].data(), m * m);
  for (Index x = 0; x < n; ++x) {
    const Matrix rhs = multiply(f, stacked, a.left_mult(x));
    for (Index y = 0; y < n; ++y) {
      const Matrix lhs = multiply(f, action[sz(x)], action[sz(y)]);
      if (lhs != Eigen::Map<const Matrix>(rhs.col(y).data(), m, m))
        return "action does not respect the product " + a.labels()[sz(x)] + " * " + a.labels()[sz(y)];
    }
  }
  if (combine(f, action, a.unit(), m, m) != Matrix::Identity(m, m)) return std::string("unit does not act as the identity");
  return std::nullopt;
}

ModuleRep ModuleRep::make(const Algebra& over, std::vector<Matrix> action, std::string name) {
  for (auto& x : action) x = over.field().reduce(x);
  if (auto bad = check_module_axioms(over, action)) throw InputError((name.empty() ? "module" : "module " + name) + ": " + *bad);
  return trusted(over, std::move(action), std::move(name));
}

ModuleRep ModuleRep::trusted(const Algebra& over, std::vector<Matrix> action, std::string name) {
  auto d = std::make_shared<Data>(Data{over, std::move(name), std::move(action), {}, {}, Matrix(), Matrix()});
  const Index m = d->action.empty() ? 0 : d->action[0].rows();
  const PrimeField& f = over.field();
  d->adapted.resize(m, m);
  Index off = 0;
  for (const auto& e : over.idempotents()) {
    Matrix b = column_basis(f, combine(f, d->action, e, m, m));
    d->offsets.push_back(off);
    if (off + b.cols() > m) throw InternalError("vertex spaces exceed the module dimension");
    d->adapted.middleCols(off, b.cols()) = b;
    off += b.cols();
    d->vertex_basis.push_back(std::move(b));
  }
  if (off != m) throw InputError("idempotents do not decompose the module");
  d->adapted_inverse = inverse(f, d->adapted);
  return ModuleRep(std::move(d));
}

const Algebra& ModuleRep::algebra() const { return d_->algebra; }
Index ModuleRep::dim() const { return d_->adapted.rows(); }
const std::string& ModuleRep::name() const { return d_->name; }
ModuleRep ModuleRep::renamed(std::string name) const {
  auto d = std::make_shared<Data>(*d_);
  d->name = std::move(name);
  return ModuleRep(std::move(d));
}
const Matrix& ModuleRep::action(Index b) const { return d_->action.at(sz(b)); }
Matrix ModuleRep::action(const Vector& x) const {
  return combine(d_->algebra.field(), d_->action, x, dim(), dim());
}
const std::vector<Matrix>& ModuleRep::actions() const { return d_->action; }
const Matrix& ModuleRep::vertex_basis(int i) const { return d_->vertex_basis.at(static_cast<std::size_t>(i)); }
const Matrix& ModuleRep::adapted() const { return d_->adapted; }
const Matrix& ModuleRep::adapted_inverse() const { return d_->adapted_inverse; }
Index ModuleRep::vertex_offset(int i) const { return d_->offsets.at(static_cast<std::size_t>(i)); }
std::vector<Index> ModuleRep::dim_vector() const {
  std::vector<Index> out;
  for (const auto& b : d_->vertex_basis) out.push_back(b.cols());
  return out;
}

bool is_intertwining(const Morphism& f) {
  const Algebra& a = f.source.algebra();
  if (f.target.algebra() != a) return false;
  if (f.map.rows() != f.target.dim() || f.map.cols() != f.source.dim()) return false;
  const PrimeField& fld = a.field();
  for (Index b = 0; b < a.dim(); ++b)
    if (multiply(fld, f.map, f.source.action(b)) != multiply(fld, f.target.action(b), f.map)) return false;
  return true;
}

Morphism identity(const ModuleRep& m) { return {m, m, Matrix::Identity(m.dim(), m.dim())}; }

Morphism compose(const Morphism& g, const Morphism& f) {
  return {f.source, g.target, multiply(f.source.algebra().field(), g.map, f.map)};
}

namespace {

void require_same_algebra(const ModuleRep& m, const ModuleRep& n) {
  if (m.algebra() != n.algebra()) throw InputError("modules over different algebras");
}

// Nullspace coordinates of the hom equations in adapted, block-diagonal form.
struct HomSystem {
  Matrix solutions;
  std::vector<Index> offsets;  // unknown offset per vertex
};

HomSystem hom_system(const ModuleRep& m, const ModuleRep& n) {
  require_same_algebra(m, n);
  const Algebra& a = m.algebra();
  const PrimeField& f = a.field();
  const int k = a.vertex_count();
  const auto dm = m.dim_vector(), dn = n.dim_vector();
  HomSystem sys;
  Index unknowns = 0;
  for (int i = 0; i < k; ++i) {
    sys.offsets.push_back(unknowns);
    unknowns += dm[sz(i)] * dn[sz(i)];
  }
  const RadicalData& rad = a.radical();
  std::vector<Matrix> blocks;
  Index rows = 0;
  for (Index g : rad.generators) {
    const int s = rad.left[sz(g)], t = rad.right[sz(g)];
    const Index ms = dm[sz(s)], mt = dm[sz(t)], ns = dn[sz(s)], nt = dn[sz(t)];
    if (ns * mt == 0) continue;
    const Vector gv = rad.basis.col(g);
    const Matrix mg = multiply(f, m.adapted_inverse(), multiply(f, m.action(gv), m.adapted()))
                          .block(m.vertex_offset(s), m.vertex_offset(t), ms, mt);
    const Matrix ng = multiply(f, n.adapted_inverse(), multiply(f, n.action(gv), n.adapted()))
                          .block(n.vertex_offset(s), n.vertex_offset(t), ns, nt);
    // f_s * mg - ng * f_t = 0, vectorized column-major
    Matrix eq = Matrix::Zero(ns * mt, unknowns);
    if (ms) eq.middleCols(sys.offsets[sz(s)], ns * ms) += kronecker(f, Matrix(mg.transpose()), Matrix::Identity(ns, ns));
    if (nt) eq.middleCols(sys.offsets[sz(t)], nt * mt) -= kronecker(f, Matrix::Identity(mt, mt), ng);
    blocks.push_back(f.reduce(eq));
    rows += eq.rows();
  }
  Matrix all(rows, unknowns);
  Index r = 0;
  for (const auto& b : blocks) {
    all.middleRows(r, b.rows()) = b;
    r += b.rows();
  }
  sys.solutions = nullspace(f, all);
  return sys;
}

}  // namespace

std::vector<Morphism> hom_space(const ModuleRep& m, const ModuleRep& n) {
  const HomSystem sys = hom_system(m, n);
  const Algebra& a = m.algebra();
  const PrimeField& f = a.field();
  const auto dm = m.dim_vector(), dn = n.dim_vector();
  std::vector<Morphism> out;
  for (Index c = 0; c < sys.solutions.cols(); ++c) {
    Matrix block = Matrix::Zero(n.dim(), m.dim());
    for (int i = 0; i < a.vertex_count(); ++i) {
      const Index mi = dm[sz(i)], ni = dn[sz(i)];
      if (mi * ni == 0) continue;
      block.block(n.vertex_offset(i), m.vertex_offset(i), ni, mi) =
          Eigen::Map<const Matrix>(Vector(sys.solutions.col(c).segment(sys.offsets[sz(i)], mi * ni)).data(), ni, mi);
    }
    out.push_back({m, n, multiply(f, n.adapted(), multiply(f, block, m.adapted_inverse()))});
  }
  return out;
}

Index hom_dim(const ModuleRep& m, const ModuleRep& n) { return hom_system(m, n).solutions.cols(); }

Submodule submodule(const ModuleRep& m, const Matrix& basis, std::string name) {
  const PrimeField& f = m.algebra().field();
  const Matrix b = column_basis(f, basis);
  std::vector<Matrix> act;
  if (b.cols() == 0) {
    for (Index x = 0; x < m.algebra().dim(); ++x) act.push_back(Matrix(0, 0));
  } else {
    const Matrix li = left_inverse(f, b);
    for (const auto& x : m.actions()) act.push_back(multiply(f, li, multiply(f, x, b)));
  }
  ModuleRep s = ModuleRep::trusted(m.algebra(), std::move(act), std::move(name));
  return {s, {s, m, b}};
}

Quotient quotient(const ModuleRep& m, const Matrix& sub_basis, std::string name) {
  const PrimeField& f = m.algebra().field();
  const QuotientMap q = quotient_map(f, sub_basis, m.dim());
  std::vector<Matrix> act;
  for (const auto& x : m.actions()) act.push_back(multiply(f, q.project, multiply(f, x, q.lift)));
  ModuleRep s = ModuleRep::trusted(m.algebra(), std::move(act), std::move(name));
  return {s, {m, s, q.project}};
}

Submodule kernel(const Morphism& f) {
  return submodule(f.source, nullspace(f.source.algebra().field(), f.map));
}

Submodule image(const Morphism& f) {
  return submodule(f.target, column_basis(f.source.algebra().field(), f.map));
}

Quotient cokernel(const Morphism& f) {
  return quotient(f.target, column_basis(f.source.algebra().field(), f.map));
}

ModuleRep zero_module(const Algebra& a) {
  return ModuleRep::trusted(a, std::vector<Matrix>(sz(a.dim()), Matrix(0, 0)), "0");
}

DirectSum direct_sum(const Algebra& a, const std::vector<ModuleRep>& parts, std::string name) {
  Index total = 0;
  for (const auto& p : parts) {
    if (p.algebra() != a) throw InputError("direct sum of modules over different algebras");
    total += p.dim();
  }
  std::vector<Matrix> act(sz(a.dim()), Matrix::Zero(total, total));
  DirectSum out{zero_module(a), parts, {}, {}};
  Index off = 0;
  for (const auto& p : parts) {
    for (Index b = 0; b < a.dim(); ++b) act[sz(b)].block(off, off, p.dim(), p.dim()) = p.action(b);
    Matrix inc = Matrix::Zero(total, p.dim()), proj = Matrix::Zero(p.dim(), total);
    inc.middleRows(off, p.dim()).setIdentity();
    proj.middleCols(off, p.dim()).setIdentity();
    out.inclusions.push_back(std::move(inc));
    out.projections.push_back(std::move(proj));
    off += p.dim();
  }
  if (name.empty())
    for (std::size_t i = 0; i < parts.size(); ++i) name += (i ? "+" : "") + parts[i].name();
  out.module = ModuleRep::trusted(a, std::move(act), std::move(name));
  return out;
}

ModuleRep dualize(const ModuleRep& m) { return dualize(m, opposite(m.algebra())); }

ModuleRep dualize(const ModuleRep& m, const Algebra& op) {
  std::vector<Matrix> act;
  for (const auto& x : m.actions()) act.push_back(x.transpose());
  return ModuleRep::trusted(op, std::move(act), m.name().empty() ? std::string() : "D(" + m.name() + ")");
}

Morphism dualize(const Morphism& f, const ModuleRep& dual_source, const ModuleRep& dual_target) {
  // D(f): D(target) -> D(source)
  return {dual_target, dual_source, f.map.transpose()};
}

ModuleRep restrict_to(const ModuleRep& m, const Extension& ext) {
  std::vector<Matrix> act;
  for (Index b = 0; b < ext.sub.dim(); ++b) act.push_back(m.action(Vector(ext.embed.col(b))));
  return ModuleRep::trusted(ext.sub, std::move(act), m.name());
}

std::string vertex_name(const Algebra& a, int i) {
  if (a.presentation()) return a.presentation()->vertices.at(static_cast<std::size_t>(i));
  return std::to_string(i + 1);
}

ModuleRep regular_module(const Algebra& a) {
  std::vector<Matrix> act;
  for (Index b = 0; b < a.dim(); ++b) act.push_back(a.left_mult(b));
  return ModuleRep::trusted(a, std::move(act), "A");
}

ModuleRep dual_regular_module(const Algebra& a) {
  std::vector<Matrix> act;
  for (Index b = 0; b < a.dim(); ++b) act.push_back(a.right_mult(b).transpose());
  return ModuleRep::trusted(a, std::move(act), "D(A)");
}

namespace {

Matrix typed_basis(const Algebra& a, int i, bool by_right) {
  const RadicalData& rad = a.radical();
  std::vector<Index> cols;
  for (Index c = 0; c < rad.basis.cols(); ++c)
    if ((by_right ? rad.right[sz(c)] : rad.left[sz(c)]) == i) cols.push_back(c);
  Matrix out(a.dim(), 1 + static_cast<Index>(cols.size()));
  out.col(0) = a.idempotents()[static_cast<std::size_t>(i)];
  for (std::size_t k = 0; k < cols.size(); ++k) out.col(static_cast<Index>(k) + 1) = rad.basis.col(cols[k]);
  return out;
}

}  // namespace

Matrix projective_basis(const Algebra& a, int i) { return typed_basis(a, i, true); }
Matrix injective_basis(const Algebra& a, int i) { return typed_basis(a, i, false); }

ModuleRep projective(const Algebra& a, int i) {
  const PrimeField& f = a.field();
  const Matrix b = projective_basis(a, i);
  const Matrix li = left_inverse(f, b);
  std::vector<Matrix> act;
  for (Index x = 0; x < a.dim(); ++x) act.push_back(multiply(f, li, multiply(f, a.left_mult(x), b)));
  return ModuleRep::trusted(a, std::move(act), "P" + vertex_name(a, i));
}

ModuleRep injective(const Algebra& a, int i) {
  const PrimeField& f = a.field();
  const Matrix c = injective_basis(a, i);
  const Matrix li = left_inverse(f, c);
  std::vector<Matrix> act;
  for (Index x = 0; x < a.dim(); ++x) act.push_back(multiply(f, li, multiply(f, a.right_mult(x), c)).transpose());
  return ModuleRep::trusted(a, std::move(act), "I" + vertex_name(a, i));
}

ModuleRep simple(const Algebra& a, int i) {
  const Matrix& inv = a.radical().adapted_inverse;
  std::vector<Matrix> act;
  for (Index x = 0; x < a.dim(); ++x) act.push_back(Matrix::Constant(1, 1, inv(i, x)));
  return ModuleRep::trusted(a, std::move(act), "S" + vertex_name(a, i));
}

StandardModules standard_modules(const Algebra& a) {
  StandardModules s{{}, {}, {}, regular_module(a), dual_regular_module(a)};
  for (int i = 0; i < a.vertex_count(); ++i) {
    s.simples.push_back(simple(a, i));
    s.projectives.push_back(projective(a, i));
    s.injectives.push_back(injective(a, i));
  }
  return s;
}

namespace {

Matrix radical_span(const ModuleRep& m) {
  const Algebra& a = m.algebra();
  const RadicalData& rad = a.radical();
  Matrix all(m.dim(), m.dim() * static_cast<Index>(rad.generators.size()));
  Index c = 0;
  for (Index g : rad.generators) {
    all.middleCols(c, m.dim()) = m.action(Vector(rad.basis.col(g)));
    c += m.dim();
  }
  return column_basis(a.field(), all);
}

Matrix socle_span(const ModuleRep& m) {
  const Algebra& a = m.algebra();
  const RadicalData& rad = a.radical();
  Matrix all(m.dim() * static_cast<Index>(rad.generators.size()), m.dim());
  Index r = 0;
  for (Index g : rad.generators) {
    all.middleRows(r, m.dim()) = m.action(Vector(rad.basis.col(g)));
    r += m.dim();
  }
  return nullspace(a.field(), all);
}

Matrix vertex_part(const ModuleRep& m, int i, const Matrix& span) {
  const Algebra& a = m.algebra();
  return column_basis(a.field(), multiply(a.field(), m.action(a.idempotents()[static_cast<std::size_t>(i)]), span));
}

}  // namespace

Submodule rad_module(const ModuleRep& m) {
  return submodule(m, radical_span(m), m.name().empty() ? std::string() : "rad(" + m.name() + ")");
}

Quotient top(const ModuleRep& m) {
  return quotient(m, radical_span(m), m.name().empty() ? std::string() : "top(" + m.name() + ")");
}

Submodule soc(const ModuleRep& m) {
  return submodule(m, socle_span(m), m.name().empty() ? std::string() : "soc(" + m.name() + ")");
}

std::vector<Index> top_multiplicities(const ModuleRep& m) {
  const Matrix r = radical_span(m);
  std::vector<Index> out;
  for (int i = 0; i < m.algebra().vertex_count(); ++i) out.push_back(m.vertex_basis(i).cols() - vertex_part(m, i, r).cols());
  return out;
}

std::vector<Index> soc_multiplicities(const ModuleRep& m) {
  const Matrix s = socle_span(m);
  std::vector<Index> out;
  for (int i = 0; i < m.algebra().vertex_count(); ++i) out.push_back(vertex_part(m, i, s).cols());
  return out;
}

ModuleRep projective_sum(const Algebra& a, const std::vector<int>& vertices) {
  std::vector<ModuleRep> parts;
  for (int v : vertices) parts.push_back(projective(a, v));
  return direct_sum(a, parts).module;
}

ModuleRep injective_sum(const Algebra& a, const std::vector<int>& vertices) {
  std::vector<ModuleRep> parts;
  for (int v : vertices) parts.push_back(injective(a, v));
  return direct_sum(a, parts).module;
}

Cover projective_cover(const ModuleRep& m) {
  const Algebra& a = m.algebra();
  const PrimeField& f = a.field();
  const Matrix r = radical_span(m);
  std::vector<int> terms;
  std::vector<Vector> gens;
  for (int i = 0; i < a.vertex_count(); ++i) {
    const Matrix& vb = m.vertex_basis(i);
    for (Index c : extending_columns(f, vertex_part(m, i, r), vb)) {
      terms.push_back(i);
      gens.push_back(vb.col(c));
    }
  }
  const ModuleRep p = projective_sum(a, terms);
  Matrix map(m.dim(), p.dim());
  Index col = 0;
  for (std::size_t t = 0; t < terms.size(); ++t) {
    const Matrix b = projective_basis(a, terms[t]);
    for (Index j = 0; j < b.cols(); ++j) map.col(col++) = multiply(f, m.action(Vector(b.col(j))), gens[t]);
  }
  if (rank(f, map) != m.dim()) throw InternalError("projective cover is not surjective");
  return {{p, m, map}, terms};
}

Cover injective_envelope(const ModuleRep& m) {
  const Algebra& a = m.algebra();
  const PrimeField& f = a.field();
  const Matrix s = socle_span(m);
  std::vector<int> terms;
  std::vector<Matrix> rows;
  for (int i = 0; i < a.vertex_count(); ++i) {
    const Matrix si = vertex_part(m, i, s);
    if (si.cols() == 0) continue;
    // functionals on e_i M dual to the socle basis
    const Matrix phi = multiply(f, left_inverse(f, si), m.action(a.idempotents()[static_cast<std::size_t>(i)]));
    const Matrix c = injective_basis(a, i);
    for (Index l = 0; l < phi.rows(); ++l) {
      Matrix block(c.cols(), m.dim());
      for (Index j = 0; j < c.cols(); ++j) block.row(j) = multiply(f, phi.row(l), m.action(Vector(c.col(j))));
      terms.push_back(i);
      rows.push_back(std::move(block));
    }
  }
  const ModuleRep e = injective_sum(a, terms);
  Matrix map(e.dim(), m.dim());
  Index r = 0;
  for (const auto& b : rows) {
    map.middleRows(r, b.rows()) = b;
    r += b.rows();
  }
  if (rank(f, map) != m.dim()) throw InternalError("injective envelope is not injective");
  return {{m, e, map}, terms};
}

namespace {

Matrix vec_columns(const std::vector<Morphism>& maps, bool transpose) {
  if (maps.empty()) return Matrix(0, 0);
  const Index r = maps[0].map.rows(), c = maps[0].map.cols();
  Matrix out(r * c, static_cast<Index>(maps.size()));
  for (std::size_t k = 0; k < maps.size(); ++k) {
    const Matrix x = transpose ? Matrix(maps[k].map.transpose()) : maps[k].map;
    out.col(static_cast<Index>(k)) = Eigen::Map<const Vector>(x.data(), r * c);
  }
  return out;
}

void require_trace_field(const ModuleRep& p) {
  if (p.algebra().field().modulus() <= p.dim())
    throw UnsupportedError("locality test needs p > dim of the module (" + std::to_string(p.dim()) + ")");
}

}  // namespace

bool has_local_endomorphisms(const ModuleRep& p) {
  if (p.dim() == 0) return false;
  require_trace_field(p);
  const auto end = hom_space(p, p);
  const PrimeField& f = p.algebra().field();
  // Gram matrix of (x, y) -> tr(x y); its radical is rad End(p) when p > dim
  const Matrix gram = multiply(f, Matrix(vec_columns(end, true).transpose()), vec_columns(end, false));
  return rank(f, gram) == 1;
}

bool summand_test(const ModuleRep& p, const ModuleRep& m) {
  require_same_algebra(p, m);
  if (!has_local_endomorphisms(p))
    throw InputError("summand test needs a module with local endomorphism ring; decompose " +
                     (p.name().empty() ? std::string("it") : p.name()) + " first");
  const auto there = hom_space(p, m), back = hom_space(m, p);
  if (there.empty() || back.empty()) return false;
  const PrimeField& f = p.algebra().field();
  // entry (k, l) = tr(back_k o there_l)
  const Matrix traces = multiply(f, Matrix(vec_columns(back, true).transpose()), vec_columns(there, false));
  return !is_zero(traces);
}

IsoVerdict is_isomorphic(const ModuleRep& m, const ModuleRep& n, std::uint64_t seed, int trials) {
  require_same_algebra(m, n);
  IsoVerdict v;
  if (m.dim() != n.dim() || m.dim_vector() != n.dim_vector()) {
    v.certain = true;
    return v;
  }
  if (m.dim() == 0) {
    v.isomorphic = v.certain = true;
    v.witness = Matrix(0, 0);
    return v;
  }
  const auto maps = hom_space(m, n);
  const Index back = hom_dim(n, m), end = hom_dim(m, m);
  if (static_cast<Index>(maps.size()) != back || static_cast<Index>(maps.size()) != end) {
    v.certain = true;
    return v;
  }
  const PrimeField& f = m.algebra().field();
  std::mt19937_64 rng(seed);
  for (int t = 0; t < trials; ++t) {
    ++v.trials;
    Matrix x = Matrix::Zero(n.dim(), m.dim());
    for (const auto& g : maps) x = f.reduce(x + static_cast<Scalar>(rng() % static_cast<std::uint64_t>(f.modulus())) * g.map);
    if (rank(f, x) == m.dim()) {
      v.isomorphic = v.certain = true;
      v.witness = x;
      return v;
    }
  }
  v.false_negative_bound = std::pow(static_cast<double>(m.dim()) / static_cast<double>(f.modulus()), trials);
  return v;
}

TensorProduct tensor_over(const ModuleRep& x, const ModuleRep& y, const std::optional<ModuleRep>& outer,
                          bool want_projection) {
  const Algebra& a = y.algebra();
  const Algebra& xa = x.algebra();
  const PrimeField& f = a.field();
  if (xa.field() != f || xa.dim() != a.dim() || xa.vertex_count() != a.vertex_count())
    throw InputError("tensor over A needs a right A-module and a left A-module");
  for (Index b = 0; b < a.dim(); ++b)
    if (xa.left_mult(b) != a.right_mult(b)) throw InputError("tensor over A needs a right A-module and a left A-module");
  if (outer && outer->dim() != x.dim()) throw InputError("outer action on a different space");
  const int k = a.vertex_count();
  const auto dx = x.dim_vector(), dy = y.dim_vector();
  std::vector<Index> base;
  Index total = 0;
  for (int i = 0; i < k; ++i) {
    base.push_back(total);
    total += dx[sz(i)] * dy[sz(i)];
  }
  auto coord = [&](int i, Index p, Index q) { return base[sz(i)] + p * dy[sz(i)] + q; };

  const RadicalData& rad = a.radical();
  std::vector<Vector> rels;
  for (Index g : rad.generators) {
    const int s = rad.left[sz(g)], t = rad.right[sz(g)];
    const Vector gv = rad.basis.col(g);
    // x in X e_s goes to x g in X e_t; y in e_t Y goes to g y in e_s Y
    const Matrix xg = multiply(f, x.adapted_inverse(), multiply(f, x.action(gv), x.adapted()))
                          .block(x.vertex_offset(t), x.vertex_offset(s), dx[sz(t)], dx[sz(s)]);
    const Matrix yg = multiply(f, y.adapted_inverse(), multiply(f, y.action(gv), y.adapted()))
                          .block(y.vertex_offset(s), y.vertex_offset(t), dy[sz(s)], dy[sz(t)]);
    for (Index p = 0; p < dx[sz(s)]; ++p)
      for (Index q = 0; q < dy[sz(t)]; ++q) {
        Vector r = Vector::Zero(total);
        for (Index p2 = 0; p2 < dx[sz(t)]; ++p2)
          if (xg(p2, p)) r(coord(t, p2, q)) = f.add(r(coord(t, p2, q)), xg(p2, p));
        for (Index q2 = 0; q2 < dy[sz(s)]; ++q2)
          if (yg(q2, q)) r(coord(s, p, q2)) = f.sub(r(coord(s, p, q2)), yg(q2, q));
        if (!is_zero(Matrix(r))) rels.push_back(std::move(r));
      }
  }
  Matrix sub(total, static_cast<Index>(rels.size()));
  for (std::size_t c = 0; c < rels.size(); ++c) sub.col(static_cast<Index>(c)) = rels[c];
  const QuotientMap q = quotient_map(f, sub, total);

  std::vector<Matrix> act;
  Algebra over = outer ? outer->algebra() : ground_algebra(f);
  if (outer) {
    for (Index b = 0; b < over.dim(); ++b) {
      const Matrix ob = multiply(f, x.adapted_inverse(), multiply(f, outer->action(b), x.adapted()));
      Matrix big = Matrix::Zero(total, total);
      for (int i = 0; i < k; ++i) {
        const Index ni = dx[sz(i)], mi = dy[sz(i)];
        if (ni * mi == 0) continue;
        const Matrix blk = ob.block(x.vertex_offset(i), x.vertex_offset(i), ni, ni);
        big.block(base[sz(i)], base[sz(i)], ni * mi, ni * mi) = kronecker(f, blk, Matrix::Identity(mi, mi));
      }
      act.push_back(multiply(f, q.project, multiply(f, big, q.lift)));
    }
  } else {
    act.push_back(Matrix::Identity(q.project.rows(), q.project.rows()));
  }
  std::string name;
  if (!x.name().empty() && !y.name().empty()) name = x.name() + "(x)" + y.name();
  TensorProduct out{ModuleRep::trusted(over, std::move(act), std::move(name)), Matrix()};
  if (want_projection) {
    Matrix sel(total, x.dim() * y.dim());
    for (int i = 0; i < k; ++i)
      for (Index p = 0; p < dx[sz(i)]; ++p)
        for (Index r = 0; r < dy[sz(i)]; ++r) {
          const Matrix row = kronecker(f, Matrix(x.adapted_inverse().row(x.vertex_offset(i) + p)),
                                       Matrix(y.adapted_inverse().row(y.vertex_offset(i) + r)));
          sel.row(coord(i, p, r)) = row;
        }
    out.project = multiply(f, q.project, sel);
  }
  return out;
}

}  // namespace domdim
