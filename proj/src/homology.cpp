#include "domdim/homology.hpp"

#include <map>
#include <utility>

namespace domdim {

namespace {

std::size_t sz(Index i) { return static_cast<std::size_t>(i); }

Matrix vec_of(const Matrix& m) { return Eigen::Map<const Matrix>(m.data(), m.size(), 1); }

Matrix stack_vecs(const std::vector<Matrix>& ms, Index rows, Index cols) {
  Matrix out(rows * cols, static_cast<Index>(ms.size()));
  for (std::size_t k = 0; k < ms.size(); ++k) out.col(static_cast<Index>(k)) = vec_of(ms[k]);
  return out;
}

std::vector<Matrix> maps_of(const std::vector<Morphism>& hs) {
  std::vector<Matrix> out;
  for (const auto& h : hs) out.push_back(h.map);
  return out;
}

// Radical of End(m) as endomorphism matrices: radical of (x, y) -> tr(x y) on m.
std::vector<Matrix> endomorphism_radical(const ModuleRep& m, const std::vector<Matrix>& end) {
  const PrimeField& f = m.algebra().field();
  if (f.modulus() <= m.dim())
    throw UnsupportedError("radical of End(M) needs p > dim M (" + std::to_string(m.dim()) + ")");
  const Index n = m.dim();
  Matrix t(n * n, static_cast<Index>(end.size()));
  for (std::size_t k = 0; k < end.size(); ++k) t.col(static_cast<Index>(k)) = vec_of(Matrix(end[k].transpose()));
  const Matrix gram = multiply(f, Matrix(t.transpose()), stack_vecs(end, n, n));
  const Matrix coeffs = nullspace(f, gram);
  std::vector<Matrix> out;
  for (Index c = 0; c < coeffs.cols(); ++c) {
    Matrix x = Matrix::Zero(n, n);
    for (std::size_t k = 0; k < end.size(); ++k) x += coeffs(static_cast<Index>(k), c) * end[k];
    out.push_back(f.reduce(x));
  }
  return out;
}

}  // namespace

std::string to_string(const Bounded& b) {
  switch (b.kind) {
    case Bounded::Kind::exact:
      return std::to_string(b.value);
    case Bounded::Kind::at_least:
      return "at-least-" + std::to_string(b.value);
    case Bounded::Kind::infinite:
      return "infinity-certified";
  }
  return "?";
}

Bounded min(const Bounded& a, const Bounded& b) {
  using K = Bounded::Kind;
  if (a.kind == K::infinite) return b;
  if (b.kind == K::infinite) return a;
  if (a.kind == K::exact && b.kind == K::exact) return a.value <= b.value ? a : b;
  if (a.kind == K::exact) return a.value <= b.value ? a : Bounded::at_least(b.value);
  if (b.kind == K::exact) return b.value <= a.value ? b : Bounded::at_least(a.value);
  return Bounded::at_least(std::min(a.value, b.value));
}

Resolution minimal_resolution(const ModuleRep& m, Resolution::Kind kind, int depth) {
  Resolution r{kind, m, {}, {}, {}, {m}, false};
  ModuleRep cur = m;
  std::optional<Morphism> link;  // Omega^i -> P_{i-1}, or I^{i-1} -> Omega^{-i}
  for (int i = 0; i <= depth && cur.dim() > 0; ++i) {
    if (kind == Resolution::Kind::projective) {
      const Cover c = projective_cover(cur);
      r.terms.push_back(c.map.source);
      r.term_types.push_back(c.terms);
      r.differentials.push_back(link ? compose(*link, c.map) : c.map);
      const Submodule k = kernel(c.map);
      link = k.inclusion;
      cur = k.module;
    } else {
      const Cover c = injective_envelope(cur);
      r.terms.push_back(c.map.target);
      r.term_types.push_back(c.terms);
      r.differentials.push_back(link ? compose(c.map, *link) : c.map);
      const Quotient q = cokernel(c.map);
      link = q.projection;
      cur = q.module;
    }
    r.syzygies.push_back(cur);
  }
  r.terminated = cur.dim() == 0;
  return r;
}

ExtTable ext_dims(const ModuleRep& m, const ModuleRep& n, int cutoff) {
  return ext_dims(minimal_resolution(m, Resolution::Kind::projective, cutoff + 1), n, cutoff);
}

ExtTable ext_dims(const Resolution& res, const ModuleRep& n, int cutoff) {
  if (res.kind != Resolution::Kind::projective) throw InternalError("ext_dims needs a projective resolution");
  if (!res.terminated && static_cast<int>(res.terms.size()) < cutoff + 2)
    throw InternalError("resolution too short for the requested cutoff");
  const Algebra& a = n.algebra();
  if (res.module.algebra() != a) throw InputError("modules over different algebras");
  const PrimeField& f = a.field();
  const auto dn = n.dim_vector();
  std::map<int, Matrix> pbasis;
  auto basis_of = [&](int v) -> const Matrix& {
    auto it = pbasis.find(v);
    if (it == pbasis.end()) it = pbasis.emplace(v, projective_basis(a, v)).first;
    return it->second;
  };
  const Matrix n_adapted_inv = n.adapted_inverse();
  auto cochain_dim = [&](std::size_t i) {
    Index d = 0;
    if (i < res.term_types.size())
      for (int v : res.term_types[i]) d += dn[sz(v)];
    return d;
  };
  // delta^i : C^i -> C^{i+1}, from d_{i+1} : P_{i+1} -> P_i
  std::vector<Index> ranks;
  for (int i = 0; i <= cutoff; ++i) {
    const std::size_t ui = static_cast<std::size_t>(i);
    if (ui + 1 >= res.terms.size()) {
      ranks.push_back(0);
      continue;
    }
    const auto& src_types = res.term_types[ui];
    const auto& dst_types = res.term_types[ui + 1];
    const Matrix& d = res.differentials[ui + 1].map;
    Matrix delta = Matrix::Zero(cochain_dim(ui + 1), cochain_dim(ui));
    Index p_off_h = 0, c_off_h = 0;
    for (int vh : dst_types) {
      const Vector gen_image = d.col(p_off_h);
      Index p_off_g = 0, c_off_g = 0;
      for (int vg : src_types) {
        const Matrix& pb = basis_of(vg);
        const Vector elt = multiply(f, pb, gen_image.segment(p_off_g, pb.cols()));
        if (!is_zero(Matrix(elt)) && dn[sz(vh)] && dn[sz(vg)]) {
          const Matrix act = multiply(f, n_adapted_inv, multiply(f, n.action(elt), n.adapted()));
          delta.block(c_off_h, c_off_g, dn[sz(vh)], dn[sz(vg)]) =
              act.block(n.vertex_offset(vh), n.vertex_offset(vg), dn[sz(vh)], dn[sz(vg)]);
        }
        p_off_g += pb.cols();
        c_off_g += dn[sz(vg)];
      }
      p_off_h += basis_of(vh).cols();
      c_off_h += dn[sz(vh)];
    }
    ranks.push_back(rank(f, delta));
  }
  ExtTable t;
  for (int i = 0; i <= cutoff; ++i) {
    const std::size_t ui = static_cast<std::size_t>(i);
    t.dims.push_back(cochain_dim(ui) - ranks[ui] - (i ? ranks[ui - 1] : 0));
  }
  return t;
}

namespace {

Bounded resolution_length(const ModuleRep& m, Resolution::Kind kind, int cutoff) {
  if (m.dim() == 0) return Bounded::exact(0);
  const Resolution r = minimal_resolution(m, kind, cutoff - 1);
  if (r.terminated) return Bounded::exact(static_cast<Index>(r.terms.size()) - 1);
  return Bounded::at_least(cutoff);
}

bool is_projective(const ModuleRep& m) {
  return m.dim() == 0 || projective_cover(m).map.source.dim() == m.dim();
}

}  // namespace

Bounded pd_bounded(const ModuleRep& m, int cutoff) { return resolution_length(m, Resolution::Kind::projective, cutoff); }
Bounded id_bounded(const ModuleRep& m, int cutoff) { return resolution_length(m, Resolution::Kind::injective, cutoff); }

bool is_self_injective(const Algebra& a) {
  // an essential monomorphism into an injective of the same dimension is onto
  return injective_envelope(regular_module(a)).map.target.dim() == a.dim();
}

DomDimEvidence dominant_dimension(const Algebra& a, int cutoff) {
  if (cutoff < 1) throw InputError("cutoff must be at least 1");
  DomDimEvidence ev{Bounded::at_least(cutoff), cutoff, {}, {}};
  ModuleRep cur = regular_module(a);
  for (int i = 0; i < cutoff; ++i) {
    const Cover c = injective_envelope(cur);
    const bool proj = is_projective(c.map.target);
    ev.terms.push_back(c.terms);
    ev.projective.push_back(proj);
    if (i == 0 && c.map.target.dim() == a.dim()) {
      ev.value = Bounded::infinite();
      return ev;
    }
    if (!proj) {
      ev.value = Bounded::exact(i);
      return ev;
    }
    cur = cokernel(c.map).module;
    if (cur.dim() == 0) throw InternalError("finite coresolution by projective-injectives of a non-injective algebra");
  }
  return ev;
}

NakayamaResult nakayama(const ModuleRep& m, std::uint64_t seed) {
  const Algebra& a = m.algebra();
  const PrimeField& f = a.field();
  const Algebra op = opposite(a);
  std::vector<Matrix> right;
  for (Index b = 0; b < a.dim(); ++b) right.push_back(a.left_mult(b).transpose());
  const ModuleRep d_right = ModuleRep::trusted(op, std::move(right), "D(A)");
  const std::string nm = m.name().empty() ? std::string() : "nu(" + m.name() + ")";
  ModuleRep route1 = tensor_over(d_right, m, dual_regular_module(a)).module.renamed(nm);

  // Hom_A(m, A) is a right A-module by post-multiplication; dualize it.
  const auto hom = hom_space(m, regular_module(a));
  const Index h = static_cast<Index>(hom.size());
  std::vector<Matrix> act;
  if (h == 0) {
    act.assign(sz(a.dim()), Matrix(0, 0));
  } else {
    const Matrix v = stack_vecs(maps_of(hom), a.dim(), m.dim());
    const Matrix li = left_inverse(f, v);
    for (Index b = 0; b < a.dim(); ++b) {
      Matrix rho(h, h);
      for (Index k = 0; k < h; ++k) rho.col(k) = multiply(f, li, vec_of(multiply(f, a.right_mult(b), hom[sz(k)].map)));
      act.push_back(rho.transpose());
    }
  }
  ModuleRep route2 = ModuleRep::trusted(a, std::move(act), nm.empty() ? std::string() : "DHom(" + m.name() + ",A)");
  IsoVerdict v = is_isomorphic(route1, route2, seed);
  if (!v.isomorphic)
    throw InternalError("Nakayama functor routes disagree" + (m.name().empty() ? std::string() : " on " + m.name()));
  return {route1, route2, v};
}

SelfOrthogonality self_orthogonal(const ModuleRep& m, int cutoff) {
  SelfOrthogonality s;
  s.table = ext_dims(m, m, cutoff);
  for (int i = 1; i <= cutoff; ++i)
    if (s.table.dims[sz(i)] != 0) {
      s.holds = false;
      s.first_failure = i;
      break;
    }
  return s;
}

bool gen_cogen(const ModuleRep& m) {
  const Algebra& a = m.algebra();
  for (int i = 0; i < a.vertex_count(); ++i)
    if (!summand_test(projective(a, i), m) || !summand_test(injective(a, i), m)) return false;
  return true;
}

EndomorphismAlgebra endomorphism_algebra(const DirectSum& ds, std::string name) {
  const ModuleRep& m = ds.module;
  const Algebra& a = m.algebra();
  const PrimeField& f = a.field();
  const std::size_t r = ds.summands.size();
  auto label = [&](std::size_t j) {
    return ds.summands[j].name().empty() ? std::to_string(j + 1) : ds.summands[j].name();
  };
  for (std::size_t j = 0; j < r; ++j) {
    if (!has_local_endomorphisms(ds.summands[j]))
      throw UnsupportedError("End(M) is not basic elementary: summand pair (" + label(j) + ", " + label(j) +
                             ") has a non-local endomorphism ring");
    for (std::size_t k = 0; k < j; ++k)
      if (is_isomorphic(ds.summands[k], ds.summands[j]).isomorphic)
        throw UnsupportedError("End(M) is not basic: summand pair (" + label(k) + ", " + label(j) + ") is isomorphic");
  }
  std::vector<Matrix> basis;
  std::vector<std::string> labels;
  for (std::size_t j = 0; j < r; ++j)
    for (std::size_t k = 0; k < r; ++k) {
      const auto hs = hom_space(ds.summands[j], ds.summands[k]);
      for (std::size_t l = 0; l < hs.size(); ++l) {
        basis.push_back(multiply(f, ds.inclusions[k], multiply(f, hs[l].map, ds.projections[j])));
        labels.push_back(j == k && hs.size() == 1 ? "e" + std::to_string(j + 1)
                                                  : "h" + std::to_string(j + 1) + std::to_string(k + 1) + "_" + std::to_string(l + 1));
      }
    }
  const Index n = static_cast<Index>(basis.size());
  const Matrix v = stack_vecs(basis, m.dim(), m.dim());
  const Matrix li = left_inverse(f, v);
  auto coords = [&](const Matrix& x) { return Vector(multiply(f, li, vec_of(x))); };
  std::vector<Matrix> left(sz(n), Matrix(n, n));
  for (Index x = 0; x < n; ++x)
    for (Index y = 0; y < n; ++y) left[sz(x)].col(y) = coords(multiply(f, basis[sz(y)], basis[sz(x)]));
  const Vector unit = coords(Matrix::Identity(m.dim(), m.dim()));
  std::vector<Vector> idem;
  for (std::size_t j = 0; j < r; ++j) idem.push_back(coords(multiply(f, ds.inclusions[j], ds.projections[j])));
  Algebra alg = [&] {
    try {
      return Algebra::from_table(f, labels, left, unit, idem, name);
    } catch (const InputError& e) {
      throw UnsupportedError(std::string("End(M) is not basic elementary: ") + e.what());
    }
  }();
  const Algebra op = opposite(alg);
  ModuleRep right = ModuleRep::trusted(op, basis, m.name());
  return {alg, ds, basis, right};
}

ModuleRep hom_module(const EndomorphismAlgebra& e, const ModuleRep& x) {
  const ModuleRep& m = e.decomposition.module;
  const PrimeField& f = x.algebra().field();
  const auto hs = hom_space(m, x);
  const Index h = static_cast<Index>(hs.size());
  std::vector<Matrix> act;
  if (h == 0) {
    act.assign(e.basis.size(), Matrix(0, 0));
  } else {
    const Matrix li = left_inverse(f, stack_vecs(maps_of(hs), x.dim(), m.dim()));
    for (const auto& eb : e.basis) {
      Matrix rho(h, h);
      for (Index k = 0; k < h; ++k) rho.col(k) = multiply(f, li, vec_of(multiply(f, hs[sz(k)].map, eb)));
      act.push_back(std::move(rho));
    }
  }
  return ModuleRep::trusted(e.algebra, std::move(act), m.name().empty() || x.name().empty() ? std::string()
                                                                                            : "Hom(" + m.name() + "," + x.name() + ")");
}

Approximation min_add_approximation(const ModuleRep& m, const ModuleRep& x, const std::optional<DirectSum>& decomposition) {
  const Algebra& a = m.algebra();
  const PrimeField& f = a.field();
  if (x.algebra() != a) throw InputError("modules over different algebras");
  const std::vector<ModuleRep> parts = decomposition ? decomposition->summands : std::vector<ModuleRep>{m};
  const std::size_t r = parts.size();
  std::vector<std::vector<Matrix>> hx(r);  // Hom(M_j, X)
  for (std::size_t j = 0; j < r; ++j) hx[j] = maps_of(hom_space(parts[j], x));

  Approximation out{{zero_module(a), x, Matrix::Zero(x.dim(), 0)}, {}, true};
  std::vector<ModuleRep> source_parts;
  std::vector<Matrix> columns;
  std::vector<std::vector<Matrix>> chosen(r);  // generators per summand
  for (std::size_t j = 0; j < r; ++j) {
    const ModuleRep& mj = parts[j];
    const Index cells = x.dim() * mj.dim();
    // maps M_j -> X factoring through radical maps between summands
    std::vector<Matrix> radical_part;
    const auto endj = maps_of(hom_space(mj, mj));
    for (const auto& rj : endomorphism_radical(mj, endj))
      for (const auto& g : hx[j]) radical_part.push_back(multiply(f, g, rj));
    for (std::size_t k = 0; k < r; ++k) {
      if (k == j) continue;
      for (const auto& h : hom_space(mj, parts[k]))
        for (const auto& g : hx[k]) radical_part.push_back(multiply(f, g, h.map));
    }
    const Matrix base = radical_part.empty() ? Matrix(cells, 0) : stack_vecs(radical_part, x.dim(), mj.dim());
    const Matrix all = hx[j].empty() ? Matrix(cells, 0) : stack_vecs(hx[j], x.dim(), mj.dim());
    const auto gens = extending_columns(f, base, all);
    out.multiplicities.push_back(static_cast<Index>(gens.size()));
    for (Index g : gens) {
      source_parts.push_back(mj);
      columns.push_back(hx[j][sz(g)]);
      chosen[j].push_back(hx[j][sz(g)]);
    }
  }
  const DirectSum src = direct_sum(a, source_parts);
  Matrix map(x.dim(), src.module.dim());
  Index off = 0;
  for (const auto& c : columns) {
    map.middleCols(off, c.cols()) = c;
    off += c.cols();
  }
  out.map = {src.module, x, map};

  // Hom(M_j, source) -> Hom(M_j, X) is onto for every j
  for (std::size_t j = 0; j < r && out.surjective_on_hom; ++j) {
    std::vector<Matrix> reach;
    for (std::size_t k = 0; k < r; ++k) {
      const auto hs = hom_space(parts[j], parts[k]);
      for (const auto& gen : chosen[k])
        for (const auto& h : hs) reach.push_back(multiply(f, gen, h.map));
    }
    const Index want = static_cast<Index>(hx[j].size());
    const Index got = reach.empty() ? 0 : rank(f, stack_vecs(reach, x.dim(), parts[j].dim()));
    out.surjective_on_hom = got == want;
  }
  return out;
}

}  // namespace domdim
