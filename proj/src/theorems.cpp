#include "domdim/theorems.hpp"

#include <map>

#include "domdim/hash.hpp"

namespace domdim {

namespace {

std::size_t sz(Index i) { return static_cast<std::size_t>(i); }

std::string hash_of(const Algebra& a) { return hex(content_hash(a)); }
std::string hash_of(const ModuleRep& m) { return hex(content_hash(m)); }

std::string range_text(int from, int to) { return std::to_string(from) + ".." + std::to_string(to); }

std::optional<int> first_nonzero(const std::vector<Index>& d, int from, int to) {
  for (int i = from; i <= to && sz(i) < d.size(); ++i)
    if (d[sz(i)] != 0) return i;
  return std::nullopt;
}

bool holds(const Bounded& dm) { return dm.kind != Bounded::Kind::exact; }

// Bar complex bookkeeping: a chain is r_1 .. r_i of typed radical basis
// elements with right(r_j) = left(r_{j+1}); degree 0 chains are vertices.
struct Chain {
  std::vector<int> r;
  int start = 0;  // left(r_1)
  int end = 0;    // right(r_i)
};

struct Cochains {
  std::vector<Chain> chains;
  std::map<std::vector<int>, std::size_t> index;
  std::vector<Index> offset;
  Index dim = 0;
};

std::vector<int> key_of(const Chain& c) { return c.r.empty() ? std::vector<int>{-1 - c.start} : c.r; }

}  // namespace

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::pass:
      return "pass";
    case Verdict::fail:
      return "fail";
    case Verdict::inconclusive:
      return "inconclusive";
    case Verdict::skipped:
      return "skipped";
  }
  return "?";
}

std::string CheckReport::get(const std::string& key) const {
  for (const auto& [k, v] : witness)
    if (k == key) return v;
  return {};
}

std::string join(const std::vector<Index>& v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
  return s;
}

ExtTable bar_ext_oracle(const ModuleRep& m, const ModuleRep& n, int cutoff, const BarBudget& budget) {
  const Algebra& a = m.algebra();
  if (n.algebra() != a) throw InputError("modules over different algebras");
  if (cutoff < 0) throw InputError("cutoff must be non-negative");
  const PrimeField& f = a.field();
  const RadicalData& rad = a.radical();
  const int k = a.vertex_count();
  const int nr = static_cast<int>(rad.basis.cols());
  const auto dm = m.dim_vector(), dn = n.dim_vector();

  // r_x r_y in radical coordinates
  std::vector<std::vector<std::vector<std::pair<int, Scalar>>>> prod(sz(nr), std::vector<std::vector<std::pair<int, Scalar>>>(sz(nr)));
  for (int x = 0; x < nr; ++x)
    for (int y = 0; y < nr; ++y) {
      if (rad.right[sz(x)] != rad.left[sz(y)]) continue;
      const Vector xy = a.multiply(rad.basis.col(x), rad.basis.col(y));
      const Vector c = multiply(f, rad.adapted_inverse, xy);
      for (int z = 0; z < nr; ++z)
        if (c(k + z)) prod[sz(x)][sz(y)].emplace_back(z, c(k + z));
    }
  // action blocks e_left X <- e_right X in adapted coordinates
  auto blocks = [&](const ModuleRep& x) {
    const auto d = x.dim_vector();
    std::vector<Matrix> out;
    for (int r = 0; r < nr; ++r) {
      const int l = rad.left[sz(r)], t = rad.right[sz(r)];
      const Matrix act = multiply(f, x.adapted_inverse(), multiply(f, x.action(Vector(rad.basis.col(r))), x.adapted()));
      out.push_back(act.block(x.vertex_offset(l), x.vertex_offset(t), d[sz(l)], d[sz(t)]));
    }
    return out;
  };
  const std::vector<Matrix> ma = blocks(m), na = blocks(n);

  std::vector<Cochains> c(sz(cutoff + 2));
  auto add_chain = [&](Cochains& cc, Chain ch) {
    cc.index.emplace(key_of(ch), cc.chains.size());
    cc.offset.push_back(cc.dim);
    cc.dim += dm[sz(ch.end)] * dn[sz(ch.start)];
    cc.chains.push_back(std::move(ch));
  };
  for (int v = 0; v < k; ++v) add_chain(c[0], Chain{{}, v, v});
  for (int i = 1; i <= cutoff + 1; ++i) {
    for (const Chain& ch : c[sz(i - 1)].chains)
      for (int r = 0; r < nr; ++r) {
        if (rad.left[sz(r)] != ch.end) continue;
        if (i > 1 && rad.right[sz(ch.r.back())] != rad.left[sz(r)]) continue;
        Chain next{ch.r, ch.start, rad.right[sz(r)]};
        next.r.push_back(r);
        add_chain(c[sz(i)], std::move(next));
      }
    if (c[sz(i)].dim > budget.max_cochain_dim)
      throw UnsupportedError("bar cochain space in degree " + std::to_string(i) + " has dimension " +
                             std::to_string(c[sz(i)].dim) + ", over the budget " + std::to_string(budget.max_cochain_dim));
  }
  auto coord = [&](const Cochains& cc, const Chain& ch, Index mi, Index ni) {
    const std::size_t idx = cc.index.at(key_of(ch));
    return cc.offset[idx] + mi * dn[sz(ch.start)] + ni;
  };

  std::vector<Index> ranks;
  for (int i = 0; i <= cutoff; ++i) {
    const Cochains &src = c[sz(i)], &dst = c[sz(i + 1)];
    Matrix delta = Matrix::Zero(dst.dim, src.dim);
    for (const Chain& ch : dst.chains) {
      const Index ds = dn[sz(ch.start)], de = dm[sz(ch.end)];
      if (ds == 0 || de == 0) continue;
      const int r1 = ch.r.front(), rl = ch.r.back();
      const Chain tail = i == 0 ? Chain{{}, rad.right[sz(r1)], rad.right[sz(r1)]}
                                : Chain{std::vector<int>(ch.r.begin() + 1, ch.r.end()), rad.right[sz(r1)], ch.end};
      const Chain head = i == 0 ? Chain{{}, rad.left[sz(r1)], rad.left[sz(r1)]}
                                : Chain{std::vector<int>(ch.r.begin(), ch.r.end() - 1), ch.start, rad.left[sz(rl)]};
      const Scalar last_sign = (i + 1) % 2 ? f.neg(1) : 1;
      for (Index mi = 0; mi < de; ++mi)
        for (Index ni = 0; ni < ds; ++ni) {
          const Index row = coord(dst, ch, mi, ni);
          // r_1 f(r_2 .. , m)
          const Matrix& nb = na[sz(r1)];
          for (Index nj = 0; nj < nb.cols(); ++nj)
            if (nb(ni, nj)) {
              const Index col = coord(src, tail, mi, nj);
              delta(row, col) = f.add(delta(row, col), nb(ni, nj));
            }
          // (-1)^j f(.. r_j r_{j+1} ..)
          for (int j = 1; j <= i; ++j) {
            const Scalar sign = j % 2 ? f.neg(1) : 1;
            for (const auto& [z, coef] : prod[sz(ch.r[sz(j - 1)])][sz(ch.r[sz(j)])]) {
              Chain merged{{}, ch.start, ch.end};
              for (int t = 0; t < i + 1; ++t) {
                if (t == j) continue;
                merged.r.push_back(t == j - 1 ? z : ch.r[sz(t)]);
              }
              const Index col = coord(src, merged, mi, ni);
              delta(row, col) = f.add(delta(row, col), f.mul(sign, coef));
            }
          }
          // (-1)^{i+1} f(r_1 .. r_i, r_{i+1} m)
          const Matrix& mb = ma[sz(rl)];
          for (Index mj = 0; mj < mb.rows(); ++mj)
            if (mb(mj, mi)) {
              const Index col = coord(src, head, mj, ni);
              delta(row, col) = f.add(delta(row, col), f.mul(last_sign, mb(mj, mi)));
            }
        }
    }
    ranks.push_back(rank(f, delta));
  }
  ExtTable t;
  for (int i = 0; i <= cutoff; ++i) t.dims.push_back(c[sz(i)].dim - ranks[sz(i)] - (i ? ranks[sz(i - 1)] : 0));
  return t;
}

CheckReport bar_oracle_sweep(const Algebra& a, const std::vector<ModuleRep>& modules, int cutoff, const BarBudget& budget) {
  CheckReport rep{"bar-oracle", {hash_of(a)}, Verdict::pass, {}, cutoff};
  Index pairs = 0;
  for (std::size_t x = 0; x < modules.size(); ++x)
    for (std::size_t y = 0; y < modules.size(); ++y) {
      const auto lhs = ext_dims(modules[x], modules[y], cutoff).dims;
      const auto rhs = bar_ext_oracle(modules[x], modules[y], cutoff, budget).dims;
      ++pairs;
      if (lhs != rhs && rep.verdict == Verdict::pass) {
        rep.verdict = Verdict::fail;
        rep.add("mismatch", modules[x].name() + "," + modules[y].name());
        rep.add("minimal", join(lhs));
        rep.add("bar", join(rhs));
      }
    }
  if (modules.empty()) rep.verdict = Verdict::inconclusive;
  rep.add("modules", std::to_string(modules.size()));
  rep.add("pairs", std::to_string(pairs));
  rep.add("degrees", range_text(0, cutoff));
  return rep;
}

namespace {

void require_gen_cogen(const DirectSum& m) {
  if (!gen_cogen(m.module)) throw InputError("precondition failed: M is not a generator-cogenerator");
}

}  // namespace

CheckReport muller_check(const DirectSum& m, int cutoff) {
  if (cutoff < 3) throw InputError("muller check needs cutoff >= 3");
  require_gen_cogen(m);
  const EndomorphismAlgebra e = endomorphism_algebra(m, "End(M)");
  const Bounded d = dominant_dimension(e.algebra, cutoff).value;
  const ExtTable t = ext_dims(m.module, m.module, cutoff);
  const auto first = first_nonzero(t.dims, 1, cutoff - 2);
  CheckReport rep{"muller", {hash_of(m.module)}, Verdict::pass, {}, cutoff};
  rep.add("end_dim", std::to_string(e.algebra.dim()));
  rep.add("domdim_end", to_string(d));
  rep.add("ext_mm", join(t.dims));
  rep.add("first_ext_degree", first ? std::to_string(*first) : "none in " + range_text(1, cutoff - 2));
  const bool ok = first ? d == Bounded::exact(*first + 1) : holds(d);
  rep.add("expected_domdim", first ? std::to_string(*first + 1) : "at-least-" + std::to_string(cutoff));
  if (!ok) rep.verdict = Verdict::fail;
  return rep;
}

CheckReport wg_lemma_check(const DirectSum& m, int cutoff) {
  require_gen_cogen(m);
  const EndomorphismAlgebra e = endomorphism_algebra(m, "End(M)");
  const Algebra& a = e.algebra;
  const ModuleRep nu = nakayama(m.module).value;
  const auto lhs = ext_dims(dual_regular_module(a), regular_module(a), cutoff).dims;
  const auto rhs = ext_dims(nu, m.module, cutoff).dims;
  const auto mm = ext_dims(m.module, m.module, cutoff).dims;
  CheckReport rep{"wg-lemma", {hash_of(m.module)}, Verdict::pass, {}, cutoff};
  rep.add("ext_end_dual_end", join(lhs));
  rep.add("ext_nu_m_m", join(rhs));
  std::vector<Index> bad;
  for (int i = 0; i <= cutoff; ++i)
    if (lhs[sz(i)] != rhs[sz(i)]) bad.push_back(i);
  rep.add("mismatch_degrees", bad.empty() ? "none" : join(bad));
  // The comparison runs through Hom(M, I_*) for a minimal coresolution I_* of M,
  // which resolves A only below the first degree with Ext^e(M, M) != 0.
  const auto e_first = first_nonzero(mm, 1, cutoff);
  rep.add("ext_mm", join(mm));
  rep.add("chain_valid_through", e_first ? std::to_string(*e_first - 1) : std::to_string(cutoff));
  const Bounded d = dominant_dimension(a, cutoff).value;
  bool left = holds(d) && !first_nonzero(lhs, 1, cutoff);
  bool right = !first_nonzero(mm, 1, cutoff) && !first_nonzero(rhs, 1, cutoff);
  rep.add("domdim_end", to_string(d));
  rep.add("statement_left", left ? "true" : "false");
  rep.add("statement_right", right ? "true" : "false");
  rep.add("biconditional", left == right ? "holds" : "fails");
  if (!bad.empty()) {
    rep.verdict = Verdict::fail;
    rep.add("first_mismatch", std::to_string(bad.front()) + ": " + std::to_string(lhs[sz(bad.front())]) + " vs " +
                                  std::to_string(rhs[sz(bad.front())]));
  }
  return rep;
}

CheckReport remark32_check(const Algebra& b, int cutoff, const BarBudget& budget) {
  if (b.dim() * b.dim() > budget.max_cochain_dim)
    throw UnsupportedError("enveloping algebra of dimension " + std::to_string(b.dim() * b.dim()) + " is over the budget");
  const DirectSum g = direct_sum(b, {regular_module(b), dual_regular_module(b)});
  const auto s1 = ext_dims(g.module, g.module, cutoff).dims;
  const auto s2 = ext_dims(dual_regular_module(b), regular_module(b), cutoff).dims;
  const Enveloping env = enveloping(b);
  const ModuleRep bb = ModuleRep::trusted(env.algebra, env.action_on_a, "B");
  const auto s3 = ext_dims(bb, regular_module(env.algebra), cutoff).dims;
  CheckReport rep{"remark32", {hash_of(b)}, Verdict::pass, {}, cutoff};
  rep.add("ext_gen_cogen", join(s1));
  rep.add("ext_dual_regular", join(s2));
  rep.add("ext_enveloping", join(s3));
  rep.add("outer_action", "(x(x)y).(u(x)v) = xu(x)vy, free of rank one over B(x)B^op");
  rep.add("degrees", range_text(1, cutoff));
  for (int i = 1; i <= cutoff; ++i)
    if (s1[sz(i)] != s2[sz(i)] || s2[sz(i)] != s3[sz(i)]) {
      rep.verdict = Verdict::fail;
      rep.add("first_mismatch", std::to_string(i));
      break;
    }
  return rep;
}

CheckReport kunneth_check(const Algebra& a, const Algebra& b, int cutoff, const BarBudget& budget) {
  if (a.dim() * b.dim() > budget.max_cochain_dim)
    throw UnsupportedError("tensor product of dimension " + std::to_string(a.dim() * b.dim()) + " is over the budget");
  const Algebra c = tensor_product(a, b);
  auto seq = [&](const Algebra& x) { return ext_dims(dual_regular_module(x), regular_module(x), cutoff).dims; };
  const auto sa = seq(a), sb = seq(b), sc = seq(c);
  std::vector<Index> conv(sz(cutoff + 1), 0);
  for (int p = 0; p <= cutoff; ++p)
    for (int q = 0; p + q <= cutoff; ++q) conv[sz(p + q)] += sa[sz(p)] * sb[sz(q)];
  const Bounded da = dominant_dimension(a, cutoff).value, db = dominant_dimension(b, cutoff).value,
                dc = dominant_dimension(c, cutoff).value;
  CheckReport rep{"kunneth", {hash_of(a), hash_of(b)}, Verdict::pass, {}, cutoff};
  rep.add("ext_a", join(sa));
  rep.add("ext_b", join(sb));
  rep.add("ext_c", join(sc));
  rep.add("convolution", join(conv));
  rep.add("domdim_a", to_string(da));
  rep.add("domdim_b", to_string(db));
  rep.add("domdim_c", to_string(dc));
  rep.add("domdim_min", to_string(min(da, db)));
  if (sc != conv) {
    rep.verdict = Verdict::fail;
    for (int i = 0; i <= cutoff; ++i)
      if (sc[sz(i)] != conv[sz(i)]) {
        rep.add("first_mismatch", std::to_string(i));
        break;
      }
  }
  if (dc != min(da, db)) {
    rep.verdict = Verdict::fail;
    rep.add("domdim_mismatch", to_string(dc) + " vs " + to_string(min(da, db)));
  }
  return rep;
}

CheckReport diamond(const Algebra& a, int cutoff) {
  const Bounded d = dominant_dimension(a, cutoff).value;
  const auto t = ext_dims(dual_regular_module(a), regular_module(a), cutoff).dims;
  const auto bad = first_nonzero(t, 1, cutoff);
  CheckReport rep{"diamond", {hash_of(a)}, Verdict::pass, {}, cutoff};
  rep.add("domdim", to_string(d));
  rep.add("ext_dual_regular", join(t));
  rep.add("degrees", range_text(1, cutoff));
  if (!holds(d) || bad) {
    rep.verdict = Verdict::fail;
    rep.add("outcome", "fails");
    rep.add("witness", !holds(d) ? "domdim = " + to_string(d) : "Ext^" + std::to_string(*bad) + " = " + std::to_string(t[sz(*bad)]));
  } else if (d.kind == Bounded::Kind::infinite) {
    rep.add("outcome", "holds-certified");
  } else {
    rep.verdict = Verdict::inconclusive;
    rep.add("outcome", "holds-at-cutoff");
  }
  return rep;
}

CheckReport nc_evidence_scan(const Algebra& a, int cutoff) {
  const CheckReport d = diamond(a, cutoff);
  const bool self_inj = dominant_dimension(a, cutoff).value.kind == Bounded::Kind::infinite;
  CheckReport rep{"nc-scan", {hash_of(a)}, Verdict::pass, {}, cutoff};
  rep.add("diamond", d.get("outcome"));
  rep.add("self_injective", self_inj ? "true" : "false");
  if (d.get("outcome") != "fails" && !self_inj) {
    rep.verdict = Verdict::inconclusive;
    rep.add("flag", "tension-specimen");
  } else {
    rep.add("flag", self_inj ? "self-injective" : "diamond-fails");
  }
  return rep;
}

CheckReport thick_shadow_check(const Algebra& a, const std::vector<ModuleRep>& modules, int cutoff) {
  CheckReport rep{"thick-shadow", {hash_of(a)}, Verdict::pass, {}, cutoff};
  for (const auto& m : modules) rep.inputs.push_back(hash_of(m));
  const CheckReport d = diamond(a, cutoff);
  if (d.get("outcome") == "fails") {
    rep.verdict = Verdict::skipped;
    rep.add("reason", "hypothesis-not-met (" + d.get("witness") + ")");
    return rep;
  }
  rep.add("diamond", d.get("outcome"));
  std::vector<bool> fin_pd, fin_id;
  Index both = 0;
  for (const auto& m : modules) {
    const Bounded p = pd_bounded(m, cutoff), i = id_bounded(m, cutoff);
    fin_pd.push_back(p.finite());
    fin_id.push_back(i.finite());
    if (p.finite() && i.finite()) {
      ++both;
      if ((p.value != 0 || i.value != 0) && rep.verdict == Verdict::pass) {
        rep.verdict = Verdict::fail;
        rep.add("not_projective_injective", m.name() + " (pd " + to_string(p) + ", id " + to_string(i) + ")");
      }
    }
  }
  Index pairs = 0;
  for (std::size_t u = 0; u < modules.size(); ++u)
    for (std::size_t v = 0; v < modules.size(); ++v) {
      if (!fin_pd[u] || !fin_id[v]) continue;
      ++pairs;
      const Index uv = ext_dims(modules[u], modules[v], 1).dims[1];
      const Index vu = ext_dims(modules[v], modules[u], 1).dims[1];
      if ((uv || vu) && rep.verdict == Verdict::pass) {
        rep.verdict = Verdict::fail;
        rep.add("ext1_nonzero", modules[u].name() + "," + modules[v].name() + ": " + std::to_string(uv) + "," + std::to_string(vu));
      }
    }
  rep.add("modules", std::to_string(modules.size()));
  rep.add("finite_pd_and_id", std::to_string(both));
  rep.add("pd_id_pairs", std::to_string(pairs));
  return rep;
}

CheckReport opposite_domdim_check(const Algebra& a, int cutoff) {
  const Bounded d = dominant_dimension(a, cutoff).value, dop = dominant_dimension(opposite(a), cutoff).value;
  CheckReport rep{"opposite-domdim", {hash_of(a)}, d == dop ? Verdict::pass : Verdict::fail, {}, cutoff};
  rep.add("domdim", to_string(d));
  rep.add("domdim_op", to_string(dop));
  return rep;
}

}  // namespace domdim
