// One PASS/FAIL line per acceptance criterion. Exit status is nonzero when any criterion fails.

#include <filesystem>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>

#include "domdim/catalog.hpp"
#include "domdim/cli.hpp"
#include "domdim/hash.hpp"
#include "domdim/homology.hpp"
#include "domdim/theorems.hpp"
#include "fixtures.hpp"

using namespace domdim;
namespace fs = std::filesystem;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;
  void require(bool ok, const std::string& what) {
    if (!ok) {
      if (pass) detail = what;
      pass = false;
    }
  }
};

std::string dims(const std::vector<Index>& v) { return join(v); }

Outcome bar_oracle() {
  Outcome o;
  std::size_t pairs = 0;
  for (const auto& a : fx::corpus_algebras()) {
    if (a.dim() > 6) continue;
    const auto mods = fx::zoo(a, 4);
    const CheckReport r = bar_oracle_sweep(a, mods, 3);
    pairs += mods.size() * mods.size();
    o.require(r.verdict == Verdict::pass, a.name() + ": " + r.get("mismatch"));
  }
  if (o.pass) o.detail = std::to_string(pairs) + " module pairs, degrees 0..3";
  return o;
}

Outcome muller() {
  Outcome o;
  const Algebra k2 = fx::truncated(2);
  const CheckReport r = muller_check(direct_sum(k2, {regular_module(k2), simple(k2, 0)}), 6);
  o.require(r.verdict == Verdict::pass && r.get("domdim_end") == "2" && r.get("first_ext_degree") == "1",
            "K2+S: domdim_end=" + r.get("domdim_end") + " first_ext_degree=" + r.get("first_ext_degree"));
  const CheckReport s = muller_check(direct_sum(k2, {regular_module(k2)}), 6);
  o.require(s.verdict == Verdict::pass && s.get("domdim_end") == "infinity-certified", "K2: domdim_end=" + s.get("domdim_end"));
  if (o.pass) o.detail = "dm End(K2+S) = 2, first Ext degree 1; End(K2) infinity-certified";
  return o;
}

Outcome lemma() {
  Outcome o;
  const Algebra k2 = fx::truncated(2);
  const CheckReport r = wg_lemma_check(direct_sum(k2, {regular_module(k2), simple(k2, 0)}), 6);
  const std::string l = r.get("ext_end_dual_end"), rhs = r.get("ext_nu_m_m");
  o.require(l == rhs, "Ext_AUS(D AUS, AUS) = " + l + " but Ext_K2(nu M, M) = " + rhs + ", mismatch at n = " +
                          r.get("mismatch_degrees") + " (Ext^1_K2(M,M) != 0; AUS has global dimension 2)");
  const auto one = [](const std::string& s) { return s.size() > 2 && s.substr(2, 2) == "1,"; };
  o.require(one(l) && one(rhs), "n = 1 values differ from 1");
  if (o.pass) o.detail = "both sides " + l;
  return o;
}

Outcome end_aus() {
  Outcome o;
  const Algebra k2 = fx::truncated(2);
  const EndomorphismAlgebra e = endomorphism_algebra(direct_sum(k2, {regular_module(k2), simple(k2, 0)}));
  o.require(e.algebra.dim() == 5, "dim End = " + std::to_string(e.algebra.dim()));
  o.require(presentation_isomorphism(fx::aus(), e.algebra).has_value(), "no structure-constant match with AUS");
  if (o.pass) o.detail = "dim 5, isomorphic to the quiver build of AUS";
  return o;
}

Outcome kunneth() {
  Outcome o;
  const Algebra k = fx::k(), k2 = fx::truncated(2), k3 = fx::truncated(3), ka2 = fx::linear(2), aus = fx::aus();
  const CheckReport r = kunneth_check(k2, k2, 6);
  o.require(r.get("domdim_c") == "infinity-certified" && r.get("ext_c") == "4,0,0,0,0,0,0",
            "K2 (x) K2: domdim " + r.get("domdim_c") + ", ext " + r.get("ext_c"));
  const CheckReport s = kunneth_check(ka2, k2, 6);
  o.require(s.get("domdim_c") == "1", "KA2 (x) K2: domdim " + s.get("domdim_c"));
  std::vector<std::pair<Algebra, Algebra>> pairs{{k2, k2}, {ka2, k2}, {k2, ka2}, {k3, k2}, {ka2, ka2}, {aus, k2}};
  for (const auto& a : fx::corpus_algebras()) pairs.emplace_back(a, k);
  for (const auto& [a, b] : pairs) {
    const CheckReport t = kunneth_check(a, b, 6);
    o.require(t.verdict == Verdict::pass, a.name() + " (x) " + b.name() + ": " + to_string(t.verdict));
  }
  if (o.pass) o.detail = std::to_string(pairs.size()) + " tensor pairs";
  return o;
}

Outcome remark32() {
  Outcome o;
  for (const auto& b : {fx::k(), fx::truncated(2), fx::linear(2)}) {
    const CheckReport r = remark32_check(b, 4);
    o.require(r.verdict == Verdict::pass, b.name() + ": " + to_string(r.verdict));
  }
  if (o.pass) o.detail = "k, K2, KA2 through degree 4";
  return o;
}

Outcome dominant() {
  Outcome o;
  const std::vector<std::pair<Algebra, std::string>> want{{fx::truncated(2), "infinity-certified"},
                                                           {fx::truncated(3), "infinity-certified"},
                                                           {fx::truncated(4), "infinity-certified"},
                                                           {fx::linear(2), "1"},
                                                           {fx::linear(3), "1"},
                                                           {fx::aus(), "2"}};
  for (const auto& [a, v] : want) {
    const std::string got = to_string(dominant_dimension(a, 6).value);
    o.require(got == v, a.name() + ": " + got + " (expected " + v + ")");
  }
  if (o.pass) o.detail = "K2, K3, K4 infinity-certified; KA2, KA3 1; AUS 2";
  return o;
}

Outcome frobenius() {
  Outcome o;
  for (int n = 2; n <= 4; ++n) {
    const auto p = extension_predicates(ground_extension(fx::truncated(n)));
    o.require(p.frobenius && p.split, "k in K" + std::to_string(n));
  }
  for (const auto& a : fx::corpus_algebras()) {
    const auto p = extension_predicates(identity_extension(a));
    o.require(p.frobenius && p.separable && p.split && p.projective_over_sub, "identity on " + a.name());
  }
  o.require(!extension_predicates(ground_extension(fx::linear(2))).frobenius, "k in KA2 reported frobenius");
  for (std::uint64_t seed : {0ull, 7ull, 12345ull}) {
    const auto a = extension_predicates(ground_extension(fx::truncated(3)), seed);
    const auto b = extension_predicates(ground_extension(fx::truncated(3)), seed);
    o.require(a.bimodule_iso.witness.has_value() && b.bimodule_iso.witness.has_value() &&
                  *a.bimodule_iso.witness == *b.bimodule_iso.witness && a.frobenius == b.frobenius,
              "seed " + std::to_string(seed) + " not reproducible");
  }
  if (o.pass) o.detail = "k in K2..K4 frobenius and split; identities all true; k in KA2 not frobenius; seeds reproduce";
  return o;
}

Outcome properties() {
  Outcome o;
  std::size_t count = 0;
  // rank-nullity on seeded random matrices
  std::mt19937_64 rng(3);
  const PrimeField f;
  for (int t = 0; t < 200; ++t) {
    const Index r = 1 + static_cast<Index>(rng() % 7), c = 1 + static_cast<Index>(rng() % 7);
    Matrix m(r, c);
    for (Index i = 0; i < r; ++i)
      for (Index j = 0; j < c; ++j) m(i, j) = rng() % 4 == 0 ? 0 : static_cast<Scalar>(rng() % 5);
    o.require(rank(f, m) + nullspace(f, m).cols() == c, "rank-nullity");
    ++count;
  }
  for (const auto& a : fx::corpus_algebras()) {
    const Algebra op = opposite(a);
    const auto mods = fx::zoo(a, 6);
    for (const auto& m : mods) {
      for (int i = 0; i < a.vertex_count(); ++i) {
        o.require(hom_dim(projective(a, i), m) == m.dim_vector()[static_cast<std::size_t>(i)], "Yoneda " + a.name());
        ++count;
      }
      const Resolution r = minimal_resolution(m, Resolution::Kind::projective, 4);
      for (int j = 0; j < a.vertex_count(); ++j) {
        const auto t = ext_dims(r, simple(a, j), 3);
        for (int i = 0; i <= 3; ++i) {
          Index mult = 0;
          if (static_cast<std::size_t>(i) < r.term_types.size())
            for (int v : r.term_types[static_cast<std::size_t>(i)]) mult += v == j;
          o.require(t.dims[static_cast<std::size_t>(i)] == mult, "minimality witness " + a.name() + " " + m.name());
          ++count;
        }
      }
      o.require(nakayama(m).agreement.isomorphic, "Nakayama routes " + a.name() + " " + m.name());
      ++count;
    }
    const auto small = fx::zoo(a, 4);
    for (const auto& m : small)
      for (const auto& n : small) {
        o.require(ext_dims(m, n, 3).dims == ext_dims(dualize(n, op), dualize(m, op), 3).dims, "duality " + a.name());
        ++count;
      }
  }
  if (o.pass) o.detail = std::to_string(count) + " property instances";
  return o;
}

std::string run(const std::vector<std::string>& args, int* code = nullptr) {
  std::ostringstream out, err;
  const int c = run_cli(args, out, err);
  if (code) *code = c;
  return out.str();
}

// RESULTS blocks only, without the human summary lines.
std::string results(const std::string& text) {
  std::istringstream in(text);
  std::string line, keep;
  bool inside = false;
  while (std::getline(in, line)) {
    if (line == "RESULTS") inside = true;
    if (inside) keep += line + "\n";
    if (line == "END") inside = false;
  }
  return keep;
}

Outcome determinism() {
  Outcome o;
  std::mt19937_64 rng(std::random_device{}());
  const fs::path dir = fs::temp_directory_path() / ("domdim-acceptance-" + hex(rng()));
  const std::string first = run({"--no-cache", "corpus", "run"});
  const std::string second = run({"--no-cache", "corpus", "run"});
  o.require(!first.empty() && first == second, "two corpus runs differ");
  const std::string cold = run({"--catalog", dir.string(), "corpus", "run"});
  const std::string warm = run({"--catalog", dir.string(), "corpus", "run"});
  o.require(results(cold) == results(first), "cold cache changes RESULTS");
  o.require(results(warm) == results(first), "warm cache changes RESULTS");
  std::size_t records = 0;
  for (const auto& e : fs::directory_iterator(dir)) records += e.is_regular_file();
  o.require(records > 0, "cache stayed empty");
  fs::remove_all(dir);
  if (o.pass) o.detail = std::to_string(first.size()) + " bytes, identical with a cold and a warm cache of " +
                         std::to_string(records) + " records";
  return o;
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
      {"bar oracle equals minimal-resolution Ext", bar_oracle},
      {"Muller correspondence", muller},
      {"Ext_AUS(D AUS, AUS) = Ext_K2(nu M, M), n = 0..6", lemma},
      {"End_K2(K2+S) is AUS", end_aus},
      {"dominant dimension of tensor products", kunneth},
      {"enveloping-algebra Ext sequences agree", remark32},
      {"dominant dimensions of the corpus", dominant},
      {"Frobenius extension predicates", frobenius},
      {"property suites", properties},
      {"determinism and cache transparency", determinism},
  };
  int failed = 0, n = 0;
  for (const auto& [title, check] : criteria) {
    ++n;
    Outcome o;
    try {
      o = check();
    } catch (const std::exception& e) {
      o.pass = false;
      o.detail = std::string("exception: ") + e.what();
    }
    failed += !o.pass;
    std::cout << "criterion " << n << ": " << (o.pass ? "PASS" : "FAIL") << "  " << title << "  [" << o.detail << "]"
              << std::endl;
  }
  std::cout << (n - failed) << "/" << n << " criteria pass" << std::endl;
  return failed == 0 ? 0 : 1;
}
