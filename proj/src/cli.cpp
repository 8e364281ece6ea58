#include "domdim/cli.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <functional>
#include <optional>
#include <sstream>

#include "domdim/catalog.hpp"
#include "domdim/hash.hpp"
#include "domdim/theorems.hpp"

namespace domdim {

namespace {

namespace fs = std::filesystem;

struct Options {
  int cutoff = 6;
  std::optional<Scalar> field;
  std::uint64_t seed = 0;
  Index budget = 4096;
  std::string catalog;
  bool no_cache = false;
  bool machine = false;
  int bar_degree = 3;
};

// key = value lines plus the exit status and a one-line human summary.
struct Body {
  std::vector<std::pair<std::string, std::string>> kv;
  int status = 0;
  std::string summary;

  void add(std::string k, std::string v) { kv.emplace_back(std::move(k), std::move(v)); }
  std::string get(const std::string& k) const {
    for (const auto& [key, v] : kv)
      if (key == k) return v;
    return {};
  }
};

std::string encode(const Body& b) {
  std::string s = "status " + std::to_string(b.status) + "\nsummary " + b.summary + "\n";
  for (const auto& [k, v] : b.kv) s += k + " = " + v + "\n";
  return s;
}

std::optional<Body> decode(const std::string& text) {
  Body b;
  std::istringstream in(text);
  std::string line;
  if (!std::getline(in, line) || line.rfind("status ", 0) != 0) return std::nullopt;
  try {
    b.status = std::stoi(line.substr(7));
  } catch (const std::exception&) {
    return std::nullopt;
  }
  if (!std::getline(in, line) || line.rfind("summary ", 0) != 0) return std::nullopt;
  b.summary = line.substr(8);
  while (std::getline(in, line)) {
    const auto eq = line.find(" = ");
    if (eq == std::string::npos) return std::nullopt;
    b.add(line.substr(0, eq), line.substr(eq + 3));
  }
  return b;
}

std::string yes(bool b) { return b ? "true" : "false"; }

std::string vertices_text(const std::vector<int>& vs, const Algebra& a) {
  std::string s;
  for (std::size_t i = 0; i < vs.size(); ++i) s += (i ? "," : "") + vertex_name(a, vs[i]);
  return s.empty() ? "0" : s;
}

int verdict_status(Verdict v) { return v == Verdict::fail ? 1 : 0; }

void add_report(Body& b, const CheckReport& r) {
  b.add("check", r.check_id);
  std::string inputs;
  for (std::size_t i = 0; i < r.inputs.size(); ++i) inputs += (i ? "," : "") + r.inputs[i];
  b.add("inputs", inputs);
  for (const auto& [k, v] : r.witness) b.add(k, v);
  b.add("verdict", to_string(r.verdict));
  b.status = verdict_status(r.verdict);
  b.summary = r.check_id + ": " + to_string(r.verdict);
}

class Runner {
 public:
  Runner(Options o, std::ostream& out, std::ostream& err) : o_(std::move(o)), out_(out), err_(err) {
    std::string dir = o_.catalog;
    if (dir.empty())
      if (const char* env = std::getenv("DOMDIM_CATALOG")) dir = env;
    if (!dir.empty() && !o_.no_cache) cache_.emplace(dir);
  }

  Loaded load(const std::string& file) const { return load_file(file, o_.field); }

  Scalar field_of(const Loaded& l) const { return l.algebra.field().modulus(); }

  // Computes (or fetches) a body and prints it as a RESULTS block.
  int emit(const std::string& command, const std::string& input, Scalar field, const std::string& name,
           const std::function<Body()>& compute, const std::vector<std::pair<std::string, std::string>>& extra = {}) {
    Body b;
    bool have = false;
    InvariantRecord key{input, name, o_.cutoff, field, o_.seed, kEngineVersion, {}};
    if (cache_) {
      std::string warning;
      if (auto hit = cache_->get(key, &warning)) {
        if (auto d = decode(*hit)) {
          b = *d;
          have = true;
        } else {
          err_ << "warning: ignoring corrupt cache record " << cache_->path_of(key).string() << "\n";
        }
      } else if (!warning.empty()) {
        err_ << "warning: " << warning << "\n";
      }
    }
    if (!have) {
      b = compute();
      if (cache_) {
        key.payload = encode(b);
        cache_->put(key);
      }
    }
    out_ << "RESULTS\n";
    out_ << "command = " << command << "\n";
    for (const auto& [k, v] : extra) out_ << k << " = " << v << "\n";
    out_ << "input = " << input << "\nfield = " << field << "\nseed = " << o_.seed << "\ncutoff = " << o_.cutoff << "\n";
    for (const auto& [k, v] : b.kv) out_ << k << " = " << v << "\n";
    out_ << "END\n";
    if (!o_.machine && !b.summary.empty()) out_ << b.summary << "\n";
    return b.status;
  }

  const Options& options() const { return o_; }
  std::optional<Cache>& cache() { return cache_; }

 private:
  Options o_;
  std::ostream& out_;
  std::ostream& err_;
  std::optional<Cache> cache_;
};

std::string input_of(const Loaded& l) { return hex(doc_hash(l.doc)); }

std::vector<std::string> standard_names(const Algebra& a) {
  std::vector<std::string> out;
  for (int i = 0; i < a.vertex_count(); ++i)
    for (const char* p : {"S", "P", "I"}) out.push_back(p + vertex_name(a, i));
  out.push_back("regular");
  out.push_back("dual");
  return out;
}

std::vector<ModuleRep> modules_named(const Loaded& l, const std::vector<std::string>& names, Index max_dim = -1) {
  std::vector<ModuleRep> out;
  for (const auto& n : names) {
    ModuleRep m = resolve_module(l, n).renamed(n);
    if (max_dim < 0 || m.dim() <= max_dim) out.push_back(m);
  }
  return out;
}

std::vector<std::string> default_modules(const Loaded& l) {
  std::vector<std::string> names = standard_names(l.algebra);
  for (const auto& m : l.doc.modules) names.push_back(m.name);
  return names;
}

std::vector<std::string> split_list(const std::string& s) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : s + ",") {
    if (c == ',') {
      if (!cur.empty()) out.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  return out;
}

DirectSum module_arg(const Loaded& l, const std::string& arg) {
  const auto eq = arg.find('=');
  if (eq == std::string::npos) return resolve(l, arg);
  DirectSum d = resolve(l, arg.substr(eq + 1));
  d.module = d.module.renamed(arg.substr(0, eq));
  return d;
}

Body domdim_body(const Loaded& l, int cutoff) {
  const DomDimEvidence ev = dominant_dimension(l.algebra, cutoff);
  Body b;
  b.add("algebra", l.doc.name);
  b.add("value", to_string(ev.value));
  for (std::size_t i = 0; i < ev.terms.size(); ++i)
    b.add("I" + std::to_string(i), vertices_text(ev.terms[i], l.algebra) + (ev.projective[i] ? " projective" : " not-projective"));
  b.summary = "dominant dimension of " + l.doc.name + ": " + to_string(ev.value);
  return b;
}

CheckReport frobenius_report(const Loaded& l, const std::string& sub, std::uint64_t seed) {
  Extension ext = sub == "identity" ? identity_extension(l.algebra) : ground_extension(l.algebra);
  if (sub != "identity" && sub != "ground") throw InputError("--sub must be ground or identity");
  const ExtensionPredicates p = extension_predicates(ext, seed);
  CheckReport r{"frobenius", {hex(content_hash(ext.sub)), hex(content_hash(ext.amb))}, Verdict::pass, {}, 0};
  r.add("extension", sub == "identity" ? "A in A" : "k in A");
  r.add("projective_over_sub", yes(p.projective_over_sub));
  r.add("bimodule_isomorphic", yes(p.bimodule_iso.isomorphic));
  r.add("iso_trials", std::to_string(p.bimodule_iso.trials));
  r.add("iso_certain", yes(p.bimodule_iso.certain));
  r.add("frobenius", yes(p.frobenius));
  r.add("separable", yes(p.separable));
  r.add("split", yes(p.split));
  return r;
}

struct VerifyArgs {
  std::string check, algebra, algebra2 = "k", module, modules, sub = "ground";
};

CheckReport run_check(const Runner& run, const VerifyArgs& v, const Loaded& l) {
  const Options& o = run.options();
  const BarBudget budget{o.budget};
  const std::string& c = v.check;
  if (c == "muller" || c == "wg-lemma") {
    if (v.module.empty()) throw InputError(c + " needs --module");
    const DirectSum m = module_arg(l, v.module);
    return c == "muller" ? muller_check(m, o.cutoff) : wg_lemma_check(m, o.cutoff);
  }
  if (c == "remark32") return remark32_check(l.algebra, o.cutoff, budget);
  if (c == "kunneth") return kunneth_check(l.algebra, run.load(v.algebra2).algebra, o.cutoff, budget);
  if (c == "diamond") return diamond(l.algebra, o.cutoff);
  if (c == "nc-scan") return nc_evidence_scan(l.algebra, o.cutoff);
  if (c == "opposite-domdim") return opposite_domdim_check(l.algebra, o.cutoff);
  if (c == "frobenius") return frobenius_report(l, v.sub, o.seed);
  const std::vector<std::string> names = v.modules.empty() ? default_modules(l) : split_list(v.modules);
  if (c == "thick-shadow") return thick_shadow_check(l.algebra, modules_named(l, names), o.cutoff);
  if (c == "bar-oracle") return bar_oracle_sweep(l.algebra, modules_named(l, names, v.modules.empty() ? 4 : -1), o.bar_degree, budget);
  throw InputError("unknown check '" + c + "'");
}

std::string verify_name(const VerifyArgs& v, const Options& o) {
  std::string n = "verify:" + v.check;
  if (v.check == "muller" || v.check == "wg-lemma") n += ":" + v.module;
  if (v.check == "kunneth") n += ":" + v.algebra2;
  if (v.check == "thick-shadow" || v.check == "bar-oracle") n += ":" + v.modules;
  if (v.check == "bar-oracle") n += ":degree=" + std::to_string(o.bar_degree);
  if (v.check == "frobenius") n += ":" + v.sub;
  if (v.check == "remark32" || v.check == "kunneth" || v.check == "bar-oracle") n += ":budget=" + std::to_string(o.budget);
  return n;
}

std::string kunneth_input(const Loaded& a, const Loaded& b) { return input_of(a) + "+" + input_of(b); }

// One corpus check: raw verdict, optional expectation, ok flag.
int corpus_run(Runner& run, std::ostream& out) {
  const Options& o = run.options();
  const auto entries = corpus();
  std::vector<Loaded> loaded;
  for (const auto& e : entries) loaded.push_back(load(e.doc, o.field));
  int total = 0, ok = 0;
  std::vector<std::string> failed;
  auto expect = [](const AlgebraDoc& d, const std::string& k) -> std::optional<std::string> {
    for (const auto& [key, v] : d.expect)
      if (key == k) return v;
    return std::nullopt;
  };
  auto one = [&](const Loaded& l, const std::string& label, const std::string& input, const std::string& name,
                 const std::function<Body()>& compute) {
    const int status = run.emit("corpus-run", input, run.field_of(l), "corpus:" + name, compute,
                                {{"entry", l.doc.name}, {"item", label}});
    ++total;
    if (status == 0) ++ok;
    else failed.push_back(l.doc.name + "/" + label);
  };
  auto check_body = [&](const CheckReport& r, std::optional<std::string> expected, const std::string& observed) {
    Body b;
    add_report(b, r);
    if (expected) {
      b.add("expected", *expected);
      b.add("observed", observed);
      b.status = *expected == observed ? 0 : 1;
    }
    b.summary = r.check_id + " on " + b.get("inputs") + ": " + (b.status ? "FAILED" : "ok");
    return b;
  };
  const BarBudget budget{o.budget};
  for (const Loaded& l : loaded) {
    const std::string in = input_of(l);
    const Algebra& a = l.algebra;
    one(l, "domdim", in, "domdim", [&] {
      Body b = domdim_body(l, o.cutoff);
      if (auto e = expect(l.doc, "domdim")) {
        b.add("expected", *e);
        b.status = *e == b.get("value") ? 0 : 1;
      }
      return b;
    });
    one(l, "diamond", in, "diamond", [&] {
      const CheckReport r = diamond(a, o.cutoff);
      return check_body(r, expect(l.doc, "diamond"), r.get("outcome"));
    });
    one(l, "nc-scan", in, "nc-scan", [&] {
      const CheckReport r = nc_evidence_scan(a, o.cutoff);
      return check_body(r, std::nullopt, {});
    });
    for (const auto& d : l.doc.decompositions)
      for (const std::string c : {"muller", "wg-lemma"})
        one(l, c + ":" + d.name, in, c + ":" + d.name, [&] {
          const DirectSum m = resolve(l, d.name);
          return check_body(c == "muller" ? muller_check(m, o.cutoff) : wg_lemma_check(m, o.cutoff), std::nullopt, {});
        });
    one(l, "remark32", in, "remark32:budget=" + std::to_string(o.budget),
        [&] { return check_body(remark32_check(a, o.cutoff, budget), std::nullopt, {}); });
    one(l, "bar-oracle", in, "bar-oracle:degree=" + std::to_string(o.bar_degree) + ":budget=" + std::to_string(o.budget), [&] {
      return check_body(bar_oracle_sweep(a, modules_named(l, default_modules(l), 4), o.bar_degree, budget), std::nullopt, {});
    });
    one(l, "thick-shadow", in, "thick-shadow", [&] {
      const CheckReport r = thick_shadow_check(a, modules_named(l, default_modules(l)), o.cutoff);
      const bool diamond_fails = expect(l.doc, "diamond") == std::optional<std::string>("fails");
      return check_body(r, std::string(diamond_fails ? "skipped" : "pass"), to_string(r.verdict));
    });
    if (auto e = expect(l.doc, "frobenius-over-k"))
      one(l, "frobenius:ground", in, "frobenius:ground", [&] {
        const CheckReport r = frobenius_report(l, "ground", o.seed);
        return check_body(r, *e, r.get("frobenius"));
      });
    one(l, "frobenius:identity", in, "frobenius:identity", [&] {
      const CheckReport r = frobenius_report(l, "identity", o.seed);
      return check_body(r, std::string("true,true,true"), r.get("frobenius") + "," + r.get("separable") + "," + r.get("split"));
    });
    one(l, "opposite-domdim", in, "opposite-domdim",
        [&] { return check_body(opposite_domdim_check(a, o.cutoff), std::nullopt, {}); });
  }
  auto find = [&](const std::string& key) -> const Loaded& {
    for (std::size_t i = 0; i < entries.size(); ++i)
      if (entries[i].key == key) return loaded[i];
    throw InternalError("corpus entry " + key + " missing");
  };
  std::vector<std::pair<std::string, std::string>> pairs{{"k2", "k2"}, {"ka2", "k2"}, {"k2", "ka2"}, {"k3", "k2"}, {"ka2", "ka2"}, {"aus", "k2"}};
  for (const char* base : {"k", "k2", "k3", "k4", "ka2", "ka3", "aus"}) pairs.emplace_back(base, "k");
  for (const auto& [x, y] : pairs) {
    const Loaded &lx = find(x), &ly = find(y);
    one(lx, "kunneth:" + y, kunneth_input(lx, ly), "kunneth:budget=" + std::to_string(o.budget),
        [&] { return check_body(kunneth_check(lx.algebra, ly.algebra, o.cutoff, budget), std::nullopt, {}); });
  }
  std::string fl;
  for (std::size_t i = 0; i < failed.size(); ++i) fl += (i ? "," : "") + failed[i];
  out << "RESULTS\ncommand = corpus-run-summary\nfield = " << (o.field ? *o.field : PrimeField::kDefaultModulus)
      << "\nseed = " << o.seed << "\ncutoff = " << o.cutoff << "\nentries = " << entries.size() << "\nchecks = " << total
      << "\nok = " << ok << "\nfailed = " << (total - ok) << "\nfailed_items = " << (fl.empty() ? "none" : fl) << "\nEND\n";
  if (!o.machine) out << "corpus run: " << ok << "/" << total << " ok\n";
  return failed.empty() ? 0 : 1;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Homological invariants of bound quiver algebras over a prime field", "domdim"};
  app.require_subcommand(1);
  app.fallthrough();
  Options o;
  Scalar field = 0;
  app.add_option("--cutoff", o.cutoff, "degree cutoff (default 6)")->check(CLI::Range(1, 1000));
  app.add_option("--field", field, "prime modulus (default: the file's, else 32003)");
  app.add_option("--seed", o.seed, "seed for randomized isomorphism tests (default 0)");
  app.add_option("--budget-dim", o.budget, "largest bar cochain space / enveloping dimension (default 4096)");
  app.add_option("--catalog", o.catalog, "invariant cache directory (or DOMDIM_CATALOG)");
  app.add_flag("--no-cache", o.no_cache, "bypass the invariant cache");
  app.add_flag("--machine", o.machine, "print RESULTS blocks only");
  app.add_option("--bar-degree", o.bar_degree, "top degree for the bar oracle (default 3)")->check(CLI::Range(0, 20));

  std::string file, m1, m2, file2, out_path, compare;
  auto* inspect = app.add_subcommand("inspect", "algebra summary");
  inspect->add_option("file", file)->required();
  auto* domdim_cmd = app.add_subcommand("domdim", "dominant dimension");
  domdim_cmd->add_option("file", file)->required();
  auto* ext = app.add_subcommand("ext", "Ext dimensions");
  ext->add_option("file", file)->required();
  ext->add_option("m", m1)->required();
  ext->add_option("n", m2)->required();
  auto* selforth = app.add_subcommand("selforth", "self-orthogonality");
  selforth->add_option("file", file)->required();
  selforth->add_option("module", m1)->required();
  auto* gencogen = app.add_subcommand("gencogen", "generator-cogenerator test");
  gencogen->add_option("file", file)->required();
  gencogen->add_option("module", m1)->required();
  auto* nak = app.add_subcommand("nakayama", "Nakayama functor");
  nak->add_option("file", file)->required();
  nak->add_option("module", m1)->required();
  auto* endo = app.add_subcommand("endo", "endomorphism algebra of a decomposed module");
  endo->add_option("file", file)->required();
  endo->add_option("module", m1, "NAME=X+Y+... or a declared decomposition")->required();
  endo->add_option("--compare", compare, "quiver-mode file to identify End with");
  auto* approx = app.add_subcommand("approx", "minimal right add(M)-approximation");
  approx->add_option("file", file)->required();
  approx->add_option("module", m1)->required();
  approx->add_option("target", m2)->required();
  auto* tensor = app.add_subcommand("tensor", "tensor product of two algebras");
  tensor->add_option("file", file)->required();
  tensor->add_option("file2", file2)->required();
  tensor->add_option("--out", out_path, "write the product as a table-mode file");
  VerifyArgs v;
  auto* verify = app.add_subcommand("verify", "run a check");
  verify->add_option("check", v.check,
                     "muller | wg-lemma | remark32 | kunneth | diamond | nc-scan | thick-shadow | bar-oracle | frobenius | opposite-domdim")
      ->required();
  verify->add_option("--algebra", v.algebra)->required();
  verify->add_option("--algebra2", v.algebra2, "second factor for kunneth (default k)");
  verify->add_option("--module", v.module, "NAME=X+Y+... for muller / wg-lemma");
  verify->add_option("--modules", v.modules, "comma-separated list for thick-shadow / bar-oracle");
  verify->add_option("--sub", v.sub, "ground | identity, for frobenius");
  std::string action, dir;
  auto* corpus_cmd = app.add_subcommand("corpus", "built-in corpus");
  corpus_cmd->add_option("action", action, "list | run | export")->required()->check(CLI::IsMember({"list", "run", "export"}));
  corpus_cmd->add_option("dir", dir, "target directory for export");
  auto* cache_cmd = app.add_subcommand("cache", "invariant cache");
  std::string cache_action;
  cache_cmd->add_option("action", cache_action, "stats | clear")->required()->check(CLI::IsMember({"stats", "clear"}));

  try {
    std::vector<std::string> rev(args.rbegin(), args.rend());
    app.parse(rev);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }
  if (app.count("--field")) o.field = field;

  try {
    Runner run(o, out, err);
    if (inspect->parsed()) {
      const Loaded l = run.load(file);
      return run.emit("inspect", input_of(l), run.field_of(l), "inspect", [&] {
        const Algebra& a = l.algebra;
        Body b;
        b.add("algebra", l.doc.name);
        b.add("mode", l.doc.mode == AlgebraDoc::Mode::quiver ? "quiver" : "table");
        b.add("dim", std::to_string(a.dim()));
        b.add("vertices", std::to_string(a.vertex_count()));
        b.add("radical_dim", std::to_string(radical(a).cols()));
        b.add("self_injective", yes(is_self_injective(a)));
        std::string pd, id;
        for (int i = 0; i < a.vertex_count(); ++i) {
          pd += (i ? "," : "") + std::to_string(projective(a, i).dim());
          id += (i ? "," : "") + std::to_string(injective(a, i).dim());
        }
        b.add("projective_dims", pd);
        b.add("injective_dims", id);
        std::string mods;
        for (const auto& m : l.modules) mods += (mods.empty() ? "" : ",") + m.name() + ":" + std::to_string(m.dim());
        b.add("modules", mods.empty() ? "none" : mods);
        std::string decs;
        for (const auto& d : l.doc.decompositions) {
          decs += (decs.empty() ? "" : ",") + d.name + "=";
          for (std::size_t i = 0; i < d.summands.size(); ++i) decs += (i ? "+" : "") + d.summands[i];
        }
        b.add("decompositions", decs.empty() ? "none" : decs);
        b.summary = l.doc.name + ": dim " + std::to_string(a.dim()) + ", " + std::to_string(a.vertex_count()) + " vertices";
        return b;
      });
    }
    if (domdim_cmd->parsed()) {
      const Loaded l = run.load(file);
      return run.emit("domdim", input_of(l), run.field_of(l), "domdim", [&] { return domdim_body(l, o.cutoff); });
    }
    if (ext->parsed()) {
      const Loaded l = run.load(file);
      return run.emit("ext", input_of(l), run.field_of(l), "ext:" + m1 + ":" + m2, [&] {
        Body b;
        b.add("m", m1);
        b.add("n", m2);
        b.add("dims", join(ext_dims(resolve_module(l, m1), resolve_module(l, m2), o.cutoff).dims));
        b.summary = "dim Ext^i(" + m1 + ", " + m2 + "), i = 0.." + std::to_string(o.cutoff) + ": " + b.get("dims");
        return b;
      });
    }
    if (selforth->parsed()) {
      const Loaded l = run.load(file);
      return run.emit("selforth", input_of(l), run.field_of(l), "selforth:" + m1, [&] {
        const SelfOrthogonality s = self_orthogonal(resolve_module(l, m1), o.cutoff);
        Body b;
        b.add("module", m1);
        b.add("self_orthogonal", yes(s.holds));
        b.add("first_failure", s.first_failure ? std::to_string(*s.first_failure) : "none");
        b.add("ext", join(s.table.dims));
        b.summary = m1 + (s.holds ? " is" : " is not") + " self-orthogonal up to degree " + std::to_string(o.cutoff);
        return b;
      });
    }
    if (gencogen->parsed()) {
      const Loaded l = run.load(file);
      return run.emit("gencogen", input_of(l), run.field_of(l), "gencogen:" + m1, [&] {
        Body b;
        const bool g = gen_cogen(resolve_module(l, m1));
        b.add("module", m1);
        b.add("generator_cogenerator", yes(g));
        b.summary = m1 + (g ? " is" : " is not") + " a generator-cogenerator";
        return b;
      });
    }
    if (nak->parsed()) {
      const Loaded l = run.load(file);
      return run.emit("nakayama", input_of(l), run.field_of(l), "nakayama:" + m1, [&] {
        const NakayamaResult r = nakayama(resolve_module(l, m1), o.seed);
        Body b;
        b.add("module", m1);
        b.add("dim", std::to_string(r.value.dim()));
        b.add("dim_vector", join(r.value.dim_vector()));
        b.add("routes_agree", yes(r.agreement.isomorphic));
        b.add("iso_trials", std::to_string(r.agreement.trials));
        b.summary = "nu(" + m1 + ") has dimension vector " + b.get("dim_vector");
        return b;
      });
    }
    if (endo->parsed()) {
      const Loaded l = run.load(file);
      std::optional<Loaded> cmp;
      if (!compare.empty()) cmp = run.load(compare);
      const std::string in = cmp ? input_of(l) + "+" + input_of(*cmp) : input_of(l);
      return run.emit("endo", in, run.field_of(l), "endo:" + m1, [&] {
        const DirectSum d = module_arg(l, m1);
        const EndomorphismAlgebra e = endomorphism_algebra(d, "End(" + d.module.name() + ")");
        Body b;
        b.add("module", m1);
        b.add("dim", std::to_string(e.algebra.dim()));
        b.add("vertices", std::to_string(e.algebra.vertex_count()));
        std::string blocks;
        for (std::size_t j = 0; j < d.summands.size(); ++j)
          for (std::size_t k = 0; k < d.summands.size(); ++k)
            blocks += std::string(blocks.empty() ? "" : ",") + std::to_string(hom_dim(d.summands[j], d.summands[k]));
        b.add("hom_blocks", blocks);
        b.add("domdim", to_string(dominant_dimension(e.algebra, o.cutoff).value));
        if (cmp) b.add("isomorphic_to_" + cmp->doc.name, yes(presentation_isomorphism(cmp->algebra, e.algebra, o.seed).has_value()));
        b.summary = "End(" + m1 + ") has dimension " + b.get("dim");
        return b;
      });
    }
    if (approx->parsed()) {
      const Loaded l = run.load(file);
      return run.emit("approx", input_of(l), run.field_of(l), "approx:" + m1 + ":" + m2, [&] {
        const DirectSum d = module_arg(l, m1);
        const Approximation ap = min_add_approximation(d.module, resolve_module(l, m2), d);
        Body b;
        b.add("module", m1);
        b.add("target", m2);
        b.add("multiplicities", join(ap.multiplicities));
        b.add("source_dim", std::to_string(ap.map.source.dim()));
        b.add("surjective_on_hom", yes(ap.surjective_on_hom));
        b.summary = "minimal right add(" + m1 + ")-approximation of " + m2 + ": multiplicities " + b.get("multiplicities");
        return b;
      });
    }
    if (tensor->parsed()) {
      const Loaded a = run.load(file), c = run.load(file2);
      const int status = run.emit("tensor", input_of(a) + "+" + input_of(c), run.field_of(a), "tensor", [&] {
        const Algebra t = tensor_product(a.algebra, c.algebra);
        Body b;
        b.add("dim", std::to_string(t.dim()));
        b.add("vertices", std::to_string(t.vertex_count()));
        b.add("domdim", to_string(dominant_dimension(t, o.cutoff).value));
        b.summary = a.doc.name + " (x) " + c.doc.name + ": dim " + b.get("dim");
        return b;
      });
      if (!out_path.empty()) {
        AlgebraDoc d = doc_from_algebra(tensor_product(a.algebra, c.algebra));
        d.name = a.doc.name + c.doc.name;
        std::ofstream f(out_path);
        if (!(f << serialize(d))) throw UnsupportedError("cannot write " + out_path);
      }
      return status;
    }
    if (verify->parsed()) {
      const Loaded l = run.load(v.algebra);
      std::string in = input_of(l);
      if (v.check == "kunneth") in += "+" + input_of(run.load(v.algebra2));
      return run.emit("verify", in, run.field_of(l), verify_name(v, o), [&] {
        Body b;
        add_report(b, run_check(run, v, l));
        return b;
      });
    }
    if (corpus_cmd->parsed()) {
      if (action == "list") {
        const auto entries = corpus();
        out << "RESULTS\ncommand = corpus-list\n";
        for (const auto& e : entries) {
          const Loaded l = load(e.doc, o.field);
          out << e.key << " = dim " << l.algebra.dim() << ", hash " << hex(doc_hash(e.doc)) << "\n";
        }
        out << "END\n";
        return 0;
      }
      if (action == "export") {
        if (dir.empty()) throw InputError("corpus export needs a directory");
        fs::create_directories(dir);
        for (const auto& e : corpus()) {
          std::ofstream f(fs::path(dir) / (e.key + ".alg"));
          if (!(f << serialize(e.doc))) throw UnsupportedError("cannot write into " + dir);
        }
        out << "RESULTS\ncommand = corpus-export\nentries = " << corpus().size() << "\nEND\n";
        return 0;
      }
      return corpus_run(run, out);
    }
    if (cache_cmd->parsed()) {
      if (!run.cache()) throw InputError("no catalog directory (use --catalog or DOMDIM_CATALOG)");
      Index n = 0;
      for (const auto& e : fs::directory_iterator(run.cache()->dir()))
        if (e.path().extension() == ".rec") {
          ++n;
          if (cache_action == "clear") fs::remove(e.path());
        }
      out << "RESULTS\ncommand = cache-" << cache_action << "\nrecords = " << n << "\nEND\n";
      return 0;
    }
  } catch (const InputError& e) {
    err << "input error: " << e.what() << "\n";
    return 2;
  } catch (const UnsupportedError& e) {
    err << "unsupported: " << e.what() << "\n";
    return 3;
  } catch (const InternalError& e) {
    err << "internal error: " << e.what() << "\n";
    return 4;
  } catch (const fs::filesystem_error& e) {
    err << "unsupported: " << e.what() << "\n";
    return 3;
  }
  return 0;
}

}  // namespace domdim
