#include <doctest.h>

#include <atomic>
#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>
#include <thread>

#include "domdim/catalog.hpp"
#include "domdim/cli.hpp"
#include "domdim/hash.hpp"
#include "domdim/homology.hpp"

using namespace domdim;
namespace fs = std::filesystem;

namespace {

const char* kAusText = R"(format 1
name aus
field 32003
mode quiver

[quiver]
vertex 1 2
arrow alpha 1 2
arrow beta 2 1
relation 1 beta.alpha
bound 2

[module X]
dims 1 1
arrow alpha 1

[decomposition G]
summands P1 P2 I2
)";

fs::path temp_dir(const std::string& tag) {
  static std::mt19937_64 rng(std::random_device{}());
  fs::path p = fs::temp_directory_path() / ("domdim-" + tag + "-" + hex(rng()));
  fs::create_directories(p);
  return p;
}

struct Run {
  int code;
  std::string out, err;
};

Run cli(const std::vector<std::string>& args) {
  std::ostringstream o, e;
  const int c = run_cli(args, o, e);
  return {c, o.str(), e.str()};
}

std::string error_of(const std::string& text) {
  try {
    parse_doc(text);
  } catch (const InputError& e) {
    return e.what();
  }
  return {};
}

}  // namespace

TEST_CASE("parse, serialize and hash") {
  const AlgebraDoc d = parse_doc(kAusText);
  CHECK(d.name == "aus");
  CHECK(d.quiver.arrows.size() == 2);
  const std::string s = serialize(d);
  CHECK(serialize(parse_doc(s)) == s);
  CHECK(doc_hash(parse_doc(s)) == doc_hash(d));
  const Loaded l = load(d);
  CHECK(l.algebra.dim() == 5);
  CHECK(l.modules.at(0).dim() == 2);
  CHECK(is_isomorphic(l.modules[0], injective(l.algebra, 1)).isomorphic);
  for (const auto& e : corpus()) {
    const std::string t = serialize(e.doc);
    CHECK(doc_hash(parse_doc(t)) == doc_hash(e.doc));
    const Loaded le = load(e.doc);
    // table-mode re-export gives an algebra with the same invariants
    const Loaded lt = load(doc_from_algebra(le.algebra));
    CHECK(lt.algebra.dim() == le.algebra.dim());
    CHECK(to_string(dominant_dimension(lt.algebra, 6).value) == to_string(dominant_dimension(le.algebra, 6).value));
  }
  CHECK(load(d, 7).algebra.field().modulus() == 7);
}

TEST_CASE("checked-in corpus files match the built-in corpus") {
  for (const auto& e : corpus()) {
    std::ifstream f(fs::path(DOMDIM_CORPUS_DIR) / (e.key + ".alg"));
    REQUIRE(f.good());
    std::stringstream text;
    text << f.rdbuf();
    CHECK_MESSAGE(text.str() == serialize(e.doc), e.key);
    CHECK(load_file(fs::path(DOMDIM_CORPUS_DIR) / (e.key + ".alg")).algebra.dim() == load(e.doc).algebra.dim());
  }
}

TEST_CASE("parse errors carry line and column") {
  CHECK(error_of("format 1\nname x\nmode quiver\n[quiver]\nvertex 1\narrow a 1 2\n").find("line 6") == 0);
  CHECK(error_of("format 1\nmode quiver\n[quiver]\nvertex 1\nbound x\n") == "line 5, column 7: expected an integer, got 'x'");
  CHECK(error_of("format 1\nmode quiver\n[wat]\n").find("line 3") == 0);
  CHECK(error_of("name x\n").find("missing 'format'") != std::string::npos);
  CHECK(!error_of(std::string(kAusText) + "[module Y]\ndims 1 1\narrow alpha 1 2\n").empty());
  CHECK(!error_of(std::string(kAusText) + "[module Y]\narrow alpha 1\n").empty());
}

TEST_CASE("rejected inputs") {
  // a relation that breaks the module condition
  AlgebraDoc bad = parse_doc(std::string(kAusText) + "[module Y]\ndims 1 1\narrow alpha 1\narrow beta 1\n");
  CHECK_THROWS_AS(load(bad), InputError);
  // non-associative table names the triple
  const char* table = "format 1\nname t\nmode table\n[table]\nlabels e x y\n"
                      "product e e e 1\nproduct e x x 1\nproduct x e x 1\nproduct e y y 1\nproduct y e y 1\n"
                      "product x x y 1\nproduct x y x 1\nproduct y x y 1\nunit 1 0 0\nidempotent 1 0 0\n";
  std::string msg;
  try {
    load(parse_doc(table));
  } catch (const InputError& e) {
    msg = e.what();
  }
  CHECK(msg.find("associativity fails for basis triple") != std::string::npos);
  // field that is not prime
  CHECK_THROWS_AS(load(parse_doc(kAusText), 9), InputError);
}

TEST_CASE("resolution of module names") {
  const Loaded l = load(parse_doc(kAusText));
  CHECK(resolve(l, "G").summands.size() == 3);
  CHECK(resolve(l, "P1+S2").module.dim() == 4);
  CHECK(resolve_module(l, "regular").dim() == 5);
  CHECK(resolve_module(l, "dual").dim() == 5);
  CHECK_THROWS_AS(resolve_module(l, "S9"), InputError);
  CHECK_THROWS_AS(resolve(l, "P1++P2"), InputError);
  CHECK(basic_gen_cogen(l.algebra) == std::vector<std::string>{"P1", "P2", "I2"});
}

TEST_CASE("cache") {
  const fs::path dir = temp_dir("cache");
  const Cache c(dir);
  InvariantRecord r{"abc", "domdim", 6, 32003, 0, kEngineVersion, "value = 2\n"};
  CHECK_FALSE(c.get(r).has_value());
  c.put(r);
  CHECK(c.get(r) == std::optional<std::string>("value = 2\n"));
  InvariantRecord bumped = r;
  bumped.version = "domdim-9.9.9";
  CHECK_FALSE(c.get(bumped).has_value());
  InvariantRecord other = r;
  other.cutoff = 7;
  CHECK_FALSE(c.get(other).has_value());
  other = r;
  other.seed = 1;
  CHECK_FALSE(c.get(other).has_value());

  {
    std::ofstream f(c.path_of(r), std::ios::trunc);
    f << "garbage";
  }
  std::string warning;
  CHECK_FALSE(c.get(r, &warning).has_value());
  CHECK_FALSE(warning.empty());

  std::vector<std::thread> ts;
  std::atomic<int> failures{0};
  for (int t = 0; t < 8; ++t)
    ts.emplace_back([&, t] {
      for (int i = 0; i < 50; ++i) {
        InvariantRecord x = r;
        x.name = "n" + std::to_string(i % 5);
        x.payload = "payload " + x.name + "\n";
        c.put(x);
        const auto got = c.get(x);
        if (!got || *got != x.payload) ++failures;
      }
      (void)t;
    });
  for (auto& t : ts) t.join();
  CHECK(failures == 0);
  fs::remove_all(dir);
}

TEST_CASE("cli exit codes and output") {
  const fs::path dir = temp_dir("cli");
  const fs::path file = dir / "aus.alg";
  {
    std::ofstream f(file);
    f << kAusText;
  }
  const std::string cat = (dir / "cat").string();

  Run r = cli({"--no-cache", "domdim", file.string()});
  CHECK(r.code == 0);
  CHECK(r.out.find("value = 2\n") != std::string::npos);
  CHECK(r.out.rfind("RESULTS\n", 0) == 0);

  r = cli({"--no-cache", "--machine", "ext", "k2", "S", "S"});
  CHECK(r.code == 0);
  CHECK(r.out.find("dims = 1,1,1,1,1,1,1\n") != std::string::npos);
  CHECK(r.out.substr(r.out.size() - 4) == "END\n");

  CHECK(cli({"--no-cache", "domdim", (dir / "missing.alg").string()}).code == 2);
  CHECK(cli({"--no-cache", "ext", file.string(), "S7", "S1"}).code == 2);
  CHECK(cli({"--no-cache", "--budget-dim", "10", "verify", "remark32", "--algebra", "aus"}).code == 3);
  CHECK(cli({"--no-cache", "verify", "muller", "--algebra", "ka2", "--module", "M=regular"}).code == 2);
  CHECK(cli({"--no-cache", "verify", "muller", "--algebra", "aus", "--module", "G"}).code == 0);
  CHECK(cli({"--no-cache", "verify", "diamond", "--algebra", "ka2"}).code == 1);
  CHECK(cli({"--no-cache", "verify", "diamond", "--algebra", "k2"}).code == 0);
  CHECK(cli({"--no-cache", "nosuch"}).code == 2);

  // cold and warm runs print the same RESULTS block
  const Run cold = cli({"--catalog", cat, "--machine", "domdim", file.string()});
  const Run warm = cli({"--catalog", cat, "--machine", "domdim", file.string()});
  CHECK(cold.code == 0);
  CHECK(cold.out == warm.out);
  const Run stats = cli({"--catalog", cat, "cache", "stats"});
  CHECK(stats.out.find("records = 1") != std::string::npos);
  fs::remove_all(dir);
}
