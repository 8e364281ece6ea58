#pragma once

// The .alg text format, the built-in corpus and the content-addressed invariant cache.

#include <cstdint>
#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "domdim/module.hpp"

namespace domdim {

inline constexpr const char* kEngineVersion = "domdim-1.0.0";
inline constexpr int kFormatVersion = 1;

struct ModuleDoc {
  std::string name;
  std::vector<Index> dims;  // per vertex (quiver mode) or a single total (table mode)
  std::vector<std::pair<std::string, Matrix>> matrices;  // per arrow or per basis label
};

struct DecompositionDoc {
  std::string name;
  std::vector<std::string> summands;
};

struct TableDoc {
  std::vector<std::string> labels;
  std::vector<std::tuple<std::string, std::string, std::string, Scalar>> products;  // e_a e_b has coef on e_c
  Vector unit;
  std::vector<Vector> idempotents;
};

struct AlgebraDoc {
  enum class Mode { quiver, table };
  int format = kFormatVersion;
  std::string name;
  Scalar field = PrimeField::kDefaultModulus;
  Mode mode = Mode::quiver;
  QuiverPresentation quiver;
  TableDoc table;
  std::vector<ModuleDoc> modules;
  std::vector<DecompositionDoc> decompositions;
  std::vector<std::pair<std::string, std::string>> expect;  // fixture expectations
};

/// Throws InputError "line L, column C: ..." on malformed text.
AlgebraDoc parse_doc(const std::string& text);
std::string serialize(const AlgebraDoc& doc);
/// FNV-1a of the canonical serialization.
std::uint64_t doc_hash(const AlgebraDoc& doc);
/// Table-mode document for an algebra.
AlgebraDoc doc_from_algebra(const Algebra& a);

struct Loaded {
  AlgebraDoc doc;
  Algebra algebra;
  std::vector<ModuleRep> modules;  // declared modules, in order
};

/// Builds and validates the algebra and every declared module. `field` overrides the document's modulus.
Loaded load(const AlgebraDoc& doc, std::optional<Scalar> field = std::nullopt);
Loaded load_file(const std::filesystem::path& path, std::optional<Scalar> field = std::nullopt);

/// Resolves "regular", "dual", "S<v>", "P<v>", "I<v>" (S, P, I on one vertex), declared
/// modules, declared decompositions and sums "X+Y+..." to a direct sum.
DirectSum resolve(const Loaded& l, const std::string& spec);
ModuleRep resolve_module(const Loaded& l, const std::string& spec);

/// Basic generator-cogenerator: the P(i) and the I(j) not isomorphic to any P(i).
std::vector<std::string> basic_gen_cogen(const Algebra& a);

struct CorpusEntry {
  std::string key;
  AlgebraDoc doc;
};
/// k, k2, k3, k4, ka2, ka3, aus, k2k2, ka2k2.
std::vector<CorpusEntry> corpus();
std::optional<AlgebraDoc> corpus_doc(const std::string& key);

struct InvariantRecord {
  std::string input_hash;
  std::string name;  // check-id or invariant name plus arguments
  int cutoff = 0;
  Scalar field = 0;
  std::uint64_t seed = 0;
  std::string version = kEngineVersion;
  std::string payload;
};

class Cache {
 public:
  /// Throws UnsupportedError when the directory cannot be created or written.
  explicit Cache(std::filesystem::path dir);
  /// Hit only when every key field matches; corrupt records are ignored with a warning.
  std::optional<std::string> get(const InvariantRecord& key, std::string* warning = nullptr) const;
  void put(const InvariantRecord& rec) const;
  std::filesystem::path path_of(const InvariantRecord& key) const;
  const std::filesystem::path& dir() const { return dir_; }

 private:
  std::filesystem::path dir_;
};

}  // namespace domdim
