#pragma once

// Finite-dimensional basic elementary algebras given by structure constants.
//
// Conventions used throughout the engine:
//  * An algebra of dimension n stores one left-multiplication matrix L_a per
//    basis element; column b of L_a holds the coordinates of e_a * e_b.
//  * Paths in a quiver are written in traversal order ("a.b" = a, then b) and
//    the product of paths is composition: p * q = "q, then p". With this rule
//    left modules are covariant quiver representations and the indecomposable
//    projective P(i) = A e_i is spanned by the paths starting at vertex i.
//  * A radical element r is "typed" (s, t) when r = e_s r e_t.

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "domdim/exactla.hpp"

namespace domdim {

struct Arrow {
  std::string name;
  std::string source;
  std::string target;
};

struct PathTerm {
  Scalar coefficient = 1;
  std::vector<std::string> arrows;  // traversal order
};

using Relation = std::vector<PathTerm>;

struct QuiverPresentation {
  std::vector<std::string> vertices;
  std::vector<Arrow> arrows;
  std::vector<Relation> relations;
  int nilpotency_bound = 0;  // every path longer than this lies in the relation ideal
};

std::string to_string(const Relation& r);

/// Basis of a quiver-built algebra: element b is the path with arrow indices
/// arrows[b] (traversal order), or the trivial path at vertex[b] when empty.
struct PathBasis {
  std::vector<int> vertex;               // source vertex of the path
  std::vector<std::vector<int>> arrows;
};

/// Jacobson radical with a basis adapted to the idempotent decomposition.
struct RadicalData {
  enum class Source { quiver, trace_form };

  Source source = Source::trace_form;
  Matrix basis;                      // dim x r; column k is typed (left[k], right[k])
  std::vector<int> left;
  std::vector<int> right;
  std::vector<Index> generators;     // columns whose span complements rad^2 blockwise
  Matrix adapted;                    // [e_1 .. e_k | basis], invertible
  Matrix adapted_inverse;
};

class Algebra {
 public:
  /// Table-mode construction. Validates associativity, the unit, the idempotents
  /// and the basic-elementary condition; the radical comes from the trace form.
  static Algebra from_table(PrimeField field, std::vector<std::string> labels, std::vector<Matrix> left_mult,
                            Vector unit, std::vector<Vector> idempotents, std::string name = {});

  /// Construction with a radical basis already known (quiver builds, opposite algebras).
  static Algebra with_radical(PrimeField field, std::vector<std::string> labels, std::vector<Matrix> left_mult,
                              Vector unit, std::vector<Vector> idempotents, RadicalData radical,
                              std::optional<QuiverPresentation> presentation,
                              std::optional<PathBasis> paths, std::string name = {});

  const PrimeField& field() const;
  Index dim() const;
  const std::string& name() const;
  const std::vector<std::string>& labels() const;
  const Matrix& left_mult(Index basis) const;
  /// Right multiplication by basis element b: column c holds e_c * e_b.
  const Matrix& right_mult(Index basis) const;
  Matrix left_mult(const Vector& x) const;
  Matrix right_mult(const Vector& x) const;
  const Vector& unit() const;
  const std::vector<Vector>& idempotents() const;
  int vertex_count() const;
  const std::optional<QuiverPresentation>& presentation() const;
  const std::optional<PathBasis>& path_basis() const;

  Vector multiply(const Vector& x, const Vector& y) const;
  Vector basis_vector(Index b) const;

  /// Throws UnsupportedError when the radical could not be computed (trace form with p <= dim).
  const RadicalData& radical() const;
  bool has_radical() const;

  /// Structure-constant equality (same field, basis, products, unit and idempotents).
  friend bool operator==(const Algebra& a, const Algebra& b);
  friend bool operator!=(const Algebra& a, const Algebra& b) { return !(a == b); }

 private:
  struct Data;
  explicit Algebra(std::shared_ptr<const Data> d) : d_(std::move(d)) {}
  std::shared_ptr<const Data> d_;
};

/// Quotient of the path algebra by the ideal generated by the relations, computed
/// length by length in the truncated path space. Throws InputError naming the
/// offending relation, or when the arrow ideal is not nilpotent within the bound.
Algebra build_from_quiver(const QuiverPresentation& pres, const PrimeField& field, std::string name = {});

/// Radical of the trace form T(x, y) = tr(L_x L_y). Needs p > dim.
Matrix trace_form_radical(const Algebra& a);

/// Radical basis (columns); quiver algebras answer from path lengths, others from the trace form.
Matrix radical(const Algebra& a);

Algebra opposite(const Algebra& a);

/// Basis (i, j) -> i * dim(b) + j, idempotents e_i (x) f_j in i-major order.
Algebra tensor_product(const Algebra& a, const Algebra& b);

struct Enveloping {
  Algebra algebra;                   // a (x) a^op
  std::vector<Matrix> action_on_a;   // x (x) y acts on a by u -> x u y
};
Enveloping enveloping(const Algebra& a);

/// One-dimensional algebra k.
Algebra ground_algebra(const PrimeField& field);

/// Failing identity, if any, among associativity / unit / idempotent axioms.
std::optional<std::string> check_algebra_axioms(const PrimeField& field, const std::vector<std::string>& labels,
                                                const std::vector<Matrix>& left_mult, const Vector& unit,
                                                const std::vector<Vector>& idempotents);

/// Search for an isomorphism from a quiver-built algebra onto `target`: vertices
/// are matched by permutation, arrows sent to seeded random elements of the
/// matching radical blocks, and the induced map is checked to be a bijective
/// algebra homomorphism. Returns the map (target coords x source coords).
std::optional<Matrix> presentation_isomorphism(const Algebra& source, const Algebra& target,
                                               std::uint64_t seed = 0, int trials = 8);

/// B subset A with the same identity.
struct Extension {
  Algebra sub;
  Algebra amb;
  Matrix embed;  // dim(amb) x dim(sub)
};

/// Throws InputError unless embed is injective, unital and multiplicative.
void check_extension(const Extension& ext);
Extension ground_extension(const Algebra& a);
Extension identity_extension(const Algebra& a);

}  // namespace domdim
