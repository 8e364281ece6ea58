#pragma once

// Exact dense linear algebra over a prime field.
//
// Matrices are plain Eigen matrices of 64-bit integers whose entries are kept
// reduced to [0, p). The modulus travels separately in a PrimeField value, so
// every routine takes the field as its first argument. Pivoting is fully
// deterministic: leftmost pivot column, topmost available row, free variables
// set to zero.

#include <Eigen/Core>

#include <cstdint>
#include <optional>
#include <vector>

#include "domdim/errors.hpp"

namespace domdim {

using Scalar = std::int64_t;
using Index = Eigen::Index;
using Matrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;
using Vector = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;
using RowMatrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;

class PrimeField {
 public:
  static constexpr Scalar kDefaultModulus = 32003;

  /// Throws InputError unless 2 <= p < 2^31 and p is prime.
  explicit PrimeField(Scalar p = kDefaultModulus);

  Scalar modulus() const { return p_; }

  Scalar reduce(Scalar x) const {
    Scalar r = x % p_;
    return r < 0 ? r + p_ : r;
  }
  Scalar add(Scalar a, Scalar b) const { return reduce(a + b); }
  Scalar sub(Scalar a, Scalar b) const { return reduce(a - b); }
  Scalar mul(Scalar a, Scalar b) const { return reduce(a * b); }
  Scalar neg(Scalar a) const { return reduce(-a); }
  /// Multiplicative inverse; throws InternalError on zero.
  Scalar inv(Scalar a) const;

  template <typename Derived>
  Matrix reduce(const Eigen::MatrixBase<Derived>& m) const {
    return m.unaryExpr([this](Scalar x) { return reduce(x); });
  }

  friend bool operator==(const PrimeField& a, const PrimeField& b) { return a.p_ == b.p_; }
  friend bool operator!=(const PrimeField& a, const PrimeField& b) { return a.p_ != b.p_; }

 private:
  Scalar p_;
};

bool is_prime(Scalar n);

struct RowEchelon {
  Matrix form;                 // reduced row-echelon form, same shape as the input
  Index rank = 0;
  std::vector<Index> pivots;   // pivot column of row k, for k < rank
};

namespace detail {
RowEchelon rref_in_place(const PrimeField& field, RowMatrix& work);
Index rank_in_place(const PrimeField& field, RowMatrix& work);
Matrix product(const PrimeField& field, const Matrix& a, const Matrix& b);
}  // namespace detail

template <typename Derived>
RowEchelon rref(const PrimeField& field, const Eigen::MatrixBase<Derived>& m) {
  RowMatrix work = field.reduce(m);
  return detail::rref_in_place(field, work);
}

/// Rank by forward elimination only (cheaper than a full rref).
template <typename Derived>
Index rank(const PrimeField& field, const Eigen::MatrixBase<Derived>& m) {
  if (m.rows() == 0 || m.cols() == 0) return 0;
  RowMatrix work = field.reduce(m);
  return detail::rank_in_place(field, work);
}

/// Reduced matrix product a*b (safe against overflow for every admissible p).
template <typename DA, typename DB>
Matrix multiply(const PrimeField& field, const Eigen::MatrixBase<DA>& a,
                const Eigen::MatrixBase<DB>& b) {
  return detail::product(field, a.derived(), b.derived());
}

/// One solution X of a*X = b, free variables zero; nullopt when inconsistent.
template <typename DA, typename DB>
std::optional<Matrix> solve(const PrimeField& field, const Eigen::MatrixBase<DA>& a,
                            const Eigen::MatrixBase<DB>& b) {
  if (a.rows() != b.rows()) throw InternalError("solve: row count mismatch");
  const Index n = a.cols();
  Matrix aug(a.rows(), n + b.cols());
  aug << a, b;
  const RowEchelon e = rref(field, aug);
  Matrix x = Matrix::Zero(n, b.cols());
  for (Index k = 0; k < e.rank; ++k) {
    const Index pc = e.pivots[static_cast<std::size_t>(k)];
    if (pc >= n) return std::nullopt;
    x.row(pc) = e.form.row(k).tail(b.cols());
  }
  return x;
}

/// Columns form a basis of {v : m v = 0}; one column per free variable.
template <typename Derived>
Matrix nullspace(const PrimeField& field, const Eigen::MatrixBase<Derived>& m) {
  const RowEchelon e = rref(field, m);
  const Index n = m.cols();
  std::vector<bool> is_pivot(static_cast<std::size_t>(n), false);
  for (Index pc : e.pivots) is_pivot[static_cast<std::size_t>(pc)] = true;
  Matrix basis = Matrix::Zero(n, n - e.rank);
  Index col = 0;
  for (Index f = 0; f < n; ++f) {
    if (is_pivot[static_cast<std::size_t>(f)]) continue;
    basis(f, col) = 1;
    for (Index k = 0; k < e.rank; ++k)
      basis(e.pivots[static_cast<std::size_t>(k)], col) = field.neg(e.form(k, f));
    ++col;
  }
  return basis;
}

/// Indices of a maximal set of linearly independent columns (leftmost first).
template <typename Derived>
std::vector<Index> independent_columns(const PrimeField& field, const Eigen::MatrixBase<Derived>& m) {
  return rref(field, m).pivots;
}

/// The columns of m at independent_columns(m): a basis of the column space.
template <typename Derived>
Matrix column_basis(const PrimeField& field, const Eigen::MatrixBase<Derived>& m) {
  const std::vector<Index> piv = independent_columns(field, m);
  Matrix out(m.rows(), static_cast<Index>(piv.size()));
  for (std::size_t k = 0; k < piv.size(); ++k) out.col(static_cast<Index>(k)) = field.reduce(m.col(piv[k]));
  return out;
}

/// Inverse of a square matrix; throws InternalError when singular.
Matrix inverse(const PrimeField& field, const Matrix& m);

/// A matrix L with L*m = I, for m of full column rank.
Matrix left_inverse(const PrimeField& field, const Matrix& m);

/// Columns of `candidates` that extend the column span of `base`, chosen greedily left to right.
std::vector<Index> extending_columns(const PrimeField& field, const Matrix& base, const Matrix& candidates);

/// Quotient of k^n by the column span of `sub`: returns Q (c x n) with ker Q = span(sub)
/// and R (n x c) with Q R = I. The quotient coordinates are the non-pivot coordinates.
struct QuotientMap {
  Matrix project;
  Matrix lift;
};
QuotientMap quotient_map(const PrimeField& field, const Matrix& sub, Index ambient);

/// Kronecker product a (x) b, index (i,j) -> i*b.rows()+j.
Matrix kronecker(const PrimeField& field, const Matrix& a, const Matrix& b);

inline bool is_zero(const Matrix& m) { return m.size() == 0 || (m.array() == 0).all(); }

}  // namespace domdim
