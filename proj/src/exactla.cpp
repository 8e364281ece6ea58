#include "domdim/exactla.hpp"

#include <string>
#include <utility>

namespace domdim {

bool is_prime(Scalar n) {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  for (Scalar d = 3; d * d <= n; d += 2)
    if (n % d == 0) return false;
  return true;
}

PrimeField::PrimeField(Scalar p) : p_(p) {
  if (p < 2 || p >= (Scalar{1} << 31) || !is_prime(p))
    throw InputError("field modulus " + std::to_string(p) + " is not a prime below 2^31");
}

Scalar PrimeField::inv(Scalar a) const {
  Scalar r0 = p_, r1 = reduce(a);
  if (r1 == 0) throw InternalError("inverse of zero");
  Scalar s0 = 0, s1 = 1;
  while (r1 != 0) {
    const Scalar q = r0 / r1;
    r0 -= q * r1;
    std::swap(r0, r1);
    s0 -= q * s1;
    std::swap(s0, s1);
  }
  return reduce(s0);
}

namespace detail {

namespace {

// row_dst += factor * row_src over columns [from, cols)
inline void axpy(Scalar* dst, const Scalar* src, Scalar factor, Index from, Index cols, Scalar p) {
  for (Index j = from; j < cols; ++j) {
    if (src[j] == 0) continue;
    dst[j] = (dst[j] + factor * src[j]) % p;
  }
}

}  // namespace

RowEchelon rref_in_place(const PrimeField& field, RowMatrix& work) {
  const Scalar p = field.modulus();
  const Index rows = work.rows(), cols = work.cols();
  RowEchelon out;
  Index r = 0;
  for (Index c = 0; c < cols && r < rows; ++c) {
    Index sel = -1;
    for (Index i = r; i < rows; ++i)
      if (work(i, c) != 0) {
        sel = i;
        break;
      }
    if (sel < 0) continue;
    if (sel != r) work.row(sel).swap(work.row(r));
    Scalar* prow = work.row(r).data();
    const Scalar inv = field.inv(prow[c]);
    for (Index j = c; j < cols; ++j) prow[j] = (prow[j] * inv) % p;
    for (Index i = 0; i < rows; ++i) {
      if (i == r) continue;
      const Scalar f = work(i, c);
      if (f == 0) continue;
      axpy(work.row(i).data(), prow, p - f, c, cols, p);
    }
    out.pivots.push_back(c);
    ++r;
  }
  out.rank = r;
  out.form = work;
  return out;
}

Index rank_in_place(const PrimeField& field, RowMatrix& work) {
  const Scalar p = field.modulus();
  const Index rows = work.rows(), cols = work.cols();
  Index r = 0;
  for (Index c = 0; c < cols && r < rows; ++c) {
    Index sel = -1;
    for (Index i = r; i < rows; ++i)
      if (work(i, c) != 0) {
        sel = i;
        break;
      }
    if (sel < 0) continue;
    if (sel != r) work.row(sel).swap(work.row(r));
    Scalar* prow = work.row(r).data();
    const Scalar inv = field.inv(prow[c]);
    for (Index j = c; j < cols; ++j) prow[j] = (prow[j] * inv) % p;
    for (Index i = r + 1; i < rows; ++i) {
      const Scalar f = work(i, c);
      if (f == 0) continue;
      axpy(work.row(i).data(), prow, p - f, c, cols, p);
    }
    ++r;
  }
  return r;
}

Matrix product(const PrimeField& field, const Matrix& a, const Matrix& b) {
  if (a.cols() != b.rows()) throw InternalError("multiply: inner dimension mismatch");
  const Scalar p = field.modulus();
  const Scalar sq = (p - 1) * (p - 1);
  const Index chunk = sq == 0 ? a.cols() : std::max<Index>(1, static_cast<Index>((Scalar{1} << 62) / sq));
  if (a.cols() <= chunk) return field.reduce(a * b);
  Matrix acc = Matrix::Zero(a.rows(), b.cols());
  for (Index k = 0; k < a.cols(); k += chunk) {
    const Index len = std::min(chunk, a.cols() - k);
    acc = field.reduce(acc + field.reduce(a.middleCols(k, len) * b.middleRows(k, len)));
  }
  return acc;
}

}  // namespace detail

Matrix inverse(const PrimeField& field, const Matrix& m) {
  if (m.rows() != m.cols()) throw InternalError("inverse of a non-square matrix");
  auto x = solve(field, m, Matrix::Identity(m.rows(), m.rows()));
  if (!x || rank(field, m) != m.rows()) throw InternalError("inverse of a singular matrix");
  return *x;
}

Matrix left_inverse(const PrimeField& field, const Matrix& m) {
  // Pick independent rows of m; the square block they form is invertible.
  const std::vector<Index> rows = independent_columns(field, Matrix(m.transpose()));
  if (static_cast<Index>(rows.size()) != m.cols()) throw InternalError("left_inverse: rank deficient");
  Matrix sq(m.cols(), m.cols());
  for (std::size_t k = 0; k < rows.size(); ++k) sq.row(static_cast<Index>(k)) = m.row(rows[k]);
  const Matrix inv = inverse(field, sq);
  Matrix out = Matrix::Zero(m.cols(), m.rows());
  for (std::size_t k = 0; k < rows.size(); ++k) out.col(rows[k]) = inv.col(static_cast<Index>(k));
  return out;
}

std::vector<Index> extending_columns(const PrimeField& field, const Matrix& base, const Matrix& candidates) {
  Matrix joined(candidates.rows(), base.cols() + candidates.cols());
  joined << base, candidates;
  std::vector<Index> out;
  for (Index pc : independent_columns(field, joined))
    if (pc >= base.cols()) out.push_back(pc - base.cols());
  return out;
}

QuotientMap quotient_map(const PrimeField& field, const Matrix& sub, Index ambient) {
  QuotientMap q;
  if (sub.cols() == 0) {
    q.project = Matrix::Identity(ambient, ambient);
    q.lift = Matrix::Identity(ambient, ambient);
    return q;
  }
  const RowEchelon e = rref(field, Matrix(sub.transpose()));
  std::vector<bool> is_pivot(static_cast<std::size_t>(ambient), false);
  for (Index pc : e.pivots) is_pivot[static_cast<std::size_t>(pc)] = true;
  std::vector<Index> free;
  for (Index j = 0; j < ambient; ++j)
    if (!is_pivot[static_cast<std::size_t>(j)]) free.push_back(j);
  const Index c = static_cast<Index>(free.size());
  q.project = Matrix::Zero(c, ambient);
  q.lift = Matrix::Zero(ambient, c);
  for (Index k = 0; k < c; ++k) {
    q.project(k, free[static_cast<std::size_t>(k)]) = 1;
    q.lift(free[static_cast<std::size_t>(k)], k) = 1;
  }
  // A pivot coordinate e_pc is congruent to e_pc - row_k, which is supported on free coordinates.
  for (Index k = 0; k < e.rank; ++k) {
    const Index pc = e.pivots[static_cast<std::size_t>(k)];
    for (Index f = 0; f < c; ++f) q.project(f, pc) = field.neg(e.form(k, free[static_cast<std::size_t>(f)]));
  }
  return q;
}

Matrix kronecker(const PrimeField& field, const Matrix& a, const Matrix& b) {
  Matrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Index i = 0; i < a.rows(); ++i)
    for (Index j = 0; j < a.cols(); ++j) out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = field.reduce(a(i, j) * b);
  return out;
}

}  // namespace domdim
