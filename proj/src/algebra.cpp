#include "domdim/algebra.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <random>
#include <sstream>
#include <utility>

namespace domdim {

struct Algebra::Data {
  PrimeField field;
  std::string name;
  std::vector<std::string> labels;
  std::vector<Matrix> left;
  std::vector<Matrix> right;
  Vector unit;
  std::vector<Vector> idempotents;
  std::optional<QuiverPresentation> presentation;
  std::optional<PathBasis> paths;
  std::optional<RadicalData> radical;
  std::string radical_error;
};

std::string to_string(const Relation& r) {
  std::ostringstream os;
  for (std::size_t k = 0; k < r.size(); ++k) {
    if (k) os << ", ";
    os << r[k].coefficient << ' ';
    for (std::size_t j = 0; j < r[k].arrows.size(); ++j) os << (j ? "." : "") << r[k].arrows[j];
  }
  return os.str();
}

namespace {

std::vector<Matrix> right_from_left(const std::vector<Matrix>& left) {
  const Index n = static_cast<Index>(left.size());
  std::vector<Matrix> right(left.size(), Matrix::Zero(n, n));
  for (Index a = 0; a < n; ++a)
    for (Index b = 0; b < n; ++b) right[static_cast<std::size_t>(b)].col(a) = left[static_cast<std::size_t>(a)].col(b);
  return right;
}

Matrix combine(const PrimeField& field, const std::vector<Matrix>& mats, const Vector& x) {
  Matrix out = Matrix::Zero(mats.empty() ? 0 : mats[0].rows(), mats.empty() ? 0 : mats[0].cols());
  for (std::size_t k = 0; k < mats.size(); ++k)
    if (x(static_cast<Index>(k)) != 0) out = field.reduce(out + x(static_cast<Index>(k)) * mats[k]);
  return out;
}

// Columns of `rad` split into blocks e_s rad e_t; generators complement rad^2 per block.
RadicalData type_radical(const PrimeField& field, const std::vector<Matrix>& left, const std::vector<Matrix>& right,
                         const std::vector<Vector>& idem, const Matrix& rad) {
  const Index n = static_cast<Index>(left.size());
  const int k = static_cast<int>(idem.size());
  RadicalData out;
  std::vector<Matrix> le, re;
  for (const auto& e : idem) {
    le.push_back(combine(field, left, e));
    re.push_back(combine(field, right, e));
  }
  std::vector<Matrix> blocks;
  std::vector<std::pair<int, int>> types;
  Index total = 0;
  for (int s = 0; s < k; ++s)
    for (int t = 0; t < k; ++t) {
      const Matrix proj = multiply(field, le[static_cast<std::size_t>(s)], multiply(field, re[static_cast<std::size_t>(t)], rad));
      Matrix b = rad.cols() ? column_basis(field, proj) : Matrix(n, 0);
      total += b.cols();
      blocks.push_back(b);
      types.emplace_back(s, t);
    }
  if (total != rad.cols()) throw InputError("idempotents do not decompose the radical (incomplete idempotent set)");
  out.basis.resize(n, total);
  Index col = 0;
  for (std::size_t q = 0; q < blocks.size(); ++q)
    for (Index c = 0; c < blocks[q].cols(); ++c) {
      out.basis.col(col++) = blocks[q].col(c);
      out.left.push_back(types[q].first);
      out.right.push_back(types[q].second);
    }
  // rad^2 per block: products r_i r_j with right(r_i) = left(r_j)
  std::vector<std::vector<Vector>> sq(blocks.size());
  for (Index i = 0; i < total; ++i)
    for (Index j = 0; j < total; ++j) {
      if (out.right[static_cast<std::size_t>(i)] != out.left[static_cast<std::size_t>(j)]) continue;
      Vector prod = multiply(field, combine(field, left, out.basis.col(i)), out.basis.col(j));
      if (is_zero(prod)) continue;
      sq[static_cast<std::size_t>(out.left[static_cast<std::size_t>(i)] * k + out.right[static_cast<std::size_t>(j)])].push_back(prod);
    }
  col = 0;
  for (std::size_t q = 0; q < blocks.size(); ++q) {
    Matrix base(n, static_cast<Index>(sq[q].size()));
    for (std::size_t c = 0; c < sq[q].size(); ++c) base.col(static_cast<Index>(c)) = sq[q][c];
    for (Index g : extending_columns(field, base, blocks[q])) out.generators.push_back(col + g);
    col += blocks[q].cols();
  }
  out.adapted.resize(n, k + total);
  for (int s = 0; s < k; ++s) out.adapted.col(s) = idem[static_cast<std::size_t>(s)];
  out.adapted.rightCols(total) = out.basis;
  if (k + total != n || rank(field, out.adapted) != n)
    throw InputError("algebra is not basic elementary: dim A/rad A = " + std::to_string(n - total) + " but " +
                     std::to_string(k) + " idempotents were given");
  out.adapted_inverse = inverse(field, out.adapted);
  return out;
}

Matrix trace_radical_of(const PrimeField& field, const std::vector<Matrix>& left) {
  const Index n = static_cast<Index>(left.size());
  if (field.modulus() <= n)
    throw UnsupportedError("trace-form radical needs p > dim (p = " + std::to_string(field.modulus()) +
                           ", dim = " + std::to_string(n) + ")");
  Matrix v(n * n, n), w(n * n, n);
  for (Index a = 0; a < n; ++a) {
    const Matrix& la = left[static_cast<std::size_t>(a)];
    v.col(a) = Eigen::Map<const Vector>(la.data(), n * n);
    const Matrix lt = la.transpose();
    w.col(a) = Eigen::Map<const Vector>(lt.data(), n * n);
  }
  const Matrix gram = multiply(field, Matrix(v.transpose()), w);
  return nullspace(field, gram);
}

}  // namespace

std::optional<std::string> check_algebra_axioms(const PrimeField& field, const std::vector<std::string>& labels,
                                                const std::vector<Matrix>& left_mult, const Vector& unit,
                                                const std::vector<Vector>& idempotents) {
  const Index n = static_cast<Index>(left_mult.size());
  auto lab = [&](Index i) { return i < static_cast<Index>(labels.size()) ? labels[static_cast<std::size_t>(i)] : std::to_string(i); };
  if (unit.size() != n) return "unit has wrong length";
  for (const auto& m : left_mult)
    if (m.rows() != n || m.cols() != n) return std::string("multiplication matrix has wrong shape");
  // L_a L_b = sum_c (e_a e_b)_c L_c, compared column by column
  Matrix stacked(n * n, n);
  for (Index c = 0; c < n; ++c) stacked.col(c) = Eigen::Map<const Vector>(left_mult[static_cast<std::size_t>(c)].data(), n * n);
  for (Index a = 0; a < n; ++a) {
    const Matrix& la = left_mult[static_cast<std::size_t>(a)];
    const Matrix rhs = multiply(field, stacked, la);
    for (Index b = 0; b < n; ++b) {
      const Matrix lhs = multiply(field, la, left_mult[static_cast<std::size_t>(b)]);
      for (Index c = 0; c < n; ++c)
        for (Index r = 0; r < n; ++r)
          if (lhs(r, c) != rhs(c * n + r, b))
            return "associativity fails for basis triple (" + lab(a) + ", " + lab(b) + ", " + lab(c) + ")";
    }
  }
  const Matrix lu = combine(field, left_mult, unit);
  if (lu != Matrix::Identity(n, n)) return std::string("unit is not a left identity");
  const Matrix ru = combine(field, right_from_left(left_mult), unit);
  if (ru != Matrix::Identity(n, n)) return std::string("unit is not a right identity");
  Vector sum = Vector::Zero(n);
  for (std::size_t i = 0; i < idempotents.size(); ++i) {
    if (idempotents[i].size() != n) return "idempotent " + std::to_string(i + 1) + " has wrong length";
    const Matrix li = combine(field, left_mult, idempotents[i]);
    for (std::size_t j = 0; j < idempotents.size(); ++j) {
      const Vector prod = multiply(field, li, idempotents[j]);
      const Vector expect = i == j ? idempotents[i] : Vector(Vector::Zero(n));
      if (prod != expect)
        return "idempotents " + std::to_string(i + 1) + ", " + std::to_string(j + 1) + " are not orthogonal idempotents";
    }
    sum = field.reduce(sum + idempotents[i]);
  }
  if (sum != field.reduce(unit)) return std::string("idempotents do not sum to the unit");
  return std::nullopt;
}

Algebra Algebra::from_table(PrimeField field, std::vector<std::string> labels, std::vector<Matrix> left_mult,
                            Vector unit, std::vector<Vector> idempotents, std::string name) {
  for (auto& m : left_mult) m = field.reduce(m);
  unit = field.reduce(unit);
  for (auto& e : idempotents) e = field.reduce(e);
  if (labels.size() != left_mult.size()) throw InputError("label count differs from dimension");
  if (idempotents.empty() && !left_mult.empty()) throw InputError("table-mode algebra needs its idempotents listed");
  if (auto bad = check_algebra_axioms(field, labels, left_mult, unit, idempotents)) throw InputError(*bad);
  auto d = std::make_shared<Data>(Data{field, std::move(name), std::move(labels), std::move(left_mult), {}, std::move(unit),
                                       std::move(idempotents), std::nullopt, std::nullopt, std::nullopt, {}});
  d->right = right_from_left(d->left);
  try {
    const Matrix rad = trace_radical_of(field, d->left);
    RadicalData rd = type_radical(field, d->left, d->right, d->idempotents, rad);
    rd.source = RadicalData::Source::trace_form;
    d->radical = std::move(rd);
  } catch (const UnsupportedError& e) {
    d->radical_error = e.what();
  }
  return Algebra(std::move(d));
}

Algebra Algebra::with_radical(PrimeField field, std::vector<std::string> labels, std::vector<Matrix> left_mult,
                              Vector unit, std::vector<Vector> idempotents, RadicalData radical,
                              std::optional<QuiverPresentation> presentation, std::optional<PathBasis> paths,
                              std::string name) {
  auto d = std::make_shared<Data>(Data{field, std::move(name), std::move(labels), std::move(left_mult), {}, std::move(unit),
                                       std::move(idempotents), std::move(presentation), std::move(paths),
                                       std::move(radical), {}});
  d->right = right_from_left(d->left);
  return Algebra(std::move(d));
}

const PrimeField& Algebra::field() const { return d_->field; }
Index Algebra::dim() const { return static_cast<Index>(d_->left.size()); }
const std::string& Algebra::name() const { return d_->name; }
const std::vector<std::string>& Algebra::labels() const { return d_->labels; }
const Matrix& Algebra::left_mult(Index b) const { return d_->left.at(static_cast<std::size_t>(b)); }
const Matrix& Algebra::right_mult(Index b) const { return d_->right.at(static_cast<std::size_t>(b)); }
Matrix Algebra::left_mult(const Vector& x) const { return combine(d_->field, d_->left, x); }
Matrix Algebra::right_mult(const Vector& x) const { return combine(d_->field, d_->right, x); }
const Vector& Algebra::unit() const { return d_->unit; }
const std::vector<Vector>& Algebra::idempotents() const { return d_->idempotents; }
int Algebra::vertex_count() const { return static_cast<int>(d_->idempotents.size()); }
const std::optional<QuiverPresentation>& Algebra::presentation() const { return d_->presentation; }
const std::optional<PathBasis>& Algebra::path_basis() const { return d_->paths; }

Vector Algebra::multiply(const Vector& x, const Vector& y) const {
  return domdim::multiply(d_->field, left_mult(x), y);
}

Vector Algebra::basis_vector(Index b) const {
  Vector v = Vector::Zero(dim());
  v(b) = 1;
  return v;
}

const RadicalData& Algebra::radical() const {
  if (!d_->radical) throw UnsupportedError(d_->radical_error.empty() ? "radical unavailable" : d_->radical_error);
  return *d_->radical;
}

bool Algebra::has_radical() const { return d_->radical.has_value(); }

bool operator==(const Algebra& a, const Algebra& b) {
  if (a.d_ == b.d_) return true;
  return a.field() == b.field() && a.d_->left == b.d_->left && a.d_->unit == b.d_->unit &&
         a.d_->idempotents == b.d_->idempotents;
}

// --- quiver build ----------------------------------------------------------

namespace {

struct Path {
  int source = 0;
  int target = 0;
  std::vector<int> arrows;
};

int find_index(const std::vector<std::string>& names, const std::string& s) {
  auto it = std::find(names.begin(), names.end(), s);
  return it == names.end() ? -1 : static_cast<int>(it - names.begin());
}

}  // namespace

Algebra build_from_quiver(const QuiverPresentation& pres, const PrimeField& field, std::string name) {
  const int nv = static_cast<int>(pres.vertices.size());
  if (nv == 0) throw InputError("quiver has no vertices");
  if (pres.nilpotency_bound < 0) throw InputError("nilpotency bound must be non-negative");
  std::vector<std::string> arrow_names;
  std::vector<int> src, tgt;
  for (const auto& a : pres.arrows) {
    if (find_index(arrow_names, a.name) >= 0) throw InputError("duplicate arrow " + a.name);
    const int s = find_index(pres.vertices, a.source), t = find_index(pres.vertices, a.target);
    if (s < 0 || t < 0) throw InputError("arrow " + a.name + " has an unknown endpoint");
    arrow_names.push_back(a.name);
    src.push_back(s);
    tgt.push_back(t);
  }

  // paths by length 0..L, L = bound + 1
  const int L = pres.nilpotency_bound + 1;
  std::vector<Path> paths;
  std::map<std::pair<int, std::vector<int>>, Index> index;
  for (int v = 0; v < nv; ++v) {
    index[{v, {}}] = static_cast<Index>(paths.size());
    paths.push_back({v, v, {}});
  }
  std::size_t begin = 0, end = paths.size();
  for (int len = 1; len <= L; ++len) {
    for (std::size_t p = begin; p < end; ++p)
      for (int a = 0; a < static_cast<int>(arrow_names.size()); ++a) {
        if (src[static_cast<std::size_t>(a)] != paths[p].target) continue;
        Path q = paths[p];
        q.arrows.push_back(a);
        q.target = tgt[static_cast<std::size_t>(a)];
        index[{q.source, q.arrows}] = static_cast<Index>(paths.size());
        paths.push_back(std::move(q));
      }
    begin = end;
    end = paths.size();
    if (paths.size() > 200000) throw UnsupportedError("too many paths below the nilpotency bound");
  }
  const Index np = static_cast<Index>(paths.size());
  auto column = [&](Index path) { return np - 1 - path; };  // longest paths leftmost

  // relations: validate and translate
  struct Term {
    Scalar coef;
    std::vector<int> arrows;
  };
  std::vector<std::vector<Term>> rels;
  std::vector<std::pair<int, int>> rel_ends;
  for (const auto& r : pres.relations) {
    if (r.empty()) throw InputError("empty relation");
    std::vector<Term> terms;
    int rs = -1, rt = -1;
    for (const auto& t : r) {
      if (t.arrows.size() < 2) throw InputError("relation not admissible (path of length < 2): " + to_string(r));
      Term tm{field.reduce(t.coefficient), {}};
      int cur = -1, first = -1;
      for (const auto& an : t.arrows) {
        const int a = find_index(arrow_names, an);
        if (a < 0) throw InputError("relation uses unknown arrow " + an + ": " + to_string(r));
        if (cur >= 0 && src[static_cast<std::size_t>(a)] != cur)
          throw InputError("relation has a non-composable path: " + to_string(r));
        if (first < 0) first = src[static_cast<std::size_t>(a)];
        cur = tgt[static_cast<std::size_t>(a)];
        tm.arrows.push_back(a);
      }
      if (rs < 0) {
        rs = first;
        rt = cur;
      } else if (rs != first || rt != cur) {
        throw InputError("relation terms do not share source and target: " + to_string(r));
      }
      terms.push_back(std::move(tm));
    }
    rels.push_back(std::move(terms));
    rel_ends.emplace_back(rs, rt);
  }

  // ideal rows: u . r . w truncated at length L
  std::vector<Vector> rows;
  for (std::size_t ri = 0; ri < rels.size(); ++ri) {
    std::size_t minlen = rels[ri][0].arrows.size();
    for (const auto& t : rels[ri]) minlen = std::min(minlen, t.arrows.size());
    for (const auto& u : paths) {
      if (u.target != rel_ends[ri].first) continue;
      for (const auto& w : paths) {
        if (w.source != rel_ends[ri].second) continue;
        if (u.arrows.size() + minlen + w.arrows.size() > static_cast<std::size_t>(L)) continue;
        Vector row = Vector::Zero(np);
        for (const auto& t : rels[ri]) {
          if (u.arrows.size() + t.arrows.size() + w.arrows.size() > static_cast<std::size_t>(L)) continue;
          std::vector<int> full = u.arrows;
          full.insert(full.end(), t.arrows.begin(), t.arrows.end());
          full.insert(full.end(), w.arrows.begin(), w.arrows.end());
          const Index pi = index.at({u.source, full});
          row(column(pi)) = field.add(row(column(pi)), t.coef);
        }
        if (!is_zero(row)) rows.push_back(std::move(row));
      }
    }
  }
  Matrix ideal(static_cast<Index>(rows.size()), np);
  for (std::size_t k = 0; k < rows.size(); ++k) ideal.row(static_cast<Index>(k)) = rows[k].transpose();
  const RowEchelon ech = rref(field, ideal);
  std::vector<Index> pivot_row(static_cast<std::size_t>(np), -1);
  for (Index k = 0; k < ech.rank; ++k) pivot_row[static_cast<std::size_t>(ech.pivots[static_cast<std::size_t>(k)])] = k;

  // basis = non-pivot columns, in path enumeration order
  std::vector<Index> basis_paths;
  std::vector<Index> coord(static_cast<std::size_t>(np), -1);
  for (Index pi = 0; pi < np; ++pi)
    if (pivot_row[static_cast<std::size_t>(column(pi))] < 0) {
      if (static_cast<int>(paths[static_cast<std::size_t>(pi)].arrows.size()) == L)
        throw InputError("arrow ideal is not nilpotent within bound " + std::to_string(pres.nilpotency_bound));
      coord[static_cast<std::size_t>(pi)] = static_cast<Index>(basis_paths.size());
      basis_paths.push_back(pi);
    }
  const Index n = static_cast<Index>(basis_paths.size());
  auto reduce_path = [&](Index pi) {
    Vector v = Vector::Zero(n);
    const Index c = column(pi);
    const Index k = pivot_row[static_cast<std::size_t>(c)];
    if (k < 0) {
      v(coord[static_cast<std::size_t>(pi)]) = 1;
      return v;
    }
    for (Index b = 0; b < n; ++b) {
      const Scalar x = ech.form(k, column(basis_paths[static_cast<std::size_t>(b)]));
      if (x) v(b) = field.neg(x);
    }
    return v;
  };
  for (Index pi = 0; pi < np; ++pi)
    if (static_cast<int>(paths[static_cast<std::size_t>(pi)].arrows.size()) == L && !is_zero(Matrix(reduce_path(pi))))
      throw InputError("arrow ideal is not nilpotent within bound " + std::to_string(pres.nilpotency_bound));

  std::vector<Matrix> left(static_cast<std::size_t>(n), Matrix::Zero(n, n));
  for (Index a = 0; a < n; ++a) {
    const Path& pa = paths[static_cast<std::size_t>(basis_paths[static_cast<std::size_t>(a)])];
    for (Index b = 0; b < n; ++b) {
      const Path& pb = paths[static_cast<std::size_t>(basis_paths[static_cast<std::size_t>(b)])];
      if (pb.target != pa.source) continue;  // e_a e_b = "b, then a"
      std::vector<int> full = pb.arrows;
      full.insert(full.end(), pa.arrows.begin(), pa.arrows.end());
      if (static_cast<int>(full.size()) >= L) continue;
      left[static_cast<std::size_t>(a)].col(b) = reduce_path(index.at({pb.source, full}));
    }
  }

  std::vector<std::string> labels;
  PathBasis pb;
  RadicalData rd;
  rd.source = RadicalData::Source::quiver;
  Vector unit = Vector::Zero(n);
  std::vector<Vector> idem;
  std::vector<Index> rad_cols;
  for (Index b = 0; b < n; ++b) {
    const Path& p = paths[static_cast<std::size_t>(basis_paths[static_cast<std::size_t>(b)])];
    pb.vertex.push_back(p.source);
    pb.arrows.push_back(p.arrows);
    if (p.arrows.empty()) {
      labels.push_back("e" + pres.vertices[static_cast<std::size_t>(p.source)]);
      unit(b) = 1;
      Vector e = Vector::Zero(n);
      e(b) = 1;
      idem.push_back(e);
    } else {
      std::string s;
      for (std::size_t j = 0; j < p.arrows.size(); ++j)
        s += (j ? "." : "") + arrow_names[static_cast<std::size_t>(p.arrows[j])];
      labels.push_back(s);
      if (p.arrows.size() == 1) rd.generators.push_back(static_cast<Index>(rad_cols.size()));
      rad_cols.push_back(b);
      rd.left.push_back(p.target);
      rd.right.push_back(p.source);
    }
  }
  rd.basis = Matrix::Zero(n, static_cast<Index>(rad_cols.size()));
  for (std::size_t c = 0; c < rad_cols.size(); ++c) rd.basis(rad_cols[c], static_cast<Index>(c)) = 1;
  rd.adapted.resize(n, n);
  for (int v = 0; v < nv; ++v) rd.adapted.col(v) = idem[static_cast<std::size_t>(v)];
  rd.adapted.rightCols(rd.basis.cols()) = rd.basis;
  rd.adapted_inverse = inverse(field, rd.adapted);
  return Algebra::with_radical(field, std::move(labels), std::move(left), std::move(unit), std::move(idem), std::move(rd),
                               pres, std::move(pb), std::move(name));
}

Matrix trace_form_radical(const Algebra& a) {
  std::vector<Matrix> left;
  for (Index b = 0; b < a.dim(); ++b) left.push_back(a.left_mult(b));
  return trace_radical_of(a.field(), left);
}

Matrix radical(const Algebra& a) { return a.radical().basis; }

Algebra opposite(const Algebra& a) {
  std::vector<Matrix> left;
  for (Index b = 0; b < a.dim(); ++b) left.push_back(a.right_mult(b));
  std::optional<QuiverPresentation> pres;
  std::optional<PathBasis> paths;
  if (a.presentation() && a.path_basis()) {
    pres = *a.presentation();
    for (auto& ar : pres->arrows) std::swap(ar.source, ar.target);
    for (auto& r : pres->relations)
      for (auto& t : r) std::reverse(t.arrows.begin(), t.arrows.end());
    paths = *a.path_basis();
    // a reversed path starts where the original ended
    std::vector<int> tgt;
    for (const auto& ar : a.presentation()->arrows)
      tgt.push_back(find_index(a.presentation()->vertices, ar.target));
    for (std::size_t b = 0; b < paths->arrows.size(); ++b) {
      auto& arr = paths->arrows[b];
      if (arr.empty()) continue;
      paths->vertex[b] = tgt[static_cast<std::size_t>(arr.back())];
      std::reverse(arr.begin(), arr.end());
    }
  }
  if (!a.has_radical()) {
    std::string name = a.name().empty() ? std::string() : a.name() + "^op";
    return Algebra::from_table(a.field(), a.labels(), std::move(left), a.unit(), a.idempotents(), std::move(name));
  }
  RadicalData rd = a.radical();
  std::swap(rd.left, rd.right);
  return Algebra::with_radical(a.field(), a.labels(), std::move(left), a.unit(), a.idempotents(), std::move(rd),
                               std::move(pres), std::move(paths), a.name().empty() ? std::string() : a.name() + "^op");
}

Algebra tensor_product(const Algebra& a, const Algebra& b) {
  if (a.field() != b.field()) throw InputError("tensor product of algebras over different fields");
  const PrimeField& f = a.field();
  std::vector<Matrix> left;
  std::vector<std::string> labels;
  for (Index i = 0; i < a.dim(); ++i)
    for (Index j = 0; j < b.dim(); ++j) {
      left.push_back(kronecker(f, a.left_mult(i), b.left_mult(j)));
      labels.push_back(a.labels()[static_cast<std::size_t>(i)] + "|" + b.labels()[static_cast<std::size_t>(j)]);
    }
  const Vector unit = kronecker(f, a.unit(), b.unit());
  std::vector<Vector> idem;
  for (const auto& e : a.idempotents())
    for (const auto& g : b.idempotents()) idem.push_back(kronecker(f, e, g));
  std::string name = a.name().empty() || b.name().empty() ? std::string() : a.name() + "(x)" + b.name();
  return Algebra::from_table(f, std::move(labels), std::move(left), unit, std::move(idem), std::move(name));
}

Enveloping enveloping(const Algebra& a) {
  Algebra env = tensor_product(a, opposite(a));
  std::vector<Matrix> action;
  for (Index x = 0; x < a.dim(); ++x)
    for (Index y = 0; y < a.dim(); ++y) action.push_back(multiply(a.field(), a.left_mult(x), a.right_mult(y)));
  return {std::move(env), std::move(action)};
}

Algebra ground_algebra(const PrimeField& field) {
  QuiverPresentation pres;
  pres.vertices = {"1"};
  return build_from_quiver(pres, field, "k");
}

std::optional<Matrix> presentation_isomorphism(const Algebra& source, const Algebra& target, std::uint64_t seed,
                                               int trials) {
  if (!source.presentation() || !source.path_basis())
    throw InputError("presentation_isomorphism needs a quiver-built source algebra");
  if (source.field() != target.field() || source.dim() != target.dim() ||
      source.vertex_count() != target.vertex_count())
    return std::nullopt;
  const PrimeField& f = source.field();
  const QuiverPresentation& pres = *source.presentation();
  const PathBasis& pb = *source.path_basis();
  const RadicalData& trad = target.radical();
  const int k = source.vertex_count();
  const Index n = source.dim();
  if (k > 8) throw UnsupportedError("too many vertices for an isomorphism search");
  std::vector<int> asrc, atgt;
  for (const auto& ar : pres.arrows) {
    asrc.push_back(find_index(pres.vertices, ar.source));
    atgt.push_back(find_index(pres.vertices, ar.target));
  }
  std::vector<int> sigma(static_cast<std::size_t>(k));
  std::iota(sigma.begin(), sigma.end(), 0);
  std::mt19937_64 rng(seed);
  do {
    // candidate images: target radical elements typed (sigma(t), sigma(s)) for an arrow s -> t
    std::vector<std::vector<Index>> blocks(pres.arrows.size());
    bool ok = true;
    for (std::size_t a = 0; a < pres.arrows.size() && ok; ++a) {
      for (Index c = 0; c < trad.basis.cols(); ++c)
        if (trad.left[static_cast<std::size_t>(c)] == sigma[static_cast<std::size_t>(atgt[a])] &&
            trad.right[static_cast<std::size_t>(c)] == sigma[static_cast<std::size_t>(asrc[a])])
          blocks[a].push_back(c);
      ok = !blocks[a].empty();
    }
    if (!ok) continue;
    for (int t = 0; t < trials; ++t) {
      std::vector<Vector> image;
      for (std::size_t a = 0; a < pres.arrows.size(); ++a) {
        Vector v = Vector::Zero(n);
        for (Index c : blocks[a]) v = f.reduce(v + static_cast<Scalar>(rng() % static_cast<std::uint64_t>(f.modulus())) * trad.basis.col(c));
        image.push_back(v);
      }
      Matrix phi(n, n);
      for (Index b = 0; b < n; ++b) {
        const auto& arr = pb.arrows[static_cast<std::size_t>(b)];
        if (arr.empty()) {
          phi.col(b) = target.idempotents()[static_cast<std::size_t>(sigma[static_cast<std::size_t>(pb.vertex[static_cast<std::size_t>(b)])])];
          continue;
        }
        Vector v = image[static_cast<std::size_t>(arr[0])];
        for (std::size_t j = 1; j < arr.size(); ++j) v = target.multiply(image[static_cast<std::size_t>(arr[j])], v);
        phi.col(b) = v;
      }
      if (rank(f, phi) != n) continue;
      bool hom = true;
      for (Index x = 0; x < n && hom; ++x) {
        const Matrix lhs = multiply(f, phi, source.left_mult(x));
        const Matrix rhs = multiply(f, target.left_mult(Vector(phi.col(x))), phi);
        hom = lhs == rhs;
      }
      if (hom) return phi;
    }
  } while (std::next_permutation(sigma.begin(), sigma.end()));
  return std::nullopt;
}

void check_extension(const Extension& ext) {
  const PrimeField& f = ext.amb.field();
  if (ext.sub.field() != f) throw InputError("extension algebras over different fields");
  if (ext.embed.rows() != ext.amb.dim() || ext.embed.cols() != ext.sub.dim())
    throw InputError("extension embedding has the wrong shape");
  if (rank(f, ext.embed) != ext.sub.dim()) throw InputError("extension embedding is not injective");
  if (multiply(f, ext.embed, ext.sub.unit()) != ext.amb.unit()) throw InputError("extension embedding is not unital");
  for (Index x = 0; x < ext.sub.dim(); ++x) {
    const Matrix lhs = multiply(f, ext.embed, ext.sub.left_mult(x));
    const Matrix rhs = multiply(f, ext.amb.left_mult(Vector(ext.embed.col(x))), ext.embed);
    if (lhs != rhs) throw InputError("extension embedding is not multiplicative at " + ext.sub.labels()[static_cast<std::size_t>(x)]);
  }
}

Extension ground_extension(const Algebra& a) {
  Algebra k = ground_algebra(a.field());
  Matrix embed = a.unit();
  return {std::move(k), a, std::move(embed)};
}

Extension identity_extension(const Algebra& a) {
  return {a, a, Matrix::Identity(a.dim(), a.dim())};
}

}  // namespace domdim
