#include "domdim/catalog.hpp"

#include <unistd.h>

#include <atomic>
#include <cctype>
#include <tuple>
#include <fstream>
#include <sstream>

#include "domdim/hash.hpp"

namespace domdim {

namespace fs = std::filesystem;

namespace {

std::size_t sz(Index i) { return static_cast<std::size_t>(i); }

struct Token {
  std::string text;
  int column = 0;
};

struct Line {
  int number = 0;
  std::vector<Token> tokens;
};

std::vector<Line> lex(const std::string& text) {
  std::vector<Line> out;
  std::istringstream in(text);
  std::string raw;
  int number = 0;
  while (std::getline(in, raw)) {
    ++number;
    if (auto hash = raw.find('#'); hash != std::string::npos) raw.resize(hash);
    Line line{number, {}};
    std::size_t i = 0;
    while (i < raw.size()) {
      if (std::isspace(static_cast<unsigned char>(raw[i]))) {
        ++i;
        continue;
      }
      std::size_t j = i;
      if (raw[i] == ';') {
        j = i + 1;
      } else {
        while (j < raw.size() && !std::isspace(static_cast<unsigned char>(raw[j])) && raw[j] != ';') ++j;
      }
      line.tokens.push_back({raw.substr(i, j - i), static_cast<int>(i) + 1});
      i = j;
    }
    if (!line.tokens.empty()) out.push_back(std::move(line));
  }
  return out;
}

[[noreturn]] void fail(const Line& l, std::size_t tok, const std::string& what) {
  const int col = tok < l.tokens.size() ? l.tokens[tok].column : (l.tokens.empty() ? 1 : l.tokens.back().column);
  throw InputError("line " + std::to_string(l.number) + ", column " + std::to_string(col) + ": " + what);
}

Scalar integer(const Line& l, std::size_t tok) {
  if (tok >= l.tokens.size()) fail(l, tok, "expected an integer");
  const std::string& s = l.tokens[tok].text;
  std::size_t used = 0;
  long long v = 0;
  try {
    v = std::stoll(s, &used);
  } catch (const std::exception&) {
    fail(l, tok, "expected an integer, got '" + s + "'");
  }
  if (used != s.size()) fail(l, tok, "expected an integer, got '" + s + "'");
  return v;
}

void arity(const Line& l, std::size_t want) {
  if (l.tokens.size() != want) fail(l, std::min(want, l.tokens.size()), "expected " + std::to_string(want - 1) + " value(s)");
}

// Entries from token `from` on, rows separated by ';'.
Matrix matrix_from(const Line& l, std::size_t from, Index rows, Index cols) {
  Matrix m = Matrix::Zero(rows, cols);
  Index r = 0, c = 0;
  for (std::size_t t = from; t < l.tokens.size(); ++t) {
    if (l.tokens[t].text == ";") {
      if (c != cols) fail(l, t, "row " + std::to_string(r + 1) + " has " + std::to_string(c) + " entries, expected " + std::to_string(cols));
      ++r;
      c = 0;
      continue;
    }
    if (r >= rows || c >= cols) fail(l, t, "matrix is larger than " + std::to_string(rows) + "x" + std::to_string(cols));
    m(r, c++) = integer(l, t);
  }
  if (rows * cols > 0 && (r != rows - 1 || c != cols))
    fail(l, l.tokens.size(), "matrix is smaller than " + std::to_string(rows) + "x" + std::to_string(cols));
  return m;
}

std::string matrix_text(const Matrix& m) {
  std::string s;
  for (Index r = 0; r < m.rows(); ++r) {
    if (r) s += " ;";
    for (Index c = 0; c < m.cols(); ++c) s += " " + std::to_string(m(r, c));
  }
  return s;
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  for (char ch : s) {
    if (ch == sep) {
      out.push_back(cur);
      cur.clear();
    } else {
      cur += ch;
    }
  }
  out.push_back(cur);
  return out;
}

int index_of(const std::vector<std::string>& v, const std::string& x) {
  for (std::size_t i = 0; i < v.size(); ++i)
    if (v[i] == x) return static_cast<int>(i);
  return -1;
}

}  // namespace

AlgebraDoc parse_doc(const std::string& text) {
  AlgebraDoc doc;
  enum class Section { header, quiver, table, module, decomposition, expect } sec = Section::header;
  bool saw_format = false, saw_mode = false;
  for (const Line& l : lex(text)) {
    const std::string& key = l.tokens[0].text;
    if (key.front() == '[') {
      const std::string head = key.substr(1);
      auto need_close = [&](std::size_t want) {
        if (l.tokens.size() != want || l.tokens.back().text.back() != ']') fail(l, 0, "malformed section header");
      };
      if (head == "quiver]" || head == "table]" || head == "expect]") {
        need_close(1);
        sec = head == "quiver]" ? Section::quiver : head == "table]" ? Section::table : Section::expect;
        if (sec == Section::quiver && doc.mode != AlgebraDoc::Mode::quiver) fail(l, 0, "[quiver] section in a table-mode file");
        if (sec == Section::table && doc.mode != AlgebraDoc::Mode::table) fail(l, 0, "[table] section in a quiver-mode file");
      } else if (head == "module" || head == "decomposition") {
        need_close(2);
        std::string name = l.tokens[1].text;
        name.pop_back();
        if (name.empty()) fail(l, 1, "empty name");
        if (head == "module") {
          sec = Section::module;
          doc.modules.push_back({name, {}, {}});
        } else {
          sec = Section::decomposition;
          doc.decompositions.push_back({name, {}});
        }
      } else {
        fail(l, 0, "unknown section " + key);
      }
      continue;
    }
    switch (sec) {
      case Section::header:
        if (key == "format") {
          arity(l, 2);
          doc.format = static_cast<int>(integer(l, 1));
          if (doc.format != kFormatVersion) fail(l, 1, "unsupported format version " + std::to_string(doc.format));
          saw_format = true;
        } else if (key == "name") {
          arity(l, 2);
          doc.name = l.tokens[1].text;
        } else if (key == "field") {
          arity(l, 2);
          doc.field = integer(l, 1);
          try {
            PrimeField check(doc.field);
          } catch (const InputError& e) {
            fail(l, 1, e.what());
          }
        } else if (key == "mode") {
          arity(l, 2);
          if (l.tokens[1].text == "quiver") doc.mode = AlgebraDoc::Mode::quiver;
          else if (l.tokens[1].text == "table") doc.mode = AlgebraDoc::Mode::table;
          else fail(l, 1, "mode must be quiver or table");
          saw_mode = true;
        } else {
          fail(l, 0, "unknown header key " + key);
        }
        break;
      case Section::quiver: {
        QuiverPresentation& q = doc.quiver;
        if (key == "vertex") {
          if (l.tokens.size() < 2) fail(l, 1, "expected vertex labels");
          for (std::size_t t = 1; t < l.tokens.size(); ++t) q.vertices.push_back(l.tokens[t].text);
        } else if (key == "arrow") {
          arity(l, 4);
          for (std::size_t t = 2; t < 4; ++t)
            if (index_of(q.vertices, l.tokens[t].text) < 0) fail(l, t, "unknown vertex " + l.tokens[t].text);
          q.arrows.push_back({l.tokens[1].text, l.tokens[2].text, l.tokens[3].text});
        } else if (key == "relation") {
          if (l.tokens.size() < 3 || l.tokens.size() % 2 == 0) fail(l, l.tokens.size(), "expected coefficient/path pairs");
          Relation r;
          for (std::size_t t = 1; t < l.tokens.size(); t += 2) r.push_back({integer(l, t), split(l.tokens[t + 1].text, '.')});
          q.relations.push_back(std::move(r));
        } else if (key == "bound") {
          arity(l, 2);
          q.nilpotency_bound = static_cast<int>(integer(l, 1));
        } else {
          fail(l, 0, "unknown quiver key " + key);
        }
        break;
      }
      case Section::table: {
        TableDoc& t = doc.table;
        auto coords = [&]() {
          if (l.tokens.size() != t.labels.size() + 1) fail(l, l.tokens.size(), "expected " + std::to_string(t.labels.size()) + " coordinates");
          Vector v(static_cast<Index>(t.labels.size()));
          for (std::size_t k = 0; k < t.labels.size(); ++k) v(static_cast<Index>(k)) = integer(l, k + 1);
          return v;
        };
        if (key == "labels") {
          if (!t.labels.empty()) fail(l, 0, "labels given twice");
          for (std::size_t k = 1; k < l.tokens.size(); ++k) t.labels.push_back(l.tokens[k].text);
        } else if (key == "product") {
          arity(l, 5);
          for (std::size_t k = 1; k <= 3; ++k)
            if (index_of(t.labels, l.tokens[k].text) < 0) fail(l, k, "unknown basis label " + l.tokens[k].text);
          t.products.emplace_back(l.tokens[1].text, l.tokens[2].text, l.tokens[3].text, integer(l, 4));
        } else if (key == "unit") {
          t.unit = coords();
        } else if (key == "idempotent") {
          t.idempotents.push_back(coords());
        } else {
          fail(l, 0, "unknown table key " + key);
        }
        break;
      }
      case Section::module: {
        ModuleDoc& m = doc.modules.back();
        if (key == "dims" || key == "dim") {
          if (!m.dims.empty()) fail(l, 0, "dimensions given twice");
          for (std::size_t t = 1; t < l.tokens.size(); ++t) {
            const Scalar d = integer(l, t);
            if (d < 0) fail(l, t, "negative dimension");
            m.dims.push_back(d);
          }
          if (m.dims.empty()) fail(l, 1, "expected dimensions");
        } else if (key == "arrow" || key == "action") {
          if (l.tokens.size() < 2) fail(l, 1, "expected a name");
          if (m.dims.empty()) fail(l, 0, "dims must precede matrices");
          const std::string& nm = l.tokens[1].text;
          Index rows = 0, cols = 0;
          if (doc.mode == AlgebraDoc::Mode::quiver) {
            if (key != "arrow") fail(l, 0, "quiver-mode modules list arrow matrices");
            const QuiverPresentation& q = doc.quiver;
            const Arrow* ar = nullptr;
            for (const auto& a : q.arrows)
              if (a.name == nm) ar = &a;
            if (!ar) fail(l, 1, "unknown arrow " + nm);
            const int s = index_of(q.vertices, ar->source), tg = index_of(q.vertices, ar->target);
            if (s < 0 || tg < 0 || m.dims.size() != q.vertices.size()) fail(l, 0, "dims do not match the vertices");
            rows = m.dims[sz(tg)];
            cols = m.dims[sz(s)];
          } else {
            if (key != "action") fail(l, 0, "table-mode modules list action matrices");
            if (index_of(doc.table.labels, nm) < 0) fail(l, 1, "unknown basis label " + nm);
            if (m.dims.size() != 1) fail(l, 0, "table-mode modules have one dimension");
            rows = cols = m.dims[0];
          }
          for (const auto& [other, mat] : m.matrices)
            if (other == nm) fail(l, 1, "matrix for " + nm + " given twice");
          m.matrices.emplace_back(nm, matrix_from(l, 2, rows, cols));
        } else {
          fail(l, 0, "unknown module key " + key);
        }
        break;
      }
      case Section::decomposition:
        if (key != "summands" || l.tokens.size() < 2) fail(l, 0, "expected: summands NAME ...");
        for (std::size_t t = 1; t < l.tokens.size(); ++t) doc.decompositions.back().summands.push_back(l.tokens[t].text);
        break;
      case Section::expect: {
        if (l.tokens.size() < 2) fail(l, 1, "expected: KEY VALUE");
        std::string v;
        for (std::size_t t = 1; t < l.tokens.size(); ++t) v += (t > 1 ? " " : "") + l.tokens[t].text;
        doc.expect.emplace_back(key, v);
        break;
      }
    }
  }
  if (!saw_format) throw InputError("line 1, column 1: missing 'format' line");
  if (!saw_mode) throw InputError("line 1, column 1: missing 'mode' line");
  return doc;
}

std::string serialize(const AlgebraDoc& doc) {
  std::ostringstream os;
  os << "format " << doc.format << "\n";
  if (!doc.name.empty()) os << "name " << doc.name << "\n";
  os << "field " << doc.field << "\n";
  os << "mode " << (doc.mode == AlgebraDoc::Mode::quiver ? "quiver" : "table") << "\n";
  if (doc.mode == AlgebraDoc::Mode::quiver) {
    const QuiverPresentation& q = doc.quiver;
    os << "\n[quiver]\nvertex";
    for (const auto& v : q.vertices) os << " " << v;
    os << "\n";
    for (const auto& a : q.arrows) os << "arrow " << a.name << " " << a.source << " " << a.target << "\n";
    for (const auto& r : q.relations) {
      os << "relation";
      for (const auto& t : r) {
        os << " " << t.coefficient << " ";
        for (std::size_t j = 0; j < t.arrows.size(); ++j) os << (j ? "." : "") << t.arrows[j];
      }
      os << "\n";
    }
    os << "bound " << q.nilpotency_bound << "\n";
  } else {
    const TableDoc& t = doc.table;
    os << "\n[table]\nlabels";
    for (const auto& l : t.labels) os << " " << l;
    os << "\n";
    for (const auto& [a, b, c, coef] : t.products) os << "product " << a << " " << b << " " << c << " " << coef << "\n";
    os << "unit" << matrix_text(t.unit.transpose()) << "\n";
    for (const auto& e : t.idempotents) os << "idempotent" << matrix_text(e.transpose()) << "\n";
  }
  for (const auto& m : doc.modules) {
    os << "\n[module " << m.name << "]\n" << (doc.mode == AlgebraDoc::Mode::quiver ? "dims" : "dim");
    for (Index d : m.dims) os << " " << d;
    os << "\n";
    for (const auto& [nm, mat] : m.matrices)
      os << (doc.mode == AlgebraDoc::Mode::quiver ? "arrow " : "action ") << nm << matrix_text(mat) << "\n";
  }
  for (const auto& d : doc.decompositions) {
    os << "\n[decomposition " << d.name << "]\nsummands";
    for (const auto& s : d.summands) os << " " << s;
    os << "\n";
  }
  if (!doc.expect.empty()) {
    os << "\n[expect]\n";
    for (const auto& [k, v] : doc.expect) os << k << " " << v << "\n";
  }
  return os.str();
}

std::uint64_t doc_hash(const AlgebraDoc& doc) {
  Fnv1a h;
  h.text(serialize(doc));
  return h.value();
}

AlgebraDoc doc_from_algebra(const Algebra& a) {
  AlgebraDoc doc;
  doc.name = a.name();
  doc.field = a.field().modulus();
  doc.mode = AlgebraDoc::Mode::table;
  doc.table.labels = a.labels();
  for (Index x = 0; x < a.dim(); ++x)
    for (Index y = 0; y < a.dim(); ++y)
      for (Index z = 0; z < a.dim(); ++z)
        if (const Scalar c = a.left_mult(x)(z, y))
          doc.table.products.emplace_back(a.labels()[sz(x)], a.labels()[sz(y)], a.labels()[sz(z)], c);
  doc.table.unit = a.unit();
  doc.table.idempotents = a.idempotents();
  return doc;
}

namespace {

Algebra build_algebra(const AlgebraDoc& doc, const PrimeField& f) {
  if (doc.mode == AlgebraDoc::Mode::quiver) return build_from_quiver(doc.quiver, f, doc.name);
  const TableDoc& t = doc.table;
  const Index n = static_cast<Index>(t.labels.size());
  if (n == 0) throw InputError("table-mode algebra without labels");
  std::vector<Matrix> left(sz(n), Matrix::Zero(n, n));
  for (const auto& [a, b, c, coef] : t.products) {
    Scalar& slot = left[sz(index_of(t.labels, a))](index_of(t.labels, c), index_of(t.labels, b));
    slot = f.add(slot, f.reduce(coef));
  }
  if (t.unit.size() != n) throw InputError("table-mode algebra without a unit line");
  return Algebra::from_table(f, t.labels, std::move(left), t.unit, t.idempotents, doc.name);
}

ModuleRep build_module(const AlgebraDoc& doc, const Algebra& a, const ModuleDoc& md) {
  const PrimeField& f = a.field();
  std::vector<Matrix> action;
  if (doc.mode == AlgebraDoc::Mode::table) {
    const Index n = md.dims.at(0);
    for (const auto& label : a.labels()) {
      const Matrix* m = nullptr;
      for (const auto& [nm, mat] : md.matrices)
        if (nm == label) m = &mat;
      if (!m) throw InputError("module " + md.name + ": no action matrix for " + label);
      action.push_back(*m);
    }
    if (n == 0) action.assign(sz(a.dim()), Matrix(0, 0));
  } else {
    const QuiverPresentation& q = doc.quiver;
    const PathBasis& pb = *a.path_basis();
    std::vector<Index> off{0};
    for (Index d : md.dims) off.push_back(off.back() + d);
    const Index n = off.back();
    std::vector<Matrix> arrow(q.arrows.size());
    std::vector<int> src(q.arrows.size()), tgt(q.arrows.size());
    for (std::size_t k = 0; k < q.arrows.size(); ++k) {
      src[k] = index_of(q.vertices, q.arrows[k].source);
      tgt[k] = index_of(q.vertices, q.arrows[k].target);
      bool found = false;
      for (const auto& [nm, mat] : md.matrices)
        if (nm == q.arrows[k].name) {
          arrow[k] = mat;
          found = true;
        }
      if (!found) arrow[k] = Matrix::Zero(md.dims[sz(tgt[k])], md.dims[sz(src[k])]);
    }
    for (Index b = 0; b < a.dim(); ++b) {
      Matrix act = Matrix::Zero(n, n);
      const auto& path = pb.arrows[sz(b)];
      if (path.empty()) {
        const int v = pb.vertex[sz(b)];
        act.block(off[sz(v)], off[sz(v)], md.dims[sz(v)], md.dims[sz(v)]).setIdentity();
      } else {
        Matrix m = Matrix::Identity(md.dims[sz(src[sz(path[0])])], md.dims[sz(src[sz(path[0])])]);
        for (int ar : path) m = multiply(f, arrow[sz(ar)], m);
        const int s = src[sz(path.front())], t = tgt[sz(path.back())];
        act.block(off[sz(t)], off[sz(s)], md.dims[sz(t)], md.dims[sz(s)]) = m;
      }
      action.push_back(std::move(act));
    }
  }
  return ModuleRep::make(a, std::move(action), md.name);
}

}  // namespace

Loaded load(const AlgebraDoc& doc, std::optional<Scalar> field) {
  const PrimeField f(field.value_or(doc.field));
  Algebra a = build_algebra(doc, f);
  Loaded l{doc, a, {}};
  for (const auto& md : doc.modules) {
    if (doc.mode == AlgebraDoc::Mode::quiver && md.dims.size() != doc.quiver.vertices.size())
      throw InputError("module " + md.name + ": dims do not match the vertices");
    l.modules.push_back(build_module(doc, a, md));
  }
  for (const auto& d : doc.decompositions)
    for (const auto& s : d.summands) resolve_module(l, s);  // every summand must resolve
  return l;
}

Loaded load_file(const fs::path& path, std::optional<Scalar> field) {
  std::ifstream in(path);
  if (!in) {
    if (auto doc = corpus_doc(path.string())) return load(*doc, field);
    throw InputError("cannot read " + path.string());
  }
  std::ostringstream ss;
  ss << in.rdbuf();
  try {
    return load(parse_doc(ss.str()), field);
  } catch (const InputError& e) {
    throw InputError(path.string() + ": " + e.what());
  }
}

ModuleRep resolve_module(const Loaded& l, const std::string& spec) {
  const Algebra& a = l.algebra;
  for (const auto& m : l.modules)
    if (m.name() == spec) return m;
  for (const auto& d : l.doc.decompositions)
    if (d.name == spec) return resolve(l, spec).module;
  if (spec.find('+') != std::string::npos) return resolve(l, spec).module;
  if (spec == "regular" || spec == "A") return regular_module(a);
  if (spec == "dual" || spec == "D(A)") return dual_regular_module(a);
  if (spec.size() >= 1 && (spec[0] == 'S' || spec[0] == 'P' || spec[0] == 'I')) {
    const std::string v = spec.substr(1);
    int i = -1;
    if (v.empty() && a.vertex_count() == 1) i = 0;
    for (int k = 0; k < a.vertex_count() && i < 0 && !v.empty(); ++k)
      if (vertex_name(a, k) == v) i = k;
    if (i >= 0) {
      const ModuleRep m = spec[0] == 'S' ? simple(a, i) : spec[0] == 'P' ? projective(a, i) : injective(a, i);
      return m.renamed(spec);
    }
  }
  throw InputError("unknown module '" + spec + "'");
}

DirectSum resolve(const Loaded& l, const std::string& spec) {
  std::vector<std::string> parts;
  std::string name = spec;
  for (const auto& d : l.doc.decompositions)
    if (d.name == spec) parts = d.summands;
  if (parts.empty()) parts = split(spec, '+');
  std::vector<ModuleRep> mods;
  for (const auto& p : parts) {
    if (p.empty()) throw InputError("empty summand in '" + spec + "'");
    mods.push_back(resolve_module(l, p).renamed(p));
  }
  return direct_sum(l.algebra, mods, name);
}

std::vector<std::string> basic_gen_cogen(const Algebra& a) {
  std::vector<std::string> out;
  std::vector<ModuleRep> ps;
  for (int i = 0; i < a.vertex_count(); ++i) {
    ps.push_back(projective(a, i));
    out.push_back("P" + vertex_name(a, i));
  }
  for (int j = 0; j < a.vertex_count(); ++j) {
    const ModuleRep inj = injective(a, j);
    bool seen = false;
    for (const auto& p : ps) seen = seen || is_isomorphic(p, inj).isomorphic;
    if (!seen) out.push_back("I" + vertex_name(a, j));
  }
  return out;
}

namespace {

AlgebraDoc quiver_doc(std::string name, std::vector<std::string> vertices, std::vector<Arrow> arrows,
                      std::vector<Relation> relations, int bound) {
  AlgebraDoc d;
  d.name = std::move(name);
  d.mode = AlgebraDoc::Mode::quiver;
  d.quiver = {std::move(vertices), std::move(arrows), std::move(relations), bound};
  return d;
}

AlgebraDoc truncated_doc(int n) {
  return quiver_doc("k" + std::to_string(n), {"1"}, {{"x", "1", "1"}},
                    {{PathTerm{1, std::vector<std::string>(sz(n), "x")}}}, n - 1);
}

AlgebraDoc linear_doc(int n) {
  std::vector<std::string> v;
  std::vector<Arrow> ar;
  const char* names = "abcdefgh";
  for (int i = 1; i <= n; ++i) v.push_back(std::to_string(i));
  for (int i = 1; i < n; ++i) ar.push_back({std::string(1, names[i - 1]), std::to_string(i), std::to_string(i + 1)});
  return quiver_doc("ka" + std::to_string(n), v, ar, {}, n - 1);
}

AlgebraDoc aus_doc() {
  return quiver_doc("aus", {"1", "2"}, {{"alpha", "1", "2"}, {"beta", "2", "1"}}, {{PathTerm{1, {"beta", "alpha"}}}}, 2);
}

AlgebraDoc tensor_doc(const AlgebraDoc& x, const AlgebraDoc& y, std::string name) {
  Algebra t = tensor_product(load(x).algebra, load(y).algebra);
  AlgebraDoc d = doc_from_algebra(t);
  d.name = std::move(name);
  return d;
}

void finish(AlgebraDoc& d, std::vector<std::pair<std::string, std::string>> expect) {
  const Algebra a = load(d).algebra;
  d.decompositions.push_back({"G", basic_gen_cogen(a)});
  d.expect = std::move(expect);
}

}  // namespace

std::vector<CorpusEntry> corpus() {
  std::vector<CorpusEntry> out;
  auto add = [&](AlgebraDoc d, std::vector<std::pair<std::string, std::string>> expect) {
    finish(d, std::move(expect));
    out.push_back({d.name, std::move(d)});
  };
  AlgebraDoc k = quiver_doc("k", {"1"}, {}, {}, 0);
  add(k, {{"domdim", "infinity-certified"}, {"diamond", "holds-certified"}, {"frobenius-over-k", "true"}});
  AlgebraDoc k2 = truncated_doc(2);
  k2.decompositions.push_back({"M", {"regular", "S"}});
  add(k2, {{"domdim", "infinity-certified"}, {"diamond", "holds-certified"}, {"frobenius-over-k", "true"}});
  add(truncated_doc(3), {{"domdim", "infinity-certified"}, {"diamond", "holds-certified"}, {"frobenius-over-k", "true"}});
  add(truncated_doc(4), {{"domdim", "infinity-certified"}, {"diamond", "holds-certified"}, {"frobenius-over-k", "true"}});
  add(linear_doc(2), {{"domdim", "1"}, {"diamond", "fails"}, {"frobenius-over-k", "false"}});
  add(linear_doc(3), {{"domdim", "1"}, {"diamond", "fails"}, {"frobenius-over-k", "false"}});
  add(aus_doc(), {{"domdim", "2"}, {"diamond", "fails"}, {"frobenius-over-k", "false"}});
  add(tensor_doc(truncated_doc(2), truncated_doc(2), "k2k2"), {{"domdim", "infinity-certified"}, {"diamond", "holds-certified"}});
  add(tensor_doc(linear_doc(2), truncated_doc(2), "ka2k2"), {{"domdim", "1"}, {"diamond", "fails"}});
  return out;
}

std::optional<AlgebraDoc> corpus_doc(const std::string& key) {
  std::string k = key;
  if (k.size() > 4 && k.substr(k.size() - 4) == ".alg") k.resize(k.size() - 4);
  for (auto& e : corpus())
    if (e.key == k) return e.doc;
  return std::nullopt;
}

Cache::Cache(fs::path dir) : dir_(std::move(dir)) {
  std::error_code ec;
  fs::create_directories(dir_, ec);
  if (ec || !fs::is_directory(dir_)) throw UnsupportedError("catalog directory " + dir_.string() + " is not usable");
  if (access(dir_.c_str(), W_OK) != 0) throw UnsupportedError("catalog directory " + dir_.string() + " is not writable");
}

namespace {

std::string key_text(const InvariantRecord& r) {
  std::ostringstream os;
  os << "input " << r.input_hash << "\nname " << r.name << "\ncutoff " << r.cutoff << "\nfield " << r.field << "\nseed "
     << r.seed << "\nversion " << r.version << "\n";
  return os.str();
}

}  // namespace

fs::path Cache::path_of(const InvariantRecord& key) const {
  Fnv1a h;
  h.text(key_text(key));
  return dir_ / (hex(h.value()) + ".rec");
}

std::optional<std::string> Cache::get(const InvariantRecord& key, std::string* warning) const {
  const fs::path p = path_of(key);
  std::ifstream in(p, std::ios::binary);
  if (!in) return std::nullopt;
  std::ostringstream ss;
  ss << in.rdbuf();
  const std::string body = ss.str();
  const std::string head = key_text(key) + "payload\n";
  if (body.compare(0, head.size(), head) != 0) {
    // a different version (or key) is a plain miss; anything else is corruption
    if (body.rfind("input ", 0) != 0 && warning) *warning = "ignoring corrupt cache record " + p.string();
    return std::nullopt;
  }
  const std::string rest = body.substr(head.size());
  const std::string trailer = "end\n";
  if (rest.size() < trailer.size() || rest.compare(rest.size() - trailer.size(), trailer.size(), trailer) != 0) {
    if (warning) *warning = "ignoring corrupt cache record " + p.string();
    return std::nullopt;
  }
  return rest.substr(0, rest.size() - trailer.size());
}

void Cache::put(const InvariantRecord& rec) const {
  static std::atomic<unsigned> counter{0};
  const fs::path target = path_of(rec);
  const fs::path tmp = dir_ / (target.filename().string() + ".tmp." + std::to_string(getpid()) + "." + std::to_string(counter++));
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw UnsupportedError("cannot write to catalog directory " + dir_.string());
    out << key_text(rec) << "payload\n" << rec.payload << "end\n";
    out.flush();
    if (!out) throw UnsupportedError("cannot write to catalog directory " + dir_.string());
  }
  std::error_code ec;
  fs::rename(tmp, target, ec);
  if (ec) {
    fs::remove(tmp, ec);
    throw UnsupportedError("cannot write to catalog directory " + dir_.string());
  }
}

}  // namespace domdim
