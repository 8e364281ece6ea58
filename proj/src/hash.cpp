#include "domdim/hash.hpp"

#include <cstdio>

namespace domdim {

void Fnv1a::bytes(const void* data, std::size_t n) {
  const auto* p = static_cast<const unsigned char*>(data);
  for (std::size_t i = 0; i < n; ++i) {
    h_ ^= p[i];
    h_ *= 1099511628211ULL;
  }
}

void Fnv1a::text(std::string_view s) {
  integer(static_cast<std::int64_t>(s.size()));
  bytes(s.data(), s.size());
}

void Fnv1a::integer(std::int64_t v) {
  unsigned char b[8];
  for (int i = 0; i < 8; ++i) b[i] = static_cast<unsigned char>((static_cast<std::uint64_t>(v) >> (8 * i)) & 0xff);
  bytes(b, 8);
}

void Fnv1a::matrix(const Matrix& m) {
  integer(m.rows());
  integer(m.cols());
  for (Index i = 0; i < m.rows(); ++i)
    for (Index j = 0; j < m.cols(); ++j) integer(m(i, j));
}

std::string hex(std::uint64_t h) {
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

std::uint64_t content_hash(const Algebra& a) {
  Fnv1a h;
  h.text("algebra");
  h.integer(a.field().modulus());
  h.integer(a.dim());
  for (Index b = 0; b < a.dim(); ++b) h.matrix(a.left_mult(b));
  h.matrix(a.unit());
  for (const auto& e : a.idempotents()) h.matrix(e);
  return h.value();
}

std::uint64_t content_hash(const ModuleRep& m) {
  Fnv1a h;
  h.text("module");
  h.integer(static_cast<std::int64_t>(content_hash(m.algebra())));
  for (const auto& x : m.actions()) h.matrix(x);
  return h.value();
}

}  // namespace domdim
