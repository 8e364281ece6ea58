#pragma once

// FNV-1a content hashes of algebras and modules (structure constants, not labels).

#include <cstdint>
#include <string>
#include <string_view>

#include "domdim/module.hpp"

namespace domdim {

class Fnv1a {
 public:
  void bytes(const void* data, std::size_t n);
  void text(std::string_view s);
  void integer(std::int64_t v);
  void matrix(const Matrix& m);
  std::uint64_t value() const { return h_; }

 private:
  std::uint64_t h_ = 1469598103934665603ULL;
};

/// 16 lowercase hex digits.
std::string hex(std::uint64_t h);

std::uint64_t content_hash(const Algebra& a);
std::uint64_t content_hash(const ModuleRep& m);

}  // namespace domdim
