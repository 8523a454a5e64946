#pragma once

#include <memory>
#include <string>

#include "alcove/affine.hpp"
#include "alcove/weyl.hpp"

namespace alcove::testing {

// One root system with its group and complex; member order matters.
struct Ctx {
  RootSystem rs;
  WeylGroup group;
  AffineComplex cx;

  explicit Ctx(const std::string& label)
      : rs(RootSystem::build(label)), group(rs), cx(rs, group) {}
  Ctx(const Ctx&) = delete;
  Ctx& operator=(const Ctx&) = delete;
};

inline Root root(const RootSystem& rs, const std::string& text) { return rs.parse_root(text); }

inline int elem(const WeylGroup& g, const std::vector<int>& letters) {
  return g.element_from_word(letters);
}

}  // namespace alcove::testing
