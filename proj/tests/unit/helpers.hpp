#pragma once

#include "antidiag/catalog.hpp"
#include "antidiag/error.hpp"
#include "antidiag/families.hpp"
#include "antidiag/group.hpp"

#include <gtest/gtest.h>

#include <initializer_list>
#include <map>
#include <stdexcept>
#include <string>

namespace antidiag::test {

inline FamilySpec spec(FamilyKind kind, std::initializer_list<std::int64_t> params = {}) {
  return FamilySpec{kind, std::vector<std::int64_t>(params), {}};
}

inline Group make(FamilyKind kind, std::initializer_list<std::int64_t> params = {}) {
  return make_family(spec(kind, params));
}

/// A bundled catalog entry that does not depend on earlier entries.
inline Group catalog_group(const std::string& name) {
  std::map<std::string, Group> built;
  for (const auto& e : bundled_catalog()) {
    built.emplace(e.name, build_entry(e, built));
    if (e.name == name) return built.at(name);
  }
  throw std::runtime_error("no catalog entry " + name);
}

/// Runs `fn` and returns the error code it throws; fails the test otherwise.
template <typename Fn>
ErrorCode code_of(Fn&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "expected antidiag::Error";
  return ErrorCode::Io;
}

}  // namespace antidiag::test
