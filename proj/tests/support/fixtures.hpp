#pragma once

#include <functional>
#include <optional>
#include <string>

#include "precrossed/registry.hpp"

namespace test_support {

inline const precrossed::Registry& fixtures() {
  static const auto registry = precrossed::parse_input(PRECROSSED_DATA_DIR "/fixtures.txt");
  return registry;
}

template <class T>
const T& get(const std::string& name) {
  return std::get<T>(fixtures().at(name));
}

/// Kind of the Error thrown by f, or nullopt when nothing is thrown.
inline std::optional<precrossed::ErrorKind> error_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const precrossed::Error& e) {
    return e.kind();
  }
  return std::nullopt;
}

}  // namespace test_support
