#pragma once

// Named algebraic objects parsed from one input file.
//
// Line-oriented format, `#` starts a comment:
//
//   group Z2
//     elements: e, t
//     table: e,t / t,e
//   group S3
//     permutations: (1,2), (1,2,3)
//   augrack T
//     group: S3
//     subset: (1,2), (1,3), (2,3)
//   precrossed P { x = Z2; g = Z2; pi = id; action = trivial }
//
// Block kinds are group, rack, augrack and precrossed; keys are listed in
// README.md. Element references are labels (or plain indices when no label
// matches).

#include <filesystem>
#include <map>
#include <string>
#include <variant>
#include <vector>

#include "precrossed/algebra.hpp"

namespace precrossed {

struct LabeledRack {
  Rack rack;
  std::vector<std::string> labels;

  bool operator==(const LabeledRack&) const = default;
};

using RegistryObject = std::variant<FiniteGroup, LabeledRack, AugmentedRack, PreCrossedModule>;

std::string_view kind_name(const RegistryObject& object);

class Registry {
 public:
  void add(const std::string& name, RegistryObject object);

  bool contains(const std::string& name) const { return objects_.count(name) != 0; }
  /// Throws ParseError naming the identifier when absent.
  const RegistryObject& at(const std::string& name) const;
  /// Declaration order.
  const std::vector<std::string>& names() const { return order_; }

 private:
  std::map<std::string, RegistryObject> objects_;
  std::vector<std::string> order_;
};

Registry parse_registry(std::string_view text);
Registry parse_input(const std::filesystem::path& path);

/// Explicit-table rendering that parse_registry reads back to equal objects.
std::string serialize(const Registry& registry);

}  // namespace precrossed
