#pragma once

// Finite algebraic input objects: groups as Cayley tables, right actions,
// racks, augmented racks and pre-crossed modules. Every object is validated
// on construction and immutable afterwards.

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "precrossed/error.hpp"

namespace precrossed {

/// Index of an element inside some finite table.
using Element = int;
using Table = std::vector<std::vector<int>>;
/// Permutation of {0..n-1} stored as its image list.
using Permutation = std::vector<int>;

class FiniteGroup {
 public:
  /// Validates a Cayley table. Labels default to "0", "1", ...
  static FiniteGroup from_table(Table table, std::vector<std::string> labels = {});
  /// Closure of permutation generators. Products compose left to right,
  /// (p*q)(i) = q(p(i)), so that a permutation group acts on the right.
  /// Elements are sorted by image list; labels use 1-based cycle notation.
  static FiniteGroup from_permutations(const std::vector<Permutation>& generators, int points);
  static FiniteGroup cyclic(int n);
  static FiniteGroup trivial() { return cyclic(1); }

  int order() const { return static_cast<int>(table_.size()); }
  Element identity() const { return identity_; }
  Element mul(Element a, Element b) const { return table_[a][b]; }
  Element inverse(Element a) const { return inverse_[a]; }
  /// h^-1 g h, the right conjugation action of h on g.
  Element conjugate(Element g, Element h) const { return mul(mul(inverse(h), g), h); }

  const Table& table() const { return table_; }
  const std::vector<std::string>& labels() const { return labels_; }
  const std::string& label(Element a) const { return labels_[a]; }
  /// Resolves a label, or a plain index when no label matches.
  std::optional<Element> find(std::string_view label) const;

  /// Closed subset as a group in its own right; `embedding[i]` is the
  /// element of *this corresponding to element i of the result.
  FiniteGroup subgroup(const std::vector<Element>& elements, std::vector<Element>* embedding) const;

  bool operator==(const FiniteGroup& other) const {
    return table_ == other.table_ && labels_ == other.labels_;
  }

 private:
  FiniteGroup() = default;

  Table table_;
  std::vector<std::string> labels_;
  Element identity_ = 0;
  std::vector<Element> inverse_;
};

inline FiniteGroup validate_group(Table table, std::vector<std::string> labels = {}) {
  return FiniteGroup::from_table(std::move(table), std::move(labels));
}

/// Right action x -> x^g of a finite group on a finite carrier.
class RightAction {
 public:
  /// When `carrier_group` is given the action must also be by automorphisms.
  static RightAction validate(const FiniteGroup& group, int carrier_size, Table table,
                              const FiniteGroup* carrier_group = nullptr);
  static RightAction trivial(const FiniteGroup& group, int carrier_size);
  /// Conjugation action of a group on itself.
  static RightAction conjugation(const FiniteGroup& group);

  int carrier_size() const { return static_cast<int>(table_.size()); }
  int group_order() const { return group_order_; }
  Element apply(Element x, Element g) const { return table_[x][g]; }
  const Table& table() const { return table_; }
  bool is_trivial() const;

  bool operator==(const RightAction& other) const { return table_ == other.table_; }

 private:
  Table table_;
  int group_order_ = 0;
};

class Rack {
 public:
  /// `op[x][y]` is x ◁ y.
  static Rack validate(Table op);

  int size() const { return static_cast<int>(op_.size()); }
  Element op(Element x, Element y) const { return op_[x][y]; }
  const Table& table() const { return op_; }

  bool operator==(const Rack& other) const { return op_ == other.op_; }

 private:
  Table op_;
};

inline Rack validate_rack(Table op) { return Rack::validate(std::move(op)); }

/// A right G-set X with an equivariant map pi: X -> G, G acting on itself by
/// conjugation.
class AugmentedRack {
 public:
  static AugmentedRack validate(std::vector<std::string> carrier, FiniteGroup group, Table action,
                                std::vector<Element> pi);

  int size() const { return static_cast<int>(carrier_.size()); }
  const std::vector<std::string>& carrier() const { return carrier_; }
  const FiniteGroup& group() const { return group_; }
  const RightAction& action() const { return action_; }
  const std::vector<Element>& pi() const { return pi_; }
  /// x ◁ y = x · pi(y).
  const Rack& induced_rack() const { return rack_; }

  bool operator==(const AugmentedRack& other) const {
    return carrier_ == other.carrier_ && group_ == other.group_ && action_ == other.action_ &&
           pi_ == other.pi_;
  }

 private:
  AugmentedRack(std::vector<std::string> carrier, FiniteGroup group, RightAction action,
                std::vector<Element> pi, Rack rack)
      : carrier_(std::move(carrier)),
        group_(std::move(group)),
        action_(std::move(action)),
        pi_(std::move(pi)),
        rack_(std::move(rack)) {}

  std::vector<std::string> carrier_;
  FiniteGroup group_;
  RightAction action_;
  std::vector<Element> pi_;
  Rack rack_;
};

inline AugmentedRack validate_augmented_rack(std::vector<std::string> carrier, FiniteGroup group,
                                             Table action, std::vector<Element> pi) {
  return AugmentedRack::validate(std::move(carrier), std::move(group), std::move(action),
                                 std::move(pi));
}

/// Conjugation-closed subset of a group, acted on by conjugation and
/// augmented by the inclusion.
AugmentedRack conjugation_structure(const FiniteGroup& group, const std::vector<Element>& subset);

class PreCrossedModule {
 public:
  static PreCrossedModule validate(FiniteGroup x_group, FiniteGroup group, Table action,
                                   std::vector<Element> pi);

  const FiniteGroup& x_group() const { return x_group_; }
  const FiniteGroup& group() const { return group_; }
  const RightAction& action() const { return action_; }
  const std::vector<Element>& pi() const { return pi_; }

  bool pi_surjective() const;
  /// The same X with G replaced by the image pi(X).
  PreCrossedModule restrict_to_image() const;
  /// Forgets the group structure of X.
  AugmentedRack as_augmented_rack() const;

  bool operator==(const PreCrossedModule& other) const {
    return x_group_ == other.x_group_ && group_ == other.group_ && action_ == other.action_ &&
           pi_ == other.pi_;
  }

 private:
  PreCrossedModule(FiniteGroup x, FiniteGroup g, RightAction a, std::vector<Element> pi)
      : x_group_(std::move(x)), group_(std::move(g)), action_(std::move(a)), pi_(std::move(pi)) {}

  FiniteGroup x_group_;
  FiniteGroup group_;
  RightAction action_;
  std::vector<Element> pi_;
};

inline PreCrossedModule validate_precrossed(FiniteGroup x_group, FiniteGroup group, Table action,
                                            std::vector<Element> pi) {
  return PreCrossedModule::validate(std::move(x_group), std::move(group), std::move(action),
                                    std::move(pi));
}

/// The composite X -> G -> Aut(X).
struct PrecrossedAction {
  /// phi[x][y] = y^{pi(x)}.
  std::vector<Permutation> phi;
  /// phi(X) as a permutation group on X.
  FiniteGroup image;
  /// phi: X -> phi(X) as a pre-crossed module in its own right.
  PreCrossedModule module;
};

PrecrossedAction precrossed_action(const PreCrossedModule& p);

/// 1-based cycle notation, "()" for the identity.
std::string cycle_notation(const Permutation& p);

}  // namespace precrossed
