#pragma once

// Normal forms for elements of the degree-k envelope group
// (X * ... * X) ⋊ G and its free-group and free-monoid variants.
//
// A word is a sequence of position-tagged letters followed by a single
// element of G (the tail). Moving a group element g to the right past a
// letter uses g·(y)_j = (y^{g^-1})_j·g, so every element has exactly one
// representative with the whole G-part in the tail.

#include <optional>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "precrossed/algebra.hpp"

namespace precrossed {

enum class WordMode {
  /// Free product of k copies of a finite group X: adjacent letters sit at
  /// distinct positions and no letter is the identity.
  GroupSyllable,
  /// Free product of k copies of the free group F(X) on a finite set X.
  FreeLetter,
  /// Free monoid on k copies of X (no cancellation at all).
  MonoidLetter,
};

std::string_view to_string(WordMode mode);

struct Letter {
  Element base = 0;
  int sign = 1;
  int position = 0;

  auto operator<=>(const Letter&) const = default;
};

struct EnvelopeWord {
  WordMode mode = WordMode::GroupSyllable;
  int degree = 0;
  std::vector<Letter> letters;
  Element tail = 0;

  int length() const { return static_cast<int>(letters.size()); }
  bool operator==(const EnvelopeWord&) const = default;
};

/// A letter or a bare group element, as produced by applying a face map
/// letter by letter.
using MixedItem = std::variant<Letter, Element>;

/// Everything the word operations need: the mode, the acting group G, the
/// action on letter bases and pi on letter bases (and the multiplication of
/// X in GroupSyllable mode).
class WordAlgebra {
 public:
  /// GroupSyllable over the group X, or FreeLetter over the underlying set.
  static WordAlgebra for_precrossed(const PreCrossedModule& p, WordMode mode);
  /// FreeLetter (the pre-crossed module F(X) -> G) or MonoidLetter.
  static WordAlgebra for_augmented_rack(const AugmentedRack& a, WordMode mode);

  WordMode mode() const { return mode_; }
  const FiniteGroup& group() const { return group_; }
  int carrier_size() const { return static_cast<int>(labels_.size()); }
  const std::string& base_label(Element x) const { return labels_[x]; }
  /// Identity of X in GroupSyllable mode.
  std::optional<Element> base_identity() const;

  /// pi of a signed letter.
  Element pi(const Letter& l) const;
  /// x^g on letter bases.
  Element act(Element x, Element g) const { return action_[x][g]; }

  EnvelopeWord reduce(std::vector<Letter> letters, int degree, Element tail) const;
  EnvelopeWord multiply(const EnvelopeWord& a, const EnvelopeWord& b) const;
  /// Replaces every base x by x^{g^-1}; positions, signs and tail are kept.
  /// This is the effect on letters of moving g rightward past them.
  EnvelopeWord twist(Element g, const EnvelopeWord& w) const;
  /// Pushes all group elements into the tail, twisting the letters they
  /// pass, then reduces.
  EnvelopeWord normalize_mixed(std::span<const MixedItem> items, int degree) const;
  EnvelopeWord identity_word(int degree) const;

  /// `(x@j)` and `(x^-1@j)` letters, `|g` tail suffix when g != 1, `1` for
  /// the empty word.
  std::string encode(const EnvelopeWord& w) const;

 private:
  WordAlgebra() = default;
  void check_letter(const Letter& l, int degree) const;

  WordMode mode_ = WordMode::GroupSyllable;
  FiniteGroup group_ = FiniteGroup::trivial();
  std::optional<FiniteGroup> x_group_;
  std::vector<std::string> labels_;
  Table action_;
  std::vector<Element> pi_;
};

}  // namespace precrossed
