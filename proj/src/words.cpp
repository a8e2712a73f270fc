#include "precrossed/words.hpp"

namespace precrossed {

std::string_view to_string(WordMode mode) {
  switch (mode) {
    case WordMode::GroupSyllable: return "GROUP_SYLLABLE";
    case WordMode::FreeLetter: return "FREE_LETTER";
    case WordMode::MonoidLetter: return "MONOID_LETTER";
  }
  return "?";
}

WordAlgebra WordAlgebra::for_precrossed(const PreCrossedModule& p, WordMode mode) {
  if (mode == WordMode::MonoidLetter) {
    throw Error(ErrorKind::ModeMismatch, "the monoid variant is built from an augmented rack");
  }
  WordAlgebra w;
  w.mode_ = mode;
  w.group_ = p.group();
  if (mode == WordMode::GroupSyllable) w.x_group_ = p.x_group();
  w.labels_ = p.x_group().labels();
  w.action_ = p.action().table();
  w.pi_ = p.pi();
  return w;
}

WordAlgebra WordAlgebra::for_augmented_rack(const AugmentedRack& a, WordMode mode) {
  if (mode == WordMode::GroupSyllable) {
    throw Error(ErrorKind::ModeMismatch, "GROUP_SYLLABLE words need a pre-crossed module");
  }
  WordAlgebra w;
  w.mode_ = mode;
  w.group_ = a.group();
  w.labels_ = a.carrier();
  w.action_ = a.action().table();
  w.pi_ = a.pi();
  return w;
}

std::optional<Element> WordAlgebra::base_identity() const {
  if (x_group_) return x_group_->identity();
  return std::nullopt;
}

Element WordAlgebra::pi(const Letter& l) const {
  const Element p = pi_[l.base];
  return l.sign > 0 ? p : group_.inverse(p);
}

void WordAlgebra::check_letter(const Letter& l, int degree) const {
  if (l.position < 0 || l.position >= degree) {
    throw Error(ErrorKind::IndexOutOfRange,
                "letter position " + std::to_string(l.position) + " in degree " + std::to_string(degree));
  }
  if (l.base < 0 || l.base >= carrier_size()) throw Error(ErrorKind::IndexOutOfRange, "letter base out of range");
  if (l.sign != 1 && (l.sign != -1 || mode_ != WordMode::FreeLetter)) {
    throw Error(ErrorKind::ModeMismatch, "inverse letters only exist in FREE_LETTER mode");
  }
}

EnvelopeWord WordAlgebra::reduce(std::vector<Letter> letters, int degree, Element tail) const {
  EnvelopeWord out{mode_, degree, {}, tail};
  out.letters.reserve(letters.size());
  for (const auto& l : letters) {
    check_letter(l, degree);
    switch (mode_) {
      case WordMode::GroupSyllable: {
        if (l.base == x_group_->identity()) break;
        if (!out.letters.empty() && out.letters.back().position == l.position) {
          auto& top = out.letters.back();
          top.base = x_group_->mul(top.base, l.base);
          if (top.base == x_group_->identity()) out.letters.pop_back();
        } else {
          out.letters.push_back(l);
        }
        break;
      }
      case WordMode::FreeLetter: {
        if (!out.letters.empty()) {
          const auto& top = out.letters.back();
          if (top.position == l.position && top.base == l.base && top.sign == -l.sign) {
            out.letters.pop_back();
            break;
          }
        }
        out.letters.push_back(l);
        break;
      }
      case WordMode::MonoidLetter:
        out.letters.push_back(l);
        break;
    }
  }
  return out;
}

EnvelopeWord WordAlgebra::twist(Element g, const EnvelopeWord& w) const {
  const Element inv = group_.inverse(g);
  EnvelopeWord out = w;
  for (auto& l : out.letters) l.base = act(l.base, inv);
  return out;
}

EnvelopeWord WordAlgebra::multiply(const EnvelopeWord& a, const EnvelopeWord& b) const {
  if (a.mode != b.mode || a.mode != mode_) throw Error(ErrorKind::ModeMismatch, "words of different modes");
  if (a.degree != b.degree) throw Error(ErrorKind::DegreeMismatch, "words of different degrees");
  std::vector<Letter> letters = a.letters;
  const auto twisted = twist(a.tail, b);
  letters.insert(letters.end(), twisted.letters.begin(), twisted.letters.end());
  return reduce(std::move(letters), a.degree, group_.mul(a.tail, b.tail));
}

EnvelopeWord WordAlgebra::normalize_mixed(std::span<const MixedItem> items, int degree) const {
  // A letter preceded by group elements with product g ends up as
  // (y^{g^-1}) once g has been moved past it.
  Element acc = group_.identity();
  std::vector<Letter> letters;
  for (const auto& item : items) {
    if (const auto* g = std::get_if<Element>(&item)) {
      acc = group_.mul(acc, *g);
    } else {
      Letter l = std::get<Letter>(item);
      l.base = act(l.base, group_.inverse(acc));
      letters.push_back(l);
    }
  }
  return reduce(std::move(letters), degree, acc);
}

EnvelopeWord WordAlgebra::identity_word(int degree) const {
  return EnvelopeWord{mode_, degree, {}, group_.identity()};
}

std::string WordAlgebra::encode(const EnvelopeWord& w) const {
  std::string out;
  for (const auto& l : w.letters) {
    out += "(";
    out += labels_[l.base];
    if (l.sign < 0) out += "^-1";
    out += "@";
    out += std::to_string(l.position);
    out += ")";
  }
  if (out.empty()) out = "1";
  if (w.tail != group_.identity()) out += "|" + group_.label(w.tail);
  return out;
}

}  // namespace precrossed
