#include "precrossed/simplicial.hpp"

#include <algorithm>
#include <random>
#include <utility>

namespace precrossed {

std::string_view to_string(SpecKind kind) {
  switch (kind) {
    case SpecKind::Envelope: return "ENVELOPE";
    case SpecKind::Clauwens: return "CLAUWENS";
    case SpecKind::Coskeleton: return "COSKELETON";
    case SpecKind::Nerve: return "NERVE";
  }
  return "?";
}

std::size_t edge_index(int degree, int a, int b) {
  std::size_t before = 0;
  for (int first = 0; first < a; ++first) before += static_cast<std::size_t>(degree - first);
  return before + static_cast<std::size_t>(b - a - 1);
}

int Simplex::length() const {
  if (const auto* w = std::get_if<EnvelopeWord>(&payload)) return w->length();
  return 0;
}

// ---------------------------------------------------------------------------
// SimplicialSpec

void SimplicialSpec::push_capped(std::vector<Simplex>& out, Simplex s, std::size_t cap) {
  if (out.size() >= cap) {
    throw Error(ErrorKind::ResourceBound,
                "more than " + std::to_string(cap) + " simplices in degree " + std::to_string(s.degree));
  }
  out.push_back(std::move(s));
}

std::vector<Simplex> SimplicialSpec::enumerate(int degree, int max_length, std::size_t cap) const {
  if (degree < 0 || max_length < 0) throw Error(ErrorKind::DegreeOutOfRange, "negative degree or length");
  std::vector<Simplex> raw;
  generate(degree, max_length, cap, raw);
  std::vector<std::pair<std::string, std::size_t>> keys;
  keys.reserve(raw.size());
  for (std::size_t i = 0; i < raw.size(); ++i) keys.emplace_back(encode(raw[i]), i);
  std::sort(keys.begin(), keys.end(), [&](const auto& a, const auto& b) {
    const int la = raw[a.second].length(), lb = raw[b.second].length();
    if (la != lb) return la < lb;
    return a.first < b.first;
  });
  std::vector<Simplex> out;
  out.reserve(raw.size());
  for (const auto& k : keys) out.push_back(std::move(raw[k.second]));
  return out;
}

std::vector<Simplex> SimplicialSpec::nondegenerate(int degree, int max_length, std::size_t cap) const {
  auto all = enumerate(degree, max_length, cap);
  std::vector<Simplex> out;
  for (auto& s : all) {
    if (!is_degenerate(s)) out.push_back(std::move(s));
  }
  return out;
}

Simplex SimplicialSpec::face(int i, const Simplex& s) const {
  if (s.degree < 1 || i < 0 || i > s.degree) {
    throw Error(ErrorKind::IndexOutOfRange,
                "face d_" + std::to_string(i) + " on degree " + std::to_string(s.degree));
  }
  return do_face(i, s);
}

Simplex SimplicialSpec::degeneracy(int i, const Simplex& s) const {
  if (i < 0 || i > s.degree) {
    throw Error(ErrorKind::IndexOutOfRange,
                "degeneracy s_" + std::to_string(i) + " on degree " + std::to_string(s.degree));
  }
  return do_degeneracy(i, s);
}

bool SimplicialSpec::is_degenerate(const Simplex& s) const {
  for (int i = 0; i < s.degree; ++i) {
    if (degeneracy(i, face(i, s)) == s) return true;
  }
  return false;
}

// ---------------------------------------------------------------------------
// WordSpec

Simplex WordSpec::make(EnvelopeWord w) const {
  const int degree = w.degree;
  return Simplex{degree, std::move(w)};
}

std::string WordSpec::encode(const Simplex& s) const { return algebra_.encode(std::get<EnvelopeWord>(s.payload)); }

void WordSpec::generate(int degree, int max_length, std::size_t cap, std::vector<Simplex>& out) const {
  std::vector<Letter> alphabet;
  const auto identity = algebra_.base_identity();
  for (int pos = 0; pos < degree; ++pos) {
    for (Element x = 0; x < algebra_.carrier_size(); ++x) {
      if (identity && x == *identity) continue;
      alphabet.push_back(Letter{x, 1, pos});
      if (algebra_.mode() == WordMode::FreeLetter) alphabet.push_back(Letter{x, -1, pos});
    }
  }
  const auto allowed = [&](const std::vector<Letter>& word, const Letter& next) {
    if (word.empty()) return true;
    const auto& last = word.back();
    switch (algebra_.mode()) {
      case WordMode::GroupSyllable: return last.position != next.position;
      case WordMode::FreeLetter:
        return !(last.position == next.position && last.base == next.base && last.sign == -next.sign);
      case WordMode::MonoidLetter: return true;
    }
    return true;
  };
  std::vector<Letter> word;
  const Element e = algebra_.group().identity();
  const std::function<void()> extend = [&]() {
    push_capped(out, make(EnvelopeWord{algebra_.mode(), degree, word, e}), cap);
    if (static_cast<int>(word.size()) >= max_length) return;
    for (const auto& l : alphabet) {
      if (!allowed(word, l)) continue;
      word.push_back(l);
      extend();
      word.pop_back();
    }
  };
  extend();
}

EnvelopeWord WordSpec::group_face(int i, const EnvelopeWord& w) const {
  const int k = w.degree;
  std::vector<MixedItem> items;
  items.reserve(w.letters.size() + 1);
  for (const auto& l : w.letters) {
    const int j = l.position;
    if (i == 0 && j == 0) continue;
    if (i > j) {
      if (j < k - 1) {
        items.emplace_back(l);
      } else {
        items.emplace_back(algebra_.pi(l));
      }
    } else {
      items.emplace_back(Letter{l.base, l.sign, j - 1});
    }
  }
  items.emplace_back(w.tail);
  return algebra_.normalize_mixed(items, k - 1);
}

Simplex WordSpec::do_face(int i, const Simplex& s) const {
  auto w = group_face(i, std::get<EnvelopeWord>(s.payload));
  w.tail = algebra_.group().identity();
  return make(std::move(w));
}

Simplex WordSpec::do_degeneracy(int i, const Simplex& s) const {
  const auto& w = std::get<EnvelopeWord>(s.payload);
  std::vector<Letter> letters = w.letters;
  for (auto& l : letters) {
    if (i <= l.position) ++l.position;
  }
  return make(algebra_.reduce(std::move(letters), w.degree + 1, w.tail));
}

// ---------------------------------------------------------------------------
// CoskeletonSpec

CoskeletonSpec::CoskeletonSpec(PreCrossedModule p) : module_(std::move(p)) {
  fibers_.assign(module_.group().order(), {});
  for (Element x = 0; x < module_.x_group().order(); ++x) fibers_[module_.pi()[x]].push_back(x);
}

CoskeletonFamily CoskeletonSpec::normalize(CoskeletonFamily f) const {
  const auto& g = module_.group();
  const Element h = g.inverse(f.vertices.back());
  for (auto& v : f.vertices) v = g.mul(v, h);
  return f;
}

std::string CoskeletonSpec::encode(const Simplex& s) const {
  const auto& f = std::get<CoskeletonFamily>(s.payload);
  const auto& g = module_.group();
  const auto& x = module_.x_group();
  std::string out;
  for (std::size_t a = 0; a < f.vertices.size(); ++a) {
    if (a) out += ",";
    out += g.label(f.vertices[a]);
  }
  out += ";";
  const int k = s.degree;
  bool first = true;
  for (int a = 0; a <= k; ++a) {
    for (int b = a + 1; b <= k; ++b) {
      if (!first) out += ",";
      first = false;
      out += "(" + x.label(f.edges[edge_index(k, a, b)]) + "," + g.label(f.vertices[b]) + ")";
    }
  }
  return out;
}

void CoskeletonSpec::generate(int degree, int, std::size_t cap, std::vector<Simplex>& out) const {
  const auto& g = module_.group();
  const int k = degree;
  std::vector<std::pair<int, int>> pairs;
  for (int a = 0; a <= k; ++a) {
    for (int b = a + 1; b <= k; ++b) pairs.emplace_back(a, b);
  }
  CoskeletonFamily f;
  f.vertices.assign(k + 1, g.identity());
  f.edges.assign(pairs.size(), module_.x_group().identity());

  std::function<void(std::size_t)> choose_edges = [&](std::size_t p) {
    if (p == pairs.size()) {
      push_capped(out, Simplex{k, f}, cap);
      return;
    }
    const auto [a, b] = pairs[p];
    for (Element x : fibers_[g.mul(f.vertices[a], g.inverse(f.vertices[b]))]) {
      f.edges[p] = x;
      choose_edges(p + 1);
    }
  };
  std::function<void(int)> choose_vertices = [&](int a) {
    if (a == k) {
      choose_edges(0);
      return;
    }
    for (Element v = 0; v < g.order(); ++v) {
      f.vertices[a] = v;
      choose_vertices(a + 1);
    }
  };
  choose_vertices(0);
}

Simplex CoskeletonSpec::do_face(int i, const Simplex& s) const {
  const auto& f = std::get<CoskeletonFamily>(s.payload);
  const int k = s.degree;
  CoskeletonFamily out;
  for (int a = 0; a <= k; ++a) {
    if (a != i) out.vertices.push_back(f.vertices[a]);
  }
  for (int a = 0; a <= k; ++a) {
    for (int b = a + 1; b <= k; ++b) {
      if (a != i && b != i) out.edges.push_back(f.edges[edge_index(k, a, b)]);
    }
  }
  return Simplex{k - 1, normalize(std::move(out))};
}

Simplex CoskeletonSpec::do_degeneracy(int i, const Simplex& s) const {
  const auto& f = std::get<CoskeletonFamily>(s.payload);
  const int k = s.degree;
  const auto collapse = [i](int j) { return j <= i ? j : j - 1; };
  CoskeletonFamily out;
  for (int a = 0; a <= k + 1; ++a) out.vertices.push_back(f.vertices[collapse(a)]);
  for (int a = 0; a <= k + 1; ++a) {
    for (int b = a + 1; b <= k + 1; ++b) {
      const int ca = collapse(a), cb = collapse(b);
      out.edges.push_back(ca == cb ? module_.x_group().identity() : f.edges[edge_index(k, ca, cb)]);
    }
  }
  return Simplex{k + 1, std::move(out)};
}

// ---------------------------------------------------------------------------
// NerveSpec

std::string NerveSpec::encode(const Simplex& s) const {
  const auto& t = std::get<NerveTuple>(s.payload);
  std::string out = "(";
  for (std::size_t i = 0; i < t.size(); ++i) {
    if (i) out += ",";
    out += group_.label(t[i]);
  }
  return out + ")";
}

void NerveSpec::generate(int degree, int, std::size_t cap, std::vector<Simplex>& out) const {
  NerveTuple t(degree, 0);
  std::function<void(int)> fill = [&](int pos) {
    if (pos == degree) {
      push_capped(out, Simplex{degree, t}, cap);
      return;
    }
    for (Element g = 0; g < group_.order(); ++g) {
      t[pos] = g;
      fill(pos + 1);
    }
  };
  fill(0);
}

Simplex NerveSpec::do_face(int i, const Simplex& s) const {
  const auto& t = std::get<NerveTuple>(s.payload);
  const int k = s.degree;
  NerveTuple out;
  if (i == 0) {
    out.assign(t.begin() + 1, t.end());
  } else if (i == k) {
    out.assign(t.begin(), t.end() - 1);
  } else {
    out.assign(t.begin(), t.begin() + (i - 1));
    out.push_back(group_.mul(t[i - 1], t[i]));
    out.insert(out.end(), t.begin() + (i + 1), t.end());
  }
  return Simplex{k - 1, std::move(out)};
}

Simplex NerveSpec::do_degeneracy(int i, const Simplex& s) const {
  NerveTuple out = std::get<NerveTuple>(s.payload);
  out.insert(out.begin() + i, group_.identity());
  return Simplex{s.degree + 1, std::move(out)};
}

// ---------------------------------------------------------------------------
// Builders

std::shared_ptr<const WordSpec> build_envelope(const PreCrossedModule& p, WordMode mode) {
  return std::make_shared<const WordSpec>(SpecKind::Envelope, WordAlgebra::for_precrossed(p, mode));
}

std::shared_ptr<const WordSpec> build_envelope(const AugmentedRack& a, WordMode mode) {
  return std::make_shared<const WordSpec>(SpecKind::Envelope, WordAlgebra::for_augmented_rack(a, mode));
}

std::shared_ptr<const WordSpec> build_clauwens(const AugmentedRack& a) {
  return std::make_shared<const WordSpec>(SpecKind::Clauwens,
                                          WordAlgebra::for_augmented_rack(a, WordMode::MonoidLetter));
}

std::shared_ptr<const CoskeletonSpec> build_coskeleton(const PreCrossedModule& p) {
  return std::make_shared<const CoskeletonSpec>(p);
}

std::shared_ptr<const NerveSpec> build_nerve(const FiniteGroup& g) { return std::make_shared<const NerveSpec>(g); }

SimplicialMap canonical_to_coskeleton(const PreCrossedModule& p) {
  auto envelope = build_envelope(p, WordMode::GroupSyllable);
  auto coskeleton = build_coskeleton(p);
  auto rule = [envelope, coskeleton](const Simplex& s) {
    const auto& w = std::get<EnvelopeWord>(s.payload);
    const int k = s.degree;
    const auto& module = coskeleton->module();
    // Restriction to a set of vertices: delete the others, highest first,
    // so lower indices stay put.
    const auto restrict_to = [&](int a, int b) {
      EnvelopeWord r = w;
      for (int j = k; j >= 0; --j) {
        if (j != a && j != b) r = envelope->group_face(j, r);
      }
      return r;
    };
    CoskeletonFamily f;
    for (int a = 0; a <= k; ++a) f.vertices.push_back(restrict_to(a, a).tail);
    for (int a = 0; a <= k; ++a) {
      for (int b = a + 1; b <= k; ++b) {
        const auto edge = restrict_to(a, b);
        f.edges.push_back(edge.letters.empty() ? module.x_group().identity() : edge.letters.front().base);
      }
    }
    return Simplex{k, coskeleton->normalize(std::move(f))};
  };
  return SimplicialMap{envelope, coskeleton, std::move(rule)};
}

// ---------------------------------------------------------------------------
// Identity checks

namespace {

std::vector<Simplex> sample(std::vector<Simplex> all, std::size_t sample_size, unsigned seed) {
  if (all.size() <= sample_size) return all;
  std::vector<Simplex> out;
  std::mt19937 rng(seed);
  std::sample(all.begin(), all.end(), std::back_inserter(out), sample_size, rng);
  return out;
}

}  // namespace

IdentityReport check_simplicial_identities(const SimplicialSpec& spec, int max_degree, int max_length,
                                           std::size_t sample_size) {
  IdentityReport report;
  auto fail = [&](const std::string& what, const Simplex& s) {
    report.ok = false;
    report.violation = what + " on " + spec.encode(s) + " (degree " + std::to_string(s.degree) + ")";
  };
  for (int k = 0; k <= max_degree && report.ok; ++k) {
    for (const auto& s : sample(spec.enumerate(k, max_length), sample_size, 7919u + k)) {
      ++report.simplices_checked;
      for (int j = 0; j <= k && k >= 2 && report.ok; ++j) {
        for (int i = 0; i < j; ++i) {
          if (spec.face(i, spec.face(j, s)) != spec.face(j - 1, spec.face(i, s))) {
            fail("d_" + std::to_string(i) + " d_" + std::to_string(j) + " != d_" + std::to_string(j - 1) +
                     " d_" + std::to_string(i),
                 s);
            break;
          }
        }
      }
      for (int j = 0; j <= k && report.ok; ++j) {
        const auto sj = spec.degeneracy(j, s);
        for (int i = 0; i <= k + 1 && report.ok; ++i) {
          const auto lhs = spec.face(i, sj);
          bool ok = true;
          if (i < j) {
            ok = lhs == spec.degeneracy(j - 1, spec.face(i, s));
          } else if (i == j || i == j + 1) {
            ok = lhs == s;
          } else {
            ok = lhs == spec.degeneracy(j, spec.face(i - 1, s));
          }
          if (!ok) fail("d_" + std::to_string(i) + " s_" + std::to_string(j), s);
        }
        for (int i = 0; i <= j && report.ok; ++i) {
          if (spec.degeneracy(i, sj) != spec.degeneracy(j + 1, spec.degeneracy(i, s))) {
            fail("s_" + std::to_string(i) + " s_" + std::to_string(j) + " != s_" + std::to_string(j + 1) +
                     " s_" + std::to_string(i),
                 s);
          }
        }
      }
      if (!report.ok) break;
    }
  }
  return report;
}

IdentityReport check_commutes(const SimplicialMap& f, int max_degree, int max_length, std::size_t sample_size) {
  IdentityReport report;
  for (int k = 0; k <= max_degree && report.ok; ++k) {
    for (const auto& s : sample(f.source->enumerate(k, max_length), sample_size, 104729u + k)) {
      ++report.simplices_checked;
      const auto image = f(s);
      for (int i = 0; i <= k && report.ok; ++i) {
        if (k >= 1 && f.target->face(i, image) != f(f.source->face(i, s))) {
          report.ok = false;
          report.violation = "d_" + std::to_string(i) + " on " + f.source->encode(s);
        } else if (f.target->degeneracy(i, image) != f(f.source->degeneracy(i, s))) {
          report.ok = false;
          report.violation = "s_" + std::to_string(i) + " on " + f.source->encode(s);
        }
      }
      if (!report.ok) break;
    }
  }
  return report;
}

}  // namespace precrossed
