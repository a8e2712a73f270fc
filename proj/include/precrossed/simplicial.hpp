#pragma once

// Simplicial sets that are finite in each degree (after truncation by word
// length), described by enumeration plus face and degeneracy maps.
//
// The envelope and Clauwens objects are quotients by the free right action
// of G: a simplex is the tail-free representative of its coset. The
// coskeleton is normalized so that its last vertex is the identity.

#include <cstddef>
#include <functional>
#include <memory>
#include <string>
#include <variant>
#include <vector>

#include "precrossed/algebra.hpp"
#include "precrossed/words.hpp"

namespace precrossed {

enum class SpecKind { Envelope, Clauwens, Coskeleton, Nerve };

std::string_view to_string(SpecKind kind);

inline constexpr std::size_t kDefaultSimplexCap = 200000;

/// A k-simplex of the 1-coskeleton: vertices v_0..v_k in G and, for every
/// a < b, an edge y_ab = (x_ab, v_b) in X ⋊ G with pi(x_ab) v_b = v_a. Only
/// x_ab is stored; edges are listed as (0,1),(0,2),...,(0,k),(1,2),...
struct CoskeletonFamily {
  std::vector<Element> vertices;
  std::vector<Element> edges;

  bool operator==(const CoskeletonFamily&) const = default;
};

/// Index of edge (a,b), a < b, in a family of the given degree.
std::size_t edge_index(int degree, int a, int b);

/// (g_1, ..., g_k) in the bar notation.
using NerveTuple = std::vector<Element>;

struct Simplex {
  int degree = 0;
  std::variant<EnvelopeWord, CoskeletonFamily, NerveTuple> payload;

  /// Letter count for word payloads, 0 otherwise.
  int length() const;
  bool operator==(const Simplex&) const = default;
};

class SimplicialSpec {
 public:
  virtual ~SimplicialSpec() = default;

  virtual SpecKind kind() const = 0;
  /// True when enumeration depends on the length bound.
  virtual bool truncated() const = 0;
  virtual std::string encode(const Simplex& s) const = 0;

  /// All simplices of the given degree (and length <= max_length), sorted by
  /// (length, encoding). Throws ResourceBound past `cap`.
  std::vector<Simplex> enumerate(int degree, int max_length, std::size_t cap = kDefaultSimplexCap) const;
  /// Same, restricted to nondegenerate simplices.
  std::vector<Simplex> nondegenerate(int degree, int max_length, std::size_t cap = kDefaultSimplexCap) const;

  Simplex face(int i, const Simplex& s) const;
  Simplex degeneracy(int i, const Simplex& s) const;
  /// s == s_i(d_i s) for some i.
  bool is_degenerate(const Simplex& s) const;

 protected:
  virtual void generate(int degree, int max_length, std::size_t cap, std::vector<Simplex>& out) const = 0;
  virtual Simplex do_face(int i, const Simplex& s) const = 0;
  virtual Simplex do_degeneracy(int i, const Simplex& s) const = 0;

  static void push_capped(std::vector<Simplex>& out, Simplex s, std::size_t cap);
};

using SpecPtr = std::shared_ptr<const SimplicialSpec>;

/// Envelope (any word mode) or Clauwens (MonoidLetter) quotient by G.
class WordSpec : public SimplicialSpec {
 public:
  WordSpec(SpecKind kind, WordAlgebra algebra) : kind_(kind), algebra_(std::move(algebra)) {}

  SpecKind kind() const override { return kind_; }
  bool truncated() const override { return true; }
  std::string encode(const Simplex& s) const override;

  const WordAlgebra& algebra() const { return algebra_; }
  Simplex make(EnvelopeWord w) const;
  /// Face of an element of the simplicial group itself (tail kept).
  EnvelopeWord group_face(int i, const EnvelopeWord& w) const;

 protected:
  void generate(int degree, int max_length, std::size_t cap, std::vector<Simplex>& out) const override;
  Simplex do_face(int i, const Simplex& s) const override;
  Simplex do_degeneracy(int i, const Simplex& s) const override;

 private:
  SpecKind kind_;
  WordAlgebra algebra_;
};

class CoskeletonSpec : public SimplicialSpec {
 public:
  explicit CoskeletonSpec(PreCrossedModule p);

  SpecKind kind() const override { return SpecKind::Coskeleton; }
  bool truncated() const override { return false; }
  std::string encode(const Simplex& s) const override;

  const PreCrossedModule& module() const { return module_; }
  /// Right-multiplies by v_k^-1 so that the last vertex is the identity.
  CoskeletonFamily normalize(CoskeletonFamily f) const;

 protected:
  void generate(int degree, int max_length, std::size_t cap, std::vector<Simplex>& out) const override;
  Simplex do_face(int i, const Simplex& s) const override;
  Simplex do_degeneracy(int i, const Simplex& s) const override;

 private:
  PreCrossedModule module_;
  std::vector<std::vector<Element>> fibers_;
};

class NerveSpec : public SimplicialSpec {
 public:
  explicit NerveSpec(FiniteGroup g) : group_(std::move(g)) {}

  SpecKind kind() const override { return SpecKind::Nerve; }
  bool truncated() const override { return false; }
  std::string encode(const Simplex& s) const override;

  const FiniteGroup& group() const { return group_; }

 protected:
  void generate(int degree, int max_length, std::size_t cap, std::vector<Simplex>& out) const override;
  Simplex do_face(int i, const Simplex& s) const override;
  Simplex do_degeneracy(int i, const Simplex& s) const override;

 private:
  FiniteGroup group_;
};

/// E_*(X,G,pi)/G. GroupSyllable needs the group structure of X; FreeLetter
/// realizes the envelope of F(X) -> G.
std::shared_ptr<const WordSpec> build_envelope(const PreCrossedModule& p, WordMode mode);
std::shared_ptr<const WordSpec> build_envelope(const AugmentedRack& a, WordMode mode = WordMode::FreeLetter);
std::shared_ptr<const WordSpec> build_clauwens(const AugmentedRack& a);
std::shared_ptr<const CoskeletonSpec> build_coskeleton(const PreCrossedModule& p);
std::shared_ptr<const NerveSpec> build_nerve(const FiniteGroup& g);

struct SimplicialMap {
  SpecPtr source;
  SpecPtr target;
  std::function<Simplex(const Simplex&)> rule;

  Simplex operator()(const Simplex& s) const { return rule(s); }
};

/// E_*/G -> M_*/G: each simplex goes to its vertices and edges.
SimplicialMap canonical_to_coskeleton(const PreCrossedModule& p);

struct IdentityReport {
  bool ok = true;
  std::size_t simplices_checked = 0;
  std::string violation;
};

/// Checks d_i d_j = d_{j-1} d_i, the three d_i s_j cases and s_i s_j = s_{j+1} s_i
/// on every simplex of degree <= max_degree (a fixed-seed sample of
/// `sample_size` per degree when there are more).
IdentityReport check_simplicial_identities(const SimplicialSpec& spec, int max_degree, int max_length,
                                           std::size_t sample_size);

/// Checks f d_i = d_i f and f s_i = s_i f on source simplices.
IdentityReport check_commutes(const SimplicialMap& f, int max_degree, int max_length, std::size_t sample_size);

}  // namespace precrossed
