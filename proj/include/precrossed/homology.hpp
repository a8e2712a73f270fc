#pragma once

// Normalized chain complexes and exact homology over Z, Q and GF(p).

#include <gmpxx.h>

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "precrossed/simplicial.hpp"

namespace precrossed {

using Integer = mpz_class;

/// Row-major dense integer matrix.
class DenseMatrix {
 public:
  DenseMatrix() = default;
  DenseMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
  static DenseMatrix identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  Integer& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Integer& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  DenseMatrix operator*(const DenseMatrix& other) const;
  bool operator==(const DenseMatrix& other) const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Integer> data_;
};

/// Column-oriented sparse integer matrix; zero entries are never stored.
class SparseIntMatrix {
 public:
  struct Entry {
    std::size_t row;
    std::size_t col;
    Integer value;
  };

  SparseIntMatrix() = default;
  SparseIntMatrix(std::size_t rows, std::size_t cols) : rows_(rows), columns_(cols) {}
  static SparseIntMatrix from_dense(const DenseMatrix& m);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return columns_.size(); }
  std::size_t nonzeros() const;

  /// Accumulates into (r, c).
  void add(std::size_t r, std::size_t c, const Integer& value);
  Integer at(std::size_t r, std::size_t c) const;
  const std::map<std::size_t, Integer>& column(std::size_t c) const { return columns_[c]; }
  /// Sorted by (row, col).
  std::vector<Entry> entries() const;
  bool is_zero() const { return nonzeros() == 0; }

  SparseIntMatrix operator*(const SparseIntMatrix& other) const;
  DenseMatrix to_dense() const;

 private:
  std::size_t rows_ = 0;
  std::vector<std::map<std::size_t, Integer>> columns_;
};

struct SmithForm {
  /// min(rows, cols) diagonal entries: positive d_1 | d_2 | ... followed by zeros.
  std::vector<Integer> diagonal;
  std::size_t rank = 0;
  /// With transforms: u * M * v == D, and the inverses are exact.
  std::optional<DenseMatrix> u, u_inverse, v, v_inverse;

  /// Diagonal entries greater than one.
  std::vector<Integer> torsion() const;
};

/// Without transforms this runs a sparse elimination (smallest-magnitude
/// pivot, Markowitz tie-break); with transforms a dense one.
SmithForm smith_normal_form(const SparseIntMatrix& m, bool with_transforms = false);

std::size_t rank_over_rationals(const SparseIntMatrix& m);
std::size_t rank_mod_prime(const SparseIntMatrix& m, long prime);

class Coefficients {
 public:
  enum class Kind { Integers, Rationals, Prime };

  static Coefficients integers() { return {Kind::Integers, 0}; }
  static Coefficients rationals() { return {Kind::Rationals, 0}; }
  static Coefficients prime_field(long p);
  /// "Z", "Q", "F2", "F3", ...
  static Coefficients parse(std::string_view text);

  Kind kind() const { return kind_; }
  long prime() const { return prime_; }
  bool is_field() const { return kind_ != Kind::Integers; }
  std::string name() const;

  bool operator==(const Coefficients&) const = default;

 private:
  Coefficients(Kind kind, long prime) : kind_(kind), prime_(prime) {}
  Kind kind_;
  long prime_;
};

struct HomologyGroup {
  int degree = 0;
  Coefficients coeff = Coefficients::integers();
  long long betti = 0;
  /// Invariant factors > 1, a divisibility chain; empty over fields.
  std::vector<Integer> torsion;

  /// `H_m = Z^b + Z/t1 + ...`; `Z` for rank one, `0` for the zero group.
  std::string render() const;
  /// `m;coeff;b;t1,t2,...`
  std::string machine() const;

  bool operator==(const HomologyGroup&) const = default;
};

struct MatrixCaps {
  std::size_t simplices = kDefaultSimplexCap;
  /// Bound on both dimensions of every boundary matrix.
  std::size_t matrix_side = 5000;
};

struct ChainComplex {
  int max_degree = 0;
  /// Labels of the basis chains of each degree.
  std::vector<std::vector<std::string>> basis;
  /// boundary[k] : C_k -> C_{k-1}; boundary[0] has zero rows.
  std::vector<SparseIntMatrix> boundary;
  /// Basis simplices when built from a simplicial set, otherwise empty.
  std::vector<std::vector<Simplex>> cells;

  std::size_t dimension(int k) const { return basis[k].size(); }
  /// Throws NotChainComplex unless every composite of boundaries vanishes.
  void verify() const;
};

/// Normalized chains of degrees 0..max_homology_degree+1: nondegenerate
/// simplices, boundary sum of (-1)^i d_i with degenerate faces dropped.
ChainComplex chain_complex(const SimplicialSpec& spec, int max_homology_degree, int max_length,
                           const MatrixCaps& caps = {});

HomologyGroup homology(const ChainComplex& c, int m, const Coefficients& coeff);
/// H_0..H_{max_degree} sharing one reduction per boundary matrix.
std::vector<HomologyGroup> homology_range(const ChainComplex& c, int max_degree, const Coefficients& coeff);

/// Integral homology with explicit generators.
struct HomologyBasis {
  HomologyGroup group;
  /// 0 for a free generator, otherwise its finite order.
  std::vector<Integer> orders;
  /// Representative cycles in the basis of C_m.
  std::vector<std::vector<Integer>> generators;

  /// Coordinates of a cycle on the generators (torsion components reduced).
  std::vector<Integer> coordinates(const std::vector<Integer>& cycle) const;

  // Cycle -> kernel coordinates, then kernel -> generator coordinates.
  DenseMatrix to_kernel;
  DenseMatrix to_generators;
  std::vector<std::size_t> kept;
};

HomologyBasis homology_basis(const ChainComplex& c, int m);

struct InducedMap {
  HomologyBasis source;
  HomologyBasis target;
  /// matrix[t][s]: coefficient of target generator t in the image of source
  /// generator s.
  std::vector<std::vector<Integer>> matrix;
};

/// Both complexes must be built from f's source and target specs.
InducedMap induced_map(const SimplicialMap& f, const ChainComplex& source, const ChainComplex& target, int m);

}  // namespace precrossed
