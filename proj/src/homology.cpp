#include "precrossed/homology.hpp"

#include <algorithm>
#include <charconv>
#include <set>
#include <tuple>
#include <unordered_map>

namespace precrossed {

// ---------------------------------------------------------------------------
// Matrices

DenseMatrix DenseMatrix::identity(std::size_t n) {
  DenseMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

DenseMatrix DenseMatrix::operator*(const DenseMatrix& other) const {
  DenseMatrix out(rows_, other.cols_);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t k = 0; k < cols_; ++k) {
      const Integer& a = (*this)(i, k);
      if (a == 0) continue;
      for (std::size_t j = 0; j < other.cols_; ++j) out(i, j) += a * other(k, j);
    }
  }
  return out;
}

bool DenseMatrix::operator==(const DenseMatrix& other) const {
  return rows_ == other.rows_ && cols_ == other.cols_ && data_ == other.data_;
}

SparseIntMatrix SparseIntMatrix::from_dense(const DenseMatrix& m) {
  SparseIntMatrix out(m.rows(), m.cols());
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c) {
      if (m(r, c) != 0) out.add(r, c, m(r, c));
    }
  }
  return out;
}

std::size_t SparseIntMatrix::nonzeros() const {
  std::size_t n = 0;
  for (const auto& c : columns_) n += c.size();
  return n;
}

void SparseIntMatrix::add(std::size_t r, std::size_t c, const Integer& value) {
  if (value == 0) return;
  auto& col = columns_.at(c);
  if (r >= rows_) throw Error(ErrorKind::IndexOutOfRange, "row index out of range");
  auto [it, inserted] = col.emplace(r, value);
  if (!inserted) {
    it->second += value;
    if (it->second == 0) col.erase(it);
  }
}

Integer SparseIntMatrix::at(std::size_t r, std::size_t c) const {
  const auto& col = columns_.at(c);
  auto it = col.find(r);
  return it == col.end() ? Integer(0) : it->second;
}

std::vector<SparseIntMatrix::Entry> SparseIntMatrix::entries() const {
  std::vector<Entry> out;
  for (std::size_t c = 0; c < columns_.size(); ++c) {
    for (const auto& [r, v] : columns_[c]) out.push_back(Entry{r, c, v});
  }
  std::sort(out.begin(), out.end(),
            [](const Entry& a, const Entry& b) { return std::tie(a.row, a.col) < std::tie(b.row, b.col); });
  return out;
}

SparseIntMatrix SparseIntMatrix::operator*(const SparseIntMatrix& other) const {
  if (cols() != other.rows()) throw Error(ErrorKind::DegreeMismatch, "matrix shapes do not compose");
  SparseIntMatrix out(rows_, other.cols());
  for (std::size_t j = 0; j < other.cols(); ++j) {
    for (const auto& [k, b] : other.columns_[j]) {
      for (const auto& [i, a] : columns_[k]) out.add(i, j, a * b);
    }
  }
  return out;
}

DenseMatrix SparseIntMatrix::to_dense() const {
  DenseMatrix out(rows_, cols());
  for (std::size_t c = 0; c < columns_.size(); ++c) {
    for (const auto& [r, v] : columns_[c]) out(r, c) = v;
  }
  return out;
}

// ---------------------------------------------------------------------------
// Smith normal form

std::vector<Integer> SmithForm::torsion() const {
  std::vector<Integer> out;
  for (const auto& d : diagonal) {
    if (d > 1) out.push_back(d);
  }
  return out;
}

namespace {

/// Turns the nonzero diagonal of some equivalent diagonal matrix into
/// invariant factors.
void make_divisibility_chain(std::vector<Integer>& d) {
  for (std::size_t i = 0; i < d.size(); ++i) {
    for (std::size_t j = i + 1; j < d.size(); ++j) {
      Integer g, l;
      mpz_gcd(g.get_mpz_t(), d[i].get_mpz_t(), d[j].get_mpz_t());
      mpz_lcm(l.get_mpz_t(), d[i].get_mpz_t(), d[j].get_mpz_t());
      d[i] = g;
      d[j] = l;
    }
  }
}

SmithForm sparse_smith(const SparseIntMatrix& m) {
  const std::size_t R = m.rows(), C = m.cols();
  std::vector<std::map<std::size_t, Integer>> rows(R);
  std::vector<std::set<std::size_t>> cols(C);
  for (const auto& e : m.entries()) {
    rows[e.row].emplace(e.col, e.value);
    cols[e.col].insert(e.row);
  }

  // row[target] -= q * row[source]
  const auto row_axpy = [&](std::size_t target, std::size_t source, const Integer& q) {
    for (const auto& [c, v] : rows[source]) {
      auto it = rows[target].find(c);
      if (it == rows[target].end()) {
        rows[target].emplace(c, -q * v);
        cols[c].insert(target);
      } else {
        it->second -= q * v;
        if (it->second == 0) {
          rows[target].erase(it);
          cols[c].erase(target);
        }
      }
    }
  };

  std::vector<Integer> diagonal;
  while (true) {
    bool found = false;
    std::size_t pr = 0, pc = 0, best_cost = 0;
    const Integer* best = nullptr;
    for (std::size_t r = 0; r < R; ++r) {
      for (const auto& [c, v] : rows[r]) {
        const std::size_t cost = (rows[r].size() - 1) * (cols[c].size() - 1);
        int cmp = best ? mpz_cmpabs(v.get_mpz_t(), best->get_mpz_t()) : -1;
        if (cmp < 0 || (cmp == 0 && cost < best_cost)) {
          best = &v;
          best_cost = cost;
          pr = r;
          pc = c;
          found = true;
        }
      }
    }
    if (!found) break;
    const Integer p = *best;

    bool clean = true;
    std::vector<std::size_t> others;
    for (std::size_t r : cols[pc]) {
      if (r != pr) others.push_back(r);
    }
    for (std::size_t r : others) {
      const Integer q = rows[r].at(pc) / p;
      if (q != 0) row_axpy(r, pr, q);
      if (rows[r].count(pc)) clean = false;
    }
    if (!clean) continue;

    // Column pc now only meets row pr, so column operations only touch row pr.
    std::vector<std::size_t> row_cols;
    for (const auto& [c, v] : rows[pr]) {
      if (c != pc) row_cols.push_back(c);
    }
    for (std::size_t c : row_cols) {
      auto it = rows[pr].find(c);
      it->second -= (it->second / p) * p;
      if (it->second == 0) {
        rows[pr].erase(it);
        cols[c].erase(pr);
      } else {
        clean = false;
      }
    }
    if (!clean) continue;

    diagonal.push_back(abs(p));
    rows[pr].clear();
    cols[pc].clear();
  }

  make_divisibility_chain(diagonal);
  SmithForm out;
  out.rank = diagonal.size();
  out.diagonal = std::move(diagonal);
  out.diagonal.resize(std::min(R, C), Integer(0));
  return out;
}

class DenseSmith {
 public:
  explicit DenseSmith(const DenseMatrix& m)
      : a_(m),
        u_(DenseMatrix::identity(m.rows())),
        ui_(DenseMatrix::identity(m.rows())),
        v_(DenseMatrix::identity(m.cols())),
        vi_(DenseMatrix::identity(m.cols())) {}

  SmithForm run() {
    const std::size_t R = a_.rows(), C = a_.cols(), n = std::min(R, C);
    std::size_t t = 0;
    for (; t < n; ++t) {
      if (!settle(t)) break;
      if (a_(t, t) < 0) row_negate(t);
    }
    SmithForm out;
    out.rank = t;
    for (std::size_t i = 0; i < n; ++i) out.diagonal.push_back(a_(i, i));
    out.u = std::move(u_);
    out.u_inverse = std::move(ui_);
    out.v = std::move(v_);
    out.v_inverse = std::move(vi_);
    return out;
  }

 private:
  // Brings a pivot dividing the whole remaining block to (t, t); false when
  // the block is zero.
  bool settle(std::size_t t) {
    const std::size_t R = a_.rows(), C = a_.cols();
    while (true) {
      std::size_t bi = 0, bj = 0;
      bool found = false;
      for (std::size_t i = t; i < R; ++i) {
        for (std::size_t j = t; j < C; ++j) {
          if (a_(i, j) != 0 && (!found || mpz_cmpabs(a_(i, j).get_mpz_t(), a_(bi, bj).get_mpz_t()) < 0)) {
            bi = i;
            bj = j;
            found = true;
          }
        }
      }
      if (!found) return false;
      row_swap(t, bi);
      col_swap(t, bj);
      bool done = true;
      for (std::size_t i = t + 1; i < R; ++i) {
        if (a_(i, t) == 0) continue;
        row_add(i, t, -Integer(a_(i, t) / a_(t, t)));
        if (a_(i, t) != 0) done = false;
      }
      for (std::size_t j = t + 1; j < C; ++j) {
        if (a_(t, j) == 0) continue;
        col_add(j, t, -Integer(a_(t, j) / a_(t, t)));
        if (a_(t, j) != 0) done = false;
      }
      if (!done) continue;
      for (std::size_t i = t + 1; i < R && done; ++i) {
        for (std::size_t j = t + 1; j < C; ++j) {
          if (a_(i, j) % a_(t, t) != 0) {
            row_add(t, i, 1);
            done = false;
            break;
          }
        }
      }
      if (done) return true;
    }
  }

  // A <- E A, U <- E U, U^-1 <- U^-1 E^-1.
  void row_add(std::size_t i, std::size_t j, const Integer& q) {
    if (q == 0) return;
    for (std::size_t c = 0; c < a_.cols(); ++c) a_(i, c) += q * a_(j, c);
    for (std::size_t c = 0; c < u_.cols(); ++c) u_(i, c) += q * u_(j, c);
    for (std::size_t r = 0; r < ui_.rows(); ++r) ui_(r, j) -= q * ui_(r, i);
  }
  void row_swap(std::size_t i, std::size_t j) {
    if (i == j) return;
    for (std::size_t c = 0; c < a_.cols(); ++c) std::swap(a_(i, c), a_(j, c));
    for (std::size_t c = 0; c < u_.cols(); ++c) std::swap(u_(i, c), u_(j, c));
    for (std::size_t r = 0; r < ui_.rows(); ++r) std::swap(ui_(r, i), ui_(r, j));
  }
  void row_negate(std::size_t i) {
    for (std::size_t c = 0; c < a_.cols(); ++c) a_(i, c) = -a_(i, c);
    for (std::size_t c = 0; c < u_.cols(); ++c) u_(i, c) = -u_(i, c);
    for (std::size_t r = 0; r < ui_.rows(); ++r) ui_(r, i) = -ui_(r, i);
  }
  // A <- A F, V <- V F, V^-1 <- F^-1 V^-1, F adding q * column j to column i.
  void col_add(std::size_t i, std::size_t j, const Integer& q) {
    if (q == 0) return;
    for (std::size_t r = 0; r < a_.rows(); ++r) a_(r, i) += q * a_(r, j);
    for (std::size_t r = 0; r < v_.rows(); ++r) v_(r, i) += q * v_(r, j);
    for (std::size_t c = 0; c < vi_.cols(); ++c) vi_(j, c) -= q * vi_(i, c);
  }
  void col_swap(std::size_t i, std::size_t j) {
    if (i == j) return;
    for (std::size_t r = 0; r < a_.rows(); ++r) std::swap(a_(r, i), a_(r, j));
    for (std::size_t r = 0; r < v_.rows(); ++r) std::swap(v_(r, i), v_(r, j));
    for (std::size_t c = 0; c < vi_.cols(); ++c) std::swap(vi_(i, c), vi_(j, c));
  }

  DenseMatrix a_, u_, ui_, v_, vi_;
};

}  // namespace

SmithForm smith_normal_form(const SparseIntMatrix& m, bool with_transforms) {
  if (!with_transforms) return sparse_smith(m);
  return DenseSmith(m.to_dense()).run();
}

// ---------------------------------------------------------------------------
// Ranks over fields

std::size_t rank_mod_prime(const SparseIntMatrix& m, long prime) {
  const auto reduce = [prime](const Integer& v) {
    long r = mpz_fdiv_ui(v.get_mpz_t(), static_cast<unsigned long>(prime));
    return r;
  };
  const auto inverse = [prime](long a) {
    long result = 1, base = a % prime, e = prime - 2;
    while (e > 0) {
      if (e & 1) result = result * base % prime;
      base = base * base % prime;
      e >>= 1;
    }
    return result;
  };
  std::map<std::size_t, std::map<std::size_t, long>> pivots;  // leading row -> monic vector
  for (std::size_t c = 0; c < m.cols(); ++c) {
    std::map<std::size_t, long> v;
    for (const auto& [r, x] : m.column(c)) {
      long y = reduce(x);
      if (y) v[r] = y;
    }
    while (!v.empty()) {
      const auto [lead, coef] = *v.begin();
      auto it = pivots.find(lead);
      if (it == pivots.end()) {
        const long inv = inverse(coef);
        for (auto& [r, x] : v) x = x * inv % prime;
        pivots.emplace(lead, std::move(v));
        break;
      }
      for (const auto& [r, x] : it->second) {
        long& y = v[r];
        y = ((y - coef * x) % prime + prime) % prime;
        if (y == 0) v.erase(r);
      }
    }
  }
  return pivots.size();
}

std::size_t rank_over_rationals(const SparseIntMatrix& m) {
  std::map<std::size_t, std::map<std::size_t, Integer>> pivots;
  for (std::size_t c = 0; c < m.cols(); ++c) {
    std::map<std::size_t, Integer> v(m.column(c).begin(), m.column(c).end());
    while (!v.empty()) {
      const std::size_t lead = v.begin()->first;
      auto it = pivots.find(lead);
      if (it == pivots.end()) {
        pivots.emplace(lead, std::move(v));
        break;
      }
      const Integer a = it->second.at(lead);
      const Integer b = v.at(lead);
      // v <- a v - b p, then divide out the content.
      for (auto& [r, x] : v) x *= a;
      for (const auto& [r, x] : it->second) {
        Integer& y = v[r];
        y -= b * x;
        if (y == 0) v.erase(r);
      }
      Integer g = 0;
      for (const auto& [r, x] : v) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
      if (g > 1) {
        for (auto& [r, x] : v) x /= g;
      }
    }
  }
  return pivots.size();
}

// ---------------------------------------------------------------------------
// Coefficients and homology groups

Coefficients Coefficients::prime_field(long p) {
  if (p < 2) throw Error(ErrorKind::Incompatible, "not a prime: " + std::to_string(p));
  for (long d = 2; d * d <= p; ++d) {
    if (p % d == 0) throw Error(ErrorKind::Incompatible, "not a prime: " + std::to_string(p));
  }
  return {Kind::Prime, p};
}

Coefficients Coefficients::parse(std::string_view text) {
  if (text == "Z") return integers();
  if (text == "Q") return rationals();
  if (text.size() >= 2 && text[0] == 'F') {
    long p = 0;
    auto [ptr, ec] = std::from_chars(text.data() + 1, text.data() + text.size(), p);
    if (ec == std::errc() && ptr == text.data() + text.size()) {
      try {
        return prime_field(p);
      } catch (const Error&) {
        throw Error(ErrorKind::ParseError, "F" + std::to_string(p) + " is not a prime field");
      }
    }
  }
  throw Error(ErrorKind::ParseError, "unknown coefficients '" + std::string(text) + "'");
}

std::string Coefficients::name() const {
  switch (kind_) {
    case Kind::Integers: return "Z";
    case Kind::Rationals: return "Q";
    case Kind::Prime: return "F" + std::to_string(prime_);
  }
  return "?";
}

std::string HomologyGroup::render() const {
  std::vector<std::string> parts;
  if (betti == 1) {
    parts.push_back(coeff.name());
  } else if (betti > 1) {
    parts.push_back(coeff.name() + "^" + std::to_string(betti));
  }
  for (const auto& t : torsion) parts.push_back("Z/" + t.get_str());
  std::string out = "H_" + std::to_string(degree) + " = ";
  if (parts.empty()) return out + "0";
  for (std::size_t i = 0; i < parts.size(); ++i) out += (i ? " + " : "") + parts[i];
  return out;
}

std::string HomologyGroup::machine() const {
  std::string out = std::to_string(degree) + ";" + coeff.name() + ";" + std::to_string(betti) + ";";
  for (std::size_t i = 0; i < torsion.size(); ++i) out += (i ? "," : "") + torsion[i].get_str();
  return out;
}

// ---------------------------------------------------------------------------
// Chain complexes

void ChainComplex::verify() const {
  for (int k = 2; k <= max_degree; ++k) {
    if (!(boundary[k - 1] * boundary[k]).is_zero()) {
      throw Error(ErrorKind::NotChainComplex, "boundary of boundary is nonzero in degree " + std::to_string(k));
    }
  }
}

ChainComplex chain_complex(const SimplicialSpec& spec, int max_homology_degree, int max_length,
                           const MatrixCaps& caps) {
  if (max_homology_degree < 0) throw Error(ErrorKind::DegreeOutOfRange, "negative degree");
  ChainComplex c;
  c.max_degree = max_homology_degree + 1;
  std::vector<std::unordered_map<std::string, std::size_t>> index(c.max_degree + 1);
  for (int k = 0; k <= c.max_degree; ++k) {
    c.cells.push_back(spec.nondegenerate(k, max_length, caps.simplices));
    if (c.cells[k].size() > caps.matrix_side) {
      throw Error(ErrorKind::ResourceBound, std::to_string(c.cells[k].size()) + " chains in degree " +
                                                std::to_string(k) + " exceed the matrix cap " +
                                                std::to_string(caps.matrix_side));
    }
    std::vector<std::string> labels;
    for (const auto& s : c.cells[k]) {
      labels.push_back(spec.encode(s));
      index[k].emplace(labels.back(), labels.size() - 1);
    }
    c.basis.push_back(std::move(labels));
  }
  c.boundary.emplace_back(0, c.basis[0].size());
  for (int k = 1; k <= c.max_degree; ++k) {
    SparseIntMatrix d(c.basis[k - 1].size(), c.basis[k].size());
    for (std::size_t j = 0; j < c.cells[k].size(); ++j) {
      for (int i = 0; i <= k; ++i) {
        const auto f = spec.face(i, c.cells[k][j]);
        auto it = index[k - 1].find(spec.encode(f));
        if (it == index[k - 1].end()) {
          if (!spec.is_degenerate(f)) {
            throw Error(ErrorKind::NotChainComplex, "face " + spec.encode(f) + " of " + c.basis[k][j] +
                                                        " is neither degenerate nor enumerated");
          }
          continue;
        }
        d.add(it->second, j, Integer(i % 2 == 0 ? 1 : -1));
      }
    }
    c.boundary.push_back(std::move(d));
  }
  c.verify();
  return c;
}

namespace {

std::size_t field_rank(const SparseIntMatrix& m, const Coefficients& coeff) {
  return coeff.kind() == Coefficients::Kind::Rationals ? rank_over_rationals(m) : rank_mod_prime(m, coeff.prime());
}

}  // namespace

std::vector<HomologyGroup> homology_range(const ChainComplex& c, int max_degree, const Coefficients& coeff) {
  if (max_degree < 0 || max_degree + 1 > c.max_degree) {
    throw Error(ErrorKind::DegreeOutOfRange, "homology up to degree " + std::to_string(max_degree) +
                                                 " needs chains up to degree " + std::to_string(max_degree + 1));
  }
  std::vector<std::size_t> rank(max_degree + 2, 0);
  std::vector<std::vector<Integer>> torsion(max_degree + 2);
  for (int k = 1; k <= max_degree + 1; ++k) {
    if (coeff.is_field()) {
      rank[k] = field_rank(c.boundary[k], coeff);
    } else {
      auto snf = smith_normal_form(c.boundary[k]);
      rank[k] = snf.rank;
      torsion[k] = snf.torsion();
    }
  }
  std::vector<HomologyGroup> out;
  for (int m = 0; m <= max_degree; ++m) {
    HomologyGroup h;
    h.degree = m;
    h.coeff = coeff;
    h.betti = static_cast<long long>(c.dimension(m)) - static_cast<long long>(rank[m]) -
              static_cast<long long>(rank[m + 1]);
    h.torsion = torsion[m + 1];
    out.push_back(std::move(h));
  }
  return out;
}

HomologyGroup homology(const ChainComplex& c, int m, const Coefficients& coeff) {
  if (m < 0 || m + 1 > c.max_degree) {
    throw Error(ErrorKind::DegreeOutOfRange, "H_" + std::to_string(m) + " needs chains up to degree " +
                                                 std::to_string(m + 1));
  }
  HomologyGroup h;
  h.degree = m;
  h.coeff = coeff;
  std::size_t rank_in = 0, rank_out = 0;
  if (coeff.is_field()) {
    rank_in = m > 0 ? field_rank(c.boundary[m], coeff) : 0;
    rank_out = field_rank(c.boundary[m + 1], coeff);
  } else {
    rank_in = m > 0 ? smith_normal_form(c.boundary[m]).rank : 0;
    auto snf = smith_normal_form(c.boundary[m + 1]);
    rank_out = snf.rank;
    h.torsion = snf.torsion();
  }
  h.betti = static_cast<long long>(c.dimension(m)) - static_cast<long long>(rank_in) -
            static_cast<long long>(rank_out);
  return h;
}

// ---------------------------------------------------------------------------
// Homology with generators and induced maps

std::vector<Integer> HomologyBasis::coordinates(const std::vector<Integer>& cycle) const {
  std::vector<Integer> kernel(to_kernel.rows());
  for (std::size_t i = 0; i < to_kernel.rows(); ++i) {
    for (std::size_t j = 0; j < to_kernel.cols(); ++j) kernel[i] += to_kernel(i, j) * cycle[j];
  }
  std::vector<Integer> out;
  for (std::size_t g = 0; g < kept.size(); ++g) {
    Integer x = 0;
    for (std::size_t j = 0; j < kernel.size(); ++j) x += to_generators(kept[g], j) * kernel[j];
    if (orders[g] != 0) mpz_fdiv_r(x.get_mpz_t(), x.get_mpz_t(), orders[g].get_mpz_t());
    out.push_back(x);
  }
  return out;
}

HomologyBasis homology_basis(const ChainComplex& c, int m) {
  HomologyBasis basis;
  basis.group = homology(c, m, Coefficients::integers());
  const std::size_t n = c.dimension(m);

  DenseMatrix v = DenseMatrix::identity(n), vi = DenseMatrix::identity(n);
  std::size_t r = 0;
  if (m > 0) {
    auto snf = smith_normal_form(c.boundary[m], true);
    r = snf.rank;
    v = *snf.v;
    vi = *snf.v_inverse;
  }
  const std::size_t kdim = n - r;
  // Kernel of the incoming boundary: last kdim columns of v; coordinates
  // come from the matching rows of v^-1.
  basis.to_kernel = DenseMatrix(kdim, n);
  for (std::size_t i = 0; i < kdim; ++i) {
    for (std::size_t j = 0; j < n; ++j) basis.to_kernel(i, j) = vi(r + i, j);
  }
  const DenseMatrix boundaries = basis.to_kernel * c.boundary[m + 1].to_dense();
  auto snf = smith_normal_form(SparseIntMatrix::from_dense(boundaries), true);
  basis.to_generators = *snf.u;
  const DenseMatrix& ui = *snf.u_inverse;

  for (std::size_t i = 0; i < kdim; ++i) {
    Integer order = i < snf.rank ? snf.diagonal[i] : Integer(0);
    if (order == 1) continue;
    basis.kept.push_back(i);
    basis.orders.push_back(order);
    std::vector<Integer> cycle(n);
    for (std::size_t j = 0; j < kdim; ++j) {
      if (ui(j, i) == 0) continue;
      for (std::size_t t = 0; t < n; ++t) cycle[t] += v(t, r + j) * ui(j, i);
    }
    basis.generators.push_back(std::move(cycle));
  }
  return basis;
}

namespace {

SparseIntMatrix chain_map_matrix(const SimplicialMap& f, const ChainComplex& source, const ChainComplex& target,
                                 int k) {
  std::unordered_map<std::string, std::size_t> index;
  for (std::size_t i = 0; i < target.basis[k].size(); ++i) index.emplace(target.basis[k][i], i);
  SparseIntMatrix out(target.dimension(k), source.dimension(k));
  for (std::size_t j = 0; j < source.cells[k].size(); ++j) {
    const auto image = f(source.cells[k][j]);
    auto it = index.find(f.target->encode(image));
    if (it != index.end()) {
      out.add(it->second, j, Integer(1));
    } else if (!f.target->is_degenerate(image)) {
      throw Error(ErrorKind::NotChainMap, "image of " + source.basis[k][j] + " is not in the target basis");
    }
  }
  return out;
}

}  // namespace

InducedMap induced_map(const SimplicialMap& f, const ChainComplex& source, const ChainComplex& target, int m) {
  if (m < 0 || m + 1 > source.max_degree || m + 1 > target.max_degree) {
    throw Error(ErrorKind::DegreeOutOfRange, "induced map in degree " + std::to_string(m));
  }
  if (source.cells.empty() || target.cells.empty()) {
    throw Error(ErrorKind::Incompatible, "induced maps need complexes built from simplicial sets");
  }
  std::vector<SparseIntMatrix> maps;
  const int low = std::max(0, m - 1);
  for (int k = low; k <= m + 1; ++k) maps.push_back(chain_map_matrix(f, source, target, k));
  for (int k = low + 1; k <= m + 1; ++k) {
    const auto& fk = maps[k - low];
    const auto& fk1 = maps[k - 1 - low];
    const auto lhs = (target.boundary[k] * fk).to_dense();
    const auto rhs = (fk1 * source.boundary[k]).to_dense();
    if (!(lhs == rhs)) {
      throw Error(ErrorKind::NotChainMap, "boundary does not commute in degree " + std::to_string(k));
    }
  }

  InducedMap out{homology_basis(source, m), homology_basis(target, m), {}};
  const auto& fm = maps[m - low];
  out.matrix.assign(out.target.generators.size(), std::vector<Integer>(out.source.generators.size()));
  for (std::size_t s = 0; s < out.source.generators.size(); ++s) {
    std::vector<Integer> image(target.dimension(m));
    const auto& z = out.source.generators[s];
    for (std::size_t j = 0; j < z.size(); ++j) {
      if (z[j] == 0) continue;
      for (const auto& [row, coef] : fm.column(j)) image[row] += coef * z[j];
    }
    const auto coords = out.target.coordinates(image);
    for (std::size_t t = 0; t < coords.size(); ++t) out.matrix[t][s] = coords[t];
  }
  return out;
}

}  // namespace precrossed
