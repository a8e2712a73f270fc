#include "precrossed/oracles.hpp"

#include <limits>

namespace precrossed {

namespace {

/// Mixed-radix index of a tuple over an alphabet of size d.
std::size_t tuple_index(const std::vector<int>& t, int d) {
  std::size_t idx = 0;
  for (int x : t) idx = idx * static_cast<std::size_t>(d) + static_cast<std::size_t>(x);
  return idx;
}

}  // namespace

ChainComplex rack_complex(const Rack& rack, const std::vector<std::string>& labels, int max_degree) {
  if (max_degree < 0) throw Error(ErrorKind::DegreeOutOfRange, "negative degree");
  const int d = rack.size();
  ChainComplex c;
  c.max_degree = max_degree;
  std::size_t count = 1;
  for (int n = 0; n <= max_degree; ++n) {
    if (n > 0) {
      count *= static_cast<std::size_t>(d);
      if (count > MatrixCaps{}.matrix_side) {
        throw Error(ErrorKind::ResourceBound, "rack complex degree " + std::to_string(n) + " has " +
                                                  std::to_string(count) + " generators");
      }
    }
    std::vector<std::string> basis;
    std::vector<int> t(n, 0);
    for (std::size_t i = 0; i < count; ++i) {
      std::size_t rest = i;
      for (int p = n - 1; p >= 0; --p) {
        t[p] = static_cast<int>(rest % d);
        rest /= d;
      }
      std::string label = "(";
      for (int p = 0; p < n; ++p) label += (p ? "," : "") + labels[t[p]];
      basis.push_back(label + ")");
    }
    c.basis.push_back(std::move(basis));
  }

  c.boundary.emplace_back(0, c.basis[0].size());
  for (int n = 1; n <= max_degree; ++n) {
    SparseIntMatrix m(c.basis[n - 1].size(), c.basis[n].size());
    std::vector<int> t(n);
    for (std::size_t col = 0; col < c.basis[n].size(); ++col) {
      std::size_t rest = col;
      for (int p = n - 1; p >= 0; --p) {
        t[p] = static_cast<int>(rest % d);
        rest /= d;
      }
      for (int i = 1; i <= n; ++i) {
        const Integer sign = (i % 2 == 0) ? 1 : -1;
        std::vector<int> deleted, acted;
        for (int p = 0; p < n; ++p) {
          if (p == i - 1) continue;
          deleted.push_back(t[p]);
          acted.push_back(p < i - 1 ? rack.op(t[p], t[i - 1]) : t[p]);
        }
        m.add(tuple_index(deleted, d), col, sign);
        m.add(tuple_index(acted, d), col, -sign);
      }
    }
    c.boundary.push_back(std::move(m));
  }
  c.verify();
  return c;
}

ChainComplex rack_complex(const AugmentedRack& a, int max_degree) {
  return rack_complex(a.induced_rack(), a.carrier(), max_degree);
}

HomologyGroup rack_homology(const AugmentedRack& a, int m, const Coefficients& coeff) {
  return homology(rack_complex(a, m + 1), m, coeff);
}

std::uint64_t tensor_algebra_dims(const std::vector<std::pair<int, std::uint64_t>>& generators, int m) {
  if (m < 0) return 0;
  for (const auto& [deg, count] : generators) {
    if (deg < 1) throw Error(ErrorKind::DegreeOutOfRange, "tensor algebra generators live in degrees >= 1");
  }
  // dims[n] = sum over generators g of count(g) * dims[n - deg(g)]
  std::vector<std::uint64_t> dims(m + 1, 0);
  dims[0] = 1;
  for (int n = 1; n <= m; ++n) {
    for (const auto& [deg, count] : generators) {
      if (deg > n || count == 0) continue;
      std::uint64_t term = 0;
      if (__builtin_mul_overflow(count, dims[n - deg], &term) || __builtin_add_overflow(dims[n], term, &dims[n])) {
        throw Error(ErrorKind::ResourceBound, "tensor algebra dimension overflows 64 bits");
      }
    }
  }
  return dims[m];
}

HomologyGroup group_homology(const FiniteGroup& g, int m, const Coefficients& coeff) {
  auto nerve = build_nerve(g);
  return homology(chain_complex(*nerve, m, 0), m, coeff);
}

}  // namespace precrossed
