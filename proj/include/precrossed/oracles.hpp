#pragma once

// Reference computations that do not go through the envelope: the classical
// rack chain complex, group homology from the bar complex, and dimensions of
// free tensor algebras.

#include <cstdint>
#include <utility>
#include <vector>

#include "precrossed/homology.hpp"

namespace precrossed {

/// C_0 = Z, C_n = Z[X^n] and
///   d(x_1..x_n) = sum_i (-1)^i [ (x_1..^x_i..x_n) - (x_1◁x_i, .., x_{i-1}◁x_i, x_{i+1}, .., x_n) ].
ChainComplex rack_complex(const Rack& rack, const std::vector<std::string>& labels, int max_degree);
ChainComplex rack_complex(const AugmentedRack& a, int max_degree);

HomologyGroup rack_homology(const AugmentedRack& a, int m, const Coefficients& coeff);

/// Dimension of the degree-m part of the free associative algebra on
/// `generators` (pairs of degree >= 1 and count).
std::uint64_t tensor_algebra_dims(const std::vector<std::pair<int, std::uint64_t>>& generators, int m);

/// Homology of the normalized bar complex.
HomologyGroup group_homology(const FiniteGroup& g, int m, const Coefficients& coeff);

}  // namespace precrossed
