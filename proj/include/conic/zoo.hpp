#pragma once

#include <string>
#include <vector>

#include "conic/cone.hpp"

namespace conic {
namespace zoo {

/// Nonnegative orthant R^d_+.
Cone orthant(std::size_t d);
/// ray(e1) in R^d.
Cone ray(std::size_t d);
/// {x : x1 <= 0} in R^d.
Cone half_space(std::size_t d);
/// span{e1..em} in R^d.
Cone coordinate_subspace(std::size_t d, std::size_t m);
/// Non-simplicial cone over a square base: cone{(+-1, +-1, 1)} in R^3.
Cone square_base();

struct NamedCone {
    std::string name;
    Cone cone;
};

/// The standard desk-scale test cones used across the suite.
std::vector<NamedCone> standard();

} // namespace zoo
} // namespace conic
