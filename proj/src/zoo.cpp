#include "conic/zoo.hpp"

namespace conic {
namespace zoo {

Cone orthant(std::size_t d) {
    RatMat a(d, d);
    for (std::size_t i = 0; i < d; ++i) a(i, i) = -1;
    return Cone::from_halfspaces(std::move(a), d);
}

Cone ray(std::size_t d) {
    RatMat b(d, 1);
    b(0, 0) = 1;
    return Cone::from_generators(std::move(b), d);
}

Cone half_space(std::size_t d) {
    RatMat a(1, d);
    a(0, 0) = 1;
    return Cone::from_halfspaces(std::move(a), d);
}

Cone coordinate_subspace(std::size_t d, std::size_t m) {
    RatMat basis(d, m);
    for (std::size_t i = 0; i < m; ++i) basis(i, i) = 1;
    return Cone::subspace(basis, d);
}

Cone square_base() {
    RatMat b(3, 4);
    int s1[] = {1, 1, -1, -1};
    int s2[] = {1, -1, 1, -1};
    for (int j = 0; j < 4; ++j) {
        b(0, j) = s1[j];
        b(1, j) = s2[j];
        b(2, j) = 1;
    }
    return Cone::from_generators(std::move(b), 3);
}

std::vector<NamedCone> standard() {
    std::vector<NamedCone> out;
    out.push_back({"orthant2", orthant(2)});
    out.push_back({"orthant3", orthant(3)});
    out.push_back({"orthant4", orthant(4)});
    out.push_back({"ray2", ray(2)});
    out.push_back({"ray3", ray(3)});
    out.push_back({"halfspace2", half_space(2)});
    out.push_back({"halfspace3", half_space(3)});
    out.push_back({"line1in2", coordinate_subspace(2, 1)});
    out.push_back({"plane2in3", coordinate_subspace(3, 2)});
    out.push_back({"squarebase3", square_base()});
    out.push_back({"halfspace2xray1", product(half_space(2), ray(1))});
    out.push_back({"orthant2xline1", product(orthant(2), coordinate_subspace(1, 1))});
    return out;
}

} // namespace zoo
} // namespace conic
