#pragma once

#include <Eigen/Dense>

#include <memory>
#include <mutex>
#include <optional>
#include <vector>

#include "conic/errors.hpp"
#include "conic/matrix.hpp"

namespace conic {

class FaceLattice;
class ProjectionKit;

/// Relative tolerance for float membership and Moreau residuals.
inline constexpr double kMembershipTol = 1e-9;

/// Desk-scale guard for the double-description conversion.
inline constexpr std::size_t kMaxConstraints = 20;
inline constexpr std::size_t kMaxAmbientDim = 10;

/// y = Pi_C(x), y' = Pi_{C~}(x). y + y' = x and <y, y'> = 0 up to
/// kMembershipTol; primal_face is the id of the lattice face whose relative
/// interior contains y.
struct MoreauPair {
    Eigen::VectorXd primal;
    Eigen::VectorXd polar;
    int primal_face = -1;
    std::optional<int> polar_face;
};

/// Polyhedral cone {x : Ax <= 0} = {By : y >= 0} in dual representation.
/// Values are immutable; the second representation, the canonical reduced
/// form, the face lattice and the float projection tables are computed once
/// on demand and shared between copies.
class Cone {
public:
    Cone() = default;

    /// Cone {x : Ax <= 0}; a zero-row A gives all of R^d.
    static Cone from_halfspaces(RatMat a, std::size_t d);
    /// Cone {By : y >= 0}; an empty generator set gives {0}.
    static Cone from_generators(RatMat b, std::size_t d);
    /// Both representations given; consistency is verified on first use.
    static Cone from_both(RatMat a, RatMat b, std::size_t d);
    /// For internal representation swaps where consistency is already known.
    static Cone from_both_unchecked(RatMat a, RatMat b, std::size_t d);

    static Cone full_space(std::size_t d);
    static Cone origin(std::size_t d);
    /// Subspace spanned by the columns of basis, as a cone with +- generator
    /// pairs.
    static Cone subspace(const RatMat& basis_cols, std::size_t d);

    std::size_t ambient_dim() const;

    bool has_halfspaces_input() const;
    bool has_generators_input() const;
    const std::optional<RatMat>& halfspaces_input() const;
    const std::optional<RatMat>& generators_input() const;

    /// Canonical H-rep: facet rows plus +- span-pinning rows, primitive and
    /// sorted. Triggers double description on first use.
    const RatMat& halfspaces() const;
    /// Canonical V-rep: extreme rays plus +- lineality basis pairs.
    const RatMat& generators() const;
    /// Column indices of generators() forming the lineality basis pairs.
    std::size_t extreme_ray_count() const;

    int lineality() const;
    int span_dim() const;
    const RatMat& lineality_basis() const; // d x lin, columns

    const FaceLattice& lattice() const;
    const ProjectionKit& kit() const;

    bool is_subspace() const { return lineality() == span_dim(); }

private:
    struct State;
    std::shared_ptr<State> state_;

    explicit Cone(std::shared_ptr<State> s) : state_(std::move(s)) {}
    const State& canonical() const;
};

/// Both representations populated and reduced (extreme rays, irredundant
/// rows). The returned value shares the cached data with the input.
Cone ensure_dual_rep(const Cone& c);

/// Polar cone: representation swap, (cone B)~ = {z : B^T z <= 0}.
Cone polar(const Cone& c);

/// C x D with block-diagonal representations.
Cone product(const Cone& c, const Cone& d);

Cone intersect(const Cone& c, const Cone& d);
Cone minkowski_sum(const Cone& c, const Cone& d);

/// (T^{-1})^T; polar of TC is inv_adjoint(T) C~. Throws Singular.
RatMat inv_adjoint(const RatMat& t);
Cone linear_image(const RatMat& t, const Cone& c);

Cone lineality_space(const Cone& c);
int lineality(const Cone& c);

bool contains(const Cone& c, const Eigen::VectorXd& x, double tol = kMembershipTol);
bool contains_exact(const Cone& c, const std::vector<Rational>& x);

/// Exact combinatorial projection via face enumeration; throws
/// AmbiguousProjection on measure-zero tie inputs (callers resample).
MoreauPair project(const Cone& c, const Eigen::VectorXd& x);

} // namespace conic
