#pragma once

#include <Eigen/Dense>

#include <functional>
#include <memory>
#include <vector>

#include "conic/cone.hpp"

namespace conic {

/// Positively-homogeneous measurable subset of R^d. Structured kinds keep
/// enough shape for the set algebra (images, Minkowski sums); Predicate is
/// an escape hatch whose homogeneity is a documented contract.
class ConicSet {
public:
    enum class Kind {
        Full,
        ZeroOnly,
        Star, // R^d minus the origin
        FromCone,
        Cap, // {x != 0 : <x/|x|, axis> >= cos_threshold}
        Complement,
        Union,
        Intersection,
        Image, // T M for nonsingular exact T
        Predicate,
    };

    static ConicSet full(std::size_t d);
    static ConicSet zero_only(std::size_t d);
    static ConicSet star(std::size_t d);
    static ConicSet from_cone(Cone c);
    static ConicSet cap(const Eigen::VectorXd& axis, double cos_threshold);
    static ConicSet complement(ConicSet m);
    static ConicSet union_of(std::vector<ConicSet> parts);
    static ConicSet intersection_of(std::vector<ConicSet> parts);
    static ConicSet predicate(std::size_t d, std::function<bool(const Eigen::VectorXd&)> fn);

    Kind kind() const;
    std::size_t ambient_dim() const;
    bool contains(const Eigen::VectorXd& x) const;

    const Cone& cone() const; // FromCone only
    const std::vector<ConicSet>& parts() const;

private:
    struct Node;
    std::shared_ptr<const Node> node_;
    explicit ConicSet(std::shared_ptr<const Node> n) : node_(std::move(n)) {}
    friend ConicSet gl_action(const RatMat& t, const ConicSet& m);
    friend ConicSet minkowski_sum_sets(const ConicSet& a, const ConicSet& b);
};

/// T M = {Tx : x in M}; structured kinds map structurally, everything else
/// becomes an Image wrapper evaluated through T^{-1}.
ConicSet gl_action(const RatMat& t, const ConicSet& m);

/// Minkowski sum of second components for the wedge of products. Supported
/// for Full/ZeroOnly/FromCone operands; throws UnsupportedKind otherwise.
ConicSet minkowski_sum_sets(const ConicSet& a, const ConicSet& b);

/// Bi-homogeneous measurable subset of R^d x R^d.
class BiconicSet {
public:
    enum class Kind {
        Full,
        Product,       // M x M'
        Union,
        Intersection,
        Lift,          // {(x,x') : x in C, x' in C~, <x,x'> = 0}
        LiftedSkeleton, // relint pairs over the k-faces
        Rev,
        GlImage,
        BiconicProd,   // blockwise product of biconic sets
        Predicate,
    };

    static BiconicSet full(std::size_t d);
    static BiconicSet product_form(ConicSet first, ConicSet second);
    static BiconicSet union_of(std::vector<BiconicSet> parts);
    static BiconicSet intersection_of(std::vector<BiconicSet> parts);
    static BiconicSet lift(Cone c);
    static BiconicSet lifted_skeleton(Cone c, int k);
    static BiconicSet predicate(
        std::size_t d, std::function<bool(const Eigen::VectorXd&, const Eigen::VectorXd&)> fn);

    Kind kind() const;
    std::size_t ambient_dim() const;
    bool contains(const Eigen::VectorXd& x, const Eigen::VectorXd& xp) const;

    const ConicSet& first() const;  // Product only
    const ConicSet& second() const; // Product only
    const Cone& cone() const;       // Lift / LiftedSkeleton
    const std::vector<BiconicSet>& parts() const;

private:
    struct Node;
    std::shared_ptr<const Node> node_;
    explicit BiconicSet(std::shared_ptr<const Node> n) : node_(std::move(n)) {}
    friend BiconicSet rev(const BiconicSet& m);
    friend BiconicSet gl_action(const RatMat& t, const BiconicSet& m);
    friend BiconicSet wedge(const BiconicSet& m, const BiconicSet& n);
    friend BiconicSet vee(const BiconicSet& m, const BiconicSet& n);
    friend BiconicSet biconic_product(const BiconicSet& m, const BiconicSet& n);
};

/// Reversal map (x,x') -> (x',x); structural where the kind allows
/// (rev Lift(C) = Lift(C~), rev S_k(C) = S_{d-k}(C~)).
BiconicSet rev(const BiconicSet& m);

/// (x,x') in T M iff (T^{-1} x, T^T x') in M.
BiconicSet gl_action(const RatMat& t, const BiconicSet& m);

/// Conjunction: M ^ N = {(x, x'+y') : (x,x') in M, (x,y') in N}. Partial:
/// products (with summable second components), lifts, unions thereof.
BiconicSet wedge(const BiconicSet& m, const BiconicSet& n);
/// Disjunction, the rev-dual of wedge.
BiconicSet vee(const BiconicSet& m, const BiconicSet& n);

/// Blockwise biconic product ((x,y),(x',y')) with (x,x') in M, (y,y') in N.
BiconicSet biconic_product(const BiconicSet& m, const BiconicSet& n);

bool conic_member(const ConicSet& m, const Eigen::VectorXd& x);
bool biconic_member(const BiconicSet& m, const Eigen::VectorXd& x, const Eigen::VectorXd& xp);

} // namespace conic
