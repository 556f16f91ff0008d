#include "conic/borel.hpp"

#include <cmath>

#include "conic/faces.hpp"
#include "conic/projection.hpp"

namespace conic {

namespace {

bool is_origin(const Eigen::VectorXd& x) { return (x.array() == 0.0).all(); }

} // namespace

// ---- ConicSet ---------------------------------------------------------------

struct ConicSet::Node {
    Kind kind;
    std::size_t d = 0;
    std::optional<Cone> cone;
    Eigen::VectorXd axis;
    double cos_threshold = 0;
    std::vector<ConicSet> parts;
    std::function<bool(const Eigen::VectorXd&)> fn;
    RatMat t;                // Image
    Eigen::MatrixXd t_inv_f; // Image
};

ConicSet ConicSet::full(std::size_t d) {
    auto n = std::make_shared<Node>();
    n->kind = Kind::Full;
    n->d = d;
    return ConicSet(std::move(n));
}

ConicSet ConicSet::zero_only(std::size_t d) {
    auto n = std::make_shared<Node>();
    n->kind = Kind::ZeroOnly;
    n->d = d;
    return ConicSet(std::move(n));
}

ConicSet ConicSet::star(std::size_t d) {
    auto n = std::make_shared<Node>();
    n->kind = Kind::Star;
    n->d = d;
    return ConicSet(std::move(n));
}

ConicSet ConicSet::from_cone(Cone c) {
    auto n = std::make_shared<Node>();
    n->kind = Kind::FromCone;
    n->d = c.ambient_dim();
    n->cone = std::move(c);
    return ConicSet(std::move(n));
}

ConicSet ConicSet::cap(const Eigen::VectorXd& axis, double cos_threshold) {
    auto n = std::make_shared<Node>();
    n->kind = Kind::Cap;
    n->d = static_cast<std::size_t>(axis.size());
    n->axis = axis.normalized();
    n->cos_threshold = cos_threshold;
    return ConicSet(std::move(n));
}

ConicSet ConicSet::complement(ConicSet m) {
    auto n = std::make_shared<Node>();
    n->kind = Kind::Complement;
    n->d = m.ambient_dim();
    n->parts.push_back(std::move(m));
    return ConicSet(std::move(n));
}

ConicSet ConicSet::union_of(std::vector<ConicSet> parts) {
    auto n = std::make_shared<Node>();
    n->kind = Kind::Union;
    n->d = parts.empty() ? 0 : parts[0].ambient_dim();
    n->parts = std::move(parts);
    return ConicSet(std::move(n));
}

ConicSet ConicSet::intersection_of(std::vector<ConicSet> parts) {
    // two cones intersect to a cone: keep the structure
    if (parts.size() == 2 && parts[0].kind() == Kind::FromCone && parts[1].kind() == Kind::FromCone)
        return from_cone(intersect(parts[0].cone(), parts[1].cone()));
    auto n = std::make_shared<Node>();
    n->kind = Kind::Intersection;
    n->d = parts.empty() ? 0 : parts[0].ambient_dim();
    n->parts = std::move(parts);
    return ConicSet(std::move(n));
}

ConicSet ConicSet::predicate(std::size_t d, std::function<bool(const Eigen::VectorXd&)> fn) {
    auto n = std::make_shared<Node>();
    n->kind = Kind::Predicate;
    n->d = d;
    n->fn = std::move(fn);
    return ConicSet(std::move(n));
}

ConicSet::Kind ConicSet::kind() const { return node_->kind; }
std::size_t ConicSet::ambient_dim() const { return node_->d; }
const Cone& ConicSet::cone() const { return *node_->cone; }
const std::vector<ConicSet>& ConicSet::parts() const { return node_->parts; }

bool ConicSet::contains(const Eigen::VectorXd& x) const {
    const Node& n = *node_;
    switch (n.kind) {
        case Kind::Full:
            return true;
        case Kind::ZeroOnly:
            return is_origin(x);
        case Kind::Star:
            return !is_origin(x);
        case Kind::FromCone:
            return conic::contains(*n.cone, x);
        case Kind::Cap: {
            double norm = x.norm();
            if (norm == 0.0) return false;
            return x.dot(n.axis) >= n.cos_threshold * norm;
        }
        case Kind::Complement:
            return !n.parts[0].contains(x);
        case Kind::Union:
            for (const auto& p : n.parts)
                if (p.contains(x)) return true;
            return false;
        case Kind::Intersection:
            for (const auto& p : n.parts)
                if (!p.contains(x)) return false;
            return true;
        case Kind::Image:
            return n.parts[0].contains(n.t_inv_f * x);
        case Kind::Predicate:
            return n.fn(x);
    }
    return false;
}

ConicSet gl_action(const RatMat& t, const ConicSet& m) {
    auto inv = inverse(t);
    if (!inv) throw Singular("gl_action: singular transform");
    const auto& n = *m.node_;
    switch (n.kind) {
        case ConicSet::Kind::Full:
        case ConicSet::Kind::ZeroOnly:
        case ConicSet::Kind::Star:
            return m;
        case ConicSet::Kind::FromCone:
            return ConicSet::from_cone(linear_image(t, *n.cone));
        case ConicSet::Kind::Cap:
            if (is_exactly_orthogonal(t))
                return ConicSet::cap(t.to_eigen() * n.axis, n.cos_threshold);
            break;
        case ConicSet::Kind::Complement:
            return ConicSet::complement(gl_action(t, n.parts[0]));
        case ConicSet::Kind::Union: {
            std::vector<ConicSet> parts;
            for (const auto& p : n.parts) parts.push_back(gl_action(t, p));
            return ConicSet::union_of(std::move(parts));
        }
        case ConicSet::Kind::Intersection: {
            std::vector<ConicSet> parts;
            for (const auto& p : n.parts) parts.push_back(gl_action(t, p));
            return ConicSet::intersection_of(std::move(parts));
        }
        case ConicSet::Kind::Image: {
            auto node = std::make_shared<ConicSet::Node>();
            node->kind = ConicSet::Kind::Image;
            node->d = n.d;
            node->t = t * n.t;
            node->t_inv_f = inverse(node->t)->to_eigen();
            node->parts.push_back(n.parts[0]);
            return ConicSet(std::move(node));
        }
        case ConicSet::Kind::Predicate:
            break;
    }
    auto node = std::make_shared<ConicSet::Node>();
    node->kind = ConicSet::Kind::Image;
    node->d = n.d;
    node->t = t;
    node->t_inv_f = inv->to_eigen();
    node->parts.push_back(m);
    return ConicSet(std::move(node));
}

ConicSet minkowski_sum_sets(const ConicSet& a, const ConicSet& b) {
    using K = ConicSet::Kind;
    if (a.kind() == K::ZeroOnly) return b;
    if (b.kind() == K::ZeroOnly) return a;
    if (a.kind() == K::Full || b.kind() == K::Full) return ConicSet::full(a.ambient_dim());
    if (a.kind() == K::FromCone && b.kind() == K::FromCone)
        return ConicSet::from_cone(minkowski_sum(a.cone(), b.cone()));
    throw UnsupportedKind("Minkowski sum of these conic set kinds is not decidable");
}

bool conic_member(const ConicSet& m, const Eigen::VectorXd& x) { return m.contains(x); }

// ---- BiconicSet -------------------------------------------------------------

struct BiconicSet::Node {
    Kind kind;
    std::size_t d = 0;
    std::optional<ConicSet> first, second;
    std::optional<Cone> cone; // Lift / LiftedSkeleton
    std::optional<Cone> pol;
    int k = -1;
    std::vector<int> comp; // skeleton face id -> polar face id
    std::vector<BiconicSet> parts;
    std::vector<std::size_t> dims; // BiconicProd block sizes
    std::function<bool(const Eigen::VectorXd&, const Eigen::VectorXd&)> fn;
    RatMat t;
    Eigen::MatrixXd t_inv_f;     // T^{-1}
    Eigen::MatrixXd t_adj_inv_f; // (T~)^{-1} = T^T
};

BiconicSet BiconicSet::full(std::size_t d) {
    auto n = std::make_shared<Node>();
    n->kind = Kind::Full;
    n->d = d;
    return BiconicSet(std::move(n));
}

BiconicSet BiconicSet::product_form(ConicSet first, ConicSet second) {
    if (first.ambient_dim() != second.ambient_dim())
        throw DimensionMismatch("product_form: component dims differ");
    auto n = std::make_shared<Node>();
    n->kind = Kind::Product;
    n->d = first.ambient_dim();
    n->first = std::move(first);
    n->second = std::move(second);
    return BiconicSet(std::move(n));
}

BiconicSet BiconicSet::union_of(std::vector<BiconicSet> parts) {
    auto n = std::make_shared<Node>();
    n->kind = Kind::Union;
    n->d = parts.empty() ? 0 : parts[0].ambient_dim();
    n->parts = std::move(parts);
    return BiconicSet(std::move(n));
}

BiconicSet BiconicSet::intersection_of(std::vector<BiconicSet> parts) {
    auto n = std::make_shared<Node>();
    n->kind = Kind::Intersection;
    n->d = parts.empty() ? 0 : parts[0].ambient_dim();
    n->parts = std::move(parts);
    return BiconicSet(std::move(n));
}

BiconicSet BiconicSet::lift(Cone c) {
    auto n = std::make_shared<Node>();
    n->kind = Kind::Lift;
    n->d = c.ambient_dim();
    n->pol = polar(c);
    n->cone = std::move(c);
    return BiconicSet(std::move(n));
}

BiconicSet BiconicSet::lifted_skeleton(Cone c, int k) {
    auto n = std::make_shared<Node>();
    n->kind = Kind::LiftedSkeleton;
    n->d = c.ambient_dim();
    n->k = k;
    n->pol = polar(c);
    n->cone = std::move(c);
    // complementary polar face per face: span(F~) = complement of span(F)
    const FaceLattice& lat = n->cone->lattice();
    const FaceLattice& latp = n->pol->lattice();
    n->comp.assign(lat.faces().size(), -1);
    for (const Face& f : lat.faces()) {
        RatMat comp_span = row_space_basis(null_space(f.span_rows).transposed());
        n->comp[f.id] = latp.face_by_span(comp_span);
    }
    return BiconicSet(std::move(n));
}

BiconicSet BiconicSet::predicate(
    std::size_t d, std::function<bool(const Eigen::VectorXd&, const Eigen::VectorXd&)> fn) {
    auto n = std::make_shared<Node>();
    n->kind = Kind::Predicate;
    n->d = d;
    n->fn = std::move(fn);
    return BiconicSet(std::move(n));
}

BiconicSet::Kind BiconicSet::kind() const { return node_->kind; }
std::size_t BiconicSet::ambient_dim() const { return node_->d; }
const ConicSet& BiconicSet::first() const { return *node_->first; }
const ConicSet& BiconicSet::second() const { return *node_->second; }
const Cone& BiconicSet::cone() const { return *node_->cone; }
const std::vector<BiconicSet>& BiconicSet::parts() const { return node_->parts; }

bool BiconicSet::contains(const Eigen::VectorXd& x, const Eigen::VectorXd& xp) const {
    const Node& n = *node_;
    switch (n.kind) {
        case Kind::Full:
            return true;
        case Kind::Product:
            return n.first->contains(x) && n.second->contains(xp);
        case Kind::Union:
            for (const auto& p : n.parts)
                if (p.contains(x, xp)) return true;
            return false;
        case Kind::Intersection:
            for (const auto& p : n.parts)
                if (!p.contains(x, xp)) return false;
            return true;
        case Kind::Lift: {
            if (!conic::contains(*n.cone, x) || !conic::contains(*n.pol, xp)) return false;
            double tol = kMembershipTol * (1.0 + x.norm() * xp.norm());
            return std::abs(x.dot(xp)) <= tol;
        }
        case Kind::LiftedSkeleton: {
            if (!conic::contains(*n.cone, x) || !conic::contains(*n.pol, xp)) return false;
            try {
                auto [dim, id] = n.cone->kit().locate(x);
                if (dim != n.k) return false;
                auto [dimp, idp] = n.pol->kit().locate(xp);
                (void)dimp;
                return idp == n.comp[id];
            } catch (const NotInCone&) {
                return false;
            } catch (const AmbiguousProjection&) {
                return false;
            }
        }
        case Kind::Rev:
            return n.parts[0].contains(xp, x);
        case Kind::GlImage:
            return n.parts[0].contains(n.t_inv_f * x, n.t_adj_inv_f * xp);
        case Kind::BiconicProd: {
            Eigen::Index off = 0;
            for (std::size_t i = 0; i < n.parts.size(); ++i) {
                auto len = static_cast<Eigen::Index>(n.dims[i]);
                if (!n.parts[i].contains(x.segment(off, len), xp.segment(off, len))) return false;
                off += len;
            }
            return true;
        }
        case Kind::Predicate:
            return n.fn(x, xp);
    }
    return false;
}

BiconicSet rev(const BiconicSet& m) {
    const auto& n = *m.node_;
    using K = BiconicSet::Kind;
    switch (n.kind) {
        case K::Full:
            return m;
        case K::Product:
            return BiconicSet::product_form(*n.second, *n.first);
        case K::Union: {
            std::vector<BiconicSet> parts;
            for (const auto& p : n.parts) parts.push_back(rev(p));
            return BiconicSet::union_of(std::move(parts));
        }
        case K::Intersection: {
            std::vector<BiconicSet> parts;
            for (const auto& p : n.parts) parts.push_back(rev(p));
            return BiconicSet::intersection_of(std::move(parts));
        }
        case K::Lift:
            return BiconicSet::lift(*n.pol);
        case K::LiftedSkeleton:
            return BiconicSet::lifted_skeleton(*n.pol, static_cast<int>(n.d) - n.k);
        case K::Rev:
            return n.parts[0];
        case K::GlImage:
            return gl_action(inv_adjoint(n.t), rev(n.parts[0]));
        case K::BiconicProd: {
            auto node = std::make_shared<BiconicSet::Node>();
            node->kind = K::BiconicProd;
            node->d = n.d;
            for (const auto& p : n.parts) node->parts.push_back(rev(p));
            node->dims = n.dims;
            return BiconicSet(std::move(node));
        }
        case K::Predicate:
            break;
    }
    auto node = std::make_shared<BiconicSet::Node>();
    node->kind = K::Rev;
    node->d = n.d;
    node->parts.push_back(m);
    return BiconicSet(std::move(node));
}

BiconicSet gl_action(const RatMat& t, const BiconicSet& m) {
    auto inv = inverse(t);
    if (!inv) throw Singular("gl_action: singular transform");
    const auto& n = *m.node_;
    using K = BiconicSet::Kind;
    switch (n.kind) {
        case K::Full:
            return m;
        case K::Product:
            return BiconicSet::product_form(gl_action(t, *n.first),
                                            gl_action(inv_adjoint(t), *n.second));
        case K::Union: {
            std::vector<BiconicSet> parts;
            for (const auto& p : n.parts) parts.push_back(gl_action(t, p));
            return BiconicSet::union_of(std::move(parts));
        }
        case K::Intersection: {
            std::vector<BiconicSet> parts;
            for (const auto& p : n.parts) parts.push_back(gl_action(t, p));
            return BiconicSet::intersection_of(std::move(parts));
        }
        case K::Lift:
            return BiconicSet::lift(linear_image(t, *n.cone));
        case K::LiftedSkeleton:
            return BiconicSet::lifted_skeleton(linear_image(t, *n.cone), n.k);
        case K::GlImage: {
            auto node = std::make_shared<BiconicSet::Node>();
            node->kind = K::GlImage;
            node->d = n.d;
            node->t = t * n.t;
            node->t_inv_f = inverse(node->t)->to_eigen();
            node->t_adj_inv_f = node->t.transposed().to_eigen();
            node->parts.push_back(n.parts[0]);
            return BiconicSet(std::move(node));
        }
        default:
            break;
    }
    auto node = std::make_shared<BiconicSet::Node>();
    node->kind = K::GlImage;
    node->d = n.d;
    node->t = t;
    node->t_inv_f = inv->to_eigen();
    node->t_adj_inv_f = t.transposed().to_eigen();
    node->parts.push_back(m);
    return BiconicSet(std::move(node));
}

BiconicSet wedge(const BiconicSet& m, const BiconicSet& n) {
    using K = BiconicSet::Kind;
    if (m.kind() == K::Union) {
        std::vector<BiconicSet> parts;
        for (const auto& p : m.parts()) parts.push_back(wedge(p, n));
        return BiconicSet::union_of(std::move(parts));
    }
    if (n.kind() == K::Union) {
        std::vector<BiconicSet> parts;
        for (const auto& p : n.parts()) parts.push_back(wedge(m, p));
        return BiconicSet::union_of(std::move(parts));
    }
    if (m.kind() == K::Product && n.kind() == K::Product)
        return BiconicSet::product_form(ConicSet::intersection_of({m.first(), n.first()}),
                                        minkowski_sum_sets(m.second(), n.second()));
    if (m.kind() == K::Lift && n.kind() == K::Lift)
        return BiconicSet::lift(intersect(m.cone(), n.cone()));
    if (m.kind() == K::Rev && n.kind() == K::Rev) return rev(vee(m.parts()[0], n.parts()[0]));
    throw UnsupportedKind("wedge: operands must be products, lifts, or unions thereof");
}

BiconicSet vee(const BiconicSet& m, const BiconicSet& n) {
    using K = BiconicSet::Kind;
    if (m.kind() == K::Union) {
        std::vector<BiconicSet> parts;
        for (const auto& p : m.parts()) parts.push_back(vee(p, n));
        return BiconicSet::union_of(std::move(parts));
    }
    if (n.kind() == K::Union) {
        std::vector<BiconicSet> parts;
        for (const auto& p : n.parts()) parts.push_back(vee(m, p));
        return BiconicSet::union_of(std::move(parts));
    }
    if (m.kind() == K::Product && n.kind() == K::Product)
        return BiconicSet::product_form(minkowski_sum_sets(m.first(), n.first()),
                                        ConicSet::intersection_of({m.second(), n.second()}));
    if (m.kind() == K::Lift && n.kind() == K::Lift)
        return BiconicSet::lift(minkowski_sum(m.cone(), n.cone()));
    if (m.kind() == K::Rev && n.kind() == K::Rev) return rev(wedge(m.parts()[0], n.parts()[0]));
    throw UnsupportedKind("vee: operands must be products, lifts, or unions thereof");
}

BiconicSet biconic_product(const BiconicSet& m, const BiconicSet& n) {
    using K = BiconicSet::Kind;
    auto node = std::make_shared<BiconicSet::Node>();
    node->kind = K::BiconicProd;
    node->d = m.ambient_dim() + n.ambient_dim();
    auto push = [&](const BiconicSet& s) {
        if (s.kind() == K::BiconicProd) {
            for (std::size_t i = 0; i < s.parts().size(); ++i) {
                node->parts.push_back(s.parts()[i]);
                node->dims.push_back(s.node_->dims[i]);
            }
        } else {
            node->parts.push_back(s);
            node->dims.push_back(s.ambient_dim());
        }
    };
    push(m);
    push(n);
    return BiconicSet(std::move(node));
}

bool biconic_member(const BiconicSet& m, const Eigen::VectorXd& x, const Eigen::VectorXd& xp) {
    return m.contains(x, xp);
}

} // namespace conic
