#include "conic/projection.hpp"

#include <cmath>

namespace conic {

ProjectionKit::ProjectionKit(const RatMat& halfspace_rows, const RatMat& generator_cols,
                             const FaceLattice& lattice)
    : d_(static_cast<int>(lattice.ambient_dim())) {
    rows_ = halfspace_rows.to_eigen();
    for (Eigen::Index i = 0; i < rows_.rows(); ++i) {
        double n = rows_.row(i).norm();
        if (n > 0) rows_.row(i) /= n;
    }
    gens_ = generator_cols.to_eigen();
    for (Eigen::Index j = 0; j < gens_.cols(); ++j) {
        double n = gens_.col(j).norm();
        if (n > 0) gens_.col(j) /= n;
    }
    rows_t_ = rows_.transpose();

    for (const Face& f : lattice.faces()) {
        FaceData fd;
        fd.id = f.id;
        fd.dim = f.dim;
        fd.tight_mask = f.tight_mask;
        if (f.dim == 0) {
            fd.projector = Eigen::MatrixXd::Zero(d_, d_);
            fd.onb = Eigen::MatrixXd(d_, 0);
            fd.normal_onb = Eigen::MatrixXd::Identity(d_, d_);
        } else if (f.dim == d_) {
            // exact identity so full-dimensional samples get polar part 0
            fd.projector = Eigen::MatrixXd::Identity(d_, d_);
            fd.onb = Eigen::MatrixXd::Identity(d_, d_);
            fd.normal_onb = Eigen::MatrixXd(d_, 0);
        } else {
            Eigen::MatrixXd basis = f.span_rows.transposed().to_eigen();
            Eigen::HouseholderQR<Eigen::MatrixXd> qr(basis);
            Eigen::MatrixXd q = qr.householderQ();
            fd.onb = q.leftCols(f.dim);
            fd.normal_onb = q.rightCols(d_ - f.dim);
            fd.projector = fd.onb * fd.onb.transpose();
        }
        by_tight_[f.tight_mask] = static_cast<int>(face_.size());
        face_.push_back(std::move(fd));
    }
}

bool ProjectionKit::member(const Eigen::VectorXd& x, double tol) const {
    if (rows_.rows() == 0) return true;
    double thr = tol * x.norm();
    return ((rows_ * x).array() <= thr).all();
}

bool ProjectionKit::polar_member(const Eigen::VectorXd& z, double tol) const {
    if (gens_.cols() == 0) return true;
    double thr = tol * z.norm();
    return ((gens_.transpose() * z).array() <= thr).all();
}

std::uint64_t ProjectionKit::tight_mask_of(const Eigen::VectorXd& y, double tol) const {
    std::uint64_t mask = 0;
    double thr = tol * (1.0 + y.norm());
    for (Eigen::Index i = 0; i < rows_t_.cols(); ++i)
        if (std::abs(rows_t_.col(i).dot(y)) <= thr) mask |= (std::uint64_t{1} << i);
    return mask;
}

std::pair<int, int> ProjectionKit::locate(const Eigen::VectorXd& y) const {
    if (!member(y, 10 * kMembershipTol)) throw NotInCone("locate: point outside cone");
    auto it = by_tight_.find(tight_mask_of(y));
    if (it == by_tight_.end())
        throw AmbiguousProjection("locate: tight set matches no face (boundary tolerance)");
    const FaceData& f = face_[it->second];
    return {f.dim, f.id};
}

std::pair<int, int> ProjectionKit::classify(const Eigen::VectorXd& x, Eigen::VectorXd& y,
                                            Eigen::VectorXd& yp) const {
    const double thr = kMembershipTol * (1.0 + x.norm());
    const std::size_t n = face_.size();
    std::size_t i = 0;
    while (i < n) {
        const int dim_here = face_[i].dim;
        int hits = 0;
        std::size_t hit = 0;
        for (; i < n && face_[i].dim == dim_here; ++i) {
            const FaceData& f = face_[i];
            y.noalias() = f.projector * x;
            bool ok = true;
            for (Eigen::Index r = 0; r < rows_t_.cols(); ++r) {
                if (rows_t_.col(r).dot(y) > thr) {
                    ok = false;
                    break;
                }
            }
            if (!ok) continue;
            yp.noalias() = x - y;
            for (Eigen::Index c = 0; c < gens_.cols(); ++c) {
                if (gens_.col(c).dot(yp) > thr) {
                    ok = false;
                    break;
                }
            }
            if (!ok) continue;
            if (++hits > 1) throw AmbiguousProjection("projection accepted by two faces");
            hit = i;
        }
        if (hits == 1) {
            const FaceData& f = face_[hit];
            y.noalias() = f.projector * x;
            yp.noalias() = x - y;
            // relative-interior check: the tight set of y must match exactly
            if (tight_mask_of(y) != f.tight_mask)
                throw AmbiguousProjection("projection point on a face boundary");
            return {f.dim, f.id};
        }
    }
    throw AmbiguousProjection("no face accepted the projection (tolerance)");
}

MoreauPair ProjectionKit::project(const Eigen::VectorXd& x) const {
    MoreauPair out;
    Eigen::VectorXd y(d_), yp(d_);
    auto [dim, id] = classify(x, y, yp);
    (void)dim;
    out.primal = std::move(y);
    out.polar = std::move(yp);
    out.primal_face = id;
    return out;
}

} // namespace conic
