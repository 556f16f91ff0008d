#pragma once

#include <Eigen/Dense>

#include <cstdint>
#include <map>
#include <vector>

#include "conic/cone.hpp"
#include "conic/faces.hpp"

namespace conic {

/// Float tables derived from the exact lattice: unit H-rows, unit
/// generators, one orthogonal projector per face span. Built once per cone
/// and shared; project() is pure and reentrant.
class ProjectionKit {
public:
    ProjectionKit(const RatMat& halfspace_rows, const RatMat& generator_cols,
                  const FaceLattice& lattice);

    /// Lean classification used by the Monte Carlo inner loops: projects x,
    /// writes the Moreau pair into (y, yp), returns (dim, face id).
    std::pair<int, int> classify(const Eigen::VectorXd& x, Eigen::VectorXd& y,
                                 Eigen::VectorXd& yp) const;

    int ambient_dim() const { return d_; }

    /// Exact combinatorial projection: scan face spans by ascending
    /// dimension; accept the span whose orthogonal projection satisfies both
    /// Moreau memberships. Throws AmbiguousProjection on ties.
    MoreauPair project(const Eigen::VectorXd& x) const;

    /// Face dim + id of the face whose relative interior contains y.
    std::pair<int, int> locate(const Eigen::VectorXd& y) const;

    bool member(const Eigen::VectorXd& x, double tol = kMembershipTol) const;
    bool polar_member(const Eigen::VectorXd& z, double tol = kMembershipTol) const;

    std::uint64_t tight_mask_of(const Eigen::VectorXd& y, double tol = kMembershipTol) const;

    /// Column ONB of the face span (d x dim).
    const Eigen::MatrixXd& span_onb(int face_id) const { return face_[face_id].onb; }
    /// Column ONB of the orthogonal complement of the face span.
    const Eigen::MatrixXd& normal_onb(int face_id) const { return face_[face_id].normal_onb; }

private:
    struct FaceData {
        int id;
        int dim;
        std::uint64_t tight_mask;
        Eigen::MatrixXd projector;
        Eigen::MatrixXd onb;
        Eigen::MatrixXd normal_onb;
    };

    int d_;
    Eigen::MatrixXd rows_;   // unit-normalized H rows, m x d
    Eigen::MatrixXd rows_t_; // transpose of rows_, contiguous per row
    Eigen::MatrixXd gens_;   // unit-normalized V columns, d x g
    std::vector<FaceData> face_;         // lattice order (ascending dim)
    std::map<std::uint64_t, int> by_tight_;
};

} // namespace conic
