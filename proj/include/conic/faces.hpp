#pragma once

#include <Eigen/Dense>

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "conic/cone.hpp"
#include "conic/matrix.hpp"

namespace conic {

struct Face {
    int id = -1;
    std::uint64_t gen_mask = 0;   // V-columns lying on the face
    std::uint64_t tight_mask = 0; // H-rows vanishing on the face
    RatMat span_rows;             // canonical RREF basis of span(F), one vector per row
    int dim = 0;
    std::vector<int> gens;
    std::vector<int> tight;
};

/// All faces of a cone with tight sets, span bases and dimensions. Faces are
/// ordered by (dim, gen_mask), so ids are deterministic.
class FaceLattice {
public:
    FaceLattice(std::size_t d, std::vector<Face> faces);

    std::size_t ambient_dim() const { return d_; }
    const std::vector<Face>& faces() const { return faces_; }
    const Face& face(int id) const { return faces_[id]; }
    const std::vector<int>& faces_of_dim(int k) const { return by_dim_[k]; }

    int lineality() const { return lineality_; }
    int span_dim() const { return span_dim_; }
    int minimal_face() const { return minimal_face_; }
    int top_face() const { return top_face_; }

    /// Face with the given full tight set, or -1.
    int face_by_tight_mask(std::uint64_t mask) const;
    /// Face with the given span (canonical RREF rows), or -1.
    int face_by_span(const RatMat& span_rows) const;

    std::vector<long> f_vector() const;

private:
    std::size_t d_;
    std::vector<Face> faces_;
    std::vector<std::vector<int>> by_dim_;
    std::map<std::uint64_t, int> by_tight_;
    std::map<std::string, int> by_span_;
    int lineality_ = 0;
    int span_dim_ = 0;
    int minimal_face_ = -1;
    int top_face_ = -1;
};

std::string span_key(const RatMat& span_rows);

/// Enumerates every face once: tight-row subsets with exact dedup by the
/// generator set they cut out.
FaceLattice enumerate_faces(const Cone& c);

/// The set L_k(C) of linear spans of k-faces, as subspace cones.
std::vector<Cone> spans_k(const Cone& c, int k);

std::vector<long> f_vector(const Cone& c);
/// Indicator vector at index lineality(C).
std::vector<long> ell_vector(const Cone& c);

/// The unique face whose relative interior contains y (y in C to tol);
/// returns (dim, face id). Throws NotInCone / AmbiguousProjection.
std::pair<int, int> locate_skeleton(const Cone& c, const Eigen::VectorXd& y);

/// Exact general-position certificate: every selection of face spans meets
/// with dimension max{0, sum dims - (count-1) d}.
bool is_general_position(const std::vector<Cone>& cones);

} // namespace conic
