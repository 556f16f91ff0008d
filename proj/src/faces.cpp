#include "conic/faces.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "conic/projection.hpp"

namespace conic {

std::string span_key(const RatMat& span_rows) {
    std::ostringstream os;
    os << span_rows.rows() << 'x' << span_rows.cols() << ':';
    for (std::size_t i = 0; i < span_rows.rows(); ++i)
        for (std::size_t j = 0; j < span_rows.cols(); ++j) os << span_rows(i, j).get_str() << ',';
    return os.str();
}

FaceLattice::FaceLattice(std::size_t d, std::vector<Face> faces) : d_(d), faces_(std::move(faces)) {
    std::sort(faces_.begin(), faces_.end(), [](const Face& a, const Face& b) {
        return a.dim != b.dim ? a.dim < b.dim : a.gen_mask < b.gen_mask;
    });
    by_dim_.assign(d_ + 1, {});
    for (std::size_t i = 0; i < faces_.size(); ++i) {
        faces_[i].id = static_cast<int>(i);
        by_dim_[faces_[i].dim].push_back(static_cast<int>(i));
        by_tight_[faces_[i].tight_mask] = static_cast<int>(i);
        by_span_[span_key(faces_[i].span_rows)] = static_cast<int>(i);
    }
    lineality_ = faces_.front().dim;
    span_dim_ = faces_.back().dim;
    minimal_face_ = 0;
    top_face_ = static_cast<int>(faces_.size()) - 1;
}

int FaceLattice::face_by_tight_mask(std::uint64_t mask) const {
    auto it = by_tight_.find(mask);
    return it == by_tight_.end() ? -1 : it->second;
}

int FaceLattice::face_by_span(const RatMat& span_rows) const {
    auto it = by_span_.find(span_key(span_rows));
    return it == by_span_.end() ? -1 : it->second;
}

std::vector<long> FaceLattice::f_vector() const {
    std::vector<long> f(d_ + 1, 0);
    for (const auto& face : faces_) ++f[face.dim];
    return f;
}

namespace {

template <class Fn>
void for_each_subset_of_size(std::size_t m, std::size_t t, Fn&& fn) {
    if (t > m) return;
    std::vector<std::size_t> idx(t);
    for (std::size_t i = 0; i < t; ++i) idx[i] = i;
    while (true) {
        fn(idx);
        // next combination
        std::size_t i = t;
        while (i > 0 && idx[i - 1] == m - t + (i - 1)) --i;
        if (i == 0) break;
        ++idx[i - 1];
        for (std::size_t j = i; j < t; ++j) idx[j] = idx[j - 1] + 1;
    }
}

} // namespace

FaceLattice enumerate_faces_from_rep(std::size_t d, const RatMat& h, const RatMat& v,
                                     const RatMat& lin_basis) {
    const std::size_t m = h.rows();
    const std::size_t g = v.cols();
    if (m > kMaxConstraints + 2 * kMaxAmbientDim || g > 64)
        throw SizeGuard("enumerate_faces: constraint budget exceeded");

    // tight-generator bitmask per row
    std::vector<std::uint64_t> row_mask(m, 0);
    for (std::size_t i = 0; i < m; ++i) {
        for (std::size_t j = 0; j < g; ++j) {
            Rational dot = 0;
            for (std::size_t c = 0; c < d; ++c) dot += h(i, c) * v(c, j);
            if (dot == 0) row_mask[i] |= (std::uint64_t{1} << j);
        }
    }

    const std::uint64_t all = g == 64 ? ~std::uint64_t{0} : ((std::uint64_t{1} << g) - 1);
    std::set<std::uint64_t> masks;
    masks.insert(all); // empty tight set: the cone itself
    for (std::size_t t = 1; t <= std::min(m, d); ++t) {
        for_each_subset_of_size(m, t, [&](const std::vector<std::size_t>& idx) {
            std::uint64_t acc = all;
            for (auto i : idx) acc &= row_mask[i];
            masks.insert(acc);
        });
    }

    std::vector<Face> faces;
    for (std::uint64_t mask : masks) {
        Face f;
        f.gen_mask = mask;
        RatMat span_cand(0, d);
        for (std::size_t j = 0; j < g; ++j) {
            if (mask & (std::uint64_t{1} << j)) {
                f.gens.push_back(static_cast<int>(j));
                span_cand.append_row(v.col_vec(j));
            }
        }
        for (std::size_t j = 0; j < lin_basis.cols(); ++j) span_cand.append_row(lin_basis.col_vec(j));
        f.span_rows = row_space_basis(span_cand);
        f.dim = static_cast<int>(f.span_rows.rows());
        for (std::size_t i = 0; i < m; ++i) {
            if ((row_mask[i] & mask) == mask) {
                f.tight.push_back(static_cast<int>(i));
                f.tight_mask |= (std::uint64_t{1} << i);
            }
        }
        faces.push_back(std::move(f));
    }
    return FaceLattice(d, std::move(faces));
}

FaceLattice enumerate_faces(const Cone& c) { return c.lattice(); }

std::vector<Cone> spans_k(const Cone& c, int k) {
    const FaceLattice& lat = c.lattice();
    std::vector<Cone> out;
    for (int id : lat.faces_of_dim(k))
        out.push_back(Cone::subspace(lat.face(id).span_rows.transposed(), c.ambient_dim()));
    return out;
}

std::vector<long> f_vector(const Cone& c) { return c.lattice().f_vector(); }

std::vector<long> ell_vector(const Cone& c) {
    std::vector<long> ell(c.ambient_dim() + 1, 0);
    ell[c.lineality()] = 1;
    return ell;
}

std::pair<int, int> locate_skeleton(const Cone& c, const Eigen::VectorXd& y) {
    return c.kit().locate(y);
}

bool is_general_position(const std::vector<Cone>& cones) {
    if (cones.empty()) return true;
    const std::size_t d = cones[0].ambient_dim();
    for (const auto& c : cones)
        if (c.ambient_dim() != d) throw DimensionMismatch("is_general_position: mixed ambient dims");

    const std::size_t n = cones.size();
    // complement (normal-space) rows per face per cone
    std::vector<std::vector<RatMat>> normals(n);
    std::vector<std::vector<int>> dims(n);
    for (std::size_t i = 0; i < n; ++i) {
        const FaceLattice& lat = cones[i].lattice();
        for (const auto& f : lat.faces()) {
            normals[i].push_back(null_space(f.span_rows).transposed());
            dims[i].push_back(f.dim);
        }
    }

    // every index subset of size >= 2, every span selection
    for (std::uint32_t sel = 1; sel < (1u << n); ++sel) {
        std::vector<std::size_t> idx;
        for (std::size_t i = 0; i < n; ++i)
            if (sel & (1u << i)) idx.push_back(i);
        if (idx.size() < 2) continue;

        std::vector<std::size_t> pick(idx.size(), 0);
        while (true) {
            RatMat stacked(0, d);
            long dim_sum = 0;
            for (std::size_t t = 0; t < idx.size(); ++t) {
                stacked = vstack(stacked, normals[idx[t]][pick[t]]);
                dim_sum += dims[idx[t]][pick[t]];
            }
            long meet = static_cast<long>(d) - static_cast<long>(rank(stacked));
            long expect = std::max<long>(0, dim_sum - static_cast<long>((idx.size() - 1) * d));
            if (meet != expect) return false;

            std::size_t t = 0;
            while (t < idx.size() && ++pick[t] == normals[idx[t]].size()) {
                pick[t] = 0;
                ++t;
            }
            if (t == idx.size()) break;
        }
    }
    return true;
}

} // namespace conic
