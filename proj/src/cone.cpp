#include "conic/cone.hpp"

#include <algorithm>
#include <mutex>
#include <set>
#include <string>

#include "conic/faces.hpp"
#include "conic/projection.hpp"

namespace conic {

FaceLattice enumerate_faces_from_rep(std::size_t d, const RatMat& h, const RatMat& v,
                                     const RatMat& lin_basis); // faces.cpp

namespace {

// ---- exact ray enumeration -------------------------------------------------

/// Scales a rational vector to a primitive integer vector (same direction).
std::vector<Rational> primitive(const std::vector<Rational>& v) {
    mpz_class lcm_den = 1;
    for (const auto& q : v) {
        mpz_class den = q.get_den();
        mpz_lcm(lcm_den.get_mpz_t(), lcm_den.get_mpz_t(), den.get_mpz_t());
    }
    mpz_class gcd_num = 0;
    std::vector<Rational> w(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) {
        w[i] = v[i] * Rational(lcm_den);
        mpz_class num = w[i].get_num();
        mpz_gcd(gcd_num.get_mpz_t(), gcd_num.get_mpz_t(), num.get_mpz_t());
    }
    if (gcd_num == 0) return w;
    for (auto& q : w) {
        q /= Rational(gcd_num);
        q.canonicalize();
    }
    return w;
}

bool lex_less(const std::vector<Rational>& a, const std::vector<Rational>& b) {
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] != b[i]) return a[i] < b[i];
    }
    return false;
}

template <class Fn>
void for_each_combination(std::size_t m, std::size_t t, Fn&& fn) {
    if (t > m) return;
    std::vector<std::size_t> idx(t);
    for (std::size_t i = 0; i < t; ++i) idx[i] = i;
    while (true) {
        fn(idx);
        std::size_t i = t;
        while (i > 0 && idx[i - 1] == m - t + (i - 1)) --i;
        if (i == 0) break;
        ++idx[i - 1];
        for (std::size_t j = i; j < t; ++j) idx[j] = idx[j - 1] + 1;
    }
}

struct DualRays {
    std::vector<std::vector<Rational>> rays; // extreme-ray representatives, primitive, sorted
    RatMat lin_cols;                         // lineality basis, d x lin
};

/// Extreme rays and lineality basis of {x : Ax <= 0}. Enumerates tight-row
/// subsets of size d - lin - 1 with exact rank filtering.
DualRays dual_rays(const RatMat& a, std::size_t d) {
    if (a.rows() > kMaxConstraints || d > kMaxAmbientDim)
        throw SizeGuard("double description: more than " + std::to_string(kMaxConstraints) +
                        " constraints/generators or ambient dim > " +
                        std::to_string(kMaxAmbientDim));

    DualRays out;
    RatMat a_sized = a;
    if (a_sized.cols() != d) {
        if (a_sized.rows() == 0)
            a_sized = RatMat(0, d);
        else
            throw DimensionMismatch("halfspace row width != ambient dim");
    }

    RatMat w = null_space(a_sized); // d x lin
    // canonical primitive lineality basis
    {
        RatMat canon = row_space_basis(w.transposed());
        RatMat cols(d, canon.rows());
        for (std::size_t i = 0; i < canon.rows(); ++i) {
            auto p = primitive(canon.row_vec(i));
            for (std::size_t j = 0; j < d; ++j) cols(j, i) = p[j];
        }
        w = cols;
    }
    out.lin_cols = w;
    const std::size_t lin = w.cols();
    if (lin == d) return out;

    // reduce mod lineality: canonical representative per ray
    RatMat w_rref = row_space_basis(w.transposed());
    std::vector<std::size_t> w_pivots;
    {
        RatMat tmp = w.transposed();
        w_pivots = rref_in_place(tmp);
    }
    auto reduce_mod_lin = [&](std::vector<Rational> u) {
        for (std::size_t i = 0; i < w_rref.rows(); ++i) {
            const std::size_t p = w_pivots[i];
            if (u[p] == 0) continue;
            Rational f = u[p];
            for (std::size_t j = 0; j < d; ++j) u[j] -= f * w_rref(i, j);
        }
        return u;
    };

    const std::size_t t = d - lin - 1;
    const std::size_t m = a_sized.rows();
    std::set<std::string> seen_spans;
    for_each_combination(m, t, [&](const std::vector<std::size_t>& idx) {
        RatMat sub(0, d);
        for (auto i : idx) sub.append_row(a_sized.row_vec(i));
        RatMat n = null_space(sub);
        if (n.cols() != lin + 1) return; // dependent subset
        std::string key = span_key(row_space_basis(n.transposed()));
        if (!seen_spans.insert(key).second) return;
        // pick a basis column outside the lineality space
        std::vector<Rational> u;
        for (std::size_t j = 0; j < n.cols(); ++j) {
            RatMat probe = w.transposed();
            probe.append_row(n.col_vec(j));
            if (rank(probe) == lin + 1) {
                u = n.col_vec(j);
                break;
            }
        }
        auto au = a_sized * u;
        bool nonpos = true, nonneg = true;
        for (const auto& q : au) {
            if (q > 0) nonpos = false;
            if (q < 0) nonneg = false;
        }
        if (nonpos) {
            out.rays.push_back(primitive(reduce_mod_lin(u)));
        } else if (nonneg) {
            for (auto& q : u) q = -q;
            out.rays.push_back(primitive(reduce_mod_lin(u)));
        }
    });
    std::sort(out.rays.begin(), out.rays.end(), lex_less);
    return out;
}

RatMat rays_as_cols(const DualRays& dr, std::size_t d) {
    RatMat v(d, 0);
    for (const auto& r : dr.rays) v.append_col(r);
    for (std::size_t j = 0; j < dr.lin_cols.cols(); ++j) {
        auto wcol = dr.lin_cols.col_vec(j);
        v.append_col(wcol);
        for (auto& q : wcol) q = -q;
        v.append_col(wcol);
    }
    return v;
}

RatMat rays_as_rows(const DualRays& dr, std::size_t d) {
    return rays_as_cols(dr, d).transposed();
}

} // namespace

// ---- Cone state ------------------------------------------------------------

struct Cone::State {
    std::size_t d = 0;
    std::optional<RatMat> h_in;
    std::optional<RatMat> v_in;
    bool validate_pair = false;

    mutable std::mutex mu;
    mutable bool canonical_done = false;
    mutable RatMat h;         // canonical rows
    mutable RatMat v;         // canonical columns
    mutable RatMat lin_basis; // d x lin
    mutable std::size_t n_extreme = 0;
    mutable int lineality = 0;
    mutable int span_dim = 0;
    mutable std::shared_ptr<const FaceLattice> lattice;
    mutable std::shared_ptr<const ProjectionKit> kit;

    void canonicalize_locked() const {
        if (canonical_done) return;
        RatMat a0;
        if (h_in) {
            a0 = *h_in;
        } else {
            a0 = rays_as_rows(dual_rays(v_in->transposed(), d), d);
        }
        DualRays v1 = dual_rays(a0, d);
        RatMat v_tmp = rays_as_cols(v1, d);
        DualRays polar_rays = dual_rays(v_tmp.transposed(), d);
        h = rays_as_rows(polar_rays, d);
        DualRays v2 = dual_rays(h, d);
        v = rays_as_cols(v2, d);
        lin_basis = v2.lin_cols;
        n_extreme = v2.rays.size();
        lineality = static_cast<int>(lin_basis.cols());
        span_dim = static_cast<int>(d - polar_rays.lin_cols.cols());

        if (validate_pair) {
            // both inputs were given: the generator-side canonical form must
            // match the halfspace-side one
            DualRays from_v = dual_rays(rays_as_rows(dual_rays(v_in->transposed(), d), d), d);
            RatMat v_alt = rays_as_cols(from_v, d);
            RatMat h_alt = rays_as_rows(dual_rays(v_alt.transposed(), d), d);
            if (!(h_alt == h))
                throw DimensionMismatch("from_both: H and V describe different cones");
        }
        canonical_done = true;
    }

    void ensure_lattice_locked() const {
        canonicalize_locked();
        if (!lattice)
            lattice = std::make_shared<FaceLattice>(enumerate_faces_from_rep(d, h, v, lin_basis));
        if (!kit) kit = std::make_shared<ProjectionKit>(h, v, *lattice);
    }
};

Cone Cone::from_halfspaces(RatMat a, std::size_t d) {
    if (a.rows() > 0 && a.cols() != d) throw DimensionMismatch("from_halfspaces: row width != d");
    if (d == 0) throw DimensionMismatch("ambient dimension must be >= 1");
    auto s = std::make_shared<State>();
    s->d = d;
    if (a.rows() == 0) a = RatMat(0, d);
    s->h_in = std::move(a);
    return Cone(std::move(s));
}

Cone Cone::from_generators(RatMat b, std::size_t d) {
    if (b.cols() > 0 && b.rows() != d) throw DimensionMismatch("from_generators: column height != d");
    if (d == 0) throw DimensionMismatch("ambient dimension must be >= 1");
    auto s = std::make_shared<State>();
    s->d = d;
    if (b.cols() == 0) b = RatMat(d, 0);
    s->v_in = std::move(b);
    return Cone(std::move(s));
}

Cone Cone::from_both(RatMat a, RatMat b, std::size_t d) {
    Cone c = from_both_unchecked(std::move(a), std::move(b), d);
    c.state_->validate_pair = true;
    return c;
}

Cone Cone::from_both_unchecked(RatMat a, RatMat b, std::size_t d) {
    if (a.rows() > 0 && a.cols() != d) throw DimensionMismatch("from_both: row width != d");
    if (b.cols() > 0 && b.rows() != d) throw DimensionMismatch("from_both: column height != d");
    auto s = std::make_shared<State>();
    s->d = d;
    s->h_in = a.rows() == 0 ? RatMat(0, d) : std::move(a);
    s->v_in = b.cols() == 0 ? RatMat(d, 0) : std::move(b);
    return Cone(std::move(s));
}

Cone Cone::full_space(std::size_t d) { return from_halfspaces(RatMat(0, d), d); }

Cone Cone::origin(std::size_t d) { return from_generators(RatMat(d, 0), d); }

Cone Cone::subspace(const RatMat& basis_cols, std::size_t d) {
    RatMat v(d, 0);
    for (std::size_t j = 0; j < basis_cols.cols(); ++j) {
        auto c = basis_cols.col_vec(j);
        v.append_col(c);
        for (auto& q : c) q = -q;
        v.append_col(c);
    }
    return from_generators(std::move(v), d);
}

std::size_t Cone::ambient_dim() const { return state_->d; }

bool Cone::has_halfspaces_input() const { return state_->h_in.has_value(); }
bool Cone::has_generators_input() const { return state_->v_in.has_value(); }
const std::optional<RatMat>& Cone::halfspaces_input() const { return state_->h_in; }
const std::optional<RatMat>& Cone::generators_input() const { return state_->v_in; }

const Cone::State& Cone::canonical() const {
    std::lock_guard<std::mutex> lock(state_->mu);
    state_->canonicalize_locked();
    return *state_;
}

const RatMat& Cone::halfspaces() const { return canonical().h; }
const RatMat& Cone::generators() const { return canonical().v; }
std::size_t Cone::extreme_ray_count() const { return canonical().n_extreme; }
int Cone::lineality() const { return canonical().lineality; }
int Cone::span_dim() const { return canonical().span_dim; }
const RatMat& Cone::lineality_basis() const { return canonical().lin_basis; }

const FaceLattice& Cone::lattice() const {
    std::lock_guard<std::mutex> lock(state_->mu);
    state_->ensure_lattice_locked();
    return *state_->lattice;
}

const ProjectionKit& Cone::kit() const {
    std::lock_guard<std::mutex> lock(state_->mu);
    state_->ensure_lattice_locked();
    return *state_->kit;
}

// ---- operations ------------------------------------------------------------

Cone ensure_dual_rep(const Cone& c) {
    c.halfspaces();
    return c;
}

Cone polar(const Cone& c) {
    // representation swap, C~ = {z : B^T z <= 0} = cone(A^T)
    std::optional<RatMat> h, v;
    if (c.has_generators_input()) h = c.generators_input()->transposed();
    if (c.has_halfspaces_input()) v = c.halfspaces_input()->transposed();
    if (h && v) return Cone::from_both_unchecked(std::move(*h), std::move(*v), c.ambient_dim());
    if (h) return Cone::from_halfspaces(std::move(*h), c.ambient_dim());
    return Cone::from_generators(std::move(*v), c.ambient_dim());
}

Cone product(const Cone& c, const Cone& d) {
    const std::size_t dc = c.ambient_dim(), dd = d.ambient_dim();
    const RatMat &hc = c.halfspaces(), &hd = d.halfspaces();
    const RatMat &vc = c.generators(), &vd = d.generators();
    RatMat h(hc.rows() + hd.rows(), dc + dd);
    for (std::size_t i = 0; i < hc.rows(); ++i)
        for (std::size_t j = 0; j < dc; ++j) h(i, j) = hc(i, j);
    for (std::size_t i = 0; i < hd.rows(); ++i)
        for (std::size_t j = 0; j < dd; ++j) h(hc.rows() + i, dc + j) = hd(i, j);
    RatMat v(dc + dd, vc.cols() + vd.cols());
    for (std::size_t i = 0; i < dc; ++i)
        for (std::size_t j = 0; j < vc.cols(); ++j) v(i, j) = vc(i, j);
    for (std::size_t i = 0; i < dd; ++i)
        for (std::size_t j = 0; j < vd.cols(); ++j) v(dc + i, vc.cols() + j) = vd(i, j);
    return Cone::from_both_unchecked(std::move(h), std::move(v), dc + dd);
}

Cone intersect(const Cone& c, const Cone& d) {
    if (c.ambient_dim() != d.ambient_dim()) throw DimensionMismatch("intersect: ambient dims differ");
    return Cone::from_halfspaces(vstack(c.halfspaces(), d.halfspaces()), c.ambient_dim());
}

Cone minkowski_sum(const Cone& c, const Cone& d) {
    if (c.ambient_dim() != d.ambient_dim())
        throw DimensionMismatch("minkowski_sum: ambient dims differ");
    return Cone::from_generators(hstack(c.generators(), d.generators()), c.ambient_dim());
}

RatMat inv_adjoint(const RatMat& t) {
    auto inv = inverse(t);
    if (!inv) throw Singular("inv_adjoint: singular transform");
    return inv->transposed();
}

Cone linear_image(const RatMat& t, const Cone& c) {
    if (t.rows() != t.cols() || t.rows() != c.ambient_dim())
        throw DimensionMismatch("linear_image: transform shape");
    auto inv = inverse(t);
    if (!inv) throw Singular("linear_image: singular transform");
    std::optional<RatMat> h, v;
    if (c.has_generators_input()) v = t * (*c.generators_input());
    if (c.has_halfspaces_input()) h = (*c.halfspaces_input()) * (*inv);
    if (h && v) return Cone::from_both_unchecked(std::move(*h), std::move(*v), c.ambient_dim());
    if (h) return Cone::from_halfspaces(std::move(*h), c.ambient_dim());
    return Cone::from_generators(std::move(*v), c.ambient_dim());
}

Cone lineality_space(const Cone& c) {
    return Cone::subspace(c.lineality_basis(), c.ambient_dim());
}

int lineality(const Cone& c) { return c.lineality(); }

bool contains(const Cone& c, const Eigen::VectorXd& x, double tol) {
    return c.kit().member(x, tol);
}

bool contains_exact(const Cone& c, const std::vector<Rational>& x) {
    const RatMat& h = c.halfspaces();
    if (x.size() != c.ambient_dim()) throw DimensionMismatch("contains_exact: vector length");
    auto ax = h * x;
    for (const auto& q : ax)
        if (q > 0) return false;
    return true;
}

MoreauPair project(const Cone& c, const Eigen::VectorXd& x) { return c.kit().project(x); }

} // namespace conic
