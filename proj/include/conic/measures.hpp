#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "conic/borel.hpp"
#include "conic/cone.hpp"
#include "conic/rng.hpp"

namespace conic {

struct MCEstimate {
    double mean = 0.0;
    double stderr_ = 0.0;
    long n = 0;
    std::uint64_t seed = 0;
    long degenerate_drops = 0;
};

/// d+1 estimates sharing one sample stream; for v-type estimates the means
/// sum to one exactly (each sample lands in exactly one skeleton index) and
/// the joint law is multinomial.
struct ConeVectorEstimate {
    std::vector<MCEstimate> entries;
    long n = 0;
    std::uint64_t seed = 0;
    long degenerate_drops = 0;
    bool shared_stream = true; // multinomial covariance; false: independent entries

    std::vector<double> means() const;
    std::vector<double> stderrs() const;
};

/// v_k(C) = P{Pi_C(g) in S_k(C)}: one projection pass, shared stream.
ConeVectorEstimate estimate_v(const Cone& c, long n, Rng rng, int threads = 1);

/// u_k(C) = sum of gaussian face volumes; per-face sampling in the face span.
ConeVectorEstimate estimate_u(const Cone& c, long n_per_face, Rng rng);

/// Polyhedral measure Psi_k(C, M); Psi_k(C, Full) = u_k, Psi_0 = Lin_0.
ConeVectorEstimate psi_vector(const Cone& c, const ConicSet& m, long n_per_face, Rng rng);
MCEstimate psi_k(const Cone& c, int k, const ConicSet& m, long n_per_face, Rng rng);

/// Curvature measure Phi_k(C, M) = P{Pi_C(g) in S_k(C) cap M}.
ConeVectorEstimate phi_vector(const Cone& c, const ConicSet& m, long n, Rng rng, int threads = 1);
MCEstimate phi_k(const Cone& c, int k, const ConicSet& m, long n, Rng rng);

/// Support measure Theta_k(C, MM) over Moreau pairs.
ConeVectorEstimate theta_vector(const Cone& c, const BiconicSet& mm, long n, Rng rng,
                                int threads = 1);
MCEstimate theta_k(const Cone& c, int k, const BiconicSet& mm, long n, Rng rng);

/// Lineality measure: [lin(C) = k] [0 in M]; exact.
double lin_k(const Cone& c, int k, const ConicSet& m);

/// Closed-form intrinsic volumes for structurally recognized cones:
/// subspaces, single-ray cones (subspace + half-line, includes half-spaces),
/// and products of coordinate rays/lines. Nothing otherwise.
std::optional<std::vector<Rational>> exact_v(const Cone& c);

/// P{|Pi_C(g)|^2 >= r} estimated by projection.
MCEstimate steiner_lhs(const Cone& c, double r, long n, Rng rng);
/// sum_k P{chi2_k >= r} v_k.
double steiner_rhs(const std::vector<double>& v, double r);
/// Localized variants: indicator additionally requires Pi in M (resp. the
/// Moreau pair in MM).
MCEstimate steiner_phi_lhs(const Cone& c, const ConicSet& m, double r, long n, Rng rng);
MCEstimate steiner_theta_lhs(const Cone& c, const BiconicSet& mm, double r, long n, Rng rng);

std::vector<double> to_double_vector(const std::vector<Rational>& v);

/// Convolution of per-cone vectors: out[m] = sum over tuples with index sum
/// m of products.
std::vector<double> convolve(const std::vector<double>& a, const std::vector<double>& b);

} // namespace conic
