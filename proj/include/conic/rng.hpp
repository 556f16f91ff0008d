#pragma once

#include <Eigen/Dense>

#include <cstdint>

namespace conic {

/// Counter-based random generator: the i-th output word is a mix of
/// (key, i), so streams are pure functions of (seed, stream id) and child
/// streams for parallel chunks are derived without any shared state.
class Rng {
public:
    explicit Rng(std::uint64_t seed, std::uint64_t stream = 0);

    /// Independent stream for a worker chunk; deterministic in (seed, id).
    Rng child(std::uint64_t stream_id) const;

    std::uint64_t seed() const { return seed_; }
    std::uint64_t stream() const { return stream_; }

    std::uint64_t next_u64();
    /// Uniform on [0, 1).
    double next_uniform();
    /// Standard normal (Box-Muller; pairs cached).
    double next_gaussian();

    Eigen::VectorXd gaussian_vector(int d);
    /// Haar-distributed orthogonal matrix: QR of a Gaussian matrix with the
    /// diagonal-sign correction (plain QR is not Haar).
    Eigen::MatrixXd haar_orthogonal(int d);

    // UniformRandomBitGenerator interface
    using result_type = std::uint64_t;
    static constexpr result_type min() { return 0; }
    static constexpr result_type max() { return ~result_type{0}; }
    result_type operator()() { return next_u64(); }

private:
    std::uint64_t seed_;
    std::uint64_t stream_;
    std::uint64_t key_;
    std::uint64_t ctr_ = 0;
    double spare_ = 0.0;
    bool has_spare_ = false;
};

} // namespace conic
