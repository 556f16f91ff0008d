#include "conic/measures.hpp"

#include <atomic>
#include <cmath>
#include <thread>

#include "conic/faces.hpp"
#include "conic/projection.hpp"
#include "conic/special.hpp"

namespace conic {

namespace {

double binom_stderr(double p, long n) { return n > 0 ? std::sqrt(p * (1.0 - p) / n) : 0.0; }

constexpr long kChunk = 1 << 14;

/// Runs n accepted projection samples; visit(k, face_id, y, yp). Ambiguous
/// projections are resampled and counted. The chunk decomposition is fixed,
/// so results are identical for any thread count.
template <class Visitor>
long run_projection_samples(const Cone& c, long n, const Rng& rng, Visitor&& visit) {
    const ProjectionKit& kit = c.kit();
    const int d = static_cast<int>(c.ambient_dim());
    Eigen::VectorXd g(d), y(d), yp(d);
    long drops = 0;
    for (long i = 0; i < n; ++i) {
        Rng s = rng.child(static_cast<std::uint64_t>(i / kChunk)).child(i % kChunk);
        for (;;) {
            for (int j = 0; j < d; ++j) g[j] = s.next_gaussian();
            try {
                auto [k, id] = kit.classify(g, y, yp);
                visit(k, id, y, yp);
                break;
            } catch (const AmbiguousProjection&) {
                ++drops;
                if (drops > 10 && drops * 1000000L > 10 * n)
                    throw AmbiguousProjection("degenerate-draw budget exceeded (tolerance bug?)");
            }
        }
    }
    return drops;
}

/// Parallel indicator-count version: counter(k, y, yp) -> cell index or -1.
/// Counts are accumulated exactly (integers) in chunk order.
template <class Cell>
std::pair<std::vector<long>, long> count_cells(const Cone& c, long n, const Rng& rng, int cells,
                                               int threads, Cell&& cell_of) {
    const ProjectionKit& kit = c.kit();
    const int d = static_cast<int>(c.ambient_dim());
    const long nchunks = (n + kChunk - 1) / kChunk;
    std::vector<std::vector<long>> counts(static_cast<std::size_t>(nchunks),
                                          std::vector<long>(cells, 0));
    std::vector<long> drops(static_cast<std::size_t>(nchunks), 0);

    auto work = [&](long chunk) {
        Eigen::VectorXd g(d), y(d), yp(d);
        Rng base = rng.child(static_cast<std::uint64_t>(chunk));
        const long lo = chunk * kChunk;
        const long hi = std::min(n, lo + kChunk);
        for (long i = lo; i < hi; ++i) {
            Rng s = base.child(static_cast<std::uint64_t>(i - lo));
            for (;;) {
                for (int j = 0; j < d; ++j) g[j] = s.next_gaussian();
                try {
                    auto [k, id] = kit.classify(g, y, yp);
                    (void)id;
                    int cell = cell_of(k, y, yp);
                    if (cell >= 0) ++counts[chunk][cell];
                    break;
                } catch (const AmbiguousProjection&) {
                    ++drops[chunk];
                }
            }
        }
    };

    if (threads <= 1) {
        for (long chunk = 0; chunk < nchunks; ++chunk) work(chunk);
    } else {
        std::vector<std::thread> pool;
        std::atomic<long> next{0};
        for (int t = 0; t < threads; ++t)
            pool.emplace_back([&] {
                for (;;) {
                    long chunk = next.fetch_add(1);
                    if (chunk >= nchunks) return;
                    work(chunk);
                }
            });
        for (auto& t : pool) t.join();
    }

    std::vector<long> total(cells, 0);
    long total_drops = 0;
    for (long chunk = 0; chunk < nchunks; ++chunk) {
        for (int k = 0; k < cells; ++k) total[k] += counts[chunk][k];
        total_drops += drops[chunk];
    }
    if (total_drops > 10 && total_drops * 1000000L > 10 * n)
        throw AmbiguousProjection("degenerate-draw budget exceeded (tolerance bug?)");
    return {std::move(total), total_drops};
}

ConeVectorEstimate from_counts(const std::vector<long>& counts, long n, std::uint64_t seed,
                               long drops) {
    ConeVectorEstimate out;
    out.n = n;
    out.seed = seed;
    out.degenerate_drops = drops;
    out.shared_stream = true;
    for (long c : counts) {
        MCEstimate e;
        e.n = n;
        e.seed = seed;
        e.mean = static_cast<double>(c) / static_cast<double>(n);
        e.stderr_ = binom_stderr(e.mean, n);
        e.degenerate_drops = drops;
        out.entries.push_back(e);
    }
    return out;
}

} // namespace

std::vector<double> ConeVectorEstimate::means() const {
    std::vector<double> v;
    for (const auto& e : entries) v.push_back(e.mean);
    return v;
}

std::vector<double> ConeVectorEstimate::stderrs() const {
    std::vector<double> v;
    for (const auto& e : entries) v.push_back(e.stderr_);
    return v;
}

ConeVectorEstimate estimate_v(const Cone& c, long n, Rng rng, int threads) {
    const int d = static_cast<int>(c.ambient_dim());
    auto [counts, drops] = count_cells(
        c, n, rng, d + 1, threads,
        [](int k, const Eigen::VectorXd&, const Eigen::VectorXd&) { return k; });
    return from_counts(counts, n, rng.seed(), drops);
}

ConeVectorEstimate phi_vector(const Cone& c, const ConicSet& m, long n, Rng rng, int threads) {
    const int d = static_cast<int>(c.ambient_dim());
    auto [counts, drops] =
        count_cells(c, n, rng, d + 1, threads,
                    [&m](int k, const Eigen::VectorXd& y, const Eigen::VectorXd&) {
                        return m.contains(y) ? k : -1;
                    });
    return from_counts(counts, n, rng.seed(), drops);
}

MCEstimate phi_k(const Cone& c, int k, const ConicSet& m, long n, Rng rng) {
    return phi_vector(c, m, n, rng).entries[k];
}

ConeVectorEstimate theta_vector(const Cone& c, const BiconicSet& mm, long n, Rng rng,
                                int threads) {
    const int d = static_cast<int>(c.ambient_dim());
    auto [counts, drops] =
        count_cells(c, n, rng, d + 1, threads,
                    [&mm](int k, const Eigen::VectorXd& y, const Eigen::VectorXd& yp) {
                        return mm.contains(y, yp) ? k : -1;
                    });
    return from_counts(counts, n, rng.seed(), drops);
}

MCEstimate theta_k(const Cone& c, int k, const BiconicSet& mm, long n, Rng rng) {
    return theta_vector(c, mm, n, rng).entries[k];
}

namespace {

/// gamma_L(C cap L cap M) by sampling a standard gaussian inside the face
/// span. The face is all of C cap L, so membership needs the H-rows plus M.
MCEstimate face_gamma(const Cone& c, const Face& f, const ConicSet* m, long n, Rng rng) {
    MCEstimate e;
    e.n = n;
    e.seed = rng.seed();
    const ProjectionKit& kit = c.kit();
    if (f.dim == 0) {
        // Dirac at the origin
        Eigen::VectorXd zero = Eigen::VectorXd::Zero(c.ambient_dim());
        e.mean = (m == nullptr || m->contains(zero)) ? 1.0 : 0.0;
        e.n = 0;
        return e;
    }
    const Eigen::MatrixXd& onb = kit.span_onb(f.id);
    Eigen::VectorXd z(f.dim), y(c.ambient_dim());
    long hits = 0;
    for (long i = 0; i < n; ++i) {
        for (int j = 0; j < f.dim; ++j) z[j] = rng.next_gaussian();
        y.noalias() = onb * z;
        if (!kit.member(y)) continue;
        if (m != nullptr && !m->contains(y)) continue;
        ++hits;
    }
    e.mean = static_cast<double>(hits) / static_cast<double>(n);
    e.stderr_ = binom_stderr(e.mean, n);
    return e;
}

ConeVectorEstimate per_face_vector(const Cone& c, const ConicSet* m, long n_per_face, Rng rng) {
    const FaceLattice& lat = c.lattice();
    const int d = static_cast<int>(c.ambient_dim());
    ConeVectorEstimate out;
    out.n = n_per_face;
    out.seed = rng.seed();
    out.shared_stream = false;
    out.entries.assign(d + 1, MCEstimate{});
    std::vector<double> var(d + 1, 0.0);
    for (const Face& f : lat.faces()) {
        MCEstimate e;
        if (f.dim > 0 && f.dim == lat.lineality() && m == nullptr) {
            e.mean = 1.0; // subspace face: gamma measure 1 in its own span
        } else {
            e = face_gamma(c, f, m, n_per_face, rng.child(f.id));
        }
        out.entries[f.dim].mean += e.mean;
        out.entries[f.dim].n = n_per_face;
        out.entries[f.dim].seed = out.seed;
        var[f.dim] += e.stderr_ * e.stderr_;
    }
    for (int k = 0; k <= d; ++k) out.entries[k].stderr_ = std::sqrt(var[k]);
    return out;
}

} // namespace

ConeVectorEstimate estimate_u(const Cone& c, long n_per_face, Rng rng) {
    return per_face_vector(c, nullptr, n_per_face, rng);
}

ConeVectorEstimate psi_vector(const Cone& c, const ConicSet& m, long n_per_face, Rng rng) {
    return per_face_vector(c, &m, n_per_face, rng);
}

MCEstimate psi_k(const Cone& c, int k, const ConicSet& m, long n_per_face, Rng rng) {
    return psi_vector(c, m, n_per_face, rng).entries[k];
}

double lin_k(const Cone& c, int k, const ConicSet& m) {
    if (c.lineality() != k) return 0.0;
    return m.contains(Eigen::VectorXd::Zero(c.ambient_dim())) ? 1.0 : 0.0;
}

std::optional<std::vector<Rational>> exact_v(const Cone& c) {
    const std::size_t d = c.ambient_dim();
    std::vector<Rational> v(d + 1, Rational(0));
    if (c.is_subspace()) {
        v[c.span_dim()] = 1;
        return v;
    }
    if (c.extreme_ray_count() == 1) {
        // subspace plus a half-line (rays, half-spaces, wedges)
        v[c.span_dim()] = Rational(1, 2);
        v[c.span_dim() - 1] = Rational(1, 2);
        return v;
    }
    // product of coordinate rays and lines: every generator singly supported
    const RatMat& gens = c.generators();
    std::vector<int> pos(d, 0), neg(d, 0);
    for (std::size_t j = 0; j < gens.cols(); ++j) {
        int support = -1;
        for (std::size_t i = 0; i < d; ++i) {
            if (gens(i, j) != 0) {
                if (support >= 0) return std::nullopt;
                support = static_cast<int>(i);
            }
        }
        if (support < 0) return std::nullopt;
        (gens(support, j) > 0 ? pos : neg)[support] = 1;
    }
    std::vector<Rational> acc{Rational(1)};
    auto conv = [](const std::vector<Rational>& a, const std::vector<Rational>& b) {
        std::vector<Rational> out(a.size() + b.size() - 1, Rational(0));
        for (std::size_t i = 0; i < a.size(); ++i)
            for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
        return out;
    };
    for (std::size_t i = 0; i < d; ++i) {
        if (pos[i] && neg[i])
            acc = conv(acc, {Rational(0), Rational(1)}); // line factor
        else if (pos[i] || neg[i])
            acc = conv(acc, {Rational(1, 2), Rational(1, 2)}); // ray factor
        // absent coordinate: {0} factor, neutral
    }
    acc.resize(d + 1, Rational(0));
    return acc;
}

MCEstimate steiner_lhs(const Cone& c, double r, long n, Rng rng) {
    MCEstimate e;
    e.n = n;
    e.seed = rng.seed();
    long hits = 0;
    e.degenerate_drops = run_projection_samples(
        c, n, rng, [&](int, int, const Eigen::VectorXd& y, const Eigen::VectorXd&) {
            if (y.squaredNorm() >= r) ++hits;
        });
    e.mean = static_cast<double>(hits) / static_cast<double>(n);
    e.stderr_ = binom_stderr(e.mean, n);
    return e;
}

double steiner_rhs(const std::vector<double>& v, double r) {
    double s = 0;
    for (std::size_t k = 0; k < v.size(); ++k) s += chi2_survival(static_cast<int>(k), r) * v[k];
    return s;
}

MCEstimate steiner_phi_lhs(const Cone& c, const ConicSet& m, double r, long n, Rng rng) {
    MCEstimate e;
    e.n = n;
    e.seed = rng.seed();
    long hits = 0;
    e.degenerate_drops = run_projection_samples(
        c, n, rng, [&](int, int, const Eigen::VectorXd& y, const Eigen::VectorXd&) {
            if (y.squaredNorm() >= r && m.contains(y)) ++hits;
        });
    e.mean = static_cast<double>(hits) / static_cast<double>(n);
    e.stderr_ = binom_stderr(e.mean, n);
    return e;
}

MCEstimate steiner_theta_lhs(const Cone& c, const BiconicSet& mm, double r, long n, Rng rng) {
    MCEstimate e;
    e.n = n;
    e.seed = rng.seed();
    long hits = 0;
    e.degenerate_drops = run_projection_samples(
        c, n, rng, [&](int, int, const Eigen::VectorXd& y, const Eigen::VectorXd& yp) {
            if (y.squaredNorm() >= r && mm.contains(y, yp)) ++hits;
        });
    e.mean = static_cast<double>(hits) / static_cast<double>(n);
    e.stderr_ = binom_stderr(e.mean, n);
    return e;
}

std::vector<double> to_double_vector(const std::vector<Rational>& v) {
    std::vector<double> out;
    for (const auto& q : v) out.push_back(to_double(q));
    return out;
}

std::vector<double> convolve(const std::vector<double>& a, const std::vector<double>& b) {
    std::vector<double> out(a.size() + b.size() - 1, 0.0);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
    return out;
}

} // namespace conic
