#include "freecalc/random_matrix.hpp"

#include <algorithm>
#include <cmath>
#include <thread>

namespace freecalc {

double deterministic_mean(const std::vector<double>& values) {
    if (values.empty()) throw ArgumentError("mean of empty sample set");
    std::vector<double> acc = values;
    while (acc.size() > 1) {
        std::vector<double> next((acc.size() + 1) / 2);
        for (size_t i = 0; i + 1 < acc.size(); i += 2) next[i / 2] = acc[i] + acc[i + 1];
        if (acc.size() % 2) next.back() = acc.back();
        acc = std::move(next);
    }
    return acc[0] / static_cast<double>(values.size());
}

MomentEstimate estimate_from_samples(const std::vector<double>& values) {
    MomentEstimate est;
    est.samples = static_cast<int>(values.size());
    est.value = deterministic_mean(values);
    if (values.size() >= 2) {
        std::vector<double> sq(values.size());
        for (size_t i = 0; i < values.size(); ++i) {
            const double d = values[i] - est.value;
            sq[i] = d * d;
        }
        const double var = deterministic_mean(sq) * static_cast<double>(values.size()) /
                           static_cast<double>(values.size() - 1);
        est.stderr_ = std::sqrt(var / static_cast<double>(values.size()));
    }
    return est;
}

void fill_parallel(int samples, int workers, const std::function<double(int)>& slot_value,
                   std::vector<double>& out) {
    out.assign(static_cast<size_t>(samples), 0.0);
    workers = std::max(1, std::min(workers, samples));
    if (workers == 1) {
        for (int i = 0; i < samples; ++i) out[static_cast<size_t>(i)] = slot_value(i);
        return;
    }
    std::vector<std::thread> pool;
    pool.reserve(static_cast<size_t>(workers));
    for (int w = 0; w < workers; ++w) {
        pool.emplace_back([&, w]() {
            for (int i = w; i < samples; i += workers) out[static_cast<size_t>(i)] = slot_value(i);
        });
    }
    for (auto& t : pool) t.join();
}

RealMatrix sample_gaussian_symmetric(int n, const CounterRng& rng, std::uint64_t sample_index) {
    RealMatrix m(n, n);
    const double sigma = 1.0 / std::sqrt(static_cast<double>(n));
    for (int i = 0; i < n; ++i) {
        for (int j = i; j < n; ++j) {
            const double g = sigma * rng.gaussian(sample_index, static_cast<std::uint64_t>(i) * n + j);
            m(i, j) = g;
            m(j, i) = g;
        }
    }
    return m;
}

GaussianSymmetricEnsemble::GaussianSymmetricEnsemble(EnsembleConfig cfg, std::uint64_t stream_tag)
    : cfg_(cfg), rng_(CounterRng(cfg.seed, 0).substream(stream_tag)) {
    cfg_.validate();
}

RealMatrix GaussianSymmetricEnsemble::sample(int index) const {
    return sample_gaussian_symmetric(cfg_.n, rng_, static_cast<std::uint64_t>(index));
}

ComplexMatrix sample_haar_unitary(int n, const CounterRng& rng, std::uint64_t sample_index) {
    if (n < 1) throw ArgumentError("unitary size must be >= 1");
    ComplexMatrix g(n, n);
    const double scale = 1.0 / std::sqrt(2.0);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            const std::uint64_t slot = 2ull * (static_cast<std::uint64_t>(i) * n + j);
            g(i, j) = std::complex<double>(scale * rng.gaussian(sample_index, slot),
                                           scale * rng.gaussian(sample_index, slot + 1));
        }
    Eigen::HouseholderQR<ComplexMatrix> qr(g);
    ComplexMatrix q = qr.householderQ();
    ComplexMatrix r = qr.matrixQR().triangularView<Eigen::Upper>();
    // Phase correction makes the distribution exactly Haar rather than
    // QR-convention dependent.
    for (int j = 0; j < n; ++j) {
        const std::complex<double> rjj = r(j, j);
        const double len = std::abs(rjj);
        const std::complex<double> phase = (len > 0.0) ? rjj / len : std::complex<double>(1.0, 0.0);
        q.col(j) *= phase;
    }
    return q;
}

int MatrixPath::index_of(double t) const {
    for (size_t i = 0; i < times.size(); ++i)
        if (times[i] == t) return static_cast<int>(i);
    throw ArgumentError("time " + std::to_string(t) + " is not a grid point of the path");
}

MatrixPath MatrixPath::prefix(double t) const {
    const int idx = index_of(t);
    MatrixPath out;
    out.times.assign(times.begin(), times.begin() + idx + 1);
    out.values.assign(values.begin(), values.begin() + idx + 1);
    return out;
}

MatrixPath sample_matrix_brownian(int n, const std::vector<double>& grid, const CounterRng& rng,
                                  std::uint64_t sample_index) {
    if (grid.size() < 2 || grid.front() != 0.0) throw ArgumentError("grid must start at 0");
    for (size_t j = 0; j + 1 < grid.size(); ++j)
        if (!(grid[j] < grid[j + 1])) throw ArgumentError("grid times must increase");
    MatrixPath path;
    path.times = grid;
    path.values.reserve(grid.size());
    path.values.push_back(RealMatrix::Zero(n, n));
    const std::uint64_t entries = static_cast<std::uint64_t>(n) * static_cast<std::uint64_t>(n);
    for (size_t j = 0; j + 1 < grid.size(); ++j) {
        const double dt = grid[j + 1] - grid[j];
        const double sigma = std::sqrt(dt / static_cast<double>(n));
        RealMatrix inc(n, n);
        for (int a = 0; a < n; ++a)
            for (int b = a; b < n; ++b) {
                const std::uint64_t slot =
                    static_cast<std::uint64_t>(j) * entries + static_cast<std::uint64_t>(a) * n + b;
                const double g = sigma * rng.gaussian(sample_index, slot);
                inc(a, b) = g;
                inc(b, a) = g;
            }
        path.values.push_back(path.values.back() + inc);
    }
    return path;
}

double normalized_trace(const RealMatrix& m) { return m.trace() / static_cast<double>(m.rows()); }

MomentEstimate estimate_word_moment(const std::map<char, GaussianSymmetricEnsemble>& samplers,
                                    const std::string& word, int samples, int workers) {
    if (word.empty()) throw ArgumentError("word must be nonempty");
    int n = -1;
    for (char c : word) {
        auto it = samplers.find(c);
        if (it == samplers.end()) throw ArgumentError(std::string("letter '") + c + "' is not bound to a sampler");
        if (n < 0) n = it->second.config().n;
        if (it->second.config().n != n) throw ArgumentError("samplers disagree on matrix size");
    }
    std::vector<double> slots;
    fill_parallel(samples, workers, [&](int s) {
        std::map<char, RealMatrix> drawn;
        for (const auto& [c, ensemble] : samplers) drawn[c] = ensemble.sample(s);
        RealMatrix prod = drawn[word[0]];
        for (size_t i = 1; i < word.size(); ++i) prod = prod * drawn[word[i]];
        return normalized_trace(prod);
    }, slots);
    return estimate_from_samples(slots);
}

MomentEstimate rotated_alternating_moment(const RealMatrix& a, const RealMatrix& b, int order,
                                          const EnsembleConfig& cfg, int workers) {
    cfg.validate();
    if (a.rows() != cfg.n || b.rows() != cfg.n) throw ArgumentError("matrix size disagrees with config");
    if (order < 1) throw ArgumentError("order must be >= 1");
    const CounterRng rng = CounterRng(cfg.seed, 0).substream(0x524f54ull);
    const double mean_a = normalized_trace(a);
    const double mean_b = normalized_trace(b);
    const ComplexMatrix ac =
        (a - mean_a * RealMatrix::Identity(cfg.n, cfg.n)).cast<std::complex<double>>();
    std::vector<double> slots;
    fill_parallel(cfg.samples, workers, [&](int s) {
        const ComplexMatrix u = sample_haar_unitary(cfg.n, rng, static_cast<std::uint64_t>(s));
        const ComplexMatrix y = u * b.cast<std::complex<double>>() * u.adjoint() -
                                mean_b * ComplexMatrix::Identity(cfg.n, cfg.n);
        ComplexMatrix prod = ComplexMatrix::Identity(cfg.n, cfg.n);
        for (int f = 0; f < order; ++f) prod = prod * (f % 2 == 0 ? ac : y);
        return prod.trace().real() / static_cast<double>(cfg.n);
    }, slots);
    return estimate_from_samples(slots);
}

double EigenvalueHistogram::l1_distance_from_semicircle() const {
    double total = 0.0;
    for (size_t i = 0; i < bin_left.size(); ++i) {
        const double mid = 0.5 * (bin_left[i] + bin_right[i]);
        const double width = bin_right[i] - bin_left[i];
        const double ref = (std::abs(mid) < 2.0)
                               ? std::sqrt(4.0 - mid * mid) / (2.0 * 3.14159265358979323846)
                               : 0.0;
        total += std::abs(density[i] - ref) * width;
    }
    return total;
}

EigenvalueHistogram goe_eigenvalue_histogram(int n, std::uint64_t seed, int bins) {
    if (bins < 1) throw ArgumentError("histogram needs at least one bin");
    const CounterRng rng = CounterRng(seed, 0).substream(0x484953ull);
    const RealMatrix x = sample_gaussian_symmetric(n, rng, 0);
    Eigen::SelfAdjointEigenSolver<RealMatrix> solver(x, Eigen::EigenvaluesOnly);
    const auto& eigenvalues = solver.eigenvalues();
    const double lo = -2.0, hi = 2.0;
    const double width = (hi - lo) / bins;
    EigenvalueHistogram h;
    h.bin_left.resize(static_cast<size_t>(bins));
    h.bin_right.resize(static_cast<size_t>(bins));
    h.count.assign(static_cast<size_t>(bins), 0);
    h.density.assign(static_cast<size_t>(bins), 0.0);
    for (int i = 0; i < bins; ++i) {
        h.bin_left[static_cast<size_t>(i)] = lo + i * width;
        h.bin_right[static_cast<size_t>(i)] = lo + (i + 1) * width;
    }
    for (int i = 0; i < eigenvalues.size(); ++i) {
        const double v = eigenvalues(i);
        if (v < lo || v >= hi) continue;
        const int bin = std::min(bins - 1, static_cast<int>((v - lo) / width));
        ++h.count[static_cast<size_t>(bin)];
    }
    for (int i = 0; i < bins; ++i)
        h.density[static_cast<size_t>(i)] =
            h.count[static_cast<size_t>(i)] / (static_cast<double>(n) * width);
    return h;
}

}  // namespace freecalc
