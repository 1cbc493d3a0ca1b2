#pragma once

#include <Eigen/Dense>
#include <cstdint>
#include <functional>
#include <map>
#include <string>
#include <vector>

#include "freecalc/errors.hpp"
#include "freecalc/rng.hpp"

namespace freecalc {

using RealMatrix = Eigen::MatrixXd;
using ComplexMatrix = Eigen::MatrixXcd;

struct EnsembleConfig {
    int n = 2;              // matrix size
    int samples = 1;        // sample count
    std::uint64_t seed = 0;

    void validate() const {
        if (n < 2) throw ArgumentError("ensemble matrix size must be >= 2");
        if (samples < 1) throw ArgumentError("sample count must be >= 1");
    }
};

/// Monte Carlo estimate with its standard error (sample stdev / sqrt(samples)).
struct MomentEstimate {
    double value = 0.0;
    double stderr_ = 0.0;
    int samples = 0;

    bool within(double target, double band_multiplier) const {
        return std::abs(value - target) <= band_multiplier * stderr_;
    }
};

/// Pairwise (fixed-tree) reduction; the result depends only on the slot values,
/// never on how they were produced or scheduled.
double deterministic_mean(const std::vector<double>& values);
MomentEstimate estimate_from_samples(const std::vector<double>& values);

/// Fills per-sample slots, optionally on a worker pool. Slot i is a pure
/// function of i, so any worker count yields the same vector.
void fill_parallel(int samples, int workers, const std::function<double(int)>& slot_value,
                   std::vector<double>& out);

/// Symmetric matrix with independent N(0, 1/n) entries for i <= j (the
/// diagonal included at the same variance), mirrored below.
RealMatrix sample_gaussian_symmetric(int n, const CounterRng& rng, std::uint64_t sample_index);

/// Stream view of the ensemble: sample(i) is independent of call order.
class GaussianSymmetricEnsemble {
public:
    GaussianSymmetricEnsemble(EnsembleConfig cfg, std::uint64_t stream_tag = 0x474f45ull);
    RealMatrix sample(int index) const;
    const EnsembleConfig& config() const { return cfg_; }

private:
    EnsembleConfig cfg_;
    CounterRng rng_;
};

/// Haar-distributed unitary: QR of a complex Ginibre matrix with the R-diagonal
/// phase correction.
ComplexMatrix sample_haar_unitary(int n, const CounterRng& rng, std::uint64_t sample_index);

/// Symmetric matrix Brownian motion sampled on a time grid: B_0 = 0 and
/// independent symmetric Gaussian increments with entry variance dt/n.
struct MatrixPath {
    std::vector<double> times;
    std::vector<RealMatrix> values;

    int steps() const { return static_cast<int>(times.size()) - 1; }
    RealMatrix increment(int j) const { return values[static_cast<size_t>(j) + 1] - values[static_cast<size_t>(j)]; }
    /// Index of time t in the grid; t must be a grid point.
    int index_of(double t) const;
    /// Path restricted to times <= t (adaptedness boundary).
    MatrixPath prefix(double t) const;
};

MatrixPath sample_matrix_brownian(int n, const std::vector<double>& grid, const CounterRng& rng,
                                  std::uint64_t sample_index);

/// Normalized trace tr(m)/n.
double normalized_trace(const RealMatrix& m);

/// Mean and standard error of the normalized trace of the matrix word over the
/// sample set. Letters are bound to independent ensemble streams.
MomentEstimate estimate_word_moment(const std::map<char, GaussianSymmetricEnsemble>& samplers,
                                    const std::string& word, int samples, int workers = 1);

/// Centered alternating moment of X = A and Y = U B U* estimated over Haar
/// samples: phi((X - phi X)(Y - phi Y)...) with `order` alternating factors.
MomentEstimate rotated_alternating_moment(const RealMatrix& a, const RealMatrix& b, int order,
                                          const EnsembleConfig& cfg, int workers = 1);

/// Histogram of the eigenvalues of one sample, with semicircle reference
/// density on [-2, 2].
struct EigenvalueHistogram {
    std::vector<double> bin_left;
    std::vector<double> bin_right;
    std::vector<int> count;
    std::vector<double> density;

    /// Bin-averaged L1 distance from the semicircle density.
    double l1_distance_from_semicircle() const;
};

EigenvalueHistogram goe_eigenvalue_histogram(int n, std::uint64_t seed, int bins);

}  // namespace freecalc
