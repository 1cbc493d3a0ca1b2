#include "freecalc/stochastic.hpp"

#include <algorithm>
#include <cmath>
#include <set>

namespace freecalc {

std::vector<TensorTerm> noncomm_derivative(const PolynomialFn& f) {
    std::vector<TensorTerm> terms;
    for (int n = 1; n <= f.degree(); ++n) {
        const Rational a = f.coeff(n);
        if (a == Rational(0)) continue;
        for (int k = 0; k <= n - 1; ++k) {
            const int left = k;
            const int right = n - k - 1;
            auto it = std::find_if(terms.begin(), terms.end(), [&](const TensorTerm& t) {
                return t.left == left && t.right == right;
            });
            if (it == terms.end()) {
                terms.push_back({left, right, a});
            } else {
                it->coeff = it->coeff + a;
            }
        }
    }
    std::sort(terms.begin(), terms.end(), [](const TensorTerm& x, const TensorTerm& y) {
        return std::pair(x.left, x.right) < std::pair(y.left, y.right);
    });
    return terms;
}

std::vector<Polynomial<Rational>> moment_polynomials(int n_max, ItoMode mode) {
    if (n_max < 0) throw ArgumentError("moment order must be >= 0");
    std::vector<Polynomial<Rational>> p;
    p.reserve(static_cast<size_t>(n_max) + 1);
    p.push_back(Polynomial<Rational>::constant(Rational(1)));  // tau[S_t^0] = 1
    if (n_max >= 1) p.push_back(Polynomial<Rational>());       // tau[S_t] = 0
    for (int n = 2; n <= n_max; ++n) {
        Polynomial<Rational> drift;
        if (mode == ItoMode::kFree) {
            // d tau[S^n]/dt = sum_{m=1}^{n-1} m tau[S^{m-1}] tau[S^{n-m-1}]
            for (int m = 1; m <= n - 1; ++m)
                drift = drift + Rational(m) * (p[static_cast<size_t>(m) - 1] * p[static_cast<size_t>(n - m) - 1]);
        } else {
            // d tau[B^n]/dt = (n(n-1)/2) tau[B^{n-2}]
            drift = Rational(n * (n - 1), 2) * p[static_cast<size_t>(n) - 2];
        }
        p.push_back(drift.antiderivative());  // tau[S_0^n] = 0 for n >= 1
    }
    return p;
}

std::vector<Rational> moment_evolution(int n_max, const Rational& t, ItoMode mode) {
    std::vector<Rational> out;
    for (const auto& poly : moment_polynomials(n_max, mode)) out.push_back(poly.evaluate(t));
    return out;
}

void SimpleBiprocess::validate() const {
    if (breakpoints.size() < 2 || breakpoints.front() != 0.0)
        throw ArgumentError("biprocess breakpoints must start at 0");
    for (size_t i = 0; i + 1 < breakpoints.size(); ++i)
        if (!(breakpoints[i] < breakpoints[i + 1])) throw ArgumentError("biprocess breakpoints must increase");
    if (terms.size() + 1 != breakpoints.size())
        throw ArgumentError("biprocess needs one term list per interval");
}

SimpleBiprocess SimpleBiprocess::single(double from, double to, RealMatrix a, RealMatrix b) {
    SimpleBiprocess u;
    if (from == 0.0) {
        u.breakpoints = {0.0, to};
        u.terms.push_back({{std::move(a), std::move(b)}});
    } else {
        u.breakpoints = {0.0, from, to};
        u.terms.push_back({});
        u.terms.push_back({{std::move(a), std::move(b)}});
    }
    u.validate();
    return u;
}

RealMatrix integrate_simple(const SimpleBiprocess& u, const MatrixPath& path) {
    u.validate();
    const int n = static_cast<int>(path.values.front().rows());
    RealMatrix total = RealMatrix::Zero(n, n);
    for (int i = 0; i < u.intervals(); ++i) {
        if (u.terms[static_cast<size_t>(i)].empty()) continue;
        const int from = path.index_of(u.breakpoints[static_cast<size_t>(i)]);
        const int to = path.index_of(u.breakpoints[static_cast<size_t>(i) + 1]);
        const RealMatrix inc = path.values[static_cast<size_t>(to)] - path.values[static_cast<size_t>(from)];
        for (const auto& [a, b] : u.terms[static_cast<size_t>(i)]) total += a * inc * b;
    }
    return total;
}

namespace {

struct IntervalTerms {
    double from;
    double to;
    const std::vector<std::pair<RealMatrix, RealMatrix>>* u_terms;
    const std::vector<std::pair<RealMatrix, RealMatrix>>* v_terms;
};

// Overlays the two breakpoint sets; each refined interval carries the active
// term lists of u and v (null when the process is zero there).
std::vector<IntervalTerms> overlay(const SimpleBiprocess& u, const SimpleBiprocess& v) {
    std::set<double> cuts(u.breakpoints.begin(), u.breakpoints.end());
    cuts.insert(v.breakpoints.begin(), v.breakpoints.end());
    std::vector<double> grid(cuts.begin(), cuts.end());
    auto active = [](const SimpleBiprocess& p, double t)
        -> const std::vector<std::pair<RealMatrix, RealMatrix>>* {
        for (int i = 0; i < p.intervals(); ++i)
            if (p.breakpoints[static_cast<size_t>(i)] <= t && t < p.breakpoints[static_cast<size_t>(i) + 1])
                return &p.terms[static_cast<size_t>(i)];
        return nullptr;
    };
    std::vector<IntervalTerms> out;
    for (size_t i = 0; i + 1 < grid.size(); ++i)
        out.push_back({grid[i], grid[i + 1], active(u, grid[i]), active(v, grid[i])});
    return out;
}

double pair_inner(const std::vector<std::pair<RealMatrix, RealMatrix>>& us,
                  const std::vector<std::pair<RealMatrix, RealMatrix>>& vs) {
    double total = 0.0;
    for (const auto& [a, b] : us)
        for (const auto& [c, d] : vs)
            total += normalized_trace(a * c.transpose()) * normalized_trace(b * d.transpose());
    return total;
}

}  // namespace

double biprocess_inner_product(const SimpleBiprocess& u, const SimpleBiprocess& v) {
    u.validate();
    v.validate();
    double total = 0.0;
    for (const auto& seg : overlay(u, v)) {
        if (!seg.u_terms || !seg.v_terms) continue;
        total += pair_inner(*seg.u_terms, *seg.v_terms) * (seg.to - seg.from);
    }
    return total;
}

double spectral_norm(const RealMatrix& m) {
    Eigen::SelfAdjointEigenSolver<RealMatrix> solver(m.transpose() * m, Eigen::EigenvaluesOnly);
    return std::sqrt(std::max(0.0, solver.eigenvalues().maxCoeff()));
}

namespace {

// Operator norm of X -> sum_j A_j X B_j on Hilbert-Schmidt space, which equals
// the norm of sum_j A_j (x) B_j in the matrix tensor product. Power iteration
// on T* T with a fixed deterministic start.
double interval_operator_norm(const std::vector<std::pair<RealMatrix, RealMatrix>>& terms) {
    if (terms.empty()) return 0.0;
    if (terms.size() == 1) return spectral_norm(terms[0].first) * spectral_norm(terms[0].second);
    const int n = static_cast<int>(terms[0].first.rows());
    RealMatrix x = RealMatrix::Identity(n, n) + 0.1 * RealMatrix::Ones(n, n);
    x /= x.norm();
    double lambda = 0.0;
    for (int iter = 0; iter < 500; ++iter) {
        RealMatrix tx = RealMatrix::Zero(n, n);
        for (const auto& [a, b] : terms) tx += a * x * b;
        RealMatrix ttx = RealMatrix::Zero(n, n);
        for (const auto& [a, b] : terms) ttx += a.transpose() * tx * b.transpose();
        const double next = ttx.norm();
        if (next == 0.0) return 0.0;
        ttx /= next;
        if (iter > 10 && std::abs(next - lambda) <= 1e-13 * std::max(1.0, lambda)) {
            lambda = next;
            break;
        }
        lambda = next;
        x = ttx;
    }
    return std::sqrt(lambda);
}

}  // namespace

double biprocess_b_infinity_norm(const SimpleBiprocess& u) {
    u.validate();
    double total = 0.0;
    for (int i = 0; i < u.intervals(); ++i) {
        const double norm = interval_operator_norm(u.terms[static_cast<size_t>(i)]);
        const double dt = u.breakpoints[static_cast<size_t>(i) + 1] - u.breakpoints[static_cast<size_t>(i)];
        total += norm * norm * dt;
    }
    return std::sqrt(total);
}

namespace {

std::vector<double> merged_grid(const SimpleBiprocess& u, const SimpleBiprocess& v) {
    std::set<double> cuts(u.breakpoints.begin(), u.breakpoints.end());
    cuts.insert(v.breakpoints.begin(), v.breakpoints.end());
    cuts.insert(0.0);
    return {cuts.begin(), cuts.end()};
}

}  // namespace

IsometryCheck ito_isometry_check(const SimpleBiprocess& u, const SimpleBiprocess& v,
                                 const EnsembleConfig& cfg, int workers) {
    cfg.validate();
    const std::vector<double> grid = merged_grid(u, v);
    const CounterRng rng = CounterRng(cfg.seed, 0).substream(0x49544full);
    std::vector<double> slots;
    fill_parallel(cfg.samples, workers, [&](int s) {
        const MatrixPath path = sample_matrix_brownian(cfg.n, grid, rng, static_cast<std::uint64_t>(s));
        const RealMatrix iu = integrate_simple(u, path);
        const RealMatrix iv = integrate_simple(v, path);
        return normalized_trace(iu * iv.transpose());
    }, slots);
    IsometryCheck check;
    check.exact = biprocess_inner_product(u, v);
    check.estimate = estimate_from_samples(slots);
    check.deviation = std::abs(check.estimate.value - check.exact);
    return check;
}

std::vector<QuadraticVariationLevel> quadratic_variation_check(
    const AdaptedMatrixFn& a_fn, double t_start, double t_end, const std::vector<int>& mesh_steps,
    const EnsembleConfig& cfg, int workers) {
    cfg.validate();
    if (!(0.0 <= t_start && t_start < t_end)) throw ArgumentError("need 0 <= t_start < t_end");
    const CounterRng rng = CounterRng(cfg.seed, 0).substream(0x5156ull);
    std::vector<QuadraticVariationLevel> levels;
    for (size_t level = 0; level < mesh_steps.size(); ++level) {
        const int steps = mesh_steps[level];
        if (steps < 1) throw ArgumentError("mesh must have at least one step");
        std::vector<double> grid;
        if (t_start > 0.0) grid.push_back(0.0);
        for (int i = 0; i <= steps; ++i)
            grid.push_back(t_start + (t_end - t_start) * static_cast<double>(i) / steps);
        const CounterRng level_rng = rng.substream(static_cast<std::uint64_t>(level));
        std::vector<double> slots;
        fill_parallel(cfg.samples, workers, [&](int s) {
            const MatrixPath path =
                sample_matrix_brownian(cfg.n, grid, level_rng, static_cast<std::uint64_t>(s));
            const RealMatrix a = a_fn(path.prefix(t_start));
            const int base = path.index_of(t_start);
            RealMatrix sum = RealMatrix::Zero(cfg.n, cfg.n);
            for (int i = base; i < static_cast<int>(path.times.size()) - 1; ++i) {
                const RealMatrix inc = path.increment(i);
                sum += inc * a * inc;
            }
            const double tau_a = normalized_trace(a);
            const RealMatrix target = tau_a * (t_end - t_start) * RealMatrix::Identity(cfg.n, cfg.n);
            return (sum - target).norm() / std::sqrt(static_cast<double>(cfg.n));
        }, slots);
        levels.push_back({(t_end - t_start) / steps, deterministic_mean(slots)});
    }
    return levels;
}

BurkholderGundyCheck bg_bound_check(const SimpleBiprocess& u, const EnsembleConfig& cfg, int workers) {
    cfg.validate();
    u.validate();
    BurkholderGundyCheck check;
    check.b_infinity_norm = biprocess_b_infinity_norm(u);
    const CounterRng rng = CounterRng(cfg.seed, 0).substream(0x4247ull);
    std::vector<double> grid(u.breakpoints);
    std::vector<double> slots;
    fill_parallel(cfg.samples, workers, [&](int s) {
        const MatrixPath path = sample_matrix_brownian(cfg.n, grid, rng, static_cast<std::uint64_t>(s));
        return spectral_norm(integrate_simple(u, path));
    }, slots);
    check.max_integral_norm = *std::max_element(slots.begin(), slots.end());
    check.max_ratio =
        (check.b_infinity_norm > 0.0) ? check.max_integral_norm / check.b_infinity_norm : 0.0;
    return check;
}

}  // namespace freecalc
