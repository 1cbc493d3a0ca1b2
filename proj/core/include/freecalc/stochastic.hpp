#pragma once

#include <functional>
#include <utility>
#include <vector>

#include "freecalc/partition.hpp"
#include "freecalc/polynomial.hpp"
#include "freecalc/random_matrix.hpp"
#include "freecalc/scalar.hpp"

namespace freecalc {

/// Coefficient list of f(x) = sum a_n x^n with exact coefficients.
using PolynomialFn = Polynomial<Rational>;

/// Conversions the semicircle law needs from its time scalar: S can be an
/// exact rational, a double, or a polynomial in a formal time variable.
template <class S>
struct TimeScalar {
    static S from_rational(const Rational& r);
};

template <>
struct TimeScalar<Rational> {
    static Rational from_rational(const Rational& r) { return r; }
};

template <>
struct TimeScalar<double> {
    static double from_rational(const Rational& r) { return to_double(r); }
};

template <>
struct TimeScalar<Polynomial<Rational>> {
    static Polynomial<Rational> from_rational(const Rational& r) {
        return Polynomial<Rational>::constant(r);
    }
};

/// Semicircle distribution with mean 0 and variance t: the marginal law of
/// free Brownian motion. Moments are m_{2k} = c_k t^k, odd moments vanish.
template <class S>
struct SemicircleLaw {
    S t;

    S moment(int n) const {
        if (n < 0) throw ArgumentError("moment order must be >= 0");
        if (n % 2 == 1) return S{};
        S acc = TimeScalar<S>::from_rational(Rational(catalan(n / 2)));
        for (int i = 0; i < n / 2; ++i) acc = acc * t;
        return acc;
    }
};

/// Symbolic time variable for exact polynomial computations.
inline SemicircleLaw<Polynomial<Rational>> semicircle_law_symbolic() {
    return {Polynomial<Rational>::monomial(1, Rational(1))};
}

/// Term of the non-commutative derivative: coeff * x^left (x) x^right.
struct TensorTerm {
    int left = 0;
    int right = 0;
    Rational coeff;

    bool operator==(const TensorTerm&) const = default;
};

/// Extension of the derivation d x^n = sum_{k=0}^{n-1} x^k (x) x^{n-k-1}.
std::vector<TensorTerm> noncomm_derivative(const PolynomialFn& f);

/// The polynomial multiplying dt in df(S_t): for x^n it is
/// sum_{m=1}^{n-1} m x^{m-1} m_{n-m-1}(t). This equals one half of Delta_t f;
/// free_laplacian_full returns Delta_t f itself.
template <class S>
Polynomial<S> free_laplacian(const PolynomialFn& f, const SemicircleLaw<S>& law) {
    Polynomial<S> out;
    for (int n = 0; n <= f.degree(); ++n) {
        const Rational a = f.coeff(n);
        if (a == Rational(0)) continue;
        for (int m = 1; m <= n - 1; ++m) {
            const S weight = TimeScalar<S>::from_rational(a * Rational(m)) * law.moment(n - m - 1);
            out = out + Polynomial<S>::monomial(m - 1, weight);
        }
    }
    return out;
}

template <class S>
Polynomial<S> free_laplacian_full(const PolynomialFn& f, const SemicircleLaw<S>& law) {
    return TimeScalar<S>::from_rational(Rational(2)) * free_laplacian(f, law);
}

/// tau[p(S_t)] = sum_j coeff_j m_j(t).
template <class S>
S trace_against_law(const Polynomial<S>& p, const SemicircleLaw<S>& law) {
    S acc{};
    for (int j = 0; j <= p.degree(); ++j) acc = acc + p.coeff(j) * law.moment(j);
    return acc;
}

enum class ItoMode {
    kFree,      // dS A dS = tau[A] dt; moments count non-crossing pairings
    kClassical  // dB A dB = A dt; moments count all pairings
};

/// tau[S_t^n] for n = 0..n_max as exact polynomials in t, integrated in closed
/// form from the moment ODE of the corresponding Ito rule.
std::vector<Polynomial<Rational>> moment_polynomials(int n_max, ItoMode mode = ItoMode::kFree);

/// The same moments evaluated at a rational time.
std::vector<Rational> moment_evolution(int n_max, const Rational& t, ItoMode mode = ItoMode::kFree);

/// Simple biprocess: piecewise-constant two-sided integrand
/// U_t = sum_j A_j (x) B_j on [t_i, t_{i+1}), zero for t >= t_n.
struct SimpleBiprocess {
    std::vector<double> breakpoints;  // t_0 = 0 < t_1 < ... < t_n
    std::vector<std::vector<std::pair<RealMatrix, RealMatrix>>> terms;  // per interval
    bool adapted = true;

    int intervals() const { return static_cast<int>(terms.size()); }
    void validate() const;

    /// Single-interval single-term biprocess A (x) B on [from, to).
    static SimpleBiprocess single(double from, double to, RealMatrix a, RealMatrix b);
};

/// sum_i sum_j A_j (S_{t_{i+1}} - S_{t_i}) B_j. The path grid must contain
/// every breakpoint.
RealMatrix integrate_simple(const SimpleBiprocess& u, const MatrixPath& path);

/// <U, V> = integral of sum_{j,l} tau[A_j C_l^T] tau[B_j D_l^T] dt, the exact
/// side of the Ito isometry for deterministic simple biprocesses.
double biprocess_inner_product(const SimpleBiprocess& u, const SimpleBiprocess& v);

/// ||U||_{B_inf}^2 = integral of ||U_t||^2 dt with the operator norm of
/// sum_j A_j (x) B_j per interval (power iteration on X -> sum A_j X B_j;
/// single-term intervals reduce to ||A|| ||B||).
double biprocess_b_infinity_norm(const SimpleBiprocess& u);

/// Spectral norm via the symmetric eigenproblem of M^T M.
double spectral_norm(const RealMatrix& m);

struct IsometryCheck {
    double exact = 0.0;
    MomentEstimate estimate;
    double deviation = 0.0;  // |estimate.value - exact|
};

/// Monte Carlo tau[(int U # dS)(int V # dS)^*] against the exact inner product.
IsometryCheck ito_isometry_check(const SimpleBiprocess& u, const SimpleBiprocess& v,
                                 const EnsembleConfig& cfg, int workers = 1);

/// Adapted matrix functional: receives the path restricted to [0, t_start].
using AdaptedMatrixFn = std::function<RealMatrix(const MatrixPath& prefix)>;

struct QuadraticVariationLevel {
    double mesh = 0.0;
    double mean_deviation = 0.0;  // ||sum_i S(I_i) A S(I_i) - tau[A] lambda(I)|| / sqrt(N), averaged
};

/// For each mesh width: Monte Carlo of the normalized Frobenius deviation of
/// sum_i S(I_i) A S(I_i) from tau[A] lambda(I) I over [t_start, t_end].
std::vector<QuadraticVariationLevel> quadratic_variation_check(
    const AdaptedMatrixFn& a_fn, double t_start, double t_end, const std::vector<int>& mesh_steps,
    const EnsembleConfig& cfg, int workers = 1);

struct BurkholderGundyCheck {
    double b_infinity_norm = 0.0;
    double max_integral_norm = 0.0;
    double max_ratio = 0.0;            // max over samples of ||integral|| / ||U||_{B_inf}
    double bound = 2.8284271247461903; // 2 sqrt 2
};

/// Empirical check of ||int U # dS|| <= 2 sqrt 2 ||U||_{B_inf} over sampled paths.
BurkholderGundyCheck bg_bound_check(const SimpleBiprocess& u, const EnsembleConfig& cfg,
                                    int workers = 1);

}  // namespace freecalc
