#pragma once

#include <Eigen/Dense>
#include <string>
#include <vector>

#include "freecalc/errors.hpp"
#include "freecalc/moment_functional.hpp"
#include "freecalc/scalar.hpp"
#include "freecalc/series.hpp"
#include "freecalc/word.hpp"

namespace freecalc {

using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;

/// Full Fock space over C^d truncated at tensor depth D. The basis is indexed
/// by words over {0..d-1} of length <= D in length-then-lexicographic order;
/// the empty word is the vacuum Omega at index 0. A product of n creation or
/// annihilation operators applied to Omega never reaches depth beyond n, so
/// vacuum moments of order <= D are unaffected by the truncation.
class TruncatedFock {
public:
    TruncatedFock(int one_particle_dim, int depth);

    int d() const { return d_; }
    int depth() const { return depth_; }
    int dim() const { return dim_; }

    /// Index of the basis word (digits in {0..d-1}).
    int index_of(const std::vector<int>& word) const;
    /// Basis word of an index.
    std::vector<int> word_of(int index) const;

    Vector vacuum() const;

private:
    int d_;
    int depth_;
    int dim_;
    std::vector<int> level_offset_;  // offset of the first word of each length
};

/// Dense operator on a truncated Fock space.
struct FockOperator {
    const TruncatedFock* space = nullptr;
    Matrix matrix;

    FockOperator adjoint() const { return {space, matrix.adjoint()}; }
    friend FockOperator operator*(const FockOperator& a, const FockOperator& b) {
        if (a.space != b.space) throw ArgumentError("operators live on different spaces");
        return {a.space, a.matrix * b.matrix};
    }
    friend FockOperator operator+(const FockOperator& a, const FockOperator& b) {
        if (a.space != b.space) throw ArgumentError("operators live on different spaces");
        return {a.space, a.matrix + b.matrix};
    }
    friend FockOperator operator*(Complex s, const FockOperator& a) { return {a.space, s * a.matrix}; }
};

/// Creation operator l*(f): prepends f to a basis tensor; depth-D vectors map
/// to zero under the truncation.
FockOperator creation(const TruncatedFock& space, const Vector& f);

/// Annihilation operator l(f): l(f) Omega = 0 and
/// l(f) f_1 x ... x f_n = <f, f_1> f_2 x ... x f_n. Equals creation(f).adjoint().
FockOperator annihilation(const TruncatedFock& space, const Vector& f);

/// Identity on the space.
FockOperator identity(const TruncatedFock& space);

/// Semicircular generator l(f) + l*(f).
FockOperator semicircular(const TruncatedFock& space, const Vector& f);

/// <Omega, A Omega>: the (0,0) matrix entry.
Complex vacuum_expectation(const FockOperator& a);

/// Moments phi(x_{i_1}...x_{i_k}) of named operators under the vacuum state,
/// materialized as a word-moment table up to max_order.
MomentFunctional<Complex> operator_moment_functional(const std::vector<Letter>& letters,
                                                     const std::vector<FockOperator>& ops,
                                                     int max_order);

/// Freeness evidence for the algebras generated from two orthogonal subspaces.
struct FockFreenessReport {
    double max_centered_alternating_abs = 0.0;  // |<Omega, x_1...x_k Omega>| over centered alternating words
    size_t alternating_words_checked = 0;
    double max_mixed_cumulant_abs = 0.0;  // from the cumulant engine on generator moments
    size_t mixed_words_checked = 0;
};

/// Verifies the freeness condition for the generators of two orthogonal
/// one-particle subspaces: centered alternating products have vacuum
/// expectation ~ 0, and all mixed free cumulants of the semicircular
/// generators vanish up to max_len. Non-orthogonal inputs are an error.
FockFreenessReport check_fock_freeness(const TruncatedFock& space, const std::vector<Vector>& h1_basis,
                                       const std::vector<Vector>& h2_basis, int max_len);

/// Depth cap for internally constructed canonical-variable spaces.
inline constexpr int kDefaultFockDepthCap = 10;

/// Canonical variable b = l* + sum_{i=0}^{K-1} k_{i+1} l^i on a depth-(n_max+1)
/// one-dimensional Fock space, realizing the prescribed cumulant sequence.
struct CanonicalVariable {
    TruncatedFock space;
    FockOperator op;
    std::vector<double> cumulants;

    CanonicalVariable(const std::vector<double>& k, int n_max, int depth_cap = kDefaultFockDepthCap);
    CanonicalVariable(const CanonicalVariable&) = delete;  // op points into space
    CanonicalVariable& operator=(const CanonicalVariable&) = delete;
};

/// Vacuum moments m_1..m_n_max of the canonical variable for k; equals the
/// NC cumulant sum at every order up to n_max.
std::vector<double> canonical_moments(const std::vector<double>& k, int n_max,
                                      int depth_cap = kDefaultFockDepthCap);

/// m_n as the sum over admissible step sequences (i(1),...,i(n)) with partial
/// sums <= 0 and total 0 of the products k_{i(1)+1}...k_{i(n)+1} (k_0 = 1).
/// Term-by-term equal to the NC sum through the canonical bijection.
template <class S>
S lattice_path_moment(const CumulantSequence<S>& k, int n) {
    if (n < 1) throw ArgumentError("lattice_path_moment requires n >= 1");
    if (k.order() < n) throw ArgumentError("lattice_path_moment needs cumulants up to order n");
    S total = ScalarTraits<S>::zero();
    auto dfs = [&](auto&& self, int m, long long partial, S weight) -> void {
        if (m > n) {
            if (partial == 0) total = total + weight;
            return;
        }
        for (int step = -1; step <= n - 1; ++step) {
            if (partial + step > 0) continue;
            S factor = (step == -1) ? ScalarTraits<S>::one() : k.at(step + 1);
            self(self, m + 1, partial + step, weight * factor);
        }
    };
    dfs(dfs, 1, 0, ScalarTraits<S>::one());
    return total;
}

}  // namespace freecalc
