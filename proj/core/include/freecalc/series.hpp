#pragma once

#include <algorithm>
#include <functional>
#include <vector>

#include "freecalc/errors.hpp"
#include "freecalc/partition.hpp"
#include "freecalc/scalar.hpp"

namespace freecalc {

/// Truncated formal power series sum c_i z^i, i = 0..order. Arithmetic never
/// reads or writes coefficients beyond the explicit truncation order.
template <class S>
class FormalSeries {
public:
    explicit FormalSeries(int order) : c_(static_cast<size_t>(order) + 1, ScalarTraits<S>::zero()) {
        if (order < 0) throw ArgumentError("series order must be >= 0");
    }
    FormalSeries(std::vector<S> coeffs) : c_(std::move(coeffs)) {
        if (c_.empty()) throw ArgumentError("series needs at least the constant coefficient");
    }

    int order() const { return static_cast<int>(c_.size()) - 1; }
    const S& operator[](int i) const { return c_[static_cast<size_t>(i)]; }
    S& operator[](int i) { return c_[static_cast<size_t>(i)]; }
    const std::vector<S>& coefficients() const { return c_; }

    FormalSeries truncated(int order) const {
        FormalSeries out(order);
        for (int i = 0; i <= std::min(order, this->order()); ++i) out[i] = c_[static_cast<size_t>(i)];
        return out;
    }

    friend FormalSeries operator+(const FormalSeries& a, const FormalSeries& b) {
        FormalSeries out(std::min(a.order(), b.order()));
        for (int i = 0; i <= out.order(); ++i) out[i] = a[i] + b[i];
        return out;
    }
    friend FormalSeries operator-(const FormalSeries& a, const FormalSeries& b) {
        FormalSeries out(std::min(a.order(), b.order()));
        for (int i = 0; i <= out.order(); ++i) out[i] = a[i] - b[i];
        return out;
    }
    friend FormalSeries operator*(const FormalSeries& a, const FormalSeries& b) {
        FormalSeries out(std::min(a.order(), b.order()));
        for (int i = 0; i <= std::min(a.order(), out.order()); ++i)
            for (int j = 0; j <= std::min(b.order(), out.order() - i); ++j)
                out[i + j] = out[i + j] + a[i] * b[j];
        return out;
    }

    /// Multiplicative inverse; requires an invertible constant term.
    FormalSeries inverse() const;

    /// Composition f(g(z)); g must have zero constant term.
    static FormalSeries compose(const FormalSeries& f, const FormalSeries& g);

private:
    std::vector<S> c_;
};

template <class S>
FormalSeries<S> FormalSeries<S>::inverse() const {
    if (c_[0] == ScalarTraits<S>::zero()) throw ArgumentError("series inverse needs nonzero constant term");
    FormalSeries out(order());
    const S inv0 = ScalarTraits<S>::one() / c_[0];
    out[0] = inv0;
    for (int n = 1; n <= order(); ++n) {
        S acc = ScalarTraits<S>::zero();
        for (int k = 1; k <= n; ++k) acc = acc + c_[static_cast<size_t>(k)] * out[n - k];
        out[n] = -inv0 * acc;
    }
    return out;
}

template <class S>
FormalSeries<S> FormalSeries<S>::compose(const FormalSeries& f, const FormalSeries& g) {
    if (!(g[0] == ScalarTraits<S>::zero()))
        throw ArgumentError("series composition needs zero constant term in the inner series");
    const int order = std::min(f.order(), g.order());
    const FormalSeries inner = g.truncated(order);
    // Horner over the coefficients of f that can reach order `order`.
    FormalSeries acc(order);
    acc[0] = f[std::min(f.order(), order)];
    for (int i = std::min(f.order(), order) - 1; i >= 0; --i) {
        acc = acc * inner;
        acc[0] = acc[0] + f[i];
    }
    return acc;
}

/// One-variable moment sequence m_1..m_N (m_0 = 1 implicit).
template <class S>
struct MomentSequence {
    std::vector<S> m;
    int order() const { return static_cast<int>(m.size()); }
    const S& at(int n) const {
        if (n < 1 || n > order()) throw ArgumentError("moment index out of range");
        return m[static_cast<size_t>(n) - 1];
    }
};

/// One-variable free cumulant sequence k_1..k_N.
template <class S>
struct CumulantSequence {
    std::vector<S> k;
    int order() const { return static_cast<int>(k.size()); }
    const S& at(int n) const {
        if (n < 1 || n > order()) throw ArgumentError("cumulant index out of range");
        return k[static_cast<size_t>(n) - 1];
    }
};

namespace detail {

/// W[s][j] = sum over i_1+...+i_s = j of m_{i_1}...m_{i_s} with m_0 = 1,
/// for j + s <= n_max. Plain s-fold convolution tables.
template <class S>
std::vector<std::vector<S>> moment_power_tables(const std::vector<S>& m_with_unit, int n_max) {
    std::vector<std::vector<S>> w(static_cast<size_t>(n_max) + 1);
    w[0] = {ScalarTraits<S>::one()};
    for (int s = 1; s <= n_max; ++s) {
        const int jmax = n_max - s;
        std::vector<S> row(static_cast<size_t>(jmax) + 1, ScalarTraits<S>::zero());
        for (int j = 0; j <= jmax; ++j) {
            for (int i = 0; i <= j && i < static_cast<int>(m_with_unit.size()); ++i) {
                if (j - i < static_cast<int>(w[static_cast<size_t>(s) - 1].size()))
                    row[static_cast<size_t>(j)] =
                        row[static_cast<size_t>(j)] +
                        m_with_unit[static_cast<size_t>(i)] * w[static_cast<size_t>(s) - 1][static_cast<size_t>(j - i)];
            }
        }
        w[static_cast<size_t>(s)] = std::move(row);
    }
    return w;
}

}  // namespace detail

/// m_n = sum_{s=1}^n k_s sum_{i_1+...+i_s = n-s} m_{i_1}...m_{i_s}, built up
/// order by order.
template <class S>
MomentSequence<S> moments_from_cumulants(const CumulantSequence<S>& k) {
    const int n_max = k.order();
    if (n_max < 1) throw ArgumentError("cumulant sequence must have order >= 1");
    std::vector<S> m_unit{ScalarTraits<S>::one()};  // m_0, m_1, ...
    for (int n = 1; n <= n_max; ++n) {
        auto w = detail::moment_power_tables(m_unit, n);
        S total = ScalarTraits<S>::zero();
        for (int s = 1; s <= n; ++s) total = total + k.at(s) * w[static_cast<size_t>(s)][static_cast<size_t>(n - s)];
        m_unit.push_back(total);
    }
    return MomentSequence<S>{std::vector<S>(m_unit.begin() + 1, m_unit.end())};
}

/// Inverse of the same triangular system: k_n = m_n - sum_{s<n} k_s W_s[n-s].
template <class S>
CumulantSequence<S> cumulants_from_moments(const MomentSequence<S>& m) {
    const int n_max = m.order();
    if (n_max < 1) throw ArgumentError("moment sequence must have order >= 1");
    std::vector<S> m_unit{ScalarTraits<S>::one()};
    m_unit.insert(m_unit.end(), m.m.begin(), m.m.end());
    auto w = detail::moment_power_tables(m_unit, n_max);
    std::vector<S> k;
    for (int n = 1; n <= n_max; ++n) {
        S total = m.at(n);
        for (int s = 1; s < n; ++s)
            total = total - k[static_cast<size_t>(s) - 1] * w[static_cast<size_t>(s)][static_cast<size_t>(n - s)];
        k.push_back(total);
    }
    return CumulantSequence<S>{std::move(k)};
}

/// Oracle form of the same relation: m_n = sum over NC(n) of prod k_{#V}.
template <class S>
MomentSequence<S> moments_from_cumulants_ncsum(const CumulantSequence<S>& k) {
    MomentSequence<S> out;
    for (int n = 1; n <= k.order(); ++n) {
        S total = ScalarTraits<S>::zero();
        for (const auto& pi : nc_catalog(n)) {
            S prod = ScalarTraits<S>::one();
            for (const auto& block : pi.blocks()) prod = prod * k.at(static_cast<int>(block.size()));
            total = total + prod;
        }
        out.m.push_back(total);
    }
    return out;
}

/// M(z) = 1 + sum m_n z^n.
template <class S>
FormalSeries<S> moment_series(const MomentSequence<S>& m) {
    FormalSeries<S> out(m.order());
    out[0] = ScalarTraits<S>::one();
    for (int n = 1; n <= m.order(); ++n) out[n] = m.at(n);
    return out;
}

/// C(z) = 1 + sum k_n z^n.
template <class S>
FormalSeries<S> cumulant_series(const CumulantSequence<S>& k) {
    FormalSeries<S> out(k.order());
    out[0] = ScalarTraits<S>::one();
    for (int n = 1; n <= k.order(); ++n) out[n] = k.at(n);
    return out;
}

/// Max |coefficient| of C[zM(z)] - M(z) through the common order; zero exactly
/// on consistent pairs.
template <class S>
typename ScalarTraits<S>::Magnitude verify_functional_equation(const MomentSequence<S>& m,
                                                               const CumulantSequence<S>& k) {
    const int order = std::min(m.order(), k.order());
    auto mser = moment_series(m).truncated(order);
    auto cser = cumulant_series(k).truncated(order);
    FormalSeries<S> zm(order);
    for (int i = 1; i <= order; ++i) zm[i] = mser[i - 1];
    auto lhs = FormalSeries<S>::compose(cser, zm);
    typename ScalarTraits<S>::Magnitude worst{};
    for (int i = 0; i <= order; ++i) {
        auto dev = ScalarTraits<S>::abs(lhs[i] - mser[i]);
        if (worst < dev) worst = dev;
    }
    return worst;
}

/// Cauchy transform G(z) = sum_{n>=0} m_n z^{-(n+1)} as a series in w = 1/z.
template <class S>
FormalSeries<S> cauchy_from_moments(const MomentSequence<S>& m) {
    FormalSeries<S> out(m.order() + 1);
    out[1] = ScalarTraits<S>::one();
    for (int n = 1; n <= m.order(); ++n) out[n + 1] = m.at(n);
    return out;
}

/// R-transform R(z) = sum_{n>=0} k_{n+1} z^n.
template <class S>
FormalSeries<S> r_from_cumulants(const CumulantSequence<S>& k) {
    FormalSeries<S> out(k.order() - 1);
    for (int n = 0; n < k.order(); ++n) out[n] = k.at(n + 1);
    return out;
}

/// Max |coefficient| of G[R(z) + 1/z] - z through the common order.
///
/// K(z) = R(z) + 1/z = C(z)/z has a simple pole; substituting into the
/// 1/z-expansion of G gives G[K(z)] = sum_n m_n (z / C(z))^{n+1}, an ordinary
/// power series that must equal z.
template <class S>
typename ScalarTraits<S>::Magnitude verify_voiculescu(const MomentSequence<S>& m,
                                                      const CumulantSequence<S>& k) {
    const int order = std::min(m.order(), k.order());
    auto cser = cumulant_series(k).truncated(order);
    FormalSeries<S> h(order);  // h = z / C(z) = 1/K(z)
    auto cinv = cser.inverse();
    for (int i = 1; i <= order; ++i) h[i] = cinv[i - 1];
    FormalSeries<S> total(order);
    FormalSeries<S> hpow = h;  // h^{n+1}
    for (int n = 0; n <= order; ++n) {
        const S mn = (n == 0) ? ScalarTraits<S>::one() : m.at(n);
        for (int i = 0; i <= order; ++i) total[i] = total[i] + mn * hpow[i];
        if (n < order) hpow = hpow * h;
    }
    typename ScalarTraits<S>::Magnitude worst{};
    for (int i = 0; i <= order; ++i) {
        const S expect = (i == 1) ? ScalarTraits<S>::one() : ScalarTraits<S>::zero();
        auto dev = ScalarTraits<S>::abs(total[i] - expect);
        if (worst < dev) worst = dev;
    }
    return worst;
}

/// Free additive convolution on the cumulant side: pointwise sum.
template <class S>
CumulantSequence<S> free_add_convolve(const CumulantSequence<S>& a, const CumulantSequence<S>& b) {
    if (a.order() != b.order()) throw ArgumentError("free_add_convolve requires equal orders");
    CumulantSequence<S> out;
    out.k.reserve(a.k.size());
    for (int n = 1; n <= a.order(); ++n) out.k.push_back(a.at(n) + b.at(n));
    return out;
}

/// Block-indexed sources for the alternating product moment: callables mapping
/// a block of 1-based positions to k (for the a's) and phi (for the b's).
template <class S>
using BlockFunctional = std::function<S(const std::vector<int>&)>;

/// phi(a_1 b_1 a_2 b_2 ... a_n b_n) = sum over pi in NC(n) of
/// k_pi[a] * phi_{K(pi)}[b].
template <class S>
S alternating_product_moment(const BlockFunctional<S>& k_block, const BlockFunctional<S>& phi_block,
                             int n) {
    if (n < 1) throw ArgumentError("alternating_product_moment requires n >= 1");
    S total = ScalarTraits<S>::zero();
    for (const auto& pi : nc_catalog(n)) {
        S prod = ScalarTraits<S>::one();
        for (const auto& block : pi.blocks()) prod = prod * k_block(block);
        const Partition complement = kreweras(pi);
        for (const auto& block : complement.blocks()) prod = prod * phi_block(block);
        total = total + prod;
    }
    return total;
}

/// Single-variable specialization: block values depend only on block size.
template <class S>
S alternating_product_moment(const CumulantSequence<S>& ka, const MomentSequence<S>& mb, int n) {
    if (ka.order() < n || mb.order() < n)
        throw ArgumentError("alternating_product_moment needs sources of order >= n");
    BlockFunctional<S> k_block = [&](const std::vector<int>& v) { return ka.at(static_cast<int>(v.size())); };
    BlockFunctional<S> phi_block = [&](const std::vector<int>& v) { return mb.at(static_cast<int>(v.size())); };
    return alternating_product_moment(k_block, phi_block, n);
}

}  // namespace freecalc
