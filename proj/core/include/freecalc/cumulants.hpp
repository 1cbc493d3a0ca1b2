#pragma once

#include <algorithm>
#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "freecalc/moment_functional.hpp"
#include "freecalc/partition.hpp"
#include "freecalc/scalar.hpp"
#include "freecalc/word.hpp"

namespace freecalc {

/// Free cumulant calculator over a fixed moment functional.
///
/// k_n is defined through phi(a_1...a_n) = sum over NC(n) of k_pi, which
/// resolves uniquely as k_n = phi(w) - sum_{pi != 1_n} k_pi. Values are
/// memoized by argument word; the cache tolerates concurrent use.
template <class S>
class CumulantCalculator {
public:
    explicit CumulantCalculator(const MomentFunctional<S>& phi) : phi_(&phi) {}

    const MomentFunctional<S>& functional() const { return *phi_; }

    /// k_n(a_1,...,a_n) for the letters of w.
    S cumulant(const Word& w) {
        if (w.letters.empty()) throw ArgumentError("cumulant of the empty word is undefined");
        {
            std::lock_guard<std::mutex> lock(mu_);
            auto it = memo_.find(w);
            if (it != memo_.end()) return it->second;
        }
        S value = phi_->moment(w);
        if (w.size() > 1) {
            const auto& catalog = nc_catalog(static_cast<int>(w.size()));
            for (const auto& pi : catalog) {
                if (pi.block_count() == 1) continue;
                value = value - cumulant_pi(pi, w);
            }
        }
        std::lock_guard<std::mutex> lock(mu_);
        memo_.emplace(w, value);
        return value;
    }

    /// k_pi: the product of block cumulants k_{#V}(a_{v_1},...,a_{v_l}).
    S cumulant_pi(const Partition& pi, const Word& w) {
        if (static_cast<size_t>(pi.n()) != w.size())
            throw ArgumentError("partition size does not match word length");
        S prod = ScalarTraits<S>::one();
        for (const auto& block : pi.blocks()) prod = prod * cumulant(w.subword(block));
        return prod;
    }

    /// phi_sigma: the product of block moments phi(a_{v_1}...a_{v_l}).
    S phi_sigma(const Partition& sigma, const Word& w) const {
        if (static_cast<size_t>(sigma.n()) != w.size())
            throw ArgumentError("partition size does not match word length");
        S prod = ScalarTraits<S>::one();
        for (const auto& block : sigma.blocks()) prod = prod * phi_->moment(w.subword(block));
        return prod;
    }

private:
    const MomentFunctional<S>* phi_;
    std::mutex mu_;
    std::unordered_map<Word, S, WordHash> memo_;
};

template <class S>
S cumulant(const MomentFunctional<S>& phi, const Word& w) {
    CumulantCalculator<S> calc(phi);
    return calc.cumulant(w);
}

template <class S>
S cumulant_pi(const MomentFunctional<S>& phi, const Partition& pi, const Word& w) {
    CumulantCalculator<S> calc(phi);
    return calc.cumulant_pi(pi, w);
}

template <class S>
S phi_sigma(const MomentFunctional<S>& phi, const Partition& sigma, const Word& w) {
    CumulantCalculator<S> calc(phi);
    return calc.phi_sigma(sigma, w);
}

/// Moment from a cumulant source: sum over NC(|w|) of block products of k.
/// Exact inverse of the cumulant recursion on consistent data.
template <class S>
S moment_from_cumulants(const std::function<S(const Word&)>& k, const Word& w) {
    if (w.letters.empty()) return ScalarTraits<S>::one();
    S total = ScalarTraits<S>::zero();
    for (const auto& pi : nc_catalog(static_cast<int>(w.size()))) {
        S prod = ScalarTraits<S>::one();
        for (const auto& block : pi.blocks()) prod = prod * k(w.subword(block));
        total = total + prod;
    }
    return total;
}

/// Checks phi_sigma[w] == sum_{pi <= sigma} k_pi[w]; returns the magnitude of
/// the difference (exactly zero for rational scalars on consistent data).
template <class S>
typename ScalarTraits<S>::Magnitude check_phi_sigma_identity(const MomentFunctional<S>& phi,
                                                             const Partition& sigma, const Word& w) {
    CumulantCalculator<S> calc(phi);
    S lhs = calc.phi_sigma(sigma, w);
    S rhs = ScalarTraits<S>::zero();
    for (const auto& pi : nc_catalog(static_cast<int>(w.size()))) {
        if (!leq(pi, sigma)) continue;
        rhs = rhs + calc.cumulant_pi(pi, w);
    }
    return ScalarTraits<S>::abs(lhs - rhs);
}

/// Result of rewriting a cumulant whose argument at `pos` is the product of
/// two letters: k_{n-1}(..., a_p a_{p+1}, ...) equals k_n plus the
/// two-block terms that separate p from p+1.
template <class S>
struct ProductExpansion {
    S merged_cumulant;                           // k_{n-1} with the composite argument
    S direct_term;                               // k_n on the unmerged word
    std::vector<std::pair<Partition, S>> terms;  // two-block partitions separating p, p+1
    S expansion_sum;                             // direct_term + sum of terms
    typename ScalarTraits<S>::Magnitude deviation;
};

template <class S>
ProductExpansion<S> cumulant_with_product(const MomentFunctional<S>& phi, const Word& w, int pos) {
    const int n = static_cast<int>(w.size());
    if (n < 2) throw ArgumentError("cumulant_with_product requires a word of length >= 2");
    if (pos < 1 || pos > n - 1) throw ArgumentError("merge position out of range");
    CumulantCalculator<S> calc(phi);
    ProductExpansion<S> out;
    out.merged_cumulant = calc.cumulant(w.merged_at(pos));
    out.direct_term = calc.cumulant(w);
    out.expansion_sum = out.direct_term;
    for (const auto& pi : nc_catalog(n)) {
        if (pi.block_count() != 2) continue;
        if (pi.block_of(pos) == pi.block_of(pos + 1)) continue;
        S value = calc.cumulant_pi(pi, w);
        out.expansion_sum = out.expansion_sum + value;
        out.terms.emplace_back(pi, value);
    }
    out.deviation = ScalarTraits<S>::abs(out.merged_cumulant - out.expansion_sum);
    return out;
}

/// One row of a freeness report: a mixed word and the magnitude of its cumulant.
template <class S>
struct MixedCumulantEntry {
    Word word;
    typename ScalarTraits<S>::Magnitude magnitude;
};

template <class S>
struct FreenessReport {
    int max_order = 0;
    size_t words_examined = 0;
    typename ScalarTraits<S>::Magnitude max_mixed_abs{};
    std::vector<MixedCumulantEntry<S>> entries;  // sorted by descending magnitude
};

/// Scans every mixed word (letters from >= 2 families) of length 2..max_order
/// and records |k_n|. A zero maximum certifies freeness to that order.
template <class S>
FreenessReport<S> freeness_report(const MomentFunctional<S>& phi, const FamilyAssignment& fam,
                                  int max_order) {
    std::vector<Letter> alphabet;
    for (const auto& [letter, family] : fam.family_of) alphabet.push_back(letter);
    CumulantCalculator<S> calc(phi);
    FreenessReport<S> report;
    report.max_order = max_order;
    report.max_mixed_abs = typename ScalarTraits<S>::Magnitude{};
    std::vector<Word> frontier{Word{}};
    for (int len = 1; len <= max_order; ++len) {
        std::vector<Word> next;
        for (const auto& w : frontier) {
            for (const auto& l : alphabet) {
                Word ext = w;
                ext.letters.push_back(l);
                if (len >= 2 && fam.is_mixed(ext)) {
                    ++report.words_examined;
                    auto mag = ScalarTraits<S>::abs(calc.cumulant(ext));
                    if (report.max_mixed_abs < mag) report.max_mixed_abs = mag;
                    report.entries.push_back({ext, mag});
                }
                next.push_back(std::move(ext));
            }
        }
        frontier = std::move(next);
    }
    std::sort(report.entries.begin(), report.entries.end(),
              [](const auto& a, const auto& b) { return b.magnitude < a.magnitude; });
    return report;
}

/// Moments of the free product: cumulants inside one family come from that
/// family's functional, every mixed cumulant is zero, and phi(w) is the NC sum.
template <class S>
class FreeProduct {
public:
    FreeProduct(std::vector<const MomentFunctional<S>*> functionals, FamilyAssignment fam)
        : fam_(std::move(fam)) {
        for (const auto* phi : functionals)
            calcs_.push_back(std::make_unique<CumulantCalculator<S>>(*phi));
    }

    S moment(const Word& w) {
        const Word norm = w.normalized();
        if (norm.letters.empty()) return ScalarTraits<S>::one();
        const int n = static_cast<int>(norm.size());
        S total = ScalarTraits<S>::zero();
        for (const auto& pi : nc_catalog(n)) {
            S prod = ScalarTraits<S>::one();
            bool vanishes = false;
            for (const auto& block : pi.blocks()) {
                const int fam = fam_.family(norm.letters[static_cast<size_t>(block.front()) - 1]);
                bool mixed = false;
                for (int p : block)
                    if (fam_.family(norm.letters[static_cast<size_t>(p) - 1]) != fam) mixed = true;
                if (mixed) {
                    vanishes = true;
                    break;
                }
                if (fam < 1 || static_cast<size_t>(fam) > calcs_.size())
                    throw ArgumentError("family index outside the functional list");
                prod = prod * calcs_[static_cast<size_t>(fam) - 1]->cumulant(norm.subword(block));
            }
            if (!vanishes) total = total + prod;
        }
        return total;
    }

private:
    FamilyAssignment fam_;
    std::vector<std::unique_ptr<CumulantCalculator<S>>> calcs_;
};

template <class S>
S free_product_moment(const std::vector<const MomentFunctional<S>*>& functionals,
                      const FamilyAssignment& fam, const Word& w) {
    FreeProduct<S> product(functionals, fam);
    return product.moment(w);
}

}  // namespace freecalc
