#pragma once

// Independent brute-force oracles for the combinatorial machinery. Everything
// here is deliberately naive and kept free of the library's own shortcuts so
// the two routes stay independent.

#include <cstdint>
#include <vector>

#include "freecalc/partition.hpp"
#include "freecalc/scalar.hpp"

namespace oracle {

/// All set partitions of {1..n} via restricted growth strings.
inline std::vector<freecalc::Partition> all_set_partitions(int n) {
    std::vector<freecalc::Partition> out;
    std::vector<int> assign(static_cast<size_t>(n), 0);
    auto rec = [&](auto&& self, int i, int used) -> void {
        if (i == n) {
            std::vector<std::vector<int>> blocks(static_cast<size_t>(used));
            for (int e = 0; e < n; ++e) blocks[static_cast<size_t>(assign[static_cast<size_t>(e)])].push_back(e + 1);
            out.emplace_back(n, std::move(blocks));
            return;
        }
        for (int b = 0; b <= used; ++b) {
            assign[static_cast<size_t>(i)] = b;
            self(self, i + 1, b == used ? used + 1 : used);
        }
    };
    rec(rec, 0, 0);
    return out;
}

/// Literal four-index definition of the crossing pattern.
inline bool is_noncrossing_brute(const freecalc::Partition& p) {
    const int n = p.n();
    for (int p1 = 1; p1 <= n; ++p1)
        for (int q1 = p1 + 1; q1 <= n; ++q1)
            for (int p2 = q1 + 1; p2 <= n; ++p2)
                for (int q2 = p2 + 1; q2 <= n; ++q2)
                    if (p.block_of(p1) == p.block_of(p2) && p.block_of(q1) == p.block_of(q2) &&
                        p.block_of(p1) != p.block_of(q1))
                        return false;
    return true;
}

/// Interleaves pi on {1,3,5,...} with sigma on {2,4,6,...} inside {1..2n}.
inline freecalc::Partition interleave(const freecalc::Partition& pi, const freecalc::Partition& sigma) {
    std::vector<std::vector<int>> blocks;
    for (const auto& b : pi.blocks()) {
        std::vector<int> mapped;
        for (int e : b) mapped.push_back(2 * e - 1);
        blocks.push_back(std::move(mapped));
    }
    for (const auto& b : sigma.blocks()) {
        std::vector<int> mapped;
        for (int e : b) mapped.push_back(2 * e);
        blocks.push_back(std::move(mapped));
    }
    return freecalc::Partition(2 * pi.n(), std::move(blocks));
}

/// Kreweras complement by exhaustion: the maximal sigma whose interleaving
/// with pi stays non-crossing. Checks uniqueness of the maximum as it goes.
inline freecalc::Partition kreweras_brute(const freecalc::Partition& pi) {
    const auto candidates = freecalc::enumerate_nc(pi.n());
    std::vector<freecalc::Partition> admissible;
    for (const auto& sigma : candidates)
        if (is_noncrossing_brute(interleave(pi, sigma))) admissible.push_back(sigma);
    for (const auto& sigma : admissible) {
        bool dominates_all = true;
        for (const auto& other : admissible)
            if (!freecalc::leq(other, sigma)) {
                dominates_all = false;
                break;
            }
        if (dominates_all) return sigma;
    }
    throw std::logic_error("no maximal admissible complement found");
}

/// Deterministic small random rationals for symbolic-identity checks.
class RationalSource {
public:
    explicit RationalSource(std::uint64_t seed) : state_(seed ^ 0x9e3779b97f4a7c15ull) {}

    freecalc::Rational next() {
        const std::int64_t num = static_cast<std::int64_t>(next_u64() % 19) - 9;
        const std::int64_t den = static_cast<std::int64_t>(next_u64() % 7) + 1;
        return freecalc::Rational(num, den);
    }

    freecalc::Rational next_nonzero() {
        while (true) {
            auto r = next();
            if (r != 0) return r;
        }
    }

    std::uint64_t next_u64() {
        state_ += 0x9e3779b97f4a7c15ull;
        std::uint64_t x = state_;
        x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
        x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
        return x ^ (x >> 31);
    }

private:
    std::uint64_t state_;
};

}  // namespace oracle
