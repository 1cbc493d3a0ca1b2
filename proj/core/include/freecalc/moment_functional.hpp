#pragma once

#include <functional>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "freecalc/errors.hpp"
#include "freecalc/scalar.hpp"
#include "freecalc/word.hpp"

namespace freecalc {

/// Unital linear functional phi restricted to a finite table of word moments.
///
/// Lookups normalize first: unit letters are deleted and composite letters are
/// expanded, so the table only ever stores fully reduced words. phi of the
/// empty word is 1. A word absent from the table raises MissingMomentError
/// naming the word — moments are never silently zero-filled.
///
/// Immutable after construction; safe to share across threads.
template <class S>
class MomentFunctional {
public:
    MomentFunctional() = default;

    explicit MomentFunctional(std::map<Word, S> table) : table_(std::move(table)) {
        std::map<Word, S> reduced;
        for (auto& [word, value] : table_) {
            Word norm = word.normalized();
            auto [it, inserted] = reduced.emplace(std::move(norm), value);
            if (!inserted && !(it->second == value))
                throw ArgumentError("conflicting moments for word " + word.str());
        }
        table_ = std::move(reduced);
    }

    /// Materializes the table from a generator over all words up to max_order
    /// on the given alphabet (unit words excluded; they normalize away).
    static MomentFunctional from_generator(const std::vector<Letter>& alphabet, int max_order,
                                           const std::function<S(const Word&)>& gen) {
        std::map<Word, S> table;
        std::vector<Word> frontier{Word{}};
        for (int len = 1; len <= max_order; ++len) {
            std::vector<Word> next;
            for (const auto& w : frontier) {
                for (const auto& l : alphabet) {
                    Word ext = w;
                    ext.letters.push_back(l);
                    table[ext] = gen(ext);
                    next.push_back(std::move(ext));
                }
            }
            frontier = std::move(next);
        }
        return MomentFunctional(std::move(table));
    }

    /// phi(w). Unit normalization happens before lookup.
    S moment(const Word& w) const {
        const Word norm = w.normalized();
        if (norm.letters.empty()) return ScalarTraits<S>::one();
        auto it = table_.find(norm);
        if (it == table_.end()) throw MissingMomentError(norm.str());
        return it->second;
    }

    bool has_moment(const Word& w) const {
        const Word norm = w.normalized();
        return norm.letters.empty() || table_.contains(norm);
    }

    const std::map<Word, S>& table() const { return table_; }

    /// Functional of the centered variables x - phi(x)1, same letter names.
    /// Expanded by multilinearity: phi'(x_1...x_n) =
    /// sum over subsets S of positions of prod_{i not in S}(-phi(x_i)) phi(x_S).
    MomentFunctional centered() const {
        std::map<Word, S> out;
        for (const auto& [word, unused] : table_) {
            const size_t n = word.letters.size();
            S total = ScalarTraits<S>::zero();
            for (std::uint64_t mask = 0; mask < (1ull << n); ++mask) {
                S term = ScalarTraits<S>::one();
                std::vector<int> kept;
                for (size_t i = 0; i < n; ++i) {
                    if (mask & (1ull << i)) {
                        kept.push_back(static_cast<int>(i) + 1);
                    } else {
                        term = term * (-moment(Word{{word.letters[i]}}));
                    }
                }
                total = total + term * moment(word.subword(kept));
            }
            out[word] = total;
        }
        return MomentFunctional(std::move(out));
    }

private:
    std::map<Word, S> table_;
};

}  // namespace freecalc
