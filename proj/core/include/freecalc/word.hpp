#pragma once

#include <cstddef>
#include <functional>
#include <map>
#include <string>
#include <vector>

#include "freecalc/errors.hpp"

namespace freecalc {

/// Opaque variable identifier. Two letters are reserved:
///  - kUnitLetter denotes the algebra unit 1;
///  - kComposeSeparator joins letters into a composite letter standing for
///    their product (used when a cumulant argument is itself a product).
using Letter = std::string;

inline const Letter kUnitLetter = "1";
inline constexpr char kComposeSeparator = '*';

/// Composite letter for the product a*b. Under any moment functional a word
/// containing "a*b" evaluates exactly like the word with a followed by b
/// (associativity); no moment values are invented.
Letter compose_letters(const Letter& a, const Letter& b);

/// Finite word over the variable alphabet; arguments of phi and k_n.
struct Word {
    std::vector<Letter> letters;

    Word() = default;
    Word(std::initializer_list<Letter> ls) : letters(ls) {}
    explicit Word(std::vector<Letter> ls) : letters(std::move(ls)) {}

    size_t size() const { return letters.size(); }
    const Letter& operator[](size_t i) const { return letters[i]; }

    /// Subword picked out by 1-based positions (a partition block).
    Word subword(const std::vector<int>& positions) const;

    /// Expands composite letters and removes unit letters. The empty word is
    /// the valid normal form of a product of units.
    Word normalized() const;

    /// Word with letters at pos and pos+1 (1-based) merged into a composite letter.
    Word merged_at(int pos) const;

    bool operator==(const Word&) const = default;
    bool operator<(const Word& o) const { return letters < o.letters; }

    std::string str() const;
};

struct WordHash {
    size_t operator()(const Word& w) const {
        size_t h = 1469598103934665603ull;
        for (const auto& l : w.letters) {
            h ^= std::hash<std::string>()(l);
            h *= 1099511628211ull;
        }
        return h;
    }
};

/// Assignment of variables to families 1..m for freeness questions.
struct FamilyAssignment {
    std::map<Letter, int> family_of;

    int family(const Letter& l) const;
    /// Family set spanned by the (normalized) word; size >= 2 means mixed.
    bool is_mixed(const Word& w) const;
    int family_count() const;
};

}  // namespace freecalc
