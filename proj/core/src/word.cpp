#include "freecalc/word.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace freecalc {

Letter compose_letters(const Letter& a, const Letter& b) {
    if (a == kUnitLetter) return b;
    if (b == kUnitLetter) return a;
    return a + kComposeSeparator + b;
}

Word Word::subword(const std::vector<int>& positions) const {
    Word out;
    out.letters.reserve(positions.size());
    for (int p : positions) {
        if (p < 1 || static_cast<size_t>(p) > letters.size())
            throw ArgumentError("subword position out of range");
        out.letters.push_back(letters[static_cast<size_t>(p) - 1]);
    }
    return out;
}

Word Word::normalized() const {
    Word out;
    for (const auto& letter : letters) {
        std::string part;
        std::istringstream in(letter);
        while (std::getline(in, part, kComposeSeparator)) {
            if (part.empty()) throw ArgumentError("malformed composite letter '" + letter + "'");
            if (part != kUnitLetter) out.letters.push_back(part);
        }
    }
    return out;
}

Word Word::merged_at(int pos) const {
    if (pos < 1 || static_cast<size_t>(pos) >= letters.size())
        throw ArgumentError("merge position out of range");
    Word out;
    out.letters.reserve(letters.size() - 1);
    for (size_t i = 0; i + 1 < static_cast<size_t>(pos); ++i) out.letters.push_back(letters[i]);
    out.letters.push_back(compose_letters(letters[static_cast<size_t>(pos) - 1], letters[static_cast<size_t>(pos)]));
    for (size_t i = static_cast<size_t>(pos) + 1; i < letters.size(); ++i) out.letters.push_back(letters[i]);
    return out;
}

std::string Word::str() const {
    std::ostringstream out;
    out << '[';
    for (size_t i = 0; i < letters.size(); ++i) {
        if (i) out << ',';
        out << letters[i];
    }
    out << ']';
    return out.str();
}

int FamilyAssignment::family(const Letter& l) const {
    auto it = family_of.find(l);
    if (it == family_of.end()) throw ArgumentError("letter '" + l + "' has no family assignment");
    return it->second;
}

bool FamilyAssignment::is_mixed(const Word& w) const {
    const Word norm = w.normalized();
    std::set<int> fams;
    for (const auto& l : norm.letters) fams.insert(family(l));
    return fams.size() >= 2;
}

int FamilyAssignment::family_count() const {
    std::set<int> fams;
    for (const auto& [letter, fam] : family_of) fams.insert(fam);
    return static_cast<int>(fams.size());
}

}  // namespace freecalc
