#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "freecalc/errors.hpp"
#include "freecalc/scalar.hpp"

namespace freecalc {

/// Partition of the ground set {1..n} into disjoint nonempty blocks.
///
/// Canonical form: elements ascending within each block, blocks sorted by
/// their minimum. All constructors canonicalize and validate, so two
/// partitions are equal iff their canonical block lists are equal.
class Partition {
public:
    Partition(int n, std::vector<std::vector<int>> blocks);

    /// {(1),(2),...,(n)} — the minimal element 0_n of the refinement order.
    static Partition singletons(int n);
    /// {(1,...,n)} — the maximal element 1_n.
    static Partition one_block(int n);

    int n() const { return n_; }
    const std::vector<std::vector<int>>& blocks() const { return blocks_; }
    int block_count() const { return static_cast<int>(blocks_.size()); }

    /// Index (0-based into blocks()) of the block containing element p (1-based).
    int block_of(int p) const;

    bool operator==(const Partition& other) const = default;
    bool operator<(const Partition& other) const;

    /// Paper notation: `{(1,3,5),(2),(4)}`.
    std::string str() const;
    /// Strict parser for the paper notation; whitespace between tokens allowed.
    static Partition parse(const std::string& text);

private:
    int n_ = 0;
    std::vector<std::vector<int>> blocks_;
    std::vector<int> block_index_;  // element (1-based) -> block position
};

/// Step sequence (i(1),...,i(n)) of the canonical bijection between NC(n)
/// and lattice paths: i(m) = #V-1 when m closes its block V, else -1.
/// Valid paths have all partial sums <= 0 and total sum 0.
struct LatticePath {
    std::vector<int> steps;

    bool operator==(const LatticePath&) const = default;
    /// "−1,−1,0,−1,2,1" rendered with ASCII minus.
    std::string str() const;
};

/// True iff no p1<q1<p2<q2 exists with p1~p2 in one block and q1~q2 in a
/// different block. Linear scan with a stack of open blocks.
bool is_noncrossing(const Partition& p);

/// Default cap for NC(n) enumeration; c_n grows like 4^n.
inline constexpr int kDefaultEnumerationCap = 18;

/// All of NC(n) in canonical form. Throws SizeLimitError above the cap.
std::vector<Partition> enumerate_nc(int n, int cap = kDefaultEnumerationCap);

/// Shared immutable catalog of NC(n); built once per n, safe for concurrent use.
const std::vector<Partition>& nc_catalog(int n);

/// Refinement order: every block of s contained in some block of p.
bool leq(const Partition& s, const Partition& p);

/// Identifies pos and pos+1: merges their blocks, drops pos+1, relabels the
/// ground set to {1..n-1}. Preserves the non-crossing property.
Partition merge_at(const Partition& p, int pos);

/// Kreweras complement: the maximal sigma in NC(n-bar) such that pi and sigma
/// interleaved as 1 1bar 2 2bar ... n nbar stay non-crossing, relabeled to
/// {1..n}. Requires a non-crossing input.
///
/// Computed through the cycle model: a non-crossing pi corresponds to the
/// permutation mapping each element to the next one in its block (cyclically),
/// and the complement's permutation is sigma_pi^{-1} composed with the full
/// cycle (1 2 ... n).
Partition kreweras(const Partition& p);

/// Bijection of partitions with admissible step sequences (non-crossing input).
LatticePath to_lattice_path(const Partition& p);
/// Inverse direction; throws DomainError on partial-sum or range violations.
Partition from_lattice_path(const LatticePath& path);

/// Catalan number c_n via the recursion c_n = sum_k c_k c_{n-k-1}, memoized.
BigInt catalan(int n);

}  // namespace freecalc
