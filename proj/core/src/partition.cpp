#include "freecalc/partition.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <mutex>
#include <numeric>
#include <sstream>

namespace freecalc {

Partition::Partition(int n, std::vector<std::vector<int>> blocks)
    : n_(n), blocks_(std::move(blocks)) {
    if (n_ < 1) throw ArgumentError("partition ground set must be nonempty");
    std::vector<char> seen(static_cast<size_t>(n_) + 1, 0);
    int covered = 0;
    for (auto& block : blocks_) {
        if (block.empty()) throw ArgumentError("partition block may not be empty");
        std::sort(block.begin(), block.end());
        for (int e : block) {
            if (e < 1 || e > n_) throw ArgumentError("partition element outside {1..n}");
            if (seen[static_cast<size_t>(e)]) throw ArgumentError("partition element repeated");
            seen[static_cast<size_t>(e)] = 1;
            ++covered;
        }
    }
    if (covered != n_) throw ArgumentError("partition blocks must cover {1..n}");
    std::sort(blocks_.begin(), blocks_.end(),
              [](const std::vector<int>& a, const std::vector<int>& b) { return a.front() < b.front(); });
    block_index_.assign(static_cast<size_t>(n_) + 1, -1);
    for (size_t b = 0; b < blocks_.size(); ++b)
        for (int e : blocks_[b]) block_index_[static_cast<size_t>(e)] = static_cast<int>(b);
}

Partition Partition::singletons(int n) {
    std::vector<std::vector<int>> blocks;
    blocks.reserve(static_cast<size_t>(n));
    for (int i = 1; i <= n; ++i) blocks.push_back({i});
    return Partition(n, std::move(blocks));
}

Partition Partition::one_block(int n) {
    std::vector<int> all(static_cast<size_t>(n));
    std::iota(all.begin(), all.end(), 1);
    return Partition(n, {all});
}

int Partition::block_of(int p) const {
    if (p < 1 || p > n_) throw ArgumentError("element outside {1..n}");
    return block_index_[static_cast<size_t>(p)];
}

bool Partition::operator<(const Partition& other) const {
    if (n_ != other.n_) return n_ < other.n_;
    return blocks_ < other.blocks_;
}

std::string Partition::str() const {
    std::ostringstream out;
    out << '{';
    for (size_t b = 0; b < blocks_.size(); ++b) {
        if (b) out << ',';
        out << '(';
        for (size_t i = 0; i < blocks_[b].size(); ++i) {
            if (i) out << ',';
            out << blocks_[b][i];
        }
        out << ')';
    }
    out << '}';
    return out.str();
}

namespace {

struct Cursor {
    const std::string& s;
    size_t pos = 0;
    void skip_ws() {
        while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
    }
    bool eat(char c) {
        skip_ws();
        if (pos < s.size() && s[pos] == c) {
            ++pos;
            return true;
        }
        return false;
    }
    void expect(char c) {
        if (!eat(c)) throw ParseError(std::string("expected '") + c + "' in partition text");
    }
    int integer() {
        skip_ws();
        size_t start = pos;
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
        if (pos == start) throw ParseError("expected integer in partition text");
        return std::stoi(s.substr(start, pos - start));
    }
};

}  // namespace

Partition Partition::parse(const std::string& text) {
    Cursor c{text};
    c.expect('{');
    std::vector<std::vector<int>> blocks;
    if (!c.eat('}')) {
        do {
            c.expect('(');
            std::vector<int> block;
            do {
                block.push_back(c.integer());
            } while (c.eat(','));
            c.expect(')');
            blocks.push_back(std::move(block));
        } while (c.eat(','));
        c.expect('}');
    }
    c.skip_ws();
    if (c.pos != text.size()) throw ParseError("trailing characters after partition text");
    int n = 0;
    for (const auto& block : blocks)
        for (int e : block) n = std::max(n, e);
    if (n == 0) throw ParseError("empty partition text");
    return Partition(n, std::move(blocks));
}

std::string LatticePath::str() const {
    std::ostringstream out;
    for (size_t i = 0; i < steps.size(); ++i) {
        if (i) out << ',';
        out << steps[i];
    }
    return out.str();
}

bool is_noncrossing(const Partition& p) {
    const int n = p.n();
    std::vector<int> last(static_cast<size_t>(p.block_count()), 0);
    for (int b = 0; b < p.block_count(); ++b) last[static_cast<size_t>(b)] = p.blocks()[static_cast<size_t>(b)].back();
    std::vector<char> open(static_cast<size_t>(p.block_count()), 0);
    std::vector<int> stack;
    for (int m = 1; m <= n; ++m) {
        const int b = p.block_of(m);
        if (!open[static_cast<size_t>(b)]) {
            open[static_cast<size_t>(b)] = 1;
            stack.push_back(b);
        } else if (stack.back() != b) {
            return false;  // a still-open block sits between two elements of b
        }
        if (m == last[static_cast<size_t>(b)]) stack.pop_back();
    }
    return true;
}

namespace {

// Recursive generation over a sorted element list: the block of the first
// element is chosen as an arbitrary subset of the remaining elements, which
// splits the rest into independent gaps between consecutive chosen elements.
void enumerate_segment(const std::vector<int>& elems,
                       std::vector<std::vector<std::vector<int>>>& out) {
    if (elems.empty()) {
        out.push_back({});
        return;
    }
    const int first = elems.front();
    const int rest = static_cast<int>(elems.size()) - 1;
    out.clear();
    for (std::uint32_t mask = 0; mask < (1u << rest); ++mask) {
        std::vector<int> block{first};
        std::vector<std::vector<int>> gaps;
        std::vector<int> gap;
        for (int i = 0; i < rest; ++i) {
            if (mask & (1u << i)) {
                gaps.push_back(std::move(gap));
                gap.clear();
                block.push_back(elems[static_cast<size_t>(i) + 1]);
            } else {
                gap.push_back(elems[static_cast<size_t>(i) + 1]);
            }
        }
        gaps.push_back(std::move(gap));

        std::vector<std::vector<std::vector<std::vector<int>>>> per_gap(gaps.size());
        for (size_t g = 0; g < gaps.size(); ++g) enumerate_segment(gaps[g], per_gap[g]);

        std::vector<size_t> choice(gaps.size(), 0);
        while (true) {
            std::vector<std::vector<int>> blocks{block};
            for (size_t g = 0; g < gaps.size(); ++g)
                for (const auto& b : per_gap[g][choice[g]]) blocks.push_back(b);
            out.push_back(std::move(blocks));
            size_t g = 0;
            while (g < gaps.size()) {
                if (++choice[g] < per_gap[g].size()) break;
                choice[g] = 0;
                ++g;
            }
            if (g == gaps.size()) break;
        }
    }
}

}  // namespace

std::vector<Partition> enumerate_nc(int n, int cap) {
    if (n < 1) throw ArgumentError("enumerate_nc requires n >= 1");
    if (n > cap)
        throw SizeLimitError("enumerate_nc(" + std::to_string(n) + ") exceeds cap " +
                             std::to_string(cap) + "; pass a larger cap to override");
    std::vector<int> elems(static_cast<size_t>(n));
    std::iota(elems.begin(), elems.end(), 1);
    std::vector<std::vector<std::vector<int>>> raw;
    enumerate_segment(elems, raw);
    std::vector<Partition> result;
    result.reserve(raw.size());
    for (auto& blocks : raw) result.emplace_back(n, std::move(blocks));
    std::sort(result.begin(), result.end());
    return result;
}

const std::vector<Partition>& nc_catalog(int n) {
    static std::mutex mu;
    static std::map<int, std::vector<Partition>> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(n);
    if (it == cache.end()) it = cache.emplace(n, enumerate_nc(n)).first;
    return it->second;
}

bool leq(const Partition& s, const Partition& p) {
    if (s.n() != p.n()) throw ArgumentError("leq requires partitions of the same ground set");
    for (const auto& block : s.blocks()) {
        const int target = p.block_of(block.front());
        for (int e : block)
            if (p.block_of(e) != target) return false;
    }
    return true;
}

Partition merge_at(const Partition& p, int pos) {
    const int n = p.n();
    if (pos < 1 || pos >= n) throw ArgumentError("merge_at position out of range");
    const int keep = p.block_of(pos);
    const int drop = p.block_of(pos + 1);
    std::vector<std::vector<int>> blocks;
    std::vector<int> merged;
    for (int b = 0; b < p.block_count(); ++b) {
        std::vector<int> block;
        for (int e : p.blocks()[static_cast<size_t>(b)]) {
            if (e == pos + 1) continue;
            block.push_back(e > pos + 1 ? e - 1 : e);
        }
        if (b == keep || b == drop) {
            merged.insert(merged.end(), block.begin(), block.end());
        } else if (!block.empty()) {
            blocks.push_back(std::move(block));
        }
    }
    blocks.push_back(std::move(merged));
    return Partition(n - 1, std::move(blocks));
}

Partition kreweras(const Partition& p) {
    if (!is_noncrossing(p)) throw DomainError("kreweras complement requires a non-crossing partition");
    const int n = p.n();
    // Next-in-block permutation of p (cyclic within each block).
    std::vector<int> next(static_cast<size_t>(n) + 1, 0);
    for (const auto& block : p.blocks()) {
        for (size_t i = 0; i < block.size(); ++i)
            next[static_cast<size_t>(block[i])] = block[(i + 1) % block.size()];
    }
    std::vector<int> inv(static_cast<size_t>(n) + 1, 0);
    for (int e = 1; e <= n; ++e) inv[static_cast<size_t>(next[static_cast<size_t>(e)])] = e;
    // Complement permutation: sigma^{-1} followed by the full cycle 1->2->...->1.
    std::vector<int> comp(static_cast<size_t>(n) + 1, 0);
    for (int e = 1; e <= n; ++e) comp[static_cast<size_t>(e)] = inv[static_cast<size_t>(e % n + 1)];
    std::vector<char> used(static_cast<size_t>(n) + 1, 0);
    std::vector<std::vector<int>> blocks;
    for (int e = 1; e <= n; ++e) {
        if (used[static_cast<size_t>(e)]) continue;
        std::vector<int> cycle;
        int cur = e;
        while (!used[static_cast<size_t>(cur)]) {
            used[static_cast<size_t>(cur)] = 1;
            cycle.push_back(cur);
            cur = comp[static_cast<size_t>(cur)];
        }
        blocks.push_back(std::move(cycle));
    }
    return Partition(n, std::move(blocks));
}

LatticePath to_lattice_path(const Partition& p) {
    if (!is_noncrossing(p)) throw DomainError("lattice-path bijection requires a non-crossing partition");
    LatticePath path;
    path.steps.resize(static_cast<size_t>(p.n()));
    for (const auto& block : p.blocks()) {
        for (size_t i = 0; i + 1 < block.size(); ++i) path.steps[static_cast<size_t>(block[i]) - 1] = -1;
        path.steps[static_cast<size_t>(block.back()) - 1] = static_cast<int>(block.size()) - 1;
    }
    return path;
}

Partition from_lattice_path(const LatticePath& path) {
    const int n = static_cast<int>(path.steps.size());
    if (n < 1) throw DomainError("lattice path must have at least one step");
    std::vector<int> open;  // elements awaiting the closing step of their block
    std::vector<std::vector<int>> blocks;
    long long partial = 0;
    for (int m = 1; m <= n; ++m) {
        const int step = path.steps[static_cast<size_t>(m) - 1];
        if (step < -1 || step > n - 1) throw DomainError("lattice path step outside {-1..n-1}");
        partial += step;
        if (partial > 0) throw DomainError("lattice path partial sum exceeds 0");
        if (step == -1) {
            open.push_back(m);
        } else {
            if (static_cast<int>(open.size()) < step)
                throw DomainError("lattice path closes more elements than are open");
            std::vector<int> block(open.end() - step, open.end());
            open.resize(open.size() - static_cast<size_t>(step));
            block.push_back(m);
            blocks.push_back(std::move(block));
        }
    }
    if (partial != 0) throw DomainError("lattice path total sum must be 0");
    return Partition(n, std::move(blocks));
}

BigInt catalan(int n) {
    if (n < 0) throw ArgumentError("catalan requires n >= 0");
    static std::mutex mu;
    static std::vector<BigInt> memo{BigInt(1)};
    std::lock_guard<std::mutex> lock(mu);
    while (static_cast<int>(memo.size()) <= n) {
        const int m = static_cast<int>(memo.size());
        BigInt total = 0;
        for (int k = 0; k < m; ++k) total += memo[static_cast<size_t>(k)] * memo[static_cast<size_t>(m - k - 1)];
        memo.push_back(total);
    }
    return memo[static_cast<size_t>(n)];
}

}  // namespace freecalc
