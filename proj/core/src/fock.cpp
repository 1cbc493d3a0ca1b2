#include "freecalc/fock.hpp"

#include <cmath>

#include "freecalc/cumulants.hpp"

namespace freecalc {

TruncatedFock::TruncatedFock(int one_particle_dim, int depth) : d_(one_particle_dim), depth_(depth) {
    if (d_ < 1) throw ArgumentError("one-particle dimension must be >= 1");
    if (depth_ < 1) throw ArgumentError("truncation depth must be >= 1");
    level_offset_.resize(static_cast<size_t>(depth_) + 2, 0);
    long long dim = 0;
    long long level = 1;
    for (int len = 0; len <= depth_; ++len) {
        level_offset_[static_cast<size_t>(len)] = static_cast<int>(dim);
        dim += level;
        level *= d_;
        if (dim > (1 << 24)) throw SizeLimitError("truncated Fock space dimension too large");
    }
    level_offset_[static_cast<size_t>(depth_) + 1] = static_cast<int>(dim);
    dim_ = static_cast<int>(dim);
}

int TruncatedFock::index_of(const std::vector<int>& word) const {
    if (static_cast<int>(word.size()) > depth_) throw ArgumentError("basis word longer than depth");
    long long code = 0;
    for (int digit : word) {
        if (digit < 0 || digit >= d_) throw ArgumentError("basis word digit outside {0..d-1}");
        code = code * d_ + digit;
    }
    return level_offset_[word.size()] + static_cast<int>(code);
}

std::vector<int> TruncatedFock::word_of(int index) const {
    if (index < 0 || index >= dim_) throw ArgumentError("basis index out of range");
    int len = 0;
    while (level_offset_[static_cast<size_t>(len) + 1] <= index) ++len;
    long long code = index - level_offset_[static_cast<size_t>(len)];
    std::vector<int> word(static_cast<size_t>(len));
    for (int i = len - 1; i >= 0; --i) {
        word[static_cast<size_t>(i)] = static_cast<int>(code % d_);
        code /= d_;
    }
    return word;
}

Vector TruncatedFock::vacuum() const {
    Vector v = Vector::Zero(dim_);
    v(0) = Complex(1.0, 0.0);
    return v;
}

FockOperator creation(const TruncatedFock& space, const Vector& f) {
    if (f.size() != space.d()) throw ArgumentError("vector length must match the one-particle dimension");
    Matrix m = Matrix::Zero(space.dim(), space.dim());
    for (int col = 0; col < space.dim(); ++col) {
        std::vector<int> word = space.word_of(col);
        if (static_cast<int>(word.size()) >= space.depth()) continue;  // truncation
        std::vector<int> target(word.size() + 1);
        std::copy(word.begin(), word.end(), target.begin() + 1);
        for (int i = 0; i < space.d(); ++i) {
            if (f(i) == Complex(0.0, 0.0)) continue;
            target[0] = i;
            m(space.index_of(target), col) += f(i);
        }
    }
    return {&space, std::move(m)};
}

FockOperator annihilation(const TruncatedFock& space, const Vector& f) {
    if (f.size() != space.d()) throw ArgumentError("vector length must match the one-particle dimension");
    Matrix m = Matrix::Zero(space.dim(), space.dim());
    for (int col = 0; col < space.dim(); ++col) {
        std::vector<int> word = space.word_of(col);
        if (word.empty()) continue;  // l(f) Omega = 0
        const int first = word.front();
        if (f(first) == Complex(0.0, 0.0)) continue;
        std::vector<int> rest(word.begin() + 1, word.end());
        m(space.index_of(rest), col) += std::conj(f(first));
    }
    return {&space, std::move(m)};
}

FockOperator identity(const TruncatedFock& space) {
    return {&space, Matrix::Identity(space.dim(), space.dim())};
}

FockOperator semicircular(const TruncatedFock& space, const Vector& f) {
    FockOperator c = creation(space, f);
    FockOperator a = annihilation(space, f);
    return {&space, a.matrix + c.matrix};
}

Complex vacuum_expectation(const FockOperator& a) { return a.matrix(0, 0); }

MomentFunctional<Complex> operator_moment_functional(const std::vector<Letter>& letters,
                                                     const std::vector<FockOperator>& ops,
                                                     int max_order) {
    if (letters.size() != ops.size()) throw ArgumentError("one operator per letter required");
    if (ops.empty()) throw ArgumentError("at least one operator required");
    const TruncatedFock* space = ops.front().space;
    for (const auto& op : ops)
        if (op.space != space) throw ArgumentError("operators live on different spaces");
    std::map<Letter, const FockOperator*> bound;
    for (size_t i = 0; i < letters.size(); ++i) bound[letters[i]] = &ops[i];

    std::map<Word, Complex> table;
    const Vector vac = space->vacuum();
    // Walk the word tree, reusing the partial vector A_suffix * Omega.
    auto extend = [&](auto&& self, const Word& w, const Vector& state) -> void {
        if (static_cast<int>(w.size()) == max_order) return;
        for (const auto& [letter, op] : bound) {
            Word ext;
            ext.letters.reserve(w.size() + 1);
            ext.letters.push_back(letter);
            ext.letters.insert(ext.letters.end(), w.letters.begin(), w.letters.end());
            Vector next = op->matrix * state;
            table[ext] = vac.dot(next);
            self(self, ext, next);
        }
    };
    extend(extend, Word{}, vac);
    return MomentFunctional<Complex>(std::move(table));
}

FockFreenessReport check_fock_freeness(const TruncatedFock& space, const std::vector<Vector>& h1_basis,
                                       const std::vector<Vector>& h2_basis, int max_len) {
    if (max_len < 1 || max_len > space.depth())
        throw ArgumentError("max_len must lie in 1..depth");
    if (h1_basis.empty() || h2_basis.empty()) throw ArgumentError("subspace bases may not be empty");
    for (const auto& f : h1_basis)
        for (const auto& g : h2_basis)
            if (std::abs(f.dot(g)) > 1e-12)
                throw ArgumentError("subspaces are not orthogonal");

    // Semicircular generators, one per basis vector, families 1 and 2.
    std::vector<Letter> letters;
    std::vector<FockOperator> ops;
    FamilyAssignment fam;
    for (size_t i = 0; i < h1_basis.size(); ++i) {
        Letter l = "s1_" + std::to_string(i + 1);
        fam.family_of[l] = 1;
        letters.push_back(l);
        ops.push_back(semicircular(space, h1_basis[i]));
    }
    for (size_t i = 0; i < h2_basis.size(); ++i) {
        Letter l = "s2_" + std::to_string(i + 1);
        fam.family_of[l] = 2;
        letters.push_back(l);
        ops.push_back(semicircular(space, h2_basis[i]));
    }

    FockFreenessReport report;

    // Defining freeness condition: alternating products of centered elements
    // of the two generator algebras have vanishing vacuum expectation. The
    // elements used are centered powers x^p - phi(x^p), p <= 2, of the
    // generators.
    struct Element {
        int family;
        Matrix matrix;
    };
    std::vector<Element> elements;
    for (size_t i = 0; i < ops.size(); ++i) {
        const int family = fam.family_of[letters[i]];
        for (int p = 1; p <= 2; ++p) {
            Matrix power = Matrix::Identity(space.dim(), space.dim());
            for (int q = 0; q < p; ++q) power = power * ops[i].matrix;
            const Complex mean = power(0, 0);
            elements.push_back({family, power - mean * Matrix::Identity(space.dim(), space.dim())});
        }
    }
    const Vector vac = space.vacuum();
    auto alternate = [&](auto&& self, int last_family, int len, const Vector& state) -> void {
        if (len >= 2) {
            double value = std::abs(vac.dot(state));
            ++report.alternating_words_checked;
            if (value > report.max_centered_alternating_abs)
                report.max_centered_alternating_abs = value;
        }
        if (len == max_len) return;
        for (const auto& elem : elements) {
            if (elem.family == last_family) continue;
            self(self, elem.family, len + 1, elem.matrix * state);
        }
    };
    alternate(alternate, 0, 0, vac);

    // Cumulant-side certificate via the engine.
    auto phi = operator_moment_functional(letters, ops, max_len);
    auto engine_report = freeness_report(phi, fam, max_len);
    report.max_mixed_cumulant_abs = engine_report.max_mixed_abs;
    report.mixed_words_checked = engine_report.words_examined;
    return report;
}

namespace {

int canonical_depth(int n_max, int depth_cap) {
    if (n_max < 1) throw ArgumentError("canonical variable needs n_max >= 1");
    if (n_max + 1 > depth_cap)
        throw SizeLimitError("canonical variable depth " + std::to_string(n_max + 1) +
                             " exceeds cap " + std::to_string(depth_cap));
    return n_max + 1;
}

}  // namespace

CanonicalVariable::CanonicalVariable(const std::vector<double>& k, int n_max, int depth_cap)
    : space(1, canonical_depth(n_max, depth_cap)), cumulants(k) {
    Vector e = Vector::Zero(1);
    e(0) = Complex(1.0, 0.0);
    const Matrix l = annihilation(space, e).matrix;
    const Matrix lstar = creation(space, e).matrix;
    Matrix b = lstar;
    Matrix lpow = Matrix::Identity(space.dim(), space.dim());
    const int terms = std::min<int>(static_cast<int>(k.size()), n_max);
    for (int i = 0; i < terms; ++i) {  // k_{i+1} l^i; higher terms cannot reach order n_max
        b += k[static_cast<size_t>(i)] * lpow;
        lpow = l * lpow;
    }
    op = FockOperator{&space, std::move(b)};
}

std::vector<double> canonical_moments(const std::vector<double>& k, int n_max, int depth_cap) {
    CanonicalVariable var(k, n_max, depth_cap);
    std::vector<double> out;
    out.reserve(static_cast<size_t>(n_max));
    Vector state = var.space.vacuum();
    for (int n = 1; n <= n_max; ++n) {
        state = var.op.matrix * state;
        out.push_back(state(0).real());
    }
    return out;
}

}  // namespace freecalc
