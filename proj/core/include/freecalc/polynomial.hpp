#pragma once

#include <vector>

#include "freecalc/errors.hpp"
#include "freecalc/scalar.hpp"

namespace freecalc {

/// Dense univariate polynomial sum a_i x^i with exact arithmetic when S is
/// exact. Unlike FormalSeries there is no truncation: degrees grow as needed.
template <class S>
class Polynomial {
public:
    Polynomial() = default;
    Polynomial(std::vector<S> coeffs) : c_(std::move(coeffs)) { trim(); }
    static Polynomial constant(S value) { return Polynomial(std::vector<S>{std::move(value)}); }
    static Polynomial monomial(int degree, S coeff) {
        std::vector<S> c(static_cast<size_t>(degree) + 1, S{});
        c.back() = std::move(coeff);
        return Polynomial(std::move(c));
    }

    int degree() const { return static_cast<int>(c_.size()) - 1; }  // -1 for the zero polynomial
    bool is_zero() const { return c_.empty(); }
    S coeff(int i) const {
        return (i >= 0 && i < static_cast<int>(c_.size())) ? c_[static_cast<size_t>(i)] : S{};
    }
    const std::vector<S>& coefficients() const { return c_; }

    friend Polynomial operator+(const Polynomial& a, const Polynomial& b) {
        std::vector<S> c(std::max(a.c_.size(), b.c_.size()), S{});
        for (size_t i = 0; i < c.size(); ++i) c[i] = a.coeff(static_cast<int>(i)) + b.coeff(static_cast<int>(i));
        return Polynomial(std::move(c));
    }
    friend Polynomial operator-(const Polynomial& a, const Polynomial& b) {
        std::vector<S> c(std::max(a.c_.size(), b.c_.size()), S{});
        for (size_t i = 0; i < c.size(); ++i) c[i] = a.coeff(static_cast<int>(i)) - b.coeff(static_cast<int>(i));
        return Polynomial(std::move(c));
    }
    friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
        if (a.is_zero() || b.is_zero()) return Polynomial();
        std::vector<S> c(a.c_.size() + b.c_.size() - 1, S{});
        for (size_t i = 0; i < a.c_.size(); ++i)
            for (size_t j = 0; j < b.c_.size(); ++j) c[i + j] = c[i + j] + a.c_[i] * b.c_[j];
        return Polynomial(std::move(c));
    }
    friend Polynomial operator*(const S& s, const Polynomial& p) {
        std::vector<S> c = p.c_;
        for (auto& v : c) v = s * v;
        return Polynomial(std::move(c));
    }
    bool operator==(const Polynomial& other) const = default;

    template <class T>
    T evaluate(const T& x) const {
        T acc{};
        for (size_t i = c_.size(); i-- > 0;) acc = acc * x + T(c_[i]);
        return acc;
    }

    Polynomial derivative() const {
        if (c_.size() <= 1) return Polynomial();
        std::vector<S> c(c_.size() - 1, S{});
        for (size_t i = 1; i < c_.size(); ++i) c[i - 1] = S(static_cast<int>(i)) * c_[i];
        return Polynomial(std::move(c));
    }

    /// Antiderivative with zero constant term; requires exact division by i+1.
    Polynomial antiderivative() const {
        std::vector<S> c(c_.size() + 1, S{});
        for (size_t i = 0; i < c_.size(); ++i) c[i + 1] = c_[i] / S(static_cast<int>(i) + 1);
        return Polynomial(std::move(c));
    }

private:
    void trim() {
        while (!c_.empty() && c_.back() == S{}) c_.pop_back();
    }
    std::vector<S> c_;
};

}  // namespace freecalc
