#pragma once

#include <algorithm>
#include <cstddef>
#include <initializer_list>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "qhelix/errors.hpp"
#include "qhelix/rat.hpp"

#include <type_traits>

namespace qhelix {

template <class K>
concept Coefficient = std::regular<K> && requires(const K& a, const K& b) {
    { a + b } -> std::convertible_to<K>;
    { a - b } -> std::convertible_to<K>;
    { a * b } -> std::convertible_to<K>;
    { -a } -> std::convertible_to<K>;
    { a.is_zero() } -> std::convertible_to<bool>;
};

template <class K>
concept FieldCoefficient = Coefficient<K> && requires(const K& a, const K& b) {
    { a / b } -> std::convertible_to<K>;
};

template <Coefficient K>
class Poly;

namespace detail {
/// Product of rational-coefficient polynomials over a common denominator.
Poly<Rat> multiply(const Poly<Rat>& a, const Poly<Rat>& b);
}  // namespace detail

/// Dense univariate polynomial in power basis; index i holds the t^i coefficient.
///
/// Trailing zero coefficients are stripped on every construction, so the zero
/// polynomial has no coefficients and `degree()` returns std::nullopt for it.
template <Coefficient K>
class Poly {
  public:
    Poly() = default;
    Poly(std::vector<K> coeffs) : c_(std::move(coeffs)) { normalize(); }  // NOLINT
    Poly(std::initializer_list<K> coeffs) : c_(coeffs) { normalize(); }

    static Poly constant(K c) { return Poly(std::vector<K>{std::move(c)}); }
    static Poly monomial(K c, std::size_t power) {
        std::vector<K> v(power + 1);
        v[power] = std::move(c);
        return Poly(std::move(v));
    }
    /// The polynomial t.
    static Poly identity() { return monomial(K(Rat(1)), 1); }

    std::span<const K> coeffs() const noexcept { return c_; }
    std::size_t size() const noexcept { return c_.size(); }
    bool is_zero() const noexcept { return c_.empty(); }
    bool is_constant() const noexcept { return c_.size() <= 1; }
    std::optional<std::size_t> degree() const noexcept {
        if (c_.empty()) return std::nullopt;
        return c_.size() - 1;
    }
    K coeff(std::size_t i) const { return i < c_.size() ? c_[i] : K{}; }
    /// Leading coefficient; zero for the zero polynomial.
    K leading() const { return c_.empty() ? K{} : c_.back(); }

    template <class F>
    auto map(F&& f) const {
        using R = std::decay_t<decltype(f(std::declval<const K&>()))>;
        std::vector<R> out;
        out.reserve(c_.size());
        for (const auto& c : c_) out.push_back(f(c));
        return Poly<R>(std::move(out));
    }

    Poly derivative() const {
        if (c_.size() <= 1) return {};
        std::vector<K> d(c_.size() - 1);
        for (std::size_t i = 1; i < c_.size(); ++i) d[i - 1] = c_[i] * K(Rat(static_cast<long>(i)));
        return Poly(std::move(d));
    }

    template <class X>
    K evaluate(const X& x) const {
        K acc{};
        for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
        return acc;
    }

    /// p(a·t + b).
    Poly compose_affine(const Rat& a, const Rat& b) const {
        const Poly inner{K(b), K(a)};
        Poly acc;
        for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * inner + Poly::constant(*it);
        return acc;
    }

    Poly operator-() const {
        std::vector<K> v(c_);
        for (auto& c : v) c = -c;
        return Poly(std::move(v));
    }

    friend Poly operator+(const Poly& a, const Poly& b) {
        std::vector<K> v(std::max(a.size(), b.size()));
        for (std::size_t i = 0; i < v.size(); ++i) v[i] = a.coeff(i) + b.coeff(i);
        return Poly(std::move(v));
    }
    friend Poly operator-(const Poly& a, const Poly& b) {
        std::vector<K> v(std::max(a.size(), b.size()));
        for (std::size_t i = 0; i < v.size(); ++i) v[i] = a.coeff(i) - b.coeff(i);
        return Poly(std::move(v));
    }
    friend Poly operator*(const Poly& a, const Poly& b) {
        if (a.is_zero() || b.is_zero()) return {};
        if constexpr (std::is_same_v<K, Rat>) {
            if (a.size() > 2 && b.size() > 2) return detail::multiply(a, b);
        }
        std::vector<K> v(a.size() + b.size() - 1);
        for (std::size_t i = 0; i < a.size(); ++i) {
            if (a.c_[i].is_zero()) continue;
            for (std::size_t j = 0; j < b.size(); ++j) v[i + j] = v[i + j] + a.c_[i] * b.c_[j];
        }
        return Poly(std::move(v));
    }
    friend Poly operator*(const Poly& p, const K& s) {
        std::vector<K> v(p.c_);
        for (auto& c : v) c = c * s;
        return Poly(std::move(v));
    }
    friend Poly operator*(const K& s, const Poly& p) {
        std::vector<K> v(p.c_);
        for (auto& c : v) c = s * c;
        return Poly(std::move(v));
    }
    Poly& operator+=(const Poly& o) { return *this = *this + o; }
    Poly& operator-=(const Poly& o) { return *this = *this - o; }
    Poly& operator*=(const Poly& o) { return *this = *this * o; }

    friend bool operator==(const Poly&, const Poly&) = default;

  private:
    void normalize() {
        while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
    }

    std::vector<K> c_;
};

using RatPoly = Poly<Rat>;
using GaussPoly = Poly<GaussRat>;

template <Coefficient K>
Poly<K> pow(const Poly<K>& p, unsigned n) {
    Poly<K> r = Poly<K>::constant(K(Rat(1)));
    for (unsigned i = 0; i < n; ++i) r *= p;
    return r;
}

template <FieldCoefficient K>
Poly<K> monic(const Poly<K>& p) {
    if (p.is_zero()) return p;
    const K inv = K(Rat(1)) / p.leading();
    return p * inv;
}

template <FieldCoefficient K>
struct DivMod {
    Poly<K> quotient;
    Poly<K> remainder;
};

/// Euclidean division; throws DegenerateInput on a zero divisor.
template <FieldCoefficient K>
DivMod<K> divmod(const Poly<K>& a, const Poly<K>& b) {
    if (b.is_zero()) throw DegenerateInput("polynomial division by zero");
    std::vector<K> r(a.coeffs().begin(), a.coeffs().end());
    const std::size_t db = b.size() - 1;
    if (r.size() <= db) return {Poly<K>{}, a};
    std::vector<K> q(r.size() - db);
    const K lead = b.leading();
    for (std::size_t k = r.size(); k-- > db;) {
        if (r[k].is_zero()) continue;
        const K f = r[k] / lead;
        q[k - db] = f;
        for (std::size_t j = 0; j <= db; ++j) r[k - db + j] = r[k - db + j] - f * b.coeffs()[j];
    }
    r.resize(db);
    return {Poly<K>(std::move(q)), Poly<K>(std::move(r))};
}

/// Division that must be exact; a nonzero remainder is an internal error.
template <FieldCoefficient K>
Poly<K> exact_divide(const Poly<K>& a, const Poly<K>& b) {
    auto [q, r] = divmod(a, b);
    if (!r.is_zero()) throw InternalInconsistency("polynomial division expected to be exact");
    return q;
}

template <FieldCoefficient K>
bool divides(const Poly<K>& d, const Poly<K>& a) {
    return divmod(a, d).remainder.is_zero();
}

/// Monic greatest common divisor. Both-zero input is degenerate.
template <FieldCoefficient K>
Poly<K> gcd(Poly<K> a, Poly<K> b) {
    if (a.is_zero() && b.is_zero()) throw DegenerateInput("gcd of two zero polynomials");
    a = monic(a);
    b = monic(b);
    while (!b.is_zero()) {
        Poly<K> r = monic(divmod(a, b).remainder);
        a = std::move(b);
        b = std::move(r);
    }
    return a;
}

/// Monic gcd over ℚ computed with an integer primitive remainder sequence,
/// which keeps coefficient growth in check. Preferred over the generic
/// template by overload resolution.
RatPoly gcd(const RatPoly& a, const RatPoly& b);

}  // namespace qhelix
