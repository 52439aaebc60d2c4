#pragma once

#include <gmpxx.h>

#include <compare>
#include <concepts>
#include <optional>
#include <string>
#include <string_view>

namespace qhelix {

/// Exact rational number, always in lowest terms with a positive denominator.
class Rat {
  public:
    Rat() = default;
    template <std::integral I>
    Rat(I v) : v_(static_cast<long>(v)) {}  // NOLINT(google-explicit-constructor)
    Rat(long num, long den);
    explicit Rat(mpq_class v);
    Rat(const mpz_class& num, const mpz_class& den);

    /// Parses "p", "-p", "p/q". Throws ParseError.
    static Rat parse(std::string_view text);

    const mpq_class& value() const noexcept { return v_; }
    mpz_class numerator() const { return v_.get_num(); }
    mpz_class denominator() const { return v_.get_den(); }

    bool is_zero() const noexcept { return sgn(v_) == 0; }
    bool is_integer() const { return v_.get_den() == 1; }
    int sign() const noexcept { return sgn(v_); }
    double to_double() const { return v_.get_d(); }
    std::string str() const { return v_.get_str(); }

    Rat operator-() const { return Rat(mpq_class(-v_)); }
    Rat& operator+=(const Rat& o);
    Rat& operator-=(const Rat& o);
    Rat& operator*=(const Rat& o);
    Rat& operator/=(const Rat& o);

    friend Rat operator+(Rat a, const Rat& b) { return a += b; }
    friend Rat operator-(Rat a, const Rat& b) { return a -= b; }
    friend Rat operator*(Rat a, const Rat& b) { return a *= b; }
    friend Rat operator/(Rat a, const Rat& b) { return a /= b; }

    friend bool operator==(const Rat& a, const Rat& b) { return cmp(a.v_, b.v_) == 0; }
    friend std::strong_ordering operator<=>(const Rat& a, const Rat& b) {
        const int c = cmp(a.v_, b.v_);
        return c < 0 ? std::strong_ordering::less
                     : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
    }

  private:
    mpq_class v_;
};

Rat abs(const Rat& r);

/// Exact square root when r is the square of a rational.
std::optional<Rat> rational_sqrt(const Rat& r);

/// Gaussian rational re + i·im.
struct GaussRat {
    Rat re;
    Rat im;

    GaussRat() = default;
    GaussRat(Rat real) : re(std::move(real)) {}  // NOLINT(google-explicit-constructor)
    template <std::integral I>
    GaussRat(I real) : re(real) {}  // NOLINT(google-explicit-constructor)
    GaussRat(Rat real, Rat imag) : re(std::move(real)), im(std::move(imag)) {}

    bool is_zero() const noexcept { return re.is_zero() && im.is_zero(); }
    bool is_real() const noexcept { return im.is_zero(); }
    GaussRat conj() const { return {re, -im}; }
    Rat norm() const { return re * re + im * im; }
    std::string str() const;

    GaussRat operator-() const { return {-re, -im}; }
    GaussRat& operator+=(const GaussRat& o);
    GaussRat& operator-=(const GaussRat& o);
    GaussRat& operator*=(const GaussRat& o);
    GaussRat& operator/=(const GaussRat& o);

    friend GaussRat operator+(GaussRat a, const GaussRat& b) { return a += b; }
    friend GaussRat operator-(GaussRat a, const GaussRat& b) { return a -= b; }
    friend GaussRat operator*(GaussRat a, const GaussRat& b) { return a *= b; }
    friend GaussRat operator/(GaussRat a, const GaussRat& b) { return a /= b; }
    friend bool operator==(const GaussRat&, const GaussRat&) = default;
};

}  // namespace qhelix
