#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "qhelix/poly.hpp"
#include "qhelix/rat.hpp"

namespace qhelix {

// ---------------------------------------------------------------------------
// Real/complex bridging

RatPoly real_part(const GaussPoly& p);
RatPoly imag_part(const GaussPoly& p);
GaussPoly to_gauss(const RatPoly& re, const RatPoly& im = {});
GaussPoly conj(const GaussPoly& p);
/// |p(t)|² for real t, i.e. re² + im².
RatPoly norm_squared(const GaussPoly& p);

/// Term-wise antiderivative with zero constant term.
RatPoly antiderivative(const RatPoly& p);

/// Integer primitive part: content-free integer coefficients, positive leading
/// coefficient. Zero maps to zero.
RatPoly primitive_part(const RatPoly& p);

// ---------------------------------------------------------------------------
// Square-free decomposition

struct SquarefreeFactor {
    RatPoly factor;  // monic, square-free
    unsigned multiplicity;

    friend bool operator==(const SquarefreeFactor&, const SquarefreeFactor&) = default;
};

struct SquarefreeDecomposition {
    Rat content;  // leading coefficient of the input
    std::vector<SquarefreeFactor> factors;

    RatPoly expand() const;
};

/// Yun's algorithm. p = content · ∏ factorᵢ^multiplicityᵢ with pairwise coprime,
/// square-free, monic factors, at most one per multiplicity, sorted by
/// multiplicity. Throws DegenerateInput on the zero polynomial.
SquarefreeDecomposition squarefree_decompose(const RatPoly& p);

// ---------------------------------------------------------------------------
// Real polynomial square roots

/// The real polynomial √scale · body(t).
///
/// Canonical form: scale > 0 and body monic. The zero polynomial is
/// represented as scale 1, body 0.
struct ScaledSqrt {
    Rat scale{1};
    RatPoly body;

    /// scale · body², i.e. the square this root was taken from.
    RatPoly squared() const { return body * body * scale; }
    /// body·√scale when √scale is rational.
    std::optional<RatPoly> as_rational() const;
    double evaluate(double t) const;
    bool is_zero() const { return body.is_zero(); }

    friend bool operator==(const ScaledSqrt&, const ScaledSqrt&) = default;
};

/// √p when p is the square of a real polynomial: every square-free multiplicity
/// even and a positive leading coefficient. Returns nullopt otherwise.
std::optional<ScaledSqrt> perfect_square_root(const RatPoly& p);

// ---------------------------------------------------------------------------
// Complex polynomial helpers

/// z′₁z₂ − z₁z′₂.
GaussPoly wronskian(const GaussPoly& z1, const GaussPoly& z2);

/// b² − 4ac of a quadratic; throws PreconditionError unless deg p == 2.
GaussRat quadratic_discriminant(const GaussPoly& p);

// ---------------------------------------------------------------------------
// Rational functions

/// num/den reduced to lowest terms with a monic denominator.
class RationalFunction {
  public:
    RationalFunction() : den_(RatPoly::constant(Rat(1))) {}
    RationalFunction(const RatPoly& num);  // NOLINT(google-explicit-constructor)
    RationalFunction(const RatPoly& num, const RatPoly& den);

    const RatPoly& num() const noexcept { return num_; }
    const RatPoly& den() const noexcept { return den_; }

    bool is_zero() const noexcept { return num_.is_zero(); }
    bool is_constant() const noexcept { return num_.is_constant() && den_.is_constant(); }
    /// The constant value when the function is constant.
    std::optional<Rat> constant_value() const;
    /// nullopt at a pole.
    std::optional<Rat> evaluate(const Rat& t) const;

    RationalFunction operator-() const { return {-num_, den_}; }
    friend RationalFunction operator+(const RationalFunction& a, const RationalFunction& b);
    friend RationalFunction operator-(const RationalFunction& a, const RationalFunction& b);
    friend RationalFunction operator*(const RationalFunction& a, const RationalFunction& b);
    friend RationalFunction operator/(const RationalFunction& a, const RationalFunction& b);
    friend bool operator==(const RationalFunction&, const RationalFunction&) = default;

  private:
    RatPoly num_;
    RatPoly den_;
};

// ---------------------------------------------------------------------------
// Canonical text rendering: descending powers, explicit signs, p/q rationals.

std::string to_string(const Rat& r);
std::string to_string(const GaussRat& z);
std::string to_string(const RatPoly& p, const std::string& var = "t");
std::string to_string(const GaussPoly& p, const std::string& var = "t");
std::string to_string(const ScaledSqrt& s, const std::string& var = "t");
std::string to_string(const RationalFunction& f, const std::string& var = "t");

}  // namespace qhelix
