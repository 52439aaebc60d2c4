#pragma once

#include <array>
#include <span>
#include <string>

#include "qhelix/poly.hpp"
#include "qhelix/polycore.hpp"
#include "qhelix/rat.hpp"

namespace qhelix {

/// w + x·i + y·j + z·k with rational parts.
struct Quaternion {
    Rat w, x, y, z;

    Quaternion() = default;
    Quaternion(Rat scalar) : w(std::move(scalar)) {}  // NOLINT(google-explicit-constructor)
    Quaternion(Rat w_, Rat x_, Rat y_, Rat z_)
        : w(std::move(w_)), x(std::move(x_)), y(std::move(y_)), z(std::move(z_)) {}

    bool is_zero() const noexcept { return w.is_zero() && x.is_zero() && y.is_zero() && z.is_zero(); }
    Quaternion conj() const { return {w, -x, -y, -z}; }
    Rat norm() const { return w * w + x * x + y * y + z * z; }
    std::string str() const;

    Quaternion operator-() const { return {-w, -x, -y, -z}; }
    friend Quaternion operator+(const Quaternion& a, const Quaternion& b) {
        return {a.w + b.w, a.x + b.x, a.y + b.y, a.z + b.z};
    }
    friend Quaternion operator-(const Quaternion& a, const Quaternion& b) {
        return {a.w - b.w, a.x - b.x, a.y - b.y, a.z - b.z};
    }
    /// Hamilton product (non-commutative).
    friend Quaternion operator*(const Quaternion& a, const Quaternion& b);
    friend Quaternion operator*(const Quaternion& q, const Rat& s) { return {q.w * s, q.x * s, q.y * s, q.z * s}; }
    friend Quaternion operator*(const Rat& s, const Quaternion& q) { return q * s; }
    friend bool operator==(const Quaternion&, const Quaternion&) = default;
};

/// A(t) = Σ Aₖ tᵏ in power basis.
using QuaternionPolynomial = Poly<Quaternion>;

/// u, v, p, q of A(t) = u + i·v + j·p + k·q.
struct QuaternionComponents {
    RatPoly u, v, p, q;
};

QuaternionComponents components(const QuaternionPolynomial& a);
QuaternionPolynomial from_components(const RatPoly& u, const RatPoly& v, const RatPoly& p, const RatPoly& q);

/// (z₁, z₂) = (u + i·v, q + i·p). Never both zero.
struct HopfPair {
    GaussPoly z1;
    GaussPoly z2;

    HopfPair(GaussPoly first, GaussPoly second);
    friend bool operator==(const HopfPair&, const HopfPair&) = default;
};

using PolyVec3 = std::array<RatPoly, 3>;
using Point3 = std::array<Rat, 3>;

/// α′ = (x′, y′, z′). Not identically zero.
struct Hodograph {
    RatPoly dx, dy, dz;

    Hodograph(RatPoly x, RatPoly y, RatPoly z);
    PolyVec3 as_vector() const { return {dx, dy, dz}; }
    friend bool operator==(const Hodograph&, const Hodograph&) = default;
};

struct PolynomialCurve {
    RatPoly x, y, z;

    /// Throws DegenerateInput for a constant curve.
    Hodograph hodograph() const { return {x.derivative(), y.derivative(), z.derivative()}; }
    Point3 evaluate(const Rat& t) const { return {x.evaluate(t), y.evaluate(t), z.evaluate(t)}; }
    friend bool operator==(const PolynomialCurve&, const PolynomialCurve&) = default;
};

/// x′ = u²+v²−p²−q², y′ = 2(uq+vp), z′ = 2(vq−up).
Hodograph hodograph_from_quaternion(const QuaternionPolynomial& a);

HopfPair hopf_from_quaternion(const QuaternionPolynomial& a);
QuaternionPolynomial quaternion_from_hopf(const HopfPair& h);

/// H(z₁, z₂) = (|z₁|²−|z₂|², 2 z₁ z̄₂), with y′ + i z′ = 2 z₁ z̄₂.
Hodograph hodograph_from_hopf(const HopfPair& h);

/// Bernstein control quaternions (1 to 3 of them) to power basis.
QuaternionPolynomial bezier_to_power(std::span<const Quaternion> controls);

/// Exact antiderivative of the hodograph passing through `origin` at t = 0.
PolynomialCurve integrate(const Hodograph& h, const Point3& origin = {});

/// σ = u²+v²+p²+q² = |z₁|²+|z₂|².
RatPoly sigma_poly(const QuaternionPolynomial& a);
RatPoly sigma_poly(const HopfPair& h);

}  // namespace qhelix
