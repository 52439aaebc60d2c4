#pragma once

#include <array>
#include <optional>
#include <string_view>

#include "qhelix/curveforms.hpp"
#include "qhelix/polycore.hpp"

namespace qhelix {

RatPoly dot(const PolyVec3& a, const PolyVec3& b);
PolyVec3 cross(const PolyVec3& a, const PolyVec3& b);
RatPoly det3(const PolyVec3& a, const PolyVec3& b, const PolyVec3& c);

/// ρ² = |α′ ∧ α″|² and, when it is a real-polynomial square, ρ itself.
struct CrossNorm {
    RatPoly rho_squared;
    std::optional<ScaledSqrt> rho;

    friend bool operator==(const CrossNorm&, const CrossNorm&) = default;
};

CrossNorm cross_norm(const Hodograph& h);

/// σ = ‖α′‖ when it is a polynomial.
std::optional<ScaledSqrt> is_ph(const Hodograph& h);

struct TwoPhNorms {
    ScaledSqrt sigma;
    ScaledSqrt rho;

    friend bool operator==(const TwoPhNorms&, const TwoPhNorms&) = default;
};

/// Both ‖α′‖ and ‖α′ ∧ α″‖ polynomial.
std::optional<TwoPhNorms> is_2ph(const Hodograph& h);

using RationalVec3 = std::array<RationalFunction, 3>;

RationalFunction dot(const RationalVec3& a, const RationalVec3& b);
RationalVec3 cross(const RationalVec3& a, const RationalVec3& b);

/// A unit vector field stored as components/√scale. The components are
/// rational functions and components·components = scale exactly. When the
/// underlying norm carries a rational-square scale it is absorbed, so scale is 1.
struct ScaledDirection {
    RationalVec3 components;
    Rat scale{1};

    friend bool operator==(const ScaledDirection&, const ScaledDirection&) = default;
};

struct FrenetFrame {
    ScaledDirection tangent;
    ScaledDirection binormal;
    ScaledDirection normal;  // binormal ∧ tangent

    /// Scale of the binormal (and, combined with the tangent's, of the normal).
    const Rat& frame_scale() const { return binormal.scale; }
    friend bool operator==(const FrenetFrame&, const FrenetFrame&) = default;
};

/// Throws NotRationalFrame for non-2-PH input, LineDegeneracy when ρ ≡ 0.
FrenetFrame frenet_frame(const Hodograph& h);

struct CurvatureData {
    RatPoly speed_squared;              // σ² = |α′|²
    std::optional<ScaledSqrt> sigma;    // present for PH curves
    CrossNorm cross;
    RatPoly torsion_numerator;          // det(α′, α″, α‴)
    RationalFunction curvature_squared; // κ² = ρ² / (σ²)³
    RationalFunction torsion;           // τ = det / ρ²
    RationalFunction lancret_ratio_squared;  // (τ/κ)² = det²(σ²)³ / (ρ²)³
};

/// Throws LineDegeneracy when ρ ≡ 0.
CurvatureData curvature_torsion(const Hodograph& h);

enum class HelixKind { Line, Planar, Helix, NotHelix };

std::string_view to_string(HelixKind k);
std::optional<HelixKind> helix_kind_from_string(std::string_view s);

struct HelixVerdict {
    HelixKind kind = HelixKind::NotHelix;
    std::optional<Rat> slope_squared;  // c² = cos² of the angle between tangent and axis
    std::optional<Point3> axis;        // integer coordinates, gcd 1, first nonzero positive

    friend bool operator==(const HelixVerdict&, const HelixVerdict&) = default;
};

/// Lancret test on the exact rational function (τ/κ)².
HelixVerdict is_helix(const Hodograph& h);

struct HelixAxis {
    Point3 axis;
    Rat slope_squared;
};

/// Axis of a helix (or the plane normal of a planar curve) from the Darboux
/// direction. Throws PreconditionError unless v.kind is Helix or Planar.
HelixAxis helix_axis(const Hodograph& h, const HelixVerdict& v);

}  // namespace qhelix
