#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "qhelix/analysis.hpp"
#include "qhelix/curveforms.hpp"
#include "qhelix/polycore.hpp"

namespace qhelix {

enum class DecompositionCase {
    OmegaConstant,  // W = ω·z² with ω constant, z linear: W has a double root
    ZConstant,      // W = ω·z² with z constant: W is a complex multiple of a real polynomial
    BothConstant,   // W is a nonzero constant
    Degenerate,     // no decomposition: the curve is not 2-PH
};

std::string_view to_string(DecompositionCase c);
std::optional<DecompositionCase> decomposition_case_from_string(std::string_view s);

/// W = omega · z_squared, with omega an integer-primitive real polynomial with
/// positive leading coefficient. z itself is never formed; z_squared is a
/// constant or a constant times the square of a linear factor. For the
/// Degenerate case omega and z_squared are empty.
struct WronskianDecomposition {
    RatPoly omega;
    GaussPoly z_squared;
    DecompositionCase kind = DecompositionCase::Degenerate;

    friend bool operator==(const WronskianDecomposition&, const WronskianDecomposition&) = default;
};

/// Casework on W = z′₁z₂ − z₁z′₂ for a quintic (deg z₁, deg z₂ ≤ 2). When W is
/// both real-proportional and a square, the square (OmegaConstant) reading wins.
/// Throws PreconditionError on higher degrees and DegenerateInput when W ≡ 0.
WronskianDecomposition decompose_wronskian_quintic(const HopfPair& h);

/// The non-constant monic gcd(z₁, z₂), if any.
std::optional<GaussPoly> monotone_test(const HopfPair& h);

struct QuaternionDependence {
    Rat c0;
    Rat c2;
    bool degenerate = false;  // A₀, A₂ themselves linearly dependent

    friend bool operator==(const QuaternionDependence&, const QuaternionDependence&) = default;
};

/// Solves A₁ = c0·A₀ + c2·A₂ over the rationals.
std::optional<QuaternionDependence> quaternion_dependence(const Quaternion& a0, const Quaternion& a1,
                                                          const Quaternion& a2);

/// Branch-free parameters of the z-constant case. With X, Y the halved real and
/// imaginary t-coefficients of W: tan 2θ = Y/X and m₁² = 4(X² + Y²). m₀ and m₂
/// are irrational in general; m₀·m₁ and m₂·m₁ are rational.
struct LemmaTwoParameters {
    std::optional<Rat> tan_two_theta;
    Rat m1_squared;
    Rat m0_times_m1;
    Rat m2_times_m1;

    /// Coefficients of A₀ and A₂ in A₁, when m₁ ≠ 0: c0 = 2m₂/m₁, c2 = 2m₀/m₁.
    std::optional<Rat> c0() const;
    std::optional<Rat> c2() const;
};

/// Throws UnsupportedDegree when deg A > 2.
LemmaTwoParameters lemma_two_parameters(const QuaternionPolynomial& a);

enum class QuinticKind { MonotoneHelix, GeneralHelix, NotHelix, Degenerate };

std::string_view to_string(QuinticKind k);
std::optional<QuinticKind> quintic_kind_from_string(std::string_view s);

struct QuinticClass {
    QuinticKind kind = QuinticKind::Degenerate;
    std::optional<QuaternionDependence> dependence;
    std::optional<GaussPoly> shared_factor;
    std::string reason;  // set for Degenerate

    friend bool operator==(const QuinticClass&, const QuinticClass&) = default;
};

struct ClassificationReport {
    std::optional<ScaledSqrt> ph;
    std::optional<TwoPhNorms> two_ph;
    GaussPoly wronskian;
    std::optional<WronskianDecomposition> decomposition;
    QuinticClass quintic_class;
    HelixVerdict lancret;
    std::vector<std::string> notes;

    friend bool operator==(const ClassificationReport&, const ClassificationReport&) = default;
};

/// Algebraic casework and the independent Lancret test, cross-checked: 2-PH must
/// coincide with a Helix (or Planar) Lancret verdict. A disagreement throws
/// InternalInconsistency. Requires quaternion degree ≤ 2.
ClassificationReport classify_quintic(const QuaternionPolynomial& a);
ClassificationReport classify_quintic(const HopfPair& h);

}  // namespace qhelix
