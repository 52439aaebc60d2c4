#pragma once

#include <cstdint>
#include <random>

#include "qhelix/curveforms.hpp"

namespace qhelix {

/// Bounds on sampled rationals: numerators in [-max_numerator, max_numerator],
/// denominators in [1, max_denominator].
struct HeightBounds {
    long max_numerator = 50;
    long max_denominator = 50;
};

/// Seeded source of bounded-height rationals. Deterministic across platforms:
/// only raw mt19937_64 output is consumed.
class RationalSampler {
  public:
    explicit RationalSampler(std::uint64_t seed, HeightBounds bounds = {});

    long integer(long lo, long hi);
    Rat rational();
    Rat nonzero_rational();
    GaussRat gauss();
    GaussRat nonzero_gauss();
    Quaternion quaternion();

  private:
    std::mt19937_64 engine_;
    HeightBounds bounds_;
};

/// splitmix64 mix of (base, index); per-item seeds for reproducible batches.
std::uint64_t derive_seed(std::uint64_t base, std::uint64_t index);

/// z₁ = a(t−r)(t−r₁), z₂ = b(t−r)(t−r₂).
struct MonotoneParams {
    GaussRat shared_root;
    GaussRat root1;
    GaussRat root2;
    GaussRat lead1{1};
    GaussRat lead2{1};
};

/// Throws DegenerateInput when the pair is proportional (W ≡ 0) or a lead is 0.
HopfPair monotone_quintic(const MonotoneParams& p);
HopfPair generate_monotone_quintic(std::uint64_t seed, HeightBounds bounds = {});

/// A(t) = A₀ + (c0·A₀ + c2·A₂)t + A₂t².
struct GeneralParams {
    Quaternion a0;
    Quaternion a2;
    Rat c0;
    Rat c2;
};

/// Throws DegenerateInput when A ≡ 0 or W ≡ 0.
QuaternionPolynomial general_quintic(const GeneralParams& p);
QuaternionPolynomial generate_general_quintic(std::uint64_t seed, HeightBounds bounds = {});

/// Independent random coefficients A₀ … A_degree (leading one nonzero).
QuaternionPolynomial random_quaternion_polynomial(RationalSampler& rng, std::size_t degree);

}  // namespace qhelix
