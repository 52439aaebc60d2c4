#include "qhelix/generators.hpp"

#include "qhelix/errors.hpp"
#include "qhelix/polycore.hpp"

namespace qhelix {

RationalSampler::RationalSampler(std::uint64_t seed, HeightBounds bounds) : engine_(seed), bounds_(bounds) {
    if (bounds_.max_numerator < 1 || bounds_.max_denominator < 1)
        throw PreconditionError("height bounds must be positive");
}

long RationalSampler::integer(long lo, long hi) {
    const auto span = static_cast<std::uint64_t>(hi - lo) + 1;
    return lo + static_cast<long>(engine_() % span);
}

Rat RationalSampler::rational() {
    const long n = integer(-bounds_.max_numerator, bounds_.max_numerator);
    const long d = integer(1, bounds_.max_denominator);
    return Rat(n, d);
}

Rat RationalSampler::nonzero_rational() {
    for (;;) {
        Rat r = rational();
        if (!r.is_zero()) return r;
    }
}

GaussRat RationalSampler::gauss() {
    Rat re = rational();
    return {std::move(re), rational()};
}

GaussRat RationalSampler::nonzero_gauss() {
    for (;;) {
        GaussRat z = gauss();
        if (!z.is_zero()) return z;
    }
}

Quaternion RationalSampler::quaternion() {
    Rat w = rational();
    Rat x = rational();
    Rat y = rational();
    return {std::move(w), std::move(x), std::move(y), rational()};
}

std::uint64_t derive_seed(std::uint64_t base, std::uint64_t index) {
    std::uint64_t z = base + 0x9e3779b97f4a7c15ULL * (index + 1);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

HopfPair monotone_quintic(const MonotoneParams& p) {
    if (p.lead1.is_zero() || p.lead2.is_zero()) throw DegenerateInput("monotone generator: zero leading constant");
    if (p.root1 == p.root2) throw DegenerateInput("monotone generator: proportional pair (W = 0)");
    const auto linear = [](const GaussRat& r) { return GaussPoly{-r, GaussRat(1)}; };
    const GaussPoly shared = linear(p.shared_root);
    return {shared * linear(p.root1) * p.lead1, shared * linear(p.root2) * p.lead2};
}

HopfPair generate_monotone_quintic(std::uint64_t seed, HeightBounds bounds) {
    RationalSampler rng(seed, bounds);
    for (;;) {
        MonotoneParams p{rng.gauss(), rng.gauss(), rng.gauss(), rng.nonzero_gauss(), rng.nonzero_gauss()};
        if (p.root1 == p.root2) continue;
        return monotone_quintic(p);
    }
}

QuaternionPolynomial general_quintic(const GeneralParams& p) {
    const Quaternion a1 = p.a0 * p.c0 + p.a2 * p.c2;
    QuaternionPolynomial a{p.a0, a1, p.a2};
    if (a.is_zero()) throw DegenerateInput("general generator: A = 0");
    const HopfPair h = hopf_from_quaternion(a);
    if (wronskian(h.z1, h.z2).is_zero()) throw DegenerateInput("general generator: W = 0");
    return a;
}

QuaternionPolynomial generate_general_quintic(std::uint64_t seed, HeightBounds bounds) {
    RationalSampler rng(seed, bounds);
    for (;;) {
        GeneralParams p{rng.quaternion(), rng.quaternion(), rng.rational(), rng.rational()};
        try {
            return general_quintic(p);
        } catch (const DegenerateInput&) {
            continue;
        }
    }
}

QuaternionPolynomial random_quaternion_polynomial(RationalSampler& rng, std::size_t degree) {
    std::vector<Quaternion> c(degree + 1);
    for (auto& q : c) q = rng.quaternion();
    while (c.back().is_zero()) c.back() = rng.quaternion();
    return QuaternionPolynomial(std::move(c));
}

}  // namespace qhelix
