#include "qhelix/analysis.hpp"

#include "qhelix/errors.hpp"

namespace qhelix {

RatPoly dot(const PolyVec3& a, const PolyVec3& b) { return a[0] * b[0] + a[1] * b[1] + a[2] * b[2]; }

PolyVec3 cross(const PolyVec3& a, const PolyVec3& b) {
    return {a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0]};
}

RatPoly det3(const PolyVec3& a, const PolyVec3& b, const PolyVec3& c) { return dot(a, cross(b, c)); }

RationalFunction dot(const RationalVec3& a, const RationalVec3& b) {
    return a[0] * b[0] + a[1] * b[1] + a[2] * b[2];
}

RationalVec3 cross(const RationalVec3& a, const RationalVec3& b) {
    return {a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0]};
}

namespace {

PolyVec3 derivative(const PolyVec3& v) { return {v[0].derivative(), v[1].derivative(), v[2].derivative()}; }

bool is_zero(const PolyVec3& v) { return v[0].is_zero() && v[1].is_zero() && v[2].is_zero(); }

// The pieces of the Frenet apparatus that never need a square root.
struct Derivatives {
    PolyVec3 d1, d2, d3;
    PolyVec3 d1xd2;
    RatPoly speed_squared;
    RatPoly rho_squared;
};

Derivatives derivatives_of(const Hodograph& h) {
    Derivatives d;
    d.d1 = h.as_vector();
    d.d2 = derivative(d.d1);
    d.d3 = derivative(d.d2);
    d.d1xd2 = cross(d.d1, d.d2);
    d.speed_squared = dot(d.d1, d.d1);
    d.rho_squared = dot(d.d1xd2, d.d1xd2);
    return d;
}

ScaledDirection make_direction(const PolyVec3& v, const ScaledSqrt& norm) {
    ScaledDirection out;
    RatPoly den = norm.body;
    if (const auto r = rational_sqrt(norm.scale)) {
        den = den * *r;
        out.scale = Rat(1);
    } else {
        out.scale = norm.scale;
    }
    for (std::size_t i = 0; i < 3; ++i) out.components[i] = RationalFunction(v[i], den);
    return out;
}

Point3 integer_cleared(const std::array<Rat, 3>& v) {
    mpz_class den_lcm = 1;
    mpz_class num_gcd = 0;
    for (const auto& c : v) {
        const mpz_class d = c.denominator();
        mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), d.get_mpz_t());
    }
    for (const auto& c : v) {
        const mpz_class n = c.numerator() * (den_lcm / c.denominator());
        mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), n.get_mpz_t());
    }
    Rat factor(den_lcm, num_gcd);
    for (const auto& c : v) {
        if (c.is_zero()) continue;
        if (c.sign() < 0) factor = -factor;
        break;
    }
    return {v[0] * factor, v[1] * factor, v[2] * factor};
}

// num/den is constant iff num = λ·den; same verdict as reducing first.
bool proportional(const RatPoly& num, const RatPoly& den) {
    if (num.size() != den.size()) return false;
    return num == den * (num.leading() / den.leading());
}

// Axis from V = det·σ²·α′ + ρ²·(α′∧α″) = σ³ρ²·(τ t + κ b), which is parallel
// to the fixed axis for helices and to the plane normal for planar curves.
HelixAxis darboux_axis(const Derivatives& d, const RatPoly& det) {
    PolyVec3 v;
    for (std::size_t i = 0; i < 3; ++i) v[i] = det * d.speed_squared * d.d1[i] + d.rho_squared * d.d1xd2[i];
    if (is_zero(v)) throw InternalInconsistency("Darboux direction vanishes identically");

    RatPoly g;
    for (const auto& c : v)
        if (!c.is_zero()) g = g.is_zero() ? monic(c) : gcd(g, c);

    std::array<Rat, 3> dir;
    for (std::size_t i = 0; i < 3; ++i) {
        auto [q, r] = divmod(v[i], g);
        if (!r.is_zero() || !q.is_constant())
            throw InternalInconsistency("Darboux direction is not constant for a Lancret-constant curve");
        dir[i] = q.coeff(0);
    }
    HelixAxis out{integer_cleared(dir), Rat(0)};

    PolyVec3 axis;
    for (std::size_t i = 0; i < 3; ++i) axis[i] = RatPoly::constant(out.axis[i]);
    const RatPoly axis_norm2 = dot(axis, axis);
    const RatPoly along_tangent = dot(axis, d.d1);
    const RationalFunction c2(along_tangent * along_tangent, axis_norm2 * d.speed_squared);
    const auto slope = c2.constant_value();
    if (!slope) throw InternalInconsistency("tangent makes a non-constant angle with the extracted axis");
    out.slope_squared = *slope;

    const RatPoly along_binormal = dot(axis, d.d1xd2);
    if (along_binormal * along_binormal != axis_norm2 * d.rho_squared * (Rat(1) - *slope))
        throw InternalInconsistency("binormal makes a non-constant angle with the extracted axis");
    return out;
}

}  // namespace

CrossNorm cross_norm(const Hodograph& h) {
    const PolyVec3 d1 = h.as_vector();
    const PolyVec3 c = cross(d1, derivative(d1));
    CrossNorm out{dot(c, c), std::nullopt};
    out.rho = perfect_square_root(out.rho_squared);
    return out;
}

std::optional<ScaledSqrt> is_ph(const Hodograph& h) {
    const PolyVec3 d1 = h.as_vector();
    return perfect_square_root(dot(d1, d1));
}

std::optional<TwoPhNorms> is_2ph(const Hodograph& h) {
    auto sigma = is_ph(h);
    if (!sigma) return std::nullopt;
    auto rho = cross_norm(h).rho;
    if (!rho) return std::nullopt;
    return TwoPhNorms{std::move(*sigma), std::move(*rho)};
}

FrenetFrame frenet_frame(const Hodograph& h) {
    const Derivatives d = derivatives_of(h);
    if (d.rho_squared.is_zero()) throw LineDegeneracy("Frenet frame of a straight line is undefined");
    const auto norms = is_2ph(h);
    if (!norms) throw NotRationalFrame("curve is not 2-PH; its Frenet frame is not rational");

    FrenetFrame f;
    f.tangent = make_direction(d.d1, norms->sigma);
    f.binormal = make_direction(d.d1xd2, norms->rho);
    f.normal.components = cross(f.binormal.components, f.tangent.components);
    f.normal.scale = f.binormal.scale * f.tangent.scale;
    if (const auto r = rational_sqrt(f.normal.scale); r && *r != Rat(1)) {
        const RationalFunction inv(RatPoly::constant(Rat(1) / *r));
        for (auto& c : f.normal.components) c = c * inv;
        f.normal.scale = Rat(1);
    }
    return f;
}

CurvatureData curvature_torsion(const Hodograph& h) {
    const Derivatives d = derivatives_of(h);
    if (d.rho_squared.is_zero()) throw LineDegeneracy("curvature vanishes identically (straight line)");
    const RatPoly det = dot(d.d1, cross(d.d2, d.d3));
    const RatPoly s3 = pow(d.speed_squared, 3);
    const RatPoly r3 = pow(d.rho_squared, 3);
    return CurvatureData{
        d.speed_squared,
        perfect_square_root(d.speed_squared),
        CrossNorm{d.rho_squared, perfect_square_root(d.rho_squared)},
        det,
        RationalFunction(d.rho_squared, s3),
        RationalFunction(det, d.rho_squared),
        RationalFunction(det * det * s3, r3),
    };
}

std::string_view to_string(HelixKind k) {
    switch (k) {
        case HelixKind::Line: return "Line";
        case HelixKind::Planar: return "Planar";
        case HelixKind::Helix: return "Helix";
        case HelixKind::NotHelix: return "NotHelix";
    }
    return "?";
}

std::optional<HelixKind> helix_kind_from_string(std::string_view s) {
    for (auto k : {HelixKind::Line, HelixKind::Planar, HelixKind::Helix, HelixKind::NotHelix})
        if (to_string(k) == s) return k;
    return std::nullopt;
}

HelixVerdict is_helix(const Hodograph& h) {
    const Derivatives d = derivatives_of(h);
    if (d.rho_squared.is_zero()) return {HelixKind::Line, std::nullopt, std::nullopt};

    const RatPoly det = dot(d.d1, cross(d.d2, d.d3));
    HelixKind kind;
    if (det.is_zero()) {
        kind = HelixKind::Planar;
    } else {
        // (τ/κ)² constant ⇒ τ/κ constant: det·σ³ = ±λρ³ with λ ≠ 0, and the sign
        // cannot flip where ρ > 0 because the left side would have to vanish there.
        kind = proportional(det * det * pow(d.speed_squared, 3), pow(d.rho_squared, 3)) ? HelixKind::Helix
                                                                                        : HelixKind::NotHelix;
    }
    if (kind == HelixKind::NotHelix) return {kind, std::nullopt, std::nullopt};
    auto axis = darboux_axis(d, det);
    return {kind, axis.slope_squared, axis.axis};
}

HelixAxis helix_axis(const Hodograph& h, const HelixVerdict& v) {
    if (v.kind != HelixKind::Helix && v.kind != HelixKind::Planar)
        throw PreconditionError("helix axis requested for a " + std::string(to_string(v.kind)) + " verdict");
    const Derivatives d = derivatives_of(h);
    if (d.rho_squared.is_zero()) throw PreconditionError("helix axis requested for a straight line");
    return darboux_axis(d, dot(d.d1, cross(d.d2, d.d3)));
}

}  // namespace qhelix
