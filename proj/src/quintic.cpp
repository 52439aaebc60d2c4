#include "qhelix/quintic.hpp"

#include <array>

#include "qhelix/errors.hpp"

namespace qhelix {

std::string_view to_string(DecompositionCase c) {
    switch (c) {
        case DecompositionCase::OmegaConstant: return "OmegaConstant";
        case DecompositionCase::ZConstant: return "ZConstant";
        case DecompositionCase::BothConstant: return "BothConstant";
        case DecompositionCase::Degenerate: return "Degenerate";
    }
    return "?";
}

std::optional<DecompositionCase> decomposition_case_from_string(std::string_view s) {
    for (auto c : {DecompositionCase::OmegaConstant, DecompositionCase::ZConstant, DecompositionCase::BothConstant,
                   DecompositionCase::Degenerate})
        if (to_string(c) == s) return c;
    return std::nullopt;
}

std::string_view to_string(QuinticKind k) {
    switch (k) {
        case QuinticKind::MonotoneHelix: return "MonotoneHelix";
        case QuinticKind::GeneralHelix: return "GeneralHelix";
        case QuinticKind::NotHelix: return "NotHelix";
        case QuinticKind::Degenerate: return "Degenerate";
    }
    return "?";
}

std::optional<QuinticKind> quintic_kind_from_string(std::string_view s) {
    for (auto k : {QuinticKind::MonotoneHelix, QuinticKind::GeneralHelix, QuinticKind::NotHelix,
                   QuinticKind::Degenerate})
        if (to_string(k) == s) return k;
    return std::nullopt;
}

namespace {

void require_quintic_degrees(const HopfPair& h) {
    const auto small = [](const GaussPoly& z) { return z.size() <= 3; };
    if (!small(h.z1) || !small(h.z2))
        throw UnsupportedDegree("quintic classification needs deg z1, deg z2 <= 2");
}

// W / w for the first nonzero coefficient w, when that quotient is real.
std::optional<RatPoly> real_direction(const GaussPoly& w) {
    GaussRat pivot;
    for (const auto& c : w.coeffs())
        if (!c.is_zero()) {
            pivot = c;
            break;
        }
    std::vector<Rat> out;
    for (const auto& c : w.coeffs()) {
        const GaussRat r = c / pivot;
        if (!r.is_real()) return std::nullopt;
        out.push_back(r.re);
    }
    return RatPoly(std::move(out));
}

std::array<Rat, 4> parts(const Quaternion& q) { return {q.w, q.x, q.y, q.z}; }

bool combination_holds(const std::array<Rat, 4>& a0, const std::array<Rat, 4>& a1, const std::array<Rat, 4>& a2,
                       const Rat& c0, const Rat& c2) {
    for (std::size_t i = 0; i < 4; ++i)
        if (a1[i] != c0 * a0[i] + c2 * a2[i]) return false;
    return true;
}

// Single-vector span test: a1 = c·a for the first nonzero component of a.
std::optional<Rat> multiple_of(const std::array<Rat, 4>& a, const std::array<Rat, 4>& a1) {
    for (std::size_t i = 0; i < 4; ++i)
        if (!a[i].is_zero()) return a1[i] / a[i];
    return std::nullopt;
}

}  // namespace

WronskianDecomposition decompose_wronskian_quintic(const HopfPair& h) {
    require_quintic_degrees(h);
    const GaussPoly w = wronskian(h.z1, h.z2);
    if (w.is_zero())
        throw DegenerateInput("Wronskian vanishes: z1 and z2 are proportional (constant tangent direction)");

    const RatPoly one = RatPoly::constant(Rat(1));
    if (w.degree() == 0) return {one, w, DecompositionCase::BothConstant};
    if (w.degree() == 2 && quadratic_discriminant(w).is_zero()) return {one, w, DecompositionCase::OmegaConstant};
    if (auto dir = real_direction(w)) {
        RatPoly omega = primitive_part(*dir);
        GaussPoly z2 = exact_divide(w, to_gauss(omega));
        return {std::move(omega), std::move(z2), DecompositionCase::ZConstant};
    }
    return {RatPoly{}, GaussPoly{}, DecompositionCase::Degenerate};
}

std::optional<GaussPoly> monotone_test(const HopfPair& h) {
    GaussPoly g = gcd(h.z1, h.z2);
    if (g.is_constant()) return std::nullopt;
    return g;
}

std::optional<QuaternionDependence> quaternion_dependence(const Quaternion& q0, const Quaternion& q1,
                                                          const Quaternion& q2) {
    const auto a0 = parts(q0);
    const auto a1 = parts(q1);
    const auto a2 = parts(q2);

    for (std::size_t i = 0; i < 4; ++i)
        for (std::size_t j = i + 1; j < 4; ++j) {
            const Rat det = a0[i] * a2[j] - a0[j] * a2[i];
            if (det.is_zero()) continue;
            Rat c0 = (a1[i] * a2[j] - a1[j] * a2[i]) / det;
            Rat c2 = (a0[i] * a1[j] - a0[j] * a1[i]) / det;
            if (!combination_holds(a0, a1, a2, c0, c2)) return std::nullopt;
            return QuaternionDependence{std::move(c0), std::move(c2), false};
        }

    // A₀ and A₂ span at most a line.
    QuaternionDependence dep{Rat(0), Rat(0), true};
    if (auto c = multiple_of(a0, a1)) {
        dep.c0 = *c;
    } else if (auto c2 = multiple_of(a2, a1)) {
        dep.c2 = *c2;
    }
    if (!combination_holds(a0, a1, a2, dep.c0, dep.c2)) return std::nullopt;
    return dep;
}

// With A₁ = c0·A₀ + c2·A₂ the Wronskian is D·(c2 + 2t + c0·t²) for a complex
// constant D, so the t⁰ coefficient carries c2 and the t² coefficient c0.
std::optional<Rat> LemmaTwoParameters::c0() const {
    if (m1_squared.is_zero()) return std::nullopt;
    return Rat(2) * m2_times_m1 / m1_squared;
}

std::optional<Rat> LemmaTwoParameters::c2() const {
    if (m1_squared.is_zero()) return std::nullopt;
    return Rat(2) * m0_times_m1 / m1_squared;
}

LemmaTwoParameters lemma_two_parameters(const QuaternionPolynomial& a) {
    if (a.size() > 3) throw UnsupportedDegree("Lemma-two parameters need a quaternion polynomial of degree <= 2");
    const Quaternion a0 = a.coeff(0);
    const Quaternion a2 = a.coeff(2);
    // a, a_x, a_y, a_z and c, c_x, c_y, c_z
    const Rat &sa = a0.w, &sx = a0.x, &sy = a0.y, &sz = a0.z;
    const Rat &ca = a2.w, &cx = a2.x, &cy = a2.y, &cz = a2.z;

    const Rat y = sy * ca + sz * cx - sa * cy - sx * cz;
    const Rat x = sz * ca - sy * cx + sx * cy - sa * cz;

    LemmaTwoParameters out;
    if (!x.is_zero()) out.tan_two_theta = y / x;
    out.m1_squared = Rat(4) * (x * x + y * y);

    // The t-coefficient of W is 2x + 2iy; m₀ = Re(W₀ e^{-2iθ}) with e^{-2iθ} = conj(W₁)/m₁.
    const GaussPoly w = a.is_zero() ? GaussPoly{} : [&] {
        const HopfPair h = hopf_from_quaternion(a);
        return wronskian(h.z1, h.z2);
    }();
    const GaussRat w1(Rat(2) * x, Rat(2) * y);
    if (w.coeff(1) != w1) throw InternalInconsistency("Wronskian t-coefficient disagrees with the closed form");
    out.m0_times_m1 = (w.coeff(0) * w1.conj()).re;
    out.m2_times_m1 = (w.coeff(2) * w1.conj()).re;
    return out;
}

namespace {

ClassificationReport classify(const QuaternionPolynomial& a, const HopfPair& hopf) {
    if (a.size() > 3) throw UnsupportedDegree("quintic classification needs a quaternion polynomial of degree <= 2");
    const Hodograph hodo = hodograph_from_quaternion(a);

    ClassificationReport r;
    r.ph = is_ph(hodo);
    const RatPoly sigma = sigma_poly(a);
    if (!r.ph || r.ph->squared() != sigma * sigma)
        throw InternalInconsistency("quaternion hodograph failed the Pythagorean identity");
    r.wronskian = wronskian(hopf.z1, hopf.z2);
    r.two_ph = is_2ph(hodo);
    r.lancret = is_helix(hodo);

    if (r.wronskian.is_zero()) {
        r.quintic_class.kind = QuinticKind::Degenerate;
        r.quintic_class.reason = "W = 0: z1 and z2 are proportional, the curve is a straight line";
        if (r.lancret.kind != HelixKind::Line)
            throw InternalInconsistency("W = 0 but the Lancret test did not report a line");
        return r;
    }

    r.decomposition = decompose_wronskian_quintic(hopf);
    const auto dec_kind = r.decomposition->kind;
    if ((dec_kind != DecompositionCase::Degenerate) != r.two_ph.has_value())
        throw InternalInconsistency("Wronskian decomposition and the 2-PH norm test disagree");

    const auto shared = monotone_test(hopf);
    const auto dependence = quaternion_dependence(a.coeff(0), a.coeff(1), a.coeff(2));
    if ((dec_kind == DecompositionCase::OmegaConstant) != shared.has_value())
        throw InternalInconsistency("constant omega must coincide with a shared factor of z1 and z2");

    auto& qc = r.quintic_class;
    qc.dependence = dependence;
    qc.shared_factor = shared;
    switch (dec_kind) {
        case DecompositionCase::OmegaConstant:
            qc.kind = QuinticKind::MonotoneHelix;
            break;
        case DecompositionCase::ZConstant:
        case DecompositionCase::BothConstant:
            if (!dependence) {
                // m₁ = 0 leaves the linear system for A₁ singular: A₀ and A₂
                // span at most a line and A₁ may lie outside it.
                if (!lemma_two_parameters(a).m1_squared.is_zero())
                    throw InternalInconsistency("constant z but the quaternion coefficients are independent");
                qc.kind = QuinticKind::Degenerate;
                qc.reason = "constant z with m1 = 0: A1 is not in span{A0, A2}, the dependence route does not apply";
                break;
            }
            qc.kind = QuinticKind::GeneralHelix;
            if (dec_kind == DecompositionCase::BothConstant)
                r.notes.emplace_back("omega and z are both constant (W is a nonzero constant)");
            break;
        case DecompositionCase::Degenerate:
            qc.kind = QuinticKind::NotHelix;
            break;
    }

    // Quintic helix <=> 2-PH, decided independently by the Lancret ratio.
    const bool lancret_helix = r.lancret.kind == HelixKind::Helix || r.lancret.kind == HelixKind::Planar;
    if (lancret_helix != r.two_ph.has_value())
        throw InternalInconsistency("2-PH test and Lancret test disagree on a quintic");
    if (r.lancret.kind == HelixKind::Planar)
        r.notes.emplace_back("planar curve: torsion vanishes, the Lancret ratio is identically 0");
    return r;
}

}  // namespace

ClassificationReport classify_quintic(const QuaternionPolynomial& a) {
    if (a.size() > 3) throw UnsupportedDegree("quintic classification needs a quaternion polynomial of degree <= 2");
    if (a.is_zero()) throw DegenerateInput("zero quaternion polynomial");
    return classify(a, hopf_from_quaternion(a));
}

ClassificationReport classify_quintic(const HopfPair& h) {
    require_quintic_degrees(h);
    return classify(quaternion_from_hopf(h), h);
}

}  // namespace qhelix
