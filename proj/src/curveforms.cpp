#include "qhelix/curveforms.hpp"

#include "qhelix/errors.hpp"

namespace qhelix {

Quaternion operator*(const Quaternion& a, const Quaternion& b) {
    return {a.w * b.w - a.x * b.x - a.y * b.y - a.z * b.z,
            a.w * b.x + a.x * b.w + a.y * b.z - a.z * b.y,
            a.w * b.y - a.x * b.z + a.y * b.w + a.z * b.x,
            a.w * b.z + a.x * b.y - a.y * b.x + a.z * b.w};
}

std::string Quaternion::str() const {
    return "(" + w.str() + ", " + x.str() + ", " + y.str() + ", " + z.str() + ")";
}

QuaternionComponents components(const QuaternionPolynomial& a) {
    return {a.map([](const Quaternion& q) { return q.w; }), a.map([](const Quaternion& q) { return q.x; }),
            a.map([](const Quaternion& q) { return q.y; }), a.map([](const Quaternion& q) { return q.z; })};
}

QuaternionPolynomial from_components(const RatPoly& u, const RatPoly& v, const RatPoly& p, const RatPoly& q) {
    const std::size_t n = std::max({u.size(), v.size(), p.size(), q.size()});
    std::vector<Quaternion> c(n);
    for (std::size_t i = 0; i < n; ++i) c[i] = Quaternion(u.coeff(i), v.coeff(i), p.coeff(i), q.coeff(i));
    return QuaternionPolynomial(std::move(c));
}

HopfPair::HopfPair(GaussPoly first, GaussPoly second) : z1(std::move(first)), z2(std::move(second)) {
    if (z1.is_zero() && z2.is_zero()) throw DegenerateInput("Hopf pair with z1 = z2 = 0");
}

Hodograph::Hodograph(RatPoly x, RatPoly y, RatPoly z) : dx(std::move(x)), dy(std::move(y)), dz(std::move(z)) {
    if (dx.is_zero() && dy.is_zero() && dz.is_zero())
        throw DegenerateInput("hodograph is identically zero (the curve is a point)");
}

Hodograph hodograph_from_quaternion(const QuaternionPolynomial& a) {
    if (a.is_zero()) throw DegenerateInput("zero quaternion polynomial");
    const auto& [u, v, p, q] = components(a);
    const RatPoly two = RatPoly::constant(Rat(2));
    return {u * u + v * v - p * p - q * q, two * (u * q + v * p), two * (v * q - u * p)};
}

HopfPair hopf_from_quaternion(const QuaternionPolynomial& a) {
    const auto& [u, v, p, q] = components(a);
    return {to_gauss(u, v), to_gauss(q, p)};
}

QuaternionPolynomial quaternion_from_hopf(const HopfPair& h) {
    return from_components(real_part(h.z1), imag_part(h.z1), imag_part(h.z2), real_part(h.z2));
}

Hodograph hodograph_from_hopf(const HopfPair& h) {
    const GaussPoly w = h.z1 * conj(h.z2) * GaussRat(2);
    return {norm_squared(h.z1) - norm_squared(h.z2), real_part(w), imag_part(w)};
}

QuaternionPolynomial bezier_to_power(std::span<const Quaternion> controls) {
    if (controls.empty()) throw PreconditionError("Bezier form needs at least one control quaternion");
    if (controls.size() > 3) throw UnsupportedDegree("Bezier quaternion input is limited to degree 2");
    // Σ C_k · binom(n,k) · t^k (1−t)^(n−k)
    const std::size_t n = controls.size() - 1;
    const RatPoly one_minus_t{Rat(1), Rat(-1)};
    const RatPoly t = RatPoly::identity();
    static constexpr long binom[3][3] = {{1, 0, 0}, {1, 1, 0}, {1, 2, 1}};
    QuaternionPolynomial out;
    for (std::size_t k = 0; k <= n; ++k) {
        const RatPoly basis = pow(t, k) * pow(one_minus_t, n - k) * Rat(binom[n][k]);
        out += basis.map([&](const Rat& r) { return controls[k] * r; });
    }
    return out;
}

PolynomialCurve integrate(const Hodograph& h, const Point3& origin) {
    const auto lift = [](const RatPoly& d, const Rat& c) { return antiderivative(d) + RatPoly::constant(c); };
    return {lift(h.dx, origin[0]), lift(h.dy, origin[1]), lift(h.dz, origin[2])};
}

RatPoly sigma_poly(const QuaternionPolynomial& a) {
    const auto& [u, v, p, q] = components(a);
    return u * u + v * v + p * p + q * q;
}

RatPoly sigma_poly(const HopfPair& h) { return norm_squared(h.z1) + norm_squared(h.z2); }

}  // namespace qhelix
