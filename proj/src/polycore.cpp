#include "qhelix/polycore.hpp"

#include <cmath>
#include <sstream>

namespace qhelix {

RatPoly real_part(const GaussPoly& p) {
    return p.map([](const GaussRat& z) { return z.re; });
}

RatPoly imag_part(const GaussPoly& p) {
    return p.map([](const GaussRat& z) { return z.im; });
}

GaussPoly to_gauss(const RatPoly& re, const RatPoly& im) {
    std::vector<GaussRat> v(std::max(re.size(), im.size()));
    for (std::size_t i = 0; i < v.size(); ++i) v[i] = GaussRat(re.coeff(i), im.coeff(i));
    return GaussPoly(std::move(v));
}

GaussPoly conj(const GaussPoly& p) {
    return p.map([](const GaussRat& z) { return z.conj(); });
}

RatPoly norm_squared(const GaussPoly& p) {
    const RatPoly a = real_part(p);
    const RatPoly b = imag_part(p);
    return a * a + b * b;
}

RatPoly antiderivative(const RatPoly& p) {
    std::vector<Rat> v(p.size() + 1);
    for (std::size_t i = 0; i < p.size(); ++i) v[i + 1] = p.coeffs()[i] / Rat(static_cast<long>(i + 1));
    return RatPoly(std::move(v));
}

RatPoly primitive_part(const RatPoly& p) {
    if (p.is_zero()) return p;
    mpz_class den_lcm = 1;
    for (const auto& c : p.coeffs()) {
        const mpz_class d = c.denominator();
        mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), d.get_mpz_t());
    }
    mpz_class num_gcd = 0;
    for (const auto& c : p.coeffs()) {
        const mpz_class n = c.numerator() * (den_lcm / c.denominator());
        mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), n.get_mpz_t());
    }
    Rat factor(den_lcm, num_gcd);
    if (p.leading().sign() < 0) factor = -factor;
    return p * factor;
}

// ---------------------------------------------------------------------------

RatPoly SquarefreeDecomposition::expand() const {
    RatPoly r = RatPoly::constant(content);
    for (const auto& [f, m] : factors) r *= pow(f, m);
    return r;
}

SquarefreeDecomposition squarefree_decompose(const RatPoly& p) {
    if (p.is_zero()) throw DegenerateInput("square-free decomposition of the zero polynomial");
    SquarefreeDecomposition out{p.leading(), {}};
    const RatPoly f = monic(p);
    if (f.is_constant()) return out;

    const RatPoly df = f.derivative();
    const RatPoly a0 = gcd(f, df);
    RatPoly b = exact_divide(f, a0);
    RatPoly c = exact_divide(df, a0);
    RatPoly d = c - b.derivative();
    for (unsigned i = 1; !b.is_constant(); ++i) {
        const RatPoly a = gcd(b, d);
        b = exact_divide(b, a);
        c = exact_divide(d, a);
        d = c - b.derivative();
        if (!a.is_constant()) out.factors.push_back({a, i});
    }
    return out;
}

std::optional<RatPoly> ScaledSqrt::as_rational() const {
    const auto r = rational_sqrt(scale);
    if (!r) return std::nullopt;
    return body * *r;
}

double ScaledSqrt::evaluate(double t) const {
    double acc = 0.0;
    for (auto it = body.coeffs().rbegin(); it != body.coeffs().rend(); ++it)
        acc = acc * t + it->to_double();
    return std::sqrt(scale.to_double()) * acc;
}

std::optional<ScaledSqrt> perfect_square_root(const RatPoly& p) {
    if (p.is_zero()) return ScaledSqrt{};
    const auto dec = squarefree_decompose(p);
    if (dec.content.sign() <= 0) return std::nullopt;
    RatPoly body = RatPoly::constant(Rat(1));
    for (const auto& [f, m] : dec.factors) {
        if (m % 2 != 0) return std::nullopt;
        body *= pow(f, m / 2);
    }
    return ScaledSqrt{dec.content, std::move(body)};
}

// ---------------------------------------------------------------------------

GaussPoly wronskian(const GaussPoly& z1, const GaussPoly& z2) {
    return z1.derivative() * z2 - z1 * z2.derivative();
}

GaussRat quadratic_discriminant(const GaussPoly& p) {
    if (p.degree() != 2) throw PreconditionError("discriminant requires a quadratic");
    const GaussRat& a = p.coeffs()[2];
    const GaussRat& b = p.coeffs()[1];
    const GaussRat& c = p.coeffs()[0];
    return b * b - GaussRat(4) * a * c;
}

// ---------------------------------------------------------------------------

RationalFunction::RationalFunction(const RatPoly& num)
    : num_(num), den_(RatPoly::constant(Rat(1))) {}

RationalFunction::RationalFunction(const RatPoly& num, const RatPoly& den) {
    if (den.is_zero()) throw DegenerateInput("rational function with zero denominator");
    if (num.is_zero()) {
        den_ = RatPoly::constant(Rat(1));
        return;
    }
    const RatPoly g = gcd(num, den);
    num_ = exact_divide(num, g);
    den_ = exact_divide(den, g);
    const Rat lead = den_.leading();
    num_ = num_ * (Rat(1) / lead);
    den_ = den_ * (Rat(1) / lead);
}

std::optional<Rat> RationalFunction::constant_value() const {
    if (!is_constant()) return std::nullopt;
    return num_.coeff(0) / den_.coeff(0);
}

std::optional<Rat> RationalFunction::evaluate(const Rat& t) const {
    const Rat d = den_.evaluate(t);
    if (d.is_zero()) return std::nullopt;
    return num_.evaluate(t) / d;
}

RationalFunction operator+(const RationalFunction& a, const RationalFunction& b) {
    return {a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_};
}
RationalFunction operator-(const RationalFunction& a, const RationalFunction& b) {
    return {a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_};
}
RationalFunction operator*(const RationalFunction& a, const RationalFunction& b) {
    return {a.num_ * b.num_, a.den_ * b.den_};
}
RationalFunction operator/(const RationalFunction& a, const RationalFunction& b) {
    if (b.is_zero()) throw DegenerateInput("division by the zero rational function");
    return {a.num_ * b.den_, a.den_ * b.num_};
}

// ---------------------------------------------------------------------------

namespace {

std::string power_suffix(std::size_t k, const std::string& var) {
    if (k == 0) return "";
    if (k == 1) return var;
    return var + "^" + std::to_string(k);
}

// Appends one term. `negative` and `magnitude` describe the coefficient;
// `magnitude` is already bracketed when needed.
void append_term(std::string& out, bool negative, const std::string& magnitude, std::size_t k,
                 const std::string& var) {
    if (out.empty()) {
        if (negative) out += "-";
    } else {
        out += negative ? " - " : " + ";
    }
    const std::string pw = power_suffix(k, var);
    if (pw.empty()) {
        out += magnitude;
    } else if (magnitude == "1") {
        out += pw;
    } else {
        out += magnitude + "*" + pw;
    }
}

std::string rat_magnitude(const Rat& a) {
    if (a.is_integer()) return a.str();
    return "(" + a.str() + ")";
}

}  // namespace

std::string to_string(const Rat& r) { return r.str(); }

std::string to_string(const GaussRat& z) { return z.str(); }

std::string to_string(const RatPoly& p, const std::string& var) {
    if (p.is_zero()) return "0";
    std::string out;
    for (std::size_t k = p.size(); k-- > 0;) {
        const Rat& c = p.coeffs()[k];
        if (c.is_zero()) continue;
        const Rat a = abs(c);
        // A bare constant term prints without brackets.
        append_term(out, c.sign() < 0, k == 0 ? a.str() : rat_magnitude(a), k, var);
    }
    return out;
}

std::string to_string(const GaussPoly& p, const std::string& var) {
    if (p.is_zero()) return "0";
    std::string out;
    for (std::size_t k = p.size(); k-- > 0;) {
        const GaussRat& c = p.coeffs()[k];
        if (c.is_zero()) continue;
        if (c.is_real()) {
            const Rat a = abs(c.re);
            append_term(out, c.re.sign() < 0, k == 0 ? a.str() : rat_magnitude(a), k, var);
        } else if (c.re.is_zero()) {
            const Rat a = abs(c.im);
            const std::string mag = a == Rat(1) ? "i" : (a.is_integer() ? a.str() + "i" : "(" + a.str() + ")i");
            append_term(out, c.im.sign() < 0, mag, k, var);
        } else {
            append_term(out, false, "(" + c.str() + ")", k, var);
        }
    }
    return out;
}

std::string to_string(const ScaledSqrt& s, const std::string& var) {
    if (s.is_zero()) return "0";
    if (const auto r = s.as_rational()) return to_string(*r, var);
    return "sqrt(" + s.scale.str() + ")*(" + to_string(s.body, var) + ")";
}

std::string to_string(const RationalFunction& f, const std::string& var) {
    if (f.den() == RatPoly::constant(Rat(1))) return to_string(f.num(), var);
    return "(" + to_string(f.num(), var) + ")/(" + to_string(f.den(), var) + ")";
}

}  // namespace qhelix
