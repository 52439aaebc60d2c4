#include "qhelix/poly.hpp"

#include <vector>

namespace qhelix {

namespace {

using IntPoly = std::vector<mpz_class>;  // index = degree, no trailing zeros

void trim(IntPoly& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
}

IntPoly to_primitive(const RatPoly& p) {
    mpz_class den_lcm = 1;
    for (const auto& c : p.coeffs()) {
        const mpz_class d = c.denominator();
        mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), d.get_mpz_t());
    }
    IntPoly out;
    out.reserve(p.size());
    for (const auto& c : p.coeffs()) out.push_back(c.numerator() * (den_lcm / c.denominator()));
    return out;
}

void make_primitive(IntPoly& p) {
    mpz_class g = 0;
    for (const auto& c : p) {
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
        if (g == 1) return;
    }
    if (g > 1)
        for (auto& c : p) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), g.get_mpz_t());
}

// lc(b)^k · a mod b, with k the number of elimination steps.
IntPoly pseudo_remainder(IntPoly a, const IntPoly& b) {
    const std::size_t db = b.size() - 1;
    const mpz_class& lb = b.back();
    while (a.size() > db && !a.empty()) {
        const mpz_class la = a.back();
        const std::size_t shift = a.size() - 1 - db;
        for (auto& c : a) c *= lb;
        for (std::size_t j = 0; j <= db; ++j) a[shift + j] -= la * b[j];
        trim(a);
    }
    return a;
}

}  // namespace

namespace detail {

Poly<Rat> multiply(const Poly<Rat>& a, const Poly<Rat>& b) {
    // a = A/da, b = B/db with integer A, B
    const auto lift = [](const RatPoly& p, mpz_class& den) {
        den = 1;
        for (const auto& c : p.coeffs()) {
            const mpz_class d = c.denominator();
            mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), d.get_mpz_t());
        }
        IntPoly out;
        out.reserve(p.size());
        for (const auto& c : p.coeffs()) out.push_back(c.numerator() * (den / c.denominator()));
        return out;
    };
    mpz_class da, db;
    const IntPoly ia = lift(a, da);
    const IntPoly ib = lift(b, db);
    IntPoly prod(ia.size() + ib.size() - 1);
    for (std::size_t i = 0; i < ia.size(); ++i) {
        if (ia[i] == 0) continue;
        for (std::size_t j = 0; j < ib.size(); ++j)
            mpz_addmul(prod[i + j].get_mpz_t(), ia[i].get_mpz_t(), ib[j].get_mpz_t());
    }
    const mpz_class den = da * db;
    std::vector<Rat> out;
    out.reserve(prod.size());
    for (const auto& c : prod) out.emplace_back(c, den);
    return Poly<Rat>(std::move(out));
}

}  // namespace detail

RatPoly gcd(const RatPoly& a, const RatPoly& b) {
    if (a.is_zero() && b.is_zero()) throw DegenerateInput("gcd of two zero polynomials");
    IntPoly x = to_primitive(a);
    IntPoly y = to_primitive(b);
    make_primitive(x);
    make_primitive(y);
    if (x.size() < y.size()) std::swap(x, y);
    while (!y.empty()) {
        IntPoly r = pseudo_remainder(std::move(x), y);
        make_primitive(r);
        x = std::move(y);
        y = std::move(r);
    }
    std::vector<Rat> out;
    out.reserve(x.size());
    for (const auto& c : x) out.emplace_back(c, x.back());
    return RatPoly(std::move(out));
}

}  // namespace qhelix
