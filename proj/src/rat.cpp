#include "qhelix/rat.hpp"

#include <cctype>

#include "qhelix/errors.hpp"

namespace qhelix {

Rat::Rat(long num, long den) : v_(num, den) {
    if (den == 0) throw DegenerateInput("rational with zero denominator");
    v_.canonicalize();
}

Rat::Rat(mpq_class v) : v_(std::move(v)) {
    if (v_.get_den() == 0) throw DegenerateInput("rational with zero denominator");
    v_.canonicalize();
}

Rat::Rat(const mpz_class& num, const mpz_class& den) : Rat(mpq_class(num, den)) {}

namespace {

bool is_integer_literal(std::string_view s, bool allow_sign) {
    if (s.empty()) return false;
    std::size_t i = 0;
    if (allow_sign && (s[0] == '-' || s[0] == '+')) i = 1;
    if (i == s.size()) return false;
    for (; i < s.size(); ++i)
        if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
    return true;
}

}  // namespace

Rat Rat::parse(std::string_view text) {
    const auto slash = text.find('/');
    const std::string_view num = text.substr(0, slash);
    const std::string_view den = slash == std::string_view::npos ? std::string_view{"1"}
                                                                   : text.substr(slash + 1);
    if (!is_integer_literal(num, true) || !is_integer_literal(den, false))
        throw ParseError("malformed rational '" + std::string(text) + "'");
    std::string n(num);
    if (n[0] == '+') n.erase(0, 1);
    const mpz_class d(std::string(den), 10);
    if (d == 0) throw ParseError("zero denominator in '" + std::string(text) + "'");
    return Rat(mpz_class(n, 10), d);
}

Rat& Rat::operator+=(const Rat& o) {
    v_ += o.v_;
    return *this;
}
Rat& Rat::operator-=(const Rat& o) {
    v_ -= o.v_;
    return *this;
}
Rat& Rat::operator*=(const Rat& o) {
    v_ *= o.v_;
    return *this;
}
Rat& Rat::operator/=(const Rat& o) {
    if (o.is_zero()) throw DegenerateInput("division by zero rational");
    v_ /= o.v_;
    return *this;
}

Rat abs(const Rat& r) { return r.sign() < 0 ? -r : r; }

std::optional<Rat> rational_sqrt(const Rat& r) {
    if (r.sign() < 0) return std::nullopt;
    const mpz_class n = r.numerator();
    const mpz_class d = r.denominator();
    if (!mpz_perfect_square_p(n.get_mpz_t()) || !mpz_perfect_square_p(d.get_mpz_t()))
        return std::nullopt;
    return Rat(mpz_class(sqrt(n)), mpz_class(sqrt(d)));
}

GaussRat& GaussRat::operator+=(const GaussRat& o) {
    re += o.re;
    im += o.im;
    return *this;
}
GaussRat& GaussRat::operator-=(const GaussRat& o) {
    re -= o.re;
    im -= o.im;
    return *this;
}
GaussRat& GaussRat::operator*=(const GaussRat& o) {
    Rat r = re * o.re - im * o.im;
    Rat i = re * o.im + im * o.re;
    re = std::move(r);
    im = std::move(i);
    return *this;
}
GaussRat& GaussRat::operator/=(const GaussRat& o) {
    const Rat n = o.norm();
    if (n.is_zero()) throw DegenerateInput("division by zero Gaussian rational");
    *this *= o.conj();
    re /= n;
    im /= n;
    return *this;
}

std::string GaussRat::str() const {
    if (im.is_zero()) return re.str();
    if (re.is_zero()) {
        if (im == Rat(1)) return "i";
        if (im == Rat(-1)) return "-i";
        return im.str() + "i";
    }
    std::string s = re.str();
    s += im.sign() < 0 ? "-" : "+";
    const Rat a = abs(im);
    if (a != Rat(1)) s += a.str();
    return s + "i";
}

}  // namespace qhelix
