// Acceptance run: one PASS/FAIL line per criterion, exit status 1 if any fails.
#include <chrono>
#include <cstdio>
#include <exception>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "curves.hpp"
#include "oracles.hpp"
#include "qhelix/analysis.hpp"
#include "qhelix/errors.hpp"
#include "qhelix/generators.hpp"
#include "qhelix/quintic.hpp"

using namespace qhelix;

namespace {

// Failures are collected, not thrown, so a criterion reports every mismatch count.
struct Outcome {
    long checks = 0;
    long failures = 0;
    std::string first_failure;
    std::ostringstream note;

    void expect(bool ok, const std::string& what) {
        ++checks;
        if (ok) return;
        if (failures++ == 0) first_failure = what;
    }
};

struct HelixSample {
    Hodograph hodograph;
    HelixVerdict verdict;
};

// Every Helix verdict met in criteria 1 to 6, re-checked by criterion 10.
std::vector<HelixSample> g_helices;

void record_helix(const Hodograph& h, const HelixVerdict& v) {
    if (v.kind == HelixKind::Helix) g_helices.push_back({h, v});
}

bool lancret_says_helix(HelixKind k) { return k == HelixKind::Helix || k == HelixKind::Planar; }

GaussPoly example1_wronskian() {
    return GaussPoly{GaussRat(Rat(25), Rat(25)), GaussRat(Rat(-30), Rat(10)), GaussRat(Rat(1), Rat(-7))};
}

void criterion1(Outcome& o) {
    const HopfPair h = hopf_from_quaternion(testdata::example1());
    const GaussPoly w = wronskian(h.z1, h.z2);
    o.expect(w == example1_wronskian(), "W != (1-7i)t^2 + (-30+10i)t + (25+25i)");

    const GaussPoly root_factor{GaussRat(Rat(-1), Rat(-2)), GaussRat(1)};
    const GaussPoly z_sq = root_factor * root_factor * GaussRat(Rat(1), Rat(-7));
    o.expect(z_sq == w, "(1-7i)(t-(1+2i))^2 does not expand to W");

    const auto d = decompose_wronskian_quintic(h);
    o.expect(d.kind == DecompositionCase::OmegaConstant, "decomposition case is not OmegaConstant");
    o.expect(d.omega == RatPoly{Rat(1)}, "omega != 1");
    o.expect(d.z_squared == z_sq, "z^2 != (1-7i)(t-(1+2i))^2");
    o.expect(to_gauss(d.omega) * d.z_squared == w, "omega * z^2 != W");
}

void criterion2(Outcome& o) {
    const auto a = testdata::example1();
    const ClassificationReport r = classify_quintic(a);
    o.expect(r.quintic_class.kind == QuinticKind::MonotoneHelix, "class is not MonotoneHelix");
    const GaussPoly expected{GaussRat(Rat(-1), Rat(-2)), GaussRat(1)};
    o.expect(r.quintic_class.shared_factor == expected, "shared factor != t-(1+2i)");
    const HopfPair h = hopf_from_quaternion(a);
    o.expect(monic(gcd(h.z1, h.z2)) == expected, "gcd(z1, z2) != t-(1+2i) up to a unit");
    o.expect(r.lancret.kind == HelixKind::Helix, "Lancret verdict is not Helix");
    const Hodograph hd = hodograph_from_quaternion(a);
    const auto ratio = curvature_torsion(hd).lancret_ratio_squared;
    o.expect(ratio.is_constant() && ratio == RationalFunction(RatPoly{Rat(9, 50)}), "(tau/kappa)^2 != 9/50");
    record_helix(hd, r.lancret);
}

void criterion3(Outcome& o) {
    const auto a = testdata::example2();
    const HopfPair h = hopf_from_quaternion(a);
    const GaussPoly w = wronskian(h.z1, h.z2);
    const GaussPoly expected = GaussPoly{GaussRat(3), GaussRat(-7), GaussRat(3)} * GaussRat(Rat(-26), Rat(26));
    o.expect(w == expected, "W != (-1+i)*26*(3t^2-7t+3)");
    o.expect(decompose_wronskian_quintic(h).kind == DecompositionCase::ZConstant, "case is not ZConstant");

    const auto dep = quaternion_dependence(a.coeff(0), a.coeff(1), a.coeff(2));
    o.expect(dep && dep->c0 == Rat(-6, 7) && dep->c2 == Rat(-6, 7), "(c0, c2) != (-6/7, -6/7)");
    if (dep) o.expect((a.coeff(0) * dep->c0 + a.coeff(2) * dep->c2 - a.coeff(1)).is_zero(), "nonzero residual");

    const ClassificationReport r = classify_quintic(a);
    o.expect(r.quintic_class.kind == QuinticKind::GeneralHelix, "class is not GeneralHelix");
    o.expect(r.quintic_class.dependence == dep, "classification dependence differs from the linear solve");
    o.expect(r.lancret.kind == HelixKind::Helix, "Lancret verdict is not Helix");
    record_helix(hodograph_from_quaternion(a), r.lancret);
}

void criterion4(Outcome& o) {
    const Hodograph h = testdata::remark_hodograph();
    const RatPoly base{9, 0, 9, 0, 3, 0, 1};
    const RatPoly one_plus_t2{1, 0, 1};

    const auto sigma = is_ph(h);
    o.expect(sigma && sigma->as_rational() == base * Rat(1, 3), "sigma != (1/3)(9+9t^2+3t^4+t^6)");
    const auto rho = cross_norm(h).rho;
    o.expect(rho && rho->as_rational() == one_plus_t2 * base * Rat(2), "rho != 2(1+t^2)(9+9t^2+3t^4+t^6)");

    const RatPoly num{-9, 0, 0, 0, 9, 0, 2};
    const RatPoly den = one_plus_t2 * one_plus_t2 * Rat(9);
    o.expect(curvature_torsion(h).lancret_ratio_squared == RationalFunction(num * num, den * den),
             "(tau/kappa)^2 != ((-9+9t^4+2t^6)/(9(1+t^2)^2))^2");
    o.expect(is_2ph(h).has_value(), "is_2ph is None");
    o.expect(is_helix(h).kind == HelixKind::NotHelix, "is_helix is not NotHelix");
}

void criterion5(Outcome& o) {
    constexpr int kPerFamily = 500;
    for (int i = 0; i < kPerFamily; ++i) {
        const HopfPair m = generate_monotone_quintic(derive_seed(501, static_cast<std::uint64_t>(i)));
        const ClassificationReport rm = classify_quintic(m);
        o.expect(rm.two_ph && rm.lancret.kind == HelixKind::Helix, "monotone quintic not 2-PH and Helix");
        record_helix(hodograph_from_hopf(m), rm.lancret);

        const auto g = generate_general_quintic(derive_seed(502, static_cast<std::uint64_t>(i)));
        const ClassificationReport rg = classify_quintic(g);
        o.expect(rg.two_ph && rg.lancret.kind == HelixKind::Helix, "general quintic not 2-PH and Helix");
        record_helix(hodograph_from_quaternion(g), rg.lancret);
    }

    RationalSampler rng(503);
    int random = 0, accidental = 0, skipped = 0;
    while (random < kPerFamily) {
        const auto a = random_quaternion_polynomial(rng, 2);
        if (monotone_test(hopf_from_quaternion(a))) {
            ++skipped;
            continue;
        }
        ++random;
        const ClassificationReport r = classify_quintic(a);
        const bool helix = lancret_says_helix(r.lancret.kind);
        o.expect(r.two_ph.has_value() == helix, "equivalence violated on a random quintic");
        if (r.two_ph && helix) {
            ++accidental;
            record_helix(hodograph_from_quaternion(a), r.lancret);
        }
    }
    o.note << kPerFamily << " monotone, " << kPerFamily << " general, " << random << " random (" << accidental
           << " accidental helices, " << skipped << " shared-factor draws skipped)";
}

void criterion6(Outcome& o) {
    RationalSampler rng(601);
    int helix = 0, planar = 0, line = 0;
    for (int i = 0; i < 200; ++i) {
        const auto a = random_quaternion_polynomial(rng, 1);
        const Hodograph h = hodograph_from_quaternion(a);
        o.expect(is_ph(h).has_value(), "cubic is not PH");
        const HelixVerdict v = is_helix(h);
        o.expect(v.kind != HelixKind::NotHelix, "PH cubic classified NotHelix");
        helix += v.kind == HelixKind::Helix;
        planar += v.kind == HelixKind::Planar;
        line += v.kind == HelixKind::Line;
        record_helix(h, v);
    }
    o.note << helix << " Helix, " << planar << " Planar, " << line << " Line";
}

void criterion7(Outcome& o) {
    RationalSampler rng(701);
    for (int i = 0; i < 1000; ++i) {
        const auto a = random_quaternion_polynomial(rng, 2);
        const Hodograph h = hodograph_from_quaternion(a);
        const PolyVec3 d1 = h.as_vector();
        const PolyVec3 d2{h.dx.derivative(), h.dy.derivative(), h.dz.derivative()};
        const PolyVec3 c = cross(d1, d2);
        o.expect(dot(c, c) == oracle::cross_norm_by_components(a), "|a' x a''|^2 differs from the component formula");
    }
}

void check_frame(Outcome& o, const Hodograph& h, const std::string& name) {
    const FrenetFrame f = frenet_frame(h);
    const auto& t = f.tangent;
    const auto& b = f.binormal;
    const auto& n = f.normal;
    o.expect(dot(t.components, t.components) == RationalFunction(RatPoly{t.scale}), name + ": t.t != 1");
    o.expect(dot(b.components, b.components) == RationalFunction(RatPoly{b.scale}), name + ": b.b != 1");
    o.expect(dot(t.components, b.components).is_zero(), name + ": t.b != 0");
    o.expect(cross(b.components, t.components) == n.components && n.scale == b.scale * t.scale,
             name + ": n != b x t");
    o.expect(dot(n.components, n.components) == RationalFunction(RatPoly{n.scale}), name + ": n.n != 1");
    o.expect(dot(n.components, t.components).is_zero() && dot(n.components, b.components).is_zero(),
             name + ": n not orthogonal to t and b");
}

void criterion8(Outcome& o) {
    check_frame(o, hodograph_from_quaternion(testdata::example1()), "example 1");
    check_frame(o, hodograph_from_quaternion(testdata::example2()), "example 2");
    check_frame(o, testdata::remark_hodograph(), "degree-7 curve");
    for (std::uint64_t i = 0; i < 10; ++i) {
        check_frame(o, hodograph_from_hopf(generate_monotone_quintic(derive_seed(801, i))), "monotone quintic");
        check_frame(o, hodograph_from_quaternion(generate_general_quintic(derive_seed(802, i))), "general quintic");
    }
}

void criterion9(Outcome& o) {
    RationalSampler rng(901);
    int squares = 0, negatives = 0;
    for (int i = 0; i < 1000; ++i) {
        const RatPoly q = oracle::random_rat_poly(rng, static_cast<std::size_t>(rng.integer(0, 6)));
        const Rat c = rng.nonzero_rational();
        const RatPoly p = q * q * c;
        const bool truth = c.sign() > 0;
        squares += truth;
        negatives += !truth;
        const auto r = perfect_square_root(p);
        o.expect(r.has_value() == truth, "perfect_square_root disagrees on c*q^2");
        if (r) o.expect(r->squared() == p, "returned root does not square back");
    }
    for (int i = 0; i < 1000; ++i) {
        const RatPoly q = oracle::random_rat_poly(rng, static_cast<std::size_t>(rng.integer(0, 5)));
        const RatPoly base = q * q * rng.nonzero_rational();
        // A linear factor, or an irreducible quadratic t² + k (k > 0), to an odd power.
        const RatPoly factor = i % 2 == 0 ? RatPoly{-rng.rational(), Rat(1)}
                                          : RatPoly{Rat(rng.integer(1, 50), rng.integer(1, 50)), Rat(0), Rat(1)};
        const RatPoly p = base * pow(factor, 2 * rng.integer(0, 2) + 1);
        o.expect(!perfect_square_root(p).has_value(), "odd-multiplicity factor accepted as a square");
    }
    o.note << "1000 c*q^2 (" << squares << " with c > 0, " << negatives << " with c < 0), 1000 with an odd factor";
}

void criterion10(Outcome& o) {
    for (const auto& [h, v] : g_helices) {
        if (!v.axis || !v.slope_squared) {
            o.expect(false, "Helix verdict without axis or slope");
            continue;
        }
        const PolyVec3 u{RatPoly{(*v.axis)[0]}, RatPoly{(*v.axis)[1]}, RatPoly{(*v.axis)[2]}};
        const PolyVec3 d1 = h.as_vector();
        const PolyVec3 d2{h.dx.derivative(), h.dy.derivative(), h.dz.derivative()};
        const PolyVec3 c = cross(d1, d2);
        const RatPoly un = dot(u, u);
        const RatPoly at = dot(u, d1);
        const RatPoly ab = dot(u, c);
        const Rat& c2 = *v.slope_squared;
        o.expect((at * at - un * dot(d1, d1) * c2).is_zero(), "<u, a'>^2 != c^2 |u|^2 sigma^2");
        o.expect((ab * ab - un * dot(c, c) * (Rat(1) - c2)).is_zero(), "<u, a' x a''>^2 != (1-c^2) |u|^2 rho^2");
    }
    o.note << g_helices.size() << " Helix verdicts checked";
}

}  // namespace

int main() {
    const std::vector<std::pair<std::string, std::function<void(Outcome&)>>> criteria{
        {"Example 1 Wronskian and decomposition", criterion1},
        {"Example 1 classification", criterion2},
        {"Example 2 reproduction", criterion3},
        {"degree-7 counterexample", criterion4},
        {"helix iff 2-PH sweep", criterion5},
        {"PH cubics are helices", criterion6},
        {"cross-norm identity", criterion7},
        {"Frenet exactness", criterion8},
        {"perfect-square oracle", criterion9},
        {"helix-axis identities", criterion10},
    };

    int failed = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        Outcome o;
        const auto start = std::chrono::steady_clock::now();
        std::string error;
        try {
            criteria[i].second(o);
        } catch (const std::exception& e) {
            error = e.what();
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        const bool pass = error.empty() && o.failures == 0 && o.checks > 0;
        failed += !pass;
        std::printf("%s %2zu %s: %ld checks", pass ? "PASS" : "FAIL", i + 1, criteria[i].first.c_str(), o.checks);
        if (!o.note.str().empty()) std::printf(", %s", o.note.str().c_str());
        if (o.failures > 0) std::printf(", %ld failed (first: %s)", o.failures, o.first_failure.c_str());
        if (!error.empty()) std::printf(", exception: %s", error.c_str());
        std::printf(" [%.2fs]\n", secs);
        std::fflush(stdout);
    }
    return failed == 0 ? 0 : 1;
}
