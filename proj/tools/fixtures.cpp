#include "fixtures.hpp"

#include <functional>
#include <map>

#include "qhelix/errors.hpp"

namespace qhelix::cli {

namespace {

// First worked example: u = t²−3t, v = t²−5t+10, p = −2t²+3t+5, q = t²−9t+10.
// ω = 1 and z = √(1−7i)·(t−(1+2i)).
constexpr const char* kExample1 = R"({
  "spec": {"form": "quaternion",
           "coefficients": [["0","10","5","10"], ["-3","-5","3","-9"], ["1","1","-2","1"]]},
  "expected": {
    "hodograph": {"x": ["-25","50","-36","14","-3"],
                  "y": ["100","-50","14","2","-2"],
                  "z": ["200","-250","138","-46","6"]},
    "sigma": ["225","-250","144","-46","7"],
    "two_ph": true,
    "wronskian": [["25","25"], ["-30","10"], ["1","-7"]],
    "decomposition": "OmegaConstant",
    "omega": ["1"],
    "z_squared": [["25","25"], ["-30","10"], ["1","-7"]],
    "shared_factor": [["-1","-2"], ["1","0"]],
    "class": "MonotoneHelix",
    "lancret": "Helix",
    "lancret_ratio_squared": {"num": ["9"], "den": ["50"]}
  }
})";

// Second worked example: ω = 26(3 − 7t + 3t²), z = √(−1+i).
constexpr const char* kExample2 = R"({
  "spec": {"form": "quaternion",
           "coefficients": [["5","1","-1","3"], ["12","18","-12","24"], ["-19","-22","15","-31"]]},
  "expected": {
    "sigma": ["36","324","738","-3096","2031"],
    "two_ph": true,
    "wronskian": [["-78","78"], ["182","-182"], ["-78","78"]],
    "decomposition": "ZConstant",
    "omega": ["3","-7","3"],
    "z_squared": [["-26","26"]],
    "dependence": ["-6/7","-6/7"],
    "tan_two_theta": "-1",
    "m1_squared": "66248",
    "class": "GeneralHelix",
    "lancret": "Helix",
    "lancret_ratio_squared": {"num": ["121"], "den": ["338"]}
  }
})";

// Degree-7 curve α = (−3t + t³ + t⁵/5 + t⁷/21, 3t² − t⁴/2, −2t³): 2-PH but
// τ/κ = (−9 + 9t⁴ + 2t⁶)/(9(1+t²)²) is not constant.
constexpr const char* kCounterexample = R"({
  "spec": {"form": "curve",
           "coefficients": {"x": ["0","-3","0","1","0","1/5","0","1/21"],
                            "y": ["0","0","3","0","-1/2"],
                            "z": ["0","0","0","-2"]}},
  "expected": {
    "sigma": ["3","0","3","0","1","0","1/3"],
    "rho": ["18","0","36","0","24","0","8","0","2"],
    "two_ph": true,
    "lancret": "NotHelix",
    "lancret_ratio_squared": {"num": ["81","0","0","0","-162","0","-36","0","81","0","36","0","4"],
                              "den": ["81","0","324","0","486","0","324","0","81"]},
    "alpha_at": {"t": "1", "point": ["-184/105","5/2","-2"]}
  }
})";

Fixture make(std::string name, std::string title, const char* text) {
    const json doc = json::parse(text);
    return {std::move(name), std::move(title), doc.at("spec"), doc.at("expected")};
}

struct Computed {
    CurveSpec spec;
    Hodograph hodograph;
    std::optional<ClassificationReport> quintic;
    std::optional<TwoPhNorms> two_ph;
    HelixVerdict lancret;
};

json require_rational(const std::optional<ScaledSqrt>& s) {
    if (!s) return "not a polynomial";
    const auto r = s->as_rational();
    if (!r) return "irrational scale sqrt(" + s->scale.str() + ")";
    return encode(*r);
}

const ClassificationReport& quintic(const Computed& c) {
    if (!c.quintic) throw PreconditionError("no quintic classification for this input");
    return *c.quintic;
}

// Each check returns (canonical expected, actual); canonicalizing through the
// exact types lets equal values written differently compare equal.
using Check = std::function<std::pair<json, json>(const json& expected, const Computed& c)>;

const std::map<std::string, Check>& checks() {
    static const std::map<std::string, Check> table{
        {"hodograph",
         [](const json& e, const Computed& c) {
             const auto canon = [](const json& v) { return encode(decode_rat_poly(v)); };
             return std::pair{json{{"x", canon(e.at("x"))}, {"y", canon(e.at("y"))}, {"z", canon(e.at("z"))}},
                              json{{"x", encode(c.hodograph.dx)},
                                   {"y", encode(c.hodograph.dy)},
                                   {"z", encode(c.hodograph.dz)}}};
         }},
        {"sigma",
         [](const json& e, const Computed& c) {
             return std::pair{encode(decode_rat_poly(e)), require_rational(is_ph(c.hodograph))};
         }},
        {"rho",
         [](const json& e, const Computed& c) {
             return std::pair{encode(decode_rat_poly(e)), require_rational(cross_norm(c.hodograph).rho)};
         }},
        {"two_ph", [](const json& e, const Computed& c) { return std::pair{e, json(c.two_ph.has_value())}; }},
        {"wronskian",
         [](const json& e, const Computed& c) {
             return std::pair{encode(decode_gauss_poly(e)), encode(quintic(c).wronskian)};
         }},
        {"decomposition",
         [](const json& e, const Computed& c) {
             const auto& d = quintic(c).decomposition;
             return std::pair{e, d ? json(to_string(d->kind)) : json("none")};
         }},
        {"omega",
         [](const json& e, const Computed& c) {
             const auto& d = quintic(c).decomposition;
             return std::pair{encode(decode_rat_poly(e)), d ? encode(d->omega) : json("none")};
         }},
        {"z_squared",
         [](const json& e, const Computed& c) {
             const auto& d = quintic(c).decomposition;
             return std::pair{encode(decode_gauss_poly(e)), d ? encode(d->z_squared) : json("none")};
         }},
        {"shared_factor",
         [](const json& e, const Computed& c) {
             const auto& f = quintic(c).quintic_class.shared_factor;
             return std::pair{encode(decode_gauss_poly(e)), f ? encode(*f) : json("none")};
         }},
        {"dependence",
         [](const json& e, const Computed& c) {
             const auto& d = quintic(c).quintic_class.dependence;
             return std::pair{json::array({encode(decode_rat(e.at(0))), encode(decode_rat(e.at(1)))}),
                              d ? json::array({encode(d->c0), encode(d->c2)}) : json("none")};
         }},
        {"tan_two_theta",
         [](const json& e, const Computed& c) {
             const auto t = lemma_two_parameters(*quaternion_form(c.spec)).tan_two_theta;
             return std::pair{encode(decode_rat(e)), t ? encode(*t) : json("none")};
         }},
        {"m1_squared",
         [](const json& e, const Computed& c) {
             return std::pair{encode(decode_rat(e)), encode(lemma_two_parameters(*quaternion_form(c.spec)).m1_squared)};
         }},
        {"class",
         [](const json& e, const Computed& c) {
             return std::pair{e, json(to_string(quintic(c).quintic_class.kind))};
         }},
        {"lancret", [](const json& e, const Computed& c) { return std::pair{e, json(to_string(c.lancret.kind))}; }},
        {"lancret_ratio_squared",
         [](const json& e, const Computed& c) {
             return std::pair{encode(decode_rational_function(e)),
                              encode(curvature_torsion(c.hodograph).lancret_ratio_squared)};
         }},
        {"alpha_at",
         [](const json& e, const Computed& c) {
             const Rat t = decode_rat(e.at("t"));
             return std::pair{json{{"t", encode(t)}, {"point", encode(decode_point(e.at("point")))}},
                              json{{"t", encode(t)}, {"point", encode(curve_of(c.spec).evaluate(t))}}};
         }},
    };
    return table;
}

}  // namespace

const std::vector<Fixture>& builtin_fixtures() {
    static const std::vector<Fixture> all{
        make("example1", "first worked example (monotone helix)", kExample1),
        make("example2", "second worked example (general helix)", kExample2),
        make("counterexample", "degree-7 2-PH curve that is not a helix", kCounterexample),
    };
    return all;
}

const Fixture* find_fixture(std::string_view name) {
    for (const auto& f : builtin_fixtures())
        if (f.name == name) return &f;
    return nullptr;
}

std::vector<CheckResult> run_fixture(const Fixture& f) {
    Computed c{parse_curve_spec(f.spec), Hodograph(RatPoly{Rat(1)}, {}, {}), std::nullopt, std::nullopt, {}};
    c.hodograph = hodograph_of(c.spec);
    c.two_ph = is_2ph(c.hodograph);
    c.lancret = is_helix(c.hodograph);
    if (const auto a = quaternion_form(c.spec); a && a->size() <= 3) c.quintic = classify_quintic(*a);

    std::vector<CheckResult> out;
    for (const auto& [name, expected] : f.expected.items()) {
        CheckResult r{name, false, expected.dump(), ""};
        const auto it = checks().find(name);
        if (it == checks().end()) {
            r.actual = "unknown check";
        } else {
            try {
                auto [want, got] = it->second(expected, c);
                r.expected = want.dump();
                r.actual = got.dump();
                r.pass = want == got;
            } catch (const std::exception& e) {
                r.actual = std::string("error: ") + e.what();
            }
        }
        out.push_back(std::move(r));
    }
    return out;
}

}  // namespace qhelix::cli
