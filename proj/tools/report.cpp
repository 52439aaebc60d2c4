#include "report.hpp"

#include <sstream>

#include "qhelix/errors.hpp"

namespace qhelix::cli {

namespace {

template <class T, class F>
json optional_json(const std::optional<T>& v, F&& f) {
    return v ? f(*v) : json(nullptr);
}

template <class F>
auto optional_field(const json& j, const char* key, F&& f) -> std::optional<decltype(f(j))> {
    if (!j.contains(key) || j.at(key).is_null()) return std::nullopt;
    return f(j.at(key));
}

const json& field(const json& j, const char* key) {
    if (!j.is_object() || !j.contains(key)) throw ParseError(std::string("report is missing \"") + key + "\"");
    return j.at(key);
}

std::string string_field(const json& j, const char* key) {
    const json& v = field(j, key);
    if (!v.is_string()) throw ParseError(std::string("\"") + key + "\" must be a string");
    return v.get<std::string>();
}

json encode_norms(const TwoPhNorms& n) { return json{{"sigma", encode(n.sigma)}, {"rho", encode(n.rho)}}; }

TwoPhNorms decode_norms(const json& j) {
    return {decode_scaled_sqrt(field(j, "sigma")), decode_scaled_sqrt(field(j, "rho"))};
}

json encode_direction(const ScaledDirection& d) {
    json c = json::array();
    for (const auto& f : d.components) c.push_back(encode(f));
    return json{{"components", c}, {"scale", encode(d.scale)}};
}

ScaledDirection decode_direction(const json& j) {
    const json& c = field(j, "components");
    if (!c.is_array() || c.size() != 3) throw ParseError("direction needs three components");
    ScaledDirection d;
    for (std::size_t i = 0; i < 3; ++i) d.components[i] = decode_rational_function(c[i]);
    d.scale = decode_rat(field(j, "scale"));
    return d;
}

json encode_hodograph(const Hodograph& h) {
    return json{{"x", encode(h.dx)}, {"y", encode(h.dy)}, {"z", encode(h.dz)}};
}

Hodograph decode_hodograph(const json& j) {
    try {
        return {decode_rat_poly(field(j, "x")), decode_rat_poly(field(j, "y")), decode_rat_poly(field(j, "z"))};
    } catch (const DegenerateInput& e) {
        throw ParseError(e.what());
    }
}

std::vector<std::string> decode_notes(const json& j) {
    std::vector<std::string> out;
    if (!j.is_array()) throw ParseError("notes must be an array");
    for (const auto& n : j) {
        if (!n.is_string()) throw ParseError("notes must be strings");
        out.push_back(n.get<std::string>());
    }
    return out;
}

json encode_details(const AnalysisDetails& d) {
    const auto rf = [](const RationalFunction& f) { return encode(f); };
    return json{{"speed_squared", encode(d.speed_squared)},
                {"rho_squared", encode(d.rho_squared)},
                {"curvature_squared", optional_json(d.curvature_squared, rf)},
                {"torsion", optional_json(d.torsion, rf)},
                {"lancret_ratio_squared", optional_json(d.lancret_ratio_squared, rf)},
                {"frame", optional_json(d.frame, [](const FrenetFrame& f) { return encode(f); })}};
}

AnalysisDetails decode_details(const json& j) {
    AnalysisDetails d;
    d.speed_squared = decode_rat_poly(field(j, "speed_squared"));
    d.rho_squared = decode_rat_poly(field(j, "rho_squared"));
    d.curvature_squared = optional_field(j, "curvature_squared", decode_rational_function);
    d.torsion = optional_field(j, "torsion", decode_rational_function);
    d.lancret_ratio_squared = optional_field(j, "lancret_ratio_squared", decode_rational_function);
    d.frame = optional_field(j, "frame", decode_frame);
    return d;
}

std::string vec_string(const RationalVec3& v) {
    return "(" + to_string(v[0]) + ", " + to_string(v[1]) + ", " + to_string(v[2]) + ")";
}

std::string direction_string(const ScaledDirection& d) {
    std::string s = vec_string(d.components);
    if (d.scale != Rat(1)) s += " / sqrt(" + d.scale.str() + ")";
    return s;
}

std::string point_string(const Point3& p) { return "(" + p[0].str() + ", " + p[1].str() + ", " + p[2].str() + ")"; }

}  // namespace

json encode(const HelixVerdict& v) {
    return json{{"kind", to_string(v.kind)},
                {"slope_squared", optional_json(v.slope_squared, [](const Rat& r) { return encode(r); })},
                {"axis", optional_json(v.axis, [](const Point3& p) { return encode(p); })}};
}

HelixVerdict decode_helix_verdict(const json& j) {
    const auto kind = helix_kind_from_string(string_field(j, "kind"));
    if (!kind) throw ParseError("unknown helix kind " + field(j, "kind").dump());
    return {*kind, optional_field(j, "slope_squared", decode_rat), optional_field(j, "axis", decode_point)};
}

json encode(const ClassificationReport& r) {
    json dec = nullptr;
    if (r.decomposition)
        dec = json{{"kind", to_string(r.decomposition->kind)},
                   {"omega", encode(r.decomposition->omega)},
                   {"z_squared", encode(r.decomposition->z_squared)}};
    const QuinticClass& q = r.quintic_class;
    json cls{{"kind", to_string(q.kind)},
             {"dependence", optional_json(q.dependence,
                                          [](const QuaternionDependence& d) {
                                              return json{{"c0", encode(d.c0)},
                                                          {"c2", encode(d.c2)},
                                                          {"degenerate", d.degenerate}};
                                          })},
             {"shared_factor", optional_json(q.shared_factor, [](const GaussPoly& p) { return encode(p); })},
             {"reason", q.reason}};
    return json{{"ph", optional_json(r.ph, [](const ScaledSqrt& s) { return encode(s); })},
                {"two_ph", optional_json(r.two_ph, encode_norms)},
                {"wronskian", encode(r.wronskian)},
                {"decomposition", dec},
                {"class", cls},
                {"lancret", encode(r.lancret)},
                {"notes", r.notes}};
}

ClassificationReport decode_classification(const json& j) {
    ClassificationReport r;
    r.ph = optional_field(j, "ph", decode_scaled_sqrt);
    r.two_ph = optional_field(j, "two_ph", decode_norms);
    r.wronskian = decode_gauss_poly(field(j, "wronskian"));
    r.decomposition = optional_field(j, "decomposition", [](const json& d) {
        const auto kind = decomposition_case_from_string(string_field(d, "kind"));
        if (!kind) throw ParseError("unknown decomposition case " + field(d, "kind").dump());
        return WronskianDecomposition{decode_rat_poly(field(d, "omega")), decode_gauss_poly(field(d, "z_squared")),
                                      *kind};
    });
    const json& cls = field(j, "class");
    const auto kind = quintic_kind_from_string(string_field(cls, "kind"));
    if (!kind) throw ParseError("unknown quintic kind " + field(cls, "kind").dump());
    r.quintic_class.kind = *kind;
    r.quintic_class.dependence = optional_field(cls, "dependence", [](const json& d) {
        const json& flag = field(d, "degenerate");
        if (!flag.is_boolean()) throw ParseError("\"degenerate\" must be a boolean");
        return QuaternionDependence{decode_rat(field(d, "c0")), decode_rat(field(d, "c2")), flag.get<bool>()};
    });
    r.quintic_class.shared_factor = optional_field(cls, "shared_factor", decode_gauss_poly);
    r.quintic_class.reason = string_field(cls, "reason");
    r.lancret = decode_helix_verdict(field(j, "lancret"));
    r.notes = decode_notes(field(j, "notes"));
    return r;
}

json encode(const FrenetFrame& f) {
    return json{{"tangent", encode_direction(f.tangent)},
                {"binormal", encode_direction(f.binormal)},
                {"normal", encode_direction(f.normal)}};
}

FrenetFrame decode_frame(const json& j) {
    return {decode_direction(field(j, "tangent")), decode_direction(field(j, "binormal")),
            decode_direction(field(j, "normal"))};
}

bool is_degenerate(const ReportDocument& r) { return r.lancret.kind == HelixKind::Line; }

ReportDocument build_report(const std::string& command, const CurveSpec& spec, bool with_details) {
    ReportDocument r;
    r.command = command;
    r.input = spec;
    r.hodograph = hodograph_of(spec);
    r.ph = is_ph(r.hodograph);
    r.two_ph = is_2ph(r.hodograph);
    r.lancret = is_helix(r.hodograph);

    if (const auto a = quaternion_form(spec); a && a->size() <= 3) {
        r.quintic = classify_quintic(*a);
    } else if (a) {
        r.notes.emplace_back("quintic casework skipped: quaternion degree above 2");
    } else {
        r.notes.emplace_back("quintic casework needs quaternion or Hopf input; Lancret verdict only");
    }

    if (r.lancret.kind == HelixKind::Line)
        r.notes.emplace_back("straight line: curvature vanishes identically and the Frenet frame is undefined");
    if (r.lancret.kind == HelixKind::Planar) r.notes.emplace_back("planar curve: torsion vanishes identically");

    if (with_details) {
        AnalysisDetails d;
        const CrossNorm c = cross_norm(r.hodograph);
        const PolyVec3 v = r.hodograph.as_vector();
        d.speed_squared = dot(v, v);
        d.rho_squared = c.rho_squared;
        if (!c.rho_squared.is_zero()) {
            const CurvatureData k = curvature_torsion(r.hodograph);
            d.curvature_squared = k.curvature_squared;
            d.torsion = k.torsion;
            d.lancret_ratio_squared = k.lancret_ratio_squared;
            if (r.two_ph) d.frame = frenet_frame(r.hodograph);
        }
        r.details = std::move(d);
    }
    return r;
}

json to_json(const ReportDocument& r) {
    return json{{"tool", json{{"name", "qhelix"}, {"version", r.tool_version}}},
                {"command", r.command},
                {"input", to_json(r.input)},
                {"seed", r.seed ? json(*r.seed) : json(nullptr)},
                {"hodograph", encode_hodograph(r.hodograph)},
                {"ph", optional_json(r.ph, [](const ScaledSqrt& s) { return encode(s); })},
                {"two_ph", optional_json(r.two_ph, encode_norms)},
                {"lancret", encode(r.lancret)},
                {"quintic", optional_json(r.quintic, [](const ClassificationReport& c) { return encode(c); })},
                {"analysis", optional_json(r.details, encode_details)},
                {"notes", r.notes}};
}

ReportDocument report_from_json(const json& j) {
    try {
        ReportDocument r;
        r.tool_version = string_field(field(j, "tool"), "version");
        r.command = string_field(j, "command");
        r.input = parse_curve_spec(field(j, "input"));
        r.seed = optional_field(j, "seed", [](const json& s) {
            if (!s.is_number_unsigned()) throw ParseError("seed must be an unsigned integer");
            return s.get<std::uint64_t>();
        });
        r.hodograph = decode_hodograph(field(j, "hodograph"));
        r.ph = optional_field(j, "ph", decode_scaled_sqrt);
        r.two_ph = optional_field(j, "two_ph", decode_norms);
        r.lancret = decode_helix_verdict(field(j, "lancret"));
        r.quintic = optional_field(j, "quintic", decode_classification);
        r.details = optional_field(j, "analysis", decode_details);
        r.notes = decode_notes(field(j, "notes"));
        return r;
    } catch (const json::exception& e) {
        throw ParseError(std::string("malformed report: ") + e.what());
    }
}

std::string render_text(const ReportDocument& r) {
    std::ostringstream os;
    os << "qhelix " << r.tool_version << " " << r.command << "\n";
    os << "input form: " << to_string(r.input.form()) << "\n";
    if (r.seed) os << "seed: " << *r.seed << "\n";
    os << "hodograph:\n";
    os << "  x'(t) = " << to_string(r.hodograph.dx) << "\n";
    os << "  y'(t) = " << to_string(r.hodograph.dy) << "\n";
    os << "  z'(t) = " << to_string(r.hodograph.dz) << "\n";
    os << "PH: " << (r.ph ? "yes, sigma = " + to_string(*r.ph) : std::string("no")) << "\n";
    if (r.two_ph) os << "2-PH: yes, rho = " << to_string(r.two_ph->rho) << "\n";
    else os << "2-PH: no\n";
    os << "Lancret verdict: " << to_string(r.lancret.kind) << "\n";
    if (r.lancret.axis)
        os << "  axis: " << point_string(*r.lancret.axis) << ", c^2 = " << r.lancret.slope_squared->str() << "\n";

    if (r.quintic) {
        const ClassificationReport& q = *r.quintic;
        os << "quintic class: " << to_string(q.quintic_class.kind) << "\n";
        os << "  W = " << to_string(q.wronskian) << "\n";
        if (q.decomposition) {
            os << "  decomposition: " << to_string(q.decomposition->kind);
            if (q.decomposition->kind != DecompositionCase::Degenerate)
                os << ", omega = " << to_string(q.decomposition->omega)
                   << ", z^2 = " << to_string(q.decomposition->z_squared);
            os << "\n";
        }
        if (q.quintic_class.shared_factor) os << "  shared factor: " << to_string(*q.quintic_class.shared_factor) << "\n";
        if (q.quintic_class.dependence)
            os << "  dependence: A1 = (" << q.quintic_class.dependence->c0.str() << ")*A0 + ("
               << q.quintic_class.dependence->c2.str() << ")*A2"
               << (q.quintic_class.dependence->degenerate ? " (A0, A2 dependent)" : "") << "\n";
        if (!q.quintic_class.reason.empty()) os << "  reason: " << q.quintic_class.reason << "\n";
        for (const auto& n : q.notes) os << "  note: " << n << "\n";
    }

    if (r.details) {
        const AnalysisDetails& d = *r.details;
        os << "analysis:\n";
        os << "  sigma^2 = " << to_string(d.speed_squared) << "\n";
        os << "  rho^2 = " << to_string(d.rho_squared) << "\n";
        if (r.ph) os << "  sigma = " << to_string(*r.ph) << "\n";
        if (r.two_ph) os << "  rho = " << to_string(r.two_ph->rho) << "\n";
        if (d.curvature_squared) os << "  kappa^2 = " << to_string(*d.curvature_squared) << "\n";
        if (d.torsion) os << "  tau = " << to_string(*d.torsion) << "\n";
        if (d.lancret_ratio_squared) os << "  (tau/kappa)^2 = " << to_string(*d.lancret_ratio_squared) << "\n";
        if (d.frame) {
            os << "  tangent = " << direction_string(d.frame->tangent) << "\n";
            os << "  normal = " << direction_string(d.frame->normal) << "\n";
            os << "  binormal = " << direction_string(d.frame->binormal) << "\n";
        }
    }
    for (const auto& n : r.notes) os << "note: " << n << "\n";
    return os.str();
}

}  // namespace qhelix::cli
