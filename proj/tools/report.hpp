#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "curve_spec.hpp"

namespace qhelix::cli {

inline constexpr const char* kToolVersion = "0.1.0";

/// Differential-geometric quantities printed by `analyze`.
struct AnalysisDetails {
    RatPoly speed_squared;
    RatPoly rho_squared;
    std::optional<RationalFunction> curvature_squared;  // absent for lines
    std::optional<RationalFunction> torsion;
    std::optional<RationalFunction> lancret_ratio_squared;
    std::optional<FrenetFrame> frame;  // 2-PH curves with ρ ≢ 0
    friend bool operator==(const AnalysisDetails&, const AnalysisDetails&) = default;
};

struct ReportDocument {
    std::string tool_version = kToolVersion;
    std::string command;
    CurveSpec input;
    std::optional<std::uint64_t> seed;

    Hodograph hodograph{RatPoly{Rat(1)}, {}, {}};
    std::optional<ScaledSqrt> ph;
    std::optional<TwoPhNorms> two_ph;
    HelixVerdict lancret;
    std::optional<ClassificationReport> quintic;
    std::optional<AnalysisDetails> details;
    std::vector<std::string> notes;

    friend bool operator==(const ReportDocument&, const ReportDocument&) = default;
};

/// True when the verdict is a degenerate-input one (straight line, W ≡ 0).
bool is_degenerate(const ReportDocument& r);

/// Analysis-level report; quintic casework is added when the input has a
/// quaternion form of degree ≤ 2. `with_details` fills the analyze section.
ReportDocument build_report(const std::string& command, const CurveSpec& spec, bool with_details);

json to_json(const ReportDocument& r);
/// Throws ParseError on malformed documents.
ReportDocument report_from_json(const json& j);
std::string render_text(const ReportDocument& r);

json encode(const HelixVerdict& v);
json encode(const ClassificationReport& r);
json encode(const FrenetFrame& f);
HelixVerdict decode_helix_verdict(const json& j);
ClassificationReport decode_classification(const json& j);
FrenetFrame decode_frame(const json& j);

}  // namespace qhelix::cli
