#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "curve_spec.hpp"
#include "report.hpp"

namespace qhelix::cli {

enum ExitCode : int { kOk = 0, kUsage = 1, kDegenerate = 2, kInconsistent = 3 };

enum class Format { Text, Json };

struct SampleRange {
    Rat from{0};
    Rat to{1};
    long n = 11;
    int precision = 12;
};

/// Decimal rendering with `digits` significant digits.
std::string format_decimal(const Rat& r, int digits);

int cmd_classify(const CurveSpec& spec, Format fmt, std::ostream& out);
int cmd_analyze(const CurveSpec& spec, Format fmt, std::ostream& out);
/// CSV rows on `out`, range metadata on `err`.
int cmd_sample(const CurveSpec& spec, const SampleRange& range, std::ostream& out, std::ostream& err);
/// `which` is a fixture name or "all".
int cmd_paper(const std::string& which, Format fmt, std::ostream& out);
int cmd_generate(const std::string& family, std::uint64_t seed, long count, Format fmt, std::ostream& out);

/// Full command line (args excludes the program name). Errors are reported on
/// `err` and mapped to exit codes; nothing is thrown.
int run_cli(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace qhelix::cli
