#include "commands.hpp"

#include <algorithm>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>

#include <CLI11.hpp>
#include <gmp.h>

#include "fixtures.hpp"
#include "qhelix/errors.hpp"
#include "qhelix/generators.hpp"

namespace qhelix::cli {

std::string format_decimal(const Rat& r, int digits) {
    if (r.is_zero()) return "0";
    const mpf_class f(r.value(), static_cast<mp_bitcnt_t>(64 + 4 * digits));
    char* buf = nullptr;
    gmp_asprintf(&buf, "%.*Fg", digits, f.get_mpf_t());
    std::string s(buf);
    void (*free_fn)(void*, size_t);
    mp_get_memory_functions(nullptr, nullptr, &free_fn);
    free_fn(buf, s.size() + 1);
    return s;
}

namespace {

void emit(const ReportDocument& r, Format fmt, std::ostream& out) {
    if (fmt == Format::Json) out << to_json(r).dump(2) << "\n";
    else out << render_text(r);
}

std::string read_all(std::istream& in) {
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

CurveSpec read_spec(const std::string& path, std::istream& in) {
    if (path.empty() || path == "-") return parse_curve_spec(std::string_view(read_all(in)));
    std::ifstream f(path);
    if (!f) throw ParseError("cannot open input file " + path);
    return parse_curve_spec(std::string_view(read_all(f)));
}

}  // namespace

int cmd_classify(const CurveSpec& spec, Format fmt, std::ostream& out) {
    const ReportDocument r = build_report("classify", spec, false);
    emit(r, fmt, out);
    return is_degenerate(r) ? kDegenerate : kOk;
}

int cmd_analyze(const CurveSpec& spec, Format fmt, std::ostream& out) {
    const ReportDocument r = build_report("analyze", spec, true);
    emit(r, fmt, out);
    return is_degenerate(r) ? kDegenerate : kOk;
}

int cmd_sample(const CurveSpec& spec, const SampleRange& range, std::ostream& out, std::ostream& err) {
    if (range.n < 2) throw PreconditionError("sample needs n >= 2");
    if (!(range.from < range.to)) throw PreconditionError("sample needs from < to");
    if (range.precision < 1) throw PreconditionError("precision must be positive");
    const PolynomialCurve c = curve_of(spec);
    const Point3 o = c.evaluate(Rat(0));
    err << "# range [" << range.from.str() << ", " << range.to.str() << "], n = " << range.n << ", alpha(0) = ("
        << o[0].str() << ", " << o[1].str() << ", " << o[2].str() << ")\n";
    out << "t,x,y,z\n";
    const Rat step = (range.to - range.from) / Rat(range.n - 1);
    for (long i = 0; i < range.n; ++i) {
        const Rat t = range.from + step * Rat(i);
        const Point3 p = c.evaluate(t);
        out << format_decimal(t, range.precision) << "," << format_decimal(p[0], range.precision) << ","
            << format_decimal(p[1], range.precision) << "," << format_decimal(p[2], range.precision) << "\n";
    }
    return kOk;
}

int cmd_paper(const std::string& which, Format fmt, std::ostream& out) {
    std::vector<const Fixture*> selected;
    if (which == "all") {
        for (const auto& f : builtin_fixtures()) selected.push_back(&f);
    } else if (const Fixture* f = find_fixture(which)) {
        selected.push_back(f);
    } else {
        throw ParseError("unknown example \"" + which + "\" (expected example1, example2, counterexample or all)");
    }

    bool all_pass = true;
    json doc{{"tool", json{{"name", "qhelix"}, {"version", kToolVersion}}}, {"fixtures", json::array()}};
    for (const Fixture* f : selected) {
        const auto results = run_fixture(*f);
        const auto passed = std::count_if(results.begin(), results.end(), [](const auto& r) { return r.pass; });
        all_pass = all_pass && passed == static_cast<long>(results.size());
        if (fmt == Format::Text) {
            out << f->name << ": " << f->title << "\n";
            for (const auto& r : results) {
                out << "  " << (r.pass ? "PASS " : "FAIL ") << r.name;
                if (!r.pass) out << ": expected " << r.expected << ", got " << r.actual;
                out << "\n";
            }
            out << f->name << ": " << passed << "/" << results.size() << " checks passed\n";
        } else {
            json checks = json::array();
            for (const auto& r : results)
                checks.push_back(
                    json{{"name", r.name}, {"pass", r.pass}, {"expected", r.expected}, {"actual", r.actual}});
            json entry{{"name", f->name}, {"title", f->title}, {"checks", checks}, {"passed", passed},
                       {"total", results.size()}};
            entry["report"] = to_json(build_report("paper", parse_curve_spec(f->spec), true));
            doc["fixtures"].push_back(entry);
        }
    }
    if (fmt == Format::Json) {
        doc["all_passed"] = all_pass;
        out << doc.dump(2) << "\n";
    }
    return all_pass ? kOk : kInconsistent;
}

int cmd_generate(const std::string& family, std::uint64_t seed, long count, Format fmt, std::ostream& out) {
    if (count < 1) throw PreconditionError("count must be at least 1");
    if (family != "monotone" && family != "general")
        throw ParseError("unknown family \"" + family + "\" (expected monotone or general)");

    std::map<std::string, long> summary;
    json curves = json::array();
    if (fmt == Format::Text) out << "# family " << family << ", seed " << seed << ", count " << count << "\n";
    for (long i = 0; i < count; ++i) {
        const std::uint64_t s = derive_seed(seed, static_cast<std::uint64_t>(i));
        CurveSpec spec;
        if (family == "monotone") {
            spec.data = generate_monotone_quintic(s);
        } else {
            const auto a = generate_general_quintic(s);
            spec.data = QuaternionCoefficients{std::vector<Quaternion>(a.coeffs().begin(), a.coeffs().end())};
        }
        const ClassificationReport r = classify_quintic(*quaternion_form(spec));
        const std::string kind(to_string(r.quintic_class.kind));
        const std::string lancret(to_string(r.lancret.kind));
        ++summary[kind];
        if (fmt == Format::Text) {
            out << i << " " << s << " " << kind << " " << lancret << " " << to_json(spec).dump() << "\n";
        } else {
            curves.push_back(json{{"index", i}, {"seed", s}, {"spec", to_json(spec)}, {"class", kind},
                                  {"lancret", lancret}, {"two_ph", r.two_ph.has_value()}});
        }
    }
    if (fmt == Format::Text) {
        for (const auto& [k, n] : summary) out << "summary " << k << " " << n << "\n";
    } else {
        json sum = json::object();
        for (const auto& [k, n] : summary) sum[k] = n;
        out << json{{"family", family}, {"seed", seed}, {"count", count}, {"curves", curves}, {"summary", sum}}.dump(2)
            << "\n";
    }
    return kOk;
}

int run_cli(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exact analysis of Pythagorean-hodograph curves and quintic helices", "qhelix"};
    app.require_subcommand(1);
    app.set_version_flag("--version", std::string(kToolVersion));

    std::string format = "text";
    const auto add_format = [&](CLI::App* sub) {
        sub->add_option("--format", format, "Output format")->check(CLI::IsMember({"text", "json"}));
    };
    std::string input;
    const auto add_input = [&](CLI::App* sub) {
        sub->add_option("input", input, "Curve spec file (default: standard input)");
    };

    CLI::App* classify = app.add_subcommand("classify", "Classify a curve (quintic casework and Lancret test)");
    add_input(classify);
    add_format(classify);

    CLI::App* analyze = app.add_subcommand("analyze", "Print exact norms, curvature, torsion and Frenet frame");
    add_input(analyze);
    add_format(analyze);

    CLI::App* sample = app.add_subcommand("sample", "Evaluate the curve at equally spaced parameters (CSV)");
    add_input(sample);
    std::string from = "0", to = "1";
    long n = 11;
    int precision = 12;
    sample->add_option("--from", from, "Start parameter (rational)");
    sample->add_option("--to", to, "End parameter (rational)");
    sample->add_option("--n", n, "Number of samples");
    sample->add_option("--precision", precision, "Significant digits");

    CLI::App* paper = app.add_subcommand("paper", "Run a built-in reference fixture");
    std::string example = "all";
    paper->add_option("--example", example, "example1, example2, counterexample or all");
    add_format(paper);

    CLI::App* generate = app.add_subcommand("generate", "Generate and classify helix quintics");
    std::string family = "general";
    std::uint64_t seed = 0;
    long count = 10;
    generate->add_option("--family", family, "monotone or general");
    generate->add_option("--seed", seed, "Base seed");
    generate->add_option("--count", count, "Number of curves");
    add_format(generate);

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kOk : kUsage;
    }

    const Format fmt = format == "json" ? Format::Json : Format::Text;
    try {
        if (classify->parsed()) return cmd_classify(read_spec(input, in), fmt, out);
        if (analyze->parsed()) return cmd_analyze(read_spec(input, in), fmt, out);
        if (sample->parsed())
            return cmd_sample(read_spec(input, in), SampleRange{Rat::parse(from), Rat::parse(to), n, precision}, out,
                              err);
        if (paper->parsed()) return cmd_paper(example, fmt, out);
        if (generate->parsed()) return cmd_generate(family, seed, count, fmt, out);
    } catch (const InternalInconsistency& e) {
        err << "internal inconsistency: " << e.what() << "\n";
        return kInconsistent;
    } catch (const DegenerateInput& e) {
        err << "degenerate input: " << e.what() << "\n";
        return kDegenerate;
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return kUsage;
    }
    return kUsage;
}

}  // namespace qhelix::cli
