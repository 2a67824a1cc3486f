#include "polycert/cli.hpp"

#include "polycert/checker.hpp"
#include "polycert/synth.hpp"
#include "polycert/trace.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <chrono>
#include <filesystem>
#include <fstream>
#include <future>
#include <iomanip>
#include <sstream>

namespace polycert::cli {

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

json to_json(const Report& r) {
    json rules = json::array();
    for (const auto& rule : r.rules) {
        json j{{"number", rule.number},   {"rule", rule.rule},     {"constraint", rule.constraint},
               {"verdict", rule.verdict}, {"reason", rule.reason}, {"detail", rule.detail},
               {"steps", rule.steps}};
        j["counterexample"] = rule.counterexample ? json(*rule.counterexample) : json(nullptr);
        rules.push_back(std::move(j));
    }
    json out{{"input", r.input}, {"verdict", r.verdict}, {"rules", std::move(rules)},
             {"timing_ms", r.timing_ms}, {"version", r.version}};
    out["error"] = r.error ? json(*r.error) : json(nullptr);
    return out;
}

std::optional<std::string> read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) return std::nullopt;
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

std::int64_t elapsed_ms(std::chrono::steady_clock::time_point start) {
    return std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start).count();
}

RuleReport rule_report(const Afs& afs, const RuleResult& r) {
    RuleReport out;
    out.number = r.rule + 1;
    out.rule = render_rule(afs, afs.rules[r.rule]);
    out.constraint = r.constraint.to_string();
    if (const auto* p = std::get_if<Proven>(&r.verdict)) {
        out.verdict = "PROVEN";
        out.steps = p->trace.render();
    } else {
        const auto& u = std::get<Unknown>(r.verdict);
        out.verdict = "UNKNOWN";
        out.reason = to_string(u.reason);
        out.detail = u.detail;
        out.steps = u.trace.render();
        if (u.counterexample) out.counterexample = u.counterexample->to_string(constraint_names(r.constraint.ctx));
    }
    return out;
}

}  // namespace

std::string serialize(const Report& report) { return to_json(report).dump(2) + "\n"; }

std::string serialize(const std::vector<Report>& batch) {
    json files = json::array();
    std::size_t counts[3] = {0, 0, 0};
    for (const auto& r : batch) {
        files.push_back(to_json(r));
        ++counts[r.verdict == "CERTIFIED" ? 0 : r.verdict == "REJECTED" ? 1 : 2];
    }
    json out{{"files", std::move(files)},
             {"summary", {{"certified", counts[0]}, {"rejected", counts[1]}, {"error", counts[2]}}},
             {"version", kVersion}};
    return out.dump(2) + "\n";
}

VerifyOutcome verify_text(const std::string& input_name, const std::string& text, const VerifyOptions& options) {
    auto start = std::chrono::steady_clock::now();
    VerifyOutcome out;
    out.report.input = input_name;
    try {
        auto [afs, J] = elaborate(parse_trace(text));
        CheckLimits limits;
        limits.samples = options.samples;
        limits.backtrack = options.backtrack;
        CertResult cert = certify(afs, J, limits);
        std::ostringstream log;
        for (const auto& r : cert.rules) {
            out.report.rules.push_back(rule_report(afs, r));
            const RuleReport& rr = out.report.rules.back();
            log << "rule " << rr.number << ": " << rr.rule << "\n";
            if (rr.verdict == "PROVEN") {
                for (const auto& s : rr.steps) log << "  " << s << "\n";
            } else {
                log << "  " << rr.constraint << "\n  not proven: " << rr.reason;
                if (!rr.detail.empty()) log << ": " << rr.detail;
                log << "\n";
                if (rr.counterexample) log << "  counterexample: " << *rr.counterexample << "\n";
            }
        }
        if (cert.error) {
            out.report.error = *cert.error;
            log << "error: " << *cert.error << "\n";
        }
        out.report.verdict = cert.certified ? "CERTIFIED" : "REJECTED";
        out.exit_code = cert.certified ? Certified : Rejected;
        log << out.report.verdict << "\n";
        out.log = log.str();
    } catch (const ParseError& e) {
        out.report.verdict = "ERROR";
        out.report.error = e.what();
        out.diag = input_name + ":" + e.what() + "\n";
        out.log = "ERROR\n";
    } catch (const ElaborationError& e) {
        out.report.verdict = "ERROR";
        out.report.error = e.what();
        out.diag = input_name + ":" + e.what() + "\n";
        out.log = "ERROR\n";
    } catch (const Error& e) {
        out.report.verdict = "ERROR";
        out.report.error = e.what();
        out.diag = input_name + ": " + e.what() + "\n";
        out.log = "ERROR\n";
    }
    out.report.timing_ms = elapsed_ms(start);
    return out;
}

VerifyOutcome verify_file(const std::string& path, const VerifyOptions& options) {
    auto text = read_file(path);
    if (!text) {
        VerifyOutcome out;
        out.report.input = path;
        out.report.verdict = "ERROR";
        out.report.error = "cannot read file";
        out.diag = path + ": cannot read file\n";
        out.log = "ERROR\n";
        return out;
    }
    return verify_text(path, *text, options);
}

namespace {

bool write_file(const std::string& path, const std::string& content, std::ostream& err) {
    std::ofstream o(path, std::ios::binary);
    o << content;
    if (!o) {
        err << path << ": cannot write file\n";
        return false;
    }
    return true;
}

int verify_directory(const std::string& dir, const VerifyOptions& options, const std::optional<std::string>& report,
                     bool quiet, std::ostream& out, std::ostream& err) {
    auto start = std::chrono::steady_clock::now();
    std::vector<std::string> files;
    for (const auto& entry : fs::directory_iterator(dir))
        if (entry.is_regular_file() && entry.path().extension() == ".onijn") files.push_back(entry.path().string());
    std::sort(files.begin(), files.end());

    std::vector<std::future<VerifyOutcome>> jobs;
    for (const auto& f : files)
        jobs.push_back(std::async(std::launch::async, [f, options] { return verify_file(f, options); }));
    std::vector<Report> reports;
    int code = Certified;
    std::size_t counts[3] = {0, 0, 0};
    std::size_t width = 4;
    for (const auto& f : files) width = std::max(width, f.size());
    if (!quiet) out << std::left << std::setw(static_cast<int>(width)) << "file" << "  verdict     ms\n";
    for (std::size_t i = 0; i < jobs.size(); ++i) {
        VerifyOutcome o = jobs[i].get();
        err << o.diag;
        code = std::max(code, o.exit_code);
        ++counts[o.exit_code];
        if (!quiet)
            out << std::left << std::setw(static_cast<int>(width)) << files[i] << "  " << std::setw(10)
                << o.report.verdict << "  " << o.report.timing_ms << "\n";
        reports.push_back(std::move(o.report));
    }
    out << "certified: " << counts[0] << "  rejected: " << counts[1] << "  error: " << counts[2]
        << "  total: " << files.size() << " files, " << elapsed_ms(start) << " ms\n";
    if (report && !write_file(*report, serialize(reports), err)) return InputError;
    return code;
}

int synth_command(const std::string& input, const std::string& output, const SearchBounds& bounds, std::ostream& out,
                  std::ostream& err) {
    auto text = read_file(input);
    if (!text) {
        err << input << ": cannot read file\n";
        return InputError;
    }
    Afs afs;
    try {
        afs = elaborate_system(parse_trace(*text));
        afs.validate();
    } catch (const Error& e) {
        err << input << ":" << e.what() << "\n";
        return InputError;
    }
    SearchResult result = search(afs, bounds);
    if (!result.interpretation) {
        out << "MAYBE" << (result.timed_out ? " (timeout)" : "") << "\n";
        return Rejected;
    }
    if (!write_file(output, render_trace(afs, result.interpretation), err)) return InputError;
    out << "YES\n" << "wrote " << output << " after " << result.candidates << " rule checks\n";
    return Certified;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Certifier for polynomial termination proofs of higher-order rewriting", "polycert"};
    app.require_subcommand(1);
    app.set_version_flag("--version", kVersion);

    VerifyOptions options;
    std::string target;
    std::optional<std::string> report;
    bool quiet = false;
    auto* verify = app.add_subcommand("verify", "Check a proof trace, or every .onijn file in a directory");
    verify->add_option("path", target, "Trace file or directory")->required();
    verify->add_option("--report", report, "Write a JSON report");
    verify->add_option("--samples", options.samples, "Falsifier assignments per unproven rule");
    verify->add_option("--backtrack", options.backtrack, "Host assignments tried by the merge step");
    verify->add_flag("--quiet", quiet, "Only print the verdict");

    std::string input, output;
    SearchBounds bounds;
    long long timeout_ms = bounds.timeout.count();
    auto* synth = app.add_subcommand("synth", "Search for an interpretation and write a complete trace");
    synth->add_option("path", input, "Trace without (or ignoring) its Interpretation")->required();
    synth->add_option("-o,--output", output, "Output trace")->required();
    synth->add_option("--max-coeff", bounds.max_coefficient, "Largest template coefficient");
    synth->add_option("--timeout", timeout_ms, "Search budget in milliseconds")->check(CLI::NonNegativeNumber);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return Certified;
    } catch (const CLI::CallForVersion&) {
        out << kVersion << "\n";
        return Certified;
    } catch (const CLI::ParseError& e) {
        err << e.what() << "\n";
        return InputError;
    }

    if (*synth) {
        bounds.timeout = std::chrono::milliseconds(timeout_ms);
        return synth_command(input, output, bounds, out, err);
    }

    std::error_code ec;
    if (fs::is_directory(target, ec)) return verify_directory(target, options, report, quiet, out, err);
    VerifyOutcome o = verify_file(target, options);
    err << o.diag;
    if (quiet) {
        out << o.report.verdict << "\n";
    } else {
        out << o.log;
    }
    if (report && !write_file(*report, serialize(o.report), err)) return InputError;
    return o.exit_code;
}

}  // namespace polycert::cli
