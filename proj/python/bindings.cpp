#include "polycert/cli.hpp"
#include "polycert/synth.hpp"
#include "polycert/trace.hpp"

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

namespace py = pybind11;
using namespace polycert;

namespace {

cli::VerifyOptions options(std::size_t samples, std::size_t backtrack) {
    cli::VerifyOptions o;
    o.samples = samples;
    o.backtrack = backtrack;
    return o;
}

py::tuple outcome(const cli::VerifyOutcome& o) { return py::make_tuple(o.exit_code, cli::serialize(o.report)); }

}  // namespace

PYBIND11_MODULE(_polycert, m) {
    m.doc() = "Certifier for polynomial termination proofs of higher-order rewriting";
    m.attr("__version__") = cli::kVersion;

    py::register_exception<Error>(m, "PolycertError", PyExc_ValueError);

    m.def(
        "verify",
        [](const std::string& text, const std::string& name, std::size_t samples, std::size_t backtrack) {
            cli::VerifyOutcome o;
            {
                py::gil_scoped_release unlocked;
                o = cli::verify_text(name, text, options(samples, backtrack));
            }
            return outcome(o);
        },
        py::arg("text"), py::arg("name") = "<string>", py::arg("samples") = 1000, py::arg("backtrack") = 64,
        "Returns (exit_code, report_json).");

    m.def(
        "verify_file",
        [](const std::string& path, std::size_t samples, std::size_t backtrack) {
            cli::VerifyOutcome o;
            {
                py::gil_scoped_release unlocked;
                o = cli::verify_file(path, options(samples, backtrack));
            }
            return outcome(o);
        },
        py::arg("path"), py::arg("samples") = 1000, py::arg("backtrack") = 64);

    m.def(
        "synthesize",
        [](const std::string& text, unsigned max_coefficient, long long timeout_ms, bool atom_constants) {
            Afs afs = elaborate_system(parse_trace(text));
            afs.validate();
            SearchBounds bounds;
            bounds.max_coefficient = max_coefficient;
            bounds.timeout = std::chrono::milliseconds(timeout_ms);
            if (atom_constants) bounds.atom_arguments = AtomArguments::SumAndConstants;
            SearchResult r;
            {
                py::gil_scoped_release unlocked;
                r = search(afs, bounds);
            }
            std::optional<std::string> trace;
            if (r.interpretation) trace = render_trace(afs, r.interpretation);
            return py::make_tuple(trace, r.timed_out, r.candidates);
        },
        py::arg("text"), py::arg("max_coefficient") = 3, py::arg("timeout_ms") = 120000,
        py::arg("atom_constants") = false, "Returns (trace or None, timed_out, candidates).");

    m.def(
        "render",
        [](const std::string& text) {
            RawTrace raw = parse_trace(text);
            if (!raw.interpretation) return render_trace(elaborate_system(raw), std::nullopt);
            auto [afs, J] = elaborate(raw);
            return render_trace(afs, J);
        },
        py::arg("text"), "Canonical rendering of a trace.");
}
