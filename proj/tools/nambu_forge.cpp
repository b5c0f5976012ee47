#include <cstdlib>
#include <fstream>
#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "nambu_forge/nambu_forge.hpp"

namespace {

using namespace nforge;

int fail_with(const SpecError& e) {
    std::cerr << "nambu_forge: " << e.what() << "\n";
    return static_cast<int>(e.code());
}

SpecDocument load(const std::string& path) {
    std::string text;
    try {
        text = read_text_file(path);
    } catch (const std::exception& e) {
        throw SpecError(ExitCode::CheckerError, e.what());
    }
    return parse_spec_document(text);
}

unsigned jobs_from_env() {
    if (const char* s = std::getenv("NAMBU_FORGE_JOBS")) {
        char* end = nullptr;
        long v = std::strtol(s, &end, 10);
        if (end != s && *end == '\0' && v > 0) return static_cast<unsigned>(v);
        std::cerr << "nambu_forge: ignoring NAMBU_FORGE_JOBS=" << s << "\n";
    }
    return 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact checker for n-Lie algebras, n-Lie-Rinehart algebras, n-Lie algebroids and Nambu-Poisson structures"};
    app.require_subcommand(1);

    std::string file, summary;
    unsigned jobs = 0, probe_degree = 2;
    long degree_bound = 4;
    std::size_t term_cap = 0;
    bool no_timing = false;

    auto* check = app.add_subcommand("check", "run the check directives of a spec file");
    check->add_option("file", file, "spec file (JSON)")->required();
    check->add_option("--summary", summary, "write the machine-readable summary (JSON) to this path");
    check->add_option("--jobs", jobs, "worker threads per checker (default: NAMBU_FORGE_JOBS or 1)");
    check->add_option("--probe-degree", probe_degree, "maximum degree of Nambu probe monomials")->capture_default_str();
    check->add_option("--degree-bound", degree_bound, "degree bound of the polynomial linear solver")->capture_default_str();
    check->add_option("--max-terms", term_cap, "abort a check when a polynomial exceeds this many terms (0: no cap)");
    check->add_flag("--no-timing", no_timing, "omit per-check timings from the text report");

    auto* expl = app.add_subcommand("explain", "print what each directive of a spec file checks");
    expl->add_option("file", file, "spec file (JSON)")->required();

    std::string name;
    auto* builtin = app.add_subcommand("builtin", "list builtin definitions, or print one as JSON");
    builtin->add_option("name", name, "builtin name");

    CLI11_PARSE(app, argc, argv);

    try {
        if (*check) {
            SpecDocument doc = load(file);
            auto bound = bind_directives(doc);
            CheckOptions opt;
            opt.jobs = jobs ? jobs : jobs_from_env();
            opt.probe_degree = probe_degree;
            opt.degree_bound = degree_bound;
            if (term_cap) set_max_terms(term_cap);
            CheckReport report = run_bound(bound, opt);
            std::cout << format_report(report, !no_timing);
            if (!summary.empty()) {
                std::ofstream out(summary, std::ios::binary);
                if (!out) throw SpecError(ExitCode::CheckerError, "cannot write " + summary);
                out << report_json(report).dump(2) << "\n";
            }
            return report.exit_code();
        }
        if (*expl) {
            SpecDocument doc = load(file);
            bind_directives(doc);
            std::cout << explain(doc);
            return 0;
        }
        if (name.empty()) {
            for (const auto& [n, b] : builtins()) std::cout << n << "  [" << definition_kind(b.value) << "]  " << b.description << "\n";
            return 0;
        }
        auto it = builtins().find(name);
        if (it == builtins().end()) throw SpecError(ExitCode::Unresolved, "no builtin named \"" + name + "\"");
        std::cout << definition_json(it->second.value).dump(2) << "\n";
        return 0;
    } catch (const SpecError& e) {
        return fail_with(e);
    } catch (const std::exception& e) {
        std::cerr << "nambu_forge: " << e.what() << "\n";
        return static_cast<int>(ExitCode::CheckerError);
    }
}
