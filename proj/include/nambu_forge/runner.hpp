#pragma once

#include <chrono>
#include <cstdio>
#include <functional>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "nambu_forge/spec_document.hpp"

namespace nforge {

enum class Status { Pass, Fail, Error };

inline const char* status_name(Status s) {
    switch (s) {
        case Status::Pass: return "PASS";
        case Status::Fail: return "FAIL";
        default: return "ERROR";
    }
}

// What one directive produced. `cross` holds independent formulations of the same statement.
struct Outcome {
    Verdict verdict;
    std::vector<std::pair<std::string, Verdict>> cross;
    std::vector<std::string> extra;
};

struct ReportEntry {
    std::size_t index = 0;  // 1-based
    std::string check;
    std::string label;
    Status status = Status::Pass;
    Outcome outcome;
    std::string error;
    double millis = 0;

    bool agrees() const {
        for (const auto& [name, v] : outcome.cross)
            if (v.passed != outcome.verdict.passed) return false;
        return true;
    }
};

struct CheckReport {
    std::vector<ReportEntry> entries;
    CheckOptions options;

    int exit_code() const {
        bool fail = false;
        for (const auto& e : entries) {
            if (e.status == Status::Error) return static_cast<int>(ExitCode::CheckerError);
            if (e.status == Status::Fail) fail = true;
        }
        return fail ? static_cast<int>(ExitCode::Fail) : static_cast<int>(ExitCode::Pass);
    }
};

struct BoundDirective {
    Directive directive;
    std::function<Outcome(const CheckOptions&)> run;
};

namespace detail {

inline std::string tuple_text(const std::vector<int>& t) {
    std::string s = "(";
    for (std::size_t i = 0; i < t.size(); ++i) s += (i ? "," : "") + std::to_string(t[i] + 1);
    return s + ")";
}

inline std::string residual_text(const std::vector<SparsePoly>& r) {
    std::string s = "[";
    for (std::size_t i = 0; i < r.size(); ++i) s += (i ? ", " : "") + r[i].str();
    return s + "]";
}

// Reads directive arguments, resolving names against the document and the builtins.
class ArgReader {
public:
    ArgReader(const SpecDocument& doc, const Directive& d, std::string path)
        : parser_(doc.definitions), d_(d), path_(std::move(path)) {}

    bool has(const char* key) {
        seen_.insert(key);
        return d_.args.contains(key);
    }

    const Json& raw(const char* key) {
        seen_.insert(key);
        auto it = d_.args.find(key);
        if (it == d_.args.end()) schema_error(path_, std::string("missing argument \"") + key + "\"");
        return *it;
    }

    Definition definition(const char* key, const std::string& kind) {
        return parser_.parse_value(raw(key), path_ + "." + key, kind);
    }

    template <class T>
    T get(const char* key, const std::string& kind) {
        Definition d = definition(key, kind);
        if (auto p = std::get_if<T>(&d)) return *p;
        schema_error(path_ + "." + key, "got a " + definition_kind(d) + ", expected " + kind);
    }

    NLieRinehart rinehart(const char* key) {
        Definition d = definition(key, "rinehart");
        if (auto p = std::get_if<RinehartDef>(&d)) return p->structure;
        if (auto p = std::get_if<NLieAlgebroid>(&d)) return p->structure;
        if (auto p = std::get_if<NLieAlgebra>(&d)) return rinehart_from_nlie(*p);
        schema_error(path_ + "." + key, "got a " + definition_kind(d) + ", expected rinehart, algebroid or nlie");
    }

    NLieAlgebroid algebroid(const char* key) {
        Definition d = definition(key, "algebroid");
        if (auto p = std::get_if<NLieAlgebroid>(&d)) return *p;
        if (auto p = std::get_if<RinehartDef>(&d)) return NLieAlgebroid{p->structure};
        schema_error(path_ + "." + key, "got a " + definition_kind(d) + ", expected algebroid");
    }

    ModuleMapDef module_map(const char* key, std::optional<bool> co) {
        ModuleMapDef m = get<ModuleMapDef>(key, co.value_or(false) ? "comodule_map" : "module_map");
        if (co && m.co != *co)
            schema_error(path_ + "." + key, std::string("expected a ") + (*co ? "comodule_map" : "module_map"));
        return m;
    }

    PolySubmanifold submanifold(const char* key) {
        Definition d = definition(key, "submanifold");
        if (auto p = std::get_if<PolySubmanifold>(&d)) return *p;
        if (auto p = std::get_if<PolyMap>(&d)) return graph_submanifold(*p);
        schema_error(path_ + "." + key, "got a " + definition_kind(d) + ", expected submanifold or poly_map (graph)");
    }

    std::vector<int> indices(const char* key) { return json_indices(raw(key), path_ + "." + key); }

    std::vector<Section> sections(const char* key, std::size_t len, std::size_t nvars) {
        const Json& v = raw(key);
        if (!v.is_array()) schema_error(path_ + "." + key, "expected an array of sections");
        std::vector<Section> out;
        for (std::size_t i = 0; i < v.size(); ++i)
            out.push_back(json_poly_vector(v[i], len, nvars, path_ + "." + key + "[" + std::to_string(i) + "]"));
        return out;
    }

    std::size_t count(const Json& v, const std::string& p) {
        if (!v.is_number_integer() || v.get<long long>() < 0) schema_error(p, "expected a nonnegative integer");
        return v.get<std::size_t>();
    }

    const std::string& path() const { return path_; }

    void finish() {
        for (const auto& [k, v] : d_.args.items())
            if (!seen_.count(k)) schema_error(path_, "unknown argument \"" + k + "\" for " + d_.check);
    }

private:
    DefinitionParser parser_;
    const Directive& d_;
    std::string path_;
    std::set<std::string> seen_;
};

inline Outcome plain(Verdict v) { return Outcome{std::move(v), {}, {}}; }

inline Outcome from_cross(CrossCheckedVerdict c) { return Outcome{std::move(c.verdict), std::move(c.cross), {}}; }

inline Outcome from_duality(DualityVerdict d, const std::string& nambu_name) {
    Outcome o;
    o.verdict = std::move(d.algebroid);
    o.cross.emplace_back(nambu_name, std::move(d.nambu));
    return o;
}

inline std::string rinehart_summary(const NLieRinehart& r) {
    return "arity " + std::to_string(r.arity) + ", rank " + std::to_string(r.rank) + ", " +
           std::to_string(r.num_vars) + " variables, " + std::to_string(r.anchor_table.size()) + " anchor and " +
           std::to_string(r.bracket_table.size()) + " bracket entries";
}

inline std::string submanifold_summary(const PolySubmanifold& s) {
    std::string out;
    for (const auto& h : s.defining_functions()) out += (out.empty() ? "" : ", ") + h.str() + " = 0";
    return out.empty() ? "whole space" : out;
}

using Binder = std::function<std::function<Outcome(const CheckOptions&)>(ArgReader&)>;

inline const std::map<std::string, Binder>& binders() {
    static const std::map<std::string, Binder> table = [] {
        std::map<std::string, Binder> b;
        b["fundamental_identity"] = [](ArgReader& a) {
            auto g = a.get<NLieAlgebra>("target", "nlie");
            return [g](const CheckOptions& o) { return plain(check_fundamental_identity(g, o)); };
        };
        b["leibniz_identity"] = [](ArgReader& a) {
            auto g = a.get<NLieAlgebra>("target", "nlie");
            return [g](const CheckOptions& o) { return plain(check_leibniz_identity(induced_leibniz(g), o)); };
        };
        b["representation"] = [](ArgReader& a) {
            auto r = a.get<RepresentationDef>("target", "representation");
            return [r](const CheckOptions& o) { return plain(check_representation(r.algebra.value, r.rep, o)); };
        };
        b["rinehart"] = [](ArgReader& a) {
            auto r = a.rinehart("target");
            return [r](const CheckOptions& o) { return plain(check_rinehart(r, o)); };
        };
        b["leibniz_rinehart"] = [](ArgReader& a) {
            auto r = a.rinehart("target");
            return [r](const CheckOptions& o) { return plain(check_leibniz_rinehart(induced_leibniz_rinehart(r), o)); };
        };
        b["restriction"] = [](ArgReader& a) {
            auto r = a.rinehart("target");
            CoordinateIdeal ideal{a.indices("ideal")};
            std::sort(ideal.vars.begin(), ideal.vars.end());
            auto gens = a.sections("generators", static_cast<std::size_t>(r.rank), r.num_vars);
            return [r, ideal, gens](const CheckOptions& o) {
                RestrictionResult res = restrict_to_ideal(r, ideal, gens, o);
                Outcome out = plain(std::move(res.verdict));
                if (res.quotient) out.extra.push_back("quotient structure: " + rinehart_summary(*res.quotient));
                return out;
            };
        };
        b["psi_sum_compatible"] = [](ArgReader& a) {
            auto e = a.rinehart("e");
            auto f = a.rinehart("f");
            auto psi = a.get<AlgebraMap>("psi", "algebra_map");
            const Json& t = a.raw("tuple");
            if (!t.is_array()) schema_error(a.path() + ".tuple", "expected an array");
            std::vector<PsiSumElement> tuple;
            for (std::size_t i = 0; i < t.size(); ++i) {
                std::string p = a.path() + ".tuple[" + std::to_string(i) + "]";
                PsiSumElement u;
                u.tensor = json_poly_vector(field(t[i], "tensor", p), static_cast<std::size_t>(e.rank), f.num_vars, p + ".tensor");
                u.plain = json_poly_vector(field(t[i], "plain", p), static_cast<std::size_t>(f.rank), f.num_vars, p + ".plain");
                tuple.push_back(std::move(u));
            }
            return [e, f, psi, tuple](const CheckOptions& o) { return plain(psi_sum_compatible(e, f, psi, tuple, o)); };
        };
        b["morphism"] = [](ArgReader& a) {
            auto e = a.rinehart("e");
            auto f = a.rinehart("f");
            auto m = a.module_map("map", false);
            auto psi = a.get<AlgebraMap>("psi", "algebra_map");
            return [e, f, m, psi](const CheckOptions& o) { return plain(check_morphism(e, f, m.map, psi, o)); };
        };
        b["comorphism"] = [](ArgReader& a) {
            auto f = a.rinehart("f");
            auto e = a.rinehart("e");
            auto m = a.module_map("map", true);
            auto psi = a.get<AlgebraMap>("psi", "algebra_map");
            return [e, f, m, psi](const CheckOptions& o) { return plain(check_comorphism(f, e, m.map, psi, o)); };
        };
        b["graph"] = [](ArgReader& a) {
            auto e = a.rinehart("e");
            auto f = a.rinehart("f");
            auto psi = a.get<AlgebraMap>("psi", "algebra_map");
            auto m = a.module_map("map", std::nullopt);
            GraphKind kind = m.co ? GraphKind::Comorphism : GraphKind::Morphism;
            return [e, f, m, psi, kind](const CheckOptions& o) { return plain(graph_check(e, f, psi, kind, m.map, o)); };
        };
        b["intertwine"] = [](ArgReader& a) {
            auto e = a.rinehart("e");
            auto f = a.rinehart("f");
            auto m = a.module_map("map", true);
            auto psi = a.get<AlgebraMap>("psi", "algebra_map");
            return [e, f, m, psi](const CheckOptions& o) { return plain(check_intertwine(e, f, m.map, psi, o)); };
        };
        b["nambu_fi"] = [](ArgReader& a) {
            auto pi = a.get<NambuTensor>("tensor", "nambu_tensor");
            std::optional<std::vector<std::pair<std::string, SparsePoly>>> probes;
            if (a.has("probes")) {
                const Json& p = a.raw("probes");
                if (!p.is_array()) schema_error(a.path() + ".probes", "expected an array of polynomials");
                probes.emplace();
                for (std::size_t i = 0; i < p.size(); ++i) {
                    SparsePoly q = json_poly(p[i], pi.num_vars, a.path() + ".probes[" + std::to_string(i) + "]");
                    probes->emplace_back(q.str(), q);
                }
            }
            return [pi, probes](const CheckOptions& o) {
                return plain(probes ? check_nambu_fi(pi, *probes, o) : check_nambu_fi(pi, o));
            };
        };
        b["nambu_map"] = [](ArgReader& a) {
            auto phi = a.get<PolyMap>("map", "poly_map");
            auto pi1 = a.get<NambuTensor>("pi1", "nambu_tensor");
            auto pi2 = a.get<NambuTensor>("pi2", "nambu_tensor");
            return [phi, pi1, pi2](const CheckOptions& o) { return plain(check_nambu_map(phi, pi1, pi2, o)); };
        };
        b["coisotropic"] = [](ArgReader& a) {
            auto pi = a.get<NambuTensor>("tensor", "nambu_tensor");
            auto s = a.submanifold("submanifold");
            return [pi, s](const CheckOptions& o) { return plain(check_coisotropic(pi, s, o)); };
        };
        b["nambu_submanifold"] = [](ArgReader& a) {
            auto pi = a.get<NambuTensor>("tensor", "nambu_tensor");
            auto s = a.submanifold("submanifold");
            return [pi, s](const CheckOptions& o) { return plain(check_nambu_submanifold(pi, s, o)); };
        };
        b["nambu_relation"] = [](ArgReader& a) {
            auto pi1 = a.get<NambuTensor>("pi1", "nambu_tensor");
            auto pi2 = a.get<NambuTensor>("pi2", "nambu_tensor");
            auto rel = a.submanifold("relation");
            return [pi1, pi2, rel](const CheckOptions& o) { return plain(check_nambu_relation(pi1, pi2, rel, o)); };
        };
        b["compose_relations"] = [](ArgReader& a) {
            auto r1 = a.submanifold("r1");
            auto r2 = a.submanifold("r2");
            const Json& dims = a.raw("dims");
            if (!dims.is_array() || dims.size() != 3) schema_error(a.path() + ".dims", "expected [m1, m2, m3]");
            std::size_t m1 = a.count(dims[0], a.path() + ".dims[0]");
            std::size_t m2 = a.count(dims[1], a.path() + ".dims[1]");
            std::size_t m3 = a.count(dims[2], a.path() + ".dims[2]");
            std::optional<NambuTensor> pi1, pi2, pi3;
            if (a.has("pi1")) pi1 = a.get<NambuTensor>("pi1", "nambu_tensor");
            if (a.has("pi2")) pi2 = a.get<NambuTensor>("pi2", "nambu_tensor");
            if (a.has("pi3")) pi3 = a.get<NambuTensor>("pi3", "nambu_tensor");
            if (pi1.has_value() != pi3.has_value())
                schema_error(a.path(), "give both pi1 and pi3 to check the composite, or neither");
            return [=](const CheckOptions& o) {
                CompositionResult c = compose_linear_relations(r1, m2, m1, r2, m3);
                Outcome out;
                if (!c.clean) {
                    out.verdict = Verdict::fail(Witness{"clean composition", {}, "", {}});
                    out.verdict.notes.push_back(c.reason);
                    return out;
                }
                out.extra.push_back("composite: " + submanifold_summary(*c.relation));
                out.verdict = pi1 ? check_nambu_relation(*pi1, *pi3, *c.relation, o) : Verdict::pass();
                // The factors are premises, not equivalent formulations, so they are listed, not cross-checked.
                if (pi1 && pi2) {
                    auto first = check_nambu_relation(*pi1, *pi2, r1, o);
                    auto second = check_nambu_relation(*pi2, *pi3, r2, o);
                    out.extra.push_back(std::string("first factor is a Nambu relation: ") + (first.passed ? "yes" : "no"));
                    out.extra.push_back(std::string("second factor is a Nambu relation: ") + (second.passed ? "yes" : "no"));
                }
                return out;
            };
        };
        b["algebroid"] = [](ArgReader& a) {
            auto al = a.algebroid("target");
            return [al](const CheckOptions& o) { return plain(check_algebroid(al, o)); };
        };
        b["subalgebroid"] = [](ArgReader& a) {
            auto al = a.algebroid("target");
            auto h = a.get<SubbundleDef>("subbundle", "subbundle").value();
            return [al, h](const CheckOptions& o) {
                SubalgebroidResult r = check_subalgebroid(al, h, o);
                Outcome out = plain(std::move(r.verdict));
                if (r.induced) out.extra.push_back("induced structure: " + rinehart_summary(r.induced->structure));
                return out;
            };
        };
        b["morphism_algebroid"] = [](ArgReader& a) {
            auto f = a.get<BundleForwardDef>("map", "bundle_map_forward").value();
            auto a1 = a.algebroid("a1");
            auto a2 = a.algebroid("a2");
            return [f, a1, a2](const CheckOptions& o) { return from_cross(check_morphism_algebroid(f, a1, a2, o)); };
        };
        b["comorphism_algebroid"] = [](ArgReader& a) {
            auto c = a.get<BundleCoDef>("map", "bundle_map_co").value();
            auto a2 = a.algebroid("a2");
            auto a1 = a.algebroid("a1");
            return [c, a1, a2](const CheckOptions& o) { return from_cross(check_comorphism_algebroid(c, a2, a1, o)); };
        };
        b["duality_comorphism"] = [](ArgReader& a) {
            auto c = a.get<BundleCoDef>("map", "bundle_map_co").value();
            auto a2 = a.algebroid("a2");
            auto a1 = a.algebroid("a1");
            return [c, a1, a2](const CheckOptions& o) {
                return from_duality(check_duality_comorphism(c, a2, a1, o), "dual Nambu map");
            };
        };
        b["duality_morphism"] = [](ArgReader& a) {
            auto f = a.get<BundleForwardDef>("map", "bundle_map_forward").value();
            auto a1 = a.algebroid("a1");
            auto a2 = a.algebroid("a2");
            return [f, a1, a2](const CheckOptions& o) {
                return from_duality(check_duality_morphism(f, a1, a2, o), "dual Nambu relation");
            };
        };
        b["annihilator"] = [](ArgReader& a) {
            auto al = a.algebroid("target");
            auto h = a.get<SubbundleDef>("subbundle", "subbundle").value();
            return [al, h](const CheckOptions& o) {
                return from_duality(check_annihilator(al, h, o), "annihilator coisotropy");
            };
        };
        return b;
    }();
    return table;
}

}  // namespace detail

inline std::vector<std::string> check_names() {
    std::vector<std::string> out;
    for (const auto& [k, v] : detail::binders()) out.push_back(k);
    return out;
}

// Resolves every directive argument up front, so a bad document fails before any check runs.
inline std::vector<BoundDirective> bind_directives(const SpecDocument& doc) {
    std::vector<BoundDirective> out;
    for (std::size_t i = 0; i < doc.checks.size(); ++i) {
        const Directive& d = doc.checks[i];
        std::string path = "checks[" + std::to_string(i) + "]";
        auto it = detail::binders().find(d.check);
        if (it == detail::binders().end()) detail::schema_error(path + ".check", "unknown check \"" + d.check + "\"");
        detail::ArgReader reader(doc, d, path);
        try {
            auto run = it->second(reader);
            reader.finish();
            out.push_back(BoundDirective{d, std::move(run)});
        } catch (const SpecError&) {
            throw;
        } catch (const std::invalid_argument& e) {
            detail::schema_error(path, e.what());
        }
    }
    return out;
}

inline CheckReport run_bound(const std::vector<BoundDirective>& bound, const CheckOptions& opt = {}) {
    CheckReport report;
    report.options = opt;
    for (std::size_t i = 0; i < bound.size(); ++i) {
        ReportEntry e;
        e.index = i + 1;
        e.check = bound[i].directive.check;
        e.label = bound[i].directive.label;
        auto start = std::chrono::steady_clock::now();
        try {
            e.outcome = bound[i].run(opt);
            e.status = e.outcome.verdict.passed ? Status::Pass : Status::Fail;
        } catch (const std::exception& ex) {
            e.status = Status::Error;
            e.error = ex.what();
        }
        e.millis = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
        report.entries.push_back(std::move(e));
    }
    return report;
}

inline CheckReport run_checks(const SpecDocument& doc, const CheckOptions& opt = {}) {
    return run_bound(bind_directives(doc), opt);
}

namespace detail {

inline void witness_lines(std::ostream& os, const Witness& w, const std::string& indent) {
    os << indent << "witness: " << w.condition;
    if (!w.tuples.empty()) {
        os << " on";
        for (const auto& t : w.tuples) os << " " << tuple_text(t);
    }
    if (!w.probe.empty()) os << ", probe " << w.probe;
    os << "\n";
    if (!w.residual.empty()) os << indent << "residual: " << residual_text(w.residual) << "\n";
}

inline Json witness_json(const Witness& w) {
    Json j;
    j["condition"] = w.condition;
    Json tuples = Json::array();
    for (const auto& t : w.tuples) tuples.push_back(indices_json(t));
    j["tuples"] = tuples;
    j["probe"] = w.probe;
    Json res = Json::array();
    for (const auto& p : w.residual) res.push_back(p.str());
    j["residual"] = res;
    return j;
}

}  // namespace detail

inline std::string format_report(const CheckReport& r, bool timing = true) {
    std::ostringstream os;
    for (const auto& e : r.entries) {
        os << "[" << e.index << "] " << e.check;
        if (!e.label.empty()) os << " " << e.label;
        os << ": " << status_name(e.status);
        if (timing) {
            char buf[32];
            std::snprintf(buf, sizeof buf, "%.1f", e.millis);
            os << " (" << buf << " ms)";
        }
        os << "\n";
        if (e.status == Status::Error) {
            os << "    error: " << e.error << "\n";
            continue;
        }
        if (e.outcome.verdict.witness) detail::witness_lines(os, *e.outcome.verdict.witness, "    ");
        for (const auto& n : e.outcome.verdict.notes) os << "    note: " << n << "\n";
        for (const auto& x : e.outcome.extra) os << "    " << x << "\n";
        for (const auto& [name, v] : e.outcome.cross) {
            os << "    cross-check " << name << ": " << (v.passed ? "PASS" : "FAIL")
               << (v.passed == e.outcome.verdict.passed ? " (agrees)" : " (DISAGREES)") << "\n";
            if (v.witness) detail::witness_lines(os, *v.witness, "      ");
        }
    }
    std::size_t pass = 0, fail = 0, err = 0;
    for (const auto& e : r.entries) (e.status == Status::Pass ? pass : e.status == Status::Fail ? fail : err)++;
    os << pass << " passed, " << fail << " failed, " << err << " errors\n";
    return os.str();
}

// Machine-readable summary. Contains no timing and no job count, so equal inputs give equal bytes.
inline Json report_json(const CheckReport& r) {
    Json j;
    j["format_version"] = kFormatVersion;
    Json opts;
    opts["probe_degree"] = r.options.probe_degree;
    opts["degree_bound"] = r.options.degree_bound;
    opts["max_terms"] = max_terms();
    j["options"] = opts;
    Json results = Json::array();
    std::size_t pass = 0, fail = 0, err = 0;
    for (const auto& e : r.entries) {
        (e.status == Status::Pass ? pass : e.status == Status::Fail ? fail : err)++;
        Json x;
        x["index"] = e.index;
        x["check"] = e.check;
        x["label"] = e.label;
        std::string s = status_name(e.status);
        for (auto& c : s) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
        x["status"] = s;
        if (e.status == Status::Error) {
            x["error"] = e.error;
        } else {
            if (e.outcome.verdict.witness) x["witness"] = detail::witness_json(*e.outcome.verdict.witness);
            x["notes"] = e.outcome.verdict.notes;
            x["extra"] = e.outcome.extra;
            Json cross = Json::array();
            for (const auto& [name, v] : e.outcome.cross) {
                Json c;
                c["name"] = name;
                c["status"] = v.passed ? "pass" : "fail";
                if (v.witness) c["witness"] = detail::witness_json(*v.witness);
                cross.push_back(c);
            }
            x["cross"] = cross;
            x["agrees"] = e.agrees();
        }
        results.push_back(x);
    }
    j["results"] = results;
    j["totals"] = {{"pass", pass}, {"fail", fail}, {"error", err}};
    j["exit_code"] = r.exit_code();
    return j;
}

// Plain statement of what each check establishes, for the explain command.
inline const std::map<std::string, std::string>& check_statements() {
    static const std::map<std::string, std::string> s = {
        {"fundamental_identity",
         "The n-ary bracket satisfies the fundamental identity: bracketing with n-1 fixed elements is a derivation "
         "of the bracket. Checked on every basis tuple."},
        {"leibniz_identity",
         "The bracket induced on the (n-1)-fold wedge of the algebra satisfies the left Leibniz identity."},
        {"representation",
         "The matrices assigned to (n-1)-tuples form a representation: the commutator relation and the "
         "bracket relation both hold on every basis tuple."},
        {"rinehart",
         "The module with its anchor and bracket is an n-Lie-Rinehart algebra: skew symmetry, the fundamental "
         "identity, the Leibniz rule in the last slot, A-linearity of the anchor in each slot, and the anchor "
         "commutator relation."},
        {"leibniz_rinehart",
         "The induced structure on the (n-1)-fold wedge is a Leibniz-Rinehart algebra."},
        {"restriction",
         "If the anchor preserves the coordinate ideal I, the structure descends to the submodule spanned by the "
         "generators, taken modulo I, over the quotient algebra."},
        {"psi_sum_compatible",
         "The given tuple of elements of the psi-sum is compatible: the anchor of the tensor part and the anchor "
         "of the plain part agree after pushing through psi."},
        {"morphism",
         "The module map and algebra map form a morphism: anchors are related through psi and brackets of basis "
         "sections are carried to brackets."},
        {"comorphism",
         "The comodule map and algebra map form a comorphism: pulled back anchors agree and the map preserves "
         "brackets of basis sections."},
        {"graph",
         "The graph of the module map is closed under the psi-sum bracket and compatible with the anchors. This "
         "is equivalent to the map being a morphism (or comorphism)."},
        {"intertwine",
         "The transpose of the comodule map intertwines the differentials on functions and on the dual basis."},
        {"nambu_fi",
         "The tensor is Nambu-Poisson: the fundamental identity holds for the bracket on a probe set of "
         "variables and low degree monomials. Passing is evidence, not a proof."},
        {"nambu_map",
         "The polynomial map is Nambu-Poisson: pulling back brackets of coordinate functions matches brackets of "
         "pulled back functions."},
        {"coisotropic",
         "The submanifold is coisotropic: the tensor contracted with differentials of defining functions is "
         "tangent to the submanifold."},
        {"nambu_submanifold",
         "The submanifold is a Nambu submanifold: every Hamiltonian field is tangent to it."},
        {"nambu_relation",
         "The relation is a Nambu relation: it is coisotropic for the product tensor."},
        {"compose_relations",
         "Two linear relations compose cleanly, and the composite is again a Nambu relation when the factors are."},
        {"algebroid",
         "The structure is an n-Lie algebroid: it satisfies the Rinehart axioms and the anchor respects the "
         "bracket on coordinates."},
        {"subalgebroid",
         "The subbundle over the submanifold is a subalgebroid: the anchor is tangent to the base and the "
         "bracket of sections of the subbundle stays in the subbundle along the base."},
        {"morphism_algebroid",
         "The forward bundle map is an algebroid morphism: anchors are related and brackets are compatible. "
         "Cross-checked against the graph formulation and the section comorphism."},
        {"comorphism_algebroid",
         "The bundle comorphism relates anchors and preserves brackets of pulled back sections. Cross-checked "
         "against the section morphism it induces."},
        {"duality_comorphism",
         "For rank n, the bundle comorphism is an algebroid comorphism exactly when its dual is a Nambu-Poisson "
         "map between the linear Nambu structures on the duals."},
        {"duality_morphism",
         "For rank n, the forward bundle map is an algebroid morphism exactly when the dual of its graph is a "
         "Nambu relation between the linear Nambu structures."},
        {"annihilator",
         "For rank n, the subbundle is a subalgebroid exactly when its annihilator is coisotropic for the linear "
         "Nambu structure on the dual."},
    };
    return s;
}

inline std::string explain(const SpecDocument& doc) {
    std::ostringstream os;
    for (std::size_t i = 0; i < doc.checks.size(); ++i) {
        const auto& d = doc.checks[i];
        os << "[" << i + 1 << "] " << d.check;
        if (!d.label.empty()) os << " " << d.label;
        os << "\n";
        auto it = check_statements().find(d.check);
        os << "    " << (it == check_statements().end() ? "unknown check" : it->second) << "\n";
        for (const auto& [k, v] : d.args.items())
            os << "    " << k << " = " << (v.is_string() ? v.get<std::string>() : v.dump()) << "\n";
    }
    return os.str();
}

}  // namespace nforge
