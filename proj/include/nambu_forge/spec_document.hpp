#pragma once

#include <fstream>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "json.hpp"
#include "nambu_forge/builtins.hpp"

namespace nforge {

using Json = nlohmann::ordered_json;

inline constexpr int kFormatVersion = 1;

// Process exit codes of the command line tool; parse failures get one code per class.
enum class ExitCode : int { Pass = 0, Fail = 1, CheckerError = 2, Syntax = 3, Unresolved = 4, Schema = 5 };

class SpecError : public std::runtime_error {
public:
    SpecError(ExitCode code, const std::string& msg) : std::runtime_error(msg), code_(code) {}
    ExitCode code() const { return code_; }

private:
    ExitCode code_;
};

struct Directive {
    std::string check;
    std::string label;  // may be empty
    Json args;          // remaining fields, in document order
    friend bool operator==(const Directive&, const Directive&) = default;
};

struct SpecDocument {
    int format_version = kFormatVersion;
    std::map<std::string, Definition> definitions;
    std::vector<Directive> checks;
    friend bool operator==(const SpecDocument&, const SpecDocument&) = default;
};

// Looks a name up in the document, then among the builtins.
inline const Definition* find_definition(const SpecDocument& doc, const std::string& name) {
    auto it = doc.definitions.find(name);
    if (it != doc.definitions.end()) return &it->second;
    auto b = builtins().find(name);
    if (b != builtins().end()) return &b->second.value;
    return nullptr;
}

namespace detail {

[[noreturn]] inline void schema_error(const std::string& path, const std::string& msg) {
    throw SpecError(ExitCode::Schema, path + ": " + msg);
}

inline const Json& field(const Json& obj, const char* key, const std::string& path) {
    if (!obj.is_object()) schema_error(path, "expected an object");
    auto it = obj.find(key);
    if (it == obj.end()) schema_error(path, std::string("missing field \"") + key + "\"");
    return *it;
}

inline std::size_t count_field(const Json& obj, const char* key, const std::string& path) {
    const Json& v = field(obj, key, path);
    if (!v.is_number_integer() || v.get<long long>() < 0)
        schema_error(path + "." + key, "expected a nonnegative integer");
    return v.get<std::size_t>();
}

inline const Json& array_field(const Json& obj, const char* key, const std::string& path) {
    const Json& v = field(obj, key, path);
    if (!v.is_array()) schema_error(path + "." + key, "expected an array");
    return v;
}

inline SparsePoly json_poly(const Json& v, std::size_t nvars, const std::string& path) {
    std::string text;
    if (v.is_string())
        text = v.get<std::string>();
    else if (v.is_number_integer())
        text = std::to_string(v.get<long long>());
    else
        schema_error(path, "expected a polynomial (string or integer)");
    try {
        return parse_poly(text, nvars);
    } catch (const PolyParseError& e) {
        throw SpecError(ExitCode::Syntax, path + ": " + e.what());
    }
}

inline Rat json_rat(const Json& v, const std::string& path) {
    try {
        if (v.is_number_integer()) return Rat(v.get<long long>());
        if (v.is_string()) return Rat::parse(v.get<std::string>());
    } catch (const std::exception& e) {
        throw SpecError(ExitCode::Syntax, path + ": " + e.what());
    }
    schema_error(path, "expected a rational (string \"p/q\" or integer)");
}

// 1-based index list from the document, returned 0-based.
inline std::vector<int> json_indices(const Json& v, const std::string& path) {
    if (!v.is_array()) schema_error(path, "expected an index list");
    std::vector<int> out;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (!v[i].is_number_integer() || v[i].get<long long>() < 1)
            schema_error(path + "[" + std::to_string(i) + "]", "indices are positive integers");
        out.push_back(static_cast<int>(v[i].get<long long>() - 1));
    }
    return out;
}

inline Json indices_json(const std::vector<int>& v) {
    Json a = Json::array();
    for (int i : v) a.push_back(i + 1);
    return a;
}

// Canonical key for a table entry; returns the sign to apply to the value.
inline std::pair<MultiIndex, int> json_key(const Json& v, std::size_t expect_len, int bound, const std::string& path) {
    auto idx = json_indices(v, path);
    if (idx.size() != expect_len)
        schema_error(path, "expected " + std::to_string(expect_len) + " indices, got " + std::to_string(idx.size()));
    for (int i : idx)
        if (i >= bound) schema_error(path, "index " + std::to_string(i + 1) + " exceeds " + std::to_string(bound));
    auto [k, sign] = canonical_multiindex(idx);
    if (sign == 0) schema_error(path, "repeated index");
    return {k, sign};
}

inline PolyVector json_poly_vector(const Json& v, std::size_t len, std::size_t nvars, const std::string& path) {
    if (!v.is_array() || v.size() != len)
        schema_error(path, "expected an array of " + std::to_string(len) + " polynomials");
    PolyVector out;
    for (std::size_t i = 0; i < len; ++i) out.push_back(json_poly(v[i], nvars, path + "[" + std::to_string(i) + "]"));
    return out;
}

inline PolyMatrix json_poly_matrix(const Json& v, std::size_t rows, std::optional<std::size_t> cols, std::size_t nvars,
                                   const std::string& path) {
    if (!v.is_array() || v.size() != rows) schema_error(path, "expected " + std::to_string(rows) + " rows");
    PolyMatrix out;
    std::size_t width = cols ? *cols : (rows ? (v[0].is_array() ? v[0].size() : 0) : 0);
    for (std::size_t r = 0; r < rows; ++r)
        out.push_back(json_poly_vector(v[r], width, nvars, path + "[" + std::to_string(r) + "]"));
    return out;
}

inline Json poly_json(const SparsePoly& p) { return p.str(); }

inline Json poly_vector_json(const PolyVector& v) {
    Json a = Json::array();
    for (const auto& p : v) a.push_back(poly_json(p));
    return a;
}

inline Json poly_matrix_json(const PolyMatrix& m) {
    Json a = Json::array();
    for (const auto& row : m) a.push_back(poly_vector_json(row));
    return a;
}

inline void wrap_invalid(const std::string& path, const std::function<void()>& f) {
    try {
        f();
    } catch (const SpecError&) {
        throw;
    } catch (const std::invalid_argument& e) {
        schema_error(path, e.what());
    }
}

class DefinitionParser {
public:
    explicit DefinitionParser(const Json& defs) : raw_(defs) {}
    // Parser for inline objects whose names refer to already resolved definitions.
    explicit DefinitionParser(const std::map<std::string, Definition>& resolved) : raw_(empty_), done_(resolved) {}

    std::map<std::string, Definition> parse_all() {
        for (const auto& [name, body] : raw_.items()) resolve(name, "definitions");
        return std::move(done_);
    }

    // A name or an inline object; an inline object without "kind" takes `kind`.
    Definition parse_value(const Json& v, const std::string& path, const std::string& kind) {
        if (v.is_string()) return resolve(v.get<std::string>(), path);
        return parse(v, path, kind);
    }

    Definition parse_object(const Json& v, const std::string& path) { return parse(v, path, std::nullopt); }

private:
    inline static const Json empty_ = Json::object();
    const Json& raw_;
    std::map<std::string, Definition> done_;
    std::set<std::string> active_;

    const Definition& resolve(const std::string& name, const std::string& from) {
        if (auto it = done_.find(name); it != done_.end()) return it->second;
        auto it = raw_.find(name);
        if (it == raw_.end()) {
            auto b = builtins().find(name);
            if (b != builtins().end()) return b->second.value;
            throw SpecError(ExitCode::Unresolved, from + ": unresolved name \"" + name + "\"");
        }
        if (active_.count(name)) throw SpecError(ExitCode::Schema, from + ": definition cycle through \"" + name + "\"");
        active_.insert(name);
        Definition d = parse(*it, "definitions." + name, std::nullopt);
        active_.erase(name);
        return done_.emplace(name, std::move(d)).first->second;
    }

    template <class T>
    Ref<T> reference(const Json& v, const std::string& path, const char* kind) {
        if (v.is_string()) {
            std::string name = v.get<std::string>();
            const Definition& d = resolve(name, path);
            if (auto p = std::get_if<T>(&d)) return Ref<T>{name, *p};
            schema_error(path, "\"" + name + "\" is a " + definition_kind(d) + ", expected " + kind);
        }
        Definition d = parse(v, path, std::string(kind));
        if (auto p = std::get_if<T>(&d)) return Ref<T>{"", *p};
        schema_error(path, std::string("expected ") + kind);
    }

    NLieRinehart parse_rinehart(const Json& v, const std::string& path) {
        NLieRinehart r;
        r.arity = static_cast<int>(count_field(v, "arity", path));
        r.rank = static_cast<int>(count_field(v, "rank", path));
        r.num_vars = count_field(v, "vars", path);
        if (r.arity < 2) schema_error(path + ".arity", "arity must be at least 2");
        if (v.contains("anchors")) {
            const Json& a = array_field(v, "anchors", path);
            for (std::size_t i = 0; i < a.size(); ++i) {
                std::string p = path + ".anchors[" + std::to_string(i) + "]";
                auto [k, sign] = json_key(field(a[i], "indices", p), static_cast<std::size_t>(r.arity - 1), r.rank, p + ".indices");
                PolyDerivation d(json_poly_vector(field(a[i], "field", p), r.num_vars, r.num_vars, p + ".field"));
                if (sign < 0) d *= Rat(-1);
                if (!r.anchor_table.emplace(k, d).second) schema_error(p, "duplicate anchor entry " + k.str());
            }
        }
        if (v.contains("brackets")) {
            const Json& a = array_field(v, "brackets", path);
            for (std::size_t i = 0; i < a.size(); ++i) {
                std::string p = path + ".brackets[" + std::to_string(i) + "]";
                auto [k, sign] = json_key(field(a[i], "indices", p), static_cast<std::size_t>(r.arity), r.rank, p + ".indices");
                Section s = json_poly_vector(field(a[i], "value", p), static_cast<std::size_t>(r.rank), r.num_vars, p + ".value");
                if (sign < 0)
                    for (auto& c : s) c = -c;
                if (!r.bracket_table.emplace(k, s).second) schema_error(p, "duplicate bracket entry " + k.str());
            }
        }
        wrap_invalid(path, [&] { r.validate(); });
        return r;
    }

    Definition parse(const Json& v, const std::string& path, std::optional<std::string> implied_kind) {
        if (!v.is_object()) schema_error(path, "expected an object");
        std::string kind;
        if (v.contains("kind")) {
            if (!v["kind"].is_string()) schema_error(path + ".kind", "expected a string");
            kind = v["kind"].get<std::string>();
        } else if (implied_kind) {
            kind = *implied_kind;
        } else {
            schema_error(path, "missing field \"kind\"");
        }

        if (kind == "nlie") {
            NLieAlgebra g;
            g.arity = static_cast<int>(count_field(v, "arity", path));
            g.dim = static_cast<int>(count_field(v, "dim", path));
            if (g.arity < 2) schema_error(path + ".arity", "arity must be at least 2");
            if (v.contains("brackets")) {
                const Json& a = array_field(v, "brackets", path);
                for (std::size_t i = 0; i < a.size(); ++i) {
                    std::string p = path + ".brackets[" + std::to_string(i) + "]";
                    auto [k, sign] = json_key(field(a[i], "indices", p), static_cast<std::size_t>(g.arity), g.dim, p + ".indices");
                    const Json& val = field(a[i], "value", p);
                    if (!val.is_array() || val.size() != static_cast<std::size_t>(g.dim))
                        schema_error(p + ".value", "expected " + std::to_string(g.dim) + " coefficients");
                    RatVector row;
                    for (std::size_t j = 0; j < val.size(); ++j) {
                        Rat c = json_rat(val[j], p + ".value[" + std::to_string(j) + "]");
                        row.push_back(sign < 0 ? -c : c);
                    }
                    if (!g.table.emplace(k, row).second) schema_error(p, "duplicate bracket entry " + k.str());
                }
            }
            wrap_invalid(path, [&] { g.validate(); });
            return g;
        }
        if (kind == "representation") {
            RepresentationDef r;
            r.algebra = reference<NLieAlgebra>(field(v, "algebra", path), path + ".algebra", "nlie");
            const NLieAlgebra& g = r.algebra.value;
            const Json& mats = field(v, "matrices", path);
            if (mats.is_string() && mats.get<std::string>() == "adjoint") {
                r.adjoint = true;
                r.rep = adjoint_representation(g);
                return r;
            }
            r.rep.width = static_cast<int>(count_field(v, "width", path));
            if (!mats.is_array()) schema_error(path + ".matrices", "expected an array or \"adjoint\"");
            for (std::size_t i = 0; i < mats.size(); ++i) {
                std::string p = path + ".matrices[" + std::to_string(i) + "]";
                auto [k, sign] = json_key(field(mats[i], "indices", p), static_cast<std::size_t>(g.arity - 1), g.dim, p + ".indices");
                const Json& m = field(mats[i], "matrix", p);
                if (!m.is_array() || m.size() != static_cast<std::size_t>(r.rep.width))
                    schema_error(p + ".matrix", "expected " + std::to_string(r.rep.width) + " rows");
                RatMatrix mat;
                for (std::size_t a = 0; a < m.size(); ++a) {
                    if (!m[a].is_array() || m[a].size() != static_cast<std::size_t>(r.rep.width))
                        schema_error(p + ".matrix[" + std::to_string(a) + "]", "expected " + std::to_string(r.rep.width) + " entries");
                    RatVector row;
                    for (std::size_t b = 0; b < m[a].size(); ++b) {
                        Rat c = json_rat(m[a][b], p + ".matrix");
                        row.push_back(sign < 0 ? -c : c);
                    }
                    mat.push_back(std::move(row));
                }
                if (!r.rep.table.emplace(k, mat).second) schema_error(p, "duplicate matrix entry " + k.str());
            }
            return r;
        }
        if (kind == "rinehart") return RinehartDef{parse_rinehart(v, path)};
        if (kind == "algebroid") return NLieAlgebroid{parse_rinehart(v, path)};
        if (kind == "algebra_map") {
            AlgebraMap a;
            a.source_vars = count_field(v, "source_vars", path);
            a.target_vars = count_field(v, "target_vars", path);
            a.images = json_poly_vector(field(v, "images", path), a.source_vars, a.target_vars, path + ".images");
            wrap_invalid(path, [&] { a.validate(); });
            return a;
        }
        if (kind == "module_map" || kind == "comodule_map") {
            ModuleMapDef m;
            m.co = kind == "comodule_map";
            m.vars = count_field(v, "vars", path);
            const Json& mat = array_field(v, "matrix", path);
            m.map.matrix = json_poly_matrix(mat, mat.size(), std::nullopt, m.vars, path + ".matrix");
            return m;
        }
        if (kind == "nambu_tensor") {
            NambuTensor t;
            t.order = static_cast<int>(count_field(v, "order", path));
            t.num_vars = count_field(v, "vars", path);
            if (t.order < 2) schema_error(path + ".order", "order must be at least 2");
            if (v.contains("components")) {
                const Json& a = array_field(v, "components", path);
                for (std::size_t i = 0; i < a.size(); ++i) {
                    std::string p = path + ".components[" + std::to_string(i) + "]";
                    auto [k, sign] = json_key(field(a[i], "indices", p), static_cast<std::size_t>(t.order),
                                              static_cast<int>(t.num_vars), p + ".indices");
                    SparsePoly c = json_poly(field(a[i], "coeff", p), t.num_vars, p + ".coeff");
                    if (!t.components.emplace(k, sign < 0 ? -c : c).second) schema_error(p, "duplicate component " + k.str());
                }
            }
            return t;
        }
        if (kind == "submanifold") {
            PolySubmanifold s;
            s.num_vars = count_field(v, "vars", path);
            bool has_zero = v.contains("zero"), has_graph = v.contains("graph");
            if (has_zero == has_graph) schema_error(path, "give exactly one of \"zero\" and \"graph\"");
            if (has_zero) {
                s.kind = SubmanifoldKind::Coordinate;
                s.vars = json_indices(v["zero"], path + ".zero");
            } else {
                s.kind = SubmanifoldKind::Graph;
                const Json& g = array_field(v, "graph", path);
                for (std::size_t i = 0; i < g.size(); ++i) {
                    std::string p = path + ".graph[" + std::to_string(i) + "]";
                    const Json& var = field(g[i], "var", p);
                    if (!var.is_number_integer() || var.get<long long>() < 1) schema_error(p + ".var", "expected a positive index");
                    s.outputs.push_back(static_cast<int>(var.get<long long>() - 1));
                    s.images.push_back(json_poly(field(g[i], "image", p), s.num_vars, p + ".image"));
                }
            }
            wrap_invalid(path, [&] { s.validate(); });
            return s;
        }
        if (kind == "poly_map") {
            PolyMap m;
            m.source_dim = count_field(v, "source_dim", path);
            m.target_dim = count_field(v, "target_dim", path);
            m.components = json_poly_vector(field(v, "components", path), m.target_dim, m.source_dim, path + ".components");
            return m;
        }
        if (kind == "bundle_map_forward" || kind == "bundle_map_co") {
            auto base = reference<PolyMap>(field(v, "base", path), path + ".base", "poly_map");
            const char* key = kind == "bundle_map_co" ? "pullback" : "fiber";
            const Json& mat = array_field(v, key, path);
            PolyMatrix m = json_poly_matrix(mat, mat.size(), std::nullopt, base.value.source_dim, path + "." + key);
            if (kind == "bundle_map_co") return BundleCoDef{base, m};
            return BundleForwardDef{base, m};
        }
        if (kind == "subbundle") {
            auto base = reference<PolySubmanifold>(field(v, "base", path), path + ".base", "submanifold");
            const Json& mat = array_field(v, "basis", path);
            return SubbundleDef{base, json_poly_matrix(mat, mat.size(), std::nullopt, base.value.num_vars, path + ".basis")};
        }
        schema_error(path + ".kind", "unknown kind \"" + kind + "\"");
    }
};

inline std::pair<std::size_t, std::size_t> line_column(const std::string& text, std::size_t byte) {
    std::size_t line = 1, col = 1;
    for (std::size_t i = 0; i < byte && i < text.size(); ++i) {
        if (text[i] == '\n') {
            ++line;
            col = 1;
        } else {
            ++col;
        }
    }
    return {line, col};
}

}  // namespace detail

// Serialized form of one definition (inverse of the parser).
inline Json definition_json(const Definition& d) {
    using namespace detail;
    Json j;
    j["kind"] = definition_kind(d);
    auto rinehart_json = [](Json& out, const NLieRinehart& r) {
        out["arity"] = r.arity;
        out["rank"] = r.rank;
        out["vars"] = r.num_vars;
        Json anchors = Json::array();
        for (const auto& [k, der] : r.anchor_table) {
            Json e;
            e["indices"] = indices_json(k.indices());
            e["field"] = poly_vector_json(der.components());
            anchors.push_back(e);
        }
        out["anchors"] = anchors;
        Json brackets = Json::array();
        for (const auto& [k, s] : r.bracket_table) {
            Json e;
            e["indices"] = indices_json(k.indices());
            e["value"] = poly_vector_json(s);
            brackets.push_back(e);
        }
        out["brackets"] = brackets;
    };
    auto map_ref = [](const Ref<PolyMap>& r) -> Json {
        if (!r.name.empty()) return r.name;
        return definition_json(r.value);
    };
    std::visit(
        [&](const auto& v) {
            using T = std::decay_t<decltype(v)>;
            if constexpr (std::is_same_v<T, NLieAlgebra>) {
                j["arity"] = v.arity;
                j["dim"] = v.dim;
                Json brackets = Json::array();
                for (const auto& [k, row] : v.table) {
                    Json e, vals = Json::array();
                    e["indices"] = indices_json(k.indices());
                    for (const auto& c : row) vals.push_back(c.str());
                    e["value"] = vals;
                    brackets.push_back(e);
                }
                j["brackets"] = brackets;
            } else if constexpr (std::is_same_v<T, RepresentationDef>) {
                j["algebra"] = v.algebra.name.empty() ? definition_json(v.algebra.value) : Json(v.algebra.name);
                if (v.adjoint) {
                    j["matrices"] = "adjoint";
                } else {
                    j["width"] = v.rep.width;
                    Json mats = Json::array();
                    for (const auto& [k, m] : v.rep.table) {
                        Json e, rows = Json::array();
                        e["indices"] = indices_json(k.indices());
                        for (const auto& row : m) {
                            Json r = Json::array();
                            for (const auto& c : row) r.push_back(c.str());
                            rows.push_back(r);
                        }
                        e["matrix"] = rows;
                        mats.push_back(e);
                    }
                    j["matrices"] = mats;
                }
            } else if constexpr (std::is_same_v<T, RinehartDef>) {
                rinehart_json(j, v.structure);
            } else if constexpr (std::is_same_v<T, NLieAlgebroid>) {
                rinehart_json(j, v.structure);
            } else if constexpr (std::is_same_v<T, AlgebraMap>) {
                j["source_vars"] = v.source_vars;
                j["target_vars"] = v.target_vars;
                j["images"] = poly_vector_json(v.images);
            } else if constexpr (std::is_same_v<T, ModuleMapDef>) {
                j["vars"] = v.vars;
                j["matrix"] = poly_matrix_json(v.map.matrix);
            } else if constexpr (std::is_same_v<T, NambuTensor>) {
                j["order"] = v.order;
                j["vars"] = v.num_vars;
                Json comps = Json::array();
                for (const auto& [k, c] : v.components) {
                    Json e;
                    e["indices"] = indices_json(k.indices());
                    e["coeff"] = poly_json(c);
                    comps.push_back(e);
                }
                j["components"] = comps;
            } else if constexpr (std::is_same_v<T, PolySubmanifold>) {
                j["vars"] = v.num_vars;
                if (v.kind == SubmanifoldKind::Coordinate) {
                    j["zero"] = indices_json(v.vars);
                } else {
                    Json g = Json::array();
                    for (std::size_t k = 0; k < v.outputs.size(); ++k) {
                        Json e;
                        e["var"] = v.outputs[k] + 1;
                        e["image"] = poly_json(v.images[k]);
                        g.push_back(e);
                    }
                    j["graph"] = g;
                }
            } else if constexpr (std::is_same_v<T, PolyMap>) {
                j["source_dim"] = v.source_dim;
                j["target_dim"] = v.target_dim;
                j["components"] = poly_vector_json(v.components);
            } else if constexpr (std::is_same_v<T, BundleForwardDef>) {
                j["base"] = map_ref(v.base);
                j["fiber"] = poly_matrix_json(v.fiber);
            } else if constexpr (std::is_same_v<T, BundleCoDef>) {
                j["base"] = map_ref(v.base);
                j["pullback"] = poly_matrix_json(v.pullback);
            } else if constexpr (std::is_same_v<T, SubbundleDef>) {
                j["base"] = v.base.name.empty() ? definition_json(v.base.value) : Json(v.base.name);
                j["basis"] = poly_matrix_json(v.basis);
            }
        },
        d);
    return j;
}

inline Json to_json(const SpecDocument& doc) {
    Json j;
    j["format_version"] = doc.format_version;
    Json defs = Json::object();
    for (const auto& [name, d] : doc.definitions) defs[name] = definition_json(d);
    j["definitions"] = defs;
    Json checks = Json::array();
    for (const auto& c : doc.checks) {
        Json e;
        e["check"] = c.check;
        if (!c.label.empty()) e["label"] = c.label;
        for (const auto& [k, v] : c.args.items()) e[k] = v;
        checks.push_back(e);
    }
    j["checks"] = checks;
    return j;
}

inline std::string serialize_spec(const SpecDocument& doc) { return to_json(doc).dump(2) + "\n"; }

// Parses and resolves definitions. Directive arguments are bound separately (see runner.hpp).
inline SpecDocument parse_spec_document(const std::string& text) {
    Json j;
    try {
        j = Json::parse(text);
    } catch (const Json::parse_error& e) {
        auto [line, col] = detail::line_column(text, e.byte > 0 ? e.byte - 1 : 0);
        std::string msg = e.what();
        auto pos = msg.find("syntax error");
        throw SpecError(ExitCode::Syntax, "line " + std::to_string(line) + ", column " + std::to_string(col) + ": " +
                                              (pos == std::string::npos ? msg : msg.substr(pos)));
    }
    if (!j.is_object()) detail::schema_error("document", "expected an object");
    SpecDocument doc;
    const Json& ver = detail::field(j, "format_version", "document");
    if (!ver.is_number_integer() || ver.get<int>() != kFormatVersion)
        detail::schema_error("document.format_version", "unsupported version (expected " + std::to_string(kFormatVersion) + ")");
    for (const auto& [k, v] : j.items())
        if (k != "format_version" && k != "definitions" && k != "checks")
            detail::schema_error("document", "unknown field \"" + k + "\"");
    if (j.contains("definitions")) {
        if (!j["definitions"].is_object()) detail::schema_error("document.definitions", "expected an object");
        doc.definitions = detail::DefinitionParser(j["definitions"]).parse_all();
    }
    if (j.contains("checks")) {
        const Json& cs = j["checks"];
        if (!cs.is_array()) detail::schema_error("document.checks", "expected an array");
        for (std::size_t i = 0; i < cs.size(); ++i) {
            std::string p = "checks[" + std::to_string(i) + "]";
            const Json& c = cs[i];
            if (!c.is_object()) detail::schema_error(p, "expected an object");
            Directive d;
            const Json& name = detail::field(c, "check", p);
            if (!name.is_string()) detail::schema_error(p + ".check", "expected a string");
            d.check = name.get<std::string>();
            d.args = Json::object();
            for (const auto& [k, v] : c.items()) {
                if (k == "check") continue;
                if (k == "label") {
                    if (!v.is_string()) detail::schema_error(p + ".label", "expected a string");
                    d.label = v.get<std::string>();
                    continue;
                }
                d.args[k] = v;
            }
            doc.checks.push_back(std::move(d));
        }
    }
    return doc;
}

inline std::string read_text_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot read " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

}  // namespace nforge
