#pragma once

#include <map>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "nambu_forge/algebroid.hpp"
#include "nambu_forge/nlie.hpp"

namespace nforge {

// A definition that may refer to another one by name; an empty name means the value was
// given inline.
template <class T>
struct Ref {
    std::string name;
    T value;
    friend bool operator==(const Ref&, const Ref&) = default;
};

struct RepresentationDef {
    Ref<NLieAlgebra> algebra;
    bool adjoint = false;
    RepTable rep;
    friend bool operator==(const RepresentationDef&, const RepresentationDef&) = default;
};

struct ModuleMapDef {
    bool co = false;  // comodule map F -> E (x) B
    std::size_t vars = 0;
    ModuleMap map;
    friend bool operator==(const ModuleMapDef&, const ModuleMapDef&) = default;
};

struct RinehartDef {
    NLieRinehart structure;
    friend bool operator==(const RinehartDef&, const RinehartDef&) = default;
};

struct BundleForwardDef {
    Ref<PolyMap> base;
    PolyMatrix fiber;
    BundleMapForward value() const { return {base.value, fiber}; }
    friend bool operator==(const BundleForwardDef&, const BundleForwardDef&) = default;
};

struct BundleCoDef {
    Ref<PolyMap> base;
    PolyMatrix pullback;
    BundleMapCo value() const { return {base.value, pullback}; }
    friend bool operator==(const BundleCoDef&, const BundleCoDef&) = default;
};

struct SubbundleDef {
    Ref<PolySubmanifold> base;
    PolyMatrix basis;
    Subbundle value() const { return {base.value, basis}; }
    friend bool operator==(const SubbundleDef&, const SubbundleDef&) = default;
};

using Definition = std::variant<NLieAlgebra, RepresentationDef, RinehartDef, NLieAlgebroid, AlgebraMap, ModuleMapDef,
                                NambuTensor, PolySubmanifold, PolyMap, BundleForwardDef, BundleCoDef, SubbundleDef>;

inline std::string definition_kind(const Definition& d) {
    struct Visitor {
        std::string operator()(const NLieAlgebra&) const { return "nlie"; }
        std::string operator()(const RepresentationDef&) const { return "representation"; }
        std::string operator()(const RinehartDef&) const { return "rinehart"; }
        std::string operator()(const NLieAlgebroid&) const { return "algebroid"; }
        std::string operator()(const AlgebraMap&) const { return "algebra_map"; }
        std::string operator()(const ModuleMapDef& m) const { return m.co ? "comodule_map" : "module_map"; }
        std::string operator()(const NambuTensor&) const { return "nambu_tensor"; }
        std::string operator()(const PolySubmanifold&) const { return "submanifold"; }
        std::string operator()(const PolyMap&) const { return "poly_map"; }
        std::string operator()(const BundleForwardDef&) const { return "bundle_map_forward"; }
        std::string operator()(const BundleCoDef&) const { return "bundle_map_co"; }
        std::string operator()(const SubbundleDef&) const { return "subbundle"; }
    };
    return std::visit(Visitor{}, d);
}

struct Builtin {
    std::string description;
    Definition value;
};

namespace detail {

inline NambuTensor nambu_from(std::size_t m, std::initializer_list<std::pair<MultiIndex, SparsePoly>> cs) {
    NambuTensor t{3, m, {}};
    for (const auto& [k, c] : cs) t.components.emplace(k, c);
    return t;
}

inline std::map<std::string, Builtin> make_builtins() {
    std::map<std::string, Builtin> b;
    b.emplace("v4", Builtin{"4-dimensional 3-Lie algebra with [e_i, e_j, e_k] = eps_ijkl e_l", builtin_v4()});
    for (int n : {2, 3, 4})
        b.emplace("tangent" + std::to_string(n),
                  Builtin{"tangent model: rank " + std::to_string(n) + " over Q^" + std::to_string(n) +
                              ", zero brackets, anchor " +
                              (n == 2 ? std::string("e1") : "(e1..e" + std::to_string(n - 1) + ")") + " -> d/dx1",
                          NLieAlgebroid{tangent_model(n)}});
    b.emplace("zero3", Builtin{"arity 3, rank 3 over Q^3 with zero anchor and zero bracket",
                               NLieAlgebroid{zero_rinehart(3, 3, 3)}});
    b.emplace("canonical3", Builtin{"d1 ^ d2 ^ d3 on Q^3", NambuTensor::top(3)});
    b.emplace("canonical_x1_3", Builtin{"x1 d1 ^ d2 ^ d3 on Q^3",
                                        nambu_from(3, {{MultiIndex{0, 1, 2}, SparsePoly::variable(3, 0)}})});
    b.emplace("canonical4_123", Builtin{"d1 ^ d2 ^ d3 on Q^4",
                                        nambu_from(4, {{MultiIndex{0, 1, 2}, SparsePoly::constant(4, Rat(1))}})});
    b.emplace("canonical4_124", Builtin{"d1 ^ d2 ^ d4 on Q^4",
                                        nambu_from(4, {{MultiIndex{0, 1, 3}, SparsePoly::constant(4, Rat(1))}})});
    b.emplace("identity", Builtin{"identity map of Q^3 (same as identity3)", PolyMap::identity(3)});
    b.emplace("identity3", Builtin{"identity map of Q^3", PolyMap::identity(3)});
    b.emplace("identity_algebra3", Builtin{"identity of Q[x1,x2,x3]", AlgebraMap::identity(3)});
    b.emplace("identity_matrix3", Builtin{"identity module map of rank 3 over Q[x1,x2,x3]",
                                          ModuleMapDef{false, 3, ModuleMap{identity_poly_matrix(3, 3)}}});
    b.emplace("identity_comatrix3", Builtin{"identity comodule map of rank 3 over Q[x1,x2,x3]",
                                            ModuleMapDef{true, 3, ModuleMap{identity_poly_matrix(3, 3)}}});
    b.emplace("counterexample.e1", Builtin{"source of the anchor counterexample: zero anchor, zero bracket, rank 3",
                                           NLieAlgebroid{zero_rinehart(3, 3, 3)}});
    b.emplace("counterexample.e2", Builtin{"target of the anchor counterexample: tangent model, rank 3",
                                           NLieAlgebroid{tangent_model(3)}});
    b.emplace("counterexample.map",
              Builtin{"comorphism candidate over the identity with zero pullback; brackets are preserved "
                      "but the anchors are not related",
                      BundleCoDef{Ref<PolyMap>{"identity3", PolyMap::identity(3)}, zero_poly_matrix(3, 3, 3)}});
    PolyMap scaled = PolyMap::identity(3);
    scaled.components[0] = SparsePoly::constant(3, Rat(2)) * SparsePoly::variable(3, 0);
    b.emplace("base_scaled3", Builtin{"forward map with identity fiber over the base map (2x1, x2, x3)",
                                      BundleForwardDef{Ref<PolyMap>{"", scaled}, identity_poly_matrix(3, 3)}});
    b.emplace("identity_bundle3", Builtin{"identity forward map of the rank 3 trivial bundle over Q^3",
                                          BundleForwardDef{Ref<PolyMap>{"identity3", PolyMap::identity(3)},
                                                           identity_poly_matrix(3, 3)}});
    return b;
}

}  // namespace detail

inline const std::map<std::string, Builtin>& builtins() {
    static const std::map<std::string, Builtin> table = detail::make_builtins();
    return table;
}

}  // namespace nforge
