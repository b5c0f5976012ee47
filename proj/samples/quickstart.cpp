// Builds a few structures in code and runs the checkers on them.
#include <iostream>

#include "nambu_forge/nambu_forge.hpp"

using namespace nforge;

static void show(const char* what, const Verdict& v) {
    std::cout << what << ": " << (v.passed ? "pass" : "FAIL") << "\n";
    if (v.witness) {
        std::cout << "  " << v.witness->condition;
        if (!v.witness->probe.empty()) std::cout << ", probe " << v.witness->probe;
        std::cout << "\n";
        for (const auto& r : v.witness->residual) std::cout << "  residual " << r << "\n";
    }
}

int main() {
    // The 4-dimensional 3-Lie algebra and a perturbed copy.
    NLieAlgebra v4 = builtin_v4();
    show("v4 fundamental identity", check_fundamental_identity(v4));
    NLieAlgebra bent = v4;
    bent.table.begin()->second[0] += Rat(1);
    show("perturbed v4", check_fundamental_identity(bent));

    // Nambu bracket of the canonical tensor on Q^3 is the Jacobian determinant.
    NambuTensor pi = NambuTensor::top(3);
    SparsePoly f = parse_poly("x1^2", 3), g = parse_poly("x2", 3), h = parse_poly("x3 + x1*x2", 3);
    std::cout << "{x1^2, x2, x3 + x1*x2} = " << nambu_bracket(pi, {f, g, h}) << "\n";
    show("x1 d1^d2^d3 is Nambu-Poisson", check_nambu_fi(std::get<NambuTensor>(builtins().at("canonical_x1_3").value)));

    // The tangent model algebroid and its dual linear Nambu structure.
    NLieAlgebroid t3{tangent_model(3)};
    show("tangent model is an algebroid", check_algebroid(t3));
    NambuTensor dual = dual_linear_nambu(t3);
    show("its dual is Nambu-Poisson", check_nambu_fi(dual));

    // Coisotropy on Q^4: N = {x1 = x2 = x3 = 0}.
    PolySubmanifold n = PolySubmanifold::coordinate(4, {0, 1, 2});
    show("d1^d2^d4 coisotropic", check_coisotropic(std::get<NambuTensor>(builtins().at("canonical4_124").value), n));
    show("d1^d2^d3 coisotropic", check_coisotropic(std::get<NambuTensor>(builtins().at("canonical4_123").value), n));
    return 0;
}
