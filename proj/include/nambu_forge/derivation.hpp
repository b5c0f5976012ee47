#pragma once

#include <string>
#include <vector>

#include "nambu_forge/poly.hpp"

namespace nforge {

// Derivation sum_j D_j * d/dx_j of a polynomial ring; also used for vector fields.
class PolyDerivation {
public:
    PolyDerivation() = default;
    explicit PolyDerivation(std::size_t num_vars) : comps_(num_vars, SparsePoly(num_vars)) {}
    explicit PolyDerivation(std::vector<SparsePoly> components) : comps_(std::move(components)) {
        for (const auto& c : comps_)
            if (c.num_vars() != comps_.size() && !c.is_zero())
                throw std::invalid_argument("derivation component lives in the wrong ring");
        for (auto& c : comps_)
            if (c.num_vars() != comps_.size()) c = SparsePoly(comps_.size());
    }

    std::size_t num_vars() const { return comps_.size(); }
    const std::vector<SparsePoly>& components() const { return comps_; }
    const SparsePoly& component(std::size_t j) const { return comps_.at(j); }
    SparsePoly& component(std::size_t j) { return comps_.at(j); }

    bool is_zero() const {
        for (const auto& c : comps_)
            if (!c.is_zero()) return false;
        return true;
    }

    SparsePoly apply(const SparsePoly& p) const {
        if (p.num_vars() != comps_.size() && !p.is_constant())
            throw std::invalid_argument("derivation applied to a polynomial of another ring");
        SparsePoly r(comps_.size());
        if (p.is_constant()) return r;
        for (std::size_t j = 0; j < comps_.size(); ++j) {
            if (comps_[j].is_zero()) continue;
            SparsePoly d = poly_partial(p, j);
            if (!d.is_zero()) r += comps_[j] * d;
        }
        return r;
    }

    PolyDerivation& operator+=(const PolyDerivation& o) {
        check_same(o);
        for (std::size_t j = 0; j < comps_.size(); ++j) comps_[j] += o.comps_[j];
        return *this;
    }
    PolyDerivation& operator-=(const PolyDerivation& o) {
        check_same(o);
        for (std::size_t j = 0; j < comps_.size(); ++j) comps_[j] -= o.comps_[j];
        return *this;
    }
    PolyDerivation& operator*=(const SparsePoly& f) {
        for (auto& c : comps_) c = c * f;
        return *this;
    }
    PolyDerivation& operator*=(const Rat& s) {
        for (auto& c : comps_) c *= s;
        return *this;
    }
    friend PolyDerivation operator+(PolyDerivation a, const PolyDerivation& b) { return a += b; }
    friend PolyDerivation operator-(PolyDerivation a, const PolyDerivation& b) { return a -= b; }
    friend PolyDerivation operator*(PolyDerivation a, const SparsePoly& f) { return a *= f; }
    friend PolyDerivation operator*(const SparsePoly& f, PolyDerivation a) { return a *= f; }
    friend PolyDerivation operator*(PolyDerivation a, const Rat& s) { return a *= s; }

    friend bool operator==(const PolyDerivation& a, const PolyDerivation& b) {
        if (a.is_zero() && b.is_zero()) return true;
        return a.comps_ == b.comps_;
    }

    // Text form "c1*d/dx1 + ...", zero components omitted.
    std::string str() const {
        std::string s;
        for (std::size_t j = 0; j < comps_.size(); ++j) {
            if (comps_[j].is_zero()) continue;
            if (!s.empty()) s += " + ";
            s += "(" + comps_[j].str() + ")*d/dx" + std::to_string(j + 1);
        }
        return s.empty() ? "0" : s;
    }

private:
    void check_same(const PolyDerivation& o) const {
        if (o.comps_.size() != comps_.size())
            throw std::invalid_argument("derivations of different rings");
    }

    std::vector<SparsePoly> comps_;
};

// sum_j D_j * dp/dx_j
inline SparsePoly derivation_apply(const PolyDerivation& d, const SparsePoly& p) {
    if (p.num_vars() != d.num_vars() && !p.is_constant())
        throw std::invalid_argument("derivation dimension mismatch: " + std::to_string(d.num_vars()) +
                                    " components, polynomial in " + std::to_string(p.num_vars()) +
                                    " variables");
    return d.apply(p);
}

// [D1, D2] = D1 o D2 - D2 o D1, again a derivation.
inline PolyDerivation commutator(const PolyDerivation& a, const PolyDerivation& b) {
    std::size_t m = a.num_vars();
    std::vector<SparsePoly> comps(m, SparsePoly(m));
    for (std::size_t j = 0; j < m; ++j) comps[j] = a.apply(b.component(j)) - b.apply(a.component(j));
    return PolyDerivation(std::move(comps));
}

// Vector field d/dx_j.
inline PolyDerivation coordinate_derivation(std::size_t num_vars, std::size_t j) {
    PolyDerivation d(num_vars);
    d.component(j) = SparsePoly::constant(num_vars, Rat(1));
    return d;
}

}  // namespace nforge
