#pragma once

#include <atomic>
#include <cctype>
#include <cstdint>
#include <map>
#include <numeric>
#include <optional>
#include <random>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "nambu_forge/rat.hpp"

namespace nforge {

using Exponent = std::vector<std::uint32_t>;

inline std::uint64_t exponent_degree(const Exponent& e) {
    return std::accumulate(e.begin(), e.end(), std::uint64_t{0});
}

// Graded lexicographic order; the largest key is the leading monomial.
struct GrlexLess {
    bool operator()(const Exponent& a, const Exponent& b) const {
        auto da = exponent_degree(a), db = exponent_degree(b);
        if (da != db) return da < db;
        return a < b;
    }
};

class TermLimitExceeded : public std::runtime_error {
public:
    explicit TermLimitExceeded(std::size_t limit)
        : std::runtime_error("polynomial exceeded the term cap of " + std::to_string(limit) +
                             " terms") {}
};

inline std::atomic<std::size_t>& term_limit_storage() {
    static std::atomic<std::size_t> limit{100000};
    return limit;
}
inline std::size_t max_terms() { return term_limit_storage().load(std::memory_order_relaxed); }
inline void set_max_terms(std::size_t n) { term_limit_storage().store(n, std::memory_order_relaxed); }

class PolyParseError : public std::invalid_argument {
public:
    PolyParseError(const std::string& msg, std::size_t column)
        : std::invalid_argument(msg + " at column " + std::to_string(column)), column_(column) {}
    std::size_t column() const { return column_; }

private:
    std::size_t column_;
};

// Sparse multivariate polynomial over Q in variables x1..xm (0-based internally).
// Only nonzero coefficients are stored.
class SparsePoly {
public:
    using Terms = std::map<Exponent, Rat, GrlexLess>;

    SparsePoly() = default;
    explicit SparsePoly(std::size_t num_vars) : nvars_(num_vars) {}

    static SparsePoly constant(std::size_t num_vars, const Rat& c) {
        SparsePoly p(num_vars);
        if (!c.is_zero()) p.terms_.emplace(Exponent(num_vars, 0), c);
        return p;
    }
    static SparsePoly variable(std::size_t num_vars, std::size_t j) {
        if (j >= num_vars) throw std::out_of_range("variable index out of range");
        Exponent e(num_vars, 0);
        e[j] = 1;
        return monomial(std::move(e), Rat(1));
    }
    static SparsePoly monomial(Exponent e, const Rat& c) {
        SparsePoly p(e.size());
        if (!c.is_zero()) p.terms_.emplace(std::move(e), c);
        return p;
    }

    std::size_t num_vars() const { return nvars_; }
    const Terms& terms() const { return terms_; }
    std::size_t size() const { return terms_.size(); }
    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const {
        return terms_.empty() || (terms_.size() == 1 && exponent_degree(terms_.begin()->first) == 0);
    }
    Rat constant_term() const {
        auto it = terms_.find(Exponent(nvars_, 0));
        return it == terms_.end() ? Rat(0) : it->second;
    }
    // -1 for the zero polynomial.
    long total_degree() const {
        return terms_.empty() ? -1 : static_cast<long>(exponent_degree(terms_.rbegin()->first));
    }
    Rat coefficient(const Exponent& e) const {
        auto it = terms_.find(e);
        return it == terms_.end() ? Rat(0) : it->second;
    }
    const std::pair<const Exponent, Rat>& leading_term() const {
        if (terms_.empty()) throw std::logic_error("leading term of zero polynomial");
        return *terms_.rbegin();
    }
    // True when the polynomial depends on variable j.
    bool involves(std::size_t j) const {
        for (const auto& [e, c] : terms_)
            if (e[j] > 0) return true;
        return false;
    }

    void add_term(const Exponent& e, const Rat& c) {
        if (e.size() != nvars_) throw std::invalid_argument("exponent length mismatch");
        if (c.is_zero()) return;
        auto [it, inserted] = terms_.try_emplace(e, c);
        if (!inserted) {
            it->second += c;
            if (it->second.is_zero()) terms_.erase(it);
        }
        enforce_cap();
    }

    SparsePoly operator-() const {
        SparsePoly r(*this);
        for (auto& [e, c] : r.terms_) c = -c;
        return r;
    }

    SparsePoly& operator+=(const SparsePoly& o) { return accumulate(o, false); }
    SparsePoly& operator-=(const SparsePoly& o) { return accumulate(o, true); }
    SparsePoly& operator*=(const Rat& s) {
        if (s.is_zero()) {
            terms_.clear();
        } else {
            for (auto& [e, c] : terms_) c *= s;
        }
        return *this;
    }

    friend SparsePoly operator+(SparsePoly a, const SparsePoly& b) { return a += b; }
    friend SparsePoly operator-(SparsePoly a, const SparsePoly& b) { return a -= b; }
    friend SparsePoly operator*(SparsePoly a, const Rat& s) { return a *= s; }
    friend SparsePoly operator*(const Rat& s, SparsePoly a) { return a *= s; }

    friend SparsePoly operator*(const SparsePoly& a, const SparsePoly& b) {
        std::size_t nv = common_vars(a, b);
        SparsePoly r(nv);
        if (a.is_zero() || b.is_zero()) return r;
        Exponent e(nv, 0);
        for (const auto& [ea, ca] : a.terms_) {
            for (const auto& [eb, cb] : b.terms_) {
                for (std::size_t k = 0; k < nv; ++k)
                    e[k] = (k < ea.size() ? ea[k] : 0) + (k < eb.size() ? eb[k] : 0);
                Rat c = ca * cb;
                auto [it, inserted] = r.terms_.try_emplace(e, c);
                if (!inserted) it->second += c;
            }
            r.enforce_cap();
        }
        for (auto it = r.terms_.begin(); it != r.terms_.end();) {
            if (it->second.is_zero())
                it = r.terms_.erase(it);
            else
                ++it;
        }
        return r;
    }
    SparsePoly& operator*=(const SparsePoly& o) { return *this = *this * o; }

    friend bool operator==(const SparsePoly& a, const SparsePoly& b) {
        if (a.is_zero() && b.is_zero()) return true;
        return a.nvars_ == b.nvars_ && a.terms_ == b.terms_;
    }

    std::string str() const;

private:
    static std::size_t common_vars(const SparsePoly& a, const SparsePoly& b) {
        if (a.nvars_ == b.nvars_) return a.nvars_;
        // A polynomial in zero variables is a bare constant and adapts to the other side.
        if (a.nvars_ == 0) return b.nvars_;
        if (b.nvars_ == 0) return a.nvars_;
        throw std::invalid_argument("polynomials live in rings with different variable counts (" +
                                    std::to_string(a.nvars_) + " vs " + std::to_string(b.nvars_) +
                                    ")");
    }
    SparsePoly& accumulate(const SparsePoly& o, bool negate) {
        std::size_t nv = common_vars(*this, o);
        if (nvars_ != nv) {
            // *this is a bare constant; lift it.
            Rat c = constant_term();
            terms_.clear();
            nvars_ = nv;
            if (!c.is_zero()) terms_.emplace(Exponent(nv, 0), c);
        }
        if (o.nvars_ != nv) {
            Rat c = o.constant_term();
            add_term(Exponent(nv, 0), negate ? -c : c);
            return *this;
        }
        for (const auto& [e, c] : o.terms_) {
            auto [it, inserted] = terms_.try_emplace(e, negate ? -c : c);
            if (!inserted) {
                if (negate)
                    it->second -= c;
                else
                    it->second += c;
                if (it->second.is_zero()) terms_.erase(it);
            }
        }
        enforce_cap();
        return *this;
    }
    void enforce_cap() const {
        std::size_t cap = max_terms();
        if (terms_.size() > cap) throw TermLimitExceeded(cap);
    }

    std::size_t nvars_ = 0;
    Terms terms_;
};

namespace detail {

inline std::string monomial_str(const Exponent& e) {
    std::string s;
    for (std::size_t j = 0; j < e.size(); ++j) {
        if (e[j] == 0) continue;
        if (!s.empty()) s += "*";
        s += "x" + std::to_string(j + 1);
        if (e[j] > 1) s += "^" + std::to_string(e[j]);
    }
    return s;
}

}  // namespace detail

// Terms are printed leading-first, e.g. "3/2*x1^2*x2 - x3".
inline std::string SparsePoly::str() const {
    if (terms_.empty()) return "0";
    std::string out;
    bool first = true;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const auto& [e, c] = *it;
        bool neg = c.sign() < 0;
        Rat a = neg ? -c : c;
        std::string mono = detail::monomial_str(e);
        std::string body;
        if (mono.empty())
            body = a.str();
        else if (a.is_one())
            body = mono;
        else
            body = a.str() + "*" + mono;
        if (first)
            out += neg ? "-" + body : body;
        else
            out += neg ? " - " + body : " + " + body;
        first = false;
    }
    return out;
}

inline std::ostream& operator<<(std::ostream& os, const SparsePoly& p) { return os << p.str(); }

// Partial derivative with respect to variable j (0-based).
inline SparsePoly poly_partial(const SparsePoly& p, std::size_t j) {
    if (j >= p.num_vars()) throw std::out_of_range("partial derivative variable out of range");
    SparsePoly r(p.num_vars());
    for (const auto& [e, c] : p.terms()) {
        if (e[j] == 0) continue;
        Exponent f = e;
        --f[j];
        r.add_term(f, c * Rat(static_cast<long>(e[j])));
    }
    return r;
}

inline SparsePoly poly_pow(const SparsePoly& p, std::uint32_t k) {
    SparsePoly r = SparsePoly::constant(p.num_vars(), Rat(1));
    SparsePoly base = p;
    while (k) {
        if (k & 1u) r *= base;
        k >>= 1u;
        if (k) base *= base;
    }
    return r;
}

// Substitutes images[j] for x_j. All images must live in the same ring.
inline SparsePoly poly_substitute(const SparsePoly& p, const std::vector<SparsePoly>& images) {
    if (images.size() != p.num_vars())
        throw std::invalid_argument("substitution arity mismatch: " + std::to_string(images.size()) +
                                    " images for " + std::to_string(p.num_vars()) + " variables");
    std::size_t target = 0;
    for (const auto& im : images) target = std::max(target, im.num_vars());
    for (const auto& im : images)
        if (im.num_vars() != target && im.num_vars() != 0)
            throw std::invalid_argument("substitution images live in different rings");

    bool monomial_images = true;
    for (const auto& im : images)
        if (im.size() > 1) monomial_images = false;

    SparsePoly r(target);
    if (monomial_images) {
        // Fast path: every image is zero or a single term.
        for (const auto& [e, c] : p.terms()) {
            Exponent f(target, 0);
            Rat coeff = c;
            bool vanishes = false;
            for (std::size_t j = 0; j < e.size() && !vanishes; ++j) {
                if (e[j] == 0) continue;
                if (images[j].is_zero()) {
                    vanishes = true;
                    break;
                }
                const auto& [ie, ic] = *images[j].terms().begin();
                for (std::uint32_t t = 0; t < e[j]; ++t) coeff *= ic;
                for (std::size_t k = 0; k < ie.size(); ++k) f[k] += ie[k] * e[j];
            }
            if (!vanishes) r.add_term(f, coeff);
        }
        return r;
    }

    std::vector<std::vector<SparsePoly>> powers(images.size());
    auto power = [&](std::size_t j, std::uint32_t k) -> const SparsePoly& {
        auto& cache = powers[j];
        if (cache.empty()) cache.push_back(SparsePoly::constant(target, Rat(1)));
        while (cache.size() <= k) cache.push_back(cache.back() * images[j]);
        return cache[k];
    };
    for (const auto& [e, c] : p.terms()) {
        SparsePoly t = SparsePoly::constant(target, c);
        for (std::size_t j = 0; j < e.size() && !t.is_zero(); ++j)
            if (e[j]) t *= power(j, e[j]);
        r += t;
    }
    return r;
}

// Re-homes p into a ring with `num_vars` variables, mapping x_j to x_{j+offset}.
inline SparsePoly poly_embed(const SparsePoly& p, std::size_t num_vars, std::size_t offset) {
    if (offset + p.num_vars() > num_vars) throw std::out_of_range("embedding does not fit");
    SparsePoly r(num_vars);
    for (const auto& [e, c] : p.terms()) {
        Exponent f(num_vars, 0);
        for (std::size_t j = 0; j < e.size(); ++j) f[offset + j] = e[j];
        r.add_term(f, c);
    }
    return r;
}

// Sets the variables flagged in `zero` to 0 and keeps the ring.
inline SparsePoly poly_zero_vars(const SparsePoly& p, const std::vector<bool>& zero) {
    SparsePoly r(p.num_vars());
    for (const auto& [e, c] : p.terms()) {
        bool keep = true;
        for (std::size_t j = 0; j < e.size(); ++j)
            if (zero[j] && e[j] > 0) keep = false;
        if (keep) r.add_term(e, c);
    }
    return r;
}

// Drops variables flagged in `drop`; p must not involve them.
inline SparsePoly poly_drop_vars(const SparsePoly& p, const std::vector<bool>& drop) {
    std::size_t kept = 0;
    for (bool d : drop)
        if (!d) ++kept;
    SparsePoly r(kept);
    for (const auto& [e, c] : p.terms()) {
        Exponent f;
        f.reserve(kept);
        for (std::size_t j = 0; j < e.size(); ++j) {
            if (drop[j]) {
                if (e[j]) throw std::invalid_argument("polynomial involves a dropped variable");
            } else {
                f.push_back(e[j]);
            }
        }
        r.add_term(f, c);
    }
    return r;
}

// Exact quotient a / b, or nullopt when b does not divide a.
inline std::optional<SparsePoly> exact_divide(const SparsePoly& a, const SparsePoly& b) {
    if (b.is_zero()) throw std::domain_error("polynomial division by zero");
    std::size_t nv = std::max(a.num_vars(), b.num_vars());
    SparsePoly q(nv), r = a;
    if (r.num_vars() != nv) r = r + SparsePoly(nv);
    const auto& [lb, cb] = b.leading_term();
    while (!r.is_zero()) {
        const auto& [lr, cr] = r.leading_term();
        Exponent t(nv, 0);
        for (std::size_t k = 0; k < nv; ++k) {
            std::uint32_t bk = k < lb.size() ? lb[k] : 0;
            if (lr[k] < bk) return std::nullopt;
            t[k] = lr[k] - bk;
        }
        SparsePoly term = SparsePoly::monomial(t, cr / cb);
        q += term;
        r -= term * b;
    }
    return q;
}

namespace detail {

class PolyParser {
public:
    PolyParser(std::string_view s, std::size_t nvars) : s_(s), nvars_(nvars) {}

    SparsePoly parse() {
        skip();
        if (pos_ == s_.size()) fail("empty polynomial");
        SparsePoly p = expr();
        skip();
        if (pos_ != s_.size()) fail(std::string("unexpected character '") + s_[pos_] + "'");
        return p;
    }

private:
    [[noreturn]] void fail(const std::string& msg) const { throw PolyParseError(msg, pos_ + 1); }
    void skip() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }
    bool peek(char c) {
        skip();
        return pos_ < s_.size() && s_[pos_] == c;
    }
    bool eat(char c) {
        if (peek(c)) {
            ++pos_;
            return true;
        }
        return false;
    }
    std::string digits() {
        skip();
        std::size_t start = pos_;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
        if (start == pos_) fail("expected a number");
        return std::string(s_.substr(start, pos_ - start));
    }

    SparsePoly expr() {
        SparsePoly acc(nvars_);
        bool neg = false;
        if (eat('-'))
            neg = true;
        else
            eat('+');
        SparsePoly t = term();
        acc += neg ? -t : t;
        while (true) {
            if (eat('+'))
                acc += term();
            else if (eat('-'))
                acc -= term();
            else
                break;
        }
        return acc;
    }
    SparsePoly term() {
        SparsePoly acc = factor();
        while (true) {
            if (eat('*')) {
                acc *= factor();
            } else if (peek('/')) {
                std::size_t at = pos_;
                ++pos_;
                SparsePoly d = factor();
                if (!d.is_constant() || d.is_zero()) {
                    pos_ = at;
                    fail("division only by a nonzero constant");
                }
                acc *= Rat(1) / d.constant_term();
            } else {
                break;
            }
        }
        return acc;
    }
    SparsePoly factor() {
        if (eat('-')) return -factor();
        SparsePoly base = primary();
        if (eat('^')) {
            std::string d = digits();
            if (d.size() > 6) fail("exponent too large");
            base = poly_pow(base, static_cast<std::uint32_t>(std::stoul(d)));
        }
        return base;
    }
    SparsePoly primary() {
        skip();
        if (pos_ >= s_.size()) fail("unexpected end of input");
        char c = s_[pos_];
        if (c == '(') {
            ++pos_;
            SparsePoly p = expr();
            if (!eat(')')) fail("expected ')'");
            return p;
        }
        if (c == 'x') {
            ++pos_;
            std::size_t at = pos_;
            std::string d = digits();
            std::size_t j = d.size() > 6 ? 0 : std::stoul(d);
            if (j == 0 || j > nvars_) {
                pos_ = at;
                fail("variable x" + d + " outside x1..x" + std::to_string(nvars_));
            }
            return SparsePoly::variable(nvars_, j - 1);
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            return SparsePoly::constant(nvars_, Rat::parse(digits()));
        }
        fail(std::string("unexpected character '") + c + "'");
    }

    std::string_view s_;
    std::size_t nvars_;
    std::size_t pos_ = 0;
};

}  // namespace detail

// Parses text such as "3/2*x1^2*x2 - x3" into a polynomial with `num_vars` variables.
inline SparsePoly parse_poly(std::string_view text, std::size_t num_vars) {
    return detail::PolyParser(text, num_vars).parse();
}

// Random polynomial with small integer coefficients and total degree <= max_degree.
inline SparsePoly random_poly(std::size_t num_vars, unsigned max_degree, std::mt19937_64& rng,
                              int coeff_bound = 3, unsigned max_terms_drawn = 4) {
    SparsePoly p(num_vars);
    std::uniform_int_distribution<int> coeff(-coeff_bound, coeff_bound);
    std::uniform_int_distribution<unsigned> nterms(1, max_terms_drawn);
    std::uniform_int_distribution<unsigned> deg(0, max_degree);
    std::uniform_int_distribution<std::size_t> var(0, num_vars ? num_vars - 1 : 0);
    unsigned k = nterms(rng);
    for (unsigned t = 0; t < k; ++t) {
        Exponent e(num_vars, 0);
        unsigned d = num_vars ? deg(rng) : 0;
        for (unsigned i = 0; i < d; ++i) ++e[var(rng)];
        p.add_term(e, Rat(coeff(rng)));
    }
    return p;
}

}  // namespace nforge
