#pragma once

#include <atomic>
#include <cstdint>
#include <exception>
#include <functional>
#include <map>
#include <mutex>
#include <optional>
#include <random>
#include <string>
#include <thread>
#include <vector>

#include "nambu_forge/poly.hpp"

namespace nforge {

// Evidence that an identity fails: which identity, on which basis tuples (0-based),
// for which probe function, and the residual lhs - rhs.
struct Witness {
    std::string condition;
    std::vector<std::vector<int>> tuples;
    std::string probe;
    std::vector<SparsePoly> residual;
};

struct Verdict {
    bool passed = true;
    std::optional<Witness> witness;
    std::vector<std::string> notes;

    static Verdict pass() { return {}; }
    static Verdict fail(Witness w) {
        Verdict v;
        v.passed = false;
        v.witness = std::move(w);
        return v;
    }
    explicit operator bool() const { return passed; }
};

// Raised when a checker's documented precondition does not hold.
class PreconditionError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

struct CheckOptions {
    unsigned jobs = 1;
    unsigned probe_degree = 2;
    long degree_bound = 4;
    unsigned guard_probes = 5;
    std::uint64_t seed = 0x6e616d6275ULL;
};

// Evaluates task(i) for i in [0, count) and returns the failure with the smallest index.
// With jobs > 1 the work is shared by threads; the answer does not depend on `jobs`.
template <class Task>
std::optional<Witness> first_failure(std::size_t count, unsigned jobs, Task&& task) {
    if (jobs <= 1 || count < 2) {
        for (std::size_t i = 0; i < count; ++i)
            if (auto w = task(i)) return w;
        return std::nullopt;
    }
    std::atomic<std::size_t> next{0};
    std::atomic<std::size_t> best{count};
    std::mutex mu;
    std::map<std::size_t, Witness> found;
    std::exception_ptr error;
    auto worker = [&] {
        while (true) {
            std::size_t i = next.fetch_add(1);
            if (i >= count || i >= best.load()) return;
            try {
                if (auto w = task(i)) {
                    std::lock_guard<std::mutex> lock(mu);
                    found.emplace(i, std::move(*w));
                    std::size_t cur = best.load();
                    while (i < cur && !best.compare_exchange_weak(cur, i)) {
                    }
                }
            } catch (...) {
                std::lock_guard<std::mutex> lock(mu);
                if (!error) error = std::current_exception();
                best.store(0);
                return;
            }
        }
    };
    std::vector<std::thread> pool;
    unsigned n = std::min<unsigned>(jobs, static_cast<unsigned>(count));
    for (unsigned t = 0; t < n; ++t) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
    if (error) std::rethrow_exception(error);
    if (found.empty()) return std::nullopt;
    return found.begin()->second;
}

// Probe polynomials for identities that are derivations in their function argument:
// the generators x_j followed by a few seeded random polynomials of degree <= 2.
inline std::vector<std::pair<std::string, SparsePoly>> generator_probes(std::size_t num_vars,
                                                                        const CheckOptions& opt) {
    std::vector<std::pair<std::string, SparsePoly>> out;
    for (std::size_t j = 0; j < num_vars; ++j)
        out.emplace_back("x" + std::to_string(j + 1), SparsePoly::variable(num_vars, j));
    if (num_vars == 0) return out;
    std::mt19937_64 rng(opt.seed + num_vars);
    for (unsigned k = 0; k < opt.guard_probes; ++k) {
        SparsePoly p = random_poly(num_vars, 2, rng);
        out.emplace_back(p.str(), p);
    }
    return out;
}

// Monomials of degree 1..max_degree, in graded order.
inline std::vector<std::pair<std::string, SparsePoly>> monomial_probes(std::size_t num_vars,
                                                                       unsigned max_degree) {
    std::vector<std::pair<std::string, SparsePoly>> out;
    std::vector<Exponent> level{Exponent(num_vars, 0)};
    for (unsigned d = 1; d <= max_degree; ++d) {
        std::vector<Exponent> next;
        for (const auto& e : level) {
            std::size_t last = 0;
            for (std::size_t j = 0; j < num_vars; ++j)
                if (e[j]) last = j;
            for (std::size_t j = (d == 1 ? 0 : last); j < num_vars; ++j) {
                Exponent f = e;
                ++f[j];
                next.push_back(f);
            }
        }
        for (const auto& e : next) {
            SparsePoly p = SparsePoly::monomial(e, Rat(1));
            out.emplace_back(p.str(), p);
        }
        level = std::move(next);
    }
    return out;
}

inline std::vector<SparsePoly> constant_residual(const std::vector<Rat>& v) {
    std::vector<SparsePoly> out;
    out.reserve(v.size());
    for (const auto& r : v) out.push_back(SparsePoly::constant(0, r));
    return out;
}

}  // namespace nforge
