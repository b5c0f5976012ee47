#pragma once

#include <gmpxx.h>

#include <cctype>
#include <compare>
#include <concepts>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>

namespace nforge {

// Exact rational number. The value is kept canonical at all times:
// gcd(num, den) == 1, den > 0, and zero is 0/1.
class Rat {
public:
    Rat() = default;

    template <std::integral I>
    Rat(I v) : q_(static_cast<long>(v)) {}

    Rat(long num, long den) {
        if (den == 0) throw std::domain_error("rational with zero denominator");
        q_ = mpq_class(mpz_class(num), mpz_class(den));
        q_.canonicalize();
    }

    explicit Rat(const mpq_class& q) : q_(q) { q_.canonicalize(); }

    // Accepts "p", "-p", "p/q" with optional surrounding whitespace.
    static Rat parse(std::string_view text) {
        std::size_t b = 0, e = text.size();
        while (b < e && std::isspace(static_cast<unsigned char>(text[b]))) ++b;
        while (e > b && std::isspace(static_cast<unsigned char>(text[e - 1]))) --e;
        std::string s(text.substr(b, e - b));
        std::size_t i = 0;
        if (i < s.size() && (s[i] == '-' || s[i] == '+')) ++i;
        auto digits = [&](std::size_t& k) {
            std::size_t start = k;
            while (k < s.size() && std::isdigit(static_cast<unsigned char>(s[k]))) ++k;
            return k > start;
        };
        if (!digits(i)) throw std::invalid_argument("malformed rational '" + s + "'");
        if (i < s.size()) {
            if (s[i] != '/') throw std::invalid_argument("malformed rational '" + s + "'");
            ++i;
            if (!digits(i) || i != s.size())
                throw std::invalid_argument("malformed rational '" + s + "'");
        }
        if (!s.empty() && s[0] == '+') s.erase(0, 1);
        mpq_class q;
        if (q.set_str(s, 10) != 0) throw std::invalid_argument("malformed rational '" + s + "'");
        if (q.get_den() == 0) throw std::domain_error("rational with zero denominator");
        return Rat(q);
    }

    bool is_zero() const { return sgn(q_) == 0; }
    bool is_one() const { return q_ == 1; }
    bool is_integer() const { return q_.get_den() == 1; }
    int sign() const { return sgn(q_); }

    const mpq_class& value() const { return q_; }
    std::string num_str() const { return q_.get_num().get_str(); }
    std::string den_str() const { return q_.get_den().get_str(); }
    std::string str() const { return q_.get_str(); }

    Rat operator-() const {
        Rat r;
        r.q_ = -q_;
        return r;
    }
    Rat& operator+=(const Rat& o) {
        q_ += o.q_;
        return *this;
    }
    Rat& operator-=(const Rat& o) {
        q_ -= o.q_;
        return *this;
    }
    Rat& operator*=(const Rat& o) {
        q_ *= o.q_;
        return *this;
    }
    Rat& operator/=(const Rat& o) {
        if (o.is_zero()) throw std::domain_error("division by zero rational");
        q_ /= o.q_;
        return *this;
    }

    friend Rat operator+(Rat a, const Rat& b) { return a += b; }
    friend Rat operator-(Rat a, const Rat& b) { return a -= b; }
    friend Rat operator*(Rat a, const Rat& b) { return a *= b; }
    friend Rat operator/(Rat a, const Rat& b) { return a /= b; }

    friend bool operator==(const Rat& a, const Rat& b) { return a.q_ == b.q_; }
    friend std::strong_ordering operator<=>(const Rat& a, const Rat& b) {
        int c = cmp(a.q_, b.q_);
        return c < 0 ? std::strong_ordering::less
                     : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
    }

    friend std::ostream& operator<<(std::ostream& os, const Rat& r) { return os << r.str(); }

private:
    mpq_class q_{0};
};

}  // namespace nforge
