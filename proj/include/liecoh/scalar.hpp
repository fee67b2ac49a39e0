#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <algorithm>
#include <cctype>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "errors.hpp"

namespace liecoh {

using BigInt = boost::multiprecision::cpp_int;

/// Dense polynomial in the formal transcendental `t` with arbitrary-precision
/// integer coefficients. Invariant: no trailing zero coefficients, so the
/// zero polynomial is the empty coefficient vector and degree() == -1.
class IntPoly {
public:
    IntPoly() = default;
    IntPoly(BigInt constant) { // NOLINT(google-explicit-constructor)
        if (constant != 0) c_.push_back(std::move(constant));
    }
    IntPoly(long long constant) : IntPoly(BigInt(constant)) {} // NOLINT

    static IntPoly tau() {
        IntPoly p;
        p.c_ = {BigInt(0), BigInt(1)};
        return p;
    }

    static IntPoly monomial(BigInt coeff, int degree) {
        IntPoly p;
        if (coeff != 0) {
            p.c_.assign(static_cast<size_t>(degree) + 1, BigInt(0));
            p.c_.back() = std::move(coeff);
        }
        return p;
    }

    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    bool is_constant() const { return c_.size() <= 1; }

    const BigInt& coeff(int d) const {
        static const BigInt zero(0);
        if (d < 0 || d >= static_cast<int>(c_.size())) return zero;
        return c_[static_cast<size_t>(d)];
    }

    const BigInt& leading() const { return c_.back(); } // pre: !is_zero()

    friend IntPoly operator+(const IntPoly& a, const IntPoly& b) {
        IntPoly r;
        r.c_.resize(std::max(a.c_.size(), b.c_.size()));
        for (size_t i = 0; i < r.c_.size(); ++i) {
            if (i < a.c_.size()) r.c_[i] += a.c_[i];
            if (i < b.c_.size()) r.c_[i] += b.c_[i];
        }
        r.trim();
        return r;
    }

    friend IntPoly operator-(const IntPoly& a, const IntPoly& b) {
        IntPoly r;
        r.c_.resize(std::max(a.c_.size(), b.c_.size()));
        for (size_t i = 0; i < r.c_.size(); ++i) {
            if (i < a.c_.size()) r.c_[i] += a.c_[i];
            if (i < b.c_.size()) r.c_[i] -= b.c_[i];
        }
        r.trim();
        return r;
    }

    friend IntPoly operator-(const IntPoly& a) {
        IntPoly r = a;
        for (auto& c : r.c_) c = -c;
        return r;
    }

    friend IntPoly operator*(const IntPoly& a, const IntPoly& b) {
        if (a.is_zero() || b.is_zero()) return {};
        IntPoly r;
        r.c_.assign(a.c_.size() + b.c_.size() - 1, BigInt(0));
        for (size_t i = 0; i < a.c_.size(); ++i)
            for (size_t j = 0; j < b.c_.size(); ++j)
                r.c_[i + j] += a.c_[i] * b.c_[j];
        r.trim();
        return r;
    }

    bool operator==(const IntPoly& o) const { return c_ == o.c_; }
    bool operator!=(const IntPoly& o) const { return c_ != o.c_; }

    /// gcd of all coefficients, nonnegative; 0 for the zero polynomial.
    BigInt content() const {
        BigInt g(0);
        for (const auto& c : c_) {
            g = boost::multiprecision::gcd(g, c);
            if (g == 1) break;
        }
        return g;
    }

    /// Exact division; pre: b != 0 and b | a in Z[t].
    static IntPoly div_exact(const IntPoly& a, const IntPoly& b) {
        if (b.is_zero()) throw Error("internal", "polynomial division by zero");
        if (a.is_zero()) return {};
        IntPoly rem = a;
        IntPoly q;
        q.c_.assign(static_cast<size_t>(a.degree() - b.degree()) + 1, BigInt(0));
        while (!rem.is_zero() && rem.degree() >= b.degree()) {
            const int d = rem.degree() - b.degree();
            BigInt qc = rem.leading() / b.leading();
            if (qc * b.leading() != rem.leading())
                throw Error("internal", "inexact polynomial division");
            q.c_[static_cast<size_t>(d)] = qc;
            rem = rem - IntPoly::monomial(qc, d) * b;
            if (!rem.is_zero() && rem.degree() >= b.degree() + d)
                throw Error("internal", "inexact polynomial division");
        }
        if (!rem.is_zero()) throw Error("internal", "inexact polynomial division");
        q.trim();
        return q;
    }

    /// Full gcd in Z[t] (content folded in), normalized to positive leading coeff.
    static IntPoly gcd(const IntPoly& a, const IntPoly& b) {
        if (a.is_zero()) return b.leading_positive();
        if (b.is_zero()) return a.leading_positive();
        const BigInt cont = boost::multiprecision::gcd(a.content(), b.content());
        IntPoly p = a.primitive_part();
        IntPoly q = b.primitive_part();
        // primitive remainder sequence
        while (!q.is_zero()) {
            IntPoly r = pseudo_rem(p, q);
            p = q;
            q = r.primitive_part();
        }
        p = p.primitive_part();
        IntPoly g = p * IntPoly(cont);
        return g.leading_positive();
    }

    static IntPoly lcm(const IntPoly& a, const IntPoly& b) {
        if (a.is_zero() || b.is_zero()) return {};
        return div_exact(a * b, gcd(a, b)).leading_positive();
    }

    int leading_sign() const {
        if (is_zero()) return 0;
        return leading() > 0 ? 1 : -1;
    }

private:
    void trim() {
        while (!c_.empty() && c_.back() == 0) c_.pop_back();
    }

    IntPoly primitive_part() const {
        if (is_zero()) return {};
        BigInt cont = content();
        IntPoly r;
        r.c_.reserve(c_.size());
        for (const auto& c : c_) r.c_.push_back(c / cont);
        return r;
    }

    IntPoly leading_positive() const {
        if (!is_zero() && leading() < 0) return -*this;
        return *this;
    }

    // pseudo-remainder: lc(b)^k * a mod b for suitable k
    static IntPoly pseudo_rem(IntPoly a, const IntPoly& b) {
        while (!a.is_zero() && a.degree() >= b.degree()) {
            const int d = a.degree() - b.degree();
            a = a * IntPoly(b.leading()) - IntPoly::monomial(a.leading(), d) * b;
        }
        return a;
    }

    std::vector<BigInt> c_;
};

/// Element of the rational-function field Q(t), kept in canonical form:
/// num/den with den != 0, gcd(num, den) = 1 in Z[t], and den's leading
/// coefficient positive. Zero is 0/1. Canonical form makes operator==
/// structural and printing deterministic.
class Scalar {
public:
    Scalar() : num_(), den_(1) {}
    Scalar(long long v) : num_(v), den_(1) {} // NOLINT(google-explicit-constructor)
    Scalar(BigInt v) : num_(std::move(v)), den_(1) {} // NOLINT

    static Scalar tau() { return Scalar(IntPoly::tau(), IntPoly(1)); }

    static Scalar rational(BigInt p, BigInt q) {
        return Scalar(IntPoly(std::move(p)), IntPoly(std::move(q)));
    }

    static Scalar from_polys(IntPoly num, IntPoly den) {
        return Scalar(std::move(num), std::move(den));
    }

    const IntPoly& num() const { return num_; }
    const IntPoly& den() const { return den_; }

    bool is_zero() const { return num_.is_zero(); }
    bool is_one() const { return num_ == IntPoly(1) && den_ == IntPoly(1); }
    /// true iff the value is free of the transcendental.
    bool is_rational() const { return num_.is_constant() && den_.is_constant(); }

    /// Sign of a rational value; values involving t admit no canonical order.
    int sign() const {
        if (!is_rational())
            throw UnorderedScalar("sign requested for '" + str() +
                                  "': values involving t are not ordered");
        return num_.leading_sign();
    }

    friend Scalar operator+(const Scalar& a, const Scalar& b) {
        return Scalar(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
    }
    friend Scalar operator-(const Scalar& a, const Scalar& b) {
        return Scalar(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
    }
    friend Scalar operator*(const Scalar& a, const Scalar& b) {
        return Scalar(a.num_ * b.num_, a.den_ * b.den_);
    }
    friend Scalar operator/(const Scalar& a, const Scalar& b) {
        if (b.is_zero()) throw Error("division-by-zero", "scalar division by zero");
        return Scalar(a.num_ * b.den_, a.den_ * b.num_);
    }
    friend Scalar operator-(const Scalar& a) { return Scalar(-a.num_, a.den_); }

    Scalar& operator+=(const Scalar& o) { return *this = *this + o; }
    Scalar& operator-=(const Scalar& o) { return *this = *this - o; }
    Scalar& operator*=(const Scalar& o) { return *this = *this * o; }
    Scalar& operator/=(const Scalar& o) { return *this = *this / o; }

    bool operator==(const Scalar& o) const { return num_ == o.num_ && den_ == o.den_; }
    bool operator!=(const Scalar& o) const { return !(*this == o); }

    /// Canonical text form; parse(str()) reproduces the value and re-printing
    /// reproduces the bytes.
    std::string str() const {
        if (den_ == IntPoly(1)) return poly_str(num_);
        // Parenthesize so that the emitted text re-parses to the same value
        // under left-associative '*' and '/': a sum needs parens on either
        // side, and a denominator with an explicit '*' (e.g. 2*t) does too.
        std::string ns = monomial_count(num_) <= 1 ? poly_str(num_) : "(" + poly_str(num_) + ")";
        const bool den_atom =
            den_.is_constant() || (monomial_count(den_) == 1 && den_.leading() == 1);
        std::string ds = den_atom ? poly_str(den_) : "(" + poly_str(den_) + ")";
        return ns + "/" + ds;
    }

    /// Parses field expressions over integers and `t`: + - * / ^ and parens.
    static Scalar parse(std::string_view text) {
        Parser p{text, 0};
        Scalar v = p.expr();
        p.skip_ws();
        if (p.pos != text.size())
            throw ParseError("trailing characters in scalar '" + std::string(text) + "'");
        return v;
    }

private:
    Scalar(IntPoly num, IntPoly den) : num_(std::move(num)), den_(std::move(den)) {
        canonicalize();
    }

    void canonicalize() {
        if (den_.is_zero()) throw Error("division-by-zero", "scalar with zero denominator");
        if (num_.is_zero()) {
            den_ = IntPoly(1);
            return;
        }
        IntPoly g = IntPoly::gcd(num_, den_);
        num_ = IntPoly::div_exact(num_, g);
        den_ = IntPoly::div_exact(den_, g);
        if (den_.leading_sign() < 0) {
            num_ = -num_;
            den_ = -den_;
        }
    }

    static int monomial_count(const IntPoly& p) {
        int n = 0;
        for (int d = 0; d <= p.degree(); ++d)
            if (p.coeff(d) != 0) ++n;
        return n;
    }

    static std::string poly_str(const IntPoly& p) {
        if (p.is_zero()) return "0";
        std::string out;
        bool first = true;
        for (int d = 0; d <= p.degree(); ++d) {
            const BigInt& c = p.coeff(d);
            if (c == 0) continue;
            const bool neg = c < 0;
            BigInt mag = neg ? BigInt(-c) : c;
            if (first) {
                if (neg) out += "-";
                first = false;
            } else {
                out += neg ? " - " : " + ";
            }
            if (d == 0) {
                out += mag.str();
            } else {
                if (mag != 1) {
                    out += mag.str();
                    out += "*";
                }
                out += "t";
                if (d > 1) out += "^" + std::to_string(d);
            }
        }
        return out;
    }

    struct Parser {
        std::string_view s;
        size_t pos;

        void skip_ws() {
            while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
        }

        bool eat(char c) {
            skip_ws();
            if (pos < s.size() && s[pos] == c) {
                ++pos;
                return true;
            }
            return false;
        }

        char peek() {
            skip_ws();
            return pos < s.size() ? s[pos] : '\0';
        }

        [[noreturn]] void fail(const std::string& what) {
            throw ParseError(what + " at position " + std::to_string(pos) + " in scalar '" +
                             std::string(s) + "'");
        }

        Scalar expr() {
            Scalar v = term();
            while (true) {
                if (eat('+')) v += term();
                else if (eat('-')) v -= term();
                else return v;
            }
        }

        Scalar term() {
            Scalar v = unary();
            while (true) {
                if (eat('*')) v *= unary();
                else if (eat('/')) {
                    Scalar d = unary();
                    if (d.is_zero()) fail("division by zero");
                    v /= d;
                } else return v;
            }
        }

        Scalar unary() {
            if (eat('-')) return -unary();
            if (eat('+')) return unary();
            return power();
        }

        Scalar power() {
            Scalar base = primary();
            if (eat('^')) {
                skip_ws();
                long long e = small_int();
                Scalar v = Scalar(1);
                for (long long i = 0; i < e; ++i) v *= base;
                return v;
            }
            return base;
        }

        Scalar primary() {
            skip_ws();
            if (pos >= s.size()) fail("unexpected end of input");
            char c = s[pos];
            if (c == '(') {
                ++pos;
                Scalar v = expr();
                if (!eat(')')) fail("expected ')'");
                return v;
            }
            if (c == 't') {
                ++pos;
                return Scalar::tau();
            }
            if (std::isdigit(static_cast<unsigned char>(c))) {
                size_t start = pos;
                while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
                return Scalar(BigInt(std::string(s.substr(start, pos - start))));
            }
            fail(std::string("unexpected character '") + c + "'");
        }

        long long small_int() {
            skip_ws();
            size_t start = pos;
            while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
            if (pos == start) fail("expected a nonnegative integer exponent");
            const std::string digits(s.substr(start, pos - start));
            if (digits.size() > 4) fail("exponent too large");
            return std::stoll(digits);
        }
    };

    IntPoly num_, den_;
};

inline std::string to_string(const Scalar& s) { return s.str(); }

} // namespace liecoh
