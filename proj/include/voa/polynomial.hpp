#pragma once

#include <cassert>
#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "voa/rational.hpp"

namespace voa {

// Dense univariate polynomial over Z in the level symbol n.
// Invariant: no trailing zero coefficients (the zero polynomial is empty).
class IntPoly {
public:
    IntPoly() = default;
    IntPoly(long v) { if (v != 0) c_.push_back(BigInt(v)); }
    IntPoly(BigInt v) { if (v != 0) c_.push_back(std::move(v)); }

    static IntPoly variable()
    {
        IntPoly p;
        p.c_ = {BigInt(0), BigInt(1)};
        return p;
    }

    bool is_zero() const { return c_.empty(); }
    int  degree() const { return static_cast<int>(c_.size()) - 1; }

    const BigInt& coeff(std::size_t i) const
    {
        static const BigInt zero(0);
        return i < c_.size() ? c_[i] : zero;
    }

    const BigInt& leading() const
    {
        assert(!c_.empty());
        return c_.back();
    }

    /* gcd of the coefficients, non-negative; 0 for the zero polynomial. */
    BigInt content() const
    {
        BigInt g = 0;
        for (const auto& x : c_) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
        return g;
    }

    friend IntPoly operator+(const IntPoly& a, const IntPoly& b)
    {
        IntPoly r;
        r.c_.resize(std::max(a.c_.size(), b.c_.size()));
        for (std::size_t i = 0; i < r.c_.size(); ++i)
            r.c_[i] = a.coeff(i) + b.coeff(i);
        r.trim();
        return r;
    }

    friend IntPoly operator-(const IntPoly& a, const IntPoly& b)
    {
        IntPoly r;
        r.c_.resize(std::max(a.c_.size(), b.c_.size()));
        for (std::size_t i = 0; i < r.c_.size(); ++i)
            r.c_[i] = a.coeff(i) - b.coeff(i);
        r.trim();
        return r;
    }

    IntPoly operator-() const
    {
        IntPoly r = *this;
        for (auto& x : r.c_) x = -x;
        return r;
    }

    friend IntPoly operator*(const IntPoly& a, const IntPoly& b)
    {
        if (a.is_zero() || b.is_zero()) return {};
        IntPoly r;
        r.c_.assign(a.c_.size() + b.c_.size() - 1, BigInt(0));
        for (std::size_t i = 0; i < a.c_.size(); ++i)
            for (std::size_t j = 0; j < b.c_.size(); ++j)
                r.c_[i + j] += a.c_[i] * b.c_[j];
        r.trim();
        return r;
    }

    friend bool operator==(const IntPoly& a, const IntPoly& b) { return a.c_ == b.c_; }
    friend bool operator!=(const IntPoly& a, const IntPoly& b) { return !(a == b); }
    friend bool operator<(const IntPoly& a, const IntPoly& b)
    {
        if (a.c_.size() != b.c_.size()) return a.c_.size() < b.c_.size();
        for (std::size_t i = a.c_.size(); i-- > 0;)
            if (a.c_[i] != b.c_[i]) return a.c_[i] < b.c_[i];
        return false;
    }

    Rational eval(const Rational& x) const
    {
        Rational r(0);
        for (std::size_t i = c_.size(); i-- > 0;)
            r = r * x + Rational(c_[i]);
        return r;
    }

    /* Exact quotient; requires d | *this in Z[n]. */
    static IntPoly divexact(const IntPoly& a, const IntPoly& d)
    {
        assert(!d.is_zero());
        if (a.is_zero()) return {};
        assert(a.degree() >= d.degree());
        IntPoly rem = a;
        IntPoly q;
        q.c_.assign(a.degree() - d.degree() + 1, BigInt(0));
        while (!rem.is_zero() && rem.degree() >= d.degree()) {
            BigInt t = rem.leading() / d.leading();
            assert(t * d.leading() == rem.leading() && "inexact polynomial division");
            int shift = rem.degree() - d.degree();
            for (std::size_t i = 0; i < d.c_.size(); ++i)
                rem.c_[i + shift] -= t * d.c_[i];
            rem.trim();
            q.c_[shift] = t;
        }
        assert(rem.is_zero() && "inexact polynomial division");
        q.trim();
        return q;
    }

    /* gcd over Z[n] including integer content; result has positive leading
       coefficient. Euclid on primitive parts with pseudo-remainders. */
    static IntPoly gcd(IntPoly a, IntPoly b)
    {
        if (a.is_zero()) return normalize_sign(b);
        if (b.is_zero()) return normalize_sign(a);
        BigInt cont;
        mpz_gcd(cont.get_mpz_t(), a.content().get_mpz_t(), b.content().get_mpz_t());
        a = a.primitive_part();
        b = b.primitive_part();
        if (a.degree() < b.degree()) std::swap(a, b);
        while (!b.is_zero()) {
            IntPoly r = pseudo_rem(a, b);
            a = b;
            b = r.primitive_part();
        }
        return normalize_sign(a * IntPoly(cont));
    }

    std::string to_string() const;
    static IntPoly parse(std::string_view s, std::size_t* pos = nullptr);

private:
    std::vector<BigInt> c_;

    void trim()
    {
        while (!c_.empty() && c_.back() == 0) c_.pop_back();
    }

    IntPoly primitive_part() const
    {
        if (is_zero()) return {};
        BigInt c = content();
        if (leading() < 0) c = -c;
        IntPoly r = *this;
        for (auto& x : r.c_) x /= c;
        return r;
    }

    static IntPoly normalize_sign(IntPoly p)
    {
        if (!p.is_zero() && p.leading() < 0)
            for (auto& x : p.c_) x = -x;
        return p;
    }

    /* prem(a, b): remainder of lc(b)^(deg a - deg b + 1) * a by b. */
    static IntPoly pseudo_rem(IntPoly a, const IntPoly& b)
    {
        int k = a.degree() - b.degree() + 1;
        BigInt scale = 1;
        for (int i = 0; i < k; ++i) scale *= b.leading();
        for (auto& x : a.c_) x *= scale;
        while (!a.is_zero() && a.degree() >= b.degree()) {
            BigInt t = a.leading() / b.leading();
            int shift = a.degree() - b.degree();
            for (std::size_t i = 0; i < b.c_.size(); ++i)
                a.c_[i + shift] -= t * b.c_[i];
            a.trim();
        }
        return a;
    }
};

/* "2n^2+4n", "-n+3", "7", "0". Terms in descending degree. */
inline std::string IntPoly::to_string() const
{
    if (is_zero()) return "0";
    std::string out;
    for (int d = degree(); d >= 0; --d) {
        const BigInt& c = coeff(static_cast<std::size_t>(d));
        if (c == 0) continue;
        if (!out.empty() && c > 0) out += '+';
        if (d == 0) {
            out += c.get_str();
        } else {
            if (c == -1) out += '-';
            else if (c != 1) out += c.get_str();
            out += 'n';
            if (d > 1) out += '^' + std::to_string(d);
        }
    }
    return out;
}

inline IntPoly IntPoly::parse(std::string_view s, std::size_t* pos)
{
    std::size_t i = 0;
    auto skip = [&] { while (i < s.size() && s[i] == ' ') ++i; };
    IntPoly out;
    bool any = false;
    skip();
    while (i < s.size()) {
        int sign = 1;
        if (s[i] == '+') { ++i; }
        else if (s[i] == '-') { sign = -1; ++i; }
        else if (any) break;
        skip();
        std::string digits;
        while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) digits += s[i++];
        skip();
        if (i < s.size() && s[i] == '*') { ++i; skip(); }
        long deg = 0;
        if (i < s.size() && s[i] == 'n') {
            ++i;
            deg = 1;
            if (i < s.size() && s[i] == '^') {
                ++i;
                std::string e;
                while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) e += s[i++];
                if (e.empty()) throw ParseError("polynomial: exponent expected");
                deg = std::stol(e);
            }
        } else if (digits.empty()) {
            throw ParseError("polynomial: term expected in '" + std::string(s) + "'");
        }
        BigInt c = digits.empty() ? BigInt(1) : BigInt(digits);
        if (sign < 0) c = -c;
        IntPoly term;
        term.c_.assign(static_cast<std::size_t>(deg) + 1, BigInt(0));
        term.c_.back() = c;
        term.trim();
        out = out + term;
        any = true;
        skip();
    }
    if (!any) throw ParseError("polynomial: empty input");
    if (pos) *pos = i;
    else if (i != s.size()) throw ParseError("polynomial: trailing garbage in '" + std::string(s) + "'");
    return out;
}

} // namespace voa
