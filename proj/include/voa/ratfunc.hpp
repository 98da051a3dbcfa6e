#pragma once

#include <optional>
#include <string>
#include <string_view>

#include "voa/polynomial.hpp"

namespace voa {

// Element of Q(n) stored as a reduced fraction of integer polynomials.
// Canonical form: den != 0, gcd(num, den) = 1 in Z[n] (contents included),
// leading coefficient of den positive. Equality of values is equality of
// representatives.
class RatFunc {
public:
    RatFunc() : num_(), den_(1) {}
    RatFunc(long v) : num_(v), den_(1) {}
    RatFunc(BigInt v) : num_(std::move(v)), den_(1) {}
    RatFunc(const Rational& q) : num_(q.get_num()), den_(q.get_den()) {}
    RatFunc(IntPoly p) : num_(std::move(p)), den_(1) {}
    RatFunc(IntPoly num, IntPoly den) : num_(std::move(num)), den_(std::move(den))
    {
        if (den_.is_zero()) throw ZeroDenominatorError();
        normalize();
    }

    /* The level symbol n. */
    static RatFunc variable() { return RatFunc(IntPoly::variable()); }

    bool is_zero() const { return num_.is_zero(); }
    bool is_one() const { return num_ == IntPoly(1) && den_ == IntPoly(1); }

    const IntPoly& num() const { return num_; }
    const IntPoly& den() const { return den_; }

    std::optional<Rational> as_rational() const
    {
        if (num_.degree() > 0 || den_.degree() > 0) return std::nullopt;
        if (num_.is_zero()) return Rational(0);
        return Rational(num_.coeff(0)) / Rational(den_.coeff(0));
    }

    friend RatFunc operator+(const RatFunc& a, const RatFunc& b)
    {
        return RatFunc(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
    }
    friend RatFunc operator-(const RatFunc& a, const RatFunc& b)
    {
        return RatFunc(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
    }
    RatFunc operator-() const
    {
        RatFunc r = *this;
        r.num_ = -r.num_;
        return r;
    }
    friend RatFunc operator*(const RatFunc& a, const RatFunc& b)
    {
        if (a.is_zero() || b.is_zero()) return RatFunc();
        return RatFunc(a.num_ * b.num_, a.den_ * b.den_);
    }
    friend RatFunc operator/(const RatFunc& a, const RatFunc& b)
    {
        if (b.is_zero()) throw ZeroDenominatorError();
        if (a.is_zero()) return RatFunc();
        return RatFunc(a.num_ * b.den_, a.den_ * b.num_);
    }

    RatFunc& operator+=(const RatFunc& o) { return *this = *this + o; }
    RatFunc& operator-=(const RatFunc& o) { return *this = *this - o; }
    RatFunc& operator*=(const RatFunc& o) { return *this = *this * o; }
    RatFunc& operator/=(const RatFunc& o) { return *this = *this / o; }

    friend bool operator==(const RatFunc& a, const RatFunc& b)
    {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend bool operator!=(const RatFunc& a, const RatFunc& b) { return !(a == b); }

    /* Exact specialization at n = x; a vanishing denominator names itself. */
    Rational eval(const Rational& x) const
    {
        Rational d = den_.eval(x);
        if (d == 0)
            throw PoleError("pole at n = " + voa::to_string(x) + ": denominator " +
                            den_.to_string() + " vanishes");
        return num_.eval(x) / d;
    }

    /* "(p)/(q)"; "(p)" when the denominator is 1. Round-trips exactly. */
    std::string to_string() const
    {
        std::string s = "(" + num_.to_string() + ")";
        if (den_ != IntPoly(1)) s += "/(" + den_.to_string() + ")";
        return s;
    }

    static RatFunc parse(std::string_view s)
    {
        auto grab = [&](std::size_t& i) {
            if (i >= s.size() || s[i] != '(')
                throw ParseError("ratfunc: '(' expected in '" + std::string(s) + "'");
            int depth = 0;
            std::size_t start = ++i;
            for (; i < s.size(); ++i) {
                if (s[i] == '(') ++depth;
                else if (s[i] == ')') {
                    if (depth == 0) return std::string(s.substr(start, i++ - start));
                    --depth;
                }
            }
            throw ParseError("ratfunc: unbalanced parentheses in '" + std::string(s) + "'");
        };
        std::size_t i = 0;
        while (i < s.size() && s[i] == ' ') ++i;
        IntPoly num = IntPoly::parse(grab(i));
        IntPoly den(1);
        if (i < s.size() && s[i] == '/') {
            ++i;
            den = IntPoly::parse(grab(i));
        }
        while (i < s.size() && s[i] == ' ') ++i;
        if (i != s.size()) throw ParseError("ratfunc: trailing garbage in '" + std::string(s) + "'");
        return RatFunc(std::move(num), std::move(den));
    }

private:
    IntPoly num_, den_;

    void normalize()
    {
        if (num_.is_zero()) {
            den_ = IntPoly(1);
            return;
        }
        IntPoly g = IntPoly::gcd(num_, den_);
        if (g != IntPoly(1)) {
            num_ = IntPoly::divexact(num_, g);
            den_ = IntPoly::divexact(den_, g);
        }
        if (den_.leading() < 0) {
            num_ = -num_;
            den_ = -den_;
        }
    }
};

enum class ScalarOp { add, sub, mul, div };

inline RatFunc ratfunc_arith(const RatFunc& a, const RatFunc& b, ScalarOp op)
{
    switch (op) {
        case ScalarOp::add: return a + b;
        case ScalarOp::sub: return a - b;
        case ScalarOp::mul: return a * b;
        case ScalarOp::div: return a / b;
    }
    throw Error("unreachable");
}

inline Rational ratfunc_eval(const RatFunc& a, const Rational& n0) { return a.eval(n0); }

} // namespace voa
