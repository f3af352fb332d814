#pragma once

#include "welding/rational.hpp"

#include <algorithm>
#include <vector>

namespace welding {

// Polynomial in the formal commuting symbol lambda, with exact rational
// coefficients. Dense storage by power; no trailing zero coefficients.
class LambdaPoly {
public:
    LambdaPoly() = default;
    LambdaPoly(const Rational& c) { // NOLINT(google-explicit-constructor)
        if (c != 0) c_.push_back(c);
    }
    LambdaPoly(long long c) : LambdaPoly(Rational(c)) {} // NOLINT

    static LambdaPoly lambda() {
        LambdaPoly p;
        p.c_ = {Rational(0), Rational(1)};
        return p;
    }

    bool is_zero() const { return c_.empty(); }
    bool is_constant() const { return c_.size() <= 1; }
    int degree() const { return static_cast<int>(c_.size()) - 1; }

    const Rational& coeff(int k) const {
        static const Rational zero = 0;
        if (k < 0 || k >= static_cast<int>(c_.size())) return zero;
        return c_[k];
    }

    Rational constant() const { return coeff(0); }

    LambdaPoly& operator+=(const LambdaPoly& o) {
        if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
        for (size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
        trim();
        return *this;
    }
    LambdaPoly& operator-=(const LambdaPoly& o) {
        if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
        for (size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
        trim();
        return *this;
    }
    friend LambdaPoly operator+(LambdaPoly a, const LambdaPoly& b) { return a += b; }
    friend LambdaPoly operator-(LambdaPoly a, const LambdaPoly& b) { return a -= b; }
    friend LambdaPoly operator-(const LambdaPoly& a) {
        LambdaPoly r = a;
        for (auto& x : r.c_) x = -x;
        return r;
    }
    friend LambdaPoly operator*(const LambdaPoly& a, const LambdaPoly& b) {
        LambdaPoly r;
        if (a.is_zero() || b.is_zero()) return r;
        r.c_.assign(a.c_.size() + b.c_.size() - 1, Rational(0));
        for (size_t i = 0; i < a.c_.size(); ++i)
            for (size_t j = 0; j < b.c_.size(); ++j)
                r.c_[i + j] += a.c_[i] * b.c_[j];
        r.trim();
        return r;
    }
    LambdaPoly& operator*=(const LambdaPoly& o) { return *this = *this * o; }

    bool operator==(const LambdaPoly& o) const { return c_ == o.c_; }
    bool operator!=(const LambdaPoly& o) const { return !(*this == o); }
    bool operator<(const LambdaPoly& o) const { return c_ < o.c_; }

    Rational eval(const Rational& x) const {
        Rational v = 0;
        for (auto it = c_.rbegin(); it != c_.rend(); ++it) v = v * x + *it;
        return v;
    }

    std::string str() const {
        if (is_zero()) return "0";
        std::string out;
        for (int k = degree(); k >= 0; --k) {
            const Rational& a = c_[k];
            if (a == 0) continue;
            const bool neg = a < 0;
            const Rational mag = neg ? Rational(-a) : a;
            if (out.empty())
                out += neg ? "-" : "";
            else
                out += neg ? " - " : " + ";
            const bool unit = (mag == 1 && k > 0);
            if (!unit) out += welding::to_string(mag);
            if (k > 0) {
                if (!unit) out += "*";
                out += "lam";
                if (k > 1) out += "^" + std::to_string(k);
            }
        }
        return out;
    }

private:
    void trim() {
        while (!c_.empty() && c_.back() == 0) c_.pop_back();
    }
    std::vector<Rational> c_;
};

inline LambdaPoly operator*(const Rational& a, const LambdaPoly& b) { return LambdaPoly(a) * b; }

} // namespace welding
