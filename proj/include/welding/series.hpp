#pragma once

#include "welding/rational.hpp"

#include <limits>
#include <map>
#include <stdexcept>
#include <string>

namespace welding {

// Thrown when a coefficient is requested outside the provable window of a
// truncated series. Truncation is never silently treated as zero.
struct window_error : std::logic_error {
    using std::logic_error::logic_error;
};

enum class At { zero, infinity };

// coefficient-ring hooks; overloaded per ring
inline bool coeff_is_zero(const Rational& r) { return r == 0; }
inline Rational coeff_conj(const Rational& r) { return r; }
inline Rational coeff_inverse(const Rational& r) {
    if (r == 0) throw std::domain_error("inverse of zero coefficient");
    return 1 / r;
}

// Truncated Laurent series with an explicit validity window.
//
// Expansion at zero:      coefficients below `lo` are exactly zero, the
//                         window [lo, hi] is known, above `hi` is unknown.
// Expansion at infinity:  mirrored (zero above `hi`, unknown below `lo`).
//
// `hi = +exact_bound` (resp. `lo = -exact_bound`) marks a series whose
// coefficients are known everywhere on that side (e.g. a polynomial).
template <class C>
class Series {
public:
    static constexpr int exact_bound = 1 << 28;

    Series() : at_(At::zero), lo_(0), hi_(exact_bound) {}

    static Series zero(At at = At::zero) {
        Series s;
        s.at_ = at;
        if (at == At::infinity) {
            s.lo_ = -exact_bound;
            s.hi_ = 0;
        }
        return s;
    }

    static Series monomial(const C& c, int e, At at = At::zero) {
        Series s = zero(at);
        if (at == At::zero) {
            s.lo_ = e;
            s.hi_ = exact_bound;
        } else {
            s.lo_ = -exact_bound;
            s.hi_ = e;
        }
        if (!coeff_is_zero(c)) s.c_[e] = c;
        return s;
    }

    static Series constant(const C& c, At at = At::zero) { return monomial(c, 0, at); }

    // builder: window fixed up-front, coefficients filled in
    static Series with_window(At at, int lo, int hi) {
        Series s;
        s.at_ = at;
        s.lo_ = lo;
        s.hi_ = hi;
        if (lo > hi) throw std::invalid_argument("empty series window");
        return s;
    }

    At point() const { return at_; }
    int lo() const { return lo_; }
    int hi() const { return hi_; }
    bool exact() const { return at_ == At::zero ? hi_ >= exact_bound : lo_ <= -exact_bound; }

    bool known(int e) const {
        if (at_ == At::zero) return e <= hi_;
        return e >= lo_;
    }

    const C& coeff(int e) const {
        if (!known(e))
            throw window_error("coefficient z^" + std::to_string(e) +
                               " outside tracked window [" + std::to_string(lo_) + ", " +
                               std::to_string(hi_) + "]");
        auto it = c_.find(e);
        static const C zero_c{};
        return it == c_.end() ? zero_c : it->second;
    }

    void set(int e, C c) {
        if (e < lo_ || e > hi_) throw std::invalid_argument("set outside window");
        if (coeff_is_zero(c))
            c_.erase(e);
        else
            c_[e] = std::move(c);
    }

    const std::map<int, C>& terms() const { return c_; }

    bool is_zero() const { return c_.empty(); }

    // lowest stored nonzero exponent; requires a nonzero series
    int valuation() const {
        if (c_.empty()) throw std::domain_error("valuation of (window-)zero series");
        return c_.begin()->first;
    }

    Series truncated(int new_hi) const { // zero-side: forget coefficients above new_hi
        Series r = *this;
        if (at_ == At::zero) {
            r.hi_ = std::min(hi_, new_hi);
            r.c_.erase(r.c_.upper_bound(r.hi_), r.c_.end());
            if (r.lo_ > r.hi_) r.lo_ = r.hi_;
        } else {
            r.lo_ = std::max(lo_, new_hi);
            r.c_.erase(r.c_.begin(), r.c_.lower_bound(r.lo_));
            if (r.lo_ > r.hi_) r.hi_ = r.lo_;
        }
        return r;
    }

    Series shifted(int k) const { // multiply by z^k
        Series r = zero(at_);
        r.lo_ = sat(lo_, k);
        r.hi_ = sat(hi_, k);
        for (const auto& [e, c] : c_) r.c_[e + k] = c;
        return r;
    }

    // relabel z -> 1/z (pure mirror of the coefficient map)
    Series mirrored() const {
        Series r;
        r.at_ = (at_ == At::zero) ? At::infinity : At::zero;
        r.lo_ = -hi_;
        r.hi_ = -lo_;
        for (const auto& [e, c] : c_) r.c_[-e] = c;
        return r;
    }

    // f*(z) = sum conj(f_n) z^{-n}
    Series conj_star() const {
        Series r = mirrored();
        for (auto& [e, c] : r.c_) c = coeff_conj(c);
        return r;
    }

    Series derivative() const {
        Series r = zero(at_);
        r.lo_ = sat(lo_, -1);
        r.hi_ = sat(hi_, -1);
        for (const auto& [e, c] : c_) {
            if (e == 0) continue;
            r.c_[e - 1] = C(Rational(e)) * c;
        }
        return r;
    }

    friend Series operator+(const Series& a, const Series& b) {
        a.check_same_point(b);
        Series r = zero(a.at_);
        if (a.at_ == At::zero) {
            r.lo_ = std::min(a.lo_, b.lo_);
            r.hi_ = std::min(a.hi_, b.hi_);
        } else {
            r.lo_ = std::max(a.lo_, b.lo_);
            r.hi_ = std::max(a.hi_, b.hi_);
        }
        for (const auto& [e, c] : a.c_)
            if (r.in_window(e)) r.c_[e] = c;
        for (const auto& [e, c] : b.c_) {
            if (!r.in_window(e)) continue;
            auto it = r.c_.find(e);
            if (it == r.c_.end())
                r.c_[e] = c;
            else {
                it->second += c;
                if (coeff_is_zero(it->second)) r.c_.erase(it);
            }
        }
        return r;
    }

    friend Series operator-(const Series& a, const Series& b) { return a + (-b); }

    friend Series operator-(const Series& a) {
        Series r = a;
        for (auto& [e, c] : r.c_) c = -c;
        return r;
    }

    friend Series operator*(const Series& a, const Series& b) {
        a.check_same_point(b);
        Series r = zero(a.at_);
        if (a.at_ == At::zero) {
            r.lo_ = sat(a.lo_, b.lo_);
            r.hi_ = std::min(sat(a.hi_, b.lo_), sat(b.hi_, a.lo_));
        } else {
            r.hi_ = sat(a.hi_, b.hi_);
            r.lo_ = std::max(sat(a.lo_, b.hi_), sat(b.lo_, a.hi_));
        }
        for (const auto& [ea, ca] : a.c_)
            for (const auto& [eb, cb] : b.c_) {
                const int e = ea + eb;
                if (!r.in_window(e)) continue;
                C prod = ca * cb;
                if (coeff_is_zero(prod)) continue;
                auto it = r.c_.find(e);
                if (it == r.c_.end())
                    r.c_[e] = std::move(prod);
                else {
                    it->second += prod;
                    if (coeff_is_zero(it->second)) r.c_.erase(it);
                }
            }
        return r;
    }

    Series scaled(const C& k) const {
        Series r = *this;
        for (auto& [e, c] : r.c_) c = c * k;
        for (auto it = r.c_.begin(); it != r.c_.end();)
            it = coeff_is_zero(it->second) ? r.c_.erase(it) : std::next(it);
        return r;
    }

    // equality of coefficients on the common provable window
    bool operator==(const Series& o) const {
        check_same_point(o);
        if (at_ == At::zero) {
            const int ch = std::min(hi_, o.hi_);
            for (const auto& [e, c] : c_)
                if (e <= ch && !(c == o.coeff_or_zero(e))) return false;
            for (const auto& [e, c] : o.c_)
                if (e <= ch && !(coeff_or_zero(e) == c)) return false;
        } else {
            const int cl = std::max(lo_, o.lo_);
            for (const auto& [e, c] : c_)
                if (e >= cl && !(c == o.coeff_or_zero(e))) return false;
            for (const auto& [e, c] : o.c_)
                if (e >= cl && !(coeff_or_zero(e) == c)) return false;
        }
        return true;
    }

private:
    static int sat(int a, int b) {
        long s = static_cast<long>(a) + b;
        if (s >= exact_bound) return exact_bound;
        if (s <= -exact_bound) return -exact_bound;
        return static_cast<int>(s);
    }
    bool in_window(int e) const { return e >= lo_ && e <= hi_; }
    C coeff_or_zero(int e) const {
        auto it = c_.find(e);
        return it == c_.end() ? C{} : it->second;
    }
    void check_same_point(const Series& o) const {
        if (at_ != o.at_)
            throw std::invalid_argument("series expanded at different points");
    }

    At at_;
    int lo_, hi_;
    std::map<int, C> c_;

    template <class U>
    friend Series<U> reciprocal(const Series<U>&);
    template <class U>
    friend Series<U> pow_rational(const Series<U>&, const Rational&);
};

// 1/f for f with invertible lowest (zero) / highest (infinity) coefficient.
// The input must carry a finite window; truncate exact inputs first.
template <class C>
Series<C> reciprocal(const Series<C>& f) {
    if (f.point() == At::infinity) return reciprocal(f.mirrored()).mirrored();
    if (f.is_zero()) throw std::domain_error("reciprocal of zero series");
    const int v = f.valuation();
    if (f.hi() >= Series<C>::exact_bound)
        throw std::invalid_argument("reciprocal needs a finite truncation; call truncated() first");
    const int rel = f.hi() - v; // relative order of the unit part
    const C inv0 = coeff_inverse(f.coeff(v));
    // g = z^{-v} f, unit; compute h with h*g = 1 by forward substitution
    Series<C> h = Series<C>::with_window(At::zero, 0, rel);
    h.set(0, inv0);
    for (int n = 1; n <= rel; ++n) {
        C acc{};
        for (int k = 1; k <= n; ++k) {
            const C& gk = f.coeff(v + k);
            if (coeff_is_zero(gk)) continue;
            acc += gk * h.coeff(n - k);
        }
        h.set(n, -(acc * inv0));
    }
    return h.shifted(-v);
}

// f^(p/q) for f = 1 + O(local variable); exact binomial-recurrence solution
// of f h' = a f' h, a = p/q.
template <class C>
Series<C> pow_rational(const Series<C>& f, const Rational& a) {
    if (f.point() == At::infinity) return pow_rational(f.mirrored(), a).mirrored();
    if (!(f.coeff(0) == C(Rational(1))))
        throw std::domain_error("rational power requires constant term exactly 1");
    if (f.hi() >= Series<C>::exact_bound)
        throw std::invalid_argument("rational power needs a finite truncation");
    const int R = f.hi();
    Series<C> h = Series<C>::with_window(At::zero, 0, R);
    h.set(0, C(Rational(1)));
    for (int n = 1; n <= R; ++n) {
        C acc{};
        for (int k = 1; k <= n; ++k) {
            const C& fk = f.coeff(k);
            if (coeff_is_zero(fk)) continue;
            const Rational w = a * k - Rational(n - k);
            acc += (fk * C(w)) * h.coeff(n - k);
        }
        h.set(n, acc * C(Rational(1, n)));
    }
    return h;
}

template <class C>
Series<C> pow_int(const Series<C>& f, long k) {
    if (k == 0) return Series<C>::constant(C(Rational(1)), f.point());
    if (k < 0) return pow_int(reciprocal(f), -k);
    Series<C> acc = f;
    long m = k;
    bool have = false;
    Series<C> result = Series<C>::zero(f.point());
    while (m > 0) {
        if (m & 1) {
            result = have ? result * acc : acc;
            have = true;
        }
        m >>= 1;
        if (m) acc = acc * acc;
    }
    return result;
}

// f(g(z)), both at zero; g must vanish at 0.
template <class C>
Series<C> compose(const Series<C>& f, const Series<C>& g) {
    if (f.point() != At::zero || g.point() != At::zero)
        throw std::invalid_argument("compose requires expansion at zero");
    if (f.lo() < 0) throw std::invalid_argument("compose: f must be a power series");
    if (g.lo() < 1)
        throw std::domain_error("compose: inner series must vanish at 0");
    const int hf = std::min(f.hi(), Series<C>::exact_bound - 1);
    const int vg = g.is_zero() ? 1 : g.valuation();
    // Horner from the top coefficient down
    Series<C> r = Series<C>::zero();
    for (int k = hf; k >= f.lo(); --k) {
        r = r * g;
        r = r + Series<C>::constant(f.coeff(k));
    }
    if (f.lo() > 0) r = r * pow_int(g, f.lo());
    if (!f.exact()) {
        // contribution of unknown f-coefficients starts at z^{(hf+1)*vg}
        r = r.truncated(std::min(r.hi(), (hf + 1) * vg - 1));
    }
    return r;
}

// compositional inverse of u = z*(unit): returns U with u(U(z)) = z through
// the tracked order of u.
template <class C>
Series<C> revert(const Series<C>& u) {
    if (u.point() != At::zero) throw std::invalid_argument("revert: expansion at zero required");
    if (u.is_zero() || u.valuation() != 1)
        throw std::domain_error("revert requires a series vanishing to exactly first order");
    if (u.hi() >= Series<C>::exact_bound)
        throw std::invalid_argument("revert needs a finite truncation");
    const int K = u.hi();
    const C inv1 = coeff_inverse(u.coeff(1));
    Series<C> U = Series<C>::with_window(At::zero, 1, K);
    U.set(1, inv1);
    for (int m = 2; m <= K; ++m) {
        // error term of the current partial inverse at order m
        Series<C> Upad = Series<C>::with_window(At::zero, 1, m);
        for (int j = 1; j < m; ++j) Upad.set(j, U.coeff(j));
        const Series<C> comp = compose(u.truncated(m), Upad);
        U.set(m, -(comp.coeff(m) * inv1));
    }
    return U;
}

// Res(f, z=0) = f_{-1};  Res(f, z=infinity) = -f_{-1}
template <class C>
C residue(const Series<C>& f, At where) {
    if (f.point() != where) throw std::invalid_argument("residue: expansion point mismatch");
    const C c = f.coeff(-1);
    return where == At::zero ? c : -c;
}

enum class Part { minus, plus, plusplus };

// f_-, f_+, f_++ per the usual Fourier-window notation. The selected class
// keeps whatever truncation the input carried; a selection that is fully
// known becomes exact (its complement is forced to zero).
template <class C>
Series<C> project(const Series<C>& f, Part part) {
    const int from = (part == Part::minus) ? -Series<C>::exact_bound
                                           : (part == Part::plus ? 0 : 1);
    const int to = (part == Part::minus) ? -1 : Series<C>::exact_bound;
    int lo, hi;
    if (f.point() == At::zero) {
        lo = std::max(f.lo(), from);
        hi = (to <= f.hi() || f.exact()) ? Series<C>::exact_bound : f.hi();
        if (lo > hi) throw window_error("projection entirely outside tracked window");
    } else {
        hi = std::min(f.hi(), to);
        lo = (from >= f.lo() || f.exact()) ? -Series<C>::exact_bound : f.lo();
        if (lo > hi) throw window_error("projection entirely outside tracked window");
    }
    Series<C> r = Series<C>::with_window(f.point(), lo, hi);
    for (const auto& [e, c] : f.terms())
        if (e >= from && e <= to && e >= lo && e <= hi) r.set(e, c);
    return r;
}

} // namespace welding
