#pragma once

#include "welding/gaussian.hpp"
#include "welding/lambda_poly.hpp"
#include "welding/partitions.hpp"
#include "welding/rational.hpp"

#include <array>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace welding {

// Generator families of the ambient algebra
//   C[u, ubar, l, lbar; rho0^{c+d*lam}, rhoinf^{e+f*lam}].
enum class Family : int { u = 0, ubar = 1, l = 2, lbar = 3 };

inline Family conj_family(Family f) {
    switch (f) {
        case Family::u: return Family::ubar;
        case Family::ubar: return Family::u;
        case Family::l: return Family::lbar;
        case Family::lbar: return Family::l;
    }
    throw std::logic_error("bad family");
}

inline const char* family_name(Family f) {
    switch (f) {
        case Family::u: return "u";
        case Family::ubar: return "ubar";
        case Family::l: return "l";
        case Family::lbar: return "lbar";
    }
    return "?";
}

// Commutative monomial: exponent lists per family plus the two rho powers.
// rho0 carries exponent r0c + r0d*lam, rhoinf carries ric + rid*lam.
struct Monomial {
    using Exps = std::vector<std::pair<int, int>>; // (index, exponent>0), sorted by index
    std::array<Exps, 4> gen;
    int r0c = 0, r0d = 0;
    int ric = 0, rid = 0;

    bool is_one() const {
        return r0c == 0 && r0d == 0 && ric == 0 && rid == 0 && gen[0].empty() &&
               gen[1].empty() && gen[2].empty() && gen[3].empty();
    }
    int weight(Family f) const {
        int w = 0;
        for (auto& [i, e] : gen[static_cast<int>(f)]) w += i * e;
        return w;
    }
    int exponent(Family f, int idx) const {
        for (auto& [i, e] : gen[static_cast<int>(f)])
            if (i == idx) return e;
        return 0;
    }

    auto key() const { return std::tie(r0c, r0d, ric, rid, gen[0], gen[1], gen[2], gen[3]); }
    bool operator<(const Monomial& o) const { return key() < o.key(); }
    bool operator==(const Monomial& o) const { return key() == o.key(); }

    Monomial operator*(const Monomial& o) const;
    Monomial conj_star() const; // swap u<->ubar, l<->lbar; rho powers fixed
    std::string str() const;
};

// Finite linear combination of monomials with LambdaPoly coefficients.
// Immutable-by-convention value type; all operations are pure.
class AlgebraElement {
public:
    AlgebraElement() = default;
    AlgebraElement(const Rational& r) { // NOLINT(google-explicit-constructor)
        if (r != 0) terms_[Monomial{}] = LambdaPoly(r);
    }
    AlgebraElement(const LambdaPoly& p) { // NOLINT(google-explicit-constructor)
        if (!p.is_zero()) terms_[Monomial{}] = p;
    }
    AlgebraElement(long long n) : AlgebraElement(Rational(n)) {} // NOLINT

    static AlgebraElement generator(Family f, int idx, int exp = 1);
    static AlgebraElement rho0_power(int c, int d = 0);
    static AlgebraElement rhoinf_power(int c, int d = 0);
    static AlgebraElement monomial(const Monomial& m, const LambdaPoly& c);
    // u^P in the given family (product of u_k over parts of P)
    static AlgebraElement from_partition(Family f, const Partition& p);

    bool is_zero() const { return terms_.empty(); }
    const std::map<Monomial, LambdaPoly>& terms() const { return terms_; }
    size_t size() const { return terms_.size(); }

    AlgebraElement& operator+=(const AlgebraElement& o);
    AlgebraElement& operator-=(const AlgebraElement& o);
    friend AlgebraElement operator+(AlgebraElement a, const AlgebraElement& b) { return a += b; }
    friend AlgebraElement operator-(AlgebraElement a, const AlgebraElement& b) { return a -= b; }
    friend AlgebraElement operator-(const AlgebraElement& a);
    friend AlgebraElement operator*(const AlgebraElement& a, const AlgebraElement& b);
    AlgebraElement& operator*=(const AlgebraElement& o) { return *this = *this * o; }
    AlgebraElement scaled(const LambdaPoly& k) const;

    bool operator==(const AlgebraElement& o) const { return terms_ == o.terms_; }
    bool operator!=(const AlgebraElement& o) const { return !(*this == o); }

    AlgebraElement conj_star() const;

    // keep only terms satisfying the predicate
    AlgebraElement filter(const std::function<bool(const Monomial&)>& pred) const;

    // weight of every monomial in the given family, if homogeneous
    std::optional<int> homogeneous_weight(Family f) const;

    // true if no term involves lambda, rho powers, or other families than f
    bool pure_in(Family f) const;

    // coefficient of a given monomial
    LambdaPoly coeff(const Monomial& m) const {
        auto it = terms_.find(m);
        return it == terms_.end() ? LambdaPoly() : it->second;
    }

    // exact evaluation: generators replaced by Gaussian-rational values
    // (indexed per family), rho0 = rhoinf = 1, lambda must not occur.
    GaussianRational evaluate(
        const std::function<GaussianRational(Family, int)>& value) const;

    std::string str() const;

private:
    std::map<Monomial, LambdaPoly> terms_;
};

inline AlgebraElement operator*(const LambdaPoly& k, const AlgebraElement& a) { return a.scaled(k); }
inline AlgebraElement operator*(const Rational& k, const AlgebraElement& a) {
    return a.scaled(LambdaPoly(k));
}

// series coefficient hooks
inline bool coeff_is_zero(const AlgebraElement& a) { return a.is_zero(); }
inline AlgebraElement coeff_conj(const AlgebraElement& a) { return a.conj_star(); }
AlgebraElement coeff_inverse(const AlgebraElement& a); // monomial units only

inline bool coeff_is_zero(const GaussianRational& g) { return g.is_zero(); }
inline GaussianRational coeff_conj(const GaussianRational& g) { return g.conj(); }
inline GaussianRational coeff_inverse(const GaussianRational& g) { return g.inverse(); }

inline bool coeff_is_zero(const LambdaPoly& p) { return p.is_zero(); }
inline LambdaPoly coeff_conj(const LambdaPoly& p) { return p; }
inline LambdaPoly coeff_inverse(const LambdaPoly& p) {
    if (!p.is_constant() || p.is_zero())
        throw std::domain_error("LambdaPoly inverse requires a nonzero constant");
    return LambdaPoly(1 / p.constant());
}

} // namespace welding
