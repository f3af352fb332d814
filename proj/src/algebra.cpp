#include "welding/algebra.hpp"

#include <algorithm>
#include <sstream>

namespace welding {

namespace {

Monomial::Exps merge_exps(const Monomial::Exps& a, const Monomial::Exps& b) {
    Monomial::Exps out;
    size_t i = 0, j = 0;
    while (i < a.size() || j < b.size()) {
        if (j == b.size() || (i < a.size() && a[i].first < b[j].first)) {
            out.push_back(a[i++]);
        } else if (i == a.size() || b[j].first < a[i].first) {
            out.push_back(b[j++]);
        } else {
            out.emplace_back(a[i].first, a[i].second + b[j].second);
            ++i;
            ++j;
        }
    }
    return out;
}

} // namespace

Monomial Monomial::operator*(const Monomial& o) const {
    Monomial r;
    for (int f = 0; f < 4; ++f) r.gen[f] = merge_exps(gen[f], o.gen[f]);
    r.r0c = r0c + o.r0c;
    r.r0d = r0d + o.r0d;
    r.ric = ric + o.ric;
    r.rid = rid + o.rid;
    return r;
}

Monomial Monomial::conj_star() const {
    Monomial r = *this;
    std::swap(r.gen[static_cast<int>(Family::u)], r.gen[static_cast<int>(Family::ubar)]);
    std::swap(r.gen[static_cast<int>(Family::l)], r.gen[static_cast<int>(Family::lbar)]);
    return r;
}

std::string Monomial::str() const {
    std::ostringstream os;
    bool first = true;
    auto emit = [&](const std::string& s) {
        if (!first) os << "*";
        os << s;
        first = false;
    };
    auto rho = [&](const char* name, int c, int d) {
        if (c == 0 && d == 0) return;
        LambdaPoly e;
        e += LambdaPoly(Rational(c));
        e += LambdaPoly(Rational(d)) * LambdaPoly::lambda();
        std::string es = e.str();
        if (d == 0 && c >= 0)
            emit(std::string(name) + "^" + es);
        else
            emit(std::string(name) + "^(" + es + ")");
    };
    rho("rho0", r0c, r0d);
    rho("rhoinf", ric, rid);
    for (int f = 0; f < 4; ++f)
        for (auto& [i, e] : gen[f]) {
            std::string s = std::string(family_name(static_cast<Family>(f))) + std::to_string(i);
            if (e > 1) s += "^" + std::to_string(e);
            emit(s);
        }
    if (first) os << "1";
    return os.str();
}

AlgebraElement AlgebraElement::generator(Family f, int idx, int exp) {
    if (idx < 0 || exp <= 0) throw std::invalid_argument("bad generator");
    if (idx == 0) return AlgebraElement(Rational(1)); // u_0 = 1 identically
    Monomial m;
    m.gen[static_cast<int>(f)] = {{idx, exp}};
    return monomial(m, LambdaPoly(Rational(1)));
}

AlgebraElement AlgebraElement::rho0_power(int c, int d) {
    Monomial m;
    m.r0c = c;
    m.r0d = d;
    return monomial(m, LambdaPoly(Rational(1)));
}

AlgebraElement AlgebraElement::rhoinf_power(int c, int d) {
    Monomial m;
    m.ric = c;
    m.rid = d;
    return monomial(m, LambdaPoly(Rational(1)));
}

AlgebraElement AlgebraElement::monomial(const Monomial& m, const LambdaPoly& c) {
    AlgebraElement a;
    if (!c.is_zero()) a.terms_[m] = c;
    return a;
}

AlgebraElement AlgebraElement::from_partition(Family f, const Partition& p) {
    Monomial m;
    auto& exps = m.gen[static_cast<int>(f)];
    for (auto it = p.parts.rbegin(); it != p.parts.rend(); ++it) {
        if (!exps.empty() && exps.back().first == *it)
            exps.back().second += 1;
        else
            exps.emplace_back(*it, 1);
    }
    return monomial(m, LambdaPoly(Rational(1)));
}

AlgebraElement& AlgebraElement::operator+=(const AlgebraElement& o) {
    for (const auto& [m, c] : o.terms_) {
        auto it = terms_.find(m);
        if (it == terms_.end()) {
            terms_[m] = c;
        } else {
            it->second += c;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }
    return *this;
}

AlgebraElement& AlgebraElement::operator-=(const AlgebraElement& o) {
    for (const auto& [m, c] : o.terms_) {
        auto it = terms_.find(m);
        if (it == terms_.end()) {
            terms_[m] = -c;
        } else {
            it->second -= c;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }
    return *this;
}

AlgebraElement operator-(const AlgebraElement& a) {
    AlgebraElement r;
    for (const auto& [m, c] : a.terms_) r.terms_[m] = -c;
    return r;
}

AlgebraElement operator*(const AlgebraElement& a, const AlgebraElement& b) {
    AlgebraElement r;
    for (const auto& [ma, ca] : a.terms_)
        for (const auto& [mb, cb] : b.terms_) {
            const Monomial m = ma * mb;
            LambdaPoly prod = ca * cb;
            auto it = r.terms_.find(m);
            if (it == r.terms_.end()) {
                if (!prod.is_zero()) r.terms_[m] = std::move(prod);
            } else {
                it->second += prod;
                if (it->second.is_zero()) r.terms_.erase(it);
            }
        }
    return r;
}

AlgebraElement AlgebraElement::scaled(const LambdaPoly& k) const {
    AlgebraElement r;
    if (k.is_zero()) return r;
    for (const auto& [m, c] : terms_) {
        LambdaPoly p = c * k;
        if (!p.is_zero()) r.terms_[m] = std::move(p);
    }
    return r;
}

AlgebraElement AlgebraElement::conj_star() const {
    AlgebraElement r;
    for (const auto& [m, c] : terms_) r.terms_[m.conj_star()] = c;
    return r;
}

AlgebraElement AlgebraElement::filter(const std::function<bool(const Monomial&)>& pred) const {
    AlgebraElement r;
    for (const auto& [m, c] : terms_)
        if (pred(m)) r.terms_[m] = c;
    return r;
}

std::optional<int> AlgebraElement::homogeneous_weight(Family f) const {
    std::optional<int> w;
    for (const auto& [m, c] : terms_) {
        const int mw = m.weight(f);
        if (!w)
            w = mw;
        else if (*w != mw)
            return std::nullopt;
    }
    return w;
}

bool AlgebraElement::pure_in(Family f) const {
    for (const auto& [m, c] : terms_) {
        if (!c.is_constant()) return false;
        if (m.r0c || m.r0d || m.ric || m.rid) return false;
        for (int g = 0; g < 4; ++g)
            if (g != static_cast<int>(f) && !m.gen[g].empty()) return false;
    }
    return true;
}

GaussianRational AlgebraElement::evaluate(
    const std::function<GaussianRational(Family, int)>& value) const {
    GaussianRational total;
    for (const auto& [m, c] : terms_) {
        if (!c.is_constant())
            throw std::domain_error("evaluate: lambda must not occur");
        GaussianRational prod{c.constant()};
        for (int f = 0; f < 4; ++f)
            for (auto& [i, e] : m.gen[f]) {
                const GaussianRational v = value(static_cast<Family>(f), i);
                for (int k = 0; k < e; ++k) prod *= v;
            }
        // rho0 = rhoinf = 1 under evaluation
        total += prod;
    }
    return total;
}

std::string AlgebraElement::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [m, c] : terms_) {
        std::string cs = c.str();
        bool neg = false;
        if (!c.is_constant()) {
            cs = "(" + cs + ")";
        } else if (c.constant() < 0) {
            neg = true;
            cs = welding::to_string(Rational(-c.constant()));
        }
        os << (first ? (neg ? "-" : "") : (neg ? " - " : " + "));
        first = false;
        const std::string ms = m.str();
        if (ms == "1") {
            os << cs;
        } else if (cs == "1") {
            os << ms;
        } else {
            os << cs << "*" << ms;
        }
    }
    return os.str();
}

AlgebraElement coeff_inverse(const AlgebraElement& a) {
    if (a.size() != 1) throw std::domain_error("inverse: not a monomial");
    const auto& [m, c] = *a.terms().begin();
    for (int f = 0; f < 4; ++f)
        if (!m.gen[f].empty())
            throw std::domain_error("inverse: generator exponents are not invertible");
    Monomial inv;
    inv.r0c = -m.r0c;
    inv.r0d = -m.r0d;
    inv.ric = -m.ric;
    inv.rid = -m.rid;
    return AlgebraElement::monomial(inv, coeff_inverse(c));
}

} // namespace welding
