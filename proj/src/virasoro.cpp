#include "welding/virasoro.hpp"

#include <map>
#include <mutex>
#include <set>
#include <sstream>
#include <tuple>

namespace welding {

namespace {

AlgebraElement gen(Family f, int k) { return AlgebraElement::generator(f, k); }

// x with u -> l, ubar -> lbar and rho0^(c+d lam) -> rhoinf^(-c-d lam);
// defined on interior-only elements.
AlgebraElement interior_to_exterior(const AlgebraElement& x) {
    AlgebraElement out;
    for (const auto& [m, c] : x.terms()) {
        if (!m.gen[static_cast<int>(Family::l)].empty() ||
            !m.gen[static_cast<int>(Family::lbar)].empty() || m.ric || m.rid)
            throw std::logic_error("interior_to_exterior: element already touches the exterior side");
        Monomial t;
        t.gen[static_cast<int>(Family::l)] = m.gen[static_cast<int>(Family::u)];
        t.gen[static_cast<int>(Family::lbar)] = m.gen[static_cast<int>(Family::ubar)];
        t.ric = -m.r0c;
        t.rid = -m.r0d;
        out += AlgebraElement::monomial(t, c);
    }
    return out;
}

// pure relabel u -> fam for elements pure in the u family
AlgebraElement relabel_u(const AlgebraElement& x, Family fam) {
    AlgebraElement out;
    for (const auto& [m, c] : x.terms()) {
        Monomial t;
        t.gen[static_cast<int>(fam)] = m.gen[static_cast<int>(Family::u)];
        out += AlgebraElement::monomial(t, c);
    }
    return out;
}

AlgebraElement partial(const AlgebraElement& x, Family f, int k) {
    AlgebraElement out;
    for (const auto& [m, c] : x.terms()) {
        const int e = m.exponent(f, k);
        if (e == 0) continue;
        Monomial rest = m;
        auto& v = rest.gen[static_cast<int>(f)];
        for (auto it = v.begin(); it != v.end(); ++it)
            if (it->first == k) {
                if (--it->second == 0) v.erase(it);
                break;
            }
        out += AlgebraElement::monomial(rest, c * LambdaPoly(Rational(e)));
    }
    return out;
}

std::set<int> indices_used(const AlgebraElement& x, Family f) {
    std::set<int> idx;
    for (const auto& [m, c] : x.terms())
        for (auto& [i, e] : m.gen[static_cast<int>(f)]) idx.insert(i);
    return idx;
}

std::mutex cache_mutex;

} // namespace

Series<AlgebraElement> symbolic_map(int K, Family fam) {
    auto s = Series<AlgebraElement>::with_window(At::zero, 1, K + 1);
    s.set(1, AlgebraElement(Rational(1)));
    for (int k = 1; k <= K; ++k) s.set(k + 1, gen(fam, k));
    return s;
}

AlgebraElement residue_V(int j, int nu) {
    static std::map<std::pair<int, int>, AlgebraElement> cache;
    {
        std::lock_guard<std::mutex> lock(cache_mutex);
        auto it = cache.find({j, nu});
        if (it != cache.end()) return it->second;
    }
    const int w = -nu - j; // weight of the residue polynomial
    AlgebraElement result;
    if (w >= 0) {
        const auto u = symbolic_map(w);
        const auto g = pow_int(u, nu + 1) * reciprocal(u.derivative());
        result = residue(g.shifted(j - 2), At::zero);
    }
    std::lock_guard<std::mutex> lock(cache_mutex);
    return cache.emplace(std::make_pair(j, nu), std::move(result)).first->second;
}

AlgebraElement compute_P(int n) {
    static std::map<int, AlgebraElement> cache;
    {
        std::lock_guard<std::mutex> lock(cache_mutex);
        auto it = cache.find(n);
        if (it != cache.end()) return it->second;
    }
    if (n < 1) throw std::invalid_argument("compute_P: n >= 1 required");
    const auto u = symbolic_map(n);
    const auto U = revert(u);
    const auto ratio = U.derivative() * reciprocal(U); // U'/U
    const auto q = ratio * ratio;
    AlgebraElement result = residue(q.shifted(1 - n), At::zero);
    std::lock_guard<std::mutex> lock(cache_mutex);
    return cache.emplace(n, std::move(result)).first->second;
}

AlgebraElement compute_P_exterior(int n) { return relabel_u(compute_P(n), Family::l); }

AlgebraElement compute_B(int m, int n) {
    if (n - m < 0) return {}; // weight n-m < 0 forces the zero polynomial
    const int K = std::max(n - m, 1);
    const auto u = symbolic_map(K);
    const auto U = revert(u);
    const auto ratio = U.derivative() * reciprocal(U);
    const auto reversion_route = residue((ratio * ratio * pow_int(U, m)).shifted(1 - n), At::zero);
    const AlgebraElement direct_route = residue_V(m, -n);
    if (!(reversion_route == direct_route))
        throw std::logic_error("compute_B: residue routes disagree at (m=" + std::to_string(m) +
                               ", n=" + std::to_string(n) + ")");
    return reversion_route;
}

AlgebraElement laurent_p(int k, int e) {
    const auto u = symbolic_map(std::max(k, 1));
    const auto unit = u.shifted(-1); // u(z)/z
    return pow_int(unit, e).coeff(k);
}

// ---- generator action tables ----------------------------------------------

namespace {

// pi(L_n) u_k  =  rho0^n [ (k/2) u_k V_0(n) + sum_m (k+1-m) u_{k-m} V_{-m}(n) ]
AlgebraElement action_L_u(int n, int k) {
    AlgebraElement acc = LambdaPoly(Rational(k, 2)) * (gen(Family::u, k) * residue_V(0, n));
    for (int m = 1; m <= k; ++m)
        acc += Rational(k + 1 - m) * (gen(Family::u, k - m) * residue_V(-m, n));
    return AlgebraElement::rho0_power(n) * acc;
}

// pibar(Lbar_n) u_k = rho0^n [ (k/2) u_k V_0(n)* + sum_m (k+1-m) u_{k-m} V_m(n)* ]
AlgebraElement action_Lbar_u(int n, int k) {
    AlgebraElement acc =
        LambdaPoly(Rational(k, 2)) * (gen(Family::u, k) * residue_V(0, n).conj_star());
    for (int m = 1; m <= k; ++m)
        acc += Rational(k + 1 - m) * (gen(Family::u, k - m) * residue_V(m, n).conj_star());
    return AlgebraElement::rho0_power(n) * acc;
}

} // namespace

AlgebraElement action_on_generator(bool bar, int n, Family fam, int k) {
    struct Key {
        bool bar;
        int n;
        Family fam;
        int k;
        auto tie() const { return std::tie(bar, n, fam, k); }
        bool operator<(const Key& o) const { return tie() < o.tie(); }
    };
    static std::map<Key, AlgebraElement> cache;
    const Key key{bar, n, fam, k};
    {
        std::lock_guard<std::mutex> lock(cache_mutex);
        auto it = cache.find(key);
        if (it != cache.end()) return it->second;
    }
    AlgebraElement result;
    switch (fam) {
        case Family::u:
            result = bar ? action_Lbar_u(n, k) : action_L_u(n, k);
            break;
        case Family::ubar:
            result = action_on_generator(!bar, n, Family::u, k).conj_star();
            break;
        case Family::l:
            // w = 1/z substitution: the exterior action is the interior one
            // at index -n with u_j -> l_j and rho0 -> 1/rhoinf
            result = interior_to_exterior(action_on_generator(bar, -n, Family::u, k));
            break;
        case Family::lbar:
            result = action_on_generator(!bar, n, Family::l, k).conj_star();
            break;
    }
    std::lock_guard<std::mutex> lock(cache_mutex);
    return cache.emplace(key, std::move(result)).first->second;
}

namespace {

LambdaPoly half_exponent(int c, int d) {
    LambdaPoly e(Rational(c, 2));
    e += LambdaPoly(Rational(d, 2)) * LambdaPoly::lambda();
    return e;
}

// action on rho0^{c+d lam}: ((c+d lam)/2) V_0(n)(^*) rho0^{c+n+d lam}
AlgebraElement action_rho0(bool bar, int n, int c, int d) {
    AlgebraElement v = residue_V(0, n);
    if (bar) v = v.conj_star();
    return half_exponent(c, d) * (v * AlgebraElement::rho0_power(c + n, d));
}

// action on rhoinf^{e+f lam}: -((e+f lam)/2) V_0(-n)|_l(^*) rhoinf^{e+n+f lam}
AlgebraElement action_rhoinf(bool bar, int n, int e, int f) {
    AlgebraElement v = relabel_u(residue_V(0, -n), Family::l);
    if (bar) v = v.conj_star();
    return -(half_exponent(e, f) * (v * AlgebraElement::rhoinf_power(e + n, f)));
}

AlgebraElement apply_derivation(bool bar, int n, const AlgebraElement& x, bool interior_only) {
    AlgebraElement out;
    for (const auto& [mono, coeff] : x.terms()) {
        for (int fi = 0; fi < 4; ++fi) {
            const Family f = static_cast<Family>(fi);
            if (interior_only && (f == Family::l || f == Family::lbar)) continue;
            for (const auto& [idx, exp] : mono.gen[fi]) {
                Monomial rest = mono;
                auto& v = rest.gen[fi];
                for (auto it = v.begin(); it != v.end(); ++it)
                    if (it->first == idx) {
                        if (--it->second == 0) v.erase(it);
                        break;
                    }
                out += action_on_generator(bar, n, f, idx) *
                       AlgebraElement::monomial(rest, coeff * LambdaPoly(Rational(exp)));
            }
        }
        if (mono.r0c != 0 || mono.r0d != 0) {
            Monomial rest = mono;
            rest.r0c = rest.r0d = 0;
            out += action_rho0(bar, n, mono.r0c, mono.r0d) * AlgebraElement::monomial(rest, coeff);
        }
        if (!interior_only && (mono.ric != 0 || mono.rid != 0)) {
            Monomial rest = mono;
            rest.ric = rest.rid = 0;
            out += action_rhoinf(bar, n, mono.ric, mono.rid) * AlgebraElement::monomial(rest, coeff);
        }
    }
    return out;
}

} // namespace

AlgebraElement apply_L(int n, const AlgebraElement& x) { return apply_derivation(false, n, x, false); }
AlgebraElement apply_Lbar(int n, const AlgebraElement& x) { return apply_derivation(true, n, x, false); }
AlgebraElement apply_L_interior(int n, const AlgebraElement& x) {
    return apply_derivation(false, n, x, true);
}

AlgebraElement commutator_defect(int n, int m, const AlgebraElement& x) {
    return apply_L(n, apply_L(m, x)) - apply_L(m, apply_L(n, x)) -
           Rational(m - n) * apply_L(n + m, x);
}

AlgebraElement mixed_commutator_defect(int n, int m, const AlgebraElement& x) {
    return apply_L(n, apply_Lbar(m, x)) - apply_Lbar(m, apply_L(n, x));
}

// ---- reports ---------------------------------------------------------------

CheckReport stress_check(int window) {
    CheckReport rep;
    const AlgebraElement rho0 = AlgebraElement::rho0_power(1);
    const AlgebraElement rhoinf = AlgebraElement::rhoinf_power(1);
    if (!(apply_L(0, rho0) == Rational(1, 2) * rho0)) rep.fail("L_0 rho0 != rho0/2");
    if (!(apply_L(0, rhoinf) == Rational(-1, 2) * rhoinf)) rep.fail("L_0 rhoinf != -rhoinf/2");
    for (int n = 1; n <= window; ++n) {
        if (!apply_L(n, rho0).is_zero()) rep.fail("L_" + std::to_string(n) + " rho0 != 0");
        const AlgebraElement lhs = apply_L(-n, rho0);
        const AlgebraElement rhs =
            Rational(1, 2) * (AlgebraElement::rho0_power(1 - n) * compute_P(n));
        if (!(lhs == rhs)) rep.fail("L_-" + std::to_string(n) + " rho0 mismatch");
        if (!apply_L(-n, rhoinf).is_zero()) rep.fail("L_-" + std::to_string(n) + " rhoinf != 0");
        const AlgebraElement lhs2 = apply_L(n, rhoinf);
        const AlgebraElement rhs2 =
            Rational(-1, 2) * (AlgebraElement::rhoinf_power(n + 1) * compute_P_exterior(n));
        if (!(lhs2 == rhs2)) rep.fail("L_" + std::to_string(n) + " rhoinf mismatch");
    }
    return rep;
}

std::vector<std::string> dilation_diagnostic() {
    const AlgebraElement rho0 = AlgebraElement::rho0_power(1);
    const AlgebraElement rhoinf = AlgebraElement::rhoinf_power(1);
    const AlgebraElement d0 = apply_L(0, rho0) + apply_Lbar(0, rho0);
    const AlgebraElement di = apply_L(0, rhoinf) + apply_Lbar(0, rhoinf);
    return {"(L_0 + Lbar_0) rho0   = " + d0.str(),
            "(L_0 + Lbar_0) rhoinf = " + di.str()};
}

CheckReport verify_diagonal_lemma(int m, int n) {
    CheckReport rep;
    if (m < 1 || n < 0 || m < n) {
        rep.fail("verify_diagonal_lemma requires m >= n >= 0, m >= 1");
        return rep;
    }
    const AlgebraElement a_lam =
        AlgebraElement::rho0_power(0, 1) * AlgebraElement::rhoinf_power(0, -1);
    const LambdaPoly lam = LambdaPoly::lambda();

    // lowest-weight-side component of L_{-n} a^lam; for n >= 1 this equals
    // the full action (the exterior side annihilates), at n = 0 it is the
    // interior dilation half.
    const AlgebraElement inner = apply_L_interior(-n, a_lam);
    if (n >= 1 && !(inner == apply_L(-n, a_lam)))
        rep.fail("interior part differs from full L_{-n} a^lam at n = " + std::to_string(n));
    const AlgebraElement expected_inner =
        (LambdaPoly(Rational(1, 2)) * lam) *
        (AlgebraElement::rho0_power(-n) *
         (n == 0 ? AlgebraElement(Rational(1)) : compute_P(n)) * a_lam);
    if (!(inner == expected_inner))
        rep.fail("L_{-n} a^lam != (lam/2) rho0^{-n} P_n(u) a^lam at n = " + std::to_string(n));

    const AlgebraElement lhs = apply_L(m, inner);
    AlgebraElement rhs = (LambdaPoly(Rational(1, 4)) * lam * lam) *
                         (compute_P_exterior(m) *
                          (n == 0 ? AlgebraElement(Rational(1)) : compute_P(n)) *
                          AlgebraElement::rhoinf_power(m) * AlgebraElement::rho0_power(-n) * a_lam);
    if (m == n) rhs -= (LambdaPoly(Rational(n)) * lam) * a_lam;
    const AlgebraElement diff = lhs - rhs;
    if (!diff.is_zero())
        rep.fail("product identity defect at (m,n)=(" + std::to_string(m) + "," +
                 std::to_string(n) + "): " + diff.str());
    if (m == n) {
        const AlgebraElement other = apply_L(-n, apply_L(n, a_lam));
        if (!(other == rhs)) rep.fail("reversed order disagrees at n = " + std::to_string(n));
    }
    return rep;
}

Series<AlgebraElement> real_variation(int n, int order) {
    auto out = Series<AlgebraElement>::with_window(At::zero, 1, order + 1);
    for (int k = 0; k <= order; ++k) {
        const AlgebraElement ak = AlgebraElement::rho0_power(1) * gen(Family::u, k);
        out.set(k + 1, apply_L(n, ak) + apply_Lbar(n, ak));
    }
    return out;
}

CheckReport real_variation_check(int n, int order) {
    CheckReport rep;
    const auto lhs = real_variation(n, order);

    auto phi = Series<AlgebraElement>::with_window(At::zero, 1, order + 1);
    for (int k = 0; k <= order; ++k)
        phi.set(k + 1, AlgebraElement::rho0_power(1) * gen(Family::u, k));
    const auto dphi = phi.derivative();
    const auto G = pow_int(phi, n + 1) * reciprocal(dphi); // phi^{n+1}/phi'

    // phi' * ( (c_1 + c_1*)/2 z + sum_{k>1} (c_k + c_{2-k}*) z^k )
    auto H = Series<AlgebraElement>::with_window(At::zero, 1, G.hi());
    H.set(1, Rational(1, 2) * (G.coeff(1) + G.coeff(1).conj_star()));
    for (int k = 2; k <= G.hi(); ++k)
        H.set(k, G.coeff(k) + (G.known(2 - k) ? G.coeff(2 - k).conj_star() : AlgebraElement()));
    if (!(dphi * H == lhs)) rep.fail("combined-coefficient route disagrees");

    if (n >= 0 && !(pow_int(phi, n + 1) == lhs))
        rep.fail("(pi+pibar)(L_n) phi != phi^{n+1} for n >= 0");
    if (n == -1) {
        // 1 + u'(z) (-1 + (u_1 - ubar_1) z + z^2)
        auto up = Series<AlgebraElement>::with_window(At::zero, 0, order);
        for (int k = 0; k <= order; ++k)
            up.set(k, Rational(k + 1) * gen(Family::u, k));
        auto bracket = Series<AlgebraElement>::with_window(At::zero, 0, 2);
        bracket.set(0, AlgebraElement(Rational(-1)));
        bracket.set(1, gen(Family::u, 1) - gen(Family::ubar, 1));
        bracket.set(2, AlgebraElement(Rational(1)));
        const auto closed = Series<AlgebraElement>::constant(AlgebraElement(Rational(1))) + up * bracket;
        if (!(closed == lhs)) rep.fail("n = -1 closed form disagrees");
    }
    return rep;
}

// ---- graded-level machinery -------------------------------------------------

LambdaPoly inner_product(const AlgebraElement& x, const AlgebraElement& y) {
    if (x.is_zero() || y.is_zero()) return {};
    auto family_of = [](const AlgebraElement& a) -> int {
        int fam = -1;
        for (const auto& [m, c] : a.terms()) {
            if (m.r0c || m.r0d || m.ric || m.rid)
                throw std::invalid_argument("inner_product: rho powers not allowed");
            for (int f = 0; f < 4; ++f)
                if (!m.gen[f].empty()) {
                    if (fam == -1) fam = f;
                    if (fam != f)
                        throw std::invalid_argument("inner_product: mixed-family operand");
                }
        }
        return fam;
    };
    const int fx = family_of(x), fy = family_of(y);
    if (fx != -1 && fy != -1 && fx != fy)
        throw std::invalid_argument("inner_product: operands in different families");
    const int fam = fx != -1 ? fx : fy;
    LambdaPoly total;
    for (const auto& [m, cx] : x.terms()) {
        const LambdaPoly cy = y.coeff(m);
        if (cy.is_zero()) continue;
        Rational pfact = 1;
        if (fam != -1)
            for (auto& [i, e] : m.gen[fam]) pfact *= Rational(factorial(e));
        total += cx * cy * LambdaPoly(pfact);
    }
    return total;
}

RationalMatrix materialize(const std::function<AlgebraElement(const AlgebraElement&)>& op,
                           Family fam, int n_from, int n_to) {
    const auto from = enumerate_partitions(n_from);
    const auto to = enumerate_partitions(n_to);
    std::map<Monomial, int> row_of;
    for (size_t i = 0; i < to.size(); ++i) {
        const auto mono = AlgebraElement::from_partition(fam, to[i]).terms().begin()->first;
        row_of[mono] = static_cast<int>(i);
    }
    RationalMatrix out(static_cast<int>(to.size()), static_cast<int>(from.size()));
    for (size_t j = 0; j < from.size(); ++j) {
        const AlgebraElement img = op(AlgebraElement::from_partition(fam, from[j]));
        for (const auto& [m, c] : img.terms()) {
            auto it = row_of.find(m);
            if (it == row_of.end())
                throw std::logic_error("materialize: image escapes the declared target grade");
            if (!c.is_constant())
                throw std::logic_error("materialize: non-constant lambda coefficient");
            out.at(it->second, static_cast<int>(j)) = c.constant();
        }
    }
    return out;
}

AlgebraElement apply_R1(const AlgebraElement& x) {
    const AlgebraElement ub1 = gen(Family::ubar, 1);
    AlgebraElement out = Rational(-2) * (ub1 * x);
    for (int k : indices_used(x, Family::ubar)) {
        const AlgebraElement coeff =
            Rational(2) * (ub1 * gen(Family::ubar, k)) - Rational(k + 2) * gen(Family::ubar, k + 1);
        out += coeff * partial(x, Family::ubar, k);
    }
    return out;
}

AlgebraElement apply_R2(const AlgebraElement& x) {
    const AlgebraElement P2b = compute_P(2).conj_star();
    AlgebraElement out = Rational(2) * (P2b * x);
    for (int j : indices_used(x, Family::ubar)) {
        const AlgebraElement coeff = P2b * gen(Family::ubar, j) -
                                     Rational(3 * (j + 2)) * (gen(Family::ubar, 1) * gen(Family::ubar, j + 1)) +
                                     Rational(j + 3) * gen(Family::ubar, j + 2) -
                                     laurent_p(j + 2, -1).conj_star();
        out -= coeff * partial(x, Family::ubar, j);
    }
    return out;
}

AlgebraElement apply_N1(const AlgebraElement& x) {
    AlgebraElement out;
    for (int j : indices_used(x, Family::u))
        out += Rational(j) * (gen(Family::u, j - 1) * partial(x, Family::u, j));
    return out;
}

AlgebraElement apply_N2(const AlgebraElement& x) {
    AlgebraElement out;
    for (int j : indices_used(x, Family::u)) {
        if (j < 2) continue;
        out += Rational(j - 1) * (gen(Family::u, j - 2) * partial(x, Family::u, j));
    }
    return out;
}

namespace {

RationalMatrix gram(int level) {
    const auto parts = enumerate_partitions(level);
    RationalMatrix g(static_cast<int>(parts.size()), static_cast<int>(parts.size()));
    for (size_t i = 0; i < parts.size(); ++i) {
        Rational pfact = 1;
        const auto mono = AlgebraElement::from_partition(Family::u, parts[i]).terms().begin()->first;
        for (auto& [idx, e] : mono.gen[static_cast<int>(Family::u)])
            pfact *= Rational(factorial(e));
        g.at(static_cast<int>(i), static_cast<int>(i)) = pfact;
    }
    return g;
}

RationalMatrix gram_inverse(int level) {
    RationalMatrix g = gram(level);
    for (int i = 0; i < g.rows(); ++i) g.at(i, i) = 1 / g.at(i, i);
    return g;
}

} // namespace

LevelOperators build_level_operators(int n) {
    if (n < 1) throw std::invalid_argument("build_level_operators: n >= 1");
    LevelOperators ops;
    ops.R1 = materialize(apply_R1, Family::ubar, n - 1, n);
    ops.N1 = materialize(apply_N1, Family::u, n, n - 1);
    if (n >= 2) {
        ops.R2 = materialize(apply_R2, Family::ubar, n - 2, n);
        ops.N2 = materialize(apply_N2, Family::u, n, n - 2);
    }

    // adjoint of R1 from its closed formula...
    auto r1t_op = [](const AlgebraElement& x) {
        AlgebraElement out = Rational(-2) * partial(x, Family::ubar, 1);
        for (int k : indices_used(x, Family::ubar)) {
            out += Rational(2) *
                   (gen(Family::ubar, k) * partial(partial(x, Family::ubar, k), Family::ubar, 1));
            if (k >= 2)
                out -= Rational(k + 1) * (gen(Family::ubar, k - 1) * partial(x, Family::ubar, k));
        }
        return out;
    };
    ops.R1t = materialize(r1t_op, Family::ubar, n, n - 1);
    // ...and as the inner-product transpose; the two must agree
    const RationalMatrix r1t_gram = gram_inverse(n - 1) * ops.R1.transposed() * gram(n);
    if (!(ops.R1t == r1t_gram))
        throw std::logic_error("build_level_operators: adjoint routes disagree for R1 at n = " +
                               std::to_string(n));
    if (n >= 2) ops.R2t = gram_inverse(n - 2) * ops.R2.transposed() * gram(n);
    return ops;
}

std::vector<std::vector<Rational>> operator_kernel(const RationalMatrix& m) {
    return kernel_basis(m);
}

std::string basis_vector_str(const std::vector<Rational>& v, int level, Family fam) {
    const auto parts = enumerate_partitions(level);
    AlgebraElement acc;
    for (size_t i = 0; i < parts.size() && i < v.size(); ++i)
        acc += v[i] * AlgebraElement::from_partition(fam, parts[i]);
    return acc.str();
}

} // namespace welding
