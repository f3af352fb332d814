#pragma once

#include "welding/algebra.hpp"
#include "welding/matrix.hpp"
#include "welding/series.hpp"

#include <string>
#include <vector>

namespace welding {

// ---- residue polynomials -------------------------------------------------

// Symbolic interior map u(z) = z(1 + u_1 z + ... + u_K z^K) with generators
// of the given family as coefficients; window [1, K+1].
Series<AlgebraElement> symbolic_map(int K, Family fam = Family::u);

// V_j(nu) = Res(u^{nu+1} / u' * z^{j-2}, z = 0): the coefficient polynomials
// behind every generator action. Pure u-family, weight -nu - j.
AlgebraElement residue_V(int j, int nu);

// P_n = Res((U'/U)^2 t^{-n+1}, t=0) with U the compositional inverse of u;
// a homogeneous weight-n polynomial in u_1..u_n with integer coefficients
// and u_n-coefficient -2n. Computed through the reversion route.
AlgebraElement compute_P(int n);

// Same polynomial with l-generators substituted for u-generators.
AlgebraElement compute_P_exterior(int n);

// B_m(n) computed by BOTH routes of the change-of-variable identity
// (reversion route through U, and the direct residue in u); throws
// std::logic_error if the routes disagree.
AlgebraElement compute_B(int m, int n);

// coefficient of z^k in (u(z)/z)^e; e = -1 gives the z/u(z) coefficients
AlgebraElement laurent_p(int k, int e);

// ---- Witt actions --------------------------------------------------------

// pi(L_n) and pibar(Lbar_n) extended as derivations over the full algebra
// C[u, ubar, l, lbar; rho0^{c+d lam}, rhoinf^{e+f lam}].
AlgebraElement apply_L(int n, const AlgebraElement& x);
AlgebraElement apply_Lbar(int n, const AlgebraElement& x);

// Same derivations with the exterior generators (l, lbar, rhoinf) held
// constant; used where only the interior half of the action is wanted.
AlgebraElement apply_L_interior(int n, const AlgebraElement& x);

// single-generator actions (cached tables); fam selects u/ubar/l/lbar
AlgebraElement action_on_generator(bool bar, int n, Family fam, int k);

// [L_n, L_m] x - (m-n) L_{n+m} x;   zero iff the bracket holds on x
AlgebraElement commutator_defect(int n, int m, const AlgebraElement& x);
// [pi(L_n), pibar(Lbar_m)] x;       zero iff the two actions commute on x
AlgebraElement mixed_commutator_defect(int n, int m, const AlgebraElement& x);

// ---- l <-> b coordinates ---------------------------------------------------

// Coefficient conversion between the two exterior coordinate systems: given
// a_1..a_M with 1 + sum a_k w^k, returns c_1..c_M of the reciprocal unit.
// The map is an involution, so it serves both directions.
template <class C>
std::vector<C> reciprocal_unit_coeffs(const std::vector<C>& a) {
    const int M = static_cast<int>(a.size());
    Series<C> f = Series<C>::with_window(At::zero, 0, M);
    f.set(0, C(Rational(1)));
    for (int k = 1; k <= M; ++k) f.set(k, a[k - 1]);
    const Series<C> g = reciprocal(f);
    std::vector<C> out;
    for (int k = 1; k <= M; ++k) out.push_back(g.coeff(k));
    return out;
}

// ---- verification-style reports -------------------------------------------

struct CheckReport {
    bool pass = true;
    std::vector<std::string> failures;
    void fail(const std::string& what) {
        pass = false;
        failures.push_back(what);
    }
};

// Generating-function identities packaged by the stress tensor: the action
// of every L_n in |n| <= window on rho0 and rhoinf against the P-polynomials.
CheckReport stress_check(int window);

// Dilation diagnostic: (L_0 + Lbar_0) rho0 = +rho0 while the exterior-side
// convention gives (L_0 + Lbar_0) rhoinf = -rhoinf. Returns printable lines.
std::vector<std::string> dilation_diagnostic();

// The two-sided product identities on a^lam = rho0^lam rhoinf^-lam:
//   m == n >= 1:  L_n L_-n a^lam = L_-n L_n a^lam
//                 = (lam^2/4) P_n(l) P_n(u) a^(lam-n) - n lam a^lam
//   m > n >= 0:   L_m [L_-n a^lam]_interior
//                 = (lam^2/4) P_m(l) P_n(u) a^lam rhoinf^m / rho0^n
// For n >= 1 the interior part of L_-n a^lam IS L_-n a^lam (the exterior
// side annihilates); at n = 0 it is the dilation half (lam/2) a^lam.
CheckReport verify_diagonal_lemma(int m, int n);

// Real-variation series (pi + pibar)(L_n) phi_+ with symbolic coefficients,
// tracked through z^(order+1).
Series<AlgebraElement> real_variation(int n, int order);
// Cross-checks real_variation(n) against the combined-coefficient formula
// and the closed forms at n >= 0 / n = -1.
CheckReport real_variation_check(int n, int order);

// ---- graded-level machinery ------------------------------------------------

// <x, y> with <u^p, u^q> = delta_pq * p!; both arguments must be pure in
// the same generator family.
LambdaPoly inner_product(const AlgebraElement& x, const AlgebraElement& y);

// Matrix of a linear map between graded components in the canonical
// partition-indexed monomial bases. Throws if the image leaves the target
// component.
RationalMatrix materialize(const std::function<AlgebraElement(const AlgebraElement&)>& op,
                           Family fam, int n_from, int n_to);

struct LevelOperators {
    RationalMatrix R1;  // level n-1 -> n   (ubar raising)
    RationalMatrix R2;  // level n-2 -> n
    RationalMatrix N1;  // level n -> n-1   (u lowering)
    RationalMatrix N2;  // level n -> n-2
    RationalMatrix R1t; // adjoint of R1, n -> n-1
    RationalMatrix R2t; // adjoint of R2, n -> n-2
};

// Builds the level-n operator matrices. R1t is computed both from its
// closed differential-operator formula and as the inner-product transpose,
// and the two are asserted equal (std::logic_error on mismatch).
LevelOperators build_level_operators(int n);

// defining differential operators (exposed for the dual-route tests)
AlgebraElement apply_R1(const AlgebraElement& x);
AlgebraElement apply_R2(const AlgebraElement& x);
AlgebraElement apply_N1(const AlgebraElement& x);
AlgebraElement apply_N2(const AlgebraElement& x);

// Kernel of the matrix as canonical basis vectors (RREF pivots).
std::vector<std::vector<Rational>> operator_kernel(const RationalMatrix& m);

// pretty-print a vector in the level-n monomial basis ("u1^3 + 2*u1*u2")
std::string basis_vector_str(const std::vector<Rational>& v, int level, Family fam = Family::u);

} // namespace welding
