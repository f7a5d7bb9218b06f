#pragma once

#include <utility>

#include "supalg/partition.hpp"
#include "supalg/superpoly.hpp"

namespace supalg {

/// Rank-(n|n) polynomial model: even generators x[i,j] (all i,j), odd
/// generators y[i,j] (i<=j) and z[i,j] (i<j), every generator of central
/// degree 2, with torus weights in Z^{2n} (e-block then f-block).
struct RankContext {
    int n = 0;
    TablePtr table;

    static RankContext make(int n);

    int x_index(int i, int j) const;   // 1-indexed
    int y_index(int i, int j) const;   // requires i <= j
    int z_index(int i, int j) const;   // requires i < j

    SuperPoly x(int i, int j) const;
    /// y with the symmetric identification y[i,j] == y[j,i].
    SuperPoly y_sym(int i, int j) const;
    /// z with the alternating identification z[i,j] == -z[j,i], z[i,i] == 0.
    SuperPoly z_alt(int i, int j) const;
    SuperPoly one() const { return SuperPoly::constant(table, 1); }
    SuperPoly zero() const { return SuperPoly::zero(table); }
};

/// Elementary gl(n|n) operators as superderivations of A.
enum class GlKind {
    ee,  // sends e_i to e_j (even)
    ff,  // sends f_i to f_j (even)
    ef,  // sends f_j to e_i (odd, upper-right block)
    fe,  // sends e_i to f_j (odd, lower-left block)
};
Superderivation gl_operator(const RankContext& ctx, GlKind kind, int i, int j);

enum class IdealKind { pn, m, custom };
struct IdealSpec {
    IdealKind kind = IdealKind::custom;
    std::vector<SuperPoly> generators;
};
IdealSpec maximal_ideal(const RankContext& ctx);   // x[i,j] (i!=j), x[i,i]-1, y, z
IdealSpec pn_ideal(const RankContext& ctx, int n0);

/// prod_{i<=j<=n} y[i,j] with canonical sign +1.
SuperPoly y_product(const RankContext& ctx);
SuperPoly y_product_upto(const RankContext& ctx, int n0);

/// Degree-n(n+1) component of the y-only subalgebra is one-dimensional and
/// spanned by y_product.
CheckReport verify_pn_top(int n);

/// Product of leading principal minors of (x[i,j]) with exponents the
/// successive differences of lambda.
SuperPoly x_lambda(const RankContext& ctx, const Partition& lambda);

/// y(n) x_lambda is killed by every raising operator of the even-before-odd
/// Borel and has the torus weight of brace(lambda, n).
CheckReport hwv_check(const RankContext& ctx, const Partition& lambda);

/// Expected torus weight of the highest weight vector of S_kappa(C^{n|n})
/// (hook condition kappa_{n+1} <= n required).
std::vector<int> hook_weight(const Partition& kappa, int n);

/// Image of p under the character A -> C with x[i,i] -> 1 and all other
/// generators -> 0; the maximal ideal is exactly the kernel.
Rat m_residue(const RankContext& ctx, const SuperPoly& p);

/// Applies the odd operators e_i -> f_j for j = 1..n, i = 1..j (rightmost
/// first) to y_product; returns the element and its nonzero residue mod m.
std::pair<SuperPoly, Rat> unit_ideal_element(const RankContext& ctx);

/// Echelon basis of the gl(n|n)-module generated by the seeds (all seeds of
/// one central degree).
std::vector<SuperPoly> gl_module_closure(const RankContext& ctx, std::vector<SuperPoly> seeds);

/// Realizes lambda as brace(mu, n') with n' >= n0 and checks that the highest
/// weight vector y(n') x_mu lies in the ideal generated by the gl-orbit of
/// y_product at rank n0.
CheckReport ess_bound_check(const RankContext& ctx, const Partition& lambda, int n0);

/// Nonzerodivisor sampling: elements outside the odd-generator ideal have
/// trivial multiplication kernel up to the degree bound, elements inside are
/// annihilated by the full odd product.
CheckReport nzd_check(const RankContext& ctx, int degree_bound, uint64_t seed);

}  // namespace supalg
