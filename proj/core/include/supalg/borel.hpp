#pragma once

#include "supalg/superpoly.hpp"
#include "supalg/tca.hpp"

namespace supalg {

/// Coordinate ring of the closed Borel at rank n: even a[i,j] (i<=j) and
/// d[i,j] (i<=j), odd b[i,j] (i<j) and c[i,j] (i<=j). Torus weights (length
/// n): a, b carry -alpha_i; c, d carry +alpha_i. Central degree 1 each.
struct BbarContext {
    int n = 0;
    TablePtr table;

    static BbarContext make(int n);

    int a_index(int i, int j) const;
    int b_index(int i, int j) const;
    int c_index(int i, int j) const;
    int d_index(int i, int j) const;
    SuperPoly a(int i, int j) const;
    SuperPoly b(int i, int j) const;  // b[i,i] is identically zero
    SuperPoly c(int i, int j) const;
    SuperPoly d(int i, int j) const;
    SuperPoly one() const { return SuperPoly::constant(table, 1); }
    SuperPoly zero() const { return SuperPoly::zero(table); }
};

/// Graded lexicographic monomial order. Variables compare by (column, row)
/// lexicographically, ties at one index pair broken by d > c > a > b.
class MonomialOrder {
  public:
    explicit MonomialOrder(const BbarContext& ctx);
    bool less(const SuperMonomial& lhs, const SuperMonomial& rhs) const;
    int variable_rank(int var) const { return rank_[var]; }

  private:
    std::vector<int> rank_;  // higher rank = greater variable
    int total_degree(const SuperMonomial& m) const;
};

enum class GenKind { X, Y, Z };

/// Image of the corresponding generator: the k-sums run over k <= min(i,j),
/// with the convention b[i,i] = 0.
SuperPoly phi_image(const BbarContext& ctx, GenKind kind, int i, int j);

/// Multiplicative extension of phi_image to any element of the rank-n model.
SuperPoly phi_map(const BbarContext& bctx, const RankContext& tctx, const SuperPoly& p);

SuperMonomial leading_term(const MonomialOrder& order, const SuperPoly& p);

/// Distinct leading terms for all X,Y,Z-monomials of total degree <= bound
/// (each Y, Z at most once), with the peel-back reconstruction.
/// forge_duplicate plants a renamed copy of one generator; the scan must then
/// fail (negative control for the duplicate detector).
CheckReport injectivity_scan(const BbarContext& ctx, int degree_bound,
                             bool forge_duplicate = false);

std::vector<int> t_weight(const BbarContext& ctx, const SuperMonomial& m);

CheckReport t_invariance_check(const BbarContext& ctx);

/// The cleared-denominator rewriting identities, exactly, for every valid
/// index triple.
CheckReport localization_identities_check(const BbarContext& ctx);

/// nu sends a[i,i], d[i,i] to 1 and every other variable to 0; nu(phi(m))
/// must agree with the m-residue on every monomial of degree <= bound, and
/// the ideal-span of the maximal ideal must fill the kernel.
CheckReport extension_contraction_check(const BbarContext& bctx, const RankContext& tctx,
                                        int degree_bound);

}  // namespace supalg
