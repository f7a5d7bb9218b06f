#pragma once

#include <map>

#include "supalg/linalg.hpp"

namespace supalg {

/// Element of gl(n|n) as a 2n x 2n block matrix [[a,b],[c,d]] over Q
/// (basis e_1..e_n, f_1..f_n).
struct GlElement {
    int n = 0;
    QMat mat;  // 2n x 2n

    static GlElement zeros(int n);
    Rat& at(int r, int c) { return mat[r][c]; }
    const Rat& at(int r, int c) const { return mat[r][c]; }
};

/// Basis of pe_n = { [[a,b],[c,-a^T]] : b = b^T, c = -c^T }, size 2n^2.
std::vector<GlElement> pe_basis(int n);

/// Basis of the Borel b_n (a, c, d upper triangular, b strictly upper),
/// size 2n^2 + n.
std::vector<GlElement> borel_basis(int n);

struct IwasawaReport {
    int n = 0;
    int dim_sum = 0;           // dim(b_n + pe_n)
    int dim_intersection = 0;  // dim(b_n ∩ pe_n)
    bool intersection_diagonal = true;
    bool pass = false;
};
IwasawaReport iwasawa_check(int n);

/// The odd form on the x/y/z basis of Sym^2: delta on x, zero on y and z.
Rat omega_eval(char kind, int i, int j);

/// Basis morphism of the signed Brauer category: a matching on the source
/// with an edge-list orientation plus a bijection on the unmatched points.
/// Normal form stores edges (min,max) sorted lexicographically; the sign of
/// the sorting permutation is returned separately and lives in coefficients.
struct BrauerMorphism {
    int source = 0;
    int target = 0;
    std::vector<std::pair<int, int>> edges;  // sorted, each (a < b), 1-indexed
    std::vector<int> bij;                    // bij[p-1] = image of p, 0 when matched

    int degree() const { return static_cast<int>(edges.size()); }
    friend auto operator<=>(const BrauerMorphism&, const BrauerMorphism&) = default;
    std::string str() const;
};

struct SignedMorphism {
    int sign = 1;
    BrauerMorphism mor;
};

/// Builds the normal form from an ordered edge list; the sign records the
/// parity of the sort.
SignedMorphism make_morphism(int source, int target,
                             std::vector<std::pair<int, int>> ordered_edges,
                             std::vector<int> bij);

BrauerMorphism identity_morphism(int p);

/// g after f. Edge order: f's edges first, then g's edges pulled back along
/// f's bijection; the returned sign normalizes that order.
SignedMorphism compose(const BrauerMorphism& g, const BrauerMorphism& f);

/// C(p, 2r) (2r-1)!! q! with p - 2r = q,.0 when p - q is odd or negative.
Int hom_dim(int p, int q);

/// All normal-form basis morphisms p -> q.
std::vector<BrauerMorphism> enumerate_homs(int p, int q);

/// Tensor in V^{otimes slots} at rank (n|n); slot basis indices are
/// 0..n-1 for e_1..e_n and n..2n-1 for f_1..f_n.
struct Tensor {
    int n = 0;
    int slots = 0;
    std::map<std::vector<int>, Rat> terms;

    static Tensor basis(int n, const std::vector<int>& word);
    void add(const std::vector<int>& word, const Rat& c);
    bool operator==(const Tensor&) const = default;
};

/// Contracts the matched slots with the odd form (lexicographically first
/// edge first) and permutes the remaining slots by the bijection, with full
/// Koszul sign bookkeeping.
Tensor k_apply(const BrauerMorphism& m, const Tensor& t);
Tensor k_apply(const SignedMorphism& m, const Tensor& t);

/// k_apply(compose(g,f), t) == k_apply(g, k_apply(f, t)) on seeded random
/// triples plus exhaustive small cases.
CheckReport functor_check(int n, int max_size, int trials, uint64_t seed);

}  // namespace supalg
