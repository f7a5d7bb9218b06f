#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <unordered_map>
#include <vector>

#include "supalg/partition.hpp"

namespace supalg {

/// Integer formal sum of partitions (graded: mixed sizes allowed).
class SchurVector {
  public:
    void add(const Partition& p, long long c);
    long long coeff(const Partition& p) const;
    const std::map<Partition, long long>& entries() const { return entries_; }
    std::vector<Partition> support() const;
    bool operator==(const SchurVector&) const = default;
    std::string str() const;

  private:
    std::map<Partition, long long> entries_;
};

/// Sparse symmetric polynomial in n <= 15 variables, exponents <= 15.
/// Keys pack the exponent vector four bits per variable.
class SymPoly {
  public:
    explicit SymPoly(int nvars);

    int nvars() const { return nvars_; }
    static uint64_t pack(const std::vector<int>& exps);
    std::vector<int> unpack(uint64_t key) const;

    void add_term(uint64_t key, long long c);
    void add_term(const std::vector<int>& exps, long long c);
    const std::unordered_map<uint64_t, long long>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    SymPoly operator*(const SymPoly& o) const;
    SymPoly& operator+=(const SymPoly& o);

    bool is_symmetric() const;

  private:
    int nvars_;
    std::unordered_map<uint64_t, long long> terms_;
};

/// Littlewood-Richardson coefficient by skew tableau enumeration
/// (lattice-word condition); 0 on any size mismatch.
long long lr_coefficient(const Partition& lambda, const Partition& mu, const Partition& nu);

SchurVector tensor_schur(const Partition& lambda, const Partition& mu);

/// Number of semistandard tableaux of shape lambda, entries <= n
/// (hook content formula; the SSYT enumeration oracle lives in the tests).
Int dim_schur(const Partition& lambda, int n);

/// Kostka number K_{lambda,mu} via the horizontal-strip chain recursion.
long long kostka(const Partition& lambda, const Partition& mu);

/// Schur polynomial s_lambda(x_1..x_n) as an explicit SymPoly.
SymPoly schur_polynomial(const Partition& lambda, int n);

/// Expansion in the Schur basis by triangular elimination against dominance
/// order; throws on non-symmetric input or failed reconstruction.
SchurVector schur_expand(const SymPoly& p, int n);

/// e_d / h_d applied to the multiset {x_i x_j : i <= j} (strict = i < j).
SymPoly elementary_of_pairs(int d, int n, bool strict);
SymPoly homogeneous_of_pairs(int d, int n, bool strict = false);

/// Schur expansion of Wedge^d(Sym^2 C^n) resp. Sym^d(Sym^2 C^n).
SchurVector wedge_of_sym2(int d, int n);
SchurVector sym_of_sym2(int d, int n);
/// Transpose-dual cross-checks over the strict pair multiset.
SchurVector wedge_of_wedge2(int d, int n);
SchurVector sym_of_wedge2(int d, int n);

struct RectScanReport {
    int n = 0, k = 0;
    bool pass = true;
    long long pairs_checked = 0;
    std::vector<std::string> counterexamples;
};

/// Exhaustive biconditional: c^{n x k}_{lambda,mu} != 0 iff mu is the
/// complement of lambda in the n x k box, and then equals 1.
RectScanReport rect_lr_scan(int n, int k);

}  // namespace supalg
