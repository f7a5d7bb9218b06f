#pragma once

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "supalg/common.hpp"

namespace supalg {

enum class Parity : uint8_t { even = 0, odd = 1 };

struct Var {
    std::string name;
    Parity parity = Parity::even;
    std::vector<int> weight;   // all weights in one table share a length
    int central_degree = 0;
};

class VariableTable {
  public:
    int add(Var v);
    int size() const { return static_cast<int>(vars_.size()); }
    const Var& var(int i) const { return vars_[i]; }
    int index_of(const std::string& name) const;   // -1 when absent
    int weight_len() const { return weight_len_; }

  private:
    std::vector<Var> vars_;
    std::map<std::string, int> index_;
    int weight_len_ = -1;
};

using TablePtr = std::shared_ptr<const VariableTable>;

/// Normal form: even exponents sorted by variable index, odd variables a
/// strictly increasing list (canonical order = declaration order). The sign
/// produced by reordering odd factors lives in the coefficient.
struct SuperMonomial {
    std::vector<std::pair<int, int>> evens;  // (var, exponent > 0)
    std::vector<int> odds;

    friend auto operator<=>(const SuperMonomial&, const SuperMonomial&) = default;
};

int central_degree(const SuperMonomial& m, const VariableTable& t);
std::vector<int> monomial_weight(const SuperMonomial& m, const VariableTable& t);
Parity monomial_parity(const SuperMonomial& m);

class SuperPoly {
  public:
    SuperPoly() = default;
    explicit SuperPoly(TablePtr table) : table_(std::move(table)) {}

    static SuperPoly zero(TablePtr table) { return SuperPoly(std::move(table)); }
    static SuperPoly constant(TablePtr table, const Rat& c);
    static SuperPoly variable(TablePtr table, int var);
    static SuperPoly monomial(TablePtr table, SuperMonomial m, const Rat& c);

    const TablePtr& table() const { return table_; }
    const std::map<SuperMonomial, Rat>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    size_t term_count() const { return terms_.size(); }

    void add_term(const SuperMonomial& m, const Rat& c);

    SuperPoly operator-() const;
    SuperPoly& operator+=(const SuperPoly& o);
    SuperPoly& operator-=(const SuperPoly& o);
    friend SuperPoly operator+(SuperPoly a, const SuperPoly& b) { return a += b; }
    friend SuperPoly operator-(SuperPoly a, const SuperPoly& b) { return a -= b; }
    friend bool operator==(const SuperPoly& a, const SuperPoly& b) {
        return a.terms_ == b.terms_;
    }

    SuperPoly scaled(const Rat& c) const;

    /// Parity / central degree / weight, when homogeneous for that grading.
    std::optional<Parity> parity() const;
    std::optional<int> degree() const;
    std::optional<std::vector<int>> weight() const;

    /// Full scalar substitution; every odd variable must be sent to 0.
    Rat evaluate(const std::vector<Rat>& values) const;

    std::string str() const;   // debug dump, e.g. "2 * x[1,1]^2 y[1,2]"

  private:
    TablePtr table_;
    std::map<SuperMonomial, Rat> terms_;
};

SuperPoly mul(const SuperPoly& p, const SuperPoly& q);
inline SuperPoly operator*(const SuperPoly& p, const SuperPoly& q) { return mul(p, q); }
SuperPoly pow(const SuperPoly& p, int e);

struct Superderivation {
    Parity parity = Parity::even;
    TablePtr table;
    std::map<int, SuperPoly> images;   // variables absent from the map are errors

    /// Image parity must be var parity + derivation parity (or zero image).
    void validate() const;
};

SuperPoly apply_derivation(const Superderivation& d, const SuperPoly& p);

struct BasisQuery {
    int central_degree = 0;
    std::optional<std::vector<int>> weight;
    std::optional<std::vector<char>> allowed;  // per-variable mask
    size_t guard = 2'000'000;
};

/// All monomials of the requested central degree (and weight, when given),
/// in a fixed exponent-lexicographic order. Throws GuardExceeded when the
/// degree component is larger than the guard.
std::vector<SuperMonomial> graded_basis(const TablePtr& table, const BasisQuery& q);

Int count_graded_monomials(const VariableTable& table, int central_degree,
                           const std::optional<std::vector<char>>& allowed);

struct SpanCertificate {
    bool member = false;
    struct Term {
        int generator;
        SuperMonomial multiplier;
        Rat coeff;
    };
    std::vector<Term> combo;
};

/// Exact membership of a degree-d homogeneous target in the degree-d graded
/// component of the ideal generated by homogeneous `generators`.
SpanCertificate span_membership(const SuperPoly& target,
                                const std::vector<SuperPoly>& generators, int degree);

}  // namespace supalg
