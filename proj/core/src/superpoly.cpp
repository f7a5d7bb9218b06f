#include "supalg/superpoly.hpp"

#include <algorithm>
#include <sstream>

#include "supalg/linalg.hpp"

namespace supalg {

int VariableTable::add(Var v) {
    if (index_.count(v.name)) throw PreconditionError("duplicate variable name " + v.name);
    if (weight_len_ < 0)
        weight_len_ = static_cast<int>(v.weight.size());
    else if (weight_len_ != static_cast<int>(v.weight.size()))
        throw PreconditionError("weight vectors must share one length");
    int idx = size();
    index_[v.name] = idx;
    vars_.push_back(std::move(v));
    return idx;
}

int VariableTable::index_of(const std::string& name) const {
    auto it = index_.find(name);
    return it == index_.end() ? -1 : it->second;
}

int central_degree(const SuperMonomial& m, const VariableTable& t) {
    int d = 0;
    for (auto [v, e] : m.evens) d += t.var(v).central_degree * e;
    for (int v : m.odds) d += t.var(v).central_degree;
    return d;
}

std::vector<int> monomial_weight(const SuperMonomial& m, const VariableTable& t) {
    std::vector<int> w(t.weight_len(), 0);
    auto acc = [&](int v, int e) {
        const auto& vw = t.var(v).weight;
        for (size_t i = 0; i < vw.size(); ++i) w[i] += vw[i] * e;
    };
    for (auto [v, e] : m.evens) acc(v, e);
    for (int v : m.odds) acc(v, 1);
    return w;
}

Parity monomial_parity(const SuperMonomial& m) {
    return (m.odds.size() & 1) ? Parity::odd : Parity::even;
}

SuperPoly SuperPoly::constant(TablePtr table, const Rat& c) {
    SuperPoly p(std::move(table));
    if (c != 0) p.terms_[SuperMonomial{}] = c;
    return p;
}

SuperPoly SuperPoly::variable(TablePtr table, int var) {
    SuperMonomial m;
    if (table->var(var).parity == Parity::odd)
        m.odds.push_back(var);
    else
        m.evens.emplace_back(var, 1);
    return monomial(std::move(table), std::move(m), 1);
}

SuperPoly SuperPoly::monomial(TablePtr table, SuperMonomial m, const Rat& c) {
    SuperPoly p(std::move(table));
    if (c != 0) p.terms_[std::move(m)] = c;
    return p;
}

void SuperPoly::add_term(const SuperMonomial& m, const Rat& c) {
    auto it = terms_.find(m);
    if (it == terms_.end()) {
        if (c != 0) terms_.emplace(m, c);
        return;
    }
    it->second += c;
    if (it->second == 0) terms_.erase(it);
}

SuperPoly SuperPoly::operator-() const {
    SuperPoly r(table_);
    for (const auto& [m, c] : terms_) r.terms_[m] = -c;
    return r;
}

namespace {
void check_same_table(const SuperPoly& a, const SuperPoly& b) {
    if (a.table() && b.table() && a.table() != b.table())
        throw PreconditionError("operands use different variable tables");
}
}  // namespace

SuperPoly& SuperPoly::operator+=(const SuperPoly& o) {
    check_same_table(*this, o);
    if (!table_) table_ = o.table_;
    for (const auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
}

SuperPoly& SuperPoly::operator-=(const SuperPoly& o) {
    check_same_table(*this, o);
    if (!table_) table_ = o.table_;
    for (const auto& [m, c] : o.terms_) add_term(m, -c);
    return *this;
}

SuperPoly SuperPoly::scaled(const Rat& c) const {
    SuperPoly r(table_);
    if (c == 0) return r;
    for (const auto& [m, k] : terms_) r.terms_[m] = k * c;
    return r;
}

std::optional<Parity> SuperPoly::parity() const {
    std::optional<Parity> p;
    for (const auto& [m, c] : terms_) {
        Parity mp = monomial_parity(m);
        if (!p)
            p = mp;
        else if (*p != mp)
            return std::nullopt;
    }
    if (!p) p = Parity::even;  // zero is even by convention
    return p;
}

std::optional<int> SuperPoly::degree() const {
    std::optional<int> d;
    for (const auto& [m, c] : terms_) {
        int md = central_degree(m, *table_);
        if (!d)
            d = md;
        else if (*d != md)
            return std::nullopt;
    }
    if (!d) d = 0;
    return d;
}

std::optional<std::vector<int>> SuperPoly::weight() const {
    std::optional<std::vector<int>> w;
    for (const auto& [m, c] : terms_) {
        auto mw = monomial_weight(m, *table_);
        if (!w)
            w = mw;
        else if (*w != mw)
            return std::nullopt;
    }
    if (!w) w = std::vector<int>(table_ ? table_->weight_len() : 0, 0);
    return w;
}

Rat SuperPoly::evaluate(const std::vector<Rat>& values) const {
    for (int v = 0; v < table_->size(); ++v)
        if (table_->var(v).parity == Parity::odd && values[v] != 0)
            throw PreconditionError("evaluate: odd variables must be sent to 0");
    Rat total = 0;
    for (const auto& [m, c] : terms_) {
        if (!m.odds.empty()) continue;
        Rat term = c;
        for (auto [v, e] : m.evens) {
            if (values[v] == 0) { term = 0; break; }
            Rat p = values[v];
            for (int k = 1; k < e; ++k) p *= values[v];
            term *= p;
        }
        total += term;
    }
    return total;
}

std::string SuperPoly::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream out;
    bool first = true;
    for (const auto& [m, c] : terms_) {
        if (!first) out << " + ";
        first = false;
        out << rat_str(c);
        if (!m.evens.empty() || !m.odds.empty()) out << " *";
        for (auto [v, e] : m.evens) {
            out << ' ' << table_->var(v).name;
            if (e > 1) out << '^' << e;
        }
        for (int v : m.odds) out << ' ' << table_->var(v).name;
    }
    return out.str();
}

namespace {

/// Product of two normal-form monomials: merged evens, odd lists merged with
/// the Koszul sign (number of cross inversions); repeated odd variable kills
/// the term. Returns false for a vanishing product.
bool mul_monomials(const SuperMonomial& a, const SuperMonomial& b, SuperMonomial& out, int& sign) {
    out.evens.clear();
    out.odds.clear();
    size_t i = 0, j = 0;
    while (i < a.evens.size() || j < b.evens.size()) {
        if (j == b.evens.size() || (i < a.evens.size() && a.evens[i].first < b.evens[j].first))
            out.evens.push_back(a.evens[i++]);
        else if (i == a.evens.size() || b.evens[j].first < a.evens[i].first)
            out.evens.push_back(b.evens[j++]);
        else {
            out.evens.emplace_back(a.evens[i].first, a.evens[i].second + b.evens[j].second);
            ++i, ++j;
        }
    }
    // inversions between the concatenation [a.odds | b.odds] and sorted order
    long inv = 0;
    i = 0, j = 0;
    while (i < a.odds.size() && j < b.odds.size()) {
        if (a.odds[i] == b.odds[j]) return false;
        if (a.odds[i] < b.odds[j]) {
            out.odds.push_back(a.odds[i++]);
        } else {
            inv += static_cast<long>(a.odds.size() - i);
            out.odds.push_back(b.odds[j++]);
        }
    }
    while (i < a.odds.size()) out.odds.push_back(a.odds[i++]);
    while (j < b.odds.size()) out.odds.push_back(b.odds[j++]);
    sign = (inv & 1) ? -1 : 1;
    return true;
}

}  // namespace

SuperPoly mul(const SuperPoly& p, const SuperPoly& q) {
    check_same_table(p, q);
    SuperPoly r(p.table() ? p.table() : q.table());
    SuperMonomial m;
    int sign;
    for (const auto& [ma, ca] : p.terms())
        for (const auto& [mb, cb] : q.terms()) {
            if (!mul_monomials(ma, mb, m, sign)) continue;
            r.add_term(m, ca * cb * sign);
        }
    return r;
}

SuperPoly pow(const SuperPoly& p, int e) {
    SuperPoly r = SuperPoly::constant(p.table(), 1);
    for (int k = 0; k < e; ++k) r = mul(r, p);
    return r;
}

void Superderivation::validate() const {
    for (const auto& [v, img] : images) {
        if (img.is_zero()) continue;
        auto ip = img.parity();
        if (!ip) throw PreconditionError("derivation image is not parity homogeneous");
        Parity expect =
            (static_cast<int>(table->var(v).parity) ^ static_cast<int>(parity)) ? Parity::odd : Parity::even;
        if (*ip != expect)
            throw PreconditionError("derivation image parity mismatch at " + table->var(v).name);
    }
}

SuperPoly apply_derivation(const Superderivation& d, const SuperPoly& p) {
    if (p.table() && d.table != p.table())
        throw PreconditionError("derivation and polynomial use different tables");
    SuperPoly out(d.table);
    for (const auto& [m, c] : p.terms()) {
        // factor sequence: even variables (any order, all parity 0), then odds.
        for (size_t k = 0; k < m.evens.size(); ++k) {
            auto [v, e] = m.evens[k];
            auto it = d.images.find(v);
            if (it == d.images.end())
                throw PreconditionError("derivation image undefined for " + d.table->var(v).name);
            if (it->second.is_zero()) continue;
            SuperMonomial rest = m;
            if (e == 1)
                rest.evens.erase(rest.evens.begin() + k);
            else
                rest.evens[k].second = e - 1;
            SuperMonomial odds_only;
            odds_only.odds = rest.odds;
            rest.odds.clear();
            // rest (pure even) * D(v) * odds; the even prefix contributes no sign
            SuperPoly term = mul(SuperPoly::monomial(d.table, rest, c * e), it->second);
            term = mul(term, SuperPoly::monomial(d.table, odds_only, 1));
            out += term;
        }
        for (size_t k = 0; k < m.odds.size(); ++k) {
            int v = m.odds[k];
            auto it = d.images.find(v);
            if (it == d.images.end())
                throw PreconditionError("derivation image undefined for " + d.table->var(v).name);
            if (it->second.is_zero()) continue;
            SuperMonomial prefix;
            prefix.evens = m.evens;
            prefix.odds.assign(m.odds.begin(), m.odds.begin() + k);
            SuperMonomial suffix;
            suffix.odds.assign(m.odds.begin() + k + 1, m.odds.end());
            // passing D over k odd factors costs (-1)^{|D| k}
            int sign = (d.parity == Parity::odd && (k & 1)) ? -1 : 1;
            SuperPoly term = mul(SuperPoly::monomial(d.table, prefix, c * sign), it->second);
            term = mul(term, SuperPoly::monomial(d.table, suffix, 1));
            out += term;
        }
    }
    return out;
}

Int count_graded_monomials(const VariableTable& table, int central_degree,
                           const std::optional<std::vector<char>>& allowed) {
    if (central_degree < 0) return 0;
    std::vector<Int> dp(central_degree + 1, 0);
    dp[0] = 1;
    for (int v = 0; v < table.size(); ++v) {
        if (allowed && !(*allowed)[v]) continue;
        int c = table.var(v).central_degree;
        if (c <= 0) throw PreconditionError("central degrees must be positive for enumeration");
        if (table.var(v).parity == Parity::odd) {
            for (int d = central_degree; d >= c; --d) dp[d] += dp[d - c];
        } else {
            for (int d = c; d <= central_degree; ++d) dp[d] += dp[d - c];
        }
    }
    return dp[central_degree];
}

namespace {
void enumerate_rec(const VariableTable& t, const std::optional<std::vector<char>>& allowed,
                   int v, int remaining, SuperMonomial& acc, std::vector<SuperMonomial>& out) {
    if (remaining == 0) {
        out.push_back(acc);
        return;
    }
    while (v < t.size() && allowed && !(*allowed)[v]) ++v;
    if (v >= t.size()) return;
    int c = t.var(v).central_degree;
    if (t.var(v).parity == Parity::odd) {
        if (remaining >= c) {
            acc.odds.push_back(v);
            enumerate_rec(t, allowed, v + 1, remaining - c, acc, out);
            acc.odds.pop_back();
        }
        enumerate_rec(t, allowed, v + 1, remaining, acc, out);
    } else {
        int maxe = remaining / c;
        for (int e = maxe; e >= 1; --e) {
            acc.evens.emplace_back(v, e);
            enumerate_rec(t, allowed, v + 1, remaining - e * c, acc, out);
            acc.evens.pop_back();
        }
        enumerate_rec(t, allowed, v + 1, remaining, acc, out);
    }
}
}  // namespace

std::vector<SuperMonomial> graded_basis(const TablePtr& table, const BasisQuery& q) {
    Int est = count_graded_monomials(*table, q.central_degree, q.allowed);
    if (est > static_cast<long>(q.guard))
        throw GuardExceeded("graded component exceeds the monomial guard", est);
    std::vector<SuperMonomial> out;
    SuperMonomial acc;
    enumerate_rec(*table, q.allowed, 0, q.central_degree, acc, out);
    if (q.weight) {
        std::vector<SuperMonomial> filtered;
        for (auto& m : out)
            if (monomial_weight(m, *table) == *q.weight) filtered.push_back(std::move(m));
        out = std::move(filtered);
    }
    return out;
}

SpanCertificate span_membership(const SuperPoly& target,
                                const std::vector<SuperPoly>& generators, int degree) {
    SpanCertificate cert;
    if (target.is_zero()) {
        cert.member = true;
        return cert;
    }
    auto d = target.degree();
    if (!d || *d != degree)
        throw PreconditionError("span_membership: target must be homogeneous of the stated degree");
    const TablePtr& table = target.table();

    struct Column {
        int gen;
        SuperMonomial multiplier;
        SuperPoly value;
    };
    std::vector<Column> cols;
    for (size_t g = 0; g < generators.size(); ++g) {
        auto gd = generators[g].degree();
        if (!gd) throw PreconditionError("span_membership: generators must be homogeneous");
        int rem = degree - *gd;
        if (rem < 0) continue;
        BasisQuery bq;
        bq.central_degree = rem;
        for (const auto& m : graded_basis(table, bq)) {
            SuperPoly v = mul(SuperPoly::monomial(table, m, 1), generators[g]);
            if (!v.is_zero()) cols.push_back({static_cast<int>(g), m, std::move(v)});
        }
    }

    std::map<SuperMonomial, int> row_index;
    auto touch = [&](const SuperPoly& p) {
        for (const auto& [m, c] : p.terms())
            row_index.emplace(m, 0);
    };
    touch(target);
    for (const auto& col : cols) touch(col.value);
    int nrows = 0;
    for (auto& [m, idx] : row_index) idx = nrows++;

    QMat matrix(cols.size(), QVec(nrows, Rat(0)));
    for (size_t j = 0; j < cols.size(); ++j)
        for (const auto& [m, c] : cols[j].value.terms()) matrix[j][row_index[m]] = c;
    QVec b(nrows, Rat(0));
    for (const auto& [m, c] : target.terms()) b[row_index[m]] = c;

    auto x = solve_columns(matrix, b);
    if (!x) return cert;
    cert.member = true;
    for (size_t j = 0; j < cols.size(); ++j)
        if ((*x)[j] != 0)
            cert.combo.push_back({cols[j].gen, cols[j].multiplier, (*x)[j]});
    return cert;
}

}  // namespace supalg
