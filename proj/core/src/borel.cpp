#include "supalg/borel.hpp"

#include <algorithm>
#include <cstdio>
#include <sstream>

#include "supalg/linalg.hpp"

namespace supalg {

namespace {
std::string nm(const char* base, int i, int j) {
    std::ostringstream os;
    os << base << '[' << i << ',' << j << ']';
    return os.str();
}

std::vector<int> alpha(int n, int i, int s) {
    std::vector<int> w(n, 0);
    w[i - 1] = s;
    return w;
}
}  // namespace

BbarContext BbarContext::make(int n) {
    if (n < 1) throw PreconditionError("rank must be positive");
    auto table = std::make_shared<VariableTable>();
    for (int i = 1; i <= n; ++i)
        for (int j = i; j <= n; ++j) table->add({nm("a", i, j), Parity::even, alpha(n, i, -1), 1});
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j) table->add({nm("b", i, j), Parity::odd, alpha(n, i, -1), 1});
    for (int i = 1; i <= n; ++i)
        for (int j = i; j <= n; ++j) table->add({nm("c", i, j), Parity::odd, alpha(n, i, +1), 1});
    for (int i = 1; i <= n; ++i)
        for (int j = i; j <= n; ++j) table->add({nm("d", i, j), Parity::even, alpha(n, i, +1), 1});
    BbarContext ctx;
    ctx.n = n;
    ctx.table = std::move(table);
    return ctx;
}

namespace {
int tri_index(int n, int i, int j) {  // (i,j) with i <= j, row-major upper triangle
    return (i - 1) * n - (i - 1) * (i - 2) / 2 + (j - i);
}
}  // namespace

int BbarContext::a_index(int i, int j) const {
    if (!(1 <= i && i <= j && j <= n)) throw PreconditionError("a index out of range");
    return tri_index(n, i, j);
}
int BbarContext::b_index(int i, int j) const {
    if (!(1 <= i && i < j && j <= n)) throw PreconditionError("b index out of range");
    int base = n * (n + 1) / 2;
    return base + (i - 1) * (n - 1) - (i - 1) * (i - 2) / 2 + (j - i - 1);
}
int BbarContext::c_index(int i, int j) const {
    if (!(1 <= i && i <= j && j <= n)) throw PreconditionError("c index out of range");
    int base = n * (n + 1) / 2 + n * (n - 1) / 2;
    return base + tri_index(n, i, j);
}
int BbarContext::d_index(int i, int j) const {
    if (!(1 <= i && i <= j && j <= n)) throw PreconditionError("d index out of range");
    int base = n * (n + 1) + n * (n - 1) / 2;
    return base + tri_index(n, i, j);
}

SuperPoly BbarContext::a(int i, int j) const { return SuperPoly::variable(table, a_index(i, j)); }
SuperPoly BbarContext::b(int i, int j) const {
    if (i == j) return zero();
    return SuperPoly::variable(table, b_index(i, j));
}
SuperPoly BbarContext::c(int i, int j) const { return SuperPoly::variable(table, c_index(i, j)); }
SuperPoly BbarContext::d(int i, int j) const { return SuperPoly::variable(table, d_index(i, j)); }

MonomialOrder::MonomialOrder(const BbarContext& ctx) {
    const VariableTable& t = *ctx.table;
    std::vector<int> order(t.size());
    for (int v = 0; v < t.size(); ++v) order[v] = v;
    auto key = [&](int v) {
        const std::string& name = t.var(v).name;
        int tier = 0;  // d > c > a > b
        switch (name[0]) {
            case 'd': tier = 3; break;
            case 'c': tier = 2; break;
            case 'a': tier = 1; break;
            case 'b': tier = 0; break;
        }
        int i = 0, j = 0;
        std::sscanf(name.c_str(), "%*c[%d,%d]", &i, &j);
        return std::tuple<int, int, int>(j, i, tier);
    };
    std::sort(order.begin(), order.end(), [&](int u, int v) { return key(u) < key(v); });
    rank_.assign(t.size(), 0);
    for (int r = 0; r < static_cast<int>(order.size()); ++r) rank_[order[r]] = r;
}

int MonomialOrder::total_degree(const SuperMonomial& m) const {
    int d = 0;
    for (auto [v, e] : m.evens) d += e;
    d += static_cast<int>(m.odds.size());
    return d;
}

bool MonomialOrder::less(const SuperMonomial& lhs, const SuperMonomial& rhs) const {
    int dl = total_degree(lhs), dr = total_degree(rhs);
    if (dl != dr) return dl < dr;
    // exponent vectors sorted by descending variable rank
    auto collect = [&](const SuperMonomial& m) {
        std::vector<std::pair<int, int>> v;  // (rank, exponent)
        for (auto [var, e] : m.evens) v.emplace_back(rank_[var], e);
        for (int var : m.odds) v.emplace_back(rank_[var], 1);
        std::sort(v.begin(), v.end(), std::greater<>());
        return v;
    };
    auto le = collect(lhs), re = collect(rhs);
    size_t i = 0, j = 0;
    while (i < le.size() && j < re.size()) {
        if (le[i].first != re[j].first) return le[i].first < re[j].first;
        if (le[i].second != re[j].second) return le[i].second < re[j].second;
        ++i, ++j;
    }
    return false;  // equal support and exponents: equal monomials
}

SuperPoly phi_image(const BbarContext& ctx, GenKind kind, int i, int j) {
    if (i < 1 || i > ctx.n || j < 1 || j > ctx.n)
        throw PreconditionError("phi_image: index out of range");
    SuperPoly out = ctx.zero();
    int kmax = std::min(i, j);
    switch (kind) {
        case GenKind::X:
            for (int k = 1; k <= kmax; ++k)
                out += mul(ctx.a(k, i), ctx.d(k, j)) + mul(ctx.c(k, i), ctx.b(k, j));
            break;
        case GenKind::Y:
            for (int k = 1; k <= kmax; ++k)
                out += mul(ctx.a(k, i), ctx.c(k, j)) + mul(ctx.a(k, j), ctx.c(k, i));
            break;
        case GenKind::Z:
            for (int k = 1; k <= kmax; ++k)
                out += mul(ctx.d(k, i), ctx.b(k, j)) - mul(ctx.b(k, i), ctx.d(k, j));
            break;
    }
    return out;
}

SuperPoly phi_map(const BbarContext& bctx, const RankContext& tctx, const SuperPoly& p) {
    if (bctx.n != tctx.n) throw PreconditionError("phi_map: rank mismatch");
    int n = tctx.n;
    // generator metadata by variable index
    std::vector<SuperPoly> images(tctx.table->size(), bctx.zero());
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j) images[tctx.x_index(i, j)] = phi_image(bctx, GenKind::X, i, j);
    for (int i = 1; i <= n; ++i)
        for (int j = i; j <= n; ++j) images[tctx.y_index(i, j)] = phi_image(bctx, GenKind::Y, i, j);
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j)
            images[tctx.z_index(i, j)] = phi_image(bctx, GenKind::Z, i, j);

    SuperPoly out = bctx.zero();
    for (const auto& [m, c] : p.terms()) {
        SuperPoly term = SuperPoly::constant(bctx.table, c);
        for (auto [v, e] : m.evens)
            for (int t = 0; t < e; ++t) term = mul(term, images[v]);
        for (int v : m.odds) term = mul(term, images[v]);
        out += term;
    }
    return out;
}

SuperMonomial leading_term(const MonomialOrder& order, const SuperPoly& p) {
    if (p.is_zero()) throw PreconditionError("leading_term of zero");
    const SuperMonomial* best = nullptr;
    for (const auto& [m, c] : p.terms())
        if (!best || order.less(*best, m)) best = &m;
    return *best;
}

namespace {

struct Generator {
    GenKind kind;
    int i, j;
    bool odd;
    SuperPoly value;
    SuperMonomial lt;
    std::string name;
};

std::vector<Generator> all_generators(const BbarContext& ctx, const MonomialOrder& order) {
    std::vector<Generator> gens;
    for (int i = 1; i <= ctx.n; ++i)
        for (int j = 1; j <= ctx.n; ++j) {
            SuperPoly v = phi_image(ctx, GenKind::X, i, j);
            gens.push_back({GenKind::X, i, j, false, v, leading_term(order, v),
                            nm("X", i, j)});
        }
    for (int i = 1; i <= ctx.n; ++i)
        for (int j = i; j <= ctx.n; ++j) {
            SuperPoly v = phi_image(ctx, GenKind::Y, i, j);
            gens.push_back({GenKind::Y, i, j, true, v, leading_term(order, v), nm("Y", i, j)});
        }
    for (int i = 1; i <= ctx.n; ++i)
        for (int j = i + 1; j <= ctx.n; ++j) {
            SuperPoly v = phi_image(ctx, GenKind::Z, i, j);
            gens.push_back({GenKind::Z, i, j, true, v, leading_term(order, v), nm("Z", i, j)});
        }
    return gens;
}

/// The proof's reconstruction: peel c- and b-factors (each forces a Y resp.
/// Z), then off-diagonal d/a factors (each forces an X), then diagonal pairs.
bool peel_monomial(const BbarContext& ctx, const SuperMonomial& lt,
                   std::map<std::string, int>& factors_out) {
    // exponent map keyed by (letter, i, j)
    std::map<std::string, int> have;
    auto name_of = [&](int var) { return ctx.table->var(var).name; };
    for (auto [v, e] : lt.evens) have[name_of(v)] += e;
    for (int v : lt.odds) have[name_of(v)] += 1;

    auto take = [&](const std::string& name) -> bool {
        auto it = have.find(name);
        if (it == have.end() || it->second == 0) return false;
        if (--it->second == 0) have.erase(it);
        return true;
    };

    std::vector<std::pair<std::string, std::pair<int, int>>> items;
    for (const auto& [name, e] : have) {
        int i, j;
        std::sscanf(name.c_str(), "%*c[%d,%d]", &i, &j);
        for (int t = 0; t < e; ++t) items.push_back({name, {i, j}});
    }
    // c[i,j] pairs with a[i,i] as Y[i,j]
    for (const auto& [name, ij] : items) {
        if (name[0] != 'c') continue;
        if (!take(name)) continue;  // may already be consumed
        if (!take(nm("a", ij.first, ij.first))) return false;
        factors_out[nm("Y", ij.first, ij.second)]++;
    }
    // b[i,j] pairs with d[i,i] as Z[i,j]
    for (const auto& [name, ij] : items) {
        if (name[0] != 'b') continue;
        if (!take(name)) continue;
        if (!take(nm("d", ij.first, ij.first))) return false;
        factors_out[nm("Z", ij.first, ij.second)]++;
    }
    // off-diagonal d[i,j]: X[i,j]; off-diagonal a[i,j]: X[j,i]
    for (const auto& [name, ij] : items) {
        if (name[0] != 'd' || ij.first == ij.second) continue;
        while (take(name)) {
            if (!take(nm("a", ij.first, ij.first))) return false;
            factors_out[nm("X", ij.first, ij.second)]++;
        }
    }
    for (const auto& [name, ij] : items) {
        if (name[0] != 'a' || ij.first == ij.second) continue;
        while (take(name)) {
            if (!take(nm("d", ij.first, ij.first))) return false;
            factors_out[nm("X", ij.second, ij.first)]++;
        }
    }
    // remaining diagonal pairs a[i,i] d[i,i]: X[i,i]
    for (int i = 1; i <= ctx.n; ++i) {
        while (take(nm("d", i, i))) {
            if (!take(nm("a", i, i))) return false;
            factors_out[nm("X", i, i)]++;
        }
    }
    return have.empty();
}

}  // namespace

CheckReport injectivity_scan(const BbarContext& ctx, int degree_bound, bool forge_duplicate) {
    CheckReport rep;
    if (ctx.n > 3 || degree_bound > 4)
        throw GuardExceeded("injectivity_scan capped at n <= 3, degree <= 4",
                            Int(ctx.n) * degree_bound);
    MonomialOrder order(ctx);
    auto gens = all_generators(ctx, order);
    if (forge_duplicate) {
        Generator dup = gens.front();
        dup.name = "forged:" + dup.name;
        gens.push_back(std::move(dup));
    }

    std::map<SuperMonomial, std::map<std::string, int>> seen;
    long long scanned = 0;

    struct Walk {
        const BbarContext& ctx;
        const MonomialOrder& order;
        const std::vector<Generator>& gens;
        std::map<SuperMonomial, std::map<std::string, int>>& seen;
        CheckReport& rep;
        long long& scanned;
        int bound;
        std::map<std::string, int> current;

        void visit(const SuperPoly& value, const SuperMonomial& lt_product) {
            ++scanned;
            if (value.is_zero()) {
                rep.fail("generator monomial product vanished");
                return;
            }
            SuperMonomial lt = leading_term(order, value);
            if (!(lt == lt_product))
                rep.fail("leading term differs from the product of factor leading terms");
            auto [it, fresh] = seen.emplace(lt, current);
            if (!fresh && !(it->second == current))
                rep.fail("duplicate leading term between distinct monomials");
            std::map<std::string, int> rebuilt;
            if (!peel_monomial(ctx, lt, rebuilt) || !(rebuilt == current))
                rep.fail("reconstruction from the leading term failed");
        }

        // product of leading-term monomials; the odd variables of distinct
        // generator leading terms never collide
        SuperMonomial lt_mul(const SuperMonomial& l, const SuperMonomial& r) const {
            SuperPoly prod = mul(SuperPoly::monomial(ctx.table, l, 1),
                                 SuperPoly::monomial(ctx.table, r, 1));
            if (prod.is_zero()) throw Error("leading-term product vanished unexpectedly");
            return prod.terms().begin()->first;
        }

        void go(size_t g, int remaining, const SuperPoly& value, const SuperMonomial& lt) {
            if (g == gens.size()) return;
            go(g + 1, remaining, value, lt);
            int cap = gens[g].odd ? 1 : remaining;
            SuperPoly v = value;
            SuperMonomial l = lt;
            for (int e = 1; e <= cap && e <= remaining; ++e) {
                v = mul(v, gens[g].value);
                l = lt_mul(l, gens[g].lt);
                current[gens[g].name] += 1;
                visit(v, l);
                go(g + 1, remaining - e, v, l);
            }
            auto it = current.find(gens[g].name);
            if (it != current.end()) current.erase(it);
        }
    } walk{ctx, order, gens, seen, rep, scanned, degree_bound, {}};

    SuperPoly unit = ctx.one();
    SuperMonomial empty;
    walk.go(0, degree_bound, unit, empty);
    rep.note = "scanned " + std::to_string(scanned) + " generator monomials of degree <= " +
               std::to_string(degree_bound);
    return rep;
}

std::vector<int> t_weight(const BbarContext& ctx, const SuperMonomial& m) {
    return monomial_weight(m, *ctx.table);
}

CheckReport t_invariance_check(const BbarContext& ctx) {
    CheckReport rep;
    std::vector<int> zero(ctx.n, 0);
    auto check_zero_weight = [&](const SuperPoly& p, const std::string& what) {
        auto w = p.weight();
        if (!w || *w != zero) rep.fail(what + " is not T-invariant");
    };
    for (int i = 1; i <= ctx.n; ++i)
        for (int j = 1; j <= ctx.n; ++j)
            check_zero_weight(phi_image(ctx, GenKind::X, i, j), nm("X", i, j));
    for (int i = 1; i <= ctx.n; ++i)
        for (int j = i; j <= ctx.n; ++j)
            check_zero_weight(phi_image(ctx, GenKind::Y, i, j), nm("Y", i, j));
    for (int i = 1; i <= ctx.n; ++i)
        for (int j = i + 1; j <= ctx.n; ++j)
            check_zero_weight(phi_image(ctx, GenKind::Z, i, j), nm("Z", i, j));
    // invariant generator shapes of the fixed ring
    for (int i = 1; i <= ctx.n; ++i)
        for (int j = i; j <= ctx.n; ++j)
            for (int k = i; k <= ctx.n; ++k) {
                check_zero_weight(mul(ctx.a(i, j), ctx.c(i, k)), "a c pair");
                check_zero_weight(mul(ctx.a(i, j), ctx.d(i, k)), "a d pair");
                if (i < j) {
                    check_zero_weight(mul(ctx.b(i, j), ctx.c(i, k)), "b c pair");
                    check_zero_weight(mul(ctx.b(i, j), ctx.d(i, k)), "b d pair");
                }
            }
    // negative control: mixed-row products carry nonzero weight
    if (ctx.n >= 2) {
        auto w = mul(ctx.a(1, 1), ctx.c(2, 2)).weight();
        if (w && *w == zero) rep.fail("a[1,1] c[2,2] wrongly T-invariant");
    }
    rep.note = "all phi images and fixed-ring generator shapes have weight zero";
    return rep;
}

CheckReport localization_identities_check(const BbarContext& ctx) {
    CheckReport rep;
    int n = ctx.n;
    auto expect_equal = [&](const SuperPoly& lhs, const SuperPoly& rhs, const std::string& what) {
        if (!(lhs == rhs)) rep.fail("identity failed: " + what);
    };
    for (int k = 1; k <= n; ++k)
        for (int i = k + 1; i <= n; ++i)
            for (int j = k + 1; j <= n; ++j) {
                SuperPoly akk_dkk = mul(ctx.a(k, k), ctx.d(k, k));
                expect_equal(mul(mul(ctx.a(k, i), ctx.d(k, j)), akk_dkk),
                             mul(mul(ctx.a(k, i), ctx.d(k, k)), mul(ctx.a(k, k), ctx.d(k, j))),
                             "ad k=" + std::to_string(k));
                expect_equal(mul(mul(ctx.a(k, i), ctx.c(k, j)), akk_dkk),
                             mul(mul(ctx.a(k, i), ctx.d(k, k)), mul(ctx.a(k, k), ctx.c(k, j))),
                             "ac k=" + std::to_string(k));
                expect_equal(mul(mul(ctx.b(k, i), ctx.c(k, j)), akk_dkk),
                             mul(mul(ctx.b(k, i), ctx.d(k, k)), mul(ctx.a(k, k), ctx.c(k, j))),
                             "bc k=" + std::to_string(k));
                expect_equal(mul(mul(ctx.b(k, i), ctx.d(k, j)), akk_dkk),
                             mul(mul(ctx.b(k, i), ctx.d(k, k)), mul(ctx.a(k, k), ctx.d(k, j))),
                             "bd k=" + std::to_string(k));
            }
    // the k = i < j group
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j) {
            SuperPoly aii_dii = mul(ctx.a(i, i), ctx.d(i, i));
            expect_equal(mul(mul(ctx.b(i, j), ctx.c(i, i)), aii_dii),
                         mul(mul(ctx.b(i, j), ctx.d(i, i)), mul(ctx.a(i, i), ctx.c(i, i))),
                         "bc diag i=" + std::to_string(i));
            expect_equal(mul(mul(ctx.a(i, j), ctx.c(i, i)), aii_dii),
                         mul(mul(ctx.a(i, j), ctx.d(i, i)), mul(ctx.a(i, i), ctx.c(i, i))),
                         "ac diag i=" + std::to_string(i));
        }
    rep.note = "cleared-denominator identities at rank " + std::to_string(n);
    return rep;
}

CheckReport extension_contraction_check(const BbarContext& bctx, const RankContext& tctx,
                                        int degree_bound) {
    CheckReport rep;
    if (bctx.n != tctx.n) throw PreconditionError("rank mismatch");
    // nu: a[i,i], d[i,i] -> 1, everything else -> 0
    std::vector<Rat> nu(bctx.table->size(), Rat(0));
    for (int i = 1; i <= bctx.n; ++i) {
        nu[bctx.a_index(i, i)] = 1;
        nu[bctx.d_index(i, i)] = 1;
    }

    std::vector<SuperMonomial> all;
    for (int dd = 0; dd <= degree_bound; dd += 2) {
        BasisQuery q;
        q.central_degree = dd;
        for (auto& m : graded_basis(tctx.table, q)) all.push_back(std::move(m));
    }
    std::map<SuperMonomial, int> row;
    for (size_t i = 0; i < all.size(); ++i) row[all[i]] = static_cast<int>(i);

    // pointwise equality of the two characters on the monomial basis
    std::vector<Rat> functional(all.size());
    for (size_t i = 0; i < all.size(); ++i) {
        SuperPoly mono = SuperPoly::monomial(tctx.table, all[i], 1);
        Rat lhs = phi_map(bctx, tctx, mono).evaluate(nu);
        Rat rhs = m_residue(tctx, mono);
        functional[i] = rhs;
        if (lhs != rhs)
            rep.fail("nu(phi(m)) != residue(m) at m = " + mono.str() + ": " + rat_str(lhs) +
                     " vs " + rat_str(rhs));
    }

    // the maximal ideal spans the full kernel of the residue functional
    auto mspec = maximal_ideal(tctx);
    QMat span_rows;
    for (const auto& g : mspec.generators) {
        for (int dd = 0; dd + 2 <= degree_bound; dd += 2) {
            BasisQuery q;
            q.central_degree = dd;
            for (const auto& m : graded_basis(tctx.table, q)) {
                SuperPoly v = mul(SuperPoly::monomial(tctx.table, m, 1), g);
                if (v.is_zero()) continue;
                bool fits = true;
                QVec vec(all.size(), Rat(0));
                Rat fval = 0;
                for (const auto& [mm, cc] : v.terms()) {
                    auto it = row.find(mm);
                    if (it == row.end()) { fits = false; break; }
                    vec[it->second] = cc;
                    fval += cc * functional[it->second];
                }
                if (!fits) continue;  // product leaves the truncation window
                if (fval != 0) {
                    rep.fail("ideal element escapes the kernel of the residue");
                    continue;
                }
                span_rows.push_back(std::move(vec));
            }
        }
    }
    int span_rank = rank(span_rows);
    if (span_rank != static_cast<int>(all.size()) - 1)
        rep.fail("ideal span has rank " + std::to_string(span_rank) + ", expected " +
                 std::to_string(all.size() - 1));
    rep.note = "kernel comparison on " + std::to_string(all.size()) +
               " monomials up to degree " + std::to_string(degree_bound);
    return rep;
}

}  // namespace supalg
