#include "supalg/tca.hpp"

#include <algorithm>
#include <random>
#include <sstream>

#include "supalg/linalg.hpp"

namespace supalg {

namespace {
std::string idx_name(const char* base, int i, int j) {
    std::ostringstream os;
    os << base << '[' << i << ',' << j << ']';
    return os.str();
}

std::vector<int> xy_weight(int n, int e1, int e2, int f1, int f2) {
    std::vector<int> w(2 * n, 0);
    if (e1) w[e1 - 1] += 1;
    if (e2) w[e2 - 1] += 1;
    if (f1) w[n + f1 - 1] += 1;
    if (f2) w[n + f2 - 1] += 1;
    return w;
}
}  // namespace

RankContext RankContext::make(int n) {
    if (n < 1) throw PreconditionError("rank must be positive");
    auto table = std::make_shared<VariableTable>();
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j)
            table->add({idx_name("x", i, j), Parity::even, xy_weight(n, i, 0, j, 0), 2});
    for (int i = 1; i <= n; ++i)
        for (int j = i; j <= n; ++j)
            table->add({idx_name("y", i, j), Parity::odd, xy_weight(n, i, j, 0, 0), 2});
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j)
            table->add({idx_name("z", i, j), Parity::odd, xy_weight(n, 0, 0, i, j), 2});
    RankContext ctx;
    ctx.n = n;
    ctx.table = std::move(table);
    return ctx;
}

int RankContext::x_index(int i, int j) const {
    if (i < 1 || i > n || j < 1 || j > n) throw PreconditionError("x index out of range");
    return (i - 1) * n + (j - 1);
}

int RankContext::y_index(int i, int j) const {
    if (!(1 <= i && i <= j && j <= n)) throw PreconditionError("y index out of range");
    // offset of row i within the upper triangle
    int base = n * n;
    int row_start = (i - 1) * n - (i - 1) * (i - 2) / 2;
    return base + row_start + (j - i);
}

int RankContext::z_index(int i, int j) const {
    if (!(1 <= i && i < j && j <= n)) throw PreconditionError("z index out of range");
    int base = n * n + n * (n + 1) / 2;
    int row_start = (i - 1) * (n - 1) - (i - 1) * (i - 2) / 2;
    return base + row_start + (j - i - 1);
}

SuperPoly RankContext::x(int i, int j) const {
    return SuperPoly::variable(table, x_index(i, j));
}

SuperPoly RankContext::y_sym(int i, int j) const {
    if (i > j) std::swap(i, j);
    return SuperPoly::variable(table, y_index(i, j));
}

SuperPoly RankContext::z_alt(int i, int j) const {
    if (i == j) return zero();
    if (i < j) return SuperPoly::variable(table, z_index(i, j));
    return -SuperPoly::variable(table, z_index(j, i));
}

Superderivation gl_operator(const RankContext& ctx, GlKind kind, int i, int j) {
    int n = ctx.n;
    if (i < 1 || i > n || j < 1 || j > n) throw PreconditionError("gl operator index out of range");
    Superderivation d;
    d.table = ctx.table;
    d.parity = (kind == GlKind::ee || kind == GlKind::ff) ? Parity::even : Parity::odd;
    auto img = [&](int var) -> SuperPoly& {
        return d.images.emplace(var, ctx.zero()).first->second;
    };
    for (int k = 1; k <= n; ++k)
        for (int l = 1; l <= n; ++l) img(ctx.x_index(k, l));
    for (int k = 1; k <= n; ++k)
        for (int l = k; l <= n; ++l) img(ctx.y_index(k, l));
    for (int k = 1; k <= n; ++k)
        for (int l = k + 1; l <= n; ++l) img(ctx.z_index(k, l));

    switch (kind) {
        case GlKind::ee:  // e_i -> e_j
            for (int l = 1; l <= n; ++l) img(ctx.x_index(i, l)) += ctx.x(j, l);
            for (int k = 1; k <= n; ++k)
                for (int l = k; l <= n; ++l) {
                    if (k == i) img(ctx.y_index(k, l)) += ctx.y_sym(j, l);
                    if (l == i) img(ctx.y_index(k, l)) += ctx.y_sym(k, j);
                }
            break;
        case GlKind::ff:  // f_i -> f_j
            for (int k = 1; k <= n; ++k) img(ctx.x_index(k, i)) += ctx.x(k, j);
            for (int k = 1; k <= n; ++k)
                for (int l = k + 1; l <= n; ++l) {
                    if (k == i) img(ctx.z_index(k, l)) += ctx.z_alt(j, l);
                    if (l == i) img(ctx.z_index(k, l)) += ctx.z_alt(k, j);
                }
            break;
        case GlKind::fe:  // e_i -> f_j
            for (int l = 1; l <= n; ++l) img(ctx.x_index(i, l)) += ctx.z_alt(j, l);
            for (int k = 1; k <= n; ++k)
                for (int l = k; l <= n; ++l) {
                    if (k == i) img(ctx.y_index(k, l)) += ctx.x(l, j);
                    if (l == i) img(ctx.y_index(k, l)) += ctx.x(k, j);
                }
            break;
        case GlKind::ef:  // f_j -> e_i
            for (int k = 1; k <= n; ++k) img(ctx.x_index(k, j)) += ctx.y_sym(k, i);
            for (int k = 1; k <= n; ++k)
                for (int l = k + 1; l <= n; ++l) {
                    if (k == j) img(ctx.z_index(k, l)) += ctx.x(i, l);
                    if (l == j) img(ctx.z_index(k, l)) -= ctx.x(i, k);
                }
            break;
    }
    d.validate();
    return d;
}

IdealSpec maximal_ideal(const RankContext& ctx) {
    IdealSpec spec;
    spec.kind = IdealKind::m;
    int n = ctx.n;
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j)
            if (i != j) spec.generators.push_back(ctx.x(i, j));
    for (int i = 1; i <= n; ++i)
        spec.generators.push_back(ctx.x(i, i) - ctx.one());
    for (int i = 1; i <= n; ++i)
        for (int j = i; j <= n; ++j) spec.generators.push_back(ctx.y_sym(i, j));
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j) spec.generators.push_back(ctx.z_alt(i, j));
    return spec;
}

IdealSpec pn_ideal(const RankContext& ctx, int n0) {
    IdealSpec spec;
    spec.kind = IdealKind::pn;
    spec.generators = gl_module_closure(ctx, {y_product_upto(ctx, n0)});
    return spec;
}

SuperPoly y_product_upto(const RankContext& ctx, int n0) {
    if (n0 > ctx.n) throw PreconditionError("y_product: n0 exceeds rank");
    SuperMonomial m;
    for (int i = 1; i <= n0; ++i)
        for (int j = i; j <= n0; ++j) m.odds.push_back(ctx.y_index(i, j));
    std::sort(m.odds.begin(), m.odds.end());
    return SuperPoly::monomial(ctx.table, m, 1);
}

SuperPoly y_product(const RankContext& ctx) {
    return y_product_upto(ctx, ctx.n);
}

CheckReport verify_pn_top(int n) {
    CheckReport rep;
    RankContext ctx = RankContext::make(n);
    std::vector<char> allowed(ctx.table->size(), 0);
    for (int i = 1; i <= n; ++i)
        for (int j = i; j <= n; ++j) allowed[ctx.y_index(i, j)] = 1;
    BasisQuery q;
    q.central_degree = n * (n + 1);
    q.allowed = allowed;
    auto basis = graded_basis(ctx.table, q);
    if (basis.size() != 1) {
        rep.fail("y-only top component has dimension " + std::to_string(basis.size()));
        return rep;
    }
    SuperPoly top = SuperPoly::monomial(ctx.table, basis[0], 1);
    if (!(top == y_product(ctx))) rep.fail("top component differs from the y product");
    rep.note = "degree " + std::to_string(n * (n + 1)) + " y-only component";
    return rep;
}

SuperPoly x_lambda(const RankContext& ctx, const Partition& lambda) {
    if (lambda.length() > ctx.n) throw PreconditionError("x_lambda: partition too long for rank");
    SuperPoly out = ctx.one();
    for (int k = 1; k <= lambda.length(); ++k) {
        int mult = lambda.row(k) - lambda.row(k + 1);
        if (mult == 0) continue;
        // leading principal k x k minor of (x[i,j]) by Leibniz expansion
        std::vector<int> perm(k);
        for (int i = 0; i < k; ++i) perm[i] = i + 1;
        SuperPoly det = ctx.zero();
        do {
            int sign = 1;
            for (int a = 0; a < k; ++a)
                for (int b = a + 1; b < k; ++b)
                    if (perm[a] > perm[b]) sign = -sign;
            SuperPoly term = SuperPoly::constant(ctx.table, sign);
            for (int a = 1; a <= k; ++a) term = mul(term, ctx.x(a, perm[a - 1]));
            det += term;
        } while (std::next_permutation(perm.begin(), perm.end()));
        out = mul(out, pow(det, mult));
    }
    return out;
}

std::vector<int> hook_weight(const Partition& kappa, int n) {
    if (kappa.row(n + 1) > n)
        throw PreconditionError("hook_weight: partition violates the (n|n) hook condition");
    Partition t = transpose(kappa);
    std::vector<int> w(2 * n, 0);
    for (int i = 1; i <= n; ++i) w[i - 1] = kappa.row(i);
    for (int j = 1; j <= n; ++j) w[n + j - 1] = std::max(t.row(j) - n, 0);
    return w;
}

CheckReport hwv_check(const RankContext& ctx, const Partition& lambda) {
    CheckReport rep;
    int n = ctx.n;
    SuperPoly v = mul(y_product(ctx), x_lambda(ctx, lambda));
    if (v.is_zero()) {
        rep.fail("candidate vector vanishes");
        return rep;
    }
    // raising operators of the even-before-odd Borel
    for (int a = 1; a <= n; ++a)
        for (int b = 1; b <= n; ++b) {
            if (b < a) {
                if (!apply_derivation(gl_operator(ctx, GlKind::ee, a, b), v).is_zero())
                    rep.fail("not killed by e_" + std::to_string(a) + " -> e_" + std::to_string(b));
                if (!apply_derivation(gl_operator(ctx, GlKind::ff, a, b), v).is_zero())
                    rep.fail("not killed by f_" + std::to_string(a) + " -> f_" + std::to_string(b));
            }
            if (!apply_derivation(gl_operator(ctx, GlKind::ef, a, b), v).is_zero())
                rep.fail("not killed by f_" + std::to_string(b) + " -> e_" + std::to_string(a));
        }
    auto w = v.weight();
    if (!w) {
        rep.fail("vector is not weight homogeneous");
        return rep;
    }
    auto expect = hook_weight(brace(lambda, n), n);
    if (*w != expect) {
        std::ostringstream os;
        os << "weight mismatch: got (";
        for (size_t i = 0; i < w->size(); ++i) os << (i ? "," : "") << (*w)[i];
        os << ")";
        rep.fail(os.str());
    }
    rep.note = "weight target " + brace(lambda, n).str();
    return rep;
}

Rat m_residue(const RankContext& ctx, const SuperPoly& p) {
    std::vector<Rat> values(ctx.table->size(), Rat(0));
    for (int i = 1; i <= ctx.n; ++i) values[ctx.x_index(i, i)] = 1;
    return p.evaluate(values);
}

std::pair<SuperPoly, Rat> unit_ideal_element(const RankContext& ctx) {
    std::vector<std::pair<int, int>> ops;  // (i, j) for e_i -> f_j
    for (int j = 1; j <= ctx.n; ++j)
        for (int i = 1; i <= j; ++i) ops.emplace_back(i, j);
    SuperPoly v = y_product(ctx);
    for (auto it = ops.rbegin(); it != ops.rend(); ++it)
        v = apply_derivation(gl_operator(ctx, GlKind::fe, it->first, it->second), v);
    return {v, m_residue(ctx, v)};
}

std::vector<SuperPoly> gl_module_closure(const RankContext& ctx, std::vector<SuperPoly> seeds) {
    if (seeds.empty()) return {};
    auto deg = seeds.front().degree();
    if (!deg) throw PreconditionError("gl_module_closure: inhomogeneous seed");
    BasisQuery q;
    q.central_degree = *deg;
    auto basis = graded_basis(ctx.table, q);
    std::map<SuperMonomial, int> row;
    for (size_t i = 0; i < basis.size(); ++i) row[basis[i]] = static_cast<int>(i);
    auto to_vec = [&](const SuperPoly& p) {
        QVec v(basis.size(), Rat(0));
        for (const auto& [m, c] : p.terms()) v[row.at(m)] = c;
        return v;
    };

    std::vector<Superderivation> ops;
    for (int i = 1; i <= ctx.n; ++i)
        for (int j = 1; j <= ctx.n; ++j)
            for (GlKind k : {GlKind::ee, GlKind::ff, GlKind::ef, GlKind::fe})
                ops.push_back(gl_operator(ctx, k, i, j));

    Echelon ech(static_cast<int>(basis.size()));
    std::vector<SuperPoly> span;
    std::vector<SuperPoly> frontier;
    for (auto& s : seeds)
        if (ech.insert(to_vec(s))) {
            span.push_back(s);
            frontier.push_back(s);
        }
    while (!frontier.empty()) {
        std::vector<SuperPoly> next;
        for (const auto& p : frontier)
            for (const auto& op : ops) {
                SuperPoly q2 = apply_derivation(op, p);
                if (q2.is_zero()) continue;
                if (ech.insert(to_vec(q2))) {
                    span.push_back(q2);
                    next.push_back(q2);
                }
            }
        frontier = std::move(next);
    }
    return span;
}

CheckReport ess_bound_check(const RankContext& ctx, const Partition& lambda, int n0) {
    CheckReport rep;
    if (!lambda.contains(rectangle(n0, n0 + 1)))
        throw PreconditionError("ess_bound_check: lambda must contain the n0 x (n0+1) rectangle");
    std::optional<std::pair<Partition, int>> match;
    for (auto& [mu, np] : unbrace(lambda))
        if (np >= n0 && !match) match = {mu, np};
    if (!match) {
        rep.fail("lambda is not of the form brace(mu, n') with n' >= n0");
        return rep;
    }
    auto [mu, np] = *match;
    if (np > ctx.n) throw PreconditionError("ess_bound_check: rank too small to realize lambda");
    SuperPoly target = mul(y_product_upto(ctx, np), x_lambda(ctx, mu));
    IdealSpec pn = pn_ideal(ctx, n0);
    const auto& gens = pn.generators;
    auto cert = span_membership(target, gens, *target.degree());
    if (!cert.member) rep.fail("highest weight vector not in the generated component");
    std::ostringstream os;
    os << "lambda=" << lambda.str() << " = brace(" << mu.str() << "," << np
       << "), component dim " << gens.size() << ", certificate terms " << cert.combo.size();
    rep.note = os.str();
    return rep;
}

namespace {
SuperPoly random_homogeneous(const RankContext& ctx, int degree, std::mt19937_64& rng,
                             bool force_x_only_term) {
    BasisQuery q;
    q.central_degree = degree;
    auto basis = graded_basis(ctx.table, q);
    SuperPoly p = ctx.zero();
    std::uniform_int_distribution<int> coeff(-3, 3);
    std::uniform_int_distribution<size_t> pick(0, basis.size() - 1);
    int terms = 1 + static_cast<int>(rng() % 4);
    for (int t = 0; t < terms; ++t) p += SuperPoly::monomial(ctx.table, basis[pick(rng)], coeff(rng));
    if (force_x_only_term) {
        for (const auto& m : basis)
            if (m.odds.empty()) {
                p += SuperPoly::monomial(ctx.table, m, 1 + static_cast<int>(rng() % 3));
                break;
            }
    }
    return p;
}

bool in_odd_ideal(const SuperPoly& p) {
    for (const auto& [m, c] : p.terms())
        if (m.odds.empty()) return false;
    return !p.is_zero();
}
}  // namespace

CheckReport nzd_check(const RankContext& ctx, int degree_bound, uint64_t seed) {
    CheckReport rep;
    std::mt19937_64 rng(seed);

    // all monomials of central degree <= bound, as one coordinate space
    std::vector<SuperMonomial> all;
    std::map<SuperMonomial, int> row;
    for (int d = 0; d <= degree_bound; d += 2) {
        BasisQuery q;
        q.central_degree = d;
        for (auto& m : graded_basis(ctx.table, q)) {
            row[m] = static_cast<int>(all.size());
            all.push_back(m);
        }
    }

    auto kernel_dim = [&](const SuperPoly& s) {
        std::map<SuperMonomial, int> out_row;
        std::vector<QVec> cols;
        for (const auto& m : all) {
            SuperPoly prod = mul(SuperPoly::monomial(ctx.table, m, 1), s);
            cols.emplace_back();
            for (const auto& [mm, cc] : prod.terms()) out_row.emplace(mm, 0);
        }
        int nr = 0;
        for (auto& [mm, idx] : out_row) idx = nr++;
        QMat mat(all.size(), QVec(nr, Rat(0)));
        for (size_t j = 0; j < all.size(); ++j) {
            SuperPoly prod = mul(SuperPoly::monomial(ctx.table, all[j], 1), s);
            for (const auto& [mm, cc] : prod.terms()) mat[j][out_row[mm]] = cc;
        }
        // kernel of the column map = nullspace of the transpose layout
        QMat rows_mat(nr, QVec(all.size(), Rat(0)));
        for (size_t j = 0; j < all.size(); ++j)
            for (int i = 0; i < nr; ++i) rows_mat[i][j] = mat[j][i];
        return nullspace(rows_mat, static_cast<int>(all.size())).size();
    };

    // s = 1 + y[1,1] and random elements outside the odd ideal
    std::vector<SuperPoly> outside;
    outside.push_back(ctx.one() + ctx.y_sym(1, 1));
    outside.push_back(ctx.x(1, 1));
    for (int t = 0; t < 3; ++t) {
        SuperPoly s;
        do {
            s = random_homogeneous(ctx, 2 + 2 * static_cast<int>(rng() % 2), rng, true);
        } while (s.is_zero() || in_odd_ideal(s));
        outside.push_back(s);
    }
    for (const auto& s : outside) {
        if (kernel_dim(s) != 0)
            rep.fail("element outside the odd ideal has a zero divisor: " + s.str());
    }

    // elements of the odd ideal are killed by the full odd product
    SuperMonomial top;
    for (int v = 0; v < ctx.table->size(); ++v)
        if (ctx.table->var(v).parity == Parity::odd) top.odds.push_back(v);
    SuperPoly odd_top = SuperPoly::monomial(ctx.table, top, 1);
    std::vector<SuperPoly> inside;
    inside.push_back(ctx.y_sym(1, 1));
    for (int t = 0; t < 3; ++t) {
        SuperPoly s = mul(ctx.y_sym(1, 1), random_homogeneous(ctx, 2, rng, false));
        if (ctx.n >= 2) s += ctx.z_alt(1, 2);
        if (s.is_zero()) continue;
        inside.push_back(s);
    }
    for (const auto& s : inside) {
        if (!in_odd_ideal(s)) {
            rep.fail("constructed element unexpectedly outside the odd ideal");
            continue;
        }
        if (!mul(s, odd_top).is_zero())
            rep.fail("odd-ideal element not annihilated by the top odd product");
    }
    rep.note = "kernel search up to central degree " + std::to_string(degree_bound);
    return rep;
}

}  // namespace supalg
