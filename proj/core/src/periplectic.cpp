#include "supalg/periplectic.hpp"

#include <algorithm>
#include <random>
#include <sstream>

namespace supalg {

GlElement GlElement::zeros(int n) {
    GlElement g;
    g.n = n;
    g.mat.assign(2 * n, QVec(2 * n, Rat(0)));
    return g;
}

std::vector<GlElement> pe_basis(int n) {
    std::vector<GlElement> out;
    // even part: a free, d = -a^T
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            GlElement g = GlElement::zeros(n);
            g.at(i, j) = 1;
            g.at(n + j, n + i) = -1;
            out.push_back(std::move(g));
        }
    // odd part, b block symmetric
    for (int i = 0; i < n; ++i)
        for (int j = i; j < n; ++j) {
            GlElement g = GlElement::zeros(n);
            g.at(i, n + j) = 1;
            if (i != j) g.at(j, n + i) = 1;
            out.push_back(std::move(g));
        }
    // odd part, c block antisymmetric
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            GlElement g = GlElement::zeros(n);
            g.at(n + i, j) = 1;
            g.at(n + j, i) = -1;
            out.push_back(std::move(g));
        }
    return out;
}

std::vector<GlElement> borel_basis(int n) {
    std::vector<GlElement> out;
    auto unit = [&](int r, int c) {
        GlElement g = GlElement::zeros(n);
        g.at(r, c) = 1;
        return g;
    };
    for (int i = 0; i < n; ++i)
        for (int j = i; j < n; ++j) out.push_back(unit(i, j));            // a upper
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) out.push_back(unit(i, n + j));    // b strictly upper
    for (int i = 0; i < n; ++i)
        for (int j = i; j < n; ++j) out.push_back(unit(n + i, j));        // c upper
    for (int i = 0; i < n; ++i)
        for (int j = i; j < n; ++j) out.push_back(unit(n + i, n + j));    // d upper
    return out;
}

namespace {
QVec flatten(const GlElement& g) {
    QVec v;
    v.reserve(4 * g.n * g.n);
    for (const auto& row : g.mat)
        for (const Rat& x : row) v.push_back(x);
    return v;
}
}  // namespace

IwasawaReport iwasawa_check(int n) {
    IwasawaReport rep;
    rep.n = n;
    auto pb = pe_basis(n);
    auto bb = borel_basis(n);
    QMat all;
    for (const auto& g : bb) all.push_back(flatten(g));
    for (const auto& g : pb) all.push_back(flatten(g));
    rep.dim_sum = rank(all);
    rep.dim_intersection =
        static_cast<int>(bb.size() + pb.size()) - rep.dim_sum;

    // intersection elements from the nullspace of [B | -P] (as columns)
    int cells = 4 * n * n;
    int cols = static_cast<int>(bb.size() + pb.size());
    QMat system(cells, QVec(cols, Rat(0)));
    for (size_t j = 0; j < bb.size(); ++j) {
        QVec v = flatten(bb[j]);
        for (int i = 0; i < cells; ++i) system[i][j] = v[i];
    }
    for (size_t j = 0; j < pb.size(); ++j) {
        QVec v = flatten(pb[j]);
        for (int i = 0; i < cells; ++i) system[i][bb.size() + j] = -v[i];
    }
    auto null_basis = nullspace(system, cols);
    for (const auto& coeffs : null_basis) {
        GlElement m = GlElement::zeros(n);
        for (size_t j = 0; j < bb.size(); ++j)
            for (int r = 0; r < 2 * n; ++r)
                for (int c = 0; c < 2 * n; ++c) m.mat[r][c] += coeffs[j] * bb[j].mat[r][c];
        for (int r = 0; r < 2 * n; ++r)
            for (int c = 0; c < 2 * n; ++c) {
                if (r != c && m.mat[r][c] != 0) rep.intersection_diagonal = false;
                bool diag_a = (r == c && r < n);
                if (diag_a && m.mat[r + n][c + n] != -m.mat[r][c]) rep.intersection_diagonal = false;
            }
    }
    rep.pass = rep.dim_sum == 4 * n * n && rep.dim_intersection == n &&
               static_cast<int>(null_basis.size()) == n && rep.intersection_diagonal;
    return rep;
}

Rat omega_eval(char kind, int i, int j) {
    if (kind == 'x') return i == j ? 1 : 0;
    if (kind == 'y' || kind == 'z') return 0;
    throw PreconditionError("omega_eval: generator kind must be x, y or z");
}

std::string BrauerMorphism::str() const {
    std::ostringstream os;
    os << source << "->" << target;
    for (auto [a, b] : edges) os << " (" << a << ' ' << b << ')';
    bool any = false;
    for (int p = 1; p <= source; ++p)
        if (bij[p - 1] != 0) {
            os << (any ? " " : " map ") << p << ':' << bij[p - 1];
            any = true;
        }
    return os.str();
}

SignedMorphism make_morphism(int source, int target,
                             std::vector<std::pair<int, int>> ordered_edges,
                             std::vector<int> bij) {
    if (static_cast<int>(bij.size()) != source)
        throw PreconditionError("morphism bijection must cover the source");
    for (auto& [a, b] : ordered_edges) {
        if (a == b) throw PreconditionError("edge endpoints must differ");
        if (a > b) std::swap(a, b);
        if (a < 1 || b > source) throw PreconditionError("edge endpoint out of range");
    }
    if (source - 2 * static_cast<int>(ordered_edges.size()) != target)
        throw PreconditionError("morphism size mismatch: |source| - 2#edges != |target|");
    // validate disjointness and the bijection
    std::vector<char> matched(source + 1, 0);
    for (auto [a, b] : ordered_edges) {
        if (matched[a] || matched[b]) throw PreconditionError("edges must be disjoint");
        matched[a] = matched[b] = 1;
    }
    std::vector<char> hit(target + 1, 0);
    for (int p = 1; p <= source; ++p) {
        int v = bij[p - 1];
        if (matched[p]) {
            if (v != 0) throw PreconditionError("matched point cannot map under the bijection");
            continue;
        }
        if (v < 1 || v > target || hit[v]) throw PreconditionError("bijection is not a bijection");
        hit[v] = 1;
    }
    // sort edges, tracking permutation parity
    int sign = 1;
    for (size_t i = 0; i < ordered_edges.size(); ++i)
        for (size_t j = i + 1; j < ordered_edges.size(); ++j)
            if (ordered_edges[j] < ordered_edges[i]) {
                std::swap(ordered_edges[i], ordered_edges[j]);
                sign = -sign;
            }
    SignedMorphism out;
    out.sign = sign;
    out.mor.source = source;
    out.mor.target = target;
    out.mor.edges = std::move(ordered_edges);
    out.mor.bij = std::move(bij);
    return out;
}

BrauerMorphism identity_morphism(int p) {
    BrauerMorphism m;
    m.source = m.target = p;
    m.bij.resize(p);
    for (int i = 1; i <= p; ++i) m.bij[i - 1] = i;
    return m;
}

SignedMorphism compose(const BrauerMorphism& g, const BrauerMorphism& f) {
    if (f.target != g.source)
        throw PreconditionError("compose: target of f must equal source of g");
    std::vector<int> f_inv(g.source + 1, 0);
    for (int p = 1; p <= f.source; ++p)
        if (f.bij[p - 1] != 0) f_inv[f.bij[p - 1]] = p;
    std::vector<std::pair<int, int>> edges = f.edges;
    for (auto [a, b] : g.edges) edges.emplace_back(f_inv[a], f_inv[b]);
    std::vector<int> bij(f.source, 0);
    for (int p = 1; p <= f.source; ++p) {
        int v = f.bij[p - 1];
        if (v != 0 && g.bij[v - 1] != 0) bij[p - 1] = g.bij[v - 1];
    }
    return make_morphism(f.source, g.target, std::move(edges), std::move(bij));
}

Int hom_dim(int p, int q) {
    if (q > p || (p - q) % 2 != 0 || q < 0) return 0;
    long r = (p - q) / 2;
    return binomial(p, 2 * r) * odd_double_factorial(r) * factorial(q);
}

namespace {
void matchings_on(std::vector<int> pts, std::vector<std::pair<int, int>>& acc,
                  std::vector<std::vector<std::pair<int, int>>>& out) {
    if (pts.empty()) {
        out.push_back(acc);
        return;
    }
    int a = pts.front();
    for (size_t k = 1; k < pts.size(); ++k) {
        int b = pts[k];
        std::vector<int> rest;
        for (size_t t = 1; t < pts.size(); ++t)
            if (t != k) rest.push_back(pts[t]);
        acc.emplace_back(a, b);
        matchings_on(std::move(rest), acc, out);
        acc.pop_back();
    }
}
}  // namespace

std::vector<BrauerMorphism> enumerate_homs(int p, int q) {
    std::vector<BrauerMorphism> out;
    if (q > p || (p - q) % 2 != 0 || q < 0) return out;
    if (p > 10) throw GuardExceeded("hom-space enumeration capped at 10 points", hom_dim(p, q));
    int r = (p - q) / 2;
    // choose the 2r matched points
    std::vector<int> comb;
    struct Rec {
        int p, need;
        std::vector<int>& comb;
        std::vector<std::vector<int>> subsets;
        void go(int from) {
            if (static_cast<int>(comb.size()) == need) {
                subsets.push_back(comb);
                return;
            }
            for (int v = from; v <= p; ++v) {
                comb.push_back(v);
                go(v + 1);
                comb.pop_back();
            }
        }
    } rec{p, 2 * r, comb, {}};
    rec.go(1);
    for (const auto& subset : rec.subsets) {
        std::vector<std::vector<std::pair<int, int>>> ms;
        std::vector<std::pair<int, int>> acc;
        matchings_on(subset, acc, ms);
        std::vector<int> free;
        std::vector<char> used(p + 1, 0);
        for (int v : subset) used[v] = 1;
        for (int v = 1; v <= p; ++v)
            if (!used[v]) free.push_back(v);
        std::vector<int> perm(q);
        for (int i = 0; i < q; ++i) perm[i] = i + 1;
        do {
            for (const auto& edges : ms) {
                std::vector<int> bij(p, 0);
                for (int i = 0; i < q; ++i) bij[free[i] - 1] = perm[i];
                auto sm = make_morphism(p, q, edges, bij);
                out.push_back(std::move(sm.mor));  // matchings_on emits sorted-first edges
            }
        } while (std::next_permutation(perm.begin(), perm.end()));
    }
    std::sort(out.begin(), out.end());
    return out;
}

Tensor Tensor::basis(int n, const std::vector<int>& word) {
    Tensor t;
    t.n = n;
    t.slots = static_cast<int>(word.size());
    for (int v : word)
        if (v < 0 || v >= 2 * n) throw PreconditionError("tensor basis index out of range");
    t.terms[word] = 1;
    return t;
}

void Tensor::add(const std::vector<int>& word, const Rat& c) {
    if (c == 0) return;
    auto it = terms.find(word);
    if (it == terms.end()) {
        terms.emplace(word, c);
        return;
    }
    it->second += c;
    if (it->second == 0) terms.erase(it);
}

namespace {
inline int parity_of(int n, int basis_index) { return basis_index >= n ? 1 : 0; }

// omega(e_i, f_j) = omega(f_j, e_i) = delta_ij, zero on e,e and f,f
Rat omega_pair(int n, int u, int v) {
    int pu = parity_of(n, u), pv = parity_of(n, v);
    if (pu == pv) return 0;
    int iu = pu ? u - n : u;
    int iv = pv ? v - n : v;
    return iu == iv ? 1 : 0;
}
}  // namespace

Tensor k_apply(const BrauerMorphism& m, const Tensor& t) {
    if (t.slots != m.source) throw PreconditionError("k_apply: slot count mismatch");
    int n = t.n;
    Tensor out;
    out.n = n;
    out.slots = m.target;
    for (const auto& [word, coeff] : t.terms) {
        // labelled slots surviving so far
        std::vector<std::pair<int, int>> cur;  // (original label, basis index)
        cur.reserve(word.size());
        for (size_t s = 0; s < word.size(); ++s) cur.emplace_back(static_cast<int>(s) + 1, word[s]);
        Rat c = coeff;
        bool dead = false;
        for (auto [a, b] : m.edges) {
            int pa = -1, pb = -1;
            for (size_t s = 0; s < cur.size(); ++s) {
                if (cur[s].first == a) pa = static_cast<int>(s);
                if (cur[s].first == b) pb = static_cast<int>(s);
            }
            // contraction is an odd operator: it passes every factor before
            // slot pa, and the moved factor passes everything strictly between
            int sign = 1;
            for (int s = 0; s < pa; ++s)
                if (parity_of(n, cur[s].second)) sign = -sign;
            if (parity_of(n, cur[pb].second)) {
                for (int s = pa + 1; s < pb; ++s)
                    if (parity_of(n, cur[s].second)) sign = -sign;
            }
            Rat w = omega_pair(n, cur[pa].second, cur[pb].second);
            if (w == 0) {
                dead = true;
                break;
            }
            c *= w * sign;
            cur.erase(cur.begin() + pb);
            cur.erase(cur.begin() + pa);
        }
        if (dead) continue;
        // permute the survivors into bijection-target order, Koszul signs on swaps
        std::vector<std::pair<int, int>> tagged;  // (target position, basis index)
        for (auto [label, v] : cur) tagged.emplace_back(m.bij[label - 1], v);
        int sign = 1;
        for (size_t i = 0; i + 1 < tagged.size(); ++i)
            for (size_t j = 0; j + 1 < tagged.size() - i; ++j)
                if (tagged[j].first > tagged[j + 1].first) {
                    if (parity_of(n, tagged[j].second) && parity_of(n, tagged[j + 1].second))
                        sign = -sign;
                    std::swap(tagged[j], tagged[j + 1]);
                }
        std::vector<int> new_word(m.target);
        for (int i = 0; i < m.target; ++i) new_word[i] = tagged[i].second;
        out.add(new_word, c * sign);
    }
    return out;
}

Tensor k_apply(const SignedMorphism& m, const Tensor& t) {
    Tensor r = k_apply(m.mor, t);
    if (m.sign == -1) {
        Tensor neg;
        neg.n = r.n;
        neg.slots = r.slots;
        for (auto& [w, c] : r.terms) neg.terms[w] = -c;
        return neg;
    }
    return r;
}

CheckReport functor_check(int n, int max_size, int trials, uint64_t seed) {
    CheckReport rep;
    if (max_size < 2) max_size = 2;
    std::mt19937_64 rng(seed);

    auto check_triple = [&](const BrauerMorphism& g, const BrauerMorphism& f,
                            const std::vector<int>& word) {
        Tensor t = Tensor::basis(n, word);
        SignedMorphism gf = compose(g, f);
        Tensor lhs = k_apply(gf, t);
        Tensor rhs = k_apply(g, k_apply(f, t));
        if (!(lhs == rhs)) {
            std::ostringstream os;
            os << "functoriality failed: f={" << f.str() << "} g={" << g.str() << "} word=";
            for (int v : word) os << v << '.';
            rep.fail(os.str());
            return false;
        }
        return true;
    };

    // exhaustive 4 -> 2 -> 0 chains over all basis words at rank 1
    if (n >= 1) {
        auto fs = enumerate_homs(4, 2);
        auto gs = enumerate_homs(2, 0);
        std::vector<int> word(4);
        for (int w = 0; w < (n == 1 ? 16 : 0); ++w) {
            for (int s = 0; s < 4; ++s) word[s] = (w >> s) & 1;
            for (const auto& f : fs)
                for (const auto& g : gs) check_triple(g, f, word);
        }
    }

    // seeded random triples
    for (int t = 0; t < trials; ++t) {
        int p = 2 + static_cast<int>(rng() % (max_size - 1));
        std::vector<int> qs;
        for (int q = p; q >= 0; q -= 2) qs.push_back(q);
        int q = qs[rng() % qs.size()];
        std::vector<int> rs;
        for (int r2 = q; r2 >= 0; r2 -= 2) rs.push_back(r2);
        int r2 = rs[rng() % rs.size()];
        auto fs = enumerate_homs(p, q);
        auto gs = enumerate_homs(q, r2);
        if (fs.empty() || gs.empty()) continue;
        const auto& f = fs[rng() % fs.size()];
        const auto& g = gs[rng() % gs.size()];
        std::vector<int> word(p);
        for (int s = 0; s < p; ++s) word[s] = static_cast<int>(rng() % (2 * n));
        check_triple(g, f, word);
    }
    rep.note = "rank " + std::to_string(n) + ", sizes <= " + std::to_string(max_size) + ", " +
               std::to_string(trials) + " random trials";
    return rep;
}

}  // namespace supalg
