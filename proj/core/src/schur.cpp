#include "supalg/schur.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

namespace supalg {

void SchurVector::add(const Partition& p, long long c) {
    if (c == 0) return;
    auto it = entries_.find(p);
    if (it == entries_.end()) {
        entries_.emplace(p, c);
        return;
    }
    it->second += c;
    if (it->second == 0) entries_.erase(it);
}

long long SchurVector::coeff(const Partition& p) const {
    auto it = entries_.find(p);
    return it == entries_.end() ? 0 : it->second;
}

std::vector<Partition> SchurVector::support() const {
    std::vector<Partition> out;
    for (const auto& [p, c] : entries_) out.push_back(p);
    return out;
}

std::string SchurVector::str() const {
    if (entries_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [p, c] : entries_) {
        if (!first) os << " + ";
        first = false;
        os << c << "*(" << p.str() << ")";
    }
    return os.str();
}

SymPoly::SymPoly(int nvars) : nvars_(nvars) {
    if (nvars < 1 || nvars > 15) throw PreconditionError("SymPoly supports 1..15 variables");
}

uint64_t SymPoly::pack(const std::vector<int>& exps) {
    uint64_t key = 0;
    for (size_t i = 0; i < exps.size(); ++i) {
        if (exps[i] < 0 || exps[i] > 15) throw PreconditionError("SymPoly exponent out of range");
        key |= static_cast<uint64_t>(exps[i]) << (4 * i);
    }
    return key;
}

std::vector<int> SymPoly::unpack(uint64_t key) const {
    std::vector<int> exps(nvars_);
    for (int i = 0; i < nvars_; ++i) exps[i] = static_cast<int>((key >> (4 * i)) & 0xF);
    return exps;
}

void SymPoly::add_term(uint64_t key, long long c) {
    if (c == 0) return;
    auto it = terms_.find(key);
    if (it == terms_.end()) {
        terms_.emplace(key, c);
        return;
    }
    it->second += c;
    if (it->second == 0) terms_.erase(it);
}

void SymPoly::add_term(const std::vector<int>& exps, long long c) {
    add_term(pack(exps), c);
}

SymPoly SymPoly::operator*(const SymPoly& o) const {
    if (nvars_ != o.nvars_) throw PreconditionError("SymPoly variable count mismatch");
    SymPoly r(nvars_);
    for (const auto& [ka, ca] : terms_)
        for (const auto& [kb, cb] : o.terms_) {
            auto ea = unpack(ka);
            auto eb = o.unpack(kb);
            for (int i = 0; i < nvars_; ++i) ea[i] += eb[i];
            r.add_term(ea, ca * cb);
        }
    return r;
}

SymPoly& SymPoly::operator+=(const SymPoly& o) {
    if (nvars_ != o.nvars_) throw PreconditionError("SymPoly variable count mismatch");
    for (const auto& [k, c] : o.terms_) add_term(k, c);
    return *this;
}

bool SymPoly::is_symmetric() const {
    // every S_n orbit must be fully present with one coefficient
    std::unordered_map<uint64_t, long long> orbit_count;
    for (const auto& [k, c] : terms_) {
        auto e = unpack(k);
        std::sort(e.begin(), e.end(), std::greater<int>());
        uint64_t rep = pack(e);
        auto it = terms_.find(rep);
        if (it == terms_.end() || it->second != c) return false;
        orbit_count[rep]++;
    }
    for (const auto& [rep, count] : orbit_count) {
        auto e = unpack(rep);
        std::sort(e.begin(), e.end());
        long long orbit = 0;
        do {
            ++orbit;
        } while (std::next_permutation(e.begin(), e.end()));
        if (count != orbit) return false;
    }
    return true;
}

namespace {

struct LrState {
    std::vector<std::vector<int>> grid;  // values, 0 where empty
    std::vector<int> count;              // content so far, 1-indexed
    const Partition* lam;
    const Partition* mu;
    const Partition* nu;
    long long total = 0;
};

// Boxes in reverse reading order: rows top to bottom, right to left inside a
// row. The running content stays a ballot sequence.
void lr_fill(LrState& st, int r, int c) {
    const Partition& lam = *st.lam;
    const Partition& mu = *st.mu;
    const Partition& nu = *st.nu;
    if (r > nu.length()) {
        st.total++;
        return;
    }
    if (c <= lam.row(r)) {
        lr_fill(st, r + 1, nu.row(r + 1));
        return;
    }
    int right = (c < nu.row(r)) ? st.grid[r - 1][c] : 0;  // value to the right (filled earlier)
    int above = 0;
    bool has_above = r > 1 && c <= nu.row(r - 1) && c > lam.row(r - 1);
    if (has_above) above = st.grid[r - 2][c - 1];
    int max_v = mu.length();
    for (int v = 1; v <= max_v; ++v) {
        if (st.count[v] >= mu.row(v)) continue;
        if (v > 1 && st.count[v] >= st.count[v - 1]) continue;  // ballot
        if (right != 0 && v > right) continue;                  // row weakly increasing
        if (has_above && v <= above) continue;                  // column strict
        st.grid[r - 1][c - 1] = v;
        st.count[v]++;
        lr_fill(st, r, c - 1);
        st.count[v]--;
        st.grid[r - 1][c - 1] = 0;
    }
}

}  // namespace

long long lr_coefficient(const Partition& lambda, const Partition& mu, const Partition& nu) {
    if (lambda.size() + mu.size() != nu.size()) return 0;
    if (!nu.contains(lambda) || !nu.contains(mu)) return 0;
    if (mu.empty()) return lambda == nu ? 1 : 0;
    LrState st;
    st.lam = &lambda;
    st.mu = &mu;
    st.nu = &nu;
    st.grid.assign(nu.length(), std::vector<int>(nu.row(1), 0));
    st.count.assign(mu.length() + 1, 0);
    lr_fill(st, 1, nu.row(1));
    return st.total;
}

SchurVector tensor_schur(const Partition& lambda, const Partition& mu) {
    SchurVector out;
    int total = lambda.size() + mu.size();
    int max_len = lambda.length() + mu.length();
    int max_part = lambda.row(1) + mu.row(1);
    for (const Partition& nu : partitions_of(total, max_len, max_part)) {
        if (!nu.contains(lambda)) continue;
        long long c = lr_coefficient(lambda, mu, nu);
        if (c != 0) out.add(nu, c);
    }
    return out;
}

Int dim_schur(const Partition& lambda, int n) {
    if (n < 1) throw PreconditionError("dim_schur: n must be positive");
    if (lambda.length() > n) return 0;
    Partition t = transpose(lambda);
    Int num = 1, den = 1;
    for (int i = 1; i <= lambda.length(); ++i)
        for (int j = 1; j <= lambda.row(i); ++j) {
            num *= n + j - i;
            den *= (lambda.row(i) - j) + (t.row(j) - i) + 1;  // hook length
        }
    return num / den;
}

namespace {

// Successor shapes nu' with nu <= nu' <= clamp, nu'/nu a horizontal strip of
// the given size (interlacing condition nu'_{r+1} <= nu_r).
void strip_successors(const std::vector<int>& nu, const Partition& clamp, int strip,
                      std::vector<std::vector<int>>& out) {
    int rows = clamp.length();
    std::vector<int> base(rows, 0);
    for (int r = 0; r < static_cast<int>(nu.size()); ++r) base[r] = nu[r];
    struct Rec {
        const std::vector<int>& base;
        const Partition& clamp;
        int rows;
        std::vector<std::vector<int>>& out;
        std::vector<int> cur;
        void go(int r, int remaining, int prev_new) {
            if (r == rows) {
                if (remaining == 0) out.push_back(cur);
                return;
            }
            int lo = base[r];
            int hi = std::min(clamp.row(r + 1), prev_new);
            int prev_old = (r == 0) ? 1 << 20 : base[r - 1];
            hi = std::min(hi, prev_old);  // interlacing: nu'_{r} <= nu_{r-1}
            for (int v = lo; v <= hi && v - lo <= remaining; ++v) {
                if (r > 0 && v > cur[r - 1]) continue;
                cur[r] = v;
                go(r + 1, remaining - (v - lo), v);
                cur[r] = 0;
            }
        }
    } rec{base, clamp, rows, out, std::vector<int>(rows, 0)};
    rec.go(0, strip, 1 << 20);
}

}  // namespace

long long kostka(const Partition& lambda, const Partition& mu) {
    if (lambda.size() != mu.size()) return 0;
    if (lambda.empty()) return 1;
    std::map<std::vector<int>, long long> states;
    states[std::vector<int>(lambda.length(), 0)] = 1;
    for (int i = 1; i <= mu.length(); ++i) {
        std::map<std::vector<int>, long long> next;
        for (const auto& [nu, cnt] : states) {
            std::vector<std::vector<int>> succ;
            strip_successors(nu, lambda, mu.row(i), succ);
            for (auto& s : succ) next[s] += cnt;
        }
        states = std::move(next);
    }
    std::vector<int> full(lambda.length());
    for (int r = 0; r < lambda.length(); ++r) full[r] = lambda.row(r + 1);
    auto it = states.find(full);
    return it == states.end() ? 0 : it->second;
}

SymPoly schur_polynomial(const Partition& lambda, int n) {
    SymPoly out(n);
    if (lambda.length() > n) return out;
    if (lambda.empty()) {
        out.add_term(std::vector<int>(n, 0), 1);
        return out;
    }
    for (const Partition& mu : partitions_of(lambda.size(), n)) {
        long long k = kostka(lambda, mu);
        if (k == 0) continue;
        // expand the monomial symmetric function m_mu
        std::vector<int> exps(n, 0);
        for (int i = 0; i < mu.length(); ++i) exps[i] = mu.row(i + 1);
        std::sort(exps.begin(), exps.end());
        do {
            out.add_term(exps, k);
        } while (std::next_permutation(exps.begin(), exps.end()));
    }
    return out;
}

SchurVector schur_expand(const SymPoly& p, int n) {
    if (p.nvars() != n) throw PreconditionError("schur_expand: variable count mismatch");
    if (!p.is_symmetric()) throw Error("schur_expand: input is not symmetric");

    // m-basis coefficients per degree, read off the dominant orbit representatives
    std::map<int, std::map<Partition, long long>> by_degree;
    for (const auto& [k, c] : p.terms()) {
        auto raw = p.unpack(k);
        auto sorted = raw;
        std::sort(sorted.begin(), sorted.end(), std::greater<int>());
        if (raw != sorted) continue;
        int deg = 0;
        for (int v : sorted) deg += v;
        by_degree[deg][Partition(sorted)] = c;
    }

    SchurVector out;
    for (auto& [deg, mvec] : by_degree) {
        std::map<Partition, long long> residual = mvec;
        std::vector<std::pair<Partition, long long>> picked;
        while (!residual.empty()) {
            // lexicographically largest partition is dominance-maximal
            auto it = std::prev(residual.end());
            Partition lam = it->first;
            long long c = it->second;
            picked.emplace_back(lam, c);
            for (const Partition& mu : partitions_of(deg, n)) {
                long long kk = kostka(lam, mu);
                if (kk == 0) continue;
                auto jt = residual.find(mu);
                long long nv = (jt == residual.end() ? 0 : jt->second) - c * kk;
                if (nv == 0) {
                    if (jt != residual.end()) residual.erase(jt);
                } else {
                    residual[mu] = nv;
                }
            }
        }
        // reconstruction: the picked combination must reproduce the m-vector
        std::map<Partition, long long> rebuilt;
        for (const auto& [lam, c] : picked)
            for (const Partition& mu : partitions_of(deg, n)) {
                long long kk = kostka(lam, mu);
                if (kk != 0) rebuilt[mu] += c * kk;
            }
        std::erase_if(rebuilt, [](const auto& kv) { return kv.second == 0; });
        if (rebuilt != mvec) throw Error("schur_expand: reconstruction check failed");
        for (const auto& [lam, c] : picked) out.add(lam, c);
    }
    return out;
}

SymPoly elementary_of_pairs(int d, int n, bool strict) {
    if (d > 7) throw GuardExceeded("pair-monomial expansion capped at d <= 7", Int(d));
    std::vector<uint64_t> pairs;
    for (int i = 0; i < n; ++i)
        for (int j = strict ? i + 1 : i; j < n; ++j) {
            std::vector<int> e(n, 0);
            e[i]++;
            e[j]++;
            pairs.push_back(SymPoly::pack(e));
        }
    std::vector<SymPoly> coeff(d + 1, SymPoly(n));
    coeff[0].add_term(std::vector<int>(n, 0), 1);
    for (uint64_t pk : pairs)
        for (int k = d; k >= 1; --k) {
            if (coeff[k - 1].is_zero()) continue;
            for (const auto& [mk, mc] : coeff[k - 1].terms()) coeff[k].add_term(mk + pk, mc);
        }
    return coeff[d];
}

SymPoly homogeneous_of_pairs(int d, int n, bool strict) {
    if (d > 7) throw GuardExceeded("pair-monomial expansion capped at d <= 7", Int(d));
    std::vector<uint64_t> pairs;
    for (int i = 0; i < n; ++i)
        for (int j = strict ? i + 1 : i; j < n; ++j) {
            std::vector<int> e(n, 0);
            e[i]++;
            e[j]++;
            pairs.push_back(SymPoly::pack(e));
        }
    std::vector<SymPoly> coeff(d + 1, SymPoly(n));
    coeff[0].add_term(std::vector<int>(n, 0), 1);
    for (uint64_t pk : pairs)
        for (int k = 1; k <= d; ++k) {
            if (coeff[k - 1].is_zero()) continue;
            for (const auto& [mk, mc] : coeff[k - 1].terms()) coeff[k].add_term(mk + pk, mc);
        }
    return coeff[d];
}

SchurVector wedge_of_sym2(int d, int n) {
    return schur_expand(elementary_of_pairs(d, n, /*strict=*/false), n);
}

SchurVector sym_of_sym2(int d, int n) {
    return schur_expand(homogeneous_of_pairs(d, n), n);
}

SchurVector wedge_of_wedge2(int d, int n) {
    return schur_expand(elementary_of_pairs(d, n, /*strict=*/true), n);
}

SchurVector sym_of_wedge2(int d, int n) {
    return schur_expand(homogeneous_of_pairs(d, n, /*strict=*/true), n);
}

RectScanReport rect_lr_scan(int n, int k) {
    RectScanReport rep;
    rep.n = n;
    rep.k = k;
    Partition box = rectangle(n, k);
    auto shapes = partitions_in_rect(n, k);
    for (const Partition& lam : shapes) {
        auto comp = complement_in_rect(lam, n, k);
        for (const Partition& mu : shapes) {
            if (lam.size() + mu.size() != n * k) continue;
            long long c = lr_coefficient(lam, mu, box);
            long long expect = (comp && mu == *comp) ? 1 : 0;
            rep.pairs_checked++;
            if (c != expect) {
                rep.pass = false;
                rep.counterexamples.push_back("lambda=" + lam.str() + " mu=" + mu.str() +
                                              " c=" + std::to_string(c) +
                                              " expected=" + std::to_string(expect));
            }
        }
    }
    return rep;
}

}  // namespace supalg
