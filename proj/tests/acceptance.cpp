// Acceptance suite: one line per criterion, exit 0 only if all pass.
// argv[1] must be the path to the supalg CLI (used by the determinism check).

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>
#include <vector>

#include "supalg/borel.hpp"
#include "supalg/koszul.hpp"
#include "supalg/partition.hpp"
#include "supalg/periplectic.hpp"
#include "supalg/schur.hpp"
#include "supalg/tca.hpp"

using namespace supalg;
using Clock = std::chrono::steady_clock;

namespace {

int failures = 0;

void report(int criterion, const std::string& what, bool pass, double seconds,
            const std::string& detail = "") {
    printf("[%s] criterion %2d: %s (%.2fs)%s%s\n", pass ? "PASS" : "FAIL", criterion,
           what.c_str(), seconds, detail.empty() ? "" : " -- ", detail.c_str());
    fflush(stdout);
    if (!pass) ++failures;
}

template <typename F>
void run(int criterion, const std::string& what, F body) {
    auto t0 = Clock::now();
    bool pass = false;
    std::string detail;
    try {
        pass = body(detail);
    } catch (const std::exception& e) {
        detail = std::string("exception: ") + e.what();
    }
    report(criterion, what, pass, std::chrono::duration<double>(Clock::now() - t0).count(),
           detail);
}

// ---- criterion 7 support: indexed composition tables --------------------

struct HomIndex {
    std::vector<BrauerMorphism> basis;
    std::map<BrauerMorphism, int> index;
};

HomIndex make_index(int p, int q) {
    HomIndex h;
    h.basis = enumerate_homs(p, q);
    for (size_t i = 0; i < h.basis.size(); ++i) h.index[h.basis[i]] = static_cast<int>(i);
    return h;
}

// code = sign * (index + 1)
std::vector<int32_t> composition_table(const HomIndex& hpq, const HomIndex& hqr,
                                       const HomIndex& hpr) {
    std::vector<int32_t> code(hpq.basis.size() * hqr.basis.size());
    for (size_t fi = 0; fi < hpq.basis.size(); ++fi)
        for (size_t gi = 0; gi < hqr.basis.size(); ++gi) {
            SignedMorphism gf = compose(hqr.basis[gi], hpq.basis[fi]);
            int idx = hpr.index.at(gf.mor);
            code[fi * hqr.basis.size() + gi] = gf.sign * (idx + 1);
        }
    return code;
}

}  // namespace

int main(int argc, char** argv) {
    std::string cli = argc > 1 ? argv[1] : "";

    run(1, "diagonal-hook support of wedge^d(sym^2), 2d <= 12, n <= 6", [](std::string& detail) {
        for (int n = 2; n <= 6; ++n)
            for (int d = 0; 2 * d <= 12; ++d) {
                SchurVector got = wedge_of_sym2(d, n);
                SchurVector expect;
                Q1List q1 = q1_of_size(2 * d);
                for (const auto& lam : q1.items)
                    if (lam.length() <= n) expect.add(lam, 1);
                if (!(got == expect)) {
                    detail = "mismatch at d=" + std::to_string(d) + " n=" + std::to_string(n);
                    return false;
                }
            }
        return true;
    });

    run(2, "top y-only component one-dimensional, n <= 4", [](std::string& detail) {
        for (int n = 1; n <= 4; ++n) {
            CheckReport rep = verify_pn_top(n);
            if (!rep.pass) {
                detail = "n=" + std::to_string(n);
                return false;
            }
        }
        return true;
    });

    run(3, "unit-ideal element has nonzero residue, n <= 3", [](std::string& detail) {
        std::ostringstream os;
        for (int n = 1; n <= 3; ++n) {
            auto [v, residue] = unit_ideal_element(RankContext::make(n));
            if (residue == 0) {
                detail = "residue vanished at n=" + std::to_string(n);
                return false;
            }
            os << (n > 1 ? ", " : "") << "n=" << n << ": " << rat_str(residue);
        }
        detail = "residues " + os.str();
        return true;
    });

    run(4, "highest-weight vectors for |lambda| <= 3, n <= 2", [](std::string& detail) {
        for (int n = 1; n <= 2; ++n)
            for (int m = 0; m <= 3; ++m)
                for (const Partition& lam : partitions_of(m, n))
                    if (!hwv_check(RankContext::make(n), lam).pass) {
                        detail = "lambda=" + lam.str() + " n=" + std::to_string(n);
                        return false;
                    }
        return true;
    });

    run(5, "borel + periplectic dimension counts, n <= 6", [](std::string& detail) {
        for (int n = 1; n <= 6; ++n) {
            auto rep = iwasawa_check(n);
            if (!rep.pass || rep.dim_sum != 4 * n * n || rep.dim_intersection != n) {
                detail = "n=" + std::to_string(n);
                return false;
            }
        }
        return true;
    });

    run(6, "rectangle complement biconditional, n,k <= 4", [](std::string& detail) {
        long long pairs = 0;
        for (int n = 1; n <= 4; ++n)
            for (int k = 1; k <= 4; ++k) {
                auto rep = rect_lr_scan(n, k);
                pairs += rep.pairs_checked;
                if (!rep.pass) {
                    detail = rep.counterexamples.front();
                    return false;
                }
            }
        detail = std::to_string(pairs) + " pairs";
        return true;
    });

    run(7, "signed category: sign relation, exhaustive associativity |L| <= 6, functoriality",
        [](std::string& detail) {
            // orientation reversal on every 2-edge matching of 4 and 6 points
            for (int p : {4, 6})
                for (const auto& m : enumerate_homs(p, p - 4)) {
                    if (m.edges.size() != 2) continue;
                    auto flipped =
                        make_morphism(m.source, m.target, {m.edges[1], m.edges[0]}, m.bij);
                    if (!(flipped.mor == m) || flipped.sign != -1) {
                        detail = "orientation sign failed on " + m.str();
                        return false;
                    }
                }

            // exhaustive associativity via composition tables
            std::map<std::pair<int, int>, HomIndex> homs;
            for (int p = 0; p <= 6; ++p)
                for (int q = p % 2; q <= p; q += 2) homs[{p, q}] = make_index(p, q);
            std::map<std::tuple<int, int, int>, std::vector<int32_t>> tables;
            for (int p = 0; p <= 6; ++p)
                for (int q = p % 2; q <= p; q += 2)
                    for (int r = q % 2; r <= q; r += 2)
                        tables[{p, q, r}] =
                            composition_table(homs[{p, q}], homs[{q, r}], homs[{p, r}]);
            long long checked = 0;
            for (int p = 0; p <= 6; ++p)
                for (int q = p % 2; q <= p; q += 2)
                    for (int r = q % 2; r <= q; r += 2)
                        for (int s = r % 2; s <= r; s += 2) {
                            const auto& tab_pqr = tables[{p, q, r}];
                            const auto& tab_prs = tables[{p, r, s}];
                            const auto& tab_qrs = tables[{q, r, s}];
                            const auto& tab_pqs = tables[{p, q, s}];
                            size_t nf = homs[{p, q}].basis.size();
                            size_t ng = homs[{q, r}].basis.size();
                            size_t nh = homs[{r, s}].basis.size();
                            size_t ns = homs[{q, s}].basis.size();
                            for (size_t fi = 0; fi < nf; ++fi)
                                for (size_t gi = 0; gi < ng; ++gi) {
                                    int32_t gf = tab_pqr[fi * ng + gi];
                                    int gf_idx = std::abs(gf) - 1;
                                    int gf_sgn = gf < 0 ? -1 : 1;
                                    for (size_t hi = 0; hi < nh; ++hi) {
                                        int32_t left = tab_prs[gf_idx * nh + hi];
                                        int32_t hg = tab_qrs[gi * nh + hi];
                                        int hg_idx = std::abs(hg) - 1;
                                        int32_t right = tab_pqs[fi * ns + hg_idx];
                                        int lhs = gf_sgn * left;
                                        int rhs = (hg < 0 ? -1 : 1) * right;
                                        ++checked;
                                        if (lhs != rhs) {
                                            detail = "assoc failed at sizes " +
                                                     std::to_string(p) + "," + std::to_string(q) +
                                                     "," + std::to_string(r) + "," +
                                                     std::to_string(s);
                                            return false;
                                        }
                                    }
                                }
                        }

            // functoriality: exhaustive basis chains at n=1, seeded triples at n=2
            if (!functor_check(1, 4, 100, 2027).pass) {
                detail = "functoriality failed at n=1";
                return false;
            }
            if (!functor_check(2, 6, 200, 2026).pass) {
                detail = "functoriality failed at n=2";
                return false;
            }
            detail = std::to_string(checked) + " associativity triples";
            return true;
        });

    run(8, "leading terms distinct: table at n <= 3, scans (n=2, d<=4) and (n=3, d<=3)",
        [](std::string& detail) {
            for (int n = 1; n <= 3; ++n) {
                BbarContext ctx = BbarContext::make(n);
                MonomialOrder order(ctx);
                for (int i = 1; i <= n; ++i)
                    for (int j = i; j <= n; ++j) {
                        auto eq = [&](GenKind kind, int a, int b, const SuperPoly& want) {
                            return leading_term(order, phi_image(ctx, kind, a, b)) ==
                                   want.terms().begin()->first;
                        };
                        bool ok = eq(GenKind::X, i, j, mul(ctx.a(i, i), ctx.d(i, j))) &&
                                  eq(GenKind::Y, i, j, mul(ctx.a(i, i), ctx.c(i, j)));
                        if (i < j)
                            ok = ok && eq(GenKind::X, j, i, mul(ctx.a(i, j), ctx.d(i, i))) &&
                                 eq(GenKind::Z, i, j, mul(ctx.d(i, i), ctx.b(i, j)));
                        if (!ok) {
                            detail = "leading-term table failed at n=" + std::to_string(n);
                            return false;
                        }
                    }
            }
            if (!injectivity_scan(BbarContext::make(2), 4).pass) {
                detail = "scan n=2 degree 4";
                return false;
            }
            if (!injectivity_scan(BbarContext::make(3), 3).pass) {
                detail = "scan n=3 degree 3";
                return false;
            }
            return true;
        });

    run(9, "cleared-denominator identities, n <= 3", [](std::string& detail) {
        for (int n = 1; n <= 3; ++n)
            if (!localization_identities_check(BbarContext::make(n)).pass) {
                detail = "n=" + std::to_string(n);
                return false;
            }
        return true;
    });

    run(10, "kernel of the contraction equals the maximal ideal, degrees <= 6, n <= 2",
        [](std::string& detail) {
            for (int n = 1; n <= 2; ++n)
                if (!extension_contraction_check(BbarContext::make(n), RankContext::make(n), 6)
                         .pass) {
                    detail = "n=" + std::to_string(n);
                    return false;
                }
            return true;
        });

    run(11, "ext multiplicity counts and the flagged transpose discrepancy",
        [](std::string& detail) {
            RemarkReport rep = remark_report(6);
            if (!rep.pass) {
                detail = rep.failures.empty() ? "remark failures" : rep.failures.front();
                return false;
            }
            bool flagged = false;
            for (const auto& line : rep.lines)
                if (line.label == "wedge2_of_sym2" && line.discrepancy) flagged = true;
            // the discrepancy must be reported, not silently fixed and not fatal
            if (!flagged) {
                detail = "transpose discrepancy line missing";
                return false;
            }
            const SchurVector& w2 = pairing_object(Side::Sym, 2);
            if (w2.coeff(Partition({3, 1})) != 1 || w2.entries().size() != 1) {
                detail = "wedge^2(sym^2) oracle value changed";
                return false;
            }
            detail = "sym^2(sym^2) = (4) + (2,2); counts 1 vs 2 partitions at mu=empty, i=2";
            return true;
        });

    run(12, "binomial vs diagonal-hook dimension sum, 2d <= 10, n <= 4", [](std::string& detail) {
        for (int n = 1; n <= 4; ++n)
            for (int d = 0; 2 * d <= 10; ++d) {
                Int lhs = binomial(n * (n + 1) / 2, d);
                Int rhs = 0;
                Q1List q1 = q1_of_size(2 * d);
                for (const auto& lam : q1.items) rhs += dim_schur(lam, n);
                if (lhs != rhs) {
                    detail = "n=" + std::to_string(n) + " d=" + std::to_string(d);
                    return false;
                }
            }
        return true;
    });

    run(13, "verify-all --profile quick is byte-deterministic", [&](std::string& detail) {
        if (cli.empty()) {
            detail = "cli path not provided (pass it as argv[1])";
            return false;
        }
        std::string out1 = "acceptance_quick_1.json";
        std::string out2 = "acceptance_quick_2.json";
        std::string base = "\"" + cli + "\" verify-all --profile quick --seed 999 --format json";
        if (std::system((base + " --out " + out1).c_str()) != 0) {
            detail = "first run failed";
            return false;
        }
        if (std::system((base + " --out " + out2).c_str()) != 0) {
            detail = "second run failed";
            return false;
        }
        std::ifstream f1(out1, std::ios::binary), f2(out2, std::ios::binary);
        std::stringstream s1, s2;
        s1 << f1.rdbuf();
        s2 << f2.rdbuf();
        std::remove(out1.c_str());
        std::remove(out2.c_str());
        if (s1.str().empty() || s1.str() != s2.str()) {
            detail = "reports differ or are empty";
            return false;
        }
        detail = std::to_string(s1.str().size()) + " bytes, identical";
        return true;
    });

    printf("%s: %d of 13 criteria passed\n", failures == 0 ? "ACCEPTANCE PASS" : "ACCEPTANCE FAIL",
           13 - failures);
    return failures == 0 ? 0 : 1;
}
