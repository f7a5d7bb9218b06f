// Command-line driver for the verification suites and the individual
// operations. See README.md for the subcommand and diagram grammar.

#include <CLI11.hpp>

#include <atomic>
#include <chrono>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <thread>

#include "supalg/borel.hpp"
#include "supalg/koszul.hpp"
#include "supalg/partition.hpp"
#include "supalg/periplectic.hpp"
#include "supalg/report.hpp"
#include "supalg/schur.hpp"
#include "supalg/tca.hpp"

using namespace supalg;

namespace {

constexpr int kExitPass = 0;
constexpr int kExitFail = 2;
constexpr int kExitGuard = 3;
constexpr int kExitUsage = 64;

struct Options {
    std::string format = "text";
    std::string out;
    uint64_t seed = 12345;
    bool timing = false;
};

using Clock = std::chrono::steady_clock;

SuiteResult timed(const std::string& suite, std::map<std::string, std::string> params,
                  const std::string& anchor, const std::function<void(SuiteResult&)>& body) {
    SuiteResult r;
    r.suite = suite;
    r.params = std::move(params);
    r.anchor = anchor;
    r.status = "pass";
    auto t0 = Clock::now();
    body(r);
    r.seconds = std::chrono::duration<double>(Clock::now() - t0).count();
    return r;
}

void absorb(SuiteResult& r, const CheckReport& rep) {
    if (!rep.pass) r.status = "fail";
    for (const auto& w : rep.witnesses) r.witnesses.push_back(w);
    if (!rep.note.empty()) r.witnesses.push_back(rep.note);
}

int emit(const Options& opt, std::vector<SuiteResult> results) {
    bool any_fail = false;
    for (auto& r : results) {
        enforce_witness_invariant(r);
        if (r.status == "fail") any_fail = true;
    }
    std::string text = opt.format == "json" ? report_json(results, opt.timing)
                                            : report_text(results);
    if (!opt.out.empty()) {
        std::ofstream f(opt.out, std::ios::binary);
        f << text;
    } else {
        std::cout << text;
    }
    return any_fail ? kExitFail : kExitPass;
}

// ---- suite bodies -------------------------------------------------------

SuiteResult suite_q1(int size) {
    return timed("q1", {{"size", std::to_string(size)}}, "sec:2.3", [&](SuiteResult& r) {
        Q1List list = q1_of_size(size);
        if (list.odd_size_warning) {
            r.status = "warn";
            r.witnesses.push_back("odd size: every diagonal-hook partition has even size");
        }
        for (const auto& p : list.items) r.witnesses.push_back(p.str());
    });
}

SuiteResult suite_lr(const Partition& lam, const Partition& mu, const Partition& nu) {
    return timed("lr", {{"lambda", lam.str()}, {"mu", mu.str()}, {"nu", nu.str()}},
                 "lem:LR-rect", [&](SuiteResult& r) {
                     r.witnesses.push_back(std::to_string(lr_coefficient(lam, mu, nu)));
                 });
}

SuiteResult suite_rect(int n, int k) {
    return timed("rect", {{"n", std::to_string(n)}, {"k", std::to_string(k)}}, "lem:LR-rect",
                 [&](SuiteResult& r) {
                     auto rep = rect_lr_scan(n, k);
                     if (!rep.pass) r.status = "fail";
                     for (const auto& c : rep.counterexamples) r.witnesses.push_back(c);
                     r.witnesses.push_back(std::to_string(rep.pairs_checked) + " pairs checked");
                 });
}

SuiteResult suite_decompose(const std::string& op, int d, int n) {
    return timed("decompose",
                 {{"op", op}, {"d", std::to_string(d)}, {"n", std::to_string(n)}}, "sec:2.3",
                 [&](SuiteResult& r) {
                     SchurVector v = op == "wedge" ? wedge_of_sym2(d, n) : sym_of_sym2(d, n);
                     for (const auto& [p, c] : v.entries())
                         r.witnesses.push_back("{\"partition\": \"" + p.str() +
                                               "\", \"coeff\": " + std::to_string(c) + "}");
                     if (op == "wedge") {
                         // support must be the diagonal-hook family, multiplicity one
                         SchurVector expect;
                         Q1List q1 = q1_of_size(2 * d);
                         for (const auto& p : q1.items)
                             if (p.length() <= n) expect.add(p, 1);
                         if (!(v == expect)) {
                             r.status = "fail";
                             r.witnesses.push_back("support differs from the diagonal-hook family");
                         }
                     }
                 });
}

SuiteResult suite_pn_top(int n) {
    return timed("pn-top", {{"n", std::to_string(n)}}, "lem:pn-gen",
                 [&](SuiteResult& r) { absorb(r, verify_pn_top(n)); });
}

SuiteResult suite_unit_ideal(int n) {
    return timed("unit-ideal", {{"n", std::to_string(n)}}, "prop:unitideal",
                 [&](SuiteResult& r) {
                     RankContext ctx = RankContext::make(n);
                     auto [v, residue] = unit_ideal_element(ctx);
                     r.witnesses.push_back("residue " + rat_str(residue) + " from " +
                                           std::to_string(v.term_count()) + " terms");
                     r.witnesses.push_back("odd lowering operators read as e_i -> f_j");
                     if (residue == 0) {
                         r.status = "fail";
                         r.witnesses.push_back("residue vanished");
                     }
                 });
}

SuiteResult suite_hwv(const Partition& lam, int n) {
    return timed("hwv", {{"lambda", lam.str()}, {"n", std::to_string(n)}}, "lem:lambda-hw",
                 [&](SuiteResult& r) { absorb(r, hwv_check(RankContext::make(n), lam)); });
}

SuiteResult suite_ess_bound(const Partition& lam, int n0) {
    return timed("ess-bound", {{"lambda", lam.str()}, {"n0", std::to_string(n0)}},
                 "cor:ess-bound", [&](SuiteResult& r) {
                     int rank = n0;
                     for (auto& [mu, np] : unbrace(lam)) rank = std::max(rank, np);
                     absorb(r, ess_bound_check(RankContext::make(rank), lam, n0));
                 });
}

SuiteResult suite_iwasawa(int n) {
    return timed("iwasawa", {{"n", std::to_string(n)}}, "lem:iwasawa", [&](SuiteResult& r) {
        auto rep = iwasawa_check(n);
        if (!rep.pass) r.status = "fail";
        r.witnesses.push_back("dim(b+pe) = " + std::to_string(rep.dim_sum) +
                              ", dim intersection = " + std::to_string(rep.dim_intersection));
    });
}

SignedMorphism parse_morphism(const std::string& text) {
    // grammar: "p->q (a b)(c d)... map s:t u:v ..." — edges in orientation
    // order, adjacent parentheses allowed
    std::string spaced;
    for (char ch : text) {
        if (ch == '(' || ch == ')') {
            spaced += ' ';
            spaced += ch;
            spaced += ' ';
        } else {
            spaced += ch;
        }
    }
    std::istringstream in(spaced);
    std::string head;
    in >> head;
    auto arrow = head.find("->");
    if (arrow == std::string::npos)
        throw PreconditionError("diagram must start with p->q");
    int p = std::stoi(head.substr(0, arrow));
    int q = std::stoi(head.substr(arrow + 2));
    std::vector<std::pair<int, int>> edges;
    std::vector<int> bij(p, 0);
    std::string tok;
    bool in_map = false;
    while (in >> tok) {
        if (tok == "map") {
            in_map = true;
            continue;
        }
        if (!in_map) {
            if (tok != "(") throw PreconditionError("expected (a b) edge, got: " + tok);
            std::string a_tok, b_tok, close;
            if (!(in >> a_tok >> b_tok >> close) || close != ")")
                throw PreconditionError("edges look like (a b)");
            edges.emplace_back(std::stoi(a_tok), std::stoi(b_tok));
        } else {
            auto colon = tok.find(':');
            if (colon == std::string::npos) throw PreconditionError("map entries look like s:t");
            int s = std::stoi(tok.substr(0, colon));
            int t = std::stoi(tok.substr(colon + 1));
            if (s < 1 || s > p) throw PreconditionError("map source out of range");
            bij[s - 1] = t;
        }
    }
    return make_morphism(p, q, std::move(edges), std::move(bij));
}

SuiteResult suite_brauer_compose(const std::string& f_text, const std::string& g_text) {
    return timed("brauer-compose", {{"f", f_text}, {"g", g_text}}, "sec:3",
                 [&](SuiteResult& r) {
                     SignedMorphism f = parse_morphism(f_text);
                     SignedMorphism g = parse_morphism(g_text);
                     SignedMorphism gf = compose(g.mor, f.mor);
                     int sign = gf.sign * f.sign * g.sign;
                     r.witnesses.push_back((sign < 0 ? std::string("-") : std::string("+")) +
                                           " " + gf.mor.str());
                 });
}

SuiteResult suite_brauer_homdim(int p, int q) {
    return timed("brauer-homdim", {{"p", std::to_string(p)}, {"q", std::to_string(q)}}, "sec:3",
                 [&](SuiteResult& r) { r.witnesses.push_back(hom_dim(p, q).get_str()); });
}

SuiteResult suite_brauer_functor(int n, int max_size, int trials, uint64_t seed) {
    return timed("brauer-functor",
                 {{"n", std::to_string(n)},
                  {"max_size", std::to_string(max_size)},
                  {"trials", std::to_string(trials)},
                  {"seed", std::to_string(seed)}},
                 "sec:3", [&](SuiteResult& r) { absorb(r, functor_check(n, max_size, trials, seed)); });
}

SuiteResult suite_phi_leading(int n) {
    return timed("phi-leading", {{"n", std::to_string(n)}}, "prop:phi-inj", [&](SuiteResult& r) {
        BbarContext ctx = BbarContext::make(n);
        MonomialOrder order(ctx);
        auto lt_name = [&](const SuperMonomial& m) {
            return SuperPoly::monomial(ctx.table, m, 1).str();
        };
        for (int i = 1; i <= n; ++i)
            for (int j = i; j <= n; ++j) {
                SuperMonomial lt = leading_term(order, phi_image(ctx, GenKind::X, i, j));
                bool ok = lt == mul(ctx.a(i, i), ctx.d(i, j)).terms().begin()->first;
                if (!ok) r.status = "fail";
                r.witnesses.push_back("LT(X[" + std::to_string(i) + "," + std::to_string(j) +
                                      "]) = " + lt_name(lt));
                if (i < j) {
                    SuperMonomial ltr = leading_term(order, phi_image(ctx, GenKind::X, j, i));
                    if (!(ltr == mul(ctx.a(i, j), ctx.d(i, i)).terms().begin()->first))
                        r.status = "fail";
                    r.witnesses.push_back("LT(X[" + std::to_string(j) + "," + std::to_string(i) +
                                          "]) = " + lt_name(ltr));
                    SuperMonomial ltz = leading_term(order, phi_image(ctx, GenKind::Z, i, j));
                    if (!(ltz == mul(ctx.d(i, i), ctx.b(i, j)).terms().begin()->first))
                        r.status = "fail";
                    r.witnesses.push_back("LT(Z[" + std::to_string(i) + "," + std::to_string(j) +
                                          "]) = " + lt_name(ltz));
                }
                SuperMonomial lty = leading_term(order, phi_image(ctx, GenKind::Y, i, j));
                if (!(lty == mul(ctx.a(i, i), ctx.c(i, j)).terms().begin()->first))
                    r.status = "fail";
                r.witnesses.push_back("LT(Y[" + std::to_string(i) + "," + std::to_string(j) +
                                      "]) = " + lt_name(lty));
            }
    });
}

SuiteResult suite_phi_inject(int n, int degree) {
    return timed("phi-inject", {{"n", std::to_string(n)}, {"degree", std::to_string(degree)}},
                 "prop:phi-inj",
                 [&](SuiteResult& r) { absorb(r, injectivity_scan(BbarContext::make(n), degree)); });
}

SuiteResult suite_phi_localize(int n) {
    return timed("phi-localize", {{"n", std::to_string(n)}}, "prop:phiA", [&](SuiteResult& r) {
        absorb(r, localization_identities_check(BbarContext::make(n)));
    });
}

SuiteResult suite_phi_extend(int n, int degree) {
    return timed("phi-extend", {{"n", std::to_string(n)}, {"degree", std::to_string(degree)}},
                 "prop:extended", [&](SuiteResult& r) {
                     absorb(r, extension_contraction_check(BbarContext::make(n),
                                                           RankContext::make(n), degree));
                 });
}

SuiteResult suite_phi_t_invariance(int n) {
    return timed("phi-t-invariance", {{"n", std::to_string(n)}}, "sec:5.1", [&](SuiteResult& r) {
        absorb(r, t_invariance_check(BbarContext::make(n)));
    });
}

SuiteResult suite_ext(const std::string& side, int i, const Partition& lam, const Partition& mu) {
    return timed("ext",
                 {{"side", side},
                  {"i", std::to_string(i)},
                  {"lambda", lam.str()},
                  {"mu", mu.str()}},
                 "rmk:error", [&](SuiteResult& r) {
                     ExtQuery q{side == "sym" ? Side::Sym : Side::Wedge, i, lam, mu};
                     ExtReport rep = ext_dim(q);
                     r.witnesses.push_back("multiplicity " + std::to_string(rep.multiplicity) +
                                           " (oracle rank " + std::to_string(rep.oracle_rank) +
                                           (rep.stable ? ", stable)" : ", unstable)"));
                     r.witnesses.push_back(rep.note);
                 });
}

SuiteResult suite_remark(int dmax) {
    return timed("remark", {{"dmax", std::to_string(dmax)}}, "rmk:error", [&](SuiteResult& r) {
        RemarkReport rep = remark_report(dmax);
        if (!rep.pass) r.status = "fail";
        for (const auto& line : rep.lines)
            r.witnesses.push_back(line.label + ": " + line.value +
                                  (line.discrepancy ? " [flagged]" : ""));
        for (const auto& f : rep.failures) r.witnesses.push_back("failure: " + f);
    });
}

SuiteResult suite_nzd(int n, int degree, uint64_t seed) {
    return timed("nzd", {{"n", std::to_string(n)}, {"degree", std::to_string(degree)}},
                 "lem:NZD", [&](SuiteResult& r) {
                     absorb(r, nzd_check(RankContext::make(n), degree, seed));
                 });
}

SuiteResult suite_dim_consistency(int max_n, int max_2d) {
    return timed("dim-consistency",
                 {{"max_n", std::to_string(max_n)}, {"max_2d", std::to_string(max_2d)}},
                 "sec:2.3", [&](SuiteResult& r) {
                     for (int n = 1; n <= max_n; ++n)
                         for (int d = 0; 2 * d <= max_2d; ++d) {
                             Int lhs = binomial(n * (n + 1) / 2, d);
                             Int rhs = 0;
                             Q1List q1 = q1_of_size(2 * d);
                             for (const auto& lam : q1.items) rhs += dim_schur(lam, n);
                             if (lhs != rhs) {
                                 r.status = "fail";
                                 r.witnesses.push_back("n=" + std::to_string(n) +
                                                       " d=" + std::to_string(d) + ": " +
                                                       lhs.get_str() + " vs " + rhs.get_str());
                             }
                         }
                 });
}

std::vector<SuiteResult> run_profile(const std::string& profile, uint64_t seed) {
    bool quick = profile == "quick";
    std::vector<std::function<SuiteResult()>> jobs;

    int nmax = quick ? 2 : 4;
    int schur_n = quick ? 2 : 6;
    int dmax_2d = quick ? 8 : 12;

    for (int n = 2; n <= schur_n; ++n)
        for (int d = 0; 2 * d <= dmax_2d; ++d)
            jobs.push_back([=] { return suite_decompose("wedge", d, n); });
    for (int n = 1; n <= (quick ? 2 : 4); ++n)
        for (int k = 1; k <= (quick ? 2 : 4); ++k)
            jobs.push_back([=] { return suite_rect(n, k); });
    for (int n = 1; n <= nmax; ++n) jobs.push_back([=] { return suite_pn_top(n); });
    for (int n = 1; n <= (quick ? 2 : 3); ++n) jobs.push_back([=] { return suite_unit_ideal(n); });
    for (int n = 1; n <= 2; ++n)
        for (int m = 0; m <= 3; ++m)
            for (const Partition& lam : partitions_of(m, n))
                jobs.push_back([=] { return suite_hwv(lam, n); });
    jobs.push_back([] { return suite_ess_bound(Partition({2}), 1); });
    jobs.push_back([] { return suite_ess_bound(Partition({3, 1}), 1); });
    jobs.push_back([] { return suite_ess_bound(Partition({3, 3}), 1); });
    for (int n = 1; n <= (quick ? 2 : 6); ++n) jobs.push_back([=] { return suite_iwasawa(n); });
    jobs.push_back([=] { return suite_brauer_functor(1, 4, quick ? 50 : 100, seed); });
    jobs.push_back([=] { return suite_brauer_functor(2, quick ? 5 : 6, quick ? 100 : 200, seed + 1); });
    for (int n = 1; n <= (quick ? 2 : 3); ++n) {
        jobs.push_back([=] { return suite_phi_leading(n); });
        jobs.push_back([=] { return suite_phi_localize(n); });
        jobs.push_back([=] { return suite_phi_t_invariance(n); });
    }
    jobs.push_back([=] { return suite_phi_inject(2, quick ? 3 : 4); });
    if (!quick) jobs.push_back([] { return suite_phi_inject(3, 3); });
    for (int n = 1; n <= 2; ++n)
        jobs.push_back([=] { return suite_phi_extend(n, quick ? 4 : 6); });
    jobs.push_back([=] { return suite_remark(quick ? 3 : 6); });
    jobs.push_back([=] { return suite_dim_consistency(quick ? 2 : 4, quick ? 8 : 10); });
    for (int n = 1; n <= 2; ++n)
        jobs.push_back([=] { return suite_nzd(n, quick ? 4 : 6, seed + n); });

    // worker pool; results land at fixed indices so the merge is deterministic
    size_t workers = 1;
    if (const char* env = std::getenv("SUPALG_WORKERS")) {
        workers = std::max(1, std::atoi(env));
    } else {
        workers = std::max(1u, std::thread::hardware_concurrency());
    }
    workers = std::min(workers, jobs.size());
    std::vector<SuiteResult> results(jobs.size());
    std::atomic<size_t> next{0};
    auto worker = [&] {
        while (true) {
            size_t i = next.fetch_add(1);
            if (i >= jobs.size()) break;
            results[i] = jobs[i]();
        }
    };
    if (workers <= 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        for (size_t w = 0; w < workers; ++w) pool.emplace_back(worker);
        for (auto& t : pool) t.join();
    }
    return results;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"supalg: exact super-commutative algebra and Schur combinatorics toolkit"};
    app.require_subcommand(1);
    Options opt;
    app.add_option("--format", opt.format, "Output format: text or json")
        ->check(CLI::IsMember({"text", "json"}));
    app.add_option("--out", opt.out, "Write the report to a file");
    app.add_option("--seed", opt.seed, "Seed for randomized suites");
    app.add_flag("--timing", opt.timing, "Include timings in JSON output");

    int size = 0, n = 1, k = 1, d = 0, n0 = 1, p = 0, q = 0, i = 0, degree = 2;
    int trials = 100, max_size = 5, dmax = 4;
    std::string lambda_s = "-", mu_s = "-", nu_s = "-", op_s = "wedge", side = "sym";
    std::string f_text, g_text, profile = "quick";

    auto* q1 = app.add_subcommand("q1", "Diagonal-hook partitions of one size");
    q1->add_option("--size", size)->required();

    auto* lr = app.add_subcommand("lr", "Littlewood-Richardson coefficient");
    lr->add_option("--lambda", lambda_s)->required();
    lr->add_option("--mu", mu_s)->required();
    lr->add_option("--nu", nu_s)->required();

    auto* rect = app.add_subcommand("rect", "Rectangle complement scan");
    rect->add_option("--n", n)->required();
    rect->add_option("--k", k)->required();

    auto* dec = app.add_subcommand("decompose", "Schur expansion of wedge^d/sym^d of sym^2");
    dec->add_option("--op", op_s)->check(CLI::IsMember({"wedge", "sym"}))->required();
    dec->add_option("--d", d)->required();
    dec->add_option("--n", n)->required();

    auto* pn = app.add_subcommand("pn-top", "Top y-only component is one-dimensional");
    pn->add_option("--n", n)->required();

    auto* ui = app.add_subcommand("unit-ideal", "Unit-ideal element and its residue");
    ui->add_option("--n", n)->required();

    auto* hwv = app.add_subcommand("hwv", "Highest-weight vector check");
    hwv->add_option("--lambda", lambda_s)->required();
    hwv->add_option("--n", n)->required();

    auto* ess = app.add_subcommand("ess-bound", "Essential bound ideal membership");
    ess->add_option("--lambda", lambda_s)->required();
    ess->add_option("--n0", n0)->required();

    auto* iwa = app.add_subcommand("iwasawa", "Borel + periplectic dimension count");
    iwa->add_option("--n", n)->required();

    auto* brauer = app.add_subcommand("brauer", "Signed Brauer category operations");
    brauer->require_subcommand(1);
    auto* bc = brauer->add_subcommand("compose", "Compose two diagrams");
    bc->add_option("--f", f_text, "First morphism, e.g. \"4->2 (3 4) map 1:1 2:2\"")->required();
    bc->add_option("--g", g_text, "Second morphism (applied after f)")->required();
    auto* bh = brauer->add_subcommand("homdim", "Hom-space dimension");
    bh->add_option("--p", p)->required();
    bh->add_option("--q", q)->required();
    auto* bf = brauer->add_subcommand("functor-check", "Contraction functoriality");
    bf->add_option("--n", n);
    bf->add_option("--max-size", max_size);
    bf->add_option("--trials", trials);

    auto* phi = app.add_subcommand("phi", "Borel coordinate ring checks");
    phi->require_subcommand(1);
    auto* pl = phi->add_subcommand("leading", "Leading terms of the generator images");
    pl->add_option("--n", n)->required();
    auto* pi = phi->add_subcommand("inject", "Distinct leading terms scan");
    pi->add_option("--n", n)->required();
    pi->add_option("--degree", degree);
    auto* px = phi->add_subcommand("localize", "Cleared-denominator identities");
    px->add_option("--n", n)->required();
    auto* pe = phi->add_subcommand("extend", "Kernel of the contraction equals the maximal ideal");
    pe->add_option("--n", n)->required();
    pe->add_option("--degree", degree);

    auto* ext = app.add_subcommand("ext", "Koszul Ext multiplicity");
    ext->add_option("--side", side)->check(CLI::IsMember({"sym", "wedge"}))->required();
    ext->add_option("--i", i)->required();
    ext->add_option("--lambda", lambda_s)->required();
    ext->add_option("--mu", mu_s)->required();

    auto* rem = app.add_subcommand("remark", "Ext solution-count tables");
    rem->add_option("--dmax", dmax);

    auto* all = app.add_subcommand("verify-all", "Run every verification suite");
    all->add_option("--profile", profile)->check(CLI::IsMember({"quick", "full"}));

    // global flags may appear after the subcommand
    for (auto* sub : app.get_subcommands({})) {
        sub->fallthrough();
        for (auto* nested : sub->get_subcommands({})) nested->fallthrough();
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);  // --help
        app.exit(e);
        return kExitUsage;
    }

    try {
        std::vector<SuiteResult> results;
        if (*q1) results.push_back(suite_q1(size));
        if (*lr)
            results.push_back(suite_lr(Partition::parse(lambda_s), Partition::parse(mu_s),
                                       Partition::parse(nu_s)));
        if (*rect) results.push_back(suite_rect(n, k));
        if (*dec) results.push_back(suite_decompose(op_s, d, n));
        if (*pn) results.push_back(suite_pn_top(n));
        if (*ui) results.push_back(suite_unit_ideal(n));
        if (*hwv) results.push_back(suite_hwv(Partition::parse(lambda_s), n));
        if (*ess) results.push_back(suite_ess_bound(Partition::parse(lambda_s), n0));
        if (*iwa) results.push_back(suite_iwasawa(n));
        if (*bc) results.push_back(suite_brauer_compose(f_text, g_text));
        if (*bh) results.push_back(suite_brauer_homdim(p, q));
        if (*bf) results.push_back(suite_brauer_functor(n, max_size, trials, opt.seed));
        if (*pl) results.push_back(suite_phi_leading(n));
        if (*pi) results.push_back(suite_phi_inject(n, degree));
        if (*px) results.push_back(suite_phi_localize(n));
        if (*pe) results.push_back(suite_phi_extend(n, degree));
        if (*ext)
            results.push_back(suite_ext(side, i, Partition::parse(lambda_s),
                                        Partition::parse(mu_s)));
        if (*rem) results.push_back(suite_remark(dmax));
        if (*all) results = run_profile(profile, opt.seed);
        return emit(opt, std::move(results));
    } catch (const GuardExceeded& e) {
        std::cerr << "guard exceeded: " << e.what() << "\n";
        return kExitGuard;
    } catch (const PreconditionError& e) {
        std::cerr << "invalid input: " << e.what() << "\n";
        return kExitUsage;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitFail;
    }
}
