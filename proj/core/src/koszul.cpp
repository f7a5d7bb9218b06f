#include "supalg/koszul.hpp"

#include <map>
#include <sstream>

namespace supalg {

namespace {
SchurVector restrict_length(const SchurVector& v, int n) {
    SchurVector out;
    for (const auto& [p, c] : v.entries())
        if (p.length() <= n) out.add(p, c);
    return out;
}

int guard_total(const ExtQuery& q) { return q.lambda.size() + 2 * q.i; }
}  // namespace

const SchurVector& pairing_object(Side side, int i, int* oracle_rank) {
    static std::map<std::pair<int, int>, std::pair<SchurVector, int>> cache;
    auto key = std::make_pair(static_cast<int>(side), i);
    auto it = cache.find(key);
    if (it == cache.end()) {
        auto compute = [&](int n) {
            return side == Side::Sym ? wedge_of_sym2(i, n) : sym_of_sym2(i, n);
        };
        int n = std::max(1, i);
        SchurVector prev = compute(n);
        while (true) {
            if (n > 13) throw Error("pairing object did not stabilize below the rank cap");
            SchurVector next = compute(n + 1);
            if (restrict_length(next, n) == prev && next == prev) break;
            prev = std::move(next);
            ++n;
        }
        it = cache.emplace(key, std::make_pair(std::move(prev), n + 1)).first;
    }
    if (oracle_rank) *oracle_rank = it->second.second;
    return it->second.first;
}

ExtReport ext_dim(const ExtQuery& q) {
    if (q.i < 0) throw PreconditionError("homological degree must be nonnegative");
    if (guard_total(q) > 14)
        throw GuardExceeded("ext query exceeds |lambda| + 2i <= 14", Int(guard_total(q)));
    ExtReport rep;
    const SchurVector& pi = pairing_object(q.side, q.i, &rep.oracle_rank);
    rep.stable = true;
    long long total = 0;
    for (const auto& [kappa, c] : pi.entries()) total += c * lr_coefficient(q.lambda, kappa, q.mu);
    rep.multiplicity = total;
    std::ostringstream os;
    os << "pairing with " << (q.side == Side::Sym ? "wedge^i(sym^2)" : "sym^i(sym^2)")
       << ", sizes |mu| = |lambda| + 2i; nonzero values land on the parity-shifted simple when i is odd";
    rep.note = os.str();
    return rep;
}

ExtSolutions ext_solutions(Side side, int i, const Partition& mu, int size_bound) {
    ExtSolutions out;
    const SchurVector& pi = pairing_object(side, i);
    int lower_size = mu.size() - 2 * i;
    if (lower_size >= 0 && lower_size <= size_bound) {
        for (const Partition& lam : partitions_of(lower_size)) {
            long long total = 0;
            for (const auto& [kappa, c] : pi.entries())
                total += c * lr_coefficient(lam, kappa, mu);
            if (total != 0) out.lower.push_back(lam);
        }
    }
    int upper_size = mu.size() + 2 * i;
    if (upper_size <= size_bound + 2 * i) {
        for (const Partition& lam : partitions_of(upper_size)) {
            long long total = 0;
            for (const auto& [kappa, c] : pi.entries())
                total += c * lr_coefficient(mu, kappa, lam);
            if (total != 0) out.upper.push_back(lam);
        }
    }
    return out;
}

namespace {
std::string list_str(const std::vector<Partition>& ps) {
    std::string s = "{";
    for (size_t i = 0; i < ps.size(); ++i) {
        if (i) s += "; ";
        s += ps[i].str();
    }
    return s + "}";
}

Partition column(int d) {
    return d == 0 ? Partition() : Partition(std::vector<int>(d, 1));
}
Partition single_row(int d) {
    return d == 0 ? Partition() : Partition(std::vector<int>{d});
}
}  // namespace

RemarkReport remark_report(int dmax) {
    RemarkReport rep;
    auto fail = [&](const std::string& s) {
        rep.pass = false;
        rep.failures.push_back(s);
    };

    // sym^2(sym^2) decomposition
    {
        SchurVector expect;
        expect.add(Partition({4}), 1);
        expect.add(Partition({2, 2}), 1);
        const SchurVector& got = pairing_object(Side::Wedge, 2);
        rep.lines.push_back({"sym2_of_sym2", got.str(), false});
        if (!(got == expect)) fail("sym^2(sym^2) decomposition mismatch: " + got.str());
    }

    // wedge^2(sym^2): the cited identity names 2,1,1; the oracle decides and
    // the discrepancy is flagged without failing
    {
        const SchurVector& got = pairing_object(Side::Sym, 2);
        SchurVector cited;
        cited.add(Partition({2, 1, 1}), 1);
        bool differs = !(got == cited);
        std::ostringstream os;
        os << "computed " << got.str() << "; cited 1*(2,1,1)";
        if (differs) os << " [transpose discrepancy flagged]";
        rep.lines.push_back({"wedge2_of_sym2", os.str(), differs});
    }

    // vanishing families and the cited solution counts, per candidate family
    for (int d = 0; d <= dmax; ++d) {
        // Sym side, mu a single column: lower-branch ext vanishes for i >= 1
        Partition mu_col = column(d);
        bool sym_vanishes = true;
        for (int i = 1; i <= 3 && 2 * i <= 14; ++i) {
            if (mu_col.size() - 2 * i < 0) break;
            auto sols = ext_solutions(Side::Sym, i, mu_col, mu_col.size());
            if (!sols.lower.empty()) sym_vanishes = false;
        }
        rep.lines.push_back({"sym_vanishing_column_d" + std::to_string(d),
                             sym_vanishes ? "holds (lower branch)" : "fails (lower branch)",
                             !sym_vanishes});
        if (!sym_vanishes) fail("single-column vanishing failed on the sym side at d=" + std::to_string(d));

        // Wedge side, mu a single row: under the literal pairing the lower
        // branch does not vanish for d >= 2; the transposed pairing restores
        // it. Both reported.
        Partition mu_row = single_row(d);
        bool wedge_vanishes_literal = true;
        for (int i = 1; i <= 3; ++i) {
            if (mu_row.size() - 2 * i < 0) break;
            auto sols = ext_solutions(Side::Wedge, i, mu_row, mu_row.size());
            if (!sols.lower.empty()) wedge_vanishes_literal = false;
        }
        bool wedge_vanishes_transposed = true;
        for (int i = 1; i <= 3; ++i) {
            if (mu_row.size() - 2 * i < 0) break;
            // transpose convention pairs with wedge^i(wedge^2), whose support
            // is the transpose of the wedge^i(sym^2) support
            const SchurVector& pi = pairing_object(Side::Sym, i);
            for (const Partition& lam : partitions_of(mu_row.size() - 2 * i))
                for (const auto& [kappa, c] : pi.entries())
                    if (c * lr_coefficient(lam, transpose(kappa), mu_row) != 0)
                        wedge_vanishes_transposed = false;
        }
        std::ostringstream os;
        os << "literal pairing: " << (wedge_vanishes_literal ? "holds" : "fails")
           << "; transposed pairing: " << (wedge_vanishes_transposed ? "holds" : "fails");
        rep.lines.push_back({"wedge_vanishing_row_d" + std::to_string(d), os.str(),
                             !wedge_vanishes_literal});
        if (!wedge_vanishes_transposed)
            fail("single-row vanishing fails even under the transposed pairing at d=" +
                 std::to_string(d));
    }

    // cited solution counts: upper-branch pairing with P_1 = sym^2 itself
    for (int d = 0; d <= dmax; ++d) {
        SchurVector expect;
        if (d == 0) {
            expect.add(Partition({2}), 1);
        } else {
            std::vector<int> a{3};
            for (int t = 0; t < d - 1; ++t) a.push_back(1);
            std::vector<int> b{2};
            for (int t = 0; t < d; ++t) b.push_back(1);
            expect.add(Partition(a), 1);
            expect.add(Partition(b), 1);
        }
        SchurVector got = tensor_schur(column(d), Partition({2}));
        std::ostringstream os;
        os << got.str() << " (" << got.entries().size() << " solutions)";
        rep.lines.push_back({"pieri_column_d" + std::to_string(d), os.str(), false});
        if (!(got == expect)) fail("column Pieri identity failed at d=" + std::to_string(d));
        long long count = static_cast<long long>(got.entries().size());
        if ((d == 0 && count != 1) || (d > 0 && count != 2))
            fail("cited solution count mismatch at d=" + std::to_string(d));
    }

    // the 2-vs-4 asymmetry at mu = empty, i = 2 (upper branch)
    {
        auto sym_sols = ext_solutions(Side::Sym, 2, Partition(), 0);
        auto wedge_sols = ext_solutions(Side::Wedge, 2, Partition(), 0);
        std::ostringstream os;
        os << "sym side " << list_str(sym_sols.upper) << " -> "
           << 2 * sym_sols.upper.size() << " simples with parity shifts; wedge side "
           << list_str(wedge_sols.upper) << " -> " << 2 * wedge_sols.upper.size() << " simples";
        rep.lines.push_back({"asymmetry_mu_empty_i2", os.str(), false});
        if (sym_sols.upper.size() != 1 || wedge_sols.upper.size() != 2)
            fail("asymmetry counts at mu=empty, i=2 are off");
    }

    // machine-readable table rows, one per (side, i, lambda, mu, branch)
    {
        rep.lines.push_back(
            {"table_header", "side,i,(lambda),(mu),branch,multiplicity", false});
        for (Side side : {Side::Sym, Side::Wedge}) {
            const char* sname = side == Side::Sym ? "sym" : "wedge";
            const SchurVector& pi = pairing_object(side, 2);
            for (const Partition& lam : partitions_of(4)) {
                long long upper = 0;
                for (const auto& [kappa, c] : pi.entries())
                    upper += c * lr_coefficient(Partition(), kappa, lam);
                std::ostringstream row;
                row << sname << ",2,(" << lam.str() << "),(-),upper," << upper;
                rep.lines.push_back({"table", row.str(), false});
            }
        }
    }

    return rep;
}

}  // namespace supalg
