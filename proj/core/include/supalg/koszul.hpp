#pragma once

#include "supalg/schur.hpp"

namespace supalg {

/// Which algebra the Ext is taken over: Sym pairs homological degree i with
/// Wedge^i(Sym^2), Wedge pairs it with Sym^i(Sym^2).
enum class Side { Sym, Wedge };

struct ExtQuery {
    Side side = Side::Sym;
    int i = 0;
    Partition lambda;
    Partition mu;
};

struct ExtReport {
    long long multiplicity = 0;
    std::string note;       // convention note, incl. parity-shift bookkeeping
    int oracle_rank = 0;    // rank at which the pairing object stabilized
    bool stable = false;
};

/// Stable pairing object Wedge^i(Sym^2) resp. Sym^i(Sym^2): computed at
/// increasing rank until two consecutive ranks agree. Cached per (side, i).
const SchurVector& pairing_object(Side side, int i, int* oracle_rank = nullptr);

/// Multiplicity of mu in lambda (x) P_i; forces |mu| = |lambda| + 2i.
ExtReport ext_dim(const ExtQuery& q);

struct ExtSolutions {
    std::vector<Partition> lower;  // |lambda| = |mu| - 2i branch
    std::vector<Partition> upper;  // |lambda| = |mu| + 2i branch
};
ExtSolutions ext_solutions(Side side, int i, const Partition& mu, int size_bound);

struct RemarkLine {
    std::string label;
    std::string value;
    bool discrepancy = false;  // disagrees with the cited claim; reported, never suppressed
};

struct RemarkReport {
    bool pass = true;
    std::vector<RemarkLine> lines;
    std::vector<std::string> failures;
};

/// Tabulates the vanishing families, the cited solution counts, and the
/// 2-vs-4 asymmetry at mu = empty, i = 2, under both convention branches.
RemarkReport remark_report(int dmax);

}  // namespace supalg
