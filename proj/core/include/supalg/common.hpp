#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace supalg {

using Int = mpz_class;
using Rat = mpq_class;

struct Error : std::runtime_error {
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/// A configured size/degree guard was exceeded; carries the offending estimate.
struct GuardExceeded : Error {
    GuardExceeded(const std::string& what, Int estimate_)
        : Error(what + " (estimated size " + estimate_.get_str() + ")"), estimate(std::move(estimate_)) {}
    Int estimate;
};

struct PreconditionError : Error {
    explicit PreconditionError(const std::string& what) : Error(what) {}
};

Int binomial(long n, long k);
Int factorial(long n);
/// (2r-1)!! with the empty-product convention (r=0 gives 1).
Int odd_double_factorial(long r);

/// Outcome of one verification routine. `witnesses` holds human-readable
/// counterexamples or logged values; a failing report always has at least one.
struct CheckReport {
    bool pass = true;
    std::string note;
    std::vector<std::string> witnesses;

    void fail(const std::string& witness) {
        pass = false;
        witnesses.push_back(witness);
    }
};

std::string rat_str(const Rat& q);

}  // namespace supalg
