#pragma once

#include <compare>
#include <optional>
#include <string>
#include <vector>

#include "supalg/common.hpp"

namespace supalg {

/// Integer partition: weakly decreasing positive parts, trailing zeros dropped.
/// The empty partition is default-constructed and prints as "-".
class Partition {
  public:
    Partition() = default;
    explicit Partition(std::vector<int> parts);

    /// Parses the canonical textual form "3,1" ("-" or "" for the empty partition).
    static Partition parse(const std::string& text);

    const std::vector<int>& parts() const { return parts_; }
    int size() const;                      // number of boxes
    int length() const { return static_cast<int>(parts_.size()); }
    int row(int i) const;                  // 1-indexed part, 0 past the end
    bool empty() const { return parts_.empty(); }

    bool contains(const Partition& mu) const;
    std::string str() const;

    friend auto operator<=>(const Partition&, const Partition&) = default;

  private:
    std::vector<int> parts_;
};

Partition transpose(const Partition& lambda);

int arm(const Partition& lambda, int i);   // boxes right of diagonal box (i,i), 1-indexed
int leg(const Partition& lambda, int i);   // boxes below diagonal box (i,i)
int diagonal_length(const Partition& lambda);

/// Diagonal-hook condition: every diagonal box has arm = leg + 1.
bool q1_contains(const Partition& lambda);

struct Q1List {
    std::vector<Partition> items;          // descending lexicographic
    bool odd_size_warning = false;
};
Q1List q1_of_size(int m);

/// (lambda_1+n+1, ..., lambda_n+n+1, lambda^T). Requires length(lambda) <= n.
Partition brace(const Partition& lambda, int n);

/// Recovers (mu, n') with lambda == brace(mu, n'), smallest n' first.
std::vector<std::pair<Partition, int>> unbrace(const Partition& lambda);

/// Complement in the n x k rectangle, absent when lambda does not fit.
std::optional<Partition> complement_in_rect(const Partition& lambda, int n, int k);

Partition rectangle(int n, int k);

/// All partitions of m with at most max_len parts, each at most max_part,
/// in descending lexicographic order.
std::vector<Partition> partitions_of(int m, int max_len = 1 << 20, int max_part = 1 << 20);

/// All partitions fitting in the n x k box (any size), descending lexicographic.
std::vector<Partition> partitions_in_rect(int n, int k);

}  // namespace supalg
