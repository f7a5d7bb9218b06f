#include "supalg/partition.hpp"

#include <algorithm>
#include <sstream>

namespace supalg {

Int binomial(long n, long k) {
    if (k < 0 || k > n) return 0;
    Int r;
    mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return r;
}

Int factorial(long n) {
    Int r;
    mpz_fac_ui(r.get_mpz_t(), static_cast<unsigned long>(n));
    return r;
}

Int odd_double_factorial(long r) {
    Int v = 1;
    for (long m = 2 * r - 1; m > 1; m -= 2) v *= m;
    return v;
}

std::string rat_str(const Rat& q) {
    return q.get_str();
}

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
    for (size_t i = 0; i < parts_.size(); ++i) {
        if (parts_[i] <= 0) throw PreconditionError("partition parts must be positive");
        if (i > 0 && parts_[i - 1] < parts_[i])
            throw PreconditionError("partition parts must be weakly decreasing");
    }
}

Partition Partition::parse(const std::string& text) {
    if (text.empty() || text == "-") return Partition();
    std::vector<int> parts;
    std::stringstream in(text);
    std::string tok;
    while (std::getline(in, tok, ',')) {
        size_t pos = 0;
        int v = std::stoi(tok, &pos);
        if (pos != tok.size()) throw PreconditionError("bad partition token '" + tok + "'");
        parts.push_back(v);
    }
    return Partition(parts);
}

int Partition::size() const {
    int s = 0;
    for (int p : parts_) s += p;
    return s;
}

int Partition::row(int i) const {
    if (i < 1 || i > length()) return 0;
    return parts_[i - 1];
}

bool Partition::contains(const Partition& mu) const {
    if (mu.length() > length()) return false;
    for (int i = 1; i <= mu.length(); ++i)
        if (row(i) < mu.row(i)) return false;
    return true;
}

std::string Partition::str() const {
    if (parts_.empty()) return "-";
    std::string out;
    for (size_t i = 0; i < parts_.size(); ++i) {
        if (i) out += ',';
        out += std::to_string(parts_[i]);
    }
    return out;
}

Partition transpose(const Partition& lambda) {
    if (lambda.empty()) return Partition();
    std::vector<int> t(lambda.row(1), 0);
    for (int i = 1; i <= lambda.length(); ++i)
        for (int j = 0; j < lambda.row(i); ++j) t[j]++;
    return Partition(t);
}

int arm(const Partition& lambda, int i) {
    return lambda.row(i) - i;
}

int leg(const Partition& lambda, int i) {
    return transpose(lambda).row(i) - i;
}

int diagonal_length(const Partition& lambda) {
    int d = 0;
    while (lambda.row(d + 1) >= d + 1) ++d;
    return d;
}

bool q1_contains(const Partition& lambda) {
    Partition t = transpose(lambda);
    int d = diagonal_length(lambda);
    for (int i = 1; i <= d; ++i)
        if (lambda.row(i) - i != t.row(i) - i + 1) return false;
    return true;
}

Q1List q1_of_size(int m) {
    Q1List out;
    if (m < 0) throw PreconditionError("q1_of_size: negative size");
    if (m % 2 != 0) {
        out.odd_size_warning = true;
        return out;
    }
    for (const Partition& p : partitions_of(m))
        if (q1_contains(p)) out.items.push_back(p);
    return out;
}

Partition brace(const Partition& lambda, int n) {
    if (lambda.length() > n)
        throw PreconditionError("brace: partition has more than n parts");
    std::vector<int> parts;
    for (int i = 1; i <= n; ++i) parts.push_back(lambda.row(i) + n + 1);
    Partition t = transpose(lambda);
    for (int p : t.parts()) parts.push_back(p);
    return Partition(parts);
}

std::vector<std::pair<Partition, int>> unbrace(const Partition& lambda) {
    std::vector<std::pair<Partition, int>> out;
    for (int np = 1; np <= lambda.length(); ++np) {
        std::vector<int> head;
        bool ok = true;
        for (int i = 1; i <= np; ++i) {
            int v = lambda.row(i) - (np + 1);
            if (v < 0) { ok = false; break; }
            head.push_back(v);
        }
        if (!ok) continue;
        for (size_t i = 1; i < head.size(); ++i)
            if (head[i - 1] < head[i]) { ok = false; break; }
        if (!ok) continue;
        Partition mu(head);
        if (mu.length() > np) continue;
        std::vector<int> tail;
        for (int i = np + 1; i <= lambda.length(); ++i) tail.push_back(lambda.row(i));
        if (Partition(tail) == transpose(mu)) out.emplace_back(mu, np);
    }
    return out;
}

std::optional<Partition> complement_in_rect(const Partition& lambda, int n, int k) {
    if (lambda.length() > n || lambda.row(1) > k) return std::nullopt;
    std::vector<int> parts;
    for (int i = 1; i <= n; ++i) parts.push_back(k - lambda.row(n + 1 - i));
    return Partition(parts);
}

Partition rectangle(int n, int k) {
    if (n < 0 || k < 0) throw PreconditionError("rectangle: negative side");
    if (n == 0 || k == 0) return Partition();
    return Partition(std::vector<int>(n, k));
}

namespace {
void gen_partitions(int m, int max_len, int max_part, std::vector<int>& acc,
                    std::vector<Partition>& out) {
    if (m == 0) {
        out.push_back(Partition(acc));
        return;
    }
    if (static_cast<int>(acc.size()) >= max_len) return;
    int hi = std::min(m, max_part);
    if (!acc.empty()) hi = std::min(hi, acc.back());
    for (int p = hi; p >= 1; --p) {
        acc.push_back(p);
        gen_partitions(m - p, max_len, max_part, acc, out);
        acc.pop_back();
    }
}
}  // namespace

std::vector<Partition> partitions_of(int m, int max_len, int max_part) {
    std::vector<Partition> out;
    if (m < 0) return out;
    std::vector<int> acc;
    gen_partitions(m, max_len, max_part, acc, out);
    return out;
}

std::vector<Partition> partitions_in_rect(int n, int k) {
    std::vector<Partition> out;
    for (int m = n * k; m >= 0; --m)
        for (const Partition& p : partitions_of(m, n, k)) out.push_back(p);
    std::sort(out.begin(), out.end(), [](const Partition& a, const Partition& b) { return b < a; });
    return out;
}

}  // namespace supalg
