#pragma once

#include <cstdint>
#include <initializer_list>
#include <optional>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "specht/padic.hpp"

namespace specht {

/// A partition lambda_1 >= ... >= lambda_n >= 1.  Rows are 1-based in
/// the accessors that mirror the mathematics (row(r), v(r), l(r)).
class Partition {
public:
    Partition() = default;
    /// Strips trailing zeros; throws InvalidPartition if the remaining
    /// entries are not weakly decreasing or contain a negative value.
    explicit Partition(std::vector<std::int64_t> parts);
    Partition(std::initializer_list<std::int64_t> parts) : Partition(std::vector<std::int64_t>(parts)) {}

    [[nodiscard]] const std::vector<std::int64_t>& parts() const noexcept { return parts_; }
    [[nodiscard]] int length() const noexcept { return static_cast<int>(parts_.size()); }
    [[nodiscard]] std::int64_t degree() const noexcept { return degree_; }
    [[nodiscard]] bool empty() const noexcept { return parts_.empty(); }

    /// lambda_r, 1 <= r <= n.
    [[nodiscard]] std::int64_t row(int r) const { return parts_.at(static_cast<std::size_t>(r - 1)); }
    /// v_r = val_p(lambda_r + 1).
    [[nodiscard]] int v(int r, Prime p) const { return val_p(row(r) + 1, p); }
    /// l_r = len_p(lambda_r).
    [[nodiscard]] int l(int r, Prime p) const { return len_p(row(r), p); }

    /// Rows first..last (inclusive, 1-based) as a new partition.
    [[nodiscard]] Partition slice(int first, int last) const;
    /// Every part multiplied by k.
    [[nodiscard]] Partition scaled(std::int64_t k) const;

    [[nodiscard]] std::string to_string() const;

    friend bool operator==(const Partition&, const Partition&) = default;

private:
    std::vector<std::int64_t> parts_;
    std::int64_t degree_ = 0;
};

/// Parses "4,2,1" (trailing zeros allowed).  Throws InvalidPartition.
[[nodiscard]] Partition parse_partition(const std::string& text);

struct James {
    friend bool operator==(const James&, const James&) = default;
};
struct Pointed {
    int beta = 0;            ///< p-length of b
    std::int64_t b_hat = 0;  ///< b - p^beta
    friend bool operator==(const Pointed&, const Pointed&) = default;
};
struct Split {
    friend bool operator==(const Split&, const Split&) = default;
};

/// James / pointed / split trichotomy of a two-part partition (a, b).
using TwoPartClass = std::variant<James, Pointed, Split>;

[[nodiscard]] std::string to_string(const TwoPartClass& cls);

/// b < p^{val_p(a+1)}.  Requires a >= b >= 1 (DomainError otherwise).
[[nodiscard]] bool is_james_pair(std::int64_t a, std::int64_t b, Prime p);

/// Every consecutive pair is James; length <= 1 is James.
[[nodiscard]] bool is_james_partition(const Partition& lambda, Prime p);

[[nodiscard]] TwoPartClass classify_two_part(std::int64_t a, std::int64_t b, Prime p);

/// 1-based r with (lambda_r, lambda_{r+1}) not James, ascending.
[[nodiscard]] std::vector<int> non_james_pairs(const Partition& lambda, Prime p);

/// min_r v_r - l_{r+1} over consecutive pairs.  Requires James, n >= 2.
[[nodiscard]] int james_index(const Partition& lambda, Prime p);

/// Segments and p-segments of a James partition, each a set partition of
/// {1..n} listed as ascending classes ordered by their smallest element.
struct PSegments {
    std::vector<std::vector<int>> segments;
    std::vector<std::vector<int>> p_segments;
};

[[nodiscard]] PSegments p_segments(const Partition& lambda, Prime p);

/// Partitions of d with at most max_parts parts, in lexicographically
/// decreasing order.  Single-pass.
class PartitionEnumerator {
public:
    PartitionEnumerator(std::int64_t d, int max_parts);

    /// Next partition, or nullopt when exhausted.
    std::optional<Partition> next();

private:
    std::int64_t d_;
    int max_parts_;
    std::vector<std::int64_t> current_;
    bool started_ = false;
    bool done_ = false;
};

[[nodiscard]] std::vector<Partition> enumerate_partitions(std::int64_t d, int max_parts);

} // namespace specht
