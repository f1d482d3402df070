#pragma once

// Linear-algebra model of extension multi-sequences.
//
// A multi-sequence for lambda assigns y(r,s)_i in F_p to every
// 1 <= r < s <= n and 1 <= i <= lambda_s.  The coherent ones are the
// nullspace of the relation system built here; its dimension, less one
// for non-James lambda, is dim Ext^1_B(S^d E, K_lambda).

#include <array>
#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <vector>

#include "specht/padic.hpp"
#include "specht/partition.hpp"

namespace specht {

struct SlotIndex {
    int r = 0;
    int s = 0;
    std::int64_t i = 0;
    friend bool operator==(const SlotIndex&, const SlotIndex&) = default;
};

/// Maps (r, s, i) to a dense column in canonical order: ascending (r, s)
/// lexicographically, then ascending i.
class SlotLayout {
public:
    explicit SlotLayout(const Partition& lambda);

    [[nodiscard]] std::size_t size() const noexcept { return size_; }
    [[nodiscard]] std::size_t index(int r, int s, std::int64_t i) const;
    [[nodiscard]] SlotIndex slot(std::size_t column) const;
    [[nodiscard]] const Partition& partition() const noexcept { return lambda_; }

private:
    Partition lambda_;
    int n_ = 0;
    std::vector<std::size_t> offset_;  // offset_[(r-1)*n + (s-1)]
    std::size_t size_ = 0;
};

[[nodiscard]] std::vector<SlotIndex> canonical_slot_order(const Partition& lambda);

/// Dense vector over F_p indexed by SlotLayout columns.
struct MultiSequence {
    std::vector<std::uint32_t> values;

    [[nodiscard]] std::size_t size() const noexcept { return values.size(); }
    [[nodiscard]] bool is_zero() const noexcept;
    friend bool operator==(const MultiSequence&, const MultiSequence&) = default;
};

enum class RelationFamily { E, T1, T2, T3a, T3b, C };

[[nodiscard]] std::string to_string(RelationFamily family);

/// Provenance of one instantiated relation.  `rows` holds the row indices
/// involved: (r, s) for E, (r, s, t) for the triple families and
/// (q, r, s, t) for C; unused entries are 0.  `i`, `j` are the relation's
/// two running indices in the order they appear in its name (i,j for E,
/// T3a, T3b; i,k for T1; j,k for T2; i,j for C).
struct RelationTag {
    RelationFamily family = RelationFamily::E;
    std::array<int, 4> rows{};
    std::int64_t i = 0;
    std::int64_t j = 0;

    [[nodiscard]] std::string to_string() const;
};

struct Term {
    std::size_t column;
    std::uint32_t coeff;
};

/// Receives each relation as a sparse row with canonical coefficients.
/// Terms on distinct columns; zero coefficients removed; may be empty.
using RelationSink = std::function<void(const RelationTag&, std::span<const Term>)>;

/// Generates every instantiated relation (E), (T1), (T2), (T3a), (T3b), (C)
/// for lambda over F_p, including rows that vanish identically.
void for_each_relation(const Partition& lambda, const PrimeField& field, const SlotLayout& layout,
                       const RelationSink& sink);

struct RelationSystem {
    std::int64_t p = 2;
    std::size_t num_slots = 0;
    std::vector<std::vector<std::uint32_t>> matrix;  // nonzero rows only
    std::vector<RelationTag> row_tags;
};

[[nodiscard]] RelationSystem build_relation_system(const Partition& lambda, Prime p);

/// One relation per line: `tag: c*y(r,s)_i + ... = 0`.
[[nodiscard]] std::string to_text(const RelationSystem& system, const SlotLayout& layout);

/// Incremental row echelon form over F_p.  Rows are reduced on insertion
/// against pivots kept with a leading 1; the final nullspace basis is read
/// off the reduced row echelon form and therefore does not depend on the
/// insertion order.
class RowEchelon {
public:
    RowEchelon(const PrimeField& field, std::size_t columns);

    /// Returns true if the row increased the rank.
    bool insert(std::vector<std::uint32_t> row);
    bool insert(std::span<const Term> row);

    [[nodiscard]] std::size_t rank() const noexcept { return rank_; }
    [[nodiscard]] std::size_t columns() const noexcept { return columns_; }
    [[nodiscard]] bool full() const noexcept { return rank_ == columns_; }

    /// Basis of {x : row . x = 0 for every inserted row}, one vector per
    /// free column in ascending order, with a 1 in that column.
    [[nodiscard]] std::vector<MultiSequence> nullspace_basis() const;

private:
    const PrimeField* field_;
    std::size_t columns_;
    std::size_t rank_ = 0;
    std::vector<std::vector<std::uint32_t>> pivot_;  // pivot_[c] empty when c is free
};

[[nodiscard]] std::vector<MultiSequence> nullspace(const RelationSystem& system);

/// y(r,s)_i = C(lambda_r + i, i) mod p.
[[nodiscard]] MultiSequence standard_multisequence(const Partition& lambda, Prime p);

/// Closed form of C(lambda_r + i, i) / p^JI mod p for a James partition.
/// Throws DomainError when lambda is not James or has fewer than two parts.
[[nodiscard]] MultiSequence canonical_multisequence(const Partition& lambda, Prime p);

[[nodiscard]] std::size_t dim_E(const Partition& lambda, Prime p);

/// dim E(lambda), less one when lambda is not James.
[[nodiscard]] std::size_t ext1_dim_oracle(const Partition& lambda, Prime p);

/// Throws DomainError when ms has the wrong length.
[[nodiscard]] bool is_coherent(const MultiSequence& ms, const Partition& lambda, Prime p);

/// Rank over F_p of the given vectors (all of equal length).
[[nodiscard]] std::size_t rank_of(std::span<const MultiSequence> vectors, Prime p);

} // namespace specht
