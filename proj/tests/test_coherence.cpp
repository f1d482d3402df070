#include "doctest.h"

#include "oracle.hpp"
#include "specht/coherence.hpp"

using namespace specht;

namespace {

bool in_kernel(const RelationSystem& sys, const MultiSequence& v) {
    const PrimeField F{Prime(sys.p)};
    for (const auto& row : sys.matrix) {
        std::uint32_t acc = 0;
        for (std::size_t c = 0; c < row.size(); ++c) acc = F.add(acc, F.mul(row[c], v.values[c]));
        if (acc != 0) return false;
    }
    return true;
}

} // namespace

TEST_CASE("slot order") {
    const auto order = canonical_slot_order(Partition{1, 1, 1});
    CHECK(order == std::vector<SlotIndex>{{1, 2, 1}, {1, 3, 1}, {2, 3, 1}});
    CHECK(canonical_slot_order(Partition{5}).empty());
    CHECK(canonical_slot_order(Partition{2, 2}) == std::vector<SlotIndex>{{1, 2, 1}, {1, 2, 2}});

    const Partition lambda{4, 3, 2, 2};
    const SlotLayout layout(lambda);
    const auto slots = canonical_slot_order(lambda);
    REQUIRE(slots.size() == layout.size());
    CHECK(layout.size() == 3 + 2 + 2 + 2 + 2 + 2);
    for (std::size_t c = 0; c < slots.size(); ++c) {
        CHECK(layout.slot(c) == slots[c]);
        CHECK(layout.index(slots[c].r, slots[c].s, slots[c].i) == c);
    }
    CHECK_THROWS_AS((void)layout.index(1, 2, 4), DomainError);
    CHECK_THROWS_AS((void)layout.index(2, 2, 1), DomainError);
    CHECK_THROWS_AS((void)layout.index(1, 5, 1), DomainError);
}

TEST_CASE("standard multi-sequence") {
    CHECK(standard_multisequence(Partition{1, 1, 1}, Prime(3)).values == std::vector<std::uint32_t>{2, 2, 2});
    CHECK(standard_multisequence(Partition{8, 1}, Prime(3)).is_zero());
    CHECK(standard_multisequence(Partition{8}, Prime(3)).size() == 0);
}

TEST_CASE("canonical multi-sequence") {
    CHECK(canonical_multisequence(Partition{8, 1}, Prime(3)).values == std::vector<std::uint32_t>{1});
    CHECK(canonical_multisequence(Partition{2, 1}, Prime(3)).values == std::vector<std::uint32_t>{1});
    const MultiSequence c222 = canonical_multisequence(Partition{2, 2, 2}, Prime(3));
    CHECK(c222.values == oracle::canonical_by_division(Partition{2, 2, 2}, 3));
    CHECK_FALSE(c222.is_zero());
    CHECK(is_coherent(c222, Partition{2, 2, 2}, Prime(3)));
    CHECK_THROWS_AS((void)canonical_multisequence(Partition{3, 1}, Prime(3)), DomainError);
    CHECK_THROWS_AS((void)canonical_multisequence(Partition{3}, Prime(3)), DomainError);
}

TEST_CASE("canonical closed form equals exact division by p^JI") {
    for (std::int64_t p : {2, 3, 5}) {
        for (std::int64_t d = 2; d <= 16; ++d) {
            for (const auto& lambda : enumerate_partitions(d, static_cast<int>(d))) {
                if (lambda.length() < 2 || !is_james_partition(lambda, Prime(p))) continue;
                REQUIRE_MESSAGE(canonical_multisequence(lambda, Prime(p)).values ==
                                    oracle::canonical_by_division(lambda, p),
                                lambda.to_string() << " p=" << p);
            }
        }
    }
}

TEST_CASE("relation system of (1,1,1) at p = 3") {
    const Partition lambda{1, 1, 1};
    const RelationSystem sys = build_relation_system(lambda, Prime(3));
    CHECK(sys.num_slots == 3);
    REQUIRE(sys.matrix.size() == 1);
    // -x_1 - z_1 + 2 y_1, i.e. x_1 + z_1 - 2 y_1 up to sign.
    CHECK(sys.matrix[0] == std::vector<std::uint32_t>{2, 2, 2});
    CHECK(sys.row_tags[0].family == RelationFamily::T3a);
    CHECK(to_text(sys, SlotLayout(lambda)) == "T3a(1,2,3;i=1,j=1): 2*y(1,2)_1 + 2*y(1,3)_1 + 2*y(2,3)_1 = 0\n");

    const auto basis = nullspace(sys);
    CHECK(basis.size() == 2);
    for (const auto& v : basis) CHECK(in_kernel(sys, v));
}

TEST_CASE("degenerate systems") {
    const RelationSystem single = build_relation_system(Partition{6}, Prime(5));
    CHECK(single.matrix.empty());
    CHECK(single.num_slots == 0);
    CHECK(dim_E(Partition{6}, Prime(5)) == 0);
    CHECK(ext1_dim_oracle(Partition{6}, Prime(5)) == 0);
    CHECK(ext1_dim_oracle(Partition{}, Prime(5)) == 0);

    const RelationSystem pair = build_relation_system(Partition{2, 1}, Prime(3));
    CHECK(pair.matrix.empty());
    CHECK(pair.num_slots == 1);
    CHECK(nullspace(pair).size() == 1);
}

TEST_CASE("oracle dimensions") {
    CHECK(dim_E(Partition{1, 1, 1}, Prime(3)) == 2);
    CHECK(dim_E(Partition{1, 1, 1, 1}, Prime(3)) == 2);
    CHECK(dim_E(Partition{9, 3}, Prime(3)) == 2);
    CHECK(dim_E(Partition{8, 1}, Prime(3)) == 1);
    CHECK(dim_E(Partition{3, 1}, Prime(3)) == 1);
    CHECK(ext1_dim_oracle(Partition{1, 1, 1, 1}, Prime(3)) == 1);
    CHECK(ext1_dim_oracle(Partition{2, 1, 1, 1}, Prime(2)) == 0);
    CHECK(ext1_dim_oracle(Partition{2, 1, 1}, Prime(2)) == 1);
}

TEST_CASE("nullspace basis is reduced and lies in the kernel") {
    for (const Partition& lambda : {Partition{4, 2, 1}, Partition{9, 3}, Partition{3, 3, 2, 1}, Partition{1, 1, 1, 1}}) {
        for (std::int64_t p : {2, 3, 5}) {
            const RelationSystem sys = build_relation_system(lambda, Prime(p));
            const auto basis = nullspace(sys);
            CHECK(basis.size() == dim_E(lambda, Prime(p)));
            CHECK(rank_of(basis, Prime(p)) == basis.size());
            for (const auto& v : basis) {
                CHECK(in_kernel(sys, v));
                CHECK(is_coherent(v, lambda, Prime(p)));
            }
            // Same input, same rows and same basis.
            const RelationSystem again = build_relation_system(lambda, Prime(p));
            CHECK(again.matrix == sys.matrix);
            CHECK(nullspace(again) == basis);
        }
    }
}

TEST_CASE("row echelon") {
    const PrimeField F(Prime(5));
    RowEchelon ech(F, 3);
    CHECK(ech.insert(std::vector<std::uint32_t>{1, 2, 3}));
    CHECK_FALSE(ech.insert(std::vector<std::uint32_t>{2, 4, 1}));
    CHECK(ech.rank() == 1);
    const std::vector<Term> sparse{{1, 1}};
    CHECK(ech.insert(sparse));
    CHECK(ech.rank() == 2);
    const auto basis = ech.nullspace_basis();
    REQUIRE(basis.size() == 1);
    CHECK(basis[0].values == std::vector<std::uint32_t>{2, 0, 1});
    CHECK(ech.insert(std::vector<std::uint32_t>{0, 0, 1}));
    CHECK(ech.full());
    CHECK(ech.nullspace_basis().empty());
}

TEST_CASE("coherence checks") {
    const MultiSequence unit{{1, 0, 0}};
    CHECK_FALSE(is_coherent(unit, Partition{1, 1, 1}, Prime(3)));
    CHECK_THROWS_AS((void)is_coherent(MultiSequence{{1, 0}}, Partition{1, 1, 1}, Prime(3)), DomainError);
    CHECK(is_coherent(MultiSequence{{1, 2, 0}}, Partition{1, 1, 1}, Prime(3)));
}
