#include "specht/coherence.hpp"

#include <algorithm>
#include <sstream>

namespace specht {

SlotLayout::SlotLayout(const Partition& lambda)
    : lambda_(lambda), n_(lambda.length()), offset_(static_cast<std::size_t>(n_ * n_), 0) {
    for (int r = 1; r <= n_; ++r) {
        for (int s = r + 1; s <= n_; ++s) {
            offset_[static_cast<std::size_t>((r - 1) * n_ + (s - 1))] = size_;
            size_ += static_cast<std::size_t>(lambda.row(s));
        }
    }
}

std::size_t SlotLayout::index(int r, int s, std::int64_t i) const {
    if (r < 1 || s <= r || s > n_ || i < 1 || i > lambda_.row(s)) {
        throw DomainError("slot y(" + std::to_string(r) + "," + std::to_string(s) + ")_" + std::to_string(i) +
                          " does not exist for " + lambda_.to_string());
    }
    return offset_[static_cast<std::size_t>((r - 1) * n_ + (s - 1))] + static_cast<std::size_t>(i - 1);
}

SlotIndex SlotLayout::slot(std::size_t column) const {
    for (int r = 1; r <= n_; ++r) {
        for (int s = r + 1; s <= n_; ++s) {
            const std::size_t off = offset_[static_cast<std::size_t>((r - 1) * n_ + (s - 1))];
            if (column >= off && column < off + static_cast<std::size_t>(lambda_.row(s))) {
                return {r, s, static_cast<std::int64_t>(column - off) + 1};
            }
        }
    }
    throw DomainError("column out of range");
}

std::vector<SlotIndex> canonical_slot_order(const Partition& lambda) {
    std::vector<SlotIndex> out;
    const int n = lambda.length();
    for (int r = 1; r <= n; ++r) {
        for (int s = r + 1; s <= n; ++s) {
            for (std::int64_t i = 1; i <= lambda.row(s); ++i) out.push_back({r, s, i});
        }
    }
    return out;
}

bool MultiSequence::is_zero() const noexcept {
    return std::all_of(values.begin(), values.end(), [](std::uint32_t x) { return x == 0; });
}

std::string to_string(RelationFamily family) {
    switch (family) {
    case RelationFamily::E: return "E";
    case RelationFamily::T1: return "T1";
    case RelationFamily::T2: return "T2";
    case RelationFamily::T3a: return "T3a";
    case RelationFamily::T3b: return "T3b";
    case RelationFamily::C: return "C";
    }
    return "?";
}

std::string RelationTag::to_string() const {
    std::ostringstream os;
    os << specht::to_string(family) << '(';
    const int count = family == RelationFamily::E ? 2 : family == RelationFamily::C ? 4 : 3;
    for (int k = 0; k < count; ++k) os << (k ? "," : "") << rows[static_cast<std::size_t>(k)];
    const char* names = family == RelationFamily::T1 ? "ik" : family == RelationFamily::T2 ? "jk" : "ij";
    os << ';' << names[0] << '=' << i << ',' << names[1] << '=' << j << ')';
    return os.str();
}

namespace {

/// Accumulates a sparse row, merging repeated columns.
class RowBuilder {
public:
    explicit RowBuilder(const PrimeField& field) : field_(field) {}

    void clear() { terms_.clear(); }
    void add(std::size_t column, std::uint32_t coeff) {
        if (coeff == 0) return;
        for (auto& t : terms_) {
            if (t.column == column) {
                t.coeff = field_.add(t.coeff, coeff);
                return;
            }
        }
        terms_.push_back({column, coeff});
    }
    void sub(std::size_t column, std::uint32_t coeff) { add(column, field_.neg(coeff)); }

    std::span<const Term> finish() {
        std::erase_if(terms_, [](const Term& t) { return t.coeff == 0; });
        std::sort(terms_.begin(), terms_.end(), [](const Term& x, const Term& y) { return x.column < y.column; });
        return terms_;
    }

private:
    const PrimeField& field_;
    std::vector<Term> terms_;
};

} // namespace

void for_each_relation(const Partition& lambda, const PrimeField& F, const SlotLayout& layout,
                       const RelationSink& sink) {
    const int n = lambda.length();
    RowBuilder row(F);
    auto emit = [&](RelationFamily family, std::array<int, 4> rows, std::int64_t i, std::int64_t j) {
        sink(RelationTag{family, rows, i, j}, row.finish());
        row.clear();
    };

    // (E) C(a+i+j, j) y_i = C(i+j, i) y_{i+j}.
    for (int r = 1; r <= n; ++r) {
        for (int s = r + 1; s <= n; ++s) {
            const std::int64_t a = lambda.row(r);
            const std::int64_t b = lambda.row(s);
            for (std::int64_t i = 1; i < b; ++i) {
                for (std::int64_t j = 1; i + j <= b; ++j) {
                    row.add(layout.index(r, s, i), F.binom(a + i + j, j));
                    row.sub(layout.index(r, s, i + j), F.binom(i + j, i));
                    emit(RelationFamily::E, {r, s, 0, 0}, i, j);
                }
            }
        }
    }

    // Triples r < s < t with x = y(r,s), y = y(s,t), z = y(r,t).
    for (int r = 1; r <= n; ++r) {
        for (int s = r + 1; s <= n; ++s) {
            for (int t = s + 1; t <= n; ++t) {
                const std::int64_t a = lambda.row(r);
                const std::int64_t b = lambda.row(s);
                const std::int64_t c = lambda.row(t);
                auto x = [&](std::int64_t i) { return layout.index(r, s, i); };
                auto y = [&](std::int64_t j) { return layout.index(s, t, j); };
                auto z = [&](std::int64_t k) { return layout.index(r, t, k); };
                const std::array<int, 4> rows{r, s, t, 0};

                // (T1) C(a+i+k, k) x_i = C(a+i+k, i) z_k.
                for (std::int64_t i = 1; i <= b; ++i) {
                    for (std::int64_t k = 1; k <= c; ++k) {
                        row.add(x(i), F.binom(a + i + k, k));
                        row.sub(z(k), F.binom(a + i + k, i));
                        emit(RelationFamily::T1, rows, i, k);
                    }
                }
                // (T2) C(a+k, k) y_j = C(b+j, j) z_k.
                for (std::int64_t j = 1; j < c; ++j) {
                    for (std::int64_t k = 1; j + k <= c; ++k) {
                        row.add(y(j), F.binom(a + k, k));
                        row.sub(z(k), F.binom(b + j, j));
                        emit(RelationFamily::T2, rows, j, k);
                    }
                }
                // (T3a) 1 <= i <= j <= c.
                for (std::int64_t j = 1; j <= c; ++j) {
                    for (std::int64_t i = 1; i <= j; ++i) {
                        row.add(y(j), F.binom(a + i, i));
                        for (std::int64_t h = 0; h < i; ++h) {
                            row.sub(x(i - h), F.mul(F.binom(b + j - i, j - h), F.binom(a + i, h)));
                        }
                        row.sub(z(i), F.binom(b + j - i, j - i));
                        emit(RelationFamily::T3a, rows, i, j);
                    }
                }
                // (T3b) 1 <= j <= c, j < i <= b + j; x_m = 0 for m > b.
                for (std::int64_t j = 1; j <= c; ++j) {
                    for (std::int64_t i = j + 1; i <= b + j; ++i) {
                        row.add(y(j), F.binom(a + i, i));
                        for (std::int64_t h = 0; h <= j; ++h) {
                            if (i - h > b) continue;
                            row.sub(x(i - h), F.mul(F.binom(b + j - i, j - h), F.binom(a + i, h)));
                        }
                        emit(RelationFamily::T3b, rows, i, j);
                    }
                }
            }
        }
    }

    // (C) distinct q, r, s, t with q < r, s < t.
    for (int q = 1; q <= n; ++q) {
        for (int r = q + 1; r <= n; ++r) {
            for (int s = 1; s <= n; ++s) {
                if (s == q || s == r) continue;
                for (int t = s + 1; t <= n; ++t) {
                    if (t == q || t == r) continue;
                    for (std::int64_t i = 1; i <= lambda.row(t); ++i) {
                        for (std::int64_t j = 1; j <= lambda.row(r); ++j) {
                            row.add(layout.index(q, r, j), F.binom(lambda.row(s) + i, i));
                            row.sub(layout.index(s, t, i), F.binom(lambda.row(q) + j, j));
                            emit(RelationFamily::C, {q, r, s, t}, i, j);
                        }
                    }
                }
            }
        }
    }
}

RelationSystem build_relation_system(const Partition& lambda, Prime p) {
    const PrimeField field(p);
    const SlotLayout layout(lambda);
    RelationSystem system;
    system.p = p.value();
    system.num_slots = layout.size();
    for_each_relation(lambda, field, layout, [&](const RelationTag& tag, std::span<const Term> terms) {
        if (terms.empty()) return;
        std::vector<std::uint32_t> dense(layout.size(), 0);
        for (const auto& t : terms) dense[t.column] = t.coeff;
        system.matrix.push_back(std::move(dense));
        system.row_tags.push_back(tag);
    });
    return system;
}

std::string to_text(const RelationSystem& system, const SlotLayout& layout) {
    std::ostringstream os;
    for (std::size_t k = 0; k < system.matrix.size(); ++k) {
        os << system.row_tags[k].to_string() << ':';
        bool first = true;
        for (std::size_t c = 0; c < system.num_slots; ++c) {
            const auto coeff = system.matrix[k][c];
            if (coeff == 0) continue;
            const auto slot = layout.slot(c);
            os << (first ? " " : " + ") << coeff << "*y(" << slot.r << ',' << slot.s << ")_" << slot.i;
            first = false;
        }
        os << " = 0\n";
    }
    return os.str();
}

RowEchelon::RowEchelon(const PrimeField& field, std::size_t columns)
    : field_(&field), columns_(columns), pivot_(columns) {}

bool RowEchelon::insert(std::span<const Term> row) {
    if (row.empty() || full()) return false;
    std::vector<std::uint32_t> dense(columns_, 0);
    for (const auto& t : row) dense[t.column] = t.coeff;
    return insert(std::move(dense));
}

bool RowEchelon::insert(std::vector<std::uint32_t> row) {
    if (row.size() != columns_) throw DomainError("RowEchelon: row length mismatch");
    const PrimeField& F = *field_;
    for (std::size_t c = 0; c < columns_; ++c) {
        if (row[c] == 0) continue;
        const auto& pivot = pivot_[c];
        if (pivot.empty()) {
            const std::uint32_t scale = F.inv(row[c]);
            for (std::size_t k = c; k < columns_; ++k) row[k] = F.mul(row[k], scale);
            pivot_[c] = std::move(row);
            ++rank_;
            return true;
        }
        const std::uint32_t factor = row[c];
        for (std::size_t k = c; k < columns_; ++k) {
            if (pivot[k] != 0) row[k] = F.sub(row[k], F.mul(factor, pivot[k]));
        }
    }
    return false;
}

std::vector<MultiSequence> RowEchelon::nullspace_basis() const {
    const PrimeField& F = *field_;
    // Back-substitute to reduced row echelon form.
    std::vector<std::vector<std::uint32_t>> rref = pivot_;
    for (std::size_t c = columns_; c-- > 0;) {
        if (rref[c].empty()) continue;
        for (std::size_t above = 0; above < c; ++above) {
            auto& other = rref[above];
            if (other.empty() || other[c] == 0) continue;
            const std::uint32_t factor = other[c];
            for (std::size_t k = c; k < columns_; ++k) {
                if (rref[c][k] != 0) other[k] = F.sub(other[k], F.mul(factor, rref[c][k]));
            }
        }
    }
    std::vector<MultiSequence> basis;
    for (std::size_t f = 0; f < columns_; ++f) {
        if (!rref[f].empty()) continue;
        MultiSequence v{std::vector<std::uint32_t>(columns_, 0)};
        v.values[f] = 1;
        for (std::size_t c = 0; c < f; ++c) {
            if (!rref[c].empty()) v.values[c] = F.neg(rref[c][f]);
        }
        basis.push_back(std::move(v));
    }
    return basis;
}

std::vector<MultiSequence> nullspace(const RelationSystem& system) {
    const PrimeField field{Prime(system.p)};
    RowEchelon echelon(field, system.num_slots);
    for (const auto& row : system.matrix) {
        if (row.size() != system.num_slots) throw DomainError("nullspace: ragged relation system");
        echelon.insert(row);
    }
    return echelon.nullspace_basis();
}

MultiSequence standard_multisequence(const Partition& lambda, Prime p) {
    const PrimeField F(p);
    MultiSequence out;
    for (const auto& slot : canonical_slot_order(lambda)) {
        out.values.push_back(F.binom(lambda.row(slot.r) + slot.i, slot.i));
    }
    return out;
}

MultiSequence canonical_multisequence(const Partition& lambda, Prime p) {
    const int ji = james_index(lambda, p);  // validates James, n >= 2
    const PrimeField F(p);
    MultiSequence out;
    for (const auto& slot : canonical_slot_order(lambda)) {
        const int v_r = lambda.v(slot.r, p);
        const int l_s = lambda.l(slot.s, p);
        std::uint32_t value = 0;
        if (v_r - l_s == ji) {
            const std::int64_t step = ipow(p, l_s);
            if (slot.i % step == 0) {
                const auto t = static_cast<std::uint32_t>(slot.i / step);
                const auto top = F.reduce(digit(lambda.row(slot.r), v_r, p) + 1);
                value = F.mul(top, F.inv(t));
            }
        }
        out.values.push_back(value);
    }
    return out;
}

std::size_t dim_E(const Partition& lambda, Prime p) {
    const PrimeField field(p);
    const SlotLayout layout(lambda);
    RowEchelon echelon(field, layout.size());
    for_each_relation(lambda, field, layout,
                      [&](const RelationTag&, std::span<const Term> terms) { echelon.insert(terms); });
    return layout.size() - echelon.rank();
}

std::size_t ext1_dim_oracle(const Partition& lambda, Prime p) {
    const std::size_t dim = dim_E(lambda, p);
    if (is_james_partition(lambda, p)) return dim;
    // The standard multi-sequence is a nonzero element of E(lambda) here.
    return dim == 0 ? 0 : dim - 1;
}

bool is_coherent(const MultiSequence& ms, const Partition& lambda, Prime p) {
    const PrimeField field(p);
    const SlotLayout layout(lambda);
    if (ms.size() != layout.size()) {
        throw DomainError("multi-sequence has " + std::to_string(ms.size()) + " slots, expected " +
                          std::to_string(layout.size()));
    }
    bool ok = true;
    for_each_relation(lambda, field, layout, [&](const RelationTag&, std::span<const Term> terms) {
        if (!ok) return;
        std::uint32_t acc = 0;
        for (const auto& t : terms) acc = field.add(acc, field.mul(t.coeff, ms.values[t.column]));
        ok = acc == 0;
    });
    return ok;
}

std::size_t rank_of(std::span<const MultiSequence> vectors, Prime p) {
    if (vectors.empty()) return 0;
    const PrimeField field(p);
    RowEchelon echelon(field, vectors.front().size());
    for (const auto& v : vectors) echelon.insert(v.values);
    return echelon.rank();
}

} // namespace specht
