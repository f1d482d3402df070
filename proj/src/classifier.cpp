#include "specht/classifier.hpp"

#include <algorithm>
#include <cassert>

namespace specht {

namespace {

// b < p^{val_p(a+1)}; meaningful for any a >= 0, b >= 0, unlike
// is_james_pair which insists on a >= b >= 1.
bool james_criterion(std::int64_t a, std::int64_t b, Prime p) {
    const int v = val_p(a + 1, p);
    std::int64_t pk = 1;
    for (int k = 0; k < v; ++k) {
        if (pk > b) return true;
        pk *= p;
    }
    return b < pk;
}

/// Writes x/y/z entries of a triple multi-sequence on the layout of (a,b,c).
class TripleBuilder {
public:
    TripleBuilder(std::int64_t a, std::int64_t b, std::int64_t c, Prime p)
        : layout_(Partition{a, b, c}), field_(p), ms_{std::vector<std::uint32_t>(layout_.size(), 0)} {}

    TripleBuilder& x(std::int64_t i, std::int64_t value) { return set(1, 2, i, value); }
    TripleBuilder& y(std::int64_t j, std::int64_t value) { return set(2, 3, j, value); }
    TripleBuilder& z(std::int64_t k, std::int64_t value) { return set(1, 3, k, value); }

    MultiSequence build() const { return ms_; }

private:
    TripleBuilder& set(int r, int s, std::int64_t i, std::int64_t value) {
        ms_.values[layout_.index(r, s, i)] = field_.reduce(value);
        return *this;
    }

    SlotLayout layout_;
    PrimeField field_;
    MultiSequence ms_;
};

TripleVerdict split_verdict(std::string tag) { return {false, 0, std::move(tag), std::nullopt}; }

TripleVerdict nonsplit_verdict(std::string tag, MultiSequence witness, int dim = 1) {
    return {true, dim, std::move(tag), std::move(witness)};
}

TripleVerdict james_first_pair(std::int64_t a, std::int64_t b, std::int64_t c, Prime p) {
    const int v = val_p(a + 1, p);
    const int beta = len_p(b, p);
    const int gamma = len_p(c, p);
    const std::int64_t pg = ipow(p, gamma);

    if (is_james_pair(b, c, p)) {
        // James triple: always non-split, witness the canonical triple.
        MultiSequence canonical = canonical_multisequence(Partition{a, b, c}, p);
        if (beta == gamma) return nonsplit_verdict("james-triple/equal-length", std::move(canonical));
        if (!james_criterion(a, b + pg, p)) {
            return nonsplit_verdict("james-triple/long-middle-constrained", std::move(canonical));
        }
        return nonsplit_verdict("james-triple/long-middle-free", std::move(canonical), 2);
    }

    const bool pointed = std::holds_alternative<Pointed>(classify_two_part(b, c, p));
    if (pointed && v > len_p(b + pg, p)) {
        return nonsplit_verdict("james-then-pointed", TripleBuilder(a, b, c, p).y(pg, 1).build());
    }
    return split_verdict("james-then-nonjames/split");
}

TripleVerdict split_first_pair(std::int64_t a, std::int64_t b, std::int64_t c, Prime p) {
    const int v = val_p(a + 1, p);
    const int w = val_p(b + 1, p);
    const int gamma = len_p(c, p);
    const std::int64_t pv = ipow(p, v);
    const std::int64_t pw = ipow(p, w);
    const std::int64_t pg = ipow(p, gamma);

    if (!james_criterion(a + pv, b, p)) return split_verdict("split-pair/split");

    // Shared shifted quantities; b >= p^v because (a, b) is not James.
    const int val_b_shift = val_p(b - pv + 1, p);
    const int val_a_shift = val_p(a + pv + 1, p);

    if (gamma >= v && v == w && val_b_shift > gamma) {
        return nonsplit_verdict("split-pair/i", TripleBuilder(a, b, c, p).x(pv, 1).build());
    }
    if (gamma == v && v == w && digit(b, v, p) != 0 && digit(c, v, p) == 1) {
        return nonsplit_verdict("split-pair/ii",
                                TripleBuilder(a, b, c, p).x(pv, 1).z(pv, -digit(b, v, p)).build());
    }
    if (gamma > v && v == w && val_b_shift == gamma && c - pg < pv && len_p(b + pg, p) < val_a_shift) {
        return nonsplit_verdict("split-pair/iii",
                                TripleBuilder(a, b, c, p).x(pv, 1).y(pg, -digit(b, gamma, p)).build());
    }
    if (gamma == v && v < w && digit(c, gamma, p) == 1 && len_p(b + pv, p) < val_a_shift) {
        return nonsplit_verdict("split-pair/iv", TripleBuilder(a, b, c, p).y(pv, 1).z(pv, -1).build());
    }
    if (gamma == v && v > w && c - pv < pw && len_p(b + pv, p) < val_a_shift) {
        return nonsplit_verdict("split-pair/v", TripleBuilder(a, b, c, p).y(pv, 1).z(pv, -1).build());
    }
    return split_verdict("split-pair/split");
}

TripleVerdict pointed_first_pair(std::int64_t a, std::int64_t b, std::int64_t c, const Pointed& pt, Prime p) {
    const int v = val_p(a + 1, p);
    const int w = val_p(b + 1, p);
    const int beta = pt.beta;
    const int gamma = len_p(c, p);
    const std::int64_t pv = ipow(p, v);
    const std::int64_t pw = ipow(p, w);
    const std::int64_t pb = ipow(p, beta);
    const int val_a_shift = val_p(a + pv + 1, p);

    if (beta > gamma && gamma >= v && v == w && val_a_shift >= beta) {
        return nonsplit_verdict("pointed-pair/i", TripleBuilder(a, b, c, p).x(pv, 1).build());
    }
    if (beta == gamma && gamma > v && v == w && len_p(b + pb, p) < val_a_shift) {
        return nonsplit_verdict("pointed-pair/ii", TripleBuilder(a, b, c, p).x(pv, 1).y(pb, -1).build());
    }
    if (beta == gamma && gamma > v && v == w && len_p(b + pb, p) < val_p(a + pv + pb + 1, p)) {
        return nonsplit_verdict("pointed-pair/iii",
                                TripleBuilder(a, b, c, p).x(pv, 1).y(pb, -1).z(pb, 1).build());
    }
    if (v >= w && w > gamma) {
        return nonsplit_verdict("pointed-pair/iv", TripleBuilder(a, b, c, p).x(pb, 1).build());
    }
    if (gamma == v && v > w && val_a_shift > beta && c - pv < pw) {
        return nonsplit_verdict("pointed-pair/v", TripleBuilder(a, b, c, p).y(pv, 1).z(pv, -1).build());
    }
    return split_verdict("pointed-pair/split");
}

/// Embeds a triple multi-sequence for rows (r, r+1, r+2) of lambda.
MultiSequence embed_triple(const MultiSequence& triple, const Partition& lambda, int r) {
    const Partition sub = lambda.slice(r, r + 2);
    const SlotLayout small(sub);
    const SlotLayout big(lambda);
    MultiSequence out{std::vector<std::uint32_t>(big.size(), 0)};
    for (std::size_t col = 0; col < small.size(); ++col) {
        const SlotIndex s = small.slot(col);
        out.values[big.index(s.r + r - 1, s.s + r - 1, s.i)] = triple.values[col];
    }
    return out;
}

bool quadruple_conditions(const Partition& lambda, int r, Prime p) {
    const int v = lambda.v(r, p);
    const int l = lambda.l(r + 1, p);
    const std::int64_t pv = ipow(p, v);
    const std::int64_t pl1 = ipow(p, l + 1);
    const std::int64_t pv1 = ipow(p, v + 1);

    // lambda_r = (p^{l+1} - 1) - p^v + p^{l+1} * lambda'_r, lambda'_r >= 0.
    const std::int64_t base_r = (pl1 - 1) - pv;
    const std::int64_t rem_r = lambda.row(r) - base_r;
    if (rem_r < 0 || rem_r % pl1 != 0) return false;

    // lambda_{r+1} = (p^{v+1} - 1) - p^v + p^{v+1} * lambda'_{r+1}, digit v nonzero.
    const std::int64_t base_r1 = (pv1 - 1) - pv;
    const std::int64_t rem_r1 = lambda.row(r + 1) - base_r1;
    if (rem_r1 < 0 || rem_r1 % pv1 != 0) return false;
    if (digit(lambda.row(r + 1), v, p) == 0) return false;

    if (lambda.row(r + 2) != 2 * pv - 1) return false;

    const std::int64_t hat = lambda.row(r + 3) - pv;
    return hat >= 0 && hat < pv;
}

MultiSequence quadruple_witness(const Partition& lambda, int r, Prime p) {
    const SlotLayout layout(lambda);
    const PrimeField F(p);
    const std::int64_t pv = ipow(p, lambda.v(r, p));
    MultiSequence out{std::vector<std::uint32_t>(layout.size(), 0)};
    out.values[layout.index(r, r + 2, pv)] = 1;
    out.values[layout.index(r + 1, r + 3, pv)] = 1;
    out.values[layout.index(r + 1, r + 2, pv)] = F.neg(1);
    out.values[layout.index(r, r + 3, pv)] = F.neg(1);
    return out;
}

MultiSequence point_witness(const Partition& lambda, int r, Prime p) {
    const SlotLayout layout(lambda);
    MultiSequence out{std::vector<std::uint32_t>(layout.size(), 0)};
    out.values[layout.index(r, r + 1, ipow(p, lambda.l(r + 1, p)))] = 1;
    return out;
}

struct Decision {
    int dim = 0;
    std::string tag;
    std::optional<MultiSequence> witness;
};

Decision decide(const Partition& lambda, Prime p, bool want_witness) {
    const int n = lambda.length();
    if (n <= 1) return {0, "trivial", std::nullopt};

    if (is_james_partition(lambda, p)) {
        Decision d{james_ext_dim(lambda, p), "james", std::nullopt};
        if (want_witness) d.witness = canonical_multisequence(lambda, p);
        return d;
    }

    const std::vector<int> bad = non_james_pairs(lambda, p);
    const int r = bad.front();
    const TwoPartClass first = classify_two_part(lambda.row(r), lambda.row(r + 1), p);

    if (r == n - 1) {
        // Both formulations hold or fail together on a James prefix.
        assert(!std::holds_alternative<Pointed>(first) ||
               pointed_pair_prefix_ok(lambda, r, p) == pointed_last_pair_ok(lambda, p));
        if (std::holds_alternative<Pointed>(first) && pointed_last_pair_ok(lambda, p)) {
            Decision d{1, n == 2 ? "two-part-pointed" : "last-pair-pointed", std::nullopt};
            if (want_witness) d.witness = point_witness(lambda, r, p);
            return d;
        }
        return {0, "split", std::nullopt};
    }

    const bool only_r = bad.size() == 1;
    const bool r_and_next = bad.size() == 2 && bad[1] == r + 1;

    auto triple = [&] { return triple_verdict(lambda.row(r), lambda.row(r + 1), lambda.row(r + 2), p); };

    if (r_and_next) {
        TripleVerdict t = triple();
        if (t.nonsplit) {
            Decision d{1, "two-nonjames-pairs", std::nullopt};
            if (want_witness) d.witness = embed_triple(*t.witness, lambda, r);
            return d;
        }
    }
    if (only_r && std::holds_alternative<Split>(first)) {
        TripleVerdict t = triple();
        const bool p2_extra = p.value() != 2 || r >= n - 2 || lambda.l(r + 3, p) < lambda.l(r + 2, p);
        if (t.nonsplit && p2_extra) {
            Decision d{1, "split-pair-triple", std::nullopt};
            if (want_witness) d.witness = embed_triple(*t.witness, lambda, r);
            return d;
        }
    }
    if (only_r && std::holds_alternative<Pointed>(first) && pointed_pair_prefix_ok(lambda, r, p)) {
        Decision d{1, "pointed-pair", std::nullopt};
        if (want_witness) d.witness = point_witness(lambda, r, p);
        return d;
    }
    if (p.value() != 2 && r < n - 2 && is_james_partition(lambda.slice(r + 3, n), p) &&
        quadruple_conditions(lambda, r, p)) {
        Decision d{1, "quadruple", std::nullopt};
        if (want_witness) d.witness = quadruple_witness(lambda, r, p);
        return d;
    }
    return {0, "split", std::nullopt};
}

} // namespace

TripleVerdict triple_verdict(std::int64_t a, std::int64_t b, std::int64_t c, Prime p) {
    if (c < 1 || b < c || a < b) throw DomainError("triple_verdict needs a >= b >= c >= 1");
    const TwoPartClass first = classify_two_part(a, b, p);
    if (std::holds_alternative<James>(first)) return james_first_pair(a, b, c, p);
    if (const auto* pt = std::get_if<Pointed>(&first)) return pointed_first_pair(a, b, c, *pt, p);
    return split_first_pair(a, b, c, p);
}

int h0_dim(const Partition& lambda, Prime p) { return is_james_partition(lambda, p) ? 1 : 0; }

int james_ext_dim(const Partition& lambda, Prime p) {
    if (!is_james_partition(lambda, p)) throw DomainError("james_ext_dim needs a James partition");
    if (lambda.length() <= 1) return 0;
    const PSegments segs = p_segments(lambda, p);
    const int count = static_cast<int>(segs.p_segments.size());
    return lambda.l(1, p) > lambda.l(2, p) ? count - 1 : count;
}

bool pointed_pair_prefix_ok(const Partition& lambda, int r, Prime p) {
    const int target = len_p(lambda.row(r) + ipow(p, lambda.l(r + 1, p)), p);
    for (int q = 1; q < r; ++q) {
        if (lambda.v(q, p) == target) return false;
    }
    return true;
}

bool pointed_last_pair_ok(const Partition& lambda, Prime p) {
    const int n = lambda.length();
    if (n < 3) return true;
    return lambda.v(n - 2, p) > len_p(lambda.row(n - 1) + ipow(p, lambda.l(n, p)), p);
}

Classification ext1_dim(const Partition& lambda, Prime p, ClassifyOptions options) {
    Classification out;
    out.p = p.value();
    out.lambda = lambda;
    out.h0 = h0_dim(lambda, p);
    out.h1_exact = p.value() != 2;

    Decision d = decide(lambda, p, options.build_witness);
    out.ext1_dim = d.dim;
    out.case_tag = std::move(d.tag);
    out.witness = std::move(d.witness);
    if (out.witness && options.verify_witness) out.witness_verified = is_coherent(*out.witness, lambda, p);
    return out;
}

std::optional<MultiSequence> witness_multisequence(const Partition& lambda, Prime p) {
    return decide(lambda, p, true).witness;
}

int gl2_ext_dim(std::int64_t r, std::int64_t s, std::int64_t t, std::int64_t u, Prime p) {
    if (r < s || t < u || s < 0 || u < 0) throw DomainError("gl2_ext_dim needs r >= s >= 0 and t >= u >= 0");
    if (r + s != t + u) throw DomainError("gl2_ext_dim needs weights of equal degree");
    if (u - s < 1) return 0;
    const TwoPartClass cls = classify_two_part(t - s, u - s, p);
    return std::holds_alternative<Split>(cls) ? 0 : 1;
}

Sl2Verdict sl2_ext_dim(std::int64_t r, std::int64_t s, Prime p) {
    if (r < 0 || s < 0) throw DomainError("sl2_ext_dim needs r, s >= 0");
    if (r <= s) return {0, "r - s is not positive"};
    if ((r - s) % 2 != 0) return {0, "parity: r - s is odd"};
    const std::int64_t m = (r - s) / 2;
    const int v = val_p(s + m + 1, p);
    const int l = len_p(m, p);
    const std::int64_t pv = ipow(p, v);
    const std::int64_t pl = ipow(p, l);
    if (m < pv) return {1, "m < p^v"};
    if (m - pl < pv && pv < pl) return {1, "m - p^l < p^v < p^l"};
    return {0, "neither m < p^v nor m - p^l < p^v < p^l"};
}

} // namespace specht
