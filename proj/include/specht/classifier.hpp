#pragma once

// Closed-form dimensions of H^0(Sigma_d, Sp(lambda)) and
// Ext^1_B(S^d E, K_lambda).  Every branch below is a direct transcription
// of a classification table; the coherence oracle is the referee.

#include <cstdint>
#include <optional>
#include <string>

#include "specht/coherence.hpp"
#include "specht/padic.hpp"
#include "specht/partition.hpp"

namespace specht {

/// Verdict for a three-part partition (a, b, c).
struct TripleVerdict {
    bool nonsplit = false;
    /// dim Ext^1 of (a, b, c): 0, 1, or 2 (only for one James-triple case).
    int ext1_dim = 0;
    std::string case_tag;
    /// A coherent, non-standard multi-sequence on the layout of (a, b, c)
    /// (columns x = y(1,2), z = y(1,3), y = y(2,3)); present iff nonsplit.
    std::optional<MultiSequence> witness;
};

/// Requires a >= b >= c >= 1 (DomainError otherwise).
[[nodiscard]] TripleVerdict triple_verdict(std::int64_t a, std::int64_t b, std::int64_t c, Prime p);

struct Classification {
    std::int64_t p = 2;
    Partition lambda;
    int h0 = 0;
    int ext1_dim = 0;
    /// dim H^1(Sigma_d, Sp(lambda)) equals ext1_dim when true; for p = 2
    /// ext1_dim is only a lower bound.
    bool h1_exact = true;
    std::string case_tag;
    std::optional<MultiSequence> witness;
    /// The witness passed the full relation check.
    bool witness_verified = false;
};

struct ClassifyOptions {
    bool build_witness = true;
    /// Check the witness against every relation before returning it.
    bool verify_witness = true;
};

[[nodiscard]] int h0_dim(const Partition& lambda, Prime p);

/// Number of p-segments, less one when l_1 > l_2.  0 for n <= 1.
/// Throws DomainError for non-James input.
[[nodiscard]] int james_ext_dim(const Partition& lambda, Prime p);

[[nodiscard]] Classification ext1_dim(const Partition& lambda, Prime p, ClassifyOptions options = {});

/// Witness of the branch that fired, or nullopt when lambda is split.
[[nodiscard]] std::optional<MultiSequence> witness_multisequence(const Partition& lambda, Prime p);

/// The two formulations of the "pointed last non-James pair" condition:
/// no q < r with v_q = len_p(lambda_r + p^{l_{r+1}}), and (only for
/// r = n - 1 >= 2) v_{n-2} > len_p(lambda_{n-1} + p^{l_n}).  Exposed so the
/// test suite can check they agree.
[[nodiscard]] bool pointed_pair_prefix_ok(const Partition& lambda, int r, Prime p);
[[nodiscard]] bool pointed_last_pair_ok(const Partition& lambda, Prime p);

/// dim Ext^1_{GL_2}(nabla(r,s), nabla(t,u)) for equal degrees.
[[nodiscard]] int gl2_ext_dim(std::int64_t r, std::int64_t s, std::int64_t t, std::int64_t u, Prime p);

struct Sl2Verdict {
    int dim = 0;
    std::string reason;
};

/// dim Ext^1_{SL_2}(nabla(r), nabla(s)) with the digit condition that decided it.
[[nodiscard]] Sl2Verdict sl2_ext_dim(std::int64_t r, std::int64_t s, Prime p);

} // namespace specht
