// One line per acceptance criterion.  All comparisons are exact integer
// equality (tolerance 0); the only real-valued bounds are wall-clock limits.

#include <array>
#include <chrono>
#include <cstdio>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "oracle.hpp"
#include "specht/classifier.hpp"
#include "specht/cli.hpp"

using namespace specht;

namespace {

using Clock = std::chrono::steady_clock;

constexpr double kMasterSweepSeconds = 600.0;
constexpr double kFamilyOracleSeconds = 30.0;

struct Outcome {
    bool pass = true;
    std::string detail;
};

/// Records the first failure; later ones only bump the count.
class Checker {
public:
    void expect(bool ok, const std::string& what) {
        ++checks_;
        if (ok) return;
        if (failures_++ == 0) first_ = what;
    }
    Outcome outcome(const std::string& summary) const {
        std::ostringstream os;
        os << summary << "; " << checks_ << " checks";
        if (failures_) os << ", " << failures_ << " failed, first: " << first_;
        return {failures_ == 0, os.str()};
    }

private:
    std::size_t checks_ = 0;
    std::size_t failures_ = 0;
    std::string first_;
};

template <class F>
void for_all(std::initializer_list<std::int64_t> primes, std::int64_t d_max, F&& f) {
    for (std::int64_t p : primes) {
        for (std::int64_t d = 1; d <= d_max; ++d) {
            for (const auto& lambda : enumerate_partitions(d, static_cast<int>(d))) f(lambda, Prime(p));
        }
    }
}

std::string tag(const Partition& lambda, Prime p) { return lambda.to_string() + " p=" + std::to_string(p.value()); }

Outcome master_sweep() {
    Checker c;
    const auto start = Clock::now();
    std::size_t instances = 0;
    for (std::int64_t p : {2, 3, 5, 7}) {
        const SweepReport r = run_sweep(Prime(p), {.d_max = 14, .parts_max = 0, .jobs = 1});
        instances += r.instances;
        for (const auto& m : r.mismatches) c.expect(false, tag(m.lambda, Prime(p)) + " " + m.case_tag);
        c.expect(r.instances == 507, "partition count for d <= 14");
    }
    const double secs = std::chrono::duration<double>(Clock::now() - start).count();
    c.expect(secs < kMasterSweepSeconds, "single-threaded runtime over limit");
    std::ostringstream os;
    os << instances << " (partition, p) instances, single-threaded " << secs << " s (limit " << kMasterSweepSeconds
       << " s)";
    return c.outcome(os.str());
}

Outcome four_ones() {
    Checker c;
    const Partition lambda{1, 1, 1, 1};
    const Prime p(3);
    const Classification cls = ext1_dim(lambda, p);
    c.expect(cls.ext1_dim == 1, "closed form");
    c.expect(ext1_dim_oracle(lambda, p) == 1, "oracle");
    c.expect(cls.case_tag == "quadruple", "case " + cls.case_tag);
    c.expect(cls.witness.has_value() && cls.witness_verified, "witness coherent");
    if (cls.witness) {
        c.expect(cls.witness->values == std::vector<std::uint32_t>{0, 1, 2, 2, 1, 0}, "witness slots");
        const std::array<MultiSequence, 2> stack{standard_multisequence(lambda, p), *cls.witness};
        c.expect(rank_of(stack, p) == 2, "witness independent of standard");
    }
    return c.outcome("(1,1,1,1) p=3: ext1 = 1 by both methods, quadruple witness coherent");
}

Outcome two_core_examples() {
    Checker c;
    const Prime p(2);
    const Partition a{2, 1, 1};
    const Partition b{2, 1, 1, 1};
    c.expect(ext1_dim(a, p).ext1_dim == 1, "(2,1,1) closed form");
    c.expect(ext1_dim_oracle(a, p) == 1, "(2,1,1) oracle");
    c.expect(ext1_dim(b, p).ext1_dim == 0, "(2,1,1,1) closed form");
    c.expect(ext1_dim_oracle(b, p) == 0, "(2,1,1,1) oracle");
    return c.outcome("p=2: (2,1,1) -> 1, (2,1,1,1) -> 0");
}

Outcome power_family() {
    Checker c;
    double family_secs = 0;
    for (std::int64_t p : {2, 3}) {
        const Prime P(p);
        for (int n = 2; n <= 3; ++n) {
            for (int top : {n, n + 1}) {
                std::vector<std::int64_t> parts;
                for (int k = top; k >= 2; --k) parts.push_back(ipow(P, k) - 1);
                parts.push_back(1);
                const Partition lambda(parts);
                const int expected = top - 1;
                c.expect(ext1_dim(lambda, P).ext1_dim == expected, "closed form " + tag(lambda, P));
                const auto start = Clock::now();
                c.expect(ext1_dim_oracle(lambda, P) == static_cast<std::size_t>(expected), "oracle " + tag(lambda, P));
                const double secs = std::chrono::duration<double>(Clock::now() - start).count();
                if (p == 3 && n == 3 && top == n) {
                    family_secs = secs;
                    c.expect(lambda == Partition{26, 8, 1}, "family member");
                    c.expect(secs < kFamilyOracleSeconds, "(26,8,1) oracle too slow");
                }
            }
        }
    }
    std::ostringstream os;
    os << "(p^n-1,...,p^2-1,1) -> n-1 and (p^{n+1}-1,...,1) -> n for p in {2,3}, n in {2,3}; oracle on (26,8,1) "
       << family_secs << " s (limit " << kFamilyOracleSeconds << " s)";
    return c.outcome(os.str());
}

Outcome scaled_partitions() {
    Checker c;
    for (std::int64_t p : {3, 5}) {
        for (std::int64_t d = 3; d <= 6; ++d) {
            for (const auto& lambda : enumerate_partitions(d, static_cast<int>(d))) {
                if (lambda.length() < 3) continue;
                const Partition s = lambda.scaled(p);
                c.expect(ext1_dim(s, Prime(p)).ext1_dim == 0, "closed form " + tag(s, Prime(p)));
                c.expect(ext1_dim_oracle(s, Prime(p)) == 0, "oracle " + tag(s, Prime(p)));
            }
        }
    }
    c.expect(ext1_dim(Partition{6, 6}, Prime(3)).ext1_dim == 0, "(6,6) closed form");
    c.expect(ext1_dim_oracle(Partition{6, 6}, Prime(3)) == 0, "(6,6) oracle");
    return c.outcome("p*lambda split for p in {3,5}, d <= 6, >= 3 parts; (6,6) at p=3 split");
}

Outcome two_part_theory() {
    Checker c;
    for (std::int64_t p : {2, 3, 5}) {
        const Prime P(p);
        for (std::int64_t b = 1; 2 * b <= 30; ++b) {
            for (std::int64_t a = b; a + b <= 30; ++a) {
                const Partition lambda{a, b};
                const TwoPartClass cls = classify_two_part(a, b, P);
                const std::size_t expected = std::holds_alternative<Pointed>(cls) ? 2 : 1;
                c.expect(dim_E(lambda, P) == expected, "dim E " + tag(lambda, P));
                c.expect(static_cast<std::size_t>(gl2_ext_dim(a + b, 0, a, b, P)) == ext1_dim_oracle(lambda, P),
                         "GL2 " + tag(lambda, P));
            }
        }
    }
    return c.outcome("a >= b >= 1, a+b <= 30, p in {2,3,5}: dim E = 1/2/1 for James/pointed/split, GL2 = oracle");
}

Outcome james_theory() {
    Checker c;
    std::size_t count = 0;
    for_all({2, 3, 5}, 16, [&](const Partition& lambda, Prime p) {
        if (!is_james_partition(lambda, p)) return;
        ++count;
        const std::size_t oracle = ext1_dim_oracle(lambda, p);
        if (lambda.length() < 2) {
            c.expect(oracle == 0 && james_ext_dim(lambda, p) == 0, "single row " + tag(lambda, p));
            return;
        }
        c.expect(static_cast<std::size_t>(james_ext_dim(lambda, p)) == oracle, "p-segments " + tag(lambda, p));
        const MultiSequence can = canonical_multisequence(lambda, p);
        c.expect(!can.is_zero(), "canonical nonzero " + tag(lambda, p));
        c.expect(is_coherent(can, lambda, p), "canonical coherent " + tag(lambda, p));
        c.expect(oracle <= static_cast<std::size_t>(lambda.length() - 1), "bound n-1 " + tag(lambda, p));
    });
    return c.outcome(std::to_string(count) + " James partitions of d <= 16, p in {2,3,5}");
}

Outcome structural() {
    Checker c;
    std::size_t distant_pairs = 0;
    for_all({2, 3, 5, 7}, 14, [&](const Partition& lambda, Prime p) {
        const bool james = is_james_partition(lambda, p);
        const MultiSequence st = standard_multisequence(lambda, p);
        c.expect(is_coherent(st, lambda, p), "standard coherent " + tag(lambda, p));
        c.expect(st.is_zero() == james, "standard zero iff James " + tag(lambda, p));
        const std::size_t e = dim_E(lambda, p);
        const std::size_t ext = ext1_dim_oracle(lambda, p);
        if (!james) {
            c.expect(ext + 1 == e, "dim E - 1 " + tag(lambda, p));
            c.expect(ext <= 1, "non-James cap " + tag(lambda, p));
        } else {
            c.expect(ext == e, "James ext = dim E " + tag(lambda, p));
        }
        const auto bad = non_james_pairs(lambda, p);
        const int n = lambda.length();
        bool distant = false;
        for (int r : bad) {
            for (int s : bad) distant = distant || (r + 2 < s && s < n);
        }
        if (distant) {
            ++distant_pairs;
            c.expect(ext == 0, "distant non-James pairs " + tag(lambda, p));
        }
    });
    c.expect(distant_pairs > 0, "no instance with two distant non-James pairs");
    return c.outcome("d <= 14, p in {2,3,5,7}: standard in kernel, zero iff James, ext = dim E - [non-James], cap 1, " +
                     std::to_string(distant_pairs) + " distant-pair instances split");
}

Outcome arithmetic() {
    Checker c;
    const oracle::Pascal pascal(60);
    for (std::int64_t p : {2, 3, 5, 7}) {
        const Prime P(p);
        for (int a = 0; a <= 60; ++a) {
            for (int b = 0; b <= a; ++b) {
                c.expect(binom_mod_p(a, b, P) == oracle::mod(pascal(a, b), p), "Lucas");
            }
        }
        for (std::int64_t a = 1; a <= 100; ++a) {
            const int v = val_p(a + 1, P);
            for (std::int64_t b = 1; b <= a && b < ipow(P, v); ++b) {
                c.expect(oracle::val(oracle::binom(a + b, b), p) == v - val_p(b, P), "valuation identity");
            }
        }
    }
    return c.outcome("Lucas = exact Pascal mod p for 0 <= b <= a <= 60; val_p C(a+b,b) = v - w on James pairs a <= 100");
}

Outcome h0_check() {
    Checker c;
    for_all({2, 3, 5, 7}, 14, [&](const Partition& lambda, Prime p) {
        bool james = true;
        for (int r = 1; r < lambda.length(); ++r) {
            james = james && oracle::james_pair_by_definition(lambda.row(r), lambda.row(r + 1), p.value());
        }
        c.expect(h0_dim(lambda, p) == (james ? 1 : 0), "h0 " + tag(lambda, p));
        c.expect(ext1_dim(lambda, p, {.build_witness = false}).h0 == h0_dim(lambda, p), "report h0 " + tag(lambda, p));
    });
    return c.outcome("h0 = 1 iff every consecutive pair passes the binomial James test, d <= 14, p in {2,3,5,7}");
}

} // namespace

int main() {
    const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
        {"master sweep", master_sweep},
        {"(1,1,1,1) at p=3", four_ones},
        {"(2,1,1) and (2,1,1,1) at p=2", two_core_examples},
        {"power family", power_family},
        {"scaled partitions", scaled_partitions},
        {"two-part theory", two_part_theory},
        {"James theory", james_theory},
        {"structural properties", structural},
        {"arithmetic substrate", arithmetic},
        {"H0", h0_check},
    };
    int failed = 0;
    for (std::size_t k = 0; k < criteria.size(); ++k) {
        Outcome o;
        try {
            o = criteria[k].second();
        } catch (const std::exception& e) {
            o = {false, std::string("exception: ") + e.what()};
        }
        if (!o.pass) ++failed;
        std::printf("[%s] %2zu %s: %s\n", o.pass ? "PASS" : "FAIL", k + 1, criteria[k].first.c_str(), o.detail.c_str());
        std::fflush(stdout);
    }
    std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
    return failed == 0 ? 0 : 1;
}
