#include "specht/partition.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <sstream>

namespace specht {

Partition::Partition(std::vector<std::int64_t> parts) : parts_(std::move(parts)) {
    while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (parts_[i] < 1) {
            throw InvalidPartition("partition parts must be positive (zeros only at the end)");
        }
        if (i > 0 && parts_[i] > parts_[i - 1]) {
            throw InvalidPartition("partition parts must be weakly decreasing");
        }
    }
    degree_ = std::accumulate(parts_.begin(), parts_.end(), std::int64_t{0});
}

Partition Partition::slice(int first, int last) const {
    if (first < 1 || last > length() || first > last + 1) throw DomainError("Partition::slice: bad range");
    return Partition(std::vector<std::int64_t>(parts_.begin() + (first - 1), parts_.begin() + last));
}

Partition Partition::scaled(std::int64_t k) const {
    std::vector<std::int64_t> out = parts_;
    for (auto& x : out) x *= k;
    return Partition(std::move(out));
}

std::string Partition::to_string() const {
    std::ostringstream os;
    os << '(';
    for (std::size_t i = 0; i < parts_.size(); ++i) os << (i ? "," : "") << parts_[i];
    os << ')';
    return os.str();
}

Partition parse_partition(const std::string& text) {
    std::vector<std::int64_t> parts;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        const auto b = item.find_first_not_of(" \t");
        const auto e = item.find_last_not_of(" \t");
        if (b == std::string::npos) throw InvalidPartition("empty entry in partition '" + text + "'");
        item = item.substr(b, e - b + 1);
        std::size_t used = 0;
        long long value = 0;
        try {
            value = std::stoll(item, &used);
        } catch (const std::exception&) {
            throw InvalidPartition("not an integer: '" + item + "'");
        }
        if (used != item.size()) throw InvalidPartition("not an integer: '" + item + "'");
        if (value < 0) throw InvalidPartition("negative part in '" + text + "'");
        parts.push_back(value);
    }
    return Partition(std::move(parts));
}

std::string to_string(const TwoPartClass& cls) {
    if (std::holds_alternative<James>(cls)) return "James";
    if (const auto* pt = std::get_if<Pointed>(&cls)) {
        return "Pointed{beta=" + std::to_string(pt->beta) + ",b_hat=" + std::to_string(pt->b_hat) + "}";
    }
    return "Split";
}

namespace {

void require_pair(std::int64_t a, std::int64_t b) {
    if (b < 1 || a < b) {
        throw DomainError("two-part partition needs a >= b >= 1, got (" + std::to_string(a) + "," +
                          std::to_string(b) + ")");
    }
}

// b < p^k without forming p^k when k is large.
bool less_than_power(std::int64_t b, Prime p, int k) {
    std::int64_t pk = 1;
    for (int i = 0; i < k; ++i) {
        if (pk > b) return true;
        pk *= p;
    }
    return b < pk;
}

} // namespace

bool is_james_pair(std::int64_t a, std::int64_t b, Prime p) {
    require_pair(a, b);
    return less_than_power(b, p, val_p(a + 1, p));
}

bool is_james_partition(const Partition& lambda, Prime p) {
    for (int r = 1; r < lambda.length(); ++r) {
        if (!is_james_pair(lambda.row(r), lambda.row(r + 1), p)) return false;
    }
    return true;
}

TwoPartClass classify_two_part(std::int64_t a, std::int64_t b, Prime p) {
    require_pair(a, b);
    const int v = val_p(a + 1, p);
    if (less_than_power(b, p, v)) return James{};
    const int beta = len_p(b, p);
    const std::int64_t b_hat = b - ipow(p, beta);
    if (beta > v && less_than_power(b_hat, p, v)) return Pointed{beta, b_hat};
    return Split{};
}

std::vector<int> non_james_pairs(const Partition& lambda, Prime p) {
    std::vector<int> out;
    for (int r = 1; r < lambda.length(); ++r) {
        if (!is_james_pair(lambda.row(r), lambda.row(r + 1), p)) out.push_back(r);
    }
    return out;
}

int james_index(const Partition& lambda, Prime p) {
    if (lambda.length() < 2) throw DomainError("james_index needs at least two parts");
    if (!is_james_partition(lambda, p)) throw DomainError("james_index needs a James partition");
    int best = std::numeric_limits<int>::max();
    for (int r = 1; r < lambda.length(); ++r) best = std::min(best, lambda.v(r, p) - lambda.l(r + 1, p));
    return best;
}

PSegments p_segments(const Partition& lambda, Prime p) {
    if (!is_james_partition(lambda, p)) throw DomainError("p-segments are defined for James partitions");
    const int n = lambda.length();
    std::vector<int> ell(static_cast<std::size_t>(n) + 1, 0);
    for (int r = 1; r <= n; ++r) ell[static_cast<std::size_t>(r)] = lambda.l(r, p);

    // Union-find over 1..n.
    std::vector<int> parent(static_cast<std::size_t>(n) + 1);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int x) {
        while (parent[static_cast<std::size_t>(x)] != x) x = parent[static_cast<std::size_t>(x)];
        return x;
    };
    auto unite = [&](int x, int y) {
        x = find(x);
        y = find(y);
        if (x != y) parent[static_cast<std::size_t>(std::max(x, y))] = std::min(x, y);
    };

    auto classes = [n](auto&& same) {
        std::vector<std::vector<int>> out;
        for (int r = 1; r <= n; ++r) {
            int found = -1;
            for (std::size_t c = 0; c < out.size(); ++c) {
                if (same(out[c].front(), r)) {
                    found = static_cast<int>(c);
                    break;
                }
            }
            if (found < 0) {
                out.push_back({r});
            } else {
                out[static_cast<std::size_t>(found)].push_back(r);
            }
        }
        return out;
    };

    PSegments result;
    result.segments = classes([&](int r, int s) { return ell[static_cast<std::size_t>(r)] == ell[static_cast<std::size_t>(s)]; });

    auto segment_size = [&](int r) {
        for (const auto& seg : result.segments) {
            if (std::find(seg.begin(), seg.end(), r) != seg.end()) return seg.size();
        }
        return std::size_t{0};
    };

    for (const auto& seg : result.segments) {
        for (int r : seg) unite(seg.front(), r);
    }
    // Extra adjacency: r ~ r+1 when 1 < r < n, {r+1} is a whole segment and
    // lambda_r = p^{v_{r-1}} - 1.
    for (int r = 2; r < n; ++r) {
        if (segment_size(r + 1) != 1) continue;
        const int v_prev = lambda.v(r - 1, p);
        if (!less_than_power(lambda.row(r), p, v_prev)) continue;
        if (lambda.row(r) == ipow(p, v_prev) - 1) unite(r, r + 1);
    }
    result.p_segments = classes([&](int r, int s) { return find(r) == find(s); });
    return result;
}

PartitionEnumerator::PartitionEnumerator(std::int64_t d, int max_parts) : d_(d), max_parts_(max_parts) {
    if (d < 0) throw DomainError("enumerate_partitions: negative degree");
    if (max_parts < 1) throw DomainError("enumerate_partitions: max_parts must be positive");
}

std::optional<Partition> PartitionEnumerator::next() {
    if (done_) return std::nullopt;
    if (!started_) {
        started_ = true;
        if (d_ == 0) {
            done_ = true;
            return Partition{};
        }
        current_ = {d_};
        return Partition(current_);
    }
    for (;;) {
        // Rightmost part greater than one.
        std::int64_t ones = 0;
        while (!current_.empty() && current_.back() == 1) {
            current_.pop_back();
            ++ones;
        }
        if (current_.empty()) {
            done_ = true;
            return std::nullopt;
        }
        const std::int64_t top = --current_.back();
        std::int64_t rest = ones + 1;
        while (rest > 0) {
            const std::int64_t part = std::min(top, rest);
            current_.push_back(part);
            rest -= part;
        }
        if (static_cast<int>(current_.size()) <= max_parts_) return Partition(current_);
    }
}

std::vector<Partition> enumerate_partitions(std::int64_t d, int max_parts) {
    std::vector<Partition> out;
    PartitionEnumerator it(d, max_parts);
    while (auto lambda = it.next()) out.push_back(std::move(*lambda));
    return out;
}

} // namespace specht
