#include "autopos/partition.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <numeric>
#include <stdexcept>

namespace autopos {

Partition::Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (parts_[i] <= 0) {
            throw std::invalid_argument("partition parts must be positive");
        }
        if (i > 0 && parts_[i] > parts_[i - 1]) {
            throw std::invalid_argument("partition parts must be weakly decreasing");
        }
    }
    size_ = std::accumulate(parts_.begin(), parts_.end(), 0);
}

bool Partition::is_strict() const {
    return std::adjacent_find(parts_.begin(), parts_.end()) == parts_.end();
}

bool Partition::is_column() const {
    return !parts_.empty() && parts_.front() == 1;
}

std::string Partition::to_string() const {
    std::string out = "[";
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (i) out += ',';
        out += std::to_string(parts_[i]);
    }
    out += ']';
    return out;
}

Partition Partition::parse(std::string_view text) {
    std::vector<int> parts;
    std::size_t i = 0;
    auto skip = [&] {
        while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
    };
    skip();
    char close = 0;
    if (i < text.size() && (text[i] == '[' || text[i] == '(')) {
        close = text[i] == '[' ? ']' : ')';
        ++i;
    }
    skip();
    bool expect_value = true;
    while (i < text.size() && text[i] != close) {
        if (!expect_value) {
            if (text[i] != ',') throw std::invalid_argument("malformed partition: " + std::string(text));
            ++i;
            skip();
            expect_value = true;
            continue;
        }
        int value = 0;
        auto [ptr, ec] = std::from_chars(text.data() + i, text.data() + text.size(), value);
        if (ec != std::errc()) throw std::invalid_argument("malformed partition: " + std::string(text));
        parts.push_back(value);
        i = static_cast<std::size_t>(ptr - text.data());
        skip();
        expect_value = false;
    }
    if (close) {
        if (i >= text.size()) throw std::invalid_argument("unterminated partition: " + std::string(text));
        ++i;
    }
    skip();
    if (i != text.size() || (expect_value && !parts.empty())) {
        throw std::invalid_argument("malformed partition: " + std::string(text));
    }
    return Partition(std::move(parts));
}

std::size_t PartitionHash::operator()(const Partition& p) const noexcept {
    std::size_t h = 0xcbf29ce484222325ULL;
    for (int part : p.parts()) {
        h ^= static_cast<std::size_t>(part) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    }
    return h;
}

bool Permutation::is_identity() const {
    for (std::size_t i = 0; i < image.size(); ++i) {
        if (image[i] != static_cast<int>(i + 1)) return false;
    }
    return true;
}

Permutation Permutation::inverse() const {
    Permutation inv{std::vector<int>(image.size())};
    for (std::size_t i = 0; i < image.size(); ++i) {
        inv.image[static_cast<std::size_t>(image[i] - 1)] = static_cast<int>(i + 1);
    }
    return inv;
}

Permutation operator*(const Permutation& a, const Permutation& b) {
    if (a.degree() != b.degree()) throw std::invalid_argument("permutation degrees differ");
    Permutation out{std::vector<int>(a.degree())};
    for (std::size_t i = 0; i < b.degree(); ++i) out.image[i] = a(b.image[i]);
    return out;
}

Partition conjugate(const Partition& lambda) {
    if (lambda.empty()) return {};
    std::vector<int> out(static_cast<std::size_t>(lambda[0]), 0);
    for (int row : lambda.parts()) {
        for (int j = 0; j < row; ++j) ++out[static_cast<std::size_t>(j)];
    }
    return Partition(std::move(out));
}

namespace {

// Row-major 1-based index of the first cell in each row.
std::vector<int> row_offsets(const Partition& lambda) {
    std::vector<int> offsets(static_cast<std::size_t>(lambda.height()), 0);
    for (int i = 1; i < lambda.height(); ++i) {
        offsets[static_cast<std::size_t>(i)] = offsets[static_cast<std::size_t>(i - 1)] + lambda[static_cast<std::size_t>(i - 1)];
    }
    return offsets;
}

} // namespace

Permutation sigma_perm(const Partition& lambda) {
    const Partition dual = conjugate(lambda);
    const auto rows = row_offsets(lambda);
    const auto cols = row_offsets(dual);
    Permutation sigma{std::vector<int>(static_cast<std::size_t>(lambda.size()))};
    for (int i = 0; i < lambda.height(); ++i) {
        for (int j = 0; j < lambda[static_cast<std::size_t>(i)]; ++j) {
            const int from = rows[static_cast<std::size_t>(i)] + j + 1;
            const int to = cols[static_cast<std::size_t>(j)] + i + 1;
            sigma.image[static_cast<std::size_t>(from - 1)] = to;
        }
    }
    return sigma;
}

std::vector<int> diagonal_hooks(const Partition& lambda) {
    const Partition dual = conjugate(lambda);
    std::vector<int> hooks;
    for (int i = 0; i < lambda.height() && lambda[static_cast<std::size_t>(i)] > i; ++i) {
        const auto u = static_cast<std::size_t>(i);
        hooks.push_back((lambda[u] - i - 1) + (dual[u] - i - 1) + 1);
    }
    return hooks;
}

Partition two_bracket(const Partition& lambda) {
    if (!lambda.is_strict()) {
        throw std::invalid_argument("2[lambda] needs distinct parts, got " + lambda.to_string());
    }
    // Frobenius coordinates (arms | legs) = (lambda_i | lambda_i - 1).
    const int r = lambda.height();
    const int rows = lambda.empty() ? 0 : lambda[0];
    std::vector<int> parts(static_cast<std::size_t>(rows), 0);
    for (int i = 0; i < r; ++i) {
        parts[static_cast<std::size_t>(i)] = lambda[static_cast<std::size_t>(i)] + i + 1;
    }
    // Below the diagonal square, row k has one cell in column j for every
    // leg lambda_j - 1 reaching down to row k.
    for (int k = r; k < rows; ++k) {
        int count = 0;
        for (int j = 0; j < r; ++j) {
            if (lambda[static_cast<std::size_t>(j)] - 1 + j >= k) ++count;
        }
        parts[static_cast<std::size_t>(k)] = count;
    }
    return Partition(std::move(parts));
}

BigInt dim_gl(const Partition& lambda, int g) {
    if (g < 0) throw std::invalid_argument("rank must be nonnegative");
    if (g == 0) return lambda.empty() ? 1 : 0;
    if (lambda.height() > g) return 0;
    BigInt num = 1;
    BigInt den = 1;
    for (int i = 0; i < g; ++i) {
        for (int j = i + 1; j < g; ++j) {
            num *= lambda[static_cast<std::size_t>(i)] - lambda[static_cast<std::size_t>(j)] + j - i;
            den *= j - i;
        }
    }
    return num / den;
}

namespace {

void enumerate(int remaining, int max_part, std::vector<int>& current,
               const std::function<void(const Partition&)>& fn) {
    if (remaining == 0) {
        fn(Partition(current));
        return;
    }
    // Ascending lexicographic order: smallest leading part first.
    for (int part = 1; part <= std::min(remaining, max_part); ++part) {
        current.push_back(part);
        enumerate(remaining - part, part, current, fn);
        current.pop_back();
    }
}

} // namespace

void for_each_partition(int n, const std::function<void(const Partition&)>& fn) {
    if (n < 0) throw std::invalid_argument("cannot partition a negative integer");
    std::vector<int> current;
    enumerate(n, n, current, fn);
}

std::vector<Partition> partitions_of(int n, int max_height) {
    std::vector<Partition> out;
    for_each_partition(n, [&](const Partition& p) {
        if (max_height <= 0 || p.height() <= max_height) out.push_back(p);
    });
    return out;
}

std::vector<Partition> distinct_part_partitions(int n) {
    std::vector<Partition> out;
    for_each_partition(n, [&](const Partition& p) {
        if (p.is_strict()) out.push_back(p);
    });
    return out;
}

bool dominance_leq(const Partition& mu, const Partition& lambda) {
    if (mu.size() != lambda.size()) return false;
    int a = 0;
    int b = 0;
    const int len = std::max(mu.height(), lambda.height());
    for (int i = 0; i < len; ++i) {
        a += mu[static_cast<std::size_t>(i)];
        b += lambda[static_cast<std::size_t>(i)];
        if (a > b) return false;
    }
    return true;
}

} // namespace autopos
