#include "oracles.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

namespace oracle {

namespace {

struct Cell {
    int row;
    int col;
};

std::vector<Cell> cells_of(const Partition& shape) {
    std::vector<Cell> cells;
    for (int i = 0; i < shape.height(); ++i)
        for (int j = 0; j < shape[static_cast<std::size_t>(i)]; ++j) cells.push_back({i, j});
    return cells;
}

} // namespace

std::vector<std::vector<int>> ssyt(const Partition& shape, int n) {
    std::vector<std::vector<int>> out;
    const auto cells = cells_of(shape);
    std::vector<std::vector<int>> grid(static_cast<std::size_t>(shape.height()));
    for (int i = 0; i < shape.height(); ++i) grid[static_cast<std::size_t>(i)].assign(static_cast<std::size_t>(shape[static_cast<std::size_t>(i)]), 0);
    std::function<void(std::size_t)> rec = [&](std::size_t idx) {
        if (idx == cells.size()) {
            std::vector<int> flat;
            for (const auto& row : grid) flat.insert(flat.end(), row.begin(), row.end());
            out.push_back(std::move(flat));
            return;
        }
        const auto [r, c] = cells[idx];
        int lo = 1;
        if (c > 0) lo = std::max(lo, grid[static_cast<std::size_t>(r)][static_cast<std::size_t>(c - 1)]);
        if (r > 0) lo = std::max(lo, grid[static_cast<std::size_t>(r - 1)][static_cast<std::size_t>(c)] + 1);
        for (int v = lo; v <= n; ++v) {
            grid[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)] = v;
            rec(idx + 1);
        }
    };
    rec(0);
    return out;
}

BigInt ssyt_count(const Partition& shape, int n) { return static_cast<unsigned long>(ssyt(shape, n).size()); }

BigInt kostka_count(const Partition& shape, const std::vector<int>& content) {
    BigInt count = 0;
    for (const auto& t : ssyt(shape, static_cast<int>(content.size()))) {
        std::vector<int> c(content.size(), 0);
        for (int v : t) ++c[static_cast<std::size_t>(v - 1)];
        if (c == content) ++count;
    }
    return count;
}

Poly schur_poly(const Partition& shape, int n) {
    Poly p;
    for (const auto& t : ssyt(shape, n)) {
        std::vector<int> e(static_cast<std::size_t>(n), 0);
        for (int v : t) ++e[static_cast<std::size_t>(v - 1)];
        p[e] += 1;
    }
    return p;
}

Poly multiply(const Poly& a, const Poly& b) {
    Poly r;
    for (const auto& [ea, ca] : a) {
        for (const auto& [eb, cb] : b) {
            std::vector<int> e(ea.size());
            for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
            r[e] += ca * cb;
        }
    }
    for (auto it = r.begin(); it != r.end();) it = it->second == 0 ? r.erase(it) : std::next(it);
    return r;
}

bool peel(Poly f, int n, autopos::Decomposition& out) {
    out.clear();
    for (auto it = f.begin(); it != f.end();) it = it->second == 0 ? f.erase(it) : std::next(it);
    while (!f.empty()) {
        auto lead = std::prev(f.end());
        const std::vector<int> e = lead->first;
        const BigInt c = lead->second;
        if (c <= 0 || !std::is_sorted(e.rbegin(), e.rend())) return false;
        Partition eta(e);
        for (const auto& [m, k] : schur_poly(eta, n)) {
            auto& slot = f[m];
            slot -= c * k;
            if (slot == 0) f.erase(m);
        }
        out.push_back({eta, c.get_si()});
    }
    std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.shape < b.shape; });
    return true;
}

Poly plethysm_character(const Partition& lambda, const Partition& mu, int n) {
    std::vector<std::vector<int>> weights;
    for (const auto& [e, c] : schur_poly(mu, n))
        for (BigInt i = 0; i < c; ++i) weights.push_back(e);
    Poly r;
    for (const auto& t : ssyt(lambda, static_cast<int>(weights.size()))) {
        std::vector<int> e(static_cast<std::size_t>(n), 0);
        for (int v : t) {
            const auto& w = weights[static_cast<std::size_t>(v - 1)];
            for (std::size_t i = 0; i < e.size(); ++i) e[i] += w[i];
        }
        r[e] += 1;
    }
    return r;
}

namespace {

// Coefficient of x^a in p_mu(x_1..x_n): assignments of parts to variables.
BigInt power_sum_coefficient(const std::vector<int>& parts, std::size_t idx, std::vector<int>& remaining) {
    if (idx == parts.size()) {
        return std::all_of(remaining.begin(), remaining.end(), [](int r) { return r == 0; }) ? 1 : 0;
    }
    BigInt total = 0;
    for (auto& r : remaining) {
        if (r >= parts[idx]) {
            r -= parts[idx];
            total += power_sum_coefficient(parts, idx + 1, remaining);
            r += parts[idx];
        }
    }
    return total;
}

} // namespace

BigInt frobenius_character(const Partition& lambda, const Partition& mu) {
    if (lambda.size() != mu.size()) return 0;
    const int n = std::max(1, lambda.height());
    std::vector<int> target(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) target[static_cast<std::size_t>(i)] = lambda[static_cast<std::size_t>(i)] + n - 1 - i;
    std::vector<int> perm(static_cast<std::size_t>(n));
    std::iota(perm.begin(), perm.end(), 0);
    BigInt total = 0;
    do {
        int inversions = 0;
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j)
                if (perm[static_cast<std::size_t>(i)] > perm[static_cast<std::size_t>(j)]) ++inversions;
        std::vector<int> a(static_cast<std::size_t>(n));
        bool ok = true;
        for (int i = 0; i < n; ++i) {
            a[static_cast<std::size_t>(i)] = target[static_cast<std::size_t>(i)] - (n - 1 - perm[static_cast<std::size_t>(i)]);
            if (a[static_cast<std::size_t>(i)] < 0) ok = false;
        }
        if (!ok) continue;
        BigInt c = power_sum_coefficient(mu.vec(), 0, a);
        total += inversions % 2 ? -c : c;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return total;
}

BigInt partition_count(int n) {
    std::vector<BigInt> p(static_cast<std::size_t>(n) + 1, 0);
    p[0] = 1;
    for (int m = 1; m <= n; ++m) {
        BigInt s = 0;
        for (int k = 1;; ++k) {
            int g1 = k * (3 * k - 1) / 2;
            int g2 = k * (3 * k + 1) / 2;
            if (g1 > m) break;
            BigInt term = p[static_cast<std::size_t>(m - g1)];
            if (g2 <= m) term += p[static_cast<std::size_t>(m - g2)];
            s += (k % 2) ? term : BigInt(-term);
        }
        p[static_cast<std::size_t>(m)] = s;
    }
    return p[static_cast<std::size_t>(n)];
}

} // namespace oracle
