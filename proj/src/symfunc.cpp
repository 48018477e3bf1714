#include "autopos/symfunc.hpp"

#include <algorithm>
#include <atomic>
#include <mutex>
#include <span>
#include <sstream>
#include <stdexcept>
#include <thread>
#include <unordered_map>

namespace autopos {

std::string to_string(Basis basis) {
    switch (basis) {
    case Basis::schur: return "schur";
    case Basis::power: return "power";
    case Basis::monomial: return "monomial";
    }
    return "?";
}

SymFunc SymFunc::schur(const Partition& lambda, const Rational& c) {
    SymFunc f(Basis::schur);
    f.add(lambda, c);
    return f;
}

SymFunc SymFunc::power(const Partition& mu, const Rational& c) {
    SymFunc f(Basis::power);
    f.add(mu, c);
    return f;
}

SymFunc SymFunc::monomial(const Partition& mu, const Rational& c) {
    SymFunc f(Basis::monomial);
    f.add(mu, c);
    return f;
}

Rational SymFunc::coefficient(const Partition& key) const {
    auto it = terms_.find(key);
    return it == terms_.end() ? Rational(0) : it->second;
}

void SymFunc::add(const Partition& key, const Rational& c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.try_emplace(key, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

std::optional<int> SymFunc::degree() const {
    if (terms_.empty()) return 0;
    const int d = terms_.begin()->first.size();
    for (const auto& [key, c] : terms_) {
        if (key.size() != d) return std::nullopt;
    }
    return d;
}

bool SymFunc::is_integral() const {
    return std::all_of(terms_.begin(), terms_.end(),
                       [](const auto& t) { return t.second.get_den() == 1; });
}

SymFunc SymFunc::homogeneous_part(int d) const {
    SymFunc out(basis_);
    for (const auto& [key, c] : terms_) {
        if (key.size() == d) out.terms_.emplace(key, c);
    }
    return out;
}

std::vector<int> SymFunc::degrees() const {
    std::vector<int> out;
    for (const auto& [key, c] : terms_) out.push_back(key.size());
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

SymFunc& SymFunc::operator+=(const SymFunc& other) {
    if (other.basis_ != basis_ && !other.is_zero()) {
        throw std::invalid_argument("cannot add symmetric functions on different bases");
    }
    for (const auto& [key, c] : other.terms_) add(key, c);
    return *this;
}

SymFunc& SymFunc::operator-=(const SymFunc& other) {
    if (other.basis_ != basis_ && !other.is_zero()) {
        throw std::invalid_argument("cannot subtract symmetric functions on different bases");
    }
    for (const auto& [key, c] : other.terms_) add(key, -c);
    return *this;
}

SymFunc& SymFunc::operator*=(const Rational& c) {
    if (c == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& [key, v] : terms_) v *= c;
    return *this;
}

std::string SymFunc::to_string() const {
    if (terms_.empty()) return "0";
    const char prefix = basis_ == Basis::schur ? 's' : basis_ == Basis::power ? 'p' : 'm';
    std::ostringstream out;
    bool first = true;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const auto& [key, c] = *it;
        Rational mag = abs(c);
        if (first) {
            if (c < 0) out << "-";
        } else {
            out << (c < 0 ? " - " : " + ");
        }
        if (mag != 1) out << mag.get_str() << "*";
        out << prefix << key.to_string();
        first = false;
    }
    return out.str();
}

BigInt zee(const Partition& mu) {
    BigInt z = 1;
    std::map<int, int> mult;
    for (int part : mu.parts()) ++mult[part];
    for (const auto& [part, m] : mult) {
        for (int k = 1; k <= m; ++k) {
            z *= part;
            z *= k;
        }
    }
    return z;
}

namespace {

std::vector<int> beta_set(const Partition& lambda, int beads) {
    std::vector<int> beta(static_cast<std::size_t>(beads));
    for (int i = 0; i < beads; ++i) {
        beta[static_cast<std::size_t>(i)] = lambda[static_cast<std::size_t>(i)] + beads - 1 - i;
    }
    return beta;
}

Partition from_beta_set(std::vector<int> beta) {
    std::sort(beta.begin(), beta.end(), std::greater<>());
    const int beads = static_cast<int>(beta.size());
    std::vector<int> parts(beta.size());
    for (int i = 0; i < beads; ++i) {
        parts[static_cast<std::size_t>(i)] = beta[static_cast<std::size_t>(i)] - (beads - 1 - i);
    }
    return Partition(std::move(parts));
}

} // namespace

void add_border_strips(const Partition& lambda, int length, int max_height,
                       const std::function<void(const Partition&, int)>& fn) {
    if (length <= 0) throw std::invalid_argument("border strip length must be positive");
    const int beads = lambda.height() + length;
    std::vector<int> beta = beta_set(lambda, beads);
    const int top = beta.front() + length;
    std::vector<char> occupied(static_cast<std::size_t>(top + 1), 0);
    for (int b : beta) occupied[static_cast<std::size_t>(b)] = 1;
    for (int i = 0; i < beads; ++i) {
        const int from = beta[static_cast<std::size_t>(i)];
        const int to = from + length;
        if (occupied[static_cast<std::size_t>(to)]) continue;
        int between = 0;
        for (int b = from + 1; b < to; ++b) between += occupied[static_cast<std::size_t>(b)];
        // Row index of the moved bead afterwards = number of beads above `to`.
        // The new height is at least the number of nonzero parts; check cheaply.
        std::vector<int> moved = beta;
        moved[static_cast<std::size_t>(i)] = to;
        Partition shape = from_beta_set(std::move(moved));
        if (max_height > 0 && shape.height() > max_height) continue;
        fn(shape, between % 2 == 0 ? 1 : -1);
    }
}

void remove_border_strips(const Partition& lambda, int length,
                          const std::function<void(const Partition&, int)>& fn) {
    if (length <= 0) throw std::invalid_argument("border strip length must be positive");
    const int beads = lambda.height();
    if (beads == 0) return;
    std::vector<int> beta = beta_set(lambda, beads);
    std::vector<char> occupied(static_cast<std::size_t>(beta.front() + 1), 0);
    for (int b : beta) occupied[static_cast<std::size_t>(b)] = 1;
    for (int i = 0; i < beads; ++i) {
        const int from = beta[static_cast<std::size_t>(i)];
        const int to = from - length;
        if (to < 0 || occupied[static_cast<std::size_t>(to)]) continue;
        int between = 0;
        for (int b = to + 1; b < from; ++b) between += occupied[static_cast<std::size_t>(b)];
        std::vector<int> moved = beta;
        moved[static_cast<std::size_t>(i)] = to;
        fn(from_beta_set(std::move(moved)), between % 2 == 0 ? 1 : -1);
    }
}

namespace {

struct PairHash {
    std::size_t operator()(const std::pair<Partition, Partition>& k) const noexcept {
        PartitionHash h;
        return h(k.first) * 1000003u ^ h(k.second);
    }
};

std::mutex character_mutex;
std::unordered_map<std::pair<Partition, Partition>, BigInt, PairHash> character_memo;

std::mutex kostka_mutex;
std::unordered_map<std::pair<Partition, Partition>, BigInt, PairHash> kostka_memo;

BigInt character_impl(const Partition& lambda, const Partition& mu) {
    if (mu.empty()) return lambda.empty() ? 1 : 0;
    const auto key = std::make_pair(lambda, mu);
    {
        std::lock_guard lock(character_mutex);
        if (auto it = character_memo.find(key); it != character_memo.end()) return it->second;
    }
    const Partition rest(std::vector<int>(mu.vec().begin() + 1, mu.vec().end()));
    BigInt value = 0;
    remove_border_strips(lambda, mu[0], [&](const Partition& smaller, int sign) {
        BigInt sub = character_impl(smaller, rest);
        if (sign > 0) value += sub; else value -= sub;
    });
    std::lock_guard lock(character_mutex);
    character_memo.emplace(key, value);
    return value;
}

} // namespace

BigInt sym_character(const Partition& lambda, const Partition& mu) {
    if (lambda.size() != mu.size()) {
        throw std::invalid_argument("character arguments must have equal size: " + lambda.to_string() +
                                    " vs " + mu.to_string());
    }
    return character_impl(lambda, mu);
}

namespace {

// Shapes kappa inside lambda with lambda/kappa a horizontal strip of `size` cells.
void horizontal_strips(const Partition& lambda, int size, std::vector<int>& kappa, std::size_t row,
                       const std::function<void(const Partition&)>& fn) {
    const std::size_t h = static_cast<std::size_t>(lambda.height());
    if (row == h) {
        if (size == 0) fn(Partition(kappa));
        return;
    }
    const int hi = lambda[row];
    const int lo = lambda[row + 1];
    for (int k = hi; k >= lo; --k) {
        const int removed = hi - k;
        if (removed > size) break;
        kappa[row] = k;
        horizontal_strips(lambda, size - removed, kappa, row + 1, fn);
    }
}

} // namespace

BigInt kostka(const Partition& lambda, const Partition& content) {
    if (lambda.size() != content.size()) return 0;
    if (content.empty()) return 1;
    const auto key = std::make_pair(lambda, content);
    {
        std::lock_guard lock(kostka_mutex);
        if (auto it = kostka_memo.find(key); it != kostka_memo.end()) return it->second;
    }
    const int last = content.vec().back();
    const Partition rest(std::vector<int>(content.vec().begin(), content.vec().end() - 1));
    BigInt value = 0;
    std::vector<int> kappa(static_cast<std::size_t>(lambda.height()), 0);
    horizontal_strips(lambda, last, kappa, 0, [&](const Partition& inner) { value += kostka(inner, rest); });
    std::lock_guard lock(kostka_mutex);
    kostka_memo.emplace(key, value);
    return value;
}

namespace {

SymFunc monomial_to_schur(const SymFunc& f) {
    SymFunc remaining = f;
    SymFunc out(Basis::schur);
    while (!remaining.is_zero()) {
        // Lexicographically largest key is dominance-maximal.
        const auto [top, c] = *remaining.terms().rbegin();
        out.add(top, c);
        SymFunc expansion(Basis::monomial);
        for (const Partition& nu : partitions_of(top.size())) {
            if (!dominance_leq(nu, top)) continue;
            expansion.add(nu, Rational(kostka(top, nu)) * c);
        }
        remaining -= expansion;
    }
    return out;
}

SymFunc multiply_power(const SymFunc& f, const SymFunc& g) {
    SymFunc out(Basis::power);
    for (const auto& [a, ca] : f.terms()) {
        for (const auto& [b, cb] : g.terms()) {
            std::vector<int> merged;
            merged.reserve(a.vec().size() + b.vec().size());
            std::merge(a.vec().begin(), a.vec().end(), b.vec().begin(), b.vec().end(),
                       std::back_inserter(merged), std::greater<>());
            out.add(Partition(std::move(merged)), ca * cb);
        }
    }
    return out;
}

using SchurAccumulator = std::unordered_map<Partition, BigInt, PartitionHash>;

struct PowerTerm {
    std::vector<int> parts; // descending
    BigInt coef;
};

// Horner evaluation of sum_mu coef_mu * p_mu in the Schur basis: terms sharing
// the leading parts share the Schur expansion of their common tail, and each
// factor p_r acts by adding border strips of length r.
SchurAccumulator contract(std::span<const PowerTerm> terms, std::size_t depth, int remaining, int cap) {
    SchurAccumulator out;
    if (remaining == 0) {
        BigInt total = 0;
        for (const auto& t : terms) total += t.coef;
        if (total != 0) out.emplace(Partition{}, total);
        return out;
    }
    std::size_t i = 0;
    while (i < terms.size()) {
        const int r = terms[i].parts[depth];
        std::size_t j = i;
        while (j < terms.size() && terms[j].parts[depth] == r) ++j;
        SchurAccumulator child = contract(terms.subspan(i, j - i), depth + 1, remaining - r, cap);
        for (const auto& [shape, c] : child) {
            add_border_strips(shape, r, cap, [&](const Partition& grown, int sign) {
                BigInt& slot = out[grown];
                if (sign > 0) slot += c; else slot -= c;
            });
        }
        i = j;
    }
    return out;
}

struct ScaledPower {
    std::vector<PowerTerm> terms;
    BigInt denominator = 1;
};

ScaledPower scale_to_integers(const SymFunc& f) {
    ScaledPower out;
    for (const auto& [mu, c] : f.terms()) {
        mpz_lcm(out.denominator.get_mpz_t(), out.denominator.get_mpz_t(), c.get_den_mpz_t());
    }
    for (const auto& [mu, c] : f.terms()) {
        out.terms.push_back({mu.vec(), c.get_num() * (out.denominator / c.get_den())});
    }
    std::sort(out.terms.begin(), out.terms.end(),
              [](const PowerTerm& a, const PowerTerm& b) { return a.parts < b.parts; });
    return out;
}

// Sum of p_mu expansions, Schur coefficients scaled by the common denominator.
std::map<Partition, BigInt> power_to_schur_scaled(const ScaledPower& scaled, int degree, int cap,
                                                  unsigned threads,
                                                  const std::function<void(std::size_t, std::size_t)>& progress) {
    std::map<Partition, BigInt> result;
    if (scaled.terms.empty()) return result;
    if (degree == 0) {
        BigInt total = 0;
        for (const auto& t : scaled.terms) total += t.coef;
        if (total != 0) result.emplace(Partition{}, total);
        return result;
    }
    std::span<const PowerTerm> all(scaled.terms);
    std::vector<std::pair<std::size_t, std::size_t>> blocks;
    for (std::size_t i = 0; i < all.size();) {
        std::size_t j = i;
        while (j < all.size() && all[j].parts[0] == all[i].parts[0]) ++j;
        blocks.emplace_back(i, j);
        i = j;
    }
    if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
    threads = std::min<unsigned>(threads, static_cast<unsigned>(blocks.size()));

    std::atomic<std::size_t> next{0};
    std::size_t finished = 0;
    std::mutex merge_mutex;
    auto worker = [&] {
        SchurAccumulator local;
        for (std::size_t b = next++; b < blocks.size(); b = next++) {
            const auto [lo, hi] = blocks[b];
            const int r = all[lo].parts[0];
            SchurAccumulator child = contract(all.subspan(lo, hi - lo), 1, degree - r, cap);
            for (const auto& [shape, c] : child) {
                add_border_strips(shape, r, cap, [&](const Partition& grown, int sign) {
                    BigInt& slot = local[grown];
                    if (sign > 0) slot += c; else slot -= c;
                });
            }
            if (progress) {
                std::lock_guard lock(merge_mutex);
                progress(++finished, blocks.size());
            }
        }
        std::lock_guard lock(merge_mutex);
        for (auto& [shape, c] : local) {
            if (c != 0) result[shape] += c;
        }
    };
    if (threads <= 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker);
        for (auto& t : pool) t.join();
    }
    std::erase_if(result, [](const auto& kv) { return kv.second == 0; });
    return result;
}

} // namespace

SymFunc to_power(const SymFunc& f) {
    switch (f.basis()) {
    case Basis::power:
        return f;
    case Basis::monomial:
        return to_power(monomial_to_schur(f));
    case Basis::schur:
        break;
    }
    SymFunc out(Basis::power);
    std::map<int, std::vector<Partition>> classes;
    for (const auto& [lambda, c] : f.terms()) {
        auto& mus = classes[lambda.size()];
        if (mus.empty()) mus = partitions_of(lambda.size());
        for (const Partition& mu : mus) {
            BigInt chi = sym_character(lambda, mu);
            if (chi == 0) continue;
            out.add(mu, c * make_rational(chi, zee(mu)));
        }
    }
    return out;
}

SymFunc to_schur(const SymFunc& f, int max_height) {
    if (f.basis() == Basis::schur || f.basis() == Basis::monomial) {
        SymFunc full = f.basis() == Basis::schur ? f : monomial_to_schur(f);
        if (max_height <= 0) return full;
        SymFunc out(Basis::schur);
        for (const auto& [lambda, c] : full.terms()) {
            if (lambda.height() <= max_height) out.add(lambda, c);
        }
        return out;
    }
    SymFunc out(Basis::schur);
    for (int d : f.degrees()) {
        const ScaledPower scaled = scale_to_integers(f.homogeneous_part(d));
        for (const auto& [shape, c] : power_to_schur_scaled(scaled, d, max_height, 1, {})) {
            out.add(shape, make_rational(c, scaled.denominator));
        }
    }
    return out;
}

SymFunc to_monomial(const SymFunc& f) {
    if (f.basis() == Basis::monomial) return f;
    const SymFunc s = to_schur(f);
    SymFunc out(Basis::monomial);
    for (const auto& [lambda, c] : s.terms()) {
        for (const Partition& nu : partitions_of(lambda.size())) {
            if (!dominance_leq(nu, lambda)) continue;
            out.add(nu, c * Rational(kostka(lambda, nu)));
        }
    }
    return out;
}

SymFunc multiply(const SymFunc& f, const SymFunc& g) {
    const SymFunc product = multiply_power(to_power(f), to_power(g));
    return to_schur(product);
}

Decomposition plethysm(const Partition& lambda, const Partition& mu, const PlethysmOptions& options) {
    if (lambda.empty() || mu.empty()) throw std::invalid_argument("plethysm needs nonempty partitions");
    const SymFunc outer = to_power(SymFunc::schur(lambda));
    const SymFunc inner = to_power(SymFunc::schur(mu));

    // p_n o s_mu = s_mu(x^n): scale every part of every term by n.
    std::map<int, SymFunc> dilated;
    std::map<std::pair<int, int>, SymFunc> powers;
    auto dilation = [&](int n) -> const SymFunc& {
        auto it = dilated.find(n);
        if (it != dilated.end()) return it->second;
        SymFunc d(Basis::power);
        for (const auto& [rho, c] : inner.terms()) {
            std::vector<int> parts = rho.vec();
            for (int& part : parts) part *= n;
            d.add(Partition(std::move(parts)), c);
        }
        return dilated.emplace(n, std::move(d)).first->second;
    };
    auto power_of = [&](int n, int k) -> const SymFunc& {
        auto key = std::make_pair(n, k);
        auto it = powers.find(key);
        if (it != powers.end()) return it->second;
        SymFunc acc = dilation(n);
        for (int i = 1; i < k; ++i) acc = multiply_power(acc, dilation(n));
        return powers.emplace(key, std::move(acc)).first->second;
    };

    SymFunc composite(Basis::power);
    for (const auto& [nu, a] : outer.terms()) {
        std::map<int, int> mult;
        for (int part : nu.parts()) ++mult[part];
        SymFunc term = SymFunc::power(Partition{}, a);
        for (const auto& [part, m] : mult) term = multiply_power(term, power_of(part, m));
        composite += term;
    }

    const int degree = lambda.size() * mu.size();
    const ScaledPower scaled = scale_to_integers(composite);
    const auto schur = power_to_schur_scaled(scaled, degree, options.max_height, options.threads, options.progress);

    Decomposition out;
    out.reserve(schur.size());
    for (const auto& [eta, scaled_coef] : schur) {
        if (!mpz_divisible_p(scaled_coef.get_mpz_t(), scaled.denominator.get_mpz_t())) {
            throw std::logic_error("non-integral Schur coefficient for " + eta.to_string() + " in plethysm");
        }
        const BigInt c = scaled_coef / scaled.denominator;
        if (c < 0) {
            throw std::logic_error("negative Schur coefficient for " + eta.to_string() + " in plethysm");
        }
        if (eta.size() != degree) throw std::logic_error("plethysm constituent of wrong size");
        out.push_back({eta, to_int64(c)});
    }
    return out; // std::map iteration is ascending lexicographic
}

Decomposition restrict_height(const Decomposition& constituents, int g) {
    Decomposition out;
    for (const auto& c : constituents) {
        if (c.shape.height() <= g) out.push_back(c);
    }
    return out;
}

DecompositionStats stats(const Decomposition& constituents) {
    DecompositionStats s;
    s.distinct = constituents.size();
    for (const auto& c : constituents) {
        s.max_multiplicity = std::max(s.max_multiplicity, c.multiplicity);
        s.total += c.multiplicity;
    }
    return s;
}

bool filtration_condition(const Partition& lambda, std::int64_t p) {
    if (!is_prime(p)) throw std::invalid_argument(std::to_string(p) + " is not prime");
    if (p >= 2 * static_cast<std::int64_t>(lambda.size()) - 1) return true;
    return lambda.is_column() && p > lambda.size();
}

} // namespace autopos
