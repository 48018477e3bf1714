#include "autopos/rootdata.hpp"

#include <algorithm>
#include <charconv>
#include <deque>
#include <numeric>
#include <set>
#include <stdexcept>

namespace autopos {

bool Weight::is_l_dominant() const {
    for (std::size_t i = 1; i < coords_.size(); ++i) {
        if (coords_[i - 1] < coords_[i]) return false;
    }
    return true;
}

bool Weight::is_parallel() const {
    return std::adjacent_find(coords_.begin(), coords_.end(), std::not_equal_to<>()) == coords_.end();
}

bool Weight::is_zero() const {
    return std::all_of(coords_.begin(), coords_.end(), [](value_type v) { return v == 0; });
}

std::string Weight::to_string() const {
    std::string out = "(";
    for (std::size_t i = 0; i < coords_.size(); ++i) {
        if (i) out += ',';
        out += std::to_string(coords_[i]);
    }
    out += ')';
    return out;
}

Weight Weight::parse(std::string_view raw) {
    std::string text;
    for (std::size_t i = 0; i < raw.size(); ++i) {
        // U+2212 MINUS SIGN
        if (raw.substr(i, 3) == "\xE2\x88\x92") {
            text += '-';
            i += 2;
        } else if (raw[i] != ' ' && raw[i] != '\t') {
            text += raw[i];
        }
    }
    std::string_view body(text);
    if (!body.empty() && (body.front() == '(' || body.front() == '[')) {
        const char close = body.front() == '(' ? ')' : ']';
        if (body.size() < 2 || body.back() != close) throw std::invalid_argument("malformed weight: " + text);
        body = body.substr(1, body.size() - 2);
    }
    std::vector<value_type> coords;
    while (!body.empty()) {
        const auto comma = body.find(',');
        std::string_view token = body.substr(0, comma);
        if (!token.empty() && token.front() == '+') token.remove_prefix(1);
        value_type v = 0;
        auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), v);
        if (token.empty() || ec != std::errc() || ptr != token.data() + token.size()) {
            throw std::invalid_argument("malformed weight: " + text);
        }
        coords.push_back(v);
        if (comma == std::string_view::npos) break;
        body.remove_prefix(comma + 1);
        if (body.empty()) throw std::invalid_argument("malformed weight: " + text);
    }
    if (coords.empty()) throw std::invalid_argument("empty weight");
    return Weight(std::move(coords));
}

Weight& Weight::operator+=(const Weight& other) {
    if (other.rank() != rank()) throw std::invalid_argument("weight ranks differ");
    for (std::size_t i = 0; i < coords_.size(); ++i) coords_[i] += other.coords_[i];
    return *this;
}

Weight& Weight::operator-=(const Weight& other) {
    if (other.rank() != rank()) throw std::invalid_argument("weight ranks differ");
    for (std::size_t i = 0; i < coords_.size(); ++i) coords_[i] -= other.coords_[i];
    return *this;
}

Weight operator*(Weight::value_type k, Weight w) {
    for (auto& c : w.coords_) c *= k;
    return w;
}

Weight operator-(Weight w) {
    for (auto& c : w.coords_) c = -c;
    return w;
}

Weight SignedPermutation::apply(const Weight& v) const {
    if (static_cast<std::size_t>(v.rank()) != perm.size()) throw std::invalid_argument("rank mismatch");
    Weight out = Weight::zero(v.rank());
    for (std::size_t i = 0; i < perm.size(); ++i) {
        out[static_cast<std::size_t>(perm[i])] = sign[i] * v[i];
    }
    return out;
}

std::vector<SignedPermutation> weyl_group_c(int g) {
    std::vector<int> perm(static_cast<std::size_t>(g));
    std::iota(perm.begin(), perm.end(), 0);
    std::vector<SignedPermutation> out;
    do {
        for (unsigned mask = 0; mask < (1u << g); ++mask) {
            SignedPermutation w{perm, std::vector<int>(static_cast<std::size_t>(g), 1)};
            for (int i = 0; i < g; ++i) {
                if (mask & (1u << i)) w.sign[static_cast<std::size_t>(i)] = -1;
            }
            out.push_back(std::move(w));
        }
    } while (std::next_permutation(perm.begin(), perm.end()));
    return out;
}

std::vector<SignedPermutation> simple_reflections_c(int g) {
    std::vector<SignedPermutation> out;
    for (int i = 0; i + 1 < g; ++i) {
        SignedPermutation s{std::vector<int>(static_cast<std::size_t>(g)), std::vector<int>(static_cast<std::size_t>(g), 1)};
        std::iota(s.perm.begin(), s.perm.end(), 0);
        std::swap(s.perm[static_cast<std::size_t>(i)], s.perm[static_cast<std::size_t>(i + 1)]);
        out.push_back(std::move(s));
    }
    SignedPermutation last{std::vector<int>(static_cast<std::size_t>(g)), std::vector<int>(static_cast<std::size_t>(g), 1)};
    std::iota(last.perm.begin(), last.perm.end(), 0);
    last.sign.back() = -1;
    out.push_back(std::move(last));
    return out;
}

namespace {

Weight unit(int g, int i, Weight::value_type c = 1) {
    Weight w = Weight::zero(g);
    w[static_cast<std::size_t>(i)] = c;
    return w;
}

} // namespace

RootDatumC::RootDatumC(int g) : g_(g) {
    if (g < 1) throw std::invalid_argument("rank must be positive");
    for (int i = 0; i < g; ++i) {
        for (int j = i + 1; j < g; ++j) {
            Weight diff = unit(g, i) - unit(g, j);
            Weight sum = unit(g, i) + unit(g, j);
            levi_positive_.push_back({diff, diff});
            non_levi_positive_.push_back({sum, sum});
        }
        non_levi_positive_.push_back({unit(g, i, 2), unit(g, i)});
    }
    positive_ = levi_positive_;
    positive_.insert(positive_.end(), non_levi_positive_.begin(), non_levi_positive_.end());
    for (const Root& r : positive_) {
        roots_.push_back(r);
        roots_.push_back({-r.root, -r.coroot});
    }
    for (int i = 0; i + 1 < g; ++i) {
        Weight diff = unit(g, i) - unit(g, i + 1);
        levi_simple_.push_back({diff, diff});
    }
    simple_ = levi_simple_;
    simple_.push_back({unit(g, g - 1, 2), unit(g, g - 1)});

    coroot_orbits_.push_back(weyl_orbit(unit(g, 0)));
    if (g >= 2) coroot_orbits_.push_back(weyl_orbit(unit(g, 0) - unit(g, 1)));
}

std::int64_t RootDatumC::weyl_order() const {
    std::int64_t order = 1;
    for (int i = 1; i <= g_; ++i) order *= 2 * i;
    return order;
}

std::vector<Weight> weyl_orbit(const Weight& v) {
    const auto generators = simple_reflections_c(v.rank());
    std::set<Weight> seen{v};
    std::deque<Weight> queue{v};
    while (!queue.empty()) {
        Weight cur = std::move(queue.front());
        queue.pop_front();
        for (const auto& s : generators) {
            Weight next = s.apply(cur);
            if (seen.insert(next).second) queue.push_back(std::move(next));
        }
    }
    return {seen.begin(), seen.end()};
}

Weight rho_L_doubled(int g) {
    Weight w = Weight::zero(g);
    for (int i = 0; i < g; ++i) w[static_cast<std::size_t>(i)] = g - 1 - 2 * i;
    return w;
}

Weight rho_C(int g) {
    Weight w = Weight::zero(g);
    for (int i = 0; i < g; ++i) w[static_cast<std::size_t>(i)] = g - i;
    return w;
}

Weight reverse_negate(const Weight& w) {
    std::vector<Weight::value_type> out(w.coords().rbegin(), w.coords().rend());
    for (auto& c : out) c = -c;
    return Weight(std::move(out));
}

Weight automorphic_weight(const Partition& eta, int g) {
    if (eta.height() > g) {
        throw std::invalid_argument(eta.to_string() + " has more than " + std::to_string(g) + " rows");
    }
    Weight padded = Weight::zero(g);
    for (int i = 0; i < eta.height(); ++i) padded[static_cast<std::size_t>(i)] = eta[static_cast<std::size_t>(i)];
    return reverse_negate(padded);
}

std::int64_t pairing(const Weight& lambda, const Weight& coroot) {
    if (lambda.rank() != coroot.rank()) throw std::invalid_argument("pairing of vectors with different lengths");
    std::int64_t s = 0;
    for (std::size_t i = 0; i < lambda.coords().size(); ++i) s += lambda[i] * coroot[i];
    return s;
}

bool is_dominant_c(const Weight& w) {
    return w.is_l_dominant() && (w.rank() == 0 || w.coords().back() >= 0);
}

bool root_order_leq(const Weight& mu, const Weight& lambda) {
    const Weight d = lambda - mu;
    std::int64_t partial = 0;
    for (int i = 0; i < d.rank(); ++i) {
        partial += d[static_cast<std::size_t>(i)];
        if (partial < 0) return false;
    }
    return partial % 2 == 0;
}

} // namespace autopos
