#include <doctest.h>

#include <random>

#include "autopos/chow.hpp"
#include "autopos/hyperbolicity.hpp"
#include "autopos/positivity.hpp"
#include "autopos/symfunc.hpp"
#include "oracles.hpp"

using namespace autopos;

namespace {

std::vector<Partition> all_partitions_up_to(int n) {
    std::vector<Partition> out;
    for (int k = 1; k <= n; ++k)
        for (const auto& p : partitions_of(k)) out.push_back(p);
    return out;
}

std::vector<Weight> dominant_c_weights(int g, int bound) {
    std::vector<Weight> out;
    std::vector<Weight::value_type> c(static_cast<std::size_t>(g), 0);
    std::function<void(int, Weight::value_type)> rec = [&](int i, Weight::value_type cap) {
        if (i == g) {
            out.emplace_back(c);
            return;
        }
        for (Weight::value_type v = 0; v <= cap; ++v) {
            c[static_cast<std::size_t>(i)] = v;
            rec(i + 1, v);
        }
    };
    rec(0, bound);
    return out;
}

SymFunc random_schur(std::mt19937& rng, int max_degree) {
    std::uniform_int_distribution<int> deg(0, max_degree);
    std::uniform_int_distribution<int> coef(-5, 5);
    SymFunc f;
    const int terms = 1 + static_cast<int>(rng() % 4);
    for (int t = 0; t < terms; ++t) {
        const int d = deg(rng);
        const auto shapes = d == 0 ? std::vector<Partition>{Partition{}} : partitions_of(d);
        f.add(shapes[rng() % shapes.size()], coef(rng));
    }
    return f;
}

} // namespace

TEST_SUITE("properties") {

TEST_CASE("Schur expansions are integral") {
    int cases = 0;
    for (const auto& lambda : all_partitions_up_to(4))
        for (const auto& mu : all_partitions_up_to(3)) {
            if (lambda.size() * mu.size() > 12) continue;
            SymFunc s;
            for (const auto& c : plethysm(lambda, mu)) {
                CHECK(c.multiplicity > 0);
                CHECK(c.shape.size() == lambda.size() * mu.size());
                s.add(c.shape, c.multiplicity);
            }
            CHECK(s.is_integral());
            ++cases;
        }
    for (int n = 1; n <= 7; ++n)
        for (const auto& mu : partitions_of(n)) {
            CHECK(to_schur(SymFunc::power(mu)).is_integral());
            CHECK(to_schur(to_power(SymFunc::monomial(mu))).is_integral());
            ++cases;
        }
    for (int k = 1; k <= 8; ++k)
        for (int g = 1; g <= 6; ++g) {
            for (const auto& c : lambda_k_sym2(k, g)) CHECK(c.multiplicity == 1);
            ++cases;
        }
    CHECK(cases >= 100);
}

TEST_CASE("dimension consistency of composite functors") {
    int cases = 0;
    for (const auto& lambda : all_partitions_up_to(12))
        for (const auto& mu : all_partitions_up_to(12)) {
            if (lambda.size() * mu.size() > 12) continue;
            const auto full = plethysm(lambda, mu);
            for (int g = 1; g <= 3; ++g) {
                const BigInt n = dim_gl(mu, g);
                BigInt lhs = 0;
                for (const auto& c : full) lhs += c.multiplicity * dim_gl(c.shape, g);
                INFO(lambda.to_string(), " o ", mu.to_string(), " g=", g);
                CHECK(lhs == dim_gl(lambda, static_cast<int>(n.get_si())));
                ++cases;
            }
        }
    CHECK(cases >= 100);
}

TEST_CASE("p-small is closed downward in the root order") {
    int cases = 0;
    for (int g = 2; g <= 3; ++g) {
        const RootDatumC datum(g);
        const auto weights = dominant_c_weights(g, g == 2 ? 7 : 4);
        for (std::int64_t p : {2, 3, 5, 7, 11, 13})
            for (const auto& lambda : weights) {
                if (!is_p_small(lambda, p, datum)) continue;
                for (const auto& mu : weights) {
                    if (!root_order_leq(mu, lambda)) continue;
                    INFO(mu.to_string(), " <= ", lambda.to_string(), " p=", p);
                    CHECK(is_p_small(mu, p, datum));
                    ++cases;
                }
            }
    }
    CHECK(cases >= 100);
}

TEST_CASE("orbit ratio bounds") {
    std::mt19937 rng(20241017);
    int cases = 0;
    for (int g = 2; g <= 4; ++g) {
        const RootDatumC datum(g);
        const Weight rho2 = rho_L_doubled(g);
        std::uniform_int_distribution<int> coord(-15, 15);
        for (int t = 0; t < 3400; ++t) {
            std::vector<Weight::value_type> c;
            for (int i = 0; i < g; ++i) c.push_back(coord(rng));
            const Weight gamma = 2 * Weight(c) + rho2;
            const auto r = orbit_ratio_max(gamma, datum);
            if (gamma.is_zero()) {
                CHECK_FALSE(r);
                continue;
            }
            REQUIRE(r);
            CHECK(*r >= 1);
            Weight::value_type bound = 0;
            for (int i = 0; i < g; ++i)
                for (int j = i; j < g; ++j)
                    bound = std::max(bound, std::abs(gamma[static_cast<std::size_t>(i)]) +
                                                std::abs(gamma[static_cast<std::size_t>(j)]));
            INFO(gamma.to_string());
            CHECK(*r <= Rational(bound, 2));
            CHECK(orbit_ratio_max(-gamma, datum) == r);
            std::vector<Weight::value_type> shuffled;
            for (auto v : gamma.coords()) shuffled.push_back(std::abs(v));
            std::shuffle(shuffled.begin(), shuffled.end(), rng);
            CHECK(orbit_ratio_max(Weight(shuffled), datum) == r);
            ++cases;
        }
        for (Weight::value_type k = -20; k <= 20; ++k) {
            if (k == 0) continue;
            CHECK(orbit_ratio_max(Weight::parallel(g, k), datum) == Rational(1));
            ++cases;
        }
    }
    CHECK(cases >= 10000);
}

TEST_CASE("direct certification persists at larger primes") {
    const RootDatumC datum(2);
    const std::vector<std::int64_t> primes{2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31};
    int cases = 0;
    for (Weight::value_type a = -14; a <= 0; ++a)
        for (Weight::value_type b = -14; b <= a; ++b) {
            const Weight w{a, b};
            bool seen = false;
            for (auto p : primes) {
                const bool direct = certify(w, p, datum).route == Route::direct;
                if (seen) CHECK(certify(w, p, datum).route != Route::none);
                if (direct) seen = true;
            }
            ++cases;
        }
    CHECK(cases >= 100);
}

TEST_CASE("basis round trips") {
    std::mt19937 rng(7);
    int cases = 0;
    for (int t = 0; t < 150; ++t) {
        const SymFunc f = random_schur(rng, 8);
        CHECK(to_schur(to_power(f)) == f);
        CHECK(to_schur(to_power(to_monomial(f))) == f);
        ++cases;
    }
    CHECK(cases >= 100);
}

TEST_CASE("multiplication is commutative and associative") {
    std::mt19937 rng(11);
    int cases = 0;
    for (int t = 0; t < 100; ++t) {
        const SymFunc a = random_schur(rng, 2), b = random_schur(rng, 2), c = random_schur(rng, 2);
        CHECK(multiply(a, b) == multiply(b, a));
        CHECK(multiply(multiply(a, b), c) == multiply(a, multiply(b, c)));
        ++cases;
    }
    CHECK(cases >= 100);
}

TEST_CASE("normal form is idempotent, linear and kills the ideal") {
    std::mt19937 rng(3);
    int cases = 0;
    for (int g = 1; g <= 3; ++g) {
        const auto gens = invariant_ideal_generators(g);
        std::uniform_int_distribution<int> coef(-4, 4);
        auto random_poly = [&](int degree) {
            Polynomial f(static_cast<std::size_t>(g) + 1);
            for (int t = 0; t < 4; ++t) {
                Exponents e(static_cast<std::size_t>(g) + 1, 0);
                e[0] = static_cast<int>(rng() % 3);
                for (int left = degree; left > 0; --left) ++e[1 + rng() % static_cast<unsigned>(g)];
                f.add_term(e, coef(rng));
            }
            return f;
        };
        for (int t = 0; t < 60; ++t) {
            const int d = static_cast<int>(rng() % static_cast<unsigned>(g * g + 2));
            const Polynomial a = random_poly(d), b = random_poly(d);
            const TautClass na = normal_form(a, g);
            CHECK(normal_form(na) == na);
            TautClass sum(g, d);
            for (const auto& [e, c] : na.terms()) sum.add_raw(e, c);
            const TautClass nb = normal_form(b, g);
            for (const auto& [e, c] : nb.terms()) sum.add_raw(e, c);
            CHECK(normal_form(sum).terms() == normal_form(a + b, g).terms());
            ++cases;
        }
        // f_i times every monomial of complementary degree up to g^2.
        for (std::size_t i = 0; i < gens.size(); ++i) {
            const int fdeg = 2 * static_cast<int>(i + 1);
            for (int d = 0; d + fdeg <= g * g; ++d) {
                std::vector<Exponents> monos;
                Exponents e(static_cast<std::size_t>(g), 0);
                std::function<void(int, int)> rec = [&](int var, int left) {
                    if (var == g - 1) {
                        e[static_cast<std::size_t>(var)] = left;
                        monos.push_back(e);
                        return;
                    }
                    for (int k = left; k >= 0; --k) {
                        e[static_cast<std::size_t>(var)] = k;
                        rec(var + 1, left - k);
                    }
                };
                rec(0, d);
                for (const auto& m : monos) {
                    Polynomial prod(static_cast<std::size_t>(g) + 1);
                    for (const auto& [ge, gc] : gens[i].terms()) {
                        Exponents pe(static_cast<std::size_t>(g) + 1, 0);
                        for (int v = 0; v < g; ++v)
                            pe[static_cast<std::size_t>(v) + 1] = ge[static_cast<std::size_t>(v)] + m[static_cast<std::size_t>(v)];
                        prod.add_term(pe, gc);
                    }
                    CHECK(normal_form(prod, g).is_zero());
                    ++cases;
                }
            }
        }
    }
    CHECK(cases >= 100);
}

TEST_CASE("quotient dimensions are palindromic with total 2^g g!") {
    for (int g = 1; g <= 3; ++g) {
        const auto d = quotient_dimensions(g);
        int total = 0;
        for (int x : d) total += x;
        int expected = 1;
        for (int i = 1; i <= g; ++i) expected *= 2 * i;
        CHECK(total == expected);
        CHECK(std::equal(d.begin(), d.end(), d.rbegin()));
    }
}

TEST_CASE("certified constituents have negative leading coordinate") {
    int cases = 0;
    for (int g = 2; g <= 4; ++g) {
        for (int k = k_threshold(g); k <= g * (g + 1) / 2; ++k) {
            const auto report = analyze(Partition(std::vector<int>(static_cast<std::size_t>(k), 1)), g, 31);
            if (report.verdict != Verdict::certified) continue;
            for (const auto& c : report.constituents) {
                CHECK(c.weight[0] <= -1);
                ++cases;
            }
        }
    }
    CHECK(cases > 0);
}

}
