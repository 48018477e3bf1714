#include "autopos/chow.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <functional>
#include <memory>
#include <mutex>
#include <sstream>
#include <stdexcept>

namespace autopos {

void TautClass::add_raw(const Exponents& e, const PPoly& c) {
    if (static_cast<int>(e.size()) != g_) throw std::invalid_argument("TautClass: exponent length differs from g");
    int d = 0;
    for (int x : e) d += x;
    if (d != degree_) throw std::invalid_argument("TautClass: term of wrong degree");
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(e, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

std::string TautClass::to_string() const {
    if (terms_.empty()) return "0";
    std::string out;
    auto names = x_names(g_);
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        std::string mono;
        for (int i = 0; i < g_; ++i) {
            int e = it->first[static_cast<std::size_t>(i)];
            if (e == 0) continue;
            if (!mono.empty()) mono += '*';
            mono += names[static_cast<std::size_t>(i)];
            if (e > 1) mono += '^' + std::to_string(e);
        }
        std::string coeff = it->second.to_string();
        bool simple = it->second.degree() == 0;
        std::string piece;
        if (mono.empty()) piece = simple ? coeff : "(" + coeff + ")";
        else if (simple && coeff == "1") piece = mono;
        else if (simple && coeff == "-1") piece = "-" + mono;
        else piece = (simple ? coeff : "(" + coeff + ")") + "*" + mono;
        if (out.empty()) out = piece;
        else if (piece[0] == '-') out += " - " + piece.substr(1);
        else out += " + " + piece;
    }
    return out;
}

std::vector<std::string> x_names(int g) {
    std::vector<std::string> n;
    for (int i = 1; i <= g; ++i) n.push_back("x" + std::to_string(i));
    return n;
}

std::vector<std::string> px_names(int g) {
    std::vector<std::string> n{"p"};
    for (int i = 1; i <= g; ++i) n.push_back("x" + std::to_string(i));
    return n;
}

std::vector<std::string> pk_names(int g) {
    std::vector<std::string> n{"p"};
    for (int i = 1; i <= g; ++i) n.push_back("k" + std::to_string(i));
    return n;
}

std::vector<Polynomial> invariant_ideal_generators(int g) {
    if (g < 1) throw std::invalid_argument("invariant_ideal_generators: g must be positive");
    std::vector<Polynomial> gens;
    auto n = static_cast<std::size_t>(g);
    for (int i = 1; i <= g; ++i) {
        Polynomial f(n);
        for (std::size_t j = 0; j < n; ++j) {
            Exponents e(n, 0);
            e[j] = 2 * i;
            f.add_term(e, 1);
        }
        gens.push_back(std::move(f));
    }
    return gens;
}

namespace {

// Graded reverse lexicographic comparison for monomials of equal degree.
bool grevlex_greater(const Exponents& a, const Exponents& b) {
    for (std::size_t i = a.size(); i-- > 0;) {
        if (a[i] != b[i]) return a[i] < b[i];
    }
    return false;
}

void monomials_rec(int g, int remaining, Exponents& cur, std::size_t pos, std::vector<Exponents>& out) {
    if (pos + 1 == static_cast<std::size_t>(g)) {
        cur[pos] = remaining;
        out.push_back(cur);
        return;
    }
    for (int e = remaining; e >= 0; --e) {
        cur[pos] = e;
        monomials_rec(g, remaining - e, cur, pos + 1, out);
    }
}

std::vector<Exponents> monomials_of_degree(int g, int d) {
    std::vector<Exponents> out;
    Exponents cur(static_cast<std::size_t>(g), 0);
    monomials_rec(g, d, cur, 0, out);
    std::sort(out.begin(), out.end(), grevlex_greater);
    return out;
}

using SparseRow = std::map<std::size_t, Rational>;

struct DegreeTable {
    std::vector<Exponents> monomials;  // descending grevlex
    std::map<Exponents, std::size_t> index;
    std::vector<std::size_t> standard;  // indices into monomials, descending
    // For every monomial, its normal form as (position in standard, coefficient).
    std::vector<std::vector<std::pair<std::size_t, Rational>>> reduction;
};

DegreeTable build_degree(int g, int d) {
    DegreeTable t;
    t.monomials = monomials_of_degree(g, d);
    const std::size_t n = t.monomials.size();
    for (std::size_t i = 0; i < n; ++i) t.index.emplace(t.monomials[i], i);
    // Column c holds monomial n-1-c, so columns ascend in grevlex and the
    // leading (smallest) column of each reduced row is a non-standard monomial.
    auto column = [&](const Exponents& e) { return n - 1 - t.index.at(e); };

    std::map<std::size_t, SparseRow> pivots;
    auto insert = [&](SparseRow row) {
        while (!row.empty()) {
            auto [c, v] = *row.begin();
            auto it = pivots.find(c);
            if (it == pivots.end()) {
                Rational inv = Rational(1) / v;
                for (auto& [k, x] : row) x *= inv;
                pivots.emplace(c, std::move(row));
                return;
            }
            Rational factor = v;
            for (const auto& [k, x] : it->second) {
                auto [slot, fresh] = row.try_emplace(k, 0);
                slot->second -= factor * x;
                if (slot->second == 0) row.erase(slot);
            }
        }
    };

    for (int i = 1; 2 * i <= d; ++i) {
        for (const auto& m : monomials_of_degree(g, d - 2 * i)) {
            SparseRow row;
            for (int j = 0; j < g; ++j) {
                Exponents e = m;
                e[static_cast<std::size_t>(j)] += 2 * i;
                row[column(e)] += 1;
            }
            insert(std::move(row));
        }
    }

    for (auto it = pivots.rbegin(); it != pivots.rend(); ++it) {
        SparseRow& row = it->second;
        std::vector<std::pair<std::size_t, Rational>> hits;
        for (const auto& [k, x] : row) {
            if (k != it->first && pivots.count(k)) hits.emplace_back(k, x);
        }
        for (const auto& [k, x] : hits) {
            for (const auto& [kk, y] : pivots.at(k)) {
                auto [slot, fresh] = row.try_emplace(kk, 0);
                slot->second -= x * y;
                if (slot->second == 0) row.erase(slot);
            }
        }
    }

    std::vector<std::size_t> std_pos(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        if (!pivots.count(n - 1 - i)) {
            std_pos[i] = t.standard.size();
            t.standard.push_back(i);
        }
    }
    t.reduction.resize(n);
    for (std::size_t i = 0; i < n; ++i) {
        std::size_t c = n - 1 - i;
        auto it = pivots.find(c);
        if (it == pivots.end()) {
            t.reduction[i].emplace_back(std_pos[i], Rational(1));
            continue;
        }
        for (const auto& [k, x] : it->second) {
            if (k == c) continue;
            t.reduction[i].emplace_back(std_pos[n - 1 - k], -x);
        }
    }
    return t;
}

struct QuotientRing {
    int g;
    std::vector<DegreeTable> degrees;  // 0..g^2
};

const QuotientRing& quotient_ring(int g) {
    static std::mutex mutex;
    static std::map<int, std::unique_ptr<QuotientRing>> rings;
    if (g < 1) throw std::invalid_argument("quotient ring: g must be positive");
    std::lock_guard<std::mutex> lock(mutex);
    auto it = rings.find(g);
    if (it != rings.end()) return *it->second;
    auto ring = std::make_unique<QuotientRing>();
    ring->g = g;
    for (int d = 0; d <= g * g; ++d) ring->degrees.push_back(build_degree(g, d));
    return *rings.emplace(g, std::move(ring)).first->second;
}

int exponent_degree(const Exponents& e) {
    int d = 0;
    for (int x : e) d += x;
    return d;
}

} // namespace

std::vector<Exponents> standard_monomials(int g, int degree) {
    if (degree < 0 || degree > g * g) return {};
    const auto& t = quotient_ring(g).degrees[static_cast<std::size_t>(degree)];
    std::vector<Exponents> out;
    for (std::size_t i : t.standard) out.push_back(t.monomials[i]);
    return out;
}

std::vector<int> quotient_dimensions(int g) {
    std::vector<int> dims;
    for (const auto& t : quotient_ring(g).degrees) dims.push_back(static_cast<int>(t.standard.size()));
    return dims;
}

TautClass normal_form(const TautClass& cls) {
    const int g = cls.g();
    TautClass out(g, cls.degree());
    if (cls.degree() > g * g) return out;
    const auto& t = quotient_ring(g).degrees[static_cast<std::size_t>(cls.degree())];
    for (const auto& [e, c] : cls.terms()) {
        for (const auto& [pos, x] : t.reduction[t.index.at(e)]) {
            out.add_raw(t.monomials[t.standard[pos]], c * x);
        }
    }
    return out;
}

TautClass normal_form(const Polynomial& poly, int g) {
    if (poly.nvars() != static_cast<std::size_t>(g) + 1) {
        throw std::invalid_argument("normal_form: expected a polynomial in p, x1..x" + std::to_string(g));
    }
    std::map<Exponents, PPoly> split;
    int degree = -1;
    for (const auto& [e, c] : poly.terms()) {
        Exponents x(e.begin() + 1, e.end());
        int d = exponent_degree(x);
        if (degree == -1) degree = d;
        else if (degree != d) throw std::invalid_argument("normal_form: input is not homogeneous in x1..xg");
        std::vector<Rational> coeffs(static_cast<std::size_t>(e[0]) + 1, Rational(0));
        coeffs.back() = c;
        split[x] += PPoly(std::move(coeffs));
    }
    TautClass cls(g, std::max(degree, 0));
    for (const auto& [x, c] : split) cls.add_raw(x, c);
    return normal_form(cls);
}

TautClass unit_class(int g) {
    TautClass one(g, 0);
    one.add_raw(Exponents(static_cast<std::size_t>(g), 0), Rational(1));
    return one;
}

namespace {

void compositions(int total, std::size_t parts, Exponents& cur, std::size_t pos,
                  const std::function<void(const Exponents&)>& visit) {
    if (pos + 1 == parts) {
        cur[pos] = total;
        visit(cur);
        return;
    }
    for (int e = total; e >= 0; --e) {
        cur[pos] = e;
        compositions(total - e, parts, cur, pos + 1, visit);
    }
}

BigInt multinomial(const Exponents& a) {
    BigInt r = 1;
    int n = 0;
    for (int x : a) {
        for (int i = 1; i <= x; ++i) {
            ++n;
            r *= n;
            r /= i;
        }
    }
    return r;
}

} // namespace

Polynomial intersection_polynomial(const TautClass& cls, const std::vector<Polynomial>& lambda, int power,
                                   const Exponents& normalizer) {
    const int g = cls.g();
    const std::size_t n = static_cast<std::size_t>(g);
    const std::size_t nv = n + 1;
    if (lambda.size() != n) throw std::invalid_argument("intersection: weight length differs from g");
    for (const auto& l : lambda) {
        if (l.nvars() != nv) throw std::invalid_argument("intersection: weight entries must be over p, k1..kg");
    }
    if (power < 0 || cls.degree() + power != g * g) {
        throw std::invalid_argument("intersection: degree " + std::to_string(cls.degree()) + " plus power " +
                                    std::to_string(power) + " is not " + std::to_string(g * g));
    }
    if (normalizer.size() != n || exponent_degree(normalizer) != g * g) {
        throw std::invalid_argument("intersection: normalizer must be a monomial of degree g^2");
    }
    const auto& top = quotient_ring(g).degrees[static_cast<std::size_t>(g * g)];
    if (top.standard.size() != 1) throw std::logic_error("intersection: top degree is not one-dimensional");
    auto top_coefficient = [&](const Exponents& m) -> Rational {
        const auto& red = top.reduction[top.index.at(m)];
        return red.empty() ? Rational(0) : red.front().second;
    };
    Rational norm = top_coefficient(normalizer);
    if (norm == 0) throw std::invalid_argument("intersection: normalizer vanishes in the quotient");

    std::vector<std::vector<Polynomial>> powers(n);
    for (std::size_t i = 0; i < n; ++i) {
        powers[i].push_back(Polynomial::constant(nv, 1));
        for (int e = 1; e <= power; ++e) powers[i].push_back(powers[i].back() * lambda[i]);
    }

    Polynomial result(nv);
    Exponents a(n, 0);
    compositions(power, n, a, 0, [&](const Exponents& comp) {
        Polynomial mono = Polynomial::constant(nv, Rational(multinomial(comp)));
        for (std::size_t i = 0; i < n; ++i) {
            if (comp[i]) mono = mono * powers[i][static_cast<std::size_t>(comp[i])];
        }
        if (mono.is_zero()) return;
        for (const auto& [b, c] : cls.terms()) {
            Exponents m(n);
            for (std::size_t i = 0; i < n; ++i) m[i] = comp[i] + b[i];
            Rational t = top_coefficient(m);
            if (t == 0) continue;
            result += mono * c.to_polynomial(nv, 0) * (t / norm);
        }
    });
    return result;
}

Polynomial intersection_polynomial(const TautClass& cls, int power, const Exponents& normalizer) {
    const std::size_t nv = static_cast<std::size_t>(cls.g()) + 1;
    std::vector<Polynomial> lambda;
    for (std::size_t i = 1; i < nv; ++i) lambda.push_back(Polynomial::variable(nv, i));
    return intersection_polynomial(cls, lambda, power, normalizer);
}

PPoly intersection_number(const TautClass& cls, const Weight& lambda, int power, const Exponents& normalizer) {
    if (lambda.rank() != cls.g()) throw std::invalid_argument("intersection: weight rank differs from g");
    const std::size_t nv = static_cast<std::size_t>(cls.g()) + 1;
    std::vector<Polynomial> entries;
    for (auto v : lambda.coords()) entries.push_back(Polynomial::constant(nv, Rational(BigInt(std::to_string(v)))));
    return PPoly::from_polynomial(intersection_polynomial(cls, entries, power, normalizer), 0);
}

const Stratum* EOFixture::find(std::string_view label) const {
    for (const auto& s : strata) {
        if (s.label == label) return &s;
    }
    return nullptr;
}

namespace {

std::string trim(std::string_view s) {
    std::size_t b = 0, e = s.size();
    while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
    while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
    return std::string(s.substr(b, e - b));
}

[[noreturn]] void fixture_error(std::size_t line, const std::string& what) {
    throw std::invalid_argument("eo-fixture line " + std::to_string(line) + ": " + what);
}

bool starts_with(std::string_view s, std::string_view prefix) { return s.substr(0, prefix.size()) == prefix; }

std::vector<std::string> split_top_level(std::string_view inner) {
    std::vector<std::string> parts;
    int depth = 0;
    std::string cur;
    for (char c : inner) {
        if (c == '(') ++depth;
        if (c == ')') --depth;
        if (c == ',' && depth == 0) {
            parts.push_back(trim(cur));
            cur.clear();
        } else {
            cur += c;
        }
    }
    parts.push_back(trim(cur));
    return parts;
}

} // namespace

EOFixture parse_fixture(std::string_view text) {
    EOFixture fx;
    bool have_header = false;
    bool have_normalizer = false;
    std::istringstream in{std::string(text)};
    std::string raw;
    std::size_t lineno = 0;
    while (std::getline(in, raw)) {
        ++lineno;
        std::string line = trim(raw);
        if (line.empty() || line[0] == '#') continue;
        try {
            if (!have_header) {
                if (!starts_with(line, "eo-fixture v1 g=")) fixture_error(lineno, "expected header \"eo-fixture v1 g=<g>\"");
                fx.g = std::stoi(line.substr(16));
                if (fx.g < 1 || fx.g > 8) fixture_error(lineno, "g out of range");
                have_header = true;
                continue;
            }
            const int g = fx.g;
            if (starts_with(line, "stratum ")) {
                if (have_normalizer) fixture_error(lineno, "stratum after normalizer");
                auto colon = line.find(':');
                if (colon == std::string::npos) fixture_error(lineno, "missing ':'");
                std::istringstream head(line.substr(8, colon - 8));
                Stratum s;
                std::string len;
                head >> s.label >> len;
                if (s.label.empty() || !starts_with(len, "len=")) fixture_error(lineno, "expected \"<label> len=<l>\"");
                s.length = std::stoi(len.substr(4));
                if (s.length < 0 || s.length > g * g) fixture_error(lineno, "length out of range");
                if (fx.find(s.label)) fixture_error(lineno, "duplicate stratum " + s.label);
                Polynomial poly = parse_polynomial(line.substr(colon + 1), px_names(g));
                if (poly.is_zero()) {
                    s.cls = TautClass(g, g * g - s.length);
                } else {
                    s.cls = normal_form(poly, g);
                    if (s.cls.degree() != g * g - s.length) {
                        fixture_error(lineno, "class of degree " + std::to_string(s.cls.degree()) +
                                                  " does not match length " + std::to_string(s.length));
                    }
                }
                fx.strata.push_back(std::move(s));
            } else if (starts_with(line, "normalizer:")) {
                Polynomial m = parse_polynomial(line.substr(11), x_names(g));
                if (m.terms().size() != 1 || m.terms().begin()->second != 1) fixture_error(lineno, "normalizer must be a monomial");
                fx.normalizer = m.terms().begin()->first;
                if (exponent_degree(fx.normalizer) != g * g) fixture_error(lineno, "normalizer must have degree g^2");
                have_normalizer = true;
            } else if (starts_with(line, "product ")) {
                if (!have_normalizer) fixture_error(lineno, "product before normalizer");
                auto lam = line.find(" lambda=");
                auto exp = line.find(" expect:");
                if (lam == std::string::npos || exp == std::string::npos || exp < lam) {
                    fixture_error(lineno, "expected \"product <label> lambda=(...) expect: <expr>\"");
                }
                ProductStanza p;
                p.label = trim(line.substr(8, lam - 8));
                p.lambda_text = trim(line.substr(lam + 8, exp - lam - 8));
                p.expect_text = trim(line.substr(exp + 8));
                if (!p.lambda_text.empty() && p.lambda_text.front() == '(') {
                    if (p.lambda_text.back() != ')') fixture_error(lineno, "unbalanced weight");
                    auto parts = split_top_level(std::string_view(p.lambda_text).substr(1, p.lambda_text.size() - 2));
                    if (parts.size() != static_cast<std::size_t>(g)) fixture_error(lineno, "weight must have g entries");
                    std::vector<Polynomial> entries;
                    for (const auto& part : parts) entries.push_back(parse_polynomial(part, pk_names(g)));
                    p.lambda = std::move(entries);
                }
                p.expect = parse_polynomial(p.expect_text, pk_names(g));
                fx.products.push_back(std::move(p));
            } else {
                fixture_error(lineno, "unrecognized stanza");
            }
        } catch (const std::invalid_argument& e) {
            std::string what = e.what();
            if (starts_with(what, "eo-fixture")) throw;
            fixture_error(lineno, what);
        } catch (const std::out_of_range&) {
            fixture_error(lineno, "number out of range");
        }
    }
    if (!have_header) throw std::invalid_argument("eo-fixture: missing header");
    if (!have_normalizer) throw std::invalid_argument("eo-fixture: missing normalizer");
    return fx;
}

EOFixture load_fixture(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open fixture " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_fixture(buf.str());
}

std::string to_string(ProductStatus s) {
    switch (s) {
    case ProductStatus::matched: return "matched";
    case ProductStatus::mismatched: return "mismatched";
    case ProductStatus::inert: return "inert";
    }
    return "?";
}

std::vector<ProductCheck> verify_fixture(const EOFixture& fixture) {
    std::vector<ProductCheck> out;
    const auto names = pk_names(fixture.g);
    for (const auto& prod : fixture.products) {
        ProductCheck check;
        check.label = prod.label;
        check.expected = prod.expect.to_string(names);
        const Stratum* s = fixture.find(prod.label);
        if (!s) {
            check.reason = "no class for stratum " + prod.label;
        } else if (!prod.lambda) {
            check.reason = "weight " + prod.lambda_text + " is not defined in the fixture";
        } else {
            Polynomial got = intersection_polynomial(s->cls, *prod.lambda, s->length, fixture.normalizer);
            check.computed = got.to_string(names);
            check.status = got == prod.expect ? ProductStatus::matched : ProductStatus::mismatched;
        }
        out.push_back(std::move(check));
    }
    return out;
}

std::optional<NefWitness> not_nef_witness(const EOFixture& fixture, const Weight& lambda, std::int64_t p) {
    if (lambda.rank() != fixture.g) throw std::invalid_argument("not_nef_witness: weight rank differs from g");
    if (!lambda.is_l_dominant()) throw std::invalid_argument("not_nef_witness: weight is not L-dominant");
    std::vector<const Stratum*> order;
    for (const auto& s : fixture.strata) order.push_back(&s);
    std::stable_sort(order.begin(), order.end(), [](const Stratum* a, const Stratum* b) { return a->length < b->length; });
    for (const Stratum* s : order) {
        Rational v = intersection_number(s->cls, lambda, s->length, fixture.normalizer).evaluate(Rational(BigInt(std::to_string(p))));
        if (v < 0) return NefWitness{s->label, s->length, v};
    }
    return std::nullopt;
}

} // namespace autopos
