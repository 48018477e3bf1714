#include "autopos/polynomial.hpp"

#include <cctype>
#include <stdexcept>

namespace autopos {

Polynomial Polynomial::constant(std::size_t nvars, const Rational& c) {
    Polynomial r(nvars);
    r.add_term(Exponents(nvars, 0), c);
    return r;
}

Polynomial Polynomial::variable(std::size_t nvars, std::size_t index) {
    if (index >= nvars) throw std::out_of_range("Polynomial::variable: index out of range");
    Polynomial r(nvars);
    Exponents e(nvars, 0);
    e[index] = 1;
    r.add_term(e, 1);
    return r;
}

void Polynomial::add_term(const Exponents& e, const Rational& c) {
    if (e.size() != nvars_) throw std::invalid_argument("Polynomial::add_term: arity mismatch");
    if (c == 0) return;
    auto [it, inserted] = terms_.try_emplace(e, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

int Polynomial::homogeneous_degree() const {
    int deg = -1;
    for (const auto& [e, c] : terms_) {
        int d = 0;
        for (int x : e) d += x;
        if (deg == -1) deg = d;
        else if (deg != d) return -2;
    }
    return deg;
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
    if (o.nvars_ != nvars_) throw std::invalid_argument("Polynomial: arity mismatch");
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
    if (o.nvars_ != nvars_) throw std::invalid_argument("Polynomial: arity mismatch");
    for (const auto& [e, c] : o.terms_) add_term(e, -c);
    return *this;
}

Polynomial& Polynomial::operator*=(const Rational& c) {
    if (c == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& [e, v] : terms_) v *= c;
    return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    if (a.nvars_ != b.nvars_) throw std::invalid_argument("Polynomial: arity mismatch");
    Polynomial r(a.nvars_);
    Exponents e(a.nvars_);
    for (const auto& [ea, ca] : a.terms_) {
        for (const auto& [eb, cb] : b.terms_) {
            for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
            r.add_term(e, ca * cb);
        }
    }
    return r;
}

Polynomial Polynomial::pow(unsigned n) const {
    Polynomial result = constant(nvars_, 1);
    Polynomial base = *this;
    while (n) {
        if (n & 1u) result = result * base;
        n >>= 1;
        if (n) base = base * base;
    }
    return result;
}

namespace {

std::string monomial_string(const Exponents& e, const std::vector<std::string>& names) {
    std::string out;
    for (std::size_t i = 0; i < e.size(); ++i) {
        if (e[i] == 0) continue;
        if (!out.empty()) out += '*';
        out += names.at(i);
        if (e[i] > 1) out += '^' + std::to_string(e[i]);
    }
    return out;
}

void append_term(std::string& out, const Rational& c, const std::string& mono) {
    Rational mag = abs(c);
    if (out.empty()) {
        if (c < 0) out += '-';
    } else {
        out += c < 0 ? " - " : " + ";
    }
    if (mono.empty()) {
        out += to_string(mag);
    } else if (mag == 1) {
        out += mono;
    } else {
        out += to_string(mag) + '*' + mono;
    }
}

} // namespace

std::string Polynomial::to_string(const std::vector<std::string>& names) const {
    if (names.size() < nvars_) throw std::invalid_argument("Polynomial::to_string: too few names");
    if (terms_.empty()) return "0";
    std::string out;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        append_term(out, it->second, monomial_string(it->first, names));
    }
    return out;
}

namespace {

class Parser {
public:
    Parser(std::string_view text, const std::vector<std::string>& names) : names_(names) {
        for (std::size_t i = 0; i < text.size(); ++i) {
            if (text.compare(i, 3, "\xE2\x88\x92") == 0) {
                src_ += '-';
                i += 2;
            } else {
                src_ += text[i];
            }
        }
    }

    Polynomial parse() {
        Polynomial r = expr();
        skip_space();
        if (pos_ != src_.size()) fail("unexpected '" + std::string(1, src_[pos_]) + "'");
        return r;
    }

private:
    [[noreturn]] void fail(const std::string& what) const {
        throw std::invalid_argument("parse_polynomial: " + what + " at offset " +
                                    std::to_string(pos_) + " in \"" + src_ + "\"");
    }

    void skip_space() {
        while (pos_ < src_.size() && std::isspace(static_cast<unsigned char>(src_[pos_]))) ++pos_;
    }

    char peek() {
        skip_space();
        return pos_ < src_.size() ? src_[pos_] : '\0';
    }

    bool starts_atom(char c) const {
        return std::isdigit(static_cast<unsigned char>(c)) || std::isalpha(static_cast<unsigned char>(c)) || c == '(';
    }

    Polynomial expr() {
        Polynomial r = term();
        for (;;) {
            char c = peek();
            if (c == '+') {
                ++pos_;
                r += term();
            } else if (c == '-') {
                ++pos_;
                r -= term();
            } else {
                return r;
            }
        }
    }

    Polynomial term() {
        Polynomial r = factor();
        for (;;) {
            char c = peek();
            if (c == '*') {
                ++pos_;
                r = r * factor();
            } else if (c == '/') {
                ++pos_;
                Polynomial d = factor();
                if (d.homogeneous_degree() != 0) fail("division by a non-constant");
                r *= Rational(1) / d.terms().begin()->second;
            } else if (starts_atom(c)) {
                r = r * factor();
            } else {
                return r;
            }
        }
    }

    Polynomial factor() {
        char c = peek();
        if (c == '-') {
            ++pos_;
            return -factor();
        }
        if (c == '+') {
            ++pos_;
            return factor();
        }
        Polynomial base = atom();
        if (peek() == '^') {
            ++pos_;
            skip_space();
            std::size_t start = pos_;
            while (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_]))) ++pos_;
            if (start == pos_) fail("expected exponent");
            return base.pow(static_cast<unsigned>(std::stoul(src_.substr(start, pos_ - start))));
        }
        return base;
    }

    Polynomial atom() {
        char c = peek();
        if (c == '(') {
            ++pos_;
            Polynomial r = expr();
            if (peek() != ')') fail("expected ')'");
            ++pos_;
            return r;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::size_t start = pos_;
            while (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_]))) ++pos_;
            return Polynomial::constant(names_.size(), Rational(BigInt(src_.substr(start, pos_ - start))));
        }
        if (std::isalpha(static_cast<unsigned char>(c))) {
            std::size_t start = pos_;
            ++pos_;
            while (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_]))) ++pos_;
            std::string name = src_.substr(start, pos_ - start);
            for (std::size_t i = 0; i < names_.size(); ++i) {
                if (names_[i] == name) return Polynomial::variable(names_.size(), i);
            }
            pos_ = start;
            fail("unknown symbol '" + name + "'");
        }
        if (c == '\0') fail("unexpected end of input");
        fail("unexpected '" + std::string(1, c) + "'");
    }

    std::string src_;
    const std::vector<std::string>& names_;
    std::size_t pos_ = 0;
};

} // namespace

Polynomial parse_polynomial(std::string_view text, const std::vector<std::string>& names) {
    return Parser(text, names).parse();
}

PPoly::PPoly(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

void PPoly::trim() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

Rational PPoly::evaluate(const Rational& p) const {
    Rational r = 0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) r = r * p + *it;
    return r;
}

PPoly& PPoly::operator+=(const PPoly& o) {
    if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size(), Rational(0));
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
    trim();
    return *this;
}

PPoly& PPoly::operator-=(const PPoly& o) {
    if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size(), Rational(0));
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
    trim();
    return *this;
}

PPoly& PPoly::operator*=(const Rational& c) {
    for (auto& x : coeffs_) x *= c;
    trim();
    return *this;
}

PPoly operator*(const PPoly& a, const PPoly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<Rational> r(a.coeffs_.size() + b.coeffs_.size() - 1, Rational(0));
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
        for (std::size_t j = 0; j < b.coeffs_.size(); ++j) r[i + j] += a.coeffs_[i] * b.coeffs_[j];
    return PPoly(std::move(r));
}

PPoly PPoly::from_polynomial(const Polynomial& poly, std::size_t var) {
    std::vector<Rational> c;
    for (const auto& [e, v] : poly.terms()) {
        for (std::size_t i = 0; i < e.size(); ++i) {
            if (i != var && e[i] != 0) throw std::invalid_argument("PPoly::from_polynomial: extra variables");
        }
        std::size_t d = static_cast<std::size_t>(e[var]);
        if (c.size() <= d) c.resize(d + 1, Rational(0));
        c[d] += v;
    }
    return PPoly(std::move(c));
}

Polynomial PPoly::to_polynomial(std::size_t nvars, std::size_t var) const {
    Polynomial r(nvars);
    Exponents e(nvars, 0);
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        e[var] = static_cast<int>(i);
        r.add_term(e, coeffs_[i]);
    }
    return r;
}

std::string PPoly::to_string() const {
    if (coeffs_.empty()) return "0";
    std::string out;
    for (std::size_t i = coeffs_.size(); i-- > 0;) {
        if (coeffs_[i] == 0) continue;
        std::string mono = i == 0 ? "" : (i == 1 ? "p" : "p^" + std::to_string(i));
        append_term(out, coeffs_[i], mono);
    }
    return out;
}

} // namespace autopos
