#include "charclass/polynomial.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <sstream>

namespace charclass {

long total_degree(const Exponents& e) {
    long d = 0;
    for (int x : e) d += x;
    return d;
}

bool grevlex_less(const Exponents& a, const Exponents& b) {
    long da = total_degree(a), db = total_degree(b);
    if (da != db) return da < db;
    for (std::size_t i = a.size(); i-- > 0;) {
        if (a[i] != b[i]) return a[i] > b[i];
    }
    return false;
}

bool monomial_divides(const Exponents& divisor, const Exponents& m) {
    for (std::size_t i = 0; i < divisor.size(); ++i)
        if (divisor[i] > m[i]) return false;
    return true;
}

void Polynomial::require_same_ring(const Polynomial& o) const {
    if (nvars_ != o.nvars_)
        throw InputError("nvars-mismatch: " + std::to_string(nvars_) + " vs " +
                         std::to_string(o.nvars_));
}

Polynomial Polynomial::constant(int nvars, const Rat& c) {
    Polynomial p(nvars);
    if (c != 0) p.terms_.emplace_back(Exponents(nvars, 0), c);
    return p;
}

Polynomial Polynomial::variable(int nvars, int index) {
    if (index < 0 || index >= nvars)
        throw InputError("index-out-of-range: variable " + std::to_string(index));
    Exponents e(nvars, 0);
    e[index] = 1;
    Polynomial p(nvars);
    p.terms_.emplace_back(std::move(e), Rat(1));
    return p;
}

Polynomial Polynomial::monomial(Exponents e, const Rat& c) {
    Polynomial p(static_cast<int>(e.size()));
    if (c != 0) p.terms_.emplace_back(std::move(e), c);
    return p;
}

Polynomial Polynomial::from_terms(int nvars, std::vector<Term> terms) {
    std::map<Exponents, Rat, decltype(&grevlex_less)> acc(&grevlex_less);
    for (auto& [e, c] : terms) {
        if (static_cast<int>(e.size()) != nvars)
            throw InputError("nvars-mismatch: exponent vector length");
        acc[e] += c;
    }
    Polynomial p(nvars);
    for (auto it = acc.rbegin(); it != acc.rend(); ++it)
        if (it->second != 0) p.terms_.emplace_back(it->first, it->second);
    return p;
}

Polynomial Polynomial::operator-() const {
    Polynomial r(nvars_);
    r.terms_.reserve(terms_.size());
    for (const auto& [e, c] : terms_) r.terms_.emplace_back(e, -c);
    return r;
}

Polynomial Polynomial::operator+(const Polynomial& o) const {
    require_same_ring(o);
    Polynomial r(nvars_);
    r.terms_.reserve(terms_.size() + o.terms_.size());
    std::size_t i = 0, j = 0;
    while (i < terms_.size() && j < o.terms_.size()) {
        const auto& a = terms_[i];
        const auto& b = o.terms_[j];
        if (a.first == b.first) {
            Rat s = a.second + b.second;
            if (s != 0) r.terms_.emplace_back(a.first, std::move(s));
            ++i, ++j;
        } else if (grevlex_less(b.first, a.first)) {
            r.terms_.push_back(a);
            ++i;
        } else {
            r.terms_.push_back(b);
            ++j;
        }
    }
    for (; i < terms_.size(); ++i) r.terms_.push_back(terms_[i]);
    for (; j < o.terms_.size(); ++j) r.terms_.push_back(o.terms_[j]);
    return r;
}

Polynomial Polynomial::operator-(const Polynomial& o) const { return *this + (-o); }

Polynomial Polynomial::operator*(const Polynomial& o) const {
    require_same_ring(o);
    std::map<Exponents, Rat, decltype(&grevlex_less)> acc(&grevlex_less);
    Exponents e(nvars_);
    for (const auto& [ea, ca] : terms_) {
        for (const auto& [eb, cb] : o.terms_) {
            for (int k = 0; k < nvars_; ++k) e[k] = ea[k] + eb[k];
            acc[e] += ca * cb;
        }
    }
    Polynomial r(nvars_);
    for (auto it = acc.rbegin(); it != acc.rend(); ++it)
        if (it->second != 0) r.terms_.emplace_back(it->first, it->second);
    return r;
}

Polynomial Polynomial::scaled(const Rat& c) const {
    Polynomial r(nvars_);
    if (c == 0) return r;
    r.terms_.reserve(terms_.size());
    for (const auto& [e, k] : terms_) r.terms_.emplace_back(e, k * c);
    return r;
}

Polynomial Polynomial::pow(unsigned k) const {
    Polynomial r = Polynomial::constant(nvars_, 1);
    for (unsigned i = 0; i < k; ++i) r = r * *this;
    return r;
}

Polynomial Polynomial::partial(int index) const {
    if (index < 0 || index >= nvars_)
        throw InputError("index-out-of-range: partial with respect to variable " +
                         std::to_string(index));
    Polynomial r(nvars_);
    for (const auto& [e, c] : terms_) {
        if (e[index] == 0) continue;
        Exponents d = e;
        d[index] -= 1;
        // decrementing the same coordinate everywhere preserves grevlex order
        r.terms_.emplace_back(std::move(d), c * e[index]);
    }
    return r;
}

std::optional<long> Polynomial::homogeneous_degree() const {
    if (terms_.empty()) return std::nullopt;
    long d = total_degree(terms_.front().first);
    for (const auto& [e, c] : terms_)
        if (total_degree(e) != d) return std::nullopt;
    return d;
}

long Polynomial::degree() const {
    if (terms_.empty()) return -1;
    return total_degree(terms_.front().first);  // leading term has max degree in grevlex
}

Rat Polynomial::coefficient(const Exponents& e) const {
    for (const auto& [m, c] : terms_)
        if (m == e) return c;
    return Rat(0);
}

namespace {

std::string variable_name(int index, int nvars) {
    static const char* alias[] = {"x", "y", "z", "w"};
    if (nvars <= 4) return alias[index];
    return "x" + std::to_string(index);
}

std::string monomial_string(const Exponents& e, int nvars) {
    std::string s;
    for (int i = 0; i < nvars; ++i) {
        if (e[i] == 0) continue;
        if (!s.empty()) s += "*";
        s += variable_name(i, nvars);
        if (e[i] > 1) s += "^" + std::to_string(e[i]);
    }
    return s;
}

}  // namespace

std::string Polynomial::str() const {
    if (terms_.empty()) return "0";
    std::string out;
    for (std::size_t k = 0; k < terms_.size(); ++k) {
        const auto& [e, c] = terms_[k];
        Rat mag = abs(c);
        if (k == 0) {
            if (c < 0) out += "-";
        } else {
            out += c < 0 ? " - " : " + ";
        }
        std::string mon = monomial_string(e, nvars_);
        if (mon.empty()) {
            out += mag.get_str();
        } else {
            if (mag != 1) out += mag.get_str() + "*";
            out += mon;
        }
    }
    return out;
}

Polynomial random_linear_combination(const std::vector<Polynomial>& polys, std::uint64_t seed) {
    if (polys.empty()) throw InputError("empty-list: random_linear_combination");
    int nvars = polys.front().nvars();
    SplitMix64 rng(seed);
    Polynomial acc = Polynomial::zero(nvars);
    for (const auto& p : polys) {
        if (p.nvars() != nvars) throw InputError("nvars-mismatch: random_linear_combination");
        acc = acc + p.scaled(Rat(rng.next_coefficient()));
    }
    return acc;
}

// ---------------------------------------------------------------------------
// Parser: recursive descent over
//   expr   := ['+'|'-'] term (('+'|'-') term)*
//   term   := factor ('*' factor)*
//   factor := base ['^' nat]
//   base   := nat ['/' nat] | var | '(' expr ')'
// ---------------------------------------------------------------------------

namespace {

struct Parser {
    std::string_view text;
    std::size_t pos = 0;
    int nvars;

    void skip_ws() {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    }

    bool eof() {
        skip_ws();
        return pos >= text.size();
    }

    char peek() {
        skip_ws();
        return pos < text.size() ? text[pos] : '\0';
    }

    [[noreturn]] void fail(const std::string& what) {
        throw InputError("parse-error: " + what + " at position " + std::to_string(pos));
    }

    bool consume(char c) {
        if (peek() == c) {
            ++pos;
            return true;
        }
        return false;
    }

    std::string read_digits() {
        skip_ws();
        std::string s;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos])))
            s += text[pos++];
        if (s.empty()) fail("expected integer literal");
        return s;
    }

    long read_small_nat() {
        std::string s = read_digits();
        if (s.size() > 6) fail("exponent literal too large");
        return std::stol(s);
    }

    int read_variable() {
        if (eof()) fail("unexpected end of input");
        char c = text[pos];
        if (c == 'x' && pos + 1 < text.size() &&
            std::isdigit(static_cast<unsigned char>(text[pos + 1]))) {
            ++pos;
            long idx = read_small_nat();
            if (idx >= nvars) fail("unknown variable x" + std::to_string(idx));
            return static_cast<int>(idx);
        }
        int idx = -1;
        switch (c) {
            case 'x': idx = 0; break;
            case 'y': idx = 1; break;
            case 'z': idx = 2; break;
            case 'w': idx = 3; break;
            default: fail(std::string("unexpected character '") + c + "'");
        }
        if (nvars > 4) fail("variable aliases x,y,z,w need nvars <= 4; use x0..x9");
        if (idx >= nvars) fail(std::string("unknown variable '") + c + "'");
        ++pos;
        return idx;
    }

    Polynomial base() {
        char c = peek();
        if (c == '(') {
            ++pos;
            Polynomial p = expr();
            if (!consume(')')) fail("expected ')'");
            return p;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::string num = read_digits();
            Rat q(Int(num));
            if (consume('/')) {
                std::string den = read_digits();
                Int d(den);
                if (d == 0) fail("zero denominator");
                q /= Rat(d);
            }
            return Polynomial::constant(nvars, q);
        }
        return Polynomial::variable(nvars, read_variable());
    }

    Polynomial factor() {
        Polynomial b = base();
        if (consume('^')) {
            long e = read_small_nat();
            if (e > 1000) fail("exponent too large");
            return b.pow(static_cast<unsigned>(e));
        }
        return b;
    }

    Polynomial term() {
        Polynomial p = factor();
        while (consume('*')) p = p * factor();
        return p;
    }

    Polynomial expr() {
        bool neg = false;
        if (consume('-'))
            neg = true;
        else
            consume('+');
        Polynomial acc = term();
        if (neg) acc = -acc;
        while (true) {
            char c = peek();
            if (c == '+') {
                ++pos;
                acc = acc + term();
            } else if (c == '-') {
                ++pos;
                acc = acc - term();
            } else {
                break;
            }
        }
        return acc;
    }
};

}  // namespace

Polynomial parse_polynomial(std::string_view text, int nvars) {
    if (nvars < 1 || nvars > 10)
        throw InputError("parse-error: nvars must be between 1 and 10, got " +
                         std::to_string(nvars));
    Parser p{text, 0, nvars};
    Polynomial result = p.expr();
    if (!p.eof()) p.fail("trailing input");
    return result;
}

Polynomial insert_variable(const Polynomial& p, int position) {
    std::vector<Polynomial::Term> terms;
    terms.reserve(p.terms().size());
    for (const auto& [e, c] : p.terms()) {
        Exponents x = e;
        x.insert(x.begin() + position, 0);
        terms.emplace_back(std::move(x), c);
    }
    return Polynomial::from_terms(p.nvars() + 1, std::move(terms));
}

Polynomial remove_variable(const Polynomial& p, int position) {
    std::vector<Polynomial::Term> terms;
    terms.reserve(p.terms().size());
    for (const auto& [e, c] : p.terms()) {
        if (e[position] != 0)
            throw InputError("index-out-of-range: removing a variable in use");
        Exponents x = e;
        x.erase(x.begin() + position);
        terms.emplace_back(std::move(x), c);
    }
    return Polynomial::from_terms(p.nvars() - 1, std::move(terms));
}

}  // namespace charclass
