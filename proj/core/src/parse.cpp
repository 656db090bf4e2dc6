#include "grmod/parse.hpp"

#include <cctype>
#include <sstream>

#include "grmod/errors.hpp"

namespace grmod {

namespace {

struct Cursor {
    const std::string& text;
    std::size_t pos = 0;
    std::size_t line;

    void skip_ws() {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos])))
            ++pos;
    }

    bool done() {
        skip_ws();
        return pos >= text.size();
    }

    char peek() {
        skip_ws();
        return pos < text.size() ? text[pos] : '\0';
    }

    [[noreturn]] void fail(const std::string& msg) const { throw parse_error(msg, line, pos); }
};

long long parse_integer(Cursor& c) {
    c.skip_ws();
    std::size_t start = c.pos;
    while (c.pos < c.text.size() && std::isdigit(static_cast<unsigned char>(c.text[c.pos])))
        ++c.pos;
    if (c.pos == start)
        c.fail("expected integer");
    long long v = 0;
    for (std::size_t i = start; i < c.pos; ++i) {
        v = v * 10 + (c.text[i] - '0');
        if (v > (1LL << 60))
            c.fail("integer literal too large");
    }
    return v;
}

std::string parse_identifier(Cursor& c) {
    c.skip_ws();
    std::size_t start = c.pos;
    auto head = [](char ch) { return std::isalpha(static_cast<unsigned char>(ch)) || ch == '_'; };
    auto tail = [](char ch) { return std::isalnum(static_cast<unsigned char>(ch)) || ch == '_'; };
    if (c.pos < c.text.size() && head(c.text[c.pos])) {
        ++c.pos;
        while (c.pos < c.text.size() && tail(c.text[c.pos]))
            ++c.pos;
    }
    if (c.pos == start)
        c.fail("expected variable or integer");
    return c.text.substr(start, c.pos - start);
}

/* one product of factors; returns (coefficient, monomial) */
Term parse_term(Cursor& c, const Ring& ring) {
    const PrimeField& K = ring.field();
    std::uint32_t coeff = 1;
    Monomial mon = Monomial::one(ring.nvars());
    while (true) {
        c.skip_ws();
        char ch = c.peek();
        if (std::isdigit(static_cast<unsigned char>(ch))) {
            coeff = K.mul(coeff, K.reduce(parse_integer(c)));
        } else {
            std::size_t at = c.pos;
            std::string name = parse_identifier(c);
            int idx = ring.variable_index(name);
            if (idx < 0) {
                c.pos = at;
                c.fail("unknown variable '" + name + "'");
            }
            int exp = 1;
            if (c.peek() == '^') {
                ++c.pos;
                long long e = parse_integer(c);
                if (e < 0 || e > 1000000)
                    c.fail("malformed exponent");
                exp = static_cast<int>(e);
            }
            mon.exps[static_cast<std::size_t>(idx)] += exp;
            mon.deg += exp;
        }
        if (c.peek() == '*') {
            ++c.pos;
            continue;
        }
        break;
    }
    return Term{coeff, std::move(mon)};
}

}  // namespace

Polynomial parse_polynomial(const std::string& text, const Ring& ring, std::size_t line) {
    Cursor c{text, 0, line};
    if (c.done())
        c.fail("empty polynomial");
    std::vector<Term> terms;
    bool first = true;
    while (!c.done()) {
        std::uint32_t sign = 1;
        char ch = c.peek();
        if (ch == '+' || ch == '-') {
            ++c.pos;
            if (ch == '-')
                sign = ring.field().neg(1);
        } else if (!first) {
            c.fail("expected '+' or '-' between terms");
        }
        if (c.done())
            c.fail("dangling sign");
        Term t = parse_term(c, ring);
        t.coeff = ring.field().mul(sign, t.coeff);
        terms.push_back(std::move(t));
        first = false;
    }
    return Polynomial::from_terms(ring.field(), std::move(terms));
}

std::string print_polynomial(const Ring& ring, const Polynomial& f) {
    if (f.is_zero())
        return "0";
    const std::uint32_t p = ring.field().characteristic();
    std::ostringstream os;
    bool first = true;
    for (const Term& t : f.terms()) {
        long long c = t.coeff;
        if (c > p / 2)
            c -= p;  // balanced representative
        bool negative = c < 0;
        long long abs = negative ? -c : c;
        if (first) {
            if (negative)
                os << "-";
            first = false;
        } else {
            os << (negative ? " - " : " + ");
        }
        bool printed = false;
        if (abs != 1 || t.mon.is_one()) {
            os << abs;
            printed = true;
        }
        for (int i = 0; i < t.mon.nvars(); ++i) {
            int e = t.mon.exps[static_cast<std::size_t>(i)];
            if (e == 0)
                continue;
            if (printed)
                os << "*";
            os << ring.variable(i);
            if (e > 1)
                os << "^" << e;
            printed = true;
        }
    }
    return os.str();
}

}  // namespace grmod
