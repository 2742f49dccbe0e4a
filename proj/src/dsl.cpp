#include "hilali/dsl.hpp"

#include <cctype>
#include <map>
#include <optional>
#include <sstream>

namespace hilali {

namespace {

// --------------------------------------------------------------- lexer

enum class Tok { ident, number, plus, minus, star, caret, slash, lparen, rparen, end };

struct Token {
    Tok kind;
    std::string text;
    int column;
};

class Lexer {
public:
    Lexer(const std::string& s, int line) : s_(s), line_(line) {}

    Token next() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
        int col = static_cast<int>(pos_) + 1;
        if (pos_ >= s_.size()) return {Tok::end, "", col};
        char c = s_[pos_];
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::size_t start = pos_;
            while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
            return {Tok::number, s_.substr(start, pos_ - start), col};
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            std::size_t start = pos_;
            while (pos_ < s_.size() &&
                   (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_'))
                ++pos_;
            return {Tok::ident, s_.substr(start, pos_ - start), col};
        }
        ++pos_;
        switch (c) {
            case '+': return {Tok::plus, "+", col};
            case '-': return {Tok::minus, "-", col};
            case '*': return {Tok::star, "*", col};
            case '^': return {Tok::caret, "^", col};
            case '/': return {Tok::slash, "/", col};
            case '(': return {Tok::lparen, "(", col};
            case ')': return {Tok::rparen, ")", col};
        }
        throw ParseError(std::string("unexpected character '") + c + "'", line_, col);
    }

private:
    const std::string& s_;
    std::size_t pos_ = 0;
    int line_;
};

// ------------------------------------------------------ expression parser

// poly   := ['-'] term (('+'|'-') term)*
// term   := factor ('*' factor)*        (adjacent '*' required)
// factor := number ['/' number] | ident ['^' number] | '(' poly ')'
class PolyParser {
public:
    PolyParser(const std::string& s, int line, const SullivanModel& m)
        : lex_(s, line), line_(line), model_(m) {
        advance();
    }

    Polynomial parse() {
        Polynomial p = parse_sum();
        if (cur_.kind != Tok::end)
            throw ParseError("trailing input after polynomial", line_, cur_.column);
        return p;
    }

private:
    Lexer lex_;
    Token cur_{Tok::end, "", 0};
    int line_;
    const SullivanModel& model_;

    void advance() { cur_ = lex_.next(); }

    Polynomial parse_sum() {
        bool negate = false;
        if (cur_.kind == Tok::minus) {
            negate = true;
            advance();
        } else if (cur_.kind == Tok::plus) {
            advance();
        }
        Polynomial acc = parse_term();
        if (negate) acc = acc.scaled(Rational(-1));
        for (;;) {
            if (cur_.kind == Tok::plus) {
                advance();
                acc = acc + parse_term();
            } else if (cur_.kind == Tok::minus) {
                advance();
                acc = acc - parse_term();
            } else {
                return acc;
            }
        }
    }

    Polynomial parse_term() {
        Polynomial acc = parse_factor();
        while (cur_.kind == Tok::star) {
            advance();
            acc = model_.multiply(acc, parse_factor());
        }
        return acc;
    }

    Polynomial parse_factor() {
        if (cur_.kind == Tok::number) {
            BigInt num = BigInt::from_string(cur_.text);
            advance();
            if (cur_.kind == Tok::slash) {
                advance();
                if (cur_.kind != Tok::number)
                    throw ParseError("denominator expected", line_, cur_.column);
                BigInt den = BigInt::from_string(cur_.text);
                if (den.is_zero()) throw ParseError("zero denominator", line_, cur_.column);
                advance();
                return model_.one().scaled(Rational(num, den));
            }
            return model_.one().scaled(Rational(num));
        }
        if (cur_.kind == Tok::ident) {
            auto gi = model_.find_generator(cur_.text);
            if (!gi)
                throw ParseError("unknown generator '" + cur_.text + "'", line_, cur_.column);
            advance();
            unsigned long exp = 1;
            if (cur_.kind == Tok::caret) {
                advance();
                if (cur_.kind != Tok::number)
                    throw ParseError("exponent expected after '^'", line_, cur_.column);
                exp = std::stoul(cur_.text);
                advance();
            }
            return model_.power(model_.generator_poly(*gi), exp);
        }
        if (cur_.kind == Tok::lparen) {
            advance();
            Polynomial p = parse_sum();
            if (cur_.kind != Tok::rparen)
                throw ParseError("')' expected", line_, cur_.column);
            advance();
            return p;
        }
        throw ParseError("coefficient, generator or '(' expected", line_, cur_.column);
    }
};

struct Line {
    int number;
    std::string text;
};

std::vector<Line> split_lines(const std::string& text) {
    std::vector<Line> lines;
    std::istringstream in(text);
    std::string raw;
    int no = 0;
    while (std::getline(in, raw)) {
        ++no;
        if (!raw.empty() && raw.back() == '\r') raw.pop_back();
        // strip comments
        auto hash = raw.find('#');
        if (hash != std::string::npos) raw = raw.substr(0, hash);
        // trim
        std::size_t a = raw.find_first_not_of(" \t");
        if (a == std::string::npos) continue;
        std::size_t b = raw.find_last_not_of(" \t");
        lines.push_back({no, raw.substr(a, b - a + 1)});
    }
    return lines;
}

std::vector<std::string> words(const std::string& s) {
    std::istringstream in(s);
    std::vector<std::string> out;
    std::string w;
    while (in >> w) out.push_back(w);
    return out;
}

}  // namespace

Polynomial parse_polynomial(const std::string& text, const SullivanModel& m) {
    // "0" is the zero polynomial
    std::size_t a = text.find_first_not_of(" \t");
    if (a != std::string::npos && text.substr(a) == "0") return m.zero();
    return PolyParser(text, 1, m).parse();
}

ParsedModel parse_model(const std::string& text) {
    std::vector<Line> lines = split_lines(text);
    if (lines.empty()) throw ParseError("empty document", 1, 1);

    std::string name;
    std::vector<std::pair<std::string, long long>> gens;
    std::vector<std::pair<Line, std::string>> d_lines;  // generator name -> rhs text kept for pass 2
    std::vector<std::string> d_names;

    for (const Line& ln : lines) {
        std::vector<std::string> w = words(ln.text);
        if (w.empty()) continue;
        if (w[0] == "model") {
            if (w.size() != 2) throw ParseError("usage: model NAME", ln.number, 1);
            name = w[1];
        } else if (w[0] == "gen") {
            if (w.size() != 3) throw ParseError("usage: gen NAME DEGREE", ln.number, 1);
            long long deg;
            try {
                deg = std::stoll(w[2]);
            } catch (...) {
                throw ParseError("bad degree '" + w[2] + "'", ln.number, 1);
            }
            if (deg < 2)
                throw ParseError("generator degree must be >= 2 (got " + w[2] + ")", ln.number, 1);
            for (const auto& [nm, dg] : gens)
                if (nm == w[1]) throw ParseError("generator '" + w[1] + "' redeclared", ln.number, 1);
            gens.emplace_back(w[1], deg);
        } else if (w[0] == "d") {
            auto eq = ln.text.find('=');
            if (w.size() < 3 || eq == std::string::npos)
                throw ParseError("usage: d NAME = POLYNOMIAL", ln.number, 1);
            d_names.push_back(w[1]);
            d_lines.push_back({ln, ln.text.substr(eq + 1)});
        } else {
            throw ParseError("unknown directive '" + w[0] + "'", ln.number, 1);
        }
    }
    if (name.empty()) throw ParseError("missing 'model NAME' line", lines.front().number, 1);
    SullivanModel shell = SullivanModel::build(gens);

    std::vector<Polynomial> diffs(shell.generator_count(), shell.zero());
    std::vector<bool> seen(shell.generator_count(), false);
    for (std::size_t i = 0; i < d_lines.size(); ++i) {
        const auto& [ln, rhs] = d_lines[i];
        auto gi = shell.find_generator(d_names[i]);
        if (!gi)
            throw ParseError("differential for undeclared generator '" + d_names[i] + "'",
                             ln.number, 1);
        if (seen[*gi])
            throw ParseError("differential of '" + d_names[i] + "' assigned twice", ln.number, 1);
        seen[*gi] = true;
        Polynomial p;
        try {
            std::size_t a = rhs.find_first_not_of(" \t");
            if (a != std::string::npos && rhs.substr(a).find_first_not_of("0 \t") == std::string::npos)
                p = shell.zero();
            else
                p = PolyParser(rhs, ln.number, shell).parse();
        } catch (const ModelError& e) {
            throw ParseError(e.what(), ln.number, 1, true);
        }
        auto hd = p.homogeneous_degree();
        if (!p.is_zero() && (!hd || *hd != shell.generator(*gi).degree + 1))
            throw ParseError("differential of '" + d_names[i] + "' is not homogeneous of degree " +
                                 std::to_string(shell.generator(*gi).degree + 1),
                             ln.number, 1, true);
        diffs[*gi] = p;
    }

    SullivanModel model(shell.generators(), diffs);
    DSquaredReport d2 = model.check_d_squared();
    if (!d2.ok)
        throw ParseError("d^2 != 0 at generator '" + model.generator(d2.failing_generator).name +
                             "', residue " + print_polynomial(d2.residue, model),
                         1, 1, true);
    return ParsedModel{name, model};
}

std::string print_polynomial(const Polynomial& p, const SullivanModel& m) {
    if (p.is_zero()) return "0";
    std::string out;
    bool first = true;
    // highest term first reads naturally
    const auto& terms = p.terms();
    for (auto it = terms.rbegin(); it != terms.rend(); ++it) {
        const Monomial& mono = it->first;
        Rational c = it->second;
        bool neg = c.sign() < 0;
        if (first) {
            if (neg) out += "-";
        } else {
            out += neg ? " - " : " + ";
        }
        first = false;
        if (neg) c = -c;

        std::vector<std::string> factors;
        if (!(c == Rational(1)) || mono.is_unit()) factors.push_back(c.to_string());
        for (std::size_t g = 0; g < m.generator_count(); ++g) {
            std::uint32_t e = mono.exponent(g);
            if (!e) continue;
            factors.push_back(e == 1 ? m.generator(g).name
                                     : m.generator(g).name + "^" + std::to_string(e));
        }
        for (std::size_t i = 0; i < factors.size(); ++i) {
            if (i) out += "*";
            out += factors[i];
        }
    }
    return out;
}

std::string print_model(const SullivanModel& m, const std::string& name) {
    std::string out = "model " + name + "\n";
    for (const auto& g : m.generators())
        out += "gen " + g.name + " " + std::to_string(g.degree) + "\n";
    for (const auto& g : m.generators())
        out += "d " + g.name + " = " + print_polynomial(m.differential_of(g.index), m) + "\n";
    return out;
}

std::vector<Polynomial> parse_perturbation(const std::string& text, const SullivanModel& shell,
                                           std::size_t base_gen_count) {
    std::vector<Line> lines = split_lines(text);
    std::vector<Polynomial> out(shell.generator_count() - base_gen_count, shell.zero());
    bool saw_header = false;
    for (const Line& ln : lines) {
        std::vector<std::string> w = words(ln.text);
        if (w.empty()) continue;
        if (w[0] == "perturbation") {
            saw_header = true;
            continue;
        }
        if (w[0] != "d")
            throw ParseError("perturbation documents contain only 'd NAME = POLY' lines",
                             ln.number, 1);
        auto eq = ln.text.find('=');
        if (w.size() < 3 || eq == std::string::npos)
            throw ParseError("usage: d NAME = POLYNOMIAL", ln.number, 1);
        auto gi = shell.find_generator(w[1]);
        if (!gi) throw ParseError("unknown generator '" + w[1] + "'", ln.number, 1);
        if (*gi < base_gen_count)
            throw ParseError("perturbation may only modify fiber generators ('" + w[1] +
                                 "' belongs to the base)",
                             ln.number, 1);
        std::string rhs = ln.text.substr(eq + 1);
        Polynomial p;
        try {
            std::size_t a = rhs.find_first_not_of(" \t");
            if (a != std::string::npos &&
                rhs.substr(a).find_first_not_of("0 \t") == std::string::npos)
                p = shell.zero();
            else
                p = PolyParser(rhs, ln.number, shell).parse();
        } catch (const ModelError& e) {
            throw ParseError(e.what(), ln.number, 1);
        }
        out[*gi - base_gen_count] = p;
    }
    if (!saw_header && lines.empty())
        throw ParseError("empty perturbation document", 1, 1);
    return out;
}

}  // namespace hilali
