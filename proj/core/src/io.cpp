#include "agc/io.hpp"

#include <cctype>
#include <sstream>

namespace agc {

std::vector<std::string> split_lines(const std::string& text) {
    std::vector<std::string> lines;
    std::string cur;
    for (char c : text) {
        if (c == '\n') {
            lines.push_back(cur);
            cur.clear();
        } else if (c != '\r') {
            cur.push_back(c);
        }
    }
    if (!cur.empty()) lines.push_back(cur);
    return lines;
}

namespace {

struct Token {
    enum Kind { Ident, Number, Plus, Minus, Star, Caret, LParen, RParen, Colon, End } kind;
    std::string text;
    int col;
};

struct Lexer {
    const std::string& src;
    int line;
    size_t pos = 0;
    Token cur;

    Lexer(const std::string& s, int line_no) : src(s), line(line_no) { advance(); }

    [[noreturn]] void fail(const std::string& msg, int col) const {
        std::ostringstream os;
        os << "line " << line << ", col " << col << ": " << msg;
        throw precondition_error(os.str());
    }

    void advance() {
        while (pos < src.size() && std::isspace((unsigned char)src[pos])) ++pos;
        int col = (int)pos + 1;
        if (pos >= src.size()) {
            cur = {Token::End, "", col};
            return;
        }
        char c = src[pos];
        if (std::isalpha((unsigned char)c) || c == '_') {
            size_t start = pos;
            while (pos < src.size() &&
                   (std::isalnum((unsigned char)src[pos]) || src[pos] == '_'))
                ++pos;
            cur = {Token::Ident, src.substr(start, pos - start), col};
            return;
        }
        if (std::isdigit((unsigned char)c)) {
            size_t start = pos;
            while (pos < src.size() && std::isdigit((unsigned char)src[pos])) ++pos;
            cur = {Token::Number, src.substr(start, pos - start), col};
            return;
        }
        ++pos;
        switch (c) {
            case '+': cur = {Token::Plus, "+", col}; return;
            case '-': cur = {Token::Minus, "-", col}; return;
            case '*': cur = {Token::Star, "*", col}; return;
            case '^': cur = {Token::Caret, "^", col}; return;
            case '(': cur = {Token::LParen, "(", col}; return;
            case ')': cur = {Token::RParen, ")", col}; return;
            case ':': cur = {Token::Colon, ":", col}; return;
            default: fail(std::string("unexpected character '") + c + "'", col);
        }
    }
};

struct PolyParser {
    Lexer lex;
    LevelPtr level;
    const std::vector<std::string>& vars;

    PolyParser(const std::string& text, int line, LevelPtr lvl,
               const std::vector<std::string>& vs)
        : lex(text, line), level(std::move(lvl)), vars(vs) {}

    MultiPoly parse() {
        MultiPoly p = expr();
        if (lex.cur.kind != Token::End)
            lex.fail("trailing input after expression", lex.cur.col);
        return p;
    }

    MultiPoly expr() {
        bool neg = false;
        if (lex.cur.kind == Token::Minus) {
            neg = true;
            lex.advance();
        }
        MultiPoly acc = term();
        if (neg) acc = -acc;
        while (lex.cur.kind == Token::Plus || lex.cur.kind == Token::Minus) {
            bool minus = lex.cur.kind == Token::Minus;
            lex.advance();
            MultiPoly t = term();
            acc = minus ? acc - t : acc + t;
        }
        return acc;
    }

    bool starts_factor() const {
        return lex.cur.kind == Token::Ident || lex.cur.kind == Token::Number ||
               lex.cur.kind == Token::LParen;
    }

    MultiPoly term() {
        MultiPoly acc = factor();
        while (true) {
            if (lex.cur.kind == Token::Star) {
                lex.advance();
                acc = acc * factor();
            } else if (starts_factor()) {
                acc = acc * factor(); // implicit product
            } else {
                break;
            }
        }
        return acc;
    }

    MultiPoly factor() {
        MultiPoly b = base();
        if (lex.cur.kind == Token::Caret) {
            lex.advance();
            if (lex.cur.kind != Token::Number)
                lex.fail("expected an exponent after '^'", lex.cur.col);
            long e = std::stol(lex.cur.text);
            lex.advance();
            MultiPoly acc = MultiPoly::constant(level, vars, FieldElement::one(level));
            MultiPoly base_p = b;
            while (e) {
                if (e & 1) acc = acc * base_p;
                base_p = base_p * base_p;
                e >>= 1;
            }
            return acc;
        }
        return b;
    }

    MultiPoly base() {
        if (lex.cur.kind == Token::LParen) {
            lex.advance();
            MultiPoly inner = expr();
            if (lex.cur.kind != Token::RParen) lex.fail("expected ')'", lex.cur.col);
            lex.advance();
            return inner;
        }
        if (lex.cur.kind == Token::Number) {
            int64_t n = std::stoll(lex.cur.text);
            lex.advance();
            return MultiPoly::constant(level, vars, FieldElement::from_integer(level, n));
        }
        if (lex.cur.kind == Token::Ident) {
            std::string name = lex.cur.text;
            int col = lex.cur.col;
            lex.advance();
            for (auto& v : vars)
                if (v == name) return MultiPoly::variable(level, vars, name);
            // a tower generator acts as a constant
            for (LevelPtr l = level; l != nullptr; l = l->parent()) {
                if (!l->is_prime_field() && l->name() == name) {
                    FieldElement g = FieldElement::generator(l).embedded_into(level);
                    return MultiPoly::constant(level, vars, g);
                }
            }
            lex.fail("unknown name '" + name + "'", col);
        }
        lex.fail("expected a variable, number or '('", lex.cur.col);
        __builtin_unreachable();
    }
};

bool is_blank_or_comment(const std::string& s) {
    for (char c : s) {
        if (c == '#') return true;
        if (!std::isspace((unsigned char)c)) return false;
    }
    return true;
}

} // namespace

MultiPoly parse_poly(const std::string& text, const LevelPtr& level,
                     const std::vector<std::string>& vars, int line_offset) {
    PolyParser p(text, line_offset + 1, level, vars);
    return p.parse();
}

FieldElement parse_field_element(const std::string& text, const LevelPtr& level,
                                 int line_offset) {
    MultiPoly p = parse_poly(text, level, {}, line_offset);
    Exponents none;
    if (p.is_zero()) return FieldElement::zero(level);
    return p.coeff(none);
}

FieldTower parse_field_block(const std::vector<std::string>& lines, Rng& rng,
                             size_t* consumed) {
    size_t i = 0;
    auto fail = [&](size_t line, const std::string& msg) {
        std::ostringstream os;
        os << "line " << line + 1 << ", col 1: " << msg;
        throw precondition_error(os.str());
    };
    while (i < lines.size() && is_blank_or_comment(lines[i])) ++i;
    if (i >= lines.size()) fail(lines.size(), "expected 'p <prime>'");
    std::istringstream head(lines[i]);
    std::string kw;
    uint64_t p = 0;
    head >> kw >> p;
    if (kw != "p" || p < 2) fail(i, "expected 'p <prime>'");
    FieldTower tower = FieldTower::prime(p);
    ++i;
    while (i < lines.size()) {
        if (is_blank_or_comment(lines[i])) {
            ++i;
            continue;
        }
        std::istringstream ls(lines[i]);
        std::string w;
        ls >> w;
        if (w != "ext") break;
        std::string name;
        ls >> name;
        if (name.empty()) fail(i, "expected 'ext <name> <polynomial>'");
        std::string rest;
        std::getline(ls, rest);
        MultiPoly phi_poly = parse_poly(rest, tower.top(), {name}, (int)i);
        UPoly phi = phi_poly.to_upoly(0);
        if (!phi.is_monic() || phi.degree() < 1)
            fail(i, "extension polynomial must be monic and nonconstant");
        auto ext = extend(tower, phi, rng, name);
        if (!ext.extended)
            fail(i, "degree-1 extension does not create a level");
        tower = ext.tower;
        ++i;
    }
    if (consumed) *consumed = i;
    return tower;
}

CurveFile parse_curve_file(const std::string& text, Rng& rng) {
    auto lines = split_lines(text);
    size_t i = 0;
    FieldTower tower = parse_field_block(lines, rng, &i);
    while (i < lines.size() && is_blank_or_comment(lines[i])) ++i;
    require(i < lines.size(), "expected 'curve <polynomial>'");
    std::istringstream ls(lines[i]);
    std::string kw;
    ls >> kw;
    require(kw == "curve", "line " + std::to_string(i + 1) + ", col 1: expected 'curve <polynomial>'");
    std::string rest;
    std::getline(ls, rest);
    MultiPoly form = parse_poly(rest, tower.top(), {"X", "Y", "Z"}, (int)i);
    return {tower, form};
}

std::vector<FieldElement> parse_point(const std::string& text, const LevelPtr& level) {
    // (a:b:c) with field-element coordinates
    std::string s = text;
    size_t l = s.find('(');
    size_t r = s.rfind(')');
    require(l != std::string::npos && r != std::string::npos && l < r,
            "point must look like (a:b:c)");
    std::string inner = s.substr(l + 1, r - l - 1);
    std::vector<std::string> parts;
    std::string cur;
    int depth = 0;
    for (char c : inner) {
        if (c == '(') ++depth;
        if (c == ')') --depth;
        if (c == ':' && depth == 0) {
            parts.push_back(cur);
            cur.clear();
        } else {
            cur.push_back(c);
        }
    }
    parts.push_back(cur);
    require(parts.size() == 3, "point must have three coordinates");
    std::vector<FieldElement> out;
    for (auto& p : parts) out.push_back(parse_field_element(p, level));
    return out;
}

std::string format_point(const std::vector<FieldElement>& coords) {
    std::ostringstream os;
    os << "(";
    for (size_t i = 0; i < coords.size(); ++i) {
        if (i) os << ":";
        os << coords[i].to_string();
    }
    os << ")";
    return os.str();
}

} // namespace agc
