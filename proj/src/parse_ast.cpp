#include "reltype/parse.hpp"

#include <cctype>

namespace reltype {
namespace {

struct Lexer {
    const std::string& s;
    std::size_t pos = 0;

    void skip_ws() {
        while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
    }
    bool eof() {
        skip_ws();
        return pos >= s.size();
    }
    char peek() {
        skip_ws();
        return pos < s.size() ? s[pos] : '\0';
    }
    bool accept(char c) {
        if (peek() == c) {
            ++pos;
            return true;
        }
        return false;
    }
    void expect(char c) {
        if (!accept(c)) throw ParseError(std::string("expected '") + c + "'", pos);
    }
};

bool is_name_start(char c) {
    return std::isalpha(static_cast<unsigned char>(c)) || c == '_';
}
bool is_name_char(char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
}

ExprNode parse_expr(Lexer& lx);

std::string lex_integer(Lexer& lx) {
    std::string digits;
    while (lx.pos < lx.s.size() && std::isdigit(static_cast<unsigned char>(lx.s[lx.pos])))
        digits += lx.s[lx.pos++];
    return digits;
}

ExprNode parse_atom(Lexer& lx) {
    char c = lx.peek();
    std::size_t at = lx.pos;
    if (std::isdigit(static_cast<unsigned char>(c))) {
        ExprNode n{ExprNode::Kind::integer, lex_integer(lx), 0, {}, at};
        return n;
    }
    if (is_name_start(c)) {
        std::string name;
        while (lx.pos < lx.s.size() && is_name_char(lx.s[lx.pos])) name += lx.s[lx.pos++];
        return {ExprNode::Kind::variable, std::move(name), 0, {}, at};
    }
    if (c == '(') {
        lx.expect('(');
        ExprNode inner = parse_expr(lx);
        lx.expect(')');
        return inner;
    }
    throw ParseError("expected a number, variable or '('", lx.pos);
}

ExprNode parse_factor(Lexer& lx) {
    ExprNode base = parse_atom(lx);
    if (lx.peek() == '^') {
        std::size_t at = lx.pos;
        lx.expect('^');
        if (!std::isdigit(static_cast<unsigned char>(lx.peek())))
            throw ParseError("expected a nonnegative integer exponent", lx.pos);
        std::string digits = lex_integer(lx);
        if (digits.size() > 4) throw ParseError("exponent too large", at);
        ExprNode n{ExprNode::Kind::pow, "", std::stoi(digits), {}, at};
        n.kids.push_back(std::move(base));
        return n;
    }
    return base;
}

ExprNode parse_term(Lexer& lx) {
    ExprNode lhs = parse_factor(lx);
    for (;;) {
        char c = lx.peek();
        if (c != '*' && c != '/') {
            // catch implicit multiplication like "2x" or "x y" early
            if (c != '\0' && c != '+' && c != '-' && c != ')' && c != ',')
                throw ParseError("implicit multiplication is not allowed; write '*'", lx.pos);
            return lhs;
        }
        std::size_t at = lx.pos;
        ++lx.pos;
        ExprNode rhs = parse_factor(lx);
        ExprNode n{c == '*' ? ExprNode::Kind::mul : ExprNode::Kind::div, "", 0, {}, at};
        n.kids.push_back(std::move(lhs));
        n.kids.push_back(std::move(rhs));
        lhs = std::move(n);
    }
}

ExprNode parse_expr(Lexer& lx) {
    ExprNode lhs;
    if (lx.peek() == '-') {
        std::size_t at = lx.pos;
        lx.expect('-');
        ExprNode n{ExprNode::Kind::neg, "", 0, {}, at};
        n.kids.push_back(parse_term(lx));
        lhs = std::move(n);
    } else {
        lhs = parse_term(lx);
    }
    for (;;) {
        char c = lx.peek();
        if (c != '+' && c != '-') return lhs;
        std::size_t at = lx.pos;
        ++lx.pos;
        ExprNode rhs = parse_term(lx);
        ExprNode n{c == '+' ? ExprNode::Kind::add : ExprNode::Kind::sub, "", 0, {}, at};
        n.kids.push_back(std::move(lhs));
        n.kids.push_back(std::move(rhs));
        lhs = std::move(n);
    }
}

}  // namespace

ExprNode parse_expression(const std::string& text) {
    Lexer lx{text};
    ExprNode root = parse_expr(lx);
    if (!lx.eof()) throw ParseError("unexpected trailing input", lx.pos);
    return root;
}

std::vector<std::string> split_ideal_spec(const std::string& text) {
    std::vector<std::string> parts;
    std::string cur;
    int depth = 0;
    for (char c : text) {
        if (c == '(') ++depth;
        if (c == ')') --depth;
        if (c == ',' && depth == 0) {
            parts.push_back(cur);
            cur.clear();
        } else {
            cur += c;
        }
    }
    parts.push_back(cur);
    // drop a trailing empty entry from "f1, f2," but keep genuine emptiness errors
    std::vector<std::string> out;
    for (std::string& p : parts) {
        std::size_t b = p.find_first_not_of(" \t\n\r");
        if (b == std::string::npos) continue;
        std::size_t e = p.find_last_not_of(" \t\n\r");
        out.push_back(p.substr(b, e - b + 1));
    }
    return out;
}

RingSpecData parse_ring_spec(const std::string& text) {
    RingSpecData spec;
    std::size_t lb = text.find('[');
    if (lb == std::string::npos) throw ParseError("ring spec needs '[': e.g. QQ[x,y]", 0);
    std::size_t rb = text.find(']', lb);
    if (rb == std::string::npos) throw ParseError("unterminated variable list", lb);

    std::string field_text = text.substr(0, lb);
    field_text.erase(0, field_text.find_first_not_of(" \t"));
    field_text.erase(field_text.find_last_not_of(" \t") + 1);
    spec.field = FieldSpec::parse(field_text);

    for (const std::string& v : split_ideal_spec(text.substr(lb + 1, rb - lb - 1))) {
        for (std::size_t i = 0; i < v.size(); ++i) {
            bool ok = i == 0 ? is_name_start(v[i]) : is_name_char(v[i]);
            if (!ok) throw ParseError("bad variable name '" + v + "'", lb + 1);
        }
        spec.vars.push_back(v);
    }
    if (spec.vars.empty()) throw ParseError("ring needs at least one variable", lb);

    std::string rest = text.substr(rb + 1);
    std::size_t b = rest.find_first_not_of(" \t");
    if (b == std::string::npos) return spec;
    if (rest[b] != '/') throw ParseError("unexpected text after variable list", rb + 1 + b);
    std::size_t lp = rest.find('(', b);
    std::size_t rp = rest.rfind(')');
    if (lp == std::string::npos || rp == std::string::npos || rp < lp)
        throw ParseError("quotient modulus must be parenthesized: /(f1, f2)", rb + 1 + b);
    spec.modulus_exprs = split_ideal_spec(rest.substr(lp + 1, rp - lp - 1));
    return spec;
}

}  // namespace reltype
