#pragma once

#include <string>
#include <vector>

#include "reltype/polynomial.hpp"

namespace reltype {

// Expression AST produced by the field-independent front end. Integer
// literals stay as digit strings so QQ keeps full precision and GF(p) can
// fold them mod p.
struct ExprNode {
    enum class Kind { integer, variable, add, sub, mul, div, neg, pow };
    Kind kind;
    std::string text;             // digits or variable name
    int exponent = 0;             // for pow
    std::vector<ExprNode> kids;
    std::size_t pos = 0;
};

// Grammar: expr := ['-'] term (('+'|'-') term)*
//          term := factor (('*'|'/') factor)*
//          factor := atom ['^' uint]
//          atom := uint | variable | '(' expr ')'
// Implicit multiplication is rejected. '/' is accepted so exact rational
// coefficients like 1/2*x round-trip; the divisor must evaluate to a nonzero
// constant.
ExprNode parse_expression(const std::string& text);

// "QQ[x,y]", "GF(32003)[x1,x2,x3]", optionally "/(f1, ..., fk)" for a
// quotient base ring.
struct RingSpecData {
    FieldSpec field;
    std::vector<std::string> vars;
    std::vector<std::string> modulus_exprs;
};
RingSpecData parse_ring_spec(const std::string& text);

// Splits "f1, f2, f3" at top-level commas.
std::vector<std::string> split_ideal_spec(const std::string& text);

template <class F>
Poly<F> expr_to_poly(const ExprNode& node, const Ring<F>& ring) {
    const F& f = ring.field();
    switch (node.kind) {
        case ExprNode::Kind::integer:
            return Poly<F>::constant(ring, f.from_decimal(node.text));
        case ExprNode::Kind::variable: {
            if (!ring.has_var(node.text))
                throw ParseError("unknown variable '" + node.text + "'", node.pos);
            return Poly<F>::variable(ring, ring.index_of(node.text));
        }
        case ExprNode::Kind::add:
            return expr_to_poly(node.kids[0], ring) + expr_to_poly(node.kids[1], ring);
        case ExprNode::Kind::sub:
            return expr_to_poly(node.kids[0], ring) - expr_to_poly(node.kids[1], ring);
        case ExprNode::Kind::mul:
            return expr_to_poly(node.kids[0], ring) * expr_to_poly(node.kids[1], ring);
        case ExprNode::Kind::div: {
            Poly<F> num = expr_to_poly(node.kids[0], ring);
            Poly<F> den = expr_to_poly(node.kids[1], ring);
            if (den.is_zero() || den.total_degree() > 0)
                throw ParseError("divisor must be a nonzero constant", node.pos);
            return num.scaled(f.inv(den.lead_coeff()));
        }
        case ExprNode::Kind::neg:
            return -expr_to_poly(node.kids[0], ring);
        case ExprNode::Kind::pow:
            return expr_to_poly(node.kids[0], ring).pow(node.exponent);
    }
    throw Error("unreachable");
}

template <class F>
Poly<F> parse_poly(const Ring<F>& ring, const std::string& text) {
    return expr_to_poly(parse_expression(text), ring);
}

template <class F>
std::vector<Poly<F>> parse_ideal(const Ring<F>& ring, const std::string& text) {
    std::vector<Poly<F>> out;
    for (const std::string& part : split_ideal_spec(text)) out.push_back(parse_poly(ring, part));
    return out;
}

// Instantiates a parsed ring spec over a concrete field object. The caller
// dispatches on spec.field.kind to pick F.
template <class F>
QuotientRing<F> make_context(F field, const RingSpecData& spec,
                             TermOrder order = TermOrder::degrevlex()) {
    QuotientRing<F> ctx;
    ctx.ring = Ring<F>::make(std::move(field), spec.vars, std::move(order));
    for (const std::string& e : spec.modulus_exprs)
        ctx.modulus.push_back(parse_poly(*ctx.ring, e));
    return ctx;
}

}  // namespace reltype
