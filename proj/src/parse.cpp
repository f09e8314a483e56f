#include "hopfoid/parse.hpp"

#include <cctype>

namespace hopfoid {

namespace {

class Lexer {
public:
    explicit Lexer(const std::string& src) : s_(src) {}

    void skip_ws() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }
    bool eof() {
        skip_ws();
        return pos_ >= s_.size();
    }
    char peek() {
        skip_ws();
        return pos_ < s_.size() ? s_[pos_] : '\0';
    }
    size_t pos() const { return pos_; }
    void expect(char c) {
        if (peek() != c) throw ParseError(std::string("expected '") + c + "'", pos_);
        ++pos_;
    }
    bool accept(char c) {
        if (peek() == c) {
            ++pos_;
            return true;
        }
        return false;
    }
    std::string read_int() {
        skip_ws();
        size_t start = pos_;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
        if (pos_ == start) throw ParseError("expected a number", start);
        return s_.substr(start, pos_ - start);
    }
    std::string read_ident() {
        skip_ws();
        size_t start = pos_;
        auto ok = [&](char c, bool first) {
            return std::isalpha(static_cast<unsigned char>(c)) || c == '_' ||
                   (!first && std::isdigit(static_cast<unsigned char>(c)));
        };
        while (pos_ < s_.size() && ok(s_[pos_], pos_ == start)) ++pos_;
        if (pos_ == start) throw ParseError("expected an identifier", start);
        return s_.substr(start, pos_ - start);
    }

private:
    const std::string& s_;
    size_t pos_ = 0;
};

class Parser {
public:
    explicit Parser(const std::string& src) : lex_(src) {}

    ExprNode parse() {
        ExprNode e = expr();
        if (!lex_.eof()) throw ParseError("unexpected trailing input", lex_.pos());
        return e;
    }

private:
    ExprNode expr() {
        ExprNode acc;
        if (lex_.accept('-')) {
            acc = ExprNode{ExprNode::Kind::Neg};
            acc.kids.push_back(term());
        } else {
            acc = term();
        }
        while (true) {
            if (lex_.accept('+')) {
                ExprNode n{ExprNode::Kind::Add};
                n.kids.push_back(std::move(acc));
                n.kids.push_back(term());
                acc = std::move(n);
            } else if (lex_.accept('-')) {
                ExprNode n{ExprNode::Kind::Sub};
                n.kids.push_back(std::move(acc));
                n.kids.push_back(term());
                acc = std::move(n);
            } else {
                return acc;
            }
        }
    }

    ExprNode term() {
        ExprNode acc = factor();
        while (lex_.accept('*')) {
            ExprNode n{ExprNode::Kind::Mul};
            n.kids.push_back(std::move(acc));
            n.kids.push_back(factor());
            acc = std::move(n);
        }
        return acc;
    }

    ExprNode factor() {
        ExprNode base = atom();
        if (lex_.accept('^')) {
            bool neg = lex_.accept('-');
            long e = std::stol(lex_.read_int());
            ExprNode n{ExprNode::Kind::Pow};
            n.exponent = neg ? -e : e;
            n.kids.push_back(std::move(base));
            return n;
        }
        return base;
    }

    ExprNode atom() {
        char c = lex_.peek();
        if (c == '(') {
            lex_.expect('(');
            ExprNode e = expr();
            lex_.expect(')');
            return e;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::string num = lex_.read_int();
            if (lex_.accept('/')) num += "/" + lex_.read_int();
            ExprNode n{ExprNode::Kind::Number};
            n.value = Rational(num);
            return n;
        }
        ExprNode n{ExprNode::Kind::Variable};
        n.name = lex_.read_ident();
        return n;
    }

    Lexer lex_;
};

}  // namespace

ExprNode parse_expr(const std::string& src) { return Parser(src).parse(); }

MultiPoly eval_multipoly(const ExprNode& ast, const VarTablePtr& vars) {
    switch (ast.kind) {
        case ExprNode::Kind::Number:
            return MultiPoly::constant(vars, ast.value);
        case ExprNode::Kind::Variable: {
            int idx = vars->index(ast.name);
            if (idx < 0) throw std::domain_error("unknown variable '" + ast.name + "'");
            return MultiPoly::var(vars, idx);
        }
        case ExprNode::Kind::Add:
            return eval_multipoly(ast.kids[0], vars) + eval_multipoly(ast.kids[1], vars);
        case ExprNode::Kind::Sub:
            return eval_multipoly(ast.kids[0], vars) - eval_multipoly(ast.kids[1], vars);
        case ExprNode::Kind::Mul:
            return eval_multipoly(ast.kids[0], vars) * eval_multipoly(ast.kids[1], vars);
        case ExprNode::Kind::Neg:
            return -eval_multipoly(ast.kids[0], vars);
        case ExprNode::Kind::Pow:
            return eval_multipoly(ast.kids[0], vars).pow(ast.exponent);
    }
    throw std::logic_error("unreachable");
}

MultiPoly parse_multipoly(const std::string& src, const VarTablePtr& vars) {
    return eval_multipoly(parse_expr(src), vars);
}

UniPoly eval_unipoly(const ExprNode& ast) {
    switch (ast.kind) {
        case ExprNode::Kind::Number:
            return UniPoly(ast.value);
        case ExprNode::Kind::Variable:
            if (ast.name != "x") throw std::domain_error("unknown variable '" + ast.name + "'");
            return UniPoly::x();
        case ExprNode::Kind::Add:
            return eval_unipoly(ast.kids[0]) + eval_unipoly(ast.kids[1]);
        case ExprNode::Kind::Sub:
            return eval_unipoly(ast.kids[0]) - eval_unipoly(ast.kids[1]);
        case ExprNode::Kind::Mul:
            return eval_unipoly(ast.kids[0]) * eval_unipoly(ast.kids[1]);
        case ExprNode::Kind::Neg:
            return -eval_unipoly(ast.kids[0]);
        case ExprNode::Kind::Pow: {
            if (ast.exponent < 0)
                throw std::domain_error("negative exponent is not defined for polynomials in x");
            return eval_unipoly(ast.kids[0]).pow(static_cast<unsigned>(ast.exponent));
        }
    }
    throw std::logic_error("unreachable");
}

UniPoly parse_unipoly(const std::string& src) { return eval_unipoly(parse_expr(src)); }

}  // namespace hopfoid
