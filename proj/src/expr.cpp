#include "qre/expr.hpp"

#include <cctype>

namespace qre {

namespace {

struct Token {
    enum Kind { Int, Name, Op, End } kind;
    std::string text;
    int line, col;
};

class Lexer {
  public:
    Lexer(const std::string& s, int line_offset) : s_(s), line_(line_offset) {}

    Token next() {
        skip_ws();
        if (pos_ >= s_.size()) return {Token::End, "", line_, col_};
        char c = s_[pos_];
        int l = line_, co = col_;
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::string t;
            while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_])))
                t.push_back(advance());
            return {Token::Int, t, l, co};
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            std::string t;
            while (pos_ < s_.size() &&
                   (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_'))
                t.push_back(advance());
            return {Token::Name, t, l, co};
        }
        if (std::string("+-*/^()").find(c) != std::string::npos) {
            advance();
            return {Token::Op, std::string(1, c), l, co};
        }
        throw ParseError(std::string("unexpected character '") + c + "'", l, co);
    }

  private:
    char advance() {
        char c = s_[pos_++];
        if (c == '\n') {
            ++line_;
            col_ = 1;
        } else {
            ++col_;
        }
        return c;
    }
    void skip_ws() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) advance();
    }
    const std::string& s_;
    size_t pos_ = 0;
    int line_;
    int col_ = 1;
};

using P = NCPoly<QScalar>;

class Parser {
  public:
    Parser(const FieldOps<QScalar>::Context& ctx, const std::vector<std::string>& gens,
           const std::string& text, int line_offset)
        : ctx_(ctx), gens_(gens), lex_(text, line_offset) {
        cur_ = lex_.next();
    }

    P parse() {
        P r = expr();
        if (cur_.kind != Token::End)
            throw ParseError("trailing input after expression", cur_.line, cur_.col);
        return r;
    }

  private:
    bool is_op(const char* o) const { return cur_.kind == Token::Op && cur_.text == o; }
    void eat() { cur_ = lex_.next(); }

    P expr() {
        P acc = term();
        while (is_op("+") || is_op("-")) {
            bool plus = cur_.text == "+";
            eat();
            P rhs = term();
            acc = plus ? acc + rhs : acc - rhs;
        }
        return acc;
    }

    P term() {
        P acc = unary();
        while (is_op("*") || is_op("/")) {
            bool mul = cur_.text == "*";
            Token at = cur_;
            eat();
            P rhs = unary();
            if (mul) {
                acc = acc * rhs;
            } else {
                QScalar s = as_scalar(rhs, at);
                if (s.is_zero()) throw ParseError("division by zero", at.line, at.col);
                acc = acc * s.inv();
            }
        }
        return acc;
    }

    P unary() {
        if (is_op("-")) {
            eat();
            return -unary();
        }
        return primary();
    }

    P primary() {
        P b = base();
        if (is_op("^")) {
            Token at = cur_;
            eat();
            bool neg = false;
            if (is_op("-")) {
                neg = true;
                eat();
            }
            if (cur_.kind != Token::Int)
                throw ParseError("expected integer exponent", cur_.line, cur_.col);
            long e = std::stol(cur_.text);
            eat();
            if (neg) {
                QScalar s = as_scalar(b, at);
                if (s.is_zero()) throw ParseError("zero to a negative power", at.line, at.col);
                return P::scalar(ctx_, s.pow(-e));
            }
            P acc = P::one(ctx_);
            for (long i = 0; i < e; ++i) acc = acc * b;
            return acc;
        }
        return b;
    }

    P base() {
        if (cur_.kind == Token::Int) {
            Rat v(cur_.text);
            eat();
            return P::scalar(ctx_, QScalar::from_rat(ctx_.ps, v));
        }
        if (cur_.kind == Token::Name) {
            std::string name = cur_.text;
            Token at = cur_;
            eat();
            for (size_t i = 0; i < gens_.size(); ++i)
                if (gens_[i] == name)
                    return P::generator(ctx_, int(i), ctx_.one());
            if (ctx_.ps->index_of(name) >= 0)
                return P::scalar(ctx_, QScalar::param(ctx_.ps, name));
            throw ParseError("unknown name: " + name, at.line, at.col);
        }
        if (is_op("(")) {
            eat();
            P r = expr();
            if (!is_op(")")) throw ParseError("expected ')'", cur_.line, cur_.col);
            eat();
            return r;
        }
        throw ParseError("expected a value", cur_.line, cur_.col);
    }

    QScalar as_scalar(const P& p, const Token& at) const {
        if (p.is_zero()) return QScalar::zero(ctx_.ps);
        if (p.degree() > 0)
            throw ParseError("operand must be a scalar expression", at.line, at.col);
        return p.terms().begin()->second;
    }

    const FieldOps<QScalar>::Context& ctx_;
    const std::vector<std::string>& gens_;
    Lexer lex_;
    Token cur_;
};

} // namespace

NCPoly<QScalar> parse_ncpoly(const FieldOps<QScalar>::Context& ctx,
                             const std::vector<std::string>& generators,
                             const std::string& text, int line_offset) {
    return Parser(ctx, generators, text, line_offset).parse();
}

QScalar parse_scalar(const ParamSetPtr& ps, const std::string& text, int line_offset) {
    FieldOps<QScalar>::Context ctx{ps};
    std::vector<std::string> none;
    NCPoly<QScalar> p = Parser(ctx, none, text, line_offset).parse();
    if (p.is_zero()) return QScalar::zero(ps);
    if (p.degree() > 0) throw ParseError("expected a scalar expression", line_offset, 1);
    return p.terms().begin()->second;
}

} // namespace qre
