#include "dsmt/expression.hpp"

#include <algorithm>
#include <cctype>

#include "dsmt/errors.hpp"

namespace dsmt {

Expr Expr::combine(Kind kind, std::vector<Expr> operands) {
    std::vector<Expr> flat;
    flat.reserve(operands.size());
    for (auto& op : operands) {
        if (op.kind_ == kind) {
            for (auto& inner : op.operands_) flat.push_back(std::move(inner));
        } else {
            flat.push_back(std::move(op));
        }
    }
    if (flat.size() == 1) return std::move(flat.front());
    if (flat.empty()) throw ParseError("operator with no operands");
    return Expr{kind, 0, std::move(flat)};
}

int Expr::max_atom() const {
    int result = kind_ == Kind::atom ? index_ : 0;
    for (const auto& op : operands_) result = std::max(result, op.max_atom());
    return result;
}

namespace {

class Parser {
  public:
    explicit Parser(std::string_view text) : text_{text} {}

    Expr parse() {
        Expr e = parse_join();
        skip_ws();
        if (pos_ != text_.size()) fail("unexpected '" + std::string(1, text_[pos_]) + "'");
        return e;
    }

  private:
    Expr parse_join() {
        std::vector<Expr> terms;
        terms.push_back(parse_meet());
        while (consume('v')) terms.push_back(parse_meet());
        return terms.size() == 1 ? std::move(terms.front()) : Expr::join(std::move(terms));
    }

    Expr parse_meet() {
        std::vector<Expr> factors;
        factors.push_back(parse_factor());
        while (consume('^')) factors.push_back(parse_factor());
        return factors.size() == 1 ? std::move(factors.front()) : Expr::meet(std::move(factors));
    }

    Expr parse_factor() {
        skip_ws();
        if (pos_ >= text_.size()) fail("unexpected end of expression");
        if (consume('(')) {
            Expr inner = parse_join();
            if (!consume(')')) fail("expected ')'");
            return inner;
        }
        if (text_.substr(pos_, 5) == "empty") {
            pos_ += 5;
            return Expr::empty_set();
        }
        if (text_[pos_] == 't') {
            ++pos_;
            const std::size_t start = pos_;
            int index = 0;
            while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
                index = index * 10 + (text_[pos_] - '0');
                if (index > 1000) fail("hypothesis index too large");
                ++pos_;
            }
            if (pos_ == start) fail("expected digits after 't'");
            if (index == 0) fail("hypothesis indices start at 1");
            return Expr::atom(index);
        }
        fail("unexpected '" + std::string(1, text_[pos_]) + "'");
    }

    bool consume(char c) {
        skip_ws();
        if (pos_ < text_.size() && text_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    void skip_ws() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }

    [[noreturn]] void fail(const std::string& what) const {
        throw ParseError("cannot parse '" + std::string(text_) + "' at offset " + std::to_string(pos_) + ": " +
                         what);
    }

    std::string_view text_;
    std::size_t pos_{0};
};

void render(const Expr& e, std::string& out, bool inside_meet) {
    switch (e.kind()) {
    case Expr::Kind::empty:
        out += "empty";
        return;
    case Expr::Kind::atom:
        out += 't';
        out += std::to_string(e.atom_index());
        return;
    case Expr::Kind::meet: {
        bool first = true;
        for (const auto& op : e.operands()) {
            if (!first) out += '^';
            first = false;
            render(op, out, true);
        }
        return;
    }
    case Expr::Kind::join: {
        if (inside_meet) out += '(';
        bool first = true;
        for (const auto& op : e.operands()) {
            if (!first) out += " v ";
            first = false;
            const bool paren = op.kind() == Expr::Kind::meet;
            if (paren) out += '(';
            render(op, out, false);
            if (paren) out += ')';
        }
        if (inside_meet) out += ')';
        return;
    }
    }
}

} // namespace

Expr parse_expression(std::string_view text) { return Parser{text}.parse(); }

PartMask evaluate(const Expr& expr, int n) {
    switch (expr.kind()) {
    case Expr::Kind::empty:
        return PartMask{};
    case Expr::Kind::atom:
        if (expr.atom_index() > n) {
            throw ValidationError("t" + std::to_string(expr.atom_index()) + " is not in a frame of size " +
                                  std::to_string(n));
        }
        return singleton_parts(n, expr.atom_index());
    case Expr::Kind::meet: {
        PartMask acc = PartMask::all(n);
        for (const auto& op : expr.operands()) acc &= evaluate(op, n);
        return acc;
    }
    case Expr::Kind::join: {
        PartMask acc;
        for (const auto& op : expr.operands()) acc |= evaluate(op, n);
        return acc;
    }
    }
    return PartMask{};
}

std::string to_string(const Expr& expr) {
    std::string out;
    render(expr, out, false);
    return out;
}

} // namespace dsmt
