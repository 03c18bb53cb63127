#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "dsmt/part_mask.hpp"

namespace dsmt {

/// Expression over hypotheses t1..tn built with ^ (intersection) and
/// v (union). Meets and joins are n-ary; nested operators of the same kind
/// are flattened on construction.
class Expr {
  public:
    enum class Kind { empty, atom, meet, join };

    static Expr empty_set() { return Expr{Kind::empty, 0, {}}; }
    static Expr atom(int index) { return Expr{Kind::atom, index, {}}; }
    static Expr meet(std::vector<Expr> operands) { return combine(Kind::meet, std::move(operands)); }
    static Expr join(std::vector<Expr> operands) { return combine(Kind::join, std::move(operands)); }

    [[nodiscard]] Kind kind() const { return kind_; }
    /// 1-based hypothesis index; only meaningful for atoms.
    [[nodiscard]] int atom_index() const { return index_; }
    [[nodiscard]] const std::vector<Expr>& operands() const { return operands_; }

    /// Largest hypothesis index referenced, 0 for `empty`.
    [[nodiscard]] int max_atom() const;

    bool operator==(const Expr&) const = default;

  private:
    Expr(Kind kind, int index, std::vector<Expr> operands)
        : kind_{kind}, index_{index}, operands_{std::move(operands)} {}

    static Expr combine(Kind kind, std::vector<Expr> operands);

    Kind kind_;
    int index_;
    std::vector<Expr> operands_;
};

/// Parses the textual grammar: identifiers `t1`..`tn`, `^` for intersection,
/// `v` for union, parentheses and the keyword `empty`. `^` binds tighter
/// than `v`; whitespace is ignored. Throws ParseError.
Expr parse_expression(std::string_view text);

/// Parts covered by the expression in a frame of size n. Throws
/// ValidationError when the expression names a hypothesis beyond n.
PartMask evaluate(const Expr& expr, int n);

/// Renders in the same grammar accepted by parse_expression, e.g.
/// "(t1^t2) v t3".
std::string to_string(const Expr& expr);

} // namespace dsmt
