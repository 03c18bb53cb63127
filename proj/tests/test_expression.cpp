#include "doctest.h"

#include "dsmt/errors.hpp"
#include "dsmt/expression.hpp"

using namespace dsmt;

TEST_CASE("parse and render") {
    CHECK(to_string(parse_expression("(t1^t2)vt3")) == "(t1^t2) v t3");
    CHECK(to_string(parse_expression("t1 v t2 v t3")) == "t1 v t2 v t3");
    CHECK(to_string(parse_expression("((t1 v t2))")) == "t1 v t2");
    CHECK(to_string(parse_expression(" empty ")) == "empty");
    CHECK(to_string(parse_expression("(t1vt2)^t3")) == "(t1 v t2)^t3");
}

TEST_CASE("^ binds tighter than v") {
    const Expr e = parse_expression("t1^t2vt3");
    REQUIRE(e.kind() == Expr::Kind::join);
    CHECK(e.operands()[0].kind() == Expr::Kind::meet);
    CHECK(evaluate(e, 3) == evaluate(parse_expression("(t1^t2)vt3"), 3));
    CHECK(evaluate(e, 3) != evaluate(parse_expression("t1^(t2vt3)"), 3));
}

TEST_CASE("nested operators flatten") {
    const Expr e = parse_expression("t1 v (t2 v t3)");
    CHECK(e.operands().size() == 3);
    CHECK(e.max_atom() == 3);
}

TEST_CASE("evaluation against the part codification") {
    // n = 3: bits <1>,<2>,<12>,<3>,<13>,<23>,<123>
    CHECK(evaluate(parse_expression("t1"), 3).bits() == 0b1010101);
    CHECK(evaluate(parse_expression("t1^t2"), 3).bits() == 0b1000100);
    CHECK(evaluate(parse_expression("t1^t2^t3"), 3).count() == 1);
    CHECK(evaluate(parse_expression("t1vt2vt3"), 3) == PartMask::all(3));
    CHECK(evaluate(parse_expression("empty"), 3).empty());
}

TEST_CASE("parse errors") {
    CHECK_THROWS_AS(parse_expression(""), ParseError);
    CHECK_THROWS_AS(parse_expression("t1 ^"), ParseError);
    CHECK_THROWS_AS(parse_expression("(t1 v t2"), ParseError);
    CHECK_THROWS_AS(parse_expression("t0"), ParseError);
    CHECK_THROWS_AS(parse_expression("x1"), ParseError);
    CHECK_THROWS_AS(parse_expression("t1 t2"), ParseError);
    CHECK_THROWS_AS(parse_expression("t"), ParseError);
}

TEST_CASE("hypothesis outside the frame") {
    CHECK_THROWS_AS(evaluate(parse_expression("t4"), 3), ValidationError);
}
