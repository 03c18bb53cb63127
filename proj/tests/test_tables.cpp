#include "doctest.h"

#include <string>

#include "dsmt/errors.hpp"
#include "dsmt/tables.hpp"
#include "oracles.hpp"

using namespace dsmt;

TEST_CASE("fractions") {
    CHECK(parse_fraction("3/5") == Fraction(3, 5));
    CHECK(parse_fraction("2/2") == Fraction(1));
    CHECK(parse_fraction("0/3") == Fraction(0));
    CHECK(parse_fraction("4") == Fraction(4));
    CHECK_THROWS_AS(parse_fraction("1/0"), ValidationError);
    CHECK_THROWS_AS(parse_fraction("a/b"), ValidationError);
    CHECK_THROWS_AS(parse_fraction("1/2x"), ValidationError);
}

TEST_CASE("reference tables that match exactly") {
    for (const char* id : {"1", "3", "7", "8", "9", "comparison"}) {
        CAPTURE(id);
        const TableCheck check = check_reference_table(id);
        CHECK(check.passed());
        CHECK(check.notes.empty());
    }
}

TEST_CASE("hybrid reference tables") {
    const TableCheck cards = check_reference_table("2");
    CHECK(cards.entries == 9);
    // every listed row matches; the model has one element the fixture omits
    REQUIRE(cards.mismatches.size() == 2);
    CHECK(cards.mismatches[0] == "expected 9 elements, found 10");
    CHECK(cards.mismatches[1] == "unlisted element (t1^t2) v t3 (C_M 2)");
    std::size_t entries = 0;
    for (const char* id : {"4", "5", "6"}) {
        const TableCheck check = check_reference_table(id);
        CHECK(check.passed());
        CHECK_FALSE(check.notes.empty());
        entries += check.entries;
    }
    CHECK(entries == 64);
}

TEST_CASE("free cardinalities agree with the string oracle") {
    for (const auto& row : reference::free_cardinalities()) {
        CHECK(static_cast<int>(oracle::eval(row.expr, 3).size()) == row.cardinality);
    }
}

TEST_CASE("emitted tables are stable") {
    for (const auto& id : reference_table_ids()) {
        const auto model = reference_model(id);
        const std::string a = emit_table(id, *model);
        CHECK(a == emit_table(id, *model));
        CHECK_FALSE(a.empty());
    }
    CHECK_THROWS_AS(emit_table("3", Model::free(3)), ValidationError);
    CHECK_THROWS_AS(emit_table("10", Model::free(3)), ValidationError);
    CHECK_THROWS_AS(reference_model("x"), ValidationError);
}

TEST_CASE("table 3 text") {
    const std::string text = emit_table("3", *reference_model("3"));
    CHECK(text.find("a7   t1 v t2 v t3  3") != std::string::npos);
}
