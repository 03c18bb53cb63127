#include "doctest.h"

#include <string>
#include <vector>

#include "dsmt/errors.hpp"
#include "dsmt/model.hpp"
#include "oracles.hpp"

using namespace dsmt;

namespace {

Model make(int n, std::vector<std::string> constraints) { return Model::build(n, constraints); }

} // namespace

TEST_CASE("cardinalities") {
    const Model free3 = Model::free(3);
    CHECK(dsm_cardinality(free3.parse("t1^t2^t3"), free3) == 1);
    CHECK(dsm_cardinality(free3.parse("t1vt2vt3"), free3) == 7);
    const Model shafer3 = Model::shafer(3);
    CHECK(dsm_cardinality(shafer3.parse("t1"), shafer3) == 1);
    const Model hybrid = make(3, {"t1^t3", "t2^t3"});
    CHECK(dsm_cardinality(hybrid.parse("t1^t2"), hybrid) == 1);
    CHECK(dsm_cardinality(hybrid.parse("t1vt2vt3"), hybrid) == 4);
}

TEST_CASE("model kinds") {
    CHECK(Model::free(2).kind() == ModelKind::free);
    CHECK(Model::shafer(3).kind() == ModelKind::shafer);
    CHECK(make(3, {"t1^t2", "t1^t3", "t2^t3"}).kind() == ModelKind::shafer);
    CHECK(make(3, {"t1^t2", "t1^t3", "t2^t3"}).is_shafer());
    CHECK(make(3, {"t1^t3", "t2^t3"}).kind() == ModelKind::hybrid);
    CHECK_FALSE(make(3, {"t1^t3", "t2^t3"}).is_shafer());
    CHECK(to_string(ModelKind::hybrid) == "hybrid");
}

TEST_CASE("restricted lattice sizes") {
    CHECK(Model::free(2).restricted().size() == 5);
    CHECK(Model::free(3).restricted().size() == 19);
    const Model shafer3 = Model::shafer(3);
    REQUIRE(shafer3.restricted().size() == 8);
    // t1^t2^t3, the three pairwise meets, their three pairwise unions and the union of all three
    CHECK(shafer3.empty_set_members().size() == 8);
    CHECK(Model::shafer(2).restricted().size() == 4);
    CHECK(Model::shafer(4).restricted().size() == 16);
}

TEST_CASE("hybrid model survivors") {
    const Model m = make(3, {"t1^t3", "t2^t3"});
    const auto r = m.restricted();
    // the listed nine plus (t1^t2) v t3, which keeps parts <12> and <3>
    REQUIRE(r.size() == 10);
    CHECK(r[0].residual.empty());
    CHECK(r[1].residual.count() == 1);
    CHECK(m.name(r[1].element) == "t1^t2");
    CHECK(m.name(r[2].element) == "t3");
    CHECK(m.class_of(m.parse("(t1^t2)vt3")).residual.count() == 2);
    CHECK(m.total_ignorance().residual.count() == 4);
    CHECK(m.is_empty(m.parse("t1^t2^t3")));
    CHECK(m.is_empty(m.parse("(t1vt2)^t3")));
    CHECK(m.class_of(m.parse("((t1^t2)vt3)^(t1vt2)")).element == m.parse("t1^t2"));
}

TEST_CASE("shafer survivors mirror the power set") {
    for (int n = 2; n <= 4; ++n) {
        const Model m = Model::shafer(n);
        CHECK(m.restricted().size() == (1u << n));
        for (const auto& r : m.restricted()) {
            if (r.index == 0) continue;
            // one surviving part per hypothesis in the labels
            CHECK(r.residual.count() == std::popcount(m.base().labels(r.element)));
        }
    }
}

TEST_CASE("restricted order and residual consistency") {
    const Model m = make(4, {"t1^t2", "t3 v t4"});
    const auto r = m.restricted();
    for (std::size_t i = 0; i < r.size(); ++i) {
        CHECK(r[i].index == i);
        CHECK(m.residual(r[i].element) == r[i].residual);
        if (i > 0) CHECK(r[i - 1].residual < r[i].residual);
    }
    for (const auto& e : m.base().elements()) {
        const auto& cls = m.class_of(e);
        CHECK(cls.residual == m.residual(e));
        CHECK(cls.element.parts.count() <= e.parts.count());
    }
}

TEST_CASE("degenerate and invalid constraints") {
    CHECK_THROWS_AS(make(2, {"t1 v t2"}), ValidationError);
    CHECK_THROWS_AS(make(3, {"t1vt2vt3"}), ValidationError);
    CHECK_THROWS_AS(make(2, {"empty"}), ValidationError);
    CHECK_THROWS_AS(make(2, {"t1 ^"}), ParseError);
    CHECK_THROWS_AS(make(2, {"t3"}), ValidationError);
    // every part suppressed without naming the top
    CHECK_THROWS_AS(make(2, {"t1", "t2"}), ValidationError);
}

TEST_CASE("constraint classification") {
    const auto l = FreeLattice::generate(3);
    CHECK(classify_constraint(l.parse("t1^t2"), 3) == ConstraintKind::exclusivity);
    CHECK(classify_constraint(l.parse("t1 v t2"), 3) == ConstraintKind::non_existential);
    CHECK(classify_constraint(l.parse("t1"), 3) == ConstraintKind::non_existential);
    CHECK(classify_constraint(l.parse("(t1^t2) v t3"), 3) == ConstraintKind::hybrid);
    CHECK(to_string(ConstraintKind::non_existential) == "non-existential");
}

TEST_CASE("emptiness") {
    const Model shafer3 = Model::shafer(3);
    CHECK(is_empty_under(shafer3.parse("t1^t2^t3"), shafer3));
    CHECK_FALSE(is_empty_under(shafer3.parse("t1"), shafer3));
    CHECK(is_empty_under(shafer3.base().empty_element(), shafer3));
    CHECK(is_empty_under(Model::free(2).base().empty_element(), Model::free(2)));
}

TEST_CASE("inner constraints and pair closure") {
    const Model m = make(3, {"t1^t2", "t3"});
    const PartMask suppressed = m.suppressed_parts();
    const PartMask a = m.parse("t1^t2").parts;
    const PartMask b = m.parse("t3").parts;
    CHECK(suppressed == (a | b));
    for (const auto& e : m.base().elements()) {
        if (e.parts.subset_of(a | b)) CHECK(m.is_empty(e));
        else CHECK_FALSE(m.is_empty(e));
    }
    // (t1^t2) v t3 itself is emptied although never named
    CHECK(m.is_empty(m.parse("(t1^t2) v t3")));
}

TEST_CASE("adding a constraint never raises a cardinality") {
    const Model loose = make(3, {"t1^t2"});
    const Model tight = make(3, {"t1^t2", "t2^t3"});
    for (const auto& e : loose.base().elements()) {
        CHECK(tight.cardinality(e) <= loose.cardinality(e));
    }
}

TEST_CASE("part suppression agrees with the string oracle") {
    const Model m = make(3, {"t1^t3", "t2^t3"});
    const oracle::Parts suppressed = oracle::unite(oracle::eval("t1^t3", 3), oracle::eval("t2^t3", 3));
    for (const auto& e : m.base().elements()) {
        const std::string text = m.name(e);
        const auto survivors = oracle::subtract(oracle::eval(text, 3), suppressed);
        CHECK(static_cast<int>(survivors.size()) == m.cardinality(e));
    }
}

TEST_CASE("equivalence and constraint names") {
    const Model a = make(3, {"t1^t3", "t2^t3"});
    const Model b = make(3, {"(t1 v t2)^t3"});
    CHECK(a.equivalent(b));
    CHECK_FALSE(a.equivalent(Model::shafer(3)));
    CHECK(a.constraint_names() == std::vector<std::string>{"t1^t3", "t2^t3"});
}
