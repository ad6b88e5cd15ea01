#include <doctest.h>

#include "zcocycle/verify.hpp"

using namespace zcy;

TEST_CASE("lattice-count identity: worked instance and branches") {
    IntMatrix2 g{1, 0, 2, 1};
    for (const QuadraticReal& tau : tau_pool()) {
        CHECK(verify_hayes(g, 1, tau) == 0);
    }
    // both sides are 1/4 for the positive branch
    Table t = emit_table_hayes(g, 1, quad_sqrt(2));
    CHECK(t.rows.size() == 1);
    CHECK(t.rows[0].cells[0].second == "1/4");
    CHECK(t.rows[0].cells[1].second == "1/4");
    CHECK(t.rows[0].cells[2].second == "0");

    CHECK_THROWS(verify_hayes({2, 1, 1, 1}, 1, quad_sqrt(2)));   // content 1
    CHECK_THROWS(verify_hayes(g, 2, quad_sqrt(2)));              // content | m
    CHECK_THROWS(verify_hayes({1, 0, -2, 1}, 1, quad_sqrt(2)));  // c < 0
    CHECK_THROWS(verify_hayes(g, 1, QuadraticReal(Rational(1, 2))));
}

TEST_CASE("constant-coefficient identity edge cases") {
    for (const QuadraticReal& tau : tau_pool()) {
        CHECK(verify_prop41({2, 1, 1, 1}, 3, tau) == 0);  // content 1
        CHECK(verify_prop41({1, 0, 2, 1}, 1, tau) == 0);
        CHECK(verify_prop41({1, 0, 2, 1}, 2, tau) == 0);  // content | m
        CHECK(verify_prop41({1, 0, 2, 1}, 0, tau) == 0);  // m = 0
    }
    CHECK_THROWS(verify_prop41({1, 0, 2, 1}, -1, quad_sqrt(2)));
}

TEST_CASE("suite registry and determinism") {
    CHECK(suite_names().size() == 12);
    SuiteBounds bounds;
    SuiteReport a = run_suite("bernoulli-raabe", 50, 7, bounds);
    SuiteReport b = run_suite("bernoulli-raabe", 50, 7, bounds);
    CHECK(a.ok());
    CHECK(a.attempted == 50);
    CHECK(report_json(a) == report_json(b));
    CHECK_THROWS(run_suite("no-such-suite", 1, 0, bounds));
}

TEST_CASE("small suite runs pass") {
    SuiteBounds bounds;
    for (const char* name : {"coset", "character-order", "b2-coset-sum", "cocycle",
                             "distribution-relation", "rational-case"}) {
        SuiteReport r = run_suite(name, 25, 42, bounds);
        INFO(r.suite, " counterexample: ", r.counterexample);
        CHECK(r.ok());
        CHECK(r.attempted == 25);
    }
    bounds.max_entry = 20;
    SuiteReport act = run_suite("action-equivalence", 10, 42, bounds);
    INFO(act.counterexample);
    CHECK(act.ok());
    // sweep suites cap at the sweep size
    SuiteReport hayes = run_suite("hayes", 20, 0, bounds);
    INFO(hayes.counterexample);
    CHECK(hayes.ok());
    SuiteReport p41 = run_suite("prop41", 40, 0, bounds);
    INFO(p41.counterexample);
    CHECK(p41.ok());
    SuiteReport ehr = run_suite("ehrhart-oracle", 15, 0, bounds);
    INFO(ehr.counterexample);
    CHECK(ehr.ok());
    SuiteReport t3 = run_suite("theorem3", 10, 0, bounds);
    INFO(t3.counterexample);
    CHECK(t3.ok());
}

TEST_CASE("table emitters") {
    Table t3 = emit_table_theorem3({1, 0, 2, 1}, {1, 0, 2, 1}, 6);
    CHECK(t3.rows.size() == 7);
    for (const auto& row : t3.rows) CHECK(row.cells[1].second == "0");
    std::string csv = t3.to_csv();
    CHECK(csv.substr(0, csv.find('\n')) == "m,residual");

    Table eh = emit_table_ehrhart({1, 0, 2, 1}, 2, 5);
    CHECK(eh.to_csv().substr(0, eh.to_csv().find('\n')) == "m,count,g0,g1,g2");
    const char* counts[6] = {"1", "2", "4", "6", "9", "12"};
    for (int m = 0; m < 6; ++m) {
        CHECK(eh.rows[m].cells[1].second == counts[m]);
        CHECK(eh.rows[m].cells[3].second == "1");
        CHECK(eh.rows[m].cells[4].second == "1/4");
    }
    CHECK(eh.rows[1].cells[2].second == "3/4");
    CHECK(eh.rows[2].cells[2].second == "1");

    // JSON shape is stable
    CHECK(emit_table_theorem3({1, 0, 2, 1}, {1, 0, 2, 1}, 1).to_json() ==
          emit_table_theorem3({1, 0, 2, 1}, {1, 0, 2, 1}, 1).to_json());
    CHECK(eh.to_json().rfind("{\"kind\":\"ehrhart\"", 0) == 0);
    CHECK_THROWS(emit_table_ehrhart({1, 0, 2, 1}, 0, 3));
}

TEST_CASE("SL2 sweep shape") {
    for (const IntMatrix2& g : sl2_sweep(12, true)) {
        CHECK(g.is_sl2());
        CHECK(g.c >= 1);
        CHECK(g.c <= 12);
        CHECK(content(g) > 1);
    }
    // sweep without the content filter contains content-1 members
    bool has_trivial = false;
    for (const IntMatrix2& g : sl2_sweep(5, false))
        if (content(g) == 1) has_trivial = true;
    CHECK(has_trivial);
}
