#include "doctest.h"

#include <algorithm>
#include <random>
#include <set>

#include "nakayama/checks.hpp"
#include "nakayama/enumerate.hpp"
#include "nakayama/hom_ext.hpp"
#include "nakayama/serialize.hpp"
#include "oracles.hpp"

using namespace nakayama;

TEST_CASE("enumeration is complete") {
    std::set<std::vector<int>> two;
    for (const auto& a : all_admissible(Kind::cyclic, 2, 3)) two.insert(a.lengths());
    CHECK(two == std::set<std::vector<int>>{{2, 2}, {2, 3}, {3, 2}, {3, 3}});
    for (Kind kind : {Kind::cyclic, Kind::linear})
        for (int n = 1; n <= 4; ++n) {
            std::set<std::vector<int>> got, brute;
            const auto list = all_admissible(kind, n, 6);
            for (const auto& a : list) got.insert(a.lengths());
            for (const auto& a : oracle::all_sequences(kind, n, 6)) brute.insert(a.lengths());
            CHECK(got == brute);
            CHECK(got.size() == list.size());
            CHECK(std::is_sorted(list.begin(), list.end(), [](const auto& x, const auto& y) {
                return x.lengths() < y.lengths();
            }));
        }
    CHECK(all_admissible(Kind::cyclic, 3, 1).empty());
}

TEST_CASE("representatives") {
    CHECK(rotation_representative(validate(Kind::cyclic, {3, 2, 2})).lengths() == std::vector<int>{2, 2, 3});
    CHECK(difference_class_representative(validate(Kind::cyclic, {5, 5, 6})).lengths() == std::vector<int>{2, 2, 3});
    CHECK(difference_class_representative(validate(Kind::cyclic, {4, 4, 4})).lengths() == std::vector<int>{4, 4, 4});
    CHECK(difference_class_representative(validate(Kind::cyclic, {5, 5})).lengths() == std::vector<int>{3, 3});
    CHECK(is_elementary(validate(Kind::cyclic, {4, 5, 5})));
    CHECK_FALSE(is_elementary(validate(Kind::cyclic, {5, 5, 5})));
    CHECK(is_absolutely_elementary(validate(Kind::cyclic, {2, 2, 3})));
}

TEST_CASE("sweeps") {
    SweepSpec one;
    one.n = 1;
    one.max_c = 5;
    const auto r1 = run_sweep(one);
    REQUIRE(r1.rows.size() == 4);
    for (const auto& r : r1.rows) CHECK(r.selfinjective);

    SweepSpec ae;
    ae.n = 3;
    ae.absolutely_elementary = true;
    ae.up_to_rotation = true;
    ae.filters.push_back(ReportFilter::parse("domdim>=2"));
    std::set<std::vector<int>> got;
    for (const auto& r : run_sweep(ae).rows) got.insert(r.algebra.lengths());
    CHECK(got == std::set<std::vector<int>>{{2, 2, 2}, {2, 2, 3}});

    SweepSpec capped;
    capped.n = 3;
    capped.row_cap = 2;
    const auto rc = run_sweep(capped);
    CHECK(rc.rows.size() == 2);
    CHECK(rc.truncated);

    SweepSpec bad;
    bad.n = 0;
    CHECK_THROWS_AS(run_sweep(bad), std::invalid_argument);
}

TEST_CASE("report filters") {
    const auto r = classify(validate(Kind::cyclic, {2, 2, 3}));
    CHECK(ReportFilter::parse("domdim>=2")(r));
    CHECK(ReportFilter::parse("gldim=3")(r));
    CHECK(ReportFilter::parse("gldim==3")(r));
    CHECK_FALSE(ReportFilter::parse("gldim<3")(r));
    CHECK(ReportFilter::parse("gldim!=inf")(r));
    CHECK(ReportFilter::parse("!selfinjective")(r));
    CHECK(ReportFilter::parse("tilting_exists")(r));
    CHECK_FALSE(ReportFilter::parse("auslander")(r));
    CHECK_THROWS_AS(ReportFilter::parse("colour"), std::invalid_argument);
    CHECK_THROWS_AS(ReportFilter::parse("domdim>=x"), std::invalid_argument);
    CHECK_THROWS_AS(ReportFilter::parse("selfinjective>=1"), std::invalid_argument);
}

TEST_CASE("random algebras are admissible and reproducible") {
    std::mt19937_64 a(7), b(7);
    for (int i = 0; i < 500; ++i) {
        const Kind kind = i % 2 ? Kind::cyclic : Kind::linear;
        const auto x = random_sequence(kind, 1 + i % 8, 12, a);
        const auto y = random_sequence(kind, 1 + i % 8, 12, b);
        CHECK(x == y);
        CHECK(x.max_length() <= 12);
        CHECK(parse_algebra(to_string(x)) == x);
    }
}

TEST_CASE("report JSON") {
    const auto j = to_json(classify(validate(Kind::cyclic, {3, 2, 3, 4, 3})));
    std::vector<std::string> keys;
    for (const auto& [k, v] : j.items()) keys.push_back(k);
    CHECK(keys == std::vector<std::string>{"kind", "c", "gldim", "domdim", "id_left", "id_right", "gdim",
                                           "selfinjective", "auslander", "m_auslander", "one_aus_gorenstein",
                                           "dtr_selfinjective", "tilting_exists", "t_c", "c_c", "tilting_cotilting"});
    CHECK(j["domdim"] == 2);
    CHECK(j["gldim"] == 4);
    CHECK(j["t_c"].size() == 5);
    CHECK(j["m_auslander"].is_null());
    for (const auto& m : j["t_c"]) CHECK(to_string(parse_uniserial(m.get<std::string>())) == m.get<std::string>());

    CHECK(to_json(classify(validate(Kind::cyclic, {2, 2})))["gldim"] == "inf");

    // find an algebra without a Gorenstein dimension
    bool seen = false;
    for (const auto& alg : oracle::all_sequences(Kind::cyclic, 4, 6)) {
        const auto g = gorenstein_dim(alg);
        if (g.gdim) continue;
        CHECK(to_json(classify(alg))["gdim"] == "not-Gorenstein");
        seen = true;
        break;
    }
    CHECK(seen);
}

TEST_CASE("algebra JSON") {
    const auto a2 = validate(Kind::linear, {1, 2});
    const auto b = end_algebra(a2, ModuleSum{{1, 1}, {2, 2}, {2, 1}});
    const auto j = to_json(b);
    CHECK(j["dim"] == 5);
    CHECK(j["idempotents"].size() == 3);
    CHECK(j["basis"].size() == 5);
    std::size_t nonzero = 0;
    for (int x = 0; x < b.dim(); ++x)
        for (int y = 0; y < b.dim(); ++y) nonzero += b.product(x, y).size();
    CHECK(j["table"].size() == nonzero);
    const auto r = to_json(resolve(b, radical_and_simples(b).simples[0]));
    CHECK(r["pd"].is_number());
}

TEST_CASE("tallies and suites") {
    Tally t;
    t.check("p", true, [] { return std::string("a"); });
    t.check("p", false, [] { return std::string("b"); });
    Tally u;
    u.check("p", false, [] { return std::string("c"); });
    u.check("q", true, [] { return std::string("d"); });
    t.merge(u);
    REQUIRE(t.results().size() == 2);
    CHECK(t.results()[0].checked == 3);
    CHECK(t.results()[0].failures == 2);
    CHECK(t.results()[0].first_counterexample == "b");

    CheckOptions opt;
    opt.samples = 40;
    opt.n_max = 5;
    opt.c_max = 6;
    for (const auto& s : suite_names()) {
        CheckOptions o = opt;
        if (s == "oracle") o.n_max = 3, o.c_max = 4;
        const auto r = run_suite(s, o);
        CHECK_MESSAGE(r.passed(), s);
        CHECK(!r.properties.empty());
    }
    CHECK_THROWS_AS(run_suite("nope", opt), std::invalid_argument);
    CHECK_THROWS_AS(parallel_for(10, 2, [](std::size_t i) {
                        if (i == 3) throw std::runtime_error("boom");
                    }),
                    std::runtime_error);
}
