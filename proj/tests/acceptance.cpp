// Acceptance run: one PASS/FAIL line per criterion, each with a pinned time limit.

#include <chrono>
#include <functional>
#include <iomanip>
#include <iostream>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "nakayama/checks.hpp"
#include "nakayama/endo.hpp"
#include "nakayama/enumerate.hpp"
#include "nakayama/hom_ext.hpp"
#include "nakayama/tilting.hpp"

using namespace nakayama;

namespace {

struct Outcome {
    bool ok = true;
    std::string detail;

    void expect(bool cond, const std::string& what) {
        if (cond) return;
        ok = false;
        detail += (detail.empty() ? "" : "; ") + what;
    }
};

struct Criterion {
    int id;
    std::string name;
    double limit_seconds;
    std::function<Outcome()> run;
};

std::string show(const std::set<std::vector<int>>& s) {
    std::string out = "{";
    for (const auto& c : s) out += (out.size() > 1 ? " " : "") + ("(" + lengths_to_string(c) + ")");
    return out + "}";
}

Outcome elementary_tables() {
    Outcome o;
    for (bool absolute : {true, false}) {
        SweepSpec spec;
        spec.n = 3;
        spec.filters.push_back(ReportFilter::parse("domdim>=2"));
        spec.up_to_rotation = true;
        (absolute ? spec.absolutely_elementary : spec.elementary) = true;
        std::set<std::vector<int>> got;
        for (const auto& r : run_sweep(spec).rows) got.insert(r.algebra.lengths());
        const std::set<std::vector<int>> expected =
            absolute ? std::set<std::vector<int>>{{2, 2, 2}, {2, 2, 3}}
                     : std::set<std::vector<int>>{{2, 2, 2}, {3, 3, 3}, {4, 4, 4}, {2, 2, 3}, {3, 3, 4}};
        o.expect(got == expected, std::string(absolute ? "absolutely elementary" : "elementary") + " got " +
                                      show(got) + " expected " + show(expected));
    }
    return o;
}

Outcome gldim4_example() {
    Outcome o;
    const auto alg = validate(Kind::cyclic, {3, 2, 3, 4, 3});
    const auto r = classify(alg);
    o.expect(r.domdim == ExtendedNat(2), "domdim " + r.domdim.to_string());
    o.expect(r.gldim == ExtendedNat(4), "gldim " + r.gldim.to_string());
    const ModuleSum tc{projective(alg, 1), projective(alg, 4), projective(alg, 5), {4, 2}, {4, 1}};
    o.expect(r.t_c == tc, "T_C");
    o.expect(pd_tau_TC(alg) == ExtendedNat(4), "pd tau T_C");
    const auto d = drop_check(alg);
    o.expect(d.gldim_bc == BoundedDim{false, 4, 30}, "gldim B_C " + d.gldim_bc.to_string());
    o.expect(d.theorem_holds == true, "drop biconditional");
    return o;
}

Outcome one_ag_example() {
    Outcome o;
    const auto alg = validate(Kind::cyclic, {3, 2, 2, 3, 3});
    const auto r = classify(alg);
    o.expect(r.id_left == ExtendedNat(2) && r.domdim == ExtendedNat(2), "id / domdim");
    const ModuleSum tc{projective(alg, 1), projective(alg, 2), projective(alg, 4), projective(alg, 5), {4, 1}};
    o.expect(r.t_c == tc && r.c_c == tc, "T_C = C_C");
    o.expect(verify_tilting(alg, tc) && verify_cotilting(alg, tc), "tilting and cotilting");
    o.expect(r.one_aus_gorenstein && !r.auslander && r.gldim.is_infinite(), "flags");
    return o;
}

Outcome rad2_example() {
    Outcome o;
    const auto alg = validate(Kind::linear, {1, 2, 2, 2, 2});
    o.expect(gldim(alg) == ExtendedNat(4) && domdim(alg) == ExtendedNat(4), "gldim / domdim");
    o.expect(pd_tau_TC(alg) == ExtendedNat(0), "pd tau T_C");
    const auto d = drop_check(alg);
    o.expect(d.gldim_bc == BoundedDim{false, 3, 30}, "gldim B_C " + d.gldim_bc.to_string());
    return o;
}

Outcome two_auslander_example() {
    Outcome o;
    const auto alg = validate(Kind::cyclic, {2, 2, 3});
    const auto r = classify(alg);
    o.expect(r.gldim == ExtendedNat(3) && r.domdim == ExtendedNat(3), "gldim / domdim");
    o.expect(r.t_c == ModuleSum{{1, 2}, {3, 3}, {3, 1}}, "T_C");
    return o;
}

void expect_suite(Outcome& o, const SuiteReport& r) {
    for (const auto& p : r.properties)
        o.expect(p.failures == 0, p.name + " failed " + std::to_string(p.failures) + "/" + std::to_string(p.checked) +
                                      " (" + p.first_counterexample + ")");
}

CheckOptions sweep_options() {
    CheckOptions opt;
    opt.samples = 10000;
    opt.seed = 42;
    opt.n_max = 8;
    opt.c_max = 12;
    opt.grid_n = 5;
    opt.grid_c = 7;
    return opt;
}

Outcome tilting_suite() {
    Outcome o;
    const auto r = run_suite("tilting", sweep_options());
    expect_suite(o, r);
    for (const char* p : {"criterion <=> domdim >= 2", "criterion <=> T_C tilting in C", "criterion <=> Omega bijection"})
        o.expect(r.find(p) && r.find(p)->checked >= 10000, std::string("coverage of ") + p);
    return o;
}

Outcome oracle_suite() {
    Outcome o;
    CheckOptions opt;
    opt.n_max = 4;
    opt.c_max = 6;
    const auto r = run_suite("oracle", opt);
    expect_suite(o, r);
    o.expect(r.find("hom_dim matches the matrix oracle") != nullptr, "no pairs compared");
    return o;
}

Outcome structural_suite() {
    Outcome o;
    expect_suite(o, run_suite("structural", sweep_options()));
    return o;
}

Outcome endo_suite() {
    Outcome o;
    CheckOptions opt;
    opt.samples = 300;
    opt.seed = 42;
    opt.n_max = 6;
    opt.c_max = 8;
    const auto r = run_suite("endo", opt);
    expect_suite(o, r);
    for (const char* p : {"End(A_2 + D A_2) has dimension 5 and gldim 2", "domdim End(X)^op = 2 over hereditary algebras",
                          "domdim End(X)^op is antitone in X", "End_B(R) has the dimension of End(Q~)"})
        o.expect(r.find(p) != nullptr, std::string("not evaluated: ") + p);
    const auto* key = r.find("pd over B_C drops by one");
    o.expect(key && key->checked >= 50, "fewer than 50 (algebra, M) pairs");
    return o;
}

Outcome it_suite() {
    Outcome o;
    CheckOptions opt;
    opt.samples = 1000;
    opt.seed = 42;
    const auto r = run_suite("it", opt);
    expect_suite(o, r);
    const auto* p = r.find("(phi, psi) = (pd, pd) for finite pd");
    o.expect(p && p->checked >= 1000, "fewer than 1000 module samples");
    const auto two = validate(Kind::cyclic, {2, 2});
    const auto v = it_phi_psi(two, ModuleSum{{1, 1}, {2, 1}});
    o.expect(v.phi == 0 && v.psi == 0, "cyclic 2,2 with S_1 + S_2");
    return o;
}

}  // namespace

int main() {
    const std::vector<Criterion> criteria{
        {1, "n=3 elementary and absolutely elementary tables", 1.0, elementary_tables},
        {2, "cyclic 3,2,3,4,3: domdim, gldim, T_C, pd tau T_C, gldim B_C, drop", 60.0, gldim4_example},
        {3, "cyclic 3,2,2,3,3: 1-Auslander-Gorenstein, T_C = C_C", 1.0, one_ag_example},
        {4, "linear 1,2,2,2,2: gldim B_C = 3", 30.0, rad2_example},
        {5, "cyclic 2,2,3: 2-Auslander, T_C", 1.0, two_auslander_example},
        {6, "tilting criterion suite (grid n<=5 c<=7, 10^4 random)", 300.0, tilting_suite},
        {7, "Hom and Ext^1 against the matrix oracle (n<=4, c<=6)", 300.0, oracle_suite},
        {8, "structural suite on criterion-positive algebras", 300.0, structural_suite},
        {9, "endomorphism algebra suite", 600.0, endo_suite},
        {10, "Igusa-Todorov functions on 10^3 modules", 60.0, it_suite},
    };
    int failed = 0;
    for (const auto& c : criteria) {
        const auto start = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = c.run();
        } catch (const std::exception& e) {
            o.expect(false, std::string("exception: ") + e.what());
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        o.expect(secs < c.limit_seconds, "time limit " + std::to_string(c.limit_seconds) + " s exceeded");
        if (!o.ok) ++failed;
        std::ostringstream t;
        t << std::fixed << std::setprecision(3) << secs;
        std::cout << (o.ok ? "PASS" : "FAIL") << "  " << std::setw(2) << c.id << "  " << c.name << "  (" << t.str()
                  << " s)";
        if (!o.ok) std::cout << "  -- " << o.detail;
        std::cout << '\n';
    }
    std::cout << (criteria.size() - static_cast<std::size_t>(failed)) << "/" << criteria.size() << " criteria passed\n";
    return failed == 0 ? 0 : 1;
}
