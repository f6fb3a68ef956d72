#include "nakayama/checks.hpp"

#include <algorithm>
#include <random>
#include <set>
#include <stdexcept>

#include "nakayama/endo.hpp"
#include "nakayama/enumerate.hpp"
#include "nakayama/hom_ext.hpp"
#include "nakayama/oracle.hpp"
#include "nakayama/tilting.hpp"

namespace nakayama {

PropertyResult& Tally::slot(const std::string& name) {
    for (auto& r : results_)
        if (r.name == name) return r;
    results_.push_back({name, 0, 0, {}});
    return results_.back();
}

void Tally::check(const std::string& name, bool ok, const std::function<std::string()>& describe) {
    PropertyResult& r = slot(name);
    ++r.checked;
    if (!ok && r.failures++ == 0) r.first_counterexample = describe();
}

void Tally::note(const std::string& name) { slot(name); }

void Tally::merge(const Tally& other) {
    for (const auto& o : other.results_) {
        PropertyResult& r = slot(o.name);
        if (r.failures == 0 && o.failures > 0) r.first_counterexample = o.first_counterexample;
        r.checked += o.checked;
        r.failures += o.failures;
    }
}

bool SuiteReport::passed() const {
    return std::all_of(properties.begin(), properties.end(), [](const PropertyResult& p) { return p.failures == 0; });
}

const PropertyResult* SuiteReport::find(const std::string& name) const {
    for (const auto& p : properties)
        if (p.name == name) return &p;
    return nullptr;
}

const std::vector<std::string>& suite_names() {
    static const std::vector<std::string> names{"tilting", "structural", "oracle", "drop", "endo", "it"};
    return names;
}

namespace {

using Accept = std::function<bool(const AdmissibleSequence&)>;

std::vector<AdmissibleSequence> grid(int n_max, int c_max, const Accept& accept) {
    std::vector<AdmissibleSequence> out;
    for (Kind kind : {Kind::cyclic, Kind::linear})
        for (int n = 1; n <= n_max; ++n)
            for (auto& a : all_admissible(kind, n, c_max))
                if (!accept || accept(a)) out.push_back(std::move(a));
    return out;
}

std::vector<AdmissibleSequence> random_algebras(const CheckOptions& opt, std::mt19937_64& rng, const Accept& accept,
                                                int n_min = 1) {
    if (opt.n_max < n_min) throw std::invalid_argument("n_max too small for this suite");
    if (opt.c_max < 2) throw std::invalid_argument("c_max must be at least 2");
    std::vector<AdmissibleSequence> out;
    const std::size_t limit = 1000 * (opt.samples + 1);
    for (std::size_t attempt = 0; out.size() < opt.samples; ++attempt) {
        if (attempt == limit) throw std::runtime_error("could not draw enough algebras satisfying the precondition");
        const Kind kind = rng() % 2 == 0 ? Kind::cyclic : Kind::linear;
        const int n = std::uniform_int_distribution<int>(n_min, opt.n_max)(rng);
        auto a = random_sequence(kind, n, opt.c_max, rng);
        if (!accept || accept(a)) out.push_back(std::move(a));
    }
    return out;
}

std::vector<AdmissibleSequence> sample_set(const CheckOptions& opt, const Accept& accept, int n_min = 1) {
    std::vector<AdmissibleSequence> out;
    if (opt.grid_n > 0) out = grid(opt.grid_n, opt.grid_c, accept);
    std::mt19937_64 rng(opt.seed);
    for (auto& a : random_algebras(opt, rng, accept, n_min)) out.push_back(std::move(a));
    return out;
}

// Runs f on every algebra in parallel and merges the tallies in input order.
SuiteReport evaluate(const std::string& suite, const std::vector<AdmissibleSequence>& algs, unsigned threads,
                     const std::function<void(const AdmissibleSequence&, std::size_t, Tally&)>& f,
                     Tally all = {}) {
    std::vector<Tally> parts(algs.size());
    parallel_for(algs.size(), threads, [&](std::size_t i) {
        try {
            f(algs[i], i, parts[i]);
            parts[i].check("evaluation completes", true, {});
        } catch (const std::exception& e) {
            const std::string msg = to_string(algs[i]) + ": " + e.what();
            parts[i].check("evaluation completes", false, [&] { return msg; });
        }
    });
    for (const auto& p : parts) all.merge(p);
    return {suite, all.results()};
}

std::string where(const AdmissibleSequence& alg) { return to_string(alg); }
std::string where(const AdmissibleSequence& alg, const Uniserial& u) { return to_string(alg) + " at " + to_string(u); }

ModuleSum q_plus_x(const AdmissibleSequence& alg, const OmegaMap& om) {
    ModuleSum m = projective_injectives(alg);
    for (const auto& u : om.x) m.add(u);
    return m;
}

bool one_ag(const AdmissibleSequence& alg) {
    return gorenstein_dim(alg).id_left <= ExtendedNat(2) && ExtendedNat(2) <= domdim(alg);
}

bool tilting_cotilting_exists(const AdmissibleSequence& alg) {
    const auto t = build_TC(alg);
    const auto c = build_CC(alg);
    return t && c && *t == *c && verify_tilting(alg, *t) && verify_cotilting(alg, *t);
}

// ---------------------------------------------------------------- tilting

void tilting_properties(const AdmissibleSequence& alg, Tally& t) {
    const auto w = [&] { return where(alg); };
    const bool crit = numerical_criterion(alg);
    const ExtendedNat dd = domdim(alg);
    const OmegaMap om = x_set_and_omega(alg);
    const auto tc = build_TC(alg);
    const auto cc = build_CC(alg);

    t.check("criterion <=> domdim >= 2", crit == (dd >= ExtendedNat(2)), w);
    t.check("criterion <=> Omega bijection", crit == om.is_bijection, w);
    t.check("criterion <=> T_C tilting in C", crit == (tc && verify_tilting(alg, *tc) && in_C(alg, *tc)), w);
    t.check("criterion <=> C_C cotilting in C", crit == (cc && verify_cotilting(alg, *cc) && in_C(alg, *cc)), w);

    const ModuleSum qx = q_plus_x(alg, om);
    t.check("|Q~| + |X| <= n", qx.size() <= static_cast<std::size_t>(alg.n()), w);
    if (crit) {
        t.check("T_C = Q~ + X", *tc == qx, w);
        bool covers = true;
        for (const auto& u : *tc) covers = covers && is_injective(alg, projective_cover(alg, u));
        t.check("T_C summands have projective-injective covers", covers, w);
    } else {
        // any tilting module in C would have to be Q~ + X
        t.check("no tilting module in C without the criterion",
                !(qx.size() == static_cast<std::size_t>(alg.n()) && verify_tilting(alg, qx)), w);
    }

    const bool ag = one_ag(alg);
    t.check("tilting-cotilting <=> 1-Auslander-Gorenstein", tilting_cotilting_exists(alg) == ag, w);
    const ExtendedNat gd = gldim(alg);
    t.check("1-AG with finite gldim <=> Auslander",
            (ag && gd.is_finite()) == (gd <= ExtendedNat(2) && ExtendedNat(2) <= dd), w);
}

// ---------------------------------------------------------------- structural

void structural_properties(const AdmissibleSequence& alg, Tally& t) {
    const auto w = [&] { return where(alg); };
    const ExtendedNat gd = gldim(alg);
    const auto ind = indecomposables(alg);
    std::vector<Uniserial> in_c, pd_one;
    for (const auto& u : ind) {
        if (in_C(alg, u)) in_c.push_back(u);
        if (pd(alg, u) == ExtendedNat(1)) pd_one.push_back(u);
    }

    if (gd.is_finite() && gd.value() >= 1)
        for (const auto& u : in_c)
            t.check("pd and id on C are at most gldim - 1",
                    pd(alg, u) + 1 <= gd && id(alg, u) + 1 <= gd, [&] { return where(alg, u); });

    for (const auto& y : pd_one)
        for (const auto& x : in_c)
            t.check("Ext^1(Y, C) = 0 for pd Y = 1", ext_dim(alg, y, x, 1) == 0,
                    [&] { return where(alg, y) + " against " + to_string(x); });

    for (const auto& u : in_c) {
        const auto uw = [&] { return where(alg, u); };
        if (is_projective(alg, u)) t.check("projectives in C are injective", is_injective(alg, u), uw);
        if (is_injective(alg, u)) t.check("injectives in C are projective", is_projective(alg, u), uw);
        const Uniserial p = projective_cover(alg, u), i = injective_envelope(alg, u);
        t.check("cover and envelope of C lie in C",
                is_injective(alg, p) && is_projective(alg, i) && in_C(alg, p) && in_C(alg, i), uw);
    }

    t.check("domdim agrees with the opposite algebra", domdim(alg) == domdim(opposite(alg).sequence), w);

    if (gd.is_finite()) {
        const auto g = gorenstein_dim(alg);
        bool attained = false;
        for (int i = 1; i <= alg.n(); ++i) attained = attained || id(alg, projective(alg, i)) == gd;
        t.check("finite gldim d gives Gorenstein dimension d", g.gdim == gd && attained, w);
    }
    t.check("|Q~| + |X| <= n", q_plus_x(alg, x_set_and_omega(alg)).size() <= static_cast<std::size_t>(alg.n()), w);
    t.check("tilting-cotilting <=> 1-Auslander-Gorenstein", tilting_cotilting_exists(alg) == one_ag(alg), w);
}

// ---------------------------------------------------------------- oracle

void oracle_properties(const AdmissibleSequence& alg, Tally& t) {
    const auto ind = indecomposables(alg);
    for (const auto& u : ind)
        for (const auto& v : ind) {
            const auto w = [&] { return where(alg, u) + " -> " + to_string(v); };
            t.check("hom_dim matches the matrix oracle", hom_dim(alg, u, v) == oracle_hom_dim(alg, u, v), w);
            t.check("ext_dim(-,-,1) matches the matrix oracle", ext_dim(alg, u, v, 1) == oracle_ext1_dim(alg, u, v), w);
        }
}

// ---------------------------------------------------------------- drop

void drop_properties(const AdmissibleSequence& alg, std::uint64_t cap, Tally& t) {
    const auto w = [&] { return where(alg); };
    const DropCheck d = drop_check(alg, cap);
    t.check("gldim B_C computed within the cap", !d.gldim_bc.exceeded, w);
    if (d.gldim_bc.exceeded) return;
    const ExtendedNat gb = d.gldim_bc.value;
    t.check("gldim - 1 <= gldim B_C <= gldim", gb <= d.gldim_lambda && d.gldim_lambda <= gb + 1, w);
    t.check("gldim B_C < gldim <=> pd tau T_C < gldim", d.theorem_holds == true, w);
    if (d.gldim_lambda > ExtendedNat(0))
        t.check("side conditions agree with the drop",
                drop_side_conditions(alg).pd_tau_below == (gb < d.gldim_lambda), w);
}

// ---------------------------------------------------------------- endo

ModuleSum gen_cogen(const AdmissibleSequence& alg) {
    ModuleSum m = regular_module(alg);
    for (const auto& u : dual_regular_module(alg)) m.add(u);
    return m.basic_part();
}

void endo_fixed(Tally& t) {
    const auto a2 = validate(Kind::linear, {1, 2});
    const auto b = end_algebra(a2, gen_cogen(a2));
    t.check("End(A_2 + D A_2) has dimension 5 and gldim 2",
            b.dim() == 5 && gldim_over(b) == BoundedDim{false, 2, 30} &&
                radical_and_simples(b).radical.size() == 2,
            [] { return std::string("linear:1,2"); });

    // every generator-cogenerator over a hereditary linear Nakayama algebra
    for (int n = 2; n <= 5; ++n) {
        std::vector<int> c(static_cast<std::size_t>(n));
        for (int i = 0; i < n; ++i) c[static_cast<std::size_t>(i)] = i + 1;
        const auto alg = validate(Kind::linear, c);
        const ModuleSum base = gen_cogen(alg);
        std::vector<Uniserial> rest;
        for (const auto& u : indecomposables(alg))
            if (!base.contains(u)) rest.push_back(u);
        for (std::size_t mask = 0; mask < (std::size_t{1} << rest.size()); ++mask) {
            ModuleSum x = base;
            for (std::size_t k = 0; k < rest.size(); ++k)
                if (mask >> k & 1) x.add(rest[k]);
            t.check("domdim End(X)^op = 2 over hereditary algebras", mueller_domdim(alg, x) == ExtendedNat(2),
                    [&] { return to_string(alg) + " with X = " + to_string(x); });
        }
    }
}

void endo_properties(const AdmissibleSequence& alg, std::uint64_t seed, std::uint64_t cap, Tally& t) {
    const auto w = [&] { return where(alg); };
    std::mt19937_64 rng(seed);
    const ModuleSum x = gen_cogen(alg);
    const ExtendedNat md = mueller_domdim(alg, x);
    t.check("domdim End(X)^op >= 2", md >= ExtendedNat(2), w);

    std::vector<Uniserial> rest;
    for (const auto& u : indecomposables(alg))
        if (!x.contains(u)) rest.push_back(u);
    if (!rest.empty()) {
        ModuleSum y = x;
        y.add(rest[std::uniform_int_distribution<std::size_t>(0, rest.size() - 1)(rng)]);
        t.check("domdim End(X)^op is antitone in X", mueller_domdim(alg, y) <= md,
                [&] { return to_string(alg) + " with Y = " + to_string(y); });
    }

    bool selfinjective = true;
    for (int i = 1; i <= alg.n(); ++i) selfinjective = selfinjective && is_injective(alg, projective(alg, i));
    if (!selfinjective) {
        const auto g = gorenstein_dim(alg);
        const ExtendedNat m = std::min(g.id_left, g.id_right);
        t.check("domdim End(X)^op <= id + 1 for non-selfinjective algebras", md <= m + 1, w);
    }

    const auto gamma = end_algebra(alg, x);
    if (const auto seq = recognize_nakayama(gamma)) {
        t.check("Ext vanishing agrees with domdim of End(X)^op", md == domdim(*seq), w);
        t.check("T_C of End(X)^op read off from X", xt_dimension_check(alg, x).matches, w);
    }

    if (!numerical_criterion(alg)) return;
    const ModuleSum tc = *build_TC(alg);
    const ModuleSum q = projective_injectives(alg);
    const auto b = end_algebra(alg, tc);
    t.check("End_B(R) has the dimension of End(Q~)",
            module_endomorphisms(b, hom_module(alg, tc, q)) == hom_dim(alg, q, q), w);

    std::vector<Uniserial> eligible;
    for (const auto& u : indecomposables(alg)) {
        const ExtendedNat p = pd(alg, u);
        if (is_injective(alg, projective_cover(alg, u)) && p.is_finite() && p >= ExtendedNat(1)) eligible.push_back(u);
    }
    if (!eligible.empty()) {
        const Uniserial m = eligible[std::uniform_int_distribution<std::size_t>(0, eligible.size() - 1)(rng)];
        t.check("pd over B_C drops by one", projdim_key_check(alg, m, cap).holds, [&] { return where(alg, m); });
    }
}

// ---------------------------------------------------------------- it

void it_fixed(Tally& t) {
    const auto two = validate(Kind::cyclic, {2, 2});
    const auto v = it_phi_psi(two, ModuleSum{{1, 1}, {2, 1}});
    t.check("(phi, psi) = (0, 0) for S_1 + S_2 over cyclic:2,2", v.phi == 0 && v.psi == 0,
            [] { return std::string("cyclic:2,2"); });
}

void it_properties(const AdmissibleSequence& alg, std::uint64_t seed, Tally& t) {
    std::mt19937_64 rng(seed);
    std::vector<Uniserial> finite;
    for (const auto& u : indecomposables(alg))
        if (pd(alg, u).is_finite()) finite.push_back(u);
    if (finite.empty()) return;
    ModuleSum m;
    const int k = std::uniform_int_distribution<int>(1, 4)(rng);
    for (int i = 0; i < k; ++i) m.add(finite[std::uniform_int_distribution<std::size_t>(0, finite.size() - 1)(rng)]);
    const ExtendedNat p = *pd(alg, m);
    const ITValues v = it_phi_psi(alg, m);
    t.check("(phi, psi) = (pd, pd) for finite pd", ExtendedNat(v.phi) == p && ExtendedNat(v.psi) == p,
            [&] { return to_string(alg) + " with M = " + to_string(m); });

    ModuleSum proj;
    proj.add(projective(alg, std::uniform_int_distribution<int>(1, alg.n())(rng)));
    const ITValues z = it_phi_psi(alg, proj);
    t.check("(phi, psi) = (0, 0) for projectives", z.phi == 0 && z.psi == 0, [&] { return where(alg); });
}

}  // namespace

SuiteReport run_suite(const std::string& name, const CheckOptions& opt) {
    if (name == "tilting")
        return evaluate(name, sample_set(opt, {}), opt.threads,
                        [](const AdmissibleSequence& a, std::size_t, Tally& t) { tilting_properties(a, t); });
    if (name == "structural")
        return evaluate(name, sample_set(opt, numerical_criterion), opt.threads,
                        [](const AdmissibleSequence& a, std::size_t, Tally& t) { structural_properties(a, t); });
    if (name == "oracle")
        return evaluate(name, grid(opt.n_max, opt.c_max, {}), opt.threads,
                        [](const AdmissibleSequence& a, std::size_t, Tally& t) { oracle_properties(a, t); });
    if (name == "drop") {
        const Accept ok = [](const AdmissibleSequence& a) { return numerical_criterion(a) && gldim(a).is_finite(); };
        return evaluate(name, sample_set(opt, ok), opt.threads,
                        [&](const AdmissibleSequence& a, std::size_t, Tally& t) { drop_properties(a, opt.cap, t); });
    }
    if (name == "endo") {
        Tally fixed;
        endo_fixed(fixed);
        const Accept ok = [](const AdmissibleSequence& a) { return a.dimension() > a.n(); };  // not semisimple
        return evaluate(
            name, sample_set(opt, ok, 2), opt.threads,
            [&](const AdmissibleSequence& a, std::size_t i, Tally& t) { endo_properties(a, opt.seed + i, opt.cap, t); },
            std::move(fixed));
    }
    if (name == "it") {
        Tally fixed;
        it_fixed(fixed);
        return evaluate(
            name, sample_set(opt, {}), opt.threads,
            [&](const AdmissibleSequence& a, std::size_t i, Tally& t) { it_properties(a, opt.seed + i, t); },
            std::move(fixed));
    }
    throw std::invalid_argument("unknown suite '" + name + "'");
}

}  // namespace nakayama
