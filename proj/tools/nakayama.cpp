#include <CLI11.hpp>
#include <json.hpp>

#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "nakayama/checks.hpp"
#include "nakayama/endo.hpp"
#include "nakayama/enumerate.hpp"
#include "nakayama/hom_ext.hpp"
#include "nakayama/oracle.hpp"
#include "nakayama/serialize.hpp"
#include "nakayama/tilting.hpp"

using namespace nakayama;
using json = nlohmann::ordered_json;

namespace {

struct AlgebraFlags {
    std::string cyclic;
    std::string linear;

    void attach(CLI::App* app) {
        auto* c = app->add_option("--cyclic", cyclic, "cyclic admissible sequence c1,...,cn");
        auto* l = app->add_option("--linear", linear, "linear admissible sequence c1,...,cn");
        c->excludes(l);
    }
    bool given() const { return !cyclic.empty() || !linear.empty(); }
    AdmissibleSequence get() const {
        if (!cyclic.empty()) return validate(Kind::cyclic, parse_lengths(cyclic));
        if (!linear.empty()) return validate(Kind::linear, parse_lengths(linear));
        throw std::invalid_argument("one of --cyclic or --linear is required");
    }
};

std::string dim_text(const ExtendedNat& d) { return d.to_string(); }
std::string opt_text(const std::optional<ExtendedNat>& d, const char* none) { return d ? d->to_string() : none; }
std::string opt_text(const std::optional<ModuleSum>& m) { return m ? to_string(*m) : "none"; }
const char* yes_no(bool b) { return b ? "yes" : "no"; }

void row(const std::string& key, const std::string& value) {
    std::cout << std::left << std::setw(22) << key << value << '\n';
}

std::string csv_row(const ClassificationReport& r) {
    std::ostringstream os;
    os << kind_name(r.algebra.kind()) << ',' << r.algebra.n() << ",\"" << lengths_to_string(r.algebra.lengths())
       << "\"," << r.gldim << ',' << r.domdim << ',' << opt_text(r.gdim, "not-Gorenstein") << ','
       << r.selfinjective << ',' << r.auslander << ',' << r.one_aus_gorenstein << ',' << r.tilting_exists;
    return os.str();
}

const char* csv_header = "kind,n,c,gldim,domdim,gdim,selfinjective,auslander,one_AG,tilting_exists";

void print_report(const ClassificationReport& r) {
    row("algebra", to_string(r.algebra));
    row("gldim", dim_text(r.gldim));
    row("domdim", dim_text(r.domdim));
    row("id left", dim_text(r.id_left));
    row("id right", dim_text(r.id_right));
    row("Gorenstein dim", opt_text(r.gdim, "not-Gorenstein"));
    row("selfinjective", yes_no(r.selfinjective));
    row("Auslander", yes_no(r.auslander));
    row("m-Auslander", opt_text(r.m_auslander, "none"));
    row("1-Aus-Gorenstein", yes_no(r.one_aus_gorenstein));
    row("DTr-selfinjective", yes_no(r.dtr_selfinjective));
    row("tilting exists", yes_no(r.tilting_exists));
    row("T_C", opt_text(r.t_c));
    row("C_C", opt_text(r.c_c));
    row("tilting-cotilting", yes_no(r.tilting_cotilting));
}

std::string join(const std::vector<int>& v) {
    std::string s;
    for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
    return s;
}

int run_tilting(const AdmissibleSequence& alg, const std::string& it_module, bool as_json) {
    const QcPc s = qc_pc_sets(alg);
    const OmegaMap om = x_set_and_omega(alg);
    const bool crit = criterion(alg);
    const auto tc = build_TC(alg);
    const auto cc = build_CC(alg);
    json j;
    j["algebra"] = to_string(alg);
    j["q_c"] = s.qc;
    j["p_c"] = s.pc;
    j["x"] = module_json(ModuleSum(om.x));
    j["omega_images"] = module_json(ModuleSum(om.images));
    j["omega_bijection"] = om.is_bijection;
    j["criterion"] = crit;
    j["t_c"] = tc ? module_json(*tc) : json(nullptr);
    j["c_c"] = cc ? module_json(*cc) : json(nullptr);
    if (tc) {
        json deltas = json::object();
        for (int i : s.pc) deltas[std::to_string(i)] = delta(alg, i);
        j["delta"] = deltas;
        j["t_c_tilting"] = verify_tilting(alg, *tc);
        j["t_c_cotilting"] = verify_cotilting(alg, *tc);
        j["c_c_cotilting"] = verify_cotilting(alg, *cc);
        j["tau_t_c"] = module_json(tau_TC(alg));
        j["pd_tau_t_c"] = dimension_json(pd_tau_TC(alg));
        if (gldim(alg).is_finite()) {
            const DropConditions d = drop_side_conditions(alg);
            j["drop_conditions"] = {{"pd_tau_below", d.pd_tau_below},
                                    {"ext_vanishes", d.ext_vanishes},
                                    {"tau_inv_generated", d.tau_inv_generated},
                                    {"nu_injective", d.nu_injective}};
        }
    }
    if (!it_module.empty()) {
        const ITValues v = it_phi_psi(alg, parse_module_sum(it_module));
        j["it"] = {{"module", it_module}, {"phi", v.phi}, {"psi", v.psi}};
    }
    if (as_json) {
        std::cout << j.dump(2) << '\n';
        return 0;
    }
    row("algebra", to_string(alg));
    row("Q_c", join(s.qc));
    row("P_c", join(s.pc));
    row("X (pd 1 in C)", to_string(ModuleSum(om.x)));
    row("Omega(X)", to_string(ModuleSum(om.images)));
    row("Omega bijective", yes_no(om.is_bijection));
    row("criterion", yes_no(crit));
    row("T_C", opt_text(tc));
    row("C_C", opt_text(cc));
    if (tc) {
        row("T_C tilting", yes_no(j["t_c_tilting"]));
        row("T_C cotilting", yes_no(j["t_c_cotilting"]));
        row("C_C cotilting", yes_no(j["c_c_cotilting"]));
        row("tau T_C", to_string(tau_TC(alg)));
        row("pd tau T_C", dim_text(pd_tau_TC(alg)));
        if (j.contains("drop_conditions")) {
            std::string conds;
            for (const auto& [k, v] : j["drop_conditions"].items()) conds += k + "=" + (v.get<bool>() ? "1 " : "0 ");
            row("drop conditions", conds);
        }
    }
    if (j.contains("it")) row("phi, psi", std::to_string(j["it"]["phi"].get<std::uint64_t>()) + ", " +
                                                std::to_string(j["it"]["psi"].get<std::uint64_t>()));
    return 0;
}

bool is_gen_cogen(const AdmissibleSequence& alg, const ModuleSum& x) {
    if (!x.is_basic()) return false;
    for (int i = 1; i <= alg.n(); ++i)
        if (!x.contains(projective(alg, i)) || !x.contains(injective(alg, i))) return false;
    return true;
}

int run_endo(const AdmissibleSequence& alg, const std::string& module_text, const std::string& resolve_text,
             std::uint64_t cap, bool dump, bool as_json) {
    ModuleSum x;
    if (module_text.empty()) {
        const auto tc = build_TC(alg);
        if (!tc) throw std::invalid_argument("T_C does not exist over " + to_string(alg) + "; pass --module");
        x = *tc;
    } else {
        x = parse_module_sum(module_text);
    }
    const auto b = end_algebra(alg, x);
    const auto rs = radical_and_simples(b);
    json j;
    j["algebra"] = to_string(alg);
    j["module"] = to_string(x);
    j["dim"] = b.dim();
    j["radical_dim"] = rs.radical.size();
    j["gldim"] = dimension_json(gldim_over(b, cap));
    const auto seq = recognize_nakayama(b);
    j["nakayama"] = seq ? json(to_string(*seq)) : json(nullptr);
    if (is_gen_cogen(alg, x)) j["domdim"] = dimension_json(mueller_domdim(alg, x));
    if (module_text.empty() && gldim(alg).is_finite()) {
        const DropCheck d = drop_check(alg, cap);
        j["drop"] = {{"gldim_lambda", dimension_json(d.gldim_lambda)},
                     {"gldim_bc", dimension_json(d.gldim_bc)},
                     {"pd_tau_tc", dimension_json(d.pd_tau_tc)},
                     {"holds", d.theorem_holds ? json(*d.theorem_holds) : json(nullptr)}};
    }
    if (!resolve_text.empty()) {
        const ModuleSum m = parse_module_sum(resolve_text);
        j["resolution"] = to_json(resolve(b, hom_module(alg, x, m), cap));
        j["resolution"]["module"] = to_string(m);
    }
    if (dump) j["structure"] = to_json(b);
    if (as_json) {
        std::cout << j.dump(2) << '\n';
        return 0;
    }
    row("algebra", j["algebra"]);
    row("X", j["module"]);
    row("dim End(X)^op", std::to_string(b.dim()));
    row("radical dim", std::to_string(rs.radical.size()));
    row("gldim", j["gldim"].is_string() ? j["gldim"].get<std::string>() : j["gldim"].dump());
    row("Nakayama", seq ? to_string(*seq) : "no");
    if (j.contains("domdim")) row("domdim", j["domdim"].is_string() ? "inf" : j["domdim"].dump());
    if (j.contains("drop")) {
        const auto& d = j["drop"];
        row("pd tau T_C", d["pd_tau_tc"].dump());
        row("drop theorem holds", d["holds"].is_null() ? "undetermined (cap)" : yes_no(d["holds"].get<bool>()));
    }
    if (j.contains("resolution")) {
        const auto& r = j["resolution"];
        row("syzygy dims", r["syzygy_dims"].dump());
        row("pd", r["pd"].is_string() ? r["pd"].get<std::string>() : r["pd"].dump());
    }
    if (dump) std::cout << j["structure"].dump() << '\n';
    return 0;
}

int print_suite(const SuiteReport& r, bool as_json) {
    if (as_json) {
        json props = json::array();
        for (const auto& p : r.properties)
            props.push_back({{"name", p.name},
                             {"checked", p.checked},
                             {"failures", p.failures},
                             {"first_counterexample", p.failures ? json(p.first_counterexample) : json(nullptr)}});
        std::cout << json{{"suite", r.suite}, {"passed", r.passed()}, {"properties", props}}.dump(2) << '\n';
    } else {
        for (const auto& p : r.properties) {
            std::cout << (p.failures ? "FAIL " : "ok   ") << std::left << std::setw(58) << p.name << ' ' << p.checked
                      << " checked, " << p.failures << " failed\n";
            if (p.failures) std::cout << "     first counterexample: " << p.first_counterexample << '\n';
        }
        std::cout << "suite " << r.suite << ": " << (r.passed() ? "PASS" : "FAIL") << '\n';
    }
    return r.passed() ? 0 : 1;
}

int run_oracle_single(const AdmissibleSequence& alg, bool as_json) {
    int pairs = 0;
    json mismatches = json::array();
    const auto ind = indecomposables(alg);
    for (const auto& u : ind)
        for (const auto& v : ind) {
            ++pairs;
            const int h = hom_dim(alg, u, v), ho = oracle_hom_dim(alg, u, v);
            const int e = ext_dim(alg, u, v, 1), eo = oracle_ext1_dim(alg, u, v);
            if (h != ho || e != eo)
                mismatches.push_back({{"u", to_string(u)}, {"v", to_string(v)}, {"hom", h}, {"oracle_hom", ho},
                                      {"ext1", e}, {"oracle_ext1", eo}});
        }
    if (as_json) {
        std::cout << json{{"algebra", to_string(alg)}, {"pairs", pairs}, {"mismatches", mismatches}}.dump(2) << '\n';
    } else {
        row("algebra", to_string(alg));
        row("pairs compared", std::to_string(pairs));
        row("mismatches", std::to_string(mismatches.size()));
        for (const auto& m : mismatches) std::cout << "  " << m.dump() << '\n';
    }
    return mismatches.empty() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Homological invariants, tilting modules and endomorphism algebras of Nakayama algebras"};
    app.require_subcommand(1);
    bool as_json = false, as_csv = false;

    AlgebraFlags cls_alg;
    auto* cls = app.add_subcommand("classify", "classification report of one algebra");
    cls_alg.attach(cls);
    cls->add_flag("--json", as_json, "JSON output");
    cls->add_flag("--csv", as_csv, "one CSV row with header");

    AlgebraFlags til_alg;
    std::string it_module;
    auto* til = app.add_subcommand("tilting", "Q_c, the Omega map, T_C, C_C and the drop conditions");
    til_alg.attach(til);
    til->add_flag("--json", as_json, "JSON output");
    til->add_option("--it", it_module, "also compute the IT functions of this module, e.g. M(2,1)+M(3,1)");

    AlgebraFlags endo_alg;
    std::string endo_module, endo_resolve;
    std::uint64_t cap = 30;
    bool dump = false;
    auto* endo = app.add_subcommand("endo", "the endomorphism algebra End(X)^op (X defaults to T_C)");
    endo_alg.attach(endo);
    endo->add_option("--module", endo_module, "basic module X, e.g. M(1,1)+M(2,2)+M(2,1)");
    endo->add_option("--resolve", endo_resolve, "resolve Hom(X, M) for this module M");
    endo->add_option("--cap", cap, "resolution length cap")->check(CLI::PositiveNumber);
    endo->add_flag("--dump", dump, "include the structure constants");
    endo->add_flag("--json", as_json, "JSON output");

    SweepSpec spec;
    std::string kind = "cyclic";
    std::vector<std::string> filters;
    auto* en = app.add_subcommand("enumerate", "sweep over admissible sequences");
    en->add_option("--kind", kind, "cyclic or linear")->check(CLI::IsMember({"cyclic", "linear"}));
    en->add_option("--n", spec.n, "number of vertices")->required()->check(CLI::PositiveNumber);
    en->add_option("--max-c", spec.max_c, "largest c_i (default 2n)");
    en->add_option("--filter", filters, "report predicate, e.g. domdim>=2 or !selfinjective (repeatable)");
    en->add_flag("--up-to-rotation", spec.up_to_rotation, "keep the lexicographically minimal rotation");
    en->add_flag("--up-to-difference-class", spec.up_to_difference_class, "identify c with c - n");
    en->add_flag("--elementary", spec.elementary, "min c_i <= n + 1");
    en->add_flag("--absolutely-elementary", spec.absolutely_elementary, "min c_i = 2");
    en->add_option("--row-cap", spec.row_cap, "stop after this many rows");
    en->add_option("--threads", spec.threads, "worker threads (0: all cores)");
    en->add_flag("--json", as_json, "JSON output");
    en->add_flag("--csv", as_csv, "CSV output");

    CheckOptions opt;
    std::string suite;
    auto* chk = app.add_subcommand("check", "run a property suite");
    chk->add_option("--suite", suite, "tilting, structural, oracle, drop, endo or it")->required();
    chk->add_option("--samples", opt.samples, "random samples");
    chk->add_option("--seed", opt.seed, "random seed");
    chk->add_option("--n-max", opt.n_max, "largest n");
    chk->add_option("--c-max", opt.c_max, "largest c_i");
    chk->add_option("--grid-n", opt.grid_n, "also run the exhaustive grid up to this n");
    chk->add_option("--grid-c", opt.grid_c, "largest c_i on the grid");
    chk->add_option("--cap", opt.cap, "resolution length cap")->check(CLI::PositiveNumber);
    chk->add_option("--threads", opt.threads, "worker threads (0: all cores)");
    chk->add_flag("--json", as_json, "JSON output");

    AlgebraFlags or_alg;
    CheckOptions or_opt;
    or_opt.n_max = 4;
    or_opt.c_max = 6;
    auto* orc = app.add_subcommand("oracle", "compare Hom and Ext^1 with the matrix-representation oracle");
    or_alg.attach(orc);
    orc->add_option("--n-max", or_opt.n_max, "exhaustive bound on n when no algebra is given");
    orc->add_option("--c-max", or_opt.c_max, "exhaustive bound on c_i when no algebra is given");
    orc->add_option("--threads", or_opt.threads, "worker threads (0: all cores)");
    orc->add_flag("--json", as_json, "JSON output");

    CLI11_PARSE(app, argc, argv);

    try {
        if (*cls) {
            const ClassificationReport r = classify(cls_alg.get());
            if (as_json)
                std::cout << to_json(r).dump(2) << '\n';
            else if (as_csv)
                std::cout << csv_header << '\n' << csv_row(r) << '\n';
            else
                print_report(r);
            return 0;
        }
        if (*til) return run_tilting(til_alg.get(), it_module, as_json);
        if (*endo) return run_endo(endo_alg.get(), endo_module, endo_resolve, cap, dump, as_json);
        if (*en) {
            spec.kind = kind == "linear" ? Kind::linear : Kind::cyclic;
            for (const auto& f : filters) spec.filters.push_back(ReportFilter::parse(f));
            const SweepResult res = run_sweep(spec);
            if (as_json) {
                json rows = json::array();
                for (const auto& r : res.rows) rows.push_back(to_json(r));
                std::cout << json{{"rows", rows}, {"truncated", res.truncated}, {"generated", res.generated}}.dump(2)
                          << '\n';
            } else if (as_csv) {
                std::cout << csv_header << '\n';
                for (const auto& r : res.rows) std::cout << csv_row(r) << '\n';
                if (res.truncated) std::cout << "# truncated at " << spec.row_cap << " rows\n";
            } else {
                for (const auto& r : res.rows)
                    std::cout << std::left << std::setw(28) << to_string(r.algebra) << " gldim " << std::setw(4)
                              << r.gldim << " domdim " << std::setw(4) << r.domdim << " gdim "
                              << opt_text(r.gdim, "-") << '\n';
                if (res.truncated) std::cout << "... truncated at " << spec.row_cap << " rows\n";
                std::cout << res.rows.size() << " rows\n";
            }
            return 0;
        }
        if (*chk) return print_suite(run_suite(suite, opt), as_json);
        if (*orc) {
            if (or_alg.given()) return run_oracle_single(or_alg.get(), as_json);
            return print_suite(run_suite("oracle", or_opt), as_json);
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
    return 0;
}
