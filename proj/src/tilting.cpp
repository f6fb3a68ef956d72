#include "nakayama/tilting.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

#include "nakayama/ensure.hpp"
#include "nakayama/hom_ext.hpp"

namespace nakayama {

QcPc qc_pc_sets(const AdmissibleSequence& alg) {
    QcPc s;
    const int n = alg.n();
    for (int i = 1; i <= n; ++i) {
        const int next = (!alg.is_cyclic() && i == n) ? 0 : alg.c(i + 1);
        const bool in_q = next <= alg.c(i);
        ensure(in_q == is_injective(alg, projective(alg, i)),
               "Q_c membership disagrees with injectivity of P_" + std::to_string(i));
        (in_q ? s.qc : s.pc).push_back(i);
    }
    return s;
}

bool in_C(const AdmissibleSequence& alg, const Uniserial& u) {
    return is_injective(alg, projective_cover(alg, u)) && is_projective(alg, injective_envelope(alg, u));
}

bool in_C(const AdmissibleSequence& alg, const ModuleSum& m) {
    return std::all_of(m.begin(), m.end(), [&](const Uniserial& u) { return in_C(alg, u); });
}

OmegaMap x_set_and_omega(const AdmissibleSequence& alg) {
    OmegaMap om;
    std::set<Uniserial> hit;
    for (const auto& u : indecomposables(alg)) {
        if (!in_C(alg, u) || pd(alg, u) != ExtendedNat(1)) continue;
        const Uniserial p = *syzygy(alg, u);
        ensure(is_projective(alg, p) && !is_injective(alg, p),
               "syzygy of " + to_string(u) + " is not projective non-injective");
        ensure(hit.insert(p).second, "Ω is not injective on X");
        om.x.push_back(u);
        om.images.push_back(p);
    }
    om.is_bijection = true;
    for (int i = 1; i <= alg.n(); ++i) {
        const Uniserial p = projective(alg, i);
        if (!is_injective(alg, p) && !hit.count(p)) om.is_bijection = false;
    }
    return om;
}

bool numerical_criterion(const AdmissibleSequence& alg) {
    const QcPc s = qc_pc_sets(alg);
    std::set<int> image;
    for (int j : s.qc) image.insert(alg.is_cyclic() ? alg.normalize(j - alg.c(j)) : j - alg.c(j));
    return std::all_of(s.pc.begin(), s.pc.end(), [&](int i) { return image.count(i) > 0; });
}

bool criterion(const AdmissibleSequence& alg) {
    const bool c = numerical_criterion(alg);
    ensure(c == (domdim(alg) >= ExtendedNat(2)), "criterion disagrees with domdim >= 2 for " + to_string(alg));
    ensure(c == x_set_and_omega(alg).is_bijection, "criterion disagrees with the Ω-bijection for " + to_string(alg));
    return c;
}

int delta(const AdmissibleSequence& alg, int i) {
    const int n = alg.n();
    for (int k = 1; k <= n; ++k) {
        const int t = i + k;
        if (!alg.is_cyclic() && t > n) break;
        if (is_injective(alg, projective(alg, alg.normalize(t)))) return k;
    }
    throw std::domain_error("delta(" + std::to_string(i) + ") undefined: no later vertex in Q_c");
}

std::optional<ModuleSum> build_TC(const AdmissibleSequence& alg) {
    if (!numerical_criterion(alg)) return std::nullopt;
    const QcPc s = qc_pc_sets(alg);
    ModuleSum t, via_cosyzygy;
    for (int j : s.qc) {
        t.add(projective(alg, j));
        via_cosyzygy.add(projective(alg, j));
    }
    for (int i : s.pc) {
        const int d = delta(alg, i);
        t.add({alg.normalize(i + d), d});
        const auto co = cosyzygy(alg, projective(alg, i));
        ensure(co.has_value(), "non-injective projective has zero cosyzygy");
        via_cosyzygy.add(*co);
    }
    ensure(t == via_cosyzygy, "delta formula and cosyzygy formula for T_C disagree on " + to_string(alg));
    ensure(t.size() == static_cast<std::size_t>(alg.n()), "T_C does not have n summands");
    return t;
}

std::optional<ModuleSum> build_CC(const AdmissibleSequence& alg) {
    if (!numerical_criterion(alg)) return std::nullopt;
    ModuleSum c = projective_injectives(alg);
    for (int j = 1; j <= alg.n(); ++j) {
        const Uniserial inj = injective(alg, j);
        if (is_projective(alg, inj)) continue;
        c.add(*syzygy(alg, inj));
    }
    ensure(c.size() == static_cast<std::size_t>(alg.n()), "C_C does not have n summands");
    return c;
}

namespace {

bool verify_summands(const AdmissibleSequence& alg, const ModuleSum& m, bool cotilting) {
    if (!m.is_basic()) throw std::invalid_argument("tilting verification needs a basic module, got " + to_string(m));
    for (const auto& u : m) require_valid(alg, u);
    if (m.size() != static_cast<std::size_t>(alg.n())) return false;
    for (const auto& u : m)
        if ((cotilting ? id(alg, u) : pd(alg, u)) > ExtendedNat(1)) return false;
    for (const auto& u : m)
        for (const auto& v : m)
            if (ext_dim(alg, u, v, 1) != 0) return false;
    return true;
}

}  // namespace

bool verify_tilting(const AdmissibleSequence& alg, const ModuleSum& m) { return verify_summands(alg, m, false); }

bool verify_cotilting(const AdmissibleSequence& alg, const ModuleSum& m) { return verify_summands(alg, m, true); }

ClassificationReport classify(const AdmissibleSequence& alg) {
    const GorensteinDims g = gorenstein_dim(alg);
    ClassificationReport r(alg);
    r.gldim = gldim(alg);
    r.domdim = domdim(alg);
    r.id_left = g.id_left;
    r.id_right = g.id_right;
    r.gdim = g.gdim;
    const ExtendedNat two = 2;

    r.selfinjective = true;
    for (int i = 1; i <= alg.n(); ++i)
        if (!is_injective(alg, projective(alg, i))) r.selfinjective = false;

    r.auslander = r.gldim <= two && two <= r.domdim;
    r.one_aus_gorenstein = r.id_left <= two && two <= r.domdim;
    r.dtr_selfinjective = r.id_left == two && r.domdim == two;

    if (r.domdim.is_infinite()) {
        if (r.gldim.is_finite()) r.m_auslander = ExtendedNat::infinity();
    } else if (r.domdim >= two && r.gldim <= r.domdim) {
        r.m_auslander = ExtendedNat(r.domdim.value() - 1);
    }

    r.tilting_exists = criterion(alg);
    r.t_c = build_TC(alg);
    r.c_c = build_CC(alg);
    r.tilting_cotilting = r.tilting_exists && verify_cotilting(alg, *r.t_c);

    ensure(r.tilting_exists == (r.domdim >= two), "tilting existence disagrees with domdim");
    ensure(r.tilting_cotilting == r.one_aus_gorenstein,
           "tilting-cotilting existence disagrees with 1-Auslander-Gorenstein for " + to_string(alg));
    ensure(!r.auslander || r.one_aus_gorenstein, "Auslander algebra that is not 1-Auslander-Gorenstein");
    return r;
}

ModuleSum tau_TC(const AdmissibleSequence& alg) {
    const auto t = build_TC(alg);
    if (!t) throw std::invalid_argument("T_C does not exist over " + to_string(alg));
    ModuleSum out;
    for (const auto& u : *t)
        if (!is_projective(alg, u)) out.add(tau(alg, u));
    return out;
}

ExtendedNat pd_tau_TC(const AdmissibleSequence& alg) {
    const auto p = pd(alg, tau_TC(alg));
    return p ? *p : ExtendedNat(0);
}

DropConditions drop_side_conditions(const AdmissibleSequence& alg) {
    const ExtendedNat gd = gldim(alg);
    if (gd.is_infinite()) throw std::invalid_argument("drop conditions need finite global dimension");
    if (!numerical_criterion(alg)) throw std::invalid_argument("drop conditions need T_C to exist");
    const int d = static_cast<int>(gd.value());
    if (d == 0) return {true, true, true, true};

    DropConditions dc;
    dc.pd_tau_below = pd_tau_TC(alg) < gd;
    dc.ext_vanishes = dc.tau_inv_generated = dc.nu_injective = true;
    const ModuleSum ttc = tau_TC(alg);
    for (const auto& s : simples(alg)) {
        if (id(alg, s) != gd) continue;
        for (const auto& u : ttc)
            if (ext_dim(alg, u, s, d) != 0) dc.ext_vanishes = false;
        const auto sigma = cosyzygy_power(alg, s, d - 1);
        ensure(sigma && !is_injective(alg, *sigma), "cosyzygy chain of a simple is shorter than its id");
        const Uniserial lifted = tau_inv(alg, *sigma);
        if (!is_injective(alg, projective_cover(alg, lifted))) dc.tau_inv_generated = false;
        const auto last = cosyzygy_power(alg, s, d);
        ensure(last && is_injective(alg, *last), "d-th cosyzygy of a simple with id d is not injective");
        if (!is_injective(alg, projective(alg, socle(alg, *last)))) dc.nu_injective = false;
    }
    ensure(dc.all_equal(), "drop side conditions disagree on " + to_string(alg));
    return dc;
}

K0Vector::K0Vector(const AdmissibleSequence& alg, const ModuleSum& m) {
    for (const auto& u : m) add(alg, u, 1);
}

void K0Vector::add(const AdmissibleSequence& alg, const Uniserial& u, long k) {
    if (k == 0 || is_projective(alg, u)) return;
    auto it = coeff_.find(u);
    if (it == coeff_.end()) {
        coeff_.emplace(u, k);
    } else if ((it->second += k) == 0) {
        coeff_.erase(it);
    }
}

K0Vector K0Vector::syzygy(const AdmissibleSequence& alg) const {
    K0Vector out;
    for (const auto& [u, k] : coeff_)
        if (const auto s = nakayama::syzygy(alg, u)) out.add(alg, *s, k);
    return out;
}

ITValues it_phi_psi(const AdmissibleSequence& alg, const ModuleSum& m) {
    if (m.is_zero()) throw std::invalid_argument("IT functions are defined for nonzero modules");

    // L^m<add M> is spanned by the distinct non-projective classes of Ω^m M.
    auto step = [&](const std::set<Uniserial>& s) {
        std::set<Uniserial> next;
        for (const auto& u : s)
            if (const auto w = syzygy(alg, u); w && !is_projective(alg, *w)) next.insert(*w);
        return next;
    };
    std::vector<std::set<Uniserial>> orbit;
    {
        std::set<Uniserial> s0;
        for (const auto& u : m)
            if (!is_projective(alg, u)) s0.insert(u);
        orbit.push_back(std::move(s0));
    }
    while (true) {
        auto next = step(orbit.back());
        if (std::find(orbit.begin(), orbit.end(), next) != orbit.end()) break;
        orbit.push_back(std::move(next));
    }
    const std::size_t final_rank = step(orbit.back()).size();
    std::size_t phi = orbit.size();
    while (phi > 0 && orbit[phi - 1].size() == final_rank) --phi;
    // the rank is non-increasing along the orbit, so everything from phi on is stable
    for (std::size_t i = phi; i < orbit.size(); ++i) ensure(orbit[i].size() == final_rank, "IT rank not stable");

    std::uint64_t sup = 0;
    for (const auto& u : m) {
        const auto w = syzygy_power(alg, u, static_cast<int>(phi));
        if (!w) continue;
        const auto p = pd(alg, *w);
        if (p.is_finite()) sup = std::max(sup, p.value());
    }
    return {phi, phi + sup};
}

}  // namespace nakayama
