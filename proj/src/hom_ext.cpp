#include "nakayama/hom_ext.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

#include "nakayama/ensure.hpp"

namespace nakayama {

namespace {

// Image lengths k admitted by the congruence k ≡ top(u) - top(v) + l_v.
std::vector<int> admissible_image_lengths(const AdmissibleSequence& alg, const Uniserial& u, const Uniserial& v) {
    std::vector<int> ks;
    const int bound = std::min(u.len, v.len);
    const int base = u.top - v.top + v.len;
    if (alg.is_cyclic()) {
        const int n = alg.n();
        int k = ((base - 1) % n + n) % n + 1;
        for (; k <= bound; k += n) ks.push_back(k);
    } else if (base >= 1 && base <= bound) {
        ks.push_back(base);
    }
    return ks;
}

}  // namespace

int hom_dim(const AdmissibleSequence& alg, const Uniserial& u, const Uniserial& v) {
    return static_cast<int>(admissible_image_lengths(alg, u, v).size());
}

int hom_dim(const AdmissibleSequence& alg, const ModuleSum& u, const ModuleSum& v) {
    int total = 0;
    for (const auto& a : u)
        for (const auto& b : v) total += hom_dim(alg, a, b);
    return total;
}

std::vector<HomMap> hom_basis(const AdmissibleSequence& alg, const Uniserial& u, const Uniserial& v) {
    std::vector<HomMap> out;
    for (int k : admissible_image_lengths(alg, u, v)) out.push_back({u, v, k});
    return out;
}

HomMap identity_map(const Uniserial& u) { return {u, u, u.len}; }

std::optional<HomMap> compose(const AdmissibleSequence&, const HomMap& f, const HomMap& g) {
    if (f.target != g.source)
        throw std::invalid_argument("compose: target " + to_string(f.target) + " != source " + to_string(g.source));
    // g kills the bottom len-k_g part of the middle module, f's image is its bottom k_f part
    const int k = f.k + g.k - f.target.len;
    if (k <= 0) return std::nullopt;
    return HomMap{f.source, g.target, k};
}

std::optional<Uniserial> syzygy(const AdmissibleSequence& alg, const Uniserial& u) {
    const int c = alg.c(u.top);
    if (u.len == c) return std::nullopt;
    return Uniserial{alg.normalize(u.top - u.len), c - u.len};
}

std::optional<Uniserial> cosyzygy(const AdmissibleSequence& alg, const Uniserial& u) {
    const Uniserial env = injective_envelope(alg, u);
    if (env.len == u.len) return std::nullopt;
    return Uniserial{env.top, env.len - u.len};
}

std::optional<Uniserial> syzygy_power(const AdmissibleSequence& alg, const Uniserial& u, int k) {
    std::optional<Uniserial> cur = u;
    for (int i = 0; i < k && cur; ++i) cur = syzygy(alg, *cur);
    return cur;
}

std::optional<Uniserial> cosyzygy_power(const AdmissibleSequence& alg, const Uniserial& u, int k) {
    std::optional<Uniserial> cur = u;
    for (int i = 0; i < k && cur; ++i) cur = cosyzygy(alg, *cur);
    return cur;
}

ExtendedNat pd(const AdmissibleSequence& alg, const Uniserial& u) {
    std::set<Uniserial> seen;
    Uniserial cur = u;
    std::uint64_t steps = 0;
    while (!is_projective(alg, cur)) {
        if (!seen.insert(cur).second) return ExtendedNat::infinity();
        cur = *syzygy(alg, cur);
        ++steps;
    }
    return steps;
}

ExtendedNat id(const AdmissibleSequence& alg, const Uniserial& u) {
    std::set<Uniserial> seen;
    Uniserial cur = u;
    std::uint64_t steps = 0;
    while (!is_injective(alg, cur)) {
        if (!seen.insert(cur).second) return ExtendedNat::infinity();
        cur = *cosyzygy(alg, cur);
        ++steps;
    }
    return steps;
}

std::optional<ExtendedNat> pd(const AdmissibleSequence& alg, const ModuleSum& m) {
    std::optional<ExtendedNat> best;
    for (const auto& u : m) {
        const auto d = pd(alg, u);
        if (!best || d > *best) best = d;
    }
    return best;
}

std::optional<ExtendedNat> id(const AdmissibleSequence& alg, const ModuleSum& m) {
    std::optional<ExtendedNat> best;
    for (const auto& u : m) {
        const auto d = id(alg, u);
        if (!best || d > *best) best = d;
    }
    return best;
}

ExtendedNat gldim(const AdmissibleSequence& alg) {
    ExtendedNat best = 0;
    for (const auto& s : simples(alg)) best = std::max(best, pd(alg, s));
#ifndef NDEBUG
    ExtendedNat all = 0;
    for (const auto& u : indecomposables(alg)) all = std::max(all, pd(alg, u));
    ensure(all == best, "gldim over simples differs from gldim over all indecomposables");
#endif
    return best;
}

ExtendedNat domdim_module(const AdmissibleSequence& alg, const Uniserial& u) {
    std::set<Uniserial> seen;
    std::optional<Uniserial> cur = u;
    std::uint64_t count = 0;
    while (cur) {
        if (!seen.insert(*cur).second) return ExtendedNat::infinity();
        if (!is_projective(alg, injective_envelope(alg, *cur))) return count;
        ++count;
        cur = cosyzygy(alg, *cur);
    }
    return ExtendedNat::infinity();
}

ExtendedNat domdim(const AdmissibleSequence& alg) {
    ExtendedNat best = ExtendedNat::infinity();
    for (int i = 1; i <= alg.n(); ++i) best = std::min(best, domdim_module(alg, projective(alg, i)));
    return best;
}

namespace {

ExtendedNat id_regular(const AdmissibleSequence& alg) {
    ExtendedNat best = 0;
    for (int i = 1; i <= alg.n(); ++i) best = std::max(best, id(alg, projective(alg, i)));
    return best;
}

}  // namespace

GorensteinDims gorenstein_dim(const AdmissibleSequence& alg) {
    GorensteinDims g{id_regular(alg), id_regular(opposite(alg).sequence), std::nullopt};
    if (g.id_left.is_finite() && g.id_right.is_finite()) {
        ensure(g.id_left == g.id_right, "finite left and right self-injective dimensions differ for " + to_string(alg));
        g.gdim = g.id_left;
    }
    return g;
}

int ext_dim(const AdmissibleSequence& alg, const Uniserial& u, const Uniserial& v, int k) {
    if (k < 0) throw std::invalid_argument("ext_dim: negative degree");
    if (k == 0) return hom_dim(alg, u, v);
    const auto w = syzygy_power(alg, u, k - 1);
    if (!w || is_projective(alg, *w)) return 0;
    // 0 -> Ωw -> P(w) -> w -> 0, apply Hom(-, v)
    const Uniserial omega = *syzygy(alg, *w);
    const int e = hom_dim(alg, omega, v) - hom_dim(alg, projective_cover(alg, *w), v) + hom_dim(alg, *w, v);
    ensure(e >= 0, "negative Ext^1 dimension");
    return e;
}

int ext_dim(const AdmissibleSequence& alg, const ModuleSum& u, const ModuleSum& v, int k) {
    int total = 0;
    for (const auto& a : u)
        for (const auto& b : v) total += ext_dim(alg, a, b, k);
    return total;
}

}  // namespace nakayama
