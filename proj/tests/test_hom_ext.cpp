#include "doctest.h"

#include <set>

#include "nakayama/hom_ext.hpp"
#include "nakayama/oracle.hpp"

using namespace nakayama;

namespace {

const auto lam5 = validate(Kind::cyclic, {3, 2, 3, 4, 3});

// Syzygy read off the representation: the kernel of P(top u) -> u is spanned
// by the basis vectors of P past position len(u).
std::optional<Uniserial> rep_syzygy(const AdmissibleSequence& alg, const Uniserial& u) {
    const Representation p = representation(alg, projective(alg, u.top));
    const auto klen = static_cast<int>(p.dim()) - u.len;
    if (klen == 0) return std::nullopt;
    return Uniserial{p.vertex[static_cast<std::size_t>(u.len)], klen};
}

// pd by walking rep_syzygy until a module of full projective length appears.
ExtendedNat rep_pd(const AdmissibleSequence& alg, Uniserial u) {
    std::set<Uniserial> seen;
    std::uint64_t steps = 0;
    while (u.len != static_cast<int>(representation(alg, projective(alg, u.top)).dim())) {
        if (!seen.insert(u).second) return ExtendedNat::infinity();
        u = *rep_syzygy(alg, u);
        ++steps;
    }
    return steps;
}

}  // namespace

TEST_CASE("hom dimensions") {
    CHECK(hom_dim(lam5, projective(lam5, 4), projective(lam5, 1)) == 1);
    CHECK(oracle_hom_dim(lam5, projective(lam5, 4), projective(lam5, 1)) == 1);
    const auto lin = validate(Kind::linear, {1, 2});
    CHECK(hom_dim(lin, {2, 1}, {1, 1}) == 0);
    CHECK(oracle_hom_dim(lin, {2, 1}, {1, 1}) == 0);
    for (const auto& u : indecomposables(lam5)) {
        CHECK(hom_dim(lam5, u, u) >= 1);
        CHECK(oracle_hom_dim(lam5, u, u) >= 1);
    }
    // long modules over a short cycle have multi-dimensional Hom spaces
    const auto loop = validate(Kind::cyclic, {7});
    CHECK(hom_dim(loop, {1, 7}, {1, 7}) == 7);
    CHECK(oracle_hom_dim(loop, {1, 7}, {1, 7}) == 7);
}

TEST_CASE("oracle agrees on every pair over cyclic:3,2,3,4,3") {
    for (const auto& u : indecomposables(lam5))
        for (const auto& v : indecomposables(lam5)) {
            CHECK(hom_dim(lam5, u, v) == oracle_hom_dim(lam5, u, v));
            CHECK(ext_dim(lam5, u, v, 1) == oracle_ext1_dim(lam5, u, v));
        }
}

TEST_CASE("hom bases and composition") {
    const auto two = validate(Kind::cyclic, {2, 2});
    const HomMap f{{1, 2}, {2, 2}, 1};
    const HomMap g{{2, 2}, {1, 2}, 1};
    CHECK_FALSE(compose(two, f, g).has_value());
    CHECK(compose(two, f, identity_map({2, 2})) == f);
    CHECK(compose(two, identity_map({1, 2}), f) == f);
    CHECK_THROWS_AS(compose(two, f, f), std::invalid_argument);

    // epi-part maps: k_f = len(target f) gives k = k_g
    const HomMap epi{{4, 4}, {4, 2}, 2};
    for (const auto& h : hom_basis(lam5, {4, 2}, {5, 3})) CHECK(compose(lam5, epi, h)->k == h.k);

    for (const auto& u : indecomposables(lam5))
        for (const auto& v : indecomposables(lam5))
            CHECK(hom_basis(lam5, u, v).size() == static_cast<std::size_t>(hom_dim(lam5, u, v)));
}

TEST_CASE("composition matches matrix products") {
    const auto alg = validate(Kind::cyclic, {5, 4, 4});
    const auto mods = indecomposables(alg);
    // the canonical map of image length k sends b_t to b_{t + len(target) - k}
    auto as_matrix = [&](const HomMap& h) {
        Matrix m(static_cast<std::size_t>(h.target.len), static_cast<std::size_t>(h.source.len));
        for (int t = 0; t < h.k; ++t)
            m(static_cast<std::size_t>(t + h.target.len - h.k), static_cast<std::size_t>(t)) = 1;
        return m;
    };
    for (const auto& a : mods)
        for (const auto& b : mods)
            for (const auto& f : hom_basis(alg, a, b)) {
                CHECK(as_matrix(f) * representation(alg, a).arrows ==
                      representation(alg, b).arrows * as_matrix(f));
                for (const auto& c : mods)
                    for (const auto& g : hom_basis(alg, b, c)) {
                        const Matrix prod = as_matrix(g) * as_matrix(f);
                        const auto h = compose(alg, f, g);
                        if (h)
                            CHECK(prod == as_matrix(*h));
                        else
                            CHECK(prod == Matrix(prod.rows(), prod.cols()));
                    }
            }
}

TEST_CASE("syzygies and cosyzygies") {
    CHECK(cosyzygy(lam5, projective(lam5, 2)) == Uniserial{4, 2});
    CHECK(cosyzygy(lam5, projective(lam5, 3)) == Uniserial{4, 1});
    CHECK(syzygy(lam5, {3, 1}) == projective(lam5, 2));
    CHECK(rep_syzygy(lam5, {3, 1}) == projective(lam5, 2));
    for (const auto& u : indecomposables(lam5)) {
        CHECK(syzygy(lam5, u) == rep_syzygy(lam5, u));
        CHECK(syzygy(lam5, u).has_value() != is_projective(lam5, u));
        CHECK(cosyzygy(lam5, u).has_value() != is_injective(lam5, u));
    }
}

TEST_CASE("projective and injective dimensions") {
    CHECK(pd(lam5, Uniserial{2, 1}) == ExtendedNat(4));
    CHECK(rep_pd(lam5, {2, 1}) == ExtendedNat(4));
    CHECK(pd(lam5, Uniserial{3, 1}) == ExtendedNat(1));
    CHECK(pd(validate(Kind::cyclic, {2, 2}), Uniserial{1, 1}).is_infinite());
    for (int i = 1; i <= 5; ++i) CHECK(pd(lam5, projective(lam5, i)) == ExtendedNat(0));
    for (const auto& u : indecomposables(lam5)) CHECK(pd(lam5, u) == rep_pd(lam5, u));
    CHECK_FALSE(pd(lam5, ModuleSum{}).has_value());
    CHECK(pd(lam5, ModuleSum{{2, 1}, {3, 1}}) == ExtendedNat(4));
}

TEST_CASE("global, dominant and Gorenstein dimensions") {
    CHECK(gldim(lam5) == ExtendedNat(4));
    CHECK(gldim(validate(Kind::cyclic, {2, 2, 3})) == ExtendedNat(3));
    CHECK(gldim(validate(Kind::cyclic, {2, 2})).is_infinite());
    CHECK(gldim(validate(Kind::linear, {1})) == ExtendedNat(0));

    CHECK(domdim_module(lam5, projective(lam5, 2)) == ExtendedNat(2));
    CHECK(domdim(lam5) == ExtendedNat(2));
    CHECK(domdim(validate(Kind::cyclic, {2, 2})).is_infinite());
    CHECK(domdim(validate(Kind::linear, {1, 2, 2, 2, 2})) == ExtendedNat(4));
    CHECK(domdim(validate(Kind::cyclic, {2, 2, 3})) == ExtendedNat(3));

    const auto ag = gorenstein_dim(validate(Kind::cyclic, {3, 2, 2, 3, 3}));
    CHECK(ag.gdim == ExtendedNat(2));
    CHECK(gorenstein_dim(validate(Kind::cyclic, {2, 2})).gdim == ExtendedNat(0));
    const auto g = gorenstein_dim(lam5);
    CHECK(g.gdim == ExtendedNat(4));
    CHECK(g.id_left == g.id_right);

    CHECK(domdim(opposite(lam5).sequence) == domdim(lam5));
}

TEST_CASE("ext dimensions") {
    CHECK(ext_dim(lam5, Uniserial{3, 1}, Uniserial{2, 1}, 1) == 1);
    CHECK(oracle_ext1_dim(lam5, {3, 1}, {2, 1}) == 1);
    const auto lin = validate(Kind::linear, {1, 2});
    CHECK(ext_dim(lin, Uniserial{2, 1}, Uniserial{1, 1}, 1) == 1);
    CHECK(oracle_ext1_dim(lin, {2, 1}, {1, 1}) == 1);
    CHECK(oracle_ext1_dim(validate(Kind::cyclic, {2, 2}), {1, 1}, {2, 1}) == 1);
    for (const auto& u : indecomposables(lam5))
        for (const auto& v : indecomposables(lam5)) {
            const auto p = pd(lam5, u);
            for (int k = 1; k <= 8; ++k) {
                if (is_projective(lam5, u)) CHECK(ext_dim(lam5, u, v, k) == 0);
                if (p.is_finite() && static_cast<std::uint64_t>(k) > p.value()) CHECK(ext_dim(lam5, u, v, k) == 0);
            }
        }
}
