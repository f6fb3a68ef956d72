#include "nakayama/oracle.hpp"

#include <cstdint>

#include "nakayama/ensure.hpp"

namespace nakayama {

Representation representation(const AdmissibleSequence& alg, const Uniserial& u) {
    require_valid(alg, u);
    const auto len = static_cast<std::size_t>(u.len);
    Representation r{std::vector<int>(len), Matrix(len, len)};
    for (std::size_t t = 0; t < len; ++t) {
        r.vertex[t] = alg.normalize(u.top - static_cast<int>(t));
        if (t + 1 < len) r.arrows(t + 1, t) = 1;
    }
    return r;
}

namespace {

struct Unknowns {
    std::vector<std::pair<std::size_t, std::size_t>> cells;  // (row in n, col in m)
    std::vector<std::vector<long>> index;                     // -1 when the cell is forced to zero
};

Unknowns unknowns(const Representation& m, const Representation& n) {
    Unknowns u;
    u.index.assign(n.dim(), std::vector<long>(m.dim(), -1));
    for (std::size_t r = 0; r < n.dim(); ++r)
        for (std::size_t c = 0; c < m.dim(); ++c)
            if (n.vertex[r] == m.vertex[c]) {
                u.index[r][c] = static_cast<long>(u.cells.size());
                u.cells.emplace_back(r, c);
            }
    return u;
}

// One row per entry of F·A_m - A_n·F.
std::vector<std::vector<std::int64_t>> intertwiner_equations(const Representation& m, const Representation& n,
                                                             const Unknowns& u) {
    std::vector<std::vector<std::int64_t>> rows;
    for (std::size_t r = 0; r < n.dim(); ++r)
        for (std::size_t c = 0; c < m.dim(); ++c) {
            std::vector<std::int64_t> eq(u.cells.size(), 0);
            bool any = false;
            for (std::size_t j = 0; j < m.dim(); ++j) {
                const Rational& a = m.arrows(j, c);
                if (a.is_zero() || u.index[r][j] < 0) continue;
                ensure(a.den() == 1, "oracle expects integral arrow matrices");
                eq[static_cast<std::size_t>(u.index[r][j])] += a.num();
                any = true;
            }
            for (std::size_t j = 0; j < n.dim(); ++j) {
                const Rational& a = n.arrows(r, j);
                if (a.is_zero() || u.index[j][c] < 0) continue;
                ensure(a.den() == 1, "oracle expects integral arrow matrices");
                eq[static_cast<std::size_t>(u.index[j][c])] -= a.num();
                any = true;
            }
            if (any) rows.push_back(std::move(eq));
        }
    return rows;
}

int hom_dim_of(const Representation& m, const Representation& n) {
    const Unknowns u = unknowns(m, n);
    if (u.cells.empty()) return 0;
    const auto rows = intertwiner_equations(m, n, u);
    return static_cast<int>(u.cells.size() - bareiss_rank(rows));
}

}  // namespace

std::vector<Matrix> intertwiners(const Representation& m, const Representation& n) {
    const Unknowns u = unknowns(m, n);
    std::vector<Matrix> out;
    if (u.cells.empty()) return out;
    const auto rows = intertwiner_equations(m, n, u);
    Matrix eqs(rows.size(), u.cells.size());
    for (std::size_t i = 0; i < rows.size(); ++i)
        for (std::size_t j = 0; j < u.cells.size(); ++j) eqs(i, j) = rows[i][j];
    for (const auto& v : kernel(std::move(eqs))) {
        Matrix f(n.dim(), m.dim());
        for (std::size_t j = 0; j < u.cells.size(); ++j) f(u.cells[j].first, u.cells[j].second) = v[j];
        out.push_back(std::move(f));
    }
    return out;
}

int oracle_hom_dim(const AdmissibleSequence& alg, const Uniserial& u, const Uniserial& v) {
    return hom_dim_of(representation(alg, u), representation(alg, v));
}

int oracle_ext1_dim(const AdmissibleSequence& alg, const Uniserial& u, const Uniserial& v) {
    const Representation p0 = representation(alg, projective(alg, u.top));
    const Representation mu = representation(alg, u);
    const Representation mv = representation(alg, v);

    // the canonical surjection P0 -> u, checked to be a module map
    Matrix pi(mu.dim(), p0.dim());
    for (std::size_t t = 0; t < mu.dim(); ++t) pi(t, t) = 1;
    ensure(pi * p0.arrows == mu.arrows * pi, "projective cover is not a module map");

    // K = ker(pi), computed vertex by vertex so the basis stays homogeneous
    Subspace k_space(p0.dim());
    for (int x = 1; x <= alg.n(); ++x) {
        std::vector<std::size_t> cols;
        for (std::size_t c = 0; c < p0.dim(); ++c)
            if (p0.vertex[c] == x) cols.push_back(c);
        if (cols.empty()) continue;
        Matrix block(mu.dim(), cols.size());
        for (std::size_t r = 0; r < mu.dim(); ++r)
            for (std::size_t j = 0; j < cols.size(); ++j) block(r, j) = pi(r, cols[j]);
        for (const auto& kv : kernel(std::move(block))) {
            Vector full(p0.dim());
            for (std::size_t j = 0; j < cols.size(); ++j) full[cols[j]] = kv[j];
            k_space.insert(full);
        }
    }

    const std::size_t kd = k_space.dim();
    if (kd == 0) return 0;
    Representation k_rep{std::vector<int>(kd), Matrix(kd, kd)};
    for (std::size_t b = 0; b < kd; ++b) {
        const Vector& vec = k_space.basis()[b];
        for (std::size_t c = 0; c < p0.dim(); ++c)
            if (!vec[c].is_zero()) k_rep.vertex[b] = p0.vertex[c];
        const Vector image = k_space.coordinates(p0.arrows * vec);  // throws if K is not a submodule
        for (std::size_t r = 0; r < kd; ++r) k_rep.arrows(r, b) = image[r];
    }

    // Ext^1(u, v) = coker(Hom(P0, v) -> Hom(K, v))
    Matrix inclusion(p0.dim(), kd);
    for (std::size_t b = 0; b < kd; ++b)
        for (std::size_t c = 0; c < p0.dim(); ++c) inclusion(c, b) = k_space.basis()[b][c];
    Subspace restricted(mv.dim() * kd);
    for (const auto& f : intertwiners(p0, mv)) {
        const Matrix g = f * inclusion;
        Vector flat(mv.dim() * kd);
        for (std::size_t r = 0; r < mv.dim(); ++r)
            for (std::size_t c = 0; c < kd; ++c) flat[r * kd + c] = g(r, c);
        restricted.insert(flat);
    }
    return hom_dim_of(k_rep, mv) - static_cast<int>(restricted.dim());
}

}  // namespace nakayama
