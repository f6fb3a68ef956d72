#include "nakayama/endo.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>
#include <tuple>

#include "nakayama/ensure.hpp"
#include "nakayama/hom_ext.hpp"
#include "nakayama/tilting.hpp"

namespace nakayama {

namespace {

using SparseVec = std::vector<SparseEntry>;

void accumulate(SparseVec& acc, int row, const Rational& value) {
    if (value.is_zero()) return;
    for (auto it = acc.begin(); it != acc.end(); ++it)
        if (it->row == row) {
            it->value += value;
            if (it->value.is_zero()) acc.erase(it);
            return;
        }
    acc.push_back({row, value});
}

SparseVec normalized(SparseVec v) {
    std::sort(v.begin(), v.end(), [](const SparseEntry& a, const SparseEntry& b) { return a.row < b.row; });
    return v;
}

bool same(const SparseVec& a, const SparseVec& b) {
    const SparseVec x = normalized(a), y = normalized(b);
    if (x.size() != y.size()) return false;
    for (std::size_t i = 0; i < x.size(); ++i)
        if (x[i].row != y[i].row || !(x[i].value == y[i].value)) return false;
    return true;
}

// b · v for a sparse vector v.
SparseVec act_sparse(const AlgebraModule& m, int b, const SparseVec& v) {
    SparseVec out;
    for (const auto& [j, coeff] : v)
        for (const auto& e : m.column(b, j)) accumulate(out, e.row, coeff * e.value);
    return out;
}

SparseVec to_sparse(const Vector& v) {
    SparseVec out;
    for (std::size_t i = 0; i < v.size(); ++i)
        if (!v[i].is_zero()) out.push_back({static_cast<int>(i), v[i]});
    return out;
}

// Linear combination of basis elements, coefficient per index.
using Combination = std::map<int, std::int64_t>;

void add_product(const StructureConstantAlgebra& a, Combination& acc, int i, int j, std::int64_t scale) {
    for (const auto& t : a.product(i, j)) {
        auto& slot = acc[t.index];
        slot += scale * t.coeff;
        if (slot == 0) acc.erase(t.index);
    }
}

}  // namespace

// ------------------------------------------------------------------ algebra

StructureConstantAlgebra::StructureConstantAlgebra(std::vector<BasisLabel> basis, std::vector<int> idempotents,
                                                   std::vector<std::vector<Term>> table)
    : basis_(std::move(basis)), idempotents_(std::move(idempotents)), table_(std::move(table)) {
    if (table_.size() != basis_.size() * basis_.size())
        throw std::invalid_argument("multiplication table has the wrong size");
}

void StructureConstantAlgebra::validate() const {
    const int d = dim();
    std::vector<std::vector<int>> right(static_cast<std::size_t>(d)), left(static_cast<std::size_t>(d));
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j) {
            const auto& p = product(i, j);
            if (p.empty()) continue;
            right[static_cast<std::size_t>(i)].push_back(j);
            left[static_cast<std::size_t>(j)].push_back(i);
            for (const auto& t : p) {
                ensure(t.index >= 0 && t.index < d, "structure constant points outside the basis");
                ensure(t.coeff == 1, "structure constant outside {0,1}");
            }
        }

    auto check = [&](int i, int j, int k) {
        Combination lhs, rhs;
        for (const auto& t : product(i, j)) add_product(*this, lhs, t.index, k, t.coeff);
        for (const auto& t : product(j, k)) add_product(*this, rhs, i, t.index, t.coeff);
        ensure(lhs == rhs, "multiplication is not associative on basis triple (" + std::to_string(i) + "," +
                               std::to_string(j) + "," + std::to_string(k) + ")");
    };
    // every triple with a nonzero side is reached by one of the two walks
    for (int i = 0; i < d; ++i)
        for (int j : right[static_cast<std::size_t>(i)])
            for (const auto& t : product(i, j))
                for (int k : right[static_cast<std::size_t>(t.index)]) check(i, j, k);
    for (int j = 0; j < d; ++j)
        for (int k : right[static_cast<std::size_t>(j)])
            for (const auto& t : product(j, k))
                for (int i : left[static_cast<std::size_t>(t.index)]) check(i, j, k);

    for (int e : idempotents_)
        for (int f : idempotents_) {
            const auto& p = product(e, f);
            if (e == f)
                ensure(p.size() == 1 && p[0].index == e && p[0].coeff == 1, "idempotent does not square to itself");
            else
                ensure(p.empty(), "idempotents are not orthogonal");
        }
    for (int x = 0; x < d; ++x) {
        Combination l, r;
        for (int e : idempotents_) {
            add_product(*this, l, e, x, 1);
            add_product(*this, r, x, e, 1);
        }
        const Combination expect{{x, 1}};
        ensure(l == expect && r == expect, "idempotents do not sum to the unit");
    }
}

// ------------------------------------------------------------------ modules

Vector AlgebraModule::act(int b, const Vector& v) const {
    Vector out(static_cast<std::size_t>(dim_));
    for (int j = 0; j < dim_; ++j) {
        const Rational& c = v[static_cast<std::size_t>(j)];
        if (c.is_zero()) continue;
        for (const auto& e : column(b, j)) out[static_cast<std::size_t>(e.row)] += c * e.value;
    }
    return out;
}

Matrix AlgebraModule::action_matrix(int b) const {
    Matrix m(static_cast<std::size_t>(dim_), static_cast<std::size_t>(dim_));
    for (int j = 0; j < dim_; ++j)
        for (const auto& e : column(b, j)) m(static_cast<std::size_t>(e.row), static_cast<std::size_t>(j)) = e.value;
    return m;
}

void AlgebraModule::validate(const StructureConstantAlgebra& a) const {
    ensure(action_.size() == static_cast<std::size_t>(a.dim()), "module action has the wrong number of operators");
    for (int c = 0; c < dim_; ++c) {
        const SparseVec unit{{c, Rational(1)}};
        SparseVec sum;
        for (int e : a.idempotents())
            for (const auto& x : column(e, c)) accumulate(sum, x.row, x.value);
        ensure(same(sum, unit), "idempotents do not act as the identity");
        for (int j = 0; j < a.dim(); ++j) {
            const SparseVec& v = column(j, c);
            for (int i = 0; i < a.dim(); ++i) {
                const auto& p = a.product(i, j);
                if (v.empty() && p.empty()) continue;
                SparseVec lhs;
                for (const auto& t : p)
                    for (const auto& x : column(t.index, c)) accumulate(lhs, x.row, Rational(t.coeff) * x.value);
                ensure(same(lhs, act_sparse(*this, i, v)), "module action does not respect multiplication");
            }
        }
    }
}

// ------------------------------------------------------------------ End(X)^op

namespace {

struct Indexed {
    std::vector<BasisLabel> basis;
    std::map<std::tuple<int, int, int>, int> index;
};

}  // namespace

StructureConstantAlgebra end_algebra(const AdmissibleSequence& alg, const ModuleSum& x) {
    if (x.is_zero()) throw std::invalid_argument("end_algebra of the zero module");
    if (!x.is_basic()) throw std::invalid_argument("end_algebra needs a basic module, got " + to_string(x));
    const auto& s = x.summands();
    for (const auto& u : s) require_valid(alg, u);
    const int r = static_cast<int>(s.size());

    Indexed ix;
    for (int a = 0; a < r; ++a)
        for (int b = 0; b < r; ++b)
            for (const auto& h : hom_basis(alg, s[static_cast<std::size_t>(a)], s[static_cast<std::size_t>(b)])) {
                ix.index[{a, b, h.k}] = static_cast<int>(ix.basis.size());
                ix.basis.push_back({a, b, h.k});
            }
    std::vector<int> idem;
    for (int a = 0; a < r; ++a) idem.push_back(ix.index.at({a, a, s[static_cast<std::size_t>(a)].len}));

    const std::size_t d = ix.basis.size();
    std::vector<std::vector<Term>> table(d * d);
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j) {
            const BasisLabel& f = ix.basis[i];
            const BasisLabel& g = ix.basis[j];
            if (f.target != g.source) continue;
            // f·g = g∘f
            const HomMap hf{s[static_cast<std::size_t>(f.source)], s[static_cast<std::size_t>(f.target)], f.k};
            const HomMap hg{s[static_cast<std::size_t>(g.source)], s[static_cast<std::size_t>(g.target)], g.k};
            if (const auto h = compose(alg, hf, hg)) table[i * d + j].push_back({ix.index.at({f.source, g.target, h->k}), 1});
        }
    StructureConstantAlgebra out(std::move(ix.basis), std::move(idem), std::move(table));
    out.validate();
    return out;
}

AlgebraModule hom_module(const AdmissibleSequence& alg, const ModuleSum& x, const ModuleSum& m) {
    if (!x.is_basic()) throw std::invalid_argument("hom_module needs a basic X");
    const auto& xs = x.summands();
    const auto& ms = m.summands();
    const StructureConstantAlgebra a = end_algebra(alg, x);

    std::map<std::tuple<int, int, int>, int> index;  // (summand of X, summand of M, k)
    std::vector<std::tuple<int, int, int>> labels;
    for (std::size_t p = 0; p < xs.size(); ++p)
        for (std::size_t q = 0; q < ms.size(); ++q)
            for (const auto& h : hom_basis(alg, xs[p], ms[q])) {
                index[{static_cast<int>(p), static_cast<int>(q), h.k}] = static_cast<int>(labels.size());
                labels.emplace_back(static_cast<int>(p), static_cast<int>(q), h.k);
            }
    const int dim = static_cast<int>(labels.size());

    std::vector<std::vector<SparseColumn>> action(static_cast<std::size_t>(a.dim()),
                                                  std::vector<SparseColumn>(static_cast<std::size_t>(dim)));
    for (int b = 0; b < a.dim(); ++b) {
        const BasisLabel& g = a.basis()[static_cast<std::size_t>(b)];
        for (int j = 0; j < dim; ++j) {
            const auto [p, q, k] = labels[static_cast<std::size_t>(j)];
            if (g.target != p) continue;
            const HomMap hg{xs[static_cast<std::size_t>(g.source)], xs[static_cast<std::size_t>(g.target)], g.k};
            const HomMap phi{xs[static_cast<std::size_t>(p)], ms[static_cast<std::size_t>(q)], k};
            // g·φ = φ∘g
            if (const auto h = compose(alg, hg, phi))
                action[static_cast<std::size_t>(b)][static_cast<std::size_t>(j)].push_back(
                    {index.at({g.source, q, h->k}), Rational(1)});
        }
    }
    AlgebraModule out(dim, std::move(action));
    out.validate(a);
    return out;
}

std::vector<int> projective_basis(const StructureConstantAlgebra& a, int summand) {
    const int e = a.idempotents().at(static_cast<std::size_t>(summand));
    std::vector<int> out;
    for (int x = 0; x < a.dim(); ++x) {
        const auto& p = a.product(x, e);
        if (p.empty()) continue;
        ensure(p.size() == 1 && p[0].index == x && p[0].coeff == 1, "basis is not adapted to the idempotents");
        out.push_back(x);
    }
    return out;
}

namespace {

// ⊕ A·e_{a_g} over the listed summands, basis ordered block by block.
AlgebraModule projective_sum(const StructureConstantAlgebra& a, const std::vector<int>& summands,
                             std::vector<std::vector<int>>* blocks_out = nullptr) {
    std::vector<std::vector<int>> blocks;
    std::vector<std::map<int, int>> pos;
    int dim = 0;
    for (int s : summands) {
        blocks.push_back(projective_basis(a, s));
        std::map<int, int> p;
        for (int x : blocks.back()) p[x] = dim++;
        pos.push_back(std::move(p));
    }
    std::vector<std::vector<SparseColumn>> action(static_cast<std::size_t>(a.dim()),
                                                  std::vector<SparseColumn>(static_cast<std::size_t>(dim)));
    for (int b = 0; b < a.dim(); ++b)
        for (std::size_t g = 0; g < blocks.size(); ++g)
            for (int x : blocks[g]) {
                auto& col = action[static_cast<std::size_t>(b)][static_cast<std::size_t>(pos[g].at(x))];
                for (const auto& t : a.product(b, x)) {
                    const auto it = pos[g].find(t.index);
                    ensure(it != pos[g].end(), "left multiplication leaves the projective A·e");
                    col.push_back({it->second, Rational(t.coeff)});
                }
            }
    if (blocks_out) *blocks_out = std::move(blocks);
    return AlgebraModule(dim, std::move(action));
}

}  // namespace

AlgebraModule projective_module(const StructureConstantAlgebra& a, int summand) {
    return projective_sum(a, {summand});
}

AlgebraModule regular_module(const StructureConstantAlgebra& a) {
    const int d = a.dim();
    std::vector<std::vector<SparseColumn>> action(static_cast<std::size_t>(d),
                                                  std::vector<SparseColumn>(static_cast<std::size_t>(d)));
    for (int b = 0; b < d; ++b)
        for (int x = 0; x < d; ++x)
            for (const auto& t : a.product(b, x))
                action[static_cast<std::size_t>(b)][static_cast<std::size_t>(x)].push_back({t.index, Rational(t.coeff)});
    return AlgebraModule(d, std::move(action));
}

// ------------------------------------------------------------------ radical

namespace {

// Radical basis in sparse form, each vector a combination of algebra basis elements.
std::vector<SparseVec> radical_sparse(const StructureConstantAlgebra& a) {
    const int d = a.dim();
    // tr L_x: coefficient of y in x·y, summed over y
    std::vector<std::int64_t> trace(static_cast<std::size_t>(d), 0);
    for (int x = 0; x < d; ++x)
        for (int y = 0; y < d; ++y)
            for (const auto& t : a.product(x, y))
                if (t.index == y) trace[static_cast<std::size_t>(x)] += t.coeff;
    Matrix g(static_cast<std::size_t>(d), static_cast<std::size_t>(d));
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j) {
            std::int64_t v = 0;
            for (const auto& t : a.product(i, j)) v += t.coeff * trace[static_cast<std::size_t>(t.index)];
            g(static_cast<std::size_t>(i), static_cast<std::size_t>(j)) = v;
        }
    std::vector<SparseVec> out;
    for (const auto& v : kernel(std::move(g))) out.push_back(to_sparse(v));
    return out;
}

// r · v where r is a combination of algebra basis elements.
SparseVec act_combination(const AlgebraModule& m, const SparseVec& r, const SparseVec& v) {
    SparseVec out;
    for (const auto& [b, coeff] : r)
        for (const auto& e : act_sparse(m, b, v)) accumulate(out, e.row, coeff * e.value);
    return out;
}

Vector dense(const SparseVec& v, int dim) {
    Vector out(static_cast<std::size_t>(dim));
    for (const auto& e : v) out[static_cast<std::size_t>(e.row)] += e.value;
    return out;
}

// rad(M) ∩ S spanned by r·v over radical vectors r and basis vectors v of S.
Subspace radical_of(const AlgebraModule& m, const Subspace& s, const std::vector<SparseVec>& rad) {
    Subspace out(static_cast<std::size_t>(m.dim()));
    for (const auto& v : s.basis()) {
        const SparseVec sv = to_sparse(v);
        for (const auto& r : rad) {
            const SparseVec w = act_combination(m, r, sv);
            if (!w.empty()) out.insert(dense(w, m.dim()));
        }
    }
    return out;
}

Subspace whole_space(int dim) {
    Subspace s(static_cast<std::size_t>(dim));
    for (int i = 0; i < dim; ++i) {
        Vector v(static_cast<std::size_t>(dim));
        v[static_cast<std::size_t>(i)] = 1;
        s.insert(v);
    }
    return s;
}

AlgebraModule simple_top(const StructureConstantAlgebra& a, int summand, const std::vector<SparseVec>& rad) {
    std::vector<std::vector<int>> blocks;
    const AlgebraModule p = projective_sum(a, {summand}, &blocks);
    const Subspace jp = radical_of(p, whole_space(p.dim()), rad);
    ensure(p.dim() - static_cast<int>(jp.dim()) == 1, "top of an indecomposable projective is not 1-dimensional");

    const int e = a.idempotents()[static_cast<std::size_t>(summand)];
    const auto& block = blocks[0];
    const int e_pos = static_cast<int>(std::find(block.begin(), block.end(), e) - block.begin());
    Vector unit(static_cast<std::size_t>(p.dim()));
    unit[static_cast<std::size_t>(e_pos)] = 1;
    const Vector base = jp.reduce(unit);
    std::size_t piv = 0;
    while (base[piv].is_zero()) ++piv;

    std::vector<std::vector<SparseColumn>> action(static_cast<std::size_t>(a.dim()), std::vector<SparseColumn>(1));
    for (int b = 0; b < a.dim(); ++b) {
        const Vector w = jp.reduce(p.act(b, unit));
        const Rational lambda = w[piv] / base[piv];
        if (!lambda.is_zero()) action[static_cast<std::size_t>(b)][0].push_back({0, lambda});
    }
    return AlgebraModule(1, std::move(action));
}

}  // namespace

RadicalAndSimples radical_and_simples(const StructureConstantAlgebra& a) {
    const auto rad = radical_sparse(a);
    RadicalAndSimples out;
    for (const auto& r : rad) out.radical.push_back(dense(r, a.dim()));
    for (std::size_t s = 0; s < a.idempotents().size(); ++s) {
        out.simples.push_back(simple_top(a, static_cast<int>(s), rad));
        out.simples.back().validate(a);
    }
    return out;
}

// ------------------------------------------------------------------ resolutions

std::string BoundedDim::to_string() const { return exceeded ? ">" + std::to_string(cap) : std::to_string(value); }

namespace {

Resolution resolve_with(const StructureConstantAlgebra& a, const AlgebraModule& u, std::uint64_t cap,
                        const std::vector<SparseVec>& rad) {
    if (cap < 1) throw std::invalid_argument("cap must be positive");
    Resolution res;
    res.pd.cap = cap;
    AlgebraModule ambient = u;
    Subspace sub = whole_space(u.dim());
    std::uint64_t steps = 0;
    while (sub.dim() > 0) {
        // minimal generators: lift a basis of e_a S / e_a rad S
        Subspace top = radical_of(ambient, sub, rad);
        const std::size_t rad_dim = top.dim();
        std::vector<std::pair<int, Vector>> gens;
        for (std::size_t s = 0; s < a.idempotents().size(); ++s)
            for (const auto& v : sub.basis()) {
                const Vector w = ambient.act(a.idempotents()[s], v);
                if (!is_zero(w) && top.insert(w)) gens.emplace_back(static_cast<int>(s), w);
            }
        ensure(gens.size() == sub.dim() - rad_dim, "top generators do not match the top dimension");

        std::vector<int> summands;
        for (const auto& g : gens) summands.push_back(g.first);
        std::vector<std::vector<int>> blocks;
        AlgebraModule cover = projective_sum(a, summands, &blocks);

        // π sends basis element x of block g to x·w_g
        Matrix pi(static_cast<std::size_t>(ambient.dim()), static_cast<std::size_t>(cover.dim()));
        std::size_t col = 0;
        for (std::size_t g = 0; g < gens.size(); ++g)
            for (int x : blocks[g]) {
                const Vector img = ambient.act(x, gens[g].second);
                for (std::size_t r = 0; r < img.size(); ++r) pi(r, col) = img[r];
                ++col;
            }
        Subspace k(static_cast<std::size_t>(cover.dim()));
        for (const auto& v : kernel(pi)) k.insert(v);
        ensure(static_cast<std::size_t>(cover.dim()) - k.dim() == sub.dim(), "projective cover is not onto");

        if (k.dim() == 0) break;
        ++steps;
        res.syzygy_dims.push_back(static_cast<int>(k.dim()));
        if (steps > cap) {
            res.pd.exceeded = true;
            return res;
        }
        ambient = std::move(cover);
        sub = std::move(k);
    }
    res.pd.value = steps;
    return res;
}

}  // namespace

Resolution resolve(const StructureConstantAlgebra& a, const AlgebraModule& u, std::uint64_t cap) {
    return resolve_with(a, u, cap, radical_sparse(a));
}

BoundedDim pd_over(const StructureConstantAlgebra& a, const AlgebraModule& u, std::uint64_t cap) {
    return resolve(a, u, cap).pd;
}

BoundedDim gldim_over(const StructureConstantAlgebra& a, std::uint64_t cap) {
    if (cap < 1) throw std::invalid_argument("cap must be positive");
    const auto rad = radical_sparse(a);
    BoundedDim best{false, 0, cap};
    for (std::size_t s = 0; s < a.idempotents().size(); ++s) {
        const BoundedDim p = resolve_with(a, simple_top(a, static_cast<int>(s), rad), cap, rad).pd;
        if (p.exceeded) return p;
        best.value = std::max(best.value, p.value);
    }
    return best;
}

// ------------------------------------------------------------------ commutant

int module_endomorphisms(const StructureConstantAlgebra& a, const AlgebraModule& u) {
    const int d = u.dim();
    if (d == 0) return 0;

    // block structure from the idempotents when the basis is adapted to them
    std::vector<int> cls(static_cast<std::size_t>(d), -1);
    bool adapted = true;
    for (std::size_t s = 0; s < a.idempotents().size() && adapted; ++s)
        for (int j = 0; j < d; ++j) {
            const auto& col = u.column(a.idempotents()[s], j);
            if (col.empty()) continue;
            if (col.size() != 1 || col[0].row != j || !col[0].value.is_one() || cls[static_cast<std::size_t>(j)] >= 0) {
                adapted = false;
                break;
            }
            cls[static_cast<std::size_t>(j)] = static_cast<int>(s);
        }
    if (!adapted) std::fill(cls.begin(), cls.end(), 0);

    std::vector<std::vector<int>> unknown(static_cast<std::size_t>(d), std::vector<int>(static_cast<std::size_t>(d), -1));
    int count = 0;
    for (int r = 0; r < d; ++r)
        for (int c = 0; c < d; ++c)
            if (cls[static_cast<std::size_t>(r)] == cls[static_cast<std::size_t>(c)])
                unknown[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)] = count++;

    std::set<int> skip;
    if (adapted) skip.insert(a.idempotents().begin(), a.idempotents().end());

    Subspace eqs(static_cast<std::size_t>(count));
    for (int b = 0; b < a.dim(); ++b) {
        if (skip.count(b)) continue;
        std::vector<SparseVec> rows(static_cast<std::size_t>(d));  // rows of L_b
        for (int j = 0; j < d; ++j)
            for (const auto& e : u.column(b, j)) rows[static_cast<std::size_t>(e.row)].push_back({j, e.value});
        for (int r = 0; r < d; ++r)
            for (int c = 0; c < d; ++c) {
                // (T L_b - L_b T)(r, c)
                SparseVec eq;
                for (const auto& e : u.column(b, c)) {
                    const int x = unknown[static_cast<std::size_t>(r)][static_cast<std::size_t>(e.row)];
                    if (x >= 0) accumulate(eq, x, e.value);
                }
                for (const auto& e : rows[static_cast<std::size_t>(r)]) {
                    const int x = unknown[static_cast<std::size_t>(e.row)][static_cast<std::size_t>(c)];
                    if (x >= 0) accumulate(eq, x, -e.value);
                }
                if (!eq.empty()) eqs.insert(dense(eq, count));
            }
    }
    return count - static_cast<int>(eqs.dim());
}

// ------------------------------------------------------------------ theorems

DropCheck drop_check(const AdmissibleSequence& alg, std::uint64_t cap) {
    const ExtendedNat d = gldim(alg);
    if (d.is_infinite()) throw std::invalid_argument("drop_check needs finite global dimension");
    const auto t = build_TC(alg);
    if (!t) throw std::invalid_argument("drop_check needs T_C to exist");
    DropCheck out{d, gldim_over(end_algebra(alg, *t), cap), pd_tau_TC(alg), std::nullopt};
    if (!out.gldim_bc.exceeded) {
        const ExtendedNat gb = out.gldim_bc.value;
        ensure(gb <= d && (d.value() == 0 || gb + 1 >= d),
               "gldim B_C = " + out.gldim_bc.to_string() + " outside [d-1, d] for " + to_string(alg));
        out.theorem_holds = (gb < d) == (out.pd_tau_tc < d);
    }
    return out;
}

namespace {

void require_generator_cogenerator(const AdmissibleSequence& alg, const ModuleSum& x) {
    if (!x.is_basic()) throw std::invalid_argument("expected a basic module, got " + to_string(x));
    for (int i = 1; i <= alg.n(); ++i)
        if (!x.contains(projective(alg, i)) || !x.contains(injective(alg, i)))
            throw std::invalid_argument(to_string(x) + " is not a generator-cogenerator");
}

}  // namespace

ExtendedNat mueller_domdim(const AdmissibleSequence& alg, const ModuleSum& x) {
    require_generator_cogenerator(alg, x);
    // Ext^i(X_a, X_b) = Ext^1(Ω^{i-1} X_a, X_b): the state is the tuple of non-projective syzygies
    std::vector<std::optional<Uniserial>> state;
    for (const auto& u : x)
        state.push_back(is_projective(alg, u) ? std::nullopt : std::optional<Uniserial>(u));
    std::set<std::vector<std::optional<Uniserial>>> seen;
    for (std::uint64_t i = 1;; ++i) {
        if (!seen.insert(state).second) return ExtendedNat::infinity();
        bool all_zero = true;
        for (const auto& w : state) {
            if (!w) continue;
            all_zero = false;
            for (const auto& v : x)
                if (ext_dim(alg, *w, v, 1) != 0) return ExtendedNat(2 + (i - 1));
        }
        if (all_zero) return ExtendedNat::infinity();
        for (auto& w : state)
            if (w) {
                const auto s = syzygy(alg, *w);
                w = (s && !is_projective(alg, *s)) ? s : std::nullopt;
            }
    }
}

ProjdimKeyCheck projdim_key_check(const AdmissibleSequence& alg, const Uniserial& m, std::uint64_t cap) {
    const auto t = build_TC(alg);
    if (!t) throw std::invalid_argument("projdim_key_check needs T_C to exist");
    require_valid(alg, m);
    if (!is_injective(alg, projective_cover(alg, m)))
        throw std::invalid_argument(to_string(m) + " is not generated by projective-injectives");
    const ExtendedNat p = pd(alg, m);
    if (p.is_infinite() || p == ExtendedNat(0))
        throw std::invalid_argument("projdim_key_check needs 1 <= pd M < inf");
    ProjdimKeyCheck out{p, pd_over(end_algebra(alg, *t), hom_module(alg, *t, ModuleSum{m}), cap), false};
    out.holds = !out.pd_bc.exceeded && out.pd_bc.value + 1 == p.value();
    return out;
}

// ------------------------------------------------------------------ Nakayama recognition

std::optional<AdmissibleSequence> recognize_nakayama(const StructureConstantAlgebra& b) {
    const auto rad = radical_sparse(b);
    const int r = static_cast<int>(b.idempotents().size());
    std::vector<int> length(static_cast<std::size_t>(r));
    std::vector<int> next(static_cast<std::size_t>(r), -1);  // top of rad P_a
    for (int a = 0; a < r; ++a) {
        const AlgebraModule p = projective_module(b, a);
        Subspace layer = whole_space(p.dim());
        bool first = true;
        while (layer.dim() > 0) {
            Subspace below = radical_of(p, layer, rad);
            if (layer.dim() - below.dim() != 1) return std::nullopt;
            if (!first && next[static_cast<std::size_t>(a)] < 0) {
                // which idempotent survives on rad P_a / rad^2 P_a
                for (int s = 0; s < r && next[static_cast<std::size_t>(a)] < 0; ++s)
                    for (const auto& v : layer.basis())
                        if (!below.contains(p.act(b.idempotents()[static_cast<std::size_t>(s)], v))) {
                            next[static_cast<std::size_t>(a)] = s;
                            break;
                        }
            }
            first = false;
            layer = std::move(below);
        }
        length[static_cast<std::size_t>(a)] = p.dim();
    }

    // arrows go i -> i-1: next maps vertex i to vertex i-1
    std::vector<int> prev(static_cast<std::size_t>(r), -1);
    for (int a = 0; a < r; ++a) {
        const int nx = next[static_cast<std::size_t>(a)];
        if (nx < 0) continue;
        if (prev[static_cast<std::size_t>(nx)] >= 0) return std::nullopt;
        prev[static_cast<std::size_t>(nx)] = a;
    }
    int start = -1;
    for (int a = 0; a < r; ++a)
        if (next[static_cast<std::size_t>(a)] < 0) {
            if (start >= 0) return std::nullopt;  // disconnected
            start = a;
        }
    const bool cyclic = start < 0;
    if (cyclic) start = 0;
    std::vector<int> c;
    std::set<int> visited;
    for (int v = start; v >= 0 && visited.insert(v).second; v = prev[static_cast<std::size_t>(v)])
        c.push_back(length[static_cast<std::size_t>(v)]);
    if (static_cast<int>(c.size()) != r) return std::nullopt;
    try {
        return validate(cyclic ? Kind::cyclic : Kind::linear, c);
    } catch (const AdmissibilityError&) {
        return std::nullopt;
    }
}

XTCheck xt_dimension_check(const AdmissibleSequence& alg, const ModuleSum& x) {
    require_generator_cogenerator(alg, x);
    XTCheck out;
    out.gamma = recognize_nakayama(end_algebra(alg, x));
    if (!out.gamma) return out;

    const auto t = build_TC(*out.gamma);
    ensure(t.has_value(), "End(X)^op of a generator-cogenerator has dominant dimension below 2");
    for (const auto& u : *t) out.tc_lengths.push_back(u.len);

    for (int j = 1; j <= alg.n(); ++j) out.predicted.push_back(hom_dim(alg, x, ModuleSum{injective(alg, j)}));
    out.quotient_homs = out.predicted;
    for (const auto& u : x) {
        const auto co = cosyzygy(alg, u);
        if (!co) continue;
        const ModuleSum env{injective_envelope(alg, u)};
        out.predicted.push_back(hom_dim(alg, x, env) - hom_dim(alg, x, ModuleSum{u}));
        out.quotient_homs.push_back(hom_dim(alg, x, ModuleSum{*co}));
    }
    std::sort(out.tc_lengths.begin(), out.tc_lengths.end());
    std::sort(out.predicted.begin(), out.predicted.end());
    std::sort(out.quotient_homs.begin(), out.quotient_homs.end());
    out.matches = out.tc_lengths == out.predicted;
    return out;
}

}  // namespace nakayama
