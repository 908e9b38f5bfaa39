// modules.hpp - small faithful modules for the exceptional types and the
// adjoint module, all as exact integer representations.  E6 and E7 act on the
// level-one slice of the next larger simply-laced algebra; F4 and G2 are cut
// out of those modules by diagram folding and a minimal admissible lattice.
#pragma once

#include <map>
#include <string>
#include <vector>

#include "chevrep/chevalley.hpp"
#include "chevrep/classical.hpp"
#include "chevrep/intmat.hpp"

namespace chevrep {
namespace detail {

inline std::vector<int64_t> apply_int(const IntMat& m, const std::vector<int64_t>& v) {
    CHEVREP_CHECK(m.cols() == static_cast<int>(v.size()), "apply_int shape mismatch");
    std::vector<int64_t> out(m.rows(), 0);
    for (int r = 0; r < m.rows(); ++r) {
        int64_t acc = 0;
        for (int c = 0; c < m.cols(); ++c)
            if (m.at(r, c) && v[c]) acc = checked_add(acc, checked_mul(m.at(r, c), v[c]));
        out[r] = acc;
    }
    return out;
}

// Basis of { v : m v = 0 } over the rationals.
inline std::vector<RatVec> rational_kernel(const IntMat& m) {
    int rows = m.rows(), cols = m.cols();
    std::vector<RatVec> a(rows, RatVec(cols));
    for (int r = 0; r < rows; ++r)
        for (int c = 0; c < cols; ++c) a[r][c] = Rat(m.at(r, c));

    std::vector<int> pivot_of_col(cols, -1);
    int rank = 0;
    for (int c = 0; c < cols && rank < rows; ++c) {
        int pr = -1;
        for (int r = rank; r < rows; ++r)
            if (!a[r][c].is_zero()) {
                pr = r;
                break;
            }
        if (pr < 0) continue;
        std::swap(a[rank], a[pr]);
        Rat inv = Rat(1) / a[rank][c];
        for (int j = 0; j < cols; ++j) a[rank][j] = a[rank][j] * inv;
        for (int r = 0; r < rows; ++r) {
            if (r == rank || a[r][c].is_zero()) continue;
            Rat f = a[r][c];
            for (int j = 0; j < cols; ++j) a[r][j] = a[r][j] - f * a[rank][j];
        }
        pivot_of_col[c] = rank;
        ++rank;
    }

    std::vector<RatVec> basis;
    for (int c = 0; c < cols; ++c) {
        if (pivot_of_col[c] >= 0) continue;
        RatVec v(cols, Rat(0));
        v[c] = Rat(1);
        for (int j = 0; j < cols; ++j)
            if (pivot_of_col[j] >= 0) v[j] = -a[pivot_of_col[j]][c];
        basis.push_back(std::move(v));
    }
    return basis;
}

// Primitive integer vector on the line spanned by v, first nonzero entry > 0.
inline std::vector<int64_t> primitive_int_vector(const RatVec& v) {
    int64_t den = 1;
    for (const Rat& x : v) den = checked_mul(den / std::gcd(den, x.den), x.den);
    std::vector<int64_t> w(v.size());
    int64_t g = 0;
    for (size_t i = 0; i < v.size(); ++i) {
        w[i] = checked_mul(v[i].num, den / v[i].den);
        g = std::gcd(g, w[i] < 0 ? -w[i] : w[i]);
    }
    CHEVREP_CHECK(g > 0, "primitive_int_vector: zero vector");
    for (auto& x : w) x /= g;
    for (auto& x : w) {
        if (x == 0) continue;
        if (x < 0)
            for (auto& y : w) y = -y;
        break;
    }
    return w;
}

// The sub-basis images of an algebra inclusion with identical simple-node
// numbering: basis order h_1..h_rank then e_gamma by sub root id, acting on
// the span of the ambient positive root vectors whose coefficient at the
// dropped node equals one.
inline RepSpace level_one_rep(char sub_type, int sub_rank, char amb_type, int amb_rank,
                              uint32_t p) {
    ChevalleyZ amb{RootSystem(amb_type, amb_rank)};
    ChevalleyZ sub{RootSystem(sub_type, sub_rank)};
    int R = sub.rank();
    int twoP = sub.nroots();

    std::vector<int> to_amb(twoP);
    for (int id = 0; id < twoP; ++id) {
        const RootVec& g = sub.root_of(id);
        RootVec ext(amb.rank(), 0);
        for (int i = 0; i < R; ++i) ext[i] = g[i];
        to_amb[id] = amb.id_of(ext);
    }
    // the inclusion must preserve the structure constants: both systems order
    // the shared roots identically, so the extraspecial sign choices coincide
    for (int a = 0; a < twoP; ++a)
        for (int b = 0; b < twoP; ++b) {
            int s = sub.sum_id(a, b);
            int sa = amb.sum_id(to_amb[a], to_amb[b]);
            if (s == -1) CHEVREP_CHECK(sa == -1, "sub root sum escapes the subsystem");
            if (s == -2) CHEVREP_CHECK(sa == -2, "opposite roots do not map to opposites");
            if (s >= 0) {
                CHEVREP_CHECK(sa == to_amb[s], "root sum not respected by the inclusion");
                CHEVREP_CHECK(amb.n_const(to_amb[a], to_amb[b]) == sub.n_const(a, b),
                              "structure constants differ across the inclusion");
            }
        }

    int node = amb.rank();
    std::vector<int> mod_ids;
    std::map<int, int> slot;
    for (int id = 0; id < amb.npos(); ++id)
        if (amb.root_of(id)[node - 1] == 1) {
            slot[id] = static_cast<int>(mod_ids.size());
            mod_ids.push_back(id);
        }
    int dim = static_cast<int>(mod_ids.size());

    std::vector<IntMat> images(static_cast<size_t>(R + twoP), IntMat(dim, dim));
    for (int j = 0; j < R; ++j)
        for (int k = 0; k < dim; ++k)
            images[static_cast<size_t>(j)].set(k, k, amb.cartan_action_sc(j, mod_ids[k]));
    for (int id = 0; id < twoP; ++id) {
        IntMat x(dim, dim);
        int a = to_amb[id];
        for (int k = 0; k < dim; ++k) {
            int s = amb.sum_id(a, mod_ids[k]);
            if (s < 0) continue;  // level 0 plus level 1 cannot cancel
            auto it = slot.find(s);
            CHEVREP_CHECK(it != slot.end(), "root action leaves the level-one slice");
            x.set(it->second, k, amb.n_const(a, mod_ids[k]));
        }
        CHEVREP_CHECK(!x.is_zero(), "zero root image on the level-one slice");
        images[static_cast<size_t>(R + id)] = x;
    }

    // weight property check, as in the classical realization
    for (int id = 0; id < twoP; ++id)
        for (int j = 0; j < R; ++j) {
            IntMat lhs = detail::mat_bracket(images[static_cast<size_t>(j)],
                                             images[static_cast<size_t>(R + id)]);
            CHEVREP_CHECK(lhs == images[static_cast<size_t>(R + id)].scaled(
                                     sub.cartan_action_sc(j, id)),
                          "level-one root image has the wrong weight");
        }
    for (int i = 1; i <= R; ++i) {
        int id = sub.id_of(sub.rs().simple_root(i));
        IntMat h = detail::mat_bracket(images[static_cast<size_t>(R + id)],
                                       images[static_cast<size_t>(R + sub.neg_id(id))]);
        CHEVREP_CHECK(h == images[static_cast<size_t>(i - 1)],
                      "simple coroot image mismatch on the level-one slice");
    }

    return RepSpace{"V_min", p, dim, R, std::move(images)};
}

// Restriction of an ambient integer module to the fixed subalgebra of a
// diagram folding.  orbits[i] lists the ambient simple nodes folding onto the
// i-th sub simple root; the module is U_Z^- applied to the highest weight
// vector of fundamental weight hw_node, a lattice of rank expect_dim.
inline RepSpace folded_rep(const ChevalleyZ& sub, const ChevalleyZ& amb, const RepSpace& base,
                           const std::vector<std::vector<int>>& orbits, int hw_node,
                           int expect_dim, uint32_t p) {
    int R = sub.rank();
    int P = sub.npos();
    int n = base.dim;

    std::vector<IntMat> gen_e(R, IntMat(n, n)), gen_f(R, IntMat(n, n)), gen_h(R, IntMat(n, n));
    for (int i = 0; i < R; ++i) {
        for (int node : orbits[i]) {
            int id = amb.id_of(amb.rs().simple_root(node));
            gen_e[i] = gen_e[i].add(base.images[static_cast<size_t>(base.rank + id)]);
            gen_f[i] = gen_f[i].add(
                base.images[static_cast<size_t>(base.rank + amb.neg_id(id))]);
            gen_h[i] = gen_h[i].add(base.images[static_cast<size_t>(node - 1)]);
        }
    }

    // folded Chevalley relations on the generators
    for (int i = 0; i < R; ++i)
        for (int j = 0; j < R; ++j) {
            int idj = sub.id_of(sub.rs().simple_root(j + 1));
            CHEVREP_CHECK(detail::mat_bracket(gen_h[i], gen_e[j]) ==
                              gen_e[j].scaled(sub.cartan_action_sc(i, idj)),
                          "folded raising generator has the wrong weight");
            CHEVREP_CHECK(detail::mat_bracket(gen_h[i], gen_f[j]) ==
                              gen_f[j].scaled(-sub.cartan_action_sc(i, idj)),
                          "folded lowering generator has the wrong weight");
            IntMat ef = detail::mat_bracket(gen_e[i], gen_f[j]);
            CHEVREP_CHECK(ef == (i == j ? gen_h[i] : IntMat(n, n)),
                          "folded generators are not Chevalley-paired");
        }

    // all root images on the ambient module, by the usual bracket recursion
    std::vector<IntMat> big(static_cast<size_t>(R + 2 * P), IntMat(n, n));
    for (int i = 0; i < R; ++i) {
        big[static_cast<size_t>(i)] = gen_h[i];
        int id = sub.id_of(sub.rs().simple_root(i + 1));
        big[static_cast<size_t>(R + id)] = gen_e[i];
        big[static_cast<size_t>(R + sub.neg_id(id))] = gen_f[i];
    }
    for (int g = 0; g < P; ++g) {
        const RootVec& gamma = sub.root_of(g);
        if (root_height(gamma) < 2) continue;
        int xi = -1, rest = -1;
        for (int i = 1; i <= R; ++i) {
            RootVec d = root_add(gamma, root_neg(sub.rs().simple_root(i)));
            if (sub.rs().is_positive_root(d)) {
                xi = sub.id_of(sub.rs().simple_root(i));
                rest = sub.rs().positive_index(d);
                break;
            }
        }
        CHEVREP_CHECK(xi >= 0, "indecomposable non-simple positive root");
        int ncoef = sub.n_const(rest, xi);
        CHEVREP_CHECK(ncoef != 0, "vanishing structure constant on a root sum");
        big[static_cast<size_t>(R + g)] =
            detail::mat_bracket(big[static_cast<size_t>(R + rest)],
                                big[static_cast<size_t>(R + xi)])
                .exact_div(ncoef);
        big[static_cast<size_t>(R + sub.neg_id(g))] =
            detail::mat_bracket(big[static_cast<size_t>(R + sub.neg_id(rest))],
                                big[static_cast<size_t>(R + sub.neg_id(xi))])
                .exact_div(-ncoef);
    }
    for (int id = 0; id < 2 * P; ++id) {
        CHEVREP_CHECK(!big[static_cast<size_t>(R + id)].is_zero(), "zero folded root image");
        for (int j = 0; j < R; ++j)
            CHEVREP_CHECK(detail::mat_bracket(big[static_cast<size_t>(j)],
                                              big[static_cast<size_t>(R + id)]) ==
                              big[static_cast<size_t>(R + id)].scaled(
                                  sub.cartan_action_sc(j, id)),
                          "folded root image has the wrong weight");
    }

    // highest weight vector: killed by all raisings, weight = hw_node-th
    // fundamental weight.  The complement of the wanted submodule is trivial
    // for the folded subalgebra, so the cut is one-dimensional.
    IntMat cond((R + R) * n, n);
    for (int i = 0; i < R; ++i)
        for (int r = 0; r < n; ++r)
            for (int c = 0; c < n; ++c) {
                cond.set(i * n + r, c, gen_e[i].at(r, c));
                int64_t hv = gen_h[i].at(r, c);
                if (r == c && i == hw_node - 1) hv -= 1;
                cond.set((R + i) * n + r, c, hv);
            }
    std::vector<RatVec> ker = rational_kernel(cond);
    CHEVREP_CHECK(ker.size() == 1, "highest weight space is not a line");
    std::vector<int64_t> vplus = primitive_int_vector(ker[0]);

    // divided powers of the folded lowerings generate the minimal lattice
    std::vector<IntMat> lowering;
    for (int i = 0; i < R; ++i) {
        IntMat term = gen_f[i];
        int k = 1;
        while (!term.is_zero()) {
            CHEVREP_CHECK(k <= n, "folded lowering is not nilpotent");
            lowering.push_back(term);
            ++k;
            term = term.mul(gen_f[i]).exact_div(k);
        }
    }
    std::vector<std::vector<int64_t>> basis = hnf_rows({vplus});
    while (true) {
        std::vector<std::vector<int64_t>> cand = basis;
        for (const auto& b : basis)
            for (const auto& op : lowering) cand.push_back(apply_int(op, b));
        auto next = hnf_rows(std::move(cand));
        if (next == basis) break;
        basis = std::move(next);
    }
    CHEVREP_CHECK(static_cast<int>(basis.size()) == expect_dim,
                  "folded lattice has unexpected rank");

    std::vector<int> pivot(basis.size());
    for (size_t s = 0; s < basis.size(); ++s) {
        int c = 0;
        while (basis[s][c] == 0) ++c;
        pivot[s] = c;
    }
    // matrix of x on the lattice basis; divisibility is exactly stability
    auto restrict_to_lattice = [&](const IntMat& x) {
        IntMat y(expect_dim, expect_dim);
        for (int r = 0; r < expect_dim; ++r) {
            std::vector<int64_t> w = apply_int(x, basis[static_cast<size_t>(r)]);
            for (int s = 0; s < expect_dim; ++s) {
                int64_t lead = basis[static_cast<size_t>(s)][pivot[s]];
                CHEVREP_CHECK(w[pivot[s]] % lead == 0, "lattice not stable under the action");
                int64_t c = w[pivot[s]] / lead;
                if (c)
                    for (int j = 0; j < static_cast<int>(w.size()); ++j)
                        w[j] = checked_sub(w[j], checked_mul(c, basis[static_cast<size_t>(s)][j]));
                y.set(s, r, c);
            }
            for (int64_t v : w) CHEVREP_CHECK(v == 0, "lattice not stable under the action");
        }
        return y;
    };

    std::vector<IntMat> images;
    images.reserve(big.size());
    for (const auto& x : big) images.push_back(restrict_to_lattice(x));
    return RepSpace{"V_min", p, expect_dim, R, std::move(images)};
}

}  // namespace detail

// Minimal faithful module of an exceptional type: dimensions 7 (G2), 26 (F4),
// 27 (E6) and 56 (E7).  For F4 the module is the 26-dimensional one even at
// p = 3, where it carries a one-dimensional radical rather than dropping to
// the 25-dimensional irreducible.
inline RepSpace minimal_module(char type, int rank, uint32_t p) {
    if (!is_prime(p)) throw std::invalid_argument("minimal_module needs a prime characteristic");
    bool known = (type == 'G' && rank == 2) || (type == 'F' && rank == 4) ||
                 (type == 'E' && (rank == 6 || rank == 7));
    if (!known)
        throw std::invalid_argument("no minimal module shipped for this type and rank");

    // images are integral and characteristic-free; single-threaded use assumed
    static std::map<std::string, RepSpace> cache;
    std::string key{type};
    key += static_cast<char>('0' + rank);
    auto it = cache.find(key);
    if (it == cache.end()) {
        RepSpace built;
        if (type == 'E') {
            built = rank == 6 ? detail::level_one_rep('E', 6, 'E', 7, p)
                              : detail::level_one_rep('E', 7, 'E', 8, p);
            CHEVREP_CHECK(built.dim == (rank == 6 ? 27 : 56), "level-one slice size is off");
        } else if (type == 'F') {
            ChevalleyZ amb{RootSystem('E', 6)};
            ChevalleyZ sub{RootSystem('F', 4)};
            RepSpace base = detail::level_one_rep('E', 6, 'E', 7, p);
            built = detail::folded_rep(sub, amb, base, {{2}, {4}, {3, 5}, {1, 6}}, 4, 26, p);
        } else {
            ChevalleyZ amb{RootSystem('D', 4)};
            ChevalleyZ sub{RootSystem('G', 2)};
            RepSpace base = classical_realization('D', 4, p).natural;
            built = detail::folded_rep(sub, amb, base, {{1, 3, 4}, {2}}, 1, 7, p);
        }
        built.p = 0;
        it = cache.emplace(std::move(key), std::move(built)).first;
    }
    RepSpace out = it->second;
    out.p = p;
    return out;
}

// Adjoint module of a structure-constant algebra, on the algebra's own basis
// and cocharacter lattice.
inline RepSpace adjoint_module(const ChevalleyAlgebra& alg) {
    int R = alg.rank();
    int d = alg.dim();
    std::vector<IntMat> images(static_cast<size_t>(d), IntMat(d, d));
    for (int j = 0; j < R; ++j)
        for (int b = 0; b < alg.nroots(); ++b)
            images[static_cast<size_t>(j)].set(R + b, R + b, alg.cartan_action(j, b));
    for (int id = 0; id < alg.nroots(); ++id)
        images[static_cast<size_t>(R + id)] = alg.ad_int_root(id);
    return RepSpace{"Lie_adjoint", alg.p(), d, R, std::move(images)};
}

}  // namespace chevrep
