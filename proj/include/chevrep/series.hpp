// Derived and lower central series, normalizers, centralizers, and derivation
// algebras of subalgebras over a prime field.  Everything works on Subspace
// values in a fixed ambient space; the bracket is passed as a callable so the
// same routines serve Chevalley algebras and hand-built structure constants.
//
// Series chains stop as soon as a term repeats: the repeated term is not
// appended, so a perfect subalgebra yields a one-term chain and a nilpotent
// one ends in the zero space.

#pragma once

#include <cstdint>
#include <functional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "chevrep/chevalley.hpp"
#include "chevrep/matrix.hpp"

namespace chevrep {

using BracketFn = std::function<GfpVec(const GfpVec&, const GfpVec&)>;

namespace detail {

// Span of [a_i, b_j] over the two row bases.
inline Subspace bracket_span(const BracketFn& bracket, const Subspace& a, const Subspace& b) {
    Subspace out(a.p(), a.ambient());
    for (const auto& x : a.rows())
        for (const auto& y : b.rows()) out.add_row(bracket(x, y));
    return out;
}

inline std::vector<Subspace> series_chain(const BracketFn& bracket, const Subspace& sub,
                                          bool lower_central, const char* what) {
    std::vector<Subspace> chain = {sub};
    while (true) {
        const Subspace& cur = chain.back();
        Subspace next = lower_central ? bracket_span(bracket, sub, cur)
                                      : bracket_span(bracket, cur, cur);
        if (chain.size() == 1 && !cur.contains_space(next))
            throw std::invalid_argument(std::string(what) + ": subspace is not bracket-closed");
        // every later term is contained in its predecessor, so equal dimension
        // means the chain has become stationary
        if (next.dim() == cur.dim()) break;
        chain.push_back(std::move(next));
    }
    return chain;
}

}  // namespace detail

inline std::vector<Subspace> derived_series(const BracketFn& bracket, const Subspace& sub) {
    return detail::series_chain(bracket, sub, false, "derived_series");
}

inline std::vector<Subspace> lower_central_series(const BracketFn& bracket, const Subspace& sub) {
    return detail::series_chain(bracket, sub, true, "lower_central_series");
}

inline std::vector<int> series_dims(const std::vector<Subspace>& chain) {
    std::vector<int> out;
    out.reserve(chain.size());
    for (const auto& s : chain) out.push_back(s.dim());
    return out;
}

// ---------------------------------------------------------------------------
// Normalizer N(W) = { x : [x, w] in W for all w in W }.
//
// Membership of [x, c_i] in W is expressed through the residue against W's
// echelon basis: one condition row per (basis vector c_i, non-pivot
// coordinate).  The rows are streamed into a packed kernel solver at p = 2
// and accumulated in an echelon space otherwise.
// ---------------------------------------------------------------------------
inline Subspace normalizer(uint32_t p, int n, const BracketFn& bracket, const Subspace& sub) {
    CHEVREP_CHECK(sub.p() == p && sub.ambient() == n, "normalizer: ambient mismatch");
    int s = sub.dim();
    if (s == 0 || s == n) return Subspace::full(p, n);

    std::vector<int> nonpiv;
    {
        std::vector<char> is_pivot(n, 0);
        for (int c : sub.pivots()) is_pivot[c] = 1;
        for (int c = 0; c < n; ++c)
            if (!is_pivot[c]) nonpiv.push_back(c);
    }
    GfpVec unit(n, 0);

    if (p == 2) {
        int wpr = (n + 63) / 64;
        std::vector<std::vector<uint64_t>> arows;  // packed rows of ad(c_i)
        auto load = [&](int i) {
            arows.assign(n, std::vector<uint64_t>(wpr, 0));
            for (int j = 0; j < n; ++j) {
                std::fill(unit.begin(), unit.end(), 0);
                unit[j] = 1;
                GfpVec col = bracket(sub.rows()[i], unit);
                for (int r = 0; r < n; ++r)
                    if (col[r]) arows[r][j >> 6] |= uint64_t(1) << (j & 63);
            }
        };
        int i = 0;
        size_t ci = 0;
        load(0);
        auto row_fn = [&](std::vector<uint64_t>& out) -> bool {
            if (i >= s) return false;
            int c = nonpiv[ci];
            std::copy(arows[c].begin(), arows[c].end(), out.begin());
            for (int t = 0; t < s; ++t)
                if (sub.rows()[t][c])
                    for (int k = 0; k < wpr; ++k) out[k] ^= arows[sub.pivots()[t]][k];
            if (++ci == nonpiv.size()) {
                ci = 0;
                if (++i < s) load(i);
            }
            return true;
        };
        return Subspace::from_rows(unpack_gf2(kernel_of_gf2_stream(n, row_fn)));
    }

    PrimeField F(p);
    Subspace cons(p, n);  // row space of the condition system
    std::vector<GfpVec> arows(n);
    GfpVec rowv(n);
    for (int i = 0; i < s && cons.dim() < n; ++i) {
        for (int j = 0; j < n; ++j) {
            std::fill(unit.begin(), unit.end(), 0);
            unit[j] = 1;
            GfpVec col = bracket(sub.rows()[i], unit);
            if (j == 0)
                for (int r = 0; r < n; ++r) arows[r].assign(n, 0);
            for (int r = 0; r < n; ++r) arows[r][j] = col[r];
        }
        for (int c : nonpiv) {
            rowv = arows[c];
            for (int t = 0; t < s; ++t) {
                uint32_t f = sub.rows()[t][c];
                if (!f) continue;
                const GfpVec& ar = arows[sub.pivots()[t]];
                for (int k = 0; k < n; ++k) rowv[k] = F.sub(rowv[k], F.mul(f, ar[k]));
            }
            cons.add_row(rowv);
            if (cons.dim() == n) break;
        }
    }
    if (cons.dim() == n) return Subspace(p, n);
    return Subspace::from_rows(kernel_of(cons.basis()));
}

// ---------------------------------------------------------------------------
// Derivation algebra of a bracket-closed subspace W of dimension d.
//
// A derivation is a d-by-d matrix M over GF(p), flattened row-major into d^2
// unknowns.  With structure constants g^k_{ij} in the echelon basis, the
// Leibniz rule for the pair (i, j) gives, per output component k:
//
//   sum_s g^s_{ij} M[k][s] - sum_r g^k_{rj} M[r][i] - sum_r g^k_{ir} M[r][j] = 0
//
// alg is dim Der(W); alg_prime is the dimension of the span of pairwise
// commutators of a kernel basis, i.e. dim [Der(W), Der(W)].
// ---------------------------------------------------------------------------
struct DerivationDims {
    int alg = 0;
    int alg_prime = 0;
};

inline DerivationDims derivation_algebra(uint32_t p, const BracketFn& bracket, const Subspace& sub,
                                         bool want_derived = true) {
    int d = sub.dim();
    if (d == 0) return {0, 0};

    // structure constants; the bracket of two members must stay inside
    std::vector<std::vector<GfpVec>> g(d, std::vector<GfpVec>(d));
    PrimeField F(p);
    for (int i = 0; i < d; ++i) {
        g[i][i] = GfpVec(d, 0);
        for (int j = i + 1; j < d; ++j) {
            GfpVec br = bracket(sub.rows()[i], sub.rows()[j]);
            if (!sub.contains(br))
                throw std::invalid_argument("derivation_algebra: subspace is not bracket-closed");
            g[i][j] = sub.coords(br);
            GfpVec neg(d);
            for (int k = 0; k < d; ++k) neg[k] = F.neg(g[i][j][k]);
            g[j][i] = std::move(neg);
        }
    }

    int ncols = d * d;
    DerivationDims out;

    if (p == 2) {
        int i = 0, j = 1, k = 0;
        auto row_fn = [&](std::vector<uint64_t>& row) -> bool {
            if (i >= d - 1) return false;
            auto flip = [&row](int idx) { row[idx >> 6] ^= uint64_t(1) << (idx & 63); };
            for (int t = 0; t < d; ++t) {
                if (g[i][j][t]) flip(k * d + t);
                if (g[t][j][k]) flip(t * d + i);
                if (g[i][t][k]) flip(t * d + j);
            }
            if (++k == d) {
                k = 0;
                if (++j == d) j = ++i + 1;
            }
            return true;
        };
        BitMat K = kernel_of_gf2_stream(ncols, row_fn);
        out.alg = K.rows();
        if (!want_derived || out.alg == 0) return out;

        std::vector<BitMat> ders;
        ders.reserve(out.alg);
        for (int r = 0; r < K.rows(); ++r) {
            BitMat m(d, d);
            const uint64_t* src = K.row_ptr(r);
            for (int idx = 0; idx < ncols; ++idx)
                if ((src[idx >> 6] >> (idx & 63)) & 1) m.set(idx / d, idx % d, 1);
            ders.push_back(std::move(m));
        }
        Gf2Echelon span(ncols);
        int wpr = (ncols + 63) / 64;
        for (size_t a = 0; a < ders.size(); ++a)
            for (size_t b = a + 1; b < ders.size(); ++b) {
                BitMat ab = ders[a].mul(ders[b]);
                BitMat ba = ders[b].mul(ders[a]);
                std::vector<uint64_t> flat(wpr, 0);
                for (int r = 0; r < d; ++r) {
                    const uint64_t* x = ab.row_ptr(r);
                    const uint64_t* y = ba.row_ptr(r);
                    for (int c = 0; c < d; ++c) {
                        int w = c >> 6;
                        if (((x[w] ^ y[w]) >> (c & 63)) & 1) {
                            int idx = r * d + c;
                            flat[idx >> 6] |= uint64_t(1) << (idx & 63);
                        }
                    }
                }
                span.add_row(flat);
            }
        out.alg_prime = span.rank();
        return out;
    }

    int i = 0, j = 1, k = 0;
    auto row_fn = [&](GfpVec& row) -> bool {
        if (i >= d - 1) return false;
        for (int t = 0; t < d; ++t) {
            row[k * d + t] = F.add(row[k * d + t], g[i][j][t]);
            row[t * d + i] = F.sub(row[t * d + i], g[t][j][k]);
            row[t * d + j] = F.sub(row[t * d + j], g[i][t][k]);
        }
        if (++k == d) {
            k = 0;
            if (++j == d) j = ++i + 1;
        }
        return true;
    };
    GfpMat K = kernel_of_gfp_stream(p, ncols, row_fn);
    out.alg = K.rows();
    if (!want_derived || out.alg == 0) return out;

    std::vector<GfpMat> ders;
    ders.reserve(out.alg);
    for (int r = 0; r < K.rows(); ++r) {
        GfpMat m(p, d, d);
        for (int idx = 0; idx < ncols; ++idx) m.set(idx / d, idx % d, K.at(r, idx));
        ders.push_back(std::move(m));
    }
    Subspace span(p, ncols);
    for (size_t a = 0; a < ders.size(); ++a)
        for (size_t b = a + 1; b < ders.size(); ++b) {
            GfpMat c = ders[a].mul(ders[b]).sub(ders[b].mul(ders[a]));
            GfpVec flat(ncols);
            for (int r = 0; r < d; ++r)
                for (int cc = 0; cc < d; ++cc) flat[r * d + cc] = c.at(r, cc);
            span.add_row(flat);
        }
    out.alg_prime = span.dim();
    return out;
}

// ---------------------------------------------------------------------------
// Centralizers inside a Chevalley algebra.  For a nilpotent element this is
// ker ad(x); for a unipotent given by its adjoint action it is the fixed
// space ker(Ad(u) - 1).  Both are bracket-closed, so the series routines
// accept them directly.
// ---------------------------------------------------------------------------
inline Subspace centralizer(const ChevalleyAlgebra& alg, const GfpVec& x) {
    return Subspace::from_rows(kernel_of(alg.ad_matrix(x)));
}

inline Subspace centralizer(const ChevalleyAlgebra& alg, const GfpMat& adu) {
    CHEVREP_CHECK(adu.rows() == alg.dim() && adu.cols() == alg.dim(),
                  "centralizer: adjoint action has wrong shape");
    GfpMat m = adu.sub(GfpMat::identity(adu.p(), adu.rows()));
    return Subspace::from_rows(kernel_of(m));
}

// Convenience overloads bound to a Chevalley algebra's bracket.
inline BracketFn algebra_bracket(const ChevalleyAlgebra& alg) {
    return [&alg](const GfpVec& a, const GfpVec& b) { return alg.bracket(a, b); };
}

inline std::vector<Subspace> derived_series(const ChevalleyAlgebra& alg, const Subspace& sub) {
    return derived_series(algebra_bracket(alg), sub);
}

inline std::vector<Subspace> lower_central_series(const ChevalleyAlgebra& alg, const Subspace& sub) {
    return lower_central_series(algebra_bracket(alg), sub);
}

inline Subspace normalizer(const ChevalleyAlgebra& alg, const Subspace& sub) {
    return normalizer(alg.p(), alg.dim(), algebra_bracket(alg), sub);
}

inline DerivationDims derivation_algebra(const ChevalleyAlgebra& alg, const Subspace& sub,
                                         bool want_derived = true) {
    return derivation_algebra(alg.p(), algebra_bracket(alg), sub, want_derived);
}

}  // namespace chevrep
