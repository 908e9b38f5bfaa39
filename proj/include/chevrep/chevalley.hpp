// chevalley.hpp - Chevalley structure constants with positive extraspecial
// pairs, the integer form, structure-constant algebras over GF(p) on either
// cocharacter lattice, adjoint root-group action, and module scaffolding.
#pragma once

#include <string>
#include <vector>

#include "chevrep/intmat.hpp"
#include "chevrep/matrix.hpp"
#include "chevrep/rootsys.hpp"

namespace chevrep {

enum class Lattice { simply_connected, adjoint };

inline const char* lattice_name(Lattice l) {
    return l == Lattice::simply_connected ? "sc" : "ad";
}

// ---------------------------------------------------------------------------
// Integer form: full table of structure constants N_{a,b}, coroots in both
// Cartan bases, and Cartan pairings.  Root ids: 0..P-1 the positive roots in
// canonical order, P..2P-1 their negatives in the same order.
// ---------------------------------------------------------------------------
class ChevalleyZ {
public:
    explicit ChevalleyZ(RootSystem rs) : rs_(std::move(rs)) { build(); }

    const RootSystem& rs() const { return rs_; }
    int rank() const { return rs_.rank(); }
    int npos() const { return rs_.num_positive(); }
    int nroots() const { return 2 * npos(); }

    const RootVec& root_of(int id) const { return all_roots_[id]; }
    int neg_id(int id) const { return id < npos() ? id + npos() : id - npos(); }
    bool is_positive_id(int id) const { return id < npos(); }

    int id_of(const RootVec& r) const {
        if (rs_.is_positive_root(r)) return rs_.positive_index(r);
        RootVec n = root_neg(r);
        CHEVREP_CHECK(rs_.is_positive_root(n), "id_of: not a root");
        return npos() + rs_.positive_index(n);
    }

    // N_{a,b}; zero when root(a)+root(b) is not a root.
    int n_const(int a, int b) const { return n_[static_cast<size_t>(a) * nroots() + b]; }

    // id of root(a)+root(b); -1 if not a root, -2 if the sum is zero.
    int sum_id(int a, int b) const { return sum_[static_cast<size_t>(a) * nroots() + b]; }

    // r = max { k : root(b) - k root(a) is a root }
    int string_down(int a, int b) const {
        RootVec cur = root_of(b);
        const RootVec& step = root_of(a);
        int r = 0;
        while (true) {
            cur = root_add(cur, root_neg(step));
            bool zero = true;
            for (int c : cur) zero = zero && c == 0;
            if (zero || !rs_.is_root(cur)) break;
            ++r;
        }
        return r;
    }

    // Coroot coordinates of root(id): over the simple coroots (sc) or the
    // fundamental coweights (ad).
    const std::vector<int>& coroot_sc(int id) const { return coroot_sc_[id]; }
    const std::vector<int>& coroot_ad(int id) const { return coroot_ad_[id]; }

    // <root(id), basis_j> for the j-th Cartan basis vector, 0-based j.
    int cartan_action_sc(int j, int id) const { return act_sc_[static_cast<size_t>(id) * rank() + j]; }
    int cartan_action_ad(int j, int id) const { return act_ad_[static_cast<size_t>(id) * rank() + j]; }

private:
    void build() {
        int P = npos();
        int n2 = 2 * P;
        all_roots_.reserve(n2);
        for (const auto& r : rs_.positive_roots()) all_roots_.push_back(r);
        for (const auto& r : rs_.positive_roots()) all_roots_.push_back(root_neg(r));

        sum_.assign(static_cast<size_t>(n2) * n2, -1);
        for (int a = 0; a < n2; ++a)
            for (int b = 0; b < n2; ++b) {
                RootVec s = root_add(all_roots_[a], all_roots_[b]);
                bool zero = true;
                for (int c : s) zero = zero && c == 0;
                if (zero)
                    sum_[static_cast<size_t>(a) * n2 + b] = -2;
                else if (rs_.is_root(s))
                    sum_[static_cast<size_t>(a) * n2 + b] = id_of(s);
            }

        // positive-pair constants, by height of the sum, from extraspecial pairs
        std::vector<std::vector<int>> npp(P, std::vector<int>(P, 0));
        auto inner_id = [&](int a, int b) { return rs_.inner(all_roots_[a], all_roots_[b]); };
        // mixed(h, a) = N_{e_h, e_{-a}} for positive ids h != a with h-a a root
        auto mixed = [&](int h, int a) -> Rat {
            RootVec d = root_add(all_roots_[h], root_neg(all_roots_[a]));
            CHEVREP_CHECK(rs_.is_root(d), "mixed: difference not a root");
            if (rs_.is_positive_root(d)) {
                int di = rs_.positive_index(d);
                return Rat(npp[di][a]) * inner_id(di, di) / inner_id(h, h);
            }
            int di = rs_.positive_index(root_neg(d));
            return -(Rat(npp[h][di]) * inner_id(di, di) / inner_id(a, a));
        };

        for (int g = 0; g < P; ++g) {  // canonical order is height-sorted
            if (root_height(all_roots_[g]) < 2) continue;
            // extraspecial pair: minimal xi with gamma - xi positive
            int xi = -1, eta = -1;
            for (int cand = 0; cand < P; ++cand) {
                RootVec rest = root_add(all_roots_[g], root_neg(all_roots_[cand]));
                if (rs_.is_positive_root(rest)) {
                    xi = cand;
                    eta = rs_.positive_index(rest);
                    break;
                }
            }
            CHEVREP_CHECK(xi >= 0, "no extraspecial pair for a decomposable root");
            int r = string_down(xi, eta);
            npp[xi][eta] = r + 1;
            npp[eta][xi] = -(r + 1);
            // remaining pairs summing to gamma, via the four-term identity on
            // (xi, eta, -alpha, -beta)
            for (int a = 0; a < P; ++a) {
                if (a == xi || a == eta) continue;
                RootVec brv = root_add(all_roots_[g], root_neg(all_roots_[a]));
                if (!rs_.is_positive_root(brv)) continue;
                int b = rs_.positive_index(brv);
                if (a > b) continue;  // fill unordered pair once
                Rat total(0);
                RootVec d1 = root_add(all_roots_[eta], root_neg(all_roots_[a]));
                if (rs_.is_root(d1))
                    total = total + mixed(eta, a) * mixed(xi, b) / rs_.inner(d1, d1);
                RootVec d2 = root_add(all_roots_[xi], root_neg(all_roots_[a]));
                if (rs_.is_root(d2))
                    total = total - mixed(xi, a) * mixed(eta, b) / rs_.inner(d2, d2);
                Rat nab = inner_id(g, g) * total / Rat(npp[xi][eta]);
                npp[a][b] = static_cast<int>(nab.as_int());
                npp[b][a] = -npp[a][b];
            }
        }

        // full table over all sign patterns
        n_.assign(static_cast<size_t>(n2) * n2, 0);
        auto setn = [&](int a, int b, int v) { n_[static_cast<size_t>(a) * n2 + b] = static_cast<int16_t>(v); };
        for (int a = 0; a < P; ++a)
            for (int b = 0; b < P; ++b) {
                if (sum_id(a, b) >= 0) setn(a, b, npp[a][b]);
                if (sum_id(a + P, b + P) >= 0) setn(a + P, b + P, -npp[a][b]);
            }
        for (int a = 0; a < P; ++a)
            for (int b = 0; b < P; ++b) {
                if (a == b || sum_id(a, b + P) < 0) continue;
                Rat v = mixed(a, b);
                int iv = static_cast<int>(v.as_int());
                setn(a, b + P, iv);
                setn(b + P, a, -iv);
            }

        // Chevalley's theorem as a construction check: |N_{a,b}| = r+1
        for (int a = 0; a < n2; ++a)
            for (int b = 0; b < n2; ++b) {
                if (sum_id(a, b) < 0) {
                    CHEVREP_CHECK(n_const(a, b) == 0, "nonzero N on a non-root sum");
                    continue;
                }
                int r = string_down(a, b);
                CHEVREP_CHECK(std::abs(n_const(a, b)) == r + 1, "|N| != r+1");
                CHEVREP_CHECK(n_const(a, b) == -n_const(b, a), "N not antisymmetric");
            }

        // coroots and Cartan pairings on both lattices
        int R = rank();
        coroot_sc_.resize(n2);
        coroot_ad_.resize(n2);
        act_sc_.assign(static_cast<size_t>(n2) * R, 0);
        act_ad_.assign(static_cast<size_t>(n2) * R, 0);
        for (int id = 0; id < n2; ++id) {
            const RootVec& g = all_roots_[id];
            std::vector<int> sc(R), ad(R);
            for (int j = 0; j < R; ++j) {
                Rat c = Rat(g[j]) * rs_.inner(rs_.simple_root(j + 1), rs_.simple_root(j + 1)) /
                        rs_.len2(g);
                sc[j] = static_cast<int>(c.as_int());
                ad[j] = rs_.pairing(rs_.simple_root(j + 1), g);
            }
            coroot_sc_[id] = std::move(sc);
            coroot_ad_[id] = std::move(ad);
            for (int j = 0; j < R; ++j) {
                int v = 0;
                for (int i = 0; i < R; ++i) v += g[i] * rs_.cartan()[i][j];
                act_sc_[static_cast<size_t>(id) * R + j] = v;
                act_ad_[static_cast<size_t>(id) * R + j] = g[j];
            }
        }
    }

    RootSystem rs_;
    std::vector<RootVec> all_roots_;
    std::vector<int16_t> n_;
    std::vector<int> sum_;
    std::vector<std::vector<int>> coroot_sc_, coroot_ad_;
    std::vector<int> act_sc_, act_ad_;
};

inline ChevalleyZ structure_constants(const RootSystem& rs) { return ChevalleyZ(rs); }

// ---------------------------------------------------------------------------
// Structure-constant Lie algebra over GF(p).  Basis order: h_1..h_rank for the
// chosen lattice, then e_gamma over root ids.
// ---------------------------------------------------------------------------
class ChevalleyAlgebra {
public:
    ChevalleyAlgebra(char type, int rank, uint32_t p, Lattice lat)
        : z_(RootSystem(type, rank)), p_(p), lattice_(lat) {
        if (p != 0 && !is_prime(p)) throw std::invalid_argument("p must be prime or 0");
    }
    ChevalleyAlgebra(RootSystem rs, uint32_t p, Lattice lat)
        : z_(std::move(rs)), p_(p), lattice_(lat) {
        if (p != 0 && !is_prime(p)) throw std::invalid_argument("p must be prime or 0");
    }

    const ChevalleyZ& z() const { return z_; }
    const RootSystem& rs() const { return z_.rs(); }
    uint32_t p() const { return p_; }
    Lattice lattice() const { return lattice_; }
    int rank() const { return z_.rank(); }
    int nroots() const { return z_.nroots(); }
    int dim() const { return rank() + nroots(); }

    int root_basis_index(int root_id) const { return rank() + root_id; }

    const std::vector<int>& coroot(int id) const {
        return lattice_ == Lattice::simply_connected ? z_.coroot_sc(id) : z_.coroot_ad(id);
    }
    int cartan_action(int j, int id) const {
        return lattice_ == Lattice::simply_connected ? z_.cartan_action_sc(j, id)
                                                     : z_.cartan_action_ad(j, id);
    }

    GfpVec zero() const { return GfpVec(dim(), 0); }

    GfpVec basis_e(const RootVec& gamma) const {
        GfpVec v = zero();
        v[root_basis_index(z_.id_of(gamma))] = 1;
        return v;
    }

    // sum of e_gamma over the listed roots, coefficient 1 (or given signs)
    GfpVec element_from_roots(const std::vector<RootVec>& roots,
                              const std::vector<int>& signs = {}) const {
        CHEVREP_CHECK(p_ > 0, "element_from_roots needs a positive characteristic");
        PrimeField F(p_);
        GfpVec v = zero();
        for (size_t i = 0; i < roots.size(); ++i) {
            int32_t s = signs.empty() ? 1 : signs[i];
            int idx = root_basis_index(z_.id_of(roots[i]));
            v[idx] = F.add(v[idx], F.reduce(s));
        }
        return v;
    }

    GfpVec bracket(const GfpVec& x, const GfpVec& y) const {
        CHEVREP_CHECK(p_ > 0, "bracket needs a positive characteristic");
        PrimeField F(p_);
        int R = rank();
        GfpVec zv = zero();
        std::vector<int> xr, yr, xh, yh;
        for (int i = 0; i < R; ++i) {
            if (x[i]) xh.push_back(i);
            if (y[i]) yh.push_back(i);
        }
        for (int i = 0; i < nroots(); ++i) {
            if (x[R + i]) xr.push_back(i);
            if (y[R + i]) yr.push_back(i);
        }
        for (int a : xr)
            for (int b : yr) {
                uint32_t c = F.mul(x[R + a], y[R + b]);
                if (!c) continue;
                int s = z_.sum_id(a, b);
                if (s == -2) {
                    const auto& co = coroot(a);
                    for (int j = 0; j < R; ++j)
                        zv[j] = F.add(zv[j], F.mul(c, F.reduce(co[j])));
                } else if (s >= 0) {
                    int idx = R + s;
                    zv[idx] = F.add(zv[idx], F.mul(c, F.reduce(z_.n_const(a, b))));
                }
            }
        for (int j : xh)
            for (int b : yr) {
                int idx = R + b;
                zv[idx] = F.add(zv[idx], F.mul(F.mul(x[j], y[idx]), F.reduce(cartan_action(j, b))));
            }
        for (int j : yh)
            for (int a : xr) {
                int idx = R + a;
                zv[idx] = F.sub(zv[idx], F.mul(F.mul(y[j], x[idx]), F.reduce(cartan_action(j, a))));
            }
        return zv;
    }

    // matrix of y -> [x, y] in basis order
    GfpMat ad_matrix(const GfpVec& x) const {
        CHEVREP_CHECK(p_ > 0, "ad_matrix needs a positive characteristic");
        PrimeField F(p_);
        int R = rank();
        GfpMat m(p_, dim(), dim());
        auto add_at = [&](int r, int c, uint32_t v) { m.set(r, c, F.add(m.at(r, c), v)); };
        for (int j = 0; j < R; ++j) {
            if (!x[j]) continue;
            for (int d = 0; d < nroots(); ++d) {
                int32_t act = cartan_action(j, d);
                if (act) add_at(R + d, R + d, F.mul(x[j], F.reduce(act)));
            }
        }
        for (int a = 0; a < nroots(); ++a) {
            uint32_t xa = x[R + a];
            if (!xa) continue;
            for (int j = 0; j < R; ++j) {  // [e_a, h_j] = -<a, h_j> e_a
                int32_t act = cartan_action(j, a);
                if (act) add_at(R + a, j, F.mul(xa, F.reduce(-act)));
            }
            for (int d = 0; d < nroots(); ++d) {
                int s = z_.sum_id(a, d);
                if (s == -2) {
                    const auto& co = coroot(a);
                    for (int j = 0; j < R; ++j)
                        if (co[j]) add_at(j, R + d, F.mul(xa, F.reduce(co[j])));
                } else if (s >= 0) {
                    add_at(R + s, R + d, F.mul(xa, F.reduce(z_.n_const(a, d))));
                }
            }
        }
        return m;
    }

    // ad e_gamma over the integers, in the same basis
    IntMat ad_int_root(int root_id) const {
        int R = rank();
        IntMat m(dim(), dim());
        for (int j = 0; j < R; ++j)
            m.set(R + root_id, j, -cartan_action(j, root_id));
        for (int d = 0; d < nroots(); ++d) {
            int s = z_.sum_id(root_id, d);
            if (s == -2) {
                const auto& co = coroot(root_id);
                for (int j = 0; j < R; ++j) m.set(j, R + d, co[j]);
            } else if (s >= 0) {
                m.set(R + s, R + d, z_.n_const(root_id, d));
            }
        }
        return m;
    }

    // Ad x_gamma(t): sum_k t^k (ad e_gamma)^k / k!, integral by the Z-form.
    GfpMat unipotent_action(const RootVec& gamma, uint32_t t) const {
        CHEVREP_CHECK(p_ > 0, "unipotent_action needs a positive characteristic");
        IntMat a = ad_int_root(z_.id_of(gamma));
        return exp_from_int(a, t);
    }

    GfpMat unipotent_product(const std::vector<RootVec>& roots, uint32_t t = 1) const {
        GfpMat m = GfpMat::identity(p_, dim());
        for (const auto& g : roots) m = m.mul(unipotent_action(g, t));
        return m;
    }

    // shared divided-power exponential: exp(t M) mod p for nilpotent integer M
    GfpMat exp_from_int(const IntMat& mat, uint32_t t) const {
        CHEVREP_CHECK(p_ > 0, "exponential needs a positive characteristic");
        PrimeField F(p_);
        int n = mat.rows();
        GfpMat out = GfpMat::identity(p_, n);
        IntMat term = mat;
        uint32_t tk = F.reduce(t);
        int k = 1;
        while (!term.is_zero()) {
            CHEVREP_CHECK(k <= n, "exponential of a non-nilpotent matrix");
            out = out.add(term.mod_p(p_).scaled(tk));
            ++k;
            term = term.mul(mat).exact_div(k);
            tk = F.mul(tk, F.reduce(t));
        }
        return out;
    }

    // dimension of { x : [x, y] = 0 for all y }
    int center_dim() const {
        CHEVREP_CHECK(p_ > 0, "center_dim needs a positive characteristic");
        int d = dim();
        std::vector<GfpMat> ads;
        ads.reserve(d);
        for (int j = 0; j < d; ++j) {
            GfpVec b = zero();
            b[j] = 1;
            ads.push_back(ad_matrix(b));
        }
        // x is central iff for every j the j-th column map kills it: [x, b_j] = 0.
        // [x, b_j] = -[b_j, x] = -ads[j] * x.
        int bi = 0, row = 0;
        auto source = [&](GfpVec& out) {
            if (bi >= d) return false;
            out = ads[bi].row(row);
            if (++row == d) {
                row = 0;
                ++bi;
            }
            return true;
        };
        GfpMat ker = kernel_of_gfp_stream(p_, d, source);
        return ker.rows();
    }

private:
    ChevalleyZ z_;
    uint32_t p_;
    Lattice lattice_;
};

inline ChevalleyAlgebra build_algebra(char type, int rank, uint32_t p, Lattice lat) {
    return ChevalleyAlgebra(type, rank, p, lat);
}

// ---------------------------------------------------------------------------
// A finite-dimensional module given by integer matrices for every basis
// element of the algebra (h_1..h_rank, then e_gamma by root id).
// ---------------------------------------------------------------------------
struct RepSpace {
    std::string module_id;  // "V_min", "Lie_adjoint" or "classical_natural"
    uint32_t p = 0;
    int dim = 0;
    int rank = 0;
    std::vector<IntMat> images;  // length rank + nroots

    const IntMat& image_of_root(int root_id) const { return images[rank + root_id]; }

    GfpMat action(const GfpVec& x) const {
        CHEVREP_CHECK(static_cast<int>(x.size()) == static_cast<int>(images.size()),
                      "element length mismatch");
        PrimeField F(p);
        GfpMat m(p, dim, dim);
        for (size_t i = 0; i < x.size(); ++i)
            if (x[i]) m = m.add(images[i].mod_p(p).scaled(x[i]));
        return m;
    }

    // rho(x_gamma(t)) = exp(t rho(e_gamma)) via exact divided powers
    GfpMat unipotent(int root_id, uint32_t t) const {
        PrimeField F(p);
        GfpMat out = GfpMat::identity(p, dim);
        IntMat term = images[rank + root_id];
        uint32_t tk = F.reduce(t);
        int k = 1;
        while (!term.is_zero()) {
            CHEVREP_CHECK(k <= dim, "module exponential of a non-nilpotent action");
            out = out.add(term.mod_p(p).scaled(tk));
            ++k;
            term = term.mul(images[rank + root_id]).exact_div(k);
            tk = F.mul(tk, F.reduce(t));
        }
        return out;
    }

    GfpMat unipotent_product(const std::vector<int>& root_ids, uint32_t t = 1) const {
        GfpMat m = GfpMat::identity(p, dim);
        for (int id : root_ids) m = m.mul(unipotent(id, t));
        return m;
    }
};

}  // namespace chevrep
