// classical.hpp - bilinear/quadratic form carriers for the natural modules of
// the classical groups and the matrix realization of their Chevalley bases.
#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "chevrep/chevalley.hpp"

namespace chevrep {

enum class FormFlavor { symplectic, orthogonal };

// ---------------------------------------------------------------------------
// A vector space with the standard alternating or symmetric form, plus the
// quadratic form refining it for orthogonal spaces.  Basis convention:
// v_i pairs with v_{half+i} (0-based), and an odd-dimensional orthogonal
// space keeps its extra vector last.
// ---------------------------------------------------------------------------
class FormedSpace {
public:
    static FormedSpace symplectic(int n, uint32_t p) {
        FormedSpace s(p, 2 * n, n, FormFlavor::symplectic);
        for (int i = 0; i < n; ++i) {
            s.gram_z_.set(i, n + i, 1);
            s.gram_z_.set(n + i, i, -1);
        }
        s.finish();
        return s;
    }

    static FormedSpace orthogonal_even(int n, uint32_t p) {
        FormedSpace s(p, 2 * n, n, FormFlavor::orthogonal);
        for (int i = 0; i < n; ++i) {
            s.gram_z_.set(i, n + i, 1);
            s.gram_z_.set(n + i, i, 1);
        }
        s.finish();
        return s;
    }

    static FormedSpace orthogonal_odd(int n, uint32_t p) {
        FormedSpace s(p, 2 * n + 1, n, FormFlavor::orthogonal);
        for (int i = 0; i < n; ++i) {
            s.gram_z_.set(i, n + i, 1);
            s.gram_z_.set(n + i, i, 1);
        }
        s.gram_z_.set(2 * n, 2 * n, 2);
        s.quad_z_[2 * n] = 1;
        s.finish();
        return s;
    }

    uint32_t p() const { return p_; }
    int dim() const { return dim_; }
    int half() const { return half_; }
    bool odd_dim() const { return dim_ % 2 == 1; }
    FormFlavor flavor() const { return flavor_; }
    bool has_quadratic() const { return flavor_ == FormFlavor::orthogonal; }

    const IntMat& gram_int() const { return gram_z_; }
    const GfpMat& gram() const { return gram_p_; }
    int64_t quad_int(int i) const { return quad_z_[i]; }

    uint32_t bilinear(int i, int j) const { return gram_p_.at(i, j); }

    uint32_t form(const GfpVec& u, const GfpVec& v) const {
        PrimeField F(p_);
        uint32_t out = 0;
        for (int i = 0; i < dim_; ++i) {
            if (!u[i]) continue;
            uint32_t row = 0;
            for (int j = 0; j < dim_; ++j)
                if (v[j]) row = F.add(row, F.mul(gram_p_.at(i, j), v[j]));
            out = F.add(out, F.mul(u[i], row));
        }
        return out;
    }

    // Q(sum c_i v_i) = sum c_i^2 Q(v_i) + sum_{i<j} c_i c_j (v_i, v_j)
    uint32_t qvalue(const GfpVec& v) const {
        CHEVREP_CHECK(has_quadratic(), "qvalue on a symplectic space");
        PrimeField F(p_);
        uint32_t out = 0;
        for (int i = 0; i < dim_; ++i) {
            if (!v[i]) continue;
            out = F.add(out, F.mul(F.mul(v[i], v[i]), F.reduce(quad_z_[i])));
            for (int j = i + 1; j < dim_; ++j)
                if (v[j]) out = F.add(out, F.mul(F.mul(v[i], v[j]), gram_p_.at(i, j)));
        }
        return out;
    }

    // (gv, gw) = (v, w) on the basis; for p = 2 orthogonal additionally
    // Q(g v_i) = Q(v_i), which determines Q o g by polarization.
    bool is_isometry(const GfpMat& g) const {
        CHEVREP_CHECK(g.rows() == dim_ && g.cols() == dim_, "isometry shape mismatch");
        if (!(g.transpose().mul(gram_p_).mul(g) == gram_p_)) return false;
        if (p_ == 2 && has_quadratic()) {
            for (int i = 0; i < dim_; ++i) {
                GfpVec col(dim_);
                for (int r = 0; r < dim_; ++r) col[r] = g.at(r, i);
                if (qvalue(col) != reduce_quad(i)) return false;
            }
        }
        return true;
    }

    // (Xv, w) + (v, Xw) = 0; for p = 2 orthogonal the sharper quadratic
    // condition (Xv, v) = 0 for all v, checked on the basis (the cross terms
    // cancel once X is skew).
    bool in_lie_algebra(const GfpMat& x) const {
        CHEVREP_CHECK(x.rows() == dim_ && x.cols() == dim_, "lie membership shape mismatch");
        PrimeField F(p_);
        GfpMat lhs = x.transpose().mul(gram_p_).add(gram_p_.mul(x));
        if (!lhs.is_zero()) return false;
        if (p_ == 2 && has_quadratic()) {
            for (int i = 0; i < dim_; ++i) {
                uint32_t v = 0;
                for (int r = 0; r < dim_; ++r)
                    if (x.at(r, i)) v = F.add(v, F.mul(gram_p_.at(r, i), x.at(r, i)));
                if (v) return false;
            }
        }
        return true;
    }

    // basis of { v : (v, w) = 0 for all w }
    GfpMat radical() const { return kernel_of(gram_p_); }

private:
    FormedSpace(uint32_t p, int dim, int half, FormFlavor f)
        : p_(p), dim_(dim), half_(half), flavor_(f), gram_z_(dim, dim),
          quad_z_(static_cast<size_t>(dim), 0) {
        CHEVREP_CHECK(is_prime(p), "formed space needs a prime characteristic");
    }

    uint32_t reduce_quad(int i) const {
        PrimeField F(p_);
        return F.reduce(quad_z_[i]);
    }

    void finish() { gram_p_ = gram_z_.mod_p(p_); }

    uint32_t p_;
    int dim_;
    int half_;
    FormFlavor flavor_;
    IntMat gram_z_;
    std::vector<int64_t> quad_z_;
    GfpMat gram_p_;
};

// ---------------------------------------------------------------------------
// Natural matrix realization of a classical Chevalley basis.  The simple root
// images are fixed explicitly; every other root image follows by the bracket
// recursion rho(e_gamma) = [rho(e_delta), rho(e_alpha)] / N_{delta,alpha},
// which is exact over the integers.
// ---------------------------------------------------------------------------
struct ClassicalRealization {
    ChevalleyAlgebra algebra;
    std::optional<FormedSpace> space;  // no form in type A
    RepSpace natural;
};

namespace detail {

inline IntMat mat_bracket(const IntMat& a, const IntMat& b) {
    return a.mul(b).sub(b.mul(a));
}

// E_{i,j} with 1-based indices, matching the printed conventions
inline IntMat unit_mat(int dim, int i, int j) {
    IntMat m(dim, dim);
    m.set(i - 1, j - 1, 1);
    return m;
}

}  // namespace detail

inline ClassicalRealization classical_realization(char type, int rank, uint32_t p) {
    if (type != 'A' && type != 'B' && type != 'C' && type != 'D')
        throw std::invalid_argument("classical realization needs type A, B, C or D");
    ChevalleyAlgebra alg(type, rank, p, Lattice::simply_connected);
    const ChevalleyZ& z = alg.z();
    const RootSystem& rs = alg.rs();
    int n = rank;
    int dim = type == 'A' ? n + 1 : (type == 'B' ? 2 * n + 1 : 2 * n);

    std::optional<FormedSpace> space;
    if (type == 'B') space = FormedSpace::orthogonal_odd(n, p);
    if (type == 'C') space = FormedSpace::symplectic(n, p);
    if (type == 'D') space = FormedSpace::orthogonal_even(n, p);

    int P = z.npos();
    std::vector<IntMat> images(static_cast<size_t>(rank + 2 * P), IntMat(dim, dim));
    using detail::unit_mat;

    auto set_simple = [&](int i, const IntMat& e, const IntMat& f) {
        int id = z.id_of(rs.simple_root(i));
        images[static_cast<size_t>(rank + id)] = e;
        images[static_cast<size_t>(rank + z.neg_id(id))] = f;
    };

    // chain part shared by B, C, D: e_{eps_i - eps_{i+1}}
    for (int i = 1; i <= (type == 'A' ? n : n - 1); ++i) {
        if (type == 'A') {
            set_simple(i, unit_mat(dim, i, i + 1), unit_mat(dim, i + 1, i));
        } else {
            set_simple(i, unit_mat(dim, i, i + 1).sub(unit_mat(dim, n + i + 1, n + i)),
                       unit_mat(dim, i + 1, i).sub(unit_mat(dim, n + i, n + i + 1)));
        }
    }
    if (type == 'B') {
        set_simple(n, unit_mat(dim, n, 2 * n + 1).scaled(2).sub(unit_mat(dim, 2 * n + 1, 2 * n)),
                   unit_mat(dim, 2 * n + 1, n).sub(unit_mat(dim, 2 * n, 2 * n + 1).scaled(2)));
    } else if (type == 'C') {
        set_simple(n, unit_mat(dim, n, 2 * n), unit_mat(dim, 2 * n, n));
    } else if (type == 'D') {
        set_simple(n, unit_mat(dim, n, 2 * n - 1).sub(unit_mat(dim, n - 1, 2 * n)),
                   unit_mat(dim, 2 * n - 1, n).sub(unit_mat(dim, 2 * n, n - 1)));
    }

    // composite roots by increasing height; the canonical order guarantees the
    // peeled-off summand was already filled
    for (int g = 0; g < P; ++g) {
        const RootVec& gamma = z.root_of(g);
        if (root_height(gamma) < 2) continue;
        int xi = -1, rest = -1;
        for (int i = 1; i <= rank; ++i) {
            RootVec d = root_add(gamma, root_neg(rs.simple_root(i)));
            if (rs.is_positive_root(d)) {
                xi = z.id_of(rs.simple_root(i));
                rest = rs.positive_index(d);
                break;
            }
        }
        CHEVREP_CHECK(xi >= 0, "indecomposable non-simple positive root");
        int ncoef = z.n_const(rest, xi);
        CHEVREP_CHECK(ncoef != 0, "vanishing structure constant on a root sum");
        images[static_cast<size_t>(rank + g)] =
            detail::mat_bracket(images[static_cast<size_t>(rank + rest)],
                                images[static_cast<size_t>(rank + xi)])
                .exact_div(ncoef);
        images[static_cast<size_t>(rank + z.neg_id(g))] =
            detail::mat_bracket(images[static_cast<size_t>(rank + z.neg_id(rest))],
                                images[static_cast<size_t>(rank + z.neg_id(xi))])
                .exact_div(-ncoef);
    }

    for (int j = 1; j <= rank; ++j) {
        int id = z.id_of(rs.simple_root(j));
        images[static_cast<size_t>(j - 1)] =
            detail::mat_bracket(images[static_cast<size_t>(rank + id)],
                                images[static_cast<size_t>(rank + z.neg_id(id))]);
    }

    // weight property as a construction check: [h_j, rho(e_gamma)] matches the
    // Cartan pairing for every root, so a sign slip cannot survive silently
    for (int id = 0; id < 2 * P; ++id) {
        CHEVREP_CHECK(!images[static_cast<size_t>(rank + id)].is_zero(), "zero root image");
        for (int j = 0; j < rank; ++j) {
            IntMat lhs = detail::mat_bracket(images[static_cast<size_t>(j)],
                                             images[static_cast<size_t>(rank + id)]);
            IntMat rhs =
                images[static_cast<size_t>(rank + id)].scaled(z.cartan_action_sc(j, id));
            CHEVREP_CHECK(lhs == rhs, "root image has the wrong weight");
        }
    }

    RepSpace natural{"classical_natural", p, dim, rank, std::move(images)};
    return ClassicalRealization{std::move(alg), std::move(space), std::move(natural)};
}

}  // namespace chevrep
