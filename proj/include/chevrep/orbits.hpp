// orbits.hpp - orthogonal decomposition of V under k[x] for nilpotent and
// unipotent x in the classical isometry groups, enumeration of the legal
// decompositions, canonical class representatives, and the eminence decision.
#pragma once

#include <algorithm>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <tuple>
#include <vector>

#include "chevrep/classical.hpp"

namespace chevrep {

// ---------------------------------------------------------------------------
// Orthogonally indecomposable summand catalog.
//   V(m)    non-degenerate, one Jordan block of size m
//   W(m)    two totally singular halves, blocks (m, m)
//   W_l(m)  non-degenerate of dimension 2m, blocks (m, m); p = 2 nilpotent
//           only, with l the index of the summand
//   D(m)    degenerate of dimension 2m-1, blocks (m, m-1); odd orthogonal,
//           p = 2, nilpotent only
//   R       the 1-dimensional radical, acted on trivially; odd orthogonal,
//           p = 2, unipotent only
// ---------------------------------------------------------------------------
enum class SummandTag { W, W_l, V, D, R };

struct OrthoSummand {
    SummandTag tag;
    int m = 0;  // size parameter (unused for R)
    int l = 0;  // W_l only

    int dim() const {
        switch (tag) {
            case SummandTag::W:
            case SummandTag::W_l:
                return 2 * m;
            case SummandTag::V:
                return m;
            case SummandTag::D:
                return 2 * m - 1;
            case SummandTag::R:
                return 1;
        }
        return 0;
    }

    // Jordan block sizes contributed to the partition of x
    std::vector<int> blocks() const {
        switch (tag) {
            case SummandTag::W:
            case SummandTag::W_l:
                return {m, m};
            case SummandTag::V:
                return {m};
            case SummandTag::D:
                return m > 1 ? std::vector<int>{m, m - 1} : std::vector<int>{1};
            case SummandTag::R:
                return {1};
        }
        return {};
    }

    std::string str() const {
        std::ostringstream os;
        switch (tag) {
            case SummandTag::W:
                os << "W(" << m << ")";
                break;
            case SummandTag::W_l:
                os << "W_" << l << "(" << m << ")";
                break;
            case SummandTag::V:
                os << "V(" << m << ")";
                break;
            case SummandTag::D:
                os << "D(" << m << ")";
                break;
            case SummandTag::R:
                os << "R";
                break;
        }
        return os.str();
    }

    friend bool operator==(const OrthoSummand& a, const OrthoSummand& b) {
        return a.tag == b.tag && a.m == b.m && a.l == b.l;
    }
    // canonical display order: tag-major, then size descending, then l descending
    friend bool operator<(const OrthoSummand& a, const OrthoSummand& b) {
        return std::make_tuple(static_cast<int>(a.tag), -a.m, -a.l) <
               std::make_tuple(static_cast<int>(b.tag), -b.m, -b.l);
    }
};

inline OrthoSummand sum_V(int m) { return {SummandTag::V, m, 0}; }
inline OrthoSummand sum_W(int m) { return {SummandTag::W, m, 0}; }
inline OrthoSummand sum_Wl(int l, int m) { return {SummandTag::W_l, m, l}; }
inline OrthoSummand sum_D(int m) { return {SummandTag::D, m, 0}; }
inline OrthoSummand sum_R() { return {SummandTag::R, 0, 0}; }

// ---------------------------------------------------------------------------
// A multiset of summands in canonical order.  Two decompositions are equal
// iff they are equal as multisets; the class of x is determined by this value.
// ---------------------------------------------------------------------------
class OrthoDecomposition {
public:
    OrthoDecomposition() = default;
    explicit OrthoDecomposition(std::vector<OrthoSummand> parts) : parts_(std::move(parts)) {
        std::sort(parts_.begin(), parts_.end());
        for (const auto& s : parts_)
            CHEVREP_CHECK(s.tag == SummandTag::R || s.m >= 1, "summand size must be positive");
    }

    // Accepts the display syntax, e.g. "W(3) + V(2)^2 + R" or "W_1(3)".
    static OrthoDecomposition parse(const std::string& text) {
        std::vector<OrthoSummand> parts;
        size_t i = 0;
        auto skip_ws = [&] {
            while (i < text.size() && text[i] == ' ') ++i;
        };
        auto read_int = [&]() -> int {
            size_t start = i;
            while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
            if (i == start) throw std::invalid_argument("decomposition parse: expected a number");
            return std::stoi(text.substr(start, i - start));
        };
        auto expect = [&](char c) {
            if (i >= text.size() || text[i] != c)
                throw std::invalid_argument(std::string("decomposition parse: expected '") + c + "'");
            ++i;
        };
        while (true) {
            skip_ws();
            if (i >= text.size()) throw std::invalid_argument("decomposition parse: empty term");
            OrthoSummand s{SummandTag::R, 0, 0};
            char tagc = text[i++];
            if (tagc == 'R') {
                s = sum_R();
            } else {
                if (tagc != 'W' && tagc != 'V' && tagc != 'D')
                    throw std::invalid_argument("decomposition parse: unknown summand tag");
                int l = 0;
                bool indexed = false;
                if (tagc == 'W' && i < text.size() && text[i] == '_') {
                    ++i;
                    l = read_int();
                    indexed = true;
                }
                expect('(');
                int m = read_int();
                expect(')');
                if (tagc == 'V')
                    s = sum_V(m);
                else if (tagc == 'D')
                    s = sum_D(m);
                else
                    s = indexed ? sum_Wl(l, m) : sum_W(m);
            }
            int count = 1;
            skip_ws();
            if (i < text.size() && text[i] == '^') {
                ++i;
                count = read_int();
            }
            for (int c = 0; c < count; ++c) parts.push_back(s);
            skip_ws();
            if (i >= text.size()) break;
            expect('+');
        }
        return OrthoDecomposition(parts);
    }

    const std::vector<OrthoSummand>& parts() const { return parts_; }

    int dim() const {
        int d = 0;
        for (const auto& s : parts_) d += s.dim();
        return d;
    }

    int count(SummandTag t) const {
        int c = 0;
        for (const auto& s : parts_) c += s.tag == t ? 1 : 0;
        return c;
    }

    // predicted Jordan partition, sizes descending
    Partition blocks() const {
        Partition out;
        for (const auto& s : parts_)
            for (int b : s.blocks()) out.push_back(b);
        std::sort(out.rbegin(), out.rend());
        return out;
    }

    std::string str() const {
        if (parts_.empty()) return "0";
        std::ostringstream os;
        for (size_t i = 0; i < parts_.size();) {
            size_t j = i;
            while (j < parts_.size() && parts_[j] == parts_[i]) ++j;
            if (i) os << " + ";
            os << parts_[i].str();
            if (j - i > 1) os << "^" << (j - i);
            i = j;
        }
        return os.str();
    }

    friend bool operator==(const OrthoDecomposition& a, const OrthoDecomposition& b) {
        return a.parts_ == b.parts_;
    }
    friend bool operator<(const OrthoDecomposition& a, const OrthoDecomposition& b) {
        return std::lexicographical_compare(a.parts_.begin(), a.parts_.end(), b.parts_.begin(),
                                            b.parts_.end());
    }

private:
    std::vector<OrthoSummand> parts_;
};

// ---------------------------------------------------------------------------
// Legality of a decomposition for a given ambient form, characteristic and
// element kind: the complete constraint catalog, cases (i)-(vi).
// ---------------------------------------------------------------------------
inline bool decomposition_legal(const OrthoDecomposition& d, FormFlavor flavor, int dim, uint32_t p,
                                Kind kind) {
    if (d.dim() != dim) return false;
    const bool odd = dim % 2 == 1;
    const bool sympl = flavor == FormFlavor::symplectic;
    if (sympl && odd) return false;

    std::vector<int> ws, vs, ds;
    std::vector<std::pair<int, int>> wls;  // (m, l)
    int rs = 0;
    for (const auto& s : d.parts()) {
        switch (s.tag) {
            case SummandTag::W: ws.push_back(s.m); break;
            case SummandTag::W_l: wls.emplace_back(s.m, s.l); break;
            case SummandTag::V: vs.push_back(s.m); break;
            case SummandTag::D: ds.push_back(s.m); break;
            case SummandTag::R: ++rs; break;
        }
    }

    auto v_mults = [&] {
        std::map<int, int> mu;
        for (int m : vs) ++mu[m];
        return mu;
    };
    auto wl_chain_ok = [&] {
        // strictly decreasing sizes, indices, and co-indices
        auto sorted = wls;
        std::sort(sorted.begin(), sorted.end(),
                  [](const auto& a, const auto& b) { return a.first > b.first; });
        for (const auto& [m, l] : sorted) {
            if (sympl) {
                if (!(0 < l && 2 * l < m)) return false;
            } else {
                if (!(2 * l > m + 1 && l <= m)) return false;
            }
        }
        for (size_t i = 1; i < sorted.size(); ++i) {
            if (sorted[i].first >= sorted[i - 1].first) return false;
            if (sorted[i].second >= sorted[i - 1].second) return false;
            if (sorted[i].first - sorted[i].second >= sorted[i - 1].first - sorted[i - 1].second)
                return false;
        }
        return true;
    };

    if (p != 2) {  // case (i)
        if (!wls.empty() || !ds.empty() || rs) return false;
        for (auto& [m, c] : v_mults())
            if (c > 1 || m % 2 != (sympl ? 0 : 1)) return false;
        return true;
    }
    if (kind == Kind::unipotent) {  // cases (ii) and (iii)
        if (!wls.empty() || !ds.empty()) return false;
        if (rs != (odd ? 1 : 0)) return false;
        for (auto& [m, c] : v_mults())
            if (m % 2 || c > 2) return false;
        return true;
    }
    // nilpotent cases (iv), (v), (vi)
    if (rs) return false;
    if (!wl_chain_ok()) return false;
    if (sympl) {  // (iv)
        if (!ds.empty()) return false;
        for (auto& [m, c] : v_mults()) {
            if (m % 2 || c > 2) return false;
            int q = m / 2;
            for (const auto& [wm, wl] : wls)
                if (!(q > wm - wl || q < wl)) return false;
        }
        return true;
    }
    if (!vs.empty()) return false;
    if (!odd) return ds.empty();  // (v)
    if (ds.size() != 1) return false;  // (vi): exactly one degenerate summand
    if (!wls.empty()) {
        int lmin = wls.front().second;
        for (const auto& [m, l] : wls) lmin = std::min(lmin, l);
        if (ds[0] >= lmin) return false;
    }
    return true;
}

namespace detail {

// all partitions of `budget` with parts bounded by `maxpart`, non-increasing
inline void for_each_partition(int budget, int maxpart, std::vector<int>& cur,
                               const std::function<void()>& emit) {
    if (budget == 0) {
        emit();
        return;
    }
    for (int m = std::min(budget, maxpart); m >= 1; --m) {
        cur.push_back(m);
        for_each_partition(budget - m, m, cur, emit);
        cur.pop_back();
    }
}

// multisets of even sizes with multiplicity at most 2, sizes descending;
// `admit` can veto a size, `done` receives the remaining budget
inline void for_each_even_v_multiset(int budget, int maxsize, std::vector<int>& cur,
                                     const std::function<bool(int)>& admit,
                                     const std::function<void(int)>& done) {
    int s = std::min(budget, maxsize);
    if (s % 2) --s;
    if (s < 2) {
        done(budget);
        return;
    }
    for_each_even_v_multiset(budget, s - 2, cur, admit, done);
    if (admit(s)) {
        for (int b = 1; b <= 2 && b * s <= budget; ++b) {
            cur.insert(cur.end(), b, s);
            for_each_even_v_multiset(budget - b * s, s - 2, cur, admit, done);
            cur.erase(cur.end() - b, cur.end());
        }
    }
}

// subsets of distinct sizes of fixed parity, descending
inline void for_each_distinct_v_set(int budget, int maxsize, int parity, std::vector<int>& cur,
                                    const std::function<void(int)>& done) {
    int s = std::min(budget, maxsize);
    if (s >= 1 && s % 2 != parity) --s;
    if (s < 1) {
        done(budget);
        return;
    }
    for_each_distinct_v_set(budget, s - 2, parity, cur, done);
    cur.push_back(s);
    for_each_distinct_v_set(budget - s, s - 2, parity, cur, done);
    cur.pop_back();
}

// chains of W_l summands with strictly decreasing (m), (l), (m - l)
inline void for_each_wl_chain(int budget, int max_m, int max_l, int max_diff, bool sympl,
                              std::vector<std::pair<int, int>>& cur,
                              const std::function<void(int)>& done) {
    done(budget);
    for (int m = std::min(budget / 2, max_m - 1); m >= 1; --m) {
        for (int l = m; l >= 1; --l) {
            if (sympl ? !(2 * l < m) : !(2 * l > m + 1)) continue;
            if (l >= max_l || m - l >= max_diff) continue;
            cur.emplace_back(m, l);
            for_each_wl_chain(budget - 2 * m, m, l, m - l, sympl, cur, done);
            cur.pop_back();
        }
    }
}

inline std::vector<OrthoDecomposition> enumerate_for(FormFlavor flavor, int dim, uint32_t p,
                                                     Kind kind) {
    const bool sympl = flavor == FormFlavor::symplectic;
    const bool odd = dim % 2 == 1;
    const int big = dim + 1;
    std::set<OrthoDecomposition> out;

    std::vector<int> vcur, wcur;
    std::vector<std::pair<int, int>> wlcur;
    std::optional<int> dcur;
    bool rcur = false;

    auto emit = [&] {
        std::vector<OrthoSummand> parts;
        for (int m : wcur) parts.push_back(sum_W(m));
        for (const auto& [m, l] : wlcur) parts.push_back(sum_Wl(l, m));
        for (int m : vcur) parts.push_back(sum_V(m));
        if (dcur) parts.push_back(sum_D(*dcur));
        if (rcur) parts.push_back(sum_R());
        OrthoDecomposition d(std::move(parts));
        CHEVREP_CHECK(decomposition_legal(d, flavor, dim, p, kind),
                      "enumeration produced an illegal decomposition");
        out.insert(std::move(d));
    };
    auto fill_w = [&](int rem) {
        if (rem % 2) return;
        for_each_partition(rem / 2, big, wcur, emit);
    };

    if (p != 2) {  // case (i)
        for_each_distinct_v_set(dim, dim, sympl ? 0 : 1, vcur, fill_w);
    } else if (kind == Kind::unipotent) {  // (ii), (iii)
        rcur = odd;
        for_each_even_v_multiset(dim - (odd ? 1 : 0), dim, vcur, [](int) { return true; },
                                 fill_w);
    } else if (sympl) {  // (iv)
        for_each_wl_chain(dim, big, big, big, true, wlcur, [&](int rem) {
            auto admit = [&](int s) {
                int q = s / 2;
                for (const auto& [wm, wl] : wlcur)
                    if (!(q > wm - wl || q < wl)) return false;
                return true;
            };
            for_each_even_v_multiset(rem, rem, vcur, admit, fill_w);
        });
    } else if (!odd) {  // (v)
        for_each_wl_chain(dim, big, big, big, false, wlcur, fill_w);
    } else {  // (vi)
        for_each_wl_chain(dim - 1, big, big, big, false, wlcur, [&](int rem) {
            int lmax = big;
            for (const auto& [wm, wl] : wlcur) lmax = std::min(lmax, wl);
            for (int m = 1; 2 * m - 1 <= rem + 1 && m < lmax; ++m) {
                if ((rem + 1 - (2 * m - 1)) % 2) continue;
                dcur = m;
                fill_w(rem + 1 - (2 * m - 1));
                dcur.reset();
            }
        });
    }
    return {out.begin(), out.end()};
}

}  // namespace detail

// All legal decompositions for the natural module of the given classical
// group: the classes/orbits of the corresponding isometry group (of the full
// orthogonal group for types B and D).  Type A lists plain Jordan types.
inline std::vector<OrthoDecomposition> enumerate_decompositions(char type, int rank, uint32_t p,
                                                                Kind kind) {
    CHEVREP_CHECK(rank >= 1, "enumerate_decompositions needs positive rank");
    if (!is_prime(p)) throw std::invalid_argument("enumerate_decompositions: p must be prime");
    switch (type) {
        case 'A': {
            std::set<OrthoDecomposition> out;
            std::vector<int> cur;
            detail::for_each_partition(rank + 1, rank + 1, cur, [&] {
                std::vector<OrthoSummand> parts;
                for (int m : cur) parts.push_back(sum_V(m));
                out.insert(OrthoDecomposition(std::move(parts)));
            });
            return {out.begin(), out.end()};
        }
        case 'B':
            return detail::enumerate_for(FormFlavor::orthogonal, 2 * rank + 1, p, kind);
        case 'C':
            return detail::enumerate_for(FormFlavor::symplectic, 2 * rank, p, kind);
        case 'D':
            return detail::enumerate_for(FormFlavor::orthogonal, 2 * rank, p, kind);
        default:
            throw std::invalid_argument("enumerate_decompositions: classical types only");
    }
}

namespace detail {

inline std::vector<GfpVec> standard_basis(int n) {
    std::vector<GfpVec> out(n, GfpVec(n, 0));
    for (int i = 0; i < n; ++i) out[i][i] = 1;
    return out;
}

inline GfpVec matvec(const GfpMat& m, const GfpVec& v) {
    PrimeField F(m.p());
    GfpVec out(m.rows(), 0);
    for (int i = 0; i < m.rows(); ++i) {
        uint32_t acc = 0;
        for (int j = 0; j < m.cols(); ++j)
            if (v[j]) acc = F.add(acc, F.mul(m.at(i, j), v[j]));
        out[i] = acc;
    }
    return out;
}

inline uint32_t dot(uint32_t p, const GfpVec& a, const GfpVec& b) {
    PrimeField F(p);
    uint32_t acc = 0;
    for (size_t i = 0; i < a.size(); ++i)
        if (a[i] && b[i]) acc = F.add(acc, F.mul(a[i], b[i]));
    return acc;
}

// least s such that v -> (x^{s+1} v, x^s v) vanishes identically on the span:
// zero on a basis and zero polarization on basis pairs
inline int psi_index(const GfpMat& x, const FormedSpace& space, std::vector<GfpVec> cur) {
    if (cur.empty()) return 0;
    PrimeField F(space.p());
    const size_t b = cur.size();
    for (int s = 0;; ++s) {
        CHEVREP_CHECK(s <= space.dim(), "index search did not terminate");
        std::vector<GfpVec> nxt(b), gcur(b);
        for (size_t i = 0; i < b; ++i) {
            nxt[i] = matvec(x, cur[i]);
            gcur[i] = matvec(space.gram(), cur[i]);
        }
        bool ok = true;
        for (size_t i = 0; ok && i < b; ++i) ok = dot(space.p(), nxt[i], gcur[i]) == 0;
        for (size_t i = 0; ok && i < b; ++i)
            for (size_t j = i + 1; ok && j < b; ++j)
                ok = F.add(dot(space.p(), nxt[i], gcur[j]), dot(space.p(), nxt[j], gcur[i])) == 0;
        if (ok) return s;
        cur = std::move(nxt);
    }
}

// least s such that v -> Q(x^s v) vanishes identically on the span
inline int theta_index(const GfpMat& x, const FormedSpace& space, std::vector<GfpVec> cur) {
    if (cur.empty()) return 0;
    const size_t b = cur.size();
    for (int s = 0;; ++s) {
        CHEVREP_CHECK(s <= space.dim(), "index search did not terminate");
        std::vector<GfpVec> gcur(b);
        for (size_t i = 0; i < b; ++i) gcur[i] = matvec(space.gram(), cur[i]);
        bool ok = true;
        for (size_t i = 0; ok && i < b; ++i) ok = space.qvalue(cur[i]) == 0;
        for (size_t i = 0; ok && i < b; ++i)
            for (size_t j = i + 1; ok && j < b; ++j)
                ok = dot(space.p(), cur[i], gcur[j]) == 0;
        if (ok) return s;
        for (size_t i = 0; i < b; ++i) cur[i] = matvec(x, cur[i]);
    }
}

}  // namespace detail

inline int symplectic_index(const GfpMat& x, const FormedSpace& space) {
    if (space.p() != 2 || space.flavor() != FormFlavor::symplectic)
        throw std::invalid_argument("symplectic_index needs a characteristic-two symplectic space");
    if (!space.in_lie_algebra(x))
        throw std::invalid_argument("symplectic_index: x is not in the symplectic Lie algebra");
    jordan_partition(x, Kind::nilpotent);
    return detail::psi_index(x, space, detail::standard_basis(space.dim()));
}

inline int orthogonal_index(const GfpMat& x, const FormedSpace& space) {
    if (space.p() != 2 || space.flavor() != FormFlavor::orthogonal)
        throw std::invalid_argument("orthogonal_index needs a characteristic-two orthogonal space");
    if (!space.in_lie_algebra(x))
        throw std::invalid_argument("orthogonal_index: x is not in the orthogonal Lie algebra");
    jordan_partition(x, Kind::nilpotent);
    return detail::theta_index(x, space, detail::standard_basis(space.dim()));
}

// ---------------------------------------------------------------------------
// Conjugation-invariant profile of a nilpotent element: the Jordan partition
// together with the span-restricted indices on every im(x^i) cap ker(x^j).
// ---------------------------------------------------------------------------
struct ClassProfile {
    Partition blocks;
    std::vector<int> psi;
    std::vector<int> theta;
    friend bool operator==(const ClassProfile&, const ClassProfile&) = default;
};

inline ClassProfile class_profile(const GfpMat& x, const FormedSpace& space) {
    ClassProfile pr;
    pr.blocks = jordan_partition(x, Kind::nilpotent);
    const int K = pr.blocks.empty() ? 0 : pr.blocks[0];
    PrimeField F(space.p());
    std::vector<GfpMat> pw{GfpMat::identity(space.p(), space.dim())};
    for (int s = 1; s <= K + 1; ++s) pw.push_back(pw.back().mul(x));
    // step forms shared by every grid cell: both index conditions at step s
    // are bilinear conditions in the twisted Gram matrices below
    std::vector<GfpMat> psi_form, pair_form;
    for (int s = 0; s <= K; ++s) {
        psi_form.push_back(pw[s + 1].transpose().mul(space.gram()).mul(pw[s]));
        if (space.has_quadratic())
            pair_form.push_back(pw[s].transpose().mul(space.gram()).mul(pw[s]));
    }
    auto psi_of = [&](const std::vector<GfpVec>& b) {
        const size_t n = b.size();
        for (int s = 0; n; ++s) {
            CHEVREP_CHECK(s <= K, "index search did not terminate");
            std::vector<GfpVec> mu(n);
            for (size_t i = 0; i < n; ++i) mu[i] = detail::matvec(psi_form[s], b[i]);
            bool ok = true;
            for (size_t i = 0; ok && i < n; ++i) ok = detail::dot(space.p(), b[i], mu[i]) == 0;
            for (size_t i = 0; ok && i < n; ++i)
                for (size_t j = i + 1; ok && j < n; ++j)
                    ok = F.add(detail::dot(space.p(), b[i], mu[j]),
                               detail::dot(space.p(), b[j], mu[i])) == 0;
            if (ok) return s;
        }
        return 0;
    };
    auto theta_of = [&](const std::vector<GfpVec>& b) {
        const size_t n = b.size();
        for (int s = 0; n; ++s) {
            CHEVREP_CHECK(s <= K, "index search did not terminate");
            bool ok = true;
            for (size_t i = 0; ok && i < n; ++i)
                ok = space.qvalue(detail::matvec(pw[s], b[i])) == 0;
            std::vector<GfpVec> mu(n);
            if (ok)
                for (size_t i = 0; i < n; ++i) mu[i] = detail::matvec(pair_form[s], b[i]);
            for (size_t i = 0; ok && i < n; ++i)
                for (size_t j = i + 1; ok && j < n; ++j)
                    ok = detail::dot(space.p(), b[i], mu[j]) == 0;
            if (ok) return s;
        }
        return 0;
    };
    // im(x^i) cap ker(x^j) = x^i(ker(x^{i+j})); kernels are nested, so the
    // cell subspace is keyed by i and the kernel dimension
    std::vector<GfpMat> kerb;
    for (int a = 0; a <= K; ++a) kerb.push_back(kernel_of(pw[a]));
    std::map<std::pair<int, int>, std::pair<int, int>> memo;
    for (int i = 0; i <= K; ++i)
        for (int j = 0; j <= K; ++j) {
            const int a = std::min(i + j, K);
            const auto key = std::make_pair(i, kerb[a].rows());
            auto it = memo.find(key);
            if (it == memo.end()) {
                Subspace cell(space.p(), space.dim());
                for (int r = 0; r < kerb[a].rows(); ++r)
                    cell.add_row(detail::matvec(pw[i], kerb[a].row(r)));
                std::pair<int, int> val{psi_of(cell.rows()),
                                        space.has_quadratic() ? theta_of(cell.rows()) : 0};
                it = memo.emplace(key, val).first;
            }
            pr.psi.push_back(it->second.first);
            if (space.has_quadratic()) pr.theta.push_back(it->second.second);
        }
    return pr;
}

namespace detail {

// Explicit nilpotent matrix with the given decomposition on the standard
// space, built part by part on consecutive coordinate slots (characteristic
// 2 only, so all entries are written with coefficient 1).
inline GfpMat nilpotent_model(const OrthoDecomposition& d, const FormedSpace& space) {
    CHEVREP_CHECK(space.p() == 2, "decomposition models are built in characteristic two");
    const int n = space.half();
    GfpMat m(2, space.dim(), space.dim());
    int base = 0;
    bool odd_used = false;
    auto chain = [&](int len) {
        // v_{a+1} -> v_a on the first half, dual shift on the second half
        for (int a = 0; a + 1 < len; ++a) {
            m.set(base + a, base + a + 1, 1);
            m.set(n + base + a + 1, n + base + a, 1);
        }
    };
    for (const auto& s : d.parts()) {
        switch (s.tag) {
            case SummandTag::W:
                chain(s.m);
                base += s.m;
                break;
            case SummandTag::V: {
                CHEVREP_CHECK(space.flavor() == FormFlavor::symplectic && s.m % 2 == 0,
                              "nilpotent V-summands are symplectic of even size");
                int q = s.m / 2;
                chain(q);
                m.set(base + q - 1, n + base + q - 1, 1);
                base += q;
                break;
            }
            case SummandTag::W_l: {
                chain(s.m);
                if (space.flavor() == FormFlavor::symplectic) {
                    m.set(base + s.l - 1, n + base + s.l - 1, 1);
                } else {
                    // legal range makes 0 <= 2l-m-2 < m
                    m.set(base + s.m - 1, n + base + 2 * s.l - s.m - 2, 1);
                    m.set(base + 2 * s.l - s.m - 2, n + base + s.m - 1, 1);
                }
                base += s.m;
                break;
            }
            case SummandTag::D: {
                CHEVREP_CHECK(space.odd_dim() && !odd_used, "D-summand needs the odd slot");
                odd_used = true;
                int h = s.m - 1;
                chain(h);
                if (h >= 1) m.set(space.dim() - 1, n + base + h - 1, 1);
                base += h;
                break;
            }
            case SummandTag::R:
                CHEVREP_CHECK(false, "R-summands do not occur for nilpotent elements");
        }
    }
    CHEVREP_CHECK(base == n && odd_used == space.odd_dim(), "model does not fill the space");
    CHEVREP_CHECK(space.in_lie_algebra(m), "model escapes the Lie algebra of the form");
    CHEVREP_CHECK(jordan_partition(m, Kind::nilpotent) == d.blocks(),
                  "model has the wrong Jordan partition");
    if (d.parts().size() == 1 && d.parts()[0].tag == SummandTag::W_l) {
        int idx = space.has_quadratic() ? theta_index(m, space, standard_basis(space.dim()))
                                        : psi_index(m, space, standard_basis(space.dim()));
        CHEVREP_CHECK(idx == d.parts()[0].l, "indexed model has the wrong index");
    }
    return m;
}

inline GfpMat mat_power(const GfpMat& x, int e) {
    GfpMat out = GfpMat::identity(x.p(), x.rows());
    for (int i = 0; i < e; ++i) out = out.mul(x);
    return out;
}

inline OrthoDecomposition decompose_impl(const GfpMat& x, const FormedSpace& space, Kind kind);

// counts of W/V summands forced by the Jordan partition when p is odd
inline std::vector<OrthoSummand> odd_p_parts(const Partition& blocks, bool sympl) {
    std::map<int, int> mult;
    for (int b : blocks) ++mult[b];
    std::vector<OrthoSummand> parts;
    for (const auto& [size, c] : mult) {
        const bool paired = sympl ? size % 2 == 1 : size % 2 == 0;
        if (paired) {
            CHEVREP_CHECK(c % 2 == 0, "paired block size with odd multiplicity");
            parts.insert(parts.end(), c / 2, sum_W(size));
        } else {
            if (c % 2) parts.push_back(sum_V(size));
            parts.insert(parts.end(), c / 2, sum_W(size));
        }
    }
    return parts;
}

// characteristic-two unipotent case on an even-dimensional space: the number
// of V(size) summands is decided by the linear functional u -> ((x-1)^{size-1} u, u)
// on ker((x-1)^size), which vanishes on every W-summand
inline std::vector<OrthoSummand> even_unipotent_parts(const GfpMat& x, const FormedSpace& space,
                                                      const Partition& blocks) {
    PrimeField F(2);
    GfpMat y = x.sub(GfpMat::identity(2, space.dim()));
    std::map<int, int> mult;
    for (int b : blocks) ++mult[b];
    std::vector<OrthoSummand> parts;
    for (const auto& [size, c] : mult) {
        if (size % 2) {
            CHEVREP_CHECK(c % 2 == 0, "odd block size with odd multiplicity");
            parts.insert(parts.end(), c / 2, sum_W(size));
            continue;
        }
        GfpMat ym1 = mat_power(y, size - 1);
        GfpMat ker = kernel_of(ym1.mul(y));
        std::vector<GfpVec> u(ker.rows()), w(ker.rows()), gu(ker.rows());
        for (int i = 0; i < ker.rows(); ++i) {
            u[i] = ker.row(i);
            w[i] = matvec(ym1, u[i]);
            gu[i] = matvec(space.gram(), u[i]);
        }
        bool nonzero = false;
        for (int i = 0; i < ker.rows(); ++i) nonzero = nonzero || dot(2, w[i], gu[i]) != 0;
        for (int i = 0; i < ker.rows(); ++i)
            for (int j = i + 1; j < ker.rows(); ++j)
                CHEVREP_CHECK(F.add(dot(2, w[i], gu[j]), dot(2, w[j], gu[i])) == 0,
                              "block functional is not additive on the kernel");
        int b = c % 2 ? 1 : (nonzero ? 2 : 0);
        if (c % 2) CHEVREP_CHECK(nonzero, "odd V-multiplicity with a vanishing functional");
        parts.insert(parts.end(), b, sum_V(size));
        parts.insert(parts.end(), (c - b) / 2, sum_W(size));
    }
    return parts;
}

// odd orthogonal unipotent case: quotient out the radical, decompose on the
// symplectic quotient, and append R
inline std::vector<OrthoSummand> odd_unipotent_parts(const GfpMat& x, const FormedSpace& space) {
    const int n = space.half();
    const int dim = space.dim();
    for (int r = 0; r < dim; ++r)
        CHEVREP_CHECK(x.at(r, dim - 1) == (r == dim - 1 ? 1u : 0u),
                      "unipotent isometry must fix the radical vector");
    GfpMat xq(2, 2 * n, 2 * n);
    for (int r = 0; r < 2 * n; ++r)
        for (int c = 0; c < 2 * n; ++c) xq.set(r, c, x.at(r, c));
    FormedSpace quot = FormedSpace::symplectic(n, 2);
    for (int r = 0; r < 2 * n; ++r)
        for (int c = 0; c < 2 * n; ++c)
            CHEVREP_CHECK(quot.gram().at(r, c) == space.gram().at(r, c),
                          "quotient form mismatch");
    CHEVREP_CHECK(quot.is_isometry(xq), "quotient of an isometry must be symplectic");
    auto parts = decompose_impl(xq, quot, Kind::unipotent).parts();
    parts.push_back(sum_R());
    return parts;
}

// characteristic-two nilpotent case: filter the legal decompositions by the
// Jordan partition; when several remain, compare index profiles against
// explicitly constructed models.  Ambiguity is a hard error by design.
inline std::vector<OrthoSummand> nilpotent_parts(const GfpMat& x, const FormedSpace& space,
                                                 const Partition& blocks) {
    auto all = enumerate_for(space.flavor(), space.dim(), 2, Kind::nilpotent);
    std::vector<OrthoDecomposition> cands;
    for (auto& d : all)
        if (d.blocks() == blocks) cands.push_back(d);
    if (cands.empty())
        throw std::runtime_error("decompose: no legal decomposition matches the Jordan type");
    if (cands.size() == 1) return cands[0].parts();
    ClassProfile target = class_profile(x, space);
    // model profiles are reused across calls; single-threaded use assumed
    static std::map<std::tuple<int, int, std::string>, ClassProfile> model_cache;
    std::vector<OrthoDecomposition> hits;
    for (const auto& d : cands) {
        auto key = std::make_tuple(static_cast<int>(space.flavor()), space.dim(), d.str());
        auto it = model_cache.find(key);
        if (it == model_cache.end())
            it = model_cache.emplace(key, class_profile(nilpotent_model(d, space), space)).first;
        if (it->second == target) hits.push_back(d);
    }
    if (hits.size() != 1)
        throw std::runtime_error(hits.empty()
                                     ? "decompose: no candidate matches the index profile"
                                     : "decompose: index profile does not single out a candidate");
    return hits[0].parts();
}

inline OrthoDecomposition decompose_impl(const GfpMat& x, const FormedSpace& space, Kind kind) {
    Partition blocks = jordan_partition(x, kind);
    std::vector<OrthoSummand> parts;
    if (space.p() != 2)
        parts = odd_p_parts(blocks, space.flavor() == FormFlavor::symplectic);
    else if (kind == Kind::unipotent)
        parts = space.odd_dim() ? odd_unipotent_parts(x, space)
                                : even_unipotent_parts(x, space, blocks);
    else
        parts = nilpotent_parts(x, space, blocks);
    OrthoDecomposition d(std::move(parts));
    CHEVREP_CHECK(decomposition_legal(d, space.flavor(), space.dim(), space.p(), kind),
                  "decompose produced an illegal decomposition");
    CHEVREP_CHECK(d.blocks() == blocks, "decompose does not reproduce the Jordan partition");
    return d;
}

}  // namespace detail

// The canonical multiset of orthogonally indecomposable summands of V under
// k[x].  x must lie in the Lie algebra of the form (nilpotent) or in its
// isometry group (unipotent).
inline OrthoDecomposition decompose(const GfpMat& x, const FormedSpace& space, Kind kind) {
    if (kind == Kind::nilpotent) {
        if (!space.in_lie_algebra(x))
            throw std::invalid_argument("decompose: x is not in the Lie algebra of the form");
    } else {
        if (!space.is_isometry(x))
            throw std::invalid_argument("decompose: x is not an isometry of the form");
    }
    return detail::decompose_impl(x, space, kind);
}

// ---------------------------------------------------------------------------
// Representatives.
// ---------------------------------------------------------------------------

// sum (nilpotent) or ordered product at t = 1 (unipotent) over all simple roots
inline GfpMat regular_representative(const ClassicalRealization& re, Kind kind) {
    const auto& alg = re.algebra;
    std::vector<RootVec> simples;
    std::vector<int> ids;
    for (int i = 0; i < alg.rank(); ++i) {
        RootVec delta(alg.rank(), 0);
        delta[i] = 1;
        simples.push_back(delta);
        ids.push_back(alg.z().id_of(delta));
    }
    if (kind == Kind::nilpotent) return re.natural.action(alg.element_from_roots(simples));
    return re.natural.unipotent_product(ids);
}

inline GfpMat regular_representative(char type, int rank, uint32_t p, Kind kind) {
    return regular_representative(classical_realization(type, rank, p), kind);
}

// Root support of the table of eminent representatives.  Types A and B have
// only the regular class; type C adds the nilpotent W_l(n) family at p = 2,
// replacing the last simple root by the long root 2eps_l; type D is covered
// only by the parametrized p = 2 families (its regular classes are never
// eminent), which replace the last simple root by the sum beta_l, so l is
// required there.
inline std::vector<RootVec> eminent_support(char type, int rank, uint32_t p, Kind kind,
                                            std::optional<int> l = std::nullopt) {
    const int n = rank;
    auto simples = [&](int count) {
        std::vector<RootVec> roots;
        for (int i = 0; i < count; ++i) {
            RootVec delta(n, 0);
            delta[i] = 1;
            roots.push_back(delta);
        }
        return roots;
    };
    switch (type) {
        case 'A':
        case 'B':
            if (l)
                throw std::invalid_argument(
                    "eminent_support: no l parameter for this type");
            return simples(n);
        case 'C': {
            if (!l) return simples(n);
            if (kind != Kind::nilpotent || p != 2 || !(0 < *l && 2 * *l < n))
                throw std::invalid_argument(
                    "eminent_support: W_l(n) needs p = 2, nilpotent kind and 0 < l < n/2");
            RootVec two_eps(n, 0);
            for (int i = *l - 1; i < n - 1; ++i) two_eps[i] = 2;
            two_eps[n - 1] = 1;
            std::vector<RootVec> roots = simples(n - 1);
            roots.push_back(two_eps);
            return roots;
        }
        case 'D': {
            if (p != 2 || !l || !(2 * *l > n + 1 && *l < n))
                throw std::invalid_argument(
                    "eminent_support: type D needs p = 2 and (n+1)/2 < l < n");
            std::vector<RootVec> roots = simples(n - 1);
            roots.push_back(beta_l_root(n, *l));
            return roots;
        }
        default:
            throw std::invalid_argument("eminent_support: classical types only");
    }
}

inline GfpMat eminent_representative(const ClassicalRealization& re, Kind kind,
                                     std::optional<int> l = std::nullopt) {
    const auto& alg = re.algebra;
    std::vector<RootVec> support = eminent_support(alg.rs().type(), alg.rank(), alg.p(), kind, l);
    if (kind == Kind::nilpotent) return re.natural.action(alg.element_from_roots(support));
    std::vector<int> ids;
    for (const auto& r : support) ids.push_back(alg.z().id_of(r));
    return re.natural.unipotent_product(ids);
}

inline GfpMat eminent_representative(char type, int rank, uint32_t p, Kind kind,
                                     std::optional<int> l = std::nullopt) {
    return eminent_representative(classical_realization(type, rank, p), kind, l);
}

// ---------------------------------------------------------------------------
// Commuting subgroups of types B_m and B_{n-m-1} inside D_n for p odd,
// with the composite regular representatives u = u_1 u_2 and its nilpotent
// counterpart e.
// ---------------------------------------------------------------------------
struct CommutingTypeBPair {
    std::vector<GfpMat> h1_generators;
    std::vector<GfpMat> h2_generators;
    GfpMat u;
    GfpMat e;
};

inline CommutingTypeBPair bm_bnm1_generators(const ClassicalRealization& re, int m) {
    const auto& alg = re.algebra;
    const int n = alg.rank();
    const uint32_t p = alg.p();
    if (alg.rs().type() != 'D' || n < 4)
        throw std::invalid_argument("bm_bnm1_generators needs type D of rank at least 4");
    if (p == 2) throw std::invalid_argument("bm_bnm1_generators needs p odd");
    if (!(1 <= m && m <= n - 2))
        throw std::invalid_argument("bm_bnm1_generators: m out of range");

    auto simple = [&](int i) {  // 1-based
        RootVec delta(n, 0);
        delta[i - 1] = 1;
        return alg.z().id_of(delta);
    };
    // beta = alpha_m + ... + alpha_{n-2}
    RootVec bet(n, 0);
    for (int i = m; i <= n - 2; ++i) bet[i - 1] = 1;
    RootVec beta_short = bet, beta_long = bet;
    beta_short[n - 2] += 1;  // beta + alpha_{n-1}
    beta_long[n - 1] += 1;   // beta + alpha_n
    const int bs = alg.z().id_of(beta_short);
    const int bl = alg.z().id_of(beta_long);
    const auto& nat = re.natural;
    auto neg = [&](int id) { return alg.z().neg_id(id); };
    auto pair_elem = [&](int id1, int id2, uint32_t t1, uint32_t t2) {
        return nat.unipotent(id1, t1).mul(nat.unipotent(id2, t2));
    };

    CommutingTypeBPair out{{}, {}, GfpMat(p, 0, 0), GfpMat(p, 0, 0)};
    for (int i = 1; i <= m - 1; ++i) {
        out.h1_generators.push_back(nat.unipotent(simple(i), 1));
        out.h1_generators.push_back(nat.unipotent(neg(simple(i)), 1));
    }
    out.h1_generators.push_back(pair_elem(bs, bl, 1, p - 1));
    out.h1_generators.push_back(pair_elem(neg(bs), neg(bl), 1, p - 1));
    for (int i = m + 1; i <= n - 2; ++i) {
        out.h2_generators.push_back(nat.unipotent(simple(i), 1));
        out.h2_generators.push_back(nat.unipotent(neg(simple(i)), 1));
    }
    out.h2_generators.push_back(pair_elem(simple(n - 1), simple(n), 1, 1));
    out.h2_generators.push_back(pair_elem(neg(simple(n - 1)), neg(simple(n)), 1, 1));

    GfpMat u1 = GfpMat::identity(p, nat.dim);
    for (int i = 1; i <= m - 1; ++i) u1 = u1.mul(nat.unipotent(simple(i), 1));
    u1 = u1.mul(pair_elem(bs, bl, 1, p - 1));
    GfpMat u2 = GfpMat::identity(p, nat.dim);
    for (int i = m + 1; i <= n - 2; ++i) u2 = u2.mul(nat.unipotent(simple(i), 1));
    u2 = u2.mul(pair_elem(simple(n - 1), simple(n), 1, 1));
    out.u = u1.mul(u2);

    std::vector<RootVec> roots{beta_short, beta_long};
    std::vector<int> signs{1, -1};
    for (int i = 1; i <= n; ++i) {
        if (i == m) continue;
        RootVec delta(n, 0);
        delta[i - 1] = 1;
        roots.push_back(delta);
        signs.push_back(1);
    }
    out.e = nat.action(alg.element_from_roots(roots, signs));
    return out;
}

inline CommutingTypeBPair bm_bnm1_generators(int n, int m, uint32_t p) {
    if (p == 2) throw std::invalid_argument("bm_bnm1_generators needs p odd");
    return bm_bnm1_generators(classical_realization('D', n, p), m);
}

// ---------------------------------------------------------------------------
// Eminence: the decompositions realized by eminent classes.
// ---------------------------------------------------------------------------
inline std::vector<OrthoDecomposition> eminent_decompositions(char type, int rank, uint32_t p,
                                                              Kind kind) {
    CHEVREP_CHECK(rank >= 1, "eminent_decompositions needs positive rank");
    if (!is_prime(p)) throw std::invalid_argument("eminent_decompositions: p must be prime");
    const int n = rank;
    std::vector<OrthoDecomposition> out;
    auto add = [&](std::vector<OrthoSummand> parts) {
        out.push_back(OrthoDecomposition(std::move(parts)));
    };
    switch (type) {
        case 'A':
            add({sum_V(n + 1)});
            break;
        case 'B':
            if (p != 2)
                add({sum_V(2 * n + 1)});
            else if (kind == Kind::nilpotent)
                add({sum_D(n + 1)});
            else
                add({sum_V(2 * n), sum_R()});
            break;
        case 'C':
            add({sum_V(2 * n)});
            if (p == 2 && kind == Kind::nilpotent)
                for (int l = 1; 2 * l < n; ++l) add({sum_Wl(l, n)});
            break;
        case 'D':
            if (p == 2)
                for (int l = n - 1; 2 * l > n + 1; --l) {
                    if (kind == Kind::nilpotent)
                        add({sum_Wl(l, n)});
                    else
                        add({sum_V(2 * n - 2 * l + 2), sum_V(2 * l - 2)});
                }
            break;
        default:
            throw std::invalid_argument("eminent_decompositions: classical types only");
    }
    return out;
}

inline bool is_eminent_classical(const OrthoDecomposition& d, char type, int rank, uint32_t p,
                                 Kind kind) {
    auto em = eminent_decompositions(type, rank, p, kind);
    return std::find(em.begin(), em.end(), d) != em.end();
}

// ---------------------------------------------------------------------------
// Behavior of an orthogonal class under restriction to SO(V).
// ---------------------------------------------------------------------------
enum class SoSplitting { not_in_so, one_class, splits_into_two };

inline SoSplitting so_class_splitting(const OrthoDecomposition& d, const FormedSpace& space,
                                      Kind kind) {
    if (space.flavor() != FormFlavor::orthogonal)
        throw std::invalid_argument("so_class_splitting needs an orthogonal space");
    CHEVREP_CHECK(decomposition_legal(d, space.flavor(), space.dim(), space.p(), kind),
                  "so_class_splitting: illegal decomposition for this space");
    int n_v = d.count(SummandTag::V);
    if (space.p() != 2) {
        bool odd_w = false;
        for (const auto& s : d.parts())
            if (s.tag == SummandTag::W && s.m % 2) odd_w = true;
        return (n_v == 0 && !odd_w) ? SoSplitting::splits_into_two : SoSplitting::one_class;
    }
    if (space.odd_dim()) return SoSplitting::one_class;
    if (kind == Kind::unipotent) {
        if (n_v % 2) return SoSplitting::not_in_so;
        return n_v == 0 ? SoSplitting::splits_into_two : SoSplitting::one_class;
    }
    return d.count(SummandTag::W_l) == 0 ? SoSplitting::splits_into_two : SoSplitting::one_class;
}

}  // namespace chevrep
