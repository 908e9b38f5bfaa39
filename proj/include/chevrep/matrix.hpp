// matrix.hpp - exact dense linear algebra over GF(p), with a bit-packed GF(2) path.
#pragma once

#include <algorithm>
#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "chevrep/gf.hpp"

namespace chevrep {

using GfpVec = std::vector<uint32_t>;
using Partition = std::vector<int>;

enum class Kind { nilpotent, unipotent };

inline const char* kind_name(Kind k) { return k == Kind::nilpotent ? "nilpotent" : "unipotent"; }

// ---------------------------------------------------------------------------
// Dense matrix over GF(p), row-major, entries always reduced.
// ---------------------------------------------------------------------------
class GfpMat {
public:
    GfpMat() : p_(2), rows_(0), cols_(0) {}
    GfpMat(uint32_t p, int rows, int cols)
        : p_(p), rows_(rows), cols_(cols), a_(static_cast<size_t>(rows) * cols, 0) {
        if (!is_prime(p)) throw std::invalid_argument("GfpMat: p must be prime");
    }

    static GfpMat identity(uint32_t p, int n) {
        GfpMat m(p, n, n);
        for (int i = 0; i < n; ++i) m.set(i, i, 1);
        return m;
    }

    uint32_t p() const { return p_; }
    int rows() const { return rows_; }
    int cols() const { return cols_; }

    uint32_t at(int r, int c) const { return a_[static_cast<size_t>(r) * cols_ + c]; }
    void set(int r, int c, uint32_t v) { a_[static_cast<size_t>(r) * cols_ + c] = v % p_; }

    const uint32_t* row_ptr(int r) const { return a_.data() + static_cast<size_t>(r) * cols_; }
    uint32_t* row_ptr(int r) { return a_.data() + static_cast<size_t>(r) * cols_; }

    GfpVec row(int r) const {
        return GfpVec(row_ptr(r), row_ptr(r) + cols_);
    }
    void set_row(int r, const GfpVec& v) {
        CHEVREP_CHECK(static_cast<int>(v.size()) == cols_, "set_row size mismatch");
        std::copy(v.begin(), v.end(), row_ptr(r));
    }

    bool is_zero() const {
        for (uint32_t x : a_)
            if (x) return false;
        return true;
    }

    bool operator==(const GfpMat& o) const {
        return p_ == o.p_ && rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_;
    }

    GfpMat mul(const GfpMat& o) const {
        CHEVREP_CHECK(cols_ == o.rows_ && p_ == o.p_, "mul shape/field mismatch");
        GfpMat r(p_, rows_, o.cols_);
        for (int i = 0; i < rows_; ++i) {
            for (int k = 0; k < cols_; ++k) {
                uint64_t aik = at(i, k);
                if (!aik) continue;
                const uint32_t* orow = o.row_ptr(k);
                uint32_t* rrow = r.row_ptr(i);
                for (int j = 0; j < o.cols_; ++j)
                    rrow[j] = static_cast<uint32_t>((rrow[j] + aik * orow[j]) % p_);
            }
        }
        return r;
    }

    GfpVec apply(const GfpVec& v) const {
        CHEVREP_CHECK(static_cast<int>(v.size()) == cols_, "apply size mismatch");
        GfpVec r(rows_, 0);
        for (int i = 0; i < rows_; ++i) {
            uint64_t acc = 0;
            const uint32_t* ar = row_ptr(i);
            for (int j = 0; j < cols_; ++j) acc += static_cast<uint64_t>(ar[j]) * v[j];
            r[i] = static_cast<uint32_t>(acc % p_);
        }
        return r;
    }

    GfpMat add(const GfpMat& o) const {
        CHEVREP_CHECK(rows_ == o.rows_ && cols_ == o.cols_ && p_ == o.p_, "add mismatch");
        GfpMat r(p_, rows_, cols_);
        for (size_t i = 0; i < a_.size(); ++i) {
            uint32_t s = a_[i] + o.a_[i];
            r.a_[i] = s >= p_ ? s - p_ : s;
        }
        return r;
    }

    GfpMat sub(const GfpMat& o) const {
        CHEVREP_CHECK(rows_ == o.rows_ && cols_ == o.cols_ && p_ == o.p_, "sub mismatch");
        GfpMat r(p_, rows_, cols_);
        for (size_t i = 0; i < a_.size(); ++i)
            r.a_[i] = a_[i] >= o.a_[i] ? a_[i] - o.a_[i] : a_[i] + p_ - o.a_[i];
        return r;
    }

    GfpMat scaled(uint32_t c) const {
        GfpMat r(p_, rows_, cols_);
        for (size_t i = 0; i < a_.size(); ++i)
            r.a_[i] = static_cast<uint32_t>((static_cast<uint64_t>(a_[i]) * c) % p_);
        return r;
    }

    GfpMat transpose() const {
        GfpMat r(p_, cols_, rows_);
        for (int i = 0; i < rows_; ++i)
            for (int j = 0; j < cols_; ++j) r.set(j, i, at(i, j));
        return r;
    }

    // Reduced row echelon form in place; returns pivot column list.
    std::vector<int> rref_in_place() {
        PrimeField F(p_);
        std::vector<int> pivots;
        int r = 0;
        for (int c = 0; c < cols_ && r < rows_; ++c) {
            int sel = -1;
            for (int i = r; i < rows_; ++i)
                if (at(i, c)) {
                    sel = i;
                    break;
                }
            if (sel < 0) continue;
            if (sel != r)
                for (int j = 0; j < cols_; ++j) std::swap(row_ptr(sel)[j], row_ptr(r)[j]);
            uint32_t inv = F.inv(at(r, c));
            if (inv != 1)
                for (int j = c; j < cols_; ++j)
                    row_ptr(r)[j] = F.mul(row_ptr(r)[j], inv);
            for (int i = 0; i < rows_; ++i) {
                if (i == r) continue;
                uint32_t f = at(i, c);
                if (!f) continue;
                const uint32_t* src = row_ptr(r);
                uint32_t* dst = row_ptr(i);
                for (int j = c; j < cols_; ++j)
                    dst[j] = F.sub(dst[j], F.mul(f, src[j]));
            }
            pivots.push_back(c);
            ++r;
        }
        return pivots;
    }

    int rank_generic() const {
        GfpMat tmp = *this;
        return static_cast<int>(tmp.rref_in_place().size());
    }

    // Rows of the result form an RREF basis of {x : M x = 0}.
    GfpMat kernel_generic() const {
        GfpMat tmp = *this;
        std::vector<int> pivots = tmp.rref_in_place();
        std::vector<char> is_pivot(cols_, 0);
        for (int c : pivots) is_pivot[c] = 1;
        int k = cols_ - static_cast<int>(pivots.size());
        GfpMat ker(p_, k, cols_);
        PrimeField F(p_);
        int out = 0;
        for (int c = 0; c < cols_; ++c) {
            if (is_pivot[c]) continue;
            ker.set(out, c, 1);
            for (size_t pi = 0; pi < pivots.size(); ++pi)
                ker.set(out, pivots[pi], F.neg(tmp.at(static_cast<int>(pi), c)));
            ++out;
        }
        return ker;
    }

    // One solution of M x = b, if any.
    std::optional<GfpVec> solve(const GfpVec& b) const {
        CHEVREP_CHECK(static_cast<int>(b.size()) == rows_, "solve rhs size mismatch");
        GfpMat aug(p_, rows_, cols_ + 1);
        for (int i = 0; i < rows_; ++i) {
            std::copy(row_ptr(i), row_ptr(i) + cols_, aug.row_ptr(i));
            aug.set(i, cols_, b[i]);
        }
        std::vector<int> pivots = aug.rref_in_place();
        if (!pivots.empty() && pivots.back() == cols_) return std::nullopt;
        GfpVec x(cols_, 0);
        for (size_t pi = 0; pi < pivots.size(); ++pi)
            x[pivots[pi]] = aug.at(static_cast<int>(pi), cols_);
        return x;
    }

private:
    uint32_t p_;
    int rows_, cols_;
    std::vector<uint32_t> a_;
};

// ---------------------------------------------------------------------------
// Bit-packed matrix over GF(2): 64 columns per word.
// ---------------------------------------------------------------------------
class BitMat {
public:
    BitMat() : rows_(0), cols_(0), wpr_(0) {}
    BitMat(int rows, int cols)
        : rows_(rows), cols_(cols), wpr_((cols + 63) / 64),
          w_(static_cast<size_t>(rows) * wpr_, 0) {}

    static BitMat identity(int n) {
        BitMat m(n, n);
        for (int i = 0; i < n; ++i) m.set(i, i, 1);
        return m;
    }

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    int words_per_row() const { return wpr_; }

    bool get(int r, int c) const {
        return (w_[static_cast<size_t>(r) * wpr_ + (c >> 6)] >> (c & 63)) & 1;
    }
    void set(int r, int c, bool v) {
        uint64_t& word = w_[static_cast<size_t>(r) * wpr_ + (c >> 6)];
        uint64_t mask = uint64_t(1) << (c & 63);
        if (v)
            word |= mask;
        else
            word &= ~mask;
    }

    const uint64_t* row_ptr(int r) const { return w_.data() + static_cast<size_t>(r) * wpr_; }
    uint64_t* row_ptr(int r) { return w_.data() + static_cast<size_t>(r) * wpr_; }

    void xor_row(int dst, int src) {
        uint64_t* d = row_ptr(dst);
        const uint64_t* s = row_ptr(src);
        for (int k = 0; k < wpr_; ++k) d[k] ^= s[k];
    }

    bool row_is_zero(int r) const {
        const uint64_t* s = row_ptr(r);
        for (int k = 0; k < wpr_; ++k)
            if (s[k]) return false;
        return true;
    }

    bool operator==(const BitMat& o) const {
        return rows_ == o.rows_ && cols_ == o.cols_ && w_ == o.w_;
    }

    BitMat mul(const BitMat& o) const {
        CHEVREP_CHECK(cols_ == o.rows_, "BitMat::mul shape mismatch");
        BitMat r(rows_, o.cols_);
        for (int i = 0; i < rows_; ++i) {
            const uint64_t* arow = row_ptr(i);
            uint64_t* rrow = r.row_ptr(i);
            for (int kw = 0; kw < wpr_; ++kw) {
                uint64_t word = arow[kw];
                while (word) {
                    int bit = __builtin_ctzll(word);
                    word &= word - 1;
                    const uint64_t* brow = o.row_ptr(kw * 64 + bit);
                    for (int j = 0; j < o.wpr_; ++j) rrow[j] ^= brow[j];
                }
            }
        }
        return r;
    }

    // Row echelon (reduced) in place; returns pivot columns.
    std::vector<int> rref_in_place() {
        std::vector<int> pivots;
        int r = 0;
        for (int c = 0; c < cols_ && r < rows_; ++c) {
            int sel = -1;
            for (int i = r; i < rows_; ++i)
                if (get(i, c)) {
                    sel = i;
                    break;
                }
            if (sel < 0) continue;
            if (sel != r) {
                uint64_t* a = row_ptr(sel);
                uint64_t* b = row_ptr(r);
                for (int k = 0; k < wpr_; ++k) std::swap(a[k], b[k]);
            }
            for (int i = 0; i < rows_; ++i)
                if (i != r && get(i, c)) xor_row(i, r);
            pivots.push_back(c);
            ++r;
        }
        return pivots;
    }

    int rank() const {
        BitMat tmp = *this;
        return static_cast<int>(tmp.rref_in_place().size());
    }

    BitMat kernel() const {
        BitMat tmp = *this;
        std::vector<int> pivots = tmp.rref_in_place();
        std::vector<char> is_pivot(cols_, 0);
        for (int c : pivots) is_pivot[c] = 1;
        int k = cols_ - static_cast<int>(pivots.size());
        BitMat ker(k, cols_);
        int out = 0;
        for (int c = 0; c < cols_; ++c) {
            if (is_pivot[c]) continue;
            ker.set(out, c, 1);
            for (size_t pi = 0; pi < pivots.size(); ++pi)
                if (tmp.get(static_cast<int>(pi), c)) ker.set(out, pivots[pi], 1);
            ++out;
        }
        return ker;
    }

private:
    int rows_, cols_, wpr_;
    std::vector<uint64_t> w_;
};

inline BitMat pack_gf2(const GfpMat& m) {
    CHEVREP_CHECK(m.p() == 2, "pack_gf2 needs p=2");
    BitMat b(m.rows(), m.cols());
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j)
            if (m.at(i, j)) b.set(i, j, 1);
    return b;
}

inline GfpMat unpack_gf2(const BitMat& b) {
    GfpMat m(2, b.rows(), b.cols());
    for (int i = 0; i < b.rows(); ++i)
        for (int j = 0; j < b.cols(); ++j)
            if (b.get(i, j)) m.set(i, j, 1);
    return m;
}

// Dispatching entry points: packed path for GF(2) once the work is nontrivial.
inline int rank_of(const GfpMat& m) {
    if (m.p() == 2 && static_cast<int64_t>(m.rows()) * m.cols() > 4096)
        return pack_gf2(m).rank();
    return m.rank_generic();
}

inline GfpMat kernel_of(const GfpMat& m) {
    if (m.p() == 2 && static_cast<int64_t>(m.rows()) * m.cols() > 4096)
        return unpack_gf2(pack_gf2(m).kernel());
    return m.kernel_generic();
}

// ---------------------------------------------------------------------------
// Row space in reduced echelon form; supports incremental growth.
// ---------------------------------------------------------------------------
class Subspace {
public:
    Subspace(uint32_t p, int ambient) : p_(p), ambient_(ambient) {}

    static Subspace from_rows(const GfpMat& rows) {
        Subspace s(rows.p(), rows.cols());
        for (int i = 0; i < rows.rows(); ++i) s.add_row(rows.row(i));
        return s;
    }
    static Subspace full(uint32_t p, int n) {
        return from_rows(GfpMat::identity(p, n));
    }

    uint32_t p() const { return p_; }
    int ambient() const { return ambient_; }
    int dim() const { return static_cast<int>(rows_.size()); }

    const std::vector<GfpVec>& rows() const { return rows_; }
    const std::vector<int>& pivots() const { return pivots_; }

    GfpMat basis() const {
        GfpMat m(p_, dim(), ambient_);
        for (int i = 0; i < dim(); ++i) m.set_row(i, rows_[i]);
        return m;
    }

    // Reduce v against the stored echelon rows.
    GfpVec residue(GfpVec v) const {
        PrimeField F(p_);
        for (size_t i = 0; i < rows_.size(); ++i) {
            uint32_t f = v[pivots_[i]];
            if (!f) continue;
            const GfpVec& r = rows_[i];
            for (int j = pivots_[i]; j < ambient_; ++j)
                v[j] = F.sub(v[j], F.mul(f, r[j]));
        }
        return v;
    }

    bool contains(const GfpVec& v) const {
        GfpVec r = residue(v);
        return std::all_of(r.begin(), r.end(), [](uint32_t x) { return x == 0; });
    }

    // Coordinates of a member vector in the echelon basis.
    GfpVec coords(const GfpVec& v) const {
        GfpVec c(dim());
        for (int i = 0; i < dim(); ++i) c[i] = v[pivots_[i]];
        // valid only when v is in the space; callers check via contains() if unsure
        return c;
    }

    // Returns true if the vector enlarged the space.
    bool add_row(const GfpVec& v) {
        CHEVREP_CHECK(static_cast<int>(v.size()) == ambient_, "add_row size mismatch");
        GfpVec r = residue(v);
        int piv = -1;
        for (int j = 0; j < ambient_; ++j)
            if (r[j]) {
                piv = j;
                break;
            }
        if (piv < 0) return false;
        PrimeField F(p_);
        uint32_t inv = F.inv(r[piv]);
        if (inv != 1)
            for (int j = piv; j < ambient_; ++j) r[j] = F.mul(r[j], inv);
        // back-reduce existing rows, keep echelon sorted by pivot
        for (size_t i = 0; i < rows_.size(); ++i) {
            uint32_t f = rows_[i][piv];
            if (!f) continue;
            for (int j = piv; j < ambient_; ++j)
                rows_[i][j] = F.sub(rows_[i][j], F.mul(f, r[j]));
        }
        size_t pos = 0;
        while (pos < pivots_.size() && pivots_[pos] < piv) ++pos;
        rows_.insert(rows_.begin() + pos, std::move(r));
        pivots_.insert(pivots_.begin() + pos, piv);
        return true;
    }

    bool equals(const Subspace& o) const {
        return ambient_ == o.ambient_ && pivots_ == o.pivots_ && rows_ == o.rows_;
    }

    bool contains_space(const Subspace& o) const {
        for (const auto& r : o.rows_)
            if (!contains(r)) return false;
        return true;
    }

    Subspace intersect(const Subspace& o) const {
        CHEVREP_CHECK(ambient_ == o.ambient_ && p_ == o.p_, "intersect mismatch");
        // sum a_i u_i lies in W  iff  sum a_i residue_W(u_i) = 0
        GfpMat resmat(p_, dim(), ambient_);
        for (int i = 0; i < dim(); ++i) resmat.set_row(i, o.residue(rows_[i]));
        GfpMat coeff = resmat.transpose().kernel_generic();  // rows a with a*resmat = 0
        PrimeField F(p_);
        Subspace out(p_, ambient_);
        for (int i = 0; i < coeff.rows(); ++i) {
            GfpVec v(ambient_, 0);
            for (int k = 0; k < dim(); ++k) {
                uint32_t c = coeff.at(i, k);
                if (!c) continue;
                for (int j = 0; j < ambient_; ++j)
                    v[j] = F.add(v[j], F.mul(c, rows_[k][j]));
            }
            out.add_row(v);
        }
        return out;
    }

private:
    uint32_t p_;
    int ambient_;
    std::vector<GfpVec> rows_;
    std::vector<int> pivots_;
};

// ---------------------------------------------------------------------------
// Jordan block sizes from the rank sequence of powers, tracked on a shrinking
// image basis.  mult(s) = r_{s-1} - 2 r_s + r_{s+1}.
// ---------------------------------------------------------------------------
inline Partition jordan_partition(const GfpMat& m, Kind kind) {
    CHEVREP_CHECK(m.rows() == m.cols(), "jordan_partition needs a square matrix");
    int n = m.rows();
    GfpMat x = m;
    if (kind == Kind::unipotent) {
        GfpMat id = GfpMat::identity(m.p(), n);
        x = m.sub(id);
    }
    std::vector<int> ranks;  // ranks[s] = rank(x^{s+1})
    // Track row space of x^k: rowspace(x^{k+1}) = rowspace(B x) for B spanning rowspace(x^k).
    if (m.p() == 2 && n > 64) {
        BitMat xp = pack_gf2(x);
        BitMat b = xp;
        while (true) {
            int r = static_cast<int>(b.rref_in_place().size());
            ranks.push_back(r);
            if (r == 0) break;
            if (static_cast<int>(ranks.size()) > n)
                throw std::invalid_argument("jordan_partition: input is not (uni)nilpotent");
            BitMat trimmed(r, n);
            for (int i = 0; i < r; ++i)
                for (int w = 0; w < b.words_per_row(); ++w)
                    trimmed.row_ptr(i)[w] = b.row_ptr(i)[w];
            b = trimmed.mul(xp);
        }
    } else {
        Subspace image = Subspace::from_rows(x);
        ranks.push_back(image.dim());
        while (ranks.back() > 0) {
            if (static_cast<int>(ranks.size()) > n)
                throw std::invalid_argument("jordan_partition: input is not (uni)nilpotent");
            GfpMat next = image.basis().mul(x);
            image = Subspace::from_rows(next);
            ranks.push_back(image.dim());
        }
    }
    // r_{-1} := n
    Partition part;
    auto rank_at = [&](int s) -> int {
        if (s < 0) return n;
        if (s >= static_cast<int>(ranks.size())) return 0;
        return ranks[s];
    };
    int maxs = static_cast<int>(ranks.size());
    for (int s = maxs; s >= 1; --s) {
        int mult = rank_at(s - 2) - 2 * rank_at(s - 1) + rank_at(s);
        CHEVREP_CHECK(mult >= 0, "jordan_partition negative multiplicity");
        for (int c = 0; c < mult; ++c) part.push_back(s);
    }
    int total = 0;
    for (int s : part) total += s;
    CHEVREP_CHECK(total == n, "jordan_partition sizes do not sum to dim");
    return part;
}

// ---------------------------------------------------------------------------
// Kernel of a large streamed linear system over GF(2) (packed rows).
// Rows arrive through a generator; the solver echelonizes an initial batch,
// extracts its kernel, then restricts every remaining row to kernel
// coordinates, refining whenever enough independent violations accumulate.
// ---------------------------------------------------------------------------
class Gf2Echelon {
public:
    explicit Gf2Echelon(int cols) : cols_(cols), wpr_((cols + 63) / 64) {}

    int cols() const { return cols_; }
    int rank() const { return static_cast<int>(rows_.size()); }

    // Reduce in place against current echelon; returns pivot or -1.
    int reduce(std::vector<uint64_t>& v) const {
        for (size_t i = 0; i < rows_.size(); ++i) {
            int piv = pivots_[i];
            if ((v[piv >> 6] >> (piv & 63)) & 1)
                for (int k = piv >> 6; k < wpr_; ++k) v[k] ^= rows_[i][k];
        }
        for (int k = 0; k < wpr_; ++k)
            if (v[k]) return k * 64 + __builtin_ctzll(v[k]);
        return -1;
    }

    bool add_row(std::vector<uint64_t> v) {
        int piv = reduce(v);
        if (piv < 0) return false;
        for (size_t i = 0; i < rows_.size(); ++i)
            if ((rows_[i][piv >> 6] >> (piv & 63)) & 1)
                for (int k = piv >> 6; k < wpr_; ++k) rows_[i][k] ^= v[k];
        size_t pos = 0;
        while (pos < pivots_.size() && pivots_[pos] < piv) ++pos;
        rows_.insert(rows_.begin() + pos, std::move(v));
        pivots_.insert(pivots_.begin() + pos, piv);
        return true;
    }

    // Kernel basis of the stacked rows, as packed rows of length cols_.
    BitMat kernel() const {
        std::vector<char> is_pivot(cols_, 0);
        for (int c : pivots_) is_pivot[c] = 1;
        int k = cols_ - rank();
        BitMat ker(k, cols_);
        int out = 0;
        for (int c = 0; c < cols_; ++c) {
            if (is_pivot[c]) continue;
            ker.set(out, c, 1);
            for (size_t i = 0; i < rows_.size(); ++i)
                if ((rows_[i][c >> 6] >> (c & 63)) & 1) ker.set(out, pivots_[i], 1);
            ++out;
        }
        return ker;
    }

private:
    int cols_, wpr_;
    std::vector<std::vector<uint64_t>> rows_;
    std::vector<int> pivots_;
};

inline bool packed_dot(const uint64_t* a, const uint64_t* b, int words) {
    uint64_t acc = 0;
    for (int k = 0; k < words; ++k) acc ^= a[k] & b[k];
    return __builtin_popcountll(acc) & 1;
}

// row_source(row_out) fills the next equation row (packed, length words(ncols));
// returns false when exhausted.  Result rows form a basis of the common kernel.
inline BitMat kernel_of_gf2_stream(int ncols,
                                   const std::function<bool(std::vector<uint64_t>&)>& row_source) {
    int wpr = (ncols + 63) / 64;
    Gf2Echelon ech(ncols);
    std::vector<uint64_t> row(wpr);
    // Initial batch: echelonize until well past the column count.
    int64_t batch_target = static_cast<int64_t>(ncols) + ncols / 4 + 64;
    int64_t fed = 0;
    bool exhausted = false;
    while (fed < batch_target) {
        std::fill(row.begin(), row.end(), 0);
        if (!row_source(row)) {
            exhausted = true;
            break;
        }
        ech.add_row(row);
        ++fed;
    }
    BitMat K = ech.kernel();
    if (exhausted) return K;
    // Stream the rest restricted to kernel coordinates.
    Gf2Echelon viol(K.rows());
    int kw = (K.rows() + 63) / 64;
    std::vector<uint64_t> vrow(kw);
    auto refine = [&]() {
        if (viol.rank() == 0) return;
        BitMat s = viol.kernel();   // coeff rows in K-coords
        K = s.mul(K);
        viol = Gf2Echelon(K.rows());
        kw = (K.rows() + 63) / 64;
        vrow.assign(kw, 0);
    };
    while (true) {
        std::fill(row.begin(), row.end(), 0);
        if (!row_source(row)) break;
        if (K.rows() == 0) continue;  // kernel already trivial; nothing to refine
        bool any = false;
        std::fill(vrow.begin(), vrow.end(), 0);
        for (int i = 0; i < K.rows(); ++i) {
            if (packed_dot(row.data(), K.row_ptr(i), wpr)) {
                vrow[i >> 6] |= uint64_t(1) << (i & 63);
                any = true;
            }
        }
        if (any) {
            viol.add_row(vrow);
            if (viol.rank() >= 64 || viol.rank() == K.rows()) refine();
        }
    }
    refine();
    return K;
}

// Generic-field analogue for small systems.
inline GfpMat kernel_of_gfp_stream(uint32_t p, int ncols,
                                   const std::function<bool(GfpVec&)>& row_source) {
    std::vector<GfpVec> rows;
    GfpVec row(ncols, 0);
    while (true) {
        std::fill(row.begin(), row.end(), 0);
        if (!row_source(row)) break;
        rows.push_back(row);
    }
    GfpMat m(p, static_cast<int>(rows.size()), ncols);
    for (size_t i = 0; i < rows.size(); ++i) m.set_row(static_cast<int>(i), rows[i]);
    return m.kernel_generic();
}

}  // namespace chevrep
