// intmat.hpp - overflow-checked 64-bit integer and rational arithmetic,
// dense integer matrices, and row-style Hermite normal form.
#pragma once

#include <cstdint>
#include <numeric>
#include <vector>

#include "chevrep/gf.hpp"
#include "chevrep/matrix.hpp"

namespace chevrep {

inline int64_t checked_add(int64_t a, int64_t b) {
    int64_t r;
    CHEVREP_CHECK(!__builtin_add_overflow(a, b, &r), "int64 add overflow");
    return r;
}

inline int64_t checked_sub(int64_t a, int64_t b) {
    int64_t r;
    CHEVREP_CHECK(!__builtin_sub_overflow(a, b, &r), "int64 sub overflow");
    return r;
}

inline int64_t checked_mul(int64_t a, int64_t b) {
    int64_t r;
    CHEVREP_CHECK(!__builtin_mul_overflow(a, b, &r), "int64 mul overflow");
    return r;
}

// ---------------------------------------------------------------------------
// Exact rational with int64 numerator/denominator, always normalized (den > 0).
// ---------------------------------------------------------------------------
struct Rat {
    int64_t num = 0;
    int64_t den = 1;

    Rat() = default;
    Rat(int64_t n) : num(n), den(1) {}
    Rat(int64_t n, int64_t d) : num(n), den(d) {
        CHEVREP_CHECK(d != 0, "Rat: zero denominator");
        normalize();
    }

    void normalize() {
        if (den < 0) {
            num = checked_sub(0, num);
            den = checked_sub(0, den);
        }
        int64_t g = std::gcd(num < 0 ? -num : num, den);
        if (g > 1) {
            num /= g;
            den /= g;
        }
        if (num == 0) den = 1;
    }

    bool is_zero() const { return num == 0; }
    bool is_integer() const { return den == 1; }
    int64_t as_int() const {
        CHEVREP_CHECK(den == 1, "Rat: not an integer");
        return num;
    }

    Rat operator+(const Rat& o) const {
        return Rat(checked_add(checked_mul(num, o.den), checked_mul(o.num, den)),
                   checked_mul(den, o.den));
    }
    Rat operator-(const Rat& o) const {
        return Rat(checked_sub(checked_mul(num, o.den), checked_mul(o.num, den)),
                   checked_mul(den, o.den));
    }
    Rat operator*(const Rat& o) const {
        return Rat(checked_mul(num, o.num), checked_mul(den, o.den));
    }
    Rat operator/(const Rat& o) const {
        CHEVREP_CHECK(o.num != 0, "Rat: division by zero");
        return Rat(checked_mul(num, o.den), checked_mul(den, o.num));
    }
    Rat operator-() const { return Rat(checked_sub(0, num), den); }
    bool operator==(const Rat& o) const { return num == o.num && den == o.den; }
    bool operator!=(const Rat& o) const { return !(*this == o); }
};

using RatVec = std::vector<Rat>;

// ---------------------------------------------------------------------------
// Dense integer matrix with checked arithmetic.
// ---------------------------------------------------------------------------
class IntMat {
public:
    IntMat() : rows_(0), cols_(0) {}
    IntMat(int rows, int cols) : rows_(rows), cols_(cols),
                                 a_(static_cast<size_t>(rows) * cols, 0) {}

    static IntMat identity(int n) {
        IntMat m(n, n);
        for (int i = 0; i < n; ++i) m.set(i, i, 1);
        return m;
    }

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    int64_t at(int r, int c) const { return a_[static_cast<size_t>(r) * cols_ + c]; }
    void set(int r, int c, int64_t v) { a_[static_cast<size_t>(r) * cols_ + c] = v; }
    void add_at(int r, int c, int64_t v) {
        auto& x = a_[static_cast<size_t>(r) * cols_ + c];
        x = checked_add(x, v);
    }

    bool is_zero() const {
        for (int64_t x : a_)
            if (x) return false;
        return true;
    }

    bool operator==(const IntMat& o) const {
        return rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_;
    }

    IntMat mul(const IntMat& o) const {
        CHEVREP_CHECK(cols_ == o.rows_, "IntMat::mul shape mismatch");
        IntMat r(rows_, o.cols_);
        for (int i = 0; i < rows_; ++i)
            for (int k = 0; k < cols_; ++k) {
                int64_t aik = at(i, k);
                if (!aik) continue;
                for (int j = 0; j < o.cols_; ++j) {
                    int64_t t = checked_mul(aik, o.at(k, j));
                    r.set(i, j, checked_add(r.at(i, j), t));
                }
            }
        return r;
    }

    IntMat add(const IntMat& o) const {
        CHEVREP_CHECK(rows_ == o.rows_ && cols_ == o.cols_, "IntMat::add mismatch");
        IntMat r(rows_, cols_);
        for (size_t i = 0; i < a_.size(); ++i) r.a_[i] = checked_add(a_[i], o.a_[i]);
        return r;
    }

    IntMat sub(const IntMat& o) const {
        CHEVREP_CHECK(rows_ == o.rows_ && cols_ == o.cols_, "IntMat::sub mismatch");
        IntMat r(rows_, cols_);
        for (size_t i = 0; i < a_.size(); ++i) r.a_[i] = checked_sub(a_[i], o.a_[i]);
        return r;
    }

    IntMat scaled(int64_t c) const {
        IntMat r(rows_, cols_);
        for (size_t i = 0; i < a_.size(); ++i) r.a_[i] = checked_mul(a_[i], c);
        return r;
    }

    // Every entry must be divisible by d.
    IntMat exact_div(int64_t d) const {
        CHEVREP_CHECK(d != 0, "exact_div by zero");
        IntMat r(rows_, cols_);
        for (size_t i = 0; i < a_.size(); ++i) {
            CHEVREP_CHECK(a_[i] % d == 0, "exact_div: entry not divisible");
            r.a_[i] = a_[i] / d;
        }
        return r;
    }

    GfpMat mod_p(uint32_t p) const {
        GfpMat r(p, rows_, cols_);
        PrimeField F(p);
        for (int i = 0; i < rows_; ++i)
            for (int j = 0; j < cols_; ++j) r.set(i, j, F.reduce(at(i, j)));
        return r;
    }

private:
    int rows_, cols_;
    std::vector<int64_t> a_;
};

// ---------------------------------------------------------------------------
// Row-style Hermite normal form: rows of the result are a basis of the
// lattice generated by the input rows.  Pivots positive, entries above a
// pivot reduced into [0, pivot).  Zero rows dropped.
// ---------------------------------------------------------------------------
inline std::vector<std::vector<int64_t>> hnf_rows(std::vector<std::vector<int64_t>> rows) {
    if (rows.empty()) return rows;
    size_t ncols = rows[0].size();
    size_t r = 0;
    for (size_t c = 0; c < ncols && r < rows.size(); ++c) {
        // gcd elimination in column c among rows r..end
        while (true) {
            size_t best = rows.size();
            int64_t bestabs = 0;
            for (size_t i = r; i < rows.size(); ++i) {
                int64_t v = rows[i][c];
                if (v == 0) continue;
                int64_t a = v < 0 ? -v : v;
                if (best == rows.size() || a < bestabs) {
                    best = i;
                    bestabs = a;
                }
            }
            if (best == rows.size()) break;  // column clear below r
            std::swap(rows[r], rows[best]);
            if (rows[r][c] < 0)
                for (auto& x : rows[r]) x = checked_sub(0, x);
            bool reduced_all = true;
            for (size_t i = r + 1; i < rows.size(); ++i) {
                if (rows[i][c] == 0) continue;
                int64_t q = rows[i][c] / rows[r][c];
                if (q)
                    for (size_t j = 0; j < ncols; ++j)
                        rows[i][j] = checked_sub(rows[i][j], checked_mul(q, rows[r][j]));
                if (rows[i][c] != 0) reduced_all = false;
            }
            if (reduced_all) {
                // reduce entries above the pivot
                for (size_t i = 0; i < r; ++i) {
                    int64_t q = rows[i][c] / rows[r][c];
                    if (rows[i][c] % rows[r][c] < 0) --q;  // floor division
                    if (q)
                        for (size_t j = 0; j < ncols; ++j)
                            rows[i][j] = checked_sub(rows[i][j], checked_mul(q, rows[r][j]));
                }
                ++r;
                break;
            }
        }
    }
    rows.resize(r);
    return rows;
}

}  // namespace chevrep
