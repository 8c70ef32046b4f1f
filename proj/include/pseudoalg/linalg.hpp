#pragma once

#include "pseudoalg/hpoly.hpp"

#include <algorithm>
#include <cstddef>
#include <vector>

namespace pseudoalg {

/// Dense exact-rational matrix with deterministic elimination.  Pivots are
/// chosen lowest column first, then lowest row, so reduced forms (and hence
/// nullspace bases and quotient representatives) are reproducible.
class RatMatrix {
  public:
    RatMatrix() = default;
    RatMatrix(size_t rows, size_t cols)
        : cols_(cols), m_(rows, std::vector<Rat>(cols)) {}

    size_t rows() const { return m_.size(); }
    size_t cols() const { return cols_; }

    Rat& at(size_t r, size_t c) { return m_[r][c]; }
    const Rat& at(size_t r, size_t c) const { return m_[r][c]; }

    void add_row(std::vector<Rat> row) {
        if (row.size() != cols_)
            throw std::invalid_argument("RatMatrix: row width mismatch");
        m_.push_back(std::move(row));
    }

    /// In-place reduced row echelon form; returns pivot column indices.
    std::vector<size_t> rref() {
        std::vector<size_t> pivots;
        size_t lead = 0;
        for (size_t col = 0; col < cols_ && lead < m_.size(); ++col) {
            size_t sel = lead;
            while (sel < m_.size() && m_[sel][col].is_zero())
                ++sel;
            if (sel == m_.size())
                continue;
            std::swap(m_[sel], m_[lead]);
            Rat inv = m_[lead][col].inverse();
            for (size_t c = col; c < cols_; ++c)
                m_[lead][c] *= inv;
            for (size_t r = 0; r < m_.size(); ++r) {
                if (r == lead || m_[r][col].is_zero())
                    continue;
                Rat f = m_[r][col];
                for (size_t c = col; c < cols_; ++c)
                    m_[r][c] -= f * m_[lead][c];
            }
            pivots.push_back(col);
            ++lead;
        }
        return pivots;
    }

    size_t rank() const {
        RatMatrix tmp = *this;
        return tmp.rref().size();
    }

    /// Basis of the right nullspace, one vector per free column, in free-column
    /// order.  Each vector is scaled to integer entries with content 1 and a
    /// positive leading (lowest-index) entry.
    std::vector<std::vector<Rat>> nullspace() const {
        RatMatrix red = *this;
        std::vector<size_t> pivots = red.rref();
        std::vector<bool> is_pivot(cols_, false);
        for (size_t p : pivots)
            is_pivot[p] = true;

        std::vector<std::vector<Rat>> basis;
        for (size_t free = 0; free < cols_; ++free) {
            if (is_pivot[free])
                continue;
            std::vector<Rat> v(cols_);
            v[free] = Rat(1);
            for (size_t i = 0; i < pivots.size(); ++i)
                v[pivots[i]] = -red.m_[i][free];
            normalize_int(v);
            basis.push_back(std::move(v));
        }
        return basis;
    }

    /// Scales v so entries are coprime integers and the first nonzero is positive.
    static void normalize_int(std::vector<Rat>& v) {
        BigInt lcm = 1;
        for (const Rat& x : v)
            if (!x.is_zero())
                lcm = lcm / boost::multiprecision::gcd(lcm, x.den()) * x.den();
        BigInt content = 0;
        for (Rat& x : v) {
            if (x.is_zero())
                continue;
            x *= Rat(lcm);
            content = boost::multiprecision::gcd(content, boost::multiprecision::abs(x.num()));
        }
        if (content > 1)
            for (Rat& x : v)
                x /= Rat(content);
        for (const Rat& x : v) {
            if (x.is_zero())
                continue;
            if (x.sign() < 0)
                for (Rat& y : v)
                    y = -y;
            break;
        }
    }

  private:
    size_t cols_ = 0;
    std::vector<std::vector<Rat>> m_;
};

/// Row space with incremental insertion, kept in reduced echelon form.
/// Used to compute dimensions of spans and canonical representatives of
/// vectors modulo a subspace.
class RowSpace {
  public:
    explicit RowSpace(size_t cols) : cols_(cols) {}

    size_t dim() const { return rows_.size(); }
    size_t cols() const { return cols_; }

    /// Reduces v against the current rows (eliminating pivot coordinates).
    std::vector<Rat> reduce(std::vector<Rat> v) const {
        for (size_t i = 0; i < rows_.size(); ++i) {
            const Rat& c = v[pivots_[i]];
            if (c.is_zero())
                continue;
            Rat f = c;
            for (size_t j = 0; j < cols_; ++j)
                v[j] -= f * rows_[i][j];
        }
        return v;
    }

    /// Inserts v if independent; returns true when the dimension grew.
    bool insert(std::vector<Rat> v) {
        v = reduce(std::move(v));
        size_t p = 0;
        while (p < cols_ && v[p].is_zero())
            ++p;
        if (p == cols_)
            return false;
        Rat inv = v[p].inverse();
        for (size_t j = p; j < cols_; ++j)
            v[j] *= inv;
        for (size_t i = 0; i < rows_.size(); ++i) {
            Rat f = rows_[i][p];
            if (f.is_zero())
                continue;
            for (size_t j = 0; j < cols_; ++j)
                rows_[i][j] -= f * v[j];
        }
        size_t pos = 0;
        while (pos < pivots_.size() && pivots_[pos] < p)
            ++pos;
        pivots_.insert(pivots_.begin() + static_cast<long>(pos), p);
        rows_.insert(rows_.begin() + static_cast<long>(pos), std::move(v));
        return true;
    }

    bool contains(const std::vector<Rat>& v) const {
        auto r = reduce(v);
        return std::all_of(r.begin(), r.end(), [](const Rat& x) { return x.is_zero(); });
    }

  private:
    size_t cols_;
    std::vector<size_t> pivots_;
    std::vector<std::vector<Rat>> rows_;
};

/// Row echelon form of a matrix over k[s], by unimodular row operations only
/// (row swaps and subtraction of k[s]-multiples), so the row module is
/// preserved.  Zero rows are dropped.  The number of surviving rows equals the
/// rank over the fraction field k(s).
class PolyRowModule {
  public:
    explicit PolyRowModule(size_t cols) : cols_(cols) {}

    size_t cols() const { return cols_; }
    const std::vector<std::vector<HPoly>>& rows() const { return rows_; }
    size_t rank() const { return rows_.size(); }
    bool is_zero() const { return rows_.empty(); }

    void insert(std::vector<HPoly> row) {
        if (row.size() != cols_)
            throw std::invalid_argument("PolyRowModule: row width mismatch");
        for (size_t col = 0; col < cols_; ++col) {
            size_t own = find_pivot(col);
            if (own == rows_.size()) {
                if (!row[col].is_zero() && leading(row) == col) {
                    insert_sorted(std::move(row));
                    return;
                }
                continue;
            }
            // Euclidean reduction in column col against the resident pivot row.
            while (!row[col].is_zero()) {
                if (mono_degree(row[col]) < mono_degree(rows_[own][col]))
                    std::swap(row, rows_[own]);
                HPoly q = mono_quotient(row[col], rows_[own][col]);
                for (size_t j = 0; j < cols_; ++j)
                    row[j] -= q * rows_[own][j];
            }
        }
    }

  private:
    static size_t leading(const std::vector<HPoly>& row) {
        size_t j = 0;
        while (j < row.size() && row[j].is_zero())
            ++j;
        return j;
    }

    size_t find_pivot(size_t col) const {
        for (size_t i = 0; i < rows_.size(); ++i)
            if (leading(rows_[i]) == col)
                return i;
        return rows_.size();
    }

    void insert_sorted(std::vector<HPoly> row) {
        size_t lead = leading(row);
        size_t pos = 0;
        while (pos < rows_.size() && leading(rows_[pos]) < lead)
            ++pos;
        rows_.insert(rows_.begin() + static_cast<long>(pos), std::move(row));
    }

    /// Ordinary polynomial degree (monomial basis); equals divided-power degree.
    static int mono_degree(const HPoly& p) { return p.degree(); }

    /// Leading-term quotient q = lt(a)/lt(b) in the monomial basis, so that
    /// a - q*b has strictly smaller degree in that column.
    static HPoly mono_quotient(const HPoly& a, const HPoly& b) {
        auto am = hp_to_monomial(a), bm = hp_to_monomial(b);
        int da = static_cast<int>(am.size()) - 1, db = static_cast<int>(bm.size()) - 1;
        std::vector<Rat> q(static_cast<size_t>(da - db + 1));
        q[static_cast<size_t>(da - db)] = am[static_cast<size_t>(da)] / bm[static_cast<size_t>(db)];
        return hp_from_monomial(q);
    }

    size_t cols_;
    std::vector<std::vector<HPoly>> rows_;
};

} // namespace pseudoalg
