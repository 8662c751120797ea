#include "lrc/linalg.hpp"

#include <algorithm>
#include <stdexcept>

namespace lrc::linalg {

Matrix::Matrix(FieldPtr field, int rows, int cols)
    : field_(std::move(field)), rows_(rows), cols_(cols),
      data_(std::size_t(rows) * cols, 0) {
    if (rows < 0 || cols < 0) throw std::invalid_argument("negative matrix shape");
}

Matrix Matrix::identity(FieldPtr field, int n) {
    Matrix m(std::move(field), n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

std::vector<Elem> Matrix::column(int c) const {
    std::vector<Elem> v(rows_);
    for (int r = 0; r < rows_; ++r) v[r] = at(r, c);
    return v;
}

Matrix Matrix::with_replicated_column(int src) const {
    Matrix out(field_, rows_, cols_ + 1);
    for (int r = 0; r < rows_; ++r) {
        for (int c = 0; c < cols_; ++c) out.at(r, c) = at(r, c);
        out.at(r, cols_) = at(r, src);
    }
    return out;
}

bool Matrix::operator==(const Matrix& o) const {
    return rows_ == o.rows_ && cols_ == o.cols_ && data_ == o.data_ &&
           field_->same_as(*o.field_);
}

void Echelon::reduce(std::vector<Elem>& v) const {
    const auto& f = *field_;
    for (std::size_t i = 0; i < rows_.size(); ++i) {
        const Elem c = v[pivots_[i]];
        if (c == 0) continue;
        const auto& row = rows_[i];
        for (int j = 0; j < dim_; ++j)
            if (row[j] != 0) v[j] = f.sub(v[j], f.mul(c, row[j]));
    }
}

bool Echelon::absorb(std::vector<Elem> v) {
    reduce(v);
    int pivot = -1;
    for (int j = 0; j < dim_; ++j) {
        if (v[j] != 0) {
            pivot = j;
            break;
        }
    }
    if (pivot < 0) return false;
    const auto& f = *field_;
    const Elem scale = f.inv(v[pivot]);
    for (int j = 0; j < dim_; ++j) v[j] = f.mul(v[j], scale);
    rows_.push_back(std::move(v));
    pivots_.push_back(pivot);
    return true;
}

bool Echelon::contains(std::vector<Elem> v) const {
    reduce(v);
    return std::all_of(v.begin(), v.end(), [](Elem e) { return e == 0; });
}

int rank(const Matrix& m) {
    Echelon e(m.field(), m.rows());
    int r = 0;
    for (int c = 0; c < m.cols() && r < m.rows(); ++c)
        if (e.absorb(m.column(c))) ++r;
    return r;
}

int rank_of_columns(const Matrix& m, std::span<const int> cols) {
    Echelon e(m.field(), m.rows());
    int r = 0;
    for (int c : cols)
        if (e.absorb(m.column(c))) ++r;
    return r;
}

bool in_span(const Matrix& m, const std::vector<Elem>& v, std::span<const int> cols) {
    if (static_cast<int>(v.size()) != m.rows())
        throw std::invalid_argument("in_span: dimension mismatch");
    Echelon e(m.field(), m.rows());
    for (int c : cols) e.absorb(m.column(c));
    return e.contains(v);
}

Matrix parity_check(const Matrix& g) {
    const auto& f = *g.field();
    const int k = g.rows(), n = g.cols();

    // reduced row echelon form with pivot bookkeeping
    Matrix r = g;
    std::vector<int> pivot_col;
    int row = 0;
    for (int col = 0; col < n && row < k; ++col) {
        int sel = -1;
        for (int i = row; i < k; ++i) {
            if (r.at(i, col) != 0) {
                sel = i;
                break;
            }
        }
        if (sel < 0) continue;
        for (int j = 0; j < n; ++j) std::swap(r.at(sel, j), r.at(row, j));
        const Elem scale = f.inv(r.at(row, col));
        for (int j = 0; j < n; ++j) r.at(row, j) = f.mul(r.at(row, j), scale);
        for (int i = 0; i < k; ++i) {
            if (i == row) continue;
            const Elem c = r.at(i, col);
            if (c == 0) continue;
            for (int j = 0; j < n; ++j)
                r.at(i, j) = f.sub(r.at(i, j), f.mul(c, r.at(row, j)));
        }
        pivot_col.push_back(col);
        ++row;
    }
    if (row < k) throw std::invalid_argument("parity_check: generator is rank-deficient");

    std::vector<bool> is_pivot(n, false);
    for (int c : pivot_col) is_pivot[c] = true;

    Matrix h(g.field(), n - k, n);
    int hrow = 0;
    for (int c = 0; c < n; ++c) {
        if (is_pivot[c]) continue;
        h.at(hrow, c) = 1;
        for (int t = 0; t < k; ++t) h.at(hrow, pivot_col[t]) = f.neg(r.at(t, c));
        ++hrow;
    }
    return h;
}

Matrix multiply(const Matrix& a, const Matrix& b) {
    if (a.cols() != b.rows()) throw std::invalid_argument("multiply: shape mismatch");
    const auto& f = *a.field();
    Matrix out(a.field(), a.rows(), b.cols());
    for (int i = 0; i < a.rows(); ++i) {
        for (int t = 0; t < a.cols(); ++t) {
            const Elem v = a.at(i, t);
            if (v == 0) continue;
            for (int j = 0; j < b.cols(); ++j)
                out.at(i, j) = f.add(out.at(i, j), f.mul(v, b.at(t, j)));
        }
    }
    return out;
}

Matrix transpose(const Matrix& a) {
    Matrix out(a.field(), a.cols(), a.rows());
    for (int i = 0; i < a.rows(); ++i)
        for (int j = 0; j < a.cols(); ++j) out.at(j, i) = a.at(i, j);
    return out;
}

bool is_zero(const Matrix& a) {
    for (int i = 0; i < a.rows(); ++i)
        for (int j = 0; j < a.cols(); ++j)
            if (a.at(i, j) != 0) return false;
    return true;
}

namespace {

struct CircuitSearch {
    const Matrix& m;
    int size;
    std::uint64_t nodes = 0;
    std::uint64_t max_nodes;
    std::vector<std::uint64_t> found_masks;  // shared across sizes
    std::vector<Circuit>* out;
    std::vector<int> chosen;

    bool pruned(std::uint64_t mask) const {
        for (std::uint64_t fm : found_masks)
            if ((mask & fm) == fm) return true;
        return false;
    }

    // Enumerates size-subsets in lexicographic order, carrying the echelon
    // of the chosen prefix. Any dependent prefix smaller than `size` would
    // contain an already-found circuit and is pruned by mask, so absorb()
    // can only fail on the final column.
    void dfs(int next, std::uint64_t mask, const Echelon& ech) {
        const int depth = static_cast<int>(chosen.size());
        for (int c = next; c <= m.cols() - (size - depth); ++c) {
            if (++nodes > max_nodes)
                throw std::runtime_error("circuit enumeration budget exceeded");
            const std::uint64_t mask2 = mask | (1ull << c);
            if (pruned(mask2)) continue;
            Echelon ext = ech;
            const bool independent = ext.absorb(m.column(c));
            if (!independent) {
                if (depth + 1 == size) {
                    chosen.push_back(c);
                    out->push_back(Circuit{chosen, mask2});
                    found_masks.push_back(mask2);
                    chosen.pop_back();
                }
                continue;
            }
            if (depth + 1 < size) {
                chosen.push_back(c);
                dfs(c + 1, mask2, ext);
                chosen.pop_back();
            }
        }
    }
};

}  // namespace

std::vector<Circuit> circuits(const Matrix& m, int size_cap, std::uint64_t max_nodes) {
    if (m.cols() > 63) throw std::invalid_argument("circuits: at most 63 columns");
    std::vector<Circuit> out;
    CircuitSearch search{m, 0, 0, max_nodes, {}, &out, {}};
    const int cap = std::min(size_cap, m.cols());
    for (int s = 1; s <= cap; ++s) {
        search.size = s;
        search.dfs(0, 0, Echelon(m.field(), m.rows()));
    }
    return out;
}

}  // namespace lrc::linalg
