#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "lrc/gf.hpp"

namespace lrc::linalg {

using gf::Elem;
using gf::FieldPtr;

/// Dense row-major matrix over a finite field. Immutable use is the norm
/// after construction; all linalg routines treat inputs as read-only.
class Matrix {
  public:
    Matrix(FieldPtr field, int rows, int cols);

    static Matrix identity(FieldPtr field, int n);

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    const FieldPtr& field() const { return field_; }

    Elem& at(int r, int c) { return data_[std::size_t(r) * cols_ + c]; }
    Elem at(int r, int c) const { return data_[std::size_t(r) * cols_ + c]; }

    std::vector<Elem> column(int c) const;
    std::span<const Elem> row(int r) const {
        return {data_.data() + std::size_t(r) * cols_, std::size_t(cols_)};
    }

    /// Appends a copy of column src as the new last column.
    Matrix with_replicated_column(int src) const;

    bool operator==(const Matrix&) const;

  private:
    FieldPtr field_;
    int rows_ = 0, cols_ = 0;
    std::vector<Elem> data_;
};

/// Incremental row-echelon basis of vectors in F_q^dim. absorb() reduces a
/// vector against the basis and inserts the normalized remainder if it is
/// nonzero; contains() tests span membership without mutating.
class Echelon {
  public:
    Echelon(FieldPtr field, int dim) : field_(std::move(field)), dim_(dim) {}

    bool absorb(std::vector<Elem> v);
    bool contains(std::vector<Elem> v) const;
    int rank() const { return static_cast<int>(rows_.size()); }

  private:
    void reduce(std::vector<Elem>& v) const;

    FieldPtr field_;
    int dim_;
    std::vector<std::vector<Elem>> rows_;  // normalized, pivot = leading 1
    std::vector<int> pivots_;
};

int rank(const Matrix& m);

/// Rank of the submatrix formed by the given columns.
int rank_of_columns(const Matrix& m, std::span<const int> cols);

/// True iff v lies in the linear span of the given columns.
/// in_span(0, {}) is true.
bool in_span(const Matrix& m, const std::vector<Elem>& v, std::span<const int> cols);

/// Parity-check matrix: H is (n-k) x n with G·Hᵀ = 0 and rank(H) = n-k.
/// Requires rank(G) = rows(G).
Matrix parity_check(const Matrix& g);

Matrix multiply(const Matrix& a, const Matrix& b);
Matrix transpose(const Matrix& a);
bool is_zero(const Matrix& a);

/// A circuit of the column matroid: a linearly dependent column set whose
/// proper subsets are all independent. Columns sorted ascending.
struct Circuit {
    std::vector<int> cols;
    std::uint64_t mask = 0;

    bool operator==(const Circuit&) const = default;
};

/// All circuits with size <= size_cap, enumerated by increasing size.
/// Supersets of found circuits are pruned, so every reported dependent set
/// is minimal. Duplicate columns legitimately yield size-2 circuits.
std::vector<Circuit> circuits(const Matrix& m, int size_cap,
                              std::uint64_t max_nodes = 1ull << 26);

}  // namespace lrc::linalg
