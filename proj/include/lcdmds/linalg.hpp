/*
   Copyright 2026 the lcdmds authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#ifndef LCDMDS_LINALG_HPP
#define LCDMDS_LINALG_HPP

#include <cstdint>
#include <vector>

#include "lcdmds/field.hpp"

namespace lcdmds {

/// Dense matrix over a finite field, row-major canonical encodings.
/// Empty matrices (0 x n) are legal and show up as generator matrices of the
/// zero code.
class Matrix {
public:
    Matrix(const FieldCtx& ctx, std::size_t rows, std::size_t cols)
        : ctx_(&ctx), rows_(rows), cols_(cols), a_(rows * cols, 0) {}
    static Matrix identity(const FieldCtx& ctx, std::size_t n);

    const FieldCtx& ctx() const { return *ctx_; }
    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    std::uint32_t at(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }
    void set(std::size_t i, std::size_t j, std::uint32_t enc) { a_[i * cols_ + j] = enc; }

    Matrix transpose() const;
    Matrix operator*(const Matrix& o) const;
    /// Rows of this on top of rows of o.
    Matrix stacked(const Matrix& o) const;
    Matrix selected_columns(const std::vector<std::size_t>& cols) const;

    /// Reduced row echelon form; unique per row space.
    Matrix rref() const;
    std::size_t rank() const;
    /// Basis of { x : M x^T = 0 }, one solution per row; (cols - rank) rows.
    Matrix nullspace() const;
    /// Destructive elimination verdict for square matrices.
    bool is_invertible() const;

    bool operator==(const Matrix& o) const {
        return ctx_ == o.ctx_ && rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_;
    }
    bool operator!=(const Matrix& o) const { return !(*this == o); }

private:
    std::size_t eliminate(std::vector<std::size_t>* pivots);  // in-place RREF, returns rank

    const FieldCtx* ctx_;
    std::size_t rows_, cols_;
    std::vector<std::uint32_t> a_;
};

} // namespace lcdmds

#endif
