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

#include "lcdmds/linalg.hpp"

#include <algorithm>

namespace lcdmds {

Matrix Matrix::identity(const FieldCtx& ctx, std::size_t n) {
    Matrix m(ctx, n, n);
    for (std::size_t i = 0; i < n; ++i) m.set(i, i, 1);
    return m;
}

Matrix Matrix::transpose() const {
    Matrix t(*ctx_, cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i) {
        for (std::size_t j = 0; j < cols_; ++j) t.set(j, i, at(i, j));
    }
    return t;
}

Matrix Matrix::operator*(const Matrix& o) const {
    require_arg(ctx_ == o.ctx_, "matrices over different fields");
    require_arg(cols_ == o.rows_, "matrix dimension mismatch");
    Matrix out(*ctx_, rows_, o.cols_);
    for (std::size_t i = 0; i < rows_; ++i) {
        for (std::size_t k = 0; k < cols_; ++k) {
            std::uint32_t v = at(i, k);
            if (v == 0) continue;
            for (std::size_t j = 0; j < o.cols_; ++j) {
                out.set(i, j, ctx_->add(out.at(i, j), ctx_->mul(v, o.at(k, j))));
            }
        }
    }
    return out;
}

Matrix Matrix::stacked(const Matrix& o) const {
    require_arg(ctx_ == o.ctx_, "matrices over different fields");
    require_arg(cols_ == o.cols_, "column count mismatch");
    Matrix out(*ctx_, rows_ + o.rows_, cols_);
    std::copy(a_.begin(), a_.end(), out.a_.begin());
    std::copy(o.a_.begin(), o.a_.end(), out.a_.begin() + static_cast<std::ptrdiff_t>(a_.size()));
    return out;
}

Matrix Matrix::selected_columns(const std::vector<std::size_t>& cols) const {
    Matrix out(*ctx_, rows_, cols.size());
    for (std::size_t i = 0; i < rows_; ++i) {
        for (std::size_t j = 0; j < cols.size(); ++j) {
            require_arg(cols[j] < cols_, "column index out of range");
            out.set(i, j, at(i, cols[j]));
        }
    }
    return out;
}

std::size_t Matrix::eliminate(std::vector<std::size_t>* pivots) {
    std::size_t rank = 0;
    for (std::size_t col = 0; col < cols_ && rank < rows_; ++col) {
        std::size_t pivot = rank;
        while (pivot < rows_ && at(pivot, col) == 0) ++pivot;
        if (pivot == rows_) continue;
        if (pivot != rank) {
            for (std::size_t j = 0; j < cols_; ++j) std::swap(a_[pivot * cols_ + j], a_[rank * cols_ + j]);
        }
        const std::uint32_t inv = ctx_->inv(at(rank, col));
        for (std::size_t j = col; j < cols_; ++j) set(rank, j, ctx_->mul(at(rank, j), inv));
        for (std::size_t i = 0; i < rows_; ++i) {
            if (i == rank) continue;
            const std::uint32_t f = at(i, col);
            if (f == 0) continue;
            for (std::size_t j = col; j < cols_; ++j) {
                set(i, j, ctx_->sub(at(i, j), ctx_->mul(f, at(rank, j))));
            }
        }
        if (pivots) pivots->push_back(col);
        ++rank;
    }
    return rank;
}

Matrix Matrix::rref() const {
    Matrix work = *this;
    std::vector<std::size_t> pivots;
    std::size_t rank = work.eliminate(&pivots);
    Matrix out(*ctx_, rank, cols_);
    std::copy(work.a_.begin(), work.a_.begin() + static_cast<std::ptrdiff_t>(rank * cols_),
              out.a_.begin());
    return out;
}

std::size_t Matrix::rank() const {
    Matrix work = *this;
    return work.eliminate(nullptr);
}

Matrix Matrix::nullspace() const {
    Matrix work = *this;
    std::vector<std::size_t> pivots;
    std::size_t rank = work.eliminate(&pivots);
    std::vector<bool> is_pivot(cols_, false);
    for (std::size_t c : pivots) is_pivot[c] = true;

    Matrix out(*ctx_, cols_ - rank, cols_);
    std::size_t row = 0;
    for (std::size_t freec = 0; freec < cols_; ++freec) {
        if (is_pivot[freec]) continue;
        out.set(row, freec, 1);
        for (std::size_t pr = 0; pr < rank; ++pr) {
            std::uint32_t v = work.at(pr, freec);
            if (v != 0) out.set(row, pivots[pr], ctx_->neg(v));
        }
        ++row;
    }
    return out;
}

bool Matrix::is_invertible() const {
    require_arg(rows_ == cols_, "invertibility of a non-square matrix");
    return rank() == rows_;
}

} // namespace lcdmds
