/*
 * Copyright 2026 The mpcodes Authors.
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     https://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#include "mpcodes/block_matrix.hpp"

#include "mpcodes/error.hpp"

namespace mpcodes {

namespace {

void RequireSameField(const Field& a, const Field& b) {
  if (!(a == b)) throw Error(ErrorCode::kFieldMismatch, "matrices over different fields");
}

void RequireSameShape(const BlockMatrix& a, const BlockMatrix& b) {
  if (!a.SameShape(b)) {
    throw Error(ErrorCode::kShapeMismatch,
                std::to_string(a.rows()) + "x" + std::to_string(a.cols()) + " vs " +
                    std::to_string(b.rows()) + "x" + std::to_string(b.cols()));
  }
  RequireSameField(a.field(), b.field());
}

}  // namespace

BlockMatrix::BlockMatrix(Field field, std::size_t rows, std::size_t cols)
    : field_(std::move(field)), rows_(rows), cols_(cols), entries_(rows * cols, field_->Zero()) {}

BlockMatrix BlockMatrix::Identity(Field field, std::size_t n) {
  BlockMatrix m(field, n, n);
  for (std::size_t i = 0; i < n; ++i) m.at(i, i) = field->One();
  return m;
}

BlockMatrix BlockMatrix::Random(Field field, std::size_t rows, std::size_t cols, Rng& rng) {
  BlockMatrix m(field, rows, cols);
  for (FieldElement& e : m.entries_) e = field->Random(rng);
  return m;
}

BlockMatrix BlockMatrix::Scalar(const FieldElement& value, Field field) {
  BlockMatrix m(std::move(field), 1, 1);
  m.at(0, 0) = value;
  return m;
}

bool BlockMatrix::is_zero() const {
  for (const FieldElement& e : entries_) {
    if (!e.is_zero()) return false;
  }
  return true;
}

BlockMatrix BlockMatrix::operator+(const BlockMatrix& o) const {
  BlockMatrix out = *this;
  out += o;
  return out;
}

BlockMatrix BlockMatrix::operator-(const BlockMatrix& o) const {
  RequireSameShape(*this, o);
  BlockMatrix out = *this;
  for (std::size_t i = 0; i < entries_.size(); ++i) out.entries_[i] -= o.entries_[i];
  return out;
}

BlockMatrix& BlockMatrix::operator+=(const BlockMatrix& o) {
  RequireSameShape(*this, o);
  for (std::size_t i = 0; i < entries_.size(); ++i) entries_[i] += o.entries_[i];
  return *this;
}

bool BlockMatrix::operator==(const BlockMatrix& o) const {
  return rows_ == o.rows_ && cols_ == o.cols_ && entries_ == o.entries_;
}

BlockMatrix BlockMatrix::Transposed() const {
  BlockMatrix t(field_, cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols_; ++j) t.at(j, i) = at(i, j);
  }
  return t;
}

BlockMatrix BlockMatrix::SelectColumns(std::span<const std::size_t> cols) const {
  BlockMatrix out(field_, rows_, cols.size());
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols.size(); ++j) out.at(i, j) = at(i, cols[j]);
  }
  return out;
}

BlockMatrix BlockMatrix::SelectRows(std::span<const std::size_t> rows) const {
  BlockMatrix out(field_, rows.size(), cols_);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    for (std::size_t j = 0; j < cols_; ++j) out.at(i, j) = at(rows[i], j);
  }
  return out;
}

std::string BlockMatrix::ToString() const {
  std::string s;
  for (std::size_t i = 0; i < rows_; ++i) {
    if (i > 0) s += "; ";
    for (std::size_t j = 0; j < cols_; ++j) {
      if (j > 0) s.push_back(' ');
      s += at(i, j).ToString();
    }
  }
  return s;
}

BlockMatrix Mul(const BlockMatrix& a, const BlockMatrix& b, MulCounter* counter) {
  if (a.cols() != b.rows()) {
    throw Error(ErrorCode::kShapeMismatch,
                "inner dimensions " + std::to_string(a.cols()) + " and " + std::to_string(b.rows()));
  }
  RequireSameField(a.field(), b.field());
  BlockMatrix out(a.field(), a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const FieldElement& aik = a.at(i, k);
      if (aik.is_zero()) {
        Tick(counter, b.cols());
        continue;
      }
      for (std::size_t j = 0; j < b.cols(); ++j) out.at(i, j) += aik * b.at(k, j);
      Tick(counter, b.cols());
    }
  }
  return out;
}

BlockMatrix Scale(const FieldElement& s, const BlockMatrix& m, MulCounter* counter) {
  BlockMatrix out = m;
  for (FieldElement& e : out.entries()) e = s * e;
  Tick(counter, m.rows() * m.cols());
  return out;
}

void AddScaled(BlockMatrix& out, const FieldElement& s, const BlockMatrix& m, MulCounter* counter) {
  RequireSameShape(out, m);
  auto dst = out.entries();
  auto src = m.entries();
  for (std::size_t i = 0; i < dst.size(); ++i) dst[i] += s * src[i];
  Tick(counter, src.size());
}

}  // namespace mpcodes
