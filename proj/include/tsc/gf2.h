// Copyright 2026 The tsc Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef TSC_GF2_H
#define TSC_GF2_H

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace tsc {

/// Packed GF(2) vector of fixed length.
class BitVec {
   public:
    BitVec() = default;
    explicit BitVec(size_t n);

    static BitVec from_indices(size_t n, const std::vector<int> &ones);

    size_t size() const {
        return n_;
    }
    bool get(size_t i) const {
        return (w_[i >> 6] >> (i & 63)) & 1;
    }
    void set(size_t i, bool v = true);
    void flip(size_t i) {
        w_[i >> 6] ^= uint64_t{1} << (i & 63);
    }
    void clear();
    void resize(size_t n);

    BitVec &operator^=(const BitVec &other);
    BitVec operator^(const BitVec &other) const;
    BitVec operator&(const BitVec &other) const;
    bool operator==(const BitVec &other) const = default;
    bool operator<(const BitVec &other) const;

    bool any() const;
    size_t popcount() const;
    bool dot(const BitVec &other) const;
    int first_one() const;
    std::vector<int> ones() const;
    std::string str() const;

    std::vector<uint64_t> &words() {
        return w_;
    }
    const std::vector<uint64_t> &words() const {
        return w_;
    }

   private:
    size_t n_ = 0;
    std::vector<uint64_t> w_;
};

/// Incrementally maintained reduced echelon basis. Each stored row also
/// remembers which inserted vectors it was built from, so membership queries
/// can return an explicit combination.
class Gf2Basis {
   public:
    explicit Gf2Basis(size_t width = 0);

    size_t width() const {
        return width_;
    }
    size_t dim() const {
        return rows_.size();
    }
    size_t inserted() const {
        return inserted_;
    }

    /// Returns true if v was independent of the current basis.
    bool add(const BitVec &v);
    bool contains(const BitVec &v) const;
    /// Reduces v against the basis; returns the residue.
    BitVec reduce(const BitVec &v) const;
    /// Indices of inserted vectors whose sum is v, if v is in the span.
    std::optional<std::vector<int>> express(const BitVec &v) const;
    /// Combinations of inserted vectors that summed to zero when added.
    const std::vector<BitVec> &dependencies() const {
        return deps_;
    }
    const std::vector<BitVec> &rows() const {
        return rows_;
    }

   private:
    size_t width_;
    size_t inserted_ = 0;
    std::vector<BitVec> rows_;
    std::vector<BitVec> combos_;
    std::vector<int> pivots_;
    std::vector<BitVec> deps_;
};

size_t gf2_rank(const std::vector<BitVec> &rows);

/// Basis of {x : row . x = 0 for every row}, x of length ncols.
std::vector<BitVec> gf2_nullspace(const std::vector<BitVec> &rows, size_t ncols);

/// Some x with row_i . x = rhs_i for every i, if one exists.
std::optional<BitVec> gf2_solve(const std::vector<BitVec> &rows, const BitVec &rhs, size_t ncols);

/// Independent subset spanning the same space.
std::vector<BitVec> gf2_basis_of(const std::vector<BitVec> &vecs, size_t width);

/// True iff span(a) is contained in span(b).
bool gf2_span_contains(const std::vector<BitVec> &b, const std::vector<BitVec> &a, size_t width);

}  // namespace tsc

#endif
