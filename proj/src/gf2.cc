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

#include "tsc/gf2.h"

#include <bit>

namespace tsc {

BitVec::BitVec(size_t n) : n_(n), w_((n + 63) / 64, 0) {
}

BitVec BitVec::from_indices(size_t n, const std::vector<int> &ones) {
    BitVec v(n);
    for (int i : ones) {
        v.flip(i);
    }
    return v;
}

void BitVec::set(size_t i, bool v) {
    uint64_t m = uint64_t{1} << (i & 63);
    if (v) {
        w_[i >> 6] |= m;
    } else {
        w_[i >> 6] &= ~m;
    }
}

void BitVec::clear() {
    for (auto &w : w_) {
        w = 0;
    }
}

void BitVec::resize(size_t n) {
    if (n < n_) {
        for (size_t i = n; i < n_; i++) {
            set(i, false);
        }
    }
    n_ = n;
    w_.resize((n + 63) / 64, 0);
}

BitVec &BitVec::operator^=(const BitVec &other) {
    for (size_t k = 0; k < w_.size(); k++) {
        w_[k] ^= other.w_[k];
    }
    return *this;
}

BitVec BitVec::operator^(const BitVec &other) const {
    BitVec r = *this;
    r ^= other;
    return r;
}

BitVec BitVec::operator&(const BitVec &other) const {
    BitVec r = *this;
    for (size_t k = 0; k < w_.size(); k++) {
        r.w_[k] &= other.w_[k];
    }
    return r;
}

bool BitVec::operator<(const BitVec &other) const {
    if (n_ != other.n_) {
        return n_ < other.n_;
    }
    return w_ < other.w_;
}

bool BitVec::any() const {
    for (auto w : w_) {
        if (w) {
            return true;
        }
    }
    return false;
}

size_t BitVec::popcount() const {
    size_t c = 0;
    for (auto w : w_) {
        c += std::popcount(w);
    }
    return c;
}

bool BitVec::dot(const BitVec &other) const {
    uint64_t acc = 0;
    for (size_t k = 0; k < w_.size(); k++) {
        acc ^= w_[k] & other.w_[k];
    }
    return std::popcount(acc) & 1;
}

int BitVec::first_one() const {
    for (size_t k = 0; k < w_.size(); k++) {
        if (w_[k]) {
            return (int)(k * 64 + std::countr_zero(w_[k]));
        }
    }
    return -1;
}

std::vector<int> BitVec::ones() const {
    std::vector<int> out;
    for (size_t k = 0; k < w_.size(); k++) {
        uint64_t w = w_[k];
        while (w) {
            out.push_back((int)(k * 64 + std::countr_zero(w)));
            w &= w - 1;
        }
    }
    return out;
}

std::string BitVec::str() const {
    std::string s(n_, '0');
    for (size_t i = 0; i < n_; i++) {
        if (get(i)) {
            s[i] = '1';
        }
    }
    return s;
}

Gf2Basis::Gf2Basis(size_t width) : width_(width) {
}

bool Gf2Basis::add(const BitVec &v) {
    size_t idx = inserted_++;
    for (auto &c : combos_) {
        c.resize(inserted_);
    }
    for (auto &d : deps_) {
        d.resize(inserted_);
    }
    BitVec r = v;
    BitVec combo(inserted_);
    combo.flip(idx);
    for (size_t i = 0; i < rows_.size(); i++) {
        if (r.get(pivots_[i])) {
            r ^= rows_[i];
            combo ^= combos_[i];
        }
    }
    int p = r.first_one();
    if (p < 0) {
        deps_.push_back(combo);
        return false;
    }
    for (size_t i = 0; i < rows_.size(); i++) {
        if (rows_[i].get(p)) {
            rows_[i] ^= r;
            combos_[i] ^= combo;
        }
    }
    rows_.push_back(std::move(r));
    combos_.push_back(std::move(combo));
    pivots_.push_back(p);
    return true;
}

BitVec Gf2Basis::reduce(const BitVec &v) const {
    BitVec r = v;
    for (size_t i = 0; i < rows_.size(); i++) {
        if (r.get(pivots_[i])) {
            r ^= rows_[i];
        }
    }
    return r;
}

bool Gf2Basis::contains(const BitVec &v) const {
    return !reduce(v).any();
}

std::optional<std::vector<int>> Gf2Basis::express(const BitVec &v) const {
    BitVec r = v;
    BitVec combo(inserted_);
    for (size_t i = 0; i < rows_.size(); i++) {
        if (r.get(pivots_[i])) {
            r ^= rows_[i];
            combo ^= combos_[i];
        }
    }
    if (r.any()) {
        return std::nullopt;
    }
    return combo.ones();
}

size_t gf2_rank(const std::vector<BitVec> &rows) {
    if (rows.empty()) {
        return 0;
    }
    Gf2Basis b(rows[0].size());
    for (const auto &r : rows) {
        b.add(r);
    }
    return b.dim();
}

namespace {

struct Rref {
    std::vector<BitVec> rows;
    std::vector<int> pivots;
};

Rref rref(std::vector<BitVec> rows, size_t ncols, BitVec *rhs) {
    Rref out;
    size_t r = 0;
    for (size_t c = 0; c < ncols && r < rows.size(); c++) {
        size_t sel = r;
        while (sel < rows.size() && !rows[sel].get(c)) {
            sel++;
        }
        if (sel == rows.size()) {
            continue;
        }
        std::swap(rows[r], rows[sel]);
        if (rhs != nullptr) {
            bool a = rhs->get(r);
            rhs->set(r, rhs->get(sel));
            rhs->set(sel, a);
        }
        for (size_t i = 0; i < rows.size(); i++) {
            if (i != r && rows[i].get(c)) {
                rows[i] ^= rows[r];
                if (rhs != nullptr && rhs->get(r)) {
                    rhs->flip(i);
                }
            }
        }
        out.pivots.push_back((int)c);
        r++;
    }
    out.rows = std::move(rows);
    return out;
}

}  // namespace

std::vector<BitVec> gf2_nullspace(const std::vector<BitVec> &rows, size_t ncols) {
    Rref m = rref(rows, ncols, nullptr);
    std::vector<char> is_pivot(ncols, 0);
    for (int p : m.pivots) {
        is_pivot[p] = 1;
    }
    std::vector<BitVec> out;
    for (size_t f = 0; f < ncols; f++) {
        if (is_pivot[f]) {
            continue;
        }
        BitVec x(ncols);
        x.set(f);
        for (size_t i = 0; i < m.pivots.size(); i++) {
            if (m.rows[i].get(f)) {
                x.set(m.pivots[i]);
            }
        }
        out.push_back(std::move(x));
    }
    return out;
}

std::optional<BitVec> gf2_solve(const std::vector<BitVec> &rows, const BitVec &rhs, size_t ncols) {
    BitVec b = rhs;
    Rref m = rref(rows, ncols, &b);
    for (size_t i = m.pivots.size(); i < m.rows.size(); i++) {
        if (b.get(i)) {
            return std::nullopt;
        }
    }
    BitVec x(ncols);
    for (size_t i = 0; i < m.pivots.size(); i++) {
        if (b.get(i)) {
            x.set(m.pivots[i]);
        }
    }
    return x;
}

std::vector<BitVec> gf2_basis_of(const std::vector<BitVec> &vecs, size_t width) {
    Gf2Basis b(width);
    std::vector<BitVec> out;
    for (const auto &v : vecs) {
        if (b.add(v)) {
            out.push_back(v);
        }
    }
    return out;
}

bool gf2_span_contains(const std::vector<BitVec> &b, const std::vector<BitVec> &a, size_t width) {
    Gf2Basis basis(width);
    for (const auto &v : b) {
        basis.add(v);
    }
    for (const auto &v : a) {
        if (!basis.contains(v)) {
            return false;
        }
    }
    return true;
}

}  // namespace tsc
