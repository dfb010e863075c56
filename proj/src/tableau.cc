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

#include "tsc/tableau.h"

#include <bit>

namespace tsc {

int SignedPauli::mul_right(const SignedPauli &rhs) {
    auto &x1 = p.x.words();
    auto &z1 = p.z.words();
    const auto &x2 = rhs.p.x.words();
    const auto &z2 = rhs.p.z.words();
    int pc1 = 0;
    int pc2 = 0;
    for (size_t w = 0; w < x1.size(); w++) {
        uint64_t old_x1 = x1[w];
        uint64_t old_z1 = z1[w];
        x1[w] ^= x2[w];
        z1[w] ^= z2[w];
        uint64_t x1z2 = old_x1 & z2[w];
        uint64_t anti = (x2[w] & old_z1) ^ x1z2;
        pc1 += std::popcount(anti);
        pc2 += std::popcount((x1[w] ^ z1[w] ^ x1z2) & anti);
    }
    int s = (pc1 + 2 * pc2 + 2 * (int)rhs.sign) & 3;
    sign ^= (s & 2) != 0;
    return s;
}

Tableau::Tableau(size_t n) : n_(n) {
    for (size_t i = 0; i < 2 * n; i++) {
        Pauli q(n);
        if (i < n) {
            q.x.set(i);
        } else {
            q.z.set(i - n);
        }
        rows_.emplace_back(q);
    }
}

void Tableau::h(size_t q) {
    for (auto &r : rows_) {
        bool x = r.p.x.get(q);
        bool z = r.p.z.get(q);
        r.sign ^= x && z;
        r.p.x.set(q, z);
        r.p.z.set(q, x);
    }
}

void Tableau::s(size_t q) {
    for (auto &r : rows_) {
        bool x = r.p.x.get(q);
        bool z = r.p.z.get(q);
        r.sign ^= x && z;
        r.p.z.set(q, z ^ x);
    }
}

void Tableau::cx(size_t c, size_t t) {
    for (auto &r : rows_) {
        bool xc = r.p.x.get(c);
        bool zc = r.p.z.get(c);
        bool xt = r.p.x.get(t);
        bool zt = r.p.z.get(t);
        r.sign ^= xc && zt && !(xt ^ zc);
        r.p.x.set(t, xt ^ xc);
        r.p.z.set(c, zc ^ zt);
    }
}

std::optional<bool> Tableau::peek(const SignedPauli &p) const {
    for (size_t i = 0; i < n_; i++) {
        if (!commutes(rows_[n_ + i].p, p.p)) {
            return std::nullopt;
        }
    }
    SignedPauli acc{Pauli(n_)};
    for (size_t i = 0; i < n_; i++) {
        if (!commutes(rows_[i].p, p.p)) {
            acc.mul_right(rows_[n_ + i]);
        }
    }
    return acc.sign ^ p.sign;
}

bool Tableau::measure(const SignedPauli &p, std::mt19937_64 &rng) {
    size_t pivot = n_;
    for (size_t i = 0; i < n_; i++) {
        if (!commutes(rows_[n_ + i].p, p.p)) {
            pivot = i;
            break;
        }
    }
    if (pivot == n_) {
        return *peek(p);
    }
    for (size_t i = 0; i < 2 * n_; i++) {
        if (i != n_ + pivot && !commutes(rows_[i].p, p.p)) {
            rows_[i].mul_right(rows_[n_ + pivot]);
        }
    }
    bool outcome = rng() & 1;
    rows_[pivot] = rows_[n_ + pivot];
    rows_[n_ + pivot] = SignedPauli(p.p, p.sign ^ outcome);
    return outcome;
}

void Tableau::randomize(std::mt19937_64 &rng, size_t gates) {
    if (n_ == 0) {
        return;
    }
    for (size_t g = 0; g < gates; g++) {
        size_t a = rng() % n_;
        switch (rng() % 3) {
            case 0:
                h(a);
                break;
            case 1:
                s(a);
                break;
            default:
                if (n_ > 1) {
                    size_t b = rng() % (n_ - 1);
                    cx(a, b >= a ? b + 1 : b);
                }
        }
    }
}

bool Tableau::is_consistent() const {
    for (size_t i = 0; i < n_; i++) {
        for (size_t j = 0; j < n_; j++) {
            if (!commutes(rows_[n_ + i].p, rows_[n_ + j].p)) {
                return false;
            }
            if (commutes(rows_[i].p, rows_[n_ + j].p) != (i != j)) {
                return false;
            }
        }
    }
    return true;
}

}  // namespace tsc
