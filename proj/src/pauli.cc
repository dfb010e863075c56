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

#include "tsc/pauli.h"

#include <bit>

#include "tsc/error.h"

namespace tsc {

Pauli Pauli::from_string(const std::string &s) {
    Pauli p(s.size());
    for (size_t i = 0; i < s.size(); i++) {
        switch (s[i]) {
            case 'I': case '_': break;
            case 'X': p.x.set(i); break;
            case 'Z': p.z.set(i); break;
            case 'Y': p.x.set(i); p.z.set(i); break;
            default: fail(ErrorCode::ParseError, std::string("bad Pauli character '") + s[i] + "'");
        }
    }
    return p;
}

std::string Pauli::str() const {
    std::string s(num_qubits(), 'I');
    for (size_t i = 0; i < s.size(); i++) {
        bool a = x.get(i);
        bool b = z.get(i);
        s[i] = a ? (b ? 'Y' : 'X') : (b ? 'Z' : 'I');
    }
    return s;
}

size_t Pauli::weight() const {
    size_t w = 0;
    for (size_t k = 0; k < x.words().size(); k++) {
        w += std::popcount(x.words()[k] | z.words()[k]);
    }
    return w;
}

Pauli &Pauli::operator*=(const Pauli &other) {
    if (other.num_qubits() != num_qubits()) {
        fail(ErrorCode::SizeMismatch, "Pauli sizes differ");
    }
    x ^= other.x;
    z ^= other.z;
    return *this;
}

Pauli Pauli::operator*(const Pauli &other) const {
    Pauli r = *this;
    r *= other;
    return r;
}

BitVec Pauli::symplectic() const {
    size_t n = num_qubits();
    BitVec v(2 * n);
    for (int i : x.ones()) {
        v.set(i);
    }
    for (int i : z.ones()) {
        v.set(n + i);
    }
    return v;
}

Pauli Pauli::from_symplectic(const BitVec &v) {
    size_t n = v.size() / 2;
    Pauli p(n);
    for (int i : v.ones()) {
        if ((size_t)i < n) {
            p.x.set(i);
        } else {
            p.z.set(i - n);
        }
    }
    return p;
}

bool commutes(const Pauli &p, const Pauli &q) {
    if (p.num_qubits() != q.num_qubits()) {
        fail(ErrorCode::SizeMismatch, "Pauli sizes differ");
    }
    return p.x.dot(q.z) == p.z.dot(q.x);
}

Pauli link_operator(const std::vector<int> &edge, const Color *color, size_t n) {
    Pauli p(n);
    for (int v : edge) {
        if (v < 0 || (size_t)v >= n) {
            fail(ErrorCode::SizeMismatch, "edge vertex " + std::to_string(v) + " outside " + std::to_string(n) + " qubits");
        }
    }
    if (edge.size() == 3) {
        for (int v : edge) {
            p.z.set(v);
        }
        return p;
    }
    if (color == nullptr) {
        fail(ErrorCode::ColorMissing, "rank-2 edge has no color");
    }
    for (int v : edge) {
        if (*color != Color::B) {
            p.x.set(v);
        }
        if (*color != Color::R) {
            p.z.set(v);
        }
    }
    return p;
}

PauliSpan::PauliSpan(size_t n) : n_(n), basis_(2 * n) {
}

PauliSpan::PauliSpan(size_t n, const std::vector<Pauli> &generators) : PauliSpan(n) {
    for (const auto &g : generators) {
        add(g);
    }
}

void PauliSpan::add(const Pauli &p) {
    if (p.num_qubits() != n_) {
        fail(ErrorCode::SizeMismatch, "generator size differs from span");
    }
    generators_.push_back(p);
    basis_.add(p.symplectic());
}

bool PauliSpan::contains(const Pauli &p) const {
    return basis_.contains(p.symplectic());
}

std::vector<Pauli> PauliSpan::basis() const {
    std::vector<Pauli> out;
    for (const auto &r : basis_.rows()) {
        out.push_back(Pauli::from_symplectic(r));
    }
    return out;
}

PauliSpan centralizer(const PauliSpan &gen) {
    size_t n = gen.num_qubits();
    // P commutes with Q iff [Q.z | Q.x] . [P.x | P.z] = 0.
    std::vector<BitVec> rows;
    for (const auto &q : gen.basis()) {
        Pauli swapped(n);
        swapped.x = q.z;
        swapped.z = q.x;
        rows.push_back(swapped.symplectic());
    }
    PauliSpan out(n);
    for (const auto &v : gf2_nullspace(rows, 2 * n)) {
        out.add(Pauli::from_symplectic(v));
    }
    return out;
}

PauliSpan center(const PauliSpan &gen) {
    size_t n = gen.num_qubits();
    std::vector<Pauli> b = gen.basis();
    size_t m = b.size();
    std::vector<BitVec> gram(m, BitVec(m));
    for (size_t i = 0; i < m; i++) {
        for (size_t j = i + 1; j < m; j++) {
            if (!commutes(b[i], b[j])) {
                gram[i].set(j);
                gram[j].set(i);
            }
        }
    }
    PauliSpan out(n);
    for (const auto &c : gf2_nullspace(gram, m)) {
        Pauli p(n);
        for (int i : c.ones()) {
            p *= b[i];
        }
        out.add(p);
    }
    return out;
}

}  // namespace tsc
