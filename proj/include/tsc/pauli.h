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

#ifndef TSC_PAULI_H
#define TSC_PAULI_H

#include <string>
#include <vector>

#include "tsc/colex.h"
#include "tsc/gf2.h"

namespace tsc {

/// Phase-free Pauli operator. Qubit i carries X if x_i, Z if z_i, Y if both.
struct Pauli {
    BitVec x;
    BitVec z;

    Pauli() = default;
    explicit Pauli(size_t n) : x(n), z(n) {
    }

    static Pauli from_string(const std::string &s);
    std::string str() const;

    size_t num_qubits() const {
        return x.size();
    }
    size_t weight() const;
    bool is_identity() const {
        return !x.any() && !z.any();
    }

    /// Product mod phase.
    Pauli &operator*=(const Pauli &other);
    Pauli operator*(const Pauli &other) const;
    bool operator==(const Pauli &other) const = default;

    /// Packs as [x | z] for elimination.
    BitVec symplectic() const;
    static Pauli from_symplectic(const BitVec &v);
};

bool commutes(const Pauli &p, const Pauli &q);

/// XX, YY, ZZ on rank-2 edges by color; ZZZ on rank-3 edges.
Pauli link_operator(const std::vector<int> &edge, const Color *color, size_t n);

class PauliSpan {
   public:
    explicit PauliSpan(size_t n = 0);
    PauliSpan(size_t n, const std::vector<Pauli> &generators);

    void add(const Pauli &p);
    size_t num_qubits() const {
        return n_;
    }
    size_t dim() const {
        return basis_.dim();
    }
    bool contains(const Pauli &p) const;
    const std::vector<Pauli> &generators() const {
        return generators_;
    }
    /// Independent generators spanning the same group.
    std::vector<Pauli> basis() const;

   private:
    size_t n_;
    std::vector<Pauli> generators_;
    Gf2Basis basis_;
};

/// All Paulis commuting with every generator.
PauliSpan centralizer(const PauliSpan &gen);

/// Elements of the span commuting with the whole span.
PauliSpan center(const PauliSpan &gen);

}  // namespace tsc

#endif
