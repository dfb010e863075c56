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

#ifndef TSC_TABLEAU_H
#define TSC_TABLEAU_H

#include <random>

#include "tsc/pauli.h"

namespace tsc {

/// Pauli with a sign bit. Y is stored as x=z=1 with sign +.
struct SignedPauli {
    Pauli p;
    bool sign = false;

    SignedPauli() = default;
    explicit SignedPauli(const Pauli &q, bool s = false) : p(q), sign(s) {
    }

    /// this = this * rhs; returns log_i of the dropped scalar (0 or 2 when they commute).
    int mul_right(const SignedPauli &rhs);
};

/// Stabilizer state on n qubits (Aaronson-Gottesman layout).
class Tableau {
   public:
    explicit Tableau(size_t n);

    size_t num_qubits() const {
        return n_;
    }
    const SignedPauli &stabilizer(size_t i) const {
        return rows_[n_ + i];
    }
    const SignedPauli &destabilizer(size_t i) const {
        return rows_[i];
    }

    void h(size_t q);
    void s(size_t q);
    void cx(size_t c, size_t t);

    /// Measures P (with sign); returns the outcome bit. Random outcomes draw from rng.
    bool measure(const SignedPauli &p, std::mt19937_64 &rng);
    /// Outcome of P if deterministic.
    std::optional<bool> peek(const SignedPauli &p) const;

    /// Scrambles with random H, S and CX gates.
    void randomize(std::mt19937_64 &rng, size_t gates);

    bool is_consistent() const;

   private:
    size_t n_;
    std::vector<SignedPauli> rows_;
};

}  // namespace tsc

#endif
