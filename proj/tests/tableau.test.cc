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

#include <random>

#include "doctest.h"
#include "tsc/tableau.h"

using namespace tsc;

namespace {

SignedPauli sp(const char *s, bool sign = false) {
    return SignedPauli(Pauli::from_string(s), sign);
}

// Dense 2x2 matrix product of single-qubit Paulis, tracked as i^k * P.
int phase_of_product(char a, char b, char *out) {
    if (a == 'I') {
        *out = b;
        return 0;
    }
    if (b == 'I') {
        *out = a;
        return 0;
    }
    if (a == b) {
        *out = 'I';
        return 0;
    }
    const char *cyc = "XYZ";
    int ia = (int)(std::string(cyc).find(a));
    int ib = (int)(std::string(cyc).find(b));
    *out = cyc[3 - ia - ib];
    return (ib - ia + 3) % 3 == 1 ? 1 : 3;
}

}  // namespace

TEST_CASE("signed products match single-qubit algebra") {
    const char *ps = "IXYZ";
    for (int i = 0; i < 4; i++) {
        for (int j = 0; j < 4; j++) {
            for (int k = 0; k < 4; k++) {
                for (int l = 0; l < 4; l++) {
                    std::string a{ps[i], ps[k]};
                    std::string b{ps[j], ps[l]};
                    char o1, o2;
                    int ph = phase_of_product(ps[i], ps[j], &o1) + phase_of_product(ps[k], ps[l], &o2);
                    auto lhs = sp(a.c_str());
                    int got = lhs.mul_right(sp(b.c_str()));
                    CHECK(lhs.p == Pauli::from_string(std::string{o1, o2}));
                    CHECK((got & 1) == (ph & 1));
                    if (ph % 2 == 0) {
                        CHECK(lhs.sign == ((ph & 3) == 2));
                    }
                }
            }
        }
    }
}

TEST_CASE("two-qubit hand cases") {
    std::mt19937_64 rng(7);
    Tableau t(2);
    CHECK(t.measure(sp("ZI"), rng) == false);
    CHECK(t.measure(sp("IZ", true), rng) == true);
    t.h(0);
    t.cx(0, 1);
    CHECK(t.peek(sp("XX")) == false);
    CHECK(t.peek(sp("ZZ")) == false);
    CHECK(t.peek(sp("YY")) == true);
    CHECK_FALSE(t.peek(sp("ZI")).has_value());
    bool first = t.measure(sp("XX"), rng);
    CHECK(t.measure(sp("XX"), rng) == first);
    CHECK(t.is_consistent());
    t.s(0);
    CHECK(t.peek(sp("YX")) == false);
}

TEST_CASE("random states stay consistent and repeat outcomes") {
    std::mt19937_64 rng(3);
    Tableau t(9);
    t.randomize(rng, 200);
    CHECK(t.is_consistent());
    auto p = sp("XZYIIZXXI");
    bool a = t.measure(p, rng);
    CHECK(t.measure(p, rng) == a);
    CHECK(t.is_consistent());
}
