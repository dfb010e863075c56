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

#include "doctest.h"
#include "tsc/error.h"
#include "tsc/pauli.h"

using namespace tsc;

namespace {

// Single-qubit commutation table, independent of the symplectic form.
bool table_commutes(const std::string &a, const std::string &b) {
    int anti = 0;
    for (size_t i = 0; i < a.size(); i++) {
        if (a[i] != 'I' && b[i] != 'I' && a[i] != b[i]) {
            anti ^= 1;
        }
    }
    return anti == 0;
}

std::string pauli_from_index(int code, int n) {
    std::string s;
    for (int i = 0; i < n; i++) {
        s += "IXYZ"[code % 4];
        code /= 4;
    }
    return s;
}

int brute_center_size(const PauliSpan &gen, int n) {
    int count = 0;
    int total = 1 << (2 * n);
    for (int code = 0; code < total; code++) {
        auto p = Pauli::from_string(pauli_from_index(code, n));
        bool central = gen.contains(p);
        for (const auto &q : gen.generators()) {
            central = central && commutes(p, q);
        }
        count += central;
    }
    return count;
}

}  // namespace

TEST_CASE("link operators") {
    Color r = Color::R;
    Color g = Color::G;
    Color b = Color::B;
    CHECK(link_operator({0, 1}, &r, 3).str() == "XXI");
    CHECK(link_operator({0, 1}, &g, 3).str() == "YYI");
    CHECK(link_operator({0, 1}, &b, 2).str() == "ZZ");
    CHECK(link_operator({0, 1, 2}, nullptr, 3).str() == "ZZZ");
    try {
        link_operator({0, 1}, nullptr, 2);
        FAIL("expected ColorMissing");
    } catch (const Error &e) {
        CHECK(e.code() == ErrorCode::ColorMissing);
    }
}

TEST_CASE("commutation matches the qubit table") {
    CHECK_FALSE(commutes(Pauli::from_string("XXI"), Pauli::from_string("IZZ")));
    CHECK(commutes(Pauli::from_string("XX"), Pauli::from_string("ZZ")));
    CHECK(commutes(Pauli::from_string("XYZ"), Pauli::from_string("III")));
    for (int a = 0; a < 64; a++) {
        for (int b = 0; b < 64; b++) {
            auto sa = pauli_from_index(a, 3);
            auto sb = pauli_from_index(b, 3);
            CHECK(commutes(Pauli::from_string(sa), Pauli::from_string(sb)) == table_commutes(sa, sb));
        }
    }
    CHECK_THROWS_AS(commutes(Pauli::from_string("X"), Pauli::from_string("XX")), Error);
}

TEST_CASE("weight and text form") {
    auto p = Pauli::from_string("IXYZI");
    CHECK(p.weight() == 3);
    CHECK(p.str() == "IXYZI");
    CHECK((p * p).is_identity());
    CHECK((Pauli::from_string("XI") * Pauli::from_string("ZI")).str() == "YI");
}

TEST_CASE("centralizer and center") {
    PauliSpan x0(1, {Pauli::from_string("X")});
    auto c = centralizer(x0);
    CHECK(c.dim() == 1);
    CHECK(c.contains(Pauli::from_string("X")));
    CHECK(centralizer(PauliSpan(2)).dim() == 4);

    PauliSpan xz(2, {Pauli::from_string("XX"), Pauli::from_string("ZZ")});
    // XX and ZZ overlap on two qubits, so they commute and the span is abelian.
    auto z = center(xz);
    CHECK(brute_center_size(xz, 2) == 4);
    CHECK((1 << z.dim()) == brute_center_size(xz, 2));
    CHECK(z.contains(Pauli::from_string("YY")));
    PauliSpan anti(1, {Pauli::from_string("X"), Pauli::from_string("Z")});
    CHECK(center(anti).dim() == 0);
    CHECK(center(x0).dim() == 1);

    // Brute-force center over all 16 two-qubit Paulis.
    PauliSpan gen(2, {Pauli::from_string("XX"), Pauli::from_string("ZI")});
    auto cen = center(gen);
    CHECK(brute_center_size(gen, 2) == (1 << cen.dim()));
    CHECK(cen.dim() == 0);
}

TEST_CASE("rank-nullity in the symplectic space") {
    std::vector<Pauli> gens = {Pauli::from_string("XXII"), Pauli::from_string("IZZI"), Pauli::from_string("IIYY"),
                               Pauli::from_string("XIIX"), Pauli::from_string("ZZZZ")};
    PauliSpan s(4, gens);
    auto c = centralizer(s);
    CHECK(s.dim() + c.dim() == 8);
    for (const auto &p : c.generators()) {
        for (const auto &g : gens) {
            CHECK(commutes(p, g));
        }
    }
    auto z = center(s);
    for (const auto &p : z.generators()) {
        CHECK(s.contains(p));
        CHECK(c.contains(p));
    }
}
