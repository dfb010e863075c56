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

#ifndef TSC_FIXTURES_H
#define TSC_FIXTURES_H

#include "tsc/colex.h"
#include "tsc/embedded_graph.h"

namespace tsc {

/// m x n square grid on the torus. Vertex (i, j) is i * n + j.
EmbeddedGraph torus_grid(int m, int n);

/// Two vertices joined by three parallel edges, embedded in the sphere.
EmbeddedGraph theta_graph();

EmbeddedGraph triangle_graph();

/// Petersen graph with the rotation given by edge-id order.
EmbeddedGraph petersen_graph();

/// Hexagonal lattice on the torus with m x n hexagons (2mn vertices).
EmbeddedGraph honeycomb_torus(int m, int n);

/// Square-octagon colex on the torus; m and n even.
TwoColex lattice_4_8(int m, int n);

/// 4-6-12 colex on the torus built from the m x n honeycomb.
TwoColex lattice_4_6_12(int m, int n);

}  // namespace tsc

#endif
