// Copyright 2026 The kcforge Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

// Random instances for property checks. Every sample draws from its own
// generator seeded by SplitMix64 of (seed, stream, index), so results do not
// depend on evaluation order.

#include <cstdint>
#include <random>

#include "kcforge/channel.hpp"
#include "kcforge/dynmat.hpp"
#include "kcforge/kak.hpp"

namespace kcforge {

using Rng = std::mt19937_64;

std::uint64_t splitmix64(std::uint64_t x);
Rng sample_rng(std::uint64_t seed, std::uint64_t stream, std::uint64_t index);

/// Haar-distributed U(4) via QR of a complex Ginibre matrix.
CMat4 haar_unitary4(Rng& rng);
/// Haar-distributed U(2).
CMat2 haar_unitary2(Rng& rng);
CMat2 random_su2(Rng& rng);
LocalPair random_locals(Rng& rng);
QubitState random_qubit_state(Rng& rng);
double uniform(Rng& rng, double lo, double hi);

/// Weyl point with exactly k nonzero angles drawn from [lo, pi/4 - lo],
/// sorted descending.
WeylPoint random_weyl_with_kc(int k, Rng& rng, double lo = 0.05);

/// Random locals (x) exp[i w.Sigma] (x) random locals, times a random phase.
CMat4 dress(const WeylPoint& w, Rng& rng);
CMat4 random_kc_unitary(int k, Rng& rng, double lo = 0.05);

/// (a (x) b) (|0><0| (x) I + |1><1| (x) V) (c (x) d) with Haar V.
CMat4 random_controlled_unitary(Rng& rng);
/// (a (x) b) C_p(theta) (c (x) d).
CMat4 random_dressed_controlled_phase(Rng& rng);

/// sqrt(p) e_0 (x) w_0 + sqrt(1 - p) e_1 (x) w_1 on qubit (x) C^d_r with
/// p in [0.05, 0.95] and random orthonormal e, w (d_r >= 2).
CVecX random_rank2_pair(int d_r, Rng& rng);

}  // namespace kcforge
