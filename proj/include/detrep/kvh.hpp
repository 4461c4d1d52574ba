/*
 * Copyright 2026 The detrep authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#pragma once

#include <array>
#include <string>

#include "detrep/agler.hpp"

namespace detrep {

/// Configuration for the quadratic family (1+s) sum z_m^2 - (sum z_m)^2:
/// d unit vectors in R^2 with zero sum drive the 4x4 witness tuple.
struct KvhConfig {
    int d = 3;
    double s = 1.0;
    std::vector<std::array<double, 2>> unit_vectors;
};

/// Equally spaced angles 2 pi j / d; zero sum is automatic.
KvhConfig kvh_default_config(int d, double s);

void kvh_validate(const KvhConfig& config);

/// p(z) = (1+s) sum z_m^2 - (sum z_m)^2: coefficient s on each z_m^2,
/// -2 on each z_i z_j.
ComplexPoly kvh_poly(int d, double s);
RationalPoly kvh_poly_exact(int d, const mpq_class& s);

struct KvhFormNorm {
    double norm = 0.0;
    double eig_residual = 0.0;
};

/// ||A|| for the quadratic-form matrix (diagonal s, off-diagonal -1), with a
/// numeric eigenvalue check against {1+s (d-1 times), s-d+1}.
KvhFormNorm kvh_form_norm(int d, double s);

/// The 4x4 commuting tuple T_i with T_i T_j = <v_i, v_j> e_1 e_4^T,
/// sum T_i = 0 and vanishing triple products.
CommutingTuple<Cplx> kvh_tuple(const KvhConfig& config);

/// Exact-mode tuple from rational unit vectors with zero sum (checked exactly).
CommutingTuple<RationalComplex> kvh_tuple_exact(
    const std::vector<std::array<mpq_class, 2>>& vectors);

/// Antipodal rational unit vectors for even d.
std::vector<std::array<mpq_class, 2>> kvh_exact_default_vectors(int d);

struct KvhReport {
    int d = 0;
    double s = 0.0;
    double sup_lower = 0.0;
    double sup_upper_heuristic = 0.0;
    std::string sup_note;
    double agler_value = 0.0;        // witnessed by the explicit tuple
    double agler_closed_form = 0.0;  // (1+s) d
    double vn_ratio_lower = 0.0;     // agler_value / sup_upper_heuristic
};

KvhReport kvh_report(int d, double s, int grid = 64, int refine_steps = 20);

struct KvhOptimal {
    double s_star = 0.0;
    double ratio = 0.0;
};

/// Closed forms s* = (sqrt(13)+1)/6 and ratio = (1/3) sqrt((35+13 sqrt(13))/6)
/// for the d = 3 von Neumann constant.
KvhOptimal kvh_optimal_s();

/// Argmax of the d = 3 report ratio over an s-grid; cross-check for the
/// closed form above.
double kvh_ratio_grid_argmax(double lo, double hi, double step, int grid = 32);

struct KvhSection5 {
    ComplexPoly q;               // the stable polynomial that is not an Agler denominator
    double f_at_tuple_norm = 0;  // ||f(T)|| = 6r/5
    bool q_stable = false;
    RadiusEstimate radius;
};

/// The stable-not-Agler-denominator example: q = 1 + r z^{k+m} conj(p)(1/z)
/// for the normalized d = 3 polynomial, with ||f(T)|| evaluated on the
/// explicit tuple. Requires 5/6 < r < 1.
KvhSection5 kvh_section5_example(double r, long budget = 400000);

}  // namespace detrep
