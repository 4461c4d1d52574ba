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

#include <limits>
#include <optional>
#include <vector>

#include "detrep/represent.hpp"

namespace detrep {

/// Expand det(I_|n| - K Z_n) into the polynomial
/// sum_alpha (-1)^|alpha| det K[alpha] z^{k(alpha)}, constant term 1.
/// K must be square of side |n|; |n| is capped at 24.
ComplexPoly det_expand(const ComplexMatrix& k, const MultiDegree& n);
RationalPoly det_expand(const RationalMatrix& k, const MultiDegree& n);

namespace detail {
/// Principal-minor subset enumeration route.
template <class S>
Polynomial<S> det_expand_minors(const Matrix<S>& k, const MultiDegree& n);
/// Evaluation-interpolation route (integer nodes in exact mode, roots of
/// unity in float mode); same polynomial, different algorithm.
ComplexPoly det_expand_interp(const ComplexMatrix& k, const MultiDegree& n);
RationalPoly det_expand_interp(const RationalMatrix& k, const MultiDegree& n);
}  // namespace detail

struct VerificationReport {
    double max_abs_residual = 0.0;
    std::vector<std::pair<Expo, double>> residuals;  // union support, absolute values
    double norm_of_k = 0.0;
    std::optional<bool> bound_checked;  // norm >= 1/s_upper - tol, when requested
    bool pass = false;
    double tolerance = 0.0;
};

VerificationReport verify_representation(const ComplexPoly& p, const ComplexRepresentation& rep,
                                         double tol = 1e-9, bool assert_semistable = false);
VerificationReport verify_representation(const RationalPoly& p, const RationalRepresentation& rep,
                                         double tol = 1e-9, bool assert_semistable = false);

struct PmrpReport {
    bool pass = false;
    double max_abs_residual = 0.0;
    std::vector<std::pair<Expo, double>> residuals;
};

/// Principal Minor Relation check: for every k <= m, sums det K over all
/// block-compatible index sets and compares (-1)^|k| times the sum with the
/// target coefficient. Blocks are the consecutive ranges given by n.
PmrpReport pmrp_check(const ComplexMatrix& k, const MultiDegree& n, const ComplexPoly& target,
                      const MultiDegree& m, double tol = 1e-9);
PmrpReport pmrp_check(const RationalMatrix& k, const MultiDegree& n, const RationalPoly& target,
                      const MultiDegree& m);

struct RadiusEstimate {
    double lower = 0.0;
    double upper = std::numeric_limits<double>::infinity();
    std::vector<Cplx> witness;  // zero found at radius `upper`, empty if none
    bool converged = false;
};

/// Stability radius s(p) = sup{ r : p nonzero on r D^d }. The lower bound is
/// certified (directional Cauchy majorants over an adaptively refined grid of
/// torus directions, exact root enclosures in one variable); the upper bound
/// comes from a polished zero of p. Requires p(0) != 0.
RadiusEstimate stability_radius(const ComplexPoly& p, long budget = 200000);

struct SupNormEstimate {
    double lower = 0.0;
    double upper_heuristic = 0.0;
    std::vector<Cplx> argmax;
};

/// Torus sup-norm estimate: exact max over a uniform theta grid plus
/// coordinate-ascent refinement; the upper bound adds a heuristic
/// Lipschitz pad for the final step size. d <= 4, grid_per_dim >= 8.
SupNormEstimate sup_norm_torus(const ComplexPoly& p, int grid_per_dim = 64, int refine_steps = 20);

}  // namespace detrep
