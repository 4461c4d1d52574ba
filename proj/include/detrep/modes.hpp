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

#include <variant>

#include "detrep/poly.hpp"
#include "detrep/represent.hpp"

namespace detrep {

enum class Mode { exact, floating };

/// Mode-erased polynomial: exact and float values never mix in one
/// arithmetic call; promotion is explicit via as_float / as_exact.
struct MultiPoly {
    std::variant<ComplexPoly, RationalPoly> value;

    MultiPoly() : value(ComplexPoly(1)) {}
    explicit MultiPoly(ComplexPoly p) : value(std::move(p)) {}
    explicit MultiPoly(RationalPoly p) : value(std::move(p)) {}

    Mode mode() const { return std::holds_alternative<RationalPoly>(value) ? Mode::exact : Mode::floating; }
    bool is_exact() const { return mode() == Mode::exact; }
    int num_vars() const {
        return std::visit([](const auto& p) { return p.num_vars(); }, value);
    }
    const ComplexPoly& floating() const { return std::get<ComplexPoly>(value); }
    const RationalPoly& exact() const { return std::get<RationalPoly>(value); }

    ComplexPoly as_float() const {
        if (is_exact()) return to_complex(exact());
        return floating();
    }
    RationalPoly as_exact() const {
        if (is_exact()) return exact();
        return to_exact(floating());
    }
};

struct AnyMatrix {
    std::variant<ComplexMatrix, RationalMatrix> value;

    AnyMatrix() : value(ComplexMatrix()) {}
    explicit AnyMatrix(ComplexMatrix m) : value(std::move(m)) {}
    explicit AnyMatrix(RationalMatrix m) : value(std::move(m)) {}

    Mode mode() const { return std::holds_alternative<RationalMatrix>(value) ? Mode::exact : Mode::floating; }
    bool is_exact() const { return mode() == Mode::exact; }
    int rows() const {
        return std::visit([](const auto& m) { return m.rows(); }, value);
    }
    int cols() const {
        return std::visit([](const auto& m) { return m.cols(); }, value);
    }
    const ComplexMatrix& floating() const { return std::get<ComplexMatrix>(value); }
    const RationalMatrix& exact() const { return std::get<RationalMatrix>(value); }

    ComplexMatrix as_float() const {
        if (is_exact()) return exact().to_complex();
        return floating();
    }
    RationalMatrix as_exact() const {
        if (is_exact()) return exact();
        return to_exact(floating());
    }
};

struct AnyRepresentation {
    MultiDegree n;
    AnyMatrix k;

    AnyRepresentation() = default;
    explicit AnyRepresentation(ComplexRepresentation r) : n(std::move(r.n)), k(std::move(r.k)) {}
    explicit AnyRepresentation(RationalRepresentation r) : n(std::move(r.n)), k(std::move(r.k)) {}
};

}  // namespace detrep
