// Copyright 2026 The ctxflow Authors
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

#include "ctxflow/hilbert.h"

#include <cmath>
#include <sstream>

#include "ctxflow/errors.h"

namespace ctxflow {

namespace {

void require_finite(const std::array<Complex, 3> &a) {
    for (const auto &c : a) {
        if (!std::isfinite(c.real()) || !std::isfinite(c.imag())) {
            throw Error("state amplitude is not finite");
        }
    }
}

}  // namespace

StateVector::StateVector(Complex a1, Complex a2, Complex a3) : amplitudes_{a1, a2, a3} {
    require_finite(amplitudes_);
}

StateVector::StateVector(const std::array<Complex, 3> &amplitudes) : amplitudes_(amplitudes) {
    require_finite(amplitudes_);
}

StateVector StateVector::basis(int path) {
    if (path < 1 || path > 3) {
        throw Error("basis path must be 1, 2 or 3");
    }
    std::array<Complex, 3> a{};
    a[path - 1] = 1.0;
    return StateVector(a);
}

StateVector StateVector::operator*(Complex scale) const {
    return StateVector(amplitudes_[0] * scale, amplitudes_[1] * scale, amplitudes_[2] * scale);
}

StateVector StateVector::operator+(const StateVector &other) const {
    return StateVector(amplitudes_[0] + other[0], amplitudes_[1] + other[1], amplitudes_[2] + other[2]);
}

StateVector StateVector::operator-(const StateVector &other) const {
    return StateVector(amplitudes_[0] - other[0], amplitudes_[1] - other[1], amplitudes_[2] - other[2]);
}

std::string StateVector::str() const {
    std::ostringstream out;
    out << "(";
    for (size_t k = 0; k < 3; ++k) {
        if (k) {
            out << ", ";
        }
        out << amplitudes_[k].real();
        if (amplitudes_[k].imag() != 0) {
            out << (amplitudes_[k].imag() < 0 ? "-" : "+") << std::abs(amplitudes_[k].imag()) << "i";
        }
    }
    out << ")";
    return out.str();
}

Operator3 Operator3::identity() {
    Operator3 op;
    for (size_t k = 0; k < 3; ++k) {
        op(k, k) = 1.0;
    }
    return op;
}

Complex inner_product(const StateVector &bra, const StateVector &ket) {
    Complex total = 0;
    for (size_t k = 0; k < 3; ++k) {
        total += std::conj(bra[k]) * ket[k];
    }
    return total;
}

double norm_squared(const StateVector &v) {
    return std::norm(v[0]) + std::norm(v[1]) + std::norm(v[2]);
}

double norm(const StateVector &v) {
    return std::sqrt(norm_squared(v));
}

StateVector normalize(const StateVector &v) {
    double n2 = norm_squared(v);
    if (!(n2 > TOL_ZERO)) {
        throw ZeroVectorError("cannot normalize a zero vector");
    }
    return v * (1.0 / std::sqrt(n2));
}

bool is_normalized(const StateVector &v, double tol) {
    return std::abs(norm_squared(v) - 1.0) <= tol;
}

void require_normalized(const StateVector &v) {
    if (!is_normalized(v)) {
        throw NotNormalizedError("state " + v.str() + " is not unit-norm");
    }
}

Operator3 outer_product(const StateVector &ket, const StateVector &bra) {
    Operator3 op;
    for (size_t r = 0; r < 3; ++r) {
        for (size_t c = 0; c < 3; ++c) {
            op(r, c) = ket[r] * std::conj(bra[c]);
        }
    }
    return op;
}

StateVector apply(const Operator3 &op, const StateVector &v) {
    std::array<Complex, 3> out{};
    for (size_t r = 0; r < 3; ++r) {
        for (size_t c = 0; c < 3; ++c) {
            out[r] += op(r, c) * v[c];
        }
    }
    return StateVector(out);
}

Operator3 compose(const Operator3 &a, const Operator3 &b) {
    Operator3 out;
    for (size_t r = 0; r < 3; ++r) {
        for (size_t c = 0; c < 3; ++c) {
            for (size_t k = 0; k < 3; ++k) {
                out(r, c) += a(r, k) * b(k, c);
            }
        }
    }
    return out;
}

Operator3 adjoint(const Operator3 &op) {
    Operator3 out;
    for (size_t r = 0; r < 3; ++r) {
        for (size_t c = 0; c < 3; ++c) {
            out(r, c) = std::conj(op(c, r));
        }
    }
    return out;
}

double max_entry_deviation(const Operator3 &a, const Operator3 &b) {
    double worst = 0;
    for (size_t r = 0; r < 3; ++r) {
        for (size_t c = 0; c < 3; ++c) {
            worst = std::max(worst, std::abs(a(r, c) - b(r, c)));
        }
    }
    return worst;
}

double max_component_deviation(const StateVector &a, const StateVector &b) {
    double worst = 0;
    for (size_t k = 0; k < 3; ++k) {
        worst = std::max(worst, std::abs(a[k] - b[k]));
    }
    return worst;
}

bool is_unitary(const Operator3 &op, double tol) {
    return max_entry_deviation(compose(adjoint(op), op), Operator3::identity()) <= tol;
}

}  // namespace ctxflow
