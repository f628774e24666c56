// Copyright 2026 The qhard Authors
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

#include "qhard/numeric.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <numbers>

namespace qhard {

namespace {

using Complex = std::complex<double>;

constexpr int kGridPoints = 512;
constexpr double kAlphaTolerance = 1e-9;

template <typename Matrix>
double norm_impl(const Matrix &m) {
    double scale = m.cwiseAbs().maxCoeff();
    if (scale == 0) return 0;
    Matrix a = m / scale;
    Matrix gram = a.adjoint() * a;
    Eigen::SelfAdjointEigenSolver<Matrix> solver(gram, Eigen::EigenvaluesOnly);
    if (solver.info() != Eigen::Success) throw NonConvergenceError("operator norm: eigensolver did not converge");
    return scale * std::sqrt(std::max(0.0, solver.eigenvalues().maxCoeff()));
}

// Fixed-size paths matter: nearest-Clifford scans evaluate thousands of 4x4 norms per target.
template <int N>
struct FixedDistance {
    using Matrix = Eigen::Matrix<Complex, N, N>;
    Matrix u, v;
    double operator()(double alpha) const {
        return norm_impl<Matrix>(u - std::polar(1.0, alpha) * v);
    }
};

struct DynamicDistance {
    const NumericUnitary &u;
    const NumericUnitary &v;
    double operator()(double alpha) const {
        return norm_impl<NumericUnitary>(u - std::polar(1.0, alpha) * v);
    }
};

double normalize_angle(double alpha) {
    constexpr double two_pi = 2 * std::numbers::pi;
    alpha = std::fmod(alpha, two_pi);
    if (alpha < 0) alpha += two_pi;
    if (alpha >= two_pi) alpha -= two_pi;
    return alpha;
}

template <typename F>
PhaseDistance minimize_phase(const F &f) {
    constexpr double step = 2 * std::numbers::pi / kGridPoints;
    std::array<double, kGridPoints> values;
    for (int k = 0; k < kGridPoints; k++) values[k] = f(k * step);

    std::vector<int> minima;
    for (int k = 0; k < kGridPoints; k++) {
        double prev = values[(k + kGridPoints - 1) % kGridPoints];
        double next = values[(k + 1) % kGridPoints];
        if (values[k] <= prev && values[k] <= next) minima.push_back(k);
    }
    std::sort(minima.begin(), minima.end(), [&](int a, int b) {
        return values[a] < values[b] || (values[a] == values[b] && a < b);
    });
    if (minima.size() > 3) minima.resize(3);

    PhaseDistance best{values[minima[0]], minima[0] * step};
    const double inv_phi = (std::sqrt(5.0) - 1) / 2;
    for (int k : minima) {
        double lo = (k - 1) * step, hi = (k + 1) * step;
        double c = hi - inv_phi * (hi - lo), d = lo + inv_phi * (hi - lo);
        double fc = f(c), fd = f(d);
        while (hi - lo > kAlphaTolerance) {
            if (fc <= fd) {
                hi = d;
                d = c;
                fd = fc;
                c = hi - inv_phi * (hi - lo);
                fc = f(c);
            } else {
                lo = c;
                c = d;
                fc = fd;
                d = lo + inv_phi * (hi - lo);
                fd = f(d);
            }
        }
        double mid = (lo + hi) / 2;
        double fm = f(mid);
        if (fm < best.distance) best = {fm, mid};
    }
    best.alpha = normalize_angle(best.alpha);
    return best;
}

}  // namespace

NumericUnitary to_numeric(const ExactUnitary &u) {
    NumericUnitary m(u.dim(), u.dim());
    for (size_t r = 0; r < u.dim(); r++) {
        for (size_t c = 0; c < u.dim(); c++) m(r, c) = u(r, c).to_complex();
    }
    return m;
}

NumericUnitary numeric_simulate(const Circuit &circuit, const GateDefinition *gdef) {
    if (circuit.num_wires() > 12) throw std::length_error("numeric simulation is limited to 12 wires");
    const size_t dim = size_t{1} << circuit.num_wires();
    NumericUnitary m = NumericUnitary::Identity(dim, dim);
    const double r = std::sqrt(0.5);
    for (const Gate &g : circuit.gates()) {
        const size_t b0 = size_t{1} << g.wires[0];
        auto single = [&](const std::array<Complex, 4> &a) {
            for (size_t i = 0; i < dim; i++) {
                if (i & b0) continue;
                Eigen::RowVectorXcd r0 = m.row(i), r1 = m.row(i | b0);
                m.row(i) = a[0] * r0 + a[1] * r1;
                m.row(i | b0) = a[2] * r0 + a[3] * r1;
            }
        };
        switch (g.kind) {
            case GateKind::X:
                single({0, 1, 1, 0});
                break;
            case GateKind::H:
                single({r, r, r, -r});
                break;
            case GateKind::S:
                single({1, 0, 0, Complex(0, 1)});
                break;
            case GateKind::SDG:
                single({1, 0, 0, Complex(0, -1)});
                break;
            case GateKind::T:
                single({1, 0, 0, Complex(r, r)});
                break;
            case GateKind::TDG:
                single({1, 0, 0, Complex(r, -r)});
                break;
            case GateKind::G:
            case GateKind::GDG: {
                if (gdef == nullptr) throw std::invalid_argument("circuit uses g/gdg but no gate definition was given");
                single(g.kind == GateKind::G ? gdef->matrix() : gdef->adjoint_matrix());
                break;
            }
            case GateKind::CX:
            case GateKind::CCX: {
                size_t controls = b0 | (g.kind == GateKind::CCX ? size_t{1} << g.wires[1] : 0);
                size_t t = size_t{1} << g.wires[g.kind == GateKind::CCX ? 2 : 1];
                for (size_t i = 0; i < dim; i++) {
                    if ((i & controls) == controls && !(i & t)) m.row(i).swap(m.row(i | t));
                }
                break;
            }
            case GateKind::CZ: {
                size_t both = b0 | (size_t{1} << g.wires[1]);
                for (size_t i = 0; i < dim; i++) {
                    if ((i & both) == both) m.row(i) *= -1;
                }
                break;
            }
        }
    }
    return m;
}

double operator_norm(const NumericUnitary &m) {
    if (m.rows() == 2 && m.cols() == 2) return norm_impl<Eigen::Matrix2cd>(m);
    if (m.rows() == 4 && m.cols() == 4) return norm_impl<Eigen::Matrix4cd>(m);
    return norm_impl<NumericUnitary>(m);
}

PhaseDistance phase_min_distance(const NumericUnitary &u, const NumericUnitary &v) {
    if (u.rows() != v.rows() || u.cols() != v.cols()) throw std::invalid_argument("phase_min_distance: size mismatch");
    if (u.rows() == 2 && u.cols() == 2) return minimize_phase(FixedDistance<2>{u, v});
    if (u.rows() == 4 && u.cols() == 4) return minimize_phase(FixedDistance<4>{u, v});
    return minimize_phase(DynamicDistance{u, v});
}

double phase_distance_lower_bound(const NumericUnitary &u, const NumericUnitary &v) {
    // ||A|| dominates every entry and every column norm; a column alone may pick its own best phase.
    double bound = (u.cwiseAbs() - v.cwiseAbs()).cwiseAbs().maxCoeff();
    for (Eigen::Index c = 0; c < u.cols(); c++) {
        double overlap = std::abs(v.col(c).dot(u.col(c)));
        double column = u.col(c).squaredNorm() + v.col(c).squaredNorm() - 2 * overlap;
        bound = std::max(bound, std::sqrt(std::max(0.0, column)));
    }
    return bound;
}

ProductTest is_product_of_single_qubit(const NumericUnitary &u, double tol) {
    const size_t dim = static_cast<size_t>(u.rows());
    if (u.rows() != u.cols() || !std::has_single_bit(dim)) {
        throw std::invalid_argument("is_product_of_single_qubit: dimension must be a power of two");
    }
    const uint32_t n = static_cast<uint32_t>(std::countr_zero(dim));
    ProductTest result;
    std::vector<Eigen::Matrix2cd> factors;
    const size_t rest = dim / 2;

    for (uint32_t w = 0; w < n; w++) {
        const size_t bit = size_t{1} << w;
        // Realignment: row (a_out, a_in) of the wire, column (rest_out, rest_in) of the other wires.
        Eigen::MatrixXcd realigned(4, rest * rest);
        auto squeeze = [&](size_t index) {
            size_t low = index & (bit - 1);
            return low | ((index >> (w + 1)) << w);
        };
        for (size_t row = 0; row < dim; row++) {
            for (size_t col = 0; col < dim; col++) {
                size_t a = ((row >> w) & 1) * 2 + ((col >> w) & 1);
                realigned(static_cast<Eigen::Index>(a), static_cast<Eigen::Index>(squeeze(row) * rest + squeeze(col))) =
                    u(static_cast<Eigen::Index>(row), static_cast<Eigen::Index>(col));
            }
        }
        Eigen::JacobiSVD<Eigen::MatrixXcd> svd(realigned, Eigen::ComputeThinU);
        const auto &s = svd.singularValues();
        double ratio = s.size() > 1 && s(0) > 0 ? s(1) / s(0) : 0;
        if (ratio >= result.max_schmidt_ratio) {
            result.max_schmidt_ratio = ratio;
            result.worst_wire = w;
        }
        Eigen::Matrix2cd factor;
        Eigen::VectorXcd u1 = svd.matrixU().col(0) * std::sqrt(2.0);
        factor << u1(0), u1(1), u1(2), u1(3);
        factors.push_back(factor);
    }
    if (result.max_schmidt_ratio > tol) return result;

    // Rebuild the tensor product, each new wire becoming the most significant, and compare up to phase.
    NumericUnitary product = NumericUnitary::Ones(1, 1);
    for (uint32_t w = 0; w < n; w++) {
        NumericUnitary next(product.rows() * 2, product.cols() * 2);
        for (int a = 0; a < 2; a++) {
            for (int b = 0; b < 2; b++) {
                next.block(a * product.rows(), b * product.cols(), product.rows(), product.cols()) =
                    factors[w](a, b) * product;
            }
        }
        product = std::move(next);
    }
    Complex overlap = (product.adjoint() * u).trace();
    if (std::abs(overlap) == 0) return result;
    Complex phase = overlap / std::abs(overlap);
    if (operator_norm(u - phase * product) <= std::max(tol, 1e-9) * n) result.factors = std::move(factors);
    return result;
}

}  // namespace qhard
