#pragma once

#include <cstddef>
#include <vector>

#include "vat/fraction.hpp"
#include "vat/graph.hpp"
#include "vat/vertex_set.hpp"

namespace vat {

// Dense row-major square matrix.
class DenseMatrix {
public:
    DenseMatrix() = default;
    explicit DenseMatrix(int n) : n_(n), data_(static_cast<std::size_t>(n) * static_cast<std::size_t>(n), 0.0) {}

    int size() const noexcept { return n_; }
    double& operator()(int r, int c) { return data_[index(r, c)]; }
    double operator()(int r, int c) const { return data_[index(r, c)]; }

private:
    std::size_t index(int r, int c) const {
        return static_cast<std::size_t>(r) * static_cast<std::size_t>(n_) + static_cast<std::size_t>(c);
    }

    int n_ = 0;
    std::vector<double> data_;
};

// D^{-1/2} A D^{-1/2}. It is similar to the random-walk matrix D^{-1} A, so
// the two share a spectrum, and for regular graphs they coincide.
DenseMatrix normalized_adjacency(const Graph& g);

// Random-walk normalisation D^{-1} A (row stochastic).
DenseMatrix random_walk_matrix(const Graph& g);

struct EigenDecomposition {
    std::vector<double> values;                // descending
    std::vector<std::vector<double>> vectors;  // vectors[k] pairs with values[k]
    double off_diagonal = 0.0;                 // Frobenius norm left after the last sweep
    int sweeps = 0;
};

// Cyclic Jacobi rotations until the off-diagonal Frobenius norm drops below
// tol. Each eigenvector's sign is fixed so that its first entry with
// magnitude above 1e-12 is positive.
EigenDecomposition jacobi_eigen(DenseMatrix a, double tol = 1e-10, int max_sweeps = 100);

struct SpectralResult {
    double lambda2 = 0.0;
    double gap = 0.0;
    double residual = 0.0;  // |N x - lambda2 x|_2 for the returned eigenvector
    int n = 0;
    std::vector<double> eigenvalues;  // full spectrum, descending
    std::vector<double> vector;       // unit eigenvector for lambda2
};

SpectralResult lambda2(const Graph& g, double tol = 1e-10);
double spectral_gap(const Graph& g);

struct SweepResult {
    double value = 0.0;
    Fraction exact;
    VertexSet witness;
};

// Orders vertices by x_u / sqrt(d_u) for the lambda2 eigenvector (ties by
// id) and returns the best set_conductance over prefixes of that order and
// of its reverse, restricted to sets with at most half the volume. Always an
// upper bound on the conductance.
SweepResult sweep_conductance(const Graph& g);
SweepResult sweep_conductance(const Graph& g, const SpectralResult& spectrum);

} // namespace vat
