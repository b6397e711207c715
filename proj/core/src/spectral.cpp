#include "vat/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "vat/error.hpp"
#include "wide_int.hpp"
#include "vat/metrics.hpp"

namespace vat {
namespace {

void require_spectral_input(const Graph& g) {
    for (int v = 0; v < g.n(); ++v)
        if (g.degree(v) == 0)
            throw Error(ErrorCode::IsolatedVertex, "vertex " + std::to_string(v) + " has no neighbours");
    if (!is_connected(g))
        throw Error(ErrorCode::DisconnectedInput, "normalized adjacency needs a connected graph");
}

double off_diagonal_norm(const DenseMatrix& a) {
    double sum = 0.0;
    for (int i = 0; i < a.size(); ++i)
        for (int j = 0; j < a.size(); ++j)
            if (i != j)
                sum += a(i, j) * a(i, j);
    return std::sqrt(sum);
}

void fix_sign(std::vector<double>& x) {
    for (double v : x) {
        if (std::fabs(v) > 1e-12) {
            if (v < 0)
                for (double& y : x)
                    y = -y;
            return;
        }
    }
}

} // namespace

DenseMatrix normalized_adjacency(const Graph& g) {
    require_spectral_input(g);
    DenseMatrix a(g.n());
    for (int u = 0; u < g.n(); ++u)
        for (int v : g.neighbors(u))
            a(u, v) = 1.0 / std::sqrt(static_cast<double>(g.degree(u)) * g.degree(v));
    return a;
}

DenseMatrix random_walk_matrix(const Graph& g) {
    require_spectral_input(g);
    DenseMatrix a(g.n());
    for (int u = 0; u < g.n(); ++u)
        for (int v : g.neighbors(u))
            a(u, v) = 1.0 / g.degree(u);
    return a;
}

EigenDecomposition jacobi_eigen(DenseMatrix a, double tol, int max_sweeps) {
    const int n = a.size();
    // Rows of vt are the eigenvectors, so rotations touch two contiguous rows.
    DenseMatrix vt(n);
    for (int i = 0; i < n; ++i)
        vt(i, i) = 1.0;

    EigenDecomposition out;
    double off = off_diagonal_norm(a);
    while (off >= tol) {
        if (out.sweeps == max_sweeps)
            throw Error(ErrorCode::NoConvergence,
                        "Jacobi did not converge in " + std::to_string(max_sweeps) + " sweeps (off-norm " + std::to_string(off) + ")");
        ++out.sweeps;
        for (int p = 0; p < n - 1; ++p) {
            for (int q = p + 1; q < n; ++q) {
                const double apq = a(p, q);
                if (apq == 0.0)
                    continue;
                const double theta = (a(q, q) - a(p, p)) / (2.0 * apq);
                const double t = (theta >= 0 ? 1.0 : -1.0) / (std::fabs(theta) + std::sqrt(theta * theta + 1.0));
                const double c = 1.0 / std::sqrt(t * t + 1.0);
                const double s = t * c;

                for (int k = 0; k < n; ++k) {
                    if (k == p || k == q)
                        continue;
                    const double akp = a(k, p), akq = a(k, q);
                    const double np = c * akp - s * akq;
                    const double nq = s * akp + c * akq;
                    a(k, p) = a(p, k) = np;
                    a(k, q) = a(q, k) = nq;
                }
                a(p, p) -= t * apq;
                a(q, q) += t * apq;
                a(p, q) = a(q, p) = 0.0;

                for (int k = 0; k < n; ++k) {
                    const double vp = vt(p, k), vq = vt(q, k);
                    vt(p, k) = c * vp - s * vq;
                    vt(q, k) = s * vp + c * vq;
                }
            }
        }
        off = off_diagonal_norm(a);
    }
    out.off_diagonal = off;

    std::vector<int> order(static_cast<std::size_t>(n));
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](int i, int j) { return a(i, i) > a(j, j); });
    for (int i : order) {
        out.values.push_back(a(i, i));
        std::vector<double> x(static_cast<std::size_t>(n));
        for (int k = 0; k < n; ++k)
            x[static_cast<std::size_t>(k)] = vt(i, k);
        fix_sign(x);
        out.vectors.push_back(std::move(x));
    }
    return out;
}

SpectralResult lambda2(const Graph& g, double tol) {
    if (g.n() < 2)
        throw Error(ErrorCode::TrivialGraph, "lambda2 needs at least two vertices");
    const DenseMatrix a = normalized_adjacency(g);
    auto eig = jacobi_eigen(a, tol);

    SpectralResult r;
    r.n = g.n();
    r.lambda2 = eig.values[1];
    r.gap = 1.0 - r.lambda2;
    r.vector = std::move(eig.vectors[1]);
    r.eigenvalues = std::move(eig.values);

    double res = 0.0;
    for (int i = 0; i < g.n(); ++i) {
        double y = -r.lambda2 * r.vector[static_cast<std::size_t>(i)];
        for (int j : g.neighbors(i))
            y += a(i, j) * r.vector[static_cast<std::size_t>(j)];
        res += y * y;
    }
    r.residual = std::sqrt(res);
    return r;
}

double spectral_gap(const Graph& g) { return lambda2(g).gap; }

SweepResult sweep_conductance(const Graph& g) { return sweep_conductance(g, lambda2(g)); }

SweepResult sweep_conductance(const Graph& g, const SpectralResult& spectrum) {
    require_nontrivial(g);
    const int n = g.n();
    if (static_cast<int>(spectrum.vector.size()) != n)
        throw Error(ErrorCode::BadParameter, "spectrum does not belong to this graph");

    std::vector<double> key(static_cast<std::size_t>(n));
    for (int v = 0; v < n; ++v)
        key[static_cast<std::size_t>(v)] = spectrum.vector[static_cast<std::size_t>(v)] / std::sqrt(static_cast<double>(g.degree(v)));
    std::vector<int> order(static_cast<std::size_t>(n));
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](int a, int b) { return key[static_cast<std::size_t>(a)] < key[static_cast<std::size_t>(b)]; });

    bool found = false;
    std::int64_t best_cut = 0, best_vol = 1;
    VertexSet best_set(n);

    auto sweep = [&](auto first, auto last) {
        std::vector<char> in(static_cast<std::size_t>(n), 0);
        std::int64_t cut = 0, vol = 0;
        std::size_t taken = 0;
        for (auto it = first; it != last; ++it) {
            const int v = *it;
            int inside = 0;
            for (int w : g.neighbors(v))
                inside += in[static_cast<std::size_t>(w)];
            cut += g.degree(v) - 2 * inside;
            vol += g.degree(v);
            in[static_cast<std::size_t>(v)] = 1;
            ++taken;
            if (vol > g.m() || taken == static_cast<std::size_t>(n))
                continue;
            if (!found || static_cast<detail::int128>(cut) * best_vol < static_cast<detail::int128>(best_cut) * vol) {
                found = true;
                best_cut = cut;
                best_vol = vol;
                best_set = VertexSet(n);
                for (auto jt = first; jt != std::next(it); ++jt)
                    best_set.insert(*jt);
            }
        }
    };
    sweep(order.begin(), order.end());
    sweep(order.rbegin(), order.rend());

    if (!found)
        throw Error(ErrorCode::BadParameter, "no sweep prefix within half the volume");
    Fraction exact(best_cut, best_vol);
    return {exact.to_double(), exact, std::move(best_set)};
}

} // namespace vat
