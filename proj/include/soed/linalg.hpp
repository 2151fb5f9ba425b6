#pragma once

// Dense kernels: truncated SVD, column-pivoted QR, the EIG functional Psi,
// seeded Gaussian sketching, and symmetric PSD square roots.

#include <Eigen/Dense>

#include <cmath>
#include <cstdint>
#include <limits>
#include <stdexcept>
#include <vector>

#include "soed/rng.hpp"
#include "soed/tensor.hpp"

namespace soed {

struct TruncatedSvd {
    Matrix U;      // n_r x k, orthonormal columns
    Vector sigma;  // k singular values, descending
    Matrix V;      // n_c x k, orthonormal columns
};

struct PivotSet {
    std::vector<int> indices;  // pivot order preserved
};

struct SketchConfig {
    int oversampling = 10;     // p
    std::uint64_t seed = 0;

    /// Sketch row count r = p + K for a target of K selected columns.
    Eigen::Index rows_for(long long k_total) const {
        if (oversampling < 0) throw std::invalid_argument("SketchConfig: oversampling must be >= 0");
        return static_cast<Eigen::Index>(oversampling + k_total);
    }
};

/// Top-k singular triplets of a dense matrix.
inline TruncatedSvd truncated_svd(const Matrix& a, int k) {
    if (k < 1 || k > std::min(a.rows(), a.cols()))
        throw std::invalid_argument("truncated_svd: k out of range");
    Eigen::BDCSVD<Matrix> svd(a, Eigen::ComputeThinU | Eigen::ComputeThinV);
    TruncatedSvd out;
    out.U = svd.matrixU().leftCols(k);
    out.sigma = svd.singularValues().head(k);
    out.V = svd.matrixV().leftCols(k);
    return out;
}

/// First k pivots of Businger-Golub column-pivoted QR: at each step the column
/// of maximal residual 2-norm, ties broken by lowest column index. Residual
/// norms are recomputed from the reflected matrix at every step (no downdating),
/// so the pivot sequence matches a literal projection-based evaluation.
inline PivotSet cpqr_pivots(const Matrix& m, int k) {
    const Eigen::Index r = m.rows(), c = m.cols();
    if (k < 1 || k > c) throw std::invalid_argument("cpqr_pivots: k out of range");
    Matrix w = m;
    std::vector<char> used(static_cast<std::size_t>(c), 0);
    PivotSet out;
    out.indices.reserve(k);
    for (int s = 0; s < k; ++s) {
        int best = -1;
        double best_norm = -1.0;
        for (Eigen::Index j = 0; j < c; ++j) {
            if (used[j]) continue;
            const double nrm = s < r ? w.col(j).tail(r - s).squaredNorm() : 0.0;
            if (nrm > best_norm) {
                best_norm = nrm;
                best = static_cast<int>(j);
            }
        }
        used[best] = 1;
        out.indices.push_back(best);
        if (s >= r || best_norm == 0.0) continue;
        // Householder reflector of the pivot column over rows [s, r), applied
        // to the columns still in play.
        Vector x = w.col(best).segment(s, r - s);
        double alpha = x.norm();
        if (x(0) > 0) alpha = -alpha;
        Vector v = x;
        v(0) -= alpha;
        const double vtv = v.squaredNorm();
        if (vtv == 0.0) continue;
        for (Eigen::Index j = 0; j < c; ++j) {
            if (used[j]) continue;
            auto seg = w.col(j).segment(s, r - s);
            seg -= (2.0 * v.dot(seg) / vtv) * v;
        }
    }
    return out;
}

/// Psi(A) = logdet(I + A A^T) = sum_i log(1 + sigma_i(A)^2), evaluated from the
/// eigenvalues of the smaller Gram matrix.
inline double psi(const Matrix& a) {
    if (!a.allFinite()) throw std::invalid_argument("psi: non-finite input");
    if (a.size() == 0) return 0.0;
    Matrix g;
    if (a.rows() <= a.cols())
        g.noalias() = a * a.transpose();
    else
        g.noalias() = a.transpose() * a;
    Eigen::SelfAdjointEigenSolver<Matrix> es(g, Eigen::EigenvaluesOnly);
    double out = 0.0;
    for (Eigen::Index i = 0; i < es.eigenvalues().size(); ++i)
        out += std::log1p(std::max(es.eigenvalues()[i], 0.0));
    return out;
}

/// Psi of a diagonal spectrum scaled by 1/c: sum_i log(1 + (sigma_i/c)^2).
inline double psi_of_spectrum(const Vector& sigma, double c = 1.0) {
    double out = 0.0;
    for (Eigen::Index i = 0; i < sigma.size(); ++i) {
        const double s = sigma[i] / c;
        out += std::log1p(s * s);
    }
    return out;
}

/// r x N matrix with i.i.d. N(0, 1/r) entries, filled column-major from the
/// stream seeded by `seed`. Identical seed gives identical bits.
inline Matrix gaussian_sketch(Eigen::Index r, Eigen::Index n, std::uint64_t seed) {
    if (r < 1 || n < 1) throw std::invalid_argument("gaussian_sketch: dimensions must be >= 1");
    RandomStream stream(seed);
    const double scale = 1.0 / std::sqrt(static_cast<double>(r));
    Matrix omega(r, n);
    for (Eigen::Index j = 0; j < n; ++j)
        for (Eigen::Index i = 0; i < r; ++i) omega(i, j) = scale * stream.normal();
    return omega;
}

/// Symmetric PSD square root: B with B*B ~= c. Eigenvalues in (-1e-8, 0) are
/// clipped to zero; anything below -1e-8 is rejected.
inline Matrix sym_sqrt(const Matrix& c) {
    if (c.rows() != c.cols()) throw std::invalid_argument("sym_sqrt: matrix must be square");
    const double scale = std::max(1.0, c.cwiseAbs().maxCoeff());
    if ((c - c.transpose()).cwiseAbs().maxCoeff() > 1e-10 * scale)
        throw std::invalid_argument("sym_sqrt: input is not symmetric");
    Eigen::SelfAdjointEigenSolver<Matrix> es(c);
    Vector lam = es.eigenvalues();
    for (Eigen::Index i = 0; i < lam.size(); ++i) {
        if (lam[i] < -1e-8) throw std::invalid_argument("sym_sqrt: eigenvalue below -1e-8, input is not PSD");
        lam[i] = std::max(lam[i], 0.0);
    }
    Matrix b = es.eigenvectors() * lam.cwiseSqrt().asDiagonal() * es.eigenvectors().transpose();
    return ((b + b.transpose()) * 0.5).eval();
}

/// ||(S^T V_K)^{-1}||_2 for the K x K block of rows `sel` of V_K. Returns
/// +infinity when the block is numerically singular (smallest singular value
/// below 1e-12 of the largest) instead of throwing.
inline double gks_certificate(const Matrix& v_k, const PivotSet& sel) {
    const Eigen::Index k = v_k.cols();
    if (static_cast<Eigen::Index>(sel.indices.size()) != k)
        throw std::invalid_argument("gks_certificate: |sel| must equal the number of columns of V_K");
    Matrix block(k, k);
    for (Eigen::Index i = 0; i < k; ++i) {
        const int row = sel.indices[static_cast<std::size_t>(i)];
        if (row < 0 || row >= v_k.rows()) throw std::invalid_argument("gks_certificate: pivot out of range");
        block.row(i) = v_k.row(row);
    }
    Eigen::JacobiSVD<Matrix> svd(block);
    const double smax = svd.singularValues()(0);
    const double smin = svd.singularValues()(k - 1);
    if (smin <= 1e-12 * smax || smin == 0.0) return std::numeric_limits<double>::infinity();
    return 1.0 / smin;
}

}  // namespace soed
