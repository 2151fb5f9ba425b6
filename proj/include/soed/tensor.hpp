#pragma once

// Dense order-P tensors with mode unfoldings and mode products.
//
// Linearization is column-major (first index fastest): the entry
// (i_1,...,i_P), 0-based, lives at offset sum_l i_l * prod_{m<l} n_m.
// The mode-j unfolding X_(j) is the n_j x (prod_{l != j} n_l) matrix with
//   X_(j)(i_j, sum_{l != j} i_l * J_l),   J_l = prod_{m<l, m != j} n_m,
// the standard Tucker-literature convention. All operations are pure; a
// Tensor is never mutated after construction.

#include <Eigen/Dense>

#include <cstring>
#include <stdexcept>
#include <string>
#include <vector>

#include "soed/selection.hpp"

namespace soed {

using Matrix = Eigen::MatrixXd;
using Vector = Eigen::VectorXd;

struct Tensor {
    std::vector<Eigen::Index> dims;
    Vector data;  // column-major linearization, first index fastest

    Tensor() = default;
    Tensor(std::vector<Eigen::Index> dims_, Vector data_) : dims(std::move(dims_)), data(std::move(data_)) {
        if (dims.empty()) throw std::invalid_argument("Tensor: order must be >= 1");
        Eigen::Index n = 1;
        for (Eigen::Index d : dims) {
            if (d < 1) throw std::invalid_argument("Tensor: all dims must be >= 1");
            n *= d;
        }
        if (n != data.size()) throw std::invalid_argument("Tensor: data length does not match dims");
    }

    static Tensor zeros(std::vector<Eigen::Index> dims_) {
        Eigen::Index n = 1;
        for (Eigen::Index d : dims_) n *= d;
        return Tensor(std::move(dims_), Vector::Zero(n));
    }

    int order() const { return static_cast<int>(dims.size()); }
    Eigen::Index size() const { return data.size(); }

    /// Product of dims strictly before mode j.
    Eigen::Index stride(int j) const {
        Eigen::Index s = 1;
        for (int l = 0; l < j; ++l) s *= dims[l];
        return s;
    }

    double at(const std::vector<Eigen::Index>& idx) const {
        Eigen::Index off = 0, s = 1;
        for (int l = 0; l < order(); ++l) {
            off += idx[l] * s;
            s *= dims[l];
        }
        return data[off];
    }
};

/// Shape metadata tying a flattened N x (m_1...m_d) matrix to its design modes.
struct ModeShape {
    std::vector<int> mode_sizes;  // (m_1,...,m_d)
    Eigen::Index ambient_dim = 0; // N

    int order() const { return static_cast<int>(mode_sizes.size()); }

    long long total_columns() const {
        long long m = 1;
        for (int s : mode_sizes) m *= s;
        return m;
    }

    void validate() const {
        if (mode_sizes.empty()) throw std::invalid_argument("ModeShape: d >= 1 required");
        for (int s : mode_sizes)
            if (s < 1) throw std::invalid_argument("ModeShape: mode sizes must be >= 1");
        if (ambient_dim < 1) throw std::invalid_argument("ModeShape: ambient dim must be >= 1");
    }
};

/// Mode-j unfolding (0-based mode), shape n_j x prod_{l != j} n_l.
inline Matrix unfold(const Tensor& t, int j) {
    if (j < 0 || j >= t.order()) throw std::invalid_argument("unfold: mode out of range");
    const Eigen::Index nj = t.dims[j];
    const Eigen::Index inner = t.stride(j);          // prod of dims before j
    const Eigen::Index outer = t.size() / (inner * nj);
    Matrix m(nj, t.size() / nj);
    // Column of (i_1,...,i_P) with i_j removed decomposes as in + out*inner.
    for (Eigen::Index out = 0; out < outer; ++out)
        for (Eigen::Index r = 0; r < nj; ++r) {
            const double* src = t.data.data() + (out * nj + r) * inner;
            for (Eigen::Index in = 0; in < inner; ++in) m(r, out * inner + in) = src[in];
        }
    return m;
}

/// Inverse of unfold: rebuild the tensor of shape `dims` from its mode-j unfolding.
inline Tensor fold(const Matrix& m, int j, std::vector<Eigen::Index> dims) {
    if (j < 0 || j >= static_cast<int>(dims.size())) throw std::invalid_argument("fold: mode out of range");
    Eigen::Index total = 1;
    for (Eigen::Index d : dims) total *= d;
    const Eigen::Index nj = dims[j];
    if (m.rows() != nj || m.cols() != total / nj) throw std::invalid_argument("fold: matrix shape does not match dims");
    Tensor t = Tensor::zeros(std::move(dims));
    const Eigen::Index inner = t.stride(j);
    const Eigen::Index outer = total / (inner * nj);
    for (Eigen::Index out = 0; out < outer; ++out)
        for (Eigen::Index r = 0; r < nj; ++r) {
            double* dst = t.data.data() + (out * nj + r) * inner;
            for (Eigen::Index in = 0; in < inner; ++in) dst[in] = m(r, out * inner + in);
        }
    return t;
}

/// Mode product t x_j s: replaces dim n_j by rows(s); unfold(result, j) = s * unfold(t, j).
inline Tensor mode_product(const Tensor& t, const Matrix& s, int j) {
    if (j < 0 || j >= t.order()) throw std::invalid_argument("mode_product: mode out of range");
    if (s.cols() != t.dims[j]) throw std::invalid_argument("mode_product: matrix cols must equal dim of mode");
    Matrix y = s * unfold(t, j);
    std::vector<Eigen::Index> dims = t.dims;
    dims[j] = s.rows();
    return fold(y, j, std::move(dims));
}

/// Reshape an N x M design matrix into the order-(d+1) tensor of dims
/// (m_1,...,m_d,N) whose mode-(d+1) unfolding recovers the matrix exactly.
inline Tensor matrix_to_tensor(const Matrix& a, const ModeShape& shape) {
    shape.validate();
    if (a.cols() != shape.total_columns()) throw std::invalid_argument("matrix_to_tensor: column count does not match mode sizes");
    if (a.rows() != shape.ambient_dim) throw std::invalid_argument("matrix_to_tensor: row count does not match ambient dim");
    std::vector<Eigen::Index> dims(shape.mode_sizes.begin(), shape.mode_sizes.end());
    dims.push_back(a.rows());
    // Last mode has stride M, so the linearization is vec(a^T).
    Matrix at = a.transpose();
    return Tensor(std::move(dims), Eigen::Map<Vector>(at.data(), at.size()));
}

/// Subtensor keeping `indices` (ascending, distinct) along mode j.
inline Tensor gather_mode(const Tensor& t, int j, const std::vector<int>& indices) {
    if (j < 0 || j >= t.order()) throw std::invalid_argument("gather_mode: mode out of range");
    const Eigen::Index nj = t.dims[j];
    for (std::size_t i = 0; i < indices.size(); ++i) {
        if (indices[i] < 0 || indices[i] >= nj) throw std::invalid_argument("gather_mode: index out of range");
        if (i > 0 && indices[i] <= indices[i - 1]) throw std::invalid_argument("gather_mode: indices must be ascending and distinct");
    }
    const Eigen::Index kj = static_cast<Eigen::Index>(indices.size());
    std::vector<Eigen::Index> dims = t.dims;
    dims[j] = kj;
    Tensor out = Tensor::zeros(std::move(dims));
    const Eigen::Index inner = t.stride(j);
    const Eigen::Index outer = t.size() / (inner * nj);
    for (Eigen::Index o = 0; o < outer; ++o)
        for (Eigen::Index r = 0; r < kj; ++r)
            std::memcpy(out.data.data() + (o * kj + r) * inner,
                        t.data.data() + (o * nj + indices[r]) * inner,
                        sizeof(double) * static_cast<std::size_t>(inner));
    return out;
}

/// Restrict the first d modes of an order-(d+1) tensor to a structured selection.
/// Equivalent to multiplying the mode-(d+1) unfolding by S_d (x) ... (x) S_1 on
/// the right, but realized as d sequential mode gathers.
inline Tensor apply_selection(const Tensor& t, const SelectionOperator& sel) {
    sel.validate();
    if (sel.order() + 1 != t.order()) throw std::invalid_argument("apply_selection: selection order must be tensor order minus 1");
    for (int j = 0; j < sel.order(); ++j)
        if (t.dims[j] != sel.mode_sizes[j]) throw std::invalid_argument("apply_selection: mode size mismatch at mode " + std::to_string(j));
    Tensor out = t;
    for (int j = 0; j < sel.order(); ++j) {
        if (static_cast<Eigen::Index>(sel.per_mode[j].size()) == t.dims[j]) continue;  // identity on this mode
        out = gather_mode(out, j, sel.per_mode[j]);
    }
    return out;
}

}  // namespace soed
