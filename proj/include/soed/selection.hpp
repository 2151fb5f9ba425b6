#pragma once

// Structured selection operators.
//
// A structured design over d categorical modes picks k_j indices per mode;
// the induced column selection on the flattened design matrix is the
// Kronecker product S_d (x) ... (x) S_1 of the per-mode selection matrices.
// The operator is stored as plain index sets; the Kronecker matrix is never
// materialized.

#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

namespace soed {

struct SelectionOperator {
    /// Per-mode selected indices (0-based, ascending, distinct), sizes (k_1,...,k_d).
    std::vector<std::vector<int>> per_mode;
    /// Full mode sizes (m_1,...,m_d).
    std::vector<int> mode_sizes;

    int order() const { return static_cast<int>(mode_sizes.size()); }

    long long selected_count() const {
        long long k = 1;
        for (const auto& s : per_mode) k *= static_cast<long long>(s.size());
        return k;
    }

    bool operator==(const SelectionOperator&) const = default;

    void validate() const {
        if (mode_sizes.empty()) throw std::invalid_argument("SelectionOperator: d >= 1 required");
        if (per_mode.size() != mode_sizes.size())
            throw std::invalid_argument("SelectionOperator: per_mode/mode_sizes length mismatch");
        for (std::size_t j = 0; j < per_mode.size(); ++j) {
            const auto& s = per_mode[j];
            if (s.empty()) throw std::invalid_argument("SelectionOperator: empty index set in mode " + std::to_string(j));
            for (std::size_t i = 0; i < s.size(); ++i) {
                if (s[i] < 0 || s[i] >= mode_sizes[j])
                    throw std::invalid_argument("SelectionOperator: index out of range in mode " + std::to_string(j));
                if (i > 0 && s[i] <= s[i - 1])
                    throw std::invalid_argument("SelectionOperator: indices must be ascending and distinct in mode " + std::to_string(j));
            }
        }
    }

    /// Selection that keeps every index of every mode.
    static SelectionOperator identity(const std::vector<int>& mode_sizes) {
        SelectionOperator sel;
        sel.mode_sizes = mode_sizes;
        sel.per_mode.reserve(mode_sizes.size());
        for (int m : mode_sizes) {
            std::vector<int> all(m);
            std::iota(all.begin(), all.end(), 0);
            sel.per_mode.push_back(std::move(all));
        }
        return sel;
    }

    /// Columns of the flattened N x (m_1...m_d) matrix picked by this operator,
    /// in ascending order. Column of the tuple (i_1,...,i_d) is
    /// sum_j i_j * prod_{l<j} m_l (first mode fastest).
    std::vector<long long> column_indices() const {
        validate();
        const int d = order();
        std::vector<long long> stride(d);
        long long s = 1;
        for (int j = 0; j < d; ++j) {
            stride[j] = s;
            s *= mode_sizes[j];
        }
        std::vector<long long> cols;
        cols.reserve(static_cast<std::size_t>(selected_count()));
        std::vector<std::size_t> pos(d, 0);
        while (true) {
            long long c = 0;
            for (int j = 0; j < d; ++j) c += static_cast<long long>(per_mode[j][pos[j]]) * stride[j];
            cols.push_back(c);
            int j = 0;
            while (j < d) {
                if (++pos[j] < per_mode[j].size()) break;
                pos[j] = 0;
                ++j;
            }
            if (j == d) break;
        }
        return cols;
    }
};

}  // namespace soed
