#pragma once

#include <stdexcept>
#include <utility>
#include <vector>

#include <json.hpp>

#include "signed_spectra/dense_matrix.hpp"

namespace signed_spectra {

/// Vertex sign function for switching: one +/-1 entry per vertex on each side.
struct SwitchingFunction {
    std::vector<int> theta_u;
    std::vector<int> theta_v;
};

/// Signed complete bipartite graph: parts of size p and q with a p x q table
/// of edge signs. p <= q is enforced at construction; when the input violates
/// it the parts are swapped and the table transposed. Immutable after
/// construction.
class SignedBipartiteGraph {
public:
    SignedBipartiteGraph(int p, int q, const std::vector<std::vector<int>>& sign_rows) {
        if (p < 1 || q < 1) throw std::invalid_argument("part sizes must be at least 1");
        if (int(sign_rows.size()) != p)
            throw std::invalid_argument("sign table must have p rows");
        for (const auto& row : sign_rows) {
            if (int(row.size()) != q)
                throw std::invalid_argument("sign table rows must have q entries");
            for (int v : row)
                if (v != 1 && v != -1)
                    throw std::invalid_argument("sign entries must be +1 or -1");
        }
        if (p <= q) {
            p_ = p;
            q_ = q;
            signs_.reserve(std::size_t(p) * std::size_t(q));
            for (const auto& row : sign_rows) signs_.insert(signs_.end(), row.begin(), row.end());
        } else {
            p_ = q;
            q_ = p;
            signs_.assign(std::size_t(p) * std::size_t(q), 0);
            for (int i = 0; i < p; ++i)
                for (int j = 0; j < q; ++j) signs_[std::size_t(j) * std::size_t(p) + i] = sign_rows[i][j];
        }
    }

    static SignedBipartiteGraph all_positive(int p, int q) {
        return SignedBipartiteGraph(p, q, std::vector<std::vector<int>>(p, std::vector<int>(q, 1)));
    }

    int p() const { return p_; }
    int q() const { return q_; }

    int sign(int i, int j) const { return signs_[std::size_t(i) * std::size_t(q_) + std::size_t(j)]; }

    int negative_edge_count() const {
        int n = 0;
        for (int v : signs_) n += (v < 0);
        return n;
    }

    /// The p x q sign table as a real matrix (the off-diagonal adjacency block).
    DenseMatrix spectral_block() const {
        DenseMatrix b{std::size_t(p_), std::size_t(q_)};
        for (int i = 0; i < p_; ++i)
            for (int j = 0; j < q_; ++j) b(std::size_t(i), std::size_t(j)) = double(sign(i, j));
        return b;
    }

    /// Full (p+q) x (p+q) symmetric adjacency matrix with zero diagonal blocks.
    DenseMatrix adjacency_matrix() const {
        const std::size_t n = std::size_t(p_ + q_);
        DenseMatrix a(n, n);
        for (int i = 0; i < p_; ++i)
            for (int j = 0; j < q_; ++j) {
                a(std::size_t(i), std::size_t(p_ + j)) = double(sign(i, j));
                a(std::size_t(p_ + j), std::size_t(i)) = double(sign(i, j));
            }
        return a;
    }

    SignedBipartiteGraph negated() const {
        SignedBipartiteGraph out(*this);
        for (int& v : out.signs_) v = -v;
        return out;
    }

    SignedBipartiteGraph switched(const SwitchingFunction& f) const {
        if (int(f.theta_u.size()) != p_ || int(f.theta_v.size()) != q_)
            throw std::invalid_argument("switching function length mismatch");
        for (int v : f.theta_u)
            if (v != 1 && v != -1) throw std::invalid_argument("switching entries must be +1 or -1");
        for (int v : f.theta_v)
            if (v != 1 && v != -1) throw std::invalid_argument("switching entries must be +1 or -1");
        SignedBipartiteGraph out(*this);
        for (int i = 0; i < p_; ++i)
            for (int j = 0; j < q_; ++j)
                out.signs_[std::size_t(i) * std::size_t(q_) + std::size_t(j)] =
                    f.theta_u[std::size_t(i)] * sign(i, j) * f.theta_v[std::size_t(j)];
        return out;
    }

    /// U-indices whose row contains at least one negative edge.
    std::vector<int> cover_rows() const {
        std::vector<int> rows;
        for (int i = 0; i < p_; ++i)
            for (int j = 0; j < q_; ++j)
                if (sign(i, j) < 0) {
                    rows.push_back(i);
                    break;
                }
        return rows;
    }

    /// V-indices whose column contains at least one negative edge.
    std::vector<int> cover_cols() const {
        std::vector<int> cols;
        for (int j = 0; j < q_; ++j)
            for (int i = 0; i < p_; ++i)
                if (sign(i, j) < 0) {
                    cols.push_back(j);
                    break;
                }
        return cols;
    }

    /// Sizes (r, s) of the smallest vertex sets containing every negative
    /// edge; (0, 0) for an all-positive graph.
    std::pair<int, int> minimal_cover() const {
        return {int(cover_rows().size()), int(cover_cols().size())};
    }

    /// The sign table restricted to the negative cover rows and columns.
    DenseMatrix cover_block() const {
        const auto rows = cover_rows();
        const auto cols = cover_cols();
        DenseMatrix x(rows.size(), cols.size());
        for (std::size_t a = 0; a < rows.size(); ++a)
            for (std::size_t b = 0; b < cols.size(); ++b)
                x(a, b) = double(sign(rows[a], cols[b]));
        return x;
    }

    /// Balanced iff every cycle is positive; for a complete bipartite signing
    /// that is exactly the rank-one condition on the sign table.
    bool is_balanced() const {
        for (int i = 0; i < p_; ++i)
            for (int j = 0; j < q_; ++j)
                if (sign(i, j) * sign(i, 0) * sign(0, j) * sign(0, 0) != 1) return false;
        return true;
    }

    nlohmann::ordered_json to_json() const {
        nlohmann::ordered_json j;
        j["p"] = p_;
        j["q"] = q_;
        auto rows = nlohmann::ordered_json::array();
        for (int i = 0; i < p_; ++i) {
            auto row = nlohmann::ordered_json::array();
            for (int jj = 0; jj < q_; ++jj) row.push_back(sign(i, jj));
            rows.push_back(std::move(row));
        }
        j["signs"] = std::move(rows);
        return j;
    }

    static SignedBipartiteGraph from_json(const nlohmann::json& j) {
        const int p = j.at("p").get<int>();
        const int q = j.at("q").get<int>();
        const auto rows = j.at("signs").get<std::vector<std::vector<int>>>();
        return SignedBipartiteGraph(p, q, rows);
    }

    bool operator==(const SignedBipartiteGraph&) const = default;

private:
    int p_ = 0;
    int q_ = 0;
    std::vector<int> signs_;  // row-major p_ x q_
};

}  // namespace signed_spectra
