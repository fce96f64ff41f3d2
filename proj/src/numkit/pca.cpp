#include "artmod/numkit/pca.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "artmod/error.hpp"
#include "artmod/numkit/kernels.hpp"

namespace artmod::numkit {

namespace {

constexpr int kMaxSweeps = 80;

// Column-major dense matrix; columns are what the Jacobi sweep rotates.
struct Columns {
    std::size_t rows = 0;
    std::vector<std::vector<double>> cols;
};

void rotate(std::vector<double>& p, std::vector<double>& q, double c, double s) {
    for (std::size_t r = 0; r < p.size(); ++r) {
        const double x = p[r];
        const double y = q[r];
        p[r] = c * x - s * y;
        q[r] = s * x + c * y;
    }
}

// Hestenes one-sided Jacobi: right-multiplies B by plane rotations until its
// columns are mutually orthogonal. If `v` is non-null the same rotations are
// accumulated into it (so B_in * V = B_out).
void orthogonalize_columns(Columns& b, Columns* v) {
    const auto& k = kernels();
    const std::size_t n = b.cols.size();
    for (int sweep = 0; sweep < kMaxSweeps; ++sweep) {
        bool rotated = false;
        for (std::size_t p = 0; p + 1 < n; ++p) {
            for (std::size_t q = p + 1; q < n; ++q) {
                auto& bp = b.cols[p];
                auto& bq = b.cols[q];
                const double alpha = k.dot_f64(bp.data(), bp.data(), b.rows);
                const double beta = k.dot_f64(bq.data(), bq.data(), b.rows);
                const double gamma = k.dot_f64(bp.data(), bq.data(), b.rows);
                if (gamma == 0.0 || std::abs(gamma) <= 1e-15 * std::sqrt(alpha * beta)) continue;
                rotated = true;
                const double zeta = (beta - alpha) / (2.0 * gamma);
                const double t = std::copysign(1.0, zeta) / (std::abs(zeta) + std::sqrt(1.0 + zeta * zeta));
                const double c = 1.0 / std::sqrt(1.0 + t * t);
                const double s = c * t;
                rotate(bp, bq, c, s);
                if (v) rotate(v->cols[p], v->cols[q], c, s);
            }
        }
        if (!rotated) return;
    }
}

double norm(const std::vector<double>& x) {
    return std::sqrt(kernels().dot_f64(x.data(), x.data(), x.size()));
}

// Replace the zero-variance tail with an orthonormal completion taken from
// the standard basis, so components stay orthonormal on rank-deficient data.
void complete_basis(std::vector<std::vector<double>>& comps, std::size_t valid, std::size_t dim) {
    const auto& k = kernels();
    std::size_t next_axis = 0;
    for (std::size_t c = valid; c < comps.size(); ++c) {
        while (next_axis < dim) {
            std::vector<double> e(dim, 0.0);
            e[next_axis++] = 1.0;
            for (std::size_t j = 0; j < c; ++j) {
                k.axpy_f64(-k.dot_f64(comps[j].data(), e.data(), dim), comps[j].data(), e.data(), dim);
            }
            const double n = norm(e);
            if (n > 0.5) {
                for (auto& x : e) x /= n;
                comps[c] = std::move(e);
                break;
            }
        }
    }
}

void fix_sign(std::vector<double>& comp) {
    std::size_t best = 0;
    for (std::size_t i = 1; i < comp.size(); ++i) {
        if (std::abs(comp[i]) > std::abs(comp[best])) best = i;
    }
    if (comp[best] < 0.0) {
        for (auto& x : comp) x = -x;
    }
}

}  // namespace

std::vector<double> PcaModel::project(std::span<const float> point) const {
    if (point.size() != mean.size()) throw DimensionError(mean.size(), point.size(), "PCA project");
    std::vector<double> centered(point.size());
    for (std::size_t i = 0; i < point.size(); ++i) centered[i] = static_cast<double>(point[i]) - mean[i];
    std::vector<double> out(components.size());
    for (std::size_t c = 0; c < components.size(); ++c) {
        out[c] = kernels().dot_f64(components[c].data(), centered.data(), centered.size());
    }
    return out;
}

std::vector<double> PcaModel::reconstruct(std::span<const double> coords) const {
    if (coords.size() != components.size()) {
        throw DimensionError(components.size(), coords.size(), "PCA reconstruct");
    }
    std::vector<double> out(mean);
    for (std::size_t c = 0; c < components.size(); ++c) {
        kernels().axpy_f64(coords[c], components[c].data(), out.data(), out.size());
    }
    return out;
}

PcaProjection pca_fit_project(std::span<const EmbeddingVector> data, std::size_t out_dims) {
    if (out_dims == 0) throw InvalidArgument("PCA: out_dims must be positive");
    if (data.size() < out_dims + 1) {
        throw InvalidArgument("PCA: need at least " + std::to_string(out_dims + 1) + " points, got " +
                              std::to_string(data.size()));
    }
    const std::size_t m = data.size();
    const std::size_t d = data.front().dim();
    if (out_dims > d) throw InvalidArgument("PCA: out_dims exceeds data dimension");
    for (const auto& x : data) {
        if (x.dim() != d) throw DimensionError(d, x.dim(), "PCA input");
    }

    PcaModel model;
    model.mean.assign(d, 0.0);
    for (const auto& x : data) {
        for (std::size_t j = 0; j < d; ++j) model.mean[j] += x[j];
    }
    for (auto& v : model.mean) v /= static_cast<double>(m);

    std::vector<std::vector<double>> centered(m, std::vector<double>(d));
    double total = 0.0;
    for (std::size_t i = 0; i < m; ++i) {
        for (std::size_t j = 0; j < d; ++j) {
            centered[i][j] = static_cast<double>(data[i][j]) - model.mean[j];
            total += centered[i][j] * centered[i][j];
        }
    }
    if (total == 0.0) throw InvalidArgument("PCA: degenerate data (all points identical)");

    // Rotate whichever side of the m x d matrix is narrower.
    std::vector<std::vector<double>> directions;  // d-dim, unnormalized order
    std::vector<double> sigma;
    if (d <= m) {
        Columns b{m, std::vector<std::vector<double>>(d, std::vector<double>(m))};
        for (std::size_t i = 0; i < m; ++i)
            for (std::size_t j = 0; j < d; ++j) b.cols[j][i] = centered[i][j];
        Columns v{d, std::vector<std::vector<double>>(d, std::vector<double>(d, 0.0))};
        for (std::size_t j = 0; j < d; ++j) v.cols[j][j] = 1.0;
        orthogonalize_columns(b, &v);
        for (std::size_t j = 0; j < d; ++j) sigma.push_back(norm(b.cols[j]));
        directions = std::move(v.cols);
    } else {
        // A^T V = U S, so the normalized columns of A^T V are A's right singular vectors.
        Columns b{d, std::move(centered)};
        orthogonalize_columns(b, nullptr);
        for (auto& col : b.cols) {
            const double s = norm(col);
            sigma.push_back(s);
            if (s > 0.0)
                for (auto& x : col) x /= s;
        }
        directions = std::move(b.cols);
    }

    std::vector<std::size_t> order(sigma.size());
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](auto a, auto b) { return sigma[a] > sigma[b]; });

    const double sigma_max = sigma[order.front()];
    const double rank_tol = sigma_max * 1e-10 * static_cast<double>(std::max(m, d));
    std::vector<std::vector<double>> comps;
    std::size_t valid = 0;
    for (std::size_t c = 0; c < out_dims; ++c) {
        const auto idx = order[c];
        if (sigma[idx] > rank_tol) {
            comps.push_back(directions[idx]);
            model.explained_variance.push_back(sigma[idx] * sigma[idx] / static_cast<double>(m - 1));
            ++valid;
        } else {
            comps.emplace_back(d, 0.0);
            model.explained_variance.push_back(0.0);
        }
    }
    complete_basis(comps, valid, d);
    for (auto& c : comps) fix_sign(c);
    model.components = std::move(comps);

    PcaProjection out;
    out.points.reserve(m);
    for (const auto& x : data) out.points.push_back(model.project(x.values()));
    out.model = std::move(model);
    return out;
}

}  // namespace artmod::numkit
