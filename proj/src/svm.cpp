#include "ct/svm.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <random>

namespace ct {

ScalingParams fit_scaling(const SparseMatrix& x_train) {
    if (x_train.rows.empty()) fail(Err::EmptyInput, "cannot fit scaling on empty data");

    const int dim = x_train.n_cols;
    ScalingParams p;
    p.mins.assign(dim, 0.0);
    p.maxs.assign(dim, 0.0);
    std::vector<std::size_t> nnz(dim, 0);
    std::vector<bool> touched(dim, false);
    for (const auto& row : x_train.rows) {
        for (const auto& [col, val] : row) {
            if (col < 0 || col >= dim) fail(Err::DimensionMismatch, "feature column out of range");
            if (!touched[col]) {
                p.mins[col] = val;
                p.maxs[col] = val;
                touched[col] = true;
            } else {
                p.mins[col] = std::min(p.mins[col], val);
                p.maxs[col] = std::max(p.maxs[col], val);
            }
            ++nnz[col];
        }
    }
    // implicit zeros take part in the min/max when a column is not fully dense
    for (int j = 0; j < dim; ++j) {
        if (nnz[j] < x_train.rows.size()) {
            p.mins[j] = std::min(p.mins[j], 0.0);
            p.maxs[j] = std::max(p.maxs[j], 0.0);
        }
    }
    return p;
}

SparseRow apply_scaling(const ScalingParams& p, const SparseRow& x, bool clamp) {
    SparseRow out;
    out.reserve(x.size());
    for (const auto& [col, val] : x) {
        if (col < 0 || col >= static_cast<int>(p.dim()))
            fail(Err::DimensionMismatch, "feature column out of range");
        double range = p.maxs[col] - p.mins[col];
        double scaled = range > 0.0 ? (val - p.mins[col]) / range : 0.0;
        if (clamp) scaled = std::clamp(scaled, 0.0, 1.0);
        if (scaled != 0.0) out.emplace_back(col, scaled);
    }
    return out;
}

SparseMatrix apply_scaling(const ScalingParams& p, const SparseMatrix& x, bool clamp) {
    SparseMatrix out;
    out.n_cols = x.n_cols;
    out.rows.reserve(x.rows.size());
    for (const auto& row : x.rows) out.rows.push_back(apply_scaling(p, row, clamp));
    return out;
}

double LinearModel::decision(const SparseRow& x) const {
    if (!present) return -std::numeric_limits<double>::infinity();
    double s = bias;
    for (const auto& [col, val] : x)
        if (col < static_cast<int>(weights.size())) s += weights[col] * val;
    return s;
}

LinearModel train_binary(const SparseMatrix& x, const std::vector<int>& y, double C, double tol,
                         int max_iter) {
    const std::size_t n = x.rows.size();
    if (n != y.size()) fail(Err::LengthMismatch, "label count does not match row count");
    if (C <= 0.0) fail(Err::BadConfig, "C must be positive");

    bool has_pos = false, has_neg = false;
    for (int yi : y) {
        if (yi == 1) has_pos = true;
        else if (yi == -1) has_neg = true;
        else fail(Err::BadConfig, "binary labels must be +1/-1");
    }
    if (!has_pos || !has_neg) fail(Err::SingleClassInput, "both classes required for training");

    std::vector<double> qd(n, 0.0); // diagonal of Q
    for (std::size_t i = 0; i < n; ++i) {
        for (const auto& [col, val] : x.rows[i]) {
            if (!std::isfinite(val)) fail(Err::NonFiniteFeature, "non-finite feature value");
            if (col < 0 || col >= x.n_cols)
                fail(Err::DimensionMismatch, "feature column out of range");
            qd[i] += val * val;
        }
    }

    std::vector<double> w(x.n_cols, 0.0);
    std::vector<double> alpha(n, 0.0);

    int sweeps = 0;
    for (; sweeps < max_iter; ++sweeps) {
        double max_violation = 0.0;
        for (std::size_t i = 0; i < n; ++i) {
            const double yi = y[i];
            double wx = 0.0;
            for (const auto& [col, val] : x.rows[i]) wx += w[col] * val;
            const double g = yi * wx - 1.0;

            double pg = g;
            if (alpha[i] <= 0.0)
                pg = std::min(g, 0.0);
            else if (alpha[i] >= C)
                pg = std::max(g, 0.0);
            max_violation = std::max(max_violation, std::fabs(pg));

            if (std::fabs(pg) > 1e-12) {
                double next;
                if (qd[i] > 0.0)
                    next = std::clamp(alpha[i] - g / qd[i], 0.0, C);
                else
                    next = g < 0.0 ? C : (g > 0.0 ? 0.0 : alpha[i]);
                const double delta = (next - alpha[i]) * yi;
                if (delta != 0.0)
                    for (const auto& [col, val] : x.rows[i]) w[col] += delta * val;
                alpha[i] = next;
            }
        }
        if (max_violation <= tol) {
            ++sweeps;
            break;
        }
    }

    LinearModel m;
    m.weights = std::move(w);
    m.C = C;
    m.iterations = sweeps;

    double alpha_sum = 0.0;
    for (double a : alpha) alpha_sum += a;
    double wnorm2 = 0.0;
    for (double v : m.weights) wnorm2 += v * v;
    m.dual_objective = alpha_sum - 0.5 * wnorm2;

    // post-hoc intercept from unbounded support vectors
    double b_sum = 0.0;
    long b_count = 0;
    for (std::size_t i = 0; i < n; ++i) {
        if (alpha[i] > 0.0 && alpha[i] < C) {
            double wx = 0.0;
            for (const auto& [col, val] : x.rows[i]) wx += m.weights[col] * val;
            b_sum += y[i] - wx;
            ++b_count;
        }
    }
    m.bias = b_count > 0 ? b_sum / static_cast<double>(b_count) : 0.0;
    return m;
}

MulticlassModel train_ovr(const SparseMatrix& x_raw, const std::vector<int>& labels, double C,
                          double tol, int max_iter) {
    if (x_raw.rows.size() != labels.size())
        fail(Err::LengthMismatch, "label count does not match row count");
    if (x_raw.rows.empty()) fail(Err::EmptyInput, "no training rows");

    std::array<long, kNumClasses> support{};
    for (int l : labels) {
        if (l < 0 || l >= kNumClasses) fail(Err::BadConfig, "class label out of range");
        ++support[l];
    }
    int present = 0;
    for (long s : support)
        if (s > 0) ++present;
    if (present < 2) fail(Err::SingleClassInput, "need at least two classes to train");

    MulticlassModel m;
    m.C = C;
    m.scaling = fit_scaling(x_raw);
    SparseMatrix xs = apply_scaling(m.scaling, x_raw, /*clamp=*/false);

    for (int c = 0; c < kNumClasses; ++c) {
        if (support[c] == 0) {
            m.models[c].present = false;
            m.models[c].weights.assign(x_raw.n_cols, 0.0);
            m.models[c].C = C;
            continue;
        }
        std::vector<int> y(labels.size());
        for (std::size_t i = 0; i < labels.size(); ++i) y[i] = labels[i] == c ? 1 : -1;
        m.models[c] = train_binary(xs, y, C, tol, max_iter);
    }
    return m;
}

int predict(const MulticlassModel& m, const SparseRow& x_raw) {
    for (const auto& [col, val] : x_raw) {
        (void)val;
        if (col < 0 || col >= m.feature_dim())
            fail(Err::DimensionMismatch, "input dimension does not match model");
    }
    SparseRow xs = apply_scaling(m.scaling, x_raw, /*clamp=*/true);
    int best = 0;
    double best_score = -std::numeric_limits<double>::infinity();
    for (int c = 0; c < kNumClasses; ++c) {
        double score = m.models[c].decision(xs);
        if (score > best_score) {
            best_score = score;
            best = c;
        }
    }
    return best;
}

std::vector<std::vector<int>> kfold_stratified(const std::vector<int>& labels, int k,
                                               std::uint64_t seed) {
    const int n = static_cast<int>(labels.size());
    if (k < 1) fail(Err::BadConfig, "fold count must be >= 1");
    if (n < k) fail(Err::TooFewSamples, std::to_string(n) + " samples for " +
                                            std::to_string(k) + " folds");

    std::map<int, std::vector<int>> by_class;
    for (int i = 0; i < n; ++i) by_class[labels[i]].push_back(i);

    // hand-rolled Fisher-Yates: identical folds for a given seed everywhere
    std::mt19937_64 rng(seed);
    std::vector<std::vector<int>> folds(k);
    long cursor = 0;
    for (auto& [cls, idx] : by_class) {
        (void)cls;
        for (std::size_t i = idx.size(); i > 1; --i) {
            std::size_t j = static_cast<std::size_t>(rng() % i);
            std::swap(idx[i - 1], idx[j]);
        }
        for (int id : idx) {
            folds[cursor % k].push_back(id);
            ++cursor;
        }
    }
    for (auto& f : folds) std::sort(f.begin(), f.end());
    return folds;
}

} // namespace ct
