#pragma once
// Linear soft-margin SVM trained by dual coordinate descent, one-vs-rest
// multiclass wrapper with min-max feature scaling, and stratified k-fold
// splitting.

#include <array>
#include <cstdint>
#include <vector>

#include "ct/error.hpp"
#include "ct/textfeat.hpp"
#include "ct/thread.hpp"

namespace ct {

using SparseRow = std::vector<std::pair<int, double>>;

struct SparseMatrix {
    int n_cols = 0;
    std::vector<SparseRow> rows;

    std::size_t n_rows() const { return rows.size(); }
};

// Per-feature min/max observed on training data.
struct ScalingParams {
    std::vector<double> mins;
    std::vector<double> maxs;

    std::size_t dim() const { return mins.size(); }
};

ScalingParams fit_scaling(const SparseMatrix& x_train);

// x' = (x - min) / (max - min); constant features map to 0. Values are
// clamped to [0,1] when `clamp` is set (prediction time).
SparseRow apply_scaling(const ScalingParams& p, const SparseRow& x, bool clamp);
SparseMatrix apply_scaling(const ScalingParams& p, const SparseMatrix& x, bool clamp);

struct LinearModel {
    std::vector<double> weights;
    double bias = 0.0;
    double C = 1.0;
    int iterations = 0;        // completed sweeps over the dual variables
    double dual_objective = 0.0;
    bool present = true;       // false for classes absent from training

    double decision(const SparseRow& x) const;
};

// Solve the L1-loss soft-margin dual, min over 0 <= a_i <= C of
// 1/2 a'Qa - e'a, by coordinate descent with a fixed sweep order. Stops when
// the largest projected-gradient violation in a sweep is <= tol. Weights are
// recovered as sum a_i y_i x_i; the bias is the mean of y_i - w.x_i over
// unbounded support vectors (0 < a_i < C).
LinearModel train_binary(const SparseMatrix& x, const std::vector<int>& y, double C = 1.0,
                         double tol = 1e-3, int max_iter = 1000);

struct MulticlassModel {
    std::array<LinearModel, kNumClasses> models;
    ScalingParams scaling;
    double C = 1.0;
    double gamma_meta = 0.1; // recorded only; unused with the linear kernel

    int feature_dim() const { return static_cast<int>(scaling.dim()); }
};

// One binary model per conflated class against the rest. Raw features; the
// scaling is fit here and shared by all four models.
MulticlassModel train_ovr(const SparseMatrix& x_raw, const std::vector<int>& labels,
                          double C = 1.0, double tol = 1e-3, int max_iter = 1000);

// Argmax of the per-class decision values; ties break to the lowest class.
int predict(const MulticlassModel& m, const SparseRow& x_raw);

// Disjoint index folds with per-class counts balanced to within one.
std::vector<std::vector<int>> kfold_stratified(const std::vector<int>& labels, int k,
                                               std::uint64_t seed);

} // namespace ct
