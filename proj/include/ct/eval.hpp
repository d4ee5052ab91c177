#pragma once
// Classifier evaluation: confusion matrix (annotated class on rows, machine
// label on columns), per-class precision/recall/F and support-weighted
// averages.

#include <array>
#include <string>
#include <vector>

#include "ct/error.hpp"
#include "ct/thread.hpp"

namespace ct {

using Confusion = std::array<std::array<long, kNumClasses>, kNumClasses>;

struct EvalReport {
    Confusion confusion{};
    std::array<double, kNumClasses> precision{};
    std::array<double, kNumClasses> recall{};
    std::array<double, kNumClasses> f1{};
    std::array<long, kNumClasses> support{}; // gold counts (row sums)
    double weighted_precision = 0.0;
    double weighted_recall = 0.0; // equals accuracy by construction
    double weighted_f1 = 0.0;
    double accuracy = 0.0;
    long total = 0;
};

EvalReport evaluate(const std::vector<int>& gold, const std::vector<int>& predicted);
EvalReport report_from_confusion(const Confusion& confusion);

std::string format_confusion(const Confusion& c);
std::string format_report(const EvalReport& r);

} // namespace ct
