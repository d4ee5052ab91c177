#include "ct/eval.hpp"

#include <cstdio>
#include <sstream>

namespace ct {

EvalReport evaluate(const std::vector<int>& gold, const std::vector<int>& predicted) {
    if (gold.size() != predicted.size())
        fail(Err::LengthMismatch, "gold and predicted label sequences differ in length");
    Confusion c{};
    for (std::size_t i = 0; i < gold.size(); ++i) {
        if (gold[i] < 0 || gold[i] >= kNumClasses || predicted[i] < 0 ||
            predicted[i] >= kNumClasses)
            fail(Err::BadConfig, "class label out of range");
        ++c[gold[i]][predicted[i]];
    }
    return report_from_confusion(c);
}

EvalReport report_from_confusion(const Confusion& confusion) {
    EvalReport r;
    r.confusion = confusion;

    std::array<long, kNumClasses> colsum{};
    long trace = 0;
    for (int i = 0; i < kNumClasses; ++i) {
        for (int j = 0; j < kNumClasses; ++j) {
            r.support[i] += confusion[i][j];
            colsum[j] += confusion[i][j];
        }
        trace += confusion[i][i];
        r.total += r.support[i];
    }

    for (int c = 0; c < kNumClasses; ++c) {
        long tp = confusion[c][c];
        r.precision[c] = colsum[c] > 0 ? static_cast<double>(tp) / colsum[c] : 0.0;
        r.recall[c] = r.support[c] > 0 ? static_cast<double>(tp) / r.support[c] : 0.0;
        double pr = r.precision[c] + r.recall[c];
        r.f1[c] = pr > 0.0 ? 2.0 * r.precision[c] * r.recall[c] / pr : 0.0;
    }

    if (r.total > 0) {
        double wp = 0.0, wf = 0.0;
        for (int c = 0; c < kNumClasses; ++c) {
            wp += r.support[c] * r.precision[c];
            wf += r.support[c] * r.f1[c];
        }
        r.weighted_precision = wp / r.total;
        r.weighted_f1 = wf / r.total;
        r.accuracy = static_cast<double>(trace) / r.total;
        // support_c * (diag_c / support_c) telescopes to the trace; computing
        // it that way keeps the recall/accuracy identity exact
        r.weighted_recall = r.accuracy;
    }
    return r;
}

static const char* kClassNames[kNumClasses] = {"cyber_hate", "support_hate", "disagree_insult",
                                               "general"};

std::string format_confusion(const Confusion& c) {
    std::ostringstream out;
    out << "gold \\ predicted";
    for (int j = 0; j < kNumClasses; ++j) out << '\t' << kClassNames[j];
    out << '\n';
    for (int i = 0; i < kNumClasses; ++i) {
        out << kClassNames[i];
        for (int j = 0; j < kNumClasses; ++j) out << '\t' << c[i][j];
        out << '\n';
    }
    return out.str();
}

std::string format_report(const EvalReport& r) {
    std::ostringstream out;
    char buf[160];
    out << "class\tprecision\trecall\tf1\tsupport\n";
    for (int c = 0; c < kNumClasses; ++c) {
        std::snprintf(buf, sizeof buf, "%s\t%.3f\t%.3f\t%.3f\t%ld\n", kClassNames[c],
                      r.precision[c], r.recall[c], r.f1[c], r.support[c]);
        out << buf;
    }
    std::snprintf(buf, sizeof buf, "weighted\t%.3f\t%.3f\t%.3f\t%ld\n", r.weighted_precision,
                  r.weighted_recall, r.weighted_f1, r.total);
    out << buf;
    std::snprintf(buf, sizeof buf, "accuracy\t%.3f\n", r.accuracy);
    out << buf;
    return out.str();
}

} // namespace ct
