#pragma once
// Thread-length OLS model: design assembly, least-squares fit with
// in-column-order omission of collinear predictors, Student-t inference,
// and the per-strand report table.

#include <string>
#include <vector>

#include "ct/thread.hpp"

namespace ct {

// Row-major design with named columns. The final column is the intercept.
struct DesignMatrix {
    std::vector<std::string> names;
    std::size_t nrows = 0;
    std::vector<double> x; // nrows * names.size(), row-major
    std::vector<double> y;

    std::size_t ncols() const { return names.size(); }
    double at(std::size_t r, std::size_t c) const { return x[r * names.size() + c]; }
};

// One table cell: either a fitted coefficient with inference, or omitted.
struct CoefEntry {
    std::string name;
    bool omitted = false;
    double coef = 0.0;
    double std_error = 0.0;
    double t_stat = 0.0;
    double p_value = 1.0;
};

struct OlsFit {
    std::vector<CoefEntry> entries; // one per design column, in column order
    double r2 = 0.0;
    double adj_r2 = 0.0;
    long df_resid = 0;
    std::size_t n_obs = 0;

    std::vector<std::string> omitted_names() const;
    std::size_t n_retained() const;
};

// Fixed predictor order used throughout the artifact; intercept ("cons") last.
extern const std::vector<std::string> kPredictorNames;

DesignMatrix build_design(const std::vector<ThreadStats>& stats);

// Minimize squared residuals. Columns that are linear combinations of earlier
// columns (relative tolerance 1e-10) are omitted in column order. Standard
// errors from sigma^2 (X'X)^-1; p-values two-sided Student-t on df_resid.
OlsFit fit_ols(const DesignMatrix& d, double rank_tol = 1e-10);

// Two-sided tail probability of the Student-t distribution, via the
// regularized incomplete beta function. Absolute accuracy about 1e-12.
double student_t_p(double t, long df);

// Significance stars: *** p<0.001, ** p<0.01, * p<0.05.
std::string star_suffix(double p);

// Render the Coef./Std. Err. table across strands, one row per predictor
// plus the intercept and an adjusted-R2 row. All fits must share the same
// column set.
std::string render_table(const std::vector<std::pair<std::string, OlsFit>>& fits);

// Machine-readable rendering: one row per (strand, column) as TSV.
std::string render_table_tsv(const std::vector<std::pair<std::string, OlsFit>>& fits);

} // namespace ct
