#include "ct/regression.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <numeric>
#include <sstream>

namespace ct {

const std::vector<std::string> kPredictorNames = {
    "hatecount",      "support",          "disagree",
    "insults",        "uniqcontributors", "origpostertweets",
    "uniqhatefulcontributors", "uniqCScontributors",
};

std::vector<std::string> OlsFit::omitted_names() const {
    std::vector<std::string> out;
    for (const auto& e : entries)
        if (e.omitted) out.push_back(e.name);
    return out;
}

std::size_t OlsFit::n_retained() const {
    std::size_t k = 0;
    for (const auto& e : entries)
        if (!e.omitted) ++k;
    return k;
}

DesignMatrix build_design(const std::vector<ThreadStats>& stats) {
    if (stats.empty()) fail(Err::EmptyInput, "no thread statistics to regress on");

    DesignMatrix d;
    d.names = kPredictorNames;
    d.names.push_back("cons");
    d.nrows = stats.size();
    d.x.reserve(d.nrows * d.names.size());
    d.y.reserve(d.nrows);
    for (const auto& s : stats) {
        d.x.push_back(static_cast<double>(s.hatecount));
        d.x.push_back(static_cast<double>(s.support));
        d.x.push_back(static_cast<double>(s.disagree));
        d.x.push_back(static_cast<double>(s.insults));
        d.x.push_back(static_cast<double>(s.uniqcontributors));
        d.x.push_back(static_cast<double>(s.origpostertweets));
        d.x.push_back(static_cast<double>(s.uniqhatefulcontributors));
        d.x.push_back(static_cast<double>(s.uniqCScontributors));
        d.x.push_back(1.0);
        d.y.push_back(static_cast<double>(s.length));
    }
    return d;
}

namespace {

double dot(const std::vector<double>& a, const std::vector<double>& b) {
    double s = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

double norm2(const std::vector<double>& a) { return std::sqrt(dot(a, a)); }

// Continued fraction for the regularized incomplete beta function
// (modified Lentz). Converges for x < (a+1)/(a+b+2).
double betacf(double a, double b, double x) {
    constexpr int kMaxIter = 500;
    constexpr double kEps = 1e-14;
    constexpr double kTiny = 1e-300;

    double qab = a + b, qap = a + 1.0, qam = a - 1.0;
    double c = 1.0;
    double d = 1.0 - qab * x / qap;
    if (std::fabs(d) < kTiny) d = kTiny;
    d = 1.0 / d;
    double h = d;
    for (int m = 1; m <= kMaxIter; ++m) {
        int m2 = 2 * m;
        double aa = m * (b - m) * x / ((qam + m2) * (a + m2));
        d = 1.0 + aa * d;
        if (std::fabs(d) < kTiny) d = kTiny;
        c = 1.0 + aa / c;
        if (std::fabs(c) < kTiny) c = kTiny;
        d = 1.0 / d;
        h *= d * c;
        aa = -(a + m) * (qab + m) * x / ((a + m2) * (qap + m2));
        d = 1.0 + aa * d;
        if (std::fabs(d) < kTiny) d = kTiny;
        c = 1.0 + aa / c;
        if (std::fabs(c) < kTiny) c = kTiny;
        d = 1.0 / d;
        double del = d * c;
        h *= del;
        if (std::fabs(del - 1.0) < kEps) break;
    }
    return h;
}

double ibeta_reg(double a, double b, double x) {
    if (x <= 0.0) return 0.0;
    if (x >= 1.0) return 1.0;
    double ln_front = std::lgamma(a + b) - std::lgamma(a) - std::lgamma(b) +
                      a * std::log(x) + b * std::log1p(-x);
    double front = std::exp(ln_front);
    if (x < (a + 1.0) / (a + b + 2.0))
        return front * betacf(a, b, x) / a;
    return 1.0 - front * betacf(b, a, 1.0 - x) / b;
}

} // namespace

double student_t_p(double t, long df) {
    if (df < 1) fail(Err::InvalidDf, "degrees of freedom must be >= 1");
    if (std::isnan(t)) fail(Err::InvalidDf, "t statistic is NaN");
    if (std::isinf(t)) return 0.0;
    if (t == 0.0) return 1.0;
    double nu = static_cast<double>(df);
    double x = nu / (nu + t * t);
    double p = ibeta_reg(nu / 2.0, 0.5, x);
    return std::clamp(p, 0.0, 1.0);
}

std::string star_suffix(double p) {
    if (p < 0.001) return "***";
    if (p < 0.01) return "**";
    if (p < 0.05) return "*";
    return "";
}

OlsFit fit_ols(const DesignMatrix& d, double rank_tol) {
    const std::size_t n = d.nrows;
    const std::size_t m = d.ncols();
    if (n == 0 || m == 0) fail(Err::EmptyInput, "empty design matrix");
    if (d.y.size() != n) fail(Err::LengthMismatch, "y length does not match row count");

    // Modified Gram-Schmidt with reorthogonalization, visiting columns in
    // order. A column whose residual against the span of earlier retained
    // columns falls below rank_tol * its own norm is omitted.
    std::vector<std::vector<double>> q;        // orthonormal basis, n each
    std::vector<std::size_t> retained;         // original column indices
    std::vector<std::vector<double>> r_cols;   // R, column per retained column

    for (std::size_t j = 0; j < m; ++j) {
        std::vector<double> v(n);
        for (std::size_t i = 0; i < n; ++i) v[i] = d.at(i, j);
        const double orig_norm = norm2(v);

        std::vector<double> r(q.size(), 0.0);
        for (int pass = 0; pass < 2; ++pass) {
            for (std::size_t i = 0; i < q.size(); ++i) {
                double proj = dot(q[i], v);
                r[i] += proj;
                for (std::size_t row = 0; row < n; ++row) v[row] -= proj * q[i][row];
            }
        }
        const double res_norm = norm2(v);
        if (res_norm <= rank_tol * orig_norm) continue; // collinear (or zero): omit

        for (double& e : v) e /= res_norm;
        r.push_back(res_norm);
        q.push_back(std::move(v));
        r_cols.push_back(std::move(r));
        retained.push_back(j);
    }

    const std::size_t k = retained.size();
    if (k == 0) fail(Err::AllColumnsOmitted, "no linearly independent columns");
    if (n <= k + 1)
        fail(Err::InsufficientRows, "need more than " + std::to_string(k + 1) +
                                        " rows for " + std::to_string(k) + " retained columns");

    // beta solves R beta = Q'y
    std::vector<double> qty(k);
    for (std::size_t i = 0; i < k; ++i) qty[i] = dot(q[i], d.y);

    std::vector<double> beta(k, 0.0);
    for (std::size_t i = k; i-- > 0;) {
        double s = qty[i];
        for (std::size_t j = i + 1; j < k; ++j) s -= r_cols[j][i] * beta[j];
        beta[i] = s / r_cols[i][i];
    }

    // residuals against the retained columns of the original matrix
    double rss = 0.0;
    double ysum = std::accumulate(d.y.begin(), d.y.end(), 0.0);
    double ymean = ysum / static_cast<double>(n);
    double tss = 0.0;
    for (std::size_t row = 0; row < n; ++row) {
        double fitted = 0.0;
        for (std::size_t i = 0; i < k; ++i) fitted += d.at(row, retained[i]) * beta[i];
        double res = d.y[row] - fitted;
        rss += res * res;
        tss += (d.y[row] - ymean) * (d.y[row] - ymean);
    }

    const long df = static_cast<long>(n) - static_cast<long>(k);
    const double sigma2 = rss / static_cast<double>(df);

    // (X'X)^-1 = Rinv Rinv'; Rinv by back substitution on columns of I
    std::vector<std::vector<double>> rinv(k, std::vector<double>(k, 0.0));
    for (std::size_t col = 0; col < k; ++col) {
        std::vector<double> e(k, 0.0);
        e[col] = 1.0;
        for (std::size_t i = k; i-- > 0;) {
            double s = e[i];
            for (std::size_t j = i + 1; j < k; ++j) s -= r_cols[j][i] * rinv[j][col];
            rinv[i][col] = s / r_cols[i][i];
        }
    }

    OlsFit fit;
    fit.n_obs = n;
    fit.df_resid = df;
    fit.r2 = tss > 0.0 ? 1.0 - rss / tss : (rss == 0.0 ? 1.0 : 0.0);
    fit.adj_r2 = 1.0 - (1.0 - fit.r2) * static_cast<double>(n - 1) / static_cast<double>(df);

    fit.entries.resize(m);
    for (std::size_t j = 0; j < m; ++j) {
        fit.entries[j].name = d.names[j];
        fit.entries[j].omitted = true;
    }
    for (std::size_t i = 0; i < k; ++i) {
        double var = 0.0;
        for (std::size_t j = 0; j < k; ++j) var += rinv[i][j] * rinv[i][j];
        CoefEntry& e = fit.entries[retained[i]];
        e.omitted = false;
        e.coef = beta[i];
        e.std_error = std::sqrt(sigma2 * var);
        e.t_stat = e.std_error > 0.0
                       ? e.coef / e.std_error
                       : (e.coef == 0.0 ? 0.0 : std::numeric_limits<double>::infinity() *
                                                    (e.coef > 0 ? 1.0 : -1.0));
        e.p_value = student_t_p(e.t_stat, df);
    }
    return fit;
}

namespace {

std::string fmt6(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.6f", v);
    return buf;
}

std::string fmt4g(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.4g", v);
    return buf;
}

void check_same_columns(const std::vector<std::pair<std::string, OlsFit>>& fits) {
    if (fits.empty()) fail(Err::EmptyInput, "no fits to render");
    const auto& first = fits.front().second.entries;
    for (const auto& [label, fit] : fits) {
        if (fit.entries.size() != first.size())
            fail(Err::MismatchedPredictors, "fit for " + label + " has a different column set");
        for (std::size_t i = 0; i < first.size(); ++i)
            if (fit.entries[i].name != first[i].name)
                fail(Err::MismatchedPredictors, "fit for " + label + " has a different column set");
    }
}

} // namespace

std::string render_table(const std::vector<std::pair<std::string, OlsFit>>& fits) {
    check_same_columns(fits);
    const auto& cols = fits.front().second.entries;

    std::vector<std::vector<std::string>> cells;
    std::vector<std::string> header{""};
    for (const auto& [label, fit] : fits) {
        (void)fit;
        header.push_back(label + " Coef.");
        header.push_back(label + " Std. Err.");
    }
    cells.push_back(header);

    for (std::size_t c = 0; c < cols.size(); ++c) {
        std::vector<std::string> row{cols[c].name};
        for (const auto& [label, fit] : fits) {
            (void)label;
            const CoefEntry& e = fit.entries[c];
            if (e.omitted) {
                row.push_back("0 (omitted)");
                row.push_back("");
            } else {
                row.push_back(fmt6(e.coef) + star_suffix(e.p_value));
                row.push_back(fmt6(e.std_error));
            }
        }
        cells.push_back(std::move(row));
    }

    std::vector<std::string> adj{"Adj. R2"};
    for (const auto& [label, fit] : fits) {
        (void)label;
        adj.push_back(fmt4g(fit.adj_r2));
        adj.push_back("");
    }
    cells.push_back(std::move(adj));

    std::vector<std::size_t> widths(cells.front().size(), 0);
    for (const auto& row : cells)
        for (std::size_t i = 0; i < row.size(); ++i) widths[i] = std::max(widths[i], row[i].size());

    std::ostringstream out;
    for (const auto& row : cells) {
        for (std::size_t i = 0; i < row.size(); ++i) {
            out << row[i];
            if (i + 1 < row.size())
                out << std::string(widths[i] - row[i].size() + 2, ' ');
        }
        out << '\n';
    }
    return out.str();
}

std::string render_table_tsv(const std::vector<std::pair<std::string, OlsFit>>& fits) {
    check_same_columns(fits);
    std::ostringstream out;
    out << "strand\tterm\tcoef\tstd_err\tt\tp\tstars\tomitted\n";
    for (const auto& [label, fit] : fits) {
        for (const auto& e : fit.entries) {
            out << label << '\t' << e.name << '\t';
            if (e.omitted) {
                out << "0\t\t\t\t\t1\n";
            } else {
                out << fmt6(e.coef) << '\t' << fmt6(e.std_error) << '\t' << fmt6(e.t_stat) << '\t'
                    << fmt6(e.p_value) << '\t' << star_suffix(e.p_value) << "\t0\n";
            }
        }
        out << label << "\tadj_r2\t" << fmt6(fit.adj_r2) << "\t\t\t\t\t0\n";
        out << label << "\tr2\t" << fmt6(fit.r2) << "\t\t\t\t\t0\n";
        out << label << "\tn\t" << fit.n_obs << "\t\t\t\t\t0\n";
    }
    return out.str();
}

} // namespace ct
