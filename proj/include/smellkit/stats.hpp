#pragma once

#include <string>
#include <vector>

namespace smellkit {

enum class TestMethod { wilcoxon_signed_rank, mann_whitney_u };

struct TestResult {
    TestMethod method;
    double statistic = 0.0;   // T for Wilcoxon, U for Mann-Whitney
    double z = 0.0;           // normal-approximation statistic (also set on exact paths)
    double p_value = 1.0;
    double effect_size = 0.0; // Spearman rho of the pairs / Cliff's delta
    bool exact = false;       // p computed by exact enumeration
    int n = 0;                // nonzero pairs (Wilcoxon)
    int n1 = 0, n2 = 0;       // group sizes (Mann-Whitney)
};

/// Paired two-sided test on (before, after) pairs. Zero differences are
/// dropped; |differences| get midranks; T = min(positive-rank sum,
/// negative-rank sum). Exact p by rank-sum enumeration for n <= 25 with no
/// ties, else normal approximation with tie-corrected variance and 0.5
/// continuity correction.
TestResult wilcoxon_signed_rank(const std::vector<std::pair<double, double>>& pairs);

/// Independent two-sided test. U counts pairs with a > b plus half the ties.
/// Exact p via the rank-sum distribution when n1*n2 <= 400 and there are no
/// ties, else tie-corrected normal approximation.
TestResult mann_whitney_u(const std::vector<double>& a, const std::vector<double>& b);

/// (#{a>b} - #{a<b}) / (n1*n2); ties contribute to neither count.
double cliffs_delta(const std::vector<double>& a, const std::vector<double>& b);

/// Pearson correlation of midrank-transformed vectors.
double spearman_rho(const std::vector<double>& x, const std::vector<double>& y);

double pearson_r(const std::vector<double>& x, const std::vector<double>& y);

/// Midranks (average ranks for ties), 1-based.
std::vector<double> midranks(const std::vector<double>& values);

/// Standard normal upper-tail probability.
double normal_sf(double z);

/// Chi-squared upper-tail probability, df >= 1. Series / continued-fraction
/// evaluation of the regularized incomplete gamma; df = 2 uses the exp(-x/2)
/// closed form.
double chi2_sf(double x, int df);

}  // namespace smellkit
