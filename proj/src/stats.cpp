#include "smellkit/stats.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <numeric>

#include "smellkit/errors.hpp"

namespace smellkit {

namespace {

double clamp_p(double p) { return std::min(1.0, std::max(0.0, p)); }

// Sum of (t^3 - t) over tie groups of a sorted-by-value rank assignment.
double tie_term(const std::vector<double>& sorted_values) {
    double total = 0.0;
    std::size_t i = 0;
    while (i < sorted_values.size()) {
        std::size_t j = i;
        while (j + 1 < sorted_values.size() && sorted_values[j + 1] == sorted_values[i]) ++j;
        const double t = static_cast<double>(j - i + 1);
        total += t * t * t - t;
        i = j + 1;
    }
    return total;
}

}  // namespace

std::vector<double> midranks(const std::vector<double>& values) {
    const std::size_t n = values.size();
    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t a, std::size_t b) { return values[a] < values[b]; });
    std::vector<double> ranks(n);
    std::size_t i = 0;
    while (i < n) {
        std::size_t j = i;
        while (j + 1 < n && values[order[j + 1]] == values[order[i]]) ++j;
        const double avg = (static_cast<double>(i + 1) + static_cast<double>(j + 1)) / 2.0;
        for (std::size_t k = i; k <= j; ++k) ranks[order[k]] = avg;
        i = j + 1;
    }
    return ranks;
}

TestResult wilcoxon_signed_rank(const std::vector<std::pair<double, double>>& pairs) {
    std::vector<double> diffs;
    for (const auto& [before, after] : pairs) {
        const double d = after - before;
        if (d != 0.0) diffs.push_back(d);
    }
    if (diffs.empty()) throw InputError("wilcoxon_signed_rank: degenerate sample (all differences zero)");

    const int n = static_cast<int>(diffs.size());
    std::vector<double> abs_d(diffs.size());
    for (std::size_t i = 0; i < diffs.size(); ++i) abs_d[i] = std::fabs(diffs[i]);
    const std::vector<double> ranks = midranks(abs_d);

    double w_plus = 0.0, w_minus = 0.0;
    for (std::size_t i = 0; i < diffs.size(); ++i) {
        if (diffs[i] > 0) w_plus += ranks[i];
        else w_minus += ranks[i];
    }
    const double t_stat = std::min(w_plus, w_minus);

    TestResult out;
    out.method = TestMethod::wilcoxon_signed_rank;
    out.statistic = t_stat;
    out.n = n;

    std::vector<double> sorted_abs = abs_d;
    std::sort(sorted_abs.begin(), sorted_abs.end());
    const double ties = tie_term(sorted_abs);

    const double mean = static_cast<double>(n) * (n + 1) / 4.0;
    const double var = static_cast<double>(n) * (n + 1) * (2 * n + 1) / 24.0 - ties / 48.0;
    if (var > 0.0) out.z = (t_stat - mean + 0.5) / std::sqrt(var);

    if (n <= 25 && ties == 0.0) {
        // Exact null distribution of the signed-rank sum over ranks 1..n:
        // count subsets by rank-sum with a DP, then take the lower tail at T.
        const int max_sum = n * (n + 1) / 2;
        std::vector<double> ways(static_cast<std::size_t>(max_sum) + 1, 0.0);
        ways[0] = 1.0;
        for (int r = 1; r <= n; ++r)
            for (int s = max_sum; s >= r; --s) ways[static_cast<std::size_t>(s)] += ways[static_cast<std::size_t>(s - r)];
        double tail = 0.0;
        for (int s = 0; s <= max_sum; ++s)
            if (static_cast<double>(s) <= t_stat) tail += ways[static_cast<std::size_t>(s)];
        const double total = std::ldexp(1.0, n);  // 2^n
        out.p_value = clamp_p(2.0 * tail / total);
        out.exact = true;
    } else {
        out.p_value = clamp_p(2.0 * normal_sf(-out.z));
    }

    // Effect size reported alongside the paired test: Spearman correlation of
    // the (before, after) pairs, when it is defined.
    std::vector<double> before(pairs.size()), after(pairs.size());
    for (std::size_t i = 0; i < pairs.size(); ++i) {
        before[i] = pairs[i].first;
        after[i] = pairs[i].second;
    }
    try {
        out.effect_size = spearman_rho(before, after);
    } catch (const InputError&) {
        out.effect_size = std::numeric_limits<double>::quiet_NaN();
    }
    return out;
}

TestResult mann_whitney_u(const std::vector<double>& a, const std::vector<double>& b) {
    if (a.empty() || b.empty()) throw InputError("mann_whitney_u: both samples must be nonempty");
    const int n1 = static_cast<int>(a.size());
    const int n2 = static_cast<int>(b.size());

    std::vector<double> pooled = a;
    pooled.insert(pooled.end(), b.begin(), b.end());
    const std::vector<double> ranks = midranks(pooled);
    double rank_sum_a = 0.0;
    for (int i = 0; i < n1; ++i) rank_sum_a += ranks[static_cast<std::size_t>(i)];
    const double u_stat = rank_sum_a - static_cast<double>(n1) * (n1 + 1) / 2.0;

    TestResult out;
    out.method = TestMethod::mann_whitney_u;
    out.statistic = u_stat;
    out.n1 = n1;
    out.n2 = n2;

    const double n1n2 = static_cast<double>(n1) * n2;
    const double big_n = static_cast<double>(n1 + n2);
    std::vector<double> sorted = pooled;
    std::sort(sorted.begin(), sorted.end());
    const double ties = tie_term(sorted);

    const double mean = n1n2 / 2.0;
    const double var = n1n2 / 12.0 * ((big_n + 1.0) - ties / (big_n * (big_n - 1.0)));
    if (var > 0.0) {
        const double cc = (u_stat > mean) ? -0.5 : (u_stat < mean ? 0.5 : 0.0);
        out.z = (u_stat - mean + cc) / std::sqrt(var);
    }

    if (n1 * n2 <= 400 && ties == 0.0) {
        // Exact distribution of the rank sum of sample a: subsets of size n1
        // from ranks 1..N, counted by sum.
        const int big = n1 + n2;
        const int max_sum = big * (big + 1) / 2;
        std::vector<std::vector<double>> ways(
            static_cast<std::size_t>(n1) + 1,
            std::vector<double>(static_cast<std::size_t>(max_sum) + 1, 0.0));
        ways[0][0] = 1.0;
        for (int r = 1; r <= big; ++r)
            for (int k = std::min(r, n1); k >= 1; --k)
                for (int s = max_sum; s >= r; --s)
                    ways[static_cast<std::size_t>(k)][static_cast<std::size_t>(s)] +=
                        ways[static_cast<std::size_t>(k - 1)][static_cast<std::size_t>(s - r)];
        double total = 0.0, tail = 0.0;
        const double u_low = std::min(u_stat, n1n2 - u_stat);
        for (int s = 0; s <= max_sum; ++s) {
            const double w = ways[static_cast<std::size_t>(n1)][static_cast<std::size_t>(s)];
            if (w == 0.0) continue;
            total += w;
            const double u_of_s = static_cast<double>(s) - static_cast<double>(n1) * (n1 + 1) / 2.0;
            if (std::min(u_of_s, n1n2 - u_of_s) <= u_low) tail += w;
        }
        out.p_value = clamp_p(tail / total);
        out.exact = true;
    } else {
        out.p_value = clamp_p(2.0 * normal_sf(std::fabs(out.z)));
    }

    out.effect_size = cliffs_delta(a, b);
    return out;
}

double cliffs_delta(const std::vector<double>& a, const std::vector<double>& b) {
    if (a.empty() || b.empty()) throw InputError("cliffs_delta: both samples must be nonempty");
    std::int64_t greater = 0, less = 0;
    for (double x : a)
        for (double y : b) {
            if (x > y) ++greater;
            else if (x < y) ++less;
        }
    return static_cast<double>(greater - less) /
           (static_cast<double>(a.size()) * static_cast<double>(b.size()));
}

double pearson_r(const std::vector<double>& x, const std::vector<double>& y) {
    if (x.size() != y.size()) throw InputError("pearson_r: length mismatch");
    if (x.size() < 2) throw InputError("pearson_r: need >= 2 samples");
    const double n = static_cast<double>(x.size());
    double mx = 0.0, my = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        mx += x[i];
        my += y[i];
    }
    mx /= n;
    my /= n;
    double sxy = 0.0, sxx = 0.0, syy = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        sxy += (x[i] - mx) * (y[i] - my);
        sxx += (x[i] - mx) * (x[i] - mx);
        syy += (y[i] - my) * (y[i] - my);
    }
    if (sxx == 0.0 || syy == 0.0) throw InputError("pearson_r: constant input");
    return sxy / std::sqrt(sxx * syy);
}

double spearman_rho(const std::vector<double>& x, const std::vector<double>& y) {
    if (x.size() != y.size()) throw InputError("spearman_rho: length mismatch");
    return pearson_r(midranks(x), midranks(y));
}

double normal_sf(double z) { return 0.5 * std::erfc(z / std::sqrt(2.0)); }

namespace {

// Regularized incomplete gamma Q(a, x) by lower series / upper continued
// fraction, split at x = a + 1.
double gamma_q(double a, double x) {
    if (x <= 0.0) return 1.0;
    const double lg = std::lgamma(a);
    if (x < a + 1.0) {
        // P(a,x) series, then Q = 1 - P.
        double term = 1.0 / a;
        double sum = term;
        double ap = a;
        for (int i = 0; i < 10000; ++i) {
            ap += 1.0;
            term *= x / ap;
            sum += term;
            if (std::fabs(term) < std::fabs(sum) * 1e-16) break;
        }
        const double p = sum * std::exp(-x + a * std::log(x) - lg);
        return 1.0 - p;
    }
    // Lentz's continued fraction for Q(a,x).
    const double tiny = 1e-300;
    double b = x + 1.0 - a;
    double c = 1.0 / tiny;
    double d = 1.0 / b;
    double h = d;
    for (int i = 1; i <= 10000; ++i) {
        const double an = -static_cast<double>(i) * (static_cast<double>(i) - a);
        b += 2.0;
        d = an * d + b;
        if (std::fabs(d) < tiny) d = tiny;
        c = b + an / c;
        if (std::fabs(c) < tiny) c = tiny;
        d = 1.0 / d;
        const double delta = d * c;
        h *= delta;
        if (std::fabs(delta - 1.0) < 1e-16) break;
    }
    return std::exp(-x + a * std::log(x) - lg) * h;
}

}  // namespace

double chi2_sf(double x, int df) {
    if (df < 1) throw InputError("chi2_sf: df must be >= 1");
    if (x < 0.0) throw InputError("chi2_sf: x must be >= 0");
    if (df == 2) return std::exp(-0.5 * x);
    return gamma_q(static_cast<double>(df) / 2.0, x / 2.0);
}

}  // namespace smellkit
