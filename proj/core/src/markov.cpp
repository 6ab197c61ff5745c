#include "banbury/markov.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace banbury::markov {

Matrix identity() {
    Matrix m{};
    for (std::size_t i = 0; i < kAlphabetSize; ++i) m[i][i] = 1.0;
    return m;
}

Matrix multiply(const Matrix& a, const Matrix& b) {
    Matrix c{};
    for (std::size_t i = 0; i < kAlphabetSize; ++i) {
        for (std::size_t k = 0; k < kAlphabetSize; ++k) {
            const double aik = a[i][k];
            if (aik == 0.0) continue;
            for (std::size_t j = 0; j < kAlphabetSize; ++j) c[i][j] += aik * b[k][j];
        }
    }
    return c;
}

Matrix power(const Matrix& m, int n) {
    if (n < 0) throw DomainError("matrix power must be non-negative");
    Matrix result = identity();
    Matrix base = m;
    while (n > 0) {
        if (n & 1) result = multiply(result, base);
        n >>= 1;
        if (n > 0) base = multiply(base, base);
    }
    return result;
}

Vector left_multiply(const Vector& v, const Matrix& m) {
    Vector out{};
    for (std::size_t i = 0; i < kAlphabetSize; ++i) {
        if (v[i] == 0.0) continue;
        for (std::size_t j = 0; j < kAlphabetSize; ++j) out[j] += v[i] * m[i][j];
    }
    return out;
}

double max_abs_difference(const Matrix& a, const Matrix& b) {
    double d = 0.0;
    for (std::size_t i = 0; i < kAlphabetSize; ++i) {
        for (std::size_t j = 0; j < kAlphabetSize; ++j) d = std::max(d, std::abs(a[i][j] - b[i][j]));
    }
    return d;
}

TransitionMatrix TransitionMatrix::from_bigrams(const BigramStats& stats) {
    Matrix q{};
    Vector letters{};
    double total = 0.0;
    for (int a = 0; a < kAlphabetSize; ++a) {
        letters[static_cast<std::size_t>(a)] = stats.marginal(a);
        total += stats.marginal(a);
    }
    for (int a = 0; a < kAlphabetSize; ++a) {
        auto& row = q[static_cast<std::size_t>(a)];
        if (stats.marginal(a) > 0.0) {
            for (int b = 0; b < kAlphabetSize; ++b) row[static_cast<std::size_t>(b)] = stats.transition(a, b);
        } else {
            for (std::size_t b = 0; b < kAlphabetSize; ++b) row[b] = letters[b] / total;
        }
    }
    return from_rows(q);
}

TransitionMatrix TransitionMatrix::from_rows(const Matrix& q) {
    for (std::size_t a = 0; a < kAlphabetSize; ++a) {
        double s = 0.0;
        for (double v : q[a]) {
            if (v < 0.0 || !std::isfinite(v)) throw DomainError("transition probabilities must be finite and non-negative");
            s += v;
        }
        if (std::abs(s - 1.0) > 1e-9) {
            throw DomainError("transition row " + std::string(1, letter_at(static_cast<int>(a))) +
                              " sums to " + std::to_string(s) + ", not 1");
        }
    }
    TransitionMatrix t;
    t.q_ = q;
    return t;
}

Vector stationary_distribution(const TransitionMatrix& q, double tol, int max_iter) {
    Vector v;
    v.fill(1.0 / kAlphabetSize);
    for (int it = 0; it < max_iter; ++it) {
        Vector moved = left_multiply(v, q.q());
        Vector next{};
        double diff = 0.0;
        for (std::size_t i = 0; i < kAlphabetSize; ++i) {
            next[i] = 0.5 * (v[i] + moved[i]);
            diff = std::max(diff, std::abs(next[i] - v[i]));
        }
        v = next;
        if (diff < tol) break;
    }
    double s = 0.0;
    for (double x : v) s += x;
    for (double& x : v) x /= s;
    return v;
}

StationarityReport stationarity_check(const TransitionMatrix& q, double tol, int max_n) {
    if (max_n < 1) throw DomainError("max_n must be at least 1");
    StationarityReport report;
    report.stationary = stationary_distribution(q);

    Matrix limit{};
    for (auto& row : limit) row = report.stationary;

    Matrix qn = q.q();
    for (int n = 1; n <= max_n; ++n) {
        if (n > 1) qn = multiply(qn, q.q());
        report.max_deviation = max_abs_difference(qn, limit);
        report.steps = n;
        if (report.max_deviation < tol) {
            report.converged = true;
            break;
        }
    }
    report.yq_residual = max_abs_difference(multiply(limit, q.q()), limit);
    report.idempotence_residual = max_abs_difference(multiply(limit, limit), limit);
    return report;
}

}  // namespace banbury::markov
