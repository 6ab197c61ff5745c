#pragma once
// Letter chain q_ab = P_ab / P_a and the convergence of its powers to the
// letter frequencies.

#include <array>

#include "banbury/corpus.hpp"

namespace banbury::markov {

using Vector = std::array<double, kAlphabetSize>;
using Matrix = std::array<Vector, kAlphabetSize>;

Matrix identity();
Matrix multiply(const Matrix& a, const Matrix& b);
Matrix power(const Matrix& m, int n);
Vector left_multiply(const Vector& v, const Matrix& m);
double max_abs_difference(const Matrix& a, const Matrix& b);

class TransitionMatrix {
public:
    // Rows of letters that never start a bigram are filled with the letter
    // frequencies, which keeps the matrix stochastic and leaves the
    // stationary vector unchanged.
    static TransitionMatrix from_bigrams(const BigramStats& stats);
    // Rows must each sum to 1 within 1e-9 and be non-negative.
    static TransitionMatrix from_rows(const Matrix& q);

    const Matrix& q() const { return q_; }
    double operator()(int a, int b) const { return q_[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)]; }

private:
    TransitionMatrix() = default;
    Matrix q_{};
};

// Left fixed point of the lazy chain (I + Q)/2, which shares Q's stationary
// vectors but is aperiodic, so power iteration settles even for periodic Q.
Vector stationary_distribution(const TransitionMatrix& q, double tol = 1e-14, int max_iter = 1'000'000);

struct StationarityReport {
    bool converged = false;
    // Smallest n with max |(Q^n)_ab - P_b| < tol, when converged.
    int steps = 0;
    // Deviation at `steps` (or at max_n when not converged).
    double max_deviation = 0.0;
    Vector stationary{};
    // Residuals of the limit Y (rows equal to P): max|YQ - Y|, max|Y^2 - Y|.
    double yq_residual = 0.0;
    double idempotence_residual = 0.0;
};

// Non-convergence (periodic or reducible chains) is reported, not thrown.
StationarityReport stationarity_check(const TransitionMatrix& q, double tol, int max_n);

}  // namespace banbury::markov
