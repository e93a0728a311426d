#pragma once

#include <complex>
#include <span>
#include <vector>

#include <Eigen/Dense>

#include "wsinterp/kernel.hpp"

namespace wsinterp {

using Complex = std::complex<double>;

/// Uniform samples x[n] = x(nT) for n = -N..N, stored at offsets 0..2N.
class SampleSet {
public:
    SampleSet(double spacing, int half_count, std::vector<Complex> values);
    static SampleSet real(double spacing, int half_count, std::span<const double> values);

    double spacing() const noexcept { return spacing_; }
    int half_count() const noexcept { return half_count_; }
    std::size_t size() const noexcept { return values_.size(); }
    std::span<const Complex> values() const noexcept { return values_; }
    /// x[n] for logical n in [-N, N].
    Complex at(int n) const;
    double node(int n) const noexcept { return n * spacing_; }
    double max_abs() const noexcept;

private:
    double spacing_;
    int half_count_;
    std::vector<Complex> values_;
};

/// Condition estimates above this are treated as numerically singular.
inline constexpr double kSingularConditionLimit = 1e15;

/// Symmetric Toeplitz Gram matrix [R]_{mn} = k((m - n) T), m, n = -N..N,
/// with a cached Cholesky factor of R + ridge * I.
class GramMatrix {
public:
    /// Throws NotPositiveDefinite when R + ridge * I cannot be factored or
    /// its condition estimate exceeds kSingularConditionLimit.
    static GramMatrix build(KernelFunction kernel, double spacing, int half_count,
                            double ridge_sigma2 = 0.0);

    const KernelFunction& kernel() const noexcept { return kernel_; }
    double spacing() const noexcept { return spacing_; }
    int half_count() const noexcept { return half_count_; }
    std::size_t size() const noexcept { return first_row_.size(); }
    double ridge() const noexcept { return ridge_; }

    /// k(kT) for k = 0..2N.
    std::span<const double> first_row() const noexcept { return first_row_; }
    /// Entry for logical indices m, n in [-N, N] (without the ridge).
    double entry(int m, int n) const;
    const Eigen::MatrixXd& dense() const noexcept { return dense_; }

    /// (max L_ii / min L_ii)^2 of the Cholesky factor; an estimate of the
    /// spectral condition number, not the exact value.
    double condition_estimate() const noexcept { return condition_; }

    /// Solves (R + ridge I) X = rhs with the cached factor.
    Eigen::MatrixXd solve(const Eigen::MatrixXd& rhs) const;
    Eigen::VectorXcd solve(const Eigen::VectorXcd& rhs) const;

    /// Same R factored with a different ridge.
    GramMatrix with_ridge(double ridge_sigma2) const;

private:
    GramMatrix() = default;
    void factor();

    KernelFunction kernel_;
    double spacing_ = 0.0;
    int half_count_ = 0;
    double ridge_ = 0.0;
    std::vector<double> first_row_;
    Eigen::MatrixXd dense_;
    Eigen::LLT<Eigen::MatrixXd> llt_;
    double condition_ = 0.0;
};

GramMatrix build_gram(const Kernel& kernel, double spacing, int half_count,
                      double ridge_sigma2 = 0.0);

/// x_hat(t) = sum_n c_n k(t - nT) with (R + sigma^2 I) c = x.
class Interpolant {
public:
    Interpolant(GramMatrix gram, std::vector<Complex> coeffs);

    const GramMatrix& gram() const noexcept { return gram_; }
    double spacing() const noexcept { return gram_.spacing(); }
    int half_count() const noexcept { return gram_.half_count(); }
    double ridge() const noexcept { return gram_.ridge(); }
    double condition_estimate() const noexcept { return gram_.condition_estimate(); }
    std::span<const Complex> coeffs() const noexcept { return coeffs_; }
    /// c_n for logical n.
    Complex coeff(int n) const;

    Complex operator()(double t) const;

    /// Squared weighted norm of the interpolant, c^H R c.
    double norm_squared() const;

private:
    GramMatrix gram_;
    std::vector<Complex> coeffs_;
};

/// Solves (R + sigma^2 I) c = x. The Gram factor is reused when its ridge
/// matches, otherwise R is refactored.
Interpolant solve(const GramMatrix& gram, const SampleSet& samples, double ridge_sigma2 = 0.0);

Complex evaluate(const Interpolant& interp, double t);

/// Cardinal functions u_n(t) = sum_m p_nm k(t - mT), P = R^{-1}.
class CardinalBasis {
public:
    /// Uses R without ridge.
    explicit CardinalBasis(const GramMatrix& gram);

    const GramMatrix& gram() const noexcept { return gram_; }
    int half_count() const noexcept { return gram_.half_count(); }
    const Eigen::MatrixXd& inverse() const noexcept { return inverse_; }
    /// p_nm for logical n, m.
    double p(int n, int m) const;

    /// k(t - nT) for n = -N..N.
    Eigen::VectorXd kernel_vector(double t) const;
    /// u_n(t) for n = -N..N.
    Eigen::VectorXd values(double t) const;
    double value(int n, double t) const;

private:
    GramMatrix gram_;
    Eigen::MatrixXd inverse_;
};

double cardinal(const GramMatrix& gram, int n, double t);

/// x_hat(t) ~ sum_n x[n] u_0(t - nT), using only the centre cardinal.
Complex shift_invariant_approx(const CardinalBasis& basis, const SampleSet& samples, double t);

/// sum_{n=-N}^{N} x[n] sinc(t/T - n).
Complex truncated_shannon(const SampleSet& samples, double t);

/// Levinson recursion for a symmetric positive-definite Toeplitz system with
/// the given first row. O(n^2); no pivoting.
std::vector<double> toeplitz_solve(std::span<const double> first_row, std::span<const double> rhs);

}  // namespace wsinterp
