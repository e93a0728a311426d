#include "wsinterp/interpolator.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

#include "wsinterp/errors.hpp"
#include "wsinterp/sinc.hpp"

namespace wsinterp {

SampleSet::SampleSet(double spacing, int half_count, std::vector<Complex> values)
    : spacing_(spacing), half_count_(half_count), values_(std::move(values))
{
    if (!(spacing_ > 0.0) || !std::isfinite(spacing_))
        throw std::invalid_argument("SampleSet: spacing must be positive and finite");
    if (half_count_ < 0) throw std::invalid_argument("SampleSet: half_count must be nonnegative");
    if (values_.size() != static_cast<std::size_t>(2 * half_count_ + 1))
        throw std::invalid_argument("SampleSet: expected 2N+1 values");
    for (const auto& v : values_) {
        if (!std::isfinite(v.real()) || !std::isfinite(v.imag()))
            throw std::invalid_argument("SampleSet: non-finite sample");
    }
}

SampleSet SampleSet::real(double spacing, int half_count, std::span<const double> values)
{
    return SampleSet(spacing, half_count, std::vector<Complex>(values.begin(), values.end()));
}

Complex SampleSet::at(int n) const
{
    if (n < -half_count_ || n > half_count_) throw std::out_of_range("SampleSet::at: index");
    return values_[static_cast<std::size_t>(n + half_count_)];
}

double SampleSet::max_abs() const noexcept
{
    double m = 0.0;
    for (const auto& v : values_) m = std::max(m, std::abs(v));
    return m;
}

GramMatrix GramMatrix::build(KernelFunction kernel, double spacing, int half_count,
                             double ridge_sigma2)
{
    if (!kernel) throw std::invalid_argument("GramMatrix: empty kernel");
    if (!(spacing > 0.0)) throw std::invalid_argument("GramMatrix: spacing must be positive");
    if (half_count < 0) throw std::invalid_argument("GramMatrix: half_count must be nonnegative");
    if (!(ridge_sigma2 >= 0.0)) throw std::invalid_argument("GramMatrix: ridge must be nonnegative");

    GramMatrix g;
    g.kernel_ = std::move(kernel);
    g.spacing_ = spacing;
    g.half_count_ = half_count;
    g.ridge_ = ridge_sigma2;

    const int size = 2 * half_count + 1;
    g.first_row_.resize(size);
    for (int k = 0; k < size; ++k) g.first_row_[k] = g.kernel_(k * spacing);

    g.dense_.resize(size, size);
    for (int i = 0; i < size; ++i)
        for (int j = 0; j < size; ++j) g.dense_(i, j) = g.first_row_[std::abs(i - j)];
    g.factor();
    return g;
}

void GramMatrix::factor()
{
    Eigen::MatrixXd a = dense_;
    a.diagonal().array() += ridge_;
    llt_.compute(a);
    if (llt_.info() != Eigen::Success) {
        condition_ = std::numeric_limits<double>::infinity();
        std::ostringstream msg;
        msg << "Gram matrix is not positive definite (T = " << spacing_ << ", N = " << half_count_
            << ", ridge = " << ridge_ << "); consider a positive ridge_sigma2 or T >= 1/(2B)";
        throw NotPositiveDefinite(msg.str(), condition_);
    }
    const auto diag = llt_.matrixLLT().diagonal();
    const double ratio = diag.maxCoeff() / diag.minCoeff();
    condition_ = ratio * ratio;
    if (!(condition_ <= kSingularConditionLimit)) {
        std::ostringstream msg;
        msg << "Gram matrix is numerically singular (condition estimate " << condition_
            << ", T = " << spacing_ << ", N = " << half_count_ << ", ridge = " << ridge_
            << "); consider a positive ridge_sigma2 or T >= 1/(2B)";
        throw NotPositiveDefinite(msg.str(), condition_);
    }
}

double GramMatrix::entry(int m, int n) const
{
    if (std::abs(m) > half_count_ || std::abs(n) > half_count_)
        throw std::out_of_range("GramMatrix::entry: index");
    return first_row_[static_cast<std::size_t>(std::abs(m - n))];
}

Eigen::MatrixXd GramMatrix::solve(const Eigen::MatrixXd& rhs) const { return llt_.solve(rhs); }

Eigen::VectorXcd GramMatrix::solve(const Eigen::VectorXcd& rhs) const
{
    Eigen::MatrixXd parts(rhs.size(), 2);
    parts.col(0) = rhs.real();
    parts.col(1) = rhs.imag();
    const Eigen::MatrixXd x = llt_.solve(parts);
    Eigen::VectorXcd out(rhs.size());
    out.real() = x.col(0);
    out.imag() = x.col(1);
    return out;
}

GramMatrix GramMatrix::with_ridge(double ridge_sigma2) const
{
    if (!(ridge_sigma2 >= 0.0)) throw std::invalid_argument("GramMatrix: ridge must be nonnegative");
    GramMatrix g = *this;
    g.ridge_ = ridge_sigma2;
    g.factor();
    return g;
}

GramMatrix build_gram(const Kernel& kernel, double spacing, int half_count, double ridge_sigma2)
{
    return GramMatrix::build(kernel, spacing, half_count, ridge_sigma2);
}

Interpolant::Interpolant(GramMatrix gram, std::vector<Complex> coeffs)
    : gram_(std::move(gram)), coeffs_(std::move(coeffs))
{
    if (coeffs_.size() != gram_.size()) throw std::invalid_argument("Interpolant: size mismatch");
}

Complex Interpolant::coeff(int n) const
{
    if (std::abs(n) > half_count()) throw std::out_of_range("Interpolant::coeff: index");
    return coeffs_[static_cast<std::size_t>(n + half_count())];
}

Complex Interpolant::operator()(double t) const
{
    const int N = half_count();
    const double T = spacing();
    const auto& k = gram_.kernel();
    Complex sum = 0.0;
    for (int n = -N; n <= N; ++n) sum += coeffs_[n + N] * k(t - n * T);
    return sum;
}

double Interpolant::norm_squared() const
{
    const auto& r = gram_.dense();
    const auto size = static_cast<Eigen::Index>(coeffs_.size());
    Eigen::Map<const Eigen::VectorXcd> c(coeffs_.data(), size);
    return (c.adjoint() * (r * c)).real()(0, 0);
}

Interpolant solve(const GramMatrix& gram, const SampleSet& samples, double ridge_sigma2)
{
    if (samples.half_count() != gram.half_count() || samples.spacing() != gram.spacing())
        throw std::invalid_argument("solve: samples and Gram matrix disagree on T or N");
    if (!(ridge_sigma2 >= 0.0)) throw std::invalid_argument("solve: ridge must be nonnegative");

    const GramMatrix g = ridge_sigma2 == gram.ridge() ? gram : gram.with_ridge(ridge_sigma2);
    const auto vals = samples.values();
    Eigen::VectorXcd x(static_cast<Eigen::Index>(vals.size()));
    for (std::size_t i = 0; i < vals.size(); ++i) x[static_cast<Eigen::Index>(i)] = vals[i];
    const Eigen::VectorXcd c = g.solve(x);
    return Interpolant(g, std::vector<Complex>(c.data(), c.data() + c.size()));
}

Complex evaluate(const Interpolant& interp, double t) { return interp(t); }

CardinalBasis::CardinalBasis(const GramMatrix& gram)
    : gram_(gram.ridge() == 0.0 ? gram : gram.with_ridge(0.0))
{
    const auto n = static_cast<Eigen::Index>(gram_.size());
    inverse_ = gram_.solve(Eigen::MatrixXd(Eigen::MatrixXd::Identity(n, n)));
    // P is symmetric in exact arithmetic.
    inverse_ = 0.5 * (inverse_ + inverse_.transpose()).eval();
}

double CardinalBasis::p(int n, int m) const
{
    const int N = half_count();
    if (std::abs(n) > N || std::abs(m) > N) throw std::out_of_range("CardinalBasis::p: index");
    return inverse_(n + N, m + N);
}

Eigen::VectorXd CardinalBasis::kernel_vector(double t) const
{
    const int N = half_count();
    const double T = gram_.spacing();
    Eigen::VectorXd k(2 * N + 1);
    for (int m = -N; m <= N; ++m) k[m + N] = gram_.kernel()(t - m * T);
    return k;
}

Eigen::VectorXd CardinalBasis::values(double t) const { return inverse_ * kernel_vector(t); }

double CardinalBasis::value(int n, double t) const
{
    const int N = half_count();
    if (std::abs(n) > N) throw std::out_of_range("CardinalBasis::value: index");
    return inverse_.row(n + N).dot(kernel_vector(t));
}

double cardinal(const GramMatrix& gram, int n, double t)
{
    const int N = gram.half_count();
    if (std::abs(n) > N) throw std::out_of_range("cardinal: index");
    Eigen::VectorXd e = Eigen::VectorXd::Zero(2 * N + 1);
    e[n + N] = 1.0;
    const GramMatrix g = gram.ridge() == 0.0 ? gram : gram.with_ridge(0.0);
    const Eigen::VectorXd p = g.solve(Eigen::MatrixXd(e));
    double u = 0.0;
    for (int m = -N; m <= N; ++m) u += p[m + N] * g.kernel()(t - m * g.spacing());
    return u;
}

Complex shift_invariant_approx(const CardinalBasis& basis, const SampleSet& samples, double t)
{
    const int N = basis.half_count();
    const double T = basis.gram().spacing();
    if (samples.half_count() != N || samples.spacing() != T)
        throw std::invalid_argument("shift_invariant_approx: samples and basis disagree on T or N");
    Complex sum = 0.0;
    for (int n = -N; n <= N; ++n) sum += samples.at(n) * basis.value(0, t - n * T);
    return sum;
}

Complex truncated_shannon(const SampleSet& samples, double t)
{
    const int N = samples.half_count();
    const double u = t / samples.spacing();
    Complex sum = 0.0;
    for (int n = -N; n <= N; ++n) sum += samples.at(n) * sinc(u - n);
    return sum;
}

std::vector<double> toeplitz_solve(std::span<const double> first_row, std::span<const double> rhs)
{
    const std::size_t n = first_row.size();
    if (n == 0 || rhs.size() != n) throw std::invalid_argument("toeplitz_solve: size mismatch");
    const double r0 = first_row[0];
    if (!(r0 > 0.0)) throw NotPositiveDefinite("toeplitz_solve: nonpositive diagonal", 0.0);

    // Normalized off-diagonals r[i] = first_row[i+1] / r0.
    std::vector<double> r(n - 1), b(n);
    for (std::size_t i = 0; i + 1 < n; ++i) r[i] = first_row[i + 1] / r0;
    for (std::size_t i = 0; i < n; ++i) b[i] = rhs[i] / r0;

    std::vector<double> x{b[0]};
    if (n == 1) return x;
    std::vector<double> y{-r[0]};
    double alpha = -r[0];
    double beta = 1.0;
    for (std::size_t k = 1; k < n; ++k) {
        beta *= (1.0 - alpha * alpha);
        if (!(beta > 0.0)) throw NotPositiveDefinite("toeplitz_solve: matrix is not positive definite", 0.0);
        double dot = 0.0;
        for (std::size_t i = 0; i < k; ++i) dot += r[i] * x[k - 1 - i];
        const double mu = (b[k] - dot) / beta;
        for (std::size_t i = 0; i < k; ++i) x[i] += mu * y[k - 1 - i];
        x.push_back(mu);
        if (k + 1 < n) {
            double dy = 0.0;
            for (std::size_t i = 0; i < k; ++i) dy += r[i] * y[k - 1 - i];
            alpha = (-r[k] - dy) / beta;
            std::vector<double> z(k);
            for (std::size_t i = 0; i < k; ++i) z[i] = y[i] + alpha * y[k - 1 - i];
            z.push_back(alpha);
            y = std::move(z);
        }
    }
    return x;
}

}  // namespace wsinterp
