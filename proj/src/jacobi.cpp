#include "vxe/errors.hpp"
#include "vxe/spectral.hpp"

#include <cmath>

namespace vxe {

namespace {

double off_diagonal_norm(const Matrix& a)
{
    double sum = 0.0;
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j)
            if (i != j)
                sum += a(i, j) * a(i, j);
    return std::sqrt(sum);
}

// Zeroes a(p, q) with a rotation J and accumulates v <- v J.
void rotate(Matrix& a, Matrix& v, std::size_t p, std::size_t q)
{
    double apq = a(p, q);
    double tau = (a(q, q) - a(p, p)) / (2.0 * apq);
    double t = (tau >= 0.0 ? 1.0 : -1.0) / (std::abs(tau) + std::sqrt(1.0 + tau * tau));
    double c = 1.0 / std::sqrt(1.0 + t * t);
    double s = t * c;

    std::size_t n = a.rows();
    for (std::size_t k = 0; k < n; ++k) {
        double akp = a(k, p);
        double akq = a(k, q);
        a(k, p) = c * akp - s * akq;
        a(k, q) = s * akp + c * akq;
    }
    for (std::size_t k = 0; k < n; ++k) {
        double apk = a(p, k);
        double aqk = a(q, k);
        a(p, k) = c * apk - s * aqk;
        a(q, k) = s * apk + c * aqk;
    }
    a(p, q) = a(q, p) = 0.0;

    for (std::size_t k = 0; k < n; ++k) {
        double vkp = v(k, p);
        double vkq = v(k, q);
        v(k, p) = c * vkp - s * vkq;
        v(k, q) = s * vkp + c * vkq;
    }
}

} // namespace

JacobiResult jacobi_eigen(const Matrix& input, double rel_tol, int max_sweeps)
{
    if (input.rows() != input.cols())
        throw BadParameters("jacobi_eigen needs a square matrix");

    Matrix a = input;
    std::size_t n = a.rows();
    JacobiResult result;
    result.vectors = Matrix::identity(n);

    double threshold = rel_tol * frobenius_norm(a);
    while (off_diagonal_norm(a) > threshold) {
        if (result.sweeps == max_sweeps)
            throw ConvergenceFailure("Jacobi eigensolver did not converge in " +
                                     std::to_string(max_sweeps) + " sweeps");
        for (std::size_t p = 0; p + 1 < n; ++p)
            for (std::size_t q = p + 1; q < n; ++q)
                if (a(p, q) != 0.0)
                    rotate(a, result.vectors, p, q);
        ++result.sweeps;
    }

    result.values.resize(n);
    for (std::size_t i = 0; i < n; ++i)
        result.values[i] = a(i, i);
    return result;
}

} // namespace vxe
