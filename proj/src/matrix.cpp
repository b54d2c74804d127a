#include "vxe/matrix.hpp"

#include "vxe/errors.hpp"

#include <algorithm>
#include <cmath>

namespace vxe {

Matrix Matrix::identity(std::size_t n)
{
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i)
        m(i, i) = 1.0;
    return m;
}

Matrix Matrix::transpose() const
{
    Matrix t(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < cols_; ++c)
            t(c, r) = (*this)(r, c);
    return t;
}

Matrix operator*(const Matrix& a, const Matrix& b)
{
    if (a.cols() != b.rows())
        throw BadParameters("matrix dimensions do not agree");
    Matrix out(a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t k = 0; k < a.cols(); ++k) {
            double aik = a(i, k);
            if (aik == 0.0)
                continue;
            for (std::size_t j = 0; j < b.cols(); ++j)
                out(i, j) += aik * b(k, j);
        }
    return out;
}

double frobenius_norm(const Matrix& m)
{
    double sum = 0.0;
    for (std::size_t i = 0; i < m.rows() * m.cols(); ++i)
        sum += m.data()[i] * m.data()[i];
    return std::sqrt(sum);
}

double max_abs_difference(const Matrix& a, const Matrix& b)
{
    if (a.rows() != b.rows() || a.cols() != b.cols())
        throw BadParameters("matrix dimensions do not agree");
    double worst = 0.0;
    for (std::size_t i = 0; i < a.rows() * a.cols(); ++i)
        worst = std::max(worst, std::abs(a.data()[i] - b.data()[i]));
    return worst;
}

} // namespace vxe
