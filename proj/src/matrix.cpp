#include "stirdet/matrix.hpp"

#include <string>
#include <utility>

namespace stirdet {

IntMatrix::IntMatrix(std::initializer_list<std::initializer_list<long>> rows)
    : IntMatrix(rows.size())
{
    std::size_t i = 0;
    for (const auto& row : rows) {
        if (row.size() != n_) {
            throw std::invalid_argument("IntMatrix: rows must have length " + std::to_string(n_));
        }
        std::size_t j = 0;
        for (long v : row) {
            (*this)(i, j++) = v;
        }
        ++i;
    }
}

IntMatrix IntMatrix::identity(std::size_t n)
{
    IntMatrix out(n);
    for (std::size_t i = 0; i < n; ++i) {
        out(i, i) = 1;
    }
    return out;
}

IntMatrix IntMatrix::transpose() const
{
    IntMatrix out(n_);
    for (std::size_t i = 0; i < n_; ++i) {
        for (std::size_t j = 0; j < n_; ++j) {
            out(j, i) = (*this)(i, j);
        }
    }
    return out;
}

IntMatrix IntMatrix::leading(std::size_t k) const
{
    if (k > n_) {
        throw std::out_of_range("IntMatrix::leading: k exceeds size");
    }
    IntMatrix out(k);
    for (std::size_t i = 0; i < k; ++i) {
        for (std::size_t j = 0; j < k; ++j) {
            out(i, j) = (*this)(i, j);
        }
    }
    return out;
}

void IntMatrix::swap_rows(std::size_t r1, std::size_t r2)
{
    if (r1 == r2) {
        return;
    }
    for (std::size_t j = 0; j < n_; ++j) {
        std::swap((*this)(r1, j), (*this)(r2, j));
    }
}

namespace {

// One Bareiss elimination step at pivot k: for i, j > k,
//   a_ij <- (a_kk a_ij - a_ik a_kj) / previous_pivot
void bareiss_step(IntMatrix& a, std::size_t k, const ExactInt& previous_pivot)
{
    const std::size_t n = a.size();
    ExactInt scratch;
    for (std::size_t i = k + 1; i < n; ++i) {
        for (std::size_t j = k + 1; j < n; ++j) {
            ExactInt& target = a(i, j);
            target *= a(k, k);
            scratch = a(i, k) * a(k, j);
            target -= scratch;
            exact_div_inplace(target, previous_pivot, "Bareiss elimination");
        }
        a(i, k) = 0;
    }
}

ExactInt det_bareiss(IntMatrix a)
{
    const std::size_t n = a.size();
    ExactInt previous_pivot = 1;
    int sign = 1;
    for (std::size_t k = 0; k < n; ++k) {
        if (sgn(a(k, k)) == 0) {
            std::size_t swap_with = k + 1;
            while (swap_with < n && sgn(a(swap_with, k)) == 0) {
                ++swap_with;
            }
            if (swap_with == n) {
                return 0;
            }
            a.swap_rows(k, swap_with);
            sign = -sign;
        }
        bareiss_step(a, k, previous_pivot);
        previous_pivot = a(k, k);
    }
    return n == 0 ? ExactInt(1) : ExactInt(sign * a(n - 1, n - 1));
}

ExactInt det_laplace(const IntMatrix& m)
{
    const std::size_t n = m.size();
    if (n == 0) {
        return 1;
    }
    if (n == 1) {
        return m(0, 0);
    }
    ExactInt total = 0;
    IntMatrix minor(n - 1);
    for (std::size_t col = 0; col < n; ++col) {
        if (sgn(m(0, col)) == 0) {
            continue;
        }
        for (std::size_t i = 1; i < n; ++i) {
            std::size_t dst = 0;
            for (std::size_t j = 0; j < n; ++j) {
                if (j != col) {
                    minor(i - 1, dst++) = m(i, j);
                }
            }
        }
        const ExactInt term = m(0, col) * det_laplace(minor);
        if (col % 2 == 0) {
            total += term;
        } else {
            total -= term;
        }
    }
    return total;
}

}  // namespace

ExactInt det(const IntMatrix& m, DetMethod method)
{
    switch (method) {
    case DetMethod::bareiss:
        return det_bareiss(m);
    case DetMethod::laplace:
        if (m.size() > kLaplaceMaxSize) {
            throw SizeGuardError("Laplace expansion limited to " + std::to_string(kLaplaceMaxSize) +
                                 "x" + std::to_string(kLaplaceMaxSize) + ", got " +
                                 std::to_string(m.size()));
        }
        return det_laplace(m);
    }
    throw std::invalid_argument("det: unknown method");
}

std::vector<ExactInt> leading_principal_minors(const IntMatrix& m)
{
    const std::size_t n = m.size();
    std::vector<ExactInt> minors;
    minors.reserve(n);
    IntMatrix a = m;
    ExactInt previous_pivot = 1;
    for (std::size_t k = 0; k < n; ++k) {
        // After k unpivoted steps, a(k,k) is the (k+1) x (k+1) leading minor.
        if (sgn(a(k, k)) == 0) {
            for (std::size_t rest = k + 1; rest <= n; ++rest) {
                minors.push_back(det(m.leading(rest)));
            }
            return minors;
        }
        minors.push_back(a(k, k));
        bareiss_step(a, k, previous_pivot);
        previous_pivot = a(k, k);
    }
    return minors;
}

}  // namespace stirdet
