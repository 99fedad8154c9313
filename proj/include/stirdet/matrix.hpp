#pragma once

#include "stirdet/exact.hpp"

#include <cstddef>
#include <initializer_list>
#include <stdexcept>
#include <vector>

namespace stirdet {

/// Dense square matrix of ExactInt, row-major. Size 0 is allowed.
class IntMatrix {
public:
    IntMatrix() = default;
    explicit IntMatrix(std::size_t n) : n_(n), entries_(n * n) {}
    IntMatrix(std::initializer_list<std::initializer_list<long>> rows);

    static IntMatrix identity(std::size_t n);

    std::size_t size() const { return n_; }

    ExactInt& operator()(std::size_t i, std::size_t j) { return entries_[i * n_ + j]; }
    const ExactInt& operator()(std::size_t i, std::size_t j) const { return entries_[i * n_ + j]; }

    IntMatrix transpose() const;
    /// Leading k x k submatrix.
    IntMatrix leading(std::size_t k) const;
    void swap_rows(std::size_t r1, std::size_t r2);

    friend bool operator==(const IntMatrix&, const IntMatrix&) = default;

private:
    std::size_t n_ = 0;
    std::vector<ExactInt> entries_;
};

enum class DetMethod { bareiss, laplace };

/// Laplace expansion is refused above this size.
inline constexpr std::size_t kLaplaceMaxSize = 8;

class SizeGuardError : public std::length_error {
public:
    using std::length_error::length_error;
};

/// Exact determinant. Bareiss: fraction-free elimination with row swaps on a zero
/// pivot. Laplace: cofactor expansion along the first row, n <= kLaplaceMaxSize.
ExactInt det(const IntMatrix& m, DetMethod method = DetMethod::bareiss);

/// det of the leading k x k submatrices for k = 1..size(), from one unpivoted Bareiss
/// pass. Where a leading minor vanishes the later minors are recomputed one by one
/// with the pivoting determinant.
std::vector<ExactInt> leading_principal_minors(const IntMatrix& m);

}  // namespace stirdet
