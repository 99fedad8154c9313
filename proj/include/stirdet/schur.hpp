#pragma once

#include "stirdet/combinatorics.hpp"
#include "stirdet/matrix.hpp"

#include <stdexcept>
#include <vector>

namespace stirdet {

/// Integer partition: weakly decreasing positive parts. The empty partition is valid.
class Partition {
public:
    Partition() = default;
    /// Throws std::invalid_argument unless `parts` is weakly decreasing and positive.
    explicit Partition(std::vector<int> parts);

    /// (n, n, ..., n) with `count` parts; empty if n == 0 or count == 0.
    static Partition rectangle(int n, int count);

    const std::vector<int>& parts() const { return parts_; }
    int length() const { return static_cast<int>(parts_.size()); }
    int size() const;
    /// Part i (0-based); 0 past the end, so partitions read as zero-padded.
    int part(int i) const { return i < length() ? parts_[i] : 0; }
    Partition conjugate() const;

    friend bool operator==(const Partition&, const Partition&) = default;

private:
    std::vector<int> parts_;
};

/// All partitions of `total` in reverse lexicographic order.
std::vector<Partition> partitions_of(int total);

enum class SchurMethod { bialternant, jacobi_trudi_h, naegelsbach_e };

/// The bialternant needs pairwise distinct variables.
class DegenerateAlphabet : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// s_lambda(alphabet). Zero whenever lambda has more parts than the alphabet has entries.
ExactInt schur_eval(const Partition& lambda, const Alphabet& alphabet, SchurMethod method);

/// (h_{lambda_i - i + j})_{1<=i,j<=size}; size >= length(lambda). Rows beyond the
/// length see lambda_i = 0, giving a unit lower-right block. For a rectangle this
/// coincides with (h_{lambda_j + j - i}).
IntMatrix jacobi_trudi_matrix(const Partition& lambda, const Alphabet& alphabet, int size);

/// (e_{lambda'_i - i + j}) of size length(lambda').
IntMatrix naegelsbach_kostka_matrix(const Partition& lambda, const Alphabet& alphabet);

}  // namespace stirdet
