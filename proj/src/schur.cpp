#include "stirdet/schur.hpp"

#include <algorithm>
#include <numeric>
#include <string>

namespace stirdet {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts))
{
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (parts_[i] <= 0) {
            throw std::invalid_argument("Partition: parts must be positive");
        }
        if (i > 0 && parts_[i] > parts_[i - 1]) {
            throw std::invalid_argument("Partition: parts must be weakly decreasing");
        }
    }
}

Partition Partition::rectangle(int n, int count)
{
    if (n < 0 || count < 0) {
        throw DomainError("Partition::rectangle: negative dimension");
    }
    if (n == 0 || count == 0) {
        return {};
    }
    return Partition(std::vector<int>(static_cast<std::size_t>(count), n));
}

int Partition::size() const { return std::accumulate(parts_.begin(), parts_.end(), 0); }

Partition Partition::conjugate() const
{
    std::vector<int> out;
    const int width = parts_.empty() ? 0 : parts_.front();
    out.reserve(static_cast<std::size_t>(width));
    for (int j = 1; j <= width; ++j) {
        int count = 0;
        while (count < length() && parts_[count] >= j) {
            ++count;
        }
        out.push_back(count);
    }
    return Partition(std::move(out));
}

std::vector<Partition> partitions_of(int total)
{
    std::vector<Partition> out;
    std::vector<int> current;
    auto recurse = [&](auto&& self, int remaining, int max_part) -> void {
        if (remaining == 0) {
            out.emplace_back(current);
            return;
        }
        for (int p = std::min(remaining, max_part); p >= 1; --p) {
            current.push_back(p);
            self(self, remaining - p, p);
            current.pop_back();
        }
    };
    if (total >= 0) {
        recurse(recurse, total, total);
    }
    return out;
}

IntMatrix jacobi_trudi_matrix(const Partition& lambda, const Alphabet& alphabet, int size)
{
    if (size < lambda.length()) {
        throw DomainError("jacobi_trudi_matrix: size below partition length");
    }
    const auto h = sym_spec_sequence(SymKind::complete, lambda.part(0) + size, alphabet);
    IntMatrix m(static_cast<std::size_t>(size));
    for (int i = 0; i < size; ++i) {
        for (int j = 0; j < size; ++j) {
            const int index = lambda.part(i) - i + j;
            m(i, j) = index < 0 ? ExactInt(0) : h[index];
        }
    }
    return m;
}

IntMatrix naegelsbach_kostka_matrix(const Partition& lambda, const Alphabet& alphabet)
{
    const Partition conj = lambda.conjugate();
    const int size = conj.length();
    const auto e = sym_spec_sequence(SymKind::elementary, conj.part(0) + size, alphabet);
    IntMatrix m(static_cast<std::size_t>(size));
    for (int i = 0; i < size; ++i) {
        for (int j = 0; j < size; ++j) {
            const int index = conj.part(i) - i + j;
            m(i, j) = index < 0 ? ExactInt(0) : e[index];
        }
    }
    return m;
}

namespace {

ExactInt schur_bialternant(const Partition& lambda, const Alphabet& alphabet)
{
    if (!alphabet.pairwise_distinct()) {
        throw DegenerateAlphabet("bialternant: alphabet entries must be pairwise distinct");
    }
    const int a = static_cast<int>(alphabet.size());
    IntMatrix numerator(alphabet.size());
    IntMatrix vandermonde(alphabet.size());
    for (int i = 0; i < a; ++i) {
        for (int j = 0; j < a; ++j) {
            const auto& x = alphabet.values[i];
            numerator(i, j) = ipow(x, static_cast<unsigned long>(lambda.part(j) + a - 1 - j));
            vandermonde(i, j) = ipow(x, static_cast<unsigned long>(a - 1 - j));
        }
    }
    return exact_div(det(numerator), det(vandermonde), "bialternant quotient");
}

}  // namespace

ExactInt schur_eval(const Partition& lambda, const Alphabet& alphabet, SchurMethod method)
{
    if (static_cast<std::size_t>(lambda.length()) > alphabet.size()) {
        return 0;
    }
    switch (method) {
    case SchurMethod::bialternant:
        return schur_bialternant(lambda, alphabet);
    case SchurMethod::jacobi_trudi_h:
        return det(jacobi_trudi_matrix(lambda, alphabet, lambda.length()));
    case SchurMethod::naegelsbach_e:
        return det(naegelsbach_kostka_matrix(lambda, alphabet));
    }
    throw std::invalid_argument("schur_eval: unknown method");
}

}  // namespace stirdet
