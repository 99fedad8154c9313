#include "stirdet/combinatorics.hpp"

#include <algorithm>
#include <mutex>
#include <shared_mutex>
#include <string>

namespace stirdet {
namespace {

/// Triangular table T[n][k], 0 <= k <= n, filled row by row from a recurrence.
/// Rows are appended under an exclusive lock and never evicted.
class TriangularMemo {
public:
    using Step = ExactInt (*)(const std::vector<ExactInt>& prev, int n, int k);

    explicit TriangularMemo(Step step) : step_(step) { rows_.push_back({ExactInt(1)}); }

    ExactInt get(int n, int k)
    {
        if (n < 0 || k < 0 || k > n) {
            return 0;
        }
        {
            std::shared_lock lock(mutex_);
            if (static_cast<std::size_t>(n) < rows_.size()) {
                return rows_[n][k];
            }
        }
        std::unique_lock lock(mutex_);
        while (rows_.size() <= static_cast<std::size_t>(n)) {
            const int next = static_cast<int>(rows_.size());
            const auto& prev = rows_.back();
            std::vector<ExactInt> row(next + 1);
            for (int j = 0; j <= next; ++j) {
                row[j] = step_(prev, next - 1, j);
            }
            rows_.push_back(std::move(row));
        }
        return rows_[n][k];
    }

private:
    Step step_;
    std::shared_mutex mutex_;
    std::vector<std::vector<ExactInt>> rows_;
};

ExactInt at(const std::vector<ExactInt>& row, int k)
{
    return (k < 0 || k >= static_cast<int>(row.size())) ? ExactInt(0) : row[k];
}

// [n+1, k] = [n, k-1] + n [n, k]
ExactInt stirling1_step(const std::vector<ExactInt>& prev, int n, int k)
{
    return at(prev, k - 1) + n * at(prev, k);
}

// {n+1, k} = {n, k-1} + k {n, k}
ExactInt stirling2_step(const std::vector<ExactInt>& prev, int /*n*/, int k)
{
    return at(prev, k - 1) + k * at(prev, k);
}

TriangularMemo& stirling1_table()
{
    static TriangularMemo table(&stirling1_step);
    return table;
}

TriangularMemo& stirling2_table()
{
    static TriangularMemo table(&stirling2_step);
    return table;
}

void check_nonneg(int n, const char* op)
{
    if (n < 0) {
        throw DomainError(std::string(op) + ": n must be nonnegative, got " + std::to_string(n));
    }
}

}  // namespace

ExactInt binomial(int n, int k)
{
    check_nonneg(n, "binomial");
    if (k < 0 || k > n) {
        return 0;
    }
    ExactInt out;
    mpz_bin_uiui(out.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return out;
}

ExactInt stirling1_unsigned(int n, int k)
{
    check_nonneg(n, "stirling1_unsigned");
    return stirling1_table().get(n, k);
}

ExactInt stirling2(int n, int k)
{
    check_nonneg(n, "stirling2");
    return stirling2_table().get(n, k);
}

bool Alphabet::pairwise_distinct() const
{
    std::vector<ExactInt> sorted = values;
    std::sort(sorted.begin(), sorted.end());
    return std::adjacent_find(sorted.begin(), sorted.end()) == sorted.end();
}

Alphabet Alphabet::canonical(int a)
{
    check_nonneg(a, "Alphabet::canonical");
    Alphabet out;
    out.values.reserve(static_cast<std::size_t>(a));
    for (int i = 1; i <= a; ++i) {
        out.values.emplace_back(i);
    }
    return out;
}

std::vector<ExactInt> sym_spec_sequence(SymKind kind, int max_m, const Alphabet& alphabet)
{
    if (max_m < 0) {
        return {};
    }
    std::vector<ExactInt> table(static_cast<std::size_t>(max_m) + 1, ExactInt(0));
    table[0] = 1;
    if (kind == SymKind::elementary) {
        // e_j(x_1..x_N) = e_j(x_1..x_{N-1}) + x_N e_{j-1}(x_1..x_{N-1}); descend j to read old values.
        int seen = 0;
        for (const auto& x : alphabet.values) {
            ++seen;
            for (int j = std::min(max_m, seen); j >= 1; --j) {
                table[j] += x * table[j - 1];
            }
        }
    } else {
        // h_j(x_1..x_N) = h_j(x_1..x_{N-1}) + x_N h_{j-1}(x_1..x_N); ascend j to read new values.
        for (const auto& x : alphabet.values) {
            for (int j = 1; j <= max_m; ++j) {
                table[j] += x * table[j - 1];
            }
        }
    }
    return table;
}

ExactInt sym_spec(SymKind kind, int m, const Alphabet& alphabet)
{
    if (m < 0) {
        return 0;
    }
    return sym_spec_sequence(kind, m, alphabet).back();
}

void for_each_subset(int n, int k, const std::function<void(std::span<const int>)>& visit)
{
    if (k < 0 || n < 0 || k > n) {
        return;
    }
    std::vector<int> chosen(static_cast<std::size_t>(k));
    for (int i = 0; i < k; ++i) {
        chosen[i] = i + 1;
    }
    while (true) {
        visit(chosen);
        int pos = k - 1;
        while (pos >= 0 && chosen[pos] == n - (k - 1 - pos)) {
            --pos;
        }
        if (pos < 0) {
            return;
        }
        ++chosen[pos];
        for (int i = pos + 1; i < k; ++i) {
            chosen[i] = chosen[i - 1] + 1;
        }
    }
}

}  // namespace stirdet
