#pragma once

// Sweep over max >= n >= a >= b >= 0: beta and gamma by every method, plus one
// fitted generating function per (a,b).

#include "stirdet/exact.hpp"
#include "stirdet/genfun.hpp"

#include <optional>
#include <string>
#include <vector>

namespace stirdet {

struct ReportCell {
    int n = 0;
    int a = 0;
    int b = 0;
    ExactInt beta;
    ExactInt gamma;
    bool methods_agree = false;
    /// Present on the cell with n == max for its (a,b).
    std::optional<RationalFunction> genfun;
    bool genfun_ok = true;
    /// Empty when ok().
    std::string failure;

    bool ok() const { return methods_agree && genfun_ok; }

    friend bool operator==(const ReportCell&, const ReportCell&) = default;
};

struct Report {
    int max = 0;
    std::vector<ReportCell> cells;

    bool passed() const;

    friend bool operator==(const Report&, const Report&) = default;
};

/// Cells sorted by (a, b, n). `threads` == 0 picks the hardware concurrency.
Report generate_report(int max, unsigned threads = 0, int guard = 10);

std::string render_text(const Report& report);
std::string render_json(const Report& report);
/// Inverse of render_json. Throws std::invalid_argument on malformed input.
Report parse_report_json(const std::string& text);

}  // namespace stirdet
