#include "fibhess/render.hpp"

#include <algorithm>
#include <sstream>
#include <vector>

namespace fibhess {

namespace {

std::string grid_to_text(int n, const std::vector<std::vector<std::string>>& cells) {
    std::vector<std::size_t> widths(static_cast<std::size_t>(n), 0);
    for (const auto& row : cells)
        for (std::size_t s = 0; s < row.size(); ++s)
            widths[s] = std::max(widths[s], row[s].size());
    std::ostringstream out;
    for (const auto& row : cells) {
        for (std::size_t s = 0; s < row.size(); ++s) {
            if (s > 0) out << "  ";
            out << row[s];
            if (s + 1 < row.size()) out << std::string(widths[s] - row[s].size(), ' ');
        }
        out << '\n';
    }
    return out.str();
}

} // namespace

std::string matrix_to_text(const FamilySpec& spec) {
    std::vector<std::vector<std::string>> cells;
    cells.reserve(static_cast<std::size_t>(spec.n));
    if (family_is_symbolic(spec.family)) {
        const auto m = build_symbolic(spec);
        for (int r = 1; r <= spec.n; ++r) {
            auto& row = cells.emplace_back();
            for (int s = 1; s <= spec.n; ++s) row.push_back(m.entry(r, s).to_string());
        }
    } else {
        const auto m = build_numeric(spec);
        for (int r = 1; r <= spec.n; ++r) {
            auto& row = cells.emplace_back();
            for (int s = 1; s <= spec.n; ++s) row.push_back(m.entry(r, s).to_string());
        }
    }
    return grid_to_text(spec.n, cells);
}

} // namespace fibhess
