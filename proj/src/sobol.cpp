#include "oneshot/sobol.hpp"

#include <bit>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include "sobol_table_data.hpp"

namespace oneshot {

namespace {
constexpr int kBits = 52;  // points are X / 2^52, exactly representable
}

SobolTable SobolTable::parse(std::istream& in) {
    SobolTable table;
    std::string line;
    std::size_t expected_dim = 2;
    while (std::getline(in, line)) {
        if (line.empty() || line[0] == '#') continue;
        if (line.rfind("d s a", 0) == 0) continue;  // column header
        std::istringstream fields(line);
        std::size_t dim = 0;
        Row row;
        fields >> dim >> row.degree >> row.poly;
        if (!fields || dim != expected_dim)
            throw std::runtime_error("SobolTable: malformed row for dimension " + std::to_string(expected_dim));
        row.m.resize(row.degree);
        for (auto& mi : row.m) {
            fields >> mi;
            if (!fields) throw std::runtime_error("SobolTable: truncated direction integers");
        }
        for (std::size_t i = 0; i < row.m.size(); ++i) {
            const std::uint64_t limit = 1ULL << (i + 1);
            if (row.m[i] % 2 == 0 || row.m[i] >= limit)
                throw std::runtime_error("SobolTable: invalid direction integer m_" + std::to_string(i + 1));
        }
        table.rows_.push_back(std::move(row));
        ++expected_dim;
    }
    if (table.rows_.empty()) throw std::runtime_error("SobolTable: empty table");
    return table;
}

SobolTable SobolTable::load(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("SobolTable: cannot open " + path);
    return parse(in);
}

const SobolTable& SobolTable::bundled() {
    static const SobolTable table = [] {
        std::istringstream in(kSobolTableText);
        return parse(in);
    }();
    return table;
}

UnitSample sobol_points(std::size_t n, std::size_t d, const SobolTable& table) {
    if (n == 0) throw std::invalid_argument("sobol_points: n must be >= 1");
    if (d == 0) throw std::invalid_argument("sobol_points: d must be >= 1");
    if (d > table.max_dimension())
        throw std::invalid_argument("sobol_points: dimension " + std::to_string(d) +
                                    " exceeds direction-number table bound " +
                                    std::to_string(table.max_dimension()));
    if (n >= (1ULL << (kBits - 1)))
        throw std::invalid_argument("sobol_points: n too large for 52-bit state");

    // Direction integers V[j], j = 1..kBits, per dimension.
    std::vector<std::vector<std::uint64_t>> dirs(d, std::vector<std::uint64_t>(kBits + 1, 0));
    for (int j = 1; j <= kBits; ++j) dirs[0][j] = 1ULL << (kBits - j);  // van der Corput base 2
    for (std::size_t dim = 2; dim <= d; ++dim) {
        const auto& row = table.row(dim);
        auto& v = dirs[dim - 1];
        const std::uint32_t s = row.degree;
        for (std::uint32_t j = 1; j <= s && j <= kBits; ++j)
            v[j] = static_cast<std::uint64_t>(row.m[j - 1]) << (kBits - j);
        for (std::uint32_t j = s + 1; j <= kBits; ++j) {
            v[j] = v[j - s] ^ (v[j - s] >> s);
            for (std::uint32_t t = 1; t < s; ++t)
                if ((row.poly >> (s - 1 - t)) & 1U) v[j] ^= v[j - t];
        }
    }

    UnitSample out(n, d);
    std::vector<std::uint64_t> state(d, 0);
    constexpr double scale = 0x1.0p-52;
    for (std::size_t i = 1; i <= n; ++i) {
        // Gray-code step: flip by the direction of the lowest zero bit of i-1.
        const int c = std::countr_one(i - 1) + 1;
        for (std::size_t j = 0; j < d; ++j) {
            state[j] ^= dirs[j][c];
            out(i - 1, j) = static_cast<double>(state[j]) * scale;
        }
    }
    return out;
}

}  // namespace oneshot
