#pragma once

#include <cstdint>
#include <istream>
#include <string>
#include <vector>

#include "oneshot/sample.hpp"

namespace oneshot {

// Direction-number table for the Sobol generator.  Rows follow the Joe-Kuo
// plain-text format: dimension, polynomial degree s, polynomial code a,
// then the s initial direction integers m_1..m_s (m_i odd, m_i < 2^i).
// The first Sobol coordinate is the base-2 van der Corput sequence and has
// no table row.
class SobolTable {
  public:
    struct Row {
        std::uint32_t degree = 0;
        std::uint32_t poly = 0;            // coefficient bits a_1..a_{s-1}
        std::vector<std::uint32_t> m;      // initial direction integers
    };

    static SobolTable parse(std::istream& in);
    static SobolTable load(const std::string& path);

    // Table bundled with the library (parsed once at startup from the
    // embedded copy of assets/sobol_direction_numbers.txt).
    static const SobolTable& bundled();

    std::size_t max_dimension() const { return rows_.size() + 1; }
    const Row& row(std::size_t dim) const { return rows_.at(dim - 2); }

  private:
    std::vector<Row> rows_;  // rows_[k] describes Sobol dimension k+2
};

// First n Sobol points (indices 1..n; index 0, the origin, is skipped) in
// dimension d, via the Gray-code recurrence.
UnitSample sobol_points(std::size_t n, std::size_t d, const SobolTable& table);

}  // namespace oneshot
