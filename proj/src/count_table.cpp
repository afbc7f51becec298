#include "grouppart/count_table.hpp"

#include <ostream>
#include <stdexcept>

namespace grouppart {

std::uint64_t CountTable::at(std::uint64_t n) const {
    if (n < 1 || n > x_max) throw std::out_of_range("CountTable::at: n out of range");
    return values[n];
}

void CountTable::write_csv(std::ostream& os) const {
    os << "n," << value_label << '\n';
    for (std::uint64_t n = 1; n <= x_max; ++n) os << n << ',' << values[n] << '\n';
}

void CountTable::write_json(std::ostream& os) const {
    os << "[";
    for (std::uint64_t n = 1; n <= x_max; ++n) {
        if (n > 1) os << ",";
        os << "\n[" << n << ",\"" << values[n] << "\"]";
    }
    os << "\n]\n";
}

} // namespace grouppart
