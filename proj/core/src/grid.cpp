#include "gmhd/grid.hpp"

#include <string>

#include "gmhd/errors.hpp"

namespace gmhd {

Grid::Grid(int n) : n_(n) {
  if (n < 8 || n % 2 != 0) {
    throw InvalidArgument("grid size must be even and >= 8, got " + std::to_string(n));
  }
}

}  // namespace gmhd
