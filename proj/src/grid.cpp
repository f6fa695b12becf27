#include "dfnls/grid.hpp"

#include <stdexcept>

namespace dfnls {

namespace {

bool power_of_two(Eigen::Index n) { return n > 0 && (n & (n - 1)) == 0; }

}  // namespace

PeriodicGrid::PeriodicGrid(Eigen::Index n_modes) : n_(n_modes) {
    if (n_modes < 16 || !power_of_two(n_modes))
        throw std::invalid_argument("PeriodicGrid: n_modes must be a power of two >= 16");
    points_.resize(n_);
    wavenumbers_.resize(n_);
    for (Eigen::Index j = 0; j < n_; ++j) {
        points_[j] = -pi + 2.0 * pi * static_cast<double>(j) / static_cast<double>(n_);
        wavenumbers_[j] = static_cast<double>(j < n_ / 2 ? j : j - n_);
    }
}

std::shared_ptr<const PeriodicGrid> PeriodicGrid::make(Eigen::Index n_modes) {
    return std::make_shared<const PeriodicGrid>(n_modes);
}

RealField zero_field(GridPtr grid) {
    return RealField{grid, Eigen::ArrayXd::Zero(grid->n_modes())};
}

void require_same_grid(const RealField& f, const RealField& g) {
    if (!f.grid || !g.grid)
        throw std::invalid_argument("RealField: missing grid");
    if (f.grid->n_modes() != g.grid->n_modes())
        throw std::invalid_argument("RealField: grid size mismatch");
}

}  // namespace dfnls
