#pragma once

#include <Eigen/Dense>
#include <memory>
#include <numbers>

namespace dfnls {

inline constexpr double pi = std::numbers::pi;

// Uniform periodic grid on [-pi, pi) with x_j = -pi + 2*pi*j/N.
// The number of collocation points N must be a power of two and at least 16
// so that transforms are fast and the Nyquist mode is well defined.
// Wavenumbers are stored in transform (FFT bin) order:
//   0, 1, ..., N/2-1, -N/2, -N/2+1, ..., -1
// so that bin k of a discrete transform corresponds to wavenumbers()[k].
class PeriodicGrid {
public:
    explicit PeriodicGrid(Eigen::Index n_modes);

    Eigen::Index n_modes() const { return n_; }
    double spacing() const { return 2.0 * pi / static_cast<double>(n_); }
    const Eigen::ArrayXd& points() const { return points_; }
    const Eigen::ArrayXd& wavenumbers() const { return wavenumbers_; }

    static std::shared_ptr<const PeriodicGrid> make(Eigen::Index n_modes);

private:
    Eigen::Index n_;
    Eigen::ArrayXd points_;
    Eigen::ArrayXd wavenumbers_;
};

using GridPtr = std::shared_ptr<const PeriodicGrid>;

// Real-valued samples on a periodic grid. Plain value type: copying a field
// copies its samples; the grid itself is shared and immutable.
struct RealField {
    GridPtr grid;
    Eigen::ArrayXd values;
};

RealField zero_field(GridPtr grid);

// Sample a callable f(x) at the grid points.
template <class F>
RealField sample(GridPtr grid, F&& f) {
    RealField out{grid, grid->points().unaryExpr(std::forward<F>(f))};
    return out;
}

// Throws std::invalid_argument unless both fields live on grids of the same size.
void require_same_grid(const RealField& f, const RealField& g);

}  // namespace dfnls
