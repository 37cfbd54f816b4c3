#pragma once

// Raster images of one-dimensional operators in the (x, x*) plane.

#include "qmpolar/operator.hpp"
#include "qmpolar/scalar.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace qmpolar {

enum class Region { Polar, Graph };

struct Raster {
  double lo = -3, hi = 3;
  std::size_t cells = 60;
  // member[i][j]: cell with x index i and x* index j (j = 0 at the bottom)
  std::vector<std::vector<bool>> member;

  [[nodiscard]] double center(std::size_t i) const {
    return lo + (hi - lo) * (static_cast<double>(i) + 0.5) / static_cast<double>(cells);
  }
};

/// Samples each cell of [lo, hi]^2 at its centre (polar region) or marks
/// the cells that hold a graph pair (graph region).
template <Field F>
Raster rasterize(const OperatorGraph<F>& t, Region region, const Scalar<F>& lo, const Scalar<F>& hi,
                 std::size_t cells) {
  if (t.dim() != 1) throw std::invalid_argument("plotting needs a one-dimensional operator");
  if (cells == 0 || !(lo < hi)) throw std::invalid_argument("plot needs lo < hi and at least one cell");
  Raster r{to_double(lo), to_double(hi), cells, std::vector<std::vector<bool>>(cells, std::vector<bool>(cells))};
  const Scalar<F> width = (hi - lo) / Scalar<F>(static_cast<long>(cells));
  auto centre = [&](std::size_t i) { return Scalar<F>(lo + width * Scalar<F>(static_cast<long>(2 * i + 1)) / Scalar<F>(2)); };

  if (region == Region::Polar) {
    for (std::size_t i = 0; i < cells; ++i) {
      const Vec<F> x{centre(i)};
      const auto fib = polar_fiber(t, x);
      for (std::size_t j = 0; j < cells; ++j) r.member[i][j] = hcone_member(fib, Vec<F>{centre(j)});
    }
    return r;
  }
  auto index = [&](const Scalar<F>& v) -> long {
    if (v < lo || v > hi) return -1;
    Scalar<F> k = (v - lo) / width;
    long i;
    if constexpr (F::is_exact) {
      mpz_class fl;
      mpz_fdiv_q(fl.get_mpz_t(), k.get_num_mpz_t(), k.get_den_mpz_t());
      i = fl.get_si();
    } else {
      i = static_cast<long>(std::floor(k));
    }
    return std::min<long>(i, static_cast<long>(cells) - 1);
  };
  for (const auto& p : t.pairs()) {
    const long i = index(p.x[0]), j = index(p.xstar[0]);
    if (i >= 0 && j >= 0) r.member[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = true;
  }
  return r;
}

inline std::string to_svg(const Raster& r, std::size_t cell_px = 8) {
  const std::size_t side = r.cells * cell_px;
  std::ostringstream s;
  s << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
    << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << side << "\" height=\"" << side
    << "\" viewBox=\"0 0 " << side << ' ' << side << "\">\n"
    << "<rect x=\"0\" y=\"0\" width=\"" << side << "\" height=\"" << side << "\" fill=\"white\"/>\n"
    << "<g fill=\"#4a6fa5\">\n";
  for (std::size_t i = 0; i < r.cells; ++i) {
    for (std::size_t j = 0; j < r.cells; ++j) {
      if (!r.member[i][j]) continue;
      s << "<rect x=\"" << i * cell_px << "\" y=\"" << (r.cells - 1 - j) * cell_px << "\" width=\"" << cell_px
        << "\" height=\"" << cell_px << "\"/>\n";
    }
  }
  s << "</g>\n";
  // axes through the origin when it is in range
  if (r.lo < 0 && r.hi > 0) {
    const double o = -r.lo / (r.hi - r.lo) * static_cast<double>(side);
    s << "<g stroke=\"black\" stroke-width=\"1\">\n"
      << "<line x1=\"" << o << "\" y1=\"0\" x2=\"" << o << "\" y2=\"" << side << "\"/>\n"
      << "<line x1=\"0\" y1=\"" << static_cast<double>(side) - o << "\" x2=\"" << side << "\" y2=\""
      << static_cast<double>(side) - o << "\"/>\n"
      << "</g>\n";
  }
  s << "</svg>\n";
  return s.str();
}

/// One row per cell: centre coordinates and a 0/1 membership flag.
inline std::string to_csv(const Raster& r) {
  std::ostringstream s;
  s.precision(17);
  s << "x,xstar,member\r\n";
  for (std::size_t i = 0; i < r.cells; ++i) {
    for (std::size_t j = 0; j < r.cells; ++j) {
      s << r.center(i) << ',' << r.center(j) << ',' << (r.member[i][j] ? 1 : 0) << "\r\n";
    }
  }
  return s.str();
}

}  // namespace qmpolar
