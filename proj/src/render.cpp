#include "ratdyn/render.hpp"

#include <cmath>

#include "ratdyn/errors.hpp"

namespace ratdyn {

Complex Image::pixel_center(int col, int row, const RenderConfig& cfg) const {
  const double dx = (cfg.x_max - cfg.x_min) / width;
  const double dy = (cfg.y_max - cfg.y_min) / height;
  return {cfg.x_min + (col + 0.5) * dx, cfg.y_max - (row + 0.5) * dy};
}

kernels::HomogeneousMap homogeneous_map(const RationalMap& r) {
  kernels::HomogeneousMap m;
  m.degree = r.degree();
  const std::size_t n = static_cast<std::size_t>(m.degree) + 1;
  m.p_re.assign(n, 0.0);
  m.p_im.assign(n, 0.0);
  m.q_re.assign(n, 0.0);
  m.q_im.assign(n, 0.0);
  const auto p = r.numerator().to_complex();
  const auto q = r.denominator().to_complex();
  for (std::size_t k = 0; k < p.size(); ++k) {
    m.p_re[k] = p[k].real();
    m.p_im[k] = p[k].imag();
  }
  for (std::size_t k = 0; k < q.size(); ++k) {
    m.q_re[k] = q[k].real();
    m.q_im[k] = q[k].imag();
  }
  return m;
}

std::vector<SpherePoint> attractors_of(const CycleScan& cycles) {
  std::vector<SpherePoint> out;
  for (const auto& c : cycles.cycles)
    if (c.kind == CycleKind::SuperAttracting || c.kind == CycleKind::Attracting)
      out.insert(out.end(), c.points.begin(), c.points.end());
  return out;
}

Image render_julia(const RationalMap& r, const std::vector<SpherePoint>& attractors, const RenderConfig& cfg) {
  if (!(cfg.x_max > cfg.x_min) || !(cfg.y_max > cfg.y_min) || cfg.width <= 0 || cfg.height <= 0)
    throw Error(ErrorCode::RenderWindow, "render window has zero area");
  if (cfg.max_iter <= 0) throw Error(ErrorCode::InvalidInput, "render max_iter must be positive");

  Image img;
  img.width = cfg.width;
  img.height = cfg.height;
  img.max_iter = cfg.max_iter;
  const std::size_t n = static_cast<std::size_t>(cfg.width) * cfg.height;

  std::vector<double> re(n), im(n);
  for (int row = 0; row < cfg.height; ++row)
    for (int col = 0; col < cfg.width; ++col) {
      const Complex c = img.pixel_center(col, row, cfg);
      re[static_cast<std::size_t>(row) * cfg.width + col] = c.real();
      im[static_cast<std::size_t>(row) * cfg.width + col] = c.imag();
    }

  std::vector<kernels::Attractor> att;
  for (const auto& a : attractors) {
    Complex z, w;
    a.unit_coords(z, w);
    att.push_back({z.real(), z.imag(), w.real(), w.imag()});
  }
  const kernels::HomogeneousMap hm = homogeneous_map(r);
  img.iterations.assign(n, 0);
  kernels::AttractionBatch batch;
  batch.map = &hm;
  batch.attractors = att;
  batch.z_re = re;
  batch.z_im = im;
  batch.max_iter = cfg.max_iter;
  batch.threshold = cfg.threshold;
  batch.out = img.iterations;
  kernels::attraction_time(batch);

  img.rgb.resize(3 * n);
  for (std::size_t i = 0; i < n; ++i) {
    const int t = img.iterations[i];
    std::uint8_t v = 0;
    if (t < cfg.max_iter) v = static_cast<std::uint8_t>(255 - (200 * t) / cfg.max_iter);
    img.rgb[3 * i] = v;
    img.rgb[3 * i + 1] = v;
    img.rgb[3 * i + 2] = static_cast<std::uint8_t>(t < cfg.max_iter ? 255 : 0);
  }
  return img;
}

void write_ppm(const Image& img, std::ostream& out) {
  out << "P6\n" << img.width << ' ' << img.height << "\n255\n";
  out.write(reinterpret_cast<const char*>(img.rgb.data()), static_cast<std::streamsize>(img.rgb.size()));
}

}  // namespace ratdyn
