#include <cmath>

#include "kernels_impl.hpp"

namespace ratdyn::kernels::detail {

void horner_eval_scalar(const HornerBatch& b, std::size_t begin, std::size_t end) {
  const std::size_t n = b.c_re.size();
  for (std::size_t i = begin; i < end; ++i) {
    const double zr = b.z_re[i];
    const double zi = b.z_im[i];
    double pr = 0.0, pi = 0.0, dr = 0.0, di = 0.0;
    for (std::size_t k = n; k-- > 0;) {
      // dp = dp * z + p
      const double ndr = (dr * zr - di * zi) + pr;
      const double ndi = (dr * zi + di * zr) + pi;
      // p = p * z + c_k
      const double npr = (pr * zr - pi * zi) + b.c_re[k];
      const double npi = (pr * zi + pi * zr) + b.c_im[k];
      dr = ndr;
      di = ndi;
      pr = npr;
      pi = npi;
    }
    b.p_re[i] = pr;
    b.p_im[i] = pi;
    b.dp_re[i] = dr;
    b.dp_im[i] = di;
  }
}

namespace {

void homogeneous_eval(const std::vector<double>& cr, const std::vector<double>& ci, int d,
                      double zr, double zi, double wr, double wi, double& outr, double& outi) {
  double ar = cr[static_cast<std::size_t>(d)];
  double ai = ci[static_cast<std::size_t>(d)];
  double pwr = 1.0, pwi = 0.0;
  for (int k = d - 1; k >= 0; --k) {
    const double npwr = pwr * wr - pwi * wi;
    const double npwi = pwr * wi + pwi * wr;
    pwr = npwr;
    pwi = npwi;
    const double kr = cr[static_cast<std::size_t>(k)];
    const double ki = ci[static_cast<std::size_t>(k)];
    const double tr = kr * pwr - ki * pwi;
    const double ti = kr * pwi + ki * pwr;
    const double nar = (ar * zr - ai * zi) + tr;
    const double nai = (ar * zi + ai * zr) + ti;
    ar = nar;
    ai = nai;
  }
  outr = ar;
  outi = ai;
}

}  // namespace

void attraction_time_scalar(const AttractionBatch& b, std::size_t begin, std::size_t end) {
  const HomogeneousMap& m = *b.map;
  const double thr2 = b.threshold * b.threshold;
  for (std::size_t i = begin; i < end; ++i) {
    double zr = b.z_re[i], zi = b.z_im[i], wr = 1.0, wi = 0.0;
    {
      const double n2 = (zr * zr + zi * zi) + (wr * wr + wi * wi);
      const double s = 1.0 / std::sqrt(n2);
      zr *= s;
      zi *= s;
      wr *= s;
      wi *= s;
    }
    std::int32_t result = b.max_iter;
    for (int it = 0; it < b.max_iter; ++it) {
      bool hit = false;
      for (const Attractor& a : b.attractors) {
        // z * aw - w * az
        const double xr = (zr * a.w_re - zi * a.w_im) - (wr * a.z_re - wi * a.z_im);
        const double xi = (zr * a.w_im + zi * a.w_re) - (wr * a.z_im + wi * a.z_re);
        if (xr * xr + xi * xi < thr2) hit = true;
      }
      if (hit) {
        result = it;
        break;
      }
      double pr, pi, qr, qi;
      homogeneous_eval(m.p_re, m.p_im, m.degree, zr, zi, wr, wi, pr, pi);
      homogeneous_eval(m.q_re, m.q_im, m.degree, zr, zi, wr, wi, qr, qi);
      const double n2 = (pr * pr + pi * pi) + (qr * qr + qi * qi);
      const double s = 1.0 / std::sqrt(n2);
      zr = pr * s;
      zi = pi * s;
      wr = qr * s;
      wi = qi * s;
    }
    b.out[i] = result;
  }
}

}  // namespace ratdyn::kernels::detail
