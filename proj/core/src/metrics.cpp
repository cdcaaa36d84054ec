#include "arcinterp/metrics.hpp"

#include <array>
#include <cmath>
#include <limits>
#include <vector>

#include "arcinterp/errors.hpp"

namespace arcinterp {

namespace {

void require_comparable(const Image& a, const Image& b, const char* what) {
  require_same_extent(a.extent(), b.extent(), what);
  if (a.channels() != b.channels()) {
    throw InputError(std::string(what) + ": channel count mismatch");
  }
  if (a.samples().empty()) {
    throw InputError(std::string(what) + ": empty image");
  }
}

double mean_squared_error(const Image& a, const Image& b) {
  const auto sa = a.samples();
  const auto sb = b.samples();
  double sum = 0.0;
  for (std::size_t i = 0; i < sa.size(); ++i) {
    const double d = static_cast<double>(sa[i]) - static_cast<double>(sb[i]);
    sum += d * d;
  }
  return sum / static_cast<double>(sa.size());
}

constexpr int kWindow = 11;
constexpr double kWindowSigma = 1.5;
constexpr double kC1 = (0.01 * 1.0) * (0.01 * 1.0);
constexpr double kC2 = (0.03 * 1.0) * (0.03 * 1.0);

std::array<double, kWindow> gaussian_taps() {
  std::array<double, kWindow> taps{};
  double total = 0.0;
  for (int i = 0; i < kWindow; ++i) {
    const double r = i - kWindow / 2;
    taps[static_cast<std::size_t>(i)] = std::exp(-(r * r) / (2.0 * kWindowSigma * kWindowSigma));
    total += taps[static_cast<std::size_t>(i)];
  }
  for (double& tap : taps) {
    tap /= total;
  }
  return taps;
}

// Separable valid-region filter of a plane (w x h) to (w-10) x (h-10).
std::vector<double> filter_valid(const std::vector<double>& plane, int w, int h,
                                 const std::array<double, kWindow>& taps) {
  const int ow = w - kWindow + 1;
  const int oh = h - kWindow + 1;
  std::vector<double> rows(static_cast<std::size_t>(ow) * static_cast<std::size_t>(h));
  for (int y = 0; y < h; ++y) {
    for (int x = 0; x < ow; ++x) {
      double acc = 0.0;
      for (int k = 0; k < kWindow; ++k) {
        acc += taps[static_cast<std::size_t>(k)] *
               plane[static_cast<std::size_t>(y) * static_cast<std::size_t>(w) +
                     static_cast<std::size_t>(x + k)];
      }
      rows[static_cast<std::size_t>(y) * static_cast<std::size_t>(ow) +
           static_cast<std::size_t>(x)] = acc;
    }
  }
  std::vector<double> out(static_cast<std::size_t>(ow) * static_cast<std::size_t>(oh));
  for (int y = 0; y < oh; ++y) {
    for (int x = 0; x < ow; ++x) {
      double acc = 0.0;
      for (int k = 0; k < kWindow; ++k) {
        acc += taps[static_cast<std::size_t>(k)] *
               rows[static_cast<std::size_t>(y + k) * static_cast<std::size_t>(ow) +
                    static_cast<std::size_t>(x)];
      }
      out[static_cast<std::size_t>(y) * static_cast<std::size_t>(ow) +
          static_cast<std::size_t>(x)] = acc;
    }
  }
  return out;
}

}  // namespace

double psnr(const Image& a, const Image& b) {
  require_comparable(a, b, "psnr");
  const double mse = mean_squared_error(a, b);
  if (mse == 0.0) {
    return std::numeric_limits<double>::infinity();
  }
  return 10.0 * std::log10(1.0 / mse);
}

double ssim(const Image& a, const Image& b) {
  require_comparable(a, b, "ssim");
  const int w = a.width();
  const int h = a.height();
  if (w < kWindow || h < kWindow) {
    throw InputError("ssim: image smaller than the 11x11 window");
  }

  const auto taps = gaussian_taps();
  const std::size_t n = a.extent().pixels();
  std::vector<double> pa(n), pb(n), paa(n), pbb(n), pab(n);
  double total = 0.0;
  std::size_t count = 0;
  for (int c = 0; c < a.channels(); ++c) {
    for (int y = 0; y < h; ++y) {
      for (int x = 0; x < w; ++x) {
        const std::size_t i =
            static_cast<std::size_t>(y) * static_cast<std::size_t>(w) + static_cast<std::size_t>(x);
        const double va = a.at(x, y, c);
        const double vb = b.at(x, y, c);
        pa[i] = va;
        pb[i] = vb;
        paa[i] = va * va;
        pbb[i] = vb * vb;
        pab[i] = va * vb;
      }
    }
    const auto mu_a = filter_valid(pa, w, h, taps);
    const auto mu_b = filter_valid(pb, w, h, taps);
    const auto e_aa = filter_valid(paa, w, h, taps);
    const auto e_bb = filter_valid(pbb, w, h, taps);
    const auto e_ab = filter_valid(pab, w, h, taps);
    for (std::size_t i = 0; i < mu_a.size(); ++i) {
      const double ma = mu_a[i];
      const double mb = mu_b[i];
      const double var_a = e_aa[i] - ma * ma;
      const double var_b = e_bb[i] - mb * mb;
      const double cov = e_ab[i] - ma * mb;
      const double num = (2.0 * ma * mb + kC1) * (2.0 * cov + kC2);
      const double den = (ma * ma + mb * mb + kC1) * (var_a + var_b + kC2);
      total += num / den;
    }
    count += mu_a.size();
  }
  return total / static_cast<double>(count);
}

double interpolation_error(const Image& a, const Image& b) {
  require_comparable(a, b, "interpolation_error");
  return 255.0 * std::sqrt(mean_squared_error(a, b));
}

double charbonnier(const Image& a, const Image& b, double epsilon) {
  require_comparable(a, b, "charbonnier");
  if (!(epsilon > 0.0)) {
    throw InputError("charbonnier: epsilon must be positive");
  }
  // rho(x) - eps = x^2 / (rho(x) + eps); accumulating the excess keeps
  // identical inputs at exactly eps.
  const auto sa = a.samples();
  const auto sb = b.samples();
  double excess = 0.0;
  for (std::size_t i = 0; i < sa.size(); ++i) {
    const double x = static_cast<double>(sa[i]) - static_cast<double>(sb[i]);
    excess += (x * x) / (std::hypot(x, epsilon) + epsilon);
  }
  return epsilon + excess / static_cast<double>(sa.size());
}

}  // namespace arcinterp
