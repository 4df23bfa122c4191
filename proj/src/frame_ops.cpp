#include "lveval/frame_ops.hpp"

#include <algorithm>
#include <cmath>

namespace lveval {

std::pair<double, double> FlowField::mean_vector() const {
  if (dx.empty()) return {0.0, 0.0};
  double sx = 0.0, sy = 0.0;
  for (std::size_t i = 0; i < dx.size(); ++i) {
    sx += dx[i];
    sy += dy[i];
  }
  return {sx / double(dx.size()), sy / double(dx.size())};
}

std::vector<double> FlowField::magnitudes() const {
  std::vector<double> m(dx.size());
  for (std::size_t i = 0; i < dx.size(); ++i)
    m[i] = std::sqrt(double(dx[i]) * dx[i] + double(dy[i]) * dy[i]);
  return m;
}

double mean_abs_diff(const Frame& a, const Frame& b) {
  if (!a.same_shape(b) || a.pixels.empty()) return 0.0;
  long long sum = 0;
  for (std::size_t i = 0; i < a.pixels.size(); ++i)
    sum += std::abs(int(a.pixels[i]) - int(b.pixels[i]));
  return double(sum) / double(a.pixels.size());
}

double ssim(const Frame& a, const Frame& b) {
  if (!a.same_shape(b) || a.pixels.empty()) return 0.0;
  constexpr int kWin = 8;
  constexpr double c1 = (0.01 * 255) * (0.01 * 255);
  constexpr double c2 = (0.03 * 255) * (0.03 * 255);
  double total = 0.0;
  int windows = 0;
  for (int y0 = 0; y0 < a.height; y0 += kWin) {
    for (int x0 = 0; x0 < a.width; x0 += kWin) {
      int x1 = std::min(x0 + kWin, a.width);
      int y1 = std::min(y0 + kWin, a.height);
      double n = double(x1 - x0) * (y1 - y0);
      double ma = 0, mb = 0;
      for (int y = y0; y < y1; ++y) {
        for (int x = x0; x < x1; ++x) {
          ma += a.at(x, y);
          mb += b.at(x, y);
        }
      }
      ma /= n;
      mb /= n;
      double va = 0, vb = 0, cab = 0;
      for (int y = y0; y < y1; ++y) {
        for (int x = x0; x < x1; ++x) {
          double da = a.at(x, y) - ma;
          double db = b.at(x, y) - mb;
          va += da * da;
          vb += db * db;
          cab += da * db;
        }
      }
      va /= n;
      vb /= n;
      cab /= n;
      double s = ((2 * ma * mb + c1) * (2 * cab + c2)) /
                 ((ma * ma + mb * mb + c1) * (va + vb + c2));
      total += s;
      ++windows;
    }
  }
  return windows > 0 ? total / windows : 0.0;
}

double bilinear_sample(const Frame& f, double x, double y) {
  int x0 = int(std::floor(x));
  int y0 = int(std::floor(y));
  double fx = x - x0;
  double fy = y - y0;
  auto px = [&](int xx, int yy) {
    xx = std::clamp(xx, 0, f.width - 1);
    yy = std::clamp(yy, 0, f.height - 1);
    return double(f.at(xx, yy));
  };
  return px(x0, y0) * (1 - fx) * (1 - fy) + px(x0 + 1, y0) * fx * (1 - fy) +
         px(x0, y0 + 1) * (1 - fx) * fy + px(x0 + 1, y0 + 1) * fx * fy;
}

std::vector<double> downsample(const Frame& f, int gw, int gh) {
  std::vector<double> out(std::size_t(gw) * gh, 0.0);
  if (f.pixels.empty()) return out;
  std::vector<double> counts(out.size(), 0.0);
  for (int y = 0; y < f.height; ++y) {
    int gy = std::min(gh - 1, y * gh / f.height);
    for (int x = 0; x < f.width; ++x) {
      int gx = std::min(gw - 1, x * gw / f.width);
      out[std::size_t(gy) * gw + gx] += f.at(x, y);
      counts[std::size_t(gy) * gw + gx] += 1.0;
    }
  }
  for (std::size_t i = 0; i < out.size(); ++i) {
    if (counts[i] > 0) out[i] /= counts[i];
  }
  return out;
}

double dot(const std::vector<double>& a, const std::vector<double>& b) {
  double s = 0.0;
  std::size_t n = std::min(a.size(), b.size());
  for (std::size_t i = 0; i < n; ++i) s += a[i] * b[i];
  return s;
}

double norm(const std::vector<double>& v) { return std::sqrt(dot(v, v)); }

void unit_normalize(std::vector<double>& v) {
  double n = norm(v);
  if (n < 1e-12) return;
  for (double& x : v) x /= n;
}

double cosine(const std::vector<double>& a, const std::vector<double>& b) {
  constexpr double kEps = 1e-12;
  double na = norm(a);
  double nb = norm(b);
  if (na < kEps && nb < kEps) return 1.0;
  if (na < kEps || nb < kEps) return 0.0;
  return dot(a, b) / (na * nb);
}

double mean(const std::vector<double>& v) {
  if (v.empty()) return 0.0;
  double s = 0.0;
  for (double x : v) s += x;
  return s / double(v.size());
}

double population_variance(const std::vector<double>& v) {
  if (v.empty()) return 0.0;
  double m = mean(v);
  double s = 0.0;
  for (double x : v) s += (x - m) * (x - m);
  return s / double(v.size());
}

std::vector<double> minmax_normalize(const std::vector<double>& v) {
  if (v.empty()) return {};
  auto [lo_it, hi_it] = std::minmax_element(v.begin(), v.end());
  double lo = *lo_it, hi = *hi_it;
  std::vector<double> out(v.size(), 1.0);
  if (hi - lo < 1e-12) return out;  // degenerate range: treat as "no change"
  for (std::size_t i = 0; i < v.size(); ++i) out[i] = (v[i] - lo) / (hi - lo);
  return out;
}

double clamp01(double x) { return std::clamp(x, 0.0, 1.0); }

Frame dilate_mask(const Frame& mask, int radius) {
  if (radius <= 0) return mask;
  Frame out(mask.width, mask.height, 0);
  for (int y = 0; y < mask.height; ++y) {
    for (int x = 0; x < mask.width; ++x) {
      if (mask.at(x, y) == 0) continue;
      int x0 = std::max(0, x - radius), x1 = std::min(mask.width - 1, x + radius);
      int y0 = std::max(0, y - radius), y1 = std::min(mask.height - 1, y + radius);
      for (int yy = y0; yy <= y1; ++yy) {
        for (int xx = x0; xx <= x1; ++xx) out.at(xx, yy) = 255;
      }
    }
  }
  return out;
}

Frame mask_complement(const Frame& mask) {
  Frame out = mask;
  for (auto& p : out.pixels) p = p ? 0 : 255;
  return out;
}

Frame apply_mask(const Frame& frame, const Frame& mask) {
  Frame out = frame;
  for (std::size_t i = 0; i < out.pixels.size(); ++i) {
    if (!mask.pixels[i]) out.pixels[i] = 0;
  }
  return out;
}

Frame masked_crop(const Frame& frame, const Frame& mask) {
  int x0 = frame.width, y0 = frame.height, x1 = -1, y1 = -1;
  for (int y = 0; y < frame.height; ++y) {
    for (int x = 0; x < frame.width; ++x) {
      if (mask.at(x, y)) {
        x0 = std::min(x0, x);
        y0 = std::min(y0, y);
        x1 = std::max(x1, x);
        y1 = std::max(y1, y);
      }
    }
  }
  if (x1 < x0) return Frame();
  Frame out(x1 - x0 + 1, y1 - y0 + 1);
  for (int y = y0; y <= y1; ++y) {
    for (int x = x0; x <= x1; ++x) {
      out.at(x - x0, y - y0) = mask.at(x, y) ? frame.at(x, y) : 0;
    }
  }
  return out;
}

double mask_coverage(const Frame& mask) {
  if (mask.pixels.empty()) return 0.0;
  std::size_t on = 0;
  for (auto p : mask.pixels)
    if (p) ++on;
  return double(on) / double(mask.pixels.size());
}

}  // namespace lveval
