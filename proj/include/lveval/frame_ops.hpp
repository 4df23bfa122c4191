#pragma once

#include <vector>

#include "lveval/video.hpp"

namespace lveval {

// Dense per-pixel displacement field. flow convention: target(p) is predicted
// by source(p + (dx(p), dy(p))).
struct FlowField {
  int width = 0;
  int height = 0;
  std::vector<float> dx;
  std::vector<float> dy;

  std::size_t size() const { return dx.size(); }
  // Mean displacement vector over all pixels.
  std::pair<double, double> mean_vector() const;
  std::vector<double> magnitudes() const;
};

double mean_abs_diff(const Frame& a, const Frame& b);          // [0,255]
inline double mae_similarity(const Frame& a, const Frame& b) {
  return 1.0 - mean_abs_diff(a, b) / 255.0;
}

// Mean structural similarity over non-overlapping 8x8 windows, standard
// K1=0.01 / K2=0.03 constants on the 8-bit range.
double ssim(const Frame& a, const Frame& b);

double bilinear_sample(const Frame& f, double x, double y);

// Block-averaged grid of gw x gh values in [0,255].
std::vector<double> downsample(const Frame& f, int gw, int gh);

// --- vector helpers -------------------------------------------------------

double dot(const std::vector<double>& a, const std::vector<double>& b);
double norm(const std::vector<double>& v);
void unit_normalize(std::vector<double>& v);

// Cosine with zero-vector conventions: two (near-)zero vectors count as
// perfectly aligned, a zero against a non-zero as fully misaligned.
double cosine(const std::vector<double>& a, const std::vector<double>& b);

double mean(const std::vector<double>& v);
double population_variance(const std::vector<double>& v);

// Min-max rescale into [0,1]; a degenerate range maps every entry to 1.
std::vector<double> minmax_normalize(const std::vector<double>& v);

double clamp01(double x);

// --- mask helpers (masks are frames valued 0 or 255) -----------------------

Frame dilate_mask(const Frame& mask, int radius);
Frame mask_complement(const Frame& mask);
Frame apply_mask(const Frame& frame, const Frame& mask);  // zero outside mask
// Tight bounding box crop of frame⊙mask; empty mask yields an empty frame.
Frame masked_crop(const Frame& frame, const Frame& mask);
double mask_coverage(const Frame& mask);

}  // namespace lveval
