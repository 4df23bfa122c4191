#pragma once

#include <cstdint>
#include <filesystem>
#include <fstream>
#include <string>
#include <vector>

#include "lveval/types.hpp"

namespace lveval {

// Single-channel 8-bit frame. All metrics operate on luma; chroma is dropped
// at decode time.
struct Frame {
  int width = 0;
  int height = 0;
  std::vector<std::uint8_t> pixels;  // row-major, width*height

  Frame() = default;
  Frame(int w, int h, std::uint8_t fill = 0)
      : width(w), height(h), pixels(std::size_t(w) * h, fill) {}

  std::uint8_t at(int x, int y) const { return pixels[std::size_t(y) * width + x]; }
  std::uint8_t& at(int x, int y) { return pixels[std::size_t(y) * width + x]; }
  bool same_shape(const Frame& o) const { return width == o.width && height == o.height; }
};

struct Video {
  double fps = 0.0;
  std::vector<Frame> frames;

  int width() const { return frames.empty() ? 0 : frames.front().width; }
  int height() const { return frames.empty() ? 0 : frames.front().height; }
  long frame_count() const { return long(frames.size()); }
  double duration_s() const { return fps > 0 ? frames.size() / fps : 0.0; }
};

// YUV4MPEG2 writer. Emits C420jpeg with neutral chroma so any standard tool
// can read the output back.
void write_y4m(const Video& video, const std::filesystem::path& path);

// Random-access Y4M reader; keeps the file open and seeks per frame instead
// of holding the full video in memory.
class VideoFile {
 public:
  explicit VideoFile(const std::filesystem::path& path);

  int width() const { return width_; }
  int height() const { return height_; }
  double fps() const { return fps_; }
  long frame_count() const { return long(offsets_.size()); }
  double duration_s() const { return fps_ > 0 ? frame_count() / fps_ : 0.0; }
  const std::string& path() const { return path_; }

  Frame frame(long index) const;
  Video read_all() const;
  VideoAsset asset(const std::string& sample_id) const;

 private:
  std::string path_;
  mutable std::ifstream in_;
  int width_ = 0;
  int height_ = 0;
  double fps_ = 0.0;
  std::size_t luma_bytes_ = 0;
  std::size_t chroma_bytes_ = 0;
  std::vector<std::streamoff> offsets_;  // start of each frame's luma plane
};

Video load_video(const std::filesystem::path& path);

// Frame indices sampled one per second of duration, anchored at t = 0s
// (nearest frame, deduplicated, always at least one sample).
std::vector<long> one_per_second_indices(double fps, long frame_count);

// Contiguous [start,end) clip boundaries covering all frames, each clip
// strictly shorter than max_clip_s whenever the video is longer than that.
std::vector<std::pair<long, long>> partition_clips(double fps, long frame_count,
                                                   double max_clip_s);

// Up to max_count indices uniformly spread over [begin, end), endpoints
// included when they fit.
std::vector<long> uniform_indices(long begin, long end, int max_count);

}  // namespace lveval
