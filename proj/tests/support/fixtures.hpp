#pragma once

#include <filesystem>
#include <string>

#include "lveval/config.hpp"
#include "lveval/suite.hpp"
#include "lveval/video.hpp"

namespace lveval::testing {

// Unique temp directory, removed on destruction.
class TempDir {
 public:
  explicit TempDir(const std::string& tag);
  ~TempDir();
  TempDir(const TempDir&) = delete;
  TempDir& operator=(const TempDir&) = delete;
  const std::filesystem::path& path() const { return path_; }

 private:
  std::filesystem::path path_;
};

// --- synthetic frames -------------------------------------------------------

Frame gradient_frame(int w, int h, int phase = 0);     // horizontal ramp pattern
Frame checker_frame(int w, int h, int cell = 8, int phase = 0);
Frame constant_frame(int w, int h, std::uint8_t value);
Frame noise_frame(int w, int h, std::uint64_t seed);

// --- synthetic videos -------------------------------------------------------

Video constant_video(int w, int h, int frames, double fps, std::uint8_t value = 96);
// consecutive frames alternate value and value+delta
Video alternating_video(int w, int h, int frames, double fps, std::uint8_t value,
                        std::uint8_t delta);
// bright square translating `speed` px/frame over a dark background
Video translating_square_video(int w, int h, int frames, double fps, int speed,
                               int square = 16);
// luma(x) = 2*(x + t): linear in time, so the midpoint of two frames is exact
Video translating_ramp_video(int w, int h, int frames, double fps);
// scene A then scene B with an instantaneous cut at frame `cut`
Video hard_cut_video(int w, int h, int frames, double fps, int cut);
// same scenes blended linearly over `fade_frames` centered like the hard cut
Video cross_fade_video(int w, int h, int frames, double fps, int fade_start, int fade_frames);
Video noise_video(int w, int h, int frames, double fps, std::uint64_t seed);

std::filesystem::path write_video(const Video& video, const std::filesystem::path& dir,
                                  const std::string& name);

// --- suite fixtures ---------------------------------------------------------

// Well-formed record: `events` ground-truth events, optional human actions,
// and a full 7x6 question set with alternating polarity.
PromptRecord fixture_record(const std::string& id, const std::string& theme, int events,
                            bool with_actions, int questions_per_dimension = 6);

Suite fixture_suite(int samples = 5);

// Defaults plus an isolated cache directory; all providers stay on the
// deterministic mock backend.
Config mock_config(const std::filesystem::path& work_dir);

}  // namespace lveval::testing
