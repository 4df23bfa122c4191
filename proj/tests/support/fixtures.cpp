#include "support/fixtures.hpp"

#include <unistd.h>

#include <algorithm>
#include <atomic>
#include <random>

namespace lveval::testing {

namespace {
std::atomic<long> g_tempdir_counter{0};
}

TempDir::TempDir(const std::string& tag) {
  path_ = std::filesystem::temp_directory_path() /
          ("lveval_" + tag + "_" + std::to_string(::getpid()) + "_" +
           std::to_string(g_tempdir_counter.fetch_add(1)));
  std::filesystem::create_directories(path_);
}

TempDir::~TempDir() {
  std::error_code ec;
  std::filesystem::remove_all(path_, ec);
}

Frame gradient_frame(int w, int h, int phase) {
  Frame f(w, h);
  for (int y = 0; y < h; ++y) {
    for (int x = 0; x < w; ++x) f.at(x, y) = std::uint8_t((x * 2 + y + phase) % 200 + 20);
  }
  return f;
}

Frame checker_frame(int w, int h, int cell, int phase) {
  Frame f(w, h);
  for (int y = 0; y < h; ++y) {
    for (int x = 0; x < w; ++x) {
      bool on = (((x + phase) / cell) + (y / cell)) % 2 == 0;
      f.at(x, y) = on ? 220 : 40;
    }
  }
  return f;
}

Frame constant_frame(int w, int h, std::uint8_t value) { return Frame(w, h, value); }

Frame noise_frame(int w, int h, std::uint64_t seed) {
  Frame f(w, h);
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> dist(0, 255);
  for (auto& p : f.pixels) p = std::uint8_t(dist(rng));
  return f;
}

Video constant_video(int w, int h, int frames, double fps, std::uint8_t value) {
  Video v;
  v.fps = fps;
  for (int t = 0; t < frames; ++t) v.frames.push_back(constant_frame(w, h, value));
  return v;
}

Video alternating_video(int w, int h, int frames, double fps, std::uint8_t value,
                        std::uint8_t delta) {
  Video v;
  v.fps = fps;
  for (int t = 0; t < frames; ++t)
    v.frames.push_back(constant_frame(w, h, t % 2 == 0 ? value : std::uint8_t(value + delta)));
  return v;
}

Video translating_square_video(int w, int h, int frames, double fps, int speed, int square) {
  Video v;
  v.fps = fps;
  for (int t = 0; t < frames; ++t) {
    Frame f(w, h, 30);
    int x0 = (t * speed) % std::max(1, w - square);
    int y0 = h / 2 - square / 2;
    for (int y = y0; y < y0 + square; ++y) {
      for (int x = x0; x < x0 + square; ++x) f.at(x, y) = 220;
    }
    v.frames.push_back(std::move(f));
  }
  return v;
}

Video translating_ramp_video(int w, int h, int frames, double fps) {
  Video v;
  v.fps = fps;
  for (int t = 0; t < frames; ++t) {
    Frame f(w, h);
    for (int y = 0; y < h; ++y) {
      for (int x = 0; x < w; ++x) f.at(x, y) = std::uint8_t(2 * (x + t));
    }
    v.frames.push_back(std::move(f));
  }
  return v;
}

Video hard_cut_video(int w, int h, int frames, double fps, int cut) {
  Video v;
  v.fps = fps;
  for (int t = 0; t < frames; ++t)
    v.frames.push_back(t < cut ? gradient_frame(w, h) : checker_frame(w, h));
  return v;
}

Video cross_fade_video(int w, int h, int frames, double fps, int fade_start, int fade_frames) {
  Video v;
  v.fps = fps;
  Frame a = gradient_frame(w, h);
  Frame b = checker_frame(w, h);
  for (int t = 0; t < frames; ++t) {
    if (t < fade_start) {
      v.frames.push_back(a);
    } else if (t >= fade_start + fade_frames) {
      v.frames.push_back(b);
    } else {
      double alpha = double(t - fade_start + 1) / double(fade_frames + 1);
      Frame mix(w, h);
      for (std::size_t i = 0; i < mix.pixels.size(); ++i) {
        mix.pixels[i] =
            std::uint8_t(std::lround((1.0 - alpha) * a.pixels[i] + alpha * b.pixels[i]));
      }
      v.frames.push_back(std::move(mix));
    }
  }
  return v;
}

Video noise_video(int w, int h, int frames, double fps, std::uint64_t seed) {
  Video v;
  v.fps = fps;
  for (int t = 0; t < frames; ++t) v.frames.push_back(noise_frame(w, h, seed + std::uint64_t(t)));
  return v;
}

std::filesystem::path write_video(const Video& video, const std::filesystem::path& dir,
                                  const std::string& name) {
  std::filesystem::create_directories(dir);
  std::filesystem::path path = dir / (name + ".y4m");
  write_y4m(video, path);
  return path;
}

PromptRecord fixture_record(const std::string& id, const std::string& theme, int events,
                            bool with_actions, int questions_per_dimension) {
  PromptRecord r;
  r.id = id;
  r.theme = theme;
  auto categories = Config().theme_categories();
  if (auto it = categories.find(theme); it != categories.end()) r.category = it->second;
  r.prompt_base = "A short film " + id + " follows a subject through several connected scenes, "
                  "moving from an open outdoor space into a softer indoor setting while the "
                  "camera slowly tracks the motion.";
  r.prompt_text = r.prompt_base + " The piece should feel calm, coherent, and easy to follow.";
  for (int i = 0; i < events; ++i) {
    EventSpec e;
    e.event = "Scene " + std::to_string(i + 1) + " of " + id + " shows the subject in location " +
              std::to_string(i + 1) + ".";
    e.subject = i % 3 == 2 ? "" : "the subject";
    e.setting = "location " + std::to_string(i + 1);
    e.action = "moves through the space";
    e.camera_motion = i % 2 == 0 ? "static" : "tracking";
    r.ground_truth_events.push_back(std::move(e));
  }
  if (with_actions) {
    r.human_actions.push_back(ActionSpec{"person", "walks across the room"});
  }
  for (auto d : all_herd_dimensions()) {
    for (int q = 0; q < questions_per_dimension; ++q) {
      HerdQuestion question;
      question.dimension = d;
      bool negative = q % 2 == 1;
      question.text = negative
                          ? "Did the video fail to convey the " + to_label(d) + " aspect " +
                                std::to_string(q + 1) + " of " + id + "?"
                          : "Did the video convey the " + to_label(d) + " aspect " +
                                std::to_string(q + 1) + " of " + id + "?";
      question.polarity = negative ? Polarity::negative : Polarity::positive;
      r.herd_questions.push_back(std::move(question));
    }
  }
  return r;
}

Suite fixture_suite(int samples) {
  const char* themes[5] = {"food", "nature", "gaming", "travel", "pets"};
  Suite suite;
  suite.version = "fixture-1";
  for (int i = 0; i < samples; ++i) {
    suite.samples.push_back(fixture_record("s" + std::to_string(i + 1), themes[i % 5], 3 + i % 2,
                                           i % 2 == 0));
  }
  return suite;
}

Config mock_config(const std::filesystem::path& work_dir) {
  Config config;
  config.set("cache.dir=" + (work_dir / "cache").string());
  config.set("run.method=mock-method");
  return config;
}

}  // namespace lveval::testing
