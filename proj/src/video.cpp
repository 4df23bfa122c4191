#include "lveval/video.hpp"

#include <cmath>
#include <cstring>
#include <sstream>

namespace lveval {

namespace {

struct Y4mHeader {
  int width = 0;
  int height = 0;
  double fps = 0.0;
  std::string colorspace = "C420jpeg";
};

Y4mHeader parse_header(const std::string& line, const std::string& path) {
  if (line.rfind("YUV4MPEG2", 0) != 0)
    throw InputError("not a YUV4MPEG2 stream: " + path);
  Y4mHeader h;
  std::stringstream ss(line);
  std::string tok;
  ss >> tok;  // magic
  while (ss >> tok) {
    if (tok.size() < 2) continue;
    switch (tok[0]) {
      case 'W': h.width = std::stoi(tok.substr(1)); break;
      case 'H': h.height = std::stoi(tok.substr(1)); break;
      case 'F': {
        auto colon = tok.find(':');
        double num = std::stod(tok.substr(1, colon - 1));
        double den = colon == std::string::npos ? 1.0 : std::stod(tok.substr(colon + 1));
        if (den > 0) h.fps = num / den;
        break;
      }
      case 'C': h.colorspace = tok; break;
      default: break;  // interlacing/aspect tags are irrelevant for luma
    }
  }
  if (h.width <= 0 || h.height <= 0 || h.fps <= 0)
    throw InputError("y4m header missing W/H/F: " + path);
  return h;
}

std::size_t chroma_plane_bytes(const std::string& colorspace, int w, int h) {
  if (colorspace.rfind("C420", 0) == 0) return 2 * std::size_t((w / 2)) * (h / 2);
  if (colorspace.rfind("C422", 0) == 0) return 2 * std::size_t((w / 2)) * h;
  if (colorspace.rfind("C444", 0) == 0) return 2 * std::size_t(w) * h;
  if (colorspace.rfind("Cmono", 0) == 0) return 0;
  throw InputError("unsupported y4m colorspace: " + colorspace);
}

}  // namespace

void write_y4m(const Video& video, const std::filesystem::path& path) {
  if (video.frames.empty() || video.fps <= 0)
    throw InputError("cannot write empty video: " + path.string());
  std::ofstream out(path, std::ios::binary);
  if (!out) throw InputError("cannot open for writing: " + path.string());

  int w = video.width();
  int h = video.height();
  double fps = video.fps;
  long num = std::lround(fps);
  long den = 1;
  if (std::abs(fps - double(num)) > 1e-9) {
    num = std::lround(fps * 1000.0);
    den = 1000;
  }
  out << "YUV4MPEG2 W" << w << " H" << h << " F" << num << ":" << den
      << " Ip A1:1 C420jpeg\n";
  std::vector<std::uint8_t> chroma(std::size_t(w / 2) * (h / 2), 128);
  for (const auto& f : video.frames) {
    if (f.width != w || f.height != h)
      throw InputError("frame size mismatch while writing " + path.string());
    out << "FRAME\n";
    out.write(reinterpret_cast<const char*>(f.pixels.data()), std::streamsize(f.pixels.size()));
    out.write(reinterpret_cast<const char*>(chroma.data()), std::streamsize(chroma.size()));
    out.write(reinterpret_cast<const char*>(chroma.data()), std::streamsize(chroma.size()));
  }
}

VideoFile::VideoFile(const std::filesystem::path& path)
    : path_(path.string()), in_(path, std::ios::binary) {
  if (!in_) throw InputError("cannot open video: " + path_);
  std::string header_line;
  if (!std::getline(in_, header_line)) throw InputError("empty video file: " + path_);
  Y4mHeader h = parse_header(header_line, path_);
  width_ = h.width;
  height_ = h.height;
  fps_ = h.fps;
  luma_bytes_ = std::size_t(width_) * height_;
  chroma_bytes_ = chroma_plane_bytes(h.colorspace, width_, height_);

  std::string frame_line;
  while (std::getline(in_, frame_line)) {
    if (frame_line.rfind("FRAME", 0) != 0)
      throw InputError("corrupt y4m frame marker in " + path_);
    offsets_.push_back(in_.tellg());
    in_.seekg(std::streamoff(luma_bytes_ + chroma_bytes_), std::ios::cur);
    if (!in_) throw InputError("truncated y4m frame in " + path_);
    // peek to distinguish EOF from the next FRAME header
    if (in_.peek() == EOF) break;
  }
  in_.clear();
  if (offsets_.empty()) throw InputError("video has no frames: " + path_);
}

Frame VideoFile::frame(long index) const {
  if (index < 0 || index >= frame_count())
    throw InputError("frame index out of range in " + path_);
  Frame f(width_, height_);
  in_.clear();
  in_.seekg(offsets_[std::size_t(index)]);
  in_.read(reinterpret_cast<char*>(f.pixels.data()), std::streamsize(luma_bytes_));
  if (!in_) throw InputError("failed to read frame from " + path_);
  return f;
}

Video VideoFile::read_all() const {
  Video v;
  v.fps = fps_;
  v.frames.reserve(std::size_t(frame_count()));
  for (long i = 0; i < frame_count(); ++i) v.frames.push_back(frame(i));
  return v;
}

VideoAsset VideoFile::asset(const std::string& sample_id) const {
  VideoAsset a;
  a.sample_id = sample_id;
  a.path = path_;
  a.fps = fps_;
  a.frame_count = frame_count();
  return a;
}

Video load_video(const std::filesystem::path& path) { return VideoFile(path).read_all(); }

std::vector<long> one_per_second_indices(double fps, long frame_count) {
  std::vector<long> out;
  if (fps <= 0 || frame_count <= 0) return out;
  double duration = frame_count / fps;
  for (double t = 0.0; t < duration || out.empty(); t += 1.0) {
    long idx = std::lround(t * fps);
    if (idx >= frame_count) idx = frame_count - 1;
    if (out.empty() || out.back() != idx) out.push_back(idx);
    if (t >= duration) break;
  }
  return out;
}

std::vector<std::pair<long, long>> partition_clips(double fps, long frame_count,
                                                   double max_clip_s) {
  std::vector<std::pair<long, long>> clips;
  if (frame_count <= 0) return clips;
  double duration = fps > 0 ? frame_count / fps : 0.0;
  long k = std::max<long>(1, long(std::ceil(duration / max_clip_s)));
  // ceil alone leaves clips of exactly max_clip_s at integer multiples
  if (duration > max_clip_s && duration / double(k) >= max_clip_s) ++k;
  if (k > frame_count) k = frame_count;
  for (long i = 0; i < k; ++i) {
    long begin = std::lround(double(i) * frame_count / double(k));
    long end = std::lround(double(i + 1) * frame_count / double(k));
    if (end > begin) clips.emplace_back(begin, end);
  }
  return clips;
}

std::vector<long> uniform_indices(long begin, long end, int max_count) {
  std::vector<long> out;
  long n = end - begin;
  if (n <= 0 || max_count <= 0) return out;
  if (n <= max_count) {
    for (long i = begin; i < end; ++i) out.push_back(i);
    return out;
  }
  if (max_count == 1) return {begin};
  for (int i = 0; i < max_count; ++i) {
    long idx = begin + std::lround(double(i) * (n - 1) / double(max_count - 1));
    if (out.empty() || out.back() != idx) out.push_back(idx);
  }
  return out;
}

}  // namespace lveval
