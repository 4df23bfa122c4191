#include "lveval/temporal.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>

#include "lveval/json_util.hpp"
#include "lveval/templates.hpp"

namespace lveval {

namespace {

// Mean of the top ceil(fraction * n) values.
double top_fraction_mean(std::vector<double> values, double fraction) {
  if (values.empty()) return 0.0;
  std::size_t take = std::size_t(std::ceil(values.size() * fraction));
  take = std::clamp<std::size_t>(take, 1, values.size());
  std::partial_sort(values.begin(), values.begin() + long(take), values.end(), std::greater<>());
  double sum = 0.0;
  for (std::size_t i = 0; i < take; ++i) sum += values[i];
  return sum / double(take);
}

std::vector<long> pair_start_indices(long frame_count, int max_pairs) {
  return uniform_indices(0, frame_count - 1, max_pairs);
}

}  // namespace

MetricScore dynamic_degree(const VideoAsset& video, ProviderHub& hub, double threshold_px,
                           double top_fraction, int max_pairs) {
  if (video.frame_count < 2)
    return MetricScore::error(metric::dynamic_degree, "video has fewer than 2 frames");
  std::vector<long> starts = pair_start_indices(video.frame_count, max_pairs);
  double total = 0.0;
  for (long t : starts) {
    FlowField field = hub.flow(video.path, t + 1, t, video.sample_id);
    total += top_fraction_mean(field.magnitudes(), top_fraction);
  }
  double statistic = total / double(starts.size());
  MetricScore s = MetricScore::ok(metric::dynamic_degree, statistic,
                                  statistic > threshold_px ? 1.0 : 0.0);
  s.diagnostics["motion_statistic_px"] = std::to_string(statistic);
  s.diagnostics["threshold_px"] = std::to_string(threshold_px);
  return s;
}

MetricScore motion_smoothness(const VideoAsset& video, ProviderHub& hub,
                              int max_reconstructions) {
  if (video.frame_count < 3)
    return MetricScore::error(metric::motion_smoothness, "video has fewer than 3 frames");
  VideoFile file(video.path);
  std::vector<long> candidates;
  for (long i = 1; i + 1 < video.frame_count; i += 2) candidates.push_back(i);
  std::vector<long> picks =
      candidates.size() <= std::size_t(max_reconstructions)
          ? candidates
          : [&] {
              std::vector<long> subset;
              for (long idx : uniform_indices(0, long(candidates.size()), max_reconstructions))
                subset.push_back(candidates[std::size_t(idx)]);
              return subset;
            }();
  double total_err = 0.0;
  for (long i : picks) {
    Frame predicted = hub.interpolate(video.path, i - 1, i + 1, video.sample_id);
    Frame actual = file.frame(i);
    total_err += mean_abs_diff(predicted, actual) / 255.0;
  }
  double value = clamp01(1.0 - total_err / double(picks.size()));
  MetricScore s = MetricScore::ok(metric::motion_smoothness, value, value);
  s.diagnostics["reconstructed_frames"] = std::to_string(picks.size());
  return s;
}

MetricScore temporal_flickering(const Video& video, double static_threshold) {
  if (video.frame_count() < 2)
    return MetricScore::error(metric::temporal_flickering, "video has fewer than 2 frames");
  std::vector<double> diffs;
  diffs.reserve(std::size_t(video.frame_count() - 1));
  for (std::size_t t = 0; t + 1 < video.frames.size(); ++t)
    diffs.push_back(mean_abs_diff(video.frames[t], video.frames[t + 1]));

  std::vector<double> static_diffs;
  for (double d : diffs) {
    if (d < static_threshold) static_diffs.push_back(d);
  }
  bool fallback = static_diffs.empty();
  const std::vector<double>& used = fallback ? diffs : static_diffs;
  double mad = mean(used);
  MetricScore s =
      MetricScore::ok(metric::temporal_flickering, mad, clamp01(1.0 - mad / 255.0));
  s.diagnostics["static_pairs"] = std::to_string(static_diffs.size());
  if (fallback) s.diagnostics["note"] = "no-static-fallback";
  return s;
}

MetricScore temporal_flickering(const VideoAsset& video, double static_threshold) {
  return temporal_flickering(VideoFile(video.path).read_all(), static_threshold);
}

MetricScore warping_error(const VideoAsset& video, ProviderHub& hub, int max_pairs) {
  if (video.frame_count < 2)
    return MetricScore::error(metric::warping_error, "video has fewer than 2 frames");
  VideoFile file(video.path);
  std::vector<long> starts = pair_start_indices(video.frame_count, max_pairs);
  double total_err = 0.0;
  long scored_pairs = 0;
  for (long t : starts) {
    Frame source = file.frame(t);
    Frame target = file.frame(t + 1);
    FlowField flow = hub.flow(video.path, t + 1, t, video.sample_id);
    double err = 0.0;
    long valid = 0;
    for (int y = 0; y < target.height; ++y) {
      for (int x = 0; x < target.width; ++x) {
        std::size_t i = std::size_t(y) * target.width + x;
        double sx = x + flow.dx[i];
        double sy = y + flow.dy[i];
        if (sx < 0 || sy < 0 || sx > target.width - 1 || sy > target.height - 1) continue;
        err += std::abs(bilinear_sample(source, sx, sy) - double(target.at(x, y)));
        ++valid;
      }
    }
    if (valid == 0) continue;
    total_err += err / double(valid);
    ++scored_pairs;
  }
  if (scored_pairs == 0)
    return MetricScore::error(metric::warping_error, "no valid pixels after warping");
  double mean_err = total_err / double(scored_pairs);
  MetricScore s =
      MetricScore::ok(metric::warping_error, mean_err, clamp01(1.0 - mean_err / 255.0));
  s.diagnostics["pairs"] = std::to_string(scored_pairs);
  return s;
}

MetricScore semantic_consistency(const VideoAsset& video, ProviderHub& hub, int max_frames) {
  if (video.frame_count < 2)
    return MetricScore::error(metric::semantic_consistency, "video has fewer than 2 frames");
  VideoFile file(video.path);
  std::vector<long> indices = uniform_indices(0, video.frame_count, std::max(2, max_frames));
  std::vector<std::vector<double>> features;
  features.reserve(indices.size());
  for (long t : indices) features.push_back(hub.embed_frame(file.frame(t), t, video.sample_id));
  std::vector<double> sims;
  for (std::size_t i = 0; i + 1 < features.size(); ++i)
    sims.push_back(cosine(features[i], features[i + 1]));
  double value = clamp01((mean(sims) + 1.0) / 2.0);
  MetricScore s = MetricScore::ok(metric::semantic_consistency, mean(sims), value);
  s.diagnostics["frames_sampled"] = std::to_string(indices.size());
  return s;
}

std::vector<long> detect_transitions(const VideoAsset& video, ProviderHub& hub, int k) {
  std::vector<long> raw = hub.scene_transitions(video.path, video.sample_id);
  std::sort(raw.begin(), raw.end());
  std::vector<long> kept;
  for (long t : raw) {
    if (kept.empty() || t - kept.back() > k) kept.push_back(t);
  }
  return kept;
}

std::vector<double> transition_similarity_sequence(const VideoFile& video, long transition,
                                                   const TransitionParams& params,
                                                   ProviderHub& hub, bool* truncated) {
  long frame_count = video.frame_count();
  long half = std::min<long>({long(params.k), transition - 1, frame_count - transition});
  if (truncated) *truncated = half < params.k;
  if (half < 1) return {};
  long lo = transition - half;
  long hi = transition + half;  // exclusive; 2*half frames in window

  // Frames lo-2 .. hi-1 provide the previous-frame context.
  long ctx_lo = std::max<long>(0, lo - 2);
  std::map<long, Frame> frames;
  for (long j = ctx_lo; j < hi; ++j) frames[j] = video.frame(j);

  std::map<long, std::vector<double>> embeddings;
  for (long j = lo - 1; j < hi; ++j)
    embeddings[j] = hub.embed_frame(frames.at(j), j);

  // Mean displacement of pair (m-1 -> m).
  std::map<long, std::pair<double, double>> mean_flow;
  for (long m = std::max<long>(1, lo - 1); m < hi; ++m) {
    FlowField f = hub.flow(video.path(), m, m - 1);
    mean_flow[m] = f.mean_vector();
  }

  std::vector<double> mae_raw, ssim_raw, feat_raw, mc_raw;
  for (long j = lo; j < hi; ++j) {
    const Frame& cur = frames.at(j);
    const Frame& prev = frames.at(j - 1);
    mae_raw.push_back(mae_similarity(cur, prev));
    ssim_raw.push_back(ssim(cur, prev));
    feat_raw.push_back(cosine(embeddings.at(j), embeddings.at(j - 1)));
    auto u1 = mean_flow.at(j);
    auto u0 = mean_flow.count(j - 1) ? mean_flow.at(j - 1) : u1;
    mc_raw.push_back(cosine({u1.first, u1.second}, {u0.first, u0.second}));
  }

  std::vector<double> mae_n = minmax_normalize(mae_raw);
  std::vector<double> ssim_n = minmax_normalize(ssim_raw);
  std::vector<double> feat_n = minmax_normalize(feat_raw);
  std::vector<double> mc_n = minmax_normalize(mc_raw);
  std::vector<double> sequence(mae_n.size());
  for (std::size_t i = 0; i < sequence.size(); ++i) {
    sequence[i] = params.alpha[0] * mae_n[i] + params.alpha[1] * ssim_n[i] +
                  params.alpha[2] * feat_n[i] + params.alpha[3] * mc_n[i];
  }
  return sequence;
}

double smoothness_from_sequence(const std::vector<double>& sequence, double b, double c) {
  if (sequence.empty()) return 1.0;
  double total = 0.0;
  for (double s : sequence) total += s;
  if (total <= 0.0) return 1.0;  // all-zero similarity carries no variance signal
  std::vector<double> normalized(sequence.size());
  for (std::size_t i = 0; i < sequence.size(); ++i) normalized[i] = sequence[i] / total;
  double variance = population_variance(normalized);
  double abruptness = variance * b / (variance * b + c);
  return 1.0 - abruptness;
}

MetricScore transition_smoothness_at(const VideoAsset& video, const std::vector<long>& transitions,
                                     ProviderHub& hub, const TransitionParams& params,
                                     json* artifacts) {
  if (transitions.empty()) {
    MetricScore s = MetricScore::ok(metric::transition_smoothness, 1.0, 1.0);
    s.diagnostics["note"] = "no-transitions";
    if (artifacts) *artifacts = json{{"transitions", json::array()}};
    return s;
  }
  VideoFile file(video.path);
  json items = json::array();
  std::vector<double> scores;
  int truncated_count = 0;
  for (long t : transitions) {
    bool truncated = false;
    std::vector<double> seq = transition_similarity_sequence(file, t, params, hub, &truncated);
    if (truncated) ++truncated_count;
    if (seq.empty()) continue;
    double smooth = smoothness_from_sequence(seq, params.b, params.c);
    scores.push_back(smooth);
    items.push_back(json{{"frame", t},
                         {"sequence", seq},
                         {"abruptness", 1.0 - smooth},
                         {"smoothness", smooth},
                         {"truncated", truncated}});
  }
  MetricScore s;
  if (scores.empty()) {
    s = MetricScore::ok(metric::transition_smoothness, 1.0, 1.0);
    s.diagnostics["note"] = "no-usable-windows";
  } else {
    double value = clamp01(mean(scores));
    s = MetricScore::ok(metric::transition_smoothness, value, value);
    s.diagnostics["transitions"] = std::to_string(scores.size());
  }
  if (truncated_count > 0) s.diagnostics["truncated_windows"] = std::to_string(truncated_count);
  if (artifacts) *artifacts = json{{"transitions", items}};
  return s;
}

MetricScore transition_smoothness(const VideoAsset& video, ProviderHub& hub,
                                  const TransitionParams& params) {
  return transition_smoothness_at(video, detect_transitions(video, hub, params.k), hub, params);
}

MetricScore human_action_score(const PromptRecord& record, const VideoAsset& video,
                               ProviderHub& hub) {
  if (record.human_actions.empty())
    return MetricScore::not_applicable(metric::human_action, "prompt has no human actions");
  double total = 0.0;
  int invalid_answers = 0;
  for (const auto& action : record.human_actions) {
    std::string action_text = action.subject + " " + action.action;
    std::string occurrence_q = "Did the " + action.subject + " " + action.action + " in the video?";
    std::string occ_prompt = render_template(templates::action_occurrence_qa.text,
                                             {{"question_text", occurrence_q}});
    std::string occ = hub.answer(video.path, occurrence_q, occ_prompt,
                                 templates::action_occurrence_qa.version, "yes_no",
                                 video.sample_id);
    int yes_count = 0;
    std::string occ_token = canonical_token(occ);
    if (occ_token != "yes" && occ_token != "no") ++invalid_answers;
    if (occ_token == "yes") ++yes_count;
    for (const char* question : templates::action_smoothness_questions) {
      std::string prompt = render_template(
          templates::action_smoothness_qa.text,
          {{"action_text", action_text}, {"question_text", question}});
      std::string ans = hub.answer(video.path, std::string(question) + " [" + action_text + "]",
                                   prompt, templates::action_smoothness_qa.version, "yes_no",
                                   video.sample_id);
      std::string token = canonical_token(ans);
      if (token != "yes" && token != "no") ++invalid_answers;
      if (token == "yes") ++yes_count;
    }
    total += yes_count / 4.0;
  }
  double value = clamp01(total / double(record.human_actions.size()));
  MetricScore s = MetricScore::ok(metric::human_action, value, value);
  s.diagnostics["actions"] = std::to_string(record.human_actions.size());
  if (invalid_answers > 0)
    s.diagnostics["non_binary_answers_treated_as_no"] = std::to_string(invalid_answers);
  return s;
}

std::vector<EventClip> ground_event_clips(const VideoAsset& video,
                                          const std::vector<EventSpec>& events, ProviderHub& hub) {
  std::vector<EventClip> clips;
  long n = long(events.size());
  if (n == 0) return clips;
  long frames = video.frame_count;
  for (long i = 0; i < n; ++i) {
    EventClip clip;
    clip.event_index = int(i);
    GroundResult g;
    try {
      g = hub.ground(video.path, events[std::size_t(i)].event, i, n, frames, video.fps,
                     video.sample_id);
    } catch (const ProviderError&) {
      g.ok = false;
    }
    if (g.ok) {
      clip.start_frame = std::clamp(g.start_frame, 0L, frames - 1);
      clip.end_frame = std::clamp(g.end_frame, clip.start_frame + 1, frames);
      clip.grounded = true;
    } else {
      clip.start_frame = i * frames / n;
      clip.end_frame = (i + 1) * frames / n;
      clip.grounded = false;
    }
    if (clip.end_frame <= clip.start_frame) {
      clip.start_frame = i * frames / n;
      clip.end_frame = (i + 1) * frames / n;
      clip.grounded = false;
    }
    clips.push_back(clip);
  }
  return clips;
}

TrackStore segment_tracks(const VideoAsset& video, const std::vector<EventClip>& clips,
                          const std::vector<EventSpec>& events, ProviderHub& hub,
                          int frames_per_clip, int dilate_radius) {
  TrackStore store;
  VideoFile file(video.path);
  int skipped_frames = 0;
  for (const auto& clip : clips) {
    const std::string& subject = events[std::size_t(clip.event_index)].subject;
    for (long t : uniform_indices(clip.start_frame, clip.end_frame, frames_per_clip)) {
      Frame frame = file.frame(t);
      Frame subject_union(frame.width, frame.height, 0);
      if (!subject.empty()) {
        SegmentResult seg;
        bool seg_ok = true;
        try {
          seg = hub.segment(video.path, t, subject, video.sample_id);
        } catch (const ProviderError&) {
          seg_ok = false;
          ++skipped_frames;
        }
        if (seg_ok && seg.found) {
          Frame crop = masked_crop(frame, seg.mask);
          if (!crop.pixels.empty()) {
            TrackEntry entry;
            entry.event_index = clip.event_index;
            entry.frame_index = t;
            entry.feature = hub.embed_frame(crop, t, video.sample_id);
            entry.coverage = seg.coverage;
            store.subjects[subject].push_back(std::move(entry));
            subject_union = dilate_mask(seg.mask, dilate_radius);
          }
        }
      }
      Frame bg = apply_mask(frame, mask_complement(subject_union));
      TrackEntry bg_entry;
      bg_entry.event_index = clip.event_index;
      bg_entry.frame_index = t;
      bg_entry.feature = hub.embed_frame(bg, t, video.sample_id);
      bg_entry.coverage = 1.0 - mask_coverage(subject_union);
      store.background[clip.event_index].push_back(std::move(bg_entry));
    }
  }
  if (skipped_frames > 0) store.notes["segmenter_skipped_frames"] = std::to_string(skipped_frames);
  return store;
}

namespace {

// Mean cosine over consecutive appearances; nullopt when fewer than two.
std::optional<double> consecutive_mean(const std::vector<const TrackEntry*>& entries) {
  if (entries.size() < 2) return std::nullopt;
  std::vector<double> sims;
  for (std::size_t i = 0; i + 1 < entries.size(); ++i)
    sims.push_back(cosine(entries[i]->feature, entries[i + 1]->feature));
  return mean(sims);
}

std::map<int, std::vector<const TrackEntry*>> by_event(const std::vector<TrackEntry>& entries) {
  std::map<int, std::vector<const TrackEntry*>> out;
  for (const auto& e : entries) out[e.event_index].push_back(&e);
  for (auto& [event, list] : out) {
    std::sort(list.begin(), list.end(),
              [](const TrackEntry* a, const TrackEntry* b) { return a->frame_index < b->frame_index; });
  }
  return out;
}

MetricScore weighted_intra(const char* metric_id,
                           const std::map<int, std::vector<std::optional<double>>>& event_scores,
                           const std::vector<EventClip>& clips) {
  double weighted_sum = 0.0;
  double weight_total = 0.0;
  for (const auto& clip : clips) {
    auto it = event_scores.find(clip.event_index);
    if (it == event_scores.end()) continue;
    std::vector<double> valid;
    for (const auto& s : it->second) {
      if (s) valid.push_back(*s);
    }
    if (valid.empty()) continue;
    weighted_sum += double(clip.length()) * mean(valid);
    weight_total += double(clip.length());
  }
  if (weight_total <= 0.0)
    return MetricScore::not_applicable(metric_id, "no element appears twice within an event");
  double raw = weighted_sum / weight_total;
  return MetricScore::ok(metric_id, raw, clamp01(raw));
}

}  // namespace

ConsistencyScores intra_event_consistency(const TrackStore& tracks,
                                          const std::vector<EventClip>& clips) {
  std::map<int, std::vector<std::optional<double>>> subject_scores;
  for (const auto& [label, entries] : tracks.subjects) {
    for (const auto& [event, list] : by_event(entries))
      subject_scores[event].push_back(consecutive_mean(list));
  }
  std::map<int, std::vector<std::optional<double>>> background_scores;
  for (const auto& [event, entries] : tracks.background) {
    std::vector<const TrackEntry*> list;
    for (const auto& e : entries) list.push_back(&e);
    std::sort(list.begin(), list.end(),
              [](const TrackEntry* a, const TrackEntry* b) { return a->frame_index < b->frame_index; });
    background_scores[event].push_back(consecutive_mean(list));
  }
  return {weighted_intra(metric::intra_event_subject, subject_scores, clips),
          weighted_intra(metric::intra_event_background, background_scores, clips)};
}

namespace {

std::optional<double> cross_event_mean(const std::map<int, std::vector<const TrackEntry*>>& events) {
  if (events.size() < 2) return std::nullopt;
  std::vector<int> keys;
  for (const auto& [event, list] : events) keys.push_back(event);
  double pair_total = 0.0;
  long pair_count = 0;
  for (std::size_t a = 0; a < keys.size(); ++a) {
    for (std::size_t b = a + 1; b < keys.size(); ++b) {
      const auto& left = events.at(keys[a]);
      const auto& right = events.at(keys[b]);
      double sum = 0.0;
      for (const auto* x : left) {
        for (const auto* y : right) sum += cosine(x->feature, y->feature);
      }
      pair_total += sum / (double(left.size()) * double(right.size()));
      ++pair_count;
    }
  }
  return pair_total / double(pair_count);
}

}  // namespace

ConsistencyScores inter_event_consistency(const TrackStore& tracks) {
  std::vector<double> subject_values;
  for (const auto& [label, entries] : tracks.subjects) {
    if (auto v = cross_event_mean(by_event(entries))) subject_values.push_back(*v);
  }
  MetricScore subject =
      subject_values.empty()
          ? MetricScore::not_applicable(metric::inter_event_subject,
                                        "no subject appears in two or more events")
          : MetricScore::ok(metric::inter_event_subject, mean(subject_values),
                            clamp01(mean(subject_values)));

  std::map<int, std::vector<const TrackEntry*>> bg_events;
  for (const auto& [event, entries] : tracks.background) {
    for (const auto& e : entries) bg_events[event].push_back(&e);
  }
  std::optional<double> bg = cross_event_mean(bg_events);
  MetricScore background =
      !bg ? MetricScore::not_applicable(metric::inter_event_background,
                                        "background present in fewer than two events")
          : MetricScore::ok(metric::inter_event_background, *bg, clamp01(*bg));
  return {subject, background};
}

void write_track_store(const TrackStore& tracks, const std::filesystem::path& dir) {
  std::filesystem::create_directories(dir);
  std::ofstream bin(dir / "tracks.bin", std::ios::binary);
  json manifest;
  manifest["subjects"] = json::array();
  manifest["background"] = json::array();
  std::size_t offset = 0;
  auto dump_entry = [&](const TrackEntry& e, const std::string& label, json& bucket) {
    std::vector<float> v(e.feature.begin(), e.feature.end());
    bin.write(reinterpret_cast<const char*>(v.data()), std::streamsize(v.size() * sizeof(float)));
    bucket.push_back(json{{"subject_label", label},
                          {"event_index", e.event_index},
                          {"frame_index", e.frame_index},
                          {"coverage", e.coverage},
                          {"offset", offset},
                          {"length", v.size()}});
    offset += v.size() * sizeof(float);
  };
  for (const auto& [label, entries] : tracks.subjects) {
    for (const auto& e : entries) dump_entry(e, label, manifest["subjects"]);
  }
  for (const auto& [event, entries] : tracks.background) {
    for (const auto& e : entries) dump_entry(e, "background", manifest["background"]);
  }
  manifest["dtype"] = "float32-le";
  if (!tracks.notes.empty()) manifest["notes"] = tracks.notes;
  std::ofstream(dir / "tracks.json") << manifest.dump(2) << "\n";
}

std::map<std::string, MetricScore> evaluate_temporal(const PromptRecord& record,
                                                     const VideoAsset& video, ProviderHub& hub,
                                                     const Config& config,
                                                     const std::filesystem::path& artifacts_dir) {
  std::map<std::string, MetricScore> out;
  auto guard = [&](const char* id, auto&& fn) {
    try {
      out[id] = fn();
    } catch (const std::exception& e) {
      out[id] = MetricScore::error(id, e.what());
    }
  };

  guard(metric::dynamic_degree, [&] {
    return dynamic_degree(video, hub, config.number("metrics.dynamic.threshold_px", 1.0),
                          config.number("metrics.dynamic.top_fraction", 0.05),
                          config.integer("metrics.dynamic.max_pairs", 16));
  });
  guard(metric::motion_smoothness, [&] {
    return motion_smoothness(video, hub, config.integer("metrics.motion.max_reconstructions", 32));
  });
  guard(metric::temporal_flickering, [&] {
    return temporal_flickering(video, config.number("metrics.flicker.static_threshold", 2.0));
  });
  guard(metric::warping_error, [&] {
    return warping_error(video, hub, config.integer("metrics.warp.max_pairs", 16));
  });
  guard(metric::semantic_consistency, [&] {
    return semantic_consistency(video, hub, config.integer("metrics.semantic.max_frames", 16));
  });

  TransitionParams params;
  params.k = config.integer("metrics.transition.k", 8);
  auto alpha = config.numbers("metrics.transition.alpha");
  if (alpha.size() == 4) std::copy(alpha.begin(), alpha.end(), params.alpha.begin());
  params.b = config.number("metrics.transition.b", 1.0e4);
  params.c = config.number("metrics.transition.c", 1.0);
  json transition_artifacts;
  guard(metric::transition_smoothness, [&] {
    auto transitions = detect_transitions(video, hub, params.k);
    return transition_smoothness_at(video, transitions, hub, params, &transition_artifacts);
  });

  guard(metric::human_action, [&] { return human_action_score(record, video, hub); });

  std::vector<EventClip> clips;
  TrackStore tracks;
  try {
    clips = ground_event_clips(video, record.ground_truth_events, hub);
    tracks = segment_tracks(video, clips, record.ground_truth_events, hub,
                            config.integer("metrics.tracks.frames_per_clip", 16),
                            config.integer("metrics.tracks.dilate_radius", 2));
    ConsistencyScores intra = intra_event_consistency(tracks, clips);
    ConsistencyScores inter = inter_event_consistency(tracks);
    out[metric::intra_event_subject] = intra.subject;
    out[metric::intra_event_background] = intra.background;
    out[metric::inter_event_subject] = inter.subject;
    out[metric::inter_event_background] = inter.background;
  } catch (const std::exception& e) {
    for (const char* id : {metric::intra_event_subject, metric::intra_event_background,
                           metric::inter_event_subject, metric::inter_event_background}) {
      out[id] = MetricScore::error(id, e.what());
    }
  }

  if (!artifacts_dir.empty()) {
    std::filesystem::create_directories(artifacts_dir);
    if (!transition_artifacts.is_null())
      std::ofstream(artifacts_dir / "transitions.json") << transition_artifacts.dump(2) << "\n";
    json clip_json = json::array();
    for (const auto& c : clips) {
      clip_json.push_back(json{{"event_index", c.event_index},
                               {"start_frame", c.start_frame},
                               {"end_frame", c.end_frame},
                               {"source", c.grounded ? "grounded" : "fallback-uniform"}});
    }
    std::ofstream(artifacts_dir / "event_clips.json") << clip_json.dump(2) << "\n";
    write_track_store(tracks, artifacts_dir);
  }
  return out;
}

}  // namespace lveval
