// Copyright 2026 The sigverify Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "sigv/synth.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>

#include "sigv/error.hpp"
#include "sigv/rng.hpp"
#include "sigv/text.hpp"

namespace sigv {

namespace {

constexpr double kPi = 3.14159265358979323846;
constexpr int kPositionComponents = 6;
constexpr int kPressureComponents = 3;
constexpr double kPressureLow = 30.0;
constexpr double kPressureHigh = 255.0;

double eval_components(const std::vector<SineComponent>& comps, double t_s) {
  double acc = 0.0;
  for (const SineComponent& c : comps)
    acc += c.amplitude * std::sin(2.0 * kPi * c.frequency_hz * t_s + c.phase);
  return acc;
}

std::uint64_t signature_seed(const GenConfig& cfg, std::string_view stream, int user,
                             const std::string& sensor, int session, int index) {
  return seed_chain(cfg.master_seed,
                    {hash_label(stream), static_cast<std::uint64_t>(user),
                     hash_label(sensor), static_cast<std::uint64_t>(session),
                     static_cast<std::uint64_t>(index)});
}

const SensorProfile& profile_for(const GenConfig& cfg, const std::string& sensor) {
  if (sensor == cfg.sensor_a.name) return cfg.sensor_a;
  if (sensor == cfg.sensor_b.name) return cfg.sensor_b;
  raise(ErrorCode::InvalidConfig, "unknown sensor '" + sensor + "'");
}

struct SessionShift {
  double amplitude = 0.0;
  double phase = 0.0;
  double duration = 0.0;
};

// Systematic per-(user, session) drift shared by both sensors.
SessionShift session_offsets(const GenConfig& cfg, int user, int session) {
  Rng rng(seed_chain(cfg.master_seed,
                     {hash_label("session"), static_cast<std::uint64_t>(user),
                      static_cast<std::uint64_t>(session)}));
  SessionShift s;
  s.amplitude = cfg.session_shift * rng.normal();
  s.phase = cfg.session_shift * rng.normal() * (kPi / 2.0);
  s.duration = cfg.session_shift * rng.normal() * 0.5;
  return s;
}

std::vector<SineComponent> perturb(const std::vector<SineComponent>& comps,
                                   double jitter, const SessionShift& shift, Rng& rng) {
  std::vector<SineComponent> out;
  out.reserve(comps.size());
  for (const SineComponent& c : comps) {
    SineComponent p;
    p.amplitude = c.amplitude * (1.0 + jitter * rng.normal() + shift.amplitude);
    p.frequency_hz = c.frequency_hz * (1.0 + 0.25 * jitter * rng.normal());
    p.phase = c.phase + jitter * rng.normal() * (kPi / 2.0) + shift.phase;
    out.push_back(p);
  }
  return out;
}

std::vector<SineComponent> normalize_pressure(std::vector<SineComponent> comps) {
  double total = 0.0;
  for (const SineComponent& c : comps) total += std::abs(c.amplitude);
  if (total <= 0.0) total = 1.0;
  for (SineComponent& c : comps) c.amplitude /= total;
  return comps;
}

Trajectory realize(const UserTemplate& tmpl, double jitter, const SessionShift& shift,
                   double warp, Rng& rng) {
  Trajectory t;
  t.x_components = perturb(tmpl.x_components, jitter, shift, rng);
  t.y_components = perturb(tmpl.y_components, jitter, shift, rng);
  t.pressure_components =
      normalize_pressure(perturb(tmpl.pressure_components, jitter, shift, rng));
  t.duration_s = std::clamp(
      tmpl.duration_s * (1.0 + 0.5 * jitter * rng.normal() + shift.duration), 1.5, 7.0);
  t.warp_strength = warp;
  return t;
}

}  // namespace

Trajectory::Point Trajectory::evaluate(double t_s) const {
  double s = duration_s > 0.0 ? t_s / duration_s : 0.0;
  s = std::clamp(s, 0.0, 1.0);
  if (warp_strength != 0.0) s += (warp_strength / kPi) * std::sin(kPi * s);
  const double t = s * duration_s;
  Point p;
  p.x = eval_components(x_components, t);
  p.y = eval_components(y_components, t);
  const double envelope = eval_components(pressure_components, t);  // in [-1, 1]
  p.pressure = kPressureLow + (kPressureHigh - kPressureLow) * (envelope + 1.0) / 2.0;
  return p;
}

Trajectory UserTemplate::ideal() const {
  Trajectory t;
  t.duration_s = duration_s;
  t.x_components = x_components;
  t.y_components = y_components;
  t.pressure_components = pressure_components;
  return t;
}

CorpusLayout GenConfig::layout() const {
  CorpusLayout layout;
  layout.n_users = n_users;
  layout.sensors = {sensor_a.name, sensor_b.name};
  return layout;
}

void validate_gen_config(const GenConfig& cfg) {
  if (cfg.n_users < 2)
    raise(ErrorCode::InvalidConfig,
          "n_users must be >= 2 so every user has a distinct forger");
  if (!(cfg.genuine_jitter > 0.0))
    raise(ErrorCode::InvalidConfig, "genuine_jitter must be positive");
  if (!(cfg.forgery_jitter > cfg.genuine_jitter))
    raise(ErrorCode::InvalidConfig, "forgery_jitter must exceed genuine_jitter");
  if (cfg.session_shift < 0.0)
    raise(ErrorCode::InvalidConfig, "session_shift must be >= 0");
  if (cfg.time_warp_strength < 0.0 || cfg.time_warp_strength >= 1.0)
    raise(ErrorCode::InvalidConfig, "time_warp_strength must lie in [0,1)");
  validate_profile(cfg.sensor_a);
  validate_profile(cfg.sensor_b);
  if (cfg.sensor_a.name == cfg.sensor_b.name || cfg.sensor_a.name.empty())
    raise(ErrorCode::InvalidConfig, "sensor profiles need distinct names");
}

UserTemplate make_user_template(const GenConfig& cfg, int user_id) {
  Rng rng(seed_chain(cfg.master_seed,
                     {hash_label("template"), static_cast<std::uint64_t>(user_id)}));
  UserTemplate tmpl;
  tmpl.user_id = user_id;
  tmpl.duration_s = rng.uniform(2.0, 6.0);
  for (int axis = 0; axis < 2; ++axis) {
    std::vector<SineComponent>& comps =
        axis == 0 ? tmpl.x_components : tmpl.y_components;
    for (int k = 0; k < kPositionComponents; ++k) {
      SineComponent c;
      c.amplitude = rng.uniform(5.0, 35.0);
      c.frequency_hz = rng.uniform(0.5, 4.0);
      c.phase = rng.uniform(0.0, 2.0 * kPi);
      comps.push_back(c);
    }
  }
  for (int k = 0; k < kPressureComponents; ++k) {
    SineComponent c;
    c.amplitude = rng.uniform(0.2, 1.0);
    c.frequency_hz = rng.uniform(0.2, 1.2);
    c.phase = rng.uniform(0.0, 2.0 * kPi);
    tmpl.pressure_components.push_back(c);
  }
  tmpl.pressure_components = normalize_pressure(std::move(tmpl.pressure_components));
  return tmpl;
}

RawSignature simulate_sensor(const Trajectory& trajectory, const SensorProfile& profile,
                             std::uint64_t seed, const SignatureMeta& meta) {
  validate_profile(profile);
  Rng rng(seed);
  RawSignature raw;
  raw.meta = meta;

  const double base_period = 1.0 / profile.mean_rate_hz;
  const int max_level = std::min(profile.pressure_levels - 1, 255);
  double t = 0.0;
  for (int k = 0; t <= trajectory.duration_s; ++k) {
    const Trajectory::Point pt = trajectory.evaluate(t);
    PenSample s;
    s.t_ms = t * 1000.0;
    s.x = pt.x;
    s.y = pt.y;
    s.p = static_cast<int>(
        std::clamp<long>(std::lround(pt.pressure), 0L, static_cast<long>(max_level)));
    raw.samples.push_back(s);

    double period =
        base_period * (1.0 + profile.period_oscillation * std::sin(2.0 * kPi * k / 16.0) +
                       profile.period_noise * rng.normal());
    period = std::max(period, 0.05 * base_period);  // keep time strictly increasing
    t += period;
  }
  return raw;
}

RawSignature generate_genuine(const GenConfig& cfg, int user, const std::string& sensor,
                              int session, int index) {
  validate_gen_config(cfg);
  const UserTemplate tmpl = make_user_template(cfg, user);
  const std::uint64_t seed = signature_seed(cfg, "genuine", user, sensor, session, index);
  Rng rng(seed);
  const Trajectory traj =
      realize(tmpl, cfg.genuine_jitter, session_offsets(cfg, user, session), 0.0, rng);

  SignatureMeta meta;
  meta.user = user;
  meta.session = session;
  meta.index = index;
  meta.sensor = sensor;
  meta.kind = Kind::genuine;
  return simulate_sensor(traj, profile_for(cfg, sensor),
                         seed_combine(seed, hash_label("capture")), meta);
}

int forger_for(const GenConfig& cfg, int target_user, int forgery_session) {
  // Cycle through the other users; never the target itself.
  const int step = 1 + (forgery_session - 1) % (cfg.n_users - 1);
  return 1 + (target_user - 1 + step) % cfg.n_users;
}

RawSignature synthesize_forgery(const GenConfig& cfg, int target_user, int forger_id,
                                const std::string& sensor, int session, int index) {
  validate_gen_config(cfg);
  if (forger_id == target_user)
    raise(ErrorCode::SelfForgery,
          "user " + std::to_string(target_user) + " cannot forge their own signature");

  const UserTemplate tmpl = make_user_template(cfg, target_user);
  const std::uint64_t seed =
      signature_seed(cfg, "forgery", target_user, sensor, session, index);
  Rng rng(seed);
  // The forger imitates the template, not a specific session: no session
  // offsets enter here.
  const double warp = cfg.time_warp_strength * rng.uniform(-1.0, 1.0);
  const Trajectory traj = realize(tmpl, cfg.forgery_jitter, SessionShift{}, warp, rng);

  SignatureMeta meta;
  meta.user = target_user;
  meta.session = session;
  meta.index = index;
  meta.sensor = sensor;
  meta.kind = Kind::skilled_forgery;
  meta.forger = forger_id;
  return simulate_sensor(traj, profile_for(cfg, sensor),
                         seed_combine(seed, hash_label("capture")), meta);
}

RawSignature regenerate_signature(const GenConfig& cfg, const SignatureKey& key) {
  if (key.kind == Kind::genuine)
    return generate_genuine(cfg, key.user, key.sensor, key.session, key.index);
  return synthesize_forgery(cfg, key.user, forger_for(cfg, key.user, key.session),
                            key.sensor, key.session, key.index);
}

Corpus generate_corpus(const GenConfig& cfg) {
  validate_gen_config(cfg);
  const CorpusLayout layout = cfg.layout();

  Corpus corpus;
  corpus.config = cfg;
  const std::size_t per_user =
      2 * (static_cast<std::size_t>(layout.sessions_per_user) * layout.genuine_per_session +
           layout.forgeries_per_user());
  corpus.signatures.reserve(per_user * cfg.n_users);

  for (int user = 1; user <= cfg.n_users; ++user) {
    for (const std::string& sensor : layout.sensors) {
      for (int session = 1; session <= layout.sessions_per_user; ++session)
        for (int index = 1; index <= layout.genuine_per_session; ++index)
          corpus.signatures.push_back(
              generate_genuine(cfg, user, sensor, session, index));
      for (int session = 1; session <= layout.forgery_sessions; ++session)
        for (int index = 1; index <= layout.forgeries_per_session; ++index)
          corpus.signatures.push_back(synthesize_forgery(
              cfg, user, forger_for(cfg, user, session), sensor, session, index));
    }
  }
  return corpus;
}

std::string corpus_relative_path(const SignatureMeta& meta) {
  char buf[96];
  std::snprintf(buf, sizeof(buf), "u%03d/%s_%s_s%d_i%d.sig", meta.user,
                meta.kind == Kind::genuine ? "genuine" : "forgery",
                meta.sensor.c_str(), meta.session, meta.index);
  return buf;
}

namespace {

std::string format_profile_line(std::string_view key, const SensorProfile& p) {
  std::string out = "# ";
  out += key;
  out += "=" + p.name;
  out += " mean_rate_hz=" + format_double(p.mean_rate_hz);
  out += " period_oscillation=" + format_double(p.period_oscillation);
  out += " period_noise=" + format_double(p.period_noise);
  out += " pressure_levels=" + std::to_string(p.pressure_levels);
  out += "\n";
  return out;
}

SensorProfile parse_profile_line(const std::vector<std::string_view>& fields,
                                 const std::string& where) {
  SensorProfile p;
  for (const std::string_view field : fields) {
    const std::size_t eq = field.find('=');
    if (eq == std::string_view::npos)
      raise(ErrorCode::ParseError, "malformed sensor field in " + where);
    const std::string_view key = field.substr(0, eq);
    const std::string_view value = field.substr(eq + 1);
    if (key == "sensor_a" || key == "sensor_b") p.name = std::string(value);
    else if (key == "mean_rate_hz") p.mean_rate_hz = parse_double(value, where);
    else if (key == "period_oscillation") p.period_oscillation = parse_double(value, where);
    else if (key == "period_noise") p.period_noise = parse_double(value, where);
    else if (key == "pressure_levels") p.pressure_levels = static_cast<int>(parse_int(value, where));
    else raise(ErrorCode::ParseError, "unknown sensor field in " + where);
  }
  return p;
}

}  // namespace

std::string format_manifest_header(const GenConfig& cfg) {
  std::string out = "# sigverify corpus manifest v1\n";
  out += "# master_seed=" + std::to_string(cfg.master_seed) + "\n";
  out += "# n_users=" + std::to_string(cfg.n_users) + "\n";
  out += "# genuine_jitter=" + format_double(cfg.genuine_jitter) + "\n";
  out += "# session_shift=" + format_double(cfg.session_shift) + "\n";
  out += "# forgery_jitter=" + format_double(cfg.forgery_jitter) + "\n";
  out += "# time_warp_strength=" + format_double(cfg.time_warp_strength) + "\n";
  out += format_profile_line("sensor_a", cfg.sensor_a);
  out += format_profile_line("sensor_b", cfg.sensor_b);
  return out;
}

std::string format_manifest(const Corpus& corpus) {
  std::vector<std::string> lines;
  lines.reserve(corpus.signatures.size());
  for (const RawSignature& raw : corpus.signatures) {
    std::string line = corpus_relative_path(raw.meta);
    line += " user=" + std::to_string(raw.meta.user);
    line += " sensor=" + raw.meta.sensor;
    line += " kind=" + std::string(kind_label(raw.meta.kind));
    line += " session=" + std::to_string(raw.meta.session);
    line += " index=" + std::to_string(raw.meta.index);
    if (raw.meta.forger) line += " forger=" + std::to_string(*raw.meta.forger);
    lines.push_back(std::move(line));
  }
  std::sort(lines.begin(), lines.end());

  std::string out = format_manifest_header(corpus.config);
  for (const std::string& line : lines) {
    out += line;
    out += '\n';
  }
  return out;
}

Manifest parse_manifest(std::string_view text, std::string_view origin) {
  const std::string where(origin.empty() ? "manifest" : std::string(origin));
  Manifest manifest;
  bool saw_magic = false;

  std::size_t pos = 0;
  while (pos < text.size()) {
    std::size_t eol = text.find('\n', pos);
    if (eol == std::string_view::npos) eol = text.size();
    std::string_view line = trim(text.substr(pos, eol - pos));
    pos = eol + 1;
    if (line.empty()) continue;

    if (line.starts_with("#")) {
      std::string_view body = trim(line.substr(1));
      if (body == "sigverify corpus manifest v1") {
        saw_magic = true;
        continue;
      }
      auto fields = split_ws(body);
      if (fields.empty()) continue;
      const std::size_t eq = fields[0].find('=');
      if (eq == std::string_view::npos)
        raise(ErrorCode::ParseError, "malformed manifest header in " + where);
      const std::string_view key = fields[0].substr(0, eq);
      const std::string_view value = fields[0].substr(eq + 1);
      GenConfig& cfg = manifest.config;
      if (key == "master_seed")
        cfg.master_seed = static_cast<std::uint64_t>(parse_int(value, where));
      else if (key == "n_users") cfg.n_users = static_cast<int>(parse_int(value, where));
      else if (key == "genuine_jitter") cfg.genuine_jitter = parse_double(value, where);
      else if (key == "session_shift") cfg.session_shift = parse_double(value, where);
      else if (key == "forgery_jitter") cfg.forgery_jitter = parse_double(value, where);
      else if (key == "time_warp_strength")
        cfg.time_warp_strength = parse_double(value, where);
      else if (key == "sensor_a") cfg.sensor_a = parse_profile_line(fields, where);
      else if (key == "sensor_b") cfg.sensor_b = parse_profile_line(fields, where);
      else raise(ErrorCode::ParseError,
                 "unknown manifest key '" + std::string(key) + "' in " + where);
      continue;
    }

    auto fields = split_ws(line);
    if (fields.size() < 6)
      raise(ErrorCode::ParseError, "manifest entry needs metadata in " + where);
    ManifestEntry entry;
    entry.path = std::string(fields[0]);
    for (std::size_t i = 1; i < fields.size(); ++i) {
      const std::size_t eq = fields[i].find('=');
      if (eq == std::string_view::npos)
        raise(ErrorCode::ParseError, "malformed manifest entry in " + where);
      const std::string_view key = fields[i].substr(0, eq);
      const std::string_view value = fields[i].substr(eq + 1);
      if (key == "user") entry.meta.user = static_cast<int>(parse_int(value, where));
      else if (key == "sensor") entry.meta.sensor = std::string(value);
      else if (key == "kind") entry.meta.kind = parse_kind(value);
      else if (key == "session") entry.meta.session = static_cast<int>(parse_int(value, where));
      else if (key == "index") entry.meta.index = static_cast<int>(parse_int(value, where));
      else if (key == "forger") entry.meta.forger = static_cast<int>(parse_int(value, where));
      else raise(ErrorCode::ParseError, "unknown entry field in " + where);
    }
    manifest.entries.push_back(std::move(entry));
  }

  if (!saw_magic)
    raise(ErrorCode::ParseError, "not a sigverify corpus manifest: " + where);
  return manifest;
}

}  // namespace sigv
