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

#include "sigv/protocol.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>

#include "sigv/error.hpp"
#include "sigv/text.hpp"

namespace sigv {

namespace {

std::string user_tag(int user) {
  char buf[16];
  std::snprintf(buf, sizeof(buf), "u%03d", user);
  return buf;
}

void append_sorted(ScoreSet& set) {
  std::sort(set.records.begin(), set.records.end(),
            [](const ScoreRecord& a, const ScoreRecord& b) {
              if (a.model_id != b.model_id) return a.model_id < b.model_id;
              return a.test_id < b.test_id;
            });
}

}  // namespace

const std::string& CorpusLayout::other_sensor(const std::string& sensor) const {
  if (sensor == sensors[0]) return sensors[1];
  if (sensor == sensors[1]) return sensors[0];
  raise(ErrorCode::InvalidConfig, "unknown sensor '" + sensor + "'");
}

void validate_layout(const CorpusLayout& layout) {
  if (layout.n_users < 1 || layout.sessions_per_user < 3 ||
      layout.genuine_per_session < 3 || layout.forgery_sessions < 1 ||
      layout.forgeries_per_session < 1)
    raise(ErrorCode::InvalidConfig, "corpus layout counts out of range");
  if (layout.sensors[0].empty() || layout.sensors[1].empty() ||
      layout.sensors[0] == layout.sensors[1])
    raise(ErrorCode::InvalidConfig, "layout needs two distinct sensor labels");
}

SignatureKey key_of(const SignatureMeta& meta) {
  return SignatureKey{meta.user, meta.sensor, meta.kind, meta.session, meta.index};
}

std::string signature_id(const SignatureKey& key) {
  const char tag = key.kind == Kind::genuine ? 's' : 'f';
  return user_tag(key.user) + "_" + key.sensor + "_" + tag +
         std::to_string(key.session) + "." + std::to_string(key.index);
}

std::string EnrolmentSpec::spec_id() const {
  const char* tag = strategy == Strategy::monosensor ? "mono" : "multi";
  return std::string(tag) + "_" + slot1_sensor + "." + std::to_string(w3) + "_" +
         slot2_sensor + "." + std::to_string(w2);
}

std::vector<SignatureKey> EnrolmentSpec::enrolment_keys(int user) const {
  std::vector<SignatureKey> keys;
  keys.reserve(5);
  for (int i = 0; i < 3; ++i)
    keys.push_back(SignatureKey{user, slot1_sensor, Kind::genuine, 1, w3 + i});
  for (int i = 0; i < 2; ++i)
    keys.push_back(SignatureKey{user, slot2_sensor, Kind::genuine, 2, w2 + i});
  return keys;
}

std::string model_id_for(int user, const EnrolmentSpec& spec) {
  return user_tag(user) + "_" + spec.spec_id();
}

std::vector<EnrolmentSpec> monosensor_enrolment_sets(const CorpusLayout& layout,
                                                     const std::string& sensor) {
  validate_layout(layout);
  if (sensor != layout.sensors[0] && sensor != layout.sensors[1])
    raise(ErrorCode::InvalidConfig, "unknown sensor '" + sensor + "'");
  std::vector<EnrolmentSpec> specs;
  const int n3 = layout.genuine_per_session - 3 + 1;
  const int n2 = layout.genuine_per_session - 2 + 1;
  specs.reserve(static_cast<std::size_t>(n3) * n2);
  for (int w3 = 1; w3 <= n3; ++w3)
    for (int w2 = 1; w2 <= n2; ++w2)
      specs.push_back(EnrolmentSpec{Strategy::monosensor, sensor, sensor, w3, w2});
  return specs;
}

std::vector<EnrolmentSpec> multisensor_enrolment_sets(const CorpusLayout& layout) {
  validate_layout(layout);
  std::vector<EnrolmentSpec> specs;
  const int n3 = layout.genuine_per_session - 3 + 1;
  const int n2 = layout.genuine_per_session - 2 + 1;
  specs.reserve(2 * static_cast<std::size_t>(n3) * n2);
  for (int pass = 0; pass < 2; ++pass) {
    const std::string& slot1 = layout.sensors[pass];
    const std::string& slot2 = layout.sensors[1 - pass];
    for (int w3 = 1; w3 <= n3; ++w3)
      for (int w2 = 1; w2 <= n2; ++w2)
        specs.push_back(EnrolmentSpec{Strategy::multisensor, slot1, slot2, w3, w2});
  }
  return specs;
}

std::vector<EnrolmentSpec> all_enrolment_specs(const CorpusLayout& layout) {
  std::vector<EnrolmentSpec> specs = monosensor_enrolment_sets(layout, layout.sensors[0]);
  for (EnrolmentSpec& s : monosensor_enrolment_sets(layout, layout.sensors[1]))
    specs.push_back(std::move(s));
  for (EnrolmentSpec& s : multisensor_enrolment_sets(layout))
    specs.push_back(std::move(s));
  return specs;
}

std::string_view score_label_name(ScoreLabel label) {
  switch (label) {
    case ScoreLabel::genuine: return "genuine";
    case ScoreLabel::real_impostor: return "real_impostor";
    case ScoreLabel::casual_impostor: return "casual_impostor";
  }
  return "unknown";
}

ScoreLabel parse_score_label(std::string_view text) {
  if (text == "genuine") return ScoreLabel::genuine;
  if (text == "real_impostor") return ScoreLabel::real_impostor;
  if (text == "casual_impostor") return ScoreLabel::casual_impostor;
  raise(ErrorCode::ParseError, "unknown score label '" + std::string(text) + "'");
}

std::string interop_experiment_id(InteropVariant variant,
                                  const std::string& test_sensor) {
  const char* tag = variant == InteropVariant::same_sensor       ? "a"
                    : variant == InteropVariant::cross_sensor    ? "b"
                                                                 : "c";
  return std::string("interop_") + tag + "_" + test_sensor;
}

std::string fusion_experiment_id(FusionVariant variant, const std::string& test_sensor) {
  const char* tag = variant == FusionVariant::single_instance            ? "i"
                    : variant == FusionVariant::multi_instance_one_sensor ? "ii"
                                                                          : "iii";
  return std::string("fusion_") + tag + "_" + test_sensor;
}

double max_fuse(std::span<const double> scores) {
  if (scores.empty()) raise(ErrorCode::EmptyGroup, "max fusion over an empty group");
  double best = scores[0];
  for (double s : scores.subspan(1)) best = std::max(best, s);
  return best;
}

ScoreSet run_interop_experiment(const CorpusLayout& layout, InteropVariant variant,
                                const std::string& test_sensor, const ScoreFn& score) {
  validate_layout(layout);

  ScoreSet set;
  set.experiment_id = interop_experiment_id(variant, test_sensor);

  const std::vector<EnrolmentSpec> specs =
      variant == InteropVariant::same_sensor
          ? monosensor_enrolment_sets(layout, test_sensor)
          : variant == InteropVariant::cross_sensor
                ? monosensor_enrolment_sets(layout, layout.other_sensor(test_sensor))
                : multisensor_enrolment_sets(layout);

  for (int user = 1; user <= layout.n_users; ++user) {
    for (const EnrolmentSpec& spec : specs) {
      const std::string model_id = model_id_for(user, spec);

      for (int i = 1; i <= layout.genuine_per_session; ++i) {
        const SignatureKey key{user, test_sensor, Kind::genuine, 3, i};
        set.records.push_back(
            ScoreRecord{model_id, signature_id(key), ScoreLabel::genuine,
                        score(model_id, key)});
      }
      for (int fs = 1; fs <= layout.forgery_sessions; ++fs) {
        for (int i = 1; i <= layout.forgeries_per_session; ++i) {
          const SignatureKey key{user, test_sensor, Kind::skilled_forgery, fs, i};
          set.records.push_back(
              ScoreRecord{model_id, signature_id(key), ScoreLabel::real_impostor,
                          score(model_id, key)});
        }
      }
      for (int other = 1; other <= layout.n_users; ++other) {
        if (other == user) continue;
        for (int fs = 1; fs <= layout.forgery_sessions; ++fs) {
          for (int i = 1; i <= layout.forgeries_per_session; ++i) {
            const SignatureKey key{other, test_sensor, Kind::skilled_forgery, fs, i};
            set.records.push_back(
                ScoreRecord{model_id, signature_id(key), ScoreLabel::casual_impostor,
                            score(model_id, key)});
          }
        }
      }
    }
  }
  append_sorted(set);
  return set;
}

namespace {

// Index pairs (1,2) and (3,4) inside a 5-signature session.
std::vector<std::array<int, 2>> fixed_pairs() { return {{1, 2}, {3, 4}}; }

std::string group_id(const SignatureKey& a, const SignatureKey& b) {
  return signature_id(a) + "+" + signature_id(b);
}

}  // namespace

ScoreSet run_fusion_experiment(const CorpusLayout& layout, FusionVariant variant,
                               const std::string& test_sensor, const ScoreFn& score) {
  validate_layout(layout);

  ScoreSet set;
  set.experiment_id = fusion_experiment_id(variant, test_sensor);
  const std::string& partner = layout.other_sensor(test_sensor);
  const std::vector<EnrolmentSpec> own_specs =
      monosensor_enrolment_sets(layout, test_sensor);
  const std::vector<EnrolmentSpec> partner_specs =
      monosensor_enrolment_sets(layout, partner);

  for (int user = 1; user <= layout.n_users; ++user) {
    for (std::size_t spec_idx = 0; spec_idx < own_specs.size(); ++spec_idx) {
      const EnrolmentSpec& spec = own_specs[spec_idx];
      const std::string model_id = model_id_for(user, spec);
      // Variant iii pairs the own-sensor model with the partner-sensor model
      // that shares the same enrolment windows.
      const std::string partner_model_id = model_id_for(user, partner_specs[spec_idx]);

      auto emit_single = [&](const SignatureKey& key, ScoreLabel label) {
        set.records.push_back(
            ScoreRecord{model_id, signature_id(key), label, score(model_id, key)});
      };
      auto emit_pair_same_sensor = [&](const SignatureKey& k1, const SignatureKey& k2,
                                       ScoreLabel label) {
        const std::array<double, 2> member = {score(model_id, k1), score(model_id, k2)};
        set.records.push_back(
            ScoreRecord{model_id, group_id(k1, k2), label, max_fuse(member)});
      };
      auto emit_pair_cross_sensor = [&](const SignatureKey& own, const SignatureKey& twin,
                                        ScoreLabel label) {
        const std::array<double, 2> member = {score(model_id, own),
                                              score(partner_model_id, twin)};
        set.records.push_back(
            ScoreRecord{model_id, group_id(own, twin), label, max_fuse(member)});
      };

      switch (variant) {
        case FusionVariant::single_instance:
          for (int i = 1; i <= layout.genuine_per_session; ++i)
            emit_single(SignatureKey{user, test_sensor, Kind::genuine, 3, i},
                        ScoreLabel::genuine);
          for (int fs = 1; fs <= layout.forgery_sessions; ++fs)
            for (int i = 1; i <= layout.forgeries_per_session; ++i)
              emit_single(SignatureKey{user, test_sensor, Kind::skilled_forgery, fs, i},
                          ScoreLabel::real_impostor);
          for (int other = 1; other <= layout.n_users; ++other) {
            if (other == user) continue;
            for (int fs = 1; fs <= layout.forgery_sessions; ++fs)
              for (int i = 1; i <= layout.forgeries_per_session; ++i)
                emit_single(
                    SignatureKey{other, test_sensor, Kind::skilled_forgery, fs, i},
                    ScoreLabel::casual_impostor);
          }
          break;

        case FusionVariant::multi_instance_one_sensor:
          for (const auto& pair : fixed_pairs())
            emit_pair_same_sensor(
                SignatureKey{user, test_sensor, Kind::genuine, 3, pair[0]},
                SignatureKey{user, test_sensor, Kind::genuine, 3, pair[1]},
                ScoreLabel::genuine);
          for (int fs = 1; fs <= layout.forgery_sessions; ++fs)
            for (const auto& pair : fixed_pairs())
              emit_pair_same_sensor(
                  SignatureKey{user, test_sensor, Kind::skilled_forgery, fs, pair[0]},
                  SignatureKey{user, test_sensor, Kind::skilled_forgery, fs, pair[1]},
                  ScoreLabel::real_impostor);
          for (int other = 1; other <= layout.n_users; ++other) {
            if (other == user) continue;
            for (int fs = 1; fs <= layout.forgery_sessions; ++fs)
              for (const auto& pair : fixed_pairs())
                emit_pair_same_sensor(
                    SignatureKey{other, test_sensor, Kind::skilled_forgery, fs, pair[0]},
                    SignatureKey{other, test_sensor, Kind::skilled_forgery, fs, pair[1]},
                    ScoreLabel::casual_impostor);
          }
          break;

        case FusionVariant::multi_sensor:
          for (int i = 1; i <= layout.genuine_per_session; ++i)
            emit_pair_cross_sensor(SignatureKey{user, test_sensor, Kind::genuine, 3, i},
                                   SignatureKey{user, partner, Kind::genuine, 3, i},
                                   ScoreLabel::genuine);
          for (int fs = 1; fs <= layout.forgery_sessions; ++fs)
            for (int i = 1; i <= layout.forgeries_per_session; ++i)
              emit_pair_cross_sensor(
                  SignatureKey{user, test_sensor, Kind::skilled_forgery, fs, i},
                  SignatureKey{user, partner, Kind::skilled_forgery, fs, i},
                  ScoreLabel::real_impostor);
          for (int other = 1; other <= layout.n_users; ++other) {
            if (other == user) continue;
            for (int fs = 1; fs <= layout.forgery_sessions; ++fs)
              for (int i = 1; i <= layout.forgeries_per_session; ++i)
                emit_pair_cross_sensor(
                    SignatureKey{other, test_sensor, Kind::skilled_forgery, fs, i},
                    SignatureKey{other, partner, Kind::skilled_forgery, fs, i},
                    ScoreLabel::casual_impostor);
          }
          break;
      }
    }
  }
  append_sorted(set);
  return set;
}

std::string format_scores_csv(const ScoreSet& scores) {
  std::string out = "experiment,model_id,test_id,label,score\n";
  out.reserve(out.size() + scores.records.size() * 80);
  for (const ScoreRecord& r : scores.records) {
    out += scores.experiment_id;
    out += ',';
    out += r.model_id;
    out += ',';
    out += r.test_id;
    out += ',';
    out += score_label_name(r.label);
    out += ',';
    out += format_double(r.score);
    out += '\n';
  }
  return out;
}

ScoreSet parse_scores_csv(std::string_view text, std::string_view origin) {
  const std::string where(origin.empty() ? "score csv" : origin);
  ScoreSet set;
  std::size_t pos = 0;
  bool header = true;
  while (pos < text.size()) {
    std::size_t eol = text.find('\n', pos);
    if (eol == std::string_view::npos) eol = text.size();
    std::string_view line = trim(text.substr(pos, eol - pos));
    pos = eol + 1;
    if (line.empty()) continue;
    if (header) {
      if (line != "experiment,model_id,test_id,label,score")
        raise(ErrorCode::ParseError, "missing score header in " + where);
      header = false;
      continue;
    }
    auto fields = split_char(line, ',');
    if (fields.size() != 5)
      raise(ErrorCode::ParseError, "score row needs 5 fields in " + where);
    if (set.experiment_id.empty()) set.experiment_id = std::string(fields[0]);
    set.records.push_back(ScoreRecord{std::string(fields[1]), std::string(fields[2]),
                                      parse_score_label(fields[3]),
                                      parse_double(fields[4], where)});
  }
  return set;
}

void export_scores_csv(const ScoreSet& scores, const std::filesystem::path& path) {
  write_text_file(path, format_scores_csv(scores));
}

}  // namespace sigv
