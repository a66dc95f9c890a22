#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace editgrpo {

constexpr int kNumFindings = 14;
constexpr int kNoFinding = 13;  // reserved index for the "No Finding" class
constexpr int kEmbedDim = 16;

enum class Presence : uint8_t { Absent = 0, Present = 1 };

inline const char* to_string(Presence p) {
  return p == Presence::Present ? "present" : "absent";
}

using Embedding = std::array<double, kEmbedDim>;

// One lexicon entry: a normalized surface form bound to a finding, with a
// unit-norm embedding. Canonical lexemes have no synonym_of.
struct EntityLexeme {
  std::string surface;
  int finding = 0;
  Embedding embedding{};
  std::optional<std::string> synonym_of;
};

struct GoldEntity {
  std::string surface;
  int finding = 0;
  Presence presence = Presence::Present;

  bool operator==(const GoldEntity&) const = default;
};

// A report sentence the closed world can emit. Rendering then extracting a
// template recovers exactly its gold annotations.
struct SentenceTemplate {
  int template_id = 0;
  std::string text;  // ends in '.', no internal periods
  std::vector<GoldEntity> entities;
};

struct Ontology {
  std::vector<std::string> findings;  // 14 names, index 13 = "No Finding"
  std::vector<EntityLexeme> lexicon;
  std::vector<SentenceTemplate> templates;
  std::vector<std::string> negation_cues;
  std::vector<int> label_map;    // finding index -> label index (bijection)
  std::vector<int> five_subset;  // findings scored by the 5-label metrics
  uint64_t seed = 0;

  // lookup index into lexicon by normalized surface, -1 if absent
  int lexeme_index(std::string_view surface) const;
  // lookup template id by exact rendered text, -1 if absent
  int template_by_text(std::string_view text) const;

  int vocab_size() const { return static_cast<int>(templates.size()); }
  int end_token() const { return vocab_size(); }

  void rebuild_indices();

 private:
  std::unordered_map<std::string, int> surface_index_;
  std::unordered_map<std::string, int> text_index_;
};

// Dot product of two unit vectors. Both spans must have equal dimension and
// unit norm within 1e-6; violations throw std::invalid_argument.
double cosine(std::span<const double> a, std::span<const double> b);
double cosine(const Embedding& a, const Embedding& b);

// Lowercase and collapse runs of whitespace to single spaces.
std::string normalize_text(std::string_view s);

// Split on '.', trim whitespace, drop empty fragments, restore the '.'.
std::vector<std::string> segment_report(const std::string& text);

// Inverse of segment_report on template-built reports: single-space join.
std::string join_sentences(const std::vector<std::string>& sentences);

Ontology build_default_ontology(uint64_t seed);

std::string ontology_to_json(const Ontology& onto);
Ontology ontology_from_json(const std::string& json_text);

}  // namespace editgrpo
