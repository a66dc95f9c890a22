#pragma once

#include <array>
#include <string>
#include <vector>

#include "editgrpo/ontology.hpp"

namespace editgrpo {

// An extracted mention. `lexeme` indexes the ontology lexicon and carries the
// embedding reference.
struct Entity {
  std::string surface;  // normalized lexicon surface
  int finding = 0;
  Presence presence = Presence::Present;
  int lexeme = -1;
  int sentence_index = 0;
};

// EmbeddingMatch scores entity pairs by embedding cosine; ExactMatch scores
// 1 for identical surfaces and 0 otherwise (string-matching backend).
enum class ExtractionMode { EmbeddingMatch, ExactMatch };

using LabelVector = std::array<int, kNumFindings>;

// Longest-match lexicon scan (case-insensitive, non-overlapping, left to
// right). Presence is Absent iff a negation cue ends before the mention
// starts within the sentence.
std::vector<Entity> extract_sentence_entities(const std::string& sentence,
                                              const Ontology& onto);

std::vector<Entity> extract_report(const std::vector<std::string>& sentences,
                                   const Ontology& onto);

std::vector<Entity> extract_text(const std::string& text, const Ontology& onto);

// 14 presence bits. Abnormal bit k is set iff some entity of finding k is
// Present (any positive mention wins); the No Finding bit is set iff no
// abnormal bit is.
LabelVector labels_14(const std::vector<Entity>& entities, const Ontology& onto);

LabelVector labels_from_gold(const std::vector<GoldEntity>& gold,
                             const Ontology& onto);

double entity_similarity(const Entity& a, const Entity& b, const Ontology& onto,
                         ExtractionMode mode);

}  // namespace editgrpo
