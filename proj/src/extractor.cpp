#include "editgrpo/extractor.hpp"

#include <cctype>
#include <sstream>

namespace editgrpo {

namespace {

std::vector<std::string> words_of(std::string_view text) {
  std::vector<std::string> words;
  std::string cur;
  for (char c : text) {
    unsigned char u = static_cast<unsigned char>(c);
    if (std::isalnum(u)) {
      cur.push_back(static_cast<char>(std::tolower(u)));
    } else if (!cur.empty()) {
      words.push_back(std::move(cur));
      cur.clear();
    }
  }
  if (!cur.empty()) words.push_back(std::move(cur));
  return words;
}

bool matches_at(const std::vector<std::string>& words, size_t pos,
                const std::vector<std::string>& pattern) {
  if (pos + pattern.size() > words.size()) return false;
  for (size_t k = 0; k < pattern.size(); ++k) {
    if (words[pos + k] != pattern[k]) return false;
  }
  return true;
}

}  // namespace

std::vector<Entity> extract_sentence_entities(const std::string& sentence,
                                              const Ontology& onto) {
  const auto words = words_of(sentence);

  // word positions covered by a negation cue, cue end positions
  std::vector<std::vector<std::string>> cue_words;
  cue_words.reserve(onto.negation_cues.size());
  for (const auto& cue : onto.negation_cues) cue_words.push_back(words_of(cue));
  std::vector<size_t> cue_ends;  // exclusive end index of each cue occurrence
  for (size_t i = 0; i < words.size(); ++i) {
    for (const auto& cw : cue_words) {
      if (!cw.empty() && matches_at(words, i, cw)) {
        cue_ends.push_back(i + cw.size());
      }
    }
  }

  // longest-match scan over the lexicon
  std::vector<Entity> out;
  std::vector<std::vector<std::string>> surf_words;
  surf_words.reserve(onto.lexicon.size());
  for (const auto& lex : onto.lexicon) surf_words.push_back(words_of(lex.surface));

  size_t i = 0;
  while (i < words.size()) {
    int best = -1;
    size_t best_len = 0;
    for (size_t l = 0; l < onto.lexicon.size(); ++l) {
      const auto& sw = surf_words[l];
      if (sw.size() > best_len && matches_at(words, i, sw)) {
        best = static_cast<int>(l);
        best_len = sw.size();
      }
    }
    if (best < 0) {
      ++i;
      continue;
    }
    bool negated = false;
    for (size_t e : cue_ends) {
      if (e <= i) {
        negated = true;
        break;
      }
    }
    Entity ent;
    ent.surface = onto.lexicon[best].surface;
    ent.finding = onto.lexicon[best].finding;
    ent.presence = negated ? Presence::Absent : Presence::Present;
    ent.lexeme = best;
    ent.sentence_index = 0;
    out.push_back(std::move(ent));
    i += best_len;
  }
  return out;
}

std::vector<Entity> extract_report(const std::vector<std::string>& sentences,
                                   const Ontology& onto) {
  std::vector<Entity> out;
  for (size_t s = 0; s < sentences.size(); ++s) {
    auto ents = extract_sentence_entities(sentences[s], onto);
    for (auto& e : ents) {
      e.sentence_index = static_cast<int>(s);
      out.push_back(std::move(e));
    }
  }
  return out;
}

std::vector<Entity> extract_text(const std::string& text, const Ontology& onto) {
  return extract_report(segment_report(text), onto);
}

LabelVector labels_14(const std::vector<Entity>& entities, const Ontology& onto) {
  LabelVector bits{};
  bool any_abnormal = false;
  for (const auto& e : entities) {
    if (e.presence != Presence::Present) continue;
    if (e.finding == kNoFinding) continue;
    bits[onto.label_map[e.finding]] = 1;
    any_abnormal = true;
  }
  if (!any_abnormal) bits[onto.label_map[kNoFinding]] = 1;
  return bits;
}

LabelVector labels_from_gold(const std::vector<GoldEntity>& gold,
                             const Ontology& onto) {
  LabelVector bits{};
  bool any_abnormal = false;
  for (const auto& g : gold) {
    if (g.presence != Presence::Present) continue;
    if (g.finding == kNoFinding) continue;
    bits[onto.label_map[g.finding]] = 1;
    any_abnormal = true;
  }
  if (!any_abnormal) bits[onto.label_map[kNoFinding]] = 1;
  return bits;
}

double entity_similarity(const Entity& a, const Entity& b, const Ontology& onto,
                         ExtractionMode mode) {
  if (mode == ExtractionMode::ExactMatch) {
    return a.surface == b.surface ? 1.0 : 0.0;
  }
  return cosine(onto.lexicon[a.lexeme].embedding, onto.lexicon[b.lexeme].embedding);
}

}  // namespace editgrpo
