#include "editgrpo/ontology.hpp"

#include <cctype>
#include <cmath>
#include <stdexcept>

#include <json.hpp>

namespace editgrpo {

int Ontology::lexeme_index(std::string_view surface) const {
  auto it = surface_index_.find(std::string(surface));
  return it == surface_index_.end() ? -1 : it->second;
}

int Ontology::template_by_text(std::string_view text) const {
  auto it = text_index_.find(std::string(text));
  return it == text_index_.end() ? -1 : it->second;
}

void Ontology::rebuild_indices() {
  surface_index_.clear();
  text_index_.clear();
  for (size_t i = 0; i < lexicon.size(); ++i) {
    surface_index_[lexicon[i].surface] = static_cast<int>(i);
  }
  for (size_t i = 0; i < templates.size(); ++i) {
    text_index_[templates[i].text] = static_cast<int>(i);
  }
}

double cosine(std::span<const double> a, std::span<const double> b) {
  if (a.size() != b.size()) {
    throw std::invalid_argument("cosine: dimension mismatch");
  }
  double dot = 0.0, na = 0.0, nb = 0.0;
  for (size_t i = 0; i < a.size(); ++i) {
    dot += a[i] * b[i];
    na += a[i] * a[i];
    nb += b[i] * b[i];
  }
  if (std::abs(std::sqrt(na) - 1.0) > 1e-6 ||
      std::abs(std::sqrt(nb) - 1.0) > 1e-6) {
    throw std::invalid_argument("cosine: inputs must be unit vectors");
  }
  return dot;
}

double cosine(const Embedding& a, const Embedding& b) {
  return cosine(std::span<const double>(a), std::span<const double>(b));
}

std::string normalize_text(std::string_view s) {
  std::string out;
  out.reserve(s.size());
  bool pending_space = false;
  for (char c : s) {
    if (std::isspace(static_cast<unsigned char>(c))) {
      pending_space = !out.empty();
      continue;
    }
    if (pending_space) {
      out.push_back(' ');
      pending_space = false;
    }
    out.push_back(static_cast<char>(std::tolower(static_cast<unsigned char>(c))));
  }
  return out;
}

std::vector<std::string> segment_report(const std::string& text) {
  std::vector<std::string> sentences;
  size_t start = 0;
  while (start <= text.size()) {
    size_t dot = text.find('.', start);
    if (dot == std::string::npos) break;
    size_t lo = start;
    size_t hi = dot;  // exclusive
    while (lo < hi && std::isspace(static_cast<unsigned char>(text[lo]))) ++lo;
    while (hi > lo && std::isspace(static_cast<unsigned char>(text[hi - 1]))) --hi;
    if (hi > lo) {
      sentences.push_back(text.substr(lo, hi - lo) + ".");
    }
    start = dot + 1;
  }
  return sentences;
}

std::string join_sentences(const std::vector<std::string>& sentences) {
  std::string out;
  for (const auto& s : sentences) {
    if (!out.empty()) out.push_back(' ');
    out += s;
  }
  return out;
}

std::string ontology_to_json(const Ontology& onto) {
  nlohmann::json j;
  j["seed"] = onto.seed;
  j["findings"] = onto.findings;
  j["negation_cues"] = onto.negation_cues;
  j["label_map"] = onto.label_map;
  j["five_subset"] = onto.five_subset;
  auto& lex = j["lexicon"] = nlohmann::json::array();
  for (const auto& l : onto.lexicon) {
    nlohmann::json e;
    e["surface"] = l.surface;
    e["finding"] = l.finding;
    e["embedding"] = l.embedding;
    if (l.synonym_of) {
      e["synonym_of"] = *l.synonym_of;
    } else {
      e["synonym_of"] = nullptr;
    }
    lex.push_back(std::move(e));
  }
  auto& tpl = j["templates"] = nlohmann::json::array();
  for (const auto& t : onto.templates) {
    nlohmann::json e;
    e["id"] = t.template_id;
    e["text"] = t.text;
    auto& ents = e["entities"] = nlohmann::json::array();
    for (const auto& g : t.entities) {
      ents.push_back({{"surface", g.surface},
                      {"finding", g.finding},
                      {"presence", to_string(g.presence)}});
    }
    tpl.push_back(std::move(e));
  }
  return j.dump(2);
}

Ontology ontology_from_json(const std::string& json_text) {
  nlohmann::json j = nlohmann::json::parse(json_text);
  Ontology onto;
  onto.seed = j.at("seed").get<uint64_t>();
  onto.findings = j.at("findings").get<std::vector<std::string>>();
  onto.negation_cues = j.at("negation_cues").get<std::vector<std::string>>();
  onto.label_map = j.at("label_map").get<std::vector<int>>();
  onto.five_subset = j.at("five_subset").get<std::vector<int>>();
  for (const auto& e : j.at("lexicon")) {
    EntityLexeme l;
    l.surface = e.at("surface").get<std::string>();
    l.finding = e.at("finding").get<int>();
    auto emb = e.at("embedding").get<std::vector<double>>();
    if (emb.size() != kEmbedDim) {
      throw std::invalid_argument("ontology json: bad embedding dimension");
    }
    std::copy(emb.begin(), emb.end(), l.embedding.begin());
    if (!e.at("synonym_of").is_null()) {
      l.synonym_of = e.at("synonym_of").get<std::string>();
    }
    onto.lexicon.push_back(std::move(l));
  }
  for (const auto& e : j.at("templates")) {
    SentenceTemplate t;
    t.template_id = e.at("id").get<int>();
    t.text = e.at("text").get<std::string>();
    for (const auto& g : e.at("entities")) {
      GoldEntity ge;
      ge.surface = g.at("surface").get<std::string>();
      ge.finding = g.at("finding").get<int>();
      ge.presence = g.at("presence").get<std::string>() == "present"
                        ? Presence::Present
                        : Presence::Absent;
      t.entities.push_back(std::move(ge));
    }
    onto.templates.push_back(std::move(t));
  }
  onto.rebuild_indices();
  return onto;
}

}  // namespace editgrpo
