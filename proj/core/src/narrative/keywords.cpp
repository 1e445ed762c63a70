#include "vizchat/narrative/keywords.hpp"

#include "../detail/text.hpp"

namespace vizchat {
namespace {

constexpr std::size_t kNoEdge = 0;  // the root is never a child

bool continuation_byte(char c) noexcept {
  return (static_cast<unsigned char>(c) & 0xC0) == 0x80;
}

bool boundary_at(std::string_view text, std::size_t pos) noexcept {
  return pos >= text.size() || !detail::is_word_byte(text[pos]);
}

}  // namespace

KeywordIndex::KeywordIndex(const SceneTree& tree) : trie_(1) {
  for (const auto& node : tree.nodes()) {
    insert(detail::to_lower(detail::trim(node.name)), node.id);
    insert(detail::to_lower(detail::trim(node.label)), node.id);
  }
}

std::size_t KeywordIndex::child(std::size_t at, char c) const noexcept {
  for (const auto& [edge, next] : trie_[at].edges) {
    if (edge == c) return next;
  }
  return kNoEdge;
}

void KeywordIndex::insert(const std::string& term, const NodeId& id) {
  std::size_t at = 0;
  for (char c : term) {
    std::size_t next = child(at, c);
    if (next == kNoEdge) {
      next = trie_.size();
      trie_[at].edges.emplace_back(c, next);
      trie_.emplace_back();
    }
    at = next;
  }
  // The tree rejects names shared across nodes, so a term has one owner.
  trie_[at].terminal = id;
}

KeywordHits KeywordIndex::detect(std::string_view text) const {
  KeywordHits hits;
  std::size_t chars_before = 0;
  std::size_t i = 0;
  const auto skip_to = [&](std::size_t target) {
    for (; i < target; ++i) chars_before += continuation_byte(text[i]) ? 0 : 1;
  };

  while (i < text.size()) {
    const bool word_start = detail::is_word_byte(text[i]) && (i == 0 || !detail::is_word_byte(text[i - 1]));
    if (!word_start) {
      skip_to(i + 1);
      continue;
    }

    const NodeId* best = nullptr;
    std::size_t best_end = i;
    std::size_t at = 0;
    for (std::size_t j = i; j < text.size(); ++j) {
      at = child(at, detail::lower(text[j]));
      if (at == kNoEdge) break;
      const auto& owner = trie_[at].terminal;
      if (!owner) continue;
      const std::size_t end = j + 1;
      if (boundary_at(text, end)) {
        best = &*owner;
        best_end = end;
      } else if (detail::lower(text[end]) == 's' && boundary_at(text, end + 1)) {
        best = &*owner;
        best_end = end + 1;
      }
    }

    if (best == nullptr) {
      skip_to(i + 1);
      continue;
    }
    hits.emplace(*best, chars_before);
    skip_to(best_end);
  }
  return hits;
}

KeywordHits detect_keywords(std::string_view text, const SceneTree& tree) {
  return KeywordIndex(tree).detect(text);
}

}  // namespace vizchat
