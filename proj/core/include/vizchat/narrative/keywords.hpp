#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "vizchat/scene/scene_tree.hpp"

namespace vizchat {

/// Node → offset of the first mention, counted as the number of characters
/// (Unicode code points) that precede it in the text.
using KeywordHits = std::unordered_map<NodeId, std::size_t>;

/// Vocabulary trie over every node name and label of a tree.
///
/// Matching is case-insensitive, anchored on word boundaries on both sides,
/// and tolerates one plural "s". At each word start the longest vocabulary
/// term wins and scanning resumes after it, so "capsid proteins" is one hit on
/// "capsid protein" rather than an extra hit on a node called "capsid".
class KeywordIndex {
 public:
  explicit KeywordIndex(const SceneTree& tree);

  KeywordHits detect(std::string_view text) const;

 private:
  struct TrieNode {
    std::vector<std::pair<char, std::size_t>> edges;
    std::optional<NodeId> terminal;
  };

  std::size_t child(std::size_t at, char c) const noexcept;
  void insert(const std::string& term, const NodeId& id);

  std::vector<TrieNode> trie_;
};

KeywordHits detect_keywords(std::string_view text, const SceneTree& tree);

}  // namespace vizchat
