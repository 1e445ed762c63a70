#pragma once

#include <algorithm>
#include <cctype>
#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace vizchat::detail {

inline char lower(char c) noexcept {
  return static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
}

inline std::string to_lower(std::string_view text) {
  std::string out(text);
  std::transform(out.begin(), out.end(), out.begin(), lower);
  return out;
}

inline std::string_view trim(std::string_view text) noexcept {
  const auto is_space = [](char c) { return std::isspace(static_cast<unsigned char>(c)) != 0; };
  while (!text.empty() && is_space(text.front())) text.remove_prefix(1);
  while (!text.empty() && is_space(text.back())) text.remove_suffix(1);
  return text;
}

// Bytes >= 0x80 belong to multi-byte UTF-8 sequences and count as letters.
inline bool is_word_byte(char c) noexcept {
  const auto u = static_cast<unsigned char>(c);
  return u >= 0x80 || std::isalnum(u) != 0;
}

inline std::vector<std::string_view> split_words(std::string_view text) {
  std::vector<std::string_view> words;
  std::size_t i = 0;
  while (i < text.size()) {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
    const std::size_t start = i;
    while (i < text.size() && !std::isspace(static_cast<unsigned char>(text[i]))) ++i;
    if (i > start) words.push_back(text.substr(start, i - start));
  }
  return words;
}

inline std::size_t word_count(std::string_view text) { return split_words(text).size(); }

inline bool contains(std::string_view haystack, std::string_view needle) noexcept {
  return haystack.find(needle) != std::string_view::npos;
}

/// Whole-word (or whole-phrase) containment; both arguments lowercase.
inline bool contains_phrase(std::string_view haystack, std::string_view phrase) noexcept {
  std::size_t pos = haystack.find(phrase);
  while (pos != std::string_view::npos) {
    const bool start_ok = pos == 0 || !is_word_byte(haystack[pos - 1]);
    const std::size_t end = pos + phrase.size();
    const bool end_ok = end == haystack.size() || !is_word_byte(haystack[end]);
    if (start_ok && end_ok) return true;
    pos = haystack.find(phrase, pos + 1);
  }
  return false;
}

inline std::string replace_all(std::string text, std::string_view from, std::string_view to) {
  if (from.empty()) return text;
  std::size_t pos = 0;
  while ((pos = text.find(from, pos)) != std::string::npos) {
    text.replace(pos, from.size(), to);
    pos += to.size();
  }
  return text;
}

}  // namespace vizchat::detail
