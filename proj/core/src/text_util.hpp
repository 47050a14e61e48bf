#ifndef HAHN_SRC_TEXT_UTIL_HPP
#define HAHN_SRC_TEXT_UTIL_HPP

#include <string_view>
#include <vector>

namespace hahn::detail {

// Splits on `sep` outside parentheses and braces.
inline std::vector<std::string_view> split_top_level(std::string_view text, char sep) {
  std::vector<std::string_view> parts;
  int depth = 0;
  std::size_t start = 0;
  for (std::size_t i = 0; i < text.size(); ++i) {
    const char c = text[i];
    if (c == '(' || c == '{') ++depth;
    if (c == ')' || c == '}') --depth;
    if (c == sep && depth == 0) {
      parts.push_back(text.substr(start, i - start));
      start = i + 1;
    }
  }
  parts.push_back(text.substr(start));
  return parts;
}

}  // namespace hahn::detail

#endif  // HAHN_SRC_TEXT_UTIL_HPP
