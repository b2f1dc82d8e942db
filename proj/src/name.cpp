#include "nomaut/name.hpp"

#include <charconv>

namespace nomaut {

std::string to_string(Name n) {
  if (n.index < 26) return std::string(1, static_cast<char>('a' + n.index));
  return "#" + std::to_string(n.index);
}

std::optional<Name> parse_name(std::string_view text) {
  if (text.size() == 1 && text[0] >= 'a' && text[0] <= 'z')
    return Name(static_cast<std::uint32_t>(text[0] - 'a'));
  if (text.size() < 2 || text[0] != '#') return std::nullopt;
  std::uint32_t value = 0;
  const char* first = text.data() + 1;
  const char* last = text.data() + text.size();
  auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec != std::errc{} || ptr != last) return std::nullopt;
  // `#k` is reserved for k >= 26 so that rendering stays bijective.
  if (value < 26) return std::nullopt;
  return Name(value);
}

Name least_fresh(const NameSet& avoid) {
  std::uint32_t i = 0;
  for (Name n : avoid) {
    if (n.index != i) break;
    ++i;
  }
  return Name(i);
}

NameSet pool_names(std::size_t size) {
  NameSet out;
  for (std::size_t i = 0; i < size; ++i) out.insert(Name(static_cast<std::uint32_t>(i)));
  return out;
}

}  // namespace nomaut
