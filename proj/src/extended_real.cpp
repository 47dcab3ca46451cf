#include "spiralbound/extended_real.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <stdexcept>

#include "spiralbound/errors.hpp"

namespace spiralbound {

std::string ExtendedReal::to_string() const {
  if (is_pos_inf()) return "+inf";
  if (is_neg_inf()) return "-inf";
  char buf[64];
  auto [end, ec] = std::to_chars(buf, buf + sizeof(buf), value_);
  return std::string(buf, end);
}

ExtendedReal ExtendedReal::parse(const std::string& text) {
  std::string t;
  std::transform(text.begin(), text.end(), std::back_inserter(t),
                 [](unsigned char ch) { return static_cast<char>(std::tolower(ch)); });
  if (t == "+inf" || t == "inf" || t == "+infinity" || t == "infinity") return pos_inf();
  if (t == "-inf" || t == "-infinity") return neg_inf();
  double v = 0.0;
  auto [end, ec] = std::from_chars(t.data(), t.data() + t.size(), v);
  if (ec != std::errc() || end != t.data() + t.size()) {
    throw InputError("not an extended real: '" + text + "'");
  }
  return from_double(v);
}

}  // namespace spiralbound
