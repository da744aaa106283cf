#include "rinf/integer.hpp"

#include <cctype>
#include <string>

#include "rinf/errors.hpp"

namespace rinf {

Integer parse_integer(std::string_view text) {
  std::size_t pos = 0;
  while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  std::size_t end = text.size();
  while (end > pos && std::isspace(static_cast<unsigned char>(text[end - 1]))) --end;
  std::string body(text.substr(pos, end - pos));
  if (!body.empty() && body.front() == '+') body.erase(0, 1);
  std::size_t digits = (!body.empty() && body.front() == '-') ? 1 : 0;
  if (digits == body.size()) throw InputError("not an integer: '" + std::string(text) + "'");
  for (std::size_t i = digits; i < body.size(); ++i)
    if (!std::isdigit(static_cast<unsigned char>(body[i])))
      throw InputError("not an integer: '" + std::string(text) + "'");
  return Integer(body, 10);
}

}  // namespace rinf
