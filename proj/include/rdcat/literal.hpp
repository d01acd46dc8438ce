#pragma once

// Morphism literal framing shared by all categories:
//   tag(n->m){ item ; item ; ... }

#include <cctype>
#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "rdcat/rig.hpp"
#include "rdcat/text.hpp"

namespace rdcat {

struct LiteralHeader {
  std::size_t dom = 0;
  std::size_t cod = 0;
};

inline std::string signature_text(const LiteralHeader& h) {
  return std::to_string(h.dom) + "->" + std::to_string(h.cod);
}

/// Reads `tag(n->m){` and leaves the cursor inside the braces.
inline LiteralHeader read_literal_header(Cursor& in, std::string_view tag) {
  in.skip_ws();
  if (!in.consume_word(tag)) in.fail("expected a " + std::string(tag) + "(n->m){...} literal");
  in.expect('(');
  in.skip_ws();
  auto dom_text = in.take_digits();
  if (dom_text.empty()) in.fail("expected a domain arity");
  if (!in.consume_literal("->")) in.fail("expected '->'");
  in.skip_ws();
  auto cod_text = in.take_digits();
  if (cod_text.empty()) in.fail("expected a codomain arity");
  in.expect(')');
  in.expect('{');
  return {detail::parse_integer<std::size_t>(dom_text), detail::parse_integer<std::size_t>(cod_text)};
}

/// Reads `count` items separated by ';' and the closing '}'. A zero count
/// accepts only an empty body.
template <class ReadItem>
void read_literal_body(Cursor& in, const LiteralHeader& h, std::size_t count, ReadItem&& read_item) {
  for (std::size_t i = 0; i < count; ++i) {
    if (i > 0 && !in.consume(';')) {
      in.fail("signature " + signature_text(h) + " needs " + std::to_string(count) + " entries, found " +
              std::to_string(i));
    }
    read_item(i);
  }
  if (in.peek() == ';') {
    in.fail("signature " + signature_text(h) + " needs " + std::to_string(count) + " entries, found more");
  }
  in.expect('}');
}

/// Leading tag of a literal ("poly", "mat", "smooth"), or empty.
inline std::string literal_tag(std::string_view text) {
  std::size_t i = 0;
  while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
  std::size_t j = i;
  while (j < text.size() && std::isalpha(static_cast<unsigned char>(text[j]))) ++j;
  return std::string(text.substr(i, j - i));
}

/// Joins body items as `{ a ; b }`, or `{ }` when there are none.
inline std::string literal_body(const std::vector<std::string>& items) {
  if (items.empty()) return "{ }";
  std::string out = "{ ";
  for (std::size_t i = 0; i < items.size(); ++i) {
    if (i > 0) out += " ; ";
    out += items[i];
  }
  return out + " }";
}

}  // namespace rdcat
