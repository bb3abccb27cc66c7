#pragma once

// Shared line-oriented scanning for the graph and instance text formats.
// Internal to the library; not installed.

#include <string_view>
#include <vector>

#include "twopaths/graph.hpp"

namespace twopaths::detail {

struct TextCursor {
  std::string_view text;
  std::size_t pos = 0;
  int line_no = 0;  // physical line of the most recently returned line

  // Next content line, with comments ('#' first non-space char) and blank
  // lines skipped. Returns false at end of input.
  bool next_line(std::string_view& out);
};

std::vector<std::string_view> split_tokens(std::string_view line);

// Non-negative integer token; anything else raises ParseError{BadToken}.
long long parse_int_token(std::string_view token, int line, const char* what);

// Parses "n m" plus m edge lines starting at the cursor, leaving the cursor
// just past the block.
Graph parse_graph_block(TextCursor& cursor);

}  // namespace twopaths::detail
