#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

#include "gbei/graph.hpp"

namespace gbei {

/// Malformed serialized input.
class FormatError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Decodes one graph6 line (an optional ">>graph6<<" header and a trailing
/// newline are accepted). Throws FormatError on a bad length byte, a
/// character outside [63, 126], a short payload, nonzero padding bits, or
/// trailing characters.
Graph graph6_decode(std::string_view line);

/// graph6 text for g, without newline. Requires a contiguous labeling.
std::string graph6_encode(const Graph& g);

}  // namespace gbei
