#pragma once

#include "selfsim/action.hpp"
#include "selfsim/katsura.hpp"

#include <optional>
#include <string>
#include <string_view>

namespace selfsim::cli {

// A loaded instance: either explicit graph/group/action blocks or a katsura block.
struct SpecFile {
  std::shared_ptr<SelfSimilarAction> action;
  std::optional<KatsuraSpec> katsura;
  std::string origin;  // file name or "<string>"
};

// Line-oriented; `#` starts a comment. Throws ParseError / SemanticError with
// the offending line and column.
SpecFile parse_spec(std::string_view text, std::string origin = "<string>");
SpecFile load_spec(const std::string& path);

}  // namespace selfsim::cli
