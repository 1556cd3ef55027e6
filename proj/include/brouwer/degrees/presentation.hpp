#pragma once

#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace brouwer {

/// Generators and relations for a finite degree structure.
///
/// A pair (g, h) in `below` says g ≤ h: every degree above h is above g.
/// The name "top" may appear on either side and denotes the jump degree.
/// Each trigger is a set of generators whose join jumps to top.  Each `keep`
/// set must have its join strictly below top; generators always must.
struct Presentation {
  std::vector<std::string> generators;
  std::vector<std::pair<std::string, std::string>> below;
  std::vector<std::vector<std::string>> triggers;
  std::vector<std::vector<std::string>> keep;

  /// A copy without trigger number `index`.
  [[nodiscard]] Presentation without_trigger(std::size_t index) const;
};

/// Reserved name for the jump degree in presentations.
inline constexpr std::string_view kTopName = "top";

/// Line format:
///
///     generators: a1 a2 b1 b2
///     below: a1<=b1
///     jump: b1 b2
///     keep: b1 a1
///
/// '#' starts a comment line.  Throws InvalidInput or UnknownElement.
Presentation parse_presentation(std::string_view text);

std::string format_presentation(const Presentation& p);

/// Every consistent presentation on 1..max_generators generators, up to
/// renaming of generators: one per (partial order on the generators,
/// family of joins kept below top).  Generators are named g1, g2, ...
std::vector<Presentation> enumerate_small_presentations(std::size_t max_generators);

}  // namespace brouwer
