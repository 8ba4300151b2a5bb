#ifndef RDFGEN_GEN_REGEX_GEN_HPP
#define RDFGEN_GEN_REGEX_GEN_HPP

#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "rdfgen/gen/random.hpp"

namespace rdfgen::gen {

/// A parsed regex over the supported subset: literals, character classes
/// (ranges, negation), \d \w \s escapes, '.', groups, alternation, the
/// quantifiers ? * + {n} {m,n} {m,}, and outer ^ $ anchors. Every sampled
/// string full-matches the source pattern; unbounded quantifiers expand to a
/// count uniform in [0,10] for '*', [1,10] for '+', [m, m+10] for '{m,}'.
///
/// Backreferences, lookaround and word boundaries throw
/// Error(UnsupportedRegexFeature) naming the construct.
class RegexProgram {
 public:
  static RegexProgram parse(std::string_view pattern);

  const std::string& pattern() const { return pattern_; }

  std::string sample(Rng& rng) const;

  /// Every string of the pattern's language, for test oracles. Throws
  /// Error(InvalidArgument) when the language exceeds `limit` strings.
  std::vector<std::string> enumerate(std::size_t limit = 100000) const;

  RegexProgram(RegexProgram&&) noexcept;
  RegexProgram& operator=(RegexProgram&&) noexcept;
  ~RegexProgram();

  struct Alternation;

 private:
  RegexProgram();
  std::string pattern_;
  std::unique_ptr<Alternation> root_;
  friend class RegexParser;
};

}  // namespace rdfgen::gen

#endif
