#pragma once

#include <string>
#include <vector>

#include "gsb/completion.hpp"
#include "gsb/growth.hpp"
#include "gsb/presentation.hpp"
#include "gsb/text.hpp"

namespace gsb::testing {

inline const char* kG23System = R"(gsbsys 1
alphabet a b c
order deglex a < b < c
rule a a -> 1
rule b b -> 1
rule c c -> 1
rule b c a -> a c b
rule c a b -> b a c
rule c b a -> a b c
schema b (a c)^m b -> (c a)^m for m >= 1
)";

inline const char* kG23Presentation = R"(gsbpres 1
alphabet a b c
order deglex a < b < c
relations:
a a = 1
b b = 1
c c = 1
b c a = a c b
c a b = b a c
c b a = a b c
)";

inline const char* kG43System = R"(gsbsys 1
alphabet a b c d
order tower a > b > c > d
rule a a -> 1
rule b b -> 1
rule c c -> 1
rule d d -> 1
rule b a -> c d a b c d
rule b c d a -> a d c b
rule b c a -> d a c b d
rule b d a -> c a d b c
rule d c a -> c d a b c d c d b
rule d c d a -> c a b d c d c b
)";

inline RewriteSystem g23_system() { return parse_system(kG23System); }
inline Presentation g23_presentation() {
  return parse_presentation(kG23Presentation);
}
inline RewriteSystem g43_system() { return parse_system(kG43System); }

inline Word w(const Alphabet& alpha, const std::string& names) {
  return word_from_names(alpha, names);
}

/// All words over the alphabet of length exactly `len`, storage order.
inline std::vector<Word> words_of_length(const AlphabetPtr& alpha,
                                         std::size_t len) {
  std::vector<Word> cur{Word{}};
  for (std::size_t i = 0; i < len; ++i) {
    std::vector<Word> nxt;
    for (const Word& u : cur)
      for (Letter x = 0; x < alpha->size(); ++x) nxt.push_back(u * Word({x}));
    cur = std::move(nxt);
  }
  return cur;
}

inline std::vector<Word> words_up_to(const AlphabetPtr& alpha,
                                     std::size_t max_len) {
  std::vector<Word> out;
  for (std::size_t len = 0; len <= max_len; ++len)
    for (Word& u : words_of_length(alpha, len)) out.push_back(std::move(u));
  return out;
}

}  // namespace gsb::testing
