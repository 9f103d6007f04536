#include "gsb/word.hpp"

#include <algorithm>
#include <sstream>

namespace gsb {

Word Word::operator*(const Word& other) const {
  Word r;
  r.letters.reserve(size() + other.size());
  r.letters.insert(r.letters.end(), letters.begin(), letters.end());
  r.letters.insert(r.letters.end(), other.letters.begin(),
                   other.letters.end());
  return r;
}

Word Word::pow(unsigned m) const {
  Word r;
  r.letters.reserve(size() * m);
  for (unsigned i = 0; i < m; ++i)
    r.letters.insert(r.letters.end(), letters.begin(), letters.end());
  return r;
}

Word Word::sub(std::size_t pos, std::size_t len) const {
  Word r;
  r.letters.assign(letters.begin() + pos, letters.begin() + pos + len);
  return r;
}

bool Word::matches_at(const Word& factor, std::size_t pos) const {
  if (pos + factor.size() > size()) return false;
  return std::equal(factor.letters.begin(), factor.letters.end(),
                    letters.begin() + pos);
}

std::optional<std::size_t> Word::find(const Word& factor) const {
  if (factor.size() > size()) return std::nullopt;
  for (std::size_t p = 0; p + factor.size() <= size(); ++p)
    if (matches_at(factor, p)) return p;
  return std::nullopt;
}

void Word::check_over(const Alphabet& alpha) const {
  for (Letter x : letters)
    if (x < 0 || x >= alpha.size())
      throw DomainError("letter index out of range for alphabet");
}

Word word_from_names(const Alphabet& alpha, std::string_view text) {
  Word w;
  // "1" denotes the empty word unless it names a letter
  if (text == "1" && alpha.index("1") < 0) return w;
  std::size_t i = 0;
  while (i < text.size()) {
    if (text[i] == ' ' || text[i] == '\t') {
      ++i;
      continue;
    }
    // greedy longest match against letter names
    int best = -1;
    std::size_t best_len = 0;
    for (int l = 0; l < alpha.size(); ++l) {
      const std::string& nm = alpha.name(l);
      if (nm.size() > best_len && text.substr(i, nm.size()) == nm) {
        best = l;
        best_len = nm.size();
      }
    }
    if (best < 0)
      throw DomainError("unknown letter at '" + std::string(text.substr(i)) +
                        "'");
    w.letters.push_back(best);
    i += best_len;
  }
  return w;
}

std::string to_string(const Alphabet& alpha, const Word& w) {
  if (w.empty()) return "1";
  bool single = true;
  for (const auto& nm : alpha.letters()) single = single && nm.size() == 1;
  std::ostringstream os;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i && !single) os << ' ';
    os << alpha.name(w[i]);
  }
  return os.str();
}

}  // namespace gsb
