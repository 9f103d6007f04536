#include "gsb/alphabet.hpp"

namespace gsb {

Alphabet::Alphabet(std::vector<std::string> letters)
    : letters_(std::move(letters)) {
  for (int i = 0; i < static_cast<int>(letters_.size()); ++i) {
    if (letters_[i].empty())
      throw DomainError("alphabet letter names must be non-empty");
    if (!index_.emplace(letters_[i], i).second)
      throw DomainError("duplicate letter name '" + letters_[i] + "'");
  }
}

AlphabetPtr Alphabet::make(std::vector<std::string> letters) {
  return std::make_shared<const Alphabet>(std::move(letters));
}

AlphabetPtr Alphabet::make(std::initializer_list<const char*> letters) {
  std::vector<std::string> v(letters.begin(), letters.end());
  return make(std::move(v));
}

int Alphabet::index(std::string_view name) const {
  auto it = index_.find(std::string(name));
  return it == index_.end() ? -1 : it->second;
}

bool same_alphabet(const AlphabetPtr& a, const AlphabetPtr& b) {
  if (a == b) return true;
  if (!a || !b) return false;
  return *a == *b;
}

void require_same_alphabet(const AlphabetPtr& a, const AlphabetPtr& b) {
  if (!same_alphabet(a, b)) throw DomainError("alphabet mismatch");
}

}  // namespace gsb
