#pragma once

#include <initializer_list>
#include <memory>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "gsb/errors.hpp"

namespace gsb {

class Alphabet;
using AlphabetPtr = std::shared_ptr<const Alphabet>;

/// An ordered list of distinct, non-empty letter names. The list order is the
/// default base order on letters.
class Alphabet {
 public:
  explicit Alphabet(std::vector<std::string> letters);

  static AlphabetPtr make(std::vector<std::string> letters);
  static AlphabetPtr make(std::initializer_list<const char*> letters);

  int size() const { return static_cast<int>(letters_.size()); }
  const std::string& name(int letter) const { return letters_.at(letter); }
  const std::vector<std::string>& letters() const { return letters_; }

  /// Index of a letter name, or -1 when unknown.
  int index(std::string_view name) const;

  bool operator==(const Alphabet& other) const {
    return letters_ == other.letters_;
  }

 private:
  std::vector<std::string> letters_;
  std::unordered_map<std::string, int> index_;
};

bool same_alphabet(const AlphabetPtr& a, const AlphabetPtr& b);
void require_same_alphabet(const AlphabetPtr& a, const AlphabetPtr& b);

}  // namespace gsb
