#include "gsb/polynomial.hpp"

#include <sstream>

namespace gsb {

Polynomial Polynomial::term(AlphabetPtr alpha, Word w, Coefficient c) {
  Polynomial p(std::move(alpha));
  w.check_over(*p.alpha_);
  p.add_term(w, c);
  return p;
}

Coefficient Polynomial::coefficient(const Word& w) const {
  auto it = terms_.find(w);
  return it == terms_.end() ? Coefficient(0) : it->second;
}

void Polynomial::add_term(const Word& w, const Coefficient& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.emplace(w, c);
  if (!inserted) {
    it->second = it->second + c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

Polynomial Polynomial::operator+(const Polynomial& o) const {
  require_same_alphabet(alpha_, o.alpha_);
  Polynomial r = *this;
  for (const auto& [w, c] : o.terms_) r.add_term(w, c);
  return r;
}

Polynomial Polynomial::operator-(const Polynomial& o) const {
  require_same_alphabet(alpha_, o.alpha_);
  Polynomial r = *this;
  for (const auto& [w, c] : o.terms_) r.add_term(w, -c);
  return r;
}

Polynomial Polynomial::operator-() const {
  Polynomial r(alpha_);
  for (const auto& [w, c] : terms_) r.terms_.emplace(w, -c);
  return r;
}

Polynomial Polynomial::operator*(const Polynomial& o) const {
  require_same_alphabet(alpha_, o.alpha_);
  Polynomial r(alpha_);
  for (const auto& [u, cu] : terms_)
    for (const auto& [v, cv] : o.terms_) r.add_term(u * v, cu * cv);
  return r;
}

Polynomial Polynomial::scaled(const Coefficient& c) const {
  Polynomial r(alpha_);
  if (c.is_zero()) return r;
  for (const auto& [w, cw] : terms_) r.add_term(w, cw * c);
  return r;
}

Polynomial Polynomial::conjugated(const Word& a, const Word& b) const {
  Polynomial r(alpha_);
  for (const auto& [w, c] : terms_) r.add_term(a * w * b, c);
  return r;
}

std::pair<Word, Coefficient> Polynomial::leading(
    const MonomialOrder& ord) const {
  if (terms_.empty())
    throw EmptyPolynomialError("leading term of the zero polynomial");
  auto best = terms_.begin();
  for (auto it = std::next(terms_.begin()); it != terms_.end(); ++it)
    if (ord.less(best->first, it->first)) best = it;
  return {best->first, best->second};
}

Polynomial Polynomial::monic(const MonomialOrder& ord) const {
  auto [w, c] = leading(ord);
  if (c.is_one()) return *this;
  return scaled(c.inverse());
}

std::string Polynomial::str(const Alphabet& alpha) const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [w, c] : terms_) {
    Coefficient cc = c;
    if (!first) {
      bool neg = cc.characteristic() == 0 && cc.value() < 0;
      os << (neg ? " - " : " + ");
      if (neg) cc = -cc;
    }
    if (w.empty())
      os << cc.str();
    else if (cc.is_one())
      os << to_string(alpha, w);
    else
      os << cc.str() << "*" << to_string(alpha, w);
    first = false;
  }
  return os.str();
}

}  // namespace gsb
