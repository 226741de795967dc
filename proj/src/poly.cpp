#include "nccomb/poly.hpp"

#include <algorithm>
#include <deque>
#include <mutex>
#include <sstream>
#include <stdexcept>
#include <unordered_map>

namespace nccomb {

namespace {

struct Registry {
  std::mutex mutex;
  std::unordered_map<std::string, Poly::Variable> ids;
  std::deque<std::string> names;
};

Registry& registry() {
  static Registry r;
  return r;
}

Poly::Monomial merge(const Poly::Monomial& a, const Poly::Monomial& b) {
  Poly::Monomial out;
  out.reserve(a.size() + b.size());
  std::merge(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

}  // namespace

Poly::Poly(const Rational& constant) {
  if (sgn(constant) != 0) terms_.emplace(Monomial{}, constant);
}

Poly::Variable Poly::intern(std::string_view name) {
  auto& r = registry();
  std::lock_guard lock(r.mutex);
  std::string key(name);
  if (auto it = r.ids.find(key); it != r.ids.end()) return it->second;
  const auto id = static_cast<Variable>(r.names.size());
  r.names.push_back(key);
  r.ids.emplace(std::move(key), id);
  return id;
}

std::string Poly::variable_name(Variable v) {
  auto& r = registry();
  std::lock_guard lock(r.mutex);
  if (v >= r.names.size()) throw std::out_of_range("unknown polynomial variable id");
  return r.names[v];
}

Poly Poly::variable(std::string_view name) {
  Poly p;
  p.terms_.emplace(Monomial{intern(name)}, Rational(1));
  return p;
}

bool Poly::is_constant() const noexcept {
  return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.empty());
}

Rational Poly::constant_term() const {
  auto it = terms_.find(Monomial{});
  return it == terms_.end() ? Rational(0) : it->second;
}

void Poly::add_term(const Monomial& m, const Rational& c) {
  if (sgn(c) == 0) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (sgn(it->second) == 0) terms_.erase(it);
  }
}

Poly& Poly::operator+=(const Poly& other) {
  for (const auto& [m, c] : other.terms_) add_term(m, c);
  return *this;
}

Poly& Poly::operator-=(const Poly& other) {
  for (const auto& [m, c] : other.terms_) add_term(m, Rational(-c));
  return *this;
}

Poly operator*(const Poly& a, const Poly& b) {
  Poly out;
  if (a.is_zero() || b.is_zero()) return out;
  for (const auto& [ma, ca] : a.terms_) {
    for (const auto& [mb, cb] : b.terms_) out.add_term(merge(ma, mb), Rational(ca * cb));
  }
  return out;
}

Poly& Poly::operator*=(const Poly& other) {
  *this = *this * other;
  return *this;
}

Poly& Poly::operator*=(const Rational& factor) {
  if (sgn(factor) == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [m, c] : terms_) c *= factor;
  return *this;
}

Poly operator-(Poly a) {
  for (auto& [m, c] : a.terms_) c = -c;
  return a;
}

std::vector<std::pair<Rational, std::vector<std::pair<std::string, unsigned>>>>
Poly::named_terms() const {
  std::vector<std::pair<Rational, std::vector<std::pair<std::string, unsigned>>>> out;
  for (const auto& [m, c] : terms_) {
    std::vector<std::pair<std::string, unsigned>> powers;
    for (std::size_t i = 0; i < m.size();) {
      std::size_t j = i;
      while (j < m.size() && m[j] == m[i]) ++j;
      powers.emplace_back(variable_name(m[i]), static_cast<unsigned>(j - i));
      i = j;
    }
    std::sort(powers.begin(), powers.end());
    out.emplace_back(c, std::move(powers));
  }
  std::sort(out.begin(), out.end(), [](const auto& x, const auto& y) {
    if (x.second.size() != y.second.size()) return x.second.size() < y.second.size();
    return x.second < y.second;
  });
  return out;
}

std::string Poly::to_string() const {
  if (is_zero()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& [c, powers] : named_terms()) {
    const bool negative = sgn(c) < 0;
    Rational magnitude = abs(c);
    if (first) {
      if (negative) out << '-';
    } else {
      out << (negative ? " - " : " + ");
    }
    first = false;
    const bool unit = magnitude == 1;
    if (!unit || powers.empty()) out << magnitude.get_str();
    for (std::size_t i = 0; i < powers.size(); ++i) {
      if (i || !unit) out << '*';
      out << powers[i].first;
      if (powers[i].second > 1) out << '^' << powers[i].second;
    }
  }
  return out.str();
}

}  // namespace nccomb
