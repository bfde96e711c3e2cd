#include "symtwist/spinor_form.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace symtwist {

std::optional<std::pair<FormIndex, int>> wedge_insert(const FormIndex& f, int i) {
  auto it = std::lower_bound(f.begin(), f.end(), i);
  if (it != f.end() && *it == i) return std::nullopt;
  FormIndex out;
  out.reserve(f.size() + 1);
  out.insert(out.end(), f.begin(), it);
  out.push_back(i);
  out.insert(out.end(), it, f.end());
  int pos = static_cast<int>(it - f.begin());
  return std::make_pair(std::move(out), pos % 2 == 0 ? 1 : -1);
}

std::optional<std::pair<FormIndex, int>> contract_index(const FormIndex& f, int i) {
  auto it = std::lower_bound(f.begin(), f.end(), i);
  if (it == f.end() || *it != i) return std::nullopt;
  FormIndex out;
  out.reserve(f.size() - 1);
  out.insert(out.end(), f.begin(), it);
  out.insert(out.end(), it + 1, f.end());
  int pos = static_cast<int>(it - f.begin());
  return std::make_pair(std::move(out), pos % 2 == 0 ? 1 : -1);
}

int oscillator_weight(int l, const FormIndex& f, const Exponents& e) {
  int w = total_degree(e);
  for (int idx : f) w += idx <= l ? -1 : 1;
  return w;
}

bool FormKeyLess::operator()(const FormKey& a, const FormKey& b) const {
  if (a.form.size() != b.form.size()) return a.form.size() < b.form.size();
  if (a.form != b.form) return a.form < b.form;
  return GradedLexLess{}(a.exps, b.exps);
}

SpinorForm::SpinorForm(int l, int cap) : l_(l), cap_(cap) {
  if (l < 1 || cap < 0) throw std::invalid_argument("SpinorForm: bad shape");
}

SpinorForm SpinorForm::term(int l, int cap, FormIndex f, Exponents e, Scalar c) {
  SpinorForm out(l, cap);
  out.add_term(f, e, c);
  return out;
}

SpinorForm SpinorForm::from_poly(FormIndex f, const PolySpinor& s) {
  SpinorForm out(s.l(), s.cap());
  for (const auto& [e, c] : s.terms()) out.add_term(f, e, c);
  return out;
}

void SpinorForm::add_term(const FormIndex& f, const Exponents& e, const Scalar& c) {
  for (size_t k = 0; k < f.size(); ++k) {
    if (f[k] < 1 || f[k] > dim() || (k > 0 && f[k] <= f[k - 1]))
      throw std::invalid_argument("SpinorForm: form index not strictly increasing in range");
  }
  if (static_cast<int>(e.size()) != l_) throw std::invalid_argument("SpinorForm: bad arity");
  for (int x : e)
    if (x < 0) throw std::invalid_argument("SpinorForm: negative exponent");
  if (total_degree(e) > cap_)
    throw std::logic_error("SpinorForm: term exceeds degree cap (operators must widen caps)");
  if (c.is_zero()) return;
  FormKey key{f, e};
  auto [it, inserted] = terms_.try_emplace(key, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

Scalar SpinorForm::coeff(const FormIndex& f, const Exponents& e) const {
  auto it = terms_.find(FormKey{f, e});
  return it == terms_.end() ? Scalar() : it->second;
}

PolySpinor SpinorForm::poly_at(const FormIndex& f) const {
  PolySpinor out(l_, cap_);
  for (const auto& [key, c] : terms_)
    if (key.form == f) out.add_term(key.exps, c);
  return out;
}

SpinorForm SpinorForm::with_cap(int new_cap) const {
  SpinorForm out(l_, new_cap);
  for (const auto& [key, c] : terms_) out.add_term(key.form, key.exps, c);
  return out;
}

SpinorForm& SpinorForm::operator+=(const SpinorForm& o) {
  if (l_ != o.l_) throw std::invalid_argument("SpinorForm: mixed dimensions");
  if (o.cap_ > cap_) cap_ = o.cap_;
  for (const auto& [key, c] : o.terms_) add_term(key.form, key.exps, c);
  return *this;
}

SpinorForm SpinorForm::scaled(const Scalar& c) const {
  SpinorForm out(l_, cap_);
  if (c.is_zero()) return out;
  for (const auto& [key, v] : terms_) out.terms_.emplace(key, v * c);
  return out;
}

std::optional<int> SpinorForm::form_degree() const {
  std::optional<int> d;
  for (const auto& [key, c] : terms_) {
    int fd = static_cast<int>(key.form.size());
    if (d && *d != fd) return std::nullopt;
    d = fd;
  }
  return d;
}

std::optional<int> SpinorForm::weight() const {
  std::optional<int> w;
  for (const auto& [key, c] : terms_) {
    int tw = oscillator_weight(l_, key.form, key.exps);
    if (w && *w != tw) return std::nullopt;
    w = tw;
  }
  return w;
}

std::optional<int> SpinorForm::parity() const {
  std::optional<int> p;
  for (const auto& [key, c] : terms_) {
    int tp = total_degree(key.exps) % 2;
    if (p && *p != tp) return std::nullopt;
    p = tp;
  }
  return p;
}

std::map<std::pair<int, int>, SpinorForm> SpinorForm::sector_split() const {
  std::map<std::pair<int, int>, SpinorForm> out;
  for (const auto& [key, c] : terms_) {
    std::pair<int, int> sector{static_cast<int>(key.form.size()),
                               oscillator_weight(l_, key.form, key.exps)};
    auto it = out.find(sector);
    if (it == out.end()) it = out.emplace(sector, SpinorForm(l_, cap_)).first;
    it->second.add_term(key.form, key.exps, c);
  }
  return out;
}

std::string SpinorForm::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [key, c] : terms_) {
    if (!first) os << " + ";
    first = false;
    os << "(" << c.str() << ")*e[";
    for (size_t k = 0; k < key.form.size(); ++k) os << (k ? "," : "") << key.form[k];
    os << "]x^[";
    for (size_t k = 0; k < key.exps.size(); ++k) os << (k ? "," : "") << key.exps[k];
    os << "]";
  }
  return os.str();
}

}  // namespace symtwist
