#include "vesicle/laurent_poly.hpp"

#include <cmath>
#include <sstream>

#include "vesicle/errors.hpp"

namespace vesicle {

LaurentPoly3::LaurentPoly3(Terms terms) : terms_(std::move(terms)) {
  std::erase_if(terms_, [](const auto& kv) { return kv.second == 0; });
}

LaurentPoly3 LaurentPoly3::constant(const BigInt& value) { return monomial({0, 0, 0}, value); }

LaurentPoly3 LaurentPoly3::monomial(Monomial m, const BigInt& coeff) {
  LaurentPoly3 p;
  p.add_term(m, coeff);
  return p;
}

BigInt LaurentPoly3::coefficient(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? BigInt(0) : it->second;
}

void LaurentPoly3::add_term(const Monomial& m, const BigInt& coeff) {
  if (coeff == 0) return;
  auto [it, inserted] = terms_.try_emplace(m, coeff);
  if (!inserted) {
    it->second += coeff;
    if (it->second == 0) terms_.erase(it);
  }
}

LaurentPoly3& LaurentPoly3::operator+=(const LaurentPoly3& other) {
  for (const auto& [m, k] : other.terms_) add_term(m, k);
  return *this;
}

LaurentPoly3 operator*(const LaurentPoly3& a, const LaurentPoly3& b) {
  LaurentPoly3 out;
  for (const auto& [ma, ka] : a.terms_) {
    for (const auto& [mb, kb] : b.terms_) {
      out.add_term({ma.c + mb.c, ma.s + mb.s, ma.q + mb.q}, ka * kb);
    }
  }
  return out;
}

LaurentPoly3 LaurentPoly3::shifted(int dc, int ds, int dq) const {
  LaurentPoly3 out;
  for (const auto& [m, k] : terms_) out.terms_.emplace_hint(out.terms_.end(), Monomial{m.c + dc, m.s + ds, m.q + dq}, k);
  return out;
}

long double LaurentPoly3::evaluate(long double c, long double s, long double q) const {
  long double sum = 0.0L;
  for (const auto& [m, k] : terms_) {
    sum += k.convert_to<long double>() * std::pow(c, m.c) * std::pow(s, m.s) * std::pow(q, m.q);
  }
  return sum;
}

BigInt LaurentPoly3::total() const {
  BigInt sum = 0;
  for (const auto& kv : terms_) sum += kv.second;
  return sum;
}

bool LaurentPoly3::all_coefficients_positive() const {
  for (const auto& kv : terms_) {
    if (kv.second <= 0) return false;
  }
  return true;
}

LaurentPoly3 LaurentPoly3::s_reflected() const {
  LaurentPoly3 out;
  for (const auto& [m, k] : terms_) out.terms_.emplace(Monomial{m.c, -m.s, m.q}, k);
  return out;
}

nlohmann::json to_json(const LaurentPoly3& p) {
  auto arr = nlohmann::json::array();
  // std::map iteration order is the lexicographic (c, s, q) order.
  for (const auto& [m, k] : p.terms()) {
    arr.push_back({{"c", m.c}, {"s", m.s}, {"q", m.q}, {"coeff", k.str()}});
  }
  return arr;
}

LaurentPoly3 laurent_from_json(const nlohmann::json& j) {
  if (!j.is_array()) throw DomainError("polynomial JSON must be an array");
  LaurentPoly3 p;
  for (const auto& term : j) {
    Monomial m{term.at("c").get<int>(), term.at("s").get<int>(), term.at("q").get<int>()};
    p.add_term(m, BigInt(term.at("coeff").get<std::string>()));
  }
  return p;
}

std::string to_string(const LaurentPoly3& p) {
  if (p.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  auto factor = [&out](const char* name, int e, bool& any) {
    if (e == 0) return;
    if (any) out << '*';
    out << name;
    if (e != 1) out << '^' << e;
    any = true;
  };
  for (const auto& [m, k] : p.terms()) {
    if (!first) out << " + ";
    first = false;
    bool any = false;
    if (k != 1 || (m.c == 0 && m.s == 0 && m.q == 0)) {
      out << k;
      any = true;
    }
    factor("c", m.c, any);
    factor("s", m.s, any);
    factor("q", m.q, any);
  }
  return out.str();
}

}  // namespace vesicle
