#include "dexter/poly.hpp"

#include <algorithm>
#include <mutex>

namespace dexter {

const char* var_name(Var v) {
  static const char* names[kVarCount] = {"t", "s", "x", "r", "b", "q"};
  return names[static_cast<size_t>(v)];
}

int Monomial::total_degree() const {
  int total = 0;
  for (int e : exp) total += e;
  return total;
}

bool Monomial::divides(const Monomial& other) const {
  for (int v = 0; v < kVarCount; ++v)
    if (exp[static_cast<size_t>(v)] > other.exp[static_cast<size_t>(v)])
      return false;
  return true;
}

Monomial operator*(const Monomial& a, const Monomial& b) {
  Monomial out;
  for (int v = 0; v < kVarCount; ++v)
    out.exp[static_cast<size_t>(v)] = static_cast<std::uint16_t>(
        a.exp[static_cast<size_t>(v)] + b.exp[static_cast<size_t>(v)]);
  return out;
}

Monomial operator/(const Monomial& a, const Monomial& b) {
  Monomial out;
  for (int v = 0; v < kVarCount; ++v)
    out.exp[static_cast<size_t>(v)] = static_cast<std::uint16_t>(
        a.exp[static_cast<size_t>(v)] - b.exp[static_cast<size_t>(v)]);
  return out;
}

IntPoly::IntPoly(int constant) : IntPoly(BigInt(constant)) {}

IntPoly::IntPoly(BigInt constant) {
  if (constant != 0) terms_.emplace(Monomial{}, std::move(constant));
}

IntPoly IntPoly::variable(Var v, int power) {
  Monomial m;
  m.exp[static_cast<size_t>(v)] = static_cast<std::uint16_t>(power);
  return term(1, m);
}

IntPoly IntPoly::term(BigInt coefficient, Monomial m) {
  IntPoly p;
  if (coefficient != 0) p.terms_.emplace(m, std::move(coefficient));
  return p;
}

bool IntPoly::is_constant() const {
  return terms_.empty() ||
         (terms_.size() == 1 && terms_.begin()->first == Monomial{});
}

int IntPoly::total_degree() const {
  int deg = 0;
  for (const auto& [m, c] : terms_) deg = std::max(deg, m.total_degree());
  return deg;
}

int IntPoly::degree(Var v) const {
  int deg = 0;
  for (const auto& [m, c] : terms_) deg = std::max(deg, m.degree(v));
  return deg;
}

BigInt IntPoly::coeff(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? BigInt(0) : it->second;
}

IntPoly IntPoly::coeff_of(Var v, int power) const {
  IntPoly out;
  for (const auto& [m, c] : terms_) {
    if (m.degree(v) != power) continue;
    Monomial rest = m;
    rest.exp[static_cast<size_t>(v)] = 0;
    out.add_term(rest, c);
  }
  return out;
}

IntPoly IntPoly::substitute(Var v, const IntPoly& value) const {
  IntPoly out;
  for (const auto& [m, c] : terms_) {
    Monomial rest = m;
    rest.exp[static_cast<size_t>(v)] = 0;
    out += term(c, rest) * value.pow(m.degree(v));
  }
  return out;
}

IntPoly IntPoly::pow(int exponent) const {
  IntPoly out = 1;
  for (int i = 0; i < exponent; ++i) out *= *this;
  return out;
}

IntPoly IntPoly::truncate(Var v, int max_degree) const {
  IntPoly out;
  for (const auto& [m, c] : terms_)
    if (m.degree(v) <= max_degree) out.add_term(m, c);
  return out;
}

IntPoly IntPoly::div_exact(const IntPoly& divisor) const {
  if (divisor.is_zero()) throw division_not_exact("division by zero");
  IntPoly rest = *this;
  IntPoly quotient;
  const auto& [dm, dc] = *divisor.terms_.rbegin();
  while (!rest.is_zero()) {
    const auto& [m, c] = *rest.terms_.rbegin();
    if (!dm.divides(m) || c % dc != 0)
      throw division_not_exact("nonzero remainder");
    IntPoly piece = term(c / dc, m / dm);
    quotient += piece;
    rest -= piece * divisor;
  }
  return quotient;
}

BigRat IntPoly::eval(const BigRat& value) const {
  BigRat out = 0;
  for (const auto& [m, c] : terms_) {
    BigRat power = 1;
    for (int i = 0; i < m.total_degree(); ++i) power *= value;
    out += BigRat(c) * power;
  }
  return out;
}

std::vector<BigInt> IntPoly::univariate_coeffs() const {
  std::vector<BigInt> out(static_cast<size_t>(total_degree()) + 1, BigInt(0));
  for (const auto& [m, c] : terms_)
    out[static_cast<size_t>(m.total_degree())] = c;
  return out;
}

void IntPoly::add_term(const Monomial& m, const BigInt& c) {
  auto [it, inserted] = terms_.emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

IntPoly& IntPoly::operator+=(const IntPoly& other) {
  for (const auto& [m, c] : other.terms_) add_term(m, c);
  return *this;
}

IntPoly& IntPoly::operator-=(const IntPoly& other) {
  for (const auto& [m, c] : other.terms_) add_term(m, -c);
  return *this;
}

IntPoly operator*(const IntPoly& a, const IntPoly& b) {
  IntPoly out;
  for (const auto& [ma, ca] : a.terms_)
    for (const auto& [mb, cb] : b.terms_) out.add_term(ma * mb, ca * cb);
  return out;
}

IntPoly& IntPoly::operator*=(const IntPoly& other) {
  *this = *this * other;
  return *this;
}

IntPoly operator-(const IntPoly& a) {
  IntPoly out;
  for (const auto& [m, c] : a.terms_) out.terms_.emplace(m, -c);
  return out;
}

std::string IntPoly::str() const {
  if (terms_.empty()) return "0";
  // Highest terms first: total degree, then exponent order.
  std::vector<std::pair<Monomial, BigInt>> sorted(terms_.begin(),
                                                  terms_.end());
  std::sort(sorted.begin(), sorted.end(), [](const auto& a, const auto& b) {
    int da = a.first.total_degree(), db = b.first.total_degree();
    if (da != db) return da > db;
    return a.first.exp > b.first.exp;
  });
  std::string out;
  for (const auto& [m, c] : sorted) {
    BigInt abs = c < 0 ? BigInt(-c) : c;
    if (out.empty()) {
      if (c < 0) out += "-";
    } else {
      out += c < 0 ? " - " : " + ";
    }
    std::string factors;
    for (int v = 0; v < kVarCount; ++v) {
      int e = m.exp[static_cast<size_t>(v)];
      if (e == 0) continue;
      if (!factors.empty()) factors += "*";
      factors += var_name(static_cast<Var>(v));
      if (e > 1) factors += "^" + std::to_string(e);
    }
    if (factors.empty()) {
      out += abs.str();
    } else {
      if (abs != 1) out += abs.str() + "*";
      out += factors;
    }
  }
  return out;
}

SeriesTable SeriesTable::substitute(Var v, const IntPoly& value) const {
  SeriesTable out(max_degree());
  for (int n = 0; n <= max_degree(); ++n)
    out.coeff(n) = coeff(n).substitute(v, value);
  return out;
}

IntPoly SeriesTable::to_poly() const {
  IntPoly out;
  for (int n = 0; n <= max_degree(); ++n)
    out += coeff(n) * IntPoly::variable(Var::t, n);
  return out;
}

SeriesTable SeriesTable::from_poly(const IntPoly& p, int max_degree) {
  SeriesTable out(max_degree);
  for (int n = 0; n <= max_degree; ++n) out.coeff(n) = p.coeff_of(Var::t, n);
  return out;
}

SeriesTable SeriesTable::inverse() const {
  const IntPoly& head = coeff(0);
  if (!head.is_constant() ||
      (head.constant_term() != 1 && head.constant_term() != -1))
    throw division_not_exact("series inverse needs constant term 1 or -1");
  BigInt unit = head.constant_term();
  SeriesTable out(max_degree());
  out.coeff(0) = IntPoly(unit);
  for (int n = 1; n <= max_degree(); ++n) {
    IntPoly sum;
    for (int k = 1; k <= n; ++k) sum += coeff(k) * out.coeff(n - k);
    out.coeff(n) = IntPoly(unit) * (-sum);
  }
  return out;
}

SeriesTable& SeriesTable::operator+=(const SeriesTable& other) {
  for (int n = 0; n <= std::min(max_degree(), other.max_degree()); ++n)
    coeff(n) += other.coeff(n);
  return *this;
}

SeriesTable& SeriesTable::operator-=(const SeriesTable& other) {
  for (int n = 0; n <= std::min(max_degree(), other.max_degree()); ++n)
    coeff(n) -= other.coeff(n);
  return *this;
}

SeriesTable operator*(const SeriesTable& a, const SeriesTable& b) {
  SeriesTable out(std::min(a.max_degree(), b.max_degree()));
  for (int n = 0; n <= out.max_degree(); ++n)
    for (int k = 0; k <= n; ++k) out.coeff(n) += a.coeff(k) * b.coeff(n - k);
  return out;
}

RatPoly::RatPoly(std::vector<BigRat> coeffs) : coeffs_(std::move(coeffs)) {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

BigRat RatPoly::eval(const BigRat& value) const {
  BigRat out = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it)
    out = out * value + *it;
  return out;
}

std::string RatPoly::str() const {
  if (coeffs_.empty()) return "0";
  std::string out;
  for (int d = degree(); d >= 0; --d) {
    const BigRat& c = coeffs_[static_cast<size_t>(d)];
    if (c == 0) continue;
    BigRat abs = c < 0 ? BigRat(-c) : c;
    if (out.empty()) {
      if (c < 0) out += "-";
    } else {
      out += c < 0 ? " - " : " + ";
    }
    if (d == 0 || abs != 1) out += abs.str();
    if (d > 0) {
      if (abs != 1) out += "*";
      out += "k";
      if (d > 1) out += "^" + std::to_string(d);
    }
  }
  return out;
}

RatPoly lagrange_interpolate(
    const std::vector<std::pair<BigRat, BigRat>>& points) {
  size_t n = points.size();
  std::vector<BigRat> result(n, BigRat(0));
  for (size_t i = 0; i < n; ++i) {
    // Basis polynomial through point i, built coefficient-wise.
    std::vector<BigRat> basis{BigRat(1)};
    BigRat denom = 1;
    for (size_t j = 0; j < n; ++j) {
      if (j == i) continue;
      denom *= points[i].first - points[j].first;
      std::vector<BigRat> next(basis.size() + 1, BigRat(0));
      for (size_t d = 0; d < basis.size(); ++d) {
        next[d + 1] += basis[d];
        next[d] -= basis[d] * points[j].first;
      }
      basis = std::move(next);
    }
    BigRat scale = points[i].second / denom;
    for (size_t d = 0; d < basis.size(); ++d) result[d] += basis[d] * scale;
  }
  return RatPoly(std::move(result));
}

namespace {

const IntPoly& cyclotomic_unlocked(int d, std::vector<IntPoly>& cache) {
  if (d >= static_cast<int>(cache.size()))
    cache.resize(static_cast<size_t>(d) + 1);
  IntPoly& slot = cache[static_cast<size_t>(d)];
  if (slot.is_zero()) {
    // x^d - 1 divided by all lower cyclotomic factors.
    IntPoly p = IntPoly::variable(Var::x, d) - IntPoly(1);
    for (int e = 1; e < d; ++e)
      if (d % e == 0) p = p.div_exact(cyclotomic_unlocked(e, cache));
    cache[static_cast<size_t>(d)] = p;  // resize may have moved `slot`
  }
  return cache[static_cast<size_t>(d)];
}

}  // namespace

IntPoly cyclotomic(int d) {
  static std::mutex lock;
  static std::vector<IntPoly> cache;
  std::scoped_lock guard(lock);
  return cyclotomic_unlocked(d, cache);
}

std::string CycloFactorization::str() const {
  std::string out;
  for (const auto& [d, mult] : factors) {
    if (!out.empty()) out += " * ";
    out += "Phi_" + std::to_string(d);
    if (mult > 1) out += "^" + std::to_string(mult);
  }
  if (!remainder.is_constant() || remainder.constant_term() != 1 ||
      out.empty()) {
    if (!out.empty()) out += " * ";
    out += "(" + remainder.str() + ")";
  }
  return out;
}

CycloFactorization cyclotomic_factor(const IntPoly& p) {
  CycloFactorization out;
  out.remainder = p;
  int deg = p.total_degree();
  // phi(d) >= sqrt(d) for d > 6, so d <= deg^2 + 6 covers all candidates.
  std::vector<int> phi(static_cast<size_t>(deg) * deg + 8);
  for (size_t i = 0; i < phi.size(); ++i) phi[i] = static_cast<int>(i);
  for (size_t i = 2; i < phi.size(); ++i) {
    if (phi[i] != static_cast<int>(i)) continue;  // i prime
    for (size_t j = i; j < phi.size(); j += i) phi[j] -= phi[j] / i;
  }
  for (int d = 1; d < static_cast<int>(phi.size()); ++d) {
    if (phi[static_cast<size_t>(d)] > out.remainder.total_degree()) continue;
    if (out.remainder.is_constant()) break;
    int mult = 0;
    while (true) {
      try {
        out.remainder = out.remainder.div_exact(cyclotomic(d));
        ++mult;
      } catch (const division_not_exact&) {
        break;
      }
    }
    if (mult > 0) out.factors.emplace_back(d, mult);
  }
  return out;
}

}  // namespace dexter
