#include "dexter/invariants.hpp"

#include <Eigen/Dense>
#include <Eigen/Eigenvalues>
#include <algorithm>
#include <cmath>

#include "dexter/order.hpp"

namespace dexter {

BigInt multichain_count(const Poset& p, int elements) {
  if (elements <= 0) return 1;
  int n = p.size();
  const BitMatrix& reach = p.reach();
  std::vector<BigInt> v(static_cast<size_t>(n), BigInt(1));
  for (int step = 1; step < elements; ++step) {
    std::vector<BigInt> next(static_cast<size_t>(n), BigInt(0));
    for (int u = 0; u < n; ++u)
      for (int w = 0; w < n; ++w)
        if (reach.get(u, w)) next[static_cast<size_t>(u)] += v[static_cast<size_t>(w)];
    v = std::move(next);
  }
  BigInt total = 0;
  for (const BigInt& c : v) total += c;
  return total;
}

BigInt chain_count(const Poset& p, int elements) {
  if (elements <= 0) return 1;
  int n = p.size();
  const BitMatrix& reach = p.reach();
  std::vector<BigInt> v(static_cast<size_t>(n), BigInt(1));
  for (int step = 1; step < elements; ++step) {
    std::vector<BigInt> next(static_cast<size_t>(n), BigInt(0));
    for (int u = 0; u < n; ++u)
      for (int w = 0; w < n; ++w)
        if (u != w && reach.get(u, w))
          next[static_cast<size_t>(u)] += v[static_cast<size_t>(w)];
    v = std::move(next);
  }
  BigInt total = 0;
  for (const BigInt& c : v) total += c;
  return total;
}

int longest_chain(const Poset& p) {
  std::vector<int> depth(static_cast<size_t>(p.size()), 0);
  int best = 0;
  std::vector<int> order = p.topo_order();
  for (auto it = order.rbegin(); it != order.rend(); ++it) {
    for (int v : p.upper_covers(*it))
      depth[static_cast<size_t>(*it)] =
          std::max(depth[static_cast<size_t>(*it)],
                   depth[static_cast<size_t>(v)] + 1);
    best = std::max(best, depth[static_cast<size_t>(*it)]);
  }
  return best;
}

RatPoly zeta_polynomial(const Poset& p, int cap) {
  if (p.size() > cap) throw too_large("poset beyond the zeta cap");
  int degree = longest_chain(p);
  std::vector<std::pair<BigRat, BigRat>> points;
  for (int k = 2; k <= degree + 2; ++k)
    points.emplace_back(BigRat(k), BigRat(multichain_count(p, k - 1)));
  return lagrange_interpolate(points);
}

namespace {

using Row = std::vector<BigInt>;

// Integer inverse of an upper unitriangular 0/1 matrix.
std::vector<Row> invert_unitriangular(const std::vector<Row>& z) {
  int n = static_cast<int>(z.size());
  std::vector<Row> inv(static_cast<size_t>(n),
                       Row(static_cast<size_t>(n), BigInt(0)));
  for (int i = n - 1; i >= 0; --i) {
    inv[static_cast<size_t>(i)][static_cast<size_t>(i)] = 1;
    for (int j = i + 1; j < n; ++j) {
      BigInt sum = 0;
      for (int k = i + 1; k <= j; ++k)
        if (z[static_cast<size_t>(i)][static_cast<size_t>(k)] != 0)
          sum += inv[static_cast<size_t>(k)][static_cast<size_t>(j)];
      inv[static_cast<size_t>(i)][static_cast<size_t>(j)] = -sum;
    }
  }
  return inv;
}

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
  return a * b % p;
}

std::uint64_t powmod(std::uint64_t a, std::uint64_t e, std::uint64_t p) {
  std::uint64_t r = 1;
  for (; e; e >>= 1, a = mulmod(a, a, p))
    if (e & 1) r = mulmod(r, a, p);
  return r;
}

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

// Characteristic polynomial mod p via Hessenberg reduction; returns the
// monic coefficient list of det(xI - A), ascending.
std::vector<std::uint64_t> charpoly_mod(std::vector<std::uint64_t> a, int n,
                                        std::uint64_t p) {
  auto at = [&](int i, int j) -> std::uint64_t& {
    return a[static_cast<size_t>(i) * static_cast<size_t>(n) +
             static_cast<size_t>(j)];
  };
  for (int col = 0; col + 2 < n; ++col) {
    int pivot = -1;
    for (int row = col + 1; row < n; ++row)
      if (at(row, col) != 0) {
        pivot = row;
        break;
      }
    if (pivot < 0) continue;
    if (pivot != col + 1) {
      for (int j = 0; j < n; ++j) std::swap(at(pivot, j), at(col + 1, j));
      for (int i = 0; i < n; ++i) std::swap(at(i, pivot), at(i, col + 1));
    }
    std::uint64_t inv = powmod(at(col + 1, col), p - 2, p);
    for (int row = col + 2; row < n; ++row) {
      if (at(row, col) == 0) continue;
      std::uint64_t factor = mulmod(at(row, col), inv, p);
      for (int j = 0; j < n; ++j)
        at(row, j) = (at(row, j) + p - mulmod(factor, at(col + 1, j), p)) % p;
      for (int i = 0; i < n; ++i)
        at(i, col + 1) = (at(i, col + 1) + mulmod(factor, at(i, row), p)) % p;
    }
  }
  // det(xI - H) by the Hessenberg recurrence on leading minors.
  std::vector<std::vector<std::uint64_t>> minors(static_cast<size_t>(n) + 1);
  minors[0] = {1};
  for (int m = 1; m <= n; ++m) {
    const auto& prev = minors[static_cast<size_t>(m - 1)];
    std::vector<std::uint64_t> cur(static_cast<size_t>(m) + 1, 0);
    std::uint64_t diag = at(m - 1, m - 1) % p;
    for (size_t d = 0; d < prev.size(); ++d) {
      cur[d + 1] = (cur[d + 1] + prev[d]) % p;
      cur[d] = (cur[d] + p * p - mulmod(diag, prev[d], p)) % p;
    }
    std::uint64_t subdiag = 1;
    for (int k = m - 1; k >= 1; --k) {
      subdiag = mulmod(subdiag, at(k, k - 1), p);
      if (subdiag == 0) break;
      std::uint64_t weight = mulmod(subdiag, at(k - 1, m - 1) % p, p);
      const auto& lower = minors[static_cast<size_t>(k - 1)];
      for (size_t d = 0; d < lower.size(); ++d)
        cur[d] = (cur[d] + p - mulmod(weight, lower[d], p)) % p;
    }
    minors[static_cast<size_t>(m)] = std::move(cur);
  }
  return minors[static_cast<size_t>(n)];
}

}  // namespace

IntPoly coxeter_polynomial(const Poset& p, int cap) {
  int n = p.size();
  if (n > cap) throw too_large("poset beyond the Coxeter cap");
  if (n == 0) return IntPoly(1);
  std::vector<int> order = p.topo_order();
  const BitMatrix& reach = p.reach();
  std::vector<Row> z(static_cast<size_t>(n),
                     Row(static_cast<size_t>(n), BigInt(0)));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (reach.get(order[static_cast<size_t>(i)],
                    order[static_cast<size_t>(j)]))
        z[static_cast<size_t>(i)][static_cast<size_t>(j)] = 1;
  std::vector<Row> zinv = invert_unitriangular(z);
  // C = -Z^{-T} Z
  std::vector<Row> c(static_cast<size_t>(n),
                     Row(static_cast<size_t>(n), BigInt(0)));
  BigInt bound = 1;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      BigInt sum = 0;
      for (int k = 0; k < n; ++k)
        if (z[static_cast<size_t>(k)][static_cast<size_t>(j)] != 0)
          sum += zinv[static_cast<size_t>(k)][static_cast<size_t>(i)];
      c[static_cast<size_t>(i)][static_cast<size_t>(j)] = -sum;
      BigInt mag = sum < 0 ? BigInt(-sum) : sum;
      if (mag > bound) bound = mag;
    }
  // Coefficient bound: |c_k| <= C(n,k) (B sqrt(n))^k <= 2^n (B sqrt(n))^n.
  double bits = n * (1.0 + (boost::multiprecision::msb(bound) + 1) +
                     0.5 * std::log2(static_cast<double>(n)));
  int prime_count = static_cast<int>(bits / 29.0) + 2;

  std::vector<std::uint64_t> primes;
  for (std::uint64_t candidate = (1ull << 30) - 1;
       static_cast<int>(primes.size()) < prime_count; candidate -= 2)
    if (is_prime(candidate)) primes.push_back(candidate);

  // CRT accumulation of det(xI - C).
  std::vector<BigInt> coeffs(static_cast<size_t>(n) + 1, BigInt(0));
  BigInt modulus = 1;
  for (std::uint64_t prime : primes) {
    std::vector<std::uint64_t> reduced(
        static_cast<size_t>(n) * static_cast<size_t>(n));
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        BigInt rem = c[static_cast<size_t>(i)][static_cast<size_t>(j)] % prime;
        if (rem < 0) rem += prime;
        reduced[static_cast<size_t>(i) * static_cast<size_t>(n) +
                static_cast<size_t>(j)] =
            rem.convert_to<std::uint64_t>();
      }
    std::vector<std::uint64_t> modpoly = charpoly_mod(reduced, n, prime);
    if (modulus == 1) {
      for (int d = 0; d <= n; ++d)
        coeffs[static_cast<size_t>(d)] = modpoly[static_cast<size_t>(d)];
    } else {
      // Garner step: lift each coefficient to the combined modulus.
      BigInt inv_mod_p =
          powmod((modulus % prime).convert_to<std::uint64_t>() % prime,
                 prime - 2, prime);
      for (int d = 0; d <= n; ++d) {
        BigInt current = coeffs[static_cast<size_t>(d)];
        BigInt target = modpoly[static_cast<size_t>(d)];
        BigInt delta = (target - current) % BigInt(prime);
        if (delta < 0) delta += prime;
        BigInt factor = (delta * inv_mod_p) % BigInt(prime);
        coeffs[static_cast<size_t>(d)] = current + modulus * factor;
      }
    }
    modulus *= prime;
  }
  IntPoly out;
  for (int d = 0; d <= n; ++d) {
    BigInt value = coeffs[static_cast<size_t>(d)];
    if (value > modulus / 2) value -= modulus;  // symmetric range
    Monomial m;
    m.exp[static_cast<size_t>(Var::x)] = static_cast<std::uint16_t>(d);
    out += IntPoly::term(value, m);
  }
  return out;
}

bool roots_on_unit_circle(const IntPoly& p, double tol) {
  CycloFactorization parts = cyclotomic_factor(p);
  const IntPoly& rest = parts.remainder;
  if (rest.is_constant()) return true;
  std::vector<BigInt> coeffs = rest.univariate_coeffs();
  int degree = static_cast<int>(coeffs.size()) - 1;
  Eigen::MatrixXd companion = Eigen::MatrixXd::Zero(degree, degree);
  BigRat lead(coeffs.back());
  for (int i = 0; i < degree; ++i) {
    companion(i, degree - 1) =
        -(BigRat(coeffs[static_cast<size_t>(i)]) / lead).convert_to<double>();
    if (i > 0) companion(i, i - 1) = 1.0;
  }
  Eigen::EigenSolver<Eigen::MatrixXd> solver(companion, false);
  for (int i = 0; i < degree; ++i)
    if (std::abs(std::abs(solver.eigenvalues()[i]) - 1.0) >= tol)
      return false;
  return true;
}

namespace {

struct LatticeTables {
  bool lattice = true;
  std::vector<int> meet, join;  // n*n tables
};

LatticeTables lattice_tables(const Poset& p) {
  int n = p.size();
  const BitMatrix& reach = p.reach();
  BitMatrix down(n);  // row u = elements below u
  for (int u = 0; u < n; ++u)
    for (int v = 0; v < n; ++v)
      if (reach.get(v, u)) down.set(u, v);
  LatticeTables tables;
  tables.meet.assign(static_cast<size_t>(n) * static_cast<size_t>(n), -1);
  tables.join.assign(static_cast<size_t>(n) * static_cast<size_t>(n), -1);
  int words = BitMatrix::row_words(n);
  std::vector<std::uint64_t> shared(static_cast<size_t>(words));
  for (int u = 0; u < n && tables.lattice; ++u) {
    for (int v = u; v < n && tables.lattice; ++v) {
      for (int k = 0; k < words; ++k)
        shared[static_cast<size_t>(k)] = down.row(u)[k] & down.row(v)[k];
      int glb = -1;
      for (int z = 0; z < n; ++z) {
        if (!((shared[static_cast<size_t>(z >> 6)] >> (z & 63)) & 1)) continue;
        bool top = true;
        const std::uint64_t* up_z = reach.row(z);
        for (int k = 0; k < words && top; ++k) {
          std::uint64_t overlap = up_z[k] & shared[static_cast<size_t>(k)];
          if (k == (z >> 6)) overlap &= ~(1ull << (z & 63));
          top = overlap == 0;
        }
        if (top) {
          if (glb >= 0) {
            tables.lattice = false;
            break;
          }
          glb = z;
        }
      }
      if (glb < 0) tables.lattice = false;
      tables.meet[static_cast<size_t>(u) * static_cast<size_t>(n) +
                  static_cast<size_t>(v)] = glb;
      tables.meet[static_cast<size_t>(v) * static_cast<size_t>(n) +
                  static_cast<size_t>(u)] = glb;

      for (int k = 0; k < words; ++k)
        shared[static_cast<size_t>(k)] = reach.row(u)[k] & reach.row(v)[k];
      int lub = -1;
      for (int z = 0; z < n; ++z) {
        if (!((shared[static_cast<size_t>(z >> 6)] >> (z & 63)) & 1)) continue;
        bool bottom = true;
        const std::uint64_t* down_z = down.row(z);
        for (int k = 0; k < words && bottom; ++k) {
          std::uint64_t overlap = down_z[k] & shared[static_cast<size_t>(k)];
          if (k == (z >> 6)) overlap &= ~(1ull << (z & 63));
          bottom = overlap == 0;
        }
        if (bottom) {
          if (lub >= 0) {
            tables.lattice = false;
            break;
          }
          lub = z;
        }
      }
      if (lub < 0) tables.lattice = false;
      tables.join[static_cast<size_t>(u) * static_cast<size_t>(n) +
                  static_cast<size_t>(v)] = lub;
      tables.join[static_cast<size_t>(v) * static_cast<size_t>(n) +
                  static_cast<size_t>(u)] = lub;
    }
  }
  return tables;
}

LatticeTables require_lattice(const Poset& p) {
  LatticeTables tables = lattice_tables(p);
  if (!tables.lattice)
    throw not_a_lattice("some pair lacks a meet or a join");
  return tables;
}

}  // namespace

bool is_lattice(const Poset& p) { return lattice_tables(p).lattice; }

bool is_semidistributive(const Poset& p) {
  LatticeTables t = require_lattice(p);
  int n = p.size();
  auto meet = [&](int a, int c) {
    return t.meet[static_cast<size_t>(a) * static_cast<size_t>(n) +
                  static_cast<size_t>(c)];
  };
  auto join = [&](int a, int c) {
    return t.join[static_cast<size_t>(a) * static_cast<size_t>(n) +
                  static_cast<size_t>(c)];
  };
  for (int a = 0; a < n; ++a)
    for (int x = 0; x < n; ++x)
      for (int y = x + 1; y < n; ++y) {
        if (meet(a, x) == meet(a, y) &&
            meet(a, join(x, y)) != meet(a, x))
          return false;
        if (join(a, x) == join(a, y) &&
            join(a, meet(x, y)) != join(a, x))
          return false;
      }
  return true;
}

bool is_extremal(const Poset& p) {
  require_lattice(p);
  int joins = 0, meets = 0;
  for (int u = 0; u < p.size(); ++u) {
    if (p.lower_covers(u).size() == 1) ++joins;
    if (p.upper_covers(u).size() == 1) ++meets;
  }
  int chain = longest_chain(p);
  return joins == chain && meets == chain;
}

IntPoly colored_h_polynomial(int n) {
  const DyckPoset& d = shared_poset(n);
  std::vector<int> red(static_cast<size_t>(d.poset().size()), 0);
  std::vector<int> blue(static_cast<size_t>(d.poset().size()), 0);
  for (const CoverEdge& e : d.poset().cover_edges())
    (e.color == EdgeColor::red ? red : blue)[static_cast<size_t>(e.dst)] += 1;
  IntPoly out;
  for (int u = 0; u < d.poset().size(); ++u) {
    Monomial m;
    m.exp[static_cast<size_t>(Var::r)] =
        static_cast<std::uint16_t>(red[static_cast<size_t>(u)]);
    m.exp[static_cast<size_t>(Var::b)] =
        static_cast<std::uint16_t>(blue[static_cast<size_t>(u)]);
    out += IntPoly::term(1, m);
  }
  return out;
}

SeriesTable colored_h_series(int max_degree) {
  SeriesTable out(max_degree);
  for (int n = 0; n <= max_degree; ++n) out.coeff(n) = colored_h_polynomial(n);
  return out;
}

SeriesTable colored_block_series(int max_degree) {
  SeriesTable out(max_degree);
  for (int n = 1; n <= max_degree; ++n) {
    const DyckPoset& d = shared_poset(n);
    std::vector<int> red(static_cast<size_t>(d.poset().size()), 0);
    std::vector<int> blue(static_cast<size_t>(d.poset().size()), 0);
    for (const CoverEdge& e : d.poset().cover_edges())
      (e.color == EdgeColor::red ? red : blue)[static_cast<size_t>(e.dst)] +=
          1;
    for (int u = 0; u < d.poset().size(); ++u) {
      if (!is_block_indecomposable(d.element(u))) continue;
      Monomial m;
      m.exp[static_cast<size_t>(Var::r)] =
          static_cast<std::uint16_t>(red[static_cast<size_t>(u)]);
      m.exp[static_cast<size_t>(Var::b)] =
          static_cast<std::uint16_t>(blue[static_cast<size_t>(u)]);
      out.coeff(n) += IntPoly::term(1, m);
    }
  }
  return out;
}

CheckReport check_h_equations(const SeriesTable& a, const SeriesTable& b) {
  CheckReport report;
  int deg = std::min(a.max_degree(), b.max_degree());
  const IntPoly T = IntPoly::variable(Var::t);
  const IntPoly R = IntPoly::variable(Var::r);
  const IntPoly B = IntPoly::variable(Var::b);
  IntPoly pa = a.to_poly(), pb = b.to_poly();

  SeriesTable one(deg);
  one.coeff(0) = 1;
  report.require(a == (one - b).inverse(), "A = 1/(1 - B)");

  IntPoly rhs = (pb * (IntPoly(1) - T * (R + B * (pa - 1)))).truncate(Var::t, deg);
  report.require(rhs == T.truncate(Var::t, deg),
                 "B = t/(1 - t(r + b(A-1)))");

  IntPoly quad = pa * pa * T * B + pa * T * R - 2 * pa * T * B + pa * T -
                 T * R + T * B - pa + 1;
  report.require(quad.truncate(Var::t, deg).is_zero(),
                 "A^2 t b + A t r - 2 A t b + A t - t r + t b - A + 1 = 0");

  // Uncolored reduction: with r = b = x the second equation becomes the
  // classical one for the Narayana series.
  IntPoly X = IntPoly::variable(Var::x);
  IntPoly ua = pa.substitute(Var::r, X).substitute(Var::b, X);
  IntPoly ub = pb.substitute(Var::r, X).substitute(Var::b, X);
  report.require(
      (ub * (IntPoly(1) - X * T * ua)).truncate(Var::t, deg) ==
          T.truncate(Var::t, deg),
      "B = t/(1 - x t A) after forgetting colors");
  return report;
}

CheckReport verify_h_equations(int max_degree) {
  return check_h_equations(colored_h_series(max_degree),
                           colored_block_series(max_degree));
}

bool h_symmetry_holds(int n) {
  IntPoly an = colored_h_polynomial(n);
  IntPoly lhs = an.substitute(
      Var::b, IntPoly::variable(Var::r) * IntPoly::variable(Var::b));
  // r^{n-1} A_n(1/r, b/r), cleared by one global power of r: compare
  // r^shift * lhs with sum c_ij r^{shift + n-1-i-j} b^j.
  int shift = 0;
  for (const auto& [m, c] : an.terms())
    shift = std::max(shift,
                     m.degree(Var::r) + m.degree(Var::b) - (n - 1));
  IntPoly left = lhs * IntPoly::variable(Var::r, shift);
  IntPoly right;
  for (const auto& [m, c] : an.terms()) {
    Monomial image;
    image.exp[static_cast<size_t>(Var::r)] = static_cast<std::uint16_t>(
        shift + (n - 1) - m.degree(Var::r) - m.degree(Var::b));
    image.exp[static_cast<size_t>(Var::b)] =
        static_cast<std::uint16_t>(m.degree(Var::b));
    right += IntPoly::term(c, image);
  }
  return left == right;
}

bool h_narayana_matches(int n) {
  IntPoly x = IntPoly::variable(Var::x);
  IntPoly specialized = colored_h_polynomial(n)
                            .substitute(Var::r, x)
                            .substitute(Var::b, x);
  IntPoly expected;
  for (int k = 1; k <= n; ++k)
    expected += IntPoly(narayana(n, k)) * IntPoly::variable(Var::x, k - 1);
  if (n == 0) expected = 1;
  return specialized == expected;
}

}  // namespace dexter
