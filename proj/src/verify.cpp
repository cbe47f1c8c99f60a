// SPDX-License-Identifier: Apache-2.0
#include "gcdchain/verify.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

#include "gcdchain/error.hpp"

namespace gcdchain {

namespace {

int multiplicity(const XPoly& p, XPoly t) {
  int e = 0;
  while (t.degree() >= p.degree()) {
    auto [q, r] = xpoly_divrem(t, p);
    if (!r.is_zero()) break;
    t = std::move(q);
    ++e;
  }
  return e;
}

XPoly mulmod(const XPoly& a, const XPoly& b, const XPoly& m) { return xpoly_divrem(a * b, m).remainder; }

XPoly powmod(XPoly base, std::uint64_t n, const XPoly& m) {
  XPoly acc = XPoly::one(m.field());
  base = xpoly_divrem(base, m).remainder;
  for (; n; n >>= 1) {
    if (n & 1) acc = mulmod(acc, base, m);
    base = mulmod(base, base, m);
  }
  return acc;
}

std::vector<int> prime_divisors(int n) {
  std::vector<int> out;
  for (int d = 2; d * d <= n; ++d) {
    if (n % d) continue;
    out.push_back(d);
    while (n % d == 0) n /= d;
  }
  if (n > 1) out.push_back(n);
  return out;
}

bool irreducible_mod_prime(const XPoly& p) {
  const int n = p.degree();
  const XPoly x = XPoly::x_power(p.field(), 1);
  // frob[k] = x^(q^k) mod p
  std::vector<XPoly> frob{xpoly_divrem(x, p).remainder};
  for (int k = 1; k <= n; ++k) frob.push_back(powmod(frob.back(), p.field().prime, p));
  if (frob[static_cast<std::size_t>(n)] != frob[0]) return false;
  for (int r : prime_divisors(n)) {
    if (!xpoly_gcd(frob[static_cast<std::size_t>(n / r)] - x, p).is_one()) return false;
  }
  return true;
}

std::vector<mpz_class> divisors(mpz_class n) {
  n = abs(n);
  std::vector<mpz_class> small{1}, out;
  for (mpz_class d = 2; d * d <= n; ++d) {
    if (d > 1000000 && mpz_probab_prime_p(n.get_mpz_t(), 30) == 0) {
      fail(ErrorKind::Precondition, "coefficient too large for the rational root test");
    }
    if (d > 1000000) break;
    int k = 0;
    while (n % d == 0) {
      n /= d;
      ++k;
    }
    if (!k) continue;
    const std::size_t base = small.size();
    mpz_class pw = 1;
    for (int i = 0; i < k; ++i) {
      pw *= d;
      for (std::size_t j = 0; j < base; ++j) small.push_back(small[j] * pw);
    }
  }
  if (n > 1) {
    const std::size_t base = small.size();
    for (std::size_t j = 0; j < base; ++j) small.push_back(small[j] * n);
  }
  return small;
}

bool has_rational_root(const XPoly& p) {
  mpz_class den = 1;
  for (const auto& c : p.coeffs()) den = lcm(den, c.rational().get_den());
  const mpq_class low = p.coeff(0).rational();
  const mpz_class c0 = low.get_num() * (den / low.get_den());
  if (c0 == 0) return true;
  for (const auto& r : divisors(c0)) {
    for (const auto& s : divisors(den)) {
      for (int sign : {1, -1}) {
        const Scalar z(p.field(), mpq_class(mpz_class(sign * r), s));
        Scalar acc(p.field());
        for (int i = p.degree(); i >= 0; --i) acc = acc * z + p.coeff(i);
        if (acc.is_zero()) return true;
      }
    }
  }
  return false;
}

bool is_rational_square(const mpq_class& v) {
  return sgn(v) >= 0 && mpz_perfect_square_p(v.get_num_mpz_t()) && mpz_perfect_square_p(v.get_den_mpz_t());
}

/// Row rank over k; rows are consumed.
long row_rank(std::vector<std::vector<Scalar>> rows, std::size_t cols) {
  long rank = 0;
  std::size_t pivot_row = 0;
  for (std::size_t col = 0; col < cols && pivot_row < rows.size(); ++col) {
    std::size_t sel = pivot_row;
    while (sel < rows.size() && rows[sel][col].is_zero()) ++sel;
    if (sel == rows.size()) continue;
    std::swap(rows[sel], rows[pivot_row]);
    const Scalar inv = rows[pivot_row][col].inverse();
    for (auto& v : rows[pivot_row]) v *= inv;
    for (std::size_t r = pivot_row + 1; r < rows.size(); ++r) {
      if (rows[r][col].is_zero()) continue;
      const Scalar factor = rows[r][col];
      for (std::size_t c = col; c < cols; ++c) rows[r][c] -= factor * rows[pivot_row][c];
    }
    ++pivot_row;
    ++rank;
  }
  return rank;
}

YPoly block_of(const GcdChain& chain, std::size_t i) {
  return i + 1 < chain.C.size() ? chain.D[i] : chain.C[i];
}

using CheckFn = std::function<std::pair<bool, std::string>()>;

void run_check(ChainReport& report, const std::string& name, const CheckFn& fn) {
  CheckResult result{name, false, ""};
  try {
    auto [ok, detail] = fn();
    result.passed = ok;
    result.detail = std::move(detail);
  } catch (const std::exception& ex) {
    result.detail = std::string("error: ") + ex.what();
  }
  report.checks.push_back(std::move(result));
}

std::string structure_problem(const GcdChain& chain, const YPoly& a, const YPoly& b) {
  if (a.modulus() != b.modulus()) return "a and b have different moduli";
  if (!a.is_monic()) return "a is not monic";
  if (!b.is_zero() && !b.is_monic()) return "b is not monic";
  if (chain.C.empty()) return "empty chain";
  if (chain.tree.size() != chain.C.size()) return "Tree and C differ in length";
  if (chain.D.size() + 1 != chain.C.size()) return "D must have one element fewer than C";
  if (a.field() != chain.C.front().field()) return "chain field differs from input field";
  for (std::size_t i = 0; i < chain.C.size(); ++i) {
    const Modulus m(chain.tree[i]);
    if (chain.C[i].modulus() != m) return "C[" + std::to_string(i) + "] is not modulo Tree[i]";
    if (!chain.C[i].is_monic()) return "C[" + std::to_string(i) + "] is not monic";
    if (i < chain.D.size()) {
      if (chain.D[i].modulus() != m) return "D[" + std::to_string(i) + "] is not modulo Tree[i]";
      if (!chain.D[i].is_monic()) return "D[" + std::to_string(i) + "] is not monic";
    }
  }
  return "";
}

}  // namespace

bool xpoly_is_irreducible(const XPoly& p) {
  if (p.degree() < 1) return false;
  if (p.degree() == 1) return true;
  if (!p.field().is_rational()) return irreducible_mod_prime(p);
  if (p.degree() == 2) {
    const mpq_class b = p.coeff(1).rational();
    const mpq_class c = p.coeff(0).rational();
    return !is_rational_square(mpq_class(b * b - 4 * c));
  }
  return !has_rational_root(p);
}

XPoly squarefree_part(const XPoly& t) {
  if (t.degree() < 1 || !t.is_monic()) fail(ErrorKind::Precondition, "squarefree_part needs monic T");
  const XPoly dt = t.derivative();
  if (dt.is_zero()) fail(ErrorKind::Precondition, "T' vanishes; p-th power moduli are unsupported");
  return xpoly_exact_div(t, xpoly_gcd(t, dt));
}

int xpoly_valuation(const XPoly& r, const XPoly& p, const Modulus& t) {
  const int cap = multiplicity(p, t.poly());
  XPoly rem = t.reduce(r);
  if (rem.is_zero()) return cap;
  int v = 0;
  while (v < cap) {
    auto [q, rr] = xpoly_divrem(rem, p);
    if (!rr.is_zero()) break;
    rem = std::move(q);
    ++v;
  }
  return v;
}

int common_factor_precision(const YPoly& c, const YPoly& a, const YPoly& b) {
  const Modulus& t = a.modulus();
  if (!c.is_monic() || c.degree() < 1) fail(ErrorKind::Precondition, "c must be monic of positive degree");
  const XPoly p = squarefree_part(t.poly());
  const YPoly cc = c.with_modulus(t);
  int best = multiplicity(p, t.poly());
  for (const YPoly* f : {&a, &b}) {
    const YPoly r = ypoly_divrem_monic(f->with_modulus(t), cc).remainder;
    for (const auto& coeff : r.coeffs()) best = std::min(best, xpoly_valuation(coeff, p, t));
  }
  return best;
}

long quotient_dimension(const YPoly& a, const YPoly& b) {
  if (a.modulus() != b.modulus()) fail(ErrorKind::ModulusMismatch, "quotient_dimension");
  if (!a.is_monic()) fail(ErrorKind::NonMonic, "quotient_dimension needs monic a");
  const Modulus& t = a.modulus();
  const int n = t.degree();
  const int d = a.degree();
  if (d == 0) return 0;
  const std::size_t cols = static_cast<std::size_t>(n) * static_cast<std::size_t>(d);
  const Field field = t.field();

  std::vector<std::vector<Scalar>> rows;
  const YPoly b_red = ypoly_divrem_monic(b, a).remainder;
  for (int j = 0; j < d; ++j) {
    for (int i = 0; i < n; ++i) {
      const YPoly gen = YPoly::monomial(t, XPoly::x_power(field, i), j) * b_red;
      const YPoly r = ypoly_divrem_monic(gen, a).remainder;
      std::vector<Scalar> row(cols, Scalar(field));
      for (int jj = 0; jj <= r.degree(); ++jj) {
        const XPoly& c = r.coeffs()[static_cast<std::size_t>(jj)];
        for (int ii = 0; ii <= c.degree(); ++ii) {
          row[static_cast<std::size_t>(jj * n + ii)] = c.coeffs()[static_cast<std::size_t>(ii)];
        }
      }
      rows.push_back(std::move(row));
    }
  }
  return static_cast<long>(cols) - row_rank(std::move(rows), cols);
}

YPoly gcd_mod_prime(const YPoly& a, const YPoly& b, const XPoly& p) {
  const Modulus m(p);
  YPoly r0 = a.reduce_to(m), r1 = b.reduce_to(m);
  while (!r1.is_zero()) {
    const YPoly monic_r1 = r1 * relem_inverse(r1.lc(), m);
    YPoly r = ypoly_divrem_monic(r0, monic_r1).remainder;
    r0 = monic_r1;
    r1 = std::move(r);
  }
  if (r0.is_zero()) return r0;
  return r0 * relem_inverse(r0.lc(), m);
}

bool ChainReport::all_pass() const {
  return !checks.empty() &&
         std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.passed; });
}

const CheckResult* ChainReport::find(const std::string& name) const {
  for (const auto& c : checks) {
    if (c.name == name) return &c;
  }
  return nullptr;
}

std::string ChainReport::to_string() const {
  std::ostringstream os;
  for (const auto& c : checks) {
    os << (c.passed ? "ok   " : "FAIL ") << c.name;
    if (!c.detail.empty()) os << ": " << c.detail;
    os << '\n';
  }
  return os.str();
}

ChainReport verify_chain(const GcdChain& chain, const YPoly& a, const YPoly& b) {
  ChainReport report;
  const std::string problem = structure_problem(chain, a, b);
  report.checks.push_back({"structure", problem.empty(), problem});
  if (!problem.empty()) return report;

  const Modulus& t = a.modulus();
  const std::size_t s = chain.C.size();
  XPoly p(t.field());
  int e = 0;
  std::vector<int> exps(s, 0);

  run_check(report, "modulus_primary", [&]() -> std::pair<bool, std::string> {
    p = squarefree_part(t.poly());
    e = multiplicity(p, t.poly());
    if (p.pow(static_cast<unsigned>(e)) != t.poly()) return {false, "T is not a power of " + p.to_string()};
    if (!xpoly_is_irreducible(p)) return {false, p.to_string() + " is reducible"};
    return {true, "p = " + p.to_string() + ", e = " + std::to_string(e)};
  });
  if (!report.checks.back().passed) return report;

  run_check(report, "tree_powers_of_radical", [&]() -> std::pair<bool, std::string> {
    for (std::size_t i = 0; i < s; ++i) {
      exps[i] = multiplicity(p, chain.tree[i]);
      if (exps[i] < 1 || exps[i] > e || p.pow(static_cast<unsigned>(exps[i])) != chain.tree[i]) {
        return {false, "Tree[" + std::to_string(i) + "] = " + chain.tree[i].to_string()};
      }
    }
    return {true, ""};
  });
  if (!report.checks.back().passed) return report;

  run_check(report, "exponents_increasing", [&]() -> std::pair<bool, std::string> {
    std::string detail;
    bool ok = true;
    for (std::size_t i = 0; i < s; ++i) {
      detail += (i ? ", " : "") + std::to_string(exps[i]);
      if (i > 0 && exps[i] <= exps[i - 1]) ok = false;
    }
    return {ok, "exponents " + detail};
  });

  run_check(report, "degrees_decreasing", [&]() -> std::pair<bool, std::string> {
    std::string detail;
    bool ok = true;
    for (std::size_t i = 0; i < s; ++i) {
      detail += (i ? ", " : "") + std::to_string(chain.C[i].degree());
      if (i > 0 && chain.C[i].degree() >= chain.C[i - 1].degree()) ok = false;
    }
    return {ok, "degrees " + detail};
  });

  run_check(report, "divisibility", [&]() -> std::pair<bool, std::string> {
    for (std::size_t i = 0; i + 1 < s; ++i) {
      const Modulus m(chain.tree[i]);
      const YPoly next = chain.C[i + 1].reduce_to(m);
      if (chain.D[i] * next != chain.C[i]) {
        return {false, "C[" + std::to_string(i) + "] != D[i] * C[i+1] modulo Tree[i]"};
      }
    }
    return {true, ""};
  });

  run_check(report, "common_factor_precision", [&]() -> std::pair<bool, std::string> {
    for (std::size_t i = 0; i < s; ++i) {
      if (chain.C[i].degree() == 0) continue;
      const int l = common_factor_precision(chain.C[i], a, b);
      if (l < exps[i]) {
        return {false, "C[" + std::to_string(i) + "] has precision " + std::to_string(l) +
                           " < " + std::to_string(exps[i])};
      }
    }
    return {true, ""};
  });

  run_check(report, "blockwise_membership", [&]() -> std::pair<bool, std::string> {
    for (std::size_t i = 0; i < s; ++i) {
      const Modulus m(chain.tree[i]);
      const YPoly g = block_of(chain, i);
      for (const YPoly* f : {&a, &b}) {
        if (!ypoly_divrem_monic(f->reduce_to(m), g).remainder.is_zero()) {
          return {false, "input not in <G_" + std::to_string(i + 1) + ", Tree[i]>"};
        }
      }
    }
    return {true, ""};
  });

  run_check(report, "blocks_coprime_mod_radical", [&]() -> std::pair<bool, std::string> {
    for (std::size_t i = 0; i < s; ++i) {
      for (std::size_t j = i + 1; j < s; ++j) {
        const YPoly g = gcd_mod_prime(block_of(chain, i), block_of(chain, j), p);
        if (g.degree() != 0) {
          return {false, "blocks " + std::to_string(i + 1) + " and " + std::to_string(j + 1) +
                             " share " + g.to_string()};
        }
      }
    }
    return {true, ""};
  });

  run_check(report, "dimension_total", [&]() -> std::pair<bool, std::string> {
    long expected = 0;
    for (std::size_t i = 0; i < s; ++i) {
      expected += static_cast<long>(chain.tree[i].degree()) * block_of(chain, i).degree();
    }
    const long actual = quotient_dimension(a, b);
    return {expected == actual,
            "blocks " + std::to_string(expected) + ", quotient " + std::to_string(actual)};
  });

  run_check(report, "dimension_levels", [&]() -> std::pair<bool, std::string> {
    long prefix = 0;
    for (std::size_t i = 0; i < s; ++i) {
      const Modulus m(chain.tree[i]);
      const long expected = prefix + static_cast<long>(chain.tree[i].degree()) * chain.C[i].degree();
      const long actual = quotient_dimension(a.reduce_to(m), b.reduce_to(m));
      if (expected != actual) {
        return {false, "level " + std::to_string(i + 1) + ": blocks " + std::to_string(expected) +
                           ", quotient " + std::to_string(actual)};
      }
      prefix += static_cast<long>(chain.tree[i].degree()) * block_of(chain, i).degree();
    }
    return {true, ""};
  });

  return report;
}

}  // namespace gcdchain
