#include "qnum/continued_fraction.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <sstream>

#include "qnum/errors.hpp"

namespace qnum {

std::int64_t ContinuedFraction::at(std::size_t i) const {
  if (i == 0) raise(errc::invalid_argument, "continued fraction positions are 1-based");
  if (i <= prefix.size()) return prefix[i - 1];
  if (period.empty())
    raise(errc::truncation_beyond_finite, "position beyond a finite expansion");
  return period[(i - 1 - prefix.size()) % period.size()];
}

void ContinuedFraction::validate() const {
  auto bad = [this](const std::string& what) {
    raise(errc::malformed_expansion, "invalid " +
          std::string(kind == CFKind::Regular ? "regular" : "Hirzebruch-Jung") +
          " continued fraction: " + what);
  };
  if (prefix.empty() && period.empty()) bad("empty expansion");
  const std::int64_t first_min = kind == CFKind::Regular ? 0 : 1;
  const std::int64_t rest_min = kind == CFKind::Regular ? 1 : 2;
  std::int64_t first = prefix.empty() ? period.front() : prefix.front();
  if (first < first_min) bad("first coefficient too small");
  for (std::size_t i = 1; i < prefix.size(); ++i)
    if (prefix[i] < rest_min) bad("coefficient below minimum");
  // A period repeats, so every entry must obey the non-first rule.
  for (std::int64_t c : period)
    if (c < rest_min) bad("period coefficient below minimum");
}

double ContinuedFraction::value_approx() const {
  double tail = 0.0;
  bool have = false;
  if (!period.empty()) {
    // Iterate the periodic tail map to its fixed point.
    double y = 1.0;
    for (int iter = 0; iter < 400; ++iter) {
      double t = y;
      for (auto it = period.rbegin(); it != period.rend(); ++it) {
        double c = static_cast<double>(*it);
        t = (kind == CFKind::Regular) ? c + 1.0 / t : c - 1.0 / t;
      }
      if (std::abs(t - y) < 1e-15 * (std::abs(t) + 1.0)) {
        y = t;
        break;
      }
      y = t;
    }
    tail = y;
    have = true;
  }
  double x = tail;
  for (auto it = prefix.rbegin(); it != prefix.rend(); ++it) {
    double c = static_cast<double>(*it);
    if (!have) {
      x = c;
      have = true;
      continue;
    }
    x = (kind == CFKind::Regular) ? c + 1.0 / x : c - 1.0 / x;
  }
  return x;
}

mpq_class ContinuedFraction::value_exact() const {
  if (!period.empty()) raise(errc::invalid_argument, "exact value requires a finite expansion");
  if (prefix.empty()) raise(errc::malformed_expansion, "empty expansion");
  mpq_class x;
  bool have = false;
  for (auto it = prefix.rbegin(); it != prefix.rend(); ++it) {
    mpq_class c(*it);
    if (!have) {
      x = c;
      have = true;
      continue;
    }
    if (x == 0) raise(errc::malformed_expansion, "division by zero while evaluating");
    if (kind == CFKind::Regular)
      x = c + 1 / x;
    else
      x = c - 1 / x;
    x.canonicalize();
  }
  return x;
}

std::string ContinuedFraction::text() const {
  std::ostringstream os;
  os << (kind == CFKind::Regular ? "[" : "[[");
  for (std::size_t i = 0; i < prefix.size(); ++i) {
    if (i) os << ",";
    os << prefix[i];
  }
  if (!period.empty()) {
    os << ";(";
    for (std::size_t i = 0; i < period.size(); ++i) {
      if (i) os << ",";
      os << period[i];
    }
    os << ")";
  }
  os << (kind == CFKind::Regular ? "]" : "]]");
  return os.str();
}

namespace {

std::vector<std::int64_t> parse_int_list(const std::string& s, const char* what) {
  std::vector<std::int64_t> out;
  std::size_t i = 0;
  while (i < s.size()) {
    while (i < s.size() && (std::isspace(static_cast<unsigned char>(s[i])) || s[i] == ','))
      ++i;
    if (i >= s.size()) break;
    std::size_t used = 0;
    long long v = 0;
    try {
      v = std::stoll(s.substr(i), &used);
    } catch (const std::exception&) {
      raise(errc::parse_error, std::string("cannot parse ") + what + " list: " + s);
    }
    out.push_back(v);
    i += used;
  }
  return out;
}

// Split or merge the last coefficient so a finite regular expansion has even
// length: [...,a] -> [...,a-1,1] (a >= 2), [...,b,1] -> [...,b+1].
void normalize_even_length(std::vector<std::int64_t>& a) {
  if (a.size() % 2 == 0) return;
  if (a.back() >= 2 || a.size() == 1) {
    a.back() -= 1;
    a.push_back(1);
  } else {
    a.pop_back();
    a.back() += 1;
  }
}

}  // namespace

ContinuedFraction ContinuedFraction::parse(const std::string& raw) {
  std::string s;
  for (char c : raw)
    if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
  ContinuedFraction cf;
  bool hj = false;
  if (s.rfind("hj:", 0) == 0) {
    hj = true;
    s = s.substr(3);
  }
  if (s.size() >= 4 && s.rfind("[[", 0) == 0 && s.substr(s.size() - 2) == "]]") {
    hj = true;
    s = s.substr(2, s.size() - 4);
  } else if (s.size() >= 2 && s.front() == '[' && s.back() == ']') {
    s = s.substr(1, s.size() - 2);
  } else {
    raise(errc::parse_error, "continued fraction must be bracketed: " + raw);
  }
  cf.kind = hj ? CFKind::HJ : CFKind::Regular;
  std::string pre = s, per;
  if (auto pos = s.find(';'); pos != std::string::npos) {
    pre = s.substr(0, pos);
    per = s.substr(pos + 1);
    if (per.size() < 2 || per.front() != '(' || per.back() != ')')
      raise(errc::parse_error, "period must be parenthesized: " + raw);
    per = per.substr(1, per.size() - 2);
  }
  cf.prefix = parse_int_list(pre, "prefix");
  cf.period = parse_int_list(per, "period");
  if (cf.kind == CFKind::Regular && cf.period.empty() && !cf.prefix.empty())
    normalize_even_length(cf.prefix);
  cf.validate();
  return cf;
}

ContinuedFraction regular_cf_expand(const mpz_class& r, const mpz_class& s) {
  if (r <= 0 || s <= 0) raise(errc::invalid_argument, "regular expansion requires r, s > 0");
  mpz_class g;
  mpz_gcd(g.get_mpz_t(), r.get_mpz_t(), s.get_mpz_t());
  if (g != 1) raise(errc::not_coprime, "r and s must be coprime");
  ContinuedFraction cf;
  cf.kind = CFKind::Regular;
  mpz_class a = r, b = s;
  while (b != 0) {
    mpz_class q, rem;
    mpz_fdiv_qr(q.get_mpz_t(), rem.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    cf.prefix.push_back(q.get_si());
    a = b;
    b = rem;
  }
  normalize_even_length(cf.prefix);
  cf.validate();
  return cf;
}

ContinuedFraction hj_cf_expand(const mpz_class& r, const mpz_class& s) {
  if (r <= 0 || s <= 0) raise(errc::invalid_argument, "HJ expansion requires r, s > 0");
  mpz_class g;
  mpz_gcd(g.get_mpz_t(), r.get_mpz_t(), s.get_mpz_t());
  if (g != 1) raise(errc::not_coprime, "r and s must be coprime");
  ContinuedFraction cf;
  cf.kind = CFKind::HJ;
  mpz_class a = r, b = s;
  while (true) {
    mpz_class c, rem;
    mpz_cdiv_qr(c.get_mpz_t(), rem.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    cf.prefix.push_back(c.get_si());
    if (rem == 0) break;
    a = b;
    b = -rem;  // ceiling remainder is negative; next value is b/(c*b - a) > 1
  }
  cf.validate();
  return cf;
}

namespace {

// Hirzebruch image of one regular pair (a_odd, a_even); `first` marks the
// leading coefficient of the whole word (+1 instead of +2).
void push_hj_pair(std::vector<std::int64_t>& out, std::int64_t a_odd, std::int64_t a_even,
                  bool first) {
  out.push_back(a_odd + (first ? 1 : 2));
  for (std::int64_t k = 0; k < a_even - 1; ++k) out.push_back(2);
}

std::vector<std::int64_t> rotated(std::vector<std::int64_t> v, std::size_t r) {
  if (!v.empty())
    std::rotate(v.begin(), v.begin() + static_cast<std::ptrdiff_t>(r % v.size()), v.end());
  return v;
}

// Smallest block whose repetition yields v.
std::vector<std::int64_t> primitive_period(const std::vector<std::int64_t>& v) {
  for (std::size_t len = 1; len < v.size(); ++len) {
    if (v.size() % len != 0) continue;
    bool ok = true;
    for (std::size_t i = len; i < v.size() && ok; ++i) ok = v[i] == v[i % len];
    if (ok) return {v.begin(), v.begin() + static_cast<std::ptrdiff_t>(len)};
  }
  return v;
}

// Move coefficients shared with the period's tail from the prefix back into
// the rotation of the period, then reduce the period to its primitive block.
// Period entries always satisfy the first-coefficient rule, so emptying the
// prefix is safe for both kinds.
void canonicalize_periodic(ContinuedFraction& cf) {
  while (!cf.prefix.empty() && !cf.period.empty() && cf.prefix.back() == cf.period.back()) {
    cf.prefix.pop_back();
    std::rotate(cf.period.begin(), cf.period.end() - 1, cf.period.end());
  }
  cf.period = primitive_period(cf.period);
}

}  // namespace

ContinuedFraction regular_to_hj(const ContinuedFraction& cf) {
  cf.validate();
  if (cf.kind != CFKind::Regular)
    raise(errc::invalid_argument, "regular_to_hj expects a regular expansion");
  std::vector<std::int64_t> pre = cf.prefix, per = cf.period;
  ContinuedFraction out;
  out.kind = CFKind::HJ;
  if (per.empty()) {
    normalize_even_length(pre);
    for (std::size_t i = 0; i < pre.size(); i += 2)
      push_hj_pair(out.prefix, pre[i], pre[i + 1], i == 0);
    out.validate();
    return out;
  }
  // Align: even-length period starting at an odd (1-based) position.
  if (per.size() % 2 != 0) per.insert(per.end(), per.begin(), per.end());
  if (pre.size() % 2 != 0) {
    pre.push_back(per.front());
    per = rotated(per, 1);
  }
  if (pre.empty()) pre = per;  // first-coefficient rule needs a materialized head
  for (std::size_t i = 0; i < pre.size(); i += 2)
    push_hj_pair(out.prefix, pre[i], pre[i + 1], i == 0);
  for (std::size_t i = 0; i < per.size(); i += 2)
    push_hj_pair(out.period, per[i], per[i + 1], false);
  canonicalize_periodic(out);
  out.validate();
  return out;
}

namespace {

// Inverse Hirzebruch map on a finite word that starts the expansion:
// c1 -> a1 = c1 - 1, then alternating (run of 2s -> a_even, c >= 3 -> a_odd).
std::vector<std::int64_t> parse_hj_leading(const std::vector<std::int64_t>& word) {
  std::vector<std::int64_t> out;
  out.push_back(word.front() - 1);
  std::size_t i = 1;
  while (true) {
    std::int64_t twos = 0;
    while (i < word.size() && word[i] == 2) {
      ++twos;
      ++i;
    }
    out.push_back(twos + 1);
    if (i >= word.size()) break;
    if (word[i] < 3) raise(errc::malformed_expansion, "inconsistent 2-run structure");
    out.push_back(word[i] - 2);
    ++i;
  }
  return out;
}

// Inverse map on a period block rotated to start at a coefficient >= 3:
// groups (c, run of 2s) -> (a_odd, a_even).
std::vector<std::int64_t> parse_hj_block(const std::vector<std::int64_t>& word) {
  std::vector<std::int64_t> out;
  std::size_t i = 0;
  while (i < word.size()) {
    if (word[i] < 3) raise(errc::malformed_expansion, "inconsistent 2-run structure");
    out.push_back(word[i] - 2);
    ++i;
    std::int64_t twos = 0;
    while (i < word.size() && word[i] == 2) {
      ++twos;
      ++i;
    }
    out.push_back(twos + 1);
  }
  return out;
}

}  // namespace

ContinuedFraction hj_to_regular(const ContinuedFraction& cf) {
  cf.validate();
  if (cf.kind != CFKind::HJ)
    raise(errc::invalid_argument, "hj_to_regular expects a Hirzebruch-Jung expansion");
  ContinuedFraction out;
  out.kind = CFKind::Regular;
  if (cf.period.empty()) {
    out.prefix = parse_hj_leading(cf.prefix);
    out.validate();
    return out;
  }
  // Rotate the period to start at a non-2 coefficient so 2-runs never wrap.
  std::size_t rot = 0;
  while (rot < cf.period.size() && cf.period[rot] == 2) ++rot;
  if (rot == cf.period.size())
    raise(errc::malformed_expansion,
          "all-twos period has no regular preimage (rational limit)");
  std::vector<std::int64_t> pre = cf.prefix;
  pre.insert(pre.end(), cf.period.begin(), cf.period.begin() + static_cast<std::ptrdiff_t>(rot));
  std::vector<std::int64_t> block = rotated(cf.period, rot);
  if (pre.empty()) pre = block;
  out.prefix = parse_hj_leading(pre);
  out.period = parse_hj_block(block);
  canonicalize_periodic(out);
  out.validate();
  return out;
}

std::vector<std::pair<mpz_class, mpz_class>> convergents(const ContinuedFraction& cf, int n) {
  cf.validate();
  if (n < 1) raise(errc::invalid_argument, "convergent count must be >= 1");
  if (cf.finite() && static_cast<std::size_t>(n) > cf.prefix.size())
    raise(errc::truncation_beyond_finite,
          "finite expansion has only " + std::to_string(cf.prefix.size()) + " convergents");
  std::vector<std::pair<mpz_class, mpz_class>> out;
  out.reserve(static_cast<std::size_t>(n));
  mpz_class p_prev2 = 1, q_prev2 = 0;
  mpz_class p_prev(cf.at(1)), q_prev = 1;
  out.emplace_back(p_prev, q_prev);
  for (int k = 2; k <= n; ++k) {
    mpz_class c(cf.at(static_cast<std::size_t>(k)));
    mpz_class p, q;
    if (cf.kind == CFKind::Regular) {
      p = c * p_prev + p_prev2;
      q = c * q_prev + q_prev2;
    } else {
      p = c * p_prev - p_prev2;
      q = c * q_prev - q_prev2;
    }
    out.emplace_back(p, q);
    p_prev2 = std::move(p_prev);
    q_prev2 = std::move(q_prev);
    p_prev = p;
    q_prev = q;
  }
  return out;
}

}  // namespace qnum
