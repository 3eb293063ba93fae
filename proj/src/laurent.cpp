#include "zamobelt/laurent.hpp"

#include <algorithm>
#include <cctype>
#include <limits>
#include <optional>
#include <queue>
#include <sstream>

namespace zamobelt {

namespace {

constexpr int kExpMin = std::numeric_limits<std::int16_t>::min();
constexpr int kExpMax = std::numeric_limits<std::int16_t>::max();

std::int16_t checked(int v) {
  if (v < kExpMin || v > kExpMax) {
    throw Error(ErrorCode::term_guard_exceeded, "exponent out of the 16-bit range");
  }
  return static_cast<std::int16_t>(v);
}

void check_arity(const LaurentPoly& a, const LaurentPoly& b) {
  if (a.nvars() != b.nvars()) {
    throw Error(ErrorCode::arity_mismatch, std::to_string(a.nvars()) + " vs " +
                                               std::to_string(b.nvars()) + " variables");
  }
}

void check_guard(std::size_t size, std::size_t guard) {
  if (size > guard) {
    throw Error(ErrorCode::term_guard_exceeded,
                "more than " + std::to_string(guard) + " terms");
  }
}

// Terms descending by monomial.
bool term_before(const Term& x, const Term& y) { return x.mono > y.mono; }

struct HeapEntry {
  Monomial mono;
  std::uint32_t i;
  std::uint32_t j;
};

struct HeapLess {
  bool operator()(const HeapEntry& x, const HeapEntry& y) const { return x.mono < y.mono; }
};

using Heap = std::priority_queue<HeapEntry, std::vector<HeapEntry>, HeapLess>;

Monomial min_exponents(const LaurentPoly& a) {
  Monomial m = a.terms().front().mono;
  for (const auto& t : a.terms())
    for (std::size_t v = 0; v < a.nvars(); ++v) m.e[v] = std::min(m.e[v], t.mono.e[v]);
  return m;
}

Monomial max_exponents(const LaurentPoly& a) {
  Monomial m = a.terms().front().mono;
  for (const auto& t : a.terms())
    for (std::size_t v = 0; v < a.nvars(); ++v) m.e[v] = std::max(m.e[v], t.mono.e[v]);
  return m;
}

}  // namespace

Monomial Monomial::variable(std::size_t i, int power) {
  Monomial m;
  m.e[i] = checked(power);
  return m;
}

Monomial& Monomial::operator+=(const Monomial& o) {
  for (std::size_t v = 0; v < kMaxVars; ++v) e[v] = checked(int{e[v]} + int{o.e[v]});
  return *this;
}

Monomial& Monomial::operator-=(const Monomial& o) {
  for (std::size_t v = 0; v < kMaxVars; ++v) e[v] = checked(int{e[v]} - int{o.e[v]});
  return *this;
}

// Grants the free functions in this file access to the term vector.
class LaurentBuilder {
 public:
  static LaurentPoly make(std::size_t nvars, std::vector<Term> sorted) {
    LaurentPoly p(nvars);
    p.terms_ = std::move(sorted);
    return p;
  }
};

LaurentPoly::LaurentPoly(std::size_t nvars) : nvars_(nvars) {
  if (nvars > kMaxVars) {
    throw Error(ErrorCode::arity_mismatch,
                "at most " + std::to_string(kMaxVars) + " variables are supported");
  }
}

LaurentPoly LaurentPoly::constant(std::size_t nvars, const mpz_class& c) {
  return monomial(nvars, Monomial{}, c);
}

LaurentPoly LaurentPoly::variable(std::size_t nvars, std::size_t i) {
  if (i >= nvars) throw Error(ErrorCode::index_out_of_range, "variable index");
  return monomial(nvars, Monomial::variable(i), 1);
}

LaurentPoly LaurentPoly::monomial(std::size_t nvars, const Monomial& m, const mpz_class& c) {
  LaurentPoly p(nvars);
  if (c != 0) p.terms_.push_back({m, c});
  return p;
}

LaurentPoly LaurentPoly::from_terms(std::size_t nvars, std::vector<Term> terms) {
  std::sort(terms.begin(), terms.end(), term_before);
  std::vector<Term> out;
  out.reserve(terms.size());
  for (auto& t : terms) {
    if (!out.empty() && out.back().mono == t.mono) {
      out.back().coef += t.coef;
    } else {
      if (!out.empty() && out.back().coef == 0) out.pop_back();
      out.push_back(std::move(t));
    }
  }
  if (!out.empty() && out.back().coef == 0) out.pop_back();
  return LaurentBuilder::make(nvars, std::move(out));
}

LaurentPoly LaurentPoly::parse(const std::string& text, std::size_t nvars) {
  std::string s;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) s += c;
  auto fail = [&](const std::string& why) -> void {
    throw Error(ErrorCode::invalid_input, "cannot parse '" + text + "': " + why);
  };
  std::size_t pos = 0;
  auto read_int = [&]() {
    std::size_t start = pos;
    if (pos < s.size() && (s[pos] == '-' || s[pos] == '+')) ++pos;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
    if (pos == start || !std::isdigit(static_cast<unsigned char>(s[pos - 1]))) fail("number expected");
    return s.substr(start, pos - start);
  };
  std::vector<Term> terms;
  if (s.empty()) fail("empty");
  while (pos < s.size()) {
    int sign = 1;
    if (s[pos] == '+' || s[pos] == '-') {
      sign = s[pos] == '-' ? -1 : 1;
      ++pos;
    } else if (!terms.empty()) {
      fail("operator expected");
    }
    Term t{Monomial{}, 1};
    bool any = false;
    while (pos < s.size() && s[pos] != '+' && s[pos] != '-') {
      if (any) {
        if (s[pos] != '*') fail("'*' expected");
        ++pos;
      }
      if (pos < s.size() && s[pos] == 'x') {
        ++pos;
        const auto idx = std::stol(read_int());
        if (idx < 1 || static_cast<std::size_t>(idx) > nvars) fail("variable out of range");
        int power = 1;
        if (pos < s.size() && s[pos] == '^') {
          ++pos;
          power = std::stoi(read_int());
        }
        t.mono.e[idx - 1] = checked(t.mono.e[idx - 1] + power);
      } else {
        t.coef *= mpz_class(read_int());
      }
      any = true;
    }
    if (!any) fail("empty term");
    if (sign < 0) t.coef = -t.coef;
    terms.push_back(std::move(t));
  }
  return from_terms(nvars, std::move(terms));
}

int LaurentPoly::as_variable() const {
  if (terms_.size() != 1 || terms_[0].coef != 1) return -1;
  int found = -1;
  for (std::size_t v = 0; v < nvars_; ++v) {
    const int e = terms_[0].mono.e[v];
    if (e == 0) continue;
    if (e != 1 || found != -1) return -1;
    found = static_cast<int>(v);
  }
  return found;
}

bool LaurentPoly::all_coefficients_positive() const {
  return std::all_of(terms_.begin(), terms_.end(), [](const Term& t) { return t.coef > 0; });
}

std::string LaurentPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& t : terms_) {
    const bool negative = t.coef < 0;
    if (first) {
      if (negative) out += '-';
    } else {
      out += negative ? " - " : " + ";
    }
    first = false;
    mpz_class mag = abs(t.coef);
    std::string factors;
    for (std::size_t v = 0; v < nvars_; ++v) {
      const int e = t.mono.e[v];
      if (e == 0) continue;
      if (!factors.empty()) factors += '*';
      factors += 'x' + std::to_string(v + 1);
      if (e != 1) factors += '^' + std::to_string(e);
    }
    if (factors.empty()) {
      out += mag.get_str();
    } else if (mag == 1) {
      out += factors;
    } else {
      out += mag.get_str() + '*' + factors;
    }
  }
  return out;
}

bool operator==(const LaurentPoly& a, const LaurentPoly& b) {
  if (a.nvars_ != b.nvars_ || a.terms_.size() != b.terms_.size()) return false;
  for (std::size_t i = 0; i < a.terms_.size(); ++i) {
    if (a.terms_[i].mono != b.terms_[i].mono || a.terms_[i].coef != b.terms_[i].coef) {
      return false;
    }
  }
  return true;
}

namespace {

LaurentPoly merge(const LaurentPoly& a, const LaurentPoly& b, int sign) {
  check_arity(a, b);
  const auto& x = a.terms();
  const auto& y = b.terms();
  std::vector<Term> out;
  out.reserve(x.size() + y.size());
  std::size_t i = 0, j = 0;
  while (i < x.size() || j < y.size()) {
    if (j == y.size() || (i < x.size() && x[i].mono > y[j].mono)) {
      out.push_back(x[i++]);
    } else if (i == x.size() || y[j].mono > x[i].mono) {
      out.push_back({y[j].mono, sign > 0 ? y[j].coef : mpz_class(-y[j].coef)});
      ++j;
    } else {
      mpz_class c = sign > 0 ? mpz_class(x[i].coef + y[j].coef) : mpz_class(x[i].coef - y[j].coef);
      if (c != 0) out.push_back({x[i].mono, std::move(c)});
      ++i;
      ++j;
    }
  }
  return LaurentBuilder::make(a.nvars(), std::move(out));
}

}  // namespace

LaurentPoly add(const LaurentPoly& a, const LaurentPoly& b) { return merge(a, b, 1); }
LaurentPoly sub(const LaurentPoly& a, const LaurentPoly& b) { return merge(a, b, -1); }

LaurentPoly mul_monomial(const LaurentPoly& a, const Monomial& m) {
  std::vector<Term> out = a.terms();
  for (auto& t : out) t.mono += m;
  return LaurentBuilder::make(a.nvars(), std::move(out));
}

LaurentPoly mul(const LaurentPoly& a, const LaurentPoly& b, std::size_t term_guard) {
  check_arity(a, b);
  if (a.is_zero() || b.is_zero()) return LaurentPoly(a.nvars());
  const LaurentPoly& small = a.size() <= b.size() ? a : b;
  const LaurentPoly& large = a.size() <= b.size() ? b : a;
  const auto& s = small.terms();
  const auto& l = large.terms();
  if (s.size() == 1) {
    std::vector<Term> out = l;
    for (auto& t : out) {
      t.mono += s[0].mono;
      t.coef *= s[0].coef;
    }
    return LaurentBuilder::make(a.nvars(), std::move(out));
  }
  // Johnson's heap multiplication: one cursor per term of the smaller factor,
  // products come out in decreasing order.
  Heap heap;
  for (std::uint32_t i = 0; i < s.size(); ++i) heap.push({s[i].mono + l[0].mono, i, 0});
  std::vector<Term> out;
  mpz_class acc;
  while (!heap.empty()) {
    const Monomial current = heap.top().mono;
    acc = 0;
    while (!heap.empty() && heap.top().mono == current) {
      HeapEntry top = heap.top();
      heap.pop();
      mpz_addmul(acc.get_mpz_t(), s[top.i].coef.get_mpz_t(), l[top.j].coef.get_mpz_t());
      if (top.j + 1 < l.size()) {
        heap.push({s[top.i].mono + l[top.j + 1].mono, top.i, top.j + 1});
      }
    }
    if (acc != 0) {
      out.push_back({current, acc});
      check_guard(out.size(), term_guard);
    }
  }
  return LaurentBuilder::make(a.nvars(), std::move(out));
}

LaurentPoly pow(const LaurentPoly& a, unsigned exponent, std::size_t term_guard) {
  LaurentPoly result = LaurentPoly::constant(a.nvars(), 1);
  for (unsigned i = 0; i < exponent; ++i) result = mul(result, a, term_guard);
  return result;
}

LaurentPoly div_exact(const LaurentPoly& a, const LaurentPoly& b, std::size_t term_guard) {
  check_arity(a, b);
  if (b.is_zero()) throw Error(ErrorCode::division_by_zero, "division by the zero polynomial");
  if (a.is_zero()) return LaurentPoly(a.nvars());
  const std::size_t n = a.nvars();

  // Pull out the monomial parts; the remaining polynomials must divide as
  // ordinary polynomials since monomials are the only units.
  const Monomial alpha = min_exponents(a);
  const Monomial beta = min_exponents(b);
  const Monomial shift = alpha - beta;
  Monomial neg_alpha, neg_beta;
  for (std::size_t v = 0; v < n; ++v) {
    neg_alpha.e[v] = checked(-alpha.e[v]);
    neg_beta.e[v] = checked(-beta.e[v]);
  }
  const LaurentPoly a0 = mul_monomial(a, neg_alpha);
  const LaurentPoly b0 = mul_monomial(b, neg_beta);
  const auto& x = a0.terms();
  const auto& y = b0.terms();

  const Monomial amax = max_exponents(a0);
  const Monomial bmax = max_exponents(b0);
  const Monomial lead = y.front().mono;
  const mpz_class& lead_coef = y.front().coef;

  std::vector<Term> q;
  auto not_divisible = [&](const std::string& why) {
    LaurentPoly partial = mul_monomial(LaurentBuilder::make(n, q), shift);
    throw NotDivisibleError(why, sub(a, mul(partial, b, std::numeric_limits<std::size_t>::max())));
  };

  Heap heap;
  std::size_t pa = 0;
  mpz_class c;
  while (pa < x.size() || !heap.empty()) {
    Monomial current;
    if (heap.empty() || (pa < x.size() && x[pa].mono > heap.top().mono)) {
      current = x[pa].mono;
    } else {
      current = heap.top().mono;
    }
    c = 0;
    if (pa < x.size() && x[pa].mono == current) c = x[pa++].coef;
    while (!heap.empty() && heap.top().mono == current) {
      HeapEntry top = heap.top();
      heap.pop();
      mpz_submul(c.get_mpz_t(), q[top.i].coef.get_mpz_t(), y[top.j].coef.get_mpz_t());
      if (top.j + 1 < y.size()) heap.push({q[top.i].mono + y[top.j + 1].mono, top.i, top.j + 1});
    }
    if (c == 0) continue;
    const Monomial qm = current - lead;
    for (std::size_t v = 0; v < n; ++v) {
      if (qm.e[v] < 0 || qm.e[v] > amax.e[v] - bmax.e[v]) {
        not_divisible("leading term " + LaurentPoly::monomial(n, current, c).to_string() +
                      " is not a multiple of the divisor's leading term");
      }
    }
    if (!mpz_divisible_p(c.get_mpz_t(), lead_coef.get_mpz_t())) {
      not_divisible("coefficient " + c.get_str() + " not divisible by " + lead_coef.get_str());
    }
    mpz_class qc;
    mpz_divexact(qc.get_mpz_t(), c.get_mpz_t(), lead_coef.get_mpz_t());
    q.push_back({qm, std::move(qc)});
    check_guard(q.size(), term_guard);
    if (y.size() > 1) {
      const auto qi = static_cast<std::uint32_t>(q.size() - 1);
      heap.push({q.back().mono + y[1].mono, qi, 1});
    }
  }
  for (auto& t : q) t.mono += shift;
  return LaurentBuilder::make(n, std::move(q));
}

DegreeProfile degree_profile(const LaurentPoly& a) {
  if (a.is_zero()) throw Error(ErrorCode::zero_polynomial, "degree profile of 0");
  DegreeProfile p;
  const Monomial lo = min_exponents(a);
  const Monomial hi = max_exponents(a);
  for (std::size_t v = 0; v < a.nvars(); ++v) p.degrees.emplace_back(lo.e[v], hi.e[v]);
  return p;
}

std::vector<int> denominator_vector(const LaurentPoly& a) {
  if (a.is_zero()) throw Error(ErrorCode::zero_polynomial, "denominator vector of 0");
  const Monomial lo = min_exponents(a);
  std::vector<int> d(a.nvars());
  for (std::size_t v = 0; v < a.nvars(); ++v) d[v] = -lo.e[v];
  return d;
}

mpq_class tropical_evaluate(const LaurentPoly& a, const std::vector<mpq_class>& weights) {
  if (a.is_zero()) throw Error(ErrorCode::zero_polynomial, "tropical value of 0");
  if (weights.size() != a.nvars()) throw Error(ErrorCode::arity_mismatch, "weight vector size");
  std::optional<mpq_class> best;
  mpq_class value;
  for (const auto& t : a.terms()) {
    value = 0;
    for (std::size_t v = 0; v < a.nvars(); ++v)
      if (t.mono.e[v] != 0) value += weights[v] * t.mono.e[v];
    if (!best || value > *best) best = value;
  }
  return *best;
}

LaurentPoly relabel(const LaurentPoly& a, const std::vector<int>& perm) {
  if (perm.size() != a.nvars()) throw Error(ErrorCode::arity_mismatch, "permutation size");
  std::vector<Term> out;
  out.reserve(a.size());
  for (const auto& t : a.terms()) {
    Term r{Monomial{}, t.coef};
    for (std::size_t v = 0; v < a.nvars(); ++v) r.mono.e[perm[v]] = t.mono.e[v];
    out.push_back(std::move(r));
  }
  return LaurentPoly::from_terms(a.nvars(), std::move(out));
}

}  // namespace zamobelt
