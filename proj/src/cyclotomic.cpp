#include "supchar/cyclotomic.hpp"

#include <algorithm>
#include <cctype>
#include <limits>
#include <unordered_map>

namespace supchar {

namespace {

// Exponents of E(N) are kept below this bound so that products of two
// exponents fit comfortably in 64 bits.
constexpr std::uint64_t kMaxConductor = std::uint64_t{1} << 31;

using Coeffs = std::unordered_map<std::uint32_t, Rational>;

void drop_zeros(Coeffs& coeffs) {
  std::erase_if(coeffs, [](const auto& kv) { return sgn(kv.second) == 0; });
}

// Rewrites `coeffs` (an element of Z[x]/(x^N - 1) tensored with Q) into the
// canonical basis of Q(E(N)). For every prime power p^k || N the p-component
// of an exponent is written as low + p^(k-1) * digit; the basis admits
// digit != 0 for odd p and digit == 0 for p = 2. Excluded exponents are
// rewritten with sum_j E(p)^j = 0 (odd p) or E(N)^(N/2) = -1 (p = 2). Moving
// along multiples of N/p only changes the p-component, so the primes can be
// handled one after another.
void reduce(std::uint32_t n, Coeffs& coeffs) {
  std::vector<std::uint32_t> pending;
  for (const PrimePower& pp : factorize(n)) {
    const std::uint32_t p = pp.prime;
    const std::uint32_t high = pp.value / p;
    const std::uint32_t step = n / p;
    pending.clear();
    for (const auto& [e, c] : coeffs) {
      if (sgn(c) == 0) continue;
      const std::uint32_t digit = (e % pp.value) / high;
      if (p == 2 ? digit == 1 : digit == 0) pending.push_back(e);
    }
    for (std::uint32_t e : pending) {
      auto node = coeffs.extract(e);
      const Rational& c = node.mapped();
      if (p == 2) {
        coeffs[static_cast<std::uint32_t>((std::uint64_t{e} + step) % n)] -= c;
      } else {
        for (std::uint32_t j = 1; j < p; ++j) {
          coeffs[static_cast<std::uint32_t>((std::uint64_t{e} + std::uint64_t{j} * step) % n)] -= c;
        }
      }
    }
  }
  drop_zeros(coeffs);
}

// Attempts to rewrite a reduced element of Q(E(n)) as an element of
// Q(E(n/p)). Returns false (leaving `coeffs` untouched) if it does not lie in
// that subfield.
bool try_descend(std::uint32_t n, const PrimePower& pp, Coeffs& coeffs) {
  const std::uint32_t p = pp.prime;
  Coeffs out;
  if (pp.exponent >= 2 || p == 2) {
    // Subfield is spanned by the basis exponents divisible by p.
    for (const auto& [e, c] : coeffs) {
      if (e % p != 0) return false;
    }
    for (auto& [e, c] : coeffs) out.emplace(e / p, std::move(c));
  } else {
    // p || n: each fiber {f + j*n/p} carries p-1 basis elements which must
    // share one coefficient c; their sum is -c * E(n)^e0 with p | e0.
    const std::uint32_t m = n / p;
    struct Fiber {
      std::uint32_t count = 0;
      const Rational* coefficient = nullptr;
    };
    std::unordered_map<std::uint32_t, Fiber> fibers;
    for (const auto& [e, c] : coeffs) {
      Fiber& f = fibers[e % m];
      if (f.coefficient != nullptr && *f.coefficient != c) return false;
      f.coefficient = &c;
      ++f.count;
    }
    for (const auto& [base, f] : fibers) {
      if (f.count != p - 1) return false;
    }
    for (const auto& [base, f] : fibers) {
      std::uint64_t e0 = base;
      while (e0 % p != 0) e0 += m;
      out.emplace(static_cast<std::uint32_t>(e0 / p), -*f.coefficient);
    }
  }
  coeffs = std::move(out);
  return true;
}

}  // namespace

// Builds canonical values from raw coefficient maps.
class CyclotomicBuilder {
 public:
  static Cyclotomic finish(std::uint32_t n, Coeffs coeffs, bool reduced, bool minimize = true) {
    if (!reduced) reduce(n, coeffs);
    drop_zeros(coeffs);
    if (minimize) {
      bool descended = true;
      while (descended && !coeffs.empty()) {
        descended = false;
        for (const PrimePower& pp : factorize(n)) {
          if (try_descend(n, pp, coeffs)) {
            n /= pp.prime;
            reduce(n, coeffs);
            descended = true;
            break;
          }
        }
      }
    }
    if (coeffs.empty()) return Cyclotomic{};
    std::vector<Cyclotomic::Term> terms;
    terms.reserve(coeffs.size());
    for (auto& [e, c] : coeffs) terms.emplace_back(e, std::move(c));
    std::sort(terms.begin(), terms.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    return Cyclotomic{n, std::move(terms)};
  }

  // Embeds `value` into Q(E(target)) (conductor divides target), exponents
  // not yet reduced.
  static void embed(const Cyclotomic& value, std::uint32_t target, Coeffs& into, int sign = 1) {
    const std::uint32_t scale = target / value.conductor_;
    for (const auto& [e, c] : value.terms_) {
      Rational& slot = into[e * scale];
      if (sign > 0) {
        slot += c;
      } else {
        slot -= c;
      }
    }
  }

  static Cyclotomic add(const Cyclotomic& a, const Cyclotomic& b, int sign) {
    if (b.is_zero()) return a;
    if (a.is_zero()) return sign > 0 ? b : -b;
    const auto n = static_cast<std::uint32_t>(lcm_u64(a.conductor_, b.conductor_));
    Coeffs coeffs;
    coeffs.reserve(a.terms_.size() + b.terms_.size());
    embed(a, n, coeffs);
    embed(b, n, coeffs, sign);
    const bool same_field = a.conductor_ == b.conductor_;
    return finish(n, std::move(coeffs), same_field);
  }

  static Cyclotomic scale(const Cyclotomic& a, const Rational& factor) {
    if (sgn(factor) == 0) return Cyclotomic{};
    std::vector<Cyclotomic::Term> terms = a.terms_;
    for (auto& [e, c] : terms) c *= factor;
    return Cyclotomic{a.conductor_, std::move(terms)};
  }

  static Cyclotomic multiply(const Cyclotomic& a, const Cyclotomic& b) {
    if (a.is_zero() || b.is_zero()) return Cyclotomic{};
    if (a.conductor_ == 1) return scale(b, a.terms_.front().second);
    if (b.conductor_ == 1) return scale(a, b.terms_.front().second);
    const std::uint64_t n = lcm_u64(a.conductor_, b.conductor_);
    const std::uint64_t sa = n / a.conductor_;
    const std::uint64_t sb = n / b.conductor_;
    Coeffs coeffs;
    coeffs.reserve(a.terms_.size() * b.terms_.size());
    for (const auto& [ea, ca] : a.terms_) {
      for (const auto& [eb, cb] : b.terms_) {
        const auto e = static_cast<std::uint32_t>((ea * sa + eb * sb) % n);
        coeffs[e] += ca * cb;
      }
    }
    return finish(static_cast<std::uint32_t>(n), std::move(coeffs), false);
  }

  static Cyclotomic galois(const Cyclotomic& a, std::uint64_t u) {
    const std::uint32_t n = a.conductor_;
    Coeffs coeffs;
    coeffs.reserve(a.terms_.size());
    for (const auto& [e, c] : a.terms_) {
      coeffs[static_cast<std::uint32_t>((std::uint64_t{e} * u) % n)] += c;
    }
    // Galois conjugates share the conductor.
    return finish(n, std::move(coeffs), false, /*minimize=*/false);
  }

  static Cyclotomic root(std::uint32_t n, std::uint64_t exponent) {
    Coeffs coeffs;
    coeffs[static_cast<std::uint32_t>(exponent % n)] = 1;
    return finish(n, std::move(coeffs), false);
  }

  static Cyclotomic from_exponents(std::uint32_t n,
                                   std::span<const std::pair<std::uint64_t, Rational>> terms) {
    Coeffs coeffs;
    for (const auto& [e, c] : terms) {
      Rational q = c;
      q.canonicalize();
      coeffs[static_cast<std::uint32_t>(e % n)] += q;
    }
    return finish(n, std::move(coeffs), false);
  }
};

std::uint64_t gcd_u64(std::uint64_t a, std::uint64_t b) {
  while (b != 0) {
    a %= b;
    std::swap(a, b);
  }
  return a;
}

std::uint64_t lcm_u64(std::uint64_t a, std::uint64_t b) {
  if (a == 0 || b == 0) return 0;
  const std::uint64_t l = a / gcd_u64(a, b) * b;
  if (l >= kMaxConductor) throw std::overflow_error("cyclotomic conductor exceeds 2^31");
  return l;
}

std::vector<PrimePower> factorize(std::uint32_t n) {
  std::vector<PrimePower> out;
  for (std::uint32_t p = 2; std::uint64_t{p} * p <= n; ++p) {
    if (n % p != 0) continue;
    PrimePower pp{p, 0, 1};
    while (n % p == 0) {
      n /= p;
      ++pp.exponent;
      pp.value *= p;
    }
    out.push_back(pp);
  }
  if (n > 1) out.push_back({n, 1, n});
  return out;
}

std::string_view to_string(ValueKind kind) {
  switch (kind) {
    case ValueKind::Rational:
      return "rational";
    case ValueKind::RealIrrational:
      return "real-irrational";
    case ValueKind::NonReal:
      return "non-real";
  }
  return "?";
}

Cyclotomic::Cyclotomic(long value) : Cyclotomic(Rational(value)) {}

Cyclotomic::Cyclotomic(const Rational& value) {
  if (sgn(value) != 0) {
    terms_.emplace_back(0, value);
    terms_.back().second.canonicalize();
  }
}

Cyclotomic Cyclotomic::root_of_unity(std::uint32_t n, std::uint64_t exponent) {
  if (n == 0) throw std::invalid_argument("root of unity order must be positive");
  if (n >= kMaxConductor) throw std::overflow_error("cyclotomic conductor exceeds 2^31");
  return CyclotomicBuilder::root(n, exponent);
}

Cyclotomic Cyclotomic::from_exponents(std::uint32_t n,
                                      std::span<const std::pair<std::uint64_t, Rational>> terms) {
  if (n == 0) throw std::invalid_argument("root of unity order must be positive");
  if (n >= kMaxConductor) throw std::overflow_error("cyclotomic conductor exceeds 2^31");
  return CyclotomicBuilder::from_exponents(n, terms);
}

std::optional<Rational> Cyclotomic::rational_value() const {
  if (conductor_ != 1) return std::nullopt;
  if (terms_.empty()) return Rational(0);
  return terms_.front().second;
}

std::optional<Integer> Cyclotomic::integer_value() const {
  auto q = rational_value();
  if (!q || q->get_den() != 1) return std::nullopt;
  return Integer(q->get_num());
}

Cyclotomic Cyclotomic::conjugate() const {
  if (conductor_ <= 2) return *this;
  return CyclotomicBuilder::galois(*this, conductor_ - 1);
}

Cyclotomic Cyclotomic::galois(long long u) const {
  if (conductor_ == 1) return *this;
  const auto n = static_cast<long long>(conductor_);
  const auto reduced = static_cast<std::uint64_t>(((u % n) + n) % n);
  if (gcd_u64(reduced, conductor_) != 1) {
    throw std::invalid_argument("Galois exponent " + std::to_string(u) +
                                " is not coprime to conductor " + std::to_string(conductor_));
  }
  return CyclotomicBuilder::galois(*this, reduced);
}

ValueKind Cyclotomic::classify() const {
  if (conductor_ == 1) return ValueKind::Rational;
  return conjugate() == *this ? ValueKind::RealIrrational : ValueKind::NonReal;
}

Cyclotomic Cyclotomic::pow(unsigned exponent) const {
  Cyclotomic result(1L);
  Cyclotomic base = *this;
  while (exponent != 0) {
    if (exponent & 1U) result *= base;
    exponent >>= 1U;
    if (exponent != 0) base *= base;
  }
  return result;
}

std::string Cyclotomic::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (const auto& [e, c] : terms_) {
    std::string term;
    if (e == 0) {
      term = c.get_str();
    } else {
      std::string root = "E(" + std::to_string(conductor_) + ")";
      if (e != 1) root += "^" + std::to_string(e);
      if (c == 1) {
        term = root;
      } else if (c == -1) {
        term = "-" + root;
      } else {
        term = c.get_str() + "*" + root;
      }
    }
    if (!out.empty() && term.front() != '-') out += '+';
    out += term;
  }
  return out;
}

std::size_t Cyclotomic::hash() const noexcept {
  std::size_t h = conductor_;
  auto mix = [&h](std::size_t v) { h ^= v + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2); };
  for (const auto& [e, c] : terms_) {
    mix(e);
    mix(mpz_get_ui(c.get_num_mpz_t()) ^ (static_cast<std::size_t>(sgn(c) < 0) << 63));
    mix(mpz_get_ui(c.get_den_mpz_t()));
  }
  return h;
}

Cyclotomic operator+(const Cyclotomic& a, const Cyclotomic& b) {
  return CyclotomicBuilder::add(a, b, 1);
}

Cyclotomic operator-(const Cyclotomic& a, const Cyclotomic& b) {
  return CyclotomicBuilder::add(a, b, -1);
}

Cyclotomic operator*(const Cyclotomic& a, const Cyclotomic& b) {
  return CyclotomicBuilder::multiply(a, b);
}

Cyclotomic Cyclotomic::operator-() const {
  std::vector<Term> terms = terms_;
  for (auto& [e, c] : terms) c = -c;
  return Cyclotomic{conductor_, std::move(terms)};
}

bool operator==(const Cyclotomic& a, const Cyclotomic& b) {
  return a.conductor_ == b.conductor_ && a.terms_ == b.terms_;
}

std::strong_ordering operator<=>(const Cyclotomic& a, const Cyclotomic& b) {
  if (auto c = a.conductor_ <=> b.conductor_; c != 0) return c;
  const std::size_t n = std::min(a.terms_.size(), b.terms_.size());
  for (std::size_t i = 0; i < n; ++i) {
    const auto& [ea, ca] = a.terms_[i];
    const auto& [eb, cb] = b.terms_[i];
    if (auto c = ea <=> eb; c != 0) return c;
    const int diff = cmp(ca, cb);
    if (diff != 0) return diff < 0 ? std::strong_ordering::less : std::strong_ordering::greater;
  }
  return a.terms_.size() <=> b.terms_.size();
}

// ---------------------------------------------------------------------------
// Expression parser

namespace {

class ExpressionParser {
 public:
  explicit ExpressionParser(std::string_view text) : text_(text) {}

  Cyclotomic parse() {
    Cyclotomic value = expr();
    skip_space();
    if (pos_ != text_.size()) fail("unexpected character '" + std::string(1, text_[pos_]) + "'");
    return value;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const { throw ParseError(what, pos_); }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip_space();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  void expect(char c) {
    if (!accept(c)) {
      if (pos_ >= text_.size()) fail(std::string("expected '") + c + "' but input ended");
      fail(std::string("expected '") + c + "'");
    }
  }

  Integer integer() {
    skip_space();
    const std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (start == pos_) fail(pos_ < text_.size() ? "expected integer" : "unexpected end of input");
    return Integer(std::string(text_.substr(start, pos_ - start)));
  }

  Cyclotomic expr() {
    const bool negate = accept('-');
    Cyclotomic value = term();
    if (negate) value = -value;
    while (true) {
      if (accept('+')) {
        value += term();
      } else if (accept('-')) {
        value -= term();
      } else {
        return value;
      }
    }
  }

  Cyclotomic term() {
    Cyclotomic value = factor();
    while (accept('*')) value *= factor();
    return value;
  }

  Cyclotomic factor() {
    skip_space();
    const bool root_atom = text_.substr(pos_, 1) == "E";
    std::uint32_t root_order = 0;
    Cyclotomic base = atom(root_order);
    if (!accept('^')) return base;
    const std::size_t exponent_pos = pos_;
    Integer exponent = integer();
    if (root_atom) {
      const Integer reduced = exponent % root_order;
      return Cyclotomic::root_of_unity(root_order, reduced.get_ui());
    }
    if (exponent > 4096) {
      pos_ = exponent_pos;
      fail("exponent too large");
    }
    return base.pow(static_cast<unsigned>(exponent.get_ui()));
  }

  Cyclotomic atom(std::uint32_t& root_order) {
    skip_space();
    if (pos_ >= text_.size()) fail("unexpected end of input");
    const char c = text_[pos_];
    if (c == '(') {
      ++pos_;
      Cyclotomic value = expr();
      expect(')');
      return value;
    }
    if (c == 'E') {
      ++pos_;
      expect('(');
      skip_space();
      const std::size_t order_pos = pos_;
      Integer order = integer();
      if (order < 1) {
        pos_ = order_pos;
        fail("E(n) requires n >= 1");
      }
      if (order >= Integer(1UL << 31)) {
        pos_ = order_pos;
        fail("E(n) order too large");
      }
      expect(')');
      root_order = static_cast<std::uint32_t>(order.get_ui());
      return Cyclotomic::root_of_unity(root_order);
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      Integer numerator = integer();
      if (accept('/')) {
        skip_space();
        const std::size_t den_pos = pos_;
        Integer denominator = integer();
        if (denominator == 0) {
          pos_ = den_pos;
          fail("zero denominator");
        }
        Rational q(numerator, denominator);
        q.canonicalize();
        return Cyclotomic(q);
      }
      return Cyclotomic(Rational(numerator));
    }
    fail("unexpected character '" + std::string(1, c) + "'");
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

Cyclotomic parse_cyclotomic(std::string_view text) { return ExpressionParser(text).parse(); }

}  // namespace supchar
