#include "symspec/core.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>

namespace symspec {

SymFn::SymFn(std::vector<std::uint8_t> values) : values_(std::move(values)) {
  if (values_.size() < 2)
    throw Error("SymFn needs n >= 1, i.e. at least two values");
  for (auto v : values_)
    if (v > 1) throw Error("SymFn values must be 0 or 1");
  if (values_.size() > 64) throw Error("SymFn supports n <= 63");
}

SymFn SymFn::parse(std::string_view text) {
  std::vector<std::uint8_t> v;
  v.reserve(text.size());
  for (std::size_t i = 0; i < text.size(); ++i) {
    if (text[i] != '0' && text[i] != '1')
      throw ParseError("value string must contain only 0 and 1", i);
    v.push_back(static_cast<std::uint8_t>(text[i] - '0'));
  }
  if (v.size() < 2) throw ParseError("value string needs at least 2 characters", text.size());
  return SymFn(std::move(v));
}

std::string SymFn::to_string() const {
  std::string s;
  for (auto v : values_) s.push_back(static_cast<char>('0' + v));
  return s;
}

std::uint64_t SymFn::code() const noexcept {
  std::uint64_t c = 0;
  for (std::size_t j = 0; j < values_.size(); ++j)
    if (values_[j]) c |= std::uint64_t{1} << j;
  return c;
}

SymFn SymFn::from_code(int n, std::uint64_t code) {
  std::vector<std::uint8_t> v(static_cast<std::size_t>(n + 1));
  for (int j = 0; j <= n; ++j) v[static_cast<std::size_t>(j)] = (code >> j) & 1;
  return SymFn(std::move(v));
}

BoolFn::BoolFn(int n, std::vector<std::uint8_t> table) : n_(n), table_(std::move(table)) {
  if (n < 0 || n > 30) throw Error("BoolFn needs 0 <= n <= 30");
  if (table_.size() != (std::size_t{1} << n))
    throw Error("BoolFn table length must be 2^n");
  for (auto v : table_)
    if (v > 1) throw Error("BoolFn entries must be 0 or 1");
}

BoolFn BoolFn::parse_hex(int n, std::string_view hex) {
  if (n < 0 || n > 30) throw Error("BoolFn needs 0 <= n <= 30");
  const std::size_t size = std::size_t{1} << n;
  std::vector<std::uint8_t> table(size, 0);
  std::size_t bit = 0;
  for (std::size_t i = hex.size(); i-- > 0;) {
    const char c = static_cast<char>(std::tolower(static_cast<unsigned char>(hex[i])));
    int nibble = 0;
    if (c >= '0' && c <= '9') nibble = c - '0';
    else if (c >= 'a' && c <= 'f') nibble = c - 'a' + 10;
    else throw ParseError("invalid hex digit", i);
    for (int b = 0; b < 4; ++b, ++bit) {
      const bool set = (nibble >> b) & 1;
      if (bit < size) table[bit] = set;
      else if (set) throw ParseError("truth table has bits beyond 2^n", i);
    }
  }
  return BoolFn(n, std::move(table));
}

std::string BoolFn::to_hex() const {
  static constexpr char digits[] = "0123456789abcdef";
  const std::size_t nibbles = std::max<std::size_t>(1, (table_.size() + 3) / 4);
  std::string s(nibbles, '0');
  for (std::size_t k = 0; k < nibbles; ++k) {
    int nibble = 0;
    for (int b = 0; b < 4; ++b) {
      const std::size_t x = 4 * k + static_cast<std::size_t>(b);
      if (x < table_.size() && table_[x]) nibble |= 1 << b;
    }
    s[nibbles - 1 - k] = digits[nibble];
  }
  return s;
}

namespace {

// Least r in [0, hi] such that f(i) = f(i+2) for every i in
// [first(r), last(r)]. Comparisons past weight n count as satisfied, and so
// does an empty interval, which makes r = hi always qualify.
template <class First, class Last>
int least_periodic_start(const SymFn& f, int hi, First first, Last last) {
  const int n = f.n();
  for (int r = 0; r < hi; ++r) {
    bool ok = true;
    for (int i = first(r); i <= last(r) && ok; ++i)
      if (i + 2 <= n && f(i) != f(i + 2)) ok = false;
    if (ok) return r;
  }
  return hi;
}

}  // namespace

Measures measures(const SymFn& f) {
  const int n = f.n();
  const int half_up = (n + 1) / 2;
  const int half_down = n / 2;
  Measures m;
  m.r0 = least_periodic_start(
      f, half_up, [](int r) { return r; }, [&](int) { return half_up - 1; });
  // r1 ranges over [0, floor(n/2) - 1], which is empty for n = 1.
  m.r1 = half_down - 1 < 0
             ? 0
             : least_periodic_start(
                   f, half_down - 1, [&](int) { return half_up; },
                   [&](int r) { return n - r - 2; });
  m.r = std::max(m.r0, m.r1);
  for (int i = 0; i + 1 <= n; ++i) m.lambda += f(i) != f(i + 1);
  for (int i = 0; i + 2 <= n; ++i) m.rho += f(i) != f(i + 2);
  return m;
}

SymFn reverse(const SymFn& f) {
  std::vector<std::uint8_t> v(f.values().rbegin(), f.values().rend());
  return SymFn(std::move(v));
}

SymFn restrict_one(const SymFn& f) {
  if (f.n() < 2) throw Error("restrict_one needs n >= 2 to leave a function on >= 1 bit");
  return SymFn(std::vector<std::uint8_t>(f.values().begin() + 1, f.values().end()));
}

SymFn prefix_restrict(const SymFn& f, int i) {
  if (i > f.n()) throw Error("prefix_restrict: i = " + std::to_string(i) + " exceeds n = " + std::to_string(f.n()));
  if (i < 1) throw Error("prefix_restrict: i must be >= 1");
  return SymFn(std::vector<std::uint8_t>(f.values().begin(), f.values().begin() + i + 1));
}

BoolFn expand(const SymFn& f, const Caps& caps) {
  if (f.n() > caps.expand_n) throw CapExceeded("expand", f.n(), caps.expand_n);
  const std::size_t size = std::size_t{1} << f.n();
  std::vector<std::uint8_t> table(size);
  for (std::size_t x = 0; x < size; ++x) table[x] = f.values()[static_cast<std::size_t>(popcount(x))];
  return BoolFn(f.n(), std::move(table));
}

BoolFn complement_inputs(const BoolFn& g) {
  const Mask all = g.size() - 1;
  std::vector<std::uint8_t> table(g.size());
  for (Mask x = 0; x < g.size(); ++x) table[x] = g.table()[x ^ all];
  return BoolFn(g.n(), std::move(table));
}

std::optional<SymFn> as_symmetric(const BoolFn& g) {
  if (g.n() < 1) return std::nullopt;
  std::vector<int> seen(static_cast<std::size_t>(g.n() + 1), -1);
  for (Mask x = 0; x < g.size(); ++x) {
    int& v = seen[static_cast<std::size_t>(popcount(x))];
    if (v < 0) v = g.table()[x];
    else if (v != g.table()[x]) return std::nullopt;
  }
  std::vector<std::uint8_t> values(seen.begin(), seen.end());
  return SymFn(std::move(values));
}

namespace {

int parse_suffix(std::string_view name, std::string_view prefix) {
  const auto digits = name.substr(prefix.size());
  int value = 0;
  auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), value);
  if (digits.empty() || ec != std::errc{} || ptr != digits.data() + digits.size())
    throw ParseError("expected an integer after '" + std::string(prefix) + "'", prefix.size());
  return value;
}

}  // namespace

SymFn named_function(std::string_view name, int n) {
  if (n < 1 || n > 63) throw Error("named functions need 1 <= n <= 63");
  std::vector<std::uint8_t> v(static_cast<std::size_t>(n + 1));
  auto fill = [&](auto pred) {
    for (int j = 0; j <= n; ++j) v[static_cast<std::size_t>(j)] = pred(j) ? 1 : 0;
  };
  if (name == "and") fill([&](int j) { return j == n; });
  else if (name == "or") fill([](int j) { return j >= 1; });
  else if (name == "parity") fill([](int j) { return j % 2 == 1; });
  else if (name == "maj") fill([&](int j) { return 2 * j > n; });
  else if (name == "const0") fill([](int) { return false; });
  else if (name == "const1") fill([](int) { return true; });
  else if (name.starts_with("mod")) {
    const int m = parse_suffix(name, "mod");
    if (m < 1) throw ParseError("mod<m> needs m >= 1", 3);
    fill([&](int j) { return j % m == 0; });
  } else if (name.starts_with("threshold")) {
    const int t = parse_suffix(name, "threshold");
    fill([&](int j) { return j >= t; });
  } else {
    throw ParseError("unknown function name '" + std::string(name) + "'", 0);
  }
  return SymFn(std::move(v));
}

}  // namespace symspec
