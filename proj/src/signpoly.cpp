#include "symspec/signpoly.hpp"

#include "symspec/fourier.hpp"

namespace symspec {

SignPoly SignPoly::symmetric(int n, std::vector<Rational> levels) {
  if (n < 0 || n > 63) throw Error("SignPoly: n out of range");
  if (levels.size() != static_cast<std::size_t>(n + 1))
    throw Error("SignPoly: symmetric form needs n + 1 level coefficients");
  SignPoly p(n, true);
  p.levels_ = std::move(levels);
  return p;
}

SignPoly SignPoly::sparse(int n, std::map<Mask, Rational> terms) {
  if (n < 0 || n > 63) throw Error("SignPoly: n out of range");
  SignPoly p(n, false);
  const Mask limit = n == 63 ? ~Mask{0} >> 1 : (Mask{1} << n) - 1;
  for (auto& [mask, c] : terms) {
    if ((mask & ~limit) != 0) throw Error("SignPoly: mask outside [n]");
    if (sgn(c) != 0) p.terms_.emplace(mask, std::move(c));
  }
  return p;
}

SignPoly SignPoly::constant(int n, const Rational& c) {
  std::vector<Rational> levels(static_cast<std::size_t>(n + 1), Rational(0));
  levels[0] = c;
  return symmetric(n, std::move(levels));
}

SignPoly SignPoly::full_parity(int n, const Rational& c) {
  std::vector<Rational> levels(static_cast<std::size_t>(n + 1), Rational(0));
  levels[static_cast<std::size_t>(n)] = c;
  return symmetric(n, std::move(levels));
}

const std::vector<Rational>& SignPoly::levels() const {
  if (!symmetric_) throw Error("SignPoly: levels() on a sparse polynomial");
  return levels_;
}

const std::map<Mask, Rational>& SignPoly::terms() const {
  if (symmetric_) throw Error("SignPoly: terms() on a symmetric polynomial");
  return terms_;
}

std::uint64_t SignPoly::term_count() const {
  if (!symmetric_) return terms_.size();
  std::uint64_t count = 0;
  for (int k = 0; k <= n_; ++k)
    if (sgn(levels_[k]) != 0) count += binomial_u64(n_, k);
  return count;
}

Rational SignPoly::evaluate(Mask x) const {
  if (symmetric_) return evaluate_weight(popcount(x));
  Rational sum = 0;
  for (const auto& [mask, c] : terms_) {
    if (character(mask, x) > 0) sum += c;
    else sum -= c;
  }
  return sum;
}

Rational SignPoly::evaluate_weight(int j) const {
  if (!symmetric_) throw Error("SignPoly: evaluate_weight() on a sparse polynomial");
  return evaluate_levels(levels_, j);
}

SignPoly SignPoly::complement_inputs() const {
  SignPoly out(n_, symmetric_);
  if (symmetric_) {
    out.levels_ = levels_;
    for (int k = 1; k <= n_; k += 2) out.levels_[k] = -out.levels_[k];
  } else {
    for (const auto& [mask, c] : terms_)
      out.terms_.emplace(mask, (popcount(mask) & 1) ? Rational(-c) : c);
  }
  for (const auto& f : factors_) out.factors_.push_back(f.complement_inputs());
  return out;
}

SignPoly SignPoly::negated() const {
  SignPoly out(n_, symmetric_);
  if (symmetric_) {
    out.levels_.reserve(levels_.size());
    for (const auto& c : levels_) out.levels_.emplace_back(-c);
  } else {
    for (const auto& [mask, c] : terms_) out.terms_.emplace(mask, -c);
  }
  // negating one factor negates the product
  out.factors_ = factors_;
  if (!out.factors_.empty()) out.factors_.front() = out.factors_.front().negated();
  return out;
}

std::map<Mask, Rational> SignPoly::expanded(const Caps& caps) const {
  if (!symmetric_) return terms_;
  if (n_ > caps.expand_n) throw CapExceeded("SignPoly::expanded", n_, caps.expand_n);
  std::map<Mask, Rational> out;
  for (Mask s = 0; s < (Mask{1} << n_); ++s) {
    const Rational& c = levels_[static_cast<std::size_t>(popcount(s))];
    if (sgn(c) != 0) out.emplace(s, c);
  }
  return out;
}

Integer level_product_count(int n, int a, int b, int c) {
  // |S \ T| = (a - b + c)/2 inside the difference, |S & T| = (a + b - c)/2 outside it
  const int twice_only_s = a - b + c;
  const int twice_common = a + b - c;
  if (twice_only_s < 0 || twice_common < 0 || (twice_only_s & 1) || (twice_common & 1))
    return 0;
  return binomial(c, twice_only_s / 2) * binomial(n - c, twice_common / 2);
}

SignPoly operator*(const SignPoly& a, const SignPoly& b) {
  if (a.n_ != b.n_) throw Error("SignPoly: product of polynomials on different n");
  const int n = a.n_;
  SignPoly out(n, a.symmetric_ && b.symmetric_);
  if (out.symmetric_) {
    out.levels_.assign(static_cast<std::size_t>(n + 1), Rational(0));
    for (int i = 0; i <= n; ++i) {
      if (sgn(a.levels_[i]) == 0) continue;
      for (int j = 0; j <= n; ++j) {
        if (sgn(b.levels_[j]) == 0) continue;
        const Rational coef = a.levels_[i] * b.levels_[j];
        for (int c = std::abs(i - j); c <= std::min(i + j, 2 * n - i - j); c += 2)
          out.levels_[c] += coef * Rational(level_product_count(n, i, j, c));
      }
    }
  } else {
    const auto ta = a.expanded();
    const auto tb = b.expanded();
    for (const auto& [ma, ca] : ta)
      for (const auto& [mb, cb] : tb) out.terms_[ma ^ mb] += ca * cb;
    std::erase_if(out.terms_, [](const auto& kv) { return sgn(kv.second) == 0; });
  }
  auto append_factors = [&](const SignPoly& p) {
    if (p.factors_.empty()) {
      SignPoly leaf = p;
      out.factors_.push_back(std::move(leaf));
    } else {
      for (const auto& f : p.factors_) out.factors_.push_back(f);
    }
  };
  append_factors(a);
  append_factors(b);
  return out;
}

}  // namespace symspec
