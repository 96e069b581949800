#include "magica/scalar.hpp"

#include <cctype>

namespace magica {

Rat make_rat(long num, long den) {
  if (den == 0) throw DivisionByZero();
  Rat r(num, den);
  r.canonicalize();
  return r;
}

namespace {

bool all_digits(const std::string& s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

// [-]digits[/digits], no spaces.
Rat parse_rat_part(const std::string& text) {
  std::string s = text;
  bool neg = false;
  if (!s.empty() && (s[0] == '-' || s[0] == '+')) {
    neg = s[0] == '-';
    s = s.substr(1);
  }
  std::string num = s, den = "1";
  if (auto slash = s.find('/'); slash != std::string::npos) {
    num = s.substr(0, slash);
    den = s.substr(slash + 1);
  }
  if (!all_digits(num) || !all_digits(den)) throw ParseError("bad rational '" + text + "'");
  mpz_class n(num), d(den);
  if (d == 0) throw DivisionByZero();
  Rat r(neg ? mpq_class(-n) : mpq_class(n));
  r /= Rat(d);
  return r;
}

}  // namespace

Rat parse_rat(const std::string& text) { return parse_rat_part(text); }

std::string print_rat(const Rat& r) {
  return r.get_num().get_str() + "/" + r.get_den().get_str();
}

GaussRat GaussRat::inv() const {
  Rat n = field_norm();
  if (n == 0) throw DivisionByZero();
  return {re / n, -im / n};
}

GaussRat& GaussRat::operator+=(const GaussRat& o) {
  re += o.re;
  im += o.im;
  return *this;
}

GaussRat& GaussRat::operator-=(const GaussRat& o) {
  re -= o.re;
  im -= o.im;
  return *this;
}

GaussRat& GaussRat::operator*=(const GaussRat& o) {
  *this = *this * o;
  return *this;
}

GaussRat& GaussRat::operator/=(const GaussRat& o) {
  *this = *this * o.inv();
  return *this;
}

GaussRat imaginary_unit() { return {Rat(0), Rat(1)}; }

GaussRat parse_gauss(const std::string& text) {
  if (text.empty()) throw ParseError("empty scalar");
  std::string s = text;
  bool has_i = false;
  if (s.size() >= 2 && s.compare(s.size() - 2, 2, "*i") == 0) {
    has_i = true;
    s = s.substr(0, s.size() - 2);
  }
  if (!has_i) return GaussRat(parse_rat_part(s));
  // split at the first sign past position 0; part signs only occur there
  std::size_t split = std::string::npos;
  for (std::size_t i = 1; i < s.size(); ++i) {
    if (s[i] == '+' || s[i] == '-') {
      split = i;
      break;
    }
  }
  if (split == std::string::npos) {
    // pure imaginary "r/s*i"
    return {Rat(0), parse_rat_part(s)};
  }
  Rat re = parse_rat_part(s.substr(0, split));
  std::string im_part = s.substr(split);
  if (im_part[0] == '+') im_part = im_part.substr(1);
  return {re, parse_rat_part(im_part)};
}

std::string print_gauss(const GaussRat& x) {
  if (x.im == 0) return print_rat(x.re);
  std::string out = print_rat(x.re);
  if (x.im < 0) {
    out += "-" + print_rat(Rat(-x.im));
  } else {
    out += "+" + print_rat(x.im);
  }
  return out + "*i";
}

std::uint64_t Rng::next_u64() {
  std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ull);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
  return z ^ (z >> 31);
}

Rng Rng::derive(std::uint64_t seed, std::uint64_t salt_a, std::uint64_t salt_b) {
  Rng mixer(seed ^ (salt_a * 0x9e3779b97f4a7c15ull) ^ (salt_b * 0xc2b2ae3d27d4eb4full));
  std::uint64_t s = mixer.next_u64();
  return Rng(s);
}

std::int64_t Rng::uniform(std::int64_t lo, std::int64_t hi) {
  auto span = static_cast<std::uint64_t>(hi - lo) + 1;
  return lo + static_cast<std::int64_t>(next_u64() % span);
}

Rat Rng::rat(std::int64_t bound) {
  if (bound < 2) throw Error("rng bound must be >= 2");
  return make_rat(uniform(-bound, bound), uniform(1, bound));
}

GaussRat Rng::scalar(std::int64_t bound) {
  Rat re = rat(bound);
  Rat im = rat(bound);
  return {re, im};
}

GaussRat Rng::nonzero_scalar(std::int64_t bound) {
  for (int attempt = 0; attempt < 256; ++attempt) {
    GaussRat x = scalar(bound);
    if (!x.is_zero()) return x;
  }
  throw ResampleLimit("a nonzero scalar");
}

GaussRat rand_scalar(std::uint64_t seed, std::int64_t bound) {
  Rng rng(seed);
  return rng.scalar(bound);
}

std::uint64_t fnv1a(const std::string& text) {
  std::uint64_t h = 0xcbf29ce484222325ull;
  for (unsigned char c : text) {
    h ^= c;
    h *= 0x100000001b3ull;
  }
  return h;
}

}  // namespace magica
