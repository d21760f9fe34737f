#include "walkprint/rational.hpp"

#include <cctype>
#include <cmath>
#include <cstdio>

#include "walkprint/errors.hpp"

namespace walkprint {

namespace {

bool all_digits(const std::string& s) {
  if (s.empty()) return false;
  for (char ch : s) {
    if (!std::isdigit(static_cast<unsigned char>(ch))) return false;
  }
  return true;
}

}  // namespace

Rational parse_rational(const std::string& text) {
  std::size_t begin = text.find_first_not_of(" \t");
  std::size_t end = text.find_last_not_of(" \t");
  if (begin == std::string::npos) fail(errc::parse_error, "empty rational");
  std::string body = text.substr(begin, end - begin + 1);

  bool negative = false;
  if (body[0] == '+' || body[0] == '-') {
    negative = body[0] == '-';
    body.erase(0, 1);
  }

  std::string num = body;
  std::string den = "1";
  if (std::size_t slash = body.find('/'); slash != std::string::npos) {
    num = body.substr(0, slash);
    den = body.substr(slash + 1);
  }
  if (!all_digits(num) || !all_digits(den)) {
    fail(errc::parse_error, "malformed rational '" + text + "'");
  }

  Integer p(num), q(den);
  if (q == 0) fail(errc::parse_error, "zero denominator in '" + text + "'");
  if (negative) p = -p;
  Rational r(p, q);
  r.canonicalize();
  return r;
}

std::string format_rational(const Rational& value) {
  if (value.get_den() == 1) return value.get_num().get_str();
  return value.get_num().get_str() + "/" + value.get_den().get_str();
}

std::string format_decimal(const Rational& value, int digits) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.*g", digits, to_double(value));
  return buf;
}

double to_double(const Rational& value) { return value.get_d(); }

Rational exact_from_double(double x) {
  if (!std::isfinite(x)) fail(errc::validation_error, "non-finite value");
  Rational r;
  mpq_set_d(r.get_mpq_t(), x);
  return r;
}

std::optional<Rational> round_to_small_denominator(double x, unsigned long max_den,
                                                   double within) {
  if (!std::isfinite(x) || max_den == 0) return std::nullopt;

  const bool negative = x < 0;
  double v = std::fabs(x);

  // Continued-fraction convergents h/k of v until the denominator cap.
  long long h_prev = 1, k_prev = 0;  // h_{-1}/k_{-1}
  long long h = static_cast<long long>(std::floor(v)), k = 1;
  double frac = v - std::floor(v);

  auto value_of = [&](long long p, long long q) { return static_cast<double>(p) / q; };

  long long best_p = h, best_q = 1;
  for (int iter = 0; iter < 64 && frac > 1e-18; ++iter) {
    double inv = 1.0 / frac;
    double a_floor = std::floor(inv);
    if (a_floor >= 9e17) break;
    long long a = static_cast<long long>(a_floor);
    frac = inv - a_floor;

    long long h_next = a * h + h_prev;
    long long k_next = a * k + k_prev;
    if (k_next > static_cast<long long>(max_den) || k_next <= 0) {
      // Best semiconvergent still under the cap.
      long long j = (static_cast<long long>(max_den) - k_prev) / k;
      if (j > 0) {
        long long sp = j * h + h_prev, sq = j * k + k_prev;
        if (std::fabs(value_of(sp, sq) - v) < std::fabs(value_of(best_p, best_q) - v)) {
          best_p = sp;
          best_q = sq;
        }
      }
      break;
    }
    h_prev = h;
    k_prev = k;
    h = h_next;
    k = k_next;
    best_p = h;
    best_q = k;
  }

  if (std::fabs(value_of(best_p, best_q) - v) > within) return std::nullopt;
  Rational r(Integer(best_p) * (negative ? -1 : 1), Integer(best_q));
  r.canonicalize();
  return r;
}

}  // namespace walkprint
