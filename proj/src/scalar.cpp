#include "specbim/scalar.hpp"

#include <cctype>
#include <ostream>
#include <stdexcept>
#include <utility>

namespace specbim {

namespace {

bool is_squarefree(unsigned d) {
  for (unsigned i = 2; i * i <= d; ++i) {
    if (d % (i * i) == 0) return false;
  }
  return true;
}

// Common surd base of two operands, or a throw when they live in
// incompatible quadratic fields.
unsigned combined_base(unsigned dx, unsigned dy) {
  if (dx == dy) return dx;
  if (dx == 0) return dy;
  if (dy == 0) return dx;
  throw std::domain_error("mixed quadratic fields: sqrt(" + std::to_string(dx) +
                          ") and sqrt(" + std::to_string(dy) + ")");
}

Rational parse_rational(const std::string& text) {
  if (text.empty()) throw std::invalid_argument("empty numeric literal");
  for (std::size_t i = 0; i < text.size(); ++i) {
    char c = text[i];
    bool ok = std::isdigit(static_cast<unsigned char>(c)) || c == '/' ||
              ((c == '+' || c == '-') && i == 0);
    if (!ok) throw std::invalid_argument("bad numeric literal '" + text + "'");
  }
  auto slash = text.find('/');
  if (slash != std::string::npos &&
      text.find('/', slash + 1) != std::string::npos) {
    throw std::invalid_argument("bad numeric literal '" + text + "'");
  }
  if (slash == text.size() - 1 || slash == 0) {
    throw std::invalid_argument("bad numeric literal '" + text + "'");
  }
  mpq_class q;
  if (mpq_set_str(q.get_mpq_t(), text.c_str(), 10) != 0) {
    throw std::invalid_argument("bad numeric literal '" + text + "'");
  }
  if (sgn(q.get_den()) == 0) {
    throw std::invalid_argument("zero denominator in '" + text + "'");
  }
  q.canonicalize();
  return q;
}

std::size_t mix(std::size_t h, std::size_t v) {
  return h ^ (v + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2));
}

std::size_t hash_mpz(mpz_srcptr z) {
  std::size_t h = static_cast<std::size_t>(mpz_sgn(z));
  for (mp_size_t i = 0, n = static_cast<mp_size_t>(mpz_size(z)); i < n; ++i) {
    h = mix(h, mpz_getlimbn(z, i));
  }
  return h;
}

}  // namespace

Scalar::Scalar(Rational a, Rational b, unsigned d)
    : a_(std::move(a)), b_(std::move(b)), d_(d) {
  if (sgn(b_) != 0 && d_ > 1 && !is_squarefree(d_)) {
    throw std::invalid_argument("surd base " + std::to_string(d_) +
                                " is not squarefree");
  }
  normalise();
}

Scalar Scalar::fraction(long num, long den) {
  if (den == 0) throw std::domain_error("zero denominator");
  Rational q(num, den);
  q.canonicalize();
  return Scalar(std::move(q));
}

void Scalar::normalise() {
  if (d_ == 1) {  // sqrt(1) folds into the rational part
    a_ += b_;
    b_ = 0;
  }
  if (d_ == 0) b_ = 0;
  if (sgn(b_) == 0) d_ = 0;
}

int Scalar::sign() const {
  int sa = sgn(a_);
  int sb = sgn(b_);
  if (sb == 0) return sa;
  if (sa == 0) return sb;
  if (sa == sb) return sa;
  // Opposite signs: |a| vs |b|*sqrt(d) decided by squaring.
  Rational lhs = a_ * a_;
  Rational rhs = b_ * b_ * static_cast<long>(d_);
  int c = cmp(lhs, rhs);
  if (c == 0) {
    // would force sqrt(d) rational; impossible for squarefree d >= 2
    throw std::logic_error("Scalar::sign: degenerate surd base");
  }
  return c > 0 ? sa : sb;
}

Scalar Scalar::operator-() const {
  Scalar r(*this);
  r.a_ = -r.a_;
  r.b_ = -r.b_;
  return r;
}

Scalar& Scalar::operator+=(const Scalar& o) {
  d_ = combined_base(d_, o.d_);
  a_ += o.a_;
  b_ += o.b_;
  normalise();
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) {
  d_ = combined_base(d_, o.d_);
  a_ -= o.a_;
  b_ -= o.b_;
  normalise();
  return *this;
}

Scalar& Scalar::operator*=(const Scalar& o) {
  unsigned d = combined_base(d_, o.d_);
  // (a1 + b1 s)(a2 + b2 s) = a1 a2 + d b1 b2 + (a1 b2 + b1 a2) s
  Rational a = a_ * o.a_;
  if (sgn(b_) != 0 && sgn(o.b_) != 0) {
    a += b_ * o.b_ * static_cast<long>(d);
  }
  Rational b = a_ * o.b_ + b_ * o.a_;
  a_ = std::move(a);
  b_ = std::move(b);
  d_ = d;
  normalise();
  return *this;
}

Scalar& Scalar::operator/=(const Scalar& o) {
  if (o.is_zero()) throw std::domain_error("division by zero");
  if (o.is_rational()) {
    a_ /= o.a_;
    b_ /= o.a_;
    return *this;
  }
  // multiply by the conjugate: 1/(a+bs) = (a-bs)/(a^2 - b^2 d)
  Rational norm = o.a_ * o.a_ - o.b_ * o.b_ * static_cast<long>(o.d_);
  Scalar conj(o.a_ / norm, -o.b_ / norm, o.d_);
  return *this *= conj;
}

void Scalar::add_mul(const Scalar& x, const Scalar& y) {
  if (sgn(x.a_) == 0 && sgn(x.b_) == 0) return;
  if (sgn(y.a_) == 0 && sgn(y.b_) == 0) return;
  if (x.d_ == 0 && y.d_ == 0) {  // fast path: everything rational
    a_ += x.a_ * y.a_;
    return;
  }
  *this += x * y;
}

bool Scalar::operator==(const Scalar& o) const {
  // values are normalised, so representations are canonical
  return d_ == o.d_ && a_ == o.a_ && b_ == o.b_;
}

int Scalar::compare(const Scalar& o) const {
  if (*this == o) return 0;
  Scalar diff(*this);
  diff -= o;
  return diff.sign();
}

std::string Scalar::str() const {
  if (is_rational()) return a_.get_str();
  std::string out = a_.get_str();
  if (sgn(b_) >= 0) out += "+";
  out += b_.get_str();
  out += "*sqrt(" + std::to_string(d_) + ")";
  return out;
}

Scalar Scalar::parse(const std::string& text) {
  std::string s;
  s.reserve(text.size());
  for (char c : text) {
    if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
  }
  if (s.empty()) throw std::invalid_argument("empty scalar literal");

  // split into signed terms at top-level '+'/'-'
  Rational a = 0, b = 0;
  unsigned d = 0;
  bool seen_rat = false, seen_surd = false;
  std::size_t pos = 0;
  while (pos < s.size()) {
    int sign = 1;
    if (s[pos] == '+' || s[pos] == '-') {
      sign = s[pos] == '-' ? -1 : 1;
      ++pos;
    } else if (pos != 0) {
      throw std::invalid_argument("bad scalar literal '" + text + "'");
    }
    std::size_t end = pos;
    while (end < s.size() && s[end] != '+' && s[end] != '-') ++end;
    std::string term = s.substr(pos, end - pos);
    pos = end;

    auto sq = term.find("sqrt(");
    if (sq == std::string::npos) {
      if (seen_rat) {
        throw std::invalid_argument("bad scalar literal '" + text + "'");
      }
      a = parse_rational(term);
      if (sign < 0) a = -a;
      seen_rat = true;
      continue;
    }
    if (seen_surd || term.back() != ')') {
      throw std::invalid_argument("bad scalar literal '" + text + "'");
    }
    Rational coef = 1;
    if (sq > 0) {
      if (term[sq - 1] != '*') {
        throw std::invalid_argument("bad scalar literal '" + text + "'");
      }
      coef = parse_rational(term.substr(0, sq - 1));
    }
    std::string base = term.substr(sq + 5, term.size() - sq - 6);
    if (base.empty()) {
      throw std::invalid_argument("bad scalar literal '" + text + "'");
    }
    for (char c : base) {
      if (!std::isdigit(static_cast<unsigned char>(c))) {
        throw std::invalid_argument("bad surd base in '" + text + "'");
      }
    }
    unsigned long base_val = std::stoul(base);
    b = sign < 0 ? -coef : coef;
    d = static_cast<unsigned>(base_val);
    seen_surd = true;
  }
  return Scalar(std::move(a), std::move(b), d);
}

std::size_t Scalar::hash() const {
  std::size_t h = d_;
  h = mix(h, hash_mpz(mpq_numref(a_.get_mpq_t())));
  h = mix(h, hash_mpz(mpq_denref(a_.get_mpq_t())));
  h = mix(h, hash_mpz(mpq_numref(b_.get_mpq_t())));
  h = mix(h, hash_mpz(mpq_denref(b_.get_mpq_t())));
  return h;
}

std::size_t Scalar::cost() const {
  return mpz_size(mpq_numref(a_.get_mpq_t())) +
         mpz_size(mpq_denref(a_.get_mpq_t())) +
         mpz_size(mpq_numref(b_.get_mpq_t())) +
         mpz_size(mpq_denref(b_.get_mpq_t()));
}

std::ostream& operator<<(std::ostream& os, const Scalar& s) {
  return os << s.str();
}

}  // namespace specbim
