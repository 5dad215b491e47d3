#include "ratdyn/scalar.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>

#include "ratdyn/errors.hpp"

namespace ratdyn {

const char* to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::InvalidInput: return "invalid_input";
    case ErrorCode::DegreeTooLow: return "degree_too_low";
    case ErrorCode::NonFinite: return "non_finite";
    case ErrorCode::DivisionByZero: return "division_by_zero";
    case ErrorCode::IndeterminateEvaluation: return "indeterminate_evaluation";
    case ErrorCode::ValencyAmbiguous: return "valency_ambiguous";
    case ErrorCode::RootFindingFailed: return "root_finding_failed";
    case ErrorCode::MultiplicityAmbiguous: return "multiplicity_ambiguous";
    case ErrorCode::AsymptoticValencyUndetermined: return "asymptotic_valency_undetermined";
    case ErrorCode::NotRepresentable: return "not_representable";
    case ErrorCode::ExposureUndecided: return "exposure_undecided";
    case ErrorCode::UnresolvedContext: return "unresolved_context";
    case ErrorCode::AtlasInvariant: return "atlas_invariant";
    case ErrorCode::RenderWindow: return "render_window";
    case ErrorCode::Io: return "io";
  }
  return "unknown";
}

namespace {

struct Component {
  bool decimal = false;
  mpq_class q = 0;
  double f = 0.0;
};

Component parse_component(const std::string& s, const std::string& whole) {
  Component c;
  if (s.empty()) throw Error(ErrorCode::InvalidInput, "empty number in '" + whole + "'");
  if (s.find_first_of(".eE") != std::string::npos) {
    c.decimal = true;
    const char* first = s.data();
    const char* last = s.data() + s.size();
    if (*first == '+') ++first;
    auto [ptr, ec] = std::from_chars(first, last, c.f);
    if (ec != std::errc() || ptr != last || !std::isfinite(c.f))
      throw Error(ErrorCode::InvalidInput, "bad decimal '" + s + "' in '" + whole + "'");
    return c;
  }
  std::string t = s.front() == '+' ? s.substr(1) : s;
  for (char ch : t) {
    if (!(std::isdigit(static_cast<unsigned char>(ch)) || ch == '/' || ch == '-'))
      throw Error(ErrorCode::InvalidInput, "bad rational '" + s + "' in '" + whole + "'");
  }
  if (c.q.set_str(t, 10) != 0)
    throw Error(ErrorCode::InvalidInput, "bad rational '" + s + "' in '" + whole + "'");
  if (c.q.get_den() == 0)
    throw Error(ErrorCode::DivisionByZero, "zero denominator in '" + whole + "'");
  c.q.canonicalize();
  return c;
}

std::string format_double(double v) {
  char buf[64];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), v);
  (void)ec;
  std::string out(buf, ptr);
  if (out.find_first_of(".eEn") == std::string::npos) out += ".0";
  return out;
}

std::size_t mpq_bits(const mpq_class& q) {
  std::size_t a = mpz_sizeinbase(q.get_num_mpz_t(), 2);
  std::size_t b = mpz_sizeinbase(q.get_den_mpz_t(), 2);
  return std::max(a, b);
}

}  // namespace

Scalar Scalar::exact(mpq_class re, mpq_class im) {
  Scalar s;
  re.canonicalize();
  im.canonicalize();
  s.re_q_ = std::move(re);
  s.im_q_ = std::move(im);
  return s;
}

Scalar Scalar::floating(double re, double im) {
  Scalar s;
  s.exact_ = false;
  s.re_f_ = re;
  s.im_f_ = im;
  s.check_finite();
  return s;
}

Scalar Scalar::parse(const std::string& raw) {
  std::string s;
  for (char ch : raw)
    if (!std::isspace(static_cast<unsigned char>(ch))) s += ch;
  if (s.empty()) throw Error(ErrorCode::InvalidInput, "empty coefficient");

  std::string re_part;
  std::string im_part;
  bool has_im = false;
  if (s.back() == 'i') {
    has_im = true;
    std::string body = s.substr(0, s.size() - 1);
    std::size_t split = std::string::npos;
    for (std::size_t k = body.size(); k-- > 1;) {
      if ((body[k] == '+' || body[k] == '-') && body[k - 1] != 'e' && body[k - 1] != 'E' &&
          body[k - 1] != '/') {
        split = k;
        break;
      }
    }
    if (split == std::string::npos) {
      im_part = body;
    } else {
      re_part = body.substr(0, split);
      im_part = body.substr(split);
    }
    if (im_part.empty() || im_part == "+") im_part = "1";
    if (im_part == "-") im_part = "-1";
  } else {
    re_part = s;
  }

  Component re;
  Component im;
  if (!re_part.empty()) re = parse_component(re_part, s);
  if (has_im) im = parse_component(im_part, s);
  if (re.decimal || im.decimal) {
    double rf = re.decimal ? re.f : re.q.get_d();
    double imf = im.decimal ? im.f : im.q.get_d();
    return floating(rf, imf);
  }
  return exact(re.q, im.q);
}

void Scalar::check_finite() const {
  if (!exact_ && !(std::isfinite(re_f_) && std::isfinite(im_f_)))
    throw Error(ErrorCode::NonFinite, "non-finite floating value");
}

bool Scalar::is_zero() const {
  return exact_ ? (re_q_ == 0 && im_q_ == 0) : (re_f_ == 0.0 && im_f_ == 0.0);
}

bool Scalar::is_one() const {
  return exact_ ? (re_q_ == 1 && im_q_ == 0) : (re_f_ == 1.0 && im_f_ == 0.0);
}

Complex Scalar::to_complex() const {
  return exact_ ? Complex(re_q_.get_d(), im_q_.get_d()) : Complex(re_f_, im_f_);
}

ComplexLD Scalar::to_complex_ld() const {
  if (!exact_) return ComplexLD(re_f_, im_f_);
  // mpq -> long double through a scaled integer quotient keeps ~64 bits.
  auto conv = [](const mpq_class& q) -> long double {
    if (q == 0) return 0.0L;
    mpf_class f(q, 128);
    long exp = 0;
    double mant = mpf_get_d_2exp(&exp, f.get_mpf_t());
    mpf_class rest = f;
    mpf_class m(mant, 128);
    if (exp >= 0) mpf_mul_2exp(m.get_mpf_t(), m.get_mpf_t(), static_cast<mp_bitcnt_t>(exp));
    else mpf_div_2exp(m.get_mpf_t(), m.get_mpf_t(), static_cast<mp_bitcnt_t>(-exp));
    rest -= m;
    return static_cast<long double>(std::ldexp(static_cast<long double>(mant), static_cast<int>(exp))) +
           static_cast<long double>(rest.get_d());
  };
  return ComplexLD(conv(re_q_), conv(im_q_));
}

Scalar Scalar::conj() const {
  Scalar s = *this;
  if (exact_) s.im_q_ = -im_q_;
  else s.im_f_ = -im_f_;
  return s;
}

Scalar Scalar::operator-() const {
  Scalar s = *this;
  if (exact_) {
    s.re_q_ = -re_q_;
    s.im_q_ = -im_q_;
  } else {
    s.re_f_ = -re_f_;
    s.im_f_ = -im_f_;
  }
  return s;
}

Scalar& Scalar::operator+=(const Scalar& o) {
  if (exact_ && o.exact_) {
    re_q_ += o.re_q_;
    im_q_ += o.im_q_;
    return *this;
  }
  return *this = floating(to_complex() + o.to_complex());
}

Scalar& Scalar::operator-=(const Scalar& o) {
  if (exact_ && o.exact_) {
    re_q_ -= o.re_q_;
    im_q_ -= o.im_q_;
    return *this;
  }
  return *this = floating(to_complex() - o.to_complex());
}

Scalar& Scalar::operator*=(const Scalar& o) {
  if (exact_ && o.exact_) {
    if (o.im_q_ == 0) {
      re_q_ *= o.re_q_;
      im_q_ *= o.re_q_;
      return *this;
    }
    mpq_class re = re_q_ * o.re_q_ - im_q_ * o.im_q_;
    mpq_class im = re_q_ * o.im_q_ + im_q_ * o.re_q_;
    re_q_ = std::move(re);
    im_q_ = std::move(im);
    return *this;
  }
  return *this = floating(to_complex() * o.to_complex());
}

Scalar& Scalar::operator/=(const Scalar& o) {
  if (o.is_zero()) throw Error(ErrorCode::DivisionByZero, "division by zero scalar");
  if (exact_ && o.exact_) {
    if (o.im_q_ == 0) {
      re_q_ /= o.re_q_;
      im_q_ /= o.re_q_;
      return *this;
    }
    mpq_class den = o.re_q_ * o.re_q_ + o.im_q_ * o.im_q_;
    mpq_class re = (re_q_ * o.re_q_ + im_q_ * o.im_q_) / den;
    mpq_class im = (im_q_ * o.re_q_ - re_q_ * o.im_q_) / den;
    re_q_ = std::move(re);
    im_q_ = std::move(im);
    return *this;
  }
  return *this = floating(to_complex() / o.to_complex());
}

bool Scalar::identical(const Scalar& o) const {
  if (exact_ != o.exact_) return false;
  if (exact_) return re_q_ == o.re_q_ && im_q_ == o.im_q_;
  return re_f_ == o.re_f_ && im_f_ == o.im_f_;
}

std::size_t Scalar::bit_size() const {
  if (!exact_) return 0;
  return std::max(mpq_bits(re_q_), mpq_bits(im_q_));
}

std::string Scalar::to_string() const {
  if (exact_) {
    if (im_q_ == 0) return re_q_.get_str();
    std::string out = re_q_ == 0 ? "" : re_q_.get_str();
    std::string im = im_q_.get_str();
    if (im_q_ > 0 && !out.empty()) out += "+";
    return out + im + "i";
  }
  if (im_f_ == 0.0) return format_double(re_f_);
  std::string out = re_f_ == 0.0 ? "" : format_double(re_f_);
  if (im_f_ >= 0.0 && !out.empty()) out += "+";
  return out + format_double(im_f_) + "i";
}

}  // namespace ratdyn
