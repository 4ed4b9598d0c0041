#include "oracle.hpp"

namespace oracle {

namespace {

constexpr mpfr_prec_t kPrecision = 256;

}  // namespace

Big::Big() { mpfr_init2(value_, kPrecision); }

Big::Big(double x) {
  mpfr_init2(value_, kPrecision);
  mpfr_set_d(value_, x, MPFR_RNDN);
}

Big::Big(const Big& other) {
  mpfr_init2(value_, kPrecision);
  mpfr_set(value_, other.value_, MPFR_RNDN);
}

Big& Big::operator=(const Big& other) {
  if (this != &other) mpfr_set(value_, other.value_, MPFR_RNDN);
  return *this;
}

Big::~Big() { mpfr_clear(value_); }

double Big::to_double() const { return mpfr_get_d(value_, MPFR_RNDN); }

Big operator+(const Big& a, const Big& b) {
  Big out;
  mpfr_add(out.value_, a.value_, b.value_, MPFR_RNDN);
  return out;
}

Big operator-(const Big& a, const Big& b) {
  Big out;
  mpfr_sub(out.value_, a.value_, b.value_, MPFR_RNDN);
  return out;
}

Big operator*(const Big& a, const Big& b) {
  Big out;
  mpfr_mul(out.value_, a.value_, b.value_, MPFR_RNDN);
  return out;
}

Big operator/(const Big& a, const Big& b) {
  Big out;
  mpfr_div(out.value_, a.value_, b.value_, MPFR_RNDN);
  return out;
}

Big operator-(const Big& a) {
  Big out;
  mpfr_neg(out.value_, a.value_, MPFR_RNDN);
  return out;
}

Big pow(const Big& base, const Big& exponent) {
  Big out;
  mpfr_pow(out.value_, base.value_, exponent.value_, MPFR_RNDN);
  return out;
}

Big log(const Big& a) {
  Big out;
  mpfr_log(out.value_, a.value_, MPFR_RNDN);
  return out;
}

Big log1p(const Big& a) {
  Big out;
  mpfr_log1p(out.value_, a.value_, MPFR_RNDN);
  return out;
}

Big exp(const Big& a) {
  Big out;
  mpfr_exp(out.value_, a.value_, MPFR_RNDN);
  return out;
}

Big abs(const Big& a) {
  Big out;
  mpfr_abs(out.value_, a.value_, MPFR_RNDN);
  return out;
}

Big gamma(const Big& a) {
  Big out;
  mpfr_gamma(out.value_, a.value_, MPFR_RNDN);
  return out;
}

Big sqrt(const Big& a) {
  Big out;
  mpfr_sqrt(out.value_, a.value_, MPFR_RNDN);
  return out;
}

namespace {

Big pow_abs(const Big& x, const Big& alpha) { return pow(abs(x), alpha); }

Big log_inv(double epsilon) { return log(Big(1.0) / Big(epsilon)); }

}  // namespace

double phi_widest(double x, double alpha) {
  const Big ax = abs(Big(x));
  const Big mag = log1p(ax + pow(ax, Big(alpha)) / Big(alpha));
  return (x < 0.0 ? -mag : mag).to_double();
}

double phi_envelope_lower(double x, double alpha) {
  const Big arg = Big(1.0) - Big(x) + pow_abs(Big(x), Big(alpha)) / Big(alpha);
  return (-log(arg)).to_double();
}

double phi_envelope_upper(double x, double alpha) {
  const Big arg = Big(1.0) + Big(x) + pow_abs(Big(x), Big(alpha)) / Big(alpha);
  return log(arg).to_double();
}

double tune_beta(double alpha, double v, std::int64_t n, double epsilon) {
  const Big a(alpha);
  const Big t = Big(2.0) * a * log_inv(epsilon) / (Big(static_cast<double>(n)) * Big(v));
  return (Big(0.5) * pow(t, Big(1.0) / a)).to_double();
}

double deviation_bound(double alpha, double v, std::int64_t n, double epsilon) {
  const Big a(alpha);
  const Big dn(static_cast<double>(n));
  const Big expo = (a - Big(1.0)) / a;
  const Big log_term = Big(2.0) * a * log_inv(epsilon);
  const Big numerator = Big(2.0) * pow(log_term / dn, expo) * pow(Big(v), Big(1.0) / a);
  const Big denominator = a - pow(log_term / (dn * Big(v)), expo);
  return (numerator / denominator).to_double();
}

double empirical_mean_upper(double alpha, double v, std::int64_t n, double epsilon) {
  const Big a(alpha);
  const Big dn(static_cast<double>(n));
  return pow(Big(v) / (Big(epsilon) * pow(dn, a - Big(1.0))), Big(1.0) / a).to_double();
}

double empirical_mean_lower(double alpha, double v, std::int64_t n, double epsilon) {
  const Big a(alpha);
  const Big dn(static_cast<double>(n));
  const Big e = exp(Big(1.0));
  const Big base = pow(Big(v) / (Big(3.0) * pow(dn, a - Big(1.0)) * Big(epsilon)), Big(1.0) / a);
  const Big shrink =
      pow(Big(1.0) - Big(3.0) * e * Big(epsilon) / dn, (dn - Big(1.0)) / a);
  return (base * shrink).to_double();
}

double covering_number_log(std::int64_t d, double radius_r, double epsilon_net) {
  return (Big(static_cast<double>(d)) * log(Big(6.0) * Big(radius_r) / Big(epsilon_net)))
      .to_double();
}

double tune_beta_regression(std::int64_t n, double covering_log, double delta, double alpha) {
  const Big arg = (Big(covering_log) + Big(2.0) * log_inv(delta)) / Big(static_cast<double>(n));
  return pow(arg, Big(1.0) / Big(alpha)).to_double();
}

double excess_risk_bound(double e_abs_x, double e_abs_x_alpha, double sup_r_alpha, double alpha,
                         double delta, std::int64_t n, std::int64_t d, double radius_r,
                         double epsilon_net) {
  const Big a(alpha);
  const Big dn(static_cast<double>(n));
  const Big cover = Big(static_cast<double>(d)) * log(Big(6.0) * Big(radius_r) / Big(epsilon_net));
  const Big power = pow((cover + Big(2.0) * log_inv(delta)) / dn, (a - Big(1.0)) / a);
  const Big pow2 = pow(Big(2.0), a - Big(1.0));
  const Big net = Big(2.0) * Big(epsilon_net) * Big(e_abs_x);
  const Big factor = pow2 * pow(Big(epsilon_net), a) / a * Big(e_abs_x_alpha) +
                     (pow2 + Big(1.0)) / a * Big(sup_r_alpha) + Big(1.0);
  return (net + factor * power).to_double();
}

double lomax_abs_moment(double exponent, double shape) {
  const Big a(exponent);
  const Big c(shape);
  return (gamma(a + Big(1.0)) * gamma(c - a) / gamma(c)).to_double();
}

}  // namespace oracle
