#include "bvkit/localized.hpp"

#include "bvkit/error.hpp"

namespace bvkit {

Localization::Localization(Polynomial c) : c_(std::move(c)) {
  if (c_.is_zero()) throw InputError("localization denominator must be nonzero");
  trivial_ = c_.is_constant();
  for (std::size_t i = 0; i < c_.nvars(); ++i) dc_.push_back(partial_derivative(c_, i));
}

std::shared_ptr<const Localization> Localization::trivial(std::size_t nvars) {
  return std::make_shared<const Localization>(Polynomial::constant(nvars, 1));
}

LocalizedElement::LocalizedElement(LocalizationPtr loc) : loc_(std::move(loc)), num_(loc_->nvars()) {}

LocalizedElement::LocalizedElement(LocalizationPtr loc, Polynomial numerator, unsigned power)
    : loc_(std::move(loc)), num_(std::move(numerator)), power_(power) {
  if (num_.nvars() != loc_->nvars()) throw InputError("localized element: variable count mismatch");
  if (loc_->is_trivial() && power_ > 0) {
    num_ *= Rational(1) / loc_->denominator().constant_term();
    for (unsigned k = 1; k < power_; ++k) num_ *= Rational(1) / loc_->denominator().constant_term();
    power_ = 0;
  }
  normalize();
}

void LocalizedElement::normalize() {
  if (num_.is_zero()) {
    power_ = 0;
    return;
  }
  while (power_ > 0) {
    auto q = divide_exact(num_, loc_->denominator());
    if (!q) break;
    num_ = std::move(*q);
    --power_;
  }
}

namespace {

Polynomial raise(const Polynomial& p, const Polynomial& c, unsigned k) {
  return k == 0 ? p : p * c.pow(k);
}

}  // namespace

LocalizedElement& LocalizedElement::operator+=(const LocalizedElement& o) {
  if (o.is_zero()) return *this;
  if (power_ == o.power_) {
    num_ += o.num_;
  } else if (power_ > o.power_) {
    num_ += raise(o.num_, loc_->denominator(), power_ - o.power_);
  } else {
    num_ = raise(num_, loc_->denominator(), o.power_ - power_) + o.num_;
    power_ = o.power_;
  }
  normalize();
  return *this;
}

LocalizedElement& LocalizedElement::operator-=(const LocalizedElement& o) { return *this += -o; }

LocalizedElement& LocalizedElement::operator*=(const LocalizedElement& o) {
  num_ *= o.num_;
  power_ += o.power_;
  normalize();
  return *this;
}

LocalizedElement& LocalizedElement::operator*=(const Rational& q) {
  num_ *= q;
  if (num_.is_zero()) power_ = 0;
  return *this;
}

LocalizedElement LocalizedElement::operator-() const {
  LocalizedElement r = *this;
  r.num_ = -r.num_;
  return r;
}

LocalizedElement LocalizedElement::divided_by_denominator(unsigned k) const {
  return LocalizedElement(loc_, num_, power_ + k);
}

LocalizedElement partial_derivative(const LocalizedElement& a, std::size_t i) {
  const auto& loc = a.localization();
  Polynomial dp = partial_derivative(a.numerator(), i);
  if (a.power() == 0) return LocalizedElement(loc, std::move(dp), 0);
  Polynomial num = loc->denominator() * dp - a.numerator() * loc->denominator_derivative(i) * Rational(a.power());
  return LocalizedElement(loc, std::move(num), a.power() + 1);
}

std::string to_string(const LocalizedElement& a, const std::vector<std::string>& names) {
  if (a.power() == 0) return to_string(a.numerator(), names);
  std::string out = "(" + to_string(a.numerator(), names) + ")/(" +
                    to_string(a.localization()->denominator(), names) + ")";
  if (a.power() > 1) out += "^" + std::to_string(a.power());
  return out;
}

}  // namespace bvkit
