#include "hmf/mp_real.hpp"

#include <atomic>
#include <cmath>

namespace hmf {

namespace {
std::atomic<int> g_digits{50};
}

void Real::set_default_digits(int decimal_digits) {
  if (decimal_digits < 10 || decimal_digits > 10000)
    throw std::invalid_argument("precision digits out of range");
  g_digits = decimal_digits;
}

int Real::default_digits() { return g_digits; }

mpfr_prec_t Real::default_bits() {
  // bits = ceil(digits * log2(10)) plus slack
  return (mpfr_prec_t)(g_digits * 3.3219280948873626) + 16;
}

std::string Real::str(int digits) const {
  char* s = nullptr;
  if (mpfr_asprintf(&s, "%.*Rg", digits, v_) < 0) return "<fmt-error>";
  std::string out(s);
  mpfr_free_str(s);
  return out;
}

}  // namespace hmf
