#include "gravwave/radicals.hpp"

#include <mpfr.h>

#include <algorithm>
#include <map>
#include <stdexcept>
#include <string>

namespace gravwave {
namespace {

class MpfrNumber {
 public:
  explicit MpfrNumber(long bits) { mpfr_init2(v_, bits); }
  ~MpfrNumber() { mpfr_clear(v_); }
  MpfrNumber(const MpfrNumber&) = delete;
  MpfrNumber& operator=(const MpfrNumber&) = delete;
  mpfr_ptr get() noexcept { return v_; }
  mpfr_srcptr get() const noexcept { return v_; }

 private:
  mpfr_t v_;
};

// Loads an exact integer into x, rounding in the given direction if it does not fit.
void set_integer(mpfr_ptr x, const BigInt& m, mpfr_rnd_t rnd) {
  const std::string digits = m.str();
  mpfr_set_str(x, digits.c_str(), 10, rnd);
}

// Lower or upper bound on m^{1/4}.
void fourth_root(mpfr_ptr out, const BigInt& m, mpfr_rnd_t rnd) {
  set_integer(out, m, rnd);
  mpfr_sqrt(out, out, rnd);
  mpfr_sqrt(out, out, rnd);
}

struct Enclosure {
  MpfrNumber lo;
  MpfrNumber hi;
  explicit Enclosure(long bits) : lo(bits), hi(bits) {}
};

void enclose(Enclosure& e, const std::array<BigInt, 4>& m, const std::array<int, 4>& signs, long bits) {
  MpfrNumber term_lo(bits);
  MpfrNumber term_hi(bits);
  mpfr_set_zero(e.lo.get(), 1);
  mpfr_set_zero(e.hi.get(), 1);
  for (int i = 0; i < 4; ++i) {
    if (signs[i] == 0 || m[i] == 0) continue;
    fourth_root(term_lo.get(), m[i], MPFR_RNDD);
    fourth_root(term_hi.get(), m[i], MPFR_RNDU);
    if (signs[i] > 0) {
      mpfr_add(e.lo.get(), e.lo.get(), term_lo.get(), MPFR_RNDD);
      mpfr_add(e.hi.get(), e.hi.get(), term_hi.get(), MPFR_RNDU);
    } else {
      mpfr_sub(e.lo.get(), e.lo.get(), term_hi.get(), MPFR_RNDD);
      mpfr_sub(e.hi.get(), e.hi.get(), term_lo.get(), MPFR_RNDU);
    }
  }
}

}  // namespace

FourthRootForm fourth_root_form(const BigInt& m) {
  if (m < 0) throw std::invalid_argument("fourth_root_form: negative argument");
  if (m == 0) return {0, 1};
  BigInt rest = m;
  BigInt coefficient = 1;
  // Any p with p^4 | m satisfies p <= m^{1/4}.
  for (BigInt p = 2; p * p * p * p <= rest; ++p) {
    const BigInt p4 = p * p * p * p;
    while (rest % p4 == 0) {
      rest /= p4;
      coefficient *= p;
    }
  }
  return {coefficient, rest};
}

bool is_perfect_square(const BigInt& m) {
  if (m < 0) return false;
  const BigInt r = boost::multiprecision::sqrt(m);
  return r * r == m;
}

bool fourth_root_sum_is_zero(const std::array<BigInt, 4>& m, const std::array<int, 4>& signs) {
  std::map<BigInt, BigInt> classes;
  for (int i = 0; i < 4; ++i) {
    if (signs[i] == 0 || m[i] == 0) continue;
    const auto form = fourth_root_form(m[i]);
    classes[form.radicand] += signs[i] > 0 ? form.coefficient : BigInt(-form.coefficient);
  }
  return std::all_of(classes.begin(), classes.end(), [](const auto& kv) { return kv.second == 0; });
}

CertifiedInterval fourth_root_sum_interval(const std::array<BigInt, 4>& m, const std::array<int, 4>& signs, long bits) {
  Enclosure e(bits);
  enclose(e, m, signs, bits);
  return {mpfr_get_d(e.lo.get(), MPFR_RNDD), mpfr_get_d(e.hi.get(), MPFR_RNDU), bits};
}

CertifiedInterval refine_fourth_root_sum(const std::array<BigInt, 4>& m, const std::array<int, 4>& signs,
                                         long floor_bits) {
  CertifiedInterval out;
  for (long bits = 64;; bits = std::min(2 * bits, floor_bits)) {
    out = fourth_root_sum_interval(m, signs, bits);
    if (out.excludes_zero() || bits >= floor_bits) return out;
  }
}

double fourth_root_sum_width(const std::array<BigInt, 4>& m, const std::array<int, 4>& signs, long bits) {
  Enclosure e(bits);
  enclose(e, m, signs, bits);
  MpfrNumber w(bits);
  mpfr_sub(w.get(), e.hi.get(), e.lo.get(), MPFR_RNDU);
  return mpfr_get_d(w.get(), MPFR_RNDU);
}

}  // namespace gravwave
