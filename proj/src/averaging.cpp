#include "recon/averaging.hpp"

#include <mutex>
#include <stdexcept>
#include <vector>

namespace recon {

namespace {
std::mutex tau_mutex;
std::vector<Rational> tau_even{Rational(1)}; // tau_even[k] = tau_{2k}

Integer factorial(long n) {
  Integer f;
  mpz_fac_ui(f.get_mpz_t(), static_cast<unsigned long>(n));
  return f;
}
} // namespace

Rational tau(int n) {
  if (n < 0) throw std::invalid_argument("tau: negative index");
  if (n % 2 == 1) return Rational(0);
  const int k = n / 2;
  std::lock_guard<std::mutex> lock(tau_mutex);
  while (static_cast<int>(tau_even.size()) <= k) {
    const int kk = static_cast<int>(tau_even.size());
    Rational sum(0);
    for (int s = 1; s <= kk; ++s) {
      Rational term = -tau_even[kk - s] / Rational(Integer(Integer(1) << (2 * s)) * factorial(2 * s + 1));
      sum += term;
    }
    tau_even.push_back(sum);
  }
  return tau_even[k];
}

Poly sliding_average(const Poly& p) {
  Poly anti = p.antiderivative();
  return anti.shifted(Rational(1, 2)) - anti.shifted(Rational(-1, 2));
}

Poly deconvolve(const Poly& p) {
  Poly result;
  Poly d = p;
  int k = 0;
  while (!d.is_zero()) {
    result += tau(2 * k) * d;
    d = d.derivative().derivative();
    ++k;
  }
  return result;
}

} // namespace recon
