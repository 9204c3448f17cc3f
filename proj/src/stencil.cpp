#include "recon/stencil.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace recon {

Stencil::Stencil(int mm, int mp) : m_minus(mm), m_plus(mp) {
  if (intervals() < 0)
    throw std::invalid_argument("Stencil: m_minus + m_plus must be >= 0 (got " +
                                std::to_string(intervals()) + ")");
}

Subdivision::Subdivision(Stencil s, int level) : stencil(s), ks(level) {
  if (ks < 0 || ks > stencil.intervals() - 1)
    throw std::invalid_argument("Subdivision: need 0 <= ks <= M-1, got ks=" +
                                std::to_string(ks) + " for M=" +
                                std::to_string(stencil.intervals()));
}

Stencil Subdivision::substencil(int k) const {
  if (k < 0 || k > ks) throw std::invalid_argument("Subdivision: substencil index out of range");
  return Stencil(stencil.m_minus - k, stencil.m_plus - ks + k);
}

std::vector<Stencil> Subdivision::substencils() const {
  std::vector<Stencil> out;
  out.reserve(ks + 1);
  for (int k = 0; k <= ks; ++k) out.push_back(substencil(k));
  return out;
}

bool is_positive_subdivision(const Subdivision& sd) {
  const int mm = sd.stencil.m_minus, mp = sd.stencil.m_plus;
  if (!(-mm <= 0 && 1 <= mp)) return false;
  return 1 <= sd.ks && sd.ks <= std::min(mm + 1, mp);
}

} // namespace recon
